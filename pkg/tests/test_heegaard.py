import json

import pytest
from hypothesis import given, settings, strategies as st

from statesum.groups import cyclic, symmetric3
from statesum.heegaard import (Box, EnumerationCapError, GroupPresentation, HeegaardCode, HeegaardError,
                               PlanarHeegaardDiagram, builtin, builtin_planar, catalog, code_lens,
                               connected_sum, count_homs, derive_code, planar_catalog, present_group,
                               reverse_circle, rotate_basepoint, rotate_planar_basepoint, stabilize,
                               swap_sides, validate, validate_planar)


def counts(code):
    r = validate(code)
    return r.g, r.k, r.c, r.d


def test_validate_examples():
    assert counts(builtin("lens(3,1)")) == (1, 3, 0, 0)
    assert counts(builtin("s2xs1")) == (1, 0, 1, 1)
    assert counts(builtin("s3_genus0")) == (0, 0, 0, 0)
    assert counts(builtin("l31_connsum_s2xs1")) == (2, 3, 1, 1)


def test_duplicate_crossing_rejected():
    bad = HeegaardCode.make(2, [[1, 2], [2]], [[1], [2]], {1: 1, 2: 1})
    with pytest.raises(HeegaardError, match="2"):
        validate(bad)


def test_missing_crossing_rejected():
    bad = HeegaardCode.make(1, [[1]], [[]], {1: 1})
    with pytest.raises(HeegaardError):
        validate(bad)


def test_wrong_circle_count_rejected():
    with pytest.raises(HeegaardError):
        validate(HeegaardCode.make(2, [[1]], [[1]], {1: 1}))


@pytest.mark.parametrize("name", catalog() + ["lens(6,1)", "lens(6,5)", "stab(s2xs1)", "stab(stab(s3_genus0))"])
def test_catalog_valid(name):
    validate(builtin(name))


def test_lens_codes():
    c = builtin("lens(2,1)")
    assert c.lower == ((1, 2),) and c.upper == ((1, 2),) and set(c.sign.values()) == {1}
    assert builtin("lens(5,2)").upper == ((1, 3, 5, 2, 4),)
    assert builtin("s3_genus1").k == 1
    with pytest.raises(HeegaardError):
        builtin("lens(4,2)")
    with pytest.raises(HeegaardError):
        builtin("poincare")


def test_rotate_basepoint():
    c = builtin("lens(3,1)")
    assert rotate_basepoint(c, ("lower", 0), 1).lower == ((2, 3, 1),)
    assert rotate_basepoint(c, ("lower", 0), 0) == c
    assert rotate_basepoint(c, ("upper", 0), 3) == c
    with pytest.raises(HeegaardError):
        rotate_basepoint(c, ("lower", 1), 1)


def test_reverse_circle():
    c = builtin("lens(3,1)")
    r = reverse_circle(c, ("upper", 0))
    assert r.upper == ((3, 2, 1),) and set(r.sign.values()) == {-1}
    assert reverse_circle(r, ("upper", 0)) == c
    s = builtin("s2xs1")
    assert reverse_circle(s, ("lower", 0)) == s


def test_stabilize():
    assert counts(stabilize(builtin("s3_genus0"))) == counts(builtin("s3_genus1"))
    assert counts(stabilize(builtin("lens(3,1)")))[:2] == (2, 4)
    assert stabilize(stabilize(builtin("s3_genus0"))).genus == 2


def test_connected_sum_matches_builtin():
    assert connected_sum(builtin("lens(3,1)"), builtin("s2xs1")) == builtin("l31_connsum_s2xs1")


def test_code_json_roundtrip():
    for name in catalog():
        c = builtin(name)
        assert HeegaardCode.from_json(json.loads(json.dumps(c.to_json()))) == c
    assert builtin("lens(2,1)").to_json() == {"genus": 1, "lower": [[1, 2]], "upper": [[1, 2]],
                                              "signs": {"1": 1, "2": 1}}


def test_present_group():
    p = present_group(builtin("lens(4,1)"))
    assert p.ngens == 1 and p.relators == (((0, 1),) * 4,)
    assert present_group(builtin("s2xs1")).relators == ()
    q = present_group(builtin("l31_connsum_s2xs1"))
    assert q.ngens == 2 and q.relators == (((0, 1),) * 3,)
    assert str(q) == "<x, y | xxx>"


def test_count_homs():
    x3 = GroupPresentation(1, (((0, 1),) * 3,))
    assert count_homs(x3, cyclic(3)) == 3
    assert count_homs(x3, cyclic(2)) == 1
    assert count_homs(GroupPresentation(1, ()), symmetric3()) == 6
    with pytest.raises(EnumerationCapError):
        count_homs(GroupPresentation(3, ()), symmetric3(), cap=100)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(catalog()), st.integers(-7, 7), st.booleans(), st.sampled_from(["lower", "upper"]))
def test_hom_count_invariant_under_moves(name, steps, upper_idx, layer):
    c = builtin(name)
    if c.genus == 0:
        return
    t = int(upper_idx) % c.genus
    G = symmetric3()
    base = count_homs(present_group(c), G)
    assert count_homs(present_group(rotate_basepoint(c, (layer, t), steps)), G) == base
    assert count_homs(present_group(reverse_circle(c, (layer, t))), G) == base


# -- planar diagrams ----------------------------------------------------------


def test_figure3_derives_connsum_code():
    phd = builtin_planar("l31_connsum_s2xs1")
    assert validate_planar(phd).__dict__ == {"g": 2, "k": 3, "c": 1, "d": 1}
    code = derive_code(phd)
    assert code == builtin("l31_connsum_s2xs1")
    assert code.lower[0] == (1, 2, 3)      # lower numbering (1,1), (1,2), (1,3)
    assert code.upper[1] == ()             # the circle around the + hole of pair 2 is isolated


def test_single_crossing_planar():
    assert derive_code(builtin_planar("s3_genus1")) == builtin("s3_genus1")


@pytest.mark.parametrize("name", planar_catalog())
def test_planar_catalog(name):
    phd = builtin_planar(name)
    validate_planar(phd)
    code = derive_code(phd)
    validate(code)
    assert PlanarHeegaardDiagram.from_json(json.loads(json.dumps(phd.to_json()))) == phd


@pytest.mark.parametrize("p,q", [(2, 1), (3, 1), (3, 2), (4, 1), (5, 2), (5, 3)])
def test_planar_lens_matches_code(p, q):
    assert derive_code(builtin_planar("lens(%d,%d)" % (p, q))) == code_lens(p, q)


def test_planar_rejects_order_preserving_pairing():
    boxes = {(0, "+"): Box((1, 2, 3)), (0, "-"): Box((1, 2, 3))}
    strings = [((0, "+", j), (0, "-", j)) for j in (1, 2, 3)]
    with pytest.raises(HeegaardError):
        validate_planar(PlanarHeegaardDiagram.make(1, boxes, strings))


def test_planar_rejects_nonplanar_strings():
    # lens(3,1) strings plus a crossing swap make a map of genus > 0
    boxes = {(0, "+"): Box((1, 2, 3, 4)), (0, "-"): Box((4, 3, 2, 1))}
    strings = [((0, "+", 1), (0, "+", 3)), ((0, "+", 2), (0, "+", 4)),
               ((0, "-", 1), (0, "-", 2)), ((0, "-", 3), (0, "-", 4))]
    with pytest.raises(HeegaardError, match="not planar"):
        validate_planar(PlanarHeegaardDiagram.make(1, boxes, strings))


def test_planar_rejects_imperfect_matching():
    boxes = {(0, "+"): Box((1,)), (0, "-"): Box((1,))}
    with pytest.raises(HeegaardError):
        validate_planar(PlanarHeegaardDiagram.make(1, boxes, []))


def test_swap_and_rotate_planar_stay_valid():
    phd = builtin_planar("l31_connsum_s2xs1")
    for t in range(2):
        validate_planar(swap_sides(phd, t))
        for s in range(4):
            validate_planar(rotate_planar_basepoint(phd, t, s))
