import json
import random

import pytest

from statesum.groups import GroupTableError, Group, cyclic, symmetric3
from statesum.hopf import (CATALOG, HopfAlgebra, NotSemisimpleError, builtin_hopf, check_axioms, fourier,
                           group_algebra, pair, sweedler_power)
from statesum.scalars import PrimeField, delta_pow
from statesum.tensor import SparseTensor, contract


def test_z2_integrals():
    H = group_algebra(cyclic(2))
    assert H.dim == 2
    assert list(H.h.coeffs) == [1, 1]
    assert list(H.phi.coeffs) == [2, 0]


def test_trivial_group():
    H = group_algebra(cyclic(1))
    assert list(H.h.coeffs) == [1] and list(H.phi.coeffs) == [1]


def test_s3_counit_of_integral():
    H = group_algebra(symmetric3())
    assert H.h.counit() == 6
    assert pair(H.phi, H.h) == 6


def test_z4_integral_is_sum():
    assert list(group_algebra(cyclic(4)).h.coeffs) == [1, 1, 1, 1]


def test_not_semisimple_over_f2():
    H = group_algebra(cyclic(2), ring=PrimeField(2))
    with pytest.raises(NotSemisimpleError):
        H.h


def test_prime_field_ok_when_coprime():
    H = group_algebra(cyclic(2), ring=PrimeField(3))
    assert check_axioms(H).ok


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_axioms(name):
    H = builtin_hopf(name)
    assert check_axioms(H).ok, check_axioms(H).failed()
    assert check_axioms(H.dual()).ok, check_axioms(H.dual()).failed()


def test_corrupted_antipode_fails():
    H = group_algebra(cyclic(3))
    obj = H.to_json()
    obj["antipode"] = [[a, a, "1"] for a in range(3)]      # S = id is wrong for Z/3
    bad = HopfAlgebra.from_json(obj)
    rep = check_axioms(bad)
    assert not rep["antipode"]


def test_bad_group_table():
    with pytest.raises(GroupTableError):
        Group([[0, 1], [0, 1]])


def test_dual_of_z3_is_function_algebra():
    D = group_algebra(cyclic(3)).dual()
    for a in range(3):
        for b in range(3):
            assert D.multiply(D.basis(a).coeffs, D.basis(b).coeffs) == [1 if a == b == c else 0 for c in range(3)]


def test_double_dual():
    H = group_algebra(symmetric3())
    assert H.dual().dual() is H
    from statesum.hopf import dual
    assert dual(dual(H)).same_structure(H)


def test_dual_integral():
    D = group_algebra(cyclic(2)).dual()
    assert list(D.h.coeffs) == [2, 0]


def test_sweedler_examples():
    H = group_algebra(cyclic(2))
    assert sweedler_power(H.h, 2).data == {(0, 0): 1, (1, 1): 1}
    x = H.element([3, 5])
    assert sweedler_power(x, 0).value() == 8
    G = symmetric3()
    D = group_algebra(G).dual()
    t = sweedler_power(D.h, 3)      # phi of Q[S3] as an element of the dual
    for (a, b, c), v in t.data.items():
        assert G.mul(G.mul(a, b), c) == G.identity and v == 6
    assert t.nnz() == 36


def test_fourier_examples():
    H = group_algebra(cyclic(3))
    D = H.dual()
    d = H.delta(1)
    assert fourier(H.one()) == D.element([H.delta(-1) * c for c in H.phi.coeffs])
    assert fourier(H.h) == D.element([d * e for e in H.counit])
    rng = random.Random(0)
    for _ in range(5):
        x = H.element([rng.randint(-3, 3) for _ in range(3)])
        ffx = fourier(fourier(x))
        assert list(ffx.coeffs) == list(x.antipode().coeffs)


def test_pairing_contractions():
    H = group_algebra(cyclic(2))
    assert contract(H.phi.tensor(), H.h.tensor(), [(0, 0)]).value() == 2
    eps = SparseTensor.vector(H.counit)
    assert contract(eps, H.one().tensor(), [(0, 0)]).value() == 1


def test_json_roundtrip():
    for name in ("S3GroupAlgebra", "Dual(Q8GroupAlgebra)"):
        H = builtin_hopf(name)
        obj = json.loads(json.dumps(H.to_json()))
        assert HopfAlgebra.from_json(obj).same_structure(H)
    F = group_algebra(cyclic(3), ring=PrimeField(7))
    again = HopfAlgebra.from_json(json.loads(json.dumps(F.to_json())))
    assert again.ring == PrimeField(7) and again.same_structure(F)


def test_delta_sign_parameter():
    H = group_algebra(cyclic(4), delta_sign=-1)
    assert H.delta(1) == -delta_pow(1, 4)
    assert H.delta(2) == 4


def test_unknown_builtin():
    with pytest.raises(KeyError):
        builtin_hopf("ZmodGroupAlgebra(13)")
    with pytest.raises(KeyError):
        builtin_hopf("Nonsense")
