"""Heegaard diagrams at two levels of detail.

A ``HeegaardCode`` keeps only what the state sum needs: for each lower
circle the crossings in traversal order from its base-point, the same for
the upper circles, and a sign per crossing (+1 when the lower and upper
tangents, in that order, form a positive frame, so T_q = id; -1 when
T_q = S).

A ``PlanarHeegaardDiagram`` is the picture obtained by cutting the surface
along the lower circles: 2g holes ``(t, '+')`` and ``(t, '-')``, each with
its marked points listed clockwise around the hole, plus the arcs of the
upper curves joining marked points.  A marked point is identified by the
crossing it comes from, so the point pairing between the holes of a pair
is "same crossing label".  Circle indices ``t`` are 0-based throughout.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .groups import Group
from .maps import euler_check


class HeegaardError(ValueError):
    pass


class EnumerationCapError(MemoryError):
    pass


Circle = Tuple[str, int]   # ("lower" | "upper", index)

# ---------------------------------------------------------------------------
# codes


@dataclass(frozen=True)
class HeegaardCode:
    genus: int
    lower: Tuple[Tuple[int, ...], ...]
    upper: Tuple[Tuple[int, ...], ...]
    signs: Tuple[Tuple[int, int], ...]   # sorted (crossing, sign) pairs

    @classmethod
    def make(cls, genus, lower, upper, signs) -> "HeegaardCode":
        if isinstance(signs, dict):
            signs = signs.items()
        return cls(int(genus), tuple(tuple(c) for c in lower), tuple(tuple(c) for c in upper),
                   tuple(sorted((int(q), int(s)) for q, s in signs)))

    @property
    def sign(self) -> Dict[int, int]:
        return dict(self.signs)

    @property
    def crossings(self) -> List[int]:
        return [q for q, _ in self.signs]

    @property
    def k(self) -> int:
        return len(self.signs)

    @property
    def c(self) -> int:
        return sum(1 for u in self.upper if not u)

    @property
    def d(self) -> int:
        return sum(1 for l in self.lower if not l)

    def lower_index(self) -> Dict[int, Tuple[int, int]]:
        """crossing -> (t, p), the lower numbering (0-based)."""
        return {q: (t, p) for t, circ in enumerate(self.lower) for p, q in enumerate(circ)}

    def upper_index(self) -> Dict[int, Tuple[int, int]]:
        """crossing -> (i, j), the upper numbering (0-based)."""
        return {q: (i, j) for i, circ in enumerate(self.upper) for j, q in enumerate(circ)}

    def to_json(self) -> dict:
        return {"genus": self.genus, "lower": [list(c) for c in self.lower],
                "upper": [list(c) for c in self.upper],
                "signs": {str(q): s for q, s in self.signs}}

    @classmethod
    def from_json(cls, obj) -> "HeegaardCode":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls.make(obj["genus"], obj["lower"], obj["upper"], {int(q): s for q, s in obj["signs"].items()})

    def relabeled(self, mapping: Dict[int, int]) -> "HeegaardCode":
        return HeegaardCode.make(self.genus, [[mapping[q] for q in c] for c in self.lower],
                                 [[mapping[q] for q in c] for c in self.upper],
                                 {mapping[q]: s for q, s in self.signs})


@dataclass
class ValidationReport:
    g: int
    k: int
    c: int
    d: int


def validate(code: HeegaardCode) -> ValidationReport:
    g = code.genus
    if g < 0:
        raise HeegaardError("negative genus")
    if len(code.lower) != g or len(code.upper) != g:
        raise HeegaardError("expected %d lower and %d upper circles, got %d and %d" % (
            g, g, len(code.lower), len(code.upper)))
    ids = set(code.sign)
    if len(ids) != len(code.signs):
        raise HeegaardError("duplicate crossing in sign table")
    for q, s in code.signs:
        if s not in (1, -1):
            raise HeegaardError("crossing %r has sign %r" % (q, s))
    for layer, circles in (("lower", code.lower), ("upper", code.upper)):
        seen = {}
        for idx, circ in enumerate(circles):
            for q in circ:
                if q not in ids:
                    raise HeegaardError("crossing %r on %s circle %d has no sign" % (q, layer, idx))
                if q in seen:
                    raise HeegaardError("crossing %r appears twice among %s circles (%d and %d)" % (
                        q, layer, seen[q], idx))
                seen[q] = idx
        missing = ids - set(seen)
        if missing:
            raise HeegaardError("crossing %r is on no %s circle" % (sorted(missing)[0], layer))
    return ValidationReport(g=g, k=code.k, c=code.c, d=code.d)


# ---------------------------------------------------------------------------
# moves


def _circle_list(code: HeegaardCode, circle: Circle):
    layer, idx = circle
    if layer not in ("lower", "upper"):
        raise HeegaardError("layer must be 'lower' or 'upper', not %r" % (layer,))
    circles = list(code.lower if layer == "lower" else code.upper)
    if not 0 <= idx < len(circles):
        raise HeegaardError("%s circle %d out of range (genus %d)" % (layer, idx, code.genus))
    return layer, idx, circles


def _replace(code, layer, circles, signs=None):
    lower = circles if layer == "lower" else code.lower
    upper = circles if layer == "upper" else code.upper
    return HeegaardCode.make(code.genus, lower, upper, code.sign if signs is None else signs)


def rotate_basepoint(code: HeegaardCode, circle: Circle, steps: int) -> HeegaardCode:
    layer, idx, circles = _circle_list(code, circle)
    c = circles[idx]
    if c:
        s = steps % len(c)
        circles[idx] = c[s:] + c[:s]
    return _replace(code, layer, circles)


def reverse_circle(code: HeegaardCode, circle: Circle) -> HeegaardCode:
    # reversing one tangent flips the frame at each crossing on the circle
    layer, idx, circles = _circle_list(code, circle)
    c = circles[idx]
    circles[idx] = tuple(reversed(c))
    signs = code.sign
    for q in c:
        signs[q] = -signs[q]
    return _replace(code, layer, circles, signs)


def stabilize(code: HeegaardCode) -> HeegaardCode:
    q = max(code.crossings, default=0) + 1
    signs = code.sign
    signs[q] = 1
    return HeegaardCode.make(code.genus + 1, list(code.lower) + [(q,)], list(code.upper) + [(q,)], signs)


def connected_sum(a: HeegaardCode, b: HeegaardCode) -> HeegaardCode:
    off = max(a.crossings, default=0)
    b = b.relabeled({q: q + off for q in b.crossings})
    signs = a.sign
    signs.update(b.sign)
    return HeegaardCode.make(a.genus + b.genus, a.lower + b.lower, a.upper + b.upper, signs)


# ---------------------------------------------------------------------------
# group presentations


@dataclass(frozen=True)
class GroupPresentation:
    ngens: int
    relators: Tuple[Tuple[Tuple[int, int], ...], ...]   # words of (generator, +-1)

    def __post_init__(self):
        for w in self.relators:
            for g, e in w:
                if not 0 <= g < self.ngens or e not in (1, -1):
                    raise HeegaardError("bad letter (%r, %r)" % (g, e))

    def __str__(self):
        names = "xyzwuv"
        gen = [names[i] if self.ngens <= len(names) else "x%d" % i for i in range(self.ngens)]
        rel = ["".join(gen[g] + ("" if e == 1 else "^-1") for g, e in w) for w in self.relators]
        return "<%s | %s>" % (", ".join(gen), ", ".join(rel))


def present_group(code: HeegaardCode) -> GroupPresentation:
    """One generator per lower circle, one relator per nonempty upper circle."""
    validate(code)
    low = code.lower_index()
    sign = code.sign
    rels = tuple(tuple((low[q][0], sign[q]) for q in circ) for circ in code.upper if circ)
    return GroupPresentation(code.genus, rels)


def count_homs(pres: GroupPresentation, G: Group, cap: int = 10 ** 7) -> int:
    """Number of tuples in G^ngens satisfying every relator (brute force)."""
    if G.order ** pres.ngens > cap:
        raise EnumerationCapError("|G|^g = %d exceeds the enumeration cap %d" % (G.order ** pres.ngens, cap))
    inv = G.inverse
    t = G.table
    e = G.identity
    count = 0
    for imgs in itertools.product(range(G.order), repeat=pres.ngens):
        for w in pres.relators:
            x = e
            for g, s in w:
                x = t[x][imgs[g] if s == 1 else inv[imgs[g]]]
            if x != e:
                break
        else:
            count += 1
    return count


# ---------------------------------------------------------------------------
# planar diagrams

PLUS, MINUS = "+", "-"
Point = Tuple[int, str, int]   # (t, side, crossing)


def _other(side: str) -> str:
    return MINUS if side == PLUS else PLUS


@dataclass(frozen=True)
class Box:
    points: Tuple[int, ...]   # crossing labels, clockwise around the hole
    base: int = 0             # the base-point sits just before points[base], clockwise

    def clockwise_from_base(self) -> Tuple[int, ...]:
        k = len(self.points)
        return tuple(self.points[(self.base + i) % k] for i in range(k))

    def anticlockwise_from_base(self) -> Tuple[int, ...]:
        k = len(self.points)
        return tuple(self.points[(self.base - 1 - i) % k] for i in range(k))


@dataclass(frozen=True)
class PlanarHeegaardDiagram:
    genus: int
    boxes: Tuple[Tuple[Tuple[int, str], Box], ...]
    strings: Tuple[Tuple[Point, Point], ...]
    closed_strings: Tuple[str, ...] = ()
    outer_face: int = 0

    @classmethod
    def make(cls, genus, boxes: Dict[Tuple[int, str], Box], strings, closed_strings=(), outer_face=0):
        bx = tuple(sorted(((int(t), s), b if isinstance(b, Box) else Box(tuple(b[0]), b[1]))
                          for (t, s), b in boxes.items()))
        st = tuple(tuple((int(p[0]), p[1], int(p[2])) for p in pair) for pair in strings)
        return cls(int(genus), bx, st, tuple(closed_strings), int(outer_face))

    @property
    def box(self) -> Dict[Tuple[int, str], Box]:
        return dict(self.boxes)

    def k_t(self, t: int) -> int:
        return len(self.box[(t, PLUS)].points)

    @property
    def k(self) -> int:
        return sum(self.k_t(t) for t in range(self.genus))

    @property
    def c(self) -> int:
        return len(self.closed_strings)

    def lower_order(self, t: int) -> Tuple[int, ...]:
        """Crossings of L_t in the lower numbering: clockwise from the base-point of the + hole."""
        return self.box[(t, PLUS)].clockwise_from_base()

    def matching(self) -> Dict[Point, Point]:
        m = {}
        for a, b in self.strings:
            m[a] = b
            m[b] = a
        return m

    def rotation_system(self):
        rot = {}
        for (t, s), b in self.boxes:
            rot[(t, s)] = [(t, s, q) for q in b.points]
        return rot

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "boxes": [{"t": t, "side": s, "points": list(b.points), "base": b.base} for (t, s), b in self.boxes],
            "strings": [[list(a), list(b)] for a, b in self.strings],
            "closed_strings": list(self.closed_strings),
            "outer_face": self.outer_face,
        }

    @classmethod
    def from_json(cls, obj) -> "PlanarHeegaardDiagram":
        if isinstance(obj, str):
            obj = json.loads(obj)
        boxes = {(b["t"], b["side"]): Box(tuple(b["points"]), int(b.get("base", 0))) for b in obj["boxes"]}
        strings = [(tuple(a), tuple(b)) for a, b in obj["strings"]]
        return cls.make(obj["genus"], boxes, strings, obj.get("closed_strings", ()), obj.get("outer_face", 0))


def validate_planar(phd: PlanarHeegaardDiagram) -> ValidationReport:
    g = phd.genus
    box = phd.box
    want = {(t, s) for t in range(g) for s in (PLUS, MINUS)}
    if set(box) != want:
        raise HeegaardError("boxes must be exactly (t, +/-) for t < %d" % g)
    points = set()
    for t in range(g):
        bp, bm = box[(t, PLUS)], box[(t, MINUS)]
        if len(set(bp.points)) != len(bp.points) or set(bp.points) != set(bm.points):
            raise HeegaardError("holes (%d,+) and (%d,-) do not carry the same marked points" % (t, t))
        if bp.points and not (0 <= bp.base < len(bp.points) and 0 <= bm.base < len(bm.points)):
            raise HeegaardError("base-point index out of range on pair %d" % t)
        # the pairing reverses the cyclic order, and base-points correspond
        if bp.clockwise_from_base() != bm.anticlockwise_from_base():
            raise HeegaardError("pair %d: point pairing does not reverse cyclic order with matching base-points" % t)
        for q in bp.points:
            points.add((t, PLUS, q))
            points.add((t, MINUS, q))
    labels = [q for t in range(g) for q in box[(t, PLUS)].points]
    if len(labels) != len(set(labels)):
        raise HeegaardError("a crossing label is used on two different pairs")
    ends = [p for st in phd.strings for p in st]
    if len(ends) != len(set(ends)) or set(ends) != points:
        raise HeegaardError("strings are not a perfect matching on the marked points")
    ok, V, E, F, C = euler_check(phd.rotation_system(), phd.matching())
    if not ok:
        raise HeegaardError("not planar: V - E + F = %d - %d + %d over %d components" % (V, E, F, C))
    return ValidationReport(g=g, k=phd.k, c=phd.c, d=sum(1 for t in range(g) if phd.k_t(t) == 0))


# Sign of a crossing reached by an upper curve that enters it through the hole
# on the given side.  L_t^- lies to the right of L_t, so arriving at the - hole
# and leaving from the + hole crosses L_t from right to left: a positive
# (lower, upper) frame.  Locked by the planar/state-sum agreement tests.
ARRIVAL_SIGN = {MINUS: 1, PLUS: -1}


def derive_code(phd: PlanarHeegaardDiagram) -> HeegaardCode:
    validate_planar(phd)
    m = phd.matching()
    used = set()
    upper = []
    signs = {}
    for a, b in sorted(phd.strings):
        if a in used:
            continue
        start = a
        circ = []
        p = start
        while True:
            used.add(p)
            q = m[p]
            used.add(q)
            t, side, x = q
            circ.append(x)
            signs[x] = ARRIVAL_SIGN[side]
            p = (t, _other(side), x)
            if p == start:
                break
            if p in used:
                raise HeegaardError("strings do not close up into circles")
        # start the circle at the crossing the first string leaves from
        upper.append(tuple(circ[-1:] + circ[:-1]))
    upper.extend(() for _ in phd.closed_strings)
    if len(upper) != phd.genus:
        raise HeegaardError("%d upper circles in a genus %d diagram" % (len(upper), phd.genus))
    lower = [phd.lower_order(t) for t in range(phd.genus)]
    return HeegaardCode.make(phd.genus, lower, upper, signs)


def swap_sides(phd: PlanarHeegaardDiagram, t: int) -> PlanarHeegaardDiagram:
    """Exchange which hole of pair t is called positive."""
    box = phd.box
    box[(t, PLUS)], box[(t, MINUS)] = box[(t, MINUS)], box[(t, PLUS)]

    def fix(p):
        return (p[0], _other(p[1]), p[2]) if p[0] == t else p

    strings = [(fix(a), fix(b)) for a, b in phd.strings]
    return PlanarHeegaardDiagram.make(phd.genus, box, strings, phd.closed_strings, phd.outer_face)


def rotate_planar_basepoint(phd: PlanarHeegaardDiagram, t: int, steps: int) -> PlanarHeegaardDiagram:
    """Move the base-points of pair t consistently on both holes."""
    box = phd.box
    bp, bm = box[(t, PLUS)], box[(t, MINUS)]
    k = len(bp.points)
    if k:
        box[(t, PLUS)] = Box(bp.points, (bp.base + steps) % k)
        box[(t, MINUS)] = Box(bm.points, (bm.base - steps) % k)
    return PlanarHeegaardDiagram.make(phd.genus, box, phd.strings, phd.closed_strings, phd.outer_face)


def planar_disjoint_union(a: PlanarHeegaardDiagram, b: PlanarHeegaardDiagram) -> PlanarHeegaardDiagram:
    off = max([q for (_, s), bx in a.boxes for q in bx.points], default=0)
    box = a.box
    for (t, s), bx in b.boxes:
        box[(t + a.genus, s)] = Box(tuple(q + off for q in bx.points), bx.base)
    strings = list(a.strings) + [tuple((p[0] + a.genus, p[1], p[2] + off) for p in st) for st in b.strings]
    closed = list(a.closed_strings) + ["%s (pair %d)" % (c, a.genus) if c else c for c in b.closed_strings]
    return PlanarHeegaardDiagram.make(a.genus + b.genus, box, strings, closed, a.outer_face)


def planar_lens(p: int, q: int) -> PlanarHeegaardDiagram:
    """Genus-1 planar diagram: strings join (+, j) to (-, j + q)."""
    pts = tuple(range(1, p + 1))
    boxes = {(0, PLUS): Box(pts, 0), (0, MINUS): Box(tuple(reversed(pts)), 0)}
    strings = [((0, PLUS, j), (0, MINUS, (j - 1 + q) % p + 1)) for j in pts]
    return PlanarHeegaardDiagram.make(1, boxes, strings)


def planar_s2xs1() -> PlanarHeegaardDiagram:
    return PlanarHeegaardDiagram.make(1, {(0, PLUS): Box(()), (0, MINUS): Box(())}, [], ["around (0,+)"])


def planar_stabilize(phd: PlanarHeegaardDiagram) -> PlanarHeegaardDiagram:
    return planar_disjoint_union(phd, planar_lens(1, 0))


# ---------------------------------------------------------------------------
# the built-in catalog


def code_lens(p: int, q: int) -> HeegaardCode:
    if p < 1 or gcd(p, q) != 1:
        raise HeegaardError("lens(%d,%d) needs p >= 1 and gcd(p, q) = 1" % (p, q))
    lower = list(range(1, p + 1))
    upper = [1 + ((j - 1) * q) % p for j in range(1, p + 1)]
    return HeegaardCode.make(1, [lower], [upper], {x: 1 for x in lower})


def code_s3_genus0() -> HeegaardCode:
    return HeegaardCode.make(0, [], [], {})


def code_s2xs1() -> HeegaardCode:
    return HeegaardCode.make(1, [[]], [[]], {})


_LENS_RE = re.compile(r"^lens\(\s*(\d+)\s*,\s*(-?\d+)\s*\)$")
_STAB_RE = re.compile(r"^stab\((.*)\)$")


def builtin(name: str) -> HeegaardCode:
    """Named codes: s3_genus0, s3_genus1, s2xs1, lens(p,q), l31_connsum_s2xs1, stab(NAME)."""
    name = name.strip()
    m = _STAB_RE.match(name)
    if m:
        return stabilize(builtin(m.group(1)))
    m = _LENS_RE.match(name)
    if m:
        return code_lens(int(m.group(1)), int(m.group(2)))
    if name == "s3_genus0":
        return code_s3_genus0()
    if name == "s3_genus1":
        return code_lens(1, 0)
    if name == "s2xs1":
        return code_s2xs1()
    if name == "l31_connsum_s2xs1":
        return connected_sum(code_lens(3, 1), code_s2xs1())
    raise HeegaardError("unknown builtin diagram %r" % name)


def builtin_planar(name: str) -> PlanarHeegaardDiagram:
    name = name.strip()
    m = _STAB_RE.match(name)
    if m:
        return planar_stabilize(builtin_planar(m.group(1)))
    m = _LENS_RE.match(name)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if p < 1 or gcd(p, q) != 1:
            raise HeegaardError("lens(%d,%d) needs p >= 1 and gcd(p, q) = 1" % (p, q))
        return planar_lens(p, q % p)
    if name == "s3_genus0":
        return PlanarHeegaardDiagram.make(0, {}, [])
    if name == "s3_genus1":
        return planar_lens(1, 0)
    if name == "s2xs1":
        return planar_s2xs1()
    if name == "l31_connsum_s2xs1":
        # L(3,1) # (S^2 x S^1): the isolated upper circle runs around the + hole of pair 1
        phd = planar_disjoint_union(planar_lens(3, 1), planar_s2xs1())
        return PlanarHeegaardDiagram.make(phd.genus, phd.box, phd.strings, ["around (1,+)"])
    raise HeegaardError("no planar form for %r" % name)


def catalog(max_p: int = 5) -> List[str]:
    names = ["s3_genus0", "s3_genus1", "s2xs1"]
    for p in range(2, max_p + 1):
        names += ["lens(%d,%d)" % (p, q) for q in range(1, p) if gcd(p, q) == 1]
    names.append("l31_connsum_s2xs1")
    return names


def planar_catalog() -> List[str]:
    return ["s3_genus0", "s3_genus1", "s2xs1", "lens(2,1)", "lens(3,1)", "lens(4,1)",
            "lens(5,2)", "l31_connsum_s2xs1", "stab(lens(3,1))"]
