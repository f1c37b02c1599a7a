"""Networks of labelled 2-boxes and the planar partition function.

A 2-box has four boundary points p1..p4, listed clockwise starting at the
starred point.  Evaluating a network splits every box into two strands:

* the star strand joins p2 to p1 and carries a_1,
* the other strand joins p4 to p3 and carries S(a_2),

for a box labelled a with Delta(a) = a_1 (x) a_2.  Strands are read from
their entry point (p2, p4) to their exit point (p1, p3), and the strings of
the network always run from an exit to an entry, so every closed curve gets
a reading direction.  A closed curve with strand labels x_1, ..., x_m in
reading order contributes delta^-1 phi(x_1 ... x_m); a free loop
contributes delta.  The Sweedler sums become contraction edges, so the
whole evaluation is one tensor-network contraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .heegaard import MINUS, PLUS, PlanarHeegaardDiagram, validate_planar
from .hopf import Element, HopfAlgebra, sweedler_power
from .maps import euler_check
from .scalars import DeltaScalar, project_to_base
from .tensor import LabeledTensor, SparseTensor, contract, contract_network

STAR, OTHER = "star", "other"
EXITS = (1, 3)
ENTRIES = (2, 4)
# strand of each boundary point, and the point at the far end of that strand
STRAND_OF = {1: STAR, 2: STAR, 3: OTHER, 4: OTHER}
ENTRY_OF = {STAR: 2, OTHER: 4}
EXIT_OF = {STAR: 1, OTHER: 3}

BoxPoint = Tuple[int, int]   # (box index, point 1..4)


class NetworkError(ValueError):
    pass


@dataclass(frozen=True)
class PairRef:
    """Leg ``side`` of one summand of c_2 = h_1 (x) S(h_2) shared by two boxes."""
    pair: object
    side: str   # "first" or "second"


Label = Union[Element, PairRef]


@dataclass
class TwoBoxNetwork:
    labels: List[Label]
    strings: List[Tuple[BoxPoint, BoxPoint]]
    free_loops: int = 0
    outer_face: int = 0
    names: Optional[List[object]] = None   # optional readable box names

    @property
    def nboxes(self) -> int:
        return len(self.labels)

    def matching(self) -> Dict[BoxPoint, BoxPoint]:
        m = {}
        for a, b in self.strings:
            m[a] = b
            m[b] = a
        return m

    def rotation_system(self):
        return {i: [(i, p) for p in (1, 2, 3, 4)] for i in range(self.nboxes)}

    def validate(self, check_labels: bool = True) -> None:
        pts = [p for s in self.strings for p in s]
        want = {(i, p) for i in range(self.nboxes) for p in (1, 2, 3, 4)}
        if len(pts) != len(set(pts)) or set(pts) != want:
            raise NetworkError("strings are not a perfect matching on the boundary points")
        for a, b in self.strings:
            if (a[1] in EXITS) == (b[1] in EXITS):
                raise NetworkError("string %r-%r joins two %s" % (a, b, "exits" if a[1] in EXITS else "entries"))
        if self.free_loops < 0:
            raise NetworkError("negative free loop count")
        if self.nboxes:
            ok, V, E, F, C = euler_check(self.rotation_system(), self.matching())
            if not ok:
                raise NetworkError("network is not planar: V - E + F = %d - %d + %d, %d components" % (V, E, F, C))
        if check_labels:
            self.validate_labels()

    def validate_labels(self) -> None:
        sides = {}
        for lab in self.labels:
            if isinstance(lab, PairRef):
                if lab.side not in ("first", "second"):
                    raise NetworkError("pair side must be 'first' or 'second'")
                sides.setdefault(lab.pair, []).append(lab.side)
            elif not isinstance(lab, Element):
                raise NetworkError("box label %r is neither an element nor a pair reference" % (lab,))
        for pid, ss in sides.items():
            if sorted(ss) != ["first", "second"]:
                raise NetworkError("pair %r is referenced by sides %r" % (pid, ss))

    def to_json(self) -> dict:
        def lab(x):
            if x is None:
                return None
            if isinstance(x, PairRef):
                return {"pair": repr(x.pair), "side": x.side}
            return {"element": [str(c) for c in x.coeffs]}
        return {"boxes": [lab(x) for x in self.labels],
                "strings": [[list(a), list(b)] for a, b in self.strings],
                "free_loops": self.free_loops, "outer_face": self.outer_face}


@dataclass
class LoopDecomposition:
    loops: List[List[Tuple[int, str]]]
    free_loops: int

    def __len__(self):
        return len(self.loops) + self.free_loops


def trace_loops(net: TwoBoxNetwork) -> LoopDecomposition:
    """Closed curves of strands and strings, each as visits in reading order."""
    net.validate(check_labels=False)
    m = net.matching()
    seen = set()
    loops = []
    for i in range(net.nboxes):
        for strand in (STAR, OTHER):
            if (i, strand) in seen:
                continue
            loop = []
            box, st = i, strand
            while (box, st) not in seen:
                seen.add((box, st))
                loop.append((box, st))
                nb, npt = m[(box, EXIT_OF[st])]
                if npt not in ENTRIES:
                    raise NetworkError("strand leaving box %d does not enter a box" % box)
                box, st = nb, STRAND_OF[npt]
            if (box, st) != (i, strand):
                raise NetworkError("strands do not close up")
            loops.append(loop)
    return LoopDecomposition(loops, net.free_loops)


def _box_tensors(net: TwoBoxNetwork, H: HopfAlgebra) -> List[LabeledTensor]:
    split = H.split_tensor()   # legs (a, star, other)
    out = []
    pair_boxes = {}
    for i, lab in enumerate(net.labels):
        legs = [(i, STAR), (i, OTHER)]
        if isinstance(lab, PairRef):
            out.append(LabeledTensor(split, [("label", i)] + legs))
            pair_boxes.setdefault(lab.pair, {})[lab.side] = i
        else:
            if lab.algebra is not H and not lab.algebra.same_structure(H):
                raise NetworkError("box %d is labelled by an element of another algebra" % i)
            t = contract(lab.tensor(), split, [(0, 0)])
            out.append(LabeledTensor(t, legs))
    if pair_boxes:
        c2 = contract(H.h.tensor(), split, [(0, 0)])   # h_1 (x) S(h_2)
        for pid in sorted(pair_boxes, key=repr):
            boxes = pair_boxes[pid]
            out.append(LabeledTensor(c2, [("label", boxes["first"]), ("label", boxes["second"])]))
    return out


def evaluate(net: TwoBoxNetwork, H: HopfAlgebra, cap: int = None) -> DeltaScalar:
    net.validate_labels()
    dec = trace_loops(net)
    tensors = _box_tensors(net, H)
    phi = H.phi
    for loop in dec.loops:
        tensors.append(LabeledTensor(sweedler_power(phi, len(loop)), loop))
    value = contract_network(tensors, cap=cap).value() if tensors else H.ring(1)
    return H.delta(dec.free_loops - len(dec.loops)) * value


# ---------------------------------------------------------------------------
# the doubled network of a planar Heegaard diagram


def build_ntilde(phd: PlanarHeegaardDiagram) -> TwoBoxNetwork:
    """Replace every hole by a ring of 2-boxes, one per marked point.

    Inside a hole the boxes sit in the clockwise order of the marked points,
    stars towards the centre, and p1 of each box is joined to p2 of the next
    one, so the star strands of a hole form one closed curve.  Each string
    of the diagram becomes a band of two parallel strings joining the outer
    points p3, p4 of its end boxes.  Box (t, +, q) and box (t, -, q) share a
    copy of c_2, the + box taking the first leg.  An empty hole contributes a
    free loop and a closed string contributes two.
    """
    validate_planar(phd)
    index = {}
    names = []
    labels = []
    for (t, side), box in phd.boxes:
        for q in box.points:
            index[(t, side, q)] = len(names)
            names.append((t, side, q))
            labels.append(PairRef((t, q), "first" if side == PLUS else "second"))
    strings = []
    free = 0
    for (t, side), box in phd.boxes:
        pts = box.points
        if not pts:
            free += 1
        for j, q in enumerate(pts):
            nxt = pts[(j + 1) % len(pts)]
            strings.append(((index[(t, side, q)], 1), (index[(t, side, nxt)], 2)))
    for a, b in phd.strings:
        ia, ib = index[a], index[b]
        strings.append(((ia, 3), (ib, 4)))
        strings.append(((ib, 3), (ia, 4)))
    free += 2 * len(phd.closed_strings)
    return TwoBoxNetwork(labels, strings, free, phd.outer_face, names)


def planar_invariant(phd: PlanarHeegaardDiagram, H: HopfAlgebra, cap: int = None):
    net = build_ntilde(phd)
    value = evaluate(net, H, cap=cap)
    return project_to_base(H.delta(-(2 * phd.genus + phd.k)) * value)


# ---------------------------------------------------------------------------
# small closed tangles


def single_box(label: Element, closure: str) -> TwoBoxNetwork:
    """One box closed by (1-2)(3-4) ("parallel") or (1-4)(2-3) ("crossed")."""
    if closure == "parallel":
        strings = [((0, 1), (0, 2)), ((0, 3), (0, 4))]
    elif closure == "crossed":
        strings = [((0, 1), (0, 4)), ((0, 3), (0, 2))]
    else:
        raise NetworkError("closure must be 'parallel' or 'crossed'")
    return TwoBoxNetwork([label], strings)


def hole_ring(labels: Sequence[Label]) -> TwoBoxNetwork:
    """The ring of 2-boxes filling one hole, outer points capped box by box.

    With no labels this is the empty hole: a single free loop.
    """
    k = len(labels)
    if k == 0:
        return TwoBoxNetwork([], [], free_loops=1)
    strings = [((j, 1), ((j + 1) % k, 2)) for j in range(k)]
    strings += [((j, 3), (j, 4)) for j in range(k)]
    return TwoBoxNetwork(list(labels), strings)
