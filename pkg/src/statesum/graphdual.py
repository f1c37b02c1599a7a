"""Directed graphs on the 2-sphere and the vertex/face tensors they define.

A ``SphericalGraph`` is a rotation system: every vertex lists its incident
edge-ends ``(edge, end)`` clockwise, where end 0 is the source and end 1 the
range of the edge.  Boundary components of a thickening of the graph are
found by the usual boundary walk; each one records the sides ``(edge, 'l')``
or ``(edge, 'r')`` it runs along, in clockwise order.

``vertex_tensor`` puts a copy of Delta_{d_v}(h) at every vertex and
``face_tensor`` a copy of Delta(phi) on every boundary component; in both
the two legs arriving at an edge are combined as x S(y).  The Fourier
transform applied edge by edge carries the first to the second.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from .hopf import HopfAlgebra, apply_fourier_legs, sweedler_power
from .maps import components, euler_check
from .planar import TwoBoxNetwork
from .tensor import LabeledTensor, SparseTensor, contract, contract_network

Dart = Tuple[Hashable, int]          # (edge id, end)
Side = Tuple[Hashable, str]          # (edge id, 'l' | 'r')


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class SphericalGraph:
    vertices: Tuple[Hashable, ...]
    edges: Tuple[Tuple[Hashable, Hashable, Hashable], ...]      # (id, from, to)
    rotation: Tuple[Tuple[Hashable, Tuple[Dart, ...]], ...]      # vertex -> clockwise darts

    @classmethod
    def make(cls, vertices, edges, rotation) -> "SphericalGraph":
        if isinstance(edges, dict):
            edges = [(e, s, t) for e, (s, t) in edges.items()]
        rot = tuple((v, tuple((d[0], int(d[1])) for d in rotation.get(v, ()))) for v in vertices)
        g = cls(tuple(vertices), tuple(tuple(e) for e in edges), rot)
        g.validate()
        return g

    @property
    def edge_ids(self) -> List[Hashable]:
        return [e for e, _, _ in self.edges]

    @property
    def ends(self) -> Dict[Hashable, Tuple[Hashable, Hashable]]:
        return {e: (s, t) for e, s, t in self.edges}

    @property
    def theta(self) -> Dict[Hashable, Tuple[Dart, ...]]:
        return dict(self.rotation)

    def degree(self, v) -> int:
        return len(self.theta[v])

    def isolated(self) -> List[Hashable]:
        return [v for v, ds in self.rotation if not ds]

    def alpha(self) -> Dict[Dart, Dart]:
        return {(e, i): (e, 1 - i) for e in self.edge_ids for i in (0, 1)}

    def validate(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("repeated vertex")
        ids = self.edge_ids
        if len(set(ids)) != len(ids):
            raise GraphError("repeated edge id")
        vs = set(self.vertices)
        ends = self.ends
        for e, (s, t) in ends.items():
            if s not in vs or t not in vs:
                raise GraphError("edge %r has an endpoint outside the vertex set" % (e,))
        seen = set()
        for v, darts in self.rotation:
            for e, i in darts:
                if e not in ends or i not in (0, 1):
                    raise GraphError("unknown edge-end %r at vertex %r" % ((e, i), v))
                if ends[e][i] != v:
                    raise GraphError("edge-end %r does not belong to vertex %r" % ((e, i), v))
                if (e, i) in seen:
                    raise GraphError("edge-end %r listed twice" % ((e, i),))
                seen.add((e, i))
        if sum(len(ds) for _, ds in self.rotation) != 2 * len(ids) or len(seen) != 2 * len(ids):
            raise GraphError("rotation does not list every edge-end exactly once")
        ok, V, E, F, C = euler_check(self.theta, self.alpha())
        if not ok:
            raise GraphError("not spherical: V - E + F = %d - %d + %d with %d components" % (V, E, F, C))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": [{"id": e, "from": s, "to": t} for e, s, t in self.edges],
                "rotation": {str(v): [[e, i] for e, i in ds] for v, ds in self.rotation}}

    @classmethod
    def from_json(cls, obj) -> "SphericalGraph":
        if isinstance(obj, str):
            obj = json.loads(obj)
        vertices = list(obj["vertices"])
        byname = {str(v): v for v in vertices}
        rotation = {byname[k]: [tuple(d) for d in ds] for k, ds in obj["rotation"].items()}
        edges = [(e["id"], e["from"], e["to"]) for e in obj["edges"]]
        return cls.make(vertices, edges, rotation)


def trace_faces(G: SphericalGraph) -> List[List[Side]]:
    """Boundary components of the thickened graph, each a clockwise list of sides.

    Walking along edge-end (e, i) towards the other end runs along side r of
    e when i = 0 and side l when i = 1; at the far vertex the walk turns to
    the anticlockwise neighbour.  An isolated vertex gives an empty list.
    """
    theta = G.theta
    pred = {}
    for v, darts in theta.items():
        for j, d in enumerate(darts):
            pred[d] = darts[j - 1]
    seen = set()
    out = []
    for e in G.edge_ids:
        for i in (0, 1):
            if (e, i) in seen:
                continue
            walk = []
            d = (e, i)
            while d not in seen:
                seen.add(d)
                walk.append((d[0], "r" if d[1] == 0 else "l"))
                d = pred[(d[0], 1 - d[1])]
            out.append(walk)
    out.extend([] for _ in G.isolated())
    return out


def rho(G: SphericalGraph) -> int:
    return -len(G.vertices) + 2 * len(G.isolated())


def sigma(G: SphericalGraph) -> int:
    return -len(trace_faces(G)) + 2 * len(G.isolated())


@dataclass
class EdgeTensor:
    """delta^delta_exp times a rational tensor with one leg per edge (in ``edges`` order)."""
    edges: List[Hashable]
    tensor: SparseTensor
    delta_exp: int

    def value(self, H: HopfAlgebra):
        """The scalar of an edgeless graph."""
        return H.delta(self.delta_exp) * self.tensor.value()


def _coproduct_chain(K: HopfAlgebra, labels, tag) -> List[LabeledTensor]:
    """Delta_k(h) as h followed by a chain of k - 1 comultiplications.

    Keeping the chain unexpanded lets the contraction absorb the edge tensors
    first; the expanded Delta_k(h) of a function algebra has n^(k-1) entries.
    """
    k = len(labels)
    if k == 1:
        return [LabeledTensor(K.h.tensor(), labels)]
    D = K.comult_tensor()
    out = [LabeledTensor(K.h.tensor(), [(tag, 0)])]
    for j in range(k - 1):
        last = labels[k - 1] if j == k - 2 else (tag, j + 1)
        out.append(LabeledTensor(D, [(tag, j), labels[j], last]))
    return out


def _combine(groups, K: HopfAlgebra, G: SphericalGraph, first, second, delta_exp, cap=None) -> EdgeTensor:
    nets = []
    for j, labels in enumerate(groups):
        if labels:
            nets.extend(_coproduct_chain(K, list(labels), ("bond", j)))
    mS = K.mult_twisted_tensor()
    for e in G.edge_ids:
        nets.append(LabeledTensor(mS, [first(e), second(e), ("edge", e)]))
    t = contract_network(nets, output=[("edge", e) for e in G.edge_ids], cap=cap)
    return EdgeTensor(G.edge_ids, t, delta_exp)


def vertex_tensor(G: SphericalGraph, H: HopfAlgebra, starts: Dict[Hashable, int] = None, cap=None) -> EdgeTensor:
    """V(G, H); ``starts`` optionally rotates where each clockwise list begins."""
    groups = []
    for v, darts in G.rotation:
        s = (starts or {}).get(v, 0) % len(darts) if darts else 0
        groups.append(darts[s:] + darts[:s])
    return _combine(groups, H, G, lambda e: (e, 0), lambda e: (e, 1), rho(G), cap)


def face_tensor(G: SphericalGraph, H: HopfAlgebra, cap=None) -> EdgeTensor:
    """F(G, H*), a tensor over the dual of H."""
    return _combine(trace_faces(G), H.dual(), G, lambda e: (e, "l"), lambda e: (e, "r"), sigma(G), cap)


@dataclass
class DualityReport:
    ok: bool
    mismatched: int
    detail: str = ""


def check_duality(G: SphericalGraph, H: HopfAlgebra, cap=None) -> DualityReport:
    """Compare F^(x)E (V(G,H)) with F(G,H*) exactly."""
    V = vertex_tensor(G, H, cap=cap)
    F = face_tensor(G, H, cap=cap)
    lhs = apply_fourier_legs(V.tensor, H)
    a = V.delta_exp - len(G.edge_ids)
    b = F.delta_exp
    rhs = F.tensor
    if (a - b) % 2:
        ok = lhs.nnz() == 0 and rhs.nnz() == 0
        return DualityReport(ok, 0 if ok else max(lhs.nnz(), rhs.nnz()), "odd delta exponent difference")
    # delta^a L = delta^b R  <=>  n^((a-b)/2) L = R
    m = (a - b) // 2
    nn = H.ring(H.dim)
    lhs = lhs.scale(nn ** m if m >= 0 else H.ring.inv(nn) ** (-m))
    keys = set(lhs.data) | set(rhs.data)
    bad = [k for k in keys if lhs.get(k) != rhs.get(k)]
    return DualityReport(not bad, len(bad), "" if not bad else "first mismatch at %r" % (sorted(bad)[0],))


# ---------------------------------------------------------------------------
# fixtures


def figure6() -> SphericalGraph:
    """A graph with two components and an isolated vertex (8 vertices, 7 edges)."""
    edges = {"e1": (1, 2), "e2": (2, 3), "e3": (2, 4), "e4": (5, 6), "e5": (6, 5), "e6": (6, 7), "e7": (5, 7)}
    rotation = {
        1: [("e1", 0)],
        2: [("e1", 1), ("e2", 0), ("e3", 0)],
        3: [("e2", 1)],
        4: [("e3", 1)],
        5: [("e4", 0), ("e5", 1), ("e7", 0)],
        6: [("e4", 1), ("e6", 0), ("e5", 0)],
        7: [("e6", 1), ("e7", 1)],
        8: [],
    }
    return SphericalGraph.make(list(range(1, 9)), edges, rotation)


def ngon(n: int) -> SphericalGraph:
    """Cyclically oriented n-gon: edge ei runs from i to i+1, D_i = [(ei,0), (e(i-1),1)]."""
    if n < 1:
        raise GraphError("n >= 1 required")
    edges = {"e%d" % i: (i, (i + 1) % n) for i in range(n)}
    rotation = {i: [("e%d" % i, 0), ("e%d" % ((i - 1) % n), 1)] for i in range(n)}
    return SphericalGraph.make(list(range(n)), edges, rotation)


def isolated_vertices(m: int) -> SphericalGraph:
    return SphericalGraph.make(list(range(m)), {}, {})


def random_graph(rng: random.Random, max_edges: int = 4, connected: bool = True,
                 tries: int = 1000) -> SphericalGraph:
    """A random directed graph with a random spherical rotation system."""
    for _ in range(tries):
        ne = rng.randint(1, max_edges)
        nv = rng.randint(1, ne + 1)
        edges = {"e%d" % j: (rng.randrange(nv), rng.randrange(nv)) for j in range(ne)}
        rotation = {v: [] for v in range(nv)}
        for e, (s, t) in edges.items():
            rotation[s].append((e, 0))
            rotation[t].append((e, 1))
        for v in rotation:
            rng.shuffle(rotation[v])
        alpha = {(e, i): (e, 1 - i) for e in edges for i in (0, 1)}
        if connected and components(rotation, alpha) != 1:
            continue
        if not euler_check(rotation, alpha)[0]:
            continue
        return SphericalGraph.make(list(range(nv)), edges, rotation)
    raise GraphError("no spherical graph found in %d tries" % tries)


def random_graphs(seed: int, count: int, max_edges: int = 4) -> List[SphericalGraph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_edges) for _ in range(count)]


# ---------------------------------------------------------------------------
# the network N(G)

# Box points of an edge, clockwise from the star: p1 sits between the source
# and the left side, p2 between the left side and the range, p3 between the
# range and the right side, p4 between the right side and the source.
_RIGHT_OF_END = {0: 4, 1: 2}    # point on the clockwise side of an edge-end
_LEFT_OF_END = {0: 1, 1: 3}     # point on the anticlockwise side


def graph_to_network(G: SphericalGraph, labels: Dict[Hashable, object] = None) -> TwoBoxNetwork:
    """One 2-box per edge; around every vertex the band turns from one edge to the next.

    Faces of G become the closed curves of the network and isolated vertices
    become free loops.  ``labels`` maps edge ids to Elements; without it the
    boxes are left unlabelled (enough for ``trace_loops``).
    """
    index = {e: j for j, e in enumerate(G.edge_ids)}
    strings = []
    for v, darts in G.rotation:
        for j, (e, i) in enumerate(darts):
            f, k = darts[(j + 1) % len(darts)]
            strings.append(((index[e], _RIGHT_OF_END[i]), (index[f], _LEFT_OF_END[k])))
    labs = [labels[e] if labels is not None else None for e in G.edge_ids]
    return TwoBoxNetwork(labs, strings, free_loops=len(G.isolated()), names=list(G.edge_ids))


def apply_edge_tensor(T: EdgeTensor, H: HopfAlgebra, labels: Sequence):
    """Pair delta^exp T with the tensor product of ``labels`` (one Element per edge, in edge order)."""
    t = T.tensor
    for x in labels:
        t = contract(t, x.tensor(), [(0, 0)])
    return H.delta(T.delta_exp) * t.value()
