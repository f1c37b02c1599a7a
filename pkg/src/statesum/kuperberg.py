"""Kuperberg's state sum for a Heegaard code.

Each nonempty upper circle i carries an independent copy of Delta_{k^i}(phi),
its legs routed to the crossings of the circle in upper order.  Each lower
circle t evaluates h on the product (in H*) of the dual elements arriving at
its crossings in lower order; since <psi_1 ... psi_k, h> = psi_1(h_1) ...
psi_k(h_k), that is a copy of Delta_{k_t}(h) with legs on the crossings.  A
crossing of sign -1 puts the antipode between the two legs.  The result is
scaled by delta^(-2g+2c).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

from .groups import Group
from .heegaard import HeegaardCode, count_homs, present_group, validate
from .hopf import HopfAlgebra, sweedler_power
from .scalars import DeltaScalar, lift, project_to_base
from .tensor import LabeledTensor, contract_network


@dataclass
class InvariantResult:
    value: object
    g: int
    k: int
    c: int
    d: int
    factors: List[DeltaScalar] = field(default_factory=list)
    scale: DeltaScalar = None

    def diagnostics(self) -> dict:
        return {"g": self.g, "k": self.k, "c": self.c, "d": self.d,
                "factors": [str(f) for f in self.factors], "scale": str(self.scale)}


def _components(code: HeegaardCode):
    """Group circles that share crossings; returns lists of (lower ids, upper ids)."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in range(code.genus):
        parent[("L", t)] = ("L", t)
        parent[("U", t)] = ("U", t)
    low, up = code.lower_index(), code.upper_index()
    for q in code.crossings:
        a, b = find(("L", low[q][0])), find(("U", up[q][0]))
        if a != b:
            parent[a] = b
    groups = {}
    for x in sorted(parent):
        groups.setdefault(find(x), []).append(x)
    out = []
    for members in groups.values():
        out.append(([i for kind, i in members if kind == "L"], [i for kind, i in members if kind == "U"]))
    return sorted(out)


def _network(code: HeegaardCode, H: HopfAlgebra, lower_ids, upper_ids) -> List[LabeledTensor]:
    sign = code.sign
    h = H.h
    phi = H.phi
    S = H.antipode_tensor()
    tensors = []
    for t in lower_ids:
        circ = code.lower[t]
        labels = [("h", q) for q in circ]
        tensors.append(LabeledTensor(sweedler_power(h, len(circ)), labels))
    for i in upper_ids:
        circ = code.upper[i]
        if not circ:
            continue  # isolated upper circle: accounted for by delta^(2c)
        labels = [("h" if sign[q] == 1 else "phi", q) for q in circ]
        tensors.append(LabeledTensor(sweedler_power(phi, len(circ)), labels))
    for q in sorted(q for t in lower_ids for q in code.lower[t]):
        if sign[q] == -1:
            # <S*psi, x> = <psi, S x>: leg a meets h, leg b meets phi
            tensors.append(LabeledTensor(S, [("h", q), ("phi", q)]))
    return tensors


def invariant(code: HeegaardCode, H: HopfAlgebra, cap: int = None) -> InvariantResult:
    rep = validate(code)
    factors = []
    total = H.ring(1)
    for lower_ids, upper_ids in _components(code):
        net = _network(code, H, lower_ids, upper_ids)
        if not net:
            continue
        v = contract_network(net, cap=cap).value()
        factors.append(lift(v, H.dim))
        total = total * v
    scale = H.delta(-2 * rep.g + 2 * rep.c)
    value = project_to_base(scale * total)
    return InvariantResult(value=value, g=rep.g, k=rep.k, c=rep.c, d=rep.d, factors=factors, scale=scale)


def invariant_oracle_group(code: HeegaardCode, G: Group, cap: int = 10 ** 7) -> int:
    return count_homs(present_group(code), G, cap=cap)
