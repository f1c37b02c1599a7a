"""Finite groups as multiplication tables."""

from __future__ import annotations

from typing import Callable, Hashable, List, Sequence


class GroupTableError(ValueError):
    pass


class Group:
    """A finite group given by its Cayley table on ``range(order)``.

    ``table[a][b]`` is the index of the product ``a*b``.
    """

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] = None, name: str = ""):
        self.table = [list(row) for row in table]
        self.order = len(self.table)
        self.names = list(names) if names is not None else [str(i) for i in range(self.order)]
        self.name = name
        self._validate()
        self.identity = self._find_identity()
        self.inverse = [self.table[a].index(self.identity) for a in range(self.order)]

    def _validate(self):
        n = self.order
        if n == 0:
            raise GroupTableError("empty table")
        for row in self.table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise GroupTableError("table is not %d x %d over range(%d)" % (n, n, n))
        e = self._find_identity()
        for a in range(n):
            if e not in self.table[a]:
                raise GroupTableError("element %s has no inverse" % self.names[a])
        t = self.table
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise GroupTableError("not associative at (%s, %s, %s)" % (
                            self.names[a], self.names[b], self.names[c]))

    def _find_identity(self) -> int:
        for e in range(self.order):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(self.order)):
                return e
        raise GroupTableError("no identity element")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        r = self.identity
        for _ in range(k):
            r = self.table[r][a]
        return r

    def __len__(self):
        return self.order

    def __repr__(self):
        return "Group(%s, order=%d)" % (self.name or "?", self.order)


def closure(gens: Sequence[Hashable], mul: Callable, identity: Hashable, name: str = "") -> Group:
    elems: List[Hashable] = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return Group(table, [str(x) for x in elems], name=name)


def _compose(p, q):
    # (p*q)(i) = p(q(i))
    return tuple(p[i] for i in q)


def cyclic(m: int) -> Group:
    if m < 1:
        raise ValueError("m >= 1 required")
    return Group([[(a + b) % m for b in range(m)] for a in range(m)], [str(i) for i in range(m)], name="Z/%d" % m)


def symmetric3() -> Group:
    return closure([(1, 0, 2), (1, 2, 0)], _compose, (0, 1, 2), name="S3")


def dihedral(k: int) -> Group:
    """Symmetries of a regular k-gon, order 2k."""
    rot = tuple((i + 1) % k for i in range(k))
    ref = tuple((-i) % k for i in range(k))
    return closure([rot, ref], _compose, tuple(range(k)), name="D%d" % k)


def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def quaternion8() -> Group:
    return closure([(0, 1, 0, 0), (0, 0, 1, 0)], _qmul, (1, 0, 0, 0), name="Q8")


def group_by_name(name: str) -> Group:
    key = name.strip()
    low = key.lower().replace(" ", "")
    if low in ("s3", "sym3"):
        return symmetric3()
    if low in ("d4",):
        return dihedral(4)
    if low in ("q8",):
        return quaternion8()
    for prefix in ("z/", "zmod", "c"):
        if low.startswith(prefix):
            rest = low[len(prefix):].strip("()")
            if rest.isdigit():
                return cyclic(int(rest))
    raise KeyError("unknown group %r" % name)
