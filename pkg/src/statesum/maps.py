"""Rotation systems (combinatorial maps) and their face orbits."""

from __future__ import annotations

from typing import Dict, Hashable, List, Sequence, Tuple


def face_orbits(rotation: Dict[Hashable, Sequence[Hashable]], alpha: Dict[Hashable, Hashable]) -> List[List[Hashable]]:
    """Orbits of dart -> next clockwise dart at the vertex of alpha(dart).

    ``rotation[v]`` lists the darts at v in clockwise order, ``alpha`` is the
    edge involution (a dart with ``alpha[d] == d`` is a dangling end and is
    rejected).
    """
    nxt = {}
    for v, darts in rotation.items():
        for i, d in enumerate(darts):
            if d in nxt:
                raise ValueError("dart %r appears twice in the rotation" % (d,))
            nxt[d] = darts[(i + 1) % len(darts)]
    if set(alpha) != set(nxt):
        raise ValueError("edge involution and rotation cover different darts")
    for d, e in alpha.items():
        if alpha.get(e) != d or e == d:
            raise ValueError("alpha is not a fixed-point free involution at %r" % (d,))
    seen = set()
    orbits = []
    for start in nxt:
        if start in seen:
            continue
        orbit = []
        d = start
        while d not in seen:
            seen.add(d)
            orbit.append(d)
            d = nxt[alpha[d]]
        orbits.append(orbit)
    return orbits


def components(rotation: Dict[Hashable, Sequence[Hashable]], alpha: Dict[Hashable, Hashable]) -> int:
    parent = {v: v for v in rotation}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    owner = {d: v for v, ds in rotation.items() for d in ds}
    for d, e in alpha.items():
        a, b = find(owner[d]), find(owner[e])
        if a != b:
            parent[a] = b
    return len({find(v) for v in rotation})


def euler_check(rotation: Dict[Hashable, Sequence[Hashable]], alpha: Dict[Hashable, Hashable]) -> Tuple[bool, int, int, int, int]:
    """Is every component of the map spherical?

    Returns (ok, V, E, F, C) where F counts face orbits and an isolated
    vertex contributes one face.  The map is genus 0 iff V - E + F == 2C.
    """
    orbits = face_orbits(rotation, alpha)
    V = len(rotation)
    E = len(alpha) // 2
    F = len(orbits) + sum(1 for ds in rotation.values() if not ds)
    C = components(rotation, alpha)
    return V - E + F == 2 * C, V, E, F, C
