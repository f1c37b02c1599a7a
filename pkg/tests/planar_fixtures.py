"""Small planar Heegaard diagrams enumerated by brute force."""

from statesum.heegaard import Box, HeegaardError, PlanarHeegaardDiagram, derive_code, validate_planar


def _matchings(points):
    if not points:
        yield []
        return
    a = points[0]
    for i in range(1, len(points)):
        for rest in _matchings(points[1:i] + points[i + 1:]):
            yield [(a, points[i])] + rest


def enumerate_planar(ks):
    """Every planar diagram with k_t marked points on pair t whose strings close into g circles."""
    boxes, points, label = {}, [], 1
    for t, k in enumerate(ks):
        pts = tuple(range(label, label + k))
        label += k
        boxes[(t, "+")] = Box(pts, 0)
        boxes[(t, "-")] = Box(tuple(reversed(pts)), 0)
        points += [(t, s, q) for q in pts for s in "+-"]
    out = []
    for m in _matchings(points):
        phd = PlanarHeegaardDiagram.make(len(ks), boxes, m)
        try:
            validate_planar(phd)
            derive_code(phd)
        except HeegaardError:
            continue
        out.append(phd)
    return out
