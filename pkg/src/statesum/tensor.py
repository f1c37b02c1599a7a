"""Exact sparse tensors and greedy tensor-network contraction."""

from __future__ import annotations

import os
from collections import defaultdict
from math import prod
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

DEFAULT_MAX_ENTRIES = 10 ** 7


class ContractionTooLarge(MemoryError):
    """A contraction would store more entries than the configured cap."""


def max_entries() -> int:
    env = os.environ.get("STATESUM_MAX_ENTRIES")
    return int(env) if env else DEFAULT_MAX_ENTRIES


class SparseTensor:
    """A multi-leg tensor stored as ``{index tuple: nonzero value}``.

    Values are any exact ring elements (ints, Fractions, ModP, DeltaScalar).
    """

    __slots__ = ("shape", "data")

    def __init__(self, shape: Sequence[int], data: Dict[Tuple[int, ...], object] = None):
        self.shape = tuple(shape)
        self.data = {}
        if data:
            r = len(self.shape)
            for idx, v in data.items():
                if len(idx) != r:
                    raise ValueError("index %r does not match %d legs" % (idx, r))
                if v != 0:
                    self.data[tuple(idx)] = v

    @property
    def rank(self) -> int:
        return len(self.shape)

    def nnz(self) -> int:
        return len(self.data)

    @classmethod
    def scalar(cls, value) -> "SparseTensor":
        return cls((), {(): value})

    @classmethod
    def vector(cls, coeffs: Sequence) -> "SparseTensor":
        return cls((len(coeffs),), {(i,): c for i, c in enumerate(coeffs) if c != 0})

    def value(self):
        """The entry of a 0-leg tensor."""
        if self.shape:
            raise ValueError("not a scalar tensor: shape %r" % (self.shape,))
        return self.data.get((), 0)

    def to_vector(self) -> list:
        if len(self.shape) != 1:
            raise ValueError("not a 1-leg tensor")
        out = [0] * self.shape[0]
        for (i,), v in self.data.items():
            out[i] = v
        return out

    def get(self, idx, default=0):
        return self.data.get(tuple(idx), default)

    def scale(self, c) -> "SparseTensor":
        return SparseTensor(self.shape, {k: v * c for k, v in self.data.items()})

    def map_values(self, f) -> "SparseTensor":
        return SparseTensor(self.shape, {k: f(v) for k, v in self.data.items()})

    def __add__(self, other: "SparseTensor") -> "SparseTensor":
        if self.shape != other.shape:
            raise ValueError("shape mismatch %r vs %r" % (self.shape, other.shape))
        out = dict(self.data)
        for k, v in other.data.items():
            out[k] = out[k] + v if k in out else v
        return SparseTensor(self.shape, out)

    def __sub__(self, other: "SparseTensor") -> "SparseTensor":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseTensor) or self.shape != other.shape:
            return False
        keys = set(self.data) | set(other.data)
        return all(self.data.get(k, 0) == other.data.get(k, 0) for k in keys)

    def __repr__(self):
        return "SparseTensor(shape=%r, nnz=%d)" % (self.shape, len(self.data))

    def outer(self, other: "SparseTensor") -> "SparseTensor":
        return contract(self, other, [])

    def dense(self):
        """Nested lists, for small tensors and tests."""
        import itertools

        flat = {}
        for idx in itertools.product(*[range(d) for d in self.shape]):
            flat[idx] = self.data.get(idx, 0)
        return flat


def permute_legs(t: SparseTensor, sigma: Sequence[int]) -> SparseTensor:
    """The operator U_sigma: output leg i carries input leg sigma^-1(i).

    ``sigma`` is 0-based: ``sigma[j]`` is the output position of input leg j,
    so ``U(v_0 (x) ... (x) v_{r-1})`` has ``v_{sigma^-1(i)}`` at slot i.
    """
    r = t.rank
    if sorted(sigma) != list(range(r)):
        raise ValueError("%r is not a permutation of %d legs" % (list(sigma), r))
    inv = [0] * r
    for j, s in enumerate(sigma):
        inv[s] = j
    shape = tuple(t.shape[inv[i]] for i in range(r))
    data = {}
    for idx, v in t.data.items():
        data[tuple(idx[inv[i]] for i in range(r))] = v
    out = SparseTensor(shape)
    out.data = data
    return out


def contract(t1: SparseTensor, t2: SparseTensor, pairs: Iterable[Tuple[int, int]],
             cap: int = None) -> SparseTensor:
    """Sum over paired legs; result legs are t1's free legs then t2's."""
    pairs = list(pairs)
    cap = max_entries() if cap is None else cap
    l1 = [a for a, _ in pairs]
    l2 = [b for _, b in pairs]
    if len(set(l1)) != len(l1) or len(set(l2)) != len(l2):
        raise ValueError("a leg is paired twice")
    for a, b in pairs:
        if not (0 <= a < t1.rank and 0 <= b < t2.rank):
            raise ValueError("leg pair (%d, %d) out of range" % (a, b))
        if t1.shape[a] != t2.shape[b]:
            raise ValueError("leg dimension mismatch: %d vs %d" % (t1.shape[a], t2.shape[b]))
    f1 = [i for i in range(t1.rank) if i not in l1]
    f2 = [i for i in range(t2.rank) if i not in l2]
    shape = tuple(t1.shape[i] for i in f1) + tuple(t2.shape[i] for i in f2)

    groups = defaultdict(list)
    for idx, v in t2.data.items():
        groups[tuple(idx[b] for b in l2)].append((tuple(idx[i] for i in f2), v))

    out: Dict[Tuple[int, ...], object] = {}
    for idx, v in t1.data.items():
        matches = groups.get(tuple(idx[a] for a in l1))
        if not matches:
            continue
        head = tuple(idx[i] for i in f1)
        for tail, w in matches:
            key = head + tail
            if key in out:
                out[key] = out[key] + v * w
            else:
                out[key] = v * w
                if len(out) > cap:
                    raise ContractionTooLarge(
                        "contraction exceeds %d stored entries (set STATESUM_MAX_ENTRIES)" % cap)
    res = SparseTensor(shape)
    res.data = {k: v for k, v in out.items() if v != 0}
    return res


# ---------------------------------------------------------------------------
# networks with named legs


class LabeledTensor:
    """A SparseTensor whose legs carry hashable labels.

    Within a network each label occurs on at most two legs overall; a label on
    two legs is summed over, a label on one leg is an open leg.
    """

    __slots__ = ("tensor", "labels")

    def __init__(self, tensor: SparseTensor, labels: Sequence[Hashable]):
        labels = tuple(labels)
        if len(labels) != tensor.rank:
            raise ValueError("%d labels for a %d-leg tensor" % (len(labels), tensor.rank))
        if len(set(labels)) != len(labels):
            raise ValueError("repeated label on one tensor: %r" % (labels,))
        self.tensor = tensor
        self.labels = labels

    def __repr__(self):
        return "LabeledTensor(%r, nnz=%d)" % (self.labels, self.tensor.nnz())


def _max_fiber(t: SparseTensor, legs: Sequence[int]) -> int:
    if not legs:
        return t.nnz()
    counts = defaultdict(int)
    for idx in t.data:
        counts[tuple(idx[i] for i in legs)] += 1
    return max(counts.values(), default=0)


def _pair_bound(a: LabeledTensor, b: LabeledTensor) -> int:
    shared = set(a.labels) & set(b.labels)
    la = [i for i, x in enumerate(a.labels) if x in shared]
    lb = [i for i, x in enumerate(b.labels) if x in shared]
    dense = prod([d for d, x in zip(a.tensor.shape, a.labels) if x not in shared]
                 + [d for d, x in zip(b.tensor.shape, b.labels) if x not in shared])
    sparse = min(a.tensor.nnz() * _max_fiber(b.tensor, lb), b.tensor.nnz() * _max_fiber(a.tensor, la))
    return min(dense, sparse)


def contract_pair(a: LabeledTensor, b: LabeledTensor, cap: int = None) -> LabeledTensor:
    shared = [x for x in a.labels if x in b.labels]
    pairs = [(a.labels.index(x), b.labels.index(x)) for x in shared]
    t = contract(a.tensor, b.tensor, pairs, cap=cap)
    labels = [x for x in a.labels if x not in shared] + [x for x in b.labels if x not in shared]
    return LabeledTensor(t, labels)


def contract_network(tensors: Sequence[LabeledTensor], output: Sequence[Hashable] = (),
                     cap: int = None) -> SparseTensor:
    """Contract a whole network greedily and return it with legs in ``output`` order.

    At each step the pair of tensors with the smallest upper bound on the
    size of their product is contracted; ties go to the pair whose legs have
    the lowest position in the network.  Pairs sharing no label are only
    combined once no connected pair is left.
    """
    cap = max_entries() if cap is None else cap
    work: List[LabeledTensor] = list(tensors)
    counts = defaultdict(int)
    for lt in work:
        for x in lt.labels:
            counts[x] += 1
    bad = [x for x, c in counts.items() if c > 2]
    if bad:
        raise ValueError("labels used more than twice: %r" % bad[:5])
    open_labels = {x for x, c in counts.items() if c == 1}
    if set(output) != open_labels:
        raise ValueError("output labels %r do not match open legs %r" % (list(output), sorted(map(repr, open_labels))))

    if not work:
        return SparseTensor.scalar(1)

    while len(work) > 1:
        best = None
        for i in range(len(work)):
            li = set(work[i].labels)
            for j in range(i + 1, len(work)):
                connected = bool(li & set(work[j].labels))
                key = (0 if connected else 1, _pair_bound(work[i], work[j]), i, j)
                if best is None or key < best:
                    best = key
        _, _, i, j = best
        merged = contract_pair(work[i], work[j], cap=cap)
        work = [w for k, w in enumerate(work) if k not in (i, j)] + [merged]
        if merged.tensor.nnz() == 0:
            # the network is zero; skip the remaining work
            shape = []
            for x in output:
                for lt in tensors:
                    if x in lt.labels:
                        shape.append(lt.tensor.shape[lt.labels.index(x)])
                        break
            return SparseTensor(shape)

    final = work[0]
    order = [final.labels.index(x) for x in output]
    sigma = [0] * len(order)
    for pos, leg in enumerate(order):
        sigma[leg] = pos
    return permute_legs(final.tensor, sigma)
