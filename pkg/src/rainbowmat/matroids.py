"""Matroid independence oracles: uniform, partition, graphic, linear over GF(p).

All arithmetic is exact (machine integers and modular inverses); independence
is never decided with floating point.  Ground elements are the integers
0..ground_size-1.  Wherever a choice is free (greedy bases, augmentation,
minimal removal) elements are scanned in ascending id order, so every
operation is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class MatroidError(ValueError):
    """Invalid matroid description, out-of-range element, or violated precondition."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Uniform:
    rank: int


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]
    capacities: tuple[int, ...]


@dataclass(frozen=True)
class Graphic:
    vertices: int
    edges: tuple[tuple[int, int], ...]  # edges[element] = (u, v)


@dataclass(frozen=True)
class Linear:
    prime: int
    columns: tuple[tuple[int, ...], ...]  # columns[element] is a vector over GF(prime)


Variant = Uniform | Partition | Graphic | Linear


class _UniformExtender:
    def __init__(self, rank: int):
        self.rank = rank
        self.count = 0

    def can_add(self, e: int) -> bool:
        return self.count < self.rank

    def add(self, e: int) -> None:
        self.count += 1


class _PartitionExtender:
    def __init__(self, block_of: dict[int, int], capacities: tuple[int, ...]):
        self.block_of = block_of
        self.capacities = capacities
        self.counts: dict[int, int] = {}

    def can_add(self, e: int) -> bool:
        b = self.block_of[e]
        return self.counts.get(b, 0) < self.capacities[b]

    def add(self, e: int) -> None:
        b = self.block_of[e]
        self.counts[b] = self.counts.get(b, 0) + 1


class _GraphicExtender:
    def __init__(self, edges: tuple[tuple[int, int], ...]):
        self.edges = edges
        self.parent: dict[int, int] = {}

    def _find(self, v: int) -> int:
        root = v
        while self.parent.get(root, root) != root:
            root = self.parent[root]
        while self.parent.get(v, v) != v:
            self.parent[v], v = root, self.parent[v]
        return root

    def can_add(self, e: int) -> bool:
        u, v = self.edges[e]
        return self._find(u) != self._find(v)

    def add(self, e: int) -> None:
        u, v = self.edges[e]
        self.parent[self._find(u)] = self._find(v)


class _LinearExtender:
    def __init__(self, prime: int, columns: tuple[tuple[int, ...], ...]):
        self.p = prime
        self.columns = columns
        self.pivots: dict[int, list[int]] = {}  # pivot position -> reduced row

    def _reduce(self, e: int) -> list[int]:
        p = self.p
        vec = list(self.columns[e])
        for pos, row in self.pivots.items():
            f = vec[pos]
            if f:
                vec = [(a - f * b) % p for a, b in zip(vec, row)]
        return vec

    def can_add(self, e: int) -> bool:
        return any(self._reduce(e))

    def add(self, e: int) -> None:
        vec = self._reduce(e)
        pos = next(i for i, a in enumerate(vec) if a)
        inv = pow(vec[pos], -1, self.p)
        self.pivots[pos] = [(a * inv) % self.p for a in vec]


@dataclass(frozen=True)
class Matroid:
    """A matroid over ground set {0, ..., ground_size - 1}."""

    variant: Variant
    ground_size: int

    def __post_init__(self):
        if self.ground_size < 0:
            raise MatroidError("ground_size must be nonnegative")
        v = self.variant
        if isinstance(v, Uniform):
            if v.rank < 0:
                raise MatroidError("uniform rank must be nonnegative")
        elif isinstance(v, Partition):
            if len(v.blocks) != len(v.capacities):
                raise MatroidError("one capacity per block required")
            if any(c < 0 for c in v.capacities):
                raise MatroidError("capacities must be nonnegative")
            seen: set[int] = set()
            for block in v.blocks:
                for e in block:
                    if not 0 <= e < self.ground_size:
                        raise MatroidError(f"block element {e} out of range")
                    if e in seen:
                        raise MatroidError(f"element {e} in more than one block")
                    seen.add(e)
            if len(seen) != self.ground_size:
                raise MatroidError("partition blocks must cover the ground set")
        elif isinstance(v, Graphic):
            if len(v.edges) != self.ground_size:
                raise MatroidError("one edge per ground element required")
            for e, (a, b) in enumerate(v.edges):
                if not (0 <= a < v.vertices and 0 <= b < v.vertices):
                    raise MatroidError(f"edge {e} endpoint out of range")
        elif isinstance(v, Linear):
            if not _is_prime(v.prime):
                raise MatroidError(f"{v.prime} is not prime")
            if len(v.columns) != self.ground_size:
                raise MatroidError("one column per ground element required")
            dims = {len(c) for c in v.columns}
            if len(dims) > 1:
                raise MatroidError("columns must have equal dimension")
            for c in v.columns:
                if any(not 0 <= x < v.prime for x in c):
                    raise MatroidError("column entries must be reduced mod p")
        else:
            raise MatroidError(f"unknown matroid variant {v!r}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def uniform(cls, rank: int, ground_size: int) -> "Matroid":
        return cls(Uniform(rank), ground_size)

    @classmethod
    def partition(cls, blocks: Iterable[Iterable[int]],
                  capacities: Iterable[int], ground_size: int) -> "Matroid":
        return cls(Partition(tuple(tuple(b) for b in blocks), tuple(capacities)),
                   ground_size)

    @classmethod
    def graphic(cls, vertices: int, edges: Iterable[tuple[int, int]]) -> "Matroid":
        edges = tuple((u, v) for u, v in edges)
        return cls(Graphic(vertices, edges), len(edges))

    @classmethod
    def linear(cls, prime: int, columns: Iterable[Iterable[int]]) -> "Matroid":
        cols = tuple(tuple(x % prime for x in c) for c in columns)
        return cls(Linear(prime, cols), len(cols))

    # -- internals ---------------------------------------------------------

    @cached_property
    def _block_of(self) -> dict[int, int]:
        assert isinstance(self.variant, Partition)
        return {e: i for i, block in enumerate(self.variant.blocks) for e in block}

    def extender(self):
        """Incremental independent-set builder with can_add/add."""
        v = self.variant
        if isinstance(v, Uniform):
            return _UniformExtender(v.rank)
        if isinstance(v, Partition):
            return _PartitionExtender(self._block_of, v.capacities)
        if isinstance(v, Graphic):
            return _GraphicExtender(v.edges)
        return _LinearExtender(v.prime, v.columns)

    def _check_ids(self, elems: Iterable[int]) -> None:
        for e in elems:
            if not 0 <= e < self.ground_size:
                raise MatroidError(f"element {e} out of range [0, {self.ground_size})")

    # -- oracle operations -------------------------------------------------

    def independent(self, s: Iterable[int]) -> bool:
        """Is s independent?  Pure function of (self, s)."""
        s = frozenset(s)
        self._check_ids(s)
        ext = self.extender()
        for e in sorted(s):
            if not ext.can_add(e):
                return False
            ext.add(e)
        return True

    def rank(self, s: Iterable[int]) -> int:
        """Size of a maximum independent subset of s (greedy, ascending ids)."""
        s = frozenset(s)
        self._check_ids(s)
        ext = self.extender()
        r = 0
        for e in sorted(s):
            if ext.can_add(e):
                ext.add(e)
                r += 1
        return r

    def basis_of(self, s: Iterable[int]) -> frozenset[int]:
        """Greedy maximum independent subset of s, ascending ids."""
        s = frozenset(s)
        self._check_ids(s)
        ext = self.extender()
        kept = set()
        for e in sorted(s):
            if ext.can_add(e):
                ext.add(e)
                kept.add(e)
        return frozenset(kept)

    def spans(self, a: Iterable[int], x: int) -> bool:
        """Is x spanned by a (x in a, or adding x does not raise rank)?"""
        a = frozenset(a)
        self._check_ids(a)
        self._check_ids([x])
        if x in a:
            return True
        ext = self.extender()
        for e in sorted(a):
            if ext.can_add(e):
                ext.add(e)
        return not ext.can_add(x)

    def circuit_support(self, i: Iterable[int], x: int) -> frozenset[int]:
        """The unique minimal subset of independent i spanning x.

        This is the fundamental circuit of x with respect to i, minus x
        itself, computed as { y in i : i + x - y independent }.
        """
        i = frozenset(i)
        self._check_ids(i)
        self._check_ids([x])
        if x in i:
            raise MatroidError("x must lie outside the independent set")
        if not self.independent(i):
            raise MatroidError("support base must be independent")
        ix = i | {x}
        if self.independent(ix):
            raise MatroidError("x is not spanned by the independent set")
        return frozenset(y for y in i if self.independent(ix - {y}))

    def augment(self, i: Iterable[int], j: Iterable[int]) -> frozenset[int]:
        """Elements of j \\ i extending i to an independent set of size |j|.

        Requires both sets independent with |i| < |j|.  Scans j \\ i in
        ascending order; the augmentation axiom guarantees success.
        """
        i, j = frozenset(i), frozenset(j)
        if not self.independent(i) or not self.independent(j):
            raise MatroidError("augment requires two independent sets")
        if len(i) >= len(j):
            raise MatroidError("augment requires |i| < |j|")
        ext = self.extender()
        for e in sorted(i):
            ext.add(e)
        added: set[int] = set()
        size = len(i)
        for e in sorted(j - i):
            if size == len(j):
                break
            if ext.can_add(e):
                ext.add(e)
                added.add(e)
                size += 1
        if size != len(j):
            raise MatroidError("augmentation failed (inputs not a matroid?)")
        return frozenset(added)

    def min_removal(self, base: Iterable[int], add: Iterable[int]) -> frozenset[int]:
        """Minimal K subset of base with (base \\ K) | add independent.

        Greedy: extend add by elements of base in ascending order while
        independence holds; minimality follows from the exchange property.
        """
        base, add = frozenset(base), frozenset(add)
        self._check_ids(base)
        if not self.independent(add):
            raise MatroidError("min_removal requires an independent add set")
        ext = self.extender()
        for e in sorted(add):
            ext.add(e)
        kept: set[int] = set()
        for e in sorted(base - add):
            if ext.can_add(e):
                ext.add(e)
                kept.add(e)
        return base - kept - add
