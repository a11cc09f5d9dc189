"""Integer partitions, skew shapes and cycle-type arithmetic.

A :class:`Partition` doubles as a cycle type: ``Partition((3, 2))`` names
both the irreducible representation V_(3,2) of S_5 and the conjugacy class
of permutations with one 3-cycle and one 2-cycle.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, SizeBoundError

DEFAULT_BOUND = 30
_bound = DEFAULT_BOUND


def set_enumeration_bound(bound: int) -> None:
    """Change the largest n that :func:`enumerate_partitions` accepts by default."""
    global _bound
    if bound < 0:
        raise DomainError(f"bound must be non-negative, got {bound}")
    _bound = bound


def enumeration_bound() -> int:
    return _bound


class Partition:
    """Immutable weakly decreasing sequence of positive integers.

    Equality is structural. Ordering is by size first, then
    reverse-lexicographic, so ``sorted`` lists ``(4)`` before ``(3, 1)``.
    """

    __slots__ = ("parts", "n", "_hash")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise DomainError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise DomainError(f"partition parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))
        object.__setattr__(self, "_hash", hash(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __reduce__(self):
        return (Partition, (self.parts,))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"5,3,2"`` (or ``"-"`` for the empty partition).

        Input that is not weakly decreasing is rejected, not sorted.
        """
        text = text.strip()
        if text == "-":
            return cls()
        parts = []
        for token in text.split(","):
            token = token.strip()
            try:
                value = int(token)
            except ValueError:
                raise DomainError(f"bad partition token {token!r} in {text!r}") from None
            if value < 1:
                raise DomainError(f"bad partition token {token!r} in {text!r}: parts must be positive")
            parts.append(value)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"bad partition token {str(b)!r} in {text!r}: parts must be weakly decreasing")
        return cls(parts)

    @classmethod
    def from_exponents(cls, *pairs: tuple[int, int]) -> "Partition":
        """Build from ``(part, multiplicity)`` pairs, e.g. ``(2, 3), (1, 2)`` -> (2,2,2,1,1)."""
        parts = []
        for part, mult in pairs:
            parts.extend([part] * mult)
        return cls(sorted(parts, reverse=True))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def _key(self):
        return (self.n, tuple(-p for p in self.parts))

    def __lt__(self, other: "Partition") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "Partition") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "Partition") -> bool:
        return self._key() > other._key()

    def __ge__(self, other: "Partition") -> bool:
        return self._key() >= other._key()

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """The i-th part, zero past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def multiplicities(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for p in self.parts:
            counts[p] = counts.get(p, 0) + 1
        return counts

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield i, j


class SkewShape:
    """The cells of ``outer`` not in ``inner``."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Partition, inner: Partition = Partition()):
        if not contains(outer, inner):
            raise DomainError(f"{inner} is not contained in {outer}")
        self.outer = outer
        self.inner = inner

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewShape) and (self.outer, self.inner) == (other.outer, other.inner)

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"SkewShape({self.outer}/{self.inner})"

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"

    @property
    def size(self) -> int:
        return self.outer.n - self.inner.n

    def row_range(self, i: int) -> range:
        """Column indices of the skew cells in row ``i``."""
        return range(self.inner.part(i), self.outer.part(i))

    def cells(self) -> list[tuple[int, int]]:
        """Skew cells in row-major order."""
        return [(i, j) for i in range(len(self.outer)) for j in self.row_range(i)]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return i >= 0 and j >= 0 and self.inner.part(i) <= j < self.outer.part(i)

    def column_lengths(self) -> list[int]:
        """Number of skew cells in each column 0..outer[0]-1."""
        outer_t = conjugate(self.outer)
        inner_t = conjugate(self.inner)
        return [outer_t.part(j) - inner_t.part(j) for j in range(self.outer.part(0))]


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _partition_objects(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(n, n))


def enumerate_partitions(n: int, bound: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if bound is None:
        bound = _bound
    if n < 0:
        raise DomainError(f"cannot partition a negative integer ({n})")
    if n > bound:
        raise SizeBoundError(f"n={n} exceeds the enumeration bound {bound}")
    return list(_partition_objects(n))


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return lam
    return Partition(sum(1 for p in lam.parts if p > i) for i in range(lam.parts[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner.parts, outer.parts))


def dominates(lam: Partition, gamma: Partition) -> bool:
    """True iff every prefix sum of ``lam`` is at least that of ``gamma``."""
    if lam.n != gamma.n:
        raise DomainError(f"dominance compares partitions of equal size, got {lam.n} and {gamma.n}")
    a = b = 0
    for i in range(max(len(lam), len(gamma))):
        a += lam.part(i)
        b += gamma.part(i)
        if a < b:
            return False
    return True


def power_cycle_type(mu: Partition, j: int) -> Partition:
    """Cycle type of the j-th power of a permutation of cycle type ``mu``.

    An m-cycle raised to the j-th power splits into gcd(m, j) cycles of
    length m / gcd(m, j); ``gcd(m, 0) = m`` gives the identity.
    """
    if j < 0:
        raise DomainError(f"power must be non-negative, got {j}")
    parts = []
    for m in mu.parts:
        g = gcd(m, j)
        parts.extend([m // g] * g)
    parts.sort(reverse=True)
    return Partition(parts)


def order_of(mu: Partition) -> int:
    if not mu.parts:
        raise DomainError("the empty partition has no associated permutation order")
    return reduce(lambda a, b: a * b // gcd(a, b), mu.parts, 1)


def is_even_permutation(mu: Partition) -> bool:
    return sum(p - 1 for p in mu.parts) % 2 == 0


def one_column(n: int) -> Partition:
    """The partition (1^n)."""
    return Partition([1] * n)


def hook(first: int, legs: int) -> Partition:
    """The hook (first, 1^legs)."""
    return Partition([first] + [1] * legs)


def union(*partitions: Sequence[int]) -> Partition:
    """Multiset union of parts: the cycle type of a disjoint product."""
    parts = [p for lam in partitions for p in lam]
    return Partition(sorted(parts, reverse=True))
