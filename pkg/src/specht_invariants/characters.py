"""Exact irreducible characters of S_n, dimensions and class sizes."""

from __future__ import annotations

from math import factorial

from . import kernels
from .errors import DomainError
from .partitions import Partition, conjugate, enumerate_partitions


class CharacterEngine:
    """Border-strip character evaluation with a memo shared across calls.

    The memo only ever receives finished values (a single dict store), so
    threads sharing an engine never see partial entries.
    """

    def __init__(self):
        self._memo: dict = {}

    def character(self, lam: Partition, mu: Partition) -> int:
        if lam.n != mu.n:
            raise DomainError(f"character needs partitions of equal size, got {lam} and {mu}")
        # largest part of mu is peeled first; Partition already stores parts descending
        return kernels.mn_character(lam.parts, mu.parts, self._memo)

    def clear(self) -> None:
        self._memo.clear()

    def __len__(self) -> int:
        return len(self._memo)


_default = CharacterEngine()


def default_engine() -> CharacterEngine:
    return _default


def character(lam: Partition, mu: Partition) -> int:
    """chi_lam evaluated at the class of cycle type ``mu``."""
    return _default.character(lam, mu)


def dimension(lam: Partition) -> int:
    """Hook length formula: n! / product of hook lengths."""
    lam_t = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hooks *= (row - j) + (lam_t.parts[j] - i) - 1
    return factorial(lam.n) // hooks


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod over i of i^{m_i} * m_i!."""
    z = 1
    for part, mult in mu.multiplicities().items():
        z *= part**mult * factorial(mult)
    return z


def class_size(mu: Partition) -> int:
    """Number of permutations in S_n with cycle type ``mu``."""
    return factorial(mu.n) // centralizer_order(mu)


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    parts = enumerate_partitions(n)
    return {(lam, mu): character(lam, mu) for lam in parts for mu in parts}
