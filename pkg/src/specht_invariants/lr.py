"""Littlewood-Richardson coefficients by LR tableau enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .errors import DomainError
from .expansion import SchurExpansion
from .partitions import Partition, SkewShape, conjugate, contains, enumerate_partitions


@dataclass(frozen=True)
class LRTableau:
    """A filling of a skew shape; ``entries`` lists the skew cells row-major."""

    shape: SkewShape
    entries: tuple[int, ...]
    weight: Partition

    def rows(self) -> list[tuple[int, ...]]:
        out, k = [], 0
        for i in range(len(self.shape.outer)):
            width = len(self.shape.row_range(i))
            out.append(self.entries[k:k + width])
            k += width
        return out

    def entry_map(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.shape.cells(), self.entries))

    def reading_word(self) -> list[int]:
        """Rows top to bottom, each read right to left."""
        return [x for row in self.rows() for x in reversed(row)]

    def violations(self) -> list[str]:
        """Reasons this is not an LR tableau of its shape and weight; empty if valid."""
        problems = []
        cells = self.shape.cells()
        if len(cells) != len(self.entries):
            return [f"{len(self.entries)} entries for {len(cells)} cells"]
        fill = self.entry_map()
        for (i, j), v in fill.items():
            if v < 1:
                problems.append(f"non-positive entry {v} at {(i, j)}")
            if (i, j - 1) in fill and fill[(i, j - 1)] > v:
                problems.append(f"row decrease at {(i, j)}")
            if (i - 1, j) in fill and fill[(i - 1, j)] >= v:
                problems.append(f"column not strict at {(i, j)}")
        seen: dict[int, int] = {}
        for pos, v in enumerate(self.reading_word()):
            seen[v] = seen.get(v, 0) + 1
            if v > 1 and seen[v] > seen.get(v - 1, 0):
                problems.append(f"reading word not a lattice word at position {pos}")
                break
        content = [seen.get(v, 0) for v in range(1, max(seen, default=0) + 1)]
        if tuple(content) != self.weight.parts:
            problems.append(f"content {content} differs from weight {self.weight}")
        return problems

    def is_valid(self) -> bool:
        return not self.violations()

    def __str__(self) -> str:
        lines = []
        for i, row in enumerate(self.rows()):
            lines.append(" ".join(["."] * self.shape.inner.part(i) + [str(x) for x in row]))
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "outer": str(self.shape.outer),
            "inner": str(self.shape.inner),
            "weight": str(self.weight),
            "rows": [list(r) for r in self.rows()],
        }


def lr_coefficient(lam: Partition, alpha: Partition, beta: Partition) -> int:
    """c^lam_{alpha beta}; zero when alpha is not inside lam or sizes do not add up."""
    if lam.n != alpha.n + beta.n or not contains(lam, alpha):
        return 0
    return kernels.lr_count(lam.parts, alpha.parts, beta.parts)


def enumerate_lr_tableaux(shape: SkewShape, weight: Partition) -> list[LRTableau]:
    if shape.size != weight.n:
        raise DomainError(f"shape {shape} has {shape.size} cells but weight {weight} has size {weight.n}")
    return [
        LRTableau(shape, tuple(fill), weight)
        for fill in kernels.lr_fillings(shape.outer.parts, shape.inner.parts, weight.parts)
    ]


def canonical_column_tableau(lam: Partition, alpha: Partition) -> LRTableau:
    """Number the cells of every column of lam/alpha 1, 2, 3, ... from the top.

    Each i+1 sits directly below an i, so the result is an LR tableau; its
    weight dominates the weight of any other LR tableau of this shape.
    """
    if not contains(lam, alpha):
        raise DomainError(f"{alpha} is not contained in {lam}")
    shape = SkewShape(lam, alpha)
    alpha_t = conjugate(alpha)
    fill = [alpha_t.part(j) for j in range(lam.part(0))]
    entries = []
    for i, j in shape.cells():
        entries.append(i - fill[j] + 1)
    weight = Partition(
        c for c in (sum(1 for x in entries if x == v) for v in range(1, max(entries, default=0) + 1))
    )
    return LRTableau(shape, tuple(entries), weight)


@lru_cache(maxsize=None)
def schur_product(alpha: Partition, beta: Partition) -> SchurExpansion:
    """s_alpha * s_beta expanded in Schur functions."""
    n = alpha.n + beta.n
    terms = {}
    for lam in enumerate_partitions(n):
        if contains(lam, alpha) and contains(lam, beta):
            c = kernels.lr_count(lam.parts, alpha.parts, beta.parts)
            if c:
                terms[lam] = c
    return SchurExpansion(n, terms)
