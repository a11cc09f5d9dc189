"""Sparse integer combinations of Schur functions of a fixed degree."""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping

from .errors import DomainError
from .partitions import Partition


class SchurExpansion:
    """Finite sum of ``coeff * s_lambda`` over partitions of one degree.

    Zero coefficients are never stored. Iteration follows the canonical
    partition order, so printed expansions are deterministic.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = ()):
        self.degree = degree
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, c in items:
            if lam.n != degree:
                raise DomainError(f"s_{lam} has degree {lam.n}, expansion has degree {degree}")
            acc[lam] = acc.get(lam, 0) + c
        self._terms = {lam: acc[lam] for lam in sorted(acc) if acc[lam] != 0}

    @classmethod
    def schur(cls, lam: Partition) -> "SchurExpansion":
        return cls(lam.n, {lam: 1})

    @classmethod
    def zero(cls, degree: int) -> "SchurExpansion":
        return cls(degree)

    def __getitem__(self, lam: Partition) -> int:
        return self._terms.get(lam, 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Partition]:
        return list(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, tuple(self._terms.items())))

    def _check_degree(self, other: "SchurExpansion") -> None:
        if self.degree != other.degree:
            raise DomainError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        self._check_degree(other)
        return SchurExpansion(self.degree, list(self.items()) + list(other.items()))

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        self._check_degree(other)
        return SchurExpansion(self.degree, list(self.items()) + [(k, -v) for k, v in other.items()])

    def __neg__(self) -> "SchurExpansion":
        return SchurExpansion(self.degree, {k: -v for k, v in self.items()})

    def scale(self, c: int) -> "SchurExpansion":
        return SchurExpansion(self.degree, {k: c * v for k, v in self.items()})

    def exact_div(self, m: int) -> "SchurExpansion":
        """Divide every coefficient by ``m``; raises ``ArithmeticError`` on a remainder."""
        out = {}
        for k, v in self.items():
            q, r = divmod(v, m)
            if r:
                raise ArithmeticError(f"coefficient {v} of s_{k} is not divisible by {m}")
            out[k] = q
        return SchurExpansion(self.degree, out)

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._terms.values())

    def __repr__(self) -> str:
        return f"SchurExpansion({self.degree}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for lam, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = f"s({lam})" if mag == 1 else f"{mag}*s({lam})"
            out.append((sign, term))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, term in out[1:]:
            text += f" {sign} {term}"
        return text

    # serialisation

    def to_tsv(self) -> str:
        """One ``<coeff>\\t<partition>`` line per term."""
        return "".join(f"{c}\t{lam}\n" for lam, c in self.items())

    @classmethod
    def from_tsv(cls, text: str, degree: int | None = None) -> "SchurExpansion":
        terms = []
        for line in text.splitlines():
            if not line.strip():
                continue
            coeff, lam = line.split("\t")
            terms.append((Partition.parse(lam), int(coeff)))
        if degree is None:
            if not terms:
                raise DomainError("cannot infer the degree of an empty expansion")
            degree = terms[0][0].n
        return cls(degree, terms)

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"partition": str(lam), "coeff": str(c)} for lam, c in self.items()],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SchurExpansion":
        return cls(
            obj["degree"],
            [(Partition.parse(t["partition"]), int(t["coeff"])) for t in obj["terms"]],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())
