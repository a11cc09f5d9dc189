"""Which (lambda, mu) pairs admit a w_mu-invariant vector in V_lambda.

Closed-form predictions (the nine exception families, and the single-cycle
case), brute-force checks against :func:`symfunc.multiplicity`, and the
search for product witnesses f_(p) f_(q) >= s_lambda.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DomainError, SizeBoundError, VerificationFailure
from .lr import LRTableau, canonical_column_tableau, enumerate_lr_tableaux, lr_coefficient
from .partitions import (
    Partition,
    SkewShape,
    contains,
    enumerate_partitions,
    hook,
    is_even_permutation,
    one_column,
)
from .symfunc import multiplicity

VERIFY_BOUND = 16

SPORADIC = {
    5: (Partition((2, 2)), Partition((3, 1))),
    6: (Partition((2, 2, 2)), Partition((3, 2, 1))),
    7: (Partition((2, 2, 2, 2)), Partition((5, 3))),
    8: (Partition((4, 4)), Partition((5, 3))),
    9: (Partition((2, 2, 2, 2, 2)), Partition((5, 3, 2))),
}


@dataclass(frozen=True, order=True)
class ExceptionRecord:
    lam: Partition
    mu: Partition
    case_id: int


@dataclass(frozen=True)
class WitnessPair:
    """alpha |- p, beta |- q with f_(p) >= s_alpha, f_(q) >= s_beta, c^lam_{alpha beta} > 0."""

    alpha: Partition
    beta: Partition
    certificate: LRTableau

    def violations(self) -> list[str]:
        problems = list(self.certificate.violations())
        if self.certificate.shape.inner != self.alpha:
            problems.append("certificate inner shape is not alpha")
        if self.certificate.weight != self.beta:
            problems.append("certificate weight is not beta")
        if not swanson_admits(self.alpha):
            problems.append(f"f_({self.alpha.n}) does not contain s_{self.alpha}")
        if not swanson_admits(self.beta):
            problems.append(f"f_({self.beta.n}) does not contain s_{self.beta}")
        return problems

    def to_json_obj(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "certificate": self.certificate.to_json_obj(),
        }


def swanson_admits(lam: Partition) -> bool:
    """Whether an n-cycle has a nonzero invariant vector in V_lam."""
    n = lam.n
    if n >= 2 and lam == hook(n - 1, 1):
        return False
    if n % 2 == 0 and lam == one_column(n):
        return False
    if n >= 3 and n % 2 == 1 and lam == hook(2, n - 2):
        return False
    return True


def exception_cases(lam: Partition, mu: Partition) -> tuple[int, ...]:
    """Exception families (1-9) that the pair belongs to; empty if none."""
    if lam.n != mu.n:
        raise DomainError(f"partitions of different sizes: {lam} and {mu}")
    n = lam.n
    cases = []
    if lam == one_column(n) and not is_even_permutation(mu):
        cases.append(1)
    if mu == Partition((n,)) and n >= 2:
        if lam == hook(n - 1, 1):
            cases.append(2)
        if n >= 3 and n % 2 == 1 and lam == hook(2, n - 2):
            cases.append(3)
    if n >= 5 and n % 2 == 1 and mu == Partition((n - 2, 2)):
        if lam == Partition([2, 2] + [1] * (n - 4)):
            cases.append(4)
    for case_id, pair in SPORADIC.items():
        if (lam, mu) == pair:
            cases.append(case_id)
    return tuple(cases)


def main_admits(lam: Partition, mu: Partition) -> bool:
    return not exception_cases(lam, mu)


def exceptions(n: int) -> list[ExceptionRecord]:
    """Every (pair, family) match at size n, sorted by (lambda, mu, case)."""
    parts = enumerate_partitions(n)
    return sorted(
        ExceptionRecord(lam, mu, c) for lam in parts for mu in parts for c in exception_cases(lam, mu)
    )


def is_persistent(mu: Partition, bound: int = VERIFY_BOUND) -> bool:
    """Every V_lam except possibly the sign has a w_mu-fixed vector (brute force)."""
    n = mu.n
    if n > bound:
        raise SizeBoundError(f"n={n} exceeds the verification bound {bound}")
    sign = one_column(n)
    return all(multiplicity(lam, mu) >= 1 for lam in enumerate_partitions(n) if lam != sign)


def non_persistent_witnesses(mu: Partition, bound: int = VERIFY_BOUND) -> list[Partition]:
    """The lam != (1^n) for which w_mu has no invariant vector."""
    n = mu.n
    if n > bound:
        raise SizeBoundError(f"n={n} exceeds the verification bound {bound}")
    sign = one_column(n)
    return [lam for lam in enumerate_partitions(n) if lam != sign and multiplicity(lam, mu) == 0]


def choose_beta(lam: Partition, q: int) -> Partition:
    """A beta |- q inside lam with f_(q) >= s_beta.

    Tries the explicit choices for lam containing (q-1,1), (1^q) with q
    even, or (2,1^(q-2)) with q odd, then falls back to any admissible
    beta inside lam. Each candidate is checked before it is returned.
    """
    p = lam.n - q
    if p < 2 or q < 1:
        raise DomainError(f"choose_beta needs p >= 2 and q >= 1, got p={p}, q={q}")
    if lam == one_column(lam.n):
        raise DomainError("choose_beta is undefined for the one-column partition")

    def ok(beta):
        return beta is not None and contains(lam, beta) and swanson_admits(beta)

    for beta in _beta_candidates(lam, q):
        if ok(beta):
            return beta
    for beta in enumerate_partitions(q):
        if ok(beta):
            return beta
    raise DomainError(f"no admissible beta |- {q} inside {lam}")


def _beta_candidates(lam: Partition, q: int):
    rows = len(lam)
    if q >= 2 and contains(lam, hook(q - 1, 1)):
        if lam.part(0) >= q:
            yield Partition((q,))
        elif rows >= 3 and q >= 3:
            yield Partition([q - 2, 1, 1])
        elif q >= 4:
            yield Partition((q - 2, 2))
    if q % 2 == 0 and contains(lam, one_column(q)):
        yield hook(2, q - 2)
    if q % 2 == 1 and q >= 3 and contains(lam, hook(2, q - 2)):
        if lam.part(0) >= 3:
            yield hook(3, q - 3)
        elif rows >= q:
            yield one_column(q)
        elif q >= 4:
            yield Partition([2, 2] + [1] * (q - 4))


def _certificate(lam: Partition, alpha: Partition, beta: Partition) -> LRTableau | None:
    tableaux = enumerate_lr_tableaux(SkewShape(lam, alpha), beta)
    return tableaux[0] if tableaux else None


def find_witness(lam: Partition, p: int, q: int) -> WitnessPair | None:
    """Witness that f_(p) f_(q) >= s_lam, hence f_(p,q) >= s_lam; None if none exists.

    First the guided choice: beta from :func:`choose_beta`, alpha the weight
    of the column tableau of lam/beta. Otherwise an exhaustive search over
    admissible alpha, beta inside lam.
    """
    if lam.n != p + q:
        raise DomainError(f"{lam} is not a partition of {p}+{q}")
    if p >= 2 and q >= 1 and lam != one_column(lam.n):
        beta = choose_beta(lam, q)
        alpha = canonical_column_tableau(lam, beta).weight
        if swanson_admits(alpha):
            cert = _certificate(lam, alpha, beta)
            if cert is not None:
                return WitnessPair(alpha, beta, cert)
    for alpha in enumerate_partitions(p):
        if not (contains(lam, alpha) and swanson_admits(alpha)):
            continue
        for beta in enumerate_partitions(q):
            if contains(lam, beta) and swanson_admits(beta) and lr_coefficient(lam, alpha, beta):
                return WitnessPair(alpha, beta, _certificate(lam, alpha, beta))
    return None


# verification harness


@dataclass(frozen=True)
class PairRow:
    n: int
    lam: Partition
    mu: Partition
    case_ids: tuple[int, ...]
    multiplicity: int

    def sort_key(self):
        return (self.n, self.lam, self.mu)


@dataclass
class VerificationReport:
    n_max: int
    pairs_checked: int = 0
    exceptions: list[PairRow] = field(default_factory=list)
    disagreements: list[PairRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def exceptions_by_n(self) -> dict[int, list[PairRow]]:
        out: dict[int, list[PairRow]] = {}
        for row in self.exceptions:
            out.setdefault(row.n, []).append(row)
        return out

    def to_tsv(self) -> str:
        lines = ["n\tlambda\tmu\tcase_ids\tmultiplicity"]
        for row in self.exceptions:
            lines.append(
                f"{row.n}\t{row.lam}\t{row.mu}\t{','.join(map(str, row.case_ids)) or '-'}\t{row.multiplicity}"
            )
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        def enc(row):
            return {
                "n": row.n,
                "lambda": str(row.lam),
                "mu": str(row.mu),
                "case_ids": list(row.case_ids),
                "multiplicity": row.multiplicity,
            }

        return {
            "n_max": self.n_max,
            "pairs_checked": self.pairs_checked,
            "ok": self.ok,
            "exceptions": [enc(r) for r in self.exceptions],
            "disagreements": [enc(r) for r in self.disagreements],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _check_class(task: tuple[int, tuple[int, ...]]) -> tuple[int, list[PairRow], list[PairRow]]:
    n, mu_parts = task
    mu = Partition(mu_parts)
    found, bad = [], []
    count = 0
    for lam in enumerate_partitions(n):
        count += 1
        mult = multiplicity(lam, mu)
        cases = exception_cases(lam, mu)
        row = PairRow(n, lam, mu, cases, mult)
        if mult == 0:
            found.append(row)
        if (mult >= 1) != (not cases):
            bad.append(row)
    return count, found, bad


def _tasks(n_max: int) -> list[tuple[int, tuple[int, ...]]]:
    return [(n, mu.parts) for n in range(1, n_max + 1) for mu in enumerate_partitions(n)]


def verify_main_theorem(n_max: int, jobs: int = 1, bound: int = VERIFY_BOUND) -> VerificationReport:
    """Compare the closed-form exception list with brute force for all n <= n_max.

    Raises :class:`VerificationFailure` (carrying the report) on any
    disagreement. ``jobs > 1`` fans out over cycle types in worker
    processes; the report is identical either way.
    """
    if n_max > bound:
        raise SizeBoundError(f"n_max={n_max} exceeds the verification bound {bound}")
    report = VerificationReport(n_max)
    tasks = _tasks(n_max)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results: Iterable = list(pool.map(_check_class, tasks, chunksize=4))
    else:
        results = map(_check_class, tasks)
    for count, found, bad in results:
        report.pairs_checked += count
        report.exceptions.extend(found)
        report.disagreements.extend(bad)
    report.exceptions.sort(key=PairRow.sort_key)
    report.disagreements.sort(key=PairRow.sort_key)
    if not report.ok:
        first = report.disagreements[0]
        raise VerificationFailure(
            f"{len(report.disagreements)} disagreement(s); first: lambda={first.lam}, mu={first.mu}, "
            f"multiplicity={first.multiplicity}, predicted cases={list(first.case_ids)}",
            report,
        )
    return report
