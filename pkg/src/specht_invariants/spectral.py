"""Eigenvalue multiplicities of rho_lambda(w_mu) and the immersion order.

All eigenvalues of rho_lambda(w_mu) are m-th roots of unity, m the order
of w_mu, so a profile is a vector of m exact integers: index k counts the
eigenvalue exp(2 pi i k / m).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from .characters import character, dimension
from .errors import DomainError, InternalInvariantError, SizeBoundError, VerificationFailure
from .numtheory import divisors, ramanujan_sum
from .partitions import Partition, conjugate, enumerate_partitions, one_column, order_of, power_cycle_type
from .symfunc import multiplicity
from .theorem import VERIFY_BOUND, main_admits


@dataclass(frozen=True)
class EigenvalueProfile:
    order: int
    multiplicities: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.multiplicities[k % self.order]

    def trace(self) -> complex:
        m = self.order
        return sum(c * cmath.exp(2j * cmath.pi * k / m) for k, c in enumerate(self.multiplicities))

    def __str__(self) -> str:
        """``k:mult`` pairs with zeros suppressed."""
        return " ".join(f"{k}:{c}" for k, c in enumerate(self.multiplicities) if c)

    def to_json_obj(self) -> dict:
        return {"order": self.order, "multiplicities": list(self.multiplicities)}


def eigenvalue_profile(lam: Partition, mu: Partition) -> EigenvalueProfile:
    """mult_k = (1/m) sum over d | m of chi_lam(type of w^d) * c_{m/d}(k)."""
    if lam.n != mu.n:
        raise DomainError(f"eigenvalue_profile needs partitions of equal size, got {lam} and {mu}")
    m = order_of(mu)
    chis = [(d, character(lam, power_cycle_type(mu, d))) for d in divisors(m)]
    mults = []
    for k in range(m):
        total = sum(chi * ramanujan_sum(m // d, k) for d, chi in chis)
        q, r = divmod(total, m)
        if r:
            raise InternalInvariantError(f"eigenvalue_profile({lam}, {mu}): {total} not divisible by {m} at k={k}")
        mults.append(q)
    return EigenvalueProfile(m, tuple(mults))


def immersed(lam: Partition, kappa: Partition, n: int | None = None) -> bool:
    """V_lam is immersed in V_kappa: pointwise profile domination at every cycle type."""
    if n is None:
        n = lam.n
    if lam.n != n or kappa.n != n:
        raise DomainError(f"immersed needs two partitions of {n}, got {lam} and {kappa}")
    for mu in enumerate_partitions(n):
        a = eigenvalue_profile(lam, mu).multiplicities
        b = eigenvalue_profile(kappa, mu).multiplicities
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


@dataclass
class ImmersionReport:
    n: int
    trivial_exceptions: list[Partition] = field(default_factory=list)
    sign_exceptions: list[Partition] = field(default_factory=list)
    profiles_checked: int = 0
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "profiles_checked": self.profiles_checked,
            "trivial_not_immersed_in": [str(p) for p in self.trivial_exceptions],
            "sign_not_immersed_in": [str(p) for p in self.sign_exceptions],
            "problems": self.problems,
        }


def verify_immersion_theorem(n: int, bound: int = VERIFY_BOUND) -> ImmersionReport:
    """Check both immersion statements at size n against :func:`theorem.main_admits`.

    V_(n) should be immersed in V_lam exactly when no mu makes (lam, mu) an
    exception, and V_(1^n) in V_lam exactly when the same holds for the
    conjugate of lam. Along the way every profile is checked to sum to
    dim V_lam and to agree at k = 0 with :func:`symfunc.multiplicity`.
    """
    if n > bound:
        raise SizeBoundError(f"n={n} exceeds the verification bound {bound}")
    if n < 1:
        raise DomainError("verify_immersion_theorem needs n >= 1")
    report = ImmersionReport(n)
    parts = enumerate_partitions(n)
    profiles = {}
    for lam in parts:
        dim = dimension(lam)
        for mu in parts:
            prof = eigenvalue_profile(lam, mu)
            profiles[lam, mu] = prof.multiplicities
            report.profiles_checked += 1
            if sum(prof.multiplicities) != dim:
                report.problems.append(f"profile of {lam} at {mu} sums to {sum(prof.multiplicities)}, not {dim}")
            if prof.multiplicities[0] != multiplicity(lam, mu):
                report.problems.append(f"fixed space of {lam} at {mu} disagrees with multiplicity")

    def dominated(small, big):
        return all(
            all(x <= y for x, y in zip(profiles[small, mu], profiles[big, mu])) for mu in parts
        )

    trivial, sign = Partition((n,)), one_column(n)
    for lam in parts:
        t_imm = dominated(trivial, lam)
        s_imm = dominated(sign, lam)
        predicted_t = all(main_admits(lam, mu) for mu in parts)
        predicted_s = all(main_admits(conjugate(lam), mu) for mu in parts)
        if not t_imm:
            report.trivial_exceptions.append(lam)
        if not s_imm:
            report.sign_exceptions.append(lam)
        if t_imm != predicted_t:
            report.problems.append(f"V_({n}) immersed in V_{lam}: computed {t_imm}, predicted {predicted_t}")
        if s_imm != predicted_s:
            report.problems.append(f"V_(1^{n}) immersed in V_{lam}: computed {s_imm}, predicted {predicted_s}")
        if t_imm != dominated(sign, conjugate(lam)):
            report.problems.append(f"sign twist fails for {lam}")
    if not report.ok:
        raise VerificationFailure("; ".join(report.problems[:5]), report)
    return report
