"""Frobenius characteristics of representations induced from cyclic subgroups.

``frobenius_f(mu)`` is ch Ind_{C_mu}^{S_n} 1, where C_mu is generated by a
permutation of cycle type mu. Its Schur coefficient at lambda is the
dimension of the w_mu-fixed subspace of V_lambda; :func:`multiplicity`
computes the same number directly from characters.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .characters import character, class_size
from .errors import DomainError, InternalInvariantError
from .expansion import SchurExpansion
from .lr import schur_product
from .numtheory import divisors, totient
from .partitions import Partition, enumerate_partitions, order_of, power_cycle_type, union


@lru_cache(maxsize=None)
def power_sum_to_schur(mu: Partition) -> SchurExpansion:
    """p_mu = sum over lambda of chi_lambda(mu) s_lambda."""
    n = mu.n
    return SchurExpansion(n, {lam: character(lam, mu) for lam in enumerate_partitions(n)})


@lru_cache(maxsize=None)
def frobenius_f(mu: Partition) -> SchurExpansion:
    """Average of p_{type(w^j)} over j = 0..m-1, m the order of w_mu.

    The integer sum is divided once at the end; every coefficient counts
    fixed points of a group action, so the division is exact.
    """
    if not mu.parts:
        raise DomainError("frobenius_f needs a nonempty partition")
    m = order_of(mu)
    total = SchurExpansion.zero(mu.n)
    for j in range(m):
        total = total + power_sum_to_schur(power_cycle_type(mu, j))
    try:
        return total.exact_div(m)
    except ArithmeticError as exc:
        raise InternalInvariantError(f"frobenius_f({mu}): {exc}") from None


def multiplicity(lam: Partition, mu: Partition) -> int:
    """dim of the w_mu-invariant subspace of V_lam, without symmetric functions.

    Averages chi_lam over the cyclic group, grouping the powers j by
    d = gcd(j, m): there are totient(m/d) such j, all with cycle type of w^d.
    """
    if lam.n != mu.n:
        raise DomainError(f"multiplicity needs partitions of equal size, got {lam} and {mu}")
    m = order_of(mu)
    total = sum(totient(m // d) * character(lam, power_cycle_type(mu, d)) for d in divisors(m))
    q, r = divmod(total, m)
    if r:
        raise InternalInvariantError(f"multiplicity({lam}, {mu}): {total} not divisible by {m}")
    return q


def dominates_expansion(f: SchurExpansion, g: SchurExpansion) -> bool:
    """True iff f - g is a non-negative combination of Schur functions."""
    if f.degree != g.degree:
        raise DomainError(f"degree mismatch: {f.degree} vs {g.degree}")
    return all(c > 0 for _, c in (f - g).items())


def expansion_product(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    terms: dict[Partition, int] = {}
    for a, ca in f.items():
        for b, cb in g.items():
            for lam, c in schur_product(a, b).items():
                terms[lam] = terms.get(lam, 0) + ca * cb * c
    return SchurExpansion(f.degree + g.degree, terms)


def schur_product_via_power_sums(alpha: Partition, beta: Partition) -> SchurExpansion:
    """s_alpha * s_beta computed through the power-sum basis.

    With s_alpha = sum_rho chi_alpha(rho) p_rho / z_rho and p_rho p_sigma =
    p_{rho u sigma}, the coefficient of s_lam is
    sum |C_rho| |C_sigma| chi_alpha(rho) chi_beta(sigma) chi_lam(rho u sigma) / (a! b!).
    Shares only the character kernel with the LR route.
    """
    a, b = alpha.n, beta.n
    n = a + b
    norm = factorial(a) * factorial(b)
    rows = [
        (class_size(rho) * class_size(sigma) * character(alpha, rho) * character(beta, sigma), union(rho, sigma))
        for rho in enumerate_partitions(a)
        for sigma in enumerate_partitions(b)
    ]
    terms = {}
    for lam in enumerate_partitions(n):
        total = sum(w * character(lam, cyc) for w, cyc in rows if w)
        q, r = divmod(total, norm)
        if r:
            raise InternalInvariantError(f"power-sum product coefficient at {lam} not integral")
        terms[lam] = q
    return SchurExpansion(n, terms)
