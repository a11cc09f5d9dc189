"""Small exact number-theory helpers: divisors, totient, Moebius, Ramanujan sums.

Arguments stay below a few thousand (lcm of the parts of a partition of
n <= 30), so trial division is all that is needed.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import DomainError


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``n >= 1`` as ``((p, e), ...)`` with p ascending."""
    if n < 1:
        raise DomainError(f"factorize needs a positive integer, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def ramanujan_sum(q: int, k: int) -> int:
    """c_q(k): sum of the k-th powers of the primitive q-th roots of unity.

    Uses c_q(k) = sum over d | gcd(q, k) of d * mobius(q / d). With k = 0
    this is the totient of q.
    """
    if q < 1:
        raise DomainError(f"ramanujan_sum needs q >= 1, got {q}")
    return sum(d * mobius(q // d) for d in divisors(gcd(q, k)))

