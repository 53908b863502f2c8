"""Small integer helpers; arguments here never exceed a few thousand."""

from __future__ import annotations


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, primes ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(n).values())


def is_prime_power(n: int) -> bool:
    """True for ``p**k`` with ``k >= 0`` (so 1 counts)."""
    return len(factorize(n)) <= 1
