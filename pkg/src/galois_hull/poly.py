"""Polynomials over a prime field GF(p), stored as coefficient lists low-to-high.

The zero polynomial is ``[]``; every other polynomial has a nonzero last entry.
Only what irreducibility testing and modulus search need lives here.
"""

from __future__ import annotations

import itertools
from typing import Iterator, List, Sequence

Poly = List[int]


def trim(a: Sequence[int]) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def sub(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return trim(out)


def divmod_(a: Sequence[int], b: Sequence[int], p: int) -> tuple[Poly, Poly]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(a)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = r[-1] * inv_lead % p
        q[shift] = c
        for i, bi in enumerate(b):
            r[i + shift] = (r[i + shift] - c * bi) % p
        r = trim(r)
    return trim(q), r


def mod(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    return divmod_(a, b, p)[1]


def gcd(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def powmod(base: Sequence[int], e: int, modulus: Sequence[int], p: int) -> Poly:
    result: Poly = [1]
    b = mod(base, modulus, p)
    while e:
        if e & 1:
            result = mod(mul(result, b, p), modulus, p)
        b = mod(mul(b, b, p), modulus, p)
        e >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test: f of degree m is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= m/2."""
    f = trim(f)
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        xp = powmod(xp, p, f, p)
        if len(gcd(f, sub(xp, x, p), p)) > 1:
            return False
    return True


def monic_polys(degree: int, p: int) -> Iterator[Poly]:
    """Monic polynomials of ``degree`` in lexicographic order, lowest coefficient compared first."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def smallest_irreducible(degree: int, p: int) -> Poly:
    for f in monic_polys(degree, p):
        if is_irreducible(f, p):
            return f
    raise AssertionError("an irreducible polynomial exists in every degree")


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorisation; adequate for the orders met here."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
