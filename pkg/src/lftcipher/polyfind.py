"""Enumeration and classification of irreducible and primitive polynomials
over GF(2).

Two independent irreducibility tests are provided: Rabin's test (the fast
path) and exhaustive trial division (the reference); both must agree for
every candidate.  A polynomial is primitive when x has multiplicative
order 2^n - 1 modulo it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2n import BinaryPoly, poly_gcd, poly_mod, poly_mulmod


@dataclass(frozen=True)
class PolyClassification:
    """Classification of one monic polynomial.

    order is the multiplicative order of x modulo the polynomial, present
    for irreducible polynomials (None for the single degenerate irreducible
    f = x, where x reduces to 0).
    """

    poly: BinaryPoly
    irreducible: bool
    primitive: bool
    order: int | None

    def __post_init__(self) -> None:
        if self.primitive and not self.irreducible:
            raise ValueError("primitive implies irreducible")


def _prime_factors(n: int) -> list[int]:
    ps = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            ps.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        ps.append(n)
    return ps


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    m = n
    count = 0
    for p in _prime_factors(n):
        if m % (p * p) == 0:
            return 0
        m //= p
        count += 1
    return -1 if count % 2 else 1


def _totient(n: int) -> int:
    r = n
    for p in _prime_factors(n):
        r -= r // p
    return r


def _order_of_x(bits: int) -> int | None:
    """Multiplicative order of x modulo an irreducible polynomial."""
    n = bits.bit_length() - 1
    x = poly_mod(2, bits)
    if x == 0:
        return None
    acc = x
    for k in range(1, 1 << n):
        if acc == 1:
            return k
        acc = poly_mulmod(acc, x, bits)
    return None


def is_irreducible_rabin(f: BinaryPoly | int) -> bool:
    """Rabin's irreducibility test.

    f of degree n is irreducible iff gcd(f, x^(2^(n/p)) - x mod f) = 1 for
    every prime p dividing n, and f divides x^(2^n) - x.  Powers of x are
    taken by repeated squaring in the quotient ring.
    """
    bits = BinaryPoly.parse(f).bits
    n = bits.bit_length() - 1
    if n < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    for p in _prime_factors(n):
        g = poly_mod(2, bits)
        for _ in range(n // p):
            g = poly_mulmod(g, g, bits)
        # g = x^(2^(n/p)) mod f;  subtract x (XOR) and take the gcd
        if poly_gcd(bits, g ^ poly_mod(2, bits)) != 1:
            return False
    g = poly_mod(2, bits)
    for _ in range(n):
        g = poly_mulmod(g, g, bits)
    return g == poly_mod(2, bits)


def is_irreducible_trial(f: BinaryPoly | int) -> bool:
    """Reference test: trial division by every polynomial of degree <= n/2."""
    bits = BinaryPoly.parse(f).bits
    n = bits.bit_length() - 1
    if n < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    for g in range(2, 1 << (n // 2 + 1)):
        if g.bit_length() < 2:
            continue
        if poly_mod(bits, g) == 0:
            return False
    return True


def count_irreducible(n: int, p: int = 2) -> int:
    """Number of monic irreducible degree-n polynomials over GF(p):
    (1/n) * sum over d | n of mu(d) * p^(n/d)."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius(d) * p ** (n // d)
    return total // n


def count_primitive(n: int, q: int = 2) -> int:
    """Number of primitive degree-n polynomials over GF(q): phi(q^n - 1) / n."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    return _totient(q**n - 1) // n


def enumerate_classified(n: int) -> list[PolyClassification]:
    """Classify monic degree-n polynomials, sorted by bitmask ascending.

    Candidates with constant term 0 are omitted for n >= 2 since they are
    divisible by x; for n = 1 the polynomial x itself is included (it is
    the one irreducible polynomial with constant term 0).
    """
    if not 1 <= n <= 16:
        raise ValueError("degree must be in 1..16")
    if n == 1:
        candidates = [0b10, 0b11]
    else:
        candidates = [f for f in range(1 << n, 1 << (n + 1)) if f & 1]
    out = []
    for bits in candidates:
        irr = is_irreducible_rabin(bits)
        order = _order_of_x(bits) if irr else None
        primitive = irr and order == (1 << n) - 1
        out.append(PolyClassification(BinaryPoly(bits), irr, primitive, order))
    return out
