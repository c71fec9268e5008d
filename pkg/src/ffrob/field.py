"""Exact arithmetic in the prime field F_p.

Elements are plain Python ints kept as least nonnegative residues in
[0, p), so equality of coefficients is integer equality.  p is capped
below 2^31: products then fit comfortably in machine words before
reduction, and every ring in practice uses tiny p anyway.
"""

from __future__ import annotations

from .errors import FFrobError

_MR_BASES = (2, 3, 5, 7)  # deterministic Miller-Rabin witnesses for n < 3_215_031_751


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 2^31."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n == b:
            return True
        if n % b == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p, with canonical representatives 0..p-1."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < 2**31:
            raise FFrobError(f"characteristic must be an integer in [2, 2^31), got {p!r}")
        if not is_prime(p):
            raise FFrobError(f"characteristic {p} is not prime")
        self.p = p

    def normalize(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError on a = 0."""
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            raise FFrobError("negative exponent; use inv() first")
        return pow(a, n, self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"F_{self.p}"
