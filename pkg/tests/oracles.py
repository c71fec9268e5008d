"""Independent brute-force oracles used to freeze expected test values.

Nothing here touches Groebner machinery: membership is exhaustive
linear algebra over F_p, the cusp oracle works in the numerical
semigroup <2, 3>, and the Frobenius-root oracle enumerates monomial
staircases.  The point is that these agree with the main code paths
while sharing none of them.
"""

from __future__ import annotations

import itertools


def monomials_up_to(nvars: int, degree: int):
    return [
        e
        for e in itertools.product(range(degree + 1), repeat=nvars)
        if sum(e) <= degree
    ]


def span_membership(f, gens, p: int, degree_bound: int) -> bool:
    """Is f an F_p-combination of monomial multiples of the gens?

    Sound for yes-answers; a no-answer is exact whenever every witness
    combination only needs multipliers of degree <= degree_bound (true
    for the graded cases this oracle is used on, with a generous bound).
    Polynomials are {exponent-tuple: coeff} dicts.
    """
    if not f:
        return True
    nvars = len(next(iter(f)))
    rows = []
    for g in gens:
        if not g:
            continue
        for m in monomials_up_to(nvars, degree_bound):
            prod = {}
            for gm, gc in g.items():
                t = tuple(a + b for a, b in zip(gm, m))
                prod[t] = (prod.get(t, 0) + gc) % p
            rows.append({k: v for k, v in prod.items() if v})
    # Gaussian elimination over F_p on the sparse rows, then reduce f
    basis = []  # list of (pivot monomial, row dict) with unit pivot
    for row in rows:
        row = _reduce_row(row, basis, p)
        if row:
            piv = max(row)
            inv = pow(row[piv], p - 2, p)
            row = {k: v * inv % p for k, v in row.items()}
            basis.append((piv, row))
    return not _reduce_row(dict(f), basis, p)


def _reduce_row(row, basis, p):
    for piv, brow in basis:
        c = row.get(piv)
        if c:
            for k, v in brow.items():
                nv = (row.get(k, 0) - c * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return row


class CuspSemigroup:
    """The cuspidal cubic F_2[x,y]/(y^2+x^3) as F_2[t^2, t^3].

    x maps to t^2, y to t^3; the ring is spanned by t^k for k in the
    numerical semigroup {0, 2, 3, 4, ...}.  Monomial ideals downstairs
    are determined by their exponent sets, truncated at `bound`.
    """

    def __init__(self, bound: int = 40):
        self.bound = bound
        self.semigroup = {0} | set(range(2, bound + 1))

    def ideal(self, t_exponents):
        out = set()
        for a in t_exponents:
            out |= {a + s for s in self.semigroup if a + s <= self.bound}
        return out

    def xy_exponent(self, i: int, j: int) -> int:
        return 2 * i + 3 * j

    def intersect(self, A, B):
        return A & B

    def colon(self, A, c: int):
        return {k for k in self.semigroup if k + c <= self.bound and k + c in A}

    def bracket(self, t_exponents, q: int):
        return self.ideal([q * a for a in t_exponents])


def monomial_root_expected(exponent_vectors, q: int):
    """Componentwise floor-division oracle for monomial Frobenius roots,
    validated separately by staircase enumeration."""
    return sorted({tuple(a // q for a in v) for v in exponent_vectors})


def monomial_antichains(nvars: int, degree: int):
    """All antichains (minimal generator sets of monomial ideals) among
    the monomials of total degree <= degree."""
    monos = [m for m in monomials_up_to(nvars, degree) if sum(m) > 0] + [
        (0,) * nvars
    ]
    out = []
    for r in range(1, len(monos) + 1):
        for combo in itertools.combinations(monos, r):
            if all(
                not _mono_divides(a, b)
                for a, b in itertools.permutations(combo, 2)
            ):
                out.append(combo)
    return out


def _mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_ideal_contains(gens, m) -> bool:
    return any(_mono_divides(g, m) for g in gens)


def mono_ideal_subset(gens_a, gens_b) -> bool:
    return all(mono_ideal_contains(gens_b, g) for g in gens_a)
