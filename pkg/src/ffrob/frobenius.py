"""Frobenius-specific ideal operations.

Bracket powers, Frobenius roots in polynomial rings, preimages under the
Frobenius endomorphism (hence an exact characteristic-p nilradical and a
reducedness test), and a bounded Frobenius-closure search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import RingMismatchError, UnsupportedOperationError
from .groebner import elimination_ideal
from .ideals import Ideal, QuotientRing
from .poly import MonomialOrder, Polynomial, PolyRing


def bracket_power(I: Ideal, e: int) -> Ideal:
    """I^[p^e]: raise each chosen generator to the p^e power.

    Generating-set independence is a theorem in characteristic p (the
    Frobenius is additive), so only the presented generators are raised;
    Q rides along through the lift as usual."""
    if e < 0:
        raise ValueError("Frobenius exponent must be nonnegative")
    return Ideal(I.ring, [g.frobenius_power(e) for g in I.gens])


def frobenius_root(I: Ideal, e: int) -> Ideal:
    """The smallest ideal J with I ⊆ J^[p^e]; polynomial ambient only.

    Each generator decomposes uniquely as f = Σ_μ g_μ^q · μ over the
    monomials μ with all exponents < q, because the polynomial ring is
    free over its subring of q-th powers; the g_μ generate the root.
    Coefficients stay put since the Frobenius fixes F_p."""
    if not I.ring.is_polynomial_ring:
        raise UnsupportedOperationError(
            "Frobenius roots are only defined over a polynomial ambient ring"
        )
    if e < 1:
        raise ValueError("Frobenius root exponent must be at least 1")
    q = I.ring.field.p**e
    pieces = {}
    for f in I.gens:
        per_mu = {}
        for m, c in f.terms:
            base = tuple(x // q for x in m)
            mu = tuple(x % q for x in m)
            bucket = per_mu.setdefault(mu, {})
            bucket[base] = (bucket.get(base, 0) + c) % I.ring.field.p
        for mu, bucket in per_mu.items():
            g = I.ring.ambient.poly(bucket)
            if not g.is_zero:
                pieces[g] = None
    return Ideal(I.ring, list(pieces))


def frobenius_kernel_preimage(J: Ideal) -> Ideal:
    """{f : f^p ∈ J} for J in a polynomial ambient ring.

    Works in F_p[x.., y..] with the graph ideal J(x) + (y_i - x_i^p),
    eliminates the x block, and reads the answer off in the y variables."""
    if not J.ring.is_polynomial_ring:
        raise UnsupportedOperationError(
            "Frobenius kernel preimages need a polynomial ambient ring"
        )
    S = J.ring.ambient
    n = S.nvars
    p = S.field.p
    fresh = tuple("__f_" + name for name in S.names)
    big = PolyRing(S.field, S.names + fresh, MonomialOrder.block(n))

    def lift(f):
        return big.poly({m + (0,) * n: c for m, c in f.terms})

    gens = [lift(g) for g in J.gens]
    for i in range(n):
        xi_p = [0] * (2 * n)
        xi_p[i] = p
        yi = [0] * (2 * n)
        yi[n + i] = 1
        gens.append(big.poly({tuple(yi): 1, tuple(xi_p): p - 1}))
    downstairs = elimination_ideal(gens, n)
    out = [S.poly({m[n:]: c for m, c in g.terms}) for g in downstairs]
    return Ideal(J.ring, out)


@dataclass(frozen=True)
class NilradicalResult:
    """Radical of Q plus the stabilization data of the kernel iteration."""

    ideal: Ideal
    steps: int
    q: int  # p^steps; the nilradical's bracket power at q lands in Q


def nilradical_char_p(ring: QuotientRing) -> NilradicalResult:
    """Radical of Q by iterating Frobenius kernel preimages.

    f is nilpotent mod Q iff f^(p^e) ∈ Q for some e, so the ascending
    chain Q ⊆ φ^-1(Q) ⊆ φ^-2(Q) ⊆ ... stabilizes at the nilradical."""
    S = QuotientRing(ring.field, ring.names, (), order=ring.ambient.order)
    J = S.ideal(list(ring.quotient_gens))
    steps = 0
    while True:
        K = frobenius_kernel_preimage(J)
        if K == J:
            break
        J = K
        steps += 1
    lifted = Ideal(ring, [g for g in J.groebner])
    return NilradicalResult(lifted, steps, ring.field.p**steps)


def is_reduced(ring: QuotientRing) -> bool:
    """True iff R has no nonzero nilpotents (Frobenius is injective)."""
    S = QuotientRing(ring.field, ring.names, (), order=ring.ambient.order)
    J = S.ideal(list(ring.quotient_gens))
    return frobenius_kernel_preimage(J) == J


def frobenius_closure_test(x: Polynomial, I: Ideal, e_max: int):
    """Least e ≤ e_max with x^(p^e) ∈ I^[p^e], if any.

    Returns (True, e) at the first witness, (False, None) otherwise.
    A miss is conclusive only up to the bound: x may still lie in the
    Frobenius closure via some larger exponent."""
    if x.ring != I.ring.ambient:
        raise RingMismatchError("element lives in a different ring")
    if e_max < 0:
        raise ValueError("e_max must be nonnegative")
    for e in range(e_max + 1):
        if bracket_power(I, e).contains(x.frobenius_power(e)):
            return True, e
    return False, None


@dataclass(frozen=True)
class ClosureVerdict:
    closed: bool  # True means CLOSED_UP_TO_BOUNDS, not a proof of closure
    witness: Polynomial | None = None
    witness_exponent: int | None = None

    @property
    def label(self) -> str:
        return "CLOSED_UP_TO_BOUNDS" if self.closed else "NOT_CLOSED"


# cap on exhaustive coefficient enumeration; beyond it fall back to
# single monomials and two-monomial combinations
_ENUM_CAP = 4096


def _closure_candidates(ring: QuotientRing, degree_bound: int):
    S = ring.ambient
    monos = []
    for exps in itertools.product(range(degree_bound + 1), repeat=S.nvars):
        if 0 < sum(exps) <= degree_bound:
            monos.append(exps)
    monos.sort(key=S.order.key)
    p = ring.field.p
    if p ** len(monos) <= _ENUM_CAP:
        for coeffs in itertools.product(range(p), repeat=len(monos)):
            f = S.poly({m: c for m, c in zip(monos, coeffs)})
            if not f.is_zero:
                yield f
    else:
        for m in monos:
            yield S.monomial(m)
        for (m1, m2) in itertools.combinations(monos, 2):
            for c1 in range(1, p):
                for c2 in range(1, p):
                    yield S.poly({m1: c1, m2: c2})


def is_frobenius_closed(I: Ideal, e_max: int, degree_bound: int) -> ClosureVerdict:
    """Bounded search for x ∉ I with x^(p^e) ∈ I^[p^e] for some e ≤ e_max.

    A hit certifies that I is not Frobenius closed; no hit only says the
    search budget found nothing."""
    if e_max <= 0 or degree_bound <= 0:
        raise ValueError("bounds must be positive")
    if I.is_unit:
        return ClosureVerdict(True)
    for x in _closure_candidates(I.ring, degree_bound):
        if I.contains(x):
            continue
        hit, e = frobenius_closure_test(x, I, e_max)
        if hit:
            return ClosureVerdict(False, x, e)
    return ClosureVerdict(True)
