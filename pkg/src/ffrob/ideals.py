"""Ideal arithmetic in polynomial rings and their quotients.

An ideal of R = S/Q is always handled through its lift: the ideal of the
ambient polynomial ring S generated by the chosen generators together
with Q.  Intersections and colons of lifts correspond exactly to the
same operations downstairs, so all the work happens in S via Groebner
bases; the reduced basis of the lift is the canonical form used for
equality.
"""

from __future__ import annotations

import threading

from .errors import FFrobError, RingMismatchError
from .field import PrimeField
from .groebner import buchberger, normal_form, poly_divexact, poly_ideal_intersect
from .poly import MonomialOrder, Polynomial, PolyRing


class QuotientRing:
    """F_p[vars]/Q; Q empty means the polynomial ring itself."""

    def __init__(self, field: PrimeField, names, quotient_gens=(), order=None):
        self.ambient = PolyRing(field, names, order)
        gens = []
        for g in quotient_gens:
            if g.ring != self.ambient:
                g = g.convert(self.ambient)
            if not g.is_zero:
                gens.append(g)
        self.quotient_gens = tuple(gens)
        self._qgb = buchberger(self.quotient_gens)
        if self._qgb and self._qgb[0].total_degree() == 0:
            raise FFrobError("quotient ideal is the unit ideal; the ring is trivial")

    @property
    def field(self) -> PrimeField:
        return self.ambient.field

    @property
    def names(self):
        return self.ambient.names

    @property
    def is_polynomial_ring(self) -> bool:
        return not self.quotient_gens

    @property
    def quotient_basis(self):
        """Reduced Groebner basis of Q in the ambient ring."""
        return self._qgb

    def ideal(self, gens) -> "Ideal":
        return Ideal(self, gens)

    def zero_ideal(self) -> "Ideal":
        return Ideal(self, [])

    def unit_ideal(self) -> "Ideal":
        return Ideal(self, [self.ambient.one()])

    def reduce(self, f: Polynomial) -> Polynomial:
        """Canonical representative of f modulo Q."""
        return normal_form(f, self._qgb)

    def describe(self) -> str:
        base = f"F_{self.field.p}[{','.join(self.names)}]"
        if self.is_polynomial_ring:
            return base
        return base + "/(" + ", ".join(str(g) for g in self.quotient_gens) + ")"

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and self.ambient == other.ambient
            and self._qgb == other._qgb
        )

    def __hash__(self):
        return hash((self.ambient, tuple(self._qgb)))

    def __repr__(self):
        return self.describe()


class Ideal:
    """An ideal of a QuotientRing, presented by lift generators.

    The canonical form is the reduced Groebner basis of (gens + Q) in
    the ambient ring, computed lazily and cached; the cache fill is
    guarded by a lock so concurrent first access is safe.
    """

    def __init__(self, ring: QuotientRing, gens):
        self.ring = ring
        converted = []
        for g in gens:
            if g.ring != ring.ambient:
                raise RingMismatchError(
                    f"generator {g!r} does not live in {ring.ambient!r}"
                )
            if not g.is_zero:
                converted.append(g)
        self.gens = tuple(converted)
        self._gb = None
        self._lock = threading.Lock()

    @property
    def groebner(self):
        """Reduced Groebner basis of the lift (generators plus Q)."""
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = buchberger(list(self.gens) + list(self.ring.quotient_gens))
        return self._gb

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring.ambient:
            raise RingMismatchError("element lives in a different ring")
        return normal_form(f, self.groebner).is_zero

    def is_subset(self, other: "Ideal") -> bool:
        self._check_ring(other)
        gb = other.groebner
        return all(normal_form(g, gb).is_zero for g in self.groebner)

    @property
    def is_unit(self) -> bool:
        gb = self.groebner
        return bool(gb) and gb[-1].total_degree() == 0

    @property
    def is_zero(self) -> bool:
        """Zero as an ideal of R, i.e. the lift equals Q."""
        return self.groebner == self.ring.quotient_basis

    def _check_ring(self, other: "Ideal"):
        if self.ring != other.ring:
            raise RingMismatchError("ideals live in different rings")

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal(self.ring, self.gens + other.gens)

    def intersect(self, other: "Ideal") -> "Ideal":
        """I ∩ J via the auxiliary-variable elimination t·I + (1-t)·J.

        Both lifts include Q, so the result is the lift of the
        intersection in R."""
        self._check_ring(other)
        S = self.ring.ambient
        q = list(self.ring.quotient_gens)
        out = poly_ideal_intersect(S, list(self.gens) + q, list(other.gens) + q)
        return Ideal(self.ring, out)

    def colon(self, x: Polynomial) -> "Ideal":
        """(I : x) = {f : f·x ∈ I} as an ideal of R.

        Computed in the ambient ring as (lift ∩ (x)) / x; every
        generator of the intersection is an honest multiple of x there,
        so exact division applies.  x that is zero in R yields the unit
        ideal (x ∈ Q makes x itself land in the intersection)."""
        if x.ring != self.ring.ambient:
            raise RingMismatchError("element lives in a different ring")
        if x.is_zero:
            return self.ring.unit_ideal()
        S = self.ring.ambient
        lift = list(self.gens) + list(self.ring.quotient_gens)
        meet = poly_ideal_intersect(S, lift, [x])
        return Ideal(self.ring, [poly_divexact(g, x) for g in meet])

    def colon_ideal(self, other: "Ideal") -> "Ideal":
        """(I : J) = ∩_j (I : g_j) over the generators of J."""
        self._check_ring(other)
        if not other.gens:
            return self.ring.unit_ideal()
        result = None
        for g in other.gens:
            piece = self.colon(g)
            result = piece if result is None else result.intersect(piece)
        return result

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner == other.groebner

    def __hash__(self):
        return hash((self.ring, tuple(self.groebner)))

    def __repr__(self):
        return "(" + ", ".join(str(g) for g in self.groebner) + ")"
