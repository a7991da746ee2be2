"""Ideals of a polynomial ring: cached Groebner bases, sums, products, intersections."""

from .groebner import Reducer, groebner_basis
from .poly import Elimination, PolynomialRing


class Ideal:
    """An ideal given by generators.

    The reduced Groebner basis is computed lazily and cached per monomial
    order (by default the ring's own order).
    """

    def __init__(self, ring, gens=(), max_basis=None):
        self.ring = ring
        gens = [g for g in gens if g]
        for g in gens:
            if not g.ring.compatible(ring):
                raise ValueError("ring mismatch")
        self.gens = gens
        self.max_basis = max_basis
        self._gb = {}
        self._reducer = {}

    @classmethod
    def from_basis(cls, ring, basis):
        """Wrap an already reduced Groebner basis (in ``ring``'s order)."""
        I = cls(ring, basis)
        I._gb[ring.order] = list(basis)
        return I

    def __repr__(self):
        return f"Ideal({len(self.gens)} generators in {self.ring.nvars} variables)"

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def is_zero(self):
        return not self.gens

    def groebner_basis(self, order=None):
        order = order or self.ring.order
        if order not in self._gb:
            ring = self.ring if order == self.ring.order else self.ring.with_order(order)
            gens = [ring.from_dict(g.terms) for g in self.gens]
            self._gb[order] = groebner_basis(gens, ring=ring, max_basis=self.max_basis) if gens else []
        return self._gb[order]

    def reducer(self):
        order = self.ring.order
        if order not in self._reducer:
            self._reducer[order] = Reducer(self.groebner_basis(), self.ring)
        return self._reducer[order]

    def normal_form(self, f):
        return self.reducer()(f)

    def contains(self, f):
        return not self.normal_form(f)

    is_member = contains

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and _same_basis(self.groebner_basis(), other.groebner_basis())

    def __hash__(self):
        return id(self)

    def leading_monomials(self):
        return [g.lm for g in self.groebner_basis()]

    def minimal_generators(self):
        """A minimal homogeneous generating set, taken from the reduced Groebner basis.

        Degree by degree, basis elements are reduced modulo the ideal of the
        generators already kept and an independent subset of the remainders
        is kept.
        """
        if not self.is_homogeneous():
            raise ValueError("minimal generators need a homogeneous ideal")
        F = self.ring.field
        key = self.ring.order.key
        kept = []
        basis = sorted(self.groebner_basis(), key=lambda g: g.degree())
        for d in sorted({g.degree() for g in basis}):
            red = Reducer(groebner_basis(kept, ring=self.ring), self.ring) if kept else None
            rows = {}  # pivot monomial -> monic row
            for g in (b for b in basis if b.degree() == d):
                v = dict(red.reduce_terms(dict(g.terms)) if red else g.terms)
                for piv in sorted(rows, key=key, reverse=True):
                    c = v.get(piv)
                    if c:
                        for m, a in rows[piv].items():
                            w = F(v.get(m, 0) - c * a)
                            if w:
                                v[m] = w
                            else:
                                v.pop(m, None)
                if v:
                    piv = max(v, key=key)
                    inv = F.inv(v[piv])
                    rows[piv] = {m: F(a * inv) for m, a in v.items()}
                    kept.append(g)
        return kept

    def degree_slice(self, d):
        """Generators of degree d (for homogeneous ideals)."""
        return [g for g in self.gens if g.degree() == d]


def _same_basis(a, b):
    return sorted(frozenset(g.terms.items()) for g in a) == sorted(frozenset(g.terms.items()) for g in b) \
        if len(a) == len(b) else False


def ideal_sum(I, J):
    _check(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I, J):
    _check(I, J)
    gens = []
    seen = set()
    for f in I.gens:
        for g in J.gens:
            h = (f * g).monic()
            k = frozenset(h.terms.items())
            if h and k not in seen:
                seen.add(k)
                gens.append(h)
    return Ideal(I.ring, gens)


def ideal_intersection(I, J, max_basis=None):
    """I cap J as the elimination ideal of t*I + (1 - t)*J.

    The auxiliary variable t is given degree zero in the standard grading,
    so homogeneous inputs stay homogeneous in x; the block order puts t first.
    """
    _check(I, J)
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    n = ring.nvars
    order = Elimination(n + 1, [n])
    big = PolynomialRing(n + 1, ring.field, order, ring.names + ["_t"])

    def lift(f, times_t, sign=1):
        out = {}
        for m, c in f.terms.items():
            if times_t:
                out[m + (1,)] = sign * c
            else:
                out[m + (0,)] = c
        return out

    gens = []
    for f in I.gens:
        gens.append(big.from_dict(lift(f, True)))
    for g in J.gens:
        d = lift(g, False)
        for m, c in g.terms.items():
            key = m + (1,)
            d[key] = d.get(key, 0) - c
        gens.append(big.from_dict(d))
    basis = groebner_basis(gens, ring=big, max_basis=max_basis)
    kept = [ring.from_dict({m[:n]: c for m, c in g.terms.items()}) for g in basis if g.lm[n] == 0]
    out = Ideal(ring, kept)
    if ring.order.name == "grevlex":
        # t-free part of a reduced basis is reduced for grevlex on x
        out._gb[ring.order] = sorted(kept, key=lambda g: ring.order.key(g.lm), reverse=True)
    return out


def intersect_all(ideals, max_basis=None):
    """Iterated pairwise intersection, reducing to a Groebner basis after each step."""
    ideals = list(ideals)
    if not ideals:
        raise ValueError("nothing to intersect")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = ideal_intersection(acc, J, max_basis=max_basis)
        acc = Ideal.from_basis(acc.ring, acc.groebner_basis())
    return acc


def _check(I, J):
    if not I.ring.compatible(J.ring):
        raise ValueError("ring mismatch")
