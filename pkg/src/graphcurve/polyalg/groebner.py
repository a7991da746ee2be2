"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

Internally monomials are packed into Python ints, 16 bits per variable with
the top bit of each field kept free, so that monomial multiplication is an
integer addition and divisibility is a single masked subtraction.  The public
functions take and return :class:`Polynomial` objects.
"""

import heapq
import itertools

from .poly import Polynomial

_W = 16
_FIELD = (1 << _W) - 1


class GroebnerAborted(RuntimeError):
    """Raised when a basis computation exceeds a resource cap or is cancelled."""


class _Packer:
    def __init__(self, nvars):
        self.n = nvars
        self.guard = sum(1 << (_W * i + _W - 1) for i in range(nvars))
        self._unpack = {}

    def pack(self, m):
        v = 0
        for i, e in enumerate(m):
            v |= e << (_W * i)
        return v

    def unpack(self, v):
        m = self._unpack.get(v)
        if m is None:
            m = self._unpack[v] = tuple((v >> (_W * i)) & _FIELD for i in range(self.n))
        return m

    def divides(self, a, b):
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a, b):
        ua, ub = self.unpack(a), self.unpack(b)
        return self.pack(x if x > y else y for x, y in zip(ua, ub))

    def coprime(self, a, b):
        ua, ub = self.unpack(a), self.unpack(b)
        return not any(x and y for x, y in zip(ua, ub))

    def degree(self, a):
        return sum(self.unpack(a))


class _Engine:
    """Polynomials as {packed monomial: coeff} dicts over one ring."""

    def __init__(self, ring):
        self.ring = ring
        self.packer = _Packer(ring.nvars)
        self.field = ring.field
        self.p = ring.field.p
        order = ring.order
        unpack = self.packer.unpack
        cache = {}

        def key(v):
            k = cache.get(v)
            if k is None:
                k = cache[v] = order.key(unpack(v))
            return k

        self.key = key

    def to_dict(self, f):
        pack = self.packer.pack
        return {pack(m): c for m, c in f.terms.items()}

    def to_poly(self, d):
        unpack = self.packer.unpack
        return Polynomial(self.ring, {unpack(m): c for m, c in d.items()})

    def lm(self, d):
        return max(d, key=self.key)

    def monic(self, d):
        lm = self.lm(d)
        c = d[lm]
        if c == 1:
            return d
        inv = self.field.inv(c)
        p = self.p
        if p:
            return {m: a * inv % p for m, a in d.items()}
        return {m: a * inv for m, a in d.items()}

    def reduce(self, d, basis, full=True):
        """Remainder of d modulo ``basis`` (list of (lm, monic dict)).

        With ``full=False`` only the leading term is reduced repeatedly.
        """
        if not d:
            return {}
        p = self.p
        key = self.key
        divides = self.packer.divides
        f = dict(d)
        heap = [(-key(m), m) for m in f]
        heapq.heapify(heap)
        rem = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, 0)
            if not c:
                continue
            for glm, g in basis:
                if divides(glm, m):
                    q = m - glm
                    for gm, gc in g.items():
                        if gm == glm:
                            continue
                        mm = gm + q
                        v = f.get(mm)
                        if v is None:
                            heapq.heappush(heap, (-key(mm), mm))
                            v = 0
                        v = v - c * gc
                        if p:
                            v %= p
                        f[mm] = v
                    break
            else:
                rem[m] = c
                if not full:
                    for mm, v in f.items():
                        if v:
                            rem[mm] = v
                    return rem
        return rem

    def spoly(self, f, flm, g, glm):
        lcm = self.packer.lcm(flm, glm)
        qf, qg = lcm - flm, lcm - glm
        p = self.p
        out = {}
        for m, c in f.items():
            if m != flm:
                out[m + qf] = c
        for m, c in g.items():
            if m == glm:
                continue
            mm = m + qg
            v = out.get(mm, 0) - c
            if p:
                v %= p
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
        return out


def _buchberger(engine, gens, max_basis=None, should_stop=None):
    packer = engine.packer
    divides = packer.divides
    lcm = packer.lcm
    coprime = packer.coprime
    key = engine.key

    polys = []  # list of (lm, dict)
    G = []  # active indices
    pairs = {}  # (i, j) -> lcm
    heap = []
    counter = itertools.count()

    def push(i, j, l):
        pairs[(i, j)] = l
        heapq.heappush(heap, (packer.degree(l), key(l), next(counter), i, j))

    def update(h):
        hlm = polys[h][0]
        C = [(g, lcm(hlm, polys[g][0])) for g in G]
        D = []
        while C:
            g1, l1 = C.pop()
            if coprime(hlm, polys[g1][0]):
                D.append((g1, l1, True))
                continue
            if any(divides(l2, l1) for _, l2 in C) or any(divides(l2, l1) for _, l2, _ in D):
                continue
            D.append((g1, l1, False))
        for (i, j), l in list(pairs.items()):
            if divides(hlm, l) and lcm(polys[i][0], hlm) != l and lcm(polys[j][0], hlm) != l:
                del pairs[(i, j)]
        for g1, l1, cop in D:
            if not cop:
                push(g1, h, l1)
        G[:] = [g for g in G if not divides(hlm, polys[g][0])] + [h]

    def add(d):
        d = engine.monic(d)
        polys.append((engine.lm(d), d))
        update(len(polys) - 1)
        if max_basis is not None and len(G) > max_basis:
            raise GroebnerAborted(f"basis size exceeded {max_basis}")

    for d in gens:
        if d:
            r = engine.reduce(d, [polys[g] for g in G])
            if r:
                add(r)

    while heap:
        _, _, _, i, j = heapq.heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        if should_stop is not None and should_stop():
            raise GroebnerAborted("cancelled")
        (ilm, fi), (jlm, fj) = polys[i], polys[j]
        s = engine.spoly(fi, ilm, fj, jlm)
        r = engine.reduce(s, [polys[g] for g in G])
        if r:
            add(r)

    # interreduce into the reduced basis
    basis = [polys[g] for g in G]
    basis.sort(key=lambda t: key(t[0]))
    out = []
    for idx, (glm, g) in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        tail = {m: c for m, c in g.items() if m != glm}
        r = engine.reduce(tail, others)
        r[glm] = 1
        out.append((glm, r))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return out


def groebner_basis(polys, ring=None, max_basis=None, should_stop=None):
    """Reduced Groebner basis (monic, sorted by decreasing leading monomial)."""
    polys = list(polys)
    if ring is None:
        if not polys:
            raise ValueError("need a ring for an empty generator list")
        ring = polys[0].ring
    engine = _Engine(ring)
    gens = [engine.to_dict(f) for f in polys if f.ring.compatible(ring)]
    if len(gens) != len(polys):
        raise ValueError("ring mismatch")
    basis = _buchberger(engine, gens, max_basis=max_basis, should_stop=should_stop)
    return [engine.to_poly(d) for _, d in basis]


def reduce_polynomial(f, basis, ring=None):
    """Normal form of f modulo a Groebner basis (full reduction)."""
    ring = ring or f.ring
    engine = _Engine(ring)
    gb = []
    for g in basis:
        d = engine.monic(engine.to_dict(g))
        gb.append((engine.lm(d), d))
    return engine.to_poly(engine.reduce(engine.to_dict(f), gb))


class Reducer:
    """Reusable normal-form computer for a fixed Groebner basis."""

    def __init__(self, basis, ring):
        self.engine = _Engine(ring)
        self.ring = ring
        self.basis = []
        for g in basis:
            d = self.engine.monic(self.engine.to_dict(g))
            self.basis.append((self.engine.lm(d), d))

    def __call__(self, f):
        e = self.engine
        return e.to_poly(e.reduce(e.to_dict(f), self.basis))

    def reduce_terms(self, terms):
        """Normal form of a raw {monomial tuple: coeff} dict, returned the same way."""
        e = self.engine
        pack = e.packer.pack
        unpack = e.packer.unpack
        r = e.reduce({pack(m): c for m, c in terms.items()}, self.basis)
        return {unpack(m): c for m, c in r.items()}


def s_polynomial(f, g):
    engine = _Engine(f.ring)
    df, dg = engine.monic(engine.to_dict(f)), engine.monic(engine.to_dict(g))
    return engine.to_poly(engine.spoly(df, engine.lm(df), dg, engine.lm(dg)))


def is_groebner(basis, ring=None):
    """Buchberger's criterion checked on every pair (no shortcuts)."""
    basis = [g for g in basis if g]
    if not basis:
        return True
    ring = ring or basis[0].ring
    engine = _Engine(ring)
    gb = []
    for g in basis:
        d = engine.monic(engine.to_dict(g))
        gb.append((engine.lm(d), d))
    for (alm, a), (blm, b) in itertools.combinations(gb, 2):
        if engine.reduce(engine.spoly(a, alm, b, blm), gb):
            return False
    return True


def is_reduced(basis):
    """Monic, no term of any element divisible by another element's leading monomial."""
    from .poly import mono_divides
    for g in basis:
        if g.lc != 1:
            return False
    for i, g in enumerate(basis):
        for j, h in enumerate(basis):
            if i != j and any(mono_divides(h.lm, m) for m in g.terms):
                return False
    return True
