"""Sparse multivariate polynomials over a field.

A monomial is a tuple of exponents.  A polynomial is an immutable mapping
monomial -> nonzero coefficient, attached to a :class:`PolynomialRing` that
fixes the number of variables, the coefficient field and the monomial order.

Monomial orders are realised as integer sort keys (larger key = larger
monomial), which keeps comparisons cheap in the Groebner basis loops.
"""

import re
from itertools import combinations_with_replacement

from .field import DEFAULT_PRIME, PrimeField

_EXP_BITS = 16
_B = 1 << _EXP_BITS


class MonomialOrder:
    """Base class; subclasses implement ``_key``."""

    name = "abstract"

    def __init__(self, nvars):
        self.nvars = nvars
        self._cache = {}

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            k = self._cache[m] = self._key(m)
        return k

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__.get("_sig") == other.__dict__.get("_sig") \
            and self.nvars == other.nvars

    def __hash__(self):
        return hash((type(self).__name__, self.nvars, self.__dict__.get("_sig")))

    def __repr__(self):
        return f"{self.name}({self.nvars})"


def _grevlex_key(m):
    k = sum(m)
    for e in reversed(m):
        k = k * _B + (_B - 1 - e)
    return k


class Grevlex(MonomialOrder):
    name = "grevlex"

    def _key(self, m):
        return _grevlex_key(m)


class Lex(MonomialOrder):
    name = "lex"

    def _key(self, m):
        k = 0
        for e in m:
            k = k * _B + e
        return k


class Elimination(MonomialOrder):
    """Block order: grevlex on ``eliminate`` first, ties broken by grevlex on the rest.

    Any monomial involving an eliminated variable is larger than every
    monomial free of them, so a Groebner basis under this order contains a
    Groebner basis of the elimination ideal.
    """

    name = "elim"

    def __init__(self, nvars, eliminate):
        super().__init__(nvars)
        self.eliminate = tuple(sorted(eliminate))
        self.keep = tuple(i for i in range(nvars) if i not in set(self.eliminate))
        self._sig = self.eliminate
        self._shift = _B ** (len(self.keep) + 1)

    def _key(self, m):
        hi = _grevlex_key(tuple(m[i] for i in self.eliminate))
        lo = _grevlex_key(tuple(m[i] for i in self.keep))
        return hi * self._shift + lo

    def __repr__(self):
        return f"elim({self.nvars}, {list(self.eliminate)})"


def make_order(name, nvars, eliminate=()):
    if name == "grevlex":
        return Grevlex(nvars)
    if name == "lex":
        return Lex(nvars)
    if name == "elim":
        return Elimination(nvars, eliminate)
    raise ValueError(f"unknown monomial order {name!r}")


class PolynomialRing:
    """k[x0, ..., x_{n-1}] with a fixed monomial order."""

    def __init__(self, nvars, field=None, order="grevlex", names=None):
        self.nvars = nvars
        self.field = field if field is not None else PrimeField(DEFAULT_PRIME)
        self.order = order if isinstance(order, MonomialOrder) else make_order(order, nvars)
        self.names = list(names) if names is not None else [f"x{i}" for i in range(nvars)]
        self.zero_mono = (0,) * nvars

    def with_order(self, order):
        return PolynomialRing(self.nvars, self.field, order, self.names)

    def compatible(self, other):
        return self.nvars == other.nvars and self.field == other.field

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self.compatible(other) and self.order == other.order

    def __hash__(self):
        return hash((self.nvars, self.field, self.order))

    def __repr__(self):
        return f"PolynomialRing({self.nvars}, {self.field!r}, {self.order!r})"

    # constructors -------------------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field(c)
        return Polynomial(self, {self.zero_mono: c} if c else {})

    def var(self, i):
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): self.field(1)})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, m, c=1):
        c = self.field(c)
        return Polynomial(self, {tuple(m): c} if c else {})

    def from_dict(self, terms):
        f = self.field
        out = {}
        for m, c in terms.items():
            c = f(c)
            if c:
                out[tuple(m)] = c
        return Polynomial(self, out)

    def linear_form(self, coeffs):
        """sum_i coeffs[i] * x_i for a dict or sequence of coefficients."""
        items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
        terms = {}
        for i, c in items:
            m = [0] * self.nvars
            m[i] = 1
            terms[tuple(m)] = c
        return self.from_dict(terms)

    def parse(self, text):
        return parse_polynomial(text, self)

    def monomials_of_degree(self, d):
        return monomials_of_degree(self.nvars, d)


def monomials_of_degree(nvars, d):
    """All exponent tuples of total degree d, in no particular order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return out


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps monomials to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # structure ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self):
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.order.key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]), reverse=True)

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self):
        comps = {}
        for m, c in self.terms.items():
            comps.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in comps.items()}

    def variables(self):
        return sorted({i for m in self.terms for i, e in enumerate(m) if e})

    def coefficient(self, m):
        return self.terms.get(tuple(m), self.ring.field(0))

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def normalized(self):
        """Monic, with the leading coefficient taken in the active order."""
        return self.monic()

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if not self.ring.compatible(other.ring):
                raise ValueError("ring mismatch")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial(self.ring, _add(self.terms, other.terms, 1, self.ring.field))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Polynomial(self.ring, _add(self.terms, other.terms, -1, self.ring.field))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        field = self.ring.field
        c = field(c)
        if not c:
            return self.ring.zero()
        p = field.p
        if p:
            return Polynomial(self.ring, {m: a * c % p for m, a in self.terms.items()})
        return Polynomial(self.ring, {m: a * c for m, a in self.terms.items()})

    def mul_term(self, mono, c=1):
        field = self.ring.field
        c = field(c)
        p = field.p
        if not c:
            return self.ring.zero()
        if p:
            t = {mono_mul(m, mono): a * c % p for m, a in self.terms.items()}
        else:
            t = {mono_mul(m, mono): a * c for m, a in self.terms.items()}
        return Polynomial(self.ring, t)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        p = self.ring.field.p
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, point):
        field = self.ring.field
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x ** e
            total += v
        return field(total)

    def substitute(self, images, target=None):
        """Ring map x_i -> images[i] (polynomials in ``target``)."""
        target = target if target is not None else images[0].ring
        out = target.zero()
        powers = {}
        for m, c in self.terms.items():
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    term = term * powers[key]
            out = out + term
        return out

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def _add(a, b, sign, field):
    p = field.p
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + sign * c
        if p:
            v %= p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


# text syntax ---------------------------------------------------------------

def format_monomial(m, names):
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(names[i])
        elif e > 1:
            parts.append(f"{names[i]}^{e}")
    return "*".join(parts)


def format_polynomial(f):
    if not f.terms:
        return "0"
    field = f.ring.field
    out = []
    for m, c in f.sorted_terms():
        c = field.to_signed(c)
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m, f.ring.names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


def parse_polynomial(text, ring):
    """Parse the plain-text syntax, e.g. ``"3*x0^2*x5 - x1*x2"``.

    Only sums of terms are accepted (no parentheses); coefficients may be
    integers or fractions ``a/b``.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    index = {name: i for i, name in enumerate(ring.names)}
    field = ring.field
    terms = {}
    pos = 0
    for match in _TERM_RE.finditer(s):
        if match.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = match.end()
        sign, body = match.groups()
        coeff = 1
        mono = [0] * ring.nvars
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"cannot parse polynomial {text!r}")
            if factor[0].isdigit():
                if "/" in factor:
                    num, den = factor.split("/")
                    coeff = coeff * field(int(num)) * field.inv(field(int(den)))
                else:
                    coeff = coeff * int(factor)
                continue
            name, _, exp = factor.partition("^")
            if name not in index:
                raise ValueError(f"unknown variable {name!r} in {text!r}")
            mono[index[name]] += int(exp) if exp else 1
        if sign == "-":
            coeff = -coeff
        m = tuple(mono)
        terms[m] = terms.get(m, 0) + coeff
    if pos != len(s):
        raise ValueError(f"cannot parse polynomial {text!r}")
    return ring.from_dict(terms)


def parse_ideal_text(text, ring):
    """Newline-separated polynomials; ``#`` starts a comment, commas are allowed."""
    polys = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        for chunk in line.split(","):
            chunk = chunk.strip()
            if chunk:
                polys.append(parse_polynomial(chunk, ring))
    return polys


def format_ideal_text(polys, header=None):
    lines = [f"# {h}" for h in (header or [])]
    lines.extend(format_polynomial(f) for f in polys)
    return "\n".join(lines) + "\n"
