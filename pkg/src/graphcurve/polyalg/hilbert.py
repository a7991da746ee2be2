"""Hilbert series of graded quotients S/I.

The series of S/I equals that of S/in(I), and for a monomial ideal the
numerator over (1-t)^n is computed by the pivot recursion

    N(M) = N(M + (p)) + t^deg(p) * N(M : p),

bottoming out when the generators are pairwise coprime.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _shift(a, k):
    return [0] * k + list(a) if a else []


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def minimalize(monos):
    """Minimal generators of the monomial ideal generated by ``monos``."""
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def _colon(monos, piv_var, piv_exp):
    out = []
    for m in monos:
        m = list(m)
        m[piv_var] = max(0, m[piv_var] - piv_exp)
        out.append(tuple(m))
    return minimalize(out)


def monomial_numerator(monos, nvars):
    """Numerator N(t) (coefficient list) with HS(S/M) = N(t)/(1-t)^nvars."""
    cache = {}

    def rec(gens):
        key = frozenset(gens)
        if key in cache:
            return cache[key]
        if any(sum(g) == 0 for g in gens):
            res = []
        else:
            # pairwise coprime -> product formula
            support = {}
            shared = None
            for g in gens:
                for i, e in enumerate(g):
                    if e:
                        support[i] = support.get(i, 0) + 1
            counts = [(c, i) for i, c in support.items() if c > 1]
            if not counts:
                res = [1]
                for g in gens:
                    res = _poly_sub(res, _shift(res, sum(g)))
            else:
                _, shared = max(counts)
                # exponents from non-pure-power generators, so x^e is a new generator
                exps = sorted(g[shared] for g in gens if g[shared] and sum(g) > g[shared])
                e = exps[len(exps) // 2]
                piv = [0] * nvars
                piv[shared] = e
                piv = tuple(piv)
                plus = minimalize(list(gens) + [piv])
                colon = _colon(gens, shared, e)
                res = _poly_add(rec(plus), _shift(rec(colon), e))
        cache[key] = res
        return res

    return rec(minimalize(monos)) if monos else [1]


@dataclass(frozen=True)
class HilbertSeries:
    """HS(S/I) = numerator(t) / (1 - t)^nvars."""

    numerator: tuple
    nvars: int

    @property
    def krull_dim(self):
        """Dimension of the affine cone; 0 for the zero module."""
        num = list(self.numerator)
        if not num:
            return 0
        k = 0
        while k < self.nvars and sum(num) == 0:
            num = _divide_one_minus_t(num)
            k += 1
        return self.nvars - k

    @property
    def h_vector(self):
        """Numerator over (1 - t)^krull_dim."""
        num = list(self.numerator)
        for _ in range(self.nvars - self.krull_dim):
            num = _divide_one_minus_t(num)
        return tuple(num)

    @property
    def projective_dim(self):
        return self.krull_dim - 1

    @property
    def degree(self):
        return sum(self.h_vector)

    def hilbert_function(self, s):
        """dim_k (S/I)_s."""
        total = 0
        for k, c in enumerate(self.numerator):
            if c and s - k >= 0:
                total += c * comb(s - k + self.nvars - 1, self.nvars - 1)
        return total

    def hilbert_polynomial(self):
        """Coefficients (ascending in s) of the Hilbert polynomial, as Fractions."""
        D = self.krull_dim
        if D == 0:
            return ()
        out = [Fraction(0)]
        for i, h in enumerate(self.h_vector):
            if not h:
                continue
            # binom(s - i + D - 1, D - 1) as a polynomial in s
            p = [Fraction(1)]
            for a in range(1, D):
                p = _poly_mul(p, [Fraction(a - i), Fraction(1)])
            p = [c * h / factorial(D - 1) for c in p]
            out = _poly_add(out, p)
        return tuple(Fraction(c) for c in out) if out else (Fraction(0),)

    def format_hilbert_polynomial(self, var="t"):
        coeffs = self.hilbert_polynomial()
        parts = []
        for k in range(len(coeffs) - 1, -1, -1):
            c = coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _divide_one_minus_t(num):
    """Exact division by (1 - t)."""
    out = []
    acc = 0
    for c in num[:-1]:
        acc += c
        out.append(acc)
    return _trim(out)


def hilbert_series(ideal):
    """Hilbert series of S/I for a homogeneous ideal."""
    if not ideal.is_homogeneous():
        raise ValueError("Hilbert series needs a homogeneous ideal")
    n = ideal.ring.nvars
    lms = [g.lm for g in ideal.groebner_basis()] if ideal.gens else []
    return HilbertSeries(tuple(monomial_numerator(lms, n)), n)


def count_standard_monomials(monos, nvars, degree):
    """dim (S/M)_degree by brute-force enumeration (test oracle)."""
    from .poly import monomials_of_degree
    gens = minimalize(monos)
    return sum(1 for m in monomials_of_degree(nvars, degree)
               if not any(all(a <= b for a, b in zip(g, m)) for g in gens))
