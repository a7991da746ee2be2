"""Coefficient fields: prime fields GF(p) and the rationals."""

from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The field GF(p); elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p=DEFAULT_PRIME):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2 ** 31:
            raise ValueError("primes must be below 2^31 so products fit in 64 bits")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    def __call__(self, a):
        if isinstance(a, Fraction):
            return a.numerator * pow(a.denominator, -1, self.p) % self.p
        return int(a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def neg(self, a):
        return -a % self.p

    def to_signed(self, a):
        """Symmetric representative, used for printing."""
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    """Exact rationals, for audit runs; much slower than GF(p)."""

    __slots__ = ()
    p = 0

    @property
    def characteristic(self):
        return 0

    def __call__(self, a):
        return Fraction(a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def neg(self, a):
        return -a

    def to_signed(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def field_for(p):
    """GF(p) for a prime p, QQ for p == 0."""
    return QQ if not p else PrimeField(p)
