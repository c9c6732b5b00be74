"""
Exact scalars: rationals (``fractions.Fraction``) and univariate rational
functions in a parameter ``lam`` with rational coefficients.

Every downstream module only uses ``+ - * /`` and ``==`` on its scalars, so
either level can be fed through the same code.
"""

from fractions import Fraction
from functools import total_ordering
from numbers import Rational


class MalformedInput(ValueError):
    pass


class PoleAtZero(ArithmeticError):
    """Raised when a rational function has a genuine pole at lam = 0."""


def Q(x):
    """Coerce ints, strings like "3/4", and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


# ---------------------------------------------------------------------------
# dense polynomials over Q, coefficient tuples low -> high, no trailing zeros

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def pneg(a):
    return tuple(-x for x in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def pscale(a, s):
    if s == 0:
        return ()
    return tuple(x * s for x in a)


def pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for i, y in enumerate(b):
            a[i + k] -= c * y
        a = list(_trim(a))
    return _trim(q), tuple(a)


def pmonic(a):
    if not a:
        return a
    lead = a[-1]
    return tuple(x / lead for x in a)


def pgcd(a, b):
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def peval(a, x):
    r = Fraction(0)
    for c in reversed(a):
        r = r * x + c
    return r


def pstr(a, var="lam"):
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else "%s^%d" % (var, i)
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append("%s*%s" % (c, mono))
    return " + ".join(terms).replace("+ -", "- ")


# ---------------------------------------------------------------------------

@total_ordering
class RationalFunction:
    """num/den in lam, kept coprime with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=(Fraction(1),), _normal=False):
        num = _trim(Q(x) for x in num)
        den = _trim(Q(x) for x in den)
        if not den:
            raise MalformedInput("zero denominator")
        if not _normal:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def const(cls, c):
        c = Q(c)
        return cls((c,) if c else (), (Fraction(1),), _normal=True)

    @classmethod
    def lam(cls):
        return cls((Fraction(0), Fraction(1)), (Fraction(1),), _normal=True)

    def is_const(self):
        return len(self.den) == 1 and len(self.num) <= 1

    def const_value(self):
        assert self.is_const()
        return self.num[0] if self.num else Fraction(0)

    def __call__(self, x):
        d = peval(self.den, Q(x))
        if d == 0:
            raise PoleAtZero("denominator vanishes at %s" % x)
        return peval(self.num, Q(x)) / d

    def limit_at_zero(self):
        return limit_at_zero(self)

    # arithmetic --------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Rational):
            return RationalFunction.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(padd(self.num, other.num), self.den)
        return RationalFunction(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(pneg(self.num), self.den, _normal=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                return RationalFunction((), (Fraction(1),), _normal=True)
            return RationalFunction(pscale(self.num, Q(other)), self.den,
                                    _normal=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(pmul(self.num, other.num),
                                pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RationalFunction(pscale(self.num, 1 / Q(other)), self.den,
                                    _normal=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = RationalFunction.const(1)
        for _ in range(k):
            r = r * self
        return r

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __lt__(self, other):
        other = self._coerce(other)
        return (self.den, self.num) < (other.den, other.num)

    def __hash__(self):
        if self._hash is None:
            if self.is_const():
                self._hash = hash(self.const_value())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return "RationalFunction(%r, %r)" % (self.num, self.den)

    def __str__(self):
        if len(self.den) == 1:
            return pstr(self.num)
        return "(%s)/(%s)" % (pstr(self.num), pstr(self.den))


def _order(a):
    """Order of vanishing at lam = 0 of a nonzero polynomial."""
    k = 0
    while a[k] == 0:
        k += 1
    return k


def _is_monomial(a):
    return all(x == 0 for x in a[:-1])


def _normalize(num, den):
    if not num:
        return (), (Fraction(1),)
    if _is_monomial(den):
        # den = c lam^k: only powers of lam can cancel
        k = min(len(den) - 1, _order(num))
        lead = den[-1]
        num = num[k:]
        den = den[k:]
        if lead != 1:
            num = pscale(num, 1 / lead)
            den = pscale(den, 1 / lead)
        return num, den
    g = pgcd(num, den)
    if len(g) > 1:
        num = pdivmod(num, g)[0]
        den = pdivmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = pscale(num, 1 / lead)
        den = pscale(den, 1 / lead)
    return num, den


def normalize(f):
    """Canonical coprime, monic-denominator form of ``f``."""
    return RationalFunction(f.num, f.den)


def limit_at_zero(f):
    """Value of ``f`` at lam = 0 after cancelling common factors."""
    if isinstance(f, (int, Fraction)):
        return Q(f)
    f = normalize(f)
    d0 = f.den[0] if f.den else Fraction(0)
    if d0 == 0:
        if f.num:
            raise PoleAtZero("pole at lam = 0: %s" % f)
        return Fraction(0)
    n0 = f.num[0] if f.num else Fraction(0)
    return n0 / d0


def lam():
    return RationalFunction.lam()


def is_zero(x):
    return not x


def parse_rational(s):
    """Parse "p/q" or an integer literal into an exact Fraction."""
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput("not an exact rational: %r" % (s,)) from exc
