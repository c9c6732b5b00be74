"""
Operators on F(H): creation operators P(h x^m), the derivations
P(h x^a d), multiplication by Delta_* P(h x^n), and the Calogero-Sutherland
(Lehn) operator L(H, K).

Operators are defined by their action on basis monomials, memoized, and
assembled into exact matrices per energy weight space on demand.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import fock
from .fock import vadd, vscale, vmul, generator


class RangeMismatch(ValueError):
    pass


@dataclass
class WeightOperator:
    """Matrix of a linear map F^source -> F^target in the enumerated bases."""
    source: int
    target: int
    matrix: list

    def __eq__(self, other):
        return (self.source == other.source and self.target == other.target
                and all(a == b for r, s in zip(self.matrix, other.matrix)
                        for a, b in zip(r, s)))

    @property
    def shape(self):
        return (len(self.matrix), len(self.matrix[0]) if self.matrix else 0)

    def is_zero(self):
        return not any(x for row in self.matrix for x in row)

    def __matmul__(self, other):
        from .linalg import matmul
        if other.target != self.source:
            raise RangeMismatch("cannot compose F^%d->F^%d after F^%d->F^%d"
                                % (self.source, self.target, other.source, other.target))
        return WeightOperator(other.source, self.target, matmul(self.matrix, other.matrix))

    def __add__(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise RangeMismatch("weight ranges differ")
        return WeightOperator(self.source, self.target,
                              [[a + b for a, b in zip(r, s)]
                               for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, s):
        return WeightOperator(self.source, self.target,
                              [[a * s for a in r] for r in self.matrix])

    __rmul__ = __mul__

    def flat(self):
        return [x for row in self.matrix for x in row]

    def map(self, f):
        return WeightOperator(self.source, self.target,
                              [[f(a) for a in r] for r in self.matrix])


class GradedOperator:
    """A linear operator on F(H) shifting energy by ``shift``.

    ``fn`` maps a basis monomial to a vector; results are cached.
    """

    def __init__(self, H, shift, parity, fn, label="op"):
        self.H = H
        self.shift = shift
        self.parity = parity % 2
        self._fn = fn
        self._cache = {}
        self.label = label

    def on_mono(self, mono):
        r = self._cache.get(mono)
        if r is None:
            r = self._fn(mono)
            self._cache[mono] = r
        return r

    def __call__(self, v):
        out = {}
        for mono, c in v.items():
            vadd(out, self.on_mono(mono), c)
        return out

    def matrix(self, n):
        """The block F^n -> F^(n + shift)."""
        H = self.H
        src = fock.enumerate_basis(H, n)
        tgt_n = n + self.shift
        if tgt_n < 0:
            return WeightOperator(n, tgt_n, [])
        tidx = fock.basis_index(H, tgt_n)
        M = [[Fraction(0)] * len(src) for _ in range(len(tidx))]
        for j, mono in enumerate(src):
            for t, c in self.on_mono(mono).items():
                M[tidx[t]][j] = c
        return WeightOperator(n, tgt_n, M)

    # algebra of operators ------------------------------------------------
    def __matmul__(self, other):
        A, B = self, other
        return GradedOperator(self.H, A.shift + B.shift, A.parity + B.parity,
                              lambda mono: A(B.on_mono(mono)),
                              "(%s)(%s)" % (A.label, B.label))

    def __add__(self, other):
        if other.shift != self.shift:
            raise RangeMismatch("cannot add operators of different shift")
        A, B = self, other

        def fn(mono):
            out = dict(A.on_mono(mono))
            return vadd(out, B.on_mono(mono))
        return GradedOperator(self.H, self.shift, self.parity, fn,
                              "%s + %s" % (A.label, B.label))

    def scale(self, s):
        A = self
        return GradedOperator(self.H, self.shift, self.parity,
                              lambda mono: vscale(A.on_mono(mono), s),
                              "%s*%s" % (s, A.label))

    def __sub__(self, other):
        return self + other.scale(-1)


def bracket(A, B):
    """Super-commutator AB - (-1)^{|A||B|} BA."""
    s = -1 if A.parity * B.parity else 1
    AB = A @ B
    BA = B @ A

    def fn(mono):
        out = dict(AB.on_mono(mono))
        return vadd(out, BA.on_mono(mono), -s)
    return GradedOperator(A.H, A.shift + B.shift, A.parity + B.parity, fn,
                          "[%s, %s]" % (A.label, B.label))


def identity_op(H):
    return GradedOperator(H, 0, 0, lambda mono: {mono: Fraction(1)}, "1")


def mul_by(H, X, shift=None, parity=None, label="mul"):
    """Left multiplication by a homogeneous Fock vector ``X``."""
    if shift is None:
        energies = {fock.energy(m) for m in X}
        shift = energies.pop() if energies else 0
    if parity is None:
        ps = {fock.mono_parity(H, m) for m in X}
        parity = ps.pop() if ps else 0
    return GradedOperator(H, shift, parity, lambda mono: vmul(H, X, {mono: Fraction(1)}),
                          label)


def _split_parity(h):
    H = h.H
    even = H.elem([c if not H.parity[i] else 0 for i, c in enumerate(h.coeffs)])
    odd = H.elem([c if H.parity[i] else 0 for i, c in enumerate(h.coeffs)])
    return even, odd


def mul_op(H, h, m):
    """P(h x^m), m >= 1."""
    if m < 1:
        raise ValueError("creation operators need m >= 1")
    p = h.parity()
    if p is None:
        e, o = _split_parity(h)
        return mul_op(H, e, m) + mul_op(H, o, m)
    return mul_by(H, generator(H, h, m), shift=m, parity=p,
                  label="P(%s x^%d)" % (h, m))


def _deriv_basis(H, i, a):
    """P(b_i x^a d) on monomials, by peeling the first part."""
    ph = H.parity[i]
    hb = H.basis(i)
    cache = {}

    def fn(mono):
        if not mono:
            return {}
        r = cache.get(mono)
        if r is not None:
            return r
        (m, c), rest = mono[0], mono[1:]
        out = {}
        prod = H.mul(hb, H.basis(c))
        vadd(out, vmul(H, generator(H, prod, a + m), {rest: Fraction(1)}), m)
        sign = -1 if ph and H.parity[c] else 1
        vadd(out, vmul(H, {((m, c),): Fraction(1)}, fn(rest)), sign)
        cache[mono] = out
        return out
    return fn


def deriv_op(H, h, a):
    """P(h x^a d): [D, P(h' x^n)] = n P(h h' x^{a+n}), D(vacuum) = 0."""
    if a < 0:
        raise ValueError("only a >= 0 descends to F(H)")
    parts = [(i, c) for i, c in enumerate(h.coeffs) if c]
    fns = [(_deriv_basis(H, i, a), c) for i, c in parts]
    p = h.parity()
    if p is None:
        e, o = _split_parity(h)
        return deriv_op(H, e, a) + deriv_op(H, o, a)

    def fn(mono):
        out = {}
        for f, c in fns:
            vadd(out, f(mono), c)
        return out
    return GradedOperator(H, a, p, fn, "P(%s x^%d d)" % (h, a))


def energy_op(H):
    return deriv_op(H, H.one(), 0)


def delta_star(H, h, n, keep_top=False):
    """Delta_* P(h x^n) = sum_j sum_{r=1}^{n-1} P(h a_j x^r) P(b_j x^{n-r}).

    The factor is h a_j, i.e. (h (x) 1) Delta, which is the Koszul-correct
    reading of "a_j h"; the two differ by a sign when h and a_j are both odd.

    The r = n term multiplies by P(b_j x^0), which is zero on F(H). With
    ``keep_top`` it is kept with P(b_j x^0) replaced by the unit coefficient
    of b_j; this exists only to check that the cross-checks notice it.
    """
    out = {}
    for i, j, c in H.coproduct:
        ah = H.mul(h, H.basis(i))
        for r in range(1, n):
            term = vmul(H, generator(H, ah, r), generator(H, H.basis(j), n - r))
            vadd(out, term, c)
        if keep_top and j == H.unit:
            vadd(out, generator(H, ah, n), c)
    return out


def lehn_op(H, K=None, keep_top=False):
    """Calogero-Sutherland operator L(H, K), energy-preserving and even.

    L(P(h x^m) w) = [2m P(h x^m d) + m^2 P(K h x^m) + m Delta_* P(h x^m)] w
                    + P(h x^m) L(w),   L(vacuum) = 0.
    """
    K = H.K if K is None else K
    derivs = {}
    cache = {}

    def D(c, m):
        key = (c, m)
        if key not in derivs:
            derivs[key] = deriv_op(H, H.basis(c), m)
        return derivs[key]

    def fn(mono):
        if not mono:
            return {}
        r = cache.get(mono)
        if r is not None:
            return r
        (m, c), rest = mono[0], mono[1:]
        hb = H.basis(c)
        w = {rest: Fraction(1)}
        out = {}
        vadd(out, D(c, m)(w), 2 * m)
        vadd(out, vmul(H, generator(H, H.mul(K, hb), m), w), m * m)
        vadd(out, vmul(H, delta_star(H, hb, m, keep_top), w), m)
        vadd(out, vmul(H, {((m, c),): Fraction(1)}, fn(rest)))
        cache[mono] = out
        return out
    return GradedOperator(H, 0, 0, fn, "L")
