"""
Integrals of motion on the weight spaces F^n.

Two constructions of the commuting family are built here: the Dunkl route
(spherical polynomials in Dunkl-Cherednik operators, twisted by Phi_u and
degenerated to lam = 0) and the Chern-character route (operators defined by
their brackets with the Calogero-Sutherland operator). ``algebra_span``
compares the algebras they generate.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import fock
from .cherednik import (InternalError, columns_to_matrix, rho_rho_projection,
                        spherical_columns, spherical_columns_many)
from .fock import generator, vadd, vmul
from .frobenius import NotInvertible, default_degeneration, invert_even
from .heisenberg import (GradedOperator, WeightOperator, bracket, lehn_op,
                         mul_op)
from .linalg import RowSpace, matmul
from .scalar import PoleAtZero, RationalFunction, limit_at_zero


# ---------------------------------------------------------------------------
# twisting

def _zero_like(x):
    return RationalFunction.const(0) if isinstance(x, RationalFunction) else Fraction(0)


def phi_matrix(u, n):
    """Matrix of Phi_u on F^n: each part P(b x^m) becomes P(u b x^m)."""
    H = u.H
    if u.parity() == 1:
        raise NotInvertible("twisting needs an even element")
    src = fock.enumerate_basis(H, n)
    idx = fock.basis_index(H, n)
    zero = _zero_like(next((c for c in u.coeffs if c), Fraction(0)))
    M = [[zero] * len(src) for _ in src]
    images = {c: u * H.basis(c) for c in range(H.dim)}
    for j, mono in enumerate(src):
        v = {(): Fraction(1)}
        for m, c in mono:
            v = vmul(H, v, generator(H, images[c], m))
        for t, x in v.items():
            M[idx[t]][j] = M[idx[t]][j] + x
    return WeightOperator(n, n, M)


def twist(u, M):
    """Phi_u M Phi_u^{-1} on F^n."""
    uinv = invert_even(u)
    n = M.source
    if M.target != n:
        raise ValueError("twist needs an energy-preserving block")
    return phi_matrix(u, n) @ M @ phi_matrix(uinv, n)


# ---------------------------------------------------------------------------
# spherical operators on F^n

def spherical_matrix(H, u, poly, n, N=None, minus_rho=False):
    """Matrix of sum_(h,k) P(h y(u)^k) on F^n (optionally minus <rho~,rho~>)."""
    cols = spherical_columns(H, u, poly, n, N, minus_rho)
    zero = _zero_like(next((c for c in u.coeffs if c), Fraction(0)))
    return columns_to_matrix(H, n, cols, zero)


@dataclass
class CtsReport:
    n: int
    particles: list
    ok: bool
    stable: bool
    mismatches: list = field(default_factory=list)
    rho_vanishes: bool = None

    def summary(self):
        return ("n=%d N=%s equal=%s stable=%s rho-vanishes=%s"
                % (self.n, self.particles, self.ok, self.stable, self.rho_vanishes))


def cts_cross_check(H, u, n, particles=None, keep_top=False):
    """L(H, u - e u^-1) == Phi_u P(u y(u^2)^2) Phi_u^-1 on F^n.

    The transport is exact once the particle count covers the filtration
    of the output, which for this operator means N >= n + 3; ``particles``
    lists the counts used (all must agree). The correction <rho~, rho~> is
    checked separately: its image in F must vanish.
    """
    if particles is None:
        particles = [n + 3, n + 4]
    e = H.euler_class()
    K = u - e * invert_even(u)
    target = lehn_op(H, K, keep_top=keep_top).matrix(n)
    u2 = u * u
    results = []
    mismatches = []
    src = fock.enumerate_basis(H, n)
    for N in particles:
        try:
            M = twist(u, spherical_matrix(H, u2, [(u, 2)], n, N))
        except InternalError as exc:
            # a broken Dunkl operator leaves the symmetric states
            mismatches.append({"N": N, "error": str(exc)})
            continue
        results.append(M)
        for i, row in enumerate(M.matrix):
            for j, x in enumerate(row):
                if x != target.matrix[i][j]:
                    mismatches.append({"N": N, "row": src[i], "col": src[j],
                                       "got": x, "want": target.matrix[i][j]})
    stable = bool(results) and all(r == results[0] for r in results)
    return CtsReport(n, list(particles), not mismatches, stable, mismatches,
                     rho_vanishes(H, u2))


def rho_vanishes(H, u, particles=(3, 4)):
    """<rho~(u^-1), rho~(u^-1)> lies in the ideal H . Sym H[x].

    Its image in F is a constant; P is an algebra isomorphism, so the
    image of <rho~,rho~> w is that constant times w and one check covers
    every weight space.
    """
    return all(not rho_rho_projection(H, u, 0, N)[()] for N in particles)


# ---------------------------------------------------------------------------
# the lam -> 0 limit along a degeneration direction

def _term_at(term, u):
    """(h, k) or (h, k, j) -> (h u^j, k) at a concrete u."""
    if len(term) == 2:
        return term
    h, k, j = term
    for _ in range(j):
        h = h * u
    return (h, k)


def _sample(H, u, polys, n, N):
    """Twisted spherical matrices Phi_u P(...) Phi_u^-1 at one concrete u."""
    u2 = u * u
    concrete = [[_term_at(t, u) for t in poly] for poly in polys]
    cols = spherical_columns_many(H, u2, concrete, n, N)
    return [twist(u, columns_to_matrix(H, n, c)) for c in cols]


def _power_of(ratio, base, bound=64):
    """The integer q with base^q == ratio, or None."""
    for q in range(-bound, bound + 1):
        if Fraction(base) ** q == ratio:
            return q
    return None


def _homogeneous_limit(Ta, Tb, base):
    """Entrywise lim of T(lam) given T(a), T(b) with (b/a)^power = base.

    Each entry is c lam^(power q); q is read off from the ratio. Raises
    PoleAtZero for q < 0 and InternalError when the samples are not
    consistent with homogeneity.
    """
    rows = []
    for ra, rb in zip(Ta.matrix, Tb.matrix):
        row = []
        for a, b in zip(ra, rb):
            if not a:
                if b:
                    raise InternalError("sample is not homogeneous in lam")
                row.append(Fraction(0))
                continue
            q = _power_of(b / a, base)
            if q is None:
                raise InternalError("sample is not homogeneous in lam")
            if q < 0:
                raise PoleAtZero("entry %s behaves like lam^%d" % (a, q))
            row.append(a if q == 0 else Fraction(0))
        rows.append(row)
    return WeightOperator(Ta.source, Ta.target, rows)


def im_spherical_many(H, direction, polys, n, N=None, samples=(1, 2)):
    """lim_{lam -> 0} Phi_u P(poly(y(u^2))) Phi_u^-1 on F^n for each poly.

    A term is (h, k) for h y^k or (h, k, j) for h u^j y^k. Directions of
    known homogeneity are sampled at two values of lam (the entries are
    monomials in lam, so two samples fix them); other directions are
    computed over rational functions of lam.
    """
    u_lam = direction.u_of_lam
    if direction.power == 0:
        return _sample(H, u_lam.at(0), polys, n, N)
    if direction.power is not None:
        a, b = (Fraction(s) for s in samples)
        Ta = _sample(H, u_lam.at(a), polys, n, N)
        Tb = _sample(H, u_lam.at(b), polys, n, N)
        base = (b / a) ** direction.power
        return [_homogeneous_limit(x, y, base) for x, y in zip(Ta, Tb)]
    out = []
    for M in _sample(H, u_lam, polys, n, N):
        out.append(M.map(lambda c: limit_at_zero(c) if isinstance(c, RationalFunction)
                         else c))
    return out


def im_spherical(H, direction, poly, n, N=None, samples=(1, 2)):
    return im_spherical_many(H, direction, [poly], n, N, samples)[0]


def dunkl_generators(H):
    """Generators of the Dunkl route, as labelled polynomials.

    P(h y) for every basis element, P(h u y^2) for the non-unit ones and
    P(u y^2) for the unit; the last is L(K) after the limit. The factor u
    keeps the limits finite.
    """
    gens = [("P(%s y)" % H.labels[c], [(H.basis(c), 1)]) for c in range(H.dim)]
    for c in range(H.dim):
        gens.append(("P(%s u y^2)" % H.labels[c], [(H.basis(c), 2, 1)]))
    return gens


def dunkl_route_ops(H, n, direction=None, N=None, samples=(1, 2)):
    """{label: limit matrix on F^n} for the Dunkl-route generators."""
    if direction is None:
        direction = default_degeneration(H)
    gens = dunkl_generators(H)
    mats = im_spherical_many(H, direction, [p for _, p in gens], n, N, samples)
    return {label: M for (label, _), M in zip(gens, mats)}


# ---------------------------------------------------------------------------
# Chern-character operators

def ad_power(L, X, i):
    """(Ad L)^i X."""
    for _ in range(i):
        X = bracket(L, X)
    return X


class ChernOperator:
    """ch_i(h), built on monomials from its brackets with creation operators.

    D(vacuum) = 0 and D(P(h' x^m) w) = C_m(h') w + (-1)^{|h||h'|} P(h' x^m) D(w),
    where C_1(h') = (Ad L)^i P(h h' x) and
    C_{m+1}(h') = ([[D, B], P(h' x^m)] + [B, C_m(h')]) / 2m,
    with B = [L, P(x)] and [D, B] = (Ad L)^(i+1) P(h x).
    """

    def __init__(self, H, K, i, h):
        if h.parity() is None:
            raise ValueError("ch_i(h) needs a homogeneous h")
        self.H, self.i, self.h = H, i, h
        self.L = lehn_op(H, K)
        self.B = bracket(self.L, mul_op(H, H.one(), 1))
        self.DB = ad_power(self.L, mul_op(H, h, 1), i + 1)
        self._C = {}
        self.op = GradedOperator(H, 0, h.parity(), self._on_mono,
                                 "ch_%d(%s)" % (i, h))

    def C(self, m, c):
        """[D, P(b_c x^m)]."""
        key = (m, c)
        r = self._C.get(key)
        if r is None:
            H = self.H
            if m == 1:
                r = ad_power(self.L, mul_op(H, H.mul(self.h, H.basis(c)), 1), self.i)
            else:
                r = (bracket(self.DB, mul_op(H, H.basis(c), m - 1))
                     + bracket(self.B, self.C(m - 1, c))).scale(Fraction(1, 2 * (m - 1)))
            self._C[key] = r
        return r

    def _peel(self, part, rest):
        """D(P(part) rest), with D(rest) from the canonical peeling."""
        H = self.H
        m, c = part
        w = {rest: Fraction(1)}
        out = dict(self.C(m, c)(w))
        sign = -1 if self.h.parity() and H.parity[c] else 1
        vadd(out, vmul(H, {(part,): Fraction(1)}, self.op.on_mono(rest)), sign)
        return out

    def _on_mono(self, mono):
        if not mono:
            return {}
        return self._peel(mono[0], mono[1:])

    def check_peelings(self, mono):
        """Re-derive D(mono) by peeling every other distinct part first."""
        H = self.H
        if not mono:
            return True
        want = self.op.on_mono(mono)
        seen = {mono[0]}
        for t, part in enumerate(mono):
            if part in seen:
                continue
            seen.add(part)
            rest = mono[:t] + mono[t + 1:]
            # P(part) rest = s * mono
            (s,) = fock.multiply(H, (part,), rest).values()
            got = {k: x * s for k, x in self._peel(part, rest).items()}
            if got != want:
                return False
        return True

    def matrix(self, n, check=True):
        if check:
            for mono in fock.enumerate_basis(self.H, n):
                if not self.check_peelings(mono):
                    raise InternalError("ch_%d(%s) depends on the peeling of %s"
                                        % (self.i, self.h, fock.mono_str(self.H, mono)))
        return self.op.matrix(n)


def chern_op(H, K, i, h, n, check=True):
    """Matrix of ch_i(h) on F^n."""
    return ChernOperator(H, K, i, h).matrix(n, check)


def chern_route_ops(H, n, K=None, max_i=None, check=True):
    """{label: ch_i(b_c) on F^n} for every basis element and i <= max_i.

    ch_i(h) has degree deg h + 2i, so i <= n - 1 suffices on F^n (the
    rest lie in the algebra these generate); default max_i = n - 1.
    """
    K = H.K if K is None else K
    if max_i is None:
        max_i = max(n - 1, 0)
    ops = {}
    for i in range(max_i + 1):
        for c in range(H.dim):
            ops["ch_%d(%s)" % (i, H.labels[c])] = chern_op(H, K, i, H.basis(c), n, check)
    return ops


# ---------------------------------------------------------------------------
# generated algebras

@dataclass
class Span:
    """Row-reduced span of an operator algebra on F^n."""
    n: int
    space: RowSpace
    basis: list          # WeightOperators spanning the algebra
    commutative: bool
    length: int          # longest product needed

    @property
    def dim(self):
        return len(self.space)

    def contains(self, M):
        return self.space.contains(M.flat())

    def same_as(self, other):
        return self.space.canonical() == other.space.canonical()


def _identity(n, d):
    return WeightOperator(n, n, [[Fraction(int(i == j)) for j in range(d)]
                                 for i in range(d)])


def operator_parity(H, M):
    """0 or 1 for a parity-homogeneous block, None if mixed (0 for zero)."""
    src = fock.enumerate_basis(H, M.source)
    tgt = fock.enumerate_basis(H, M.target)
    found = set()
    for i, row in enumerate(M.matrix):
        for j, x in enumerate(row):
            if x:
                found.add((fock.mono_parity(H, tgt[i]) + fock.mono_parity(H, src[j])) % 2)
    if len(found) > 1:
        return None
    return found.pop() if found else 0


def supercommute(H, A, B):
    """AB == (-1)^{|A||B|} BA; plain commutation when H is None."""
    pa = operator_parity(H, A) if H is not None else 0
    pb = operator_parity(H, B) if H is not None else 0
    if pa is None or pb is None:
        return False
    AB, BA = A @ B, B @ A
    return AB == (BA * -1 if pa and pb else BA)


def algebra_span(ops, H=None, n=None, max_length=None):
    """Span of all products of ``ops`` (the empty product included).

    Products are lengthened until a round adds nothing. With ``H`` the
    commutativity flag uses super-commutators.
    """
    ops = list(ops)
    if n is None:
        n = ops[0].source
    d = ops[0].shape[0] if ops else 0
    one = _identity(n, d)
    space = RowSpace(d * d)
    basis = []
    frontier = []
    for M in [one] + ops:
        if space.add(M.flat()):
            basis.append(M)
            frontier.append(M)
    length = 1
    while frontier and (max_length is None or length < max_length):
        new = []
        for M in frontier:
            for G in ops:
                P = M @ G
                if space.add(P.flat()):
                    basis.append(P)
                    new.append(P)
        if not new:
            break
        frontier = new
        length += 1
    commutative = all(supercommute(H, A, B) for a, A in enumerate(ops) for B in ops[a + 1:])
    return Span(n, space, basis, commutative, length)


# ---------------------------------------------------------------------------
# differential order and symbol of ch_i(h)

def _creation_ops(H, max_m):
    return [(c, m) for m in range(1, max_m + 1) for c in range(H.dim)]


def _agree_up_to(H, A, B, n):
    """A == B on F^k for every k with k + shift <= n."""
    for k in range(0, n - A.shift + 1):
        for mono in fock.enumerate_basis(H, k):
            if A.on_mono(mono) != B.on_mono(mono):
                return False
    return True


def order_bound_check(H, K, i, h, n, max_m=2):
    """(i+2)-fold brackets of ch_i(h) with creation operators vanish.

    Checked on every F^k whose image lies in energy <= n. Returns the list
    of failing operator tuples.
    """
    from itertools import combinations_with_replacement
    D = ChernOperator(H, K, i, h).op
    zero = GradedOperator(H, 0, 0, lambda mono: {}, "0")
    bad = []
    for combo in combinations_with_replacement(_creation_ops(H, max_m), i + 2):
        if sum(m for _, m in combo) > n:
            continue
        X = D
        for c, m in combo:
            X = bracket(X, mul_op(H, H.basis(c), m))
        zero.shift = X.shift
        if not _agree_up_to(H, X, zero, n):
            bad.append(combo)
    return bad


def symbol_check(H, K, i, h, n, max_m=2):
    """(i+1)-fold brackets of ch_i(h) match the symbol (2^i/(i+1)) P(h p^(i+1)).

    For P(h p^(i+1)) = sum_l h_l (x_l d_l)^(i+1) the bracket with
    P(a_1 x^m_1), ..., P(a_(i+1) x^m_(i+1)) is
    (i+1)! m_1 ... m_(i+1) P(h a_1 ... a_(i+1) x^(m_1 + ... )).
    Returns the list of failing tuples.
    """
    from itertools import combinations_with_replacement
    from math import factorial, prod
    D = ChernOperator(H, K, i, h).op
    coeff = Fraction(2 ** i, i + 1) * factorial(i + 1)
    bad = []
    for combo in combinations_with_replacement(_creation_ops(H, max_m), i + 1):
        total = sum(m for _, m in combo)
        if total > n:
            continue
        X = D
        a = h
        for c, m in combo:
            X = bracket(X, mul_op(H, H.basis(c), m))
            a = H.mul(a, H.basis(c))
        want = coeff * prod(m for _, m in combo)
        if a:
            S = mul_op(H, a, total).scale(want)
        else:
            S = GradedOperator(H, total, 0, lambda mono: {}, "0")
        if not _agree_up_to(H, X, S, n):
            bad.append(combo)
    return bad


def degeneration_check(H, n, N=None):
    """The Dunkl-route limits along lam and along lam^2 agree on F^n.

    The two directions are sampled at disjoint values of lam, so the
    agreement is not a reparametrization of one computation. Returns the
    labels of the generators whose limits differ.
    """
    first = dunkl_route_ops(H, n, default_degeneration(H, power=1), N, samples=(1, 2))
    second = dunkl_route_ops(H, n, default_degeneration(H, power=2), N, samples=(2, 3))
    return [label for label in first if first[label] != second[label]]
