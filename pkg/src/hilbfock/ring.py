"""
The cup-product ring on F^n, read off from the algebra of integrals.

On F^n the integrals form a commutative algebra acting cyclically on the
unit vector; the multiplication operator M_a of a vector a is the unique
element of that algebra with M_a(unit) = a. Structure constants are the
coordinates of M_{v_i}(v_j) in the monomial basis.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import fock
from .fock import generator, vmul
from .heisenberg import WeightOperator, lehn_op
from .integrals import algebra_span, chern_route_ops, dunkl_route_ops
from .linalg import matvec, rank, solve, transpose


class ExtractionError(ArithmeticError):
    """The operator algebra does not determine a ring on F^n."""


def unit_vector(H, n):
    """(1/n!) P(1 x)^n applied to the vacuum."""
    v = {(): Fraction(1)}
    one = generator(H, H.one(), 1)
    for _ in range(n):
        v = vmul(H, one, v)
    s = Fraction(1, factorial(n))
    return {k: c * s for k, c in v.items()}


def route_span(H, n, route="chern", K=None):
    """The generated algebra on F^n for route 'chern' or 'dunkl'."""
    if route == "chern":
        ops = chern_route_ops(H, n, K)
    elif route == "dunkl":
        if K is not None and K != H.K:
            raise ValueError("the Dunkl route uses the algebra's own K")
        ops = dunkl_route_ops(H, n)
    else:
        raise ValueError("unknown route %r" % route)
    return algebra_span(list(ops.values()), H, n)


class Multiplication:
    """Solves M . unit = a inside a cyclic commutative operator algebra."""

    def __init__(self, H, n, span):
        self.H, self.n, self.span = H, n, span
        self.unit = fock.to_coords(H, n, unit_vector(H, n))
        self.d = len(self.unit)
        images = [matvec(B.matrix, self.unit) for B in span.basis]
        self.images = transpose(images)        # columns = B_k(unit)
        if span.dim != self.d:
            raise ExtractionError("algebra has dimension %d, F^%d has %d"
                                  % (span.dim, n, self.d))

    def matrix(self, a):
        """M_a for a coordinate vector (or Fock vector) a."""
        if isinstance(a, dict):
            a = fock.to_coords(self.H, self.n, a)
        try:
            x, nullity = solve(self.images, list(a))
        except ValueError:
            raise ExtractionError("no element of the algebra maps the unit to "
                                  "the given vector (not cyclic)") from None
        if nullity:
            raise ExtractionError("M . unit = a has a %d-dimensional family of "
                                  "solutions" % nullity)
        M = WeightOperator(self.n, self.n,
                           [[Fraction(0)] * self.d for _ in range(self.d)])
        for c, B in zip(x, self.span.basis):
            if c:
                M = M + B * c
        return M


@dataclass
class RingTable:
    n: int
    basis: list            # Fock monomials
    unit: list             # coordinates of the unit vector
    constants: list        # c[i][j][k]
    degrees: list
    parities: list
    meta: dict = field(default_factory=dict)

    @property
    def dim(self):
        return len(self.basis)

    def product(self, a, b):
        """Product of two coordinate vectors."""
        d = self.dim
        out = [Fraction(0)] * d
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                for k, c in enumerate(self.constants[i][j]):
                    if c:
                        out[k] += x * y * c
        return out

    def violations(self):
        """Names of the failed ring invariants (empty when all hold)."""
        d, c = self.dim, self.constants
        bad = []
        par, deg = self.parities, self.degrees
        if any(c[i][j][k] != (-1) ** (par[i] * par[j]) * c[j][i][k]
               for i in range(d) for j in range(d) for k in range(d)):
            bad.append("supercommutative")
        e = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        if any(self.product(e[i], self.product(e[j], e[k]))
               != self.product(self.product(e[i], e[j]), e[k])
               for i in range(d) for j in range(d) for k in range(d)):
            bad.append("associative")
        if any(self.product(self.unit, e[i]) != e[i] for i in range(d)):
            bad.append("unital")
        step = self.meta.get("euler_defect", 0)
        if any(c[i][j][k] and not _degree_ok(deg[i] + deg[j] - deg[k], step)
               for i in range(d) for j in range(d) for k in range(d)):
            bad.append("degree-homogeneous")
        if sum(1 for x in deg if x == 0) != 1:
            bad.append("connected")
        return bad

    def to_json(self):
        entries = []
        for i, row in enumerate(self.constants):
            for j, col in enumerate(row):
                for k, x in enumerate(col):
                    if x:
                        entries.append([i, j, k, str(x)])
        return {
            "n": self.n,
            "basis": [[list(p) for p in mono] for mono in self.basis],
            "degrees": self.degrees,
            "unit": [str(x) for x in self.unit],
            "constants": entries,
            "meta": self.meta,
        }


def euler_defect(H):
    """4 - deg e when the Euler class sits in the wrong degree, else 0.

    For a surface e has degree 4 and the ring is graded. An algebra such as
    the point with e = 1 is a specialization of a degree-4 parameter, so
    products may drop degree by multiples of this defect.
    """
    e = H.euler_class()
    degs = {H.degrees[i] for i, c in enumerate(e.coeffs) if c}
    if not degs or degs == {4}:
        return 0
    if len(degs) > 1:
        raise ExtractionError("the Euler class is not homogeneous")
    return 4 - degs.pop()


def pairing_kind(H):
    """'genuine' when Delta(1) comes from a nondegenerate pairing, else 'weak'."""
    C = [[Fraction(0)] * H.dim for _ in range(H.dim)]
    for i, j, c in H.coproduct:
        C[i][j] += c
    return "genuine" if rank(C) == H.dim else "weak"


def _degree_ok(drop, step):
    if step == 0:
        return drop == 0
    return drop >= 0 and drop % step == 0


def structure_constants(H, K=None, n=1, route="chern", check=True):
    """The ring on F^n; every RingTable invariant is verified before return."""
    span = route_span(H, n, route, K)
    if not span.commutative:
        raise ExtractionError("the %s-route algebra is not supercommutative" % route)
    mult = Multiplication(H, n, span)
    basis = list(fock.enumerate_basis(H, n))
    d = len(basis)
    consts = []
    for i in range(d):
        e = [Fraction(int(i == j)) for j in range(d)]
        M = mult.matrix(e)
        consts.append([[M.matrix[k][j] for k in range(d)] for j in range(d)])
    table = RingTable(n, basis, mult.unit, consts,
                      [fock.cohomological_degree(H, m) for m in basis],
                      [fock.mono_parity(H, m) for m in basis],
                      {"algebra": H.name, "algebra_hash": H.digest(),
                       "K": [str(x) for x in (H.K if K is None else K).coeffs],
                       "route": route, "euler_defect": euler_defect(H),
                       "pairing": pairing_kind(H)})
    if table.meta["pairing"] == "weak":
        table.meta["note"] = ("weak Frobenius data: whether the table describes ordinary "
                              "or compactly supported cohomology is not determined")
    if check:
        bad = table.violations()
        if bad:
            raise ExtractionError("ring invariants fail on F^%d: %s" % (n, ", ".join(bad)))
    return table


def matches_algebra(table, H):
    """The F^1 table equals the multiplication table of H (F^1 = H)."""
    if table.n != 1:
        return False
    for i in range(H.dim):
        for j in range(H.dim):
            want = H.mul_basis(i, j)
            got = table.constants[i][j]
            if any(got[k] != want.get(k, 0) for k in range(H.dim)):
                return False
    return True


def lehn_is_multiplication(H, n, K=None, route="chern"):
    """L(H, K) on F^n equals M_{L(unit)}, cup product with c_1."""
    span = route_span(H, n, route, K)
    mult = Multiplication(H, n, span)
    L = lehn_op(H, K).matrix(n)
    return mult.matrix(matvec(L.matrix, mult.unit)) == L
