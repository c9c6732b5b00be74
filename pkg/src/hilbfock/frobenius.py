"""
Finite-dimensional graded supercommutative weak Frobenius algebras.

An algebra is given by a structure-constant table on a homogeneous basis,
with basis[unit] = 1, and the coproduct of the unit Delta(1) as a list of
(i, j, coeff) meaning coeff * b_i (x) b_j. Parity is degree mod 2.
"""

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from . import linalg
from .scalar import MalformedInput, RationalFunction, parse_rational, lam


class AlgebraError(MalformedInput):
    """A violated algebra invariant, named, with the offending indices."""

    def __init__(self, invariant, detail, indices=()):
        self.invariant = invariant
        self.indices = tuple(indices)
        super().__init__("%s: %s %s" % (invariant, detail,
                                        list(self.indices) if indices else ""))


class NotInvertible(ArithmeticError):
    pass


class UnsupportedDegeneration(ValueError):
    pass


class AlgElement:
    """Dense coefficient vector of an element of ``H``."""

    __slots__ = ("H", "coeffs")

    def __init__(self, H, coeffs):
        self.H = H
        self.coeffs = tuple(coeffs)
        assert len(self.coeffs) == H.dim

    def __add__(self, other):
        other = self._lift(other)
        return AlgElement(self.H, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return AlgElement(self.H, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return self.H.mul(self, other)
        return AlgElement(self.H, [a * other for a in self.coeffs])

    def __rmul__(self, other):
        if isinstance(other, AlgElement):
            return self.H.mul(other, self)
        return AlgElement(self.H, [other * a for a in self.coeffs])

    def __truediv__(self, s):
        return AlgElement(self.H, [a / s for a in self.coeffs])

    def _lift(self, x):
        if isinstance(x, AlgElement):
            return x
        return self.H.one() * x

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            other = self._lift(other)
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def support(self):
        return [i for i, c in enumerate(self.coeffs) if c]

    def parity(self):
        """0 or 1 for homogeneous elements, None for mixed ones."""
        ps = {self.H.parity[i] for i in self.support()}
        if not ps:
            return 0
        if len(ps) > 1:
            return None
        return ps.pop()

    def is_even(self):
        return self.parity() == 0

    def inverse(self):
        return invert_even(self)

    def map(self, f):
        return AlgElement(self.H, [f(c) for c in self.coeffs])

    def limit_at_zero(self):
        from .scalar import limit_at_zero
        return self.map(limit_at_zero)

    def at(self, x):
        """Evaluate RationalFunction coefficients at lam = x."""
        return self.map(lambda c: c(x) if isinstance(c, RationalFunction) else c)

    def __repr__(self):
        return "AlgElement(%s)" % self

    def __str__(self):
        terms = []
        for c, name in zip(self.coeffs, self.H.labels):
            if not c:
                continue
            if c == 1:
                terms.append(name)
            else:
                terms.append("(%s)*%s" % (c, name))
        return " + ".join(terms) or "0"


@dataclass(eq=False)
class FrobeniusAlgebra:
    name: str
    labels: list
    degrees: list
    unit: int
    table: dict                  # (i, j) -> {k: coeff}
    coproduct: list              # [(i, j, coeff)]
    K_coeffs: list
    socle_degree: object = None
    parity: list = field(init=False)
    source: str = ""

    def __post_init__(self):
        self.parity = [d % 2 for d in self.degrees]
        self._e = None

    @property
    def dim(self):
        return len(self.labels)

    # elements ------------------------------------------------------------
    def elem(self, coeffs):
        return AlgElement(self, [Fraction(c) if isinstance(c, (int, str)) else c
                                 for c in coeffs])

    def zero(self):
        return AlgElement(self, [Fraction(0)] * self.dim)

    def one(self):
        return self.basis(self.unit)

    def basis(self, i):
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return AlgElement(self, v)

    @property
    def K(self):
        return AlgElement(self, self.K_coeffs)

    def mul_basis(self, i, j):
        """Product b_i * b_j as a dict {k: coeff}."""
        return self.table.get((i, j), {})

    def mul(self, a, b):
        out = [0] * self.dim
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if not y:
                    continue
                xy = x * y
                for k, c in self.mul_basis(i, j).items():
                    out[k] = out[k] + xy * c
        return AlgElement(self, [c if c else Fraction(0) for c in out])

    def mult_matrix(self, u):
        """Matrix of left multiplication by ``u`` (columns = images of b_j)."""
        cols = [self.mul(u, self.basis(j)).coeffs for j in range(self.dim)]
        return linalg.transpose(cols)

    def euler_class(self):
        if self._e is None:
            self._e = euler_class(self)
        return self._e

    def coproduct_of(self, h):
        """Delta(h) = (h (x) 1) Delta(1) as [(i, j, coeff)]."""
        out = {}
        for a, b, c in self.coproduct:
            for k, x in self.mul(h, self.basis(a)).support_items():
                out[(k, b)] = out.get((k, b), 0) + x * c
        return [(i, j, c) for (i, j), c in sorted(out.items()) if c]

    def digest(self):
        return hashlib.sha256(self.source.encode()).hexdigest()[:16]

    def __repr__(self):
        return "FrobeniusAlgebra(%r, dim=%d)" % (self.name, self.dim)


def _support_items(self):
    return [(i, c) for i, c in enumerate(self.coeffs) if c]


AlgElement.support_items = _support_items


# ---------------------------------------------------------------------------
# loading and validation

def load_algebra(text, *, source_name="<algebra>"):
    """Parse a JSON algebra document and validate every invariant."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput("%s: JSON error at line %d column %d: %s"
                             % (source_name, exc.lineno, exc.colno, exc.msg)) from exc
    if not isinstance(doc, dict):
        raise MalformedInput("%s: top level must be an object" % source_name)
    H = _from_doc(doc, source_name)
    H.source = json.dumps(doc, sort_keys=True)
    validate(H)
    H.euler_class()
    return H


def load_algebra_file(path):
    with open(path, encoding="utf-8") as f:
        return load_algebra(f.read(), source_name=str(path))


def reference_algebra(name):
    """One of the shipped algebras: 'point', 'p2', 'torus_like'."""
    text = resources.files("hilbfock").joinpath("data", name + ".json").read_text()
    return load_algebra(text, source_name=name)


def point_algebra(t=1):
    """Point algebra with Delta(1) = t * 1 (x) 1."""
    t = Fraction(t)
    doc = {"name": "point(t=%s)" % t, "dim": 1, "labels": ["1"], "degrees": [0],
           "unit": 0, "mul": [[0, 0, 0, "1"]], "coproduct": [[0, 0, str(t)]],
           "K": ["0"], "socle_degree": 0}
    return load_algebra(json.dumps(doc))


def _require(doc, key, source):
    if key not in doc:
        raise MalformedInput("%s: missing key %r" % (source, key))
    return doc[key]


def _from_doc(doc, source):
    dim = _require(doc, "dim", source)
    if not isinstance(dim, int) or dim < 1:
        raise MalformedInput("%s: dim must be a positive integer" % source)
    labels = list(doc.get("labels") or ["b%d" % i for i in range(dim)])
    degrees = list(_require(doc, "degrees", source))
    if len(labels) != dim or len(degrees) != dim:
        raise MalformedInput("%s: labels/degrees must have length dim" % source)
    if any(not isinstance(d, int) or d < 0 for d in degrees):
        raise MalformedInput("%s: degrees must be non-negative integers" % source)
    if "parities" in doc:
        for i, (p, d) in enumerate(zip(doc["parities"], degrees)):
            if p != d % 2:
                raise AlgebraError("parity", "parity differs from degree mod 2", [i])
    unit = doc.get("unit", 0)
    if unit != 0:
        raise MalformedInput("%s: the unit must be basis element 0" % source)

    def idx(i):
        if not isinstance(i, int) or not 0 <= i < dim:
            raise MalformedInput("%s: basis index out of range: %r" % (source, i))
        return i

    table = {}
    for entry in _require(doc, "mul", source):
        if len(entry) != 4:
            raise MalformedInput("%s: mul entries are [i, j, k, coeff]" % source)
        i, j, k, c = idx(entry[0]), idx(entry[1]), idx(entry[2]), parse_rational(entry[3])
        if c:
            row = table.setdefault((i, j), {})
            row[k] = row.get(k, 0) + c
    K = [parse_rational(c) for c in doc.get("K", ["0"] * dim)]
    if len(K) != dim:
        raise MalformedInput("%s: K must have length dim" % source)

    H = FrobeniusAlgebra(name=str(doc.get("name", source)), labels=labels,
                         degrees=degrees, unit=unit, table=table, coproduct=[],
                         K_coeffs=K, socle_degree=doc.get("socle_degree"))
    if "coproduct" in doc:
        cop = []
        for entry in doc["coproduct"]:
            if len(entry) != 3:
                raise MalformedInput("%s: coproduct entries are [i, j, coeff]" % source)
            c = parse_rational(entry[2])
            if c:
                cop.append((idx(entry[0]), idx(entry[1]), c))
        H.coproduct = cop
    elif "counit" in doc:
        eps = [parse_rational(c) for c in doc["counit"]]
        if len(eps) != dim:
            raise MalformedInput("%s: counit must have length dim" % source)
        H.coproduct = _coproduct_from_counit(H, eps)
    else:
        raise MalformedInput("%s: need 'coproduct' or 'counit'" % source)
    return H


def _coproduct_from_counit(H, eps):
    # Delta(1) = sum_ij G_ij b_i (x) b_j with G the inverse of g_jk = eps(b_j b_k)
    g = [[sum((eps[k] * c for k, c in H.mul_basis(j, l).items()), Fraction(0))
          for l in range(H.dim)] for j in range(H.dim)]
    try:
        G = linalg.inverse(g)
    except ZeroDivisionError:
        raise AlgebraError("nondegeneracy", "pairing eps(ab) is degenerate")
    return [(i, j, G[i][j]) for i in range(H.dim) for j in range(H.dim) if G[i][j]]


def _tensor_mul(H, x, y):
    """Product in H (x) H of dicts {(i, j): c} with Koszul signs."""
    out = {}
    for (a, b), c in x.items():
        for (p, q), d in y.items():
            s = -1 if H.parity[b] * H.parity[p] else 1
            for k, u in H.mul_basis(a, p).items():
                for l, v in H.mul_basis(b, q).items():
                    out[(k, l)] = out.get((k, l), 0) + s * c * d * u * v
    return {k: v for k, v in out.items() if v}


def validate(H):
    dim, par = H.dim, H.parity
    one = H.unit
    for (i, j), row in H.table.items():
        for k in row:
            if par[k] != (par[i] + par[j]) % 2:
                raise AlgebraError("parity", "product has wrong parity", [i, j, k])
            if H.degrees[k] != H.degrees[i] + H.degrees[j]:
                raise AlgebraError("grading", "product not degree additive", [i, j, k])
    for i in range(dim):
        if H.mul_basis(one, i) != {i: 1} or H.mul_basis(i, one) != {i: 1}:
            raise AlgebraError("unit", "1_H * b != b", [i])
    for i in range(dim):
        for j in range(dim):
            s = -1 if par[i] * par[j] else 1
            ab = H.mul_basis(i, j)
            ba = {k: s * c for k, c in H.mul_basis(j, i).items()}
            if ab != ba:
                raise AlgebraError("supercommutativity",
                                   "b_i b_j != (-1)^{|i||j|} b_j b_i", [i, j])
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                left = H.mul(H.mul(H.basis(i), H.basis(j)), H.basis(k))
                right = H.mul(H.basis(i), H.mul(H.basis(j), H.basis(k)))
                if left != right:
                    raise AlgebraError("associativity", "(ab)c != a(bc)", [i, j, k])
    delta = {}
    for i, j, c in H.coproduct:
        if (par[i] + par[j]) % 2:
            raise AlgebraError("coproduct parity", "Delta(1) must be even", [i, j])
        if H.socle_degree is not None and H.degrees[i] + H.degrees[j] != H.socle_degree:
            raise AlgebraError("grading", "Delta(1) term not in socle degree", [i, j])
        delta[(i, j)] = delta.get((i, j), 0) + c
    delta = {k: v for k, v in delta.items() if v}
    for a in range(dim):
        left = _tensor_mul(H, {(a, one): Fraction(1)}, delta)
        right = _tensor_mul(H, delta, {(one, a): Fraction(1)})
        if left != right:
            raise AlgebraError("bimodule compatibility",
                               "(a (x) 1) Delta(1) != Delta(1) (1 (x) a)", [a])
    flipped = {}
    for (i, j), c in delta.items():
        s = -1 if par[i] * par[j] else 1
        flipped[(j, i)] = s * c
    if flipped != delta:
        raise AlgebraError("cocommutativity", "Delta(1) is not flip invariant")
    H.coproduct = sorted((i, j, c) for (i, j), c in delta.items())
    return H


# ---------------------------------------------------------------------------

def euler_class(H):
    """e = m(Delta(1)) = sum coeff * b_i b_j."""
    e = H.zero()
    for i, j, c in H.coproduct:
        e = e + H.mul(H.basis(i), H.basis(j)) * c
    return e


def invert_even(u):
    H = u.H
    if not u.is_even():
        raise NotInvertible("only even elements are inverted: %s" % u)
    M = H.mult_matrix(u)
    try:
        Minv = linalg.inverse(M)
    except ZeroDivisionError:
        raise NotInvertible("multiplication by %s is singular" % u) from None
    return AlgElement(H, [row[H.unit] for row in Minv])


@dataclass
class DegenerationDirection:
    """K(lam), u(lam) with u - e/u = K identically; K(0) is the target class."""
    K_of_lam: AlgElement
    u_of_lam: AlgElement
    label: str = "default"
    # u(lam) is homogeneous when lam^power is given degree 2 (None: unknown)
    power: int = None

    def check(self):
        H = self.u_of_lam.H
        e = H.euler_class()
        lhs = self.u_of_lam - e * invert_even(self.u_of_lam)
        if lhs != self.K_of_lam:
            raise UnsupportedDegeneration("u - e u^-1 != K_lam")
        return True

    def K0(self):
        return self.K_of_lam.limit_at_zero()


def _rf(H, x):
    return x.map(lambda c: RationalFunction.const(c)
                 if not isinstance(c, RationalFunction) else c)


def default_degeneration(H, K=None, power=1):
    """(lam^p + K, lam^p + K + e/lam^p) when e^2 = 0 = eK.

    For a one-dimensional algebra with a square root available, returns the
    constant direction solving u^2 - K u - e = 0.
    """
    K = H.K if K is None else K
    e = H.euler_class()
    if not (e * e) and not (e * K):
        L = lam() ** power
        one = _rf(H, H.one())
        Kl = one * L + _rf(H, K)
        u = Kl + _rf(H, e) * L.inverse()
        d = DegenerationDirection(Kl, u, label="lam^%d" % power, power=power)
        d.check()
        return d
    if H.dim == 1:
        k, s = K[0], e[0]
        root = _rational_sqrt(k * k + 4 * s)
        if root is not None:
            for r in (root, -root):
                u0 = (k + r) / 2
                if u0:
                    uc = H.one() * u0
                    d = DegenerationDirection(_rf(H, K), _rf(H, uc), label="constant", power=0)
                    d.check()
                    return d
    raise UnsupportedDegeneration(
        "no built-in degeneration direction (need e^2 = 0 = eK); supply one")


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    from math import isqrt
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None
