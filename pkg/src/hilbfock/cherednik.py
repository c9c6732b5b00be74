"""
The N-particle arena: H[x, 1/x]^{(x)N} with Koszul signs, reflections,
divided differences, Dunkl-Cherednik operators and spherical actions, and
the transport between symmetric states and the Fock space.

A state is a dict ``{slots: coeff}``; ``slots`` is a length-N tuple whose
entries are ``None`` (the adjoined unit 1_+ of the augmented algebra, an
"empty" particle) or ``(color, exponent)``. The pure tensor is the ordered
product of its slots; a slot's parity is the parity of its color.

Elements of H^{(x)N} (no x-dependence) are dicts ``{colors: coeff}`` with
``colors`` a length-N tuple of color indices or ``None`` for 1.
"""

from fractions import Fraction
from itertools import permutations, product
from math import factorial

from gmpy2 import mpq

from . import fock
from .fock import vadd
from .frobenius import invert_even


class InternalError(AssertionError):
    """An escape from the exact polynomial window, or a failed divisibility."""


class AsymmetricInput(ValueError):
    pass


# ---------------------------------------------------------------------------
# slot-level products

def _slot_mul(H, s, t):
    """Product of two slot values; list of (slot, coeff)."""
    if s is None:
        return [(t, 1)]
    if t is None:
        return [(s, 1)]
    (c, a), (d, b) = s, t
    return [((k, a + b), x) for k, x in H.mul_basis(c, d).items()]


def _slot_parity(H, s):
    return 0 if s is None else H.parity[s[0]]


def _koszul(H, left, right):
    """Sign of (l_1 (x) .. (x) l_N)(r_1 (x) .. (x) r_N) -> slotwise products."""
    sign = 0
    odd_right = 0
    # sum over k > l of |left_k| |right_l|
    for k in range(len(left)):
        if _slot_parity(H, left[k]):
            sign += odd_right
        odd_right += _slot_parity(H, right[k])
    return -1 if sign % 2 else 1


def pure_mul(H, left, right):
    """Product of two pure tensors of slots; list of (slots, coeff)."""
    sign = _koszul(H, left, right)
    choices = [_slot_mul(H, a, b) for a, b in zip(left, right)]
    out = []
    for combo in product(*choices):
        coeff = sign
        slots = []
        for s, x in combo:
            coeff = coeff * x
            slots.append(s)
        out.append((tuple(slots), coeff))
    return out


class Arena:
    """N particles over H.

    ``unital`` merges (1_H, x^0) with the empty slot; the Fock transport
    needs the default non-unital arena. ``nabla_sign`` and ``koszul`` exist
    for mutation tests only.
    """

    def __init__(self, H, N, unital=False, nabla_sign=1, koszul=True):
        self.H = H
        self.N = N
        self.unital = unital
        self.nabla_sign = nabla_sign
        self.koszul = koszul
        self._empty = (None,) * N
        self._cache = {}
        self._smul = {}

    def scalar(self, c):
        """Rational coefficients run as gmpy2 rationals; anything else passes."""
        if isinstance(c, (int, Fraction)):
            return mpq(c)
        return c

    def slot_mul(self, s, t):
        key = (s, t)
        r = self._smul.get(key)
        if r is None:
            r = [(self._canon_slot(x), mpq(c)) for x, c in _slot_mul(self.H, s, t)]
            self._smul[key] = r
        return r

    # state helpers --------------------------------------------------------
    def _canon_slot(self, s):
        if self.unital and s == (self.H.unit, 0):
            return None
        return s

    def _canon(self, slots):
        if not self.unital:
            return slots
        u = self.H.unit
        return tuple(None if s == (u, 0) else s for s in slots)

    def add_term(self, out, slots, c):
        slots = self._canon(slots)
        x = out.get(slots, 0) + c
        if x:
            out[slots] = x
        elif slots in out:
            del out[slots]

    def mul(self, S, T):
        """Product of two states.

        Left terms are grouped by their occupied slots. For each group the
        product only depends on the right tensor's values in those slots
        (and on the parity of the odd slots before them), so it is tabulated
        once per pattern and reused across the right factor.
        """
        par = self.H.parity
        smul = self.slot_mul
        groups = {}
        for a, x in S.items():
            occ = tuple(k for k, s in enumerate(a) if s is not None)
            groups.setdefault(occ, []).append((a, x))
        any_odd = any(par)
        out = {}
        get = out.get
        for occ, terms in groups.items():
            table = {}
            for b, y in T.items():
                vals = tuple(b[k] for k in occ)
                if any_odd:
                    odd_before = 0
                    pos = []
                    it = iter(occ)
                    nxt = next(it, None)
                    for k, s in enumerate(b):
                        if k == nxt:
                            pos.append(odd_before & 1)
                            nxt = next(it, None)
                            if nxt is None:
                                break
                        if s is not None and par[s[0]]:
                            odd_before += 1
                    pat = (vals, tuple(pos))
                else:
                    pat = vals
                prods = table.get(pat)
                if prods is None:
                    prods = self._group_products(terms, occ, vals,
                                                 pat[1] if any_odd else None)
                    table[pat] = prods
                if not prods:
                    continue
                for new, z in prods:
                    key = list(b)
                    for k, t in zip(occ, new):
                        key[k] = t
                    key = tuple(key)
                    c = get(key, 0) + y * z
                    if c:
                        out[key] = c
                    else:
                        del out[key]
        return out

    def _group_products(self, terms, occ, vals, pos):
        """sum_a x_a * a * (vals in slots occ), as [(new vals, coeff)]."""
        par = self.H.parity
        acc = {}
        for a, x in terms:
            if pos is not None:
                sign = sum(p for k, p in zip(occ, pos) if par[a[k][0]])
                if sign & 1:
                    x = -x
            partial = [((), x)]
            for k, v in zip(occ, vals):
                ak = a[k]
                partial = [(new + (t,), c * z) for new, c in partial
                           for t, z in self.slot_mul(ak, v)]
            for new, c in partial:
                acc[new] = acc.get(new, 0) + c
        return [(new, c) for new, c in acc.items() if c]

    def vacuum(self):
        return {self._empty: mpq(1)}

    def slot_elem(self, i, h, exp=0):
        """The state h x^exp placed in slot i (empty elsewhere)."""
        out = {}
        for c, x in enumerate(h.coeffs):
            if x:
                slots = list(self._empty)
                slots[i] = (c, exp)
                self.add_term(out, tuple(slots), self.scalar(x))
        return out

    def P(self, h, m):
        """P(h x^m) = sum_i (h x^m)_i."""
        out = {}
        for i in range(self.N):
            vadd(out, self.slot_elem(i, h, m))
        return out

    def delta(self, i, j, u=None):
        """(u Delta)_{ij} = u_i Delta_{ij} as a state with x^0 slots."""
        key = ("delta", i, j, u)
        if key not in self._cache:
            self._cache[key] = self._delta(i, j, u)
        return self._cache[key]

    def _delta(self, i, j, u):
        H = self.H
        out = {}
        for a, b, c in H.coproduct:
            slots = list(self._empty)
            slots[i] = (a, 0)
            slots[j] = (b, 0)
            slots = tuple(slots)
            if i > j:
                # b_j placed before a_i in slot order
                if H.parity[a] and H.parity[b]:
                    c = -c
            self.add_term(out, slots, self.scalar(c))
        if u is not None:
            out = self.mul(self.slot_elem(i, u), out)
        return out

    # operators ----------------------------------------------------------------
    def reflect(self, i, j, v):
        """Swap particles i < j with the Koszul sign."""
        if i > j:
            i, j = j, i
        H = self.H
        out = {}
        for slots, c in v.items():
            pi, pj = _slot_parity(H, slots[i]), _slot_parity(H, slots[j])
            sign = pi * pj
            if pi + pj:
                for k in range(i + 1, j):
                    sign += (pi + pj) * _slot_parity(H, slots[k])
            s = list(slots)
            s[i], s[j] = s[j], s[i]
            if not self.koszul:
                sign = 0
            self.add_term(out, tuple(s), -c if sign % 2 else c)
        return out

    def permute(self, w, v):
        """Apply a permutation (tuple: new slot k holds old slot w[k])."""
        # decompose into adjacent transpositions for the sign
        out = v
        cur = list(range(self.N))
        target = list(w)
        for pos in range(self.N):
            k = cur.index(target[pos])
            while k > pos:
                out = self.reflect(k - 1, k, out)
                cur[k - 1], cur[k] = cur[k], cur[k - 1]
                k -= 1
        return out

    def d(self, l, v):
        """d_l = sum_i l_i x_i d/dx_i."""
        out = {}
        for slots, c in v.items():
            w = sum(li * s[1] for li, s in zip(l, slots) if s is not None)
            if w:
                out[slots] = c * w
        return out

    def divide(self, i, j, v):
        """Exact division by (1 - x_i / x_j), for any i != j."""
        # group by everything except the exponents of slots i, j
        groups = {}
        for slots, c in v.items():
            si, sj = slots[i], slots[j]
            if self.unital:
                si = (self.H.unit, 0) if si is None else si
                sj = (self.H.unit, 0) if sj is None else sj
            elif si is None or sj is None:
                raise InternalError("divide needs occupied slots")
            key = list(slots)
            key[i] = (si[0], None)
            key[j] = (sj[0], None)
            groups.setdefault((tuple(key), si[1] + sj[1]), {})[si[1]] = c
        out = {}
        for (key, deg), coeffs in groups.items():
            ks = sorted(coeffs)
            run = 0
            for k in range(ks[0], ks[-1] + 1):
                run = run + coeffs.get(k, 0)
                if k == ks[-1]:
                    if run:
                        raise InternalError("not divisible by (1 - x_i/x_j)")
                    break
                if run:
                    s = list(key)
                    s[i] = (key[i][0], k)
                    s[j] = (key[j][0], deg - k)
                    self.add_term(out, tuple(s), run)
        return out

    def nabla(self, i, j, v, u=None):
        """(u nabla)_{ij} = u_i / (1 - x_i/x_j) Delta_{ij} (1 - r_{ij}), i != j."""
        diff = dict(v)
        vadd(diff, self.reflect(i, j, v), -1)
        if not diff:
            return {}
        D = self.delta(min(i, j), max(i, j), u)
        return self.divide(i, j, self.mul(D, diff))

    def rho_pairing(self, l, uinv):
        """<rho~(u^{-1}), l> = 1/2 sum_{i<j} (l_i - l_j) (u^{-1} Delta)_{ij}."""
        key = ("rho", tuple(l), uinv)
        if key in self._cache:
            return self._cache[key]
        out = {}
        for i in range(self.N):
            for j in range(i + 1, self.N):
                a = l[i] - l[j]
                if a:
                    vadd(out, self.delta(i, j, uinv), mpq(a, 2))
        self._cache[key] = out
        return out

    def dunkl(self, l, u, v, uinv=None):
        """y_l(u) v = d_l v + sum_{a>0} <a,l> (u^-1 nabla)_{-a} v - <rho~(u^-1), l> v.

        For a = e_i - e_j the divided difference has denominator
        1 - e^{-a} = 1 - x_j/x_i, which is nabla_{ji}.
        """
        if uinv is None:
            uinv = invert_even(u)
        out = self.d(l, v)
        for i in range(self.N):
            for j in range(i + 1, self.N):
                a = l[i] - l[j]
                if a:
                    vadd(out, self.nabla(j, i, v, uinv), a * self.nabla_sign)
        rho = self.rho_pairing(l, uinv)
        if rho:
            vadd(out, self.mul(rho, v), -1)
        return out

    def unit_vec(self, i):
        return tuple(int(k == i) for k in range(self.N))

    def y(self, i, u, v, uinv=None):
        return self.dunkl(self.unit_vec(i), u, v, uinv)

    def rho_rho(self, uinv):
        """<rho~, rho~> = 1/4 sum_{a,b>0} <a,b> (u^-1 Delta)_a (u^-1 Delta)_b."""
        N = self.N
        roots = [(i, j) for i in range(N) for j in range(i + 1, N)]
        deltas = {r: self.delta(r[0], r[1], uinv) for r in roots}
        out = {}
        for a in roots:
            for b in roots:
                ip = ((a[0] == b[0]) - (a[0] == b[1]) - (a[1] == b[0]) + (a[1] == b[1]))
                if ip:
                    vadd(out, self.mul(deltas[a], deltas[b]), mpq(ip, 4))
        return out

    # spherical -------------------------------------------------------------------
    def is_symmetric(self, v):
        for i in range(self.N - 1):
            r = self.reflect(i, i + 1, v)
            if r != v:
                return False
        return True

    def spherical(self, poly, u, v, check=True, uinv=None):
        """sum over (h, k) of sum_i h_i y_i(u)^k applied to a symmetric state."""
        return self.spherical_many([poly], u, v, check, uinv)[0]

    def spherical_many(self, polys, u, v, check=True, uinv=None):
        """Several spherical operators on one state, sharing the powers y_i^k v."""
        if check and not self.is_symmetric(v):
            raise AsymmetricInput("spherical operators need symmetric input")
        if uinv is None:
            uinv = invert_even(u)
        top = max((k for poly in polys for _, k in poly), default=0)
        outs = [{} for _ in polys]
        for i in range(self.N):
            powers = [v]
            for _ in range(top):
                powers.append(self.y(i, u, powers[-1], uinv))
            for out, poly in zip(outs, polys):
                for h, k in poly:
                    vadd(out, self.mul(self.slot_elem(i, h), powers[k]))
        if check and not all(self.is_symmetric(out) for out in outs):
            raise InternalError("spherical output is not symmetric")
        return outs

    # Fock transport ------------------------------------------------------------------
    def embed(self, mono):
        """P(part_1) ... P(part_r) for a Fock monomial."""
        if len(mono) > self.N:
            raise ValueError("N = %d is too small for %d parts" % (self.N, len(mono)))
        key = ("embed", mono)
        if key in self._cache:
            return self._cache[key]
        H = self.H
        v = self.vacuum()
        for m, c in reversed(mono):
            v = self.mul(self.P(H.basis(c), m), v)
        self._cache[key] = v
        return v

    def _lead(self, mono, image):
        key = ("lead", mono)
        lead = self._cache.get(key)
        if lead is None:
            lead = self._cache[key] = max(image, key=_peel_key)
        return lead

    def project(self, v):
        """Invert P on a symmetric state, then drop everything in H . Sym H[x].

        The state is peeled by its tensors with the most occupied slots:
        such a tensor is the leading term of P(w) for exactly one monomial w.
        """
        if self.unital:
            raise ValueError("the Fock transport needs the non-unital arena")
        H = self.H
        v = dict(v)
        out = {}
        while v:
            slots = max(v, key=_peel_key)
            parts = [s for s in slots if s is not None]
            if any(e < 0 for _, e in parts):
                raise InternalError("negative exponent in a projected state")
            sign, mono = fock.canonical([(e, c) for c, e in parts], H.parity)
            if not sign:
                raise InternalError("odd repeat in a symmetric state")
            image = self.embed(mono)
            lead = image.get(slots)
            if not lead:
                raise InternalError("P(w) misses its leading tensor")
            if slots != self._lead(mono, image):
                raise InternalError("projected state is not symmetric")
            coeff = v[slots] / lead
            vadd(v, image, -coeff)
            if all(m >= 1 for m, _ in mono):
                vadd(out, {mono: _to_fraction(coeff)})
        return out


def _to_fraction(c):
    return Fraction(c) if isinstance(c, type(mpq(0))) else c


def _peel_key(slots):
    occ = sum(s is not None for s in slots)
    return (occ, tuple((-1, -1) if s is None else (s[1], s[0]) for s in slots))


# ---------------------------------------------------------------------------
# Fock transport and spherical operators on F^n

def default_particles(n):
    """Particle count for which the transport of spherical operators of
    degree <= 2 in y is exact on F^n (the unit coefficient of y^2 needs the
    most room)."""
    return n + 3


def embed_fock(H, mono, N):
    return dict(Arena(H, N).embed(mono))


def project_fock(H, v, N=None):
    if N is None:
        N = len(next(iter(v))) if v else 1
    return Arena(H, N).project(v)


def spherical_columns(H, u, poly, n, N=None, minus_rho=False):
    """Columns of sum_(h,k) P(h y(u)^k) on F^n, as {mono: FockVector}.

    With ``minus_rho`` the multiplication by <rho~, rho~> is subtracted.
    """
    return spherical_columns_many(H, u, [poly], n, N, minus_rho)[0]


def spherical_columns_many(H, u, polys, n, N=None, minus_rho=False):
    """spherical_columns for several polynomials at once."""
    if N is None:
        N = default_particles(n)
    if N < n:
        raise ValueError("need at least n = %d particles" % n)
    A = Arena(H, N)
    uinv = invert_even(u)
    rr = A.rho_rho(uinv) if minus_rho else None
    cols = [{} for _ in polys]
    for mono in fock.enumerate_basis(H, n):
        v = A.embed(mono)
        ws = A.spherical_many(polys, u, v, check=False, uinv=uinv)
        for c, w in zip(cols, ws):
            if rr:
                vadd(w, A.mul(rr, v), -1)
            c[mono] = A.project(w)
    return cols


def columns_to_matrix(H, n, cols, zero=Fraction(0)):
    from .heisenberg import WeightOperator
    src = fock.enumerate_basis(H, n)
    idx = fock.basis_index(H, n)
    M = [[zero] * len(src) for _ in src]
    for j, mono in enumerate(src):
        for t, c in cols[mono].items():
            if t not in idx:
                raise InternalError("spherical operator left F^%d" % n)
            M[idx[t]][j] = c
    return WeightOperator(n, n, M)


def rho_rho_projection(H, u, n, N):
    """project(<rho~(u^-1), rho~(u^-1)> . embed(w)) for every w in F^n."""
    A = Arena(H, N)
    rr = A.rho_rho(invert_even(u))
    return {mono: A.project(A.mul(rr, A.embed(mono)))
            for mono in fock.enumerate_basis(H, n)}


# ---------------------------------------------------------------------------
# windowed bases and the Hecke-algebra checks

def window_basis(H, N, degree):
    """Pure tensors with every slot occupied, exponents >= 0 summing to ``degree``."""
    def comps(d, k):
        if k == 1:
            yield (d,)
            return
        for a in range(d + 1):
            for rest in comps(d - a, k - 1):
                yield (a,) + rest
    for cols in product(range(H.dim), repeat=N):
        for ex in comps(degree, N):
            yield tuple(zip(cols, ex))


def _states(H, N, max_degree):
    for d in range(max_degree + 1):
        for slots in window_basis(H, N, d):
            yield {slots: mpq(1)}


def dunkl_commutator_check(H, N, max_degree, u=None, nabla_sign=1, koszul=True):
    """[y_i, y_j] = 0 on the window. Returns a list of counterexamples."""
    u = H.one() if u is None else u
    uinv = invert_even(u)
    A = Arena(H, N, nabla_sign=nabla_sign, koszul=koszul)
    bad = []
    for v in _states(H, N, max_degree):
        try:
            ys = [A.y(i, u, v, uinv) for i in range(N)]
        except InternalError:
            # a broken convention can leave non-divisible differences
            bad.append((next(iter(v)), None, None))
            continue
        for i in range(N):
            for j in range(i + 1, N):
                try:
                    ok = A.y(i, u, ys[j], uinv) == A.y(j, u, ys[i], uinv)
                except InternalError:
                    ok = False
                if not ok:
                    bad.append((next(iter(v)), i, j))
    return bad


def _apply_word(A, word, u, v, uinv):
    """Apply a monomial y_{w_1} ... y_{w_r} (rightmost first)."""
    for i in reversed(word):
        v = A.y(i, u, v, uinv)
    return v


def hecke_check(H, N, max_degree, u=None):
    """f r - r (r f) = (u^-1 Delta)_a (r f - f) / (y_i - y_{i+1}), a = e_i - e_{i+1}.

    Checked for f in {y_i, y_i^2, y_i y_{i+1}}; the divided differences are
    -1, -(y_i + y_{i+1}) and 0. Returns a list of counterexamples.
    """
    u = H.one() if u is None else u
    uinv = invert_even(u)
    A = Arena(H, N)
    bad = []
    for v in _states(H, N, max_degree):
        for i in range(N - 1):
            j = i + 1
            D = A.delta(i, j, uinv)
            cases = [
                ("y_i", [(i,)], [(j,)], [(-1, ())]),
                ("y_i^2", [(i, i)], [(j, j)], [(-1, (i,)), (-1, (j,))]),
                ("y_i y_i+1", [(i, j)], [(j, i)], []),
            ]
            for name, f, rf, dd in cases:
                lhs = {}
                for w in f:
                    vadd(lhs, _apply_word(A, w, u, A.reflect(i, j, v), uinv))
                for w in rf:
                    vadd(lhs, A.reflect(i, j, _apply_word(A, w, u, v, uinv)), -1)
                inner = {}
                for c, w in dd:
                    vadd(inner, _apply_word(A, w, u, v, uinv), c)
                rhs = A.mul(D, inner)
                if lhs != rhs:
                    bad.append((name, next(iter(v)), i))
    return bad


def cascomp_i_check(H, N, max_degree, u=None):
    """sum_i y_i = sum_i d_i on the full window."""
    u = H.one() if u is None else u
    uinv = invert_even(u)
    A = Arena(H, N)
    ones = (1,) * N
    bad = []
    for v in _states(H, N, max_degree):
        if A.dunkl(ones, u, v, uinv) != A.d(ones, v):
            bad.append(next(iter(v)))
    return bad


def symmetrize(A, v):
    out = {}
    for w in permutations(range(A.N)):
        vadd(out, A.permute(w, v))
    return out


def coupling_term(A, v, uinv):
    """sum_{a>0} (1 + e^-a)/(1 - e^-a) (u^-1 Delta)_a d_a v, for symmetric v.

    For a = e_i - e_j, d_a v is antisymmetric under r_a, so the quotient is
    (1/2)(1 + x_j/x_i) nabla_{ji}(d_a v).
    """
    N = A.N
    out = {}
    for i in range(N):
        for j in range(i + 1, N):
            l = tuple(int(k == i) - int(k == j) for k in range(N))
            t = A.nabla(j, i, A.d(l, v), uinv)
            vadd(out, t, mpq(1, 2))
            vadd(out, _shift(A, j, i, t), mpq(1, 2))
    return out


def _shift(A, i, j, v):
    """Multiply by x_i / x_j."""
    out = {}
    for slots, c in v.items():
        s = list(slots)
        s[i] = (s[i][0], s[i][1] + 1)
        s[j] = (s[j][0], s[j][1] - 1)
        A.add_term(out, tuple(s), c)
    return out


def cascomp_ii_check(H, N, max_degree, u=None):
    """sum y_i^2 - <rho~, rho~> = sum d_i^2 + coupling on symmetric states."""
    u = H.one() if u is None else u
    uinv = invert_even(u)
    A = Arena(H, N)
    rr = A.rho_rho(uinv)
    bad = []
    seen = set()
    for v in _states(H, N, max_degree):
        sv = symmetrize(A, v)
        key = frozenset(sv.items())
        if not sv or key in seen:
            continue
        seen.add(key)
        lhs = A.spherical([(H.one(), 2)], u, sv, uinv=uinv)
        vadd(lhs, A.mul(rr, sv), -1)
        rhs = {}
        for i in range(N):
            l = A.unit_vec(i)
            vadd(rhs, A.d(l, A.d(l, sv)))
        vadd(rhs, coupling_term(A, sv, uinv))
        if lhs != rhs:
            bad.append(next(iter(v)))
    return bad


# ---------------------------------------------------------------------------
# the delta-basis calculus of symmetric powers

def delta_power(t, n):
    """Coefficients of x * ... * x (n factors) in Sym^infty of the algebra
    C with a*b = t ab, in the delta basis: {a: t^(n-a) S(n, a)}.

    Computed by repeated use of delta_r(x..x) P(x) = delta_{r+1} + r delta_r(.., x*x, ..)
    in the one-dimensional case, where x*x = t x.
    """
    t = Fraction(t)
    cur = {1: Fraction(1)}
    for _ in range(n - 1):
        nxt = {}
        for r, c in cur.items():
            nxt[r + 1] = nxt.get(r + 1, 0) + c
            nxt[r] = nxt.get(r, 0) + c * r * t
        cur = nxt
    return {a: c for a, c in cur.items() if c}


def delta_power_by_partitions(t, n):
    """The same coefficients by counting set partitions directly."""
    counts = {}

    def rec(i, blocks):
        if i == n:
            counts[blocks] = counts.get(blocks, 0) + 1
            return
        # join one of the existing blocks or open a new one
        for _ in range(blocks):
            rec(i + 1, blocks)
        rec(i + 1, blocks + 1)
    rec(0, 0)
    t = Fraction(t)
    return {a: c * t ** (n - a) for a, c in counts.items()}


def delta_power_in_arena(H, x, n):
    """Expand x * ... * x (n factors) in the delta basis of Sym^n of the augmented algebra.

    ``x`` is an element of H; the product is computed as P(x)^n in the
    n-particle arena and read off on delta_a(x, ..., x) = a! (sum over
    a-subsets of slots carrying x). Only the single-color case is supported:
    x must be a multiple of one basis element b with b*b proportional to b.
    """
    A = Arena(H, n)
    supp = [i for i, c in enumerate(x.coeffs) if c]
    if len(supp) != 1:
        raise ValueError("need x proportional to one basis element")
    (b,) = supp
    xb = x.coeffs[b]
    v = A.vacuum()
    Px = A.P(x, 0)
    for _ in range(n):
        v = A.mul(Px, v)
    out = {}
    for a in range(1, n + 1):
        slots = tuple((b, 0) if k < a else None for k in range(n))
        c = v.get(slots, 0)
        if c:
            # delta_a(x..x) has coefficient a! xb^a on this tensor
            out[a] = c / (factorial(a) * xb ** a)
    return out
