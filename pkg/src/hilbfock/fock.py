"""
The Fock space F(H) = Sym xH[x] with its colored-partition basis.

A monomial is a tuple of parts (m, c): energy m >= 1 and color index c into
the basis of H, stored in canonical order (m descending, then c ascending).
It stands for the ordered product P(b_c x^m) ... of its parts. Vectors are
plain dicts ``{monomial: coeff}`` with no stored zeros.

``multiply`` is the single place where Koszul signs of the Fock product are
decided; everything else goes through it.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

VACUUM = ()


def part_key(part):
    m, c = part
    return (-m, c)


def canonical(parts, parity):
    """Sort ``parts`` into canonical order.

    Returns (sign, monomial), with sign 0 when an odd part repeats.
    """
    parts = list(parts)
    sign = 1
    # insertion sort so every transposition is an adjacent swap
    for i in range(1, len(parts)):
        j = i
        while j > 0 and part_key(parts[j]) < part_key(parts[j - 1]):
            if parity[parts[j][1]] and parity[parts[j - 1][1]]:
                sign = -sign
            parts[j], parts[j - 1] = parts[j - 1], parts[j]
            j -= 1
    for a, b in zip(parts, parts[1:]):
        if a == b and parity[a[1]]:
            return 0, None
    return sign, tuple(parts)


def multiply(H, a, b):
    """Product of two monomials as a vector (empty dict if zero)."""
    sign, mono = canonical(a + b, H.parity)
    if not sign:
        return {}
    return {mono: Fraction(sign)}


def mono_parity(H, mono):
    return sum(H.parity[c] for _, c in mono) % 2


def energy(mono):
    return sum(m for m, _ in mono)


def cohomological_degree(H, mono):
    """Part (m, c) has degree deg(b_c) + 2(m - 1)."""
    return sum(H.degrees[c] + 2 * (m - 1) for m, c in mono)


def partitions(n, maxpart=None):
    """Partitions of n as descending tuples."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _colorings(H, mult):
    """Multisets of ``mult`` colors with no repeated odd color."""
    out = []
    for cs in combinations_with_replacement(range(H.dim), mult):
        if any(a == b and H.parity[a] for a, b in zip(cs, cs[1:])):
            continue
        out.append(cs)
    return out


@lru_cache(maxsize=None)
def enumerate_basis(H, n):
    """All colored partitions of n, ordered by shape then colors."""
    out = []
    for shape in sorted(partitions(n)):
        runs = []
        for m in sorted(set(shape), reverse=True):
            runs.append((m, _colorings(H, shape.count(m))))
        monos = [()]
        for m, cols in runs:
            monos = [mono + tuple((m, c) for c in cs) for mono in monos for cs in cols]
        out.extend(sorted(monos, key=lambda mono: tuple(c for _, c in mono)))
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(H, n):
    return {mono: i for i, mono in enumerate(enumerate_basis(H, n))}


def dimension(H, n):
    """Coefficient of q^n in prod_m (1 + q^m)^b_odd / (1 - q^m)^b_even."""
    b_odd = sum(H.parity)
    b_even = H.dim - b_odd
    series = [0] * (n + 1)
    series[0] = 1
    for m in range(1, n + 1):
        for _ in range(b_even):
            for k in range(m, n + 1):       # multiply by 1/(1 - q^m)
                series[k] += series[k - m]
        for _ in range(b_odd):
            for k in range(n, m - 1, -1):   # multiply by (1 + q^m)
                series[k] += series[k - m]
    return series[n]


# ---------------------------------------------------------------------------
# sparse vectors

def vadd(acc, v, scale=1):
    """acc += scale * v, in place; drops zeros."""
    for k, c in v.items():
        x = acc.get(k, 0) + scale * c
        if x:
            acc[k] = x
        elif k in acc:
            del acc[k]
    return acc


def vscale(v, s):
    if not s:
        return {}
    return {k: c * s for k, c in v.items()}


def vmul(H, u, v):
    """Product of two Fock vectors."""
    out = {}
    for a, x in u.items():
        for b, y in v.items():
            vadd(out, multiply(H, a, b), x * y)
    return out


def generator(H, h, m):
    """The vector P(h x^m) for an element h of H."""
    return {((m, c),): x for c, x in enumerate(h.coeffs) if x}


def to_coords(H, n, v):
    idx = basis_index(H, n)
    out = [Fraction(0)] * len(idx)
    for mono, c in v.items():
        out[idx[mono]] = c
    return out


def from_coords(H, n, coords):
    return {mono: c for mono, c in zip(enumerate_basis(H, n), coords) if c}


def mono_str(H, mono):
    if not mono:
        return "|0>"
    return "*".join("P(%s x^%d)" % (H.labels[c], m) for m, c in mono)


def vec_str(H, v):
    if not v:
        return "0"
    return " + ".join("(%s) %s" % (c, mono_str(H, mono)) for mono, c in sorted(v.items()))
