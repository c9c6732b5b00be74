"""
Exact Gaussian elimination over any field whose elements support
``+ - * /`` and truth testing (Fraction, RationalFunction).

Matrices are lists of row lists.
"""

from fractions import Fraction


def zeros(m, n, zero=Fraction(0)):
    return [[zero] * n for _ in range(m)]


def identity(n, one=Fraction(1), zero=Fraction(0)):
    A = zeros(n, n, zero)
    for i in range(n):
        A[i][i] = one
    return A


def matmul(A, B):
    if not A:
        return []
    n = len(B)
    l = len(B[0]) if B else 0
    C = []
    for row in A:
        out = [0] * l
        for k in range(n):
            a = row[k]
            if not a:
                continue
            Bk = B[k]
            for j in range(l):
                b = Bk[j]
                if b:
                    out[j] = out[j] + a * b
        C.append(out)
    return C


def matvec(A, v):
    out = []
    for row in A:
        s = 0
        for a, x in zip(row, v):
            if a and x:
                s = s + a * x
        out.append(s)
    return out


def transpose(A):
    return [list(r) for r in zip(*A)]


def rref(A):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    R = [list(r) for r in A]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        piv = None
        for r in range(row, m):
            if R[r][col]:
                piv = r
                break
        if piv is None:
            continue
        R[row], R[piv] = R[piv], R[row]
        p = R[row][col]
        R[row] = [x / p if x else x for x in R[row]]
        for r in range(m):
            if r != row and R[r][col]:
                f = R[r][col]
                Rr, Rp = R[r], R[row]
                R[r] = [a - f * b if b else a for a, b in zip(Rr, Rp)]
        pivots.append(col)
        row += 1
    return R[:row], pivots


def rank(A):
    if not A:
        return 0
    return len(rref(A)[1])


def solve(A, b):
    """Solve A x = b. Returns (x, nullity); raises ValueError if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    R, piv = rref(aug)
    if n in piv:
        raise ValueError("inconsistent linear system")
    x = [0] * n
    for r, c in enumerate(piv):
        x[c] = R[r][n]
    return x, n - len(piv)


def inverse(A):
    n = len(A)
    aug = [list(A[i]) + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    R, piv = rref(aug)
    if len(piv) < n or piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


class RowSpace:
    """Incrementally maintained row-reduced basis of a subspace of K^n."""

    def __init__(self, n):
        self.n = n
        self.rows = []      # reduced rows
        self.pivots = []    # pivot column of each row

    def reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b if b else a for a, b in zip(v, row)]
        return v

    def add(self, v):
        """Add ``v``; return True if it enlarged the space."""
        v = self.reduce(v)
        for p, c in enumerate(v):
            if c:
                v = [x / c if x else x for x in v]
                # keep existing rows reduced against the new pivot
                for i, row in enumerate(self.rows):
                    f = row[p]
                    if f:
                        self.rows[i] = [a - f * b if b else a
                                        for a, b in zip(row, v)]
                self.rows.append(v)
                self.pivots.append(p)
                return True
        return False

    def contains(self, v):
        return not any(self.reduce(v))

    def __len__(self):
        return len(self.rows)

    def canonical(self):
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        return [tuple(self.rows[i]) for i in order]
