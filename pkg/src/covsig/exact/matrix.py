"""Dense exact rational matrices and hermitian signatures.

The signature routine works by symmetric (congruence) elimination over the
Gaussian rationals with exact pivots, so the answer carries no tolerance at
all.  Zero pivots are handled the standard way for hermitian forms: first try
a symmetric row/column swap onto a nonzero diagonal entry, then fall back to a
2x2 off-diagonal block pivot, which contributes zero to the signature.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DimensionMismatch, NotHermitian, SingularMatrix
from .gauss import GaussRat


def _frac_rows(rows):
    out = []
    width = None
    for row in rows:
        frow = [Fraction(x) for x in row]
        if width is None:
            width = len(frow)
        elif len(frow) != width:
            raise DimensionMismatch("ragged rows")
        out.append(frow)
    return out


class RatMatrix:
    """Row-major matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = _frac_rows(rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols=None):
        if ncols is None:
            ncols = nrows
        return cls([[0] * ncols for _ in range(nrows)])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"RatMatrix[{body}]"

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return RatMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return RatMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        return RatMatrix([[-a for a in row] for row in self.rows])

    def scale(self, c):
        c = Fraction(c)
        return RatMatrix([[c * a for a in row] for row in self.rows])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        bt = list(zip(*other.rows))
        return RatMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.rows]
        )

    def transpose(self):
        return RatMatrix([list(col) for col in zip(*self.rows)]) if self.rows else self

    def is_zero(self):
        return all(all(x == 0 for x in row) for row in self.rows)

    def pow(self, k):
        if not self.is_square:
            raise DimensionMismatch("pow of non-square matrix")
        result = RatMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def det(self):
        """Determinant by fraction-free style Gaussian elimination."""
        if not self.is_square:
            raise DimensionMismatch("determinant of non-square matrix")
        n = self.nrows
        m = [row[:] for row in self.rows]
        det = Fraction(1)
        for k in range(n):
            piv = None
            for i in range(k, n):
                if m[i][k] != 0:
                    piv = i
                    break
            if piv is None:
                return Fraction(0)
            if piv != k:
                m[k], m[piv] = m[piv], m[k]
                det = -det
            det *= m[k][k]
            inv = 1 / m[k][k]
            for i in range(k + 1, n):
                if m[i][k] == 0:
                    continue
                f = m[i][k] * inv
                mi, mk = m[i], m[k]
                for j in range(k + 1, n):
                    mi[j] -= f * mk[j]
                mi[k] = Fraction(0)
        return det

    def nullspace(self):
        """Basis of the right kernel, as a list of column vectors."""
        m = [row[:] for row in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            piv = None
            for i in range(r, nr):
                if m[i][c] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(nr):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        free = [c for c in range(nc) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * nc
            v[fc] = Fraction(1)
            for ri, pc in enumerate(pivots):
                v[pc] = -m[ri][fc]
            basis.append(v)
        return basis


def mat_inverse(M: RatMatrix) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination.

    Raises SingularMatrix when det(M) = 0.
    """
    if not M.is_square:
        raise DimensionMismatch("inverse of non-square matrix")
    n = M.nrows
    a = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, row in enumerate(M.rows)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            raise SingularMatrix("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return RatMatrix([row[n:] for row in a])


def block_matrix(grid) -> RatMatrix:
    """Assemble a matrix from a 2d grid of RatMatrix blocks."""
    rows = []
    for brow in grid:
        heights = {b.nrows for b in brow}
        if len(heights) != 1:
            raise DimensionMismatch("inconsistent block heights in a row")
        for i in range(heights.pop()):
            rows.append([x for b in brow for x in b.rows[i]])
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise DimensionMismatch("inconsistent block widths")
    return RatMatrix(rows)


def _as_gauss(H):
    out = []
    for row in H:
        orow = []
        for x in row:
            if isinstance(x, GaussRat):
                orow.append(x)
            else:
                orow.append(GaussRat(Fraction(x)))
        out.append(orow)
    return out


def hermitian_signature(H) -> int:
    """Signature (#positive - #negative eigenvalues) of a hermitian matrix.

    H is a square nested sequence of GaussRat (plain rationals coerce).
    Computed by exact congruence elimination; deterministic first-fit pivot
    choice, so the reduction is reproducible bit for bit.
    """
    m = _as_gauss(H)
    n = len(m)
    for row in m:
        if len(row) != n:
            raise NotHermitian("matrix is not square")
    for i in range(n):
        for j in range(i, n):
            if m[i][j] != m[j][i].conj():
                raise NotHermitian(f"entry ({i},{j}) != conj of ({j},{i})")

    sig = 0
    active = list(range(n))
    while active:
        # first-fit nonzero diagonal pivot
        pivot = None
        for i in active:
            if m[i][i]:
                pivot = i
                break
        if pivot is not None:
            p = m[pivot][pivot].re  # hermitian => real diagonal
            sig += 1 if p > 0 else -1
            rest = [i for i in active if i != pivot]
            for i in rest:
                if not m[i][pivot]:
                    continue
                f = m[i][pivot] / GaussRat(p)
                for j in rest:
                    m[i][j] = m[i][j] - f * m[pivot][j]
                m[i][pivot] = GaussRat(0)
            for j in rest:
                m[pivot][j] = GaussRat(0)
            active = rest
            continue
        # all active diagonal entries vanish: look for an off-diagonal entry
        block = None
        for ai, i in enumerate(active):
            for j in active[ai + 1:]:
                if m[i][j]:
                    block = (i, j)
                    break
            if block:
                break
        if block is None:
            break  # remaining form is zero
        i, j = block
        h = m[i][j]
        # 2x2 pivot [[0, h], [conj h, 0]]: signature 0, Schur complement below
        rest = [k for k in active if k not in (i, j)]
        for k in rest:
            a, b = m[k][i], m[k][j]
            if not a and not b:
                continue
            # [a, b] . S^{-1} . [m[i][l]; m[j][l]] with S = [[0,h],[h*,0]]
            ca = b / h
            cb = a / h.conj()
            for l in rest:
                m[k][l] = m[k][l] - ca * m[i][l] - cb * m[j][l]
            m[k][i] = GaussRat(0)
            m[k][j] = GaussRat(0)
        active = rest
    return sig
