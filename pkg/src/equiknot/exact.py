"""Dense exact matrices over Q and the linear-algebra primitives built on them.

Rationals are ``fractions.Fraction`` (arbitrary precision, always reduced).
Matrices act on column vectors; a bilinear form with Gram matrix A is
``theta(x, y) = x^T A y``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonSymmetric, ShapeMismatch
from .polynomials.ratpoly import RatPoly

Vector = tuple  # tuple of Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


class MatQ:
    """Immutable dense matrix with Fraction entries, stored as a tuple of rows."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(_frac(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged matrix rows")
        object.__setattr__(self, "_data", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, key, value):
        raise AttributeError("MatQ is immutable")

    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> MatQ:
        c = r if c is None else c
        return cls(((0,) * c for _ in range(r)), c)

    @classmethod
    def identity(cls, n: int) -> MatQ:
        return cls(((1 if i == j else 0) for j in range(n)) for i in range(n))

    @classmethod
    def diag(cls, values: Sequence) -> MatQ:
        n = len(values)
        return cls(((values[i] if i == j else 0) for j in range(n)) for i in range(n))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> MatQ:
        if not columns:
            return cls.zeros(nrows or 0, 0)
        return cls(zip(*columns), len(columns))

    @classmethod
    def block_diag(cls, *blocks: MatQ) -> MatQ:
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r + i][c + j] = b[i, j]
            r += b.rows
            c += b.cols
        return cls(out, m)

    @classmethod
    def block(cls, grid: Sequence[Sequence[MatQ]]) -> MatQ:
        rows = []
        for brow in grid:
            for i in range(brow[0].rows):
                rows.append([x for b in brow for x in b._data[i]])
        return cls(rows, sum(b.cols for b in grid[0]))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple:
        return tuple(x for row in self._data for x in row)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __eq__(self, other):
        if not isinstance(other, MatQ):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self):
        return f"MatQ({[[str(x) for x in r] for r in self._data]})"

    @property
    def T(self) -> MatQ:
        return MatQ(zip(*self._data), self.rows) if self.rows else MatQ.zeros(self.cols, 0)

    def _check_same(self, other: MatQ):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: MatQ) -> MatQ:
        self._check_same(other)
        return MatQ(((a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self.cols)

    def __sub__(self, other: MatQ) -> MatQ:
        self._check_same(other)
        return MatQ(((a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self.cols)

    def __neg__(self) -> MatQ:
        return MatQ(((-a for a in r) for r in self._data), self.cols)

    def scale(self, c) -> MatQ:
        c = _frac(c)
        return MatQ(((c * a for a in r) for r in self._data), self.cols)

    def __mul__(self, c) -> MatQ:
        if isinstance(c, MatQ):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def __matmul__(self, other: MatQ) -> MatQ:
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * col[k] for k, a in nz), Fraction(0)) for col in ocols])
        return MatQ(out, other.cols)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ShapeMismatch("vector length does not match")
        return tuple(sum((a * x for a, x in zip(r, v) if a and x), Fraction(0)) for r in self._data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_skew(self) -> bool:
        return self.is_square() and self == -self.T

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._data for x in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> MatQ:
        return MatQ(((self._data[i][j] for j in cols) for i in rows), len(cols))

    def power(self, n: int) -> MatQ:
        result = MatQ.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def trace(self) -> Fraction:
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def rank(self) -> int:
        return len(rref(self.tolist())[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise ShapeMismatch("determinant of a non-square matrix")
        a = self.tolist()
        n = self.rows
        det = Fraction(1)
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k]), None)
            if p is None:
                return Fraction(0)
            if p != k:
                a[k], a[p] = a[p], a[k]
                det = -det
            piv = a[k][k]
            det *= piv
            for i in range(k + 1, n):
                f = a[i][k] / piv
                if f:
                    ri, rk = a[i], a[k]
                    for j in range(k, n):
                        ri[j] -= f * rk[j]
        return det

    def inverse(self) -> MatQ:
        if not self.is_square():
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._data)]
        red, piv = rref(aug)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return MatQ((r[n:] for r in red), n)

    def solve(self, b: Sequence) -> Vector:
        """A solution x of ``self @ x = b`` (raises if inconsistent)."""
        n = self.cols
        aug = [list(r) + [_frac(x)] for r, x in zip(self._data, b)]
        red, piv = rref(aug)
        if n in piv:
            raise ArithmeticError("inconsistent linear system")
        x = [Fraction(0)] * n
        for i, p in enumerate(piv):
            x[p] = red[i][n]
        return tuple(x)


def rref(a: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a list of rows (modified copy) and its pivot columns."""
    a = [list(r) for r in a]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        pr = a[r]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[: len(pivots)], pivots


class Subspace:
    """A subspace of Q^n, stored by the reduced echelon basis of its spanning rows.

    That representative is unique, so ``==`` decides equality of subspaces.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vecs = [[_frac(x) for x in v] for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise ShapeMismatch("vector length does not match ambient dimension")
        red, piv = rref(vecs) if vecs else ([], [])
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in red))
        object.__setattr__(self, "pivots", tuple(piv))

    def __setattr__(self, key, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, MatQ.identity(n).tolist())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> MatQ:
        """Columns are the canonical basis vectors."""
        return MatQ.from_columns(self.basis, self.ambient_dim) if self.basis else MatQ.zeros(self.ambient_dim, 0)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace({self.ambient_dim}, {[[str(x) for x in v] for v in self.basis]})"

    def contains(self, v: Sequence) -> bool:
        return Subspace(self.ambient_dim, list(self.basis) + [list(v)]).dim == self.dim

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: Subspace) -> Subspace:
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.ambient_dim)
        # x = U a = W b  <=>  [U | -W] (a, b) = 0
        U = self.basis_matrix()
        W = other.basis_matrix()
        M = MatQ.block([[U, -W]])
        ker = kernel(M)
        return Subspace(self.ambient_dim, [U.apply(v[: self.dim]) for v in ker.basis])

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of v in the canonical basis (v must lie in the subspace)."""
        coeffs = tuple(_frac(v[p]) for p in self.pivots)
        recon = [sum((c * b[i] for c, b in zip(coeffs, self.basis)), Fraction(0)) for i in range(self.ambient_dim)]
        if tuple(recon) != tuple(_frac(x) for x in v):
            raise ValueError("vector is not in the subspace")
        return coeffs

    def image(self, M: MatQ) -> Subspace:
        return Subspace(M.rows, [M.apply(v) for v in self.basis])


def kernel(M: MatQ) -> Subspace:
    """Right null space ``{x : M x = 0}``."""
    n = M.cols
    red, piv = rref(M.tolist()) if M.rows else ([], [])
    free = [j for j in range(n) if j not in piv]
    vecs = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -red[i][f]
        vecs.append(v)
    return Subspace(n, vecs)


def column_space(M: MatQ) -> Subspace:
    return Subspace(M.rows, M.columns())


def left_kernel(rows: Sequence[Sequence], n: int) -> Subspace:
    """``{x : r . x = 0 for every covector r}``."""
    if not rows:
        return Subspace.full(n)
    return kernel(MatQ(rows, n))


def signature_symmetric(M: MatQ) -> tuple[int, int, int]:
    """Inertia ``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix."""
    if not M.is_symmetric():
        raise NonSymmetric("matrix is not symmetric")
    a = M.tolist()
    active = list(range(M.rows))
    npos = nneg = 0
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is not None:
            piv = a[k][k]
            if piv > 0:
                npos += 1
            else:
                nneg += 1
            active.remove(k)
            row_k = a[k]
            for i in active:
                f = row_k[i] / piv
                if f:
                    ri = a[i]
                    for j in active:
                        if row_k[j]:
                            ri[j] -= f * row_k[j]
            continue
        pair = next(((i, j) for ii, i in enumerate(active) for j in active[ii + 1:] if a[i][j]), None)
        if pair is None:
            break
        # zero diagonal with a_ij != 0: the 2x2 block [[0, c], [c, 0]] is a hyperbolic plane
        i, j = pair
        c = a[i][j]
        npos += 1
        nneg += 1
        active.remove(i)
        active.remove(j)
        ri, rj = a[i], a[j]
        for k in active:
            for l in active:
                upd = ri[k] * rj[l] + rj[k] * ri[l]
                if upd:
                    a[k][l] -= upd / c
    return npos, nneg, M.rows - npos - nneg


def signature(M: MatQ) -> int:
    p, n, _ = signature_symmetric(M)
    return p - n


def realify(B: MatQ, C: MatQ, scale=1) -> MatQ:
    """Real symmetric matrix of the Hermitian form ``B + i*scale*C``."""
    sc = C.scale(scale)
    return MatQ.block([[B, -sc], [sc, B]])


def signature_hermitian(B: MatQ, C: MatQ, scale=1) -> tuple[int, int, int]:
    """Inertia of the Hermitian matrix ``B + i*scale*C`` (B symmetric, C skew)."""
    if B.shape != C.shape or not B.is_square():
        raise ShapeMismatch(f"{B.shape} vs {C.shape}")
    if not B.is_symmetric():
        raise NonSymmetric("real part is not symmetric")
    if not C.is_skew():
        raise NonSymmetric("imaginary part is not skew-symmetric")
    p, n, z = signature_symmetric(realify(B, C, scale))
    # every eigenvalue of the complex matrix appears twice in the realification
    assert p % 2 == 0 and n % 2 == 0 and z % 2 == 0
    return p // 2, n // 2, z // 2


def charpoly(M: MatQ) -> RatPoly:
    """``det(s I - M)`` by the Faddeev-LeVerrier recurrence."""
    n = M.rows
    if n == 0:
        return RatPoly((1,))
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    I = MatQ.identity(n)
    Mk = MatQ.zeros(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + I.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(M @ Mk).trace() / k
    return RatPoly(coeffs)


def poly_at_matrix(q: RatPoly, M: MatQ) -> MatQ:
    n = M.rows
    acc = MatQ.zeros(n)
    I = MatQ.identity(n)
    for c in reversed(q.coeffs):
        acc = M @ acc + I.scale(c)
    return acc


def generalized_eigenspace(S: MatQ, q: RatPoly) -> Subspace:
    """``ker q(S)^N`` for N large enough that the kernel has stabilized."""
    Q = poly_at_matrix(q, S)
    K = kernel(Q)
    power = Q
    while True:
        power = power @ Q
        nxt = kernel(power)
        if nxt.dim == K.dim:
            return K
        K = nxt


def restrict_form(B: MatQ, U: Subspace | MatQ) -> MatQ:
    """Gram matrix ``U^T B U`` of a form on a subspace (or on the columns of a matrix)."""
    Um = U.basis_matrix() if isinstance(U, Subspace) else U
    return Um.T @ B @ Um


def restrict_operator(S: MatQ, U: Subspace) -> MatQ:
    """Matrix of S on an S-invariant subspace, in the canonical basis of U."""
    cols = [U.coordinates(S.apply(v)) for v in U.basis]
    return MatQ.from_columns(cols, U.dim) if cols else MatQ.zeros(0, 0)


def vec_dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def bilinear(A: MatQ, x: Sequence, y: Sequence) -> Fraction:
    return vec_dot(x, A.apply(y))


def as_matrix(data) -> MatQ:
    if isinstance(data, MatQ):
        return data
    return MatQ(data)
