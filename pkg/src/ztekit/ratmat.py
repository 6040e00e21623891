"""Exact rational matrices.

Entries are exact rationals.  Storage and the heavy products are delegated
to FLINT's ``fmpq_mat``; everything the rest of the package sees is a
:class:`Mat` whose entries come back as :class:`fractions.Fraction`.

>>> a = Mat.from_rows([[1, 2], [3, 4]])
>>> (a @ Mat.identity(2)) == a
True
>>> kron(Mat.from_rows([[0, 1], [1, 0]]), Mat.from_rows([[2]])).to_rows()
[[Fraction(0, 1), Fraction(2, 1)], [Fraction(2, 1), Fraction(0, 1)]]
"""

from fractions import Fraction
from itertools import product

import flint

Rat = Fraction


class ShapeError(ValueError):
    """Raised when matrix dimensions do not fit together."""


def to_rat(x):
    """Coerce ints, Fractions, fmpq and "p/q" strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    return Fraction(x)


def _fmpq(x):
    if isinstance(x, int):
        return flint.fmpq(x)
    q = to_rat(x)
    return flint.fmpq(q.numerator, q.denominator)


def rat_str(x):
    """Serialize a rational as 'p/q', or 'p' when the denominator is 1."""
    return str(to_rat(x))


class Mat:
    """Immutable exact rational matrix."""

    __slots__ = ("_m",)

    def __init__(self, raw):
        if not isinstance(raw, flint.fmpq_mat):
            raise TypeError("use Mat.from_rows / Mat.zeros / Mat.identity")
        self._m = raw

    # construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = [list(r) for r in rows]
        r = len(rows)
        c = len(rows[0]) if rows else (ncols or 0)
        if ncols is not None and c != ncols:
            raise ShapeError(f"expected {ncols} columns, got {c}")
        if any(len(row) != c for row in rows):
            raise ShapeError("ragged rows")
        flat = [_fmpq(x) for row in rows for x in row]
        return cls(flint.fmpq_mat(r, c, flat))

    @classmethod
    def from_entries(cls, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ShapeError("entries length must equal rows*cols")
        return cls(flint.fmpq_mat(rows, cols, [_fmpq(x) for x in entries]))

    @classmethod
    def from_dict(cls, rows, cols, items):
        """Build from {(i, j): value}; unspecified entries are zero."""
        m = flint.fmpq_mat(rows, cols)
        for (i, j), v in items.items():
            if v:
                m[i, j] = _fmpq(v)
        return cls(m)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(flint.fmpq_mat(rows, cols))

    @classmethod
    def identity(cls, n):
        m = flint.fmpq_mat(n, n)
        for i in range(n):
            m[i, i] = 1
        return cls(m)

    @classmethod
    def column(cls, vec):
        vec = list(vec)
        return cls(flint.fmpq_mat(len(vec), 1, [_fmpq(x) for x in vec]))

    @classmethod
    def row(cls, vec):
        vec = list(vec)
        return cls(flint.fmpq_mat(1, len(vec), [_fmpq(x) for x in vec]))

    @classmethod
    def unit(cls, rows, cols, i, j, value=1):
        m = flint.fmpq_mat(rows, cols)
        m[i, j] = _fmpq(value)
        return cls(m)

    # shape and access -------------------------------------------------
    @property
    def rows(self):
        return self._m.nrows()

    @property
    def cols(self):
        return self._m.ncols()

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def raw(self):
        return self._m

    @property
    def entries(self):
        return tuple(to_rat(x) for x in self._m.entries())

    def to_rows(self):
        c = self.cols
        e = self.entries
        return [list(e[i * c:(i + 1) * c]) for i in range(self.rows)]

    def col_vector(self, j=0):
        return [to_rat(self._m[i, j]) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return to_rat(self._m[i, j])

    def nonzeros(self):
        """List of (i, j, fmpq) for every nonzero entry."""
        c = self.cols
        if c == 0:
            return []
        return [(k // c, k % c, x) for k, x in enumerate(self._m.entries()) if x != 0]

    def is_zero(self):
        return all(x == 0 for x in self._m.entries())

    # arithmetic -------------------------------------------------------
    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        _same_shape(self, other)
        return Mat(self._m + other._m)

    def __sub__(self, other):
        _same_shape(self, other)
        return Mat(self._m - other._m)

    def __neg__(self):
        return Mat(-self._m)

    def scale(self, k):
        return Mat(self._m * _fmpq(k))

    @property
    def T(self):
        return Mat(self._m.transpose())

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._m == other._m

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.to_rows()!r})"

    def block(self, r0, r1, c0, c1):
        """Submatrix rows r0:r1, cols c0:c1."""
        out = flint.fmpq_mat(r1 - r0, c1 - c0)
        for i, j, x in self.nonzeros():
            if r0 <= i < r1 and c0 <= j < c1:
                out[i - r0, j - c0] = x
        return Mat(out)

    def with_entry(self, i, j, value):
        m = flint.fmpq_mat(self._m)
        m[i, j] = _fmpq(value)
        return Mat(m)


def _same_shape(a, b):
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")


def mat_mul(a, b):
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return Mat(a._m * b._m)


def mat_sum(mats, rows=None, cols=None):
    mats = list(mats)
    if not mats:
        return Mat.zeros(rows, cols)
    acc = mats[0]._m
    for m in mats[1:]:
        _same_shape(mats[0], m)
        acc = acc + m._m
    return Mat(acc)


def kron(*mats):
    """Kronecker product, left factor most significant."""
    if not mats:
        return Mat.identity(1)
    out = mats[0]
    for b in mats[1:]:
        out = _kron2(out, b)
    return out


def _kron2(a, b):
    r, c = a.rows * b.rows, a.cols * b.cols
    m = flint.fmpq_mat(r, c)
    bn = b.nonzeros()
    br, bc = b.rows, b.cols
    for i, j, x in a.nonzeros():
        for k, l, y in bn:
            m[i * br + k, j * bc + l] = x * y
    return Mat(m)


def kron_id(left, mat, right):
    """kron(I_left, mat, I_right) built directly."""
    r, c = left * mat.rows * right, left * mat.cols * right
    m = flint.fmpq_mat(r, c)
    nz = mat.nonzeros()
    mr, mc = mat.rows, mat.cols
    for a in range(left):
        for i, j, x in nz:
            ri = (a * mr + i) * right
            cj = (a * mc + j) * right
            for b in range(right):
                m[ri + b, cj + b] = x
    return Mat(m)


def hstack(*mats):
    mats = [m for m in mats]
    r = mats[0].rows
    if any(m.rows != r for m in mats):
        raise ShapeError("hstack needs equal row counts")
    out = flint.fmpq_mat(r, sum(m.cols for m in mats))
    off = 0
    for m in mats:
        for i, j, x in m.nonzeros():
            out[i, off + j] = x
        off += m.cols
    return Mat(out)


def vstack(*mats):
    c = mats[0].cols
    if any(m.cols != c for m in mats):
        raise ShapeError("vstack needs equal column counts")
    out = flint.fmpq_mat(sum(m.rows for m in mats), c)
    off = 0
    for m in mats:
        for i, j, x in m.nonzeros():
            out[off + i, j] = x
        off += m.rows
    return Mat(out)


def block_matrix(blocks, row_sizes, col_sizes):
    """Assemble from {(bi, bj): Mat}; missing blocks are zero."""
    ro = [0]
    for s in row_sizes:
        ro.append(ro[-1] + s)
    co = [0]
    for s in col_sizes:
        co.append(co[-1] + s)
    out = flint.fmpq_mat(ro[-1], co[-1])
    for (bi, bj), m in blocks.items():
        if m.shape != (row_sizes[bi], col_sizes[bj]):
            raise ShapeError(f"block {(bi, bj)} has shape {m.shape}")
        for i, j, x in m.nonzeros():
            out[ro[bi] + i, co[bj] + j] = out[ro[bi] + i, co[bj] + j] + x
    return Mat(out)


# ---------------------------------------------------------------------
# index bookkeeping

def tensor_index(digits, dims):
    """Row-major position of a multi-index."""
    k = 0
    for d, n in zip(digits, dims):
        k = k * n + d
    return k


def tensor_digits(k, dims):
    out = []
    for n in reversed(dims):
        out.append(k % n)
        k //= n
    return tuple(reversed(out))


def permute_factors(dims, perm):
    """Matrix sending a⊗b⊗... to the factors rearranged.

    ``perm[i]`` names which input factor lands in output position i.
    """
    out_dims = [dims[p] for p in perm]
    n = 1
    for d in dims:
        n *= d
    m = flint.fmpq_mat(n, n)
    for digits in product(*[range(d) for d in dims]):
        src = tensor_index(digits, dims)
        dst = tensor_index([digits[p] for p in perm], out_dims)
        m[dst, src] = 1
    return Mat(m)


def regroup(m, dims, axes, nrow):
    """Reindex the entries of ``m`` as a tensor.

    The entries (row-major) are read as a tensor of shape ``dims``, the
    axes are permuted so new axis i is old axis ``axes[i]``, and the first
    ``nrow`` new axes index rows.  Same as multiplying by permutation
    matrices, without building them.
    """
    size = 1
    for d in dims:
        size *= d
    if size != m.rows * m.cols:
        raise ShapeError(f"{m.rows}x{m.cols} matrix cannot be read with dims {dims}")
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    idx = [0]
    for a in axes:
        s, d = strides[a], dims[a]
        idx = [i + k * s for i in idx for k in range(d)]
    rows = 1
    for a in axes[:nrow]:
        rows *= dims[a]
    cols = size // rows if rows else 0
    if size == 0:
        return Mat.zeros(rows, cols)
    flat = m._m.entries()
    return Mat(flint.fmpq_mat(rows, cols, [flat[i] for i in idx]))


def permute_rows(m, dims, perm):
    """permute_factors(dims, perm) @ m."""
    k = len(dims)
    return regroup(m, list(dims) + [m.cols], list(perm) + [k], k)


def commutation(a, b):
    """The swap A⊗B → B⊗A."""
    return permute_factors([a, b], [1, 0])


# ---------------------------------------------------------------------
# elimination

def rref(a):
    """Reduced row echelon form and pivot columns."""
    if a.rows == 0 or a.cols == 0:
        return a, []
    r, rank_ = a._m.rref()
    red = Mat(r)
    pivots = []
    row = 0
    for j in range(a.cols):
        if row < rank_ and r[row, j] != 0:
            pivots.append(j)
            row += 1
    return red, pivots


def rank(a):
    return len(rref(a)[1])


def kernel_basis(a):
    """Basis of the null space, one column vector (list) per element."""
    red, pivots = rref(a)
    free = [j for j in range(a.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for row, p in enumerate(pivots):
            v[p] = -red[row, f]
        basis.append(v)
    return basis


def kernel_matrix(a):
    """Kernel basis as the columns of a matrix."""
    basis = kernel_basis(a)
    if not basis:
        return Mat.zeros(a.cols, 0)
    return Mat.from_rows([list(r) for r in zip(*basis)])


def solve(a, b):
    """One solution x of a·x = b, or None if inconsistent."""
    if a.rows != b.rows:
        raise ShapeError("solve: row mismatch")
    aug = hstack(a, b) if a.cols else b
    red, pivots = rref(aug)
    n = a.cols
    if any(p >= n for p in pivots):
        return None
    x = flint.fmpq_mat(n, b.cols)
    for row, p in enumerate(pivots):
        for j in range(b.cols):
            x[p, j] = red.raw[row, n + j]
    return Mat(x)


def inverse(a):
    """Exact inverse, or None when singular."""
    if a.rows != a.cols:
        raise ShapeError("inverse of a non-square matrix")
    if a.rows == 0:
        return a
    try:
        return Mat(a._m.inv())
    except ZeroDivisionError:
        return None


def coker_projection(a):
    """Projection onto a complement of im(a), and a section of it.

    The complement is spanned by the standard basis vectors that are not
    pivots of the column echelon form of ``a`` (ascending index).
    """
    n = a.rows
    red, pivots = rref(a.T)
    keep = [i for i in range(n) if i not in set(pivots)]
    image = [[red[r, j] for j in range(n)] for r in range(len(pivots))]
    # columns: image basis, then the kept standard vectors
    cols = image + [[Fraction(int(i == k)) for i in range(n)] for k in keep]
    if not cols:
        return Mat.zeros(0, n), Mat.zeros(n, 0)
    basis = Mat.from_rows([list(r) for r in zip(*cols)])
    inv = inverse(basis)
    proj = inv.block(len(pivots), n, 0, n)
    section = Mat.zeros(n, len(keep)) if not keep else Mat.from_dict(
        n, len(keep), {(k, c): 1 for c, k in enumerate(keep)})
    return proj, section
