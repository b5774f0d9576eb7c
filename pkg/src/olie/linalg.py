"""Exact dense linear algebra over a field object.

Vectors are plain lists of scalars, matrices are lists of rows.  Linear
maps on the algebra side use the row convention: the matrix row ``i`` is
the image of the ``i``-th basis vector, and a map is applied to a vector
with :func:`vec_mat`.  ``kernel_basis`` and ``solve_affine`` use the
usual column convention ``m @ x``.

Subspaces are stored as reduced row-echelon bases, so equality of
subspaces is equality of their canonical representations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch
from .fields import same_field


def zeros(field, n):
    z = field.zero()
    return [z] * n


def basis_vector(field, n, i):
    v = zeros(field, n)
    v[i] = field.one()
    return v


def vec_is_zero(field, v):
    return all(field.is_zero(x) for x in v)


def vec_add(field, u, v):
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field, u, v):
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field, c, v):
    return [field.mul(c, x) for x in v]


def vec_dot(field, u, v):
    s = field.zero()
    for a, b in zip(u, v):
        s = field.add(s, field.mul(a, b))
    return s


def vec_mat(field, v, m):
    """Row vector times matrix: the row-convention application of a map."""
    ncols = len(m[0]) if m else 0
    out = zeros(field, ncols)
    for i, c in enumerate(v):
        if field.is_zero(c):
            continue
        row = m[i]
        for j in range(ncols):
            out[j] = field.add(out[j], field.mul(c, row[j]))
    return out


def mat_vec(field, m, v):
    return [vec_dot(field, row, v) for row in m]


def mat_mul(field, a, b):
    n, k = len(a), len(b)
    ncols = len(b[0]) if b else 0
    out = [zeros(field, ncols) for _ in range(n)]
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            c = arow[t]
            if field.is_zero(c):
                continue
            brow = b[t]
            for j in range(ncols):
                orow[j] = field.add(orow[j], field.mul(c, brow[j]))
    return out


def mat_add(field, a, b):
    return [vec_add(field, ra, rb) for ra, rb in zip(a, b)]


def mat_sub(field, a, b):
    return [vec_sub(field, ra, rb) for ra, rb in zip(a, b)]


def mat_scale(field, c, a):
    return [vec_scale(field, c, row) for row in a]


def identity_matrix(field, n):
    return [basis_vector(field, n, i) for i in range(n)]


def zero_matrix(field, rows, cols):
    return [zeros(field, cols) for _ in range(rows)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def mat_eq(field, a, b):
    return all(
        field.is_zero(field.sub(x, y)) for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def rref(field, rows):
    """Reduced row-echelon form.  Returns (rref_rows, rank, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], 0, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not field.is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                mi, mr = m[i], m[r]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(mi, mr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, r, pivots


def kernel_basis(field, rows, ncols):
    """Basis of {v : rows @ v = 0} (column convention), canonical order."""
    red, rank, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = zeros(field, ncols)
        v[fc] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][fc])
        basis.append(v)
    return basis


class Subspace:
    """A subspace of K^n held as a canonical RREF basis."""

    __slots__ = ("field", "ambient", "rows", "_pivots")

    def __init__(self, field, ambient, vectors=()):
        self.field = field
        self.ambient = ambient
        reduced, rank, pivots = rref(field, [list(v) for v in vectors])
        self.rows = [tuple(r) for r in reduced[:rank]]
        self._pivots = pivots

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient)

    @classmethod
    def full(cls, field, ambient):
        return cls(field, ambient, identity_matrix(field, ambient))

    @property
    def dim(self):
        return len(self.rows)

    @property
    def codim(self):
        return self.ambient - len(self.rows)

    def is_zero(self):
        return not self.rows

    def is_full(self):
        return len(self.rows) == self.ambient

    def basis(self):
        return [list(r) for r in self.rows]

    def reduce(self, v):
        """Canonical representative of v modulo this subspace."""
        field = self.field
        v = list(v)
        for row, piv in zip(self.rows, self._pivots):
            c = v[piv]
            if not field.is_zero(c):
                v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, row)]
        return v

    def contains(self, v):
        return vec_is_zero(self.field, self.reduce(v))

    def contains_subspace(self, other):
        self._check_compatible(other)
        return all(self.contains(r) for r in other.rows)

    def coords(self, v):
        """Coordinates of v in the RREF basis, or None if v is outside."""
        field = self.field
        cs = [v[p] for p in self._pivots]
        rem = list(v)
        for c, row in zip(cs, self.rows):
            if not field.is_zero(c):
                rem = [field.sub(a, field.mul(c, b)) for a, b in zip(rem, row)]
        if not vec_is_zero(field, rem):
            return None
        return cs

    def sum(self, other):
        self._check_compatible(other)
        return Subspace(self.field, self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other):
        """Row-space intersection via the coefficient-matching kernel."""
        self._check_compatible(other)
        field = self.field
        a, b = self.basis(), other.basis()
        if not a or not b:
            return Subspace.zero(field, self.ambient)
        # columns: coefficients on a-rows then b-rows; rows: ambient coords
        stacked = []
        for coord in range(self.ambient):
            row = [u[coord] for u in a] + [field.neg(v[coord]) for v in b]
            stacked.append(row)
        combos = kernel_basis(field, stacked, len(a) + len(b))
        vectors = []
        for combo in combos:
            v = zeros(field, self.ambient)
            for c, u in zip(combo[: len(a)], a):
                if not field.is_zero(c):
                    v = vec_add(field, v, vec_scale(field, c, u))
            vectors.append(v)
        return Subspace(field, self.ambient, vectors)

    def complement_reps(self):
        """Standard basis vectors at the non-pivot columns.

        They represent cosets completing this subspace to the ambient
        space; also used as quotient-basis representatives.
        """
        pivot_set = set(self._pivots)
        return [
            basis_vector(self.field, self.ambient, c)
            for c in range(self.ambient)
            if c not in pivot_set
        ]

    quotient_reps = complement_reps

    def quotient_coords(self, v):
        """Coordinates of v + W in the complement-rep basis of K^n / W."""
        red = self.reduce(v)
        pivot_set = set(self._pivots)
        return [red[c] for c in range(self.ambient) if c not in pivot_set]

    def _check_compatible(self, other):
        same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise DimensionMismatch(
                f"ambient dimensions differ: {self.ambient} vs {other.ambient}"
            )

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient, tuple(self.rows)))

    def __repr__(self):
        rows = [[self.field.format(x) for x in r] for r in self.rows]
        return f"Subspace(dim {self.dim} of K^{self.ambient}: {rows})"


@dataclass
class AffineSolution:
    """Solution set {particular + k : k in kernel} of a linear system."""

    particular: list
    kernel: Subspace

    @property
    def dim(self):
        return self.kernel.dim

    @property
    def is_unique(self):
        return self.kernel.dim == 0

    def points(self):
        """Deterministic sample: the particular point, then the particular
        point shifted by each kernel basis vector."""
        field = self.kernel.field
        out = [list(self.particular)]
        for k in self.kernel.rows:
            out.append(vec_add(field, self.particular, list(k)))
        return out

    def contains(self, v):
        field = self.kernel.field
        return self.kernel.contains(vec_sub(field, list(v), self.particular))


def solve_affine(field, rows, rhs):
    """Solve rows @ x = rhs.  Returns an AffineSolution or None."""
    ncols = len(rows[0]) if rows else (len(rhs) and 0)
    if not rows:
        return AffineSolution([], Subspace.zero(field, 0))
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, rank, pivots = rref(field, aug)
    if ncols in pivots:
        return None
    particular = zeros(field, ncols)
    for r, pc in enumerate(pivots):
        particular[pc] = red[r][ncols]
    kernel = Subspace(field, ncols, kernel_basis(field, rows, ncols))
    return AffineSolution(particular, kernel)
