"""Anticommutative algebras with a skew form, and their basic structure theory.

An :class:`AnticommAlgebra` is given by structure constants on pairs of
basis indices ``i < j`` together with a skew bilinear form stored on the
same pairs.  The defining residual of the two-form Jacobi law is

    [[x,y],z] + [[z,x],y] + [[y,z],x] - w(x,y)z - w(z,x)y - w(y,z)x,

and an :class:`OmegaAlgebra` is an algebra certified to have zero
residual on every basis triple (sufficient, since both sides are
trilinear and alternating; this reduction is unit-tested against full
triple enumeration).

The adjoint map of ``h`` is the right multiplication ``x -> [x, h]``;
its matrix follows the row convention of :mod:`olie.linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    DimensionMismatch,
    KernelConditionFailed,
    NotAnIdeal,
    NotASubalgebra,
    ZeroVector,
)
from .linalg import (
    AffineSolution,
    Subspace,
    basis_vector,
    kernel_basis,
    mat_mul,
    solve_affine,
    transpose,
    vec_add,
    vec_is_zero,
    vec_mat,
    vec_scale,
    vec_sub,
    zero_matrix,
    zeros,
)


@dataclass
class Violation:
    """First basis triple on which the defining residual is nonzero."""

    triple: tuple
    residual: list

    def __bool__(self):
        return False


@dataclass
class SimplicityVerdict:
    kind: str  # "simple" | "not_simple" | "unknown"
    witness: Subspace | None = None
    certificate: str = ""

    @property
    def is_simple(self):
        return self.kind == "simple"


@dataclass
class AlmostAbelianResult:
    kind: str  # "abelian" | "almost_abelian" | "neither"
    lam: list | None = None
    abelian_part: Subspace | None = None
    x: list | None = None


class AnticommAlgebra:
    """Finite-dimensional anticommutative algebra with a skew form."""

    def __init__(self, field, dim, bracket=None, omega=None):
        self.field = field
        self.dim = dim
        self._bracket = {}
        self._omega = {}
        for (i, j), coeffs in (bracket or {}).items():
            self._check_pair(i, j)
            row = {}
            for k, c in coeffs.items():
                if not 0 <= k < dim:
                    raise DimensionMismatch(f"bracket target index {k} out of range")
                c = field.coerce(c)
                if not field.is_zero(c):
                    row[k] = c
            if row:
                self._bracket[(i, j)] = row
        for (i, j), c in (omega or {}).items():
            self._check_pair(i, j)
            c = field.coerce(c)
            if not field.is_zero(c):
                self._omega[(i, j)] = c
        self._dense = None
        self._gram = None

    def _check_pair(self, i, j):
        if not (0 <= i < j < self.dim):
            raise DimensionMismatch(f"pair ({i},{j}) must satisfy 0 <= i < j < dim")

    # -- tables ---------------------------------------------------------

    def _dense_table(self):
        if self._dense is None:
            field, n = self.field, self.dim
            table = [[None] * n for _ in range(n)]
            z = zeros(field, n)
            for i in range(n):
                table[i][i] = list(z)
            for i, j in combinations(range(n), 2):
                v = zeros(field, n)
                for k, c in self._bracket.get((i, j), {}).items():
                    v[k] = c
                table[i][j] = v
                table[j][i] = [field.neg(x) for x in v]
            self._dense = table
        return self._dense

    def gram(self):
        """Matrix of the form on the basis."""
        if self._gram is None:
            field, n = self.field, self.dim
            g = zero_matrix(field, n, n)
            for (i, j), c in self._omega.items():
                g[i][j] = c
                g[j][i] = field.neg(c)
            self._gram = g
        return self._gram

    def basis_bracket(self, i, j):
        return list(self._dense_table()[i][j])

    def omega_entry(self, i, j):
        if i == j:
            return self.field.zero()
        if i < j:
            return self._omega.get((i, j), self.field.zero())
        return self.field.neg(self._omega.get((j, i), self.field.zero()))

    # -- bilinear extensions -------------------------------------------

    def bracket(self, x, y):
        field, n = self.field, self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch("vector length does not match the algebra")
        table = self._dense_table()
        out = zeros(field, n)
        for i in range(n):
            xi = x[i]
            if field.is_zero(xi):
                continue
            for j in range(n):
                yj = y[j]
                if field.is_zero(yj) or i == j:
                    continue
                c = field.mul(xi, yj)
                row = table[i][j]
                for k in range(n):
                    if not field.is_zero(row[k]):
                        out[k] = field.add(out[k], field.mul(c, row[k]))
        return out

    def omega(self, x, y):
        field = self.field
        s = field.zero()
        for (i, j), c in self._omega.items():
            s = field.add(
                s,
                field.mul(
                    c,
                    field.sub(field.mul(x[i], y[j]), field.mul(x[j], y[i])),
                ),
            )
        return s

    def jacobian(self, x, y, z):
        field = self.field
        a = self.bracket(self.bracket(x, y), z)
        b = self.bracket(self.bracket(z, x), y)
        c = self.bracket(self.bracket(y, z), x)
        return [field.add(field.add(p, q), r) for p, q, r in zip(a, b, c)]

    def jacobi_residual(self, x, y, z):
        field = self.field
        jac = self.jacobian(x, y, z)
        wxy, wzx, wyz = self.omega(x, y), self.omega(z, x), self.omega(y, z)
        out = []
        for k in range(self.dim):
            rhs = field.add(
                field.add(field.mul(wxy, z[k]), field.mul(wzx, y[k])),
                field.mul(wyz, x[k]),
            )
            out.append(field.sub(jac[k], rhs))
        return out

    def d_omega(self, x, y, z):
        """The alternating scalar w([x,y],z) + w([z,x],y) + w([y,z],x)."""
        field = self.field
        s = self.omega(self.bracket(x, y), z)
        s = field.add(s, self.omega(self.bracket(z, x), y))
        return field.add(s, self.omega(self.bracket(y, z), x))

    def ad(self, h):
        """Matrix (row convention) of the right multiplication x -> [x, h]."""
        n = self.dim
        return [self.bracket(basis_vector(self.field, n, i), h) for i in range(n)]

    # -- validity -------------------------------------------------------

    def _first_violation(self):
        field, n = self.field, self.dim
        for i, j, k in combinations(range(n), 3):
            res = self.jacobi_residual(
                basis_vector(field, n, i),
                basis_vector(field, n, j),
                basis_vector(field, n, k),
            )
            if not vec_is_zero(field, res):
                return Violation((i, j, k), res)
        return None

    def validate(self):
        """Certify the defining law on all increasing basis triples.

        Returns an :class:`OmegaAlgebra` on success, else the first
        :class:`Violation` in lexicographic triple order.
        """
        violation = self._first_violation()
        if violation is not None:
            return violation
        return OmegaAlgebra(self.field, self.dim, self._bracket, self._omega)

    def is_valid(self):
        return self._first_violation() is None

    def is_lie(self):
        field, n = self.field, self.dim
        for i, j, k in combinations(range(n), 3):
            if not vec_is_zero(
                field,
                self.jacobian(
                    basis_vector(field, n, i),
                    basis_vector(field, n, j),
                    basis_vector(field, n, k),
                ),
            ):
                return False
        return True

    def is_abelian(self):
        return not self._bracket

    def check_four_var(self):
        """Exact test of the four-variable consequence on increasing 4-tuples:

        w(z,t)[x,y] + w(t,y)[x,z] + w(y,z)[x,t] + w(x,t)[y,z]
        + w(z,x)[y,t] + w(x,y)[z,t]
        = dw(t,z,y)x + dw(z,t,x)y + dw(y,x,t)z + dw(x,y,z)t.
        """
        field, n = self.field, self.dim
        e = [basis_vector(field, n, i) for i in range(n)]
        for a, b, c, d in combinations(range(n), 4):
            x, y, z, t = e[a], e[b], e[c], e[d]
            lhs = zeros(field, n)
            for coeff, (u, v) in (
                (self.omega(z, t), (x, y)),
                (self.omega(t, y), (x, z)),
                (self.omega(y, z), (x, t)),
                (self.omega(x, t), (y, z)),
                (self.omega(z, x), (y, t)),
                (self.omega(x, y), (z, t)),
            ):
                if field.is_zero(coeff):
                    continue
                lhs = vec_add(field, lhs, vec_scale(field, coeff, self.bracket(u, v)))
            rhs = zeros(field, n)
            for coeff, v in (
                (self.d_omega(t, z, y), x),
                (self.d_omega(z, t, x), y),
                (self.d_omega(y, x, t), z),
                (self.d_omega(x, y, z), t),
            ):
                if field.is_zero(coeff):
                    continue
                rhs = vec_add(field, rhs, vec_scale(field, coeff, v))
            if not vec_is_zero(field, vec_sub(field, lhs, rhs)):
                return False
        return True

    # -- form invariants -------------------------------------------------

    def omega_kernel(self):
        """Radical of the form: {x : w(x, L) = 0}."""
        return Subspace(
            self.field, self.dim, kernel_basis(self.field, self.gram(), self.dim)
        )

    def omega_rank(self):
        return self.dim - self.omega_kernel().dim

    def omega_space(self):
        """All bilinear forms making the bracket satisfy the defining law.

        The n^2 form entries are unknowns and the law is imposed on all
        index triples (repetitions included), which forces skewness.
        Unknown order: row-major w[i][j].
        """
        field, n = self.field, self.dim
        e = [basis_vector(field, n, i) for i in range(n)]
        rows, rhs = [], []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    jac = self.jacobian(e[i], e[j], e[k])
                    for l in range(n):
                        row = zeros(field, n * n)
                        # w(ei,ej) ek[l] + w(ek,ei) ej[l] + w(ej,ek) ei[l]
                        if k == l:
                            row[i * n + j] = field.add(row[i * n + j], field.one())
                        if j == l:
                            row[k * n + i] = field.add(row[k * n + i], field.one())
                        if i == l:
                            row[j * n + k] = field.add(row[j * n + k], field.one())
                        rows.append(row)
                        rhs.append(jac[l])
        return solve_affine(field, rows, rhs)

    # -- spans and ideals --------------------------------------------------

    def commutant(self):
        vectors = [self.basis_bracket(i, j) for i, j in combinations(range(self.dim), 2)]
        return Subspace(self.field, self.dim, vectors)

    def center(self):
        """{x : [x, L] = 0}; always an abelian ideal when nonzero."""
        field, n = self.field, self.dim
        rows = []
        for j in range(n):
            adj = self.ad(basis_vector(field, n, j))
            for col in range(n):
                rows.append([adj[i][col] for i in range(n)])
        return Subspace(field, n, kernel_basis(field, rows, n))

    def ideal_closure(self, generators):
        """Smallest subspace containing the generators and closed under
        bracketing with every basis vector (spinning)."""
        field, n = self.field, self.dim
        span = Subspace(field, n, generators)
        e = [basis_vector(field, n, i) for i in range(n)]
        while True:
            new_vectors = list(span.rows)
            for row in span.rows:
                for ei in e:
                    new_vectors.append(self.bracket(list(row), ei))
            bigger = Subspace(field, n, new_vectors)
            if bigger.dim == span.dim:
                return span
            span = bigger

    def is_ideal(self, sub: Subspace):
        field, n = self.field, self.dim
        e = [basis_vector(field, n, i) for i in range(n)]
        for row in sub.rows:
            for ei in e:
                if not sub.contains(self.bracket(list(row), ei)):
                    return False
        return True

    def is_subalgebra(self, sub: Subspace):
        rows = [list(r) for r in sub.rows]
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                if not sub.contains(self.bracket(rows[a], rows[b])):
                    return False
        return True

    def restrict(self, sub: Subspace):
        """Subalgebra on the canonical basis of ``sub``."""
        if not self.is_subalgebra(sub):
            raise NotASubalgebra("the subspace is not closed under the bracket")
        field = self.field
        rows = [list(r) for r in sub.rows]
        m = len(rows)
        bracket = {}
        omega = {}
        for a in range(m):
            for b in range(a + 1, m):
                coords = sub.coords(self.bracket(rows[a], rows[b]))
                entry = {k: c for k, c in enumerate(coords) if not field.is_zero(c)}
                if entry:
                    bracket[(a, b)] = entry
                w = self.omega(rows[a], rows[b])
                if not field.is_zero(w):
                    omega[(a, b)] = w
        out = AnticommAlgebra(field, m, bracket, omega)
        if isinstance(self, OmegaAlgebra):
            return OmegaAlgebra.certify(out)
        return out

    def quotient(self, ideal: Subspace):
        """Quotient by an ideal contained in the radical of the form."""
        if not self.is_ideal(ideal):
            raise NotAnIdeal("the subspace is not an ideal")
        if not self.omega_kernel().contains_subspace(ideal):
            raise KernelConditionFailed(
                "the form does not vanish on the ideal's pairings; "
                "it does not descend to the quotient"
            )
        field = self.field
        reps = ideal.quotient_reps()
        m = len(reps)
        bracket = {}
        omega = {}
        for a in range(m):
            for b in range(a + 1, m):
                coords = ideal.quotient_coords(self.bracket(reps[a], reps[b]))
                entry = {k: c for k, c in enumerate(coords) if not field.is_zero(c)}
                if entry:
                    bracket[(a, b)] = entry
                w = self.omega(reps[a], reps[b])
                if not field.is_zero(w):
                    omega[(a, b)] = w
        out = AnticommAlgebra(field, m, bracket, omega)
        if isinstance(self, OmegaAlgebra):
            return OmegaAlgebra.certify(out)
        return out

    # -- multiplicativity and related solves ------------------------------

    def multiplicative_lambda(self):
        """Affine set of linear forms with w(x,y) = form([x,y]) on basis
        pairs, or None when the system is inconsistent."""
        field, n = self.field, self.dim
        rows, rhs = [], []
        for i, j in combinations(range(n), 2):
            rows.append(self.basis_bracket(i, j))
            rhs.append(self.omega_entry(i, j))
        if not rows:
            return AffineSolution(zeros(field, n), Subspace.full(field, n))
        return solve_affine(field, rows, rhs)

    def normalizer_line(self, h):
        """{x : [x, h] in Kh} as a subspace."""
        field, n = self.field, self.dim
        if vec_is_zero(field, h):
            raise ZeroVector("h must be nonzero")
        line = Subspace(field, n, [h])
        rows = []
        for i in range(n):
            rows.append(line.reduce(self.bracket(basis_vector(field, n, i), h)))
        # x -> [x,h] mod Kh is x @ rows; kernel in the row convention
        return Subspace(field, n, kernel_basis(field, transpose(rows), n))

    def is_quasi_ideal(self, sub: Subspace):
        """True iff [sub, A] <= sub + A for every subspace A; equivalently
        the induced map of each right multiplication from ``sub`` on the
        quotient is a scalar multiple of the identity."""
        field = self.field
        if not self.is_subalgebra(sub):
            return False
        reps = sub.quotient_reps()
        if not reps:
            return True
        for b in sub.rows:
            induced = [
                sub.quotient_coords(self.bracket(list(b), rep)) for rep in reps
            ]
            scalar = induced[0][0]
            for a, row in enumerate(induced):
                for c, val in enumerate(row):
                    want = scalar if a == c else field.zero()
                    if not field.is_zero(field.sub(val, want)):
                        return False
        return True

    def almost_abelian_decomposition(self):
        """Solve [e_i, e_j] = f(e_j) e_i - f(e_i) e_j for a linear form f.

        f = 0 means abelian; a nonzero solution exhibits the algebra as
        an abelian part (the kernel of f) plus one element acting on it
        as the identity; no solution returns kind "neither".
        """
        field, n = self.field, self.dim
        rows, rhs = [], []
        for i, j in combinations(range(n), 2):
            b = self.basis_bracket(i, j)
            for l in range(n):
                row = zeros(field, n)
                if l == i:
                    row[j] = field.add(row[j], field.one())
                if l == j:
                    row[i] = field.sub(row[i], field.one())
                rows.append(row)
                rhs.append(b[l])
        if rows:
            sol = solve_affine(field, rows, rhs)
        else:
            sol = AffineSolution(zeros(field, n), Subspace.zero(field, n))
        if sol is None:
            return AlmostAbelianResult("neither")
        lam = sol.particular
        if vec_is_zero(field, lam):
            return AlmostAbelianResult("abelian", lam=lam)
        pivot = next(i for i, c in enumerate(lam) if not field.is_zero(c))
        x = vec_scale(field, field.inv(lam[pivot]), basis_vector(field, n, pivot))
        part = Subspace(field, n, kernel_basis(field, [lam], n))
        return AlmostAbelianResult("almost_abelian", lam=lam, abelian_part=part, x=x)

    # -- simplicity --------------------------------------------------------

    def multiplication_algebra_dim(self):
        """Dimension of the span of all words in the adjoint maps."""
        field, n = self.field, self.dim
        gens = [self.ad(basis_vector(field, n, i)) for i in range(n)]

        basis_rows = []
        pivots = []

        def reduce_add(mat):
            v = [mat[i][j] for i in range(n) for j in range(n)]
            for row, piv in zip(basis_rows, pivots):
                c = v[piv]
                if not field.is_zero(c):
                    f = field.div(c, row[piv])
                    v = [field.sub(a, field.mul(f, b)) for a, b in zip(v, row)]
            piv = next((i for i, x in enumerate(v) if not field.is_zero(x)), None)
            if piv is None:
                return False
            basis_rows.append(v)
            pivots.append(piv)
            return True

        frontier = [g for g in gens if reduce_add(g)]
        while frontier:
            fresh = []
            for m in frontier:
                for g in gens:
                    for prod in (mat_mul(field, m, g), mat_mul(field, g, m)):
                        if reduce_add(prod):
                            fresh.append(prod)
            frontier = fresh
        return len(basis_rows)

    def _enumerable_vector_count(self, cap):
        field, n = self.field, self.dim
        if field.char == 0:
            return None
        total = field.char**n
        return total if total <= cap else None

    def _projective_vectors(self):
        """All nonzero vectors up to scale: first nonzero coordinate is 1."""
        field, n = self.field, self.dim
        p = field.char
        for lead in range(n):
            prefix = zeros(field, lead) + [field.one()]

            def rec(pos, cur):
                if pos == n:
                    yield list(cur)
                    return
                for v in range(p):
                    cur.append(v % p)
                    yield from rec(pos + 1, cur)
                    cur.pop()

            yield from rec(lead + 1, prefix)

    def simplicity(self, enum_cap=10**6):
        """Three-valued simplicity verdict.

        A "simple" certificate comes either from the multiplication
        algebra being all of End(L) (with a nonzero product), which
        rules out invariant subspaces over every extension field, or,
        over a small prime field, from exhaustively spinning every
        line.  A proper nonzero ideal found by spinning gives
        "not_simple" with the first witness in candidate order; over
        the rationals with no certificate the verdict is "unknown".
        """
        field, n = self.field, self.dim
        if n == 0:
            return SimplicityVerdict("not_simple", Subspace.zero(field, 0))
        if self.commutant().is_zero():
            witness = Subspace(field, n, [basis_vector(field, n, 0)])
            if n == 1:
                witness = Subspace.zero(field, n)
            return SimplicityVerdict("not_simple", witness, "abelian")

        if self.multiplication_algebra_dim() == n * n:
            return SimplicityVerdict("simple", certificate="full multiplication algebra")

        candidates = [basis_vector(field, n, i) for i in range(n)]
        for i, j in combinations(range(n), 2):
            ei, ej = basis_vector(field, n, i), basis_vector(field, n, j)
            candidates.append(vec_add(field, ei, ej))
            candidates.append(vec_sub(field, ei, ej))
        # line ideals of codimension > 1 live inside the radical
        ker_rows = [list(r) for r in self.omega_kernel().rows]
        candidates.extend(ker_rows)
        for a, b in combinations(range(len(ker_rows)), 2):
            candidates.append(vec_add(field, ker_rows[a], ker_rows[b]))
            candidates.append(vec_sub(field, ker_rows[a], ker_rows[b]))
        exhaustive = self._enumerable_vector_count(enum_cap) is not None
        seen = set()

        def try_vec(v):
            key = tuple(field.format(x) for x in v)
            if key in seen:
                return None
            seen.add(key)
            spun = self.ideal_closure([v])
            if 0 < spun.dim < n:
                return spun
            return None

        for v in candidates:
            if vec_is_zero(field, v):
                continue
            found = try_vec(v)
            if found is not None:
                return SimplicityVerdict("not_simple", found, "spun ideal")
        if exhaustive:
            for v in self._projective_vectors():
                found = try_vec(v)
                if found is not None:
                    return SimplicityVerdict("not_simple", found, "spun ideal")
            return SimplicityVerdict("simple", certificate="exhaustive spinning")
        return SimplicityVerdict("unknown")

    @staticmethod
    def _projective_coeffs(p, k):
        """Nonzero coefficient tuples of length k up to scale."""
        for lead in range(k):
            tail = k - lead - 1

            def rec(pos, cur):
                if pos == tail:
                    yield [0] * lead + [1] + list(cur)
                    return
                for v in range(p):
                    cur.append(v)
                    yield from rec(pos + 1, cur)
                    cur.pop()

            yield from rec(0, [])

    def find_abelian_ideal(self, enum_cap=10**6):
        """A nonzero abelian ideal, or None.

        Candidate subspaces (center, radical of the form and its abelian
        part, kernels of multiplicative forms, spun basis lines) are
        tried first.  Over a small prime field the search is then made
        complete for a certified algebra: an abelian ideal of
        codimension >= 2 lies inside the radical of the form and
        contains the spun closure of each of its lines, so scanning the
        closures of all radical lines decides that case; a codimension-1
        abelian ideal contains the commutant, so the finitely many
        hyperplanes over the commutant decide the rest.  A None from the
        complete search is a definitive nonexistence answer.
        """
        field, n = self.field, self.dim

        def check(sub):
            if sub is None or sub.dim == 0:
                return False
            if not self.is_ideal(sub):
                return False
            rows = [list(r) for r in sub.rows]
            for a in range(len(rows)):
                for b in range(a + 1, len(rows)):
                    if not vec_is_zero(field, self.bracket(rows[a], rows[b])):
                        return False
            return True

        candidates = []
        candidates.append(self.center())
        ker = self.omega_kernel()
        candidates.append(ker)
        if ker.dim > 0 and self.is_subalgebra(ker):
            dec = self.restrict(ker).almost_abelian_decomposition()
            if dec.kind == "almost_abelian":
                part_rows = [
                    vec_mat(field, list(r), [list(b) for b in ker.rows])
                    for r in dec.abelian_part.rows
                ]
                candidates.append(Subspace(field, n, part_rows))
        lam_set = self.multiplicative_lambda()
        if lam_set is not None:
            for lam in lam_set.points():
                if not vec_is_zero(field, lam):
                    candidates.append(
                        Subspace(field, n, kernel_basis(field, [lam], n))
                    )
        for i in range(n):
            candidates.append(self.ideal_closure([basis_vector(field, n, i)]))
        com = self.commutant()
        candidates.append(com)
        candidates.append(com.intersect(ker))
        for sub in candidates:
            if sub.dim == n:
                continue
            if check(sub):
                return sub
        if self._enumerable_vector_count(enum_cap) is not None:
            certified = self._first_violation() is None
            if certified:
                # codim >= 2: scan spun closures of the radical's lines
                base = [list(r) for r in ker.rows]
                for coeffs in self._projective_coeffs(field.char, ker.dim):
                    v = zeros(field, n)
                    for c, row in zip(coeffs, base):
                        if c:
                            v = vec_add(field, v, vec_scale(field, field.coerce(c), row))
                    spun = self.ideal_closure([v])
                    if spun.dim < n and check(spun):
                        return spun
                # codim 1: hyperplanes over the commutant, as kernels of
                # projective covectors on the quotient
                reps = com.quotient_reps()
                q = len(reps)
                for coeffs in self._projective_coeffs(field.char, q):
                    covector = [field.coerce(c) for c in coeffs]
                    extra = []
                    for combo in kernel_basis(field, [covector], q):
                        v = zeros(field, n)
                        for c, rep in zip(combo, reps):
                            if not field.is_zero(c):
                                v = vec_add(field, v, vec_scale(field, c, rep))
                        extra.append(v)
                    sub = Subspace(field, n, list(com.rows) + extra)
                    if sub.dim == n - 1 and check(sub):
                        return sub
                return None
            for v in self._projective_vectors():
                sub = Subspace(field, n, [v])
                if check(sub):
                    return sub
                spun = self.ideal_closure([v])
                if spun.dim < n and check(spun):
                    return spun
        return None

    # -- conversions -------------------------------------------------------

    def with_field(self, field):
        """The same tables with scalars coerced into another field."""
        bracket = {
            pair: {k: field.coerce(c) for k, c in row.items()}
            for pair, row in self._bracket.items()
        }
        omega = {pair: field.coerce(c) for pair, c in self._omega.items()}
        return AnticommAlgebra(field, self.dim, bracket, omega)

    def to_json_dict(self):
        field = self.field
        bracket = {}
        for (i, j) in sorted(self._bracket):
            row = self._bracket[(i, j)]
            bracket[f"{i + 1},{j + 1}"] = {
                str(k + 1): field.format(row[k]) for k in sorted(row)
            }
        omega = {
            f"{i + 1},{j + 1}": field.format(self._omega[(i, j)])
            for (i, j) in sorted(self._omega)
        }
        return {
            "field": field.to_json(),
            "dim": self.dim,
            "bracket": bracket,
            "omega": omega,
        }

    def __eq__(self, other):
        return (
            isinstance(other, AnticommAlgebra)
            and self.field == other.field
            and self.dim == other.dim
            and self._bracket == other._bracket
            and self._omega == other._omega
        )

    def __repr__(self):
        kind = type(self).__name__
        return f"{kind}(dim={self.dim}, field={self.field.tag})"


class OmegaAlgebra(AnticommAlgebra):
    """An algebra whose construction certified the defining law."""

    def __init__(self, field, dim, bracket=None, omega=None):
        super().__init__(field, dim, bracket, omega)
        check = self._first_violation()
        if check is not None:
            raise ValueError(
                f"the defining law fails on basis triple {check.triple}: "
                f"residual {[field.format(x) for x in check.residual]}"
            )

    @classmethod
    def certify(cls, alg: AnticommAlgebra):
        return cls(alg.field, alg.dim, alg._bracket, alg._omega)

    def validate(self):
        return self
