"""Constructions that grow algebras.

Codimension-1 extensions append a vector v with

    [x, v] = D(x) + lam(x) v,      w(x, v) = alpha(x),

which carries the defining law exactly when lam is multiplicative for
the base and (D, alpha, lam) satisfies the derivation relation.  The
module also provides 1-dimensional modules and semidirect products,
Chevalley-Eilenberg-style cohomology for the 1-dimensional module given
by a multiplicative form, abelian extensions from 2-cocycles, the
first-order deformation solver for Lie algebras, and the two-form
associativity law together with its minus algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import AnticommAlgebra, OmegaAlgebra
from .derivations import AlphaLambdaDerivation, check_al_derivation
from .errors import (
    DimensionMismatch,
    NotACocycle,
    NotADerivation,
    NotALieAlgebra,
    NotARepresentation,
    NotMultiplicative,
    NotOmegaAssociative,
    ShapeMismatch,
)
from .linalg import (
    basis_vector,
    kernel_basis,
    mat_mul,
    mat_sub,
    rref,
    solve_affine,
    vec_mat,
    vec_sub,
    zeros,
)


def is_multiplicative_for(alg: AnticommAlgebra, lam):
    """Does w(e_i, e_j) = lam([e_i, e_j]) hold on all basis pairs?"""
    field, n = alg.field, alg.dim
    for i, j in combinations(range(n), 2):
        val = field.zero()
        for k, c in enumerate(alg.basis_bracket(i, j)):
            val = field.add(val, field.mul(c, lam[k]))
        if not field.is_zero(field.sub(val, alg.omega_entry(i, j))):
            return False
    return True


def extend_codim1(alg: OmegaAlgebra, lam, matrix, alpha):
    """Extension of dimension n+1 by derivation data; the new basis
    vector is appended last.  Raises when lam is not multiplicative or
    (D, alpha) is not a derivation for it."""
    field, n = alg.field, alg.dim
    lam = [field.coerce(x) for x in lam]
    alpha = [field.coerce(x) for x in alpha]
    matrix = [[field.coerce(x) for x in row] for row in matrix]
    if len(lam) != n or len(alpha) != n or len(matrix) != n:
        raise DimensionMismatch("extension data does not match the base dimension")
    if not is_multiplicative_for(alg, lam):
        raise NotMultiplicative("lambda does not reproduce the form on brackets")
    der = AlphaLambdaDerivation(matrix, alpha, lam)
    if not check_al_derivation(alg, der):
        raise NotADerivation("(D, alpha) fails the derivation relation for this lambda")
    bracket = {pair: dict(row) for pair, row in alg._bracket.items()}
    omega = dict(alg._omega)
    for i in range(n):
        entry = {k: c for k, c in enumerate(matrix[i]) if not field.is_zero(c)}
        if not field.is_zero(lam[i]):
            entry[n] = lam[i]
        if entry:
            bracket[(i, n)] = entry
        if not field.is_zero(alpha[i]):
            omega[(i, n)] = alpha[i]
    return OmegaAlgebra(field, n + 1, bracket, omega)


# -- modules and semidirect products ------------------------------------


def adjoint_maps(alg: AnticommAlgebra):
    """Left-multiplication matrices phi(e_i): m -> [e_i, m] on the algebra
    itself; these satisfy the module law exactly in the Lie case."""
    field, n = alg.field, alg.dim
    e = [basis_vector(field, n, i) for i in range(n)]
    return [[alg.bracket(e[i], e[a]) for a in range(n)] for i in range(n)]


def check_representation(alg: AnticommAlgebra, maps):
    """Test phi([x,y]) = phi(x)phi(y) - phi(y)phi(x) + w(x,y) on basis pairs.

    ``maps`` is one m x m matrix per basis vector, acting on row vectors.
    """
    field, n = alg.field, alg.dim
    if len(maps) != n:
        raise ShapeMismatch("need one matrix per basis vector")
    m = len(maps[0]) if maps else 0
    for phi in maps:
        if len(phi) != m or any(len(row) != m for row in phi):
            raise ShapeMismatch("module matrices must be square and equally sized")
    for i, j in combinations(range(n), 2):
        lhs = [zeros(field, m) for _ in range(m)]
        for k, c in enumerate(alg.basis_bracket(i, j)):
            if field.is_zero(c):
                continue
            for a in range(m):
                for b in range(m):
                    lhs[a][b] = field.add(lhs[a][b], field.mul(c, maps[k][a][b]))
        # operator composition phi(x) o phi(y) has row-matrix phi_y @ phi_x
        comm = mat_sub(
            field,
            mat_mul(field, maps[j], maps[i]),
            mat_mul(field, maps[i], maps[j]),
        )
        w = alg.omega_entry(i, j)
        for a in range(m):
            for b in range(m):
                rhs = comm[a][b]
                if a == b:
                    rhs = field.add(rhs, w)
                if not field.is_zero(field.sub(lhs[a][b], rhs)):
                    return False
    return True


def semidirect(alg: OmegaAlgebra, maps):
    """Semidirect product with a module: [x, m] = phi(x) m, [M, M] = 0,
    and the form extended by zero on the module."""
    field, n = alg.field, alg.dim
    if not check_representation(alg, maps):
        raise NotARepresentation("the matrices do not define a module")
    m = len(maps[0]) if maps and maps[0] else 0
    bracket = {pair: dict(row) for pair, row in alg._bracket.items()}
    omega = dict(alg._omega)
    for i in range(n):
        for a in range(m):
            # [e_i, m_a] = phi(e_i) m_a = row a of phi(e_i)
            entry = {}
            for b in range(m):
                c = maps[i][a][b]
                if not field.is_zero(c):
                    entry[n + b] = c
            if entry:
                bracket[(i, n + a)] = entry
    return OmegaAlgebra(field, n + m, bracket, omega)


def one_dim_module(alg: AnticommAlgebra, lam):
    """Matrices of the 1-dimensional module given by a linear form."""
    return [[[alg.field.coerce(x)]] for x in lam]


# -- cohomology of the 1-dimensional module -----------------------------


@dataclass
class Cochain:
    """Alternating k-linear scalar map stored on increasing index tuples."""

    field: object
    dim: int
    degree: int
    data: dict

    @classmethod
    def zero(cls, field, dim, degree):
        return cls(field, dim, degree, {})

    @classmethod
    def from_values(cls, field, dim, degree, values):
        data = {}
        for key, val in values.items():
            key = tuple(key)
            if list(key) != sorted(set(key)):
                raise DimensionMismatch("cochain keys must be strictly increasing")
            val = field.coerce(val)
            if not field.is_zero(val):
                data[key] = val
        return cls(field, dim, degree, data)

    def value(self, idx_tuple):
        """Value on basis vectors with arbitrary index order."""
        field = self.field
        idx = list(idx_tuple)
        if len(set(idx)) != len(idx):
            return field.zero()
        sign = field.one()
        # insertion sort tracking the permutation sign
        for a in range(1, len(idx)):
            b = a
            while b > 0 and idx[b - 1] > idx[b]:
                idx[b - 1], idx[b] = idx[b], idx[b - 1]
                sign = field.neg(sign)
                b -= 1
        return field.mul(sign, self.data.get(tuple(idx), field.zero()))

    def eval(self, vectors):
        """Multilinear alternating evaluation on arbitrary vectors."""
        field, k = self.field, self.degree
        if len(vectors) != k:
            raise DimensionMismatch("wrong number of arguments")
        total = field.zero()
        if k == 0:
            raise DimensionMismatch("degree-0 cochains are plain scalars")

        def rec(pos, idxs, coeff):
            nonlocal total
            if pos == k:
                total = field.add(total, field.mul(coeff, self.value(tuple(idxs))))
                return
            vec = vectors[pos]
            for i in range(self.dim):
                c = vec[i]
                if field.is_zero(c):
                    continue
                idxs.append(i)
                rec(pos + 1, idxs, field.mul(coeff, c))
                idxs.pop()

        rec(0, [], field.one())
        return total


def cochain_differential(alg: AnticommAlgebra, lam, cochain):
    """Differential of a cochain for the 1-dimensional module action
    x . m = lam(x) m, by the classical alternating-sum formula.

    Degree-0 cochains are passed as plain scalars.  Raises when lam is
    not multiplicative for the algebra.

    On a non-Lie base only the composite from 1-cochains to 3-cochains
    squares to zero (exactly what second cohomology needs): already on
    scalars, d(d(c))(x, y) = -w(x, y) c, and degree-2 counterexamples
    exist in dimension 4.  Over a Lie base every square vanishes.
    """
    field, n = alg.field, alg.dim
    lam = [field.coerce(x) for x in lam]
    if not is_multiplicative_for(alg, lam):
        raise NotMultiplicative("lambda does not reproduce the form on brackets")
    if not isinstance(cochain, Cochain):
        c = field.coerce(cochain)
        data = {(i,): field.mul(lam[i], c) for i in range(n)}
        return Cochain.from_values(field, n, 1, data)
    k = cochain.degree
    if k > 3:
        raise DimensionMismatch("differentials are provided for inputs of degree <= 3")
    out = {}
    e = [basis_vector(field, n, i) for i in range(n)]
    for idx in combinations(range(n), k + 1):
        total = field.zero()
        sign_i = field.one()
        for a in range(k + 1):
            rest = idx[:a] + idx[a + 1 :]
            total = field.add(
                total,
                field.mul(sign_i, field.mul(lam[idx[a]], cochain.value(rest))),
            )
            sign_i = field.neg(sign_i)
        for a, b in combinations(range(k + 1), 2):
            rest = tuple(idx[t] for t in range(k + 1) if t not in (a, b))
            sign = field.neg(field.one()) if (a + b) % 2 else field.one()
            bracket_vec = alg.bracket(e[idx[a]], e[idx[b]])
            if k == 0:
                val = field.zero()  # no slots left; term absent in degree 0
            else:
                val = cochain.eval([bracket_vec] + [e[t] for t in rest])
            total = field.add(total, field.mul(sign, val))
        if not field.is_zero(total):
            out[idx] = total
    return Cochain(field, n, k + 1, out)


def _cochain_keys(n, k):
    return list(combinations(range(n), k))


def _differential_matrix(alg, lam, k):
    """Matrix of the degree-k differential C^k -> C^(k+1), row convention."""
    field, n = alg.field, alg.dim
    src = _cochain_keys(n, k)
    dst = _cochain_keys(n, k + 1)
    dst_pos = {key: t for t, key in enumerate(dst)}
    rows = []
    for key in src:
        c = Cochain.from_values(field, n, k, {key: field.one()})
        dc = cochain_differential(alg, lam, c)
        row = zeros(field, len(dst))
        for kk, v in dc.data.items():
            row[dst_pos[kk]] = v
        rows.append(row)
    return rows


def h2_dimension(alg: AnticommAlgebra, lam):
    """dim ker(d on 2-cochains) - dim im(d on 1-cochains)."""
    field, n = alg.field, alg.dim
    lam = [field.coerce(x) for x in lam]
    if n < 2:
        return 0
    d1 = _differential_matrix(alg, lam, 1)
    d2 = _differential_matrix(alg, lam, 2)
    n2 = len(_cochain_keys(n, 2))
    _, rank1, _ = rref(field, d1)
    _, rank2, _ = rref(field, d2)
    return (n2 - rank2) - rank1


def extension_from_cocycle(alg: OmegaAlgebra, lam, cocycle: Cochain):
    """Abelian extension by a 2-cocycle: [x,y]' = [x,y] + c(x,y) m and
    [x, m] = lam(x) m, the form extended by zero on the new line."""
    field, n = alg.field, alg.dim
    lam = [field.coerce(x) for x in lam]
    if not is_multiplicative_for(alg, lam):
        raise NotMultiplicative("lambda does not reproduce the form on brackets")
    if cocycle.degree != 2 or cocycle.dim != n:
        raise DimensionMismatch("need a 2-cochain on the base algebra")
    if cochain_differential(alg, lam, cocycle).data:
        raise NotACocycle("the differential of the cochain is nonzero")
    bracket = {}
    for (i, j), row in alg._bracket.items():
        bracket[(i, j)] = dict(row)
    for (i, j), c in cocycle.data.items():
        bracket.setdefault((i, j), {})[n] = c
    for i in range(n):
        if not field.is_zero(lam[i]):
            bracket[(i, n)] = {n: lam[i]}
    omega = dict(alg._omega)
    return OmegaAlgebra(field, n + 1, bracket, omega)


# -- first-order deformations -------------------------------------------


@dataclass
class DeformationSolution:
    """First-order direction: anticommutative bilinear phi1 (structure-
    constant shaped dict) and skew form omega1 (dict on pairs)."""

    phi1: dict
    omega1: dict


@dataclass
class DeformationSpace:
    basis: list
    omega1_projection_dim: int

    @property
    def has_nontrivial_omega1(self):
        return self.omega1_projection_dim > 0


def infinitesimal_deformations(alg: AnticommAlgebra):
    """Solve the first-order deformation equation of a Lie algebra:

        phi1([x,y],z) + phi1([z,x],y) + phi1([y,z],x)
        + [phi1(x,y),z] + [phi1(z,x),y] + [phi1(y,z),x]
        = w1(x,y)z + w1(z,x)y + w1(y,z)x

    in the unknowns phi1 (anticommutative bilinear into the algebra) and
    w1 (skew scalar form).  Returns the canonical solution basis and the
    dimension of its projection onto the w1 coordinates.
    """
    field, n = alg.field, alg.dim
    if not alg.is_lie():
        raise NotALieAlgebra("deformation directions are solved over Lie algebras")
    pairs = list(combinations(range(n), 2))
    pos = {pair: t for t, pair in enumerate(pairs)}
    nphi = len(pairs) * n
    nun = nphi + len(pairs)

    def phi_coeff(row, i, j, k, c):
        # coefficient of phi1(e_i, e_j)_k, with antisymmetry folded in
        if i == j or field.is_zero(c):
            return
        if i < j:
            row[pos[(i, j)] * n + k] = field.add(row[pos[(i, j)] * n + k], c)
        else:
            row[pos[(j, i)] * n + k] = field.sub(row[pos[(j, i)] * n + k], c)

    def omega_coeff(row, i, j, c):
        if i == j or field.is_zero(c):
            return
        if i < j:
            row[nphi + pos[(i, j)]] = field.add(row[nphi + pos[(i, j)]], c)
        else:
            row[nphi + pos[(j, i)]] = field.sub(row[nphi + pos[(j, i)]], c)

    e = [basis_vector(field, n, i) for i in range(n)]
    rows = []
    for x, y, z in combinations(range(n), 3):
        for l in range(n):
            row = zeros(field, nun)
            for (a, b, c) in ((x, y, z), (z, x, y), (y, z, x)):
                # phi1([e_a, e_b], e_c)_l
                br = alg.basis_bracket(a, b)
                for k in range(n):
                    phi_coeff(row, k, c, l, br[k])
                # [phi1(e_a, e_b), e_c]_l = sum_k phi1(a,b)_k [e_k, e_c]_l
                for k in range(n):
                    ck = alg.bracket(e[k], e[c])[l]
                    phi_coeff(row, a, b, k, ck)
                # - w1(e_a, e_b) delta_{c l}
                if c == l:
                    omega_coeff(row, a, b, field.neg(field.one()))
            rows.append(row)
    sols = kernel_basis(field, rows, nun)
    basis = []
    omega_block = []
    for v in sols:
        phi1 = {}
        for (i, j), t in pos.items():
            entry = {
                k: v[t * n + k]
                for k in range(n)
                if not field.is_zero(v[t * n + k])
            }
            if entry:
                phi1[(i, j)] = entry
        omega1 = {
            pair: v[nphi + t]
            for pair, t in pos.items()
            if not field.is_zero(v[nphi + t])
        }
        basis.append(DeformationSolution(phi1, omega1))
        omega_block.append(v[nphi:])
    _, wrank, _ = rref(field, omega_block)
    return DeformationSpace(basis, wrank)


# -- the two-form associativity law --------------------------------------


def omega_assoc_space(field, dim, product):
    """Affine set of bilinear form pairs (w1, w2) with

        (xy)z - x(yz) = w1(x,y) z - w2(y,z) x

    on all basis triples, or None when no pair exists.  ``product`` is a
    dense table: product[i][j] is the vector e_i e_j.  Unknown order:
    w1 row-major then w2 row-major.
    """
    n = dim
    rows, rhs = [], []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = vec_mat(
                    field,
                    product[i][j],
                    [product[t][k] for t in range(n)],
                )
                right = vec_mat(
                    field,
                    product[j][k],
                    [product[i][t] for t in range(n)],
                )
                assoc = vec_sub(field, left, right)
                for l in range(n):
                    row = zeros(field, 2 * n * n)
                    if k == l:
                        row[i * n + j] = field.one()
                    if i == l:
                        row[n * n + j * n + k] = field.sub(
                            row[n * n + j * n + k], field.one()
                        )
                    rows.append(row)
                    rhs.append(assoc[l])
    return solve_affine(field, rows, rhs)


def minus_algebra(field, dim, product, w1_flat, w2_flat):
    """Minus algebra [x,y] = xy - yx of a product satisfying the two-form
    associativity law, with the induced skew form

        w(x,y) = (w1 - w2)(x,y) - (w1 - w2)(y,x).
    """
    sol = omega_assoc_space(field, dim, product)
    flat = list(w1_flat) + list(w2_flat)
    if sol is None or not sol.contains(flat):
        raise NotOmegaAssociative(
            "(w1, w2) does not satisfy the associativity law for this product"
        )
    n = dim
    bracket = {}
    omega = {}
    for i, j in combinations(range(n), 2):
        comm = vec_sub(field, product[i][j], product[j][i])
        entry = {k: c for k, c in enumerate(comm) if not field.is_zero(c)}
        if entry:
            bracket[(i, j)] = entry
        diff_ij = field.sub(w1_flat[i * n + j], w2_flat[i * n + j])
        diff_ji = field.sub(w1_flat[j * n + i], w2_flat[j * n + i])
        w = field.sub(diff_ij, diff_ji)
        if not field.is_zero(w):
            omega[(i, j)] = w
    return OmegaAlgebra(field, n, bracket, omega)
