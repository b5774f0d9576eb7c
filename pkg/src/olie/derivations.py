"""Two-form derivations: endomorphisms D with covectors (alpha, lambda)
satisfying, on every pair of elements,

    D([x,y]) - [D(x),y] + [D(y),x]
        = lam(y) D(x) - lam(x) D(y) + alpha(y) x - alpha(x) y.

For a fixed lambda this is a homogeneous linear system in the n^2 matrix
entries d_ij (row convention, D(e_i) = sum_j d_ij e_j) and the n values
alpha_i; `al_derivation_space` returns its canonical solution basis.
These are exactly the data that let a codimension-1 extension carry the
defining law (see :mod:`olie.extensions`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import AlmostAbelianResult, AnticommAlgebra
from .errors import DimensionMismatch, NotALieAlgebra, PreconditionFailed
from .linalg import (
    Subspace,
    basis_vector,
    kernel_basis,
    mat_mul,
    mat_sub,
    vec_dot,
    vec_is_zero,
    vec_mat,
    vec_sub,
    zeros,
)


@dataclass
class AlphaLambdaDerivation:
    """Matrix D (rows are images of basis vectors) with covectors."""

    matrix: list
    alpha: list
    lam: list

    def apply(self, field, v):
        return vec_mat(field, v, self.matrix)

    def is_zero_map(self, field):
        return all(field.is_zero(x) for row in self.matrix for x in row)

    def to_json_dict(self, field):
        return {
            "D": [[field.format(x) for x in row] for row in self.matrix],
            "alpha": [field.format(x) for x in self.alpha],
            "lambda": [field.format(x) for x in self.lam],
        }

    @classmethod
    def from_json_dict(cls, field, obj, dim):
        rows = obj.get("D")
        alpha = obj.get("alpha", ["0"] * dim)
        lam = obj.get("lambda", ["0"] * dim)
        if rows is None or len(rows) != dim or any(len(r) != dim for r in rows):
            raise DimensionMismatch("derivation matrix shape does not match dim")
        if len(alpha) != dim or len(lam) != dim:
            raise DimensionMismatch("covector length does not match dim")
        return cls(
            [[field.coerce(x) for x in row] for row in rows],
            [field.coerce(x) for x in alpha],
            [field.coerce(x) for x in lam],
        )


def _system_rows(alg: AnticommAlgebra, lam):
    """Rows of the homogeneous system in the n^2 + n unknowns
    (d_00 .. d_{n-1,n-1} row-major, then alpha_0 .. alpha_{n-1})."""
    field, n = alg.field, alg.dim
    lam = [field.coerce(x) for x in lam]
    if len(lam) != n:
        raise DimensionMismatch("lambda length does not match the algebra")
    nun = n * n + n
    rows = []
    c3 = [[alg.basis_bracket(i, j) for j in range(n)] for i in range(n)]
    for i, j in combinations(range(n), 2):
        cij = c3[i][j]
        for l in range(n):
            row = zeros(field, nun)
            for k in range(n):
                # D([e_i,e_j]) contributes C_ij^k d_kl
                if not field.is_zero(cij[k]):
                    row[k * n + l] = field.add(row[k * n + l], cij[k])
                # -[D(e_i), e_j] contributes -C_kj^l d_ik
                ckj = c3[k][j][l]
                if not field.is_zero(ckj):
                    row[i * n + k] = field.sub(row[i * n + k], ckj)
                # +[D(e_j), e_i] contributes +C_ki^l d_jk
                cki = c3[k][i][l]
                if not field.is_zero(cki):
                    row[j * n + k] = field.add(row[j * n + k], cki)
            row[i * n + l] = field.sub(row[i * n + l], lam[j])
            row[j * n + l] = field.add(row[j * n + l], lam[i])
            if i == l:
                row[n * n + j] = field.sub(row[n * n + j], field.one())
            if j == l:
                row[n * n + i] = field.add(row[n * n + i], field.one())
            rows.append(row)
    return rows


def al_derivation_space(alg: AnticommAlgebra, lam):
    """Canonical basis of the (D, alpha) solution space for a fixed lambda."""
    field, n = alg.field, alg.dim
    lam = [field.coerce(x) for x in lam]
    rows = _system_rows(alg, lam)
    sols = kernel_basis(field, rows, n * n + n)
    out = []
    for v in sols:
        matrix = [v[i * n : (i + 1) * n] for i in range(n)]
        out.append(AlphaLambdaDerivation(matrix, v[n * n :], list(lam)))
    return out


def check_al_derivation(alg: AnticommAlgebra, der: AlphaLambdaDerivation):
    """Exact residual test of the defining relation on all basis pairs."""
    field, n = alg.field, alg.dim
    d, alpha, lam = der.matrix, der.alpha, der.lam
    e = [basis_vector(field, n, i) for i in range(n)]
    for i, j in combinations(range(n), 2):
        di, dj = d[i], d[j]
        lhs = vec_mat(field, alg.basis_bracket(i, j), d)
        lhs = vec_sub(field, lhs, alg.bracket(di, e[j]))
        lhs = [field.add(a, b) for a, b in zip(lhs, alg.bracket(dj, e[i]))]
        rhs = [
            field.sub(field.mul(lam[j], a), field.mul(lam[i], b))
            for a, b in zip(di, dj)
        ]
        rhs[i] = field.add(rhs[i], alpha[j])
        rhs[j] = field.sub(rhs[j], alpha[i])
        if not vec_is_zero(field, vec_sub(field, lhs, rhs)):
            return False
    return True


def alpha0_bracket(alg: AnticommAlgebra, d1: AlphaLambdaDerivation, d2: AlphaLambdaDerivation):
    """Commutator of two derivations with vanishing lambda.

    The result is again such a derivation, with covector
    alpha1 o D2 - alpha2 o D1.
    """
    field, n = alg.field, alg.dim
    for d in (d1, d2):
        if not all(field.is_zero(x) for x in d.lam):
            raise PreconditionFailed("both inputs must have lambda = 0")
        if not check_al_derivation(alg, d):
            raise PreconditionFailed("input does not satisfy the derivation relation")
    # [D1,D2](x) = D1(D2(x)) - D2(D1(x)); row convention composes left-to-right
    matrix = mat_sub(
        field, mat_mul(field, d2.matrix, d1.matrix), mat_mul(field, d1.matrix, d2.matrix)
    )
    # (alpha o D)(e_i) = sum_j d_ij alpha_j
    alpha = [
        field.sub(
            vec_dot(field, d2.matrix[i], d1.alpha),
            vec_dot(field, d1.matrix[i], d2.alpha),
        )
        for i in range(n)
    ]
    out = AlphaLambdaDerivation(matrix, alpha, zeros(field, n))
    assert check_al_derivation(alg, out)
    return out


@dataclass
class KerAlphaReport:
    kind: str  # "alpha_zero" | "small_dim" | "ker_alpha_subalgebra"
    ker_alpha: Subspace | None = None
    structure: AlmostAbelianResult | None = None


def ker_alpha_analysis(alg: AnticommAlgebra, der: AlphaLambdaDerivation):
    """For a Lie algebra of dimension > 3 with alpha != 0, certify that
    the kernel of alpha is a codimension-1 subalgebra and report its
    abelian / almost-abelian shape."""
    field, n = alg.field, alg.dim
    if not alg.is_lie():
        raise NotALieAlgebra("the input algebra is not a Lie algebra")
    if all(field.is_zero(x) for x in der.alpha):
        return KerAlphaReport("alpha_zero")
    if n <= 3:
        return KerAlphaReport("small_dim")
    ker = Subspace(field, n, kernel_basis(field, [der.alpha], n))
    if ker.dim != n - 1 or not alg.is_subalgebra(ker):
        raise PreconditionFailed(
            "kernel of alpha is not a codimension-1 subalgebra; "
            "the input is not a derivation of this Lie algebra"
        )
    structure = alg.restrict(ker).almost_abelian_decomposition()
    return KerAlphaReport("ker_alpha_subalgebra", ker_alpha=ker, structure=structure)
