"""Decompositions and the classification machinery.

The classifier sorts a certified algebra into the structural cases: Lie,
dimension three, a codimension-1 Lie subalgebra, or a codimension-2
radical that is almost abelian with its abelian part acting nilpotently.
It also attaches, when it can, an abelian subalgebra of codimension at
most 3.  Over a small prime field the codimension-1 search is
exhaustive; over the rationals it is candidate-based and may honestly
return "inconclusive".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import AnticommAlgebra
from .derivations import al_derivation_space
from .errors import (
    NotAbelianSubalgebra,
    NotASubalgebra,
    PreconditionFailed,
)
from .linalg import (
    Subspace,
    basis_vector,
    identity_matrix,
    kernel_basis,
    mat_mul,
    transpose,
    vec_add,
    vec_is_zero,
    vec_mat,
    vec_scale,
    vec_sub,
    zeros,
)

# -- commuting-family decompositions -------------------------------------


def _check_abelian_subalgebra(alg, sub):
    if not alg.is_subalgebra(sub):
        raise NotAbelianSubalgebra("the subspace is not a subalgebra")
    rows = [list(r) for r in sub.rows]
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            if not vec_is_zero(alg.field, alg.bracket(rows[a], rows[b])):
                raise NotAbelianSubalgebra("the subspace is not abelian")


def _check_commuting_adjoints(alg, sub):
    field, n = alg.field, alg.dim
    ads = [alg.ad(list(r)) for r in sub.rows]
    for a in range(len(ads)):
        for b in range(a + 1, len(ads)):
            left = mat_mul(field, ads[a], ads[b])
            right = mat_mul(field, ads[b], ads[a])
            for i in range(n):
                if not vec_is_zero(field, vec_sub(field, left[i], right[i])):
                    raise PreconditionFailed(
                        "adjoint maps of the subalgebra do not commute; "
                        "the decomposition would not be canonical"
                    )


def _restrict_operator(field, matrix, block: Subspace):
    """Matrix of a row-convention operator restricted to an invariant block."""
    rows = []
    for r in block.rows:
        image = vec_mat(field, list(r), matrix)
        coords = block.coords(image)
        if coords is None:
            raise PreconditionFailed("subspace is not invariant under the operator")
        rows.append(coords)
    return rows


def _block_to_ambient(field, block: Subspace, vectors):
    base = [list(r) for r in block.rows]
    return [vec_mat(field, v, base) for v in vectors]


def _mat_power(field, m, k):
    n = len(m)
    out = identity_matrix(field, n)
    for _ in range(k):
        out = mat_mul(field, out, m)
    return out


def fitting_decomposition(alg: AnticommAlgebra, sub: Subspace):
    """Fitting pair (L0, L1) for the commuting family of adjoints of an
    abelian subalgebra: L0 is the common generalized nullspace, L1 the
    complementary invariant part."""
    field, n = alg.field, alg.dim
    _check_abelian_subalgebra(alg, sub)
    _check_commuting_adjoints(alg, sub)
    null = Subspace.full(field, n)
    one_vectors = []
    for h in sub.rows:
        if null.is_zero():
            break
        t = _restrict_operator(field, alg.ad(list(h)), null)
        k = null.dim
        tk = _mat_power(field, t, k)
        ker = kernel_basis(field, transpose(tk), k)
        image = [list(r) for r in tk]
        one_vectors.extend(_block_to_ambient(field, null, image))
        null = Subspace(field, n, _block_to_ambient(field, null, ker))
    return null, Subspace(field, n, one_vectors)


@dataclass
class RootDecomposition:
    split: bool
    roots: list  # list of (eigenvalue tuple aligned with the subalgebra basis, Subspace)
    fitting_null: Subspace = None
    fitting_one: Subspace = None

    def root_space(self, values):
        for vals, space in self.roots:
            if vals == tuple(values):
                return space
        return None


def _eigenvalues_gf(field, matrix):
    """All eigenvalues of a matrix over a small prime field, by trial."""
    n = len(matrix)
    out = []
    for lam in range(field.char):
        shifted = [
            [
                field.sub(matrix[i][j], lam if i == j else field.zero())
                for j in range(n)
            ]
            for i in range(n)
        ]
        power = _mat_power(field, shifted, n)
        ker = kernel_basis(field, transpose(power), n)
        if ker:
            out.append((lam % field.char, ker))
    return out


def _char_poly_q(field, matrix):
    """Characteristic polynomial coefficients (ascending) over the
    rationals, by the trace recursion."""
    n = len(matrix)
    coeffs = [field.zero()] * (n + 1)
    coeffs[n] = field.one()
    m = None
    c = field.one()
    ident = identity_matrix(field, n)
    for k in range(1, n + 1):
        if m is None:
            m = [row[:] for row in matrix]
        else:
            shifted = [
                [
                    field.add(m[i][j], c if i == j else field.zero())
                    for j in range(n)
                ]
                for i in range(n)
            ]
            m = mat_mul(field, matrix, shifted)
        trace = field.zero()
        for i in range(n):
            trace = field.add(trace, m[i][i])
        c = field.div(field.neg(trace), field.coerce(k))
        coeffs[n - k] = c
    del ident
    return coeffs


def _rational_roots(field, coeffs):
    """Rational roots with multiplicity; None leftover flag when the
    polynomial does not split into linear factors over the rationals."""
    from fractions import Fraction

    def divisors(m):
        m = abs(m)
        if m == 0:
            return [1]
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.append(d)
                out.append(m // d)
            d += 1
        return sorted(set(out))

    poly = list(coeffs)  # ascending
    roots = []
    while len(poly) > 1:
        if poly[0] == 0:
            roots.append(Fraction(0))
            poly = poly[1:]
            continue
        denom = 1
        for c in poly:
            denom = denom * c.denominator // _gcd(denom, c.denominator)
        ints = [int(c * denom) for c in poly]
        lead, const = ints[-1], ints[0]
        if abs(const) > 10**15 or abs(lead) > 10**15:
            return roots, True
        found = None
        for p in divisors(const):
            for q in divisors(lead):
                for sign in (1, -1):
                    cand = Fraction(sign * p, q)
                    val = Fraction(0)
                    for c in reversed(poly):
                        val = val * cand + c
                    if val == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return roots, True
        roots.append(found)
        # synthetic division by (x - found), descending order
        desc = poly[::-1]
        quot = [desc[0]]
        for c in desc[1:-1]:
            quot.append(c + found * quot[-1])
        poly = quot[::-1]
    return roots, False


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _eigenvalues_q(field, matrix):
    n = len(matrix)
    coeffs = _char_poly_q(field, matrix)
    roots, leftover = _rational_roots(field, coeffs)
    if leftover:
        return None
    out = []
    for lam in sorted(set(roots)):
        shifted = [
            [
                field.sub(matrix[i][j], lam if i == j else field.zero())
                for j in range(n)
            ]
            for i in range(n)
        ]
        power = _mat_power(field, shifted, n)
        ker = kernel_basis(field, transpose(power), n)
        if ker:
            out.append((lam, ker))
    return out


def root_decomposition(alg: AnticommAlgebra, sub: Subspace):
    """Simultaneous generalized eigenspace decomposition for the adjoint
    family of an abelian subalgebra.  When some characteristic
    polynomial does not split, returns split=False with Fitting data
    only."""
    field, n = alg.field, alg.dim
    null, one = fitting_decomposition(alg, sub)
    blocks = [(Subspace.full(field, n), ())]
    for h in sub.rows:
        matrix = alg.ad(list(h))
        fresh = []
        for block, values in blocks:
            t = _restrict_operator(field, matrix, block)
            if field.char == 0:
                eig = _eigenvalues_q(field, t)
            elif field.char <= 4096:
                eig = _eigenvalues_gf(field, t)
            else:
                eig = None
            if eig is None:
                return RootDecomposition(False, [], null, one)
            total = sum(len(ker) for _, ker in eig)
            if total != block.dim:
                return RootDecomposition(False, [], null, one)
            for lam, ker in eig:
                space = Subspace(field, n, _block_to_ambient(field, block, ker))
                fresh.append((space, values + (lam,)))
        blocks = fresh
    roots = sorted(
        ((vals, space) for space, vals in blocks),
        key=lambda pair: tuple(str(v) for v in pair[0]),
    )
    return RootDecomposition(True, roots, null, one)


@dataclass
class RootPropertiesReport:
    ok: bool
    orthogonality_violations: list
    bracket_violations: list


def check_root_properties(alg: AnticommAlgebra, sub: Subspace):
    """Exact verification on a split decomposition: root spaces with
    root sum nonzero pair to zero under the form, and brackets of root
    spaces land in the root space of the sum."""
    field, n = alg.field, alg.dim
    _check_abelian_subalgebra(alg, sub)
    if not alg.omega_kernel().contains_subspace(sub):
        raise PreconditionFailed("the subalgebra must sit inside the form's radical")
    if sub.dim <= 1:
        raise PreconditionFailed("need an abelian subalgebra of dimension > 1")
    dec = root_decomposition(alg, sub)
    if not dec.split:
        raise PreconditionFailed("the decomposition does not split over this field")
    ortho, brackets = [], []
    for (va, sa), (vb, sb) in combinations(dec.roots, 2):
        sums = tuple(field.add(x, y) for x, y in zip(va, vb))
        if any(not field.is_zero(s) for s in sums):
            for ra in sa.rows:
                for rb in sb.rows:
                    if not field.is_zero(alg.omega(list(ra), list(rb))):
                        ortho.append((va, vb))
    for (va, sa) in dec.roots:
        for (vb, sb) in dec.roots:
            sums = tuple(field.add(x, y) for x, y in zip(va, vb))
            target = dec.root_space(sums)
            for ra in sa.rows:
                for rb in sb.rows:
                    image = alg.bracket(list(ra), list(rb))
                    if vec_is_zero(field, image):
                        continue
                    if target is None or not target.contains(image):
                        brackets.append((va, vb))
    return RootPropertiesReport(not ortho and not brackets, ortho, brackets)


def binomial_identity_check(alg: AnticommAlgebra, sub: Subspace, n_max: int):
    """Exact check of the two shifted-power identities

      sum_i C(n,i) w((ad h + a)^(n-i) x, (ad h + b)^i y) = (a+b)^n w(x,y)
      sum_i C(n,i) [(ad h + a)^(n-i) x, (ad h + b)^i y]
          = (ad h + a + b)^n [x,y] - n (a+b)^(n-1) w(x,y) h

    for basis x, y, every basis h of the subalgebra, 1 <= n <= n_max and
    sampled shifts a, b in {0, 1, -1, 2}.
    """
    from math import comb

    field, dim = alg.field, alg.dim
    _check_abelian_subalgebra(alg, sub)
    if not alg.omega_kernel().contains_subspace(sub):
        raise PreconditionFailed("the subalgebra must sit inside the form's radical")
    if sub.dim <= 1:
        raise PreconditionFailed("need an abelian subalgebra of dimension > 1")
    shifts = [field.coerce(v) for v in (0, 1, -1, 2)]
    e = [basis_vector(field, dim, i) for i in range(dim)]
    for h in sub.rows:
        ad_h = alg.ad(list(h))
        for a in shifts:
            for b in shifts:

                def shifted_powers(shift, vec):
                    out = [list(vec)]
                    for _ in range(n_max):
                        prev = out[-1]
                        nxt = vec_add(
                            field,
                            vec_mat(field, prev, ad_h),
                            vec_scale(field, shift, prev),
                        )
                        out.append(nxt)
                    return out

                ab = field.add(a, b)
                for xi in range(dim):
                    powers_x = shifted_powers(a, e[xi])
                    for yi in range(dim):
                        powers_y = shifted_powers(b, e[yi])
                        wxy = alg.omega(e[xi], e[yi])
                        bxy = alg.bracket(e[xi], e[yi])
                        powers_br = [list(bxy)]
                        for _ in range(n_max):
                            prev = powers_br[-1]
                            powers_br.append(
                                vec_add(
                                    field,
                                    vec_mat(field, prev, ad_h),
                                    vec_scale(field, ab, prev),
                                )
                            )
                        for npow in range(1, n_max + 1):
                            total = field.zero()
                            vec_total = zeros(field, dim)
                            for i in range(npow + 1):
                                coeff = field.coerce(comb(npow, i))
                                total = field.add(
                                    total,
                                    field.mul(
                                        coeff,
                                        alg.omega(powers_x[npow - i], powers_y[i]),
                                    ),
                                )
                                vec_total = vec_add(
                                    field,
                                    vec_total,
                                    vec_scale(
                                        field,
                                        coeff,
                                        alg.bracket(powers_x[npow - i], powers_y[i]),
                                    ),
                                )
                            ab_pow = field.one()
                            for _ in range(npow):
                                ab_pow = field.mul(ab_pow, ab)
                            if not field.is_zero(field.sub(total, field.mul(ab_pow, wxy))):
                                return False
                            ab_pow_prev = field.one()
                            for _ in range(npow - 1):
                                ab_pow_prev = field.mul(ab_pow_prev, ab)
                            correction = field.mul(
                                field.coerce(npow), field.mul(ab_pow_prev, wxy)
                            )
                            rhs = vec_sub(
                                field,
                                powers_br[npow],
                                vec_scale(field, correction, list(h)),
                            )
                            if not vec_is_zero(field, vec_sub(field, vec_total, rhs)):
                                return False
    return True


def filtration(alg: AnticommAlgebra, start: Subspace):
    """Descending chain L_{i+1} = {x in L_i : [x, L] <= L_i}, returned
    while strictly descending (the stable term appears once)."""
    field, n = alg.field, alg.dim
    if not alg.is_subalgebra(start):
        raise NotASubalgebra("the starting term must be a subalgebra")
    chain = [start]
    e = [basis_vector(field, n, i) for i in range(n)]
    while True:
        cur = chain[-1]
        # x in cur with [x, e_j] in cur for all j: kernel of the reduced
        # adjoint maps in cur's coordinates
        base = [list(r) for r in cur.rows]
        conditions = []
        for ej in e:
            images = [cur.reduce(alg.bracket(brow, ej)) for brow in base]
            for col in range(n):
                conditions.append([images[t][col] for t in range(len(base))])
        coords = kernel_basis(field, conditions, len(base))
        nxt = Subspace(field, n, [vec_mat(field, c, base) for c in coords])
        if nxt.dim == cur.dim:
            break
        chain.append(nxt)
        if nxt.is_zero():
            break
    return chain


# -- classification -------------------------------------------------------


@dataclass
class ClassificationVerdict:
    case: str  # lie_algebra | dim_three | codim_one_lie_subalgebra |
    #            kernel_codim_two | inconclusive
    witness: Subspace | None = None
    kernel_type: str | None = None  # abelian | almost_abelian
    nilpotent_action: bool | None = None
    abelian_small_codim: Subspace | None = None

    def to_json_dict(self, field):
        def sub_json(s):
            return None if s is None else [[field.format(x) for x in r] for r in s.rows]

        return {
            "case": self.case,
            "witness": sub_json(self.witness),
            "kernel_type": self.kernel_type,
            "nilpotent_action": self.nilpotent_action,
            "abelian_small_codim": sub_json(self.abelian_small_codim),
        }


def _abelian_witness(alg: AnticommAlgebra, extra=(), enum_cap=10**6):
    """Best abelian subalgebra of small codimension among candidates."""
    field, n = alg.field, alg.dim
    candidates = []

    # greedy growth from each basis vector
    e = [basis_vector(field, n, i) for i in range(n)]
    for start in range(n):
        members = [start]
        for j in range(n):
            if j in members:
                continue
            if all(vec_is_zero(field, alg.bracket(e[a], e[j])) for a in members):
                members.append(j)
        candidates.append(Subspace(field, n, [e[i] for i in members]))
    ker = alg.omega_kernel()
    candidates.append(ker)
    if ker.dim and alg.is_subalgebra(ker):
        dec = alg.restrict(ker).almost_abelian_decomposition()
        if dec.kind == "almost_abelian":
            base = [list(r) for r in ker.rows]
            rows = [vec_mat(field, list(r), base) for r in dec.abelian_part.rows]
            candidates.append(Subspace(field, n, rows))
    candidates.extend(extra)
    candidates.append(alg.center())

    best = None

    def consider(sub):
        nonlocal best
        if sub is None or sub.dim == 0:
            return
        if not alg.is_subalgebra(sub):
            return
        rows = [list(r) for r in sub.rows]
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                if not vec_is_zero(field, alg.bracket(rows[a], rows[b])):
                    return
        if best is None or sub.dim > best.dim:
            best = sub

    for cand in candidates:
        consider(cand)
    if (best is None or best.codim > 3) and alg._enumerable_vector_count(enum_cap):
        # last resort over a small prime field: largest abelian subalgebra
        # among spans of projective vectors, grown greedily
        for v in alg._projective_vectors():
            members = [list(v)]
            for j in range(n):
                cand = e[j]
                if all(
                    vec_is_zero(field, alg.bracket(m, cand)) for m in members
                ):
                    members.append(cand)
            consider(Subspace(field, n, members))
            if best is not None and best.codim <= 3:
                break
    return best


def _rank2_line_parameters(alg, core: Subspace):
    """Exact parameters t for which core + K(r1 + t r2) is a subalgebra,
    when the quotient by ``core`` is 2-dimensional and core is a
    subalgebra.  The closure condition per basis row of core is a
    quadratic in t, so the search is complete over the rationals; the
    value t = None encodes the line through r2."""
    field, n = alg.field, alg.dim
    r1, r2 = core.quotient_reps()
    polys = []
    for k in core.rows:
        a = core.quotient_coords(alg.bracket(list(k), r1))
        b = core.quotient_coords(alg.bracket(list(k), r2))
        # cross((a + t b), (1, t)) = b0 t^2 + (a0 - b1) t - a1
        polys.append([field.neg(a[1]), field.sub(a[0], b[1]), b[0]])
    nontrivial = [p for p in polys if any(not field.is_zero(c) for c in p)]
    params = []
    if not nontrivial:
        params.append(field.zero())
    elif field.char == 0:
        roots, _leftover = _rational_roots(field, nontrivial[0])
        for t in sorted(set(roots)):
            if all(_poly_eval_is_zero(field, p, t) for p in nontrivial):
                params.append(t)
    else:
        for t in range(field.char):
            t = field.coerce(t)
            if all(_poly_eval_is_zero(field, p, t) for p in nontrivial):
                params.append(t)
    # the line through r2 alone: first quotient coordinate of [k, r2]
    if all(
        field.is_zero(core.quotient_coords(alg.bracket(list(k), r2))[0])
        for k in core.rows
    ):
        params.append(None)
    return params


def _poly_eval_is_zero(field, coeffs, t):
    value = field.zero()
    for c in reversed(coeffs):
        value = field.add(field.mul(value, t), c)
    return field.is_zero(value)


def _hyperplanes_over_subspace(alg, core: Subspace, cap=10**6):
    """All hyperplanes containing ``core`` over a prime field (complete),
    or, over the rationals, the complete rank-2 family when the quotient
    is 2-dimensional plus a finite candidate family otherwise."""
    field, n = alg.field, alg.dim
    reps = core.quotient_reps()
    q = len(reps)
    if q <= 1:
        return
    if q == 2 and alg.is_subalgebra(core):
        r1, r2 = reps
        for t in _rank2_line_parameters(alg, core):
            if t is None:
                vec = r2
            else:
                vec = vec_add(field, r1, vec_scale(field, t, r2))
            yield Subspace(field, n, list(core.rows) + [vec])
        return
    if field.char and (field.char ** q - 1) // (field.char - 1) <= cap:
        p = field.char
        # lines in the quotient, projectively normalized
        for lead in range(q):
            tail_len = q - lead - 1

            def rec(pos, coeffs):
                if pos == tail_len:
                    vec = zeros(field, n)
                    vec = vec_add(field, vec, reps[lead])
                    for t, c in enumerate(coeffs):
                        vec = vec_add(
                            field, vec, vec_scale(field, c, reps[lead + 1 + t])
                        )
                    yield vec
                    return
                for c in range(p):
                    coeffs.append(c % p)
                    yield from rec(pos + 1, coeffs)
                    coeffs.pop()

            for vec in rec(0, []):
                yield Subspace(field, n, list(core.rows) + [vec])
    else:
        seeds = [basis_vector(field, n, i) for i in range(n)]
        seeds.extend(list(r) for r in alg.commutant().rows)
        for s in seeds:
            cand = Subspace(field, n, list(core.rows) + [s])
            if cand.dim == core.dim + 1:
                yield cand


def classify(alg: AnticommAlgebra, enum_cap=10**6):
    """Structural verdict for a certified algebra; see the module docstring."""
    field, n = alg.field, alg.dim
    if alg.is_lie():
        return ClassificationVerdict(
            "lie_algebra", abelian_small_codim=_abelian_witness(alg, enum_cap=enum_cap)
        )
    if n == 3:
        return ClassificationVerdict(
            "dim_three", abelian_small_codim=_abelian_witness(alg, enum_cap=enum_cap)
        )
    ker = alg.omega_kernel()
    rank = n - ker.dim
    extra_witnesses = []
    if rank == 2 and ker.dim and alg.is_subalgebra(ker):
        dec = alg.restrict(ker).almost_abelian_decomposition()
        if dec.kind == "almost_abelian":
            base = [list(r) for r in ker.rows]
            part = Subspace(
                field,
                n,
                [vec_mat(field, list(r), base) for r in dec.abelian_part.rows],
            )
            extra_witnesses.append(part)
            try:
                null, _one = fitting_decomposition(alg, part)
                nilpotent = null.is_full()
            except PreconditionFailed:
                nilpotent = False
            if nilpotent:
                return ClassificationVerdict(
                    "kernel_codim_two",
                    kernel_type="almost_abelian",
                    nilpotent_action=True,
                    abelian_small_codim=_abelian_witness(
                        alg, extra_witnesses, enum_cap=enum_cap
                    ),
                )

    # search for a codimension-1 Lie subalgebra; any such subalgebra
    # contains the radical of the form (dim >= 4, non-Lie), so extending
    # the radical is a complete search over a small prime field
    witness = None
    for cand in _hyperplanes_over_subspace(alg, ker, enum_cap):
        if cand.dim != n - 1:
            continue
        if not alg.is_subalgebra(cand):
            continue
        if alg.restrict(cand).is_lie():
            witness = cand
            break
    if witness is None and field.char == 0:
        # candidate kernels of alpha covectors from derivation solutions
        lam_set = alg.multiplicative_lambda()
        if lam_set is not None:
            for lam in lam_set.points():
                for der in al_derivation_space(alg, lam):
                    if all(field.is_zero(x) for x in der.alpha):
                        continue
                    cand = Subspace(
                        field, n, kernel_basis(field, [der.alpha], n)
                    )
                    if (
                        cand.dim == n - 1
                        and alg.is_subalgebra(cand)
                        and alg.restrict(cand).is_lie()
                    ):
                        witness = cand
                        break
                if witness is not None:
                    break
    if witness is not None:
        extra = list(extra_witnesses)
        extra.append(witness)
        wdec = alg.restrict(witness).almost_abelian_decomposition()
        if wdec.kind == "almost_abelian":
            base = [list(r) for r in witness.rows]
            extra.append(
                Subspace(
                    field,
                    n,
                    [vec_mat(field, list(r), base) for r in wdec.abelian_part.rows],
                )
            )
        return ClassificationVerdict(
            "codim_one_lie_subalgebra",
            witness=witness,
            abelian_small_codim=_abelian_witness(alg, extra, enum_cap=enum_cap),
        )
    return ClassificationVerdict(
        "inconclusive",
        abelian_small_codim=_abelian_witness(alg, extra_witnesses, enum_cap=enum_cap),
    )


def alpha_vanishing_scan(alg: AnticommAlgebra):
    """For a 3-dimensional non-Lie algebra: does every derivation-space
    basis solution, for every sampled multiplicative form, have alpha
    vanishing on the radical of the form?"""
    field, n = alg.field, alg.dim
    if n != 3:
        raise PreconditionFailed("the scan is defined for dimension 3")
    if alg.is_lie():
        raise PreconditionFailed("the scan is defined for non-Lie algebras")
    lam_set = alg.multiplicative_lambda()
    if lam_set is None:
        return True
    ker_rows = [list(r) for r in alg.omega_kernel().rows]
    for lam in lam_set.points():
        for der in al_derivation_space(alg, lam):
            for k in ker_rows:
                val = field.zero()
                for c, a in zip(k, der.alpha):
                    val = field.add(val, field.mul(c, a))
                if not field.is_zero(val):
                    return False
    return True
