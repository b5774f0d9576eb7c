"""A small multilinear-identity engine with an s-expression term language.

Grammar:  atoms are variables ``x1`` .. ``x9`` and integer scalars; the
forms are ``(b t u)`` for the bracket, ``(w t u)`` for the scalar form,
``(s k t)`` scaling a vector term by an integer or by a ``(w ..)`` term,
``(+ t ...)`` and ``(- t u)``.  Terms are vector- or scalar-valued and
the checker enforces well-typedness; an :class:`Identity` additionally
requires multilinearity (every variable exactly once in each monomial).

``find_counterexample`` enumerates basis assignments: all n^k tuples in
lexicographic order in general, increasing tuples only for identities
flagged alternating (a signed-permutation sum vanishes identically when
two arguments repeat, so the lexicographically first counterexample is
unchanged; this fast path is unit-tested against full enumeration).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .algebra import AnticommAlgebra
from .errors import (
    ArityMismatch,
    IdentitySyntaxError,
    IdentityTypeError,
    NotMultilinear,
    UnknownIdentity,
)
from .linalg import basis_vector, vec_is_zero, zeros

# term node tags
VAR, BRACKET, OMEGA, SCALE, SUM, INT = "var", "b", "w", "s", "+", "int"


def var(i):
    return (VAR, i)


def b(t, u):
    return (BRACKET, t, u)


def w(t, u):
    return (OMEGA, t, u)


def s(k, t):
    return (SCALE, k if isinstance(k, tuple) else (INT, k), t)


def plus(*terms):
    return (SUM, tuple(terms))


def minus(t, u):
    return plus(t, s(-1, u))


def term_type(term):
    """'vec' or 'scalar'; raises on ill-typed trees."""
    tag = term[0]
    if tag == VAR:
        return "vec"
    if tag == INT:
        return "scalar"
    if tag == BRACKET:
        if term_type(term[1]) != "vec" or term_type(term[2]) != "vec":
            raise IdentityTypeError("bracket needs vector-valued operands")
        return "vec"
    if tag == OMEGA:
        if term_type(term[1]) != "vec" or term_type(term[2]) != "vec":
            raise IdentityTypeError("the form needs vector-valued operands")
        return "scalar"
    if tag == SCALE:
        if term_type(term[1]) != "scalar":
            raise IdentityTypeError("the first operand of s must be scalar-valued")
        if term_type(term[2]) != "vec":
            raise IdentityTypeError("the second operand of s must be vector-valued")
        return "vec"
    if tag == SUM:
        kinds = {term_type(t) for t in term[1]}
        if len(kinds) != 1:
            raise IdentityTypeError("summands must share one type")
        return kinds.pop()
    raise IdentityTypeError(f"unknown node {tag!r}")


def _monomial_var_multisets(term):
    """Set of per-monomial variable multisets (sorted tuples)."""
    tag = term[0]
    if tag == VAR:
        return {(term[1],)}
    if tag == INT:
        return {()}
    if tag in (BRACKET, OMEGA, SCALE):
        left = _monomial_var_multisets(term[1])
        right = _monomial_var_multisets(term[2])
        return {tuple(sorted(a + bb)) for a in left for bb in right}
    if tag == SUM:
        out = set()
        for t in term[1]:
            out |= _monomial_var_multisets(t)
        return out
    raise IdentityTypeError(f"unknown node {tag!r}")


def check_multilinear(term, num_vars):
    want = tuple(range(1, num_vars + 1))
    for mono in _monomial_var_multisets(term):
        if mono != want:
            for v in mono:
                if mono.count(v) > 1:
                    raise NotMultilinear(
                        f"variable x{v} repeats inside a monomial", variable=v
                    )
            missing = [v for v in want if v not in mono]
            raise NotMultilinear(
                f"a monomial misses variable(s) {missing}",
                variable=missing[0] if missing else None,
            )


def max_var(term):
    tag = term[0]
    if tag == VAR:
        return term[1]
    if tag == INT:
        return 0
    if tag == SUM:
        return max((max_var(t) for t in term[1]), default=0)
    return max(max_var(term[1]), max_var(term[2]))


@dataclass
class Identity:
    name: str
    num_vars: int
    lhs: tuple
    result_type: str = "vec"
    multilinear: bool = True
    alternating: bool = False
    direct: tuple | None = None  # original non-multilinear term, if any
    direct_num_vars: int = 0

    def __post_init__(self):
        self.result_type = term_type(self.lhs)
        if self.multilinear:
            check_multilinear(self.lhs, self.num_vars)


# -- parsing ---------------------------------------------------------------


def _tokenize(text):
    out = []
    pos = 0
    for ch in text:
        if ch == "(" or ch == ")":
            out.append((ch, pos))
        elif ch.isspace():
            pass
        else:
            if out and out[-1][0] not in "()" and out[-1][1] + len(out[-1][0]) == pos:
                out[-1] = (out[-1][0] + ch, out[-1][1])
            else:
                out.append((ch, pos))
        pos += 1
    return out


def _read(tokens, idx):
    if idx >= len(tokens):
        raise IdentitySyntaxError("unexpected end of expression", position=None)
    tok, pos = tokens[idx]
    if tok == "(":
        items = []
        idx += 1
        while idx < len(tokens) and tokens[idx][0] != ")":
            node, idx = _read(tokens, idx)
            items.append(node)
        if idx >= len(tokens):
            raise IdentitySyntaxError("missing closing parenthesis", position=pos)
        return items, idx + 1
    if tok == ")":
        raise IdentitySyntaxError("unexpected ')'", position=pos)
    return (tok, pos), idx + 1


def _build(node):
    if isinstance(node, tuple):  # atom
        tok, pos = node
        if tok.startswith("x") and tok[1:].isdigit():
            idx = int(tok[1:])
            if not 1 <= idx <= 9:
                raise IdentitySyntaxError(f"variable {tok} out of range", position=pos)
            return var(idx)
        try:
            return (INT, int(tok))
        except ValueError:
            raise IdentitySyntaxError(f"bad atom {tok!r}", position=pos) from None
    if not node:
        raise IdentitySyntaxError("empty form")
    head = node[0]
    if not isinstance(head, tuple):
        raise IdentitySyntaxError("form head must be an atom")
    op, pos = head
    args = [_build(x) for x in node[1:]]
    if op == "b":
        if len(args) != 2:
            raise IdentitySyntaxError("(b ..) takes two operands", position=pos)
        return b(*args)
    if op == "w":
        if len(args) != 2:
            raise IdentitySyntaxError("(w ..) takes two operands", position=pos)
        return w(*args)
    if op == "s":
        if len(args) != 2:
            raise IdentitySyntaxError("(s ..) takes two operands", position=pos)
        return (SCALE, args[0], args[1])
    if op == "+":
        if not args:
            raise IdentitySyntaxError("(+ ..) needs operands", position=pos)
        return plus(*args)
    if op == "-":
        if len(args) != 2:
            raise IdentitySyntaxError("(- ..) takes two operands", position=pos)
        return minus(*args)
    raise IdentitySyntaxError(f"unknown operator {op!r}", position=pos)


def parse_term(text):
    tokens = _tokenize(text)
    node, idx = _read(tokens, 0)
    if idx != len(tokens):
        raise IdentitySyntaxError("trailing input", position=tokens[idx][1])
    term = _build(node)
    term_type(term)
    return term


def parse_identity(text, name="anonymous"):
    """Parse a multilinear identity (asserted to vanish identically)."""
    term = parse_term(text)
    return Identity(name, max_var(term), term)


def format_term(term):
    tag = term[0]
    if tag == VAR:
        return f"x{term[1]}"
    if tag == INT:
        return str(term[1])
    if tag == SUM:
        return "(+ " + " ".join(format_term(t) for t in term[1]) + ")"
    return f"({tag} {format_term(term[1])} {format_term(term[2])})"


# -- evaluation ------------------------------------------------------------


def _eval(alg: AnticommAlgebra, term, env):
    field = alg.field
    tag = term[0]
    if tag == VAR:
        return env[term[1]]
    if tag == INT:
        return field.coerce(term[1])
    if tag == BRACKET:
        return alg.bracket(_eval(alg, term[1], env), _eval(alg, term[2], env))
    if tag == OMEGA:
        return alg.omega(_eval(alg, term[1], env), _eval(alg, term[2], env))
    if tag == SCALE:
        c = _eval(alg, term[1], env)
        return [field.mul(c, x) for x in _eval(alg, term[2], env)]
    if tag == SUM:
        parts = [_eval(alg, t, env) for t in term[1]]
        if isinstance(parts[0], list):
            out = zeros(field, alg.dim)
            for p in parts:
                out = [field.add(a, x) for a, x in zip(out, p)]
            return out
        total = field.zero()
        for p in parts:
            total = field.add(total, p)
        return total
    raise IdentityTypeError(f"unknown node {tag!r}")


def evaluate(alg: AnticommAlgebra, ident, assignment, direct=False):
    """Evaluate on basis vectors selected by 0-based indices."""
    term = ident.lhs if isinstance(ident, Identity) else ident
    nvars = max_var(term)
    if direct and isinstance(ident, Identity) and ident.direct is not None:
        term = ident.direct
        nvars = ident.direct_num_vars
    if len(assignment) != nvars:
        raise ArityMismatch(f"need {nvars} indices, got {len(assignment)}")
    env = {
        k + 1: basis_vector(alg.field, alg.dim, i) for k, i in enumerate(assignment)
    }
    return _eval(alg, term, env)


def evaluate_on_vectors(alg: AnticommAlgebra, ident, vectors, direct=False):
    term = ident.lhs if isinstance(ident, Identity) else ident
    if direct and isinstance(ident, Identity) and ident.direct is not None:
        term = ident.direct
    env = {k + 1: list(v) for k, v in enumerate(vectors)}
    return _eval(alg, term, env)


def _is_zero_value(field, value):
    if isinstance(value, list):
        return vec_is_zero(field, value)
    return field.is_zero(value)


def find_counterexample(alg: AnticommAlgebra, ident: Identity):
    """First basis tuple (lexicographic) where the identity fails, or None."""
    if not ident.multilinear:
        raise NotMultilinear(
            f"identity {ident.name!r} is not multilinear; basis-tuple "
            "checking is only sound for multilinear identities"
        )
    field, n = alg.field, alg.dim
    k = ident.num_vars
    tuples = (
        combinations(range(n), k) if ident.alternating else product(range(n), repeat=k)
    )
    for assignment in tuples:
        value = evaluate(alg, ident, assignment)
        if not _is_zero_value(field, value):
            return assignment
    return None


def holds(alg: AnticommAlgebra, ident: Identity):
    return find_counterexample(alg, ident) is None


# -- built-in identities -----------------------------------------------------


def _jacobian_term(x, y, z):
    return plus(b(b(x, y), z), b(b(z, x), y), b(b(y, z), x))


def _jacobi_residual():
    x, y, z = var(1), var(2), var(3)
    rhs = plus(s(w(x, y), z), s(w(z, x), y), s(w(y, z), x))
    return Identity(
        "jacobi-residual", 3, minus(_jacobian_term(x, y, z), rhs), alternating=True
    )


def _d_omega_term(x, y, z):
    return plus(w(b(x, y), z), w(b(z, x), y), w(b(y, z), x))


def _two_basic():
    x, y, z, t = (var(i) for i in range(1, 5))
    lhs = plus(
        s(w(z, t), b(x, y)),
        s(w(t, y), b(x, z)),
        s(w(y, z), b(x, t)),
        s(w(x, t), b(y, z)),
        s(w(z, x), b(y, t)),
        s(w(x, y), b(z, t)),
    )
    rhs = plus(
        s(_d_omega_term(t, z, y), x),
        s(_d_omega_term(z, t, x), y),
        s(_d_omega_term(y, x, t), z),
        s(_d_omega_term(x, y, z), t),
    )
    return Identity("two-basic", 4, minus(lhs, rhs), alternating=True)


def _degree5():
    terms = []
    for sigma in permutations(range(1, 6)):
        sign = _perm_sign(sigma)
        a, bb, c, d, e = (var(i) for i in sigma)
        mono = plus(b(b(b(b(a, bb), c), d), e), b(b(b(a, bb), c), b(d, e)))
        terms.append(s(sign, mono))
    return Identity("degree5", 5, plus(*terms), alternating=True)


def _perm_sign(sigma):
    sign = 1
    for i, j in combinations(range(len(sigma)), 2):
        if sigma[i] > sigma[j]:
            sign = -sign
    return sign


def _engel():
    # direct form [[[y,x],x],x] with x = x1, y = x2
    direct = b(b(b(var(2), var(1)), var(1)), var(1))
    terms = []
    for sigma in permutations((2, 3, 4)):
        terms.append(b(b(b(var(1), var(sigma[0])), var(sigma[1])), var(sigma[2])))
    return Identity(
        "engel", 4, plus(*terms), direct=direct, direct_num_vars=2
    )


def _abg(alpha=1, beta=1, gamma=1):
    # direct form in x = x1, y = x2, z = x3
    x, y, z = var(1), var(2), var(3)
    direct = plus(
        s(alpha, b(b(x, y), b(x, z))),
        s(beta, minus(b(b(b(x, y), x), z), b(b(b(x, z), x), y))),
        s(gamma, minus(b(b(b(x, y), z), x), b(b(b(x, z), y), x))),
        s(beta + gamma, b(b(b(y, z), x), x)),
    )
    # linearized in the two x-copies x1, x2 with y = x3, z = x4
    terms = []
    for xa, xb in ((1, 2), (2, 1)):
        xx, xx2, yy, zz = var(xa), var(xb), var(3), var(4)
        terms.append(s(alpha, b(b(xx, yy), b(xx2, zz))))
        terms.append(s(beta, minus(b(b(b(xx, yy), xx2), zz), b(b(b(xx, zz), xx2), yy))))
        terms.append(s(gamma, minus(b(b(b(xx, yy), zz), xx2), b(b(b(xx, zz), yy), xx2))))
        terms.append(s(beta + gamma, b(b(b(yy, zz), xx), xx2)))
    return Identity(
        "abg", 4, plus(*terms), direct=direct, direct_num_vars=3
    )


def _bin():
    x, y = var(1), var(2)
    direct = _jacobian_term(x, y, b(x, y))
    terms = []
    for xa, xb in ((1, 2), (2, 1)):
        for ya, yb in ((3, 4), (4, 3)):
            terms.append(_jacobian_term(var(xa), var(ya), b(var(xb), var(yb))))
    return Identity("bin", 4, plus(*terms), direct=direct, direct_num_vars=2)


def _four():
    x, y, z, t = (var(i) for i in range(1, 5))
    lhs = plus(
        b(_jacobian_term(x, y, z), t),
        s(-1, b(_jacobian_term(t, x, y), z)),
        b(_jacobian_term(z, t, x), y),
        s(-1, b(_jacobian_term(y, z, t), x)),
    )
    return Identity("four", 4, lhs, alternating=True)


def _bin_consequence():
    x, y = var(1), var(2)
    direct = minus(
        s(w(x, y), b(x, y)),
        minus(s(w(b(x, y), y), x), s(w(b(x, y), x), y)),
    )
    terms = []
    for xa, xb in ((1, 2), (2, 1)):
        for ya, yb in ((3, 4), (4, 3)):
            xx, xx2 = var(xa), var(xb)
            yy, yy2 = var(ya), var(yb)
            terms.append(
                minus(
                    s(w(xx, yy), b(xx2, yy2)),
                    minus(
                        s(w(b(xx, yy), yy2), xx2),
                        s(w(b(xx, yy), xx2), yy2),
                    ),
                )
            )
    return Identity(
        "bin-consequence", 4, plus(*terms), direct=direct, direct_num_vars=2
    )


def _four_consequence():
    return Identity(
        "four-consequence",
        3,
        _d_omega_term(var(1), var(2), var(3)),
        alternating=True,
    )


_BUILTIN_FACTORIES = {
    "jacobi-residual": _jacobi_residual,
    "two-basic": _two_basic,
    "degree5": _degree5,
    "engel": _engel,
    "abg": _abg,
    "bin": _bin,
    "four": _four,
    "bin-consequence": _bin_consequence,
    "four-consequence": _four_consequence,
}


def builtin_names():
    return sorted(_BUILTIN_FACTORIES)


def builtin(name, **params):
    try:
        factory = _BUILTIN_FACTORIES[name]
    except KeyError:
        raise UnknownIdentity(
            f"unknown identity {name!r}; known: {', '.join(builtin_names())}"
        ) from None
    return factory(**params)
