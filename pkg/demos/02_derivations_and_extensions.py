"""Derivation spaces and codimension-1 extensions.

A pair (D, alpha) with a covector lambda extends an n-dimensional
algebra to dimension n+1 via [x, v] = D(x) + lambda(x) v and
w(x, v) = alpha(x).  This walkthrough solves for all such data over the
3-dimensional catalog instance, builds the shipped 4-dimensional table,
and then unmasks it: every extension datum here is a shifted section of
the trivial one, so the result has a hidden 1-dimensional ideal.
"""

from fractions import Fraction as F

from olie import QQ, Subspace, al_derivation_space, extend_codim1
from olie import catalog
from olie.linalg import basis_vector

n3 = catalog.builtin_algebra("omega.n3")

# the covector is pinned by multiplicativity: w(x,y) = lambda([x,y])
lam_set = n3.multiplicative_lambda()
print("multiplicative covector:", [QQ.format(x) for x in lam_set.particular],
      "unique?", lam_set.is_unique)
lam = lam_set.particular

basis = al_derivation_space(n3, lam)
print("derivation space dimension:", len(basis))

# the datum that produces the shipped 4-dimensional table
D = [[0, 0, -1], [1, 0, 0], [0, 0, 0]]
alpha = [0, 2, 0]
ext = extend_codim1(n3, lam, D, alpha)
print("extension equals the catalog entry:", ext == catalog.builtin_algebra("omega.s4"))

# the same datum is the section shift by w = e3 of the trivial extension:
# D(x) = [x, w] - lambda(x) w and alpha = w(., w).  Hence the line
# through e3 - e4 is an ideal and the extension is a semidirect product
# in disguise.
w = basis_vector(QQ, 3, 2)
shifted = [
    [n3.bracket(basis_vector(QQ, 3, i), w)[j] - lam[i] * w[j] for j in range(3)]
    for i in range(3)
]
print("datum is the section shift:", shifted == [[F(c) for c in row] for row in D])

verdict = ext.simplicity()
print("simplicity:", verdict.kind, "witness:", verdict.witness)
line = Subspace(QQ, 4, [[F(0), F(0), F(1), F(-1)]])
print("quotient by the hidden line is 3-dimensional:",
      ext.quotient(line).dim == 3)

# extensions refuse inconsistent data
from olie.errors import NotADerivation

try:
    extend_codim1(n3, lam, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 0, 0])
except NotADerivation as exc:
    print("rejected bad datum:", exc)
