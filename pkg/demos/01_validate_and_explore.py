"""Build a table, certify the defining law, and read off basic structure.

The running example is the 3-dimensional algebra with brackets
[e1,e2] = e2, [e1,e3] = e3, [e2,e3] = e1.  Its Jacobian is not zero, so
it is not a Lie algebra, but a unique skew form repairs the law.
"""

from olie import AnticommAlgebra, OmegaAlgebra, QQ, Violation
from olie import catalog

# a bracket-only skeleton: which forms make the law hold?
skeleton = AnticommAlgebra(
    QQ, 3, bracket={(0, 1): {1: 1}, (0, 2): {2: 1}, (1, 2): {0: 1}}
)
solutions = skeleton.omega_space()
print("form solution set: unique?", solutions.is_unique)
w = solutions.particular
print("forced form entries w[i][j]:")
for i in range(3):
    print("  ", [QQ.format(w[i * 3 + j]) for j in range(3)])

# attach the form and certify
alg = OmegaAlgebra(QQ, 3, skeleton._bracket, {(1, 2): w[1 * 3 + 2]})
print("certified:", alg)

# a wrong form is caught with the exact failing triple and residual
bad = AnticommAlgebra(QQ, 3, skeleton._bracket, {(1, 2): 1})
violation = bad.validate()
assert isinstance(violation, Violation)
print("corrupted table fails at triple", violation.triple, "residual",
      [QQ.format(x) for x in violation.residual])

# structural invariants
print("radical of the form:", alg.omega_kernel())
print("rank of the form:", alg.omega_rank())
print("commutant dimension:", alg.commutant().dim)
print("is Lie?", alg.is_lie(), "| simplicity:", alg.simplicity().kind)

# the same instance ships in the catalog, and serializes canonically
assert alg == catalog.builtin_algebra("omega.n3")
print(catalog.dumps(alg))
