"""Tour of the exact Nambu-Poisson verifier.

Builds a few 3-vector fields on small coordinate charts, checks the
fundamental identity, inspects decomposability and ranks, and computes
polynomial Casimirs.  Run with:  python3 demos/01_poisson_basics.py
"""

from nambu.multivector import MultiVector, derived_rank, is_decomposable
from nambu.npoisson import casimir_polynomials, fi_defect, is_n_poisson
from nambu.poly import Poly


def banner(title):
    print(f"\n== {title} ==")


def report(name, v):
    ok, witness = is_n_poisson(v)
    print(f"{name}:")
    print(f"  fundamental identity: {'holds' if ok else 'fails'}")
    if witness is not None:
        print(f"  witness arguments: {[str(w) for w in witness]}")
        print(f"  defect there: {fi_defect(v, list(witness))}")
    print(f"  decomposable: {is_decomposable(v)}")
    print(f"  rank at origin: {derived_rank(v, [0] * v.num_vars)}")


banner("A constant blade is always a Nambu-Poisson tensor")
report("d1^d2^d3 on R4", MultiVector.basis(4, (0, 1, 2)))

banner("Scaling a blade by a coordinate keeps the identity")
x4 = Poly.var(4, 3)
report("x4 * d1^d2^d3", MultiVector.basis(4, (0, 1, 2), x4))

banner("A sum of two disjoint blades is NOT Nambu-Poisson")
blades = MultiVector.basis(6, (0, 1, 2)) + MultiVector.basis(6, (3, 4, 5))
report("d1^d2^d3 + d4^d5^d6", blades)

banner("Casimirs: polynomials annihilated by every Hamiltonian field")
v = MultiVector.basis(4, (0, 1, 2), x4)
cs = casimir_polynomials(v, 1)
print(f"degree-1 Casimir basis of x4 * d1^d2^d3: {[str(c) for c in cs]}")

banner("The rotation bivector and its quadratic Casimir")
xs = Poly.variables(3)
so3 = MultiVector(3, 2, {(0, 1): xs[2], (0, 2): -xs[1], (1, 2): xs[0]})
print(f"self Schouten bracket vanishes: {so3.schouten(so3).is_zero()}")
for c in casimir_polynomials(so3, 2):
    print(f"  Casimir: {c}")
