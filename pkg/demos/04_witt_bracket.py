"""The bivector generated by a quadric surface in R3.

Contracting the volume 3-vector with the differential of
F = x1*x3 - x2^2 yields a Poisson bivector whose coordinate brackets close
on a familiar three-dimensional Lie algebra.
Run with:  python3 demos/04_witt_bracket.py
"""

from nambu.bianchi import witt_embedding_check
from nambu.multivector import MultiVector
from nambu.poly import Poly

xs = Poly.variables(3)
f = xs[0] * xs[2] - xs[1] ** 2
volume = MultiVector.basis(3, (0, 1, 2))
biv = volume.contract(f)

print(f"generating quadric: F = {f}")
print(f"bivector: {biv}")
print(f"zero self Schouten bracket: {biv.schouten(biv).is_zero()}")
print(f"F is a Casimir: {biv.hamiltonian_field([f]).is_zero()}")

print("\ncoordinate brackets:")
ok, brackets = witt_embedding_check()
for name, value in brackets.items():
    print(f"  {name} = {value}")
print(f"all relations verified: {ok}")
