"""Tour of the classification of (n+1)-dimensional n-Lie algebras.

Every such algebra is encoded by a bilinear form; congruence normal forms
give a finite label set (unimodular ranks/signatures plus four families with
a skew part).  Run with:  python3 demos/02_classification_tour.py
"""

from fractions import Fraction

from nambu.bianchi import (algebra_from_form, classify, derivation_algebra,
                           generating_form, psi_label, synthesize,
                           unimodular_label)
from nambu.linalg import zeros
from nambu.nlie import vector_product_algebra


def banner(title):
    print(f"\n== {title} ==")


banner("The single-relation algebra [e1,e2,e3] = e4")
form = zeros(4, 4)
form[3][3] = Fraction(1)
atomic = algebra_from_form(form, 3)
print(f"label: {classify(atomic)}")
print(f"derivation algebra dimension: {len(derivation_algebra(atomic))}")

banner("Vector-product algebras")
for n in (2, 3):
    vp = vector_product_algebra(n)
    print(f"n = {n}: label {classify(vp)}, "
          f"derivations form so({n + 1}), dim {len(derivation_algebra(vp))}")

banner("Round trip: synthesize a label, recover it")
labels = [unimodular_label(3, 2),
          psi_label("psi_plus", Fraction(7, 3)),
          psi_label("psi_minus", Fraction(1, 2)),
          psi_label("psi_one"),
          psi_label("psi_zero")]
for label in labels:
    p = synthesize(label, 3)
    print(f"{str(label):30s} -> classify: {classify(p)}")

banner("The generating form is recovered from the structure constants")
p = synthesize(psi_label("psi_plus", Fraction(2)), 3)
for row in generating_form(p):
    print("  " + "  ".join(f"{str(x):>5s}" for x in row))
