"""Fit a property as a linear combination over the operator eigenvalue basis.

Uses first ionization energies (eV, NIST values) of the alkali column as the
worked example, then predicts the unmeasured Z=119.

Run: python3 demos/demo_fitting.py
"""

from fractions import Fraction

from mendeleev_city import (
    BasisFunction,
    ColumnId,
    FamilyScope,
    IntegrityBasis,
    PropertyDataset,
    fit,
    predict,
)

ionization = PropertyDataset(
    "first ionization energy",
    "eV",
    {1: 13.5984, 3: 5.3917, 11: 5.1391, 19: 4.3407, 37: 4.1771, 55: 3.8939, 87: 4.0727},
)

# Along a column only n varies, so use an identifiable sub-basis in n.
basis = IntegrityBasis((
    BasisFunction("1", lambda q: Fraction(1)),
    BasisFunction("n", lambda q: Fraction(q.n)),
    BasisFunction("n^2", lambda q: Fraction(q.n * q.n)),
))

alkali = FamilyScope(ColumnId(0, 1, -1))
model = fit(alkali, basis, ionization)

print("Coefficients:")
for name, coeff in zip(model.basis.names, model.coefficients):
    print(f"  {name:4s} {coeff:+.4f}")
print(f"rss = {model.rss:.4f} eV^2, max |residual| = {model.max_abs_residual:.4f} eV")

print("\nPer-element residuals:")
for z, residual in model.residuals:
    print(f"  Z={z:3d}: {residual:+.4f} eV")

print(f"\nPredicted ionization energy of Z=119: {predict(model, 119):.3f} eV")
