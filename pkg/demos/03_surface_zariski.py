"""Zariski decomposition on the plane blown up at a point, and on a surface
carrying two (-2)-curves that meet once."""

from fractions import Fraction

from lctforge import SurfaceData, nef_criterion, positive_product, verify_q1_decomposition, zariski_decompose
from lctforge.exact import render_rational
from lctforge.intersection import ClassBasis, DivisorClass, IntersectionForm
from lctforge.zariski import blowup_of_plane

data = blowup_of_plane()
D = data.cls({"H": 1, "E": 2})
dec = zariski_decompose(D, data)
print(f"D = {D.render()}")
print(f"  P = {dec.P.render()}, N = {dec.negative_part(data).render()}")
print(f"  D^2 = {render_rational(data.dot(D, D))}, <D^2> = {render_rational(positive_product(D, D, data))}")
print(f"  nef? {nef_criterion(D, data)}; H - E nef? {nef_criterion(data.cls({'H': 1, 'E': -1}), data)}")
report = verify_q1_decomposition(D, data)
print(f"  D = <D> + sum nu(D, C) C holds: {report.identity_holds}")

basis = ClassBasis(("H", "C1", "C2"), 2)
form = IntersectionForm.from_names(basis, {"H,H": 1, "C1,C1": -2, "C2,C2": -2, "C1,C2": 1})
two = SurfaceData(form, tuple(DivisorClass.basis_element(basis, n) for n in ("C1", "C2")), ("C1", "C2"))
D = two.cls({"H": 1, "C1": Fraction(2, 3), "C2": Fraction(1, 3)})
dec = zariski_decompose(D, two)
print(f"\nD = {D.render()}  (D.C1 = -1, D.C2 = 0)")
print("  first pass uses C1 only and leaves P.C2 = -1/2, so the support grows")
print(f"  after {dec.iterations} passes: N = {dec.negative_part(two).render()}, P = {dec.P.render()}")
