"""Log-canonical thresholds of monomial ideals, read off the Newton polyhedron.

The threshold of a monomial ideal is 1/m, where m.(1,...,1) is the point where
the diagonal leaves the Newton polyhedron.  Howald's description of multiplier
ideals says x^l belongs to J(r.I) exactly when l + 1 sits in the interior of
r times that polyhedron.
"""

from fractions import Fraction

from lctforge import MonomialIdeal, direct_sum, lct, multiplier_ideal_monomials
from lctforge.exact import render_rational
from lctforge.newton import lct_by_bisection, normal_form_ideal, sum_reading_normal_form_lct


def show(literal, dim=None):
    ideal = MonomialIdeal.parse(literal, dim)
    report = lct(ideal)
    print(f"  lct({ideal.render():<22}) = {render_rational(report.lct):<5}"
          f" diagonal point m = {render_rational(report.diagonal_parameter)}")


print("Maximal ideals and powers:")
for literal, dim in (("x, y", None), ("x, y, z", None), ("x^3", 1), ("x^2, y^3", None)):
    show(literal, dim)

print("\nAdditivity under direct sums: (x^2) + (y^3) on the product space")
a, b = MonomialIdeal.parse("x^2", 1), MonomialIdeal.parse("x^3", 1)
total = direct_sum(a, b)
print(f"  {render_rational(lct(a).lct)} + {render_rational(lct(b).lct)} = {render_rational(lct(total).lct)}")

print("\nThe multiplier ideal J(r . (x^2, y^2)) shrinks as r grows:")
ideal = MonomialIdeal.parse("x^2, y^2")
for r in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
    gens = MonomialIdeal(2, tuple(multiplier_ideal_monomials(ideal, r, 4)))
    print(f"  r = {render_rational(r):<4} J = {gens.render()}")

print("\nAn independent bracket by bisection on r for (x^3 y, y^2 z, x z^3):")
ideal = MonomialIdeal.parse("x^3*y, y^2*z, x*z^3")
lo, hi = lct_by_bisection(ideal)
print(f"  exact {render_rational(lct(ideal).lct)}, bracket [{float(lo):.8f}, {float(hi):.8f}]")

print("\nThe local models (x^h y^k, z) that appear after blowing up:")
for h, k in ((1, 0), (1, 1), (2, 1), (3, 2)):
    asserted = sum_reading_normal_form_lct(h, k)
    print(f"  (h,k) = ({h},{k}): Howald value {render_rational(lct(normal_form_ideal(h, k)).lct):<4}"
          f" reading x^h y^k as (x^h, y^k) gives "
          f"{'undefined' if asserted is None else render_rational(asserted)}")
print("  Both readings stay above 1, which is all the vanishing argument needs.")
