"""Algebraic Morse bounds, reported as the coefficient of k^n/n!.

On the blown-up plane take L = u = H and F = H + 2E.  The Zariski
decomposition of F gives <F> = H with multiplicity 2 along E, which feeds the
strong bound; the divisorial bound for L - F is its negative.
"""

from lctforge.exact import render_rational
from lctforge.morse import TrapaniDivisor, nef_case_bound, surface_morse_input, strong_morse_bound, trapani_s1_bound
from lctforge.zariski import blowup_of_plane

data = blowup_of_plane()
H = data.cls({"H": 1})
F = data.cls({"H": 1, "E": 2})
inp = surface_morse_input(H, F, data, H)
report = strong_morse_bound(inp)
print(f"strong bound, n = 2, s = 1: {render_rational(report.coefficient)}")
for label, value in report.parts:
    print(f"  {label:<16} {render_rational(value)}")

divisors = [TrapaniDivisor(c.nu, c.mixed_LuY) for c in inp.components]
trapani = trapani_s1_bound(2, inp.mixed_LF[0], inp.mixed_LF[1], divisors)
print(f"divisorial s = 1 bound for h^0(k(L - F)): {render_rational(trapani.coefficient)}")

print(f"nef case, L^2 = 4, L.F = 1: {render_rational(nef_case_bound(2, 1, [4, 1]).coefficient)}")
