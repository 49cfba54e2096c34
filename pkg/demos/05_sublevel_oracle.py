"""A numeric look at the threshold from its definition.

The volume of {log(|x^h y^k| + |z|) < log r} in the unit polydisc behaves like
r^(2c).  Fitting log V against log r recovers 2c up to logarithmic
corrections, which separates the Howald value 1 + 1/max(h,k) from the value
(h+k)/(hk) + 1 obtained by reading x^h y^k as the ideal (x^h, y^k).
"""

from lctforge.exact import render_rational
from lctforge.newton import lct, normal_form_ideal, sum_reading_normal_form_lct
from lctforge.sublevel import sublevel_volume_oracle

for h, k in ((1, 1), (2, 1)):
    ideal = normal_form_ideal(h, k)
    fit = sublevel_volume_oracle(ideal)
    print(f"(x^{h} y^{k}, z):")
    for r, v, _ in fit.rows:
        print(f"  r = {render_rational(r):<7} V = {v:.4e}")
    print(f"  slope {fit.slope:.3f}; Howald predicts {2 * float(lct(ideal).lct):g}, "
          f"the sum-ideal reading predicts {2 * float(sum_reading_normal_form_lct(h, k)):g}\n")
