"""Following a curve through repeated blow-ups in a threefold.

Each blow-up along a curve in the newest exceptional divisor has two charts.
After recentering, chart A substitutes (x, y) -> (x, xy) and chart B
substitutes (x, y) -> (xy, y), so along any path the pulled-back maximal ideal
reduces to (x^h y^k, z).  The exponents grow like a Stern-Brocot tree and are
always coprime.
"""

import itertools

from lctforge import BlowupSequence, chart_term_ideal, compose_charts, prune_minimality
from lctforge import pushforward_lelong_verdict, reduce_symbolic
from lctforge.exact import render_rational

print("Three blow-ups, every chart path:")
for path in ("".join(p) for p in itertools.product("AB", repeat=3)):
    nf = compose_charts(path)
    print(f"  {path}: {nf.render():<12} lct {render_rational(nf.lct())}")

print("\nThe same answer from literal substitution, path BAA:")
term = chart_term_ideal("BAA")
print(f"  pulled back: {term.render()}")
print(f"  reduced mod z: {reduce_symbolic(term).render()}")

print("\nPruning a sequence to its minimal form:")
seq = BlowupSequence.parse("e2, a, e1, d, e2")
pruned, log = prune_minimality(seq)
for entry in log:
    print(f"  #{entry.position} {entry.action} ({entry.case})")
print(f"  kept: {', '.join(c.token for c in pruned.centers)}")

print("\nThe push-forward verdict for ten blow-ups:")
verdict = pushforward_lelong_verdict(BlowupSequence.parse(",".join(["e2"] * 10)))
nf = verdict.witness_normal_form
print(f"  worst path {verdict.witness_path} gives {nf.render()}, lct {render_rational(verdict.min_lct)} > 1")
print(f"  verdict: {verdict.verdict}")
