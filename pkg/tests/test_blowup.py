import itertools
import random
from fractions import Fraction
from math import gcd

import pytest

from lctforge.blowup import (
    BlowupSequence,
    CenterSpec,
    NormalFormIdeal,
    SeriesPoly,
    SeriesSymbol,
    TermIdeal,
    as_path,
    chart_term_ideal,
    compose_charts,
    enumerate_paths,
    iter_normal_forms,
    normal_form_multiset,
    prune_minimality,
    pushforward_lelong_verdict,
    reduce_symbolic,
)
from lctforge.errors import InputError, ReductionStuck
from lctforge.newton import lct

X = SeriesPoly.monomial(a=1)
Y = SeriesPoly.monomial(b=1)
Z = SeriesPoly.monomial(c=1)


def all_paths(s):
    return ["".join(p) for p in itertools.product("AB", repeat=s)]


def test_center_spec_validation():
    with pytest.raises(InputError):
        CenterSpec("curve", "a")
    with pytest.raises(InputError):
        CenterSpec("point", "e", "latest")
    with pytest.raises(InputError):
        CenterSpec("curve", "e")
    with pytest.raises(InputError):
        CenterSpec("curve", "c", "latest")
    assert CenterSpec("curve", "e", "in_latest_exceptional").token == "e2"


def test_sequence_json_round_trip():
    seq = BlowupSequence.parse("e2, a, e1, d")
    assert BlowupSequence.from_json(seq.to_json()) == seq


def test_prune_examples():
    pruned, log = prune_minimality(BlowupSequence.parse("e2,a,e2"))
    assert pruned == BlowupSequence.parse("e2,e2")
    assert [(e.position, e.action, e.case) for e in log] == [(1, "delete", "J=a")]
    same = BlowupSequence.parse("e2,e2,e2")
    assert prune_minimality(same) == (same, ())
    pruned, log = prune_minimality(BlowupSequence.parse("d"))
    assert len(pruned) == 0 and log[0].case == "J=d"
    pruned, log = prune_minimality(BlowupSequence.parse("e1"))
    assert pruned == BlowupSequence.parse("e2") and log[0].action == "rewrite"


def test_compose_examples():
    assert compose_charts("A") == NormalFormIdeal(1, 0)
    assert compose_charts("BAA") == NormalFormIdeal(2, 1)
    assert compose_charts("BAB") == NormalFormIdeal(1, 2)
    assert compose_charts("AAA") == NormalFormIdeal(1, 0)
    assert compose_charts("ABB") == NormalFormIdeal(1, 2)
    assert compose_charts("BAA") == compose_charts("ABA")
    assert compose_charts("AB") == NormalFormIdeal(1, 1)


def test_s3_table_holds_the_four_normal_forms():
    forms = {(r.normal_form.h, r.normal_form.k) for r in enumerate_paths(3).values()}
    assert {(1, 0), (1, 1), (2, 1), (1, 2)} <= forms


def test_enumerate_small():
    recs = enumerate_paths(2)
    assert {p: (r.normal_form.h, r.normal_form.k) for p, r in recs.items()} == {
        "AA": (1, 0), "AB": (1, 1), "BA": (1, 1), "BB": (0, 1)}
    one = enumerate_paths(1)
    assert len(one) == 2 and all(r.lct == 2 for r in one.values())


def test_enumerate_respects_bound(monkeypatch):
    with pytest.raises(InputError):
        enumerate_paths(4, bound=3)
    monkeypatch.setenv("LCTFORGE_PATH_BOUND", "2")
    with pytest.raises(InputError):
        enumerate_paths(3)


def test_reduce_symbolic_examples():
    F1 = SeriesPoly.symbol("F1")
    G2 = SeriesPoly.symbol("G2")
    generic = TermIdeal((X, X * (X * Y + F1), Z), (SeriesSymbol("F1", False),))
    assert reduce_symbolic(generic) == NormalFormIdeal(1, 0)
    x2y = X * Y * (X + G2)
    for f_vanishes in (False, True):
        t = TermIdeal((x2y, x2y * (X * Y + F1), Z),
                      (SeriesSymbol("F1", f_vanishes), SeriesSymbol("G2", True)))
        assert reduce_symbolic(t) == NormalFormIdeal(2, 1)
    assert reduce_symbolic(TermIdeal((Z, X))) == NormalFormIdeal(1, 0)


def test_reduce_symbolic_failures_carry_the_term():
    with pytest.raises(ReductionStuck) as info:
        reduce_symbolic(TermIdeal((X + Y, Z)))
    assert "term" in info.value.certificate
    with pytest.raises(ReductionStuck):
        reduce_symbolic(TermIdeal((X, Y)))
    with pytest.raises(ReductionStuck):
        reduce_symbolic(TermIdeal((X, SeriesPoly.symbol("Q"), Z)))


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
def test_symbolic_oracle_matches_recurrence(s):
    for p in all_paths(s):
        assert reduce_symbolic(chart_term_ideal(p)) == compose_charts(p), p


def test_generic_recentering_never_exceeds_recurrence():
    for s in range(1, 6):
        for p in all_paths(s):
            generic = reduce_symbolic(chart_term_ideal(p, generic_f=True))
            assert generic.lct() >= compose_charts(p).lct()


def test_coprime_and_threshold_gap_up_to_14():
    for s in range(1, 15):
        for p, (h, k) in iter_normal_forms(s):
            assert gcd(h, k) == 1 and max(h, k) >= 1
            value = NormalFormIdeal(h, k).lct()
            assert value == 1 + Fraction(1, max(h, k)) > 1


def test_enumeration_agrees_with_recurrence():
    recs = enumerate_paths(6)
    assert len(recs) == 64
    for p, rec in recs.items():
        assert rec.normal_form == compose_charts(p)
        assert rec.lct == lct(rec.normal_form.ideal()).lct


def test_monotone_growth():
    for p in all_paths(8):
        prev = compose_charts(p[0])
        for i in range(2, len(p) + 1):
            cur = compose_charts(p[:i])
            assert max(cur.h, cur.k) >= max(prev.h, prev.k)
            other = prev.k if p[i - 1] == "A" else prev.h
            assert (cur.h + cur.k > prev.h + prev.k) == (other > 0)
            prev = cur


def test_swap_symmetry():
    swap = str.maketrans("AB", "BA")
    for p in all_paths(7):
        assert compose_charts(p.translate(swap)) == compose_charts(p).swapped()


def test_pruning_soundness():
    rng = random.Random(5)
    for _ in range(200):
        tokens = [rng.choice(["a", "b", "c", "d", "e1", "e2"]) for _ in range(rng.randint(1, 8))]
        pruned, log = prune_minimality(BlowupSequence.parse(",".join(tokens)))
        e_count = sum(t.startswith("e") for t in tokens)
        assert len(pruned) == e_count
        assert all(c.token == "e2" for c in pruned.centers)
        deleted = {e.position for e in log if e.action == "delete"}
        assert deleted == {i for i, t in enumerate(tokens) if not t.startswith("e")}
        if e_count:
            assert normal_form_multiset(len(pruned)) == normal_form_multiset(e_count)


def test_verdict_examples():
    v = pushforward_lelong_verdict(BlowupSequence.parse("e2"))
    assert v.verdict == "vanishes" and v.min_lct == 2
    v = pushforward_lelong_verdict(BlowupSequence.parse("a,b,c"))
    assert v.verdict == "trivial_by_remark" and v.min_lct is None
    v = pushforward_lelong_verdict(BlowupSequence.parse(",".join(["e2"] * 10)))
    largest = max(max(h, k) for _, (h, k) in iter_normal_forms(10))
    assert largest == 55
    assert v.verdict == "vanishes" and v.min_lct == 1 + Fraction(1, largest)
    assert max(v.witness_normal_form.h, v.witness_normal_form.k) == 55
    assert v.to_json()["certificate"]["exceeds_one"] is True


def test_alternating_path_maximises_exponent():
    for s in range(1, 12):
        alternating = "".join("AB"[i % 2] for i in range(s))
        nf = compose_charts(alternating)
        assert max(nf.h, nf.k) == max(max(h, k) for _, (h, k) in iter_normal_forms(s))


def test_as_path_rejects_garbage():
    with pytest.raises(InputError):
        as_path("AC")
