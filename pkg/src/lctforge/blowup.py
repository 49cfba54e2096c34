"""Blow-up chart calculus over a curve in a threefold.

Local model: coordinates ``(x, y, z)`` with the first center
``Z0 = {x = y = 0}``.  Every later center is a curve lying in the newest
exceptional divisor and surjecting onto the previous center.  After the
recentering ``y -> y - F(z)`` (chart A, exceptional divisor ``{x = 0}``) or
``x -> x - G(z)`` (chart B, exceptional divisor ``{y = 0}``) the next blow-up
has the two monomial charts

    A: (U, V) = (x', x'y')        B: (U, V) = (x'y', y')

Pulling back the maximal ideal ``(x0, y0, z0)`` along a chart path gives,
modulo ``z``, the normal form ``(x^h y^k, z)`` with the Euclid-type recurrence
``A: (h, k) -> (h + k, k)`` and ``B: (h, k) -> (h, h + k)``.

Two independent routes compute it: :func:`compose_charts` runs the recurrence
and :func:`reduce_symbolic` reduces the literally substituted generators.
"""

import enum
import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import InputError, ReductionStuck
from .newton import lct, normal_form_ideal, sum_reading_normal_form_lct

DEFAULT_PATH_BOUND = 20
PATH_BOUND_ENV = "LCTFORGE_PATH_BOUND"


def path_bound() -> int:
    raw = os.environ.get(PATH_BOUND_ENV)
    if raw is None:
        return DEFAULT_PATH_BOUND
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"{PATH_BOUND_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise InputError(f"{PATH_BOUND_ENV} must be positive")
    return value


# ---------------------------------------------------------------------------
# Centers and sequences
# ---------------------------------------------------------------------------

class Condition(str, enum.Enum):
    """Position of a center relative to the exceptional locus so far."""

    A = "a"  # point inside Exc
    B = "b"  # point outside Exc
    C = "c"  # curve disjoint from Exc
    D = "d"  # curve meeting Exc in finitely many points
    E = "e"  # curve entirely inside Exc


class ESubcase(str, enum.Enum):
    OLDER = "older"    # inside an earlier exceptional divisor, not the latest
    LATEST = "latest"  # inside the latest exceptional divisor


_POINT_CONDITIONS = {Condition.A, Condition.B}


@dataclass(frozen=True)
class CenterSpec:
    kind: str  # "point" | "curve"
    condition: Condition
    subcase: Optional[ESubcase] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "condition", Condition(self.condition))
        except ValueError as exc:
            raise InputError(f"unknown center condition {self.condition!r}") from exc
        if self.kind not in ("point", "curve"):
            raise InputError(f"center kind must be 'point' or 'curve', got {self.kind!r}")
        expected = "point" if self.condition in _POINT_CONDITIONS else "curve"
        if self.kind != expected:
            raise InputError(f"condition {self.condition.value} requires a {expected} center")
        if self.condition is Condition.E:
            if self.subcase is None:
                raise InputError("condition e needs a subcase ('older' or 'latest')")
            try:
                object.__setattr__(self, "subcase", ESubcase(_SUBCASE_ALIASES.get(self.subcase, self.subcase)))
            except ValueError as exc:
                raise InputError(f"unknown e-subcase {self.subcase!r}") from exc
        elif self.subcase is not None:
            raise InputError("only condition e carries a subcase")

    @classmethod
    def parse(cls, token: str) -> "CenterSpec":
        """Short form: ``a``..``d``, ``e2``/``e`` (latest) or ``e1`` (older)."""
        token = token.strip().lower()
        if token in ("e", "e2"):
            return cls("curve", Condition.E, ESubcase.LATEST)
        if token == "e1":
            return cls("curve", Condition.E, ESubcase.OLDER)
        if token in ("a", "b"):
            return cls("point", Condition(token))
        if token in ("c", "d"):
            return cls("curve", Condition(token))
        raise InputError(f"unknown center token {token!r}")

    @property
    def token(self) -> str:
        if self.condition is Condition.E:
            return "e2" if self.subcase is ESubcase.LATEST else "e1"
        return self.condition.value

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "condition": self.condition.value}
        if self.subcase is not None:
            doc["subcase"] = self.subcase.value
        return doc

    @classmethod
    def from_json(cls, doc: Mapping) -> "CenterSpec":
        try:
            return cls(doc["kind"], doc["condition"], doc.get("subcase"))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad center document {doc!r}") from exc


_SUBCASE_ALIASES = {
    "in_latest_exceptional": "latest",
    "in_older_exceptional": "older",
    "2": "latest",
    "1": "older",
}


@dataclass(frozen=True)
class BlowupSequence:
    centers: Tuple[CenterSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "centers", tuple(self.centers))

    @classmethod
    def parse(cls, text: str) -> "BlowupSequence":
        """``"e2, a, e2"`` -> three centers."""
        return cls(tuple(CenterSpec.parse(t) for t in text.split(",") if t.strip()))

    def __len__(self):
        return len(self.centers)

    def to_json(self) -> dict:
        return {"centers": [c.to_json() for c in self.centers]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "BlowupSequence":
        try:
            centers = doc["centers"]
        except (KeyError, TypeError) as exc:
            raise InputError("sequence document needs a 'centers' list") from exc
        seq = cls(tuple(CenterSpec.from_json(c) for c in centers))
        if not seq.centers:
            raise InputError("a blow-up sequence needs at least one center")
        return seq


@dataclass(frozen=True)
class RewriteEntry:
    position: int  # index in the input sequence
    action: str    # "delete" | "rewrite"
    case: str
    reason: str


_DELETE_REASONS = {
    Condition.A: "point center inside the exceptional locus: the next blow-up is an "
                 "isomorphism over every other point of Z0, so the path is not minimal",
    Condition.B: "point center outside the exceptional locus: isomorphism over all of Z0",
    Condition.C: "curve center disjoint from the exceptional locus: isomorphism near Z0",
    Condition.D: "curve center meeting the exceptional locus in finitely many points: "
                 "isomorphism over all but finitely many points of Z0",
}


def prune_minimality(seq: BlowupSequence) -> Tuple[BlowupSequence, Tuple[RewriteEntry, ...]]:
    """Reduce a sequence to its minimal form, left to right.

    Centers of type a-d are deleted (they do not change the generic Lelong
    number along Z0).  A type-e center lying in an older exceptional divisor is
    rewritten as a blow-up in the latest one, which gives the same chart
    expressions.  Returns the pruned sequence and the rewrite log.
    """
    kept: List[CenterSpec] = []
    log: List[RewriteEntry] = []
    for i, center in enumerate(seq.centers):
        if center.condition is not Condition.E:
            log.append(RewriteEntry(i, "delete", f"J={center.condition.value}",
                                    _DELETE_REASONS[center.condition]))
            continue
        if center.subcase is ESubcase.OLDER:
            log.append(RewriteEntry(
                i, "rewrite", "e1",
                "center inside an older exceptional divisor: blowing it up on the earlier "
                "model is equivalent, so it is replaced by a center in the latest divisor",
            ))
            kept.append(CenterSpec("curve", Condition.E, ESubcase.LATEST))
        else:
            kept.append(center)
    return BlowupSequence(tuple(kept)), tuple(log)


# ---------------------------------------------------------------------------
# Chart paths and the normal form
# ---------------------------------------------------------------------------

class Chart(str, enum.Enum):
    A = "A"  # (x, xy, z)
    B = "B"  # (xy, y, z)


def as_path(path: Union[str, Iterable]) -> Tuple[Chart, ...]:
    try:
        charts = tuple(Chart(c.value if isinstance(c, Chart) else str(c).upper()) for c in path)
    except ValueError as exc:
        raise InputError(f"chart path must consist of A and B, got {path!r}") from exc
    if not charts:
        raise InputError("empty chart path")
    return charts


def path_string(path: Sequence[Chart]) -> str:
    return "".join(c.value for c in path)


@dataclass(frozen=True)
class NormalFormIdeal:
    """``(x^h y^k, z)`` with ``max(h, k) >= 1``."""

    h: int
    k: int

    def __post_init__(self):
        if self.h < 0 or self.k < 0 or max(self.h, self.k) < 1:
            raise InputError(f"normal form needs h, k >= 0 and max(h, k) > 0, got {(self.h, self.k)}")

    def ideal(self):
        return normal_form_ideal(self.h, self.k)

    def lct(self) -> Fraction:
        return lct(self.ideal()).lct

    def sum_reading_lct(self) -> Optional[Fraction]:
        return sum_reading_normal_form_lct(self.h, self.k)

    def swapped(self) -> "NormalFormIdeal":
        return NormalFormIdeal(self.k, self.h)

    def render(self) -> str:
        def power(var, e):
            return "" if e == 0 else var if e == 1 else f"{var}^{e}"
        mono = "*".join(p for p in (power("x", self.h), power("y", self.k)) if p)
        return f"({mono}, z)"


def compose_charts(path: Union[str, Sequence[Chart]]) -> NormalFormIdeal:
    """Normal form after following ``path`` (one chart per retained blow-up)."""
    charts = as_path(path)
    h, k = (1, 0) if charts[0] is Chart.A else (0, 1)
    for chart in charts[1:]:
        if chart is Chart.A:
            h = h + k
        else:
            k = h + k
    return NormalFormIdeal(h, k)


# ---------------------------------------------------------------------------
# Symbolic substitution and reduction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesSymbol:
    """A holomorphic function of ``z`` known only through whether it vanishes at 0."""

    name: str
    vanishes_at_origin: bool


# A term is keyed by (a, b, c, symbols) meaning x^a y^b z^c * prod(symbols);
# ``symbols`` is a sorted tuple of names (repetition = powers).
TermKey = Tuple[int, int, int, Tuple[str, ...]]


class SeriesPoly:
    """Polynomial in x, y, z whose coefficients are products of series symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[TermKey, int]] = None):
        self.terms: Dict[TermKey, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, a=0, b=0, c=0, symbols=(), coeff=1) -> "SeriesPoly":
        return cls({(a, b, c, tuple(sorted(symbols))): coeff})

    @classmethod
    def symbol(cls, name: str) -> "SeriesPoly":
        return cls.monomial(symbols=(name,))

    def __add__(self, other: "SeriesPoly") -> "SeriesPoly":
        out = dict(self.terms)
        for key, v in other.terms.items():
            out[key] = out.get(key, 0) + v
        return SeriesPoly(out)

    def __mul__(self, other: "SeriesPoly") -> "SeriesPoly":
        out: Dict[TermKey, int] = {}
        for (a1, b1, c1, s1), v1 in self.terms.items():
            for (a2, b2, c2, s2), v2 in other.terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2, tuple(sorted(s1 + s2)))
                out[key] = out.get(key, 0) + v1 * v2
        return SeriesPoly(out)

    def __pow__(self, e: int) -> "SeriesPoly":
        result = SeriesPoly.monomial()
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        return isinstance(other, SeriesPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute_xy(self, x: "SeriesPoly", y: "SeriesPoly") -> "SeriesPoly":
        out = SeriesPoly()
        for (a, b, c, syms), v in self.terms.items():
            out = out + (x ** a) * (y ** b) * SeriesPoly.monomial(c=c, symbols=syms, coeff=v)
        return out

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c, syms), v in sorted(self.terms.items()):
            factors = [v_ if e == 1 else f"{v_}^{e}" for v_, e in (("x", a), ("y", b), ("z", c)) if e]
            factors += [f"{s}(z)" for s in syms]
            body = "*".join(factors) or "1"
            parts.append(body if v == 1 else f"{v}*{body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SeriesPoly({self.render()})"


@dataclass(frozen=True)
class TermIdeal:
    generators: Tuple[SeriesPoly, ...]
    symbols: Tuple[SeriesSymbol, ...] = field(default=())

    def symbol_table(self) -> Dict[str, SeriesSymbol]:
        return {s.name: s for s in self.symbols}

    def render(self) -> str:
        return "(" + ", ".join(g.render() for g in self.generators) + ")"


_X = SeriesPoly.monomial(a=1)
_Y = SeriesPoly.monomial(b=1)
_Z = SeriesPoly.monomial(c=1)
_XY = SeriesPoly.monomial(a=1, b=1)


def chart_term_ideal(path: Union[str, Sequence[Chart]], generic_f: bool = False) -> TermIdeal:
    """Pull the maximal ideal ``(x0, y0, z0)`` back along ``path`` literally.

    Step ``i + 1`` recenters the previous chart's coordinates at the next
    center: ``y_i = V + F_i(z)`` after chart A, ``x_i = U + G_i(z)`` after
    chart B, then substitutes the monomial chart for ``(U, V)``.

    All recentering functions vanish at the origin by default: the centers
    pass through the corner of the exceptional divisors, which is the
    configuration the normal-form recurrence describes.  ``generic_f=True``
    instead treats every ``F_i`` as nonvanishing (the centers avoid the older
    divisor at the point examined); the reduction then yields exponents that
    are never larger than the recurrence's.
    """
    charts = as_path(path)
    if charts[0] is Chart.A:
        x_pull, y_pull = _X, _XY
    else:
        x_pull, y_pull = _XY, _Y
    symbols: List[SeriesSymbol] = []
    for i, (prev, chart) in enumerate(zip(charts, charts[1:]), start=1):
        u, v = (_X, _XY) if chart is Chart.A else (_XY, _Y)
        if prev is Chart.A:
            name = f"F{i}"
            symbols.append(SeriesSymbol(name, vanishes_at_origin=not generic_f))
            new_x, new_y = u, v + SeriesPoly.symbol(name)
        else:
            name = f"G{i}"
            symbols.append(SeriesSymbol(name, vanishes_at_origin=True))
            new_x, new_y = u + SeriesPoly.symbol(name), v
        x_pull = x_pull.substitute_xy(new_x, new_y)
        y_pull = y_pull.substitute_xy(new_x, new_y)
    return TermIdeal((x_pull, y_pull, _Z), tuple(symbols))


def _mod_z(poly: SeriesPoly, table: Mapping[str, SeriesSymbol]) -> Dict[Tuple[int, int, Tuple[str, ...]], int]:
    """Reduce modulo ``z``: drop z-divisible terms and terms carrying a symbol
    that vanishes at 0 (such a symbol is ``z`` times a series)."""
    out: Dict[Tuple[int, int, Tuple[str, ...]], int] = {}
    for (a, b, c, syms), v in poly.terms.items():
        if c > 0:
            continue
        try:
            if any(table[s].vanishes_at_origin for s in syms):
                continue
        except KeyError as exc:
            raise ReductionStuck(f"undeclared series symbol {exc.args[0]}",
                                 {"term": poly.render()}) from None
        key = (a, b, syms)
        out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v}


def reduce_symbolic(term_ideal: TermIdeal) -> NormalFormIdeal:
    """Reduce a substituted chart ideal to ``(x^h y^k, z)``.

    Rules: modulo ``z`` a vanishing symbol disappears and a nonvanishing one
    is a nonzero constant; each remaining generator must be a monomial times a
    unit of the local ring; generators divisible by another are dropped.
    Raises :class:`ReductionStuck` with the offending term otherwise.
    """
    table = term_ideal.symbol_table()
    if not any(g == _Z for g in term_ideal.generators):
        raise ReductionStuck("generator z missing; cannot reduce modulo z",
                             {"ideal": term_ideal.render()})
    monomials = []
    for g in term_ideal.generators:
        if g == _Z:
            continue
        reduced = _mod_z(g, table)
        if not reduced:
            continue  # g lies in (z)
        a = min(k[0] for k in reduced)
        b = min(k[1] for k in reduced)
        # the cofactor g / x^a y^b is a unit iff it has a nonzero constant term;
        # distinct symbol products are independent generic constants
        if not any(k[0] == a and k[1] == b for k in reduced):
            raise ReductionStuck("generator is not a monomial times a unit modulo z",
                                 {"term": g.render(), "ideal": term_ideal.render()})
        monomials.append((a, b))
    minimal = {m for m in monomials
               if not any(o != m and o[0] <= m[0] and o[1] <= m[1] for o in monomials)}
    if len(minimal) != 1:
        raise ReductionStuck("no single monomial generator survives modulo z",
                             {"ideal": term_ideal.render(), "monomials": sorted(minimal)})
    (h, k), = minimal
    if max(h, k) < 1:
        raise ReductionStuck("reduction reached the unit ideal", {"ideal": term_ideal.render()})
    return NormalFormIdeal(h, k)


# ---------------------------------------------------------------------------
# Enumeration and the Lelong verdict
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PathRecord:
    path: str
    normal_form: NormalFormIdeal
    lct: Fraction

    def to_json(self) -> dict:
        from .exact import render_rational
        alt = self.normal_form.sum_reading_lct()
        return {
            "path": self.path,
            "h": self.normal_form.h,
            "k": self.normal_form.k,
            "lct": render_rational(self.lct),
            "sum_reading_lct": None if alt is None else render_rational(alt),
        }


def _check_depth(s: int, bound: Optional[int]) -> None:
    bound = path_bound() if bound is None else bound
    if not isinstance(s, int) or s < 1:
        raise InputError(f"number of blow-ups must be a positive integer, got {s!r}")
    if s > bound:
        raise InputError(f"s = {s} exceeds the path bound {bound} (set {PATH_BOUND_ENV} to raise it)")


def iter_normal_forms(s: int):
    """Yield ``(path, (h, k))`` for all ``2^s`` paths in lexicographic order."""
    if s == 1:
        yield "A", (1, 0)
        yield "B", (0, 1)
        return
    for prefix, (h, k) in iter_normal_forms(s - 1):
        yield prefix + "A", (h + k, k)
        yield prefix + "B", (h, h + k)


def enumerate_paths(s: int, bound: Optional[int] = None) -> Dict[str, PathRecord]:
    """All ``2^s`` chart paths with their normal forms and thresholds."""
    _check_depth(s, bound)
    records = {}
    for path, (h, k) in iter_normal_forms(s):
        nf = NormalFormIdeal(h, k)
        records[path] = PathRecord(path, nf, nf.lct())
    return records


@dataclass(frozen=True)
class LelongVerdict:
    verdict: str  # "vanishes" | "trivial_by_remark"
    pruned: BlowupSequence
    log: Tuple[RewriteEntry, ...]
    min_lct: Optional[Fraction] = None
    witness_path: Optional[str] = None
    witness_normal_form: Optional[NormalFormIdeal] = None

    def to_json(self) -> dict:
        from .exact import render_rational
        doc = {
            "verdict": self.verdict,
            "retained_blowups": len(self.pruned),
            "log": [vars(e) for e in self.log],
        }
        if self.min_lct is not None:
            doc["certificate"] = {
                "min_lct": render_rational(self.min_lct),
                "witness_path": self.witness_path,
                "h": self.witness_normal_form.h,
                "k": self.witness_normal_form.k,
                "exceeds_one": self.min_lct > 1,
            }
        return doc


def pushforward_lelong_verdict(seq: BlowupSequence, bound: Optional[int] = None) -> LelongVerdict:
    """Generic Lelong number of the push-forward of a smooth form along Z0.

    After pruning, an empty sequence means the curve is not contained in the
    first center and the statement is trivial.  Otherwise the certificate is
    the smallest threshold over all chart paths; it always exceeds 1, which
    forces ``r^{2(c-1)} -> 0`` and hence vanishing.
    """
    pruned, log = prune_minimality(seq)
    if not pruned.centers:
        return LelongVerdict("trivial_by_remark", pruned, log)
    s = len(pruned)
    _check_depth(s, bound)
    best = None
    for path, (h, k) in iter_normal_forms(s):
        value = NormalFormIdeal(h, k).lct()
        if best is None or value < best[0]:
            best = (value, path, NormalFormIdeal(h, k))
    min_lct, best_path, nf = best
    if not min_lct > 1:
        raise ReductionStuck("threshold gap violated: min lct <= 1",
                             {"path": best_path, "h": nf.h, "k": nf.k})
    return LelongVerdict("vanishes", pruned, log, min_lct, best_path, nf)


def normal_form_multiset(s: int) -> Counter:
    return Counter(hk for _, hk in iter_normal_forms(s))
