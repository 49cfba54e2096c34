"""Newton polyhedra of monomial ideals and their log-canonical thresholds.

A monomial ideal is identified with its set of exponent vectors.  Its Newton
polyhedron is ``P = conv(generators) + R^n_{>=0}``; for a monomial ideal the
multiplier ideal ``J(r.a)`` consists of the monomials ``x^l`` with
``l + 1`` in the interior of ``rP`` (Howald), and the log-canonical threshold
is ``1/m`` where ``m.1`` is the point at which the diagonal leaves ``P``.

Every membership question is decided by a small exact LP.
"""

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import InputError, ThresholdUndefined
from .exact import QVector, lp_solve, qvector, render_rational, to_rational

Exponent = Tuple[int, ...]


def _minimal(generators: Iterable[Exponent]) -> Tuple[Exponent, ...]:
    gens = sorted(set(generators), key=lambda g: (sum(g), g))
    kept: List[Exponent] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(k, g)) for k in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in ``C[x1..xn]`` given by a minimal generating set.

    The unit ideal is represented by the single zero vector; ``is_unit`` flags it.
    """

    dim: int
    generators: Tuple[Exponent, ...]

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InputError(f"ambient dimension must be a positive integer, got {self.dim!r}")
        if not self.generators:
            raise InputError("a monomial ideal needs at least one generator")
        gens = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != self.dim:
                raise InputError(f"generator {g} does not live in dimension {self.dim}")
            if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in g):
                raise InputError(f"exponents must be natural numbers: {g}")
            gens.append(g)
        object.__setattr__(self, "generators", _minimal(gens))

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.dim,)

    @classmethod
    def unit(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, ((0,) * dim,))

    @classmethod
    def parse(cls, literal: str, dim: Optional[int] = None) -> "MonomialIdeal":
        """Parse ``"x1^2*x2, x3"``.  For dim <= 3, ``x, y, z`` are accepted too.

        ``1`` denotes the unit monomial.
        """
        named = {"x": 1, "y": 2, "z": 3}
        pieces = [p.strip() for p in literal.split(",")]
        if not pieces or any(not p for p in pieces):
            raise InputError(f"empty monomial in ideal literal {literal!r}")
        parsed = []
        max_var = 0
        for piece in pieces:
            powers: Dict[int, int] = {}
            if piece != "1":
                for factor in piece.split("*"):
                    m = re.fullmatch(r"\s*(x(\d+)|[xyz])\s*(?:\^\s*(\d+))?\s*", factor)
                    if m is None:
                        raise InputError(f"cannot parse factor {factor!r} in {literal!r}")
                    var = int(m.group(2)) if m.group(2) else named[m.group(1)]
                    if var < 1:
                        raise InputError(f"variables are numbered from 1: {factor!r}")
                    powers[var] = powers.get(var, 0) + int(m.group(3) or 1)
                    max_var = max(max_var, var)
            parsed.append(powers)
        if dim is None:
            dim = max(max_var, 1)
        elif max_var > dim:
            raise InputError(f"literal uses x{max_var} but dim is {dim}")
        gens = [tuple(p.get(i + 1, 0) for i in range(dim)) for p in parsed]
        return cls(dim, tuple(gens))

    def render(self) -> str:
        if self.is_unit:
            return "1"
        parts = []
        for g in sorted(self.generators, reverse=True):
            factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(g) if e]
            parts.append("*".join(factors))
        return ", ".join(parts)

    def to_json(self) -> dict:
        return {"dim": self.dim, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, doc: dict) -> "MonomialIdeal":
        try:
            return cls(int(doc["dim"]), tuple(tuple(g) for g in doc["generators"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"ideal document needs 'dim' and 'generators': {exc}") from exc

    def contains_monomial(self, exponent: Sequence[int]) -> bool:
        return any(all(a <= b for a, b in zip(g, exponent)) for g in self.generators)


@dataclass(frozen=True)
class NewtonPolyhedron:
    """``conv(generators) + orthant``; generators may be rational after scaling."""

    dim: int
    generators: Tuple[QVector, ...]

    def scaled(self, r) -> "NewtonPolyhedron":
        """Pointwise scaling ``rP``.  ``0.P`` is taken to be the orthant."""
        r = to_rational(r)
        if r < 0:
            raise InputError("scaling factor must be nonnegative")
        return NewtonPolyhedron(self.dim, tuple(tuple(r * a for a in g) for g in self.generators))

    @property
    def is_orthant(self) -> bool:
        return any(all(a == 0 for a in g) for g in self.generators)


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    return NewtonPolyhedron(ideal.dim, tuple(qvector(g) for g in ideal.generators))


def _check_point(poly: NewtonPolyhedron, point) -> QVector:
    p = qvector(point)
    if len(p) != poly.dim:
        raise InputError(f"point has dimension {len(p)}, polyhedron has {poly.dim}")
    return p


def contains(poly: NewtonPolyhedron, point) -> bool:
    """Exact membership: is there a convex combination of generators <= point?"""
    p = _check_point(poly, point)
    k = len(poly.generators)
    constraints = [([Fraction(1)] * k, "=", 1)]
    for i in range(poly.dim):
        constraints.append(([g[i] for g in poly.generators], "<=", p[i]))
    return lp_solve([0] * k, constraints, nonneg=True).optimal


def retraction_depth(poly: NewtonPolyhedron, point) -> Fraction:
    """``max{d : point - d.1 in P}``; finite because P lies in the orthant."""
    p = _check_point(poly, point)
    k = len(poly.generators)
    # variables: weights w_1..w_k >= 0, then d (free)
    constraints = [([Fraction(1)] * k + [0], "=", 1)]
    for i in range(poly.dim):
        constraints.append(([g[i] for g in poly.generators] + [1], "<=", p[i]))
    result = lp_solve([0] * k + [1], constraints, sense="max", nonneg=[True] * k + [False])
    return result.value


def interior_contains(poly: NewtonPolyhedron, point) -> bool:
    """Is ``point`` in the topological interior of P?

    Since the recession cone of P is the whole orthant, P is full dimensional
    and ``p`` is interior iff it can be pushed strictly inward along ``1``.
    """
    return retraction_depth(poly, point) > 0


@dataclass(frozen=True)
class DiagonalSolution:
    value: Fraction
    weights: QVector


def _diagonal(poly: NewtonPolyhedron) -> DiagonalSolution:
    if poly.is_orthant:
        raise ThresholdUndefined("threshold undefined (+inf): unit ideal")
    k = len(poly.generators)
    # variables: w_1..w_k, t ; minimise t subject to sum w_i a_i <= t.1
    constraints = [([Fraction(1)] * k + [0], "=", 1)]
    for i in range(poly.dim):
        constraints.append(([g[i] for g in poly.generators] + [-1], "<=", 0))
    result = lp_solve([0] * k + [1], constraints, nonneg=True)
    return DiagonalSolution(result.value, result.witness[:k])


def diagonal_parameter(poly: NewtonPolyhedron) -> Fraction:
    """The unique ``m`` with ``m.1`` on the boundary of P."""
    return _diagonal(poly).value


@dataclass(frozen=True)
class LctReport:
    ideal: MonomialIdeal
    diagonal_parameter: Fraction
    lct: Union[Fraction, float]  # math.inf for the unit ideal
    witness: Tuple[Tuple[Exponent, Fraction], ...] = field(default=())

    @property
    def is_infinite(self) -> bool:
        return self.lct == math.inf

    def to_json(self) -> dict:
        return {
            "ideal": self.ideal.to_json(),
            "diagonal_parameter": render_rational(self.diagonal_parameter),
            "lct": "inf" if self.is_infinite else render_rational(self.lct),
            "witness": [
                {"generator": list(g), "weight": render_rational(w)} for g, w in self.witness
            ],
        }


@lru_cache(maxsize=65536)
def lct(ideal: MonomialIdeal) -> LctReport:
    """Log-canonical threshold of a monomial ideal, with the diagonal LP witness.

    The unit ideal gets the ``math.inf`` sentinel.
    """
    if ideal.is_unit:
        return LctReport(ideal, Fraction(0), math.inf)
    sol = _diagonal(newton_polyhedron(ideal))
    witness = tuple((g, w) for g, w in zip(ideal.generators, sol.weights) if w)
    return LctReport(ideal, sol.value, 1 / sol.value, witness)


def multiplier_ideal_monomials(ideal: MonomialIdeal, r, degree_bound: int) -> List[Exponent]:
    """Exponents ``l`` with ``|l| <= degree_bound`` and ``x^l`` in ``J(r.a)``.

    Membership test: ``l + 1`` lies in the interior of ``rP``.
    """
    r = to_rational(r)
    if r < 0:
        raise InputError("r must be nonnegative")
    if degree_bound < 0:
        raise InputError("degree_bound must be nonnegative")
    poly = newton_polyhedron(ideal).scaled(r)
    found = []
    for exps in _bounded_exponents(ideal.dim, degree_bound):
        if poly.is_orthant or interior_contains(poly, [e + 1 for e in exps]):
            found.append(exps)
    return found


def _bounded_exponents(dim: int, bound: int):
    for total in range(bound + 1):
        for combo in itertools.combinations_with_replacement(range(dim), total):
            exps = [0] * dim
            for i in combo:
                exps[i] += 1
            yield tuple(exps)


def direct_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """``pr1^* I + pr2^* J`` on the product of the two affine spaces."""
    pad_right = (0,) * second.dim
    pad_left = (0,) * first.dim
    gens = [g + pad_right for g in first.generators] + [pad_left + g for g in second.generators]
    return MonomialIdeal(first.dim + second.dim, tuple(gens))


def normal_form_ideal(h: int, k: int) -> MonomialIdeal:
    """The ideal ``(x^h y^k, z)`` in dimension 3."""
    return MonomialIdeal(3, ((h, k, 0), (0, 0, 1)))


def sum_reading_normal_form_lct(h: int, k: int) -> Optional[Fraction]:
    """``(h+k)/(hk) + 1``: the value obtained by reading ``x^h y^k`` as the
    sum ideal ``(x^h, y^k)``.  Undefined (None) when ``hk = 0``.
    """
    if h * k == 0:
        return None
    return Fraction(h + k, h * k) + 1


def as_normal_form(ideal: MonomialIdeal) -> Optional[Tuple[int, int]]:
    """Return ``(h, k)`` if ``ideal`` is literally ``(x^h y^k, z)``, else None."""
    if ideal.dim != 3 or len(ideal.generators) != 2:
        return None
    gens = set(ideal.generators)
    if (0, 0, 1) not in gens:
        return None
    (other,) = gens - {(0, 0, 1)}
    if other[2] != 0 or max(other) < 1:
        return None
    return other[0], other[1]


def lct_by_bisection(ideal: MonomialIdeal, width=Fraction(1, 10**7)) -> Tuple[Fraction, Fraction]:
    """Bracket ``sup{r : 1 in Int(rP)}`` by rational bisection.

    Independent of the diagonal LP; used to cross-check :func:`lct`.
    """
    if ideal.is_unit:
        raise ThresholdUndefined("threshold undefined (+inf): unit ideal")
    poly = newton_polyhedron(ideal)
    ones = [1] * ideal.dim
    lo = Fraction(0)
    hi = Fraction(1)
    while interior_contains(poly.scaled(hi), ones):
        lo, hi = hi, hi * 2
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if interior_contains(poly.scaled(mid), ones):
            lo = mid
        else:
            hi = mid
    return lo, hi

