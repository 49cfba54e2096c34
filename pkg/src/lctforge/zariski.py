"""Zariski decomposition on a surface relative to a finite set of curves.

Given a class ``D`` and candidate irreducible curves ``C_1..C_r`` the
decomposition ``D = P + N`` has ``N = sum a_j C_j`` effective with negative
definite support Gram matrix, ``P`` nef on the candidates and ``P.C_j = 0``
on the support.  On a surface the positive product of two classes is just
``P_a . P_b``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Mapping, Optional, Sequence, Tuple

from .errors import InputError, InvalidCurveConfiguration, NotPseudoEffective
from .exact import is_negative_definite, render_rational, solve_linear
from .intersection import ClassBasis, DivisorClass, IntersectionForm, intersect


@dataclass(frozen=True)
class SurfaceData:
    form: IntersectionForm
    candidates: Tuple[DivisorClass, ...]
    candidate_names: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.form.arity != 2:
            raise InputError(f"surface data needs a bilinear form, got arity {self.form.arity}")
        object.__setattr__(self, "candidates", tuple(self.candidates))
        if not self.candidates:
            raise InputError("candidate curve list must be nonempty")
        for c in self.candidates:
            if c.basis != self.form.basis:
                raise InputError("candidate curve not expressed in the surface basis")
        names = tuple(self.candidate_names) or tuple(c.render() for c in self.candidates)
        if len(names) != len(self.candidates):
            raise InputError("one name per candidate curve")
        object.__setattr__(self, "candidate_names", names)

    @property
    def basis(self) -> ClassBasis:
        return self.form.basis

    def dot(self, a: DivisorClass, b: DivisorClass) -> Fraction:
        return intersect(self.form, [a, b])

    def cls(self, mapping: Mapping[str, object]) -> DivisorClass:
        return DivisorClass.from_mapping(self.basis, mapping)

    def to_json(self) -> dict:
        doc = self.form.to_json()
        doc["candidates"] = [c.to_mapping() for c in self.candidates]
        doc["candidate_names"] = list(self.candidate_names)
        return doc

    @classmethod
    def from_json(cls, doc: Mapping) -> "SurfaceData":
        form = IntersectionForm.from_json(doc)
        try:
            raw = doc["candidates"]
        except KeyError:
            raise InputError("surface document needs a 'candidates' list") from None
        candidates = tuple(DivisorClass.from_mapping(form.basis, c) for c in raw)
        return cls(form, candidates, tuple(doc.get("candidate_names", ())))


@dataclass(frozen=True)
class ZariskiDecomposition:
    D: DivisorClass
    P: DivisorClass
    N: Tuple[Tuple[int, Fraction], ...]  # (candidate index, coefficient a_j > 0)
    nef_check: Tuple[Fraction, ...]       # P.C for every candidate
    orthogonality: Tuple[Fraction, ...]   # P.C_j over the support
    gram_negdef: bool
    iterations: int

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.N)

    def negative_part(self, data: SurfaceData) -> DivisorClass:
        total = DivisorClass.zero(data.basis)
        for i, a in self.N:
            total = total + a * data.candidates[i]
        return total

    def to_json(self, data: SurfaceData) -> dict:
        return {
            "P": self.P.to_mapping(),
            "N": [{"curve": data.candidate_names[i], "index": i, "coefficient": render_rational(a)}
                  for i, a in self.N],
            "certificates": {
                "nef_check": [render_rational(v) for v in self.nef_check],
                "orthogonality": [render_rational(v) for v in self.orthogonality],
                "gram_negdef": self.gram_negdef,
            },
            "iterations": self.iterations,
        }


def zariski_decompose(D: DivisorClass, data: SurfaceData) -> ZariskiDecomposition:
    """Iterative support enlargement.

    Start with the curves ``D`` is negative on; solve ``N.C_i = D.C_i`` on the
    support; add every candidate on which ``P = D - N`` is still negative and
    repeat.  Violators are added all at once, so the fixed point does not
    depend on candidate order.
    """
    if D.basis != data.basis:
        raise InputError("class is not expressed in the surface basis")
    curves = data.candidates
    support: List[int] = [i for i, c in enumerate(curves) if data.dot(D, c) < 0]
    iterations = 0
    while True:
        iterations += 1
        coeffs: Tuple[Fraction, ...] = ()
        if support:
            gram = [[data.dot(curves[i], curves[j]) for j in support] for i in support]
            if not is_negative_definite(gram):
                raise InvalidCurveConfiguration(
                    "invalid curve configuration: support Gram matrix is not negative definite",
                    {"support": [data.candidate_names[i] for i in support],
                     "gram": [[render_rational(v) for v in row] for row in gram]},
                )
            try:
                coeffs = solve_linear(gram, [data.dot(D, curves[i]) for i in support])
            except ZeroDivisionError:
                raise InvalidCurveConfiguration(
                    "invalid curve configuration: singular support Gram matrix",
                    {"support": [data.candidate_names[i] for i in support]},
                ) from None
        N = DivisorClass.zero(data.basis)
        for i, a in zip(support, coeffs):
            N = N + a * curves[i]
        P = D - N
        violators = [i for i, c in enumerate(curves) if i not in support and data.dot(P, c) < 0]
        if not violators:
            break
        support = sorted(support + violators)

    negative = [(data.candidate_names[i], a) for i, a in zip(support, coeffs) if a < 0]
    if negative:
        raise NotPseudoEffective(
            "class not pseudo-effective relative to candidates",
            {"negative_coefficients": {n: render_rational(a) for n, a in negative}},
        )
    N_terms = tuple((i, a) for i, a in zip(support, coeffs) if a != 0)
    kept = [i for i, _ in N_terms]
    gram_kept = [[data.dot(curves[i], curves[j]) for j in kept] for i in kept]
    return ZariskiDecomposition(
        D=D,
        P=P,
        N=N_terms,
        nef_check=tuple(data.dot(P, c) for c in curves),
        orthogonality=tuple(data.dot(P, curves[i]) for i in kept),
        gram_negdef=is_negative_definite(gram_kept) if kept else True,
        iterations=iterations,
    )


def positive_product(alpha: DivisorClass, beta: DivisorClass, data: SurfaceData) -> Fraction:
    """``<alpha . beta>`` on a surface: the product of the positive parts."""
    return data.dot(zariski_decompose(alpha, data).P, zariski_decompose(beta, data).P)


@dataclass(frozen=True)
class Q1Report:
    identity_holds: bool
    positive_part: DivisorClass
    multiplicities: Tuple[Tuple[str, Fraction, bool], ...]  # (curve, nu(alpha, D_j), nu > 0)

    def to_json(self) -> dict:
        return {
            "identity_holds": self.identity_holds,
            "positive_part": self.positive_part.to_mapping(),
            "multiplicities": [
                {"curve": n, "nu": render_rational(v), "positive": pos}
                for n, v, pos in self.multiplicities
            ],
        }


def verify_q1_decomposition(alpha: DivisorClass, data: SurfaceData) -> Q1Report:
    """Check ``alpha = <alpha> + sum nu(alpha, D_j) [D_j]`` exactly."""
    dec = zariski_decompose(alpha, data)
    identity = dec.P + dec.negative_part(data) == alpha
    coeffs = dict(dec.N)
    mults = tuple(
        (data.candidate_names[i], coeffs.get(i, Fraction(0)), coeffs.get(i, Fraction(0)) > 0)
        for i in range(len(data.candidates))
    )
    return Q1Report(identity, dec.P, mults)


def nef_criterion(alpha: DivisorClass, data: SurfaceData) -> bool:
    """``alpha`` is nef (relative to the candidates) iff its negative part is 0.

    When it is, ``alpha^2 = <alpha^2>`` is asserted as a consistency check.
    """
    dec = zariski_decompose(alpha, data)
    if dec.N:
        return False
    if data.dot(alpha, alpha) != data.dot(dec.P, dec.P):
        raise AssertionError("nef class with alpha^2 != <alpha^2>")
    return True


def blowup_of_plane() -> SurfaceData:
    """The plane blown up at a point: ``H^2 = 1``, ``E^2 = -1``, ``H.E = 0``;
    candidate curves ``E`` and the strict transform ``H - E`` of a line through
    the point."""
    basis = ClassBasis(("H", "E"), 2)
    form = IntersectionForm.from_names(basis, {"H,H": 1, "H,E": 0, "E,E": -1})
    E = DivisorClass.from_mapping(basis, {"E": 1})
    line = DivisorClass.from_mapping(basis, {"H": 1, "E": -1})
    return SurfaceData(form, (E, line), ("E", "H-E"))
