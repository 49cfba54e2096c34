"""Right-hand sides of the algebraic holomorphic Morse inequalities.

Every bound is reported as the coefficient of ``k^n / n!``.  In table mode the
caller supplies the intersection numbers; :func:`surface_morse` computes them
from a surface Zariski decomposition.  No cohomology is ever computed.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence, Tuple

from .errors import InconsistentMorseInput, InputError
from .exact import render_rational, to_rational
from .intersection import DivisorClass
from .zariski import SurfaceData, zariski_decompose


@dataclass(frozen=True)
class MorseComponent:
    """One codimension-``s`` component ``Y_t`` of the non-nef locus.

    ``mixed_LuY[j] = L^{n-s-j} . u^j . [Y_t]`` for ``j = 0..n-s``.
    """

    nu: Fraction
    nu_prime: Fraction
    mixed_LuY: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "nu", to_rational(self.nu))
        object.__setattr__(self, "nu_prime", to_rational(self.nu_prime))
        object.__setattr__(self, "mixed_LuY", tuple(to_rational(v) for v in self.mixed_LuY))
        if self.nu <= 0:
            raise InputError("listed components need nu > 0")
        if self.nu_prime < 0:
            raise InputError("nu' must be nonnegative")


@dataclass(frozen=True)
class MorseInput:
    n: int
    s: int
    mixed_LF: Tuple[Fraction, ...]  # L^{n-j} . <F^j>, j = 0..s
    components: Tuple[MorseComponent, ...] = ()
    u_nef_asserted: bool = True
    asserts_defect: bool = False    # caller asserts F^s != <F^s>

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError("n must be a positive integer")
        if not isinstance(self.s, int) or not 0 <= self.s <= self.n:
            raise InputError(f"need 0 <= s <= n, got s={self.s}, n={self.n}")
        object.__setattr__(self, "mixed_LF", tuple(to_rational(v) for v in self.mixed_LF))
        object.__setattr__(self, "components", tuple(self.components))
        if len(self.mixed_LF) != self.s + 1:
            raise InputError(f"mixed_LF needs {self.s + 1} entries, got {len(self.mixed_LF)}")
        for t, comp in enumerate(self.components):
            if len(comp.mixed_LuY) != self.n - self.s + 1:
                raise InputError(
                    f"component {t}: mixed_LuY needs {self.n - self.s + 1} entries, got {len(comp.mixed_LuY)}"
                )

    @classmethod
    def from_json(cls, doc: Mapping) -> "MorseInput":
        try:
            comps = tuple(
                MorseComponent(c["nu"], c["nu_prime"], tuple(c["mixed_LuY"]))
                for c in doc.get("components", [])
            )
            return cls(int(doc["n"]), int(doc["s"]), tuple(doc["mixed_LF"]), comps,
                       bool(doc.get("u_nef_asserted", True)), bool(doc.get("asserts_defect", False)))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad Morse input document: {exc}") from exc

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "mixed_LF": [render_rational(v) for v in self.mixed_LF],
            "components": [
                {"nu": render_rational(c.nu), "nu_prime": render_rational(c.nu_prime),
                 "mixed_LuY": [render_rational(v) for v in c.mixed_LuY]}
                for c in self.components
            ],
            "u_nef_asserted": self.u_nef_asserted,
            "asserts_defect": self.asserts_defect,
        }


@dataclass(frozen=True)
class BoundReport:
    coefficient: Fraction
    formula_id: str
    parts: Tuple[Tuple[str, Fraction], ...] = field(default=())
    notes: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.parts and sum((v for _, v in self.parts), Fraction(0)) != self.coefficient:
            raise AssertionError("bound parts do not add up to the coefficient")

    def to_json(self) -> dict:
        return {
            "formula": self.formula_id,
            "coefficient": render_rational(self.coefficient),
            "parts": [{"label": k, "value": render_rational(v)} for k, v in self.parts],
            "notes": list(self.notes),
        }


def _alternating(n: int, s: int, table: Sequence[Fraction]) -> Fraction:
    return sum((comb(n, j) * (-1) ** (s - j) * table[j] for j in range(s + 1)), Fraction(0))


def _component_term(n: int, s: int, mult: Fraction, comp: MorseComponent) -> Fraction:
    """``C(n,s) (L + mult.u)^{n-s} . nu [Y]`` expanded binomially."""
    inner = sum((comb(n - s, j) * mult**j * comp.mixed_LuY[j] for j in range(n - s + 1)), Fraction(0))
    return comb(n, s) * inner * comp.nu


def _notes(data: MorseInput) -> Tuple[str, ...]:
    notes = ["component sum truncated to the finite list supplied"]
    if data.components:
        notes.append("u accepted on the caller's assertion of the nefness condition"
                     if data.u_nef_asserted else "WARNING: nefness condition on u not asserted")
    return tuple(notes)


def strong_morse_bound(data: MorseInput) -> BoundReport:
    main = _alternating(data.n, data.s, data.mixed_LF)
    parts = [("alternating sum", main)]
    for t, comp in enumerate(data.components):
        parts.append((f"component {t}", _component_term(data.n, data.s, comp.nu_prime, comp)))
    total = sum((v for _, v in parts), Fraction(0))
    return BoundReport(total, "strong", tuple(parts), _notes(data))


def second_formulation_bound(data: MorseInput) -> BoundReport:
    """Every ``nu'_t`` replaced by ``b = max nu'_t``."""
    if not data.components and data.s > 0 and data.asserts_defect:
        raise InconsistentMorseInput(
            "F^s != <F^s> asserted but no components supplied",
            {"n": data.n, "s": data.s},
        )
    main = _alternating(data.n, data.s, data.mixed_LF)
    b = max((c.nu_prime for c in data.components), default=Fraction(0))
    parts = [("alternating sum", main)]
    for t, comp in enumerate(data.components):
        parts.append((f"component {t}", _component_term(data.n, data.s, b, comp)))
    total = sum((v for _, v in parts), Fraction(0))
    return BoundReport(total, "second", tuple(parts), _notes(data) + (f"b = {render_rational(b)}",))


def nef_case_bound(n: int, s: int, table: Sequence) -> BoundReport:
    """``sum_j (-1)^{s-j} C(n,j) L^{n-j} F^j`` for nef ``L`` and ``F``."""
    if not isinstance(n, int) or n < 1 or not isinstance(s, int) or not 0 <= s <= n:
        raise InputError(f"need n >= 1 and 0 <= s <= n, got n={n}, s={s}")
    table = tuple(to_rational(v) for v in table)
    if len(table) != s + 1:
        raise InputError(f"table needs {s + 1} entries, got {len(table)}")
    value = _alternating(n, s, table)
    return BoundReport(value, "nef", (("alternating sum", value),))


@dataclass(frozen=True)
class TrapaniDivisor:
    nu: Fraction
    table: Tuple[Fraction, ...]  # L^{n-1-i} . u^i . [D_j], i = 0..n-1

    def __post_init__(self):
        object.__setattr__(self, "nu", to_rational(self.nu))
        object.__setattr__(self, "table", tuple(to_rational(v) for v in self.table))


def trapani_s1_bound(n: int, L_n, L_n1_F, divisors: Sequence[TrapaniDivisor] = ()) -> BoundReport:
    """Lower bound for ``limsup n!/k^n h^0(X, k(L - F))`` from the divisorial
    Zariski decomposition of ``F``:

        L^n - n L^{n-1}.<F> - n sum_j (L + nu_j u)^{n-1} nu_j [D_j]
    """
    if not isinstance(n, int) or n < 1:
        raise InputError("n must be a positive integer")
    head = to_rational(L_n) - n * to_rational(L_n1_F)
    parts = [("L^n - n L^{n-1}<F>", head)]
    for j, d in enumerate(divisors):
        if len(d.table) != n:
            raise InputError(f"divisor {j}: table needs {n} entries, got {len(d.table)}")
        inner = sum((comb(n - 1, i) * d.nu**i * d.table[i] for i in range(n)), Fraction(0))
        parts.append((f"divisor {j}", -n * inner * d.nu))
    total = sum((v for _, v in parts), Fraction(0))
    return BoundReport(total, "trapani_s1", tuple(parts))


def surface_morse_input(L: DivisorClass, F: DivisorClass, data: SurfaceData, u: DivisorClass) -> MorseInput:
    """Build the ``n = 2, s = 1`` table from the Zariski decomposition of ``F``."""
    bad = [name for name, c in zip(data.candidate_names, data.candidates) if data.dot(L, c) < 0]
    if bad:
        raise InputError(f"L is not nef on the candidate curves {bad}")
    dec = zariski_decompose(F, data)
    comps = tuple(
        MorseComponent(a, a, (data.dot(L, data.candidates[i]), data.dot(u, data.candidates[i])))
        for i, a in dec.N
    )
    return MorseInput(2, 1, (data.dot(L, L), data.dot(L, dec.P)), comps)


def surface_morse(L: DivisorClass, F: DivisorClass, data: SurfaceData, u: DivisorClass) -> BoundReport:
    return strong_morse_bound(surface_morse_input(L, F, data, u))
