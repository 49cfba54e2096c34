"""Divisor classes over a declared basis with a symmetric multilinear form.

The intersection form is input data: a value for every multiset of ``n``
basis indices (``n`` = dimension of the manifold).  Missing entries are 0.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Mapping, Sequence, Tuple

from .errors import InputError
from .exact import QVector, render_rational, to_rational


@dataclass(frozen=True)
class ClassBasis:
    names: Tuple[str, ...]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise InputError(f"basis names must be unique: {self.names}")
        if not self.names:
            raise InputError("empty basis")
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InputError(f"manifold dimension must be a positive integer, got {self.dim!r}")

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown basis element {name!r}; basis is {list(self.names)}") from None

    def __len__(self):
        return len(self.names)


@dataclass(frozen=True)
class DivisorClass:
    basis: ClassBasis
    coefficients: QVector

    def __post_init__(self):
        coeffs = tuple(to_rational(c) for c in self.coefficients)
        if len(coeffs) != len(self.basis):
            raise InputError(f"class has {len(coeffs)} coefficients, basis has {len(self.basis)}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_mapping(cls, basis: ClassBasis, mapping: Mapping[str, object]) -> "DivisorClass":
        coeffs = [Fraction(0)] * len(basis)
        for name, value in mapping.items():
            coeffs[basis.index(name)] = to_rational(value)
        return cls(basis, tuple(coeffs))

    @classmethod
    def zero(cls, basis: ClassBasis) -> "DivisorClass":
        return cls(basis, (Fraction(0),) * len(basis))

    @classmethod
    def basis_element(cls, basis: ClassBasis, name: str) -> "DivisorClass":
        return cls.from_mapping(basis, {name: 1})

    def _check(self, other: "DivisorClass"):
        if other.basis != self.basis:
            raise InputError("classes live over different bases")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.basis, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-1) * other

    def __mul__(self, scalar) -> "DivisorClass":
        c = to_rational(scalar)
        return DivisorClass(self.basis, tuple(c * a for a in self.coefficients))

    __rmul__ = __mul__

    def __neg__(self):
        return (-1) * self

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def to_mapping(self) -> Dict[str, str]:
        return {n: render_rational(c) for n, c in zip(self.basis.names, self.coefficients) if c}

    def render(self) -> str:
        parts = []
        for name, c in zip(self.basis.names, self.coefficients):
            if c == 1:
                parts.append(name)
            elif c:
                parts.append(f"{render_rational(c)}*{name}")
        return " + ".join(parts) or "0"


class IntersectionForm:
    """Symmetric ``n``-linear form keyed by sorted index tuples."""

    def __init__(self, basis: ClassBasis, values: Mapping[Tuple[int, ...], object]):
        self.basis = basis
        self.arity = basis.dim
        self.values: Dict[Tuple[int, ...], Fraction] = {}
        for key, value in values.items():
            key = tuple(sorted(key))
            if len(key) != self.arity or any(not 0 <= i < len(basis) for i in key):
                raise InputError(f"form key {key} is not a multiset of {self.arity} basis indices")
            value = to_rational(value)
            if key in self.values and self.values[key] != value:
                raise InputError(f"conflicting values for {key}")
            self.values[key] = value

    @classmethod
    def from_names(cls, basis: ClassBasis, values: Mapping[str, object]) -> "IntersectionForm":
        """Keys like ``"H,E"``; order within a key does not matter."""
        indexed = {}
        for key, value in values.items():
            names = [part.strip() for part in key.split(",")]
            indexed_key = tuple(sorted(basis.index(n) for n in names))
            if indexed_key in indexed and to_rational(indexed[indexed_key]) != to_rational(value):
                raise InputError(f"conflicting values for {key!r}")
            indexed[indexed_key] = value
        return cls(basis, indexed)

    def value(self, indices: Sequence[int]) -> Fraction:
        return self.values.get(tuple(sorted(indices)), Fraction(0))

    def to_json(self) -> dict:
        form = {}
        for key in itertools.combinations_with_replacement(range(len(self.basis)), self.arity):
            form[",".join(self.basis.names[i] for i in key)] = render_rational(self.value(key))
        return {"basis": list(self.basis.names), "dim": self.arity, "form": form}

    @classmethod
    def from_json(cls, doc: Mapping) -> "IntersectionForm":
        try:
            basis = ClassBasis(tuple(doc["basis"]), int(doc["dim"]))
            return cls.from_names(basis, doc["form"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"intersection form document needs basis, dim, form: {exc}") from exc

    def __eq__(self, other):
        return (isinstance(other, IntersectionForm) and self.basis == other.basis
                and {k: v for k, v in self.values.items() if v}
                == {k: v for k, v in other.values.items() if v})

    def __repr__(self):
        return f"IntersectionForm({self.to_json()})"


def intersect(form: IntersectionForm, classes: Sequence[DivisorClass]) -> Fraction:
    """Multilinear evaluation ``D_1 . D_2 ... D_n``."""
    if len(classes) != form.arity:
        raise InputError(f"intersection needs exactly {form.arity} classes, got {len(classes)}")
    for c in classes:
        if c.basis != form.basis:
            raise InputError("class is not expressed in the form's basis")
    supports = [[(i, a) for i, a in enumerate(c.coefficients) if a] for c in classes]
    total = Fraction(0)
    for choice in itertools.product(*supports):
        coeff = Fraction(1)
        for _, a in choice:
            coeff *= a
        total += coeff * form.value([i for i, _ in choice])
    return total


def power_pair(
    form: IntersectionForm,
    first: DivisorClass,
    second: DivisorClass,
    scalar,
    m: int,
    rest: Sequence[DivisorClass],
) -> Fraction:
    """``(A + a.B)^m . rest`` expanded binomially."""
    a = to_rational(scalar)
    if not 0 <= m <= form.arity or len(rest) != form.arity - m:
        raise InputError(f"power_pair needs 0 <= m <= {form.arity} and {form.arity - m} remaining classes")
    total = Fraction(0)
    for j in range(m + 1):
        if a == 0 and j > 0:
            break
        classes = [first] * (m - j) + [second] * j + list(rest)
        total += comb(m, j) * a**j * intersect(form, classes)
    return total
