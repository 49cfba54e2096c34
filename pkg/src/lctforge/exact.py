"""Exact rational arithmetic, a small exact simplex solver and definiteness tests.

Rationals are :class:`fractions.Fraction` throughout; vectors and matrices are
tuples of them.  Nothing in this module ever touches a float.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from .errors import InputError

RationalLike = Union[Fraction, int, str]
QVector = Tuple[Fraction, ...]
QMatrix = Tuple[QVector, ...]

_RELATIONS = {
    "<=": "<=", "≤": "<=", "le": "<=",
    ">=": ">=", "≥": ">=", "ge": ">=",
    "=": "=", "==": "=", "eq": "=",
}


def to_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` to a Fraction, refusing floats.

    Floats are rejected because a binary float is almost never the rational
    the caller had in mind.
    """
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"not an exact rational: {value!r} ({type(value).__name__})")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (surrounding whitespace allowed)."""
    stripped = text.strip()
    if not stripped or any(ch in stripped for ch in ".eE"):
        raise InputError(f"not a rational literal: {text!r}")
    try:
        return Fraction(stripped)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational literal: {text!r}") from exc


def render_rational(q: Fraction) -> str:
    """Inverse of :func:`parse_rational`: ``"p/q"``, or ``"p"`` when q == 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def qvector(values: Sequence[RationalLike]) -> QVector:
    return tuple(to_rational(v) for v in values)


def qmatrix(rows: Sequence[Sequence[RationalLike]]) -> QMatrix:
    matrix = tuple(qvector(row) for row in rows)
    if matrix and len({len(row) for row in matrix}) != 1:
        raise InputError("ragged matrix")
    return matrix


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise InputError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


# ---------------------------------------------------------------------------
# Dense linear algebra over Q
# ---------------------------------------------------------------------------

def determinant(matrix: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [list(row) for row in qmatrix(matrix)]
    n = len(m)
    if any(len(row) != n for row in m):
        raise InputError("determinant of a non-square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def solve_linear(matrix: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]) -> QVector:
    """Solve a square system exactly.  Raises ZeroDivisionError if singular."""
    a = [list(row) for row in qmatrix(matrix)]
    b = list(qvector(rhs))
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise InputError("solve_linear needs a square system")
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col] / a[col][col]
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
                b[r] -= factor * b[col]
    return tuple(b[i] / a[i][i] for i in range(n))


def is_symmetric(matrix: QMatrix) -> bool:
    n = len(matrix)
    return all(len(row) == n for row in matrix) and all(
        matrix[i][j] == matrix[j][i] for i in range(n) for j in range(i)
    )


def is_negative_definite(matrix: Sequence[Sequence[RationalLike]]) -> bool:
    """Sylvester's criterion: ``(-1)^i det(M_i) > 0`` for every leading minor."""
    m = qmatrix(matrix)
    if not m:
        raise InputError("empty matrix")
    if not is_symmetric(m):
        raise InputError("is_negative_definite needs a symmetric matrix")
    for i in range(1, len(m) + 1):
        minor = determinant([row[:i] for row in m[:i]])
        if (-1) ** i * minor <= 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Linear programming
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction] = None
    witness: Optional[QVector] = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


Constraint = Tuple[Sequence[RationalLike], str, RationalLike]


def _pivot(tableau, basis, row, col):
    pivot_row = tableau[row]
    inv = 1 / pivot_row[col]
    if inv != 1:
        tableau[row] = pivot_row = [v * inv for v in pivot_row]
    for r, other in enumerate(tableau):
        if r != row:
            factor = other[col]
            if factor:
                tableau[r] = [a - factor * b for a, b in zip(other, pivot_row)]
    basis[row] = col


def _simplex(tableau, basis, cost, columns):
    """Minimise ``cost . x`` with Bland's rule over the allowed ``columns``.

    The tableau rows are ``[A | b]`` in canonical form for ``basis``.
    Returns ``"optimal"`` or ``"unbounded"``.
    """
    allowed = sorted(columns)
    while True:
        entering = None
        for j in allowed:
            if j in basis:
                continue
            reduced = cost[j] - sum(
                (cost[basis[i]] * tableau[i][j] for i in range(len(tableau)) if tableau[i][j]),
                Fraction(0),
            )
            if reduced < 0:
                entering = j
                break
        if entering is None:
            return "optimal"
        best = None
        for i, row in enumerate(tableau):
            a = row[entering]
            if a > 0:
                ratio = row[-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(tableau, basis, best[1], entering)


def lp_solve(
    objective: Sequence[RationalLike],
    constraints: Sequence[Constraint],
    sense: str = "min",
    nonneg: Union[bool, Sequence[bool]] = False,
) -> LPResult:
    """Solve a linear program exactly over the rationals.

    ``constraints`` is a list of ``(coefficients, relation, rhs)`` with
    relation one of ``"<="``, ``"="``, ``">="``.  Variables are free unless
    ``nonneg`` marks them (a single bool applies to all of them).  An all-zero
    objective turns the call into a feasibility check whose value is 0.

    Two-phase simplex with Bland's rule, so the result is deterministic for a
    fixed constraint ordering.
    """
    c = qvector(objective)
    n = len(c)
    if sense not in ("min", "max"):
        raise InputError(f"sense must be 'min' or 'max', got {sense!r}")
    if isinstance(nonneg, bool):
        signs = [nonneg] * n
    else:
        signs = list(nonneg)
        if len(signs) != n:
            raise InputError("nonneg mask length differs from objective length")

    rows = []
    for coeffs, relation, rhs in constraints:
        a = qvector(coeffs)
        if len(a) != n:
            raise InputError(f"constraint has {len(a)} coefficients, expected {n}")
        rel = _RELATIONS.get(relation)
        if rel is None:
            raise InputError(f"unknown relation {relation!r}")
        rows.append((a, rel, to_rational(rhs)))

    if n == 0:
        for _, rel, b in rows:
            if (rel == "<=" and b < 0) or (rel == ">=" and b > 0) or (rel == "=" and b != 0):
                return LPResult("infeasible")
        return LPResult("optimal", Fraction(0), ())

    # Column layout: one column per nonneg variable, two (x+, x-) per free one.
    column_of = []
    ncols = 0
    for free in (not s for s in signs):
        column_of.append((ncols, ncols + 1) if free else (ncols,))
        ncols += 2 if free else 1

    def expand(vec):
        out = [Fraction(0)] * ncols
        for value, cols in zip(vec, column_of):
            out[cols[0]] = value
            if len(cols) == 2:
                out[cols[1]] = -value
        return out

    structural = ncols
    n_slack = sum(1 for _, rel, _ in rows if rel != "=")
    normalized = []
    for a, rel, b in rows:
        a = expand(a)
        if b < 0:
            a, b = [-v for v in a], -b
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        normalized.append((a, rel, b))
    n_art = sum(1 for _, rel, _ in normalized if rel != "<=")
    width = structural + n_slack + n_art

    tableau, basis = [], []
    slack_col, art_col = structural, structural + n_slack
    artificials = set()
    for a, rel, b in normalized:
        row = a + [Fraction(0)] * (n_slack + n_art) + [b]
        if rel == "<=":
            row[slack_col] = Fraction(1)
            basis.append(slack_col)
            slack_col += 1
        else:
            if rel == ">=":
                row[slack_col] = Fraction(-1)
                slack_col += 1
            row[art_col] = Fraction(1)
            basis.append(art_col)
            artificials.add(art_col)
            art_col += 1
        tableau.append(row)

    if artificials:
        phase1 = [Fraction(1) if j in artificials else Fraction(0) for j in range(width)]
        _simplex(tableau, basis, phase1, range(width))
        if sum((row[-1] for row, j in zip(tableau, basis) if j in artificials), Fraction(0)) > 0:
            return LPResult("infeasible")
        # Drive zero-level artificials out of the basis; drop redundant rows.
        i = 0
        while i < len(tableau):
            if basis[i] in artificials:
                col = next(
                    (j for j in range(structural + n_slack) if tableau[i][j] != 0), None
                )
                if col is None:
                    del tableau[i]
                    del basis[i]
                    continue
                _pivot(tableau, basis, i, col)
            i += 1

    sign = 1 if sense == "min" else -1
    cost = expand([sign * v for v in c]) + [Fraction(0)] * (n_slack + n_art)
    status = _simplex(tableau, basis, cost, range(structural + n_slack))
    if status == "unbounded":
        return LPResult("unbounded")

    values = [Fraction(0)] * width
    for row, j in zip(tableau, basis):
        values[j] = row[-1]
    witness = tuple(
        values[cols[0]] - (values[cols[1]] if len(cols) == 2 else 0) for cols in column_of
    )
    return LPResult("optimal", dot(c, witness), witness)
