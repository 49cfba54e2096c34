"""Numeric check of the threshold definition through sublevel volumes.

For ``phi = log sum_i |x^{a_i}|`` the set ``{phi < log r}`` only depends on the
moduli ``s_j = |x_j|``, so its volume inside the unit polydisc is

    (2 pi)^n  *  integral over [0,1]^n of [sum_i s^{a_i} < r] * prod_j s_j ds

The outer ``n - 1`` moduli are integrated with a composite midpoint rule; the
last one is integrated exactly, because the integrand is increasing in it and
the admissible range is an interval ``[0, u*)`` contributing ``u*^2 / 2``.
The volume behaves like ``r^(2c)`` up to logarithmic factors, so the slope of
``log V`` against ``log r`` estimates twice the threshold.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import InputError
from .exact import to_rational
from .newton import MonomialIdeal

DEFAULT_RADII = tuple(
    Fraction(1, d) for d in (1000, 500, 200, 100, 50, 20, 10)
)
DEFAULT_POINTS = 2000


@dataclass(frozen=True)
class SublevelFit:
    radii: Tuple[Fraction, ...]
    volumes: Tuple[float, ...]
    slope: float

    @property
    def threshold_estimate(self) -> float:
        return self.slope / 2

    @property
    def rows(self):
        """``(r, volume, fitted slope)`` triples, one per radius."""
        return [(r, v, self.slope) for r, v in zip(self.radii, self.volumes)]


def _last_axis_cutoff(base, coeffs, powers, r):
    """``sup{u in [0,1] : base + sum coeffs_i u^powers_i < r}``, elementwise."""
    below = base < r
    if not powers:
        return np.where(below, 1.0, 0.0)
    if len(powers) == 1:
        with np.errstate(divide="ignore", invalid="ignore"):
            u = np.where(
                coeffs[0] > 0,
                np.power(np.clip((r - base) / np.where(coeffs[0] > 0, coeffs[0], 1.0), 0, None),
                         1.0 / powers[0]),
                1.0,
            )
        return np.where(below, np.minimum(u, 1.0), 0.0)
    lo = np.zeros_like(base)
    hi = np.ones_like(base)

    def f(u):
        return base + sum(c * u**p for c, p in zip(coeffs, powers))

    inside_at_one = f(hi) < r
    for _ in range(60):
        mid = (lo + hi) / 2
        ok = f(mid) < r
        lo = np.where(ok, mid, lo)
        hi = np.where(ok, hi, mid)
    return np.where(below, np.where(inside_at_one, 1.0, lo), 0.0)


def sublevel_volume(ideal: MonomialIdeal, r, points: int = DEFAULT_POINTS) -> float:
    """Volume of ``{phi < log r}`` in the unit polydisc of ``C^n``, n <= 3."""
    n = ideal.dim
    if n > 3:
        raise InputError("the sublevel oracle supports dimension <= 3 only")
    r = float(to_rational(r))
    if not 0 < r < 1:
        raise InputError("radii must lie in (0, 1)")
    gens = np.array(ideal.generators, dtype=float)

    centers = (np.arange(points) + 0.5) / points
    outer = np.meshgrid(*([centers] * (n - 1)), indexing="ij") if n > 1 else []
    shape = outer[0].shape if outer else ()
    weight = np.ones(shape)
    for s in outer:
        weight = weight * s

    base = np.zeros(shape)
    coeffs, powers = [], []
    for g in gens:
        mono = np.ones(shape)
        for s, e in zip(outer, g[:-1]):
            if e:
                mono = mono * s**e
        if g[-1] == 0:
            base = base + mono
        else:
            coeffs.append(mono)
            powers.append(g[-1])
    cutoff = _last_axis_cutoff(base, coeffs, powers, r)
    integral = np.sum(weight * cutoff**2 / 2) / points ** (n - 1)
    return float((2 * np.pi) ** n * integral)


def sublevel_volume_oracle(
    ideal: MonomialIdeal,
    radii: Optional[Sequence] = None,
    points: int = DEFAULT_POINTS,
) -> SublevelFit:
    """Least-squares slope of ``log V(r)`` against ``log r``; slope ~ 2 * lct."""
    if ideal.is_unit:
        raise InputError("the unit ideal has no proper sublevel sets")
    radii = tuple(to_rational(r) for r in (radii if radii is not None else DEFAULT_RADII))
    if len(radii) < 2:
        raise InputError("need at least two radii to fit a slope")
    volumes = tuple(sublevel_volume(ideal, r, points) for r in radii)
    if min(volumes) <= 0:
        raise InputError("quadrature resolved an empty sublevel set; use more points or larger radii")
    slope = np.polyfit(np.log([float(r) for r in radii]), np.log(volumes), 1)[0]
    return SublevelFit(radii, volumes, float(slope))
