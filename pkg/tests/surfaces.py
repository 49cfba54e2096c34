"""Random surface datasets with a valid (negative definite) curve configuration."""

import random
from fractions import Fraction

from lctforge.exact import is_negative_definite
from lctforge.intersection import ClassBasis, DivisorClass, IntersectionForm
from lctforge.zariski import SurfaceData


def random_surface(rng: random.Random, curves=None) -> SurfaceData:
    """Basis ``H, C1..Cr`` with ``H^2 = 1``, ``H.Ci = 0`` and a random negative
    definite Gram matrix on the ``Ci``; the candidates are the ``Ci``, listed in
    random order."""
    r = curves or rng.randint(1, 4)
    while True:
        gram = [[0] * r for _ in range(r)]
        for i in range(r):
            gram[i][i] = rng.randint(-4, -1)
            for j in range(i):
                gram[i][j] = gram[j][i] = rng.choice([0, 0, 1, 1, 2])
        if is_negative_definite(gram):
            break
    names = ("H",) + tuple(f"C{i + 1}" for i in range(r))
    basis = ClassBasis(names, 2)
    values = {(0, 0): 1}
    for i in range(r):
        for j in range(i + 1):
            values[(i + 1, j + 1)] = gram[i][j]
    form = IntersectionForm(basis, values)
    order = list(range(r))
    rng.shuffle(order)
    cands = tuple(DivisorClass.basis_element(basis, names[i + 1]) for i in order)
    return SurfaceData(form, cands, tuple(names[i + 1] for i in order))


def random_effective(rng: random.Random, data: SurfaceData) -> DivisorClass:
    coeffs = [Fraction(rng.randint(0, 4), rng.randint(1, 3)) for _ in data.basis.names]
    return DivisorClass(data.basis, tuple(coeffs))
