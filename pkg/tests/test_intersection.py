import itertools
import random
from fractions import Fraction
from math import comb

import pytest

from lctforge.errors import InputError
from lctforge.intersection import ClassBasis, DivisorClass, IntersectionForm, intersect, power_pair


def plane_blowup_form():
    basis = ClassBasis(("H", "E"), 2)
    return IntersectionForm.from_names(basis, {"H,H": 1, "E,E": -1, "H,E": 0})


def test_surface_examples():
    form = plane_blowup_form()
    H = DivisorClass.basis_element(form.basis, "H")
    E = DivisorClass.basis_element(form.basis, "E")
    assert intersect(form, [H, H]) == 1
    assert intersect(form, [H + E, H - E]) == 2
    assert intersect(form, [DivisorClass.zero(form.basis), H + 3 * E]) == 0
    assert power_pair(form, H, 2 * H, 1, 1, [E]) == 0
    assert power_pair(form, H, E, 0, 2, []) == intersect(form, [H, H])


def test_arity_errors():
    form = plane_blowup_form()
    H = DivisorClass.basis_element(form.basis, "H")
    with pytest.raises(InputError):
        intersect(form, [H])
    with pytest.raises(InputError):
        power_pair(form, H, H, 1, 3, [])
    with pytest.raises(InputError):
        DivisorClass.from_mapping(form.basis, {"Q": 1})
    with pytest.raises(InputError):
        IntersectionForm.from_names(form.basis, {"H,E": 1, "E,H": 2})


def random_form(rng, names=("A", "B", "C"), dim=3):
    basis = ClassBasis(names, dim)
    values = {key: rng.randint(-3, 3)
              for key in itertools.combinations_with_replacement(range(len(names)), dim)}
    return IntersectionForm(basis, values)


def random_class(rng, basis):
    return DivisorClass(basis, tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in basis.names))


def test_permutation_invariance_and_multilinearity():
    rng = random.Random(1)
    for _ in range(40):
        form = random_form(rng)
        classes = [random_class(rng, form.basis) for _ in range(3)]
        value = intersect(form, classes)
        for perm in itertools.permutations(classes):
            assert intersect(form, list(perm)) == value
        extra = random_class(rng, form.basis)
        c = Fraction(rng.randint(-5, 5), 7)
        assert intersect(form, [classes[0] + c * extra] + classes[1:]) == \
            value + c * intersect(form, [extra] + classes[1:])


def test_power_pair_matches_direct_expansion():
    rng = random.Random(2)
    for _ in range(40):
        form = random_form(rng)
        A, B = random_class(rng, form.basis), random_class(rng, form.basis)
        a = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        m = rng.randint(0, 3)
        rest = [random_class(rng, form.basis) for _ in range(3 - m)]
        direct = intersect(form, [A + a * B] * m + rest)
        assert power_pair(form, A, B, a, m, rest) == direct
        binomial = sum(comb(m, j) * a**j * intersect(form, [A] * (m - j) + [B] * j + rest)
                       for j in range(m + 1))
        assert direct == binomial


def test_form_json_round_trip():
    rng = random.Random(3)
    form = random_form(rng)
    assert IntersectionForm.from_json(form.to_json()) == form
