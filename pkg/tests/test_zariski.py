import random
from fractions import Fraction

import pytest

from lctforge.errors import InvalidCurveConfiguration, NotPseudoEffective
from lctforge.exact import is_negative_definite
from lctforge.intersection import ClassBasis, DivisorClass, IntersectionForm
from lctforge.zariski import (
    SurfaceData,
    blowup_of_plane,
    nef_criterion,
    positive_product,
    verify_q1_decomposition,
    zariski_decompose,
)
from surfaces import random_effective, random_surface


def two_curve_surface():
    basis = ClassBasis(("H", "C1", "C2"), 2)
    form = IntersectionForm.from_names(basis, {"H,H": 1, "C1,C1": -2, "C2,C2": -2, "C1,C2": 1})
    c1 = DivisorClass.basis_element(basis, "C1")
    c2 = DivisorClass.basis_element(basis, "C2")
    return SurfaceData(form, (c1, c2), ("C1", "C2"))


def test_blowup_example():
    data = blowup_of_plane()
    dec = zariski_decompose(data.cls({"H": 1, "E": 2}), data)
    assert dec.P == data.cls({"H": 1})
    assert dec.N == ((0, Fraction(2)),)
    assert dec.negative_part(data) == data.cls({"E": 2})
    doc = dec.to_json(data)
    assert doc["N"] == [{"curve": "E", "index": 0, "coefficient": "2"}]


def test_nef_class_is_its_own_positive_part():
    data = blowup_of_plane()
    H = data.cls({"H": 1})
    dec = zariski_decompose(H, data)
    assert dec.P == H and dec.N == ()


def test_two_curve_example_grows_support():
    data = two_curve_surface()
    D = data.cls({"H": 1, "C1": Fraction(2, 3), "C2": Fraction(1, 3)})
    assert data.dot(D, data.candidates[0]) == -1
    assert data.dot(D, data.candidates[1]) == 0
    dec = zariski_decompose(D, data)
    assert dict(dec.N) == {0: Fraction(2, 3), 1: Fraction(1, 3)}
    assert dec.iterations == 2
    assert dec.P == data.cls({"H": 1})


def test_invalid_configuration():
    basis = ClassBasis(("H", "C"), 2)
    form = IntersectionForm.from_names(basis, {"H,H": 1, "C,C": 0, "H,C": 1})
    data = SurfaceData(form, (DivisorClass.basis_element(basis, "C"),))
    with pytest.raises(InvalidCurveConfiguration) as info:
        zariski_decompose(data.cls({"C": 1, "H": -2}), data)
    assert "gram" in info.value.certificate


def test_not_pseudo_effective():
    # a negative off-diagonal entry (not geometric, but accepted as input)
    # lets the fixed point carry a negative coefficient
    basis = ClassBasis(("C1", "C2"), 2)
    form = IntersectionForm.from_names(basis, {"C1,C1": -2, "C2,C2": -2, "C1,C2": -1})
    data = SurfaceData(form, tuple(DivisorClass.basis_element(basis, n) for n in basis.names))
    with pytest.raises(NotPseudoEffective) as info:
        zariski_decompose(data.cls({"C1": -1, "C2": 3}), data)
    assert info.value.certificate["negative_coefficients"] == {"C1": "-1"}


def test_degenerate_support_is_invalid():
    data = blowup_of_plane()
    with pytest.raises(InvalidCurveConfiguration):
        zariski_decompose(data.cls({"E": -1}), data)


def test_positive_product_examples():
    data = blowup_of_plane()
    alpha = data.cls({"H": 1, "E": 2})
    assert positive_product(alpha, alpha, data) == 1
    H = data.cls({"H": 1})
    assert positive_product(H, H, data) == data.dot(H, H)
    assert positive_product(alpha, alpha * 0, data) == 0


def test_q1_report():
    data = blowup_of_plane()
    report = verify_q1_decomposition(data.cls({"H": 1, "E": 2}), data)
    assert report.identity_holds
    assert report.multiplicities[0] == ("E", Fraction(2), True)
    assert report.multiplicities[1] == ("H-E", Fraction(0), False)
    tripled = verify_q1_decomposition(data.cls({"H": 3, "E": 6}), data)
    assert tripled.multiplicities[0][1] == 3 * report.multiplicities[0][1]
    nef = verify_q1_decomposition(data.cls({"H": 1}), data)
    assert nef.identity_holds and not any(pos for _, _, pos in nef.multiplicities)


def test_nef_criterion_examples():
    data = blowup_of_plane()
    assert nef_criterion(data.cls({"H": 1}), data)
    alpha = data.cls({"H": 1, "E": 2})
    assert not nef_criterion(alpha, data)
    assert data.dot(alpha, alpha) == -3 and positive_product(alpha, alpha, data) == 1
    assert nef_criterion(data.cls({"H": 1, "E": -1}), data)


def check_certificates(D, data, dec):
    assert all(v >= 0 for v in dec.nef_check)
    assert all(a > 0 for _, a in dec.N)
    assert all(v == 0 for v in dec.orthogonality)
    assert dec.gram_negdef
    if dec.N:
        gram = [[data.dot(data.candidates[i], data.candidates[j]) for j in dec.support]
                for i in dec.support]
        assert is_negative_definite(gram)
    assert dec.P + dec.negative_part(data) == D
    again = zariski_decompose(dec.P, data)
    assert again.P == dec.P and again.N == ()


def test_random_certificates_and_idempotence():
    rng = random.Random(2026)
    for _ in range(50):
        data = random_surface(rng)
        D = random_effective(rng, data)
        check_certificates(D, data, zariski_decompose(D, data))


def test_order_independence():
    rng = random.Random(4)
    for _ in range(20):
        data = random_surface(rng, curves=4)
        D = random_effective(rng, data)
        reordered = SurfaceData(data.form, tuple(reversed(data.candidates)),
                                tuple(reversed(data.candidate_names)))
        first = zariski_decompose(D, data)
        second = zariski_decompose(D, reordered)
        assert first.P == second.P
        assert first.negative_part(data) == second.negative_part(reordered)


def test_homogeneity():
    rng = random.Random(8)
    for _ in range(20):
        data = random_surface(rng)
        D = random_effective(rng, data)
        c = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        base, scaled = zariski_decompose(D, data), zariski_decompose(c * D, data)
        assert scaled.P == c * base.P
        assert scaled.N == tuple((i, c * a) for i, a in base.N)


def test_superadditivity():
    rng = random.Random(9)
    for _ in range(30):
        data = random_surface(rng)
        a, b = random_effective(rng, data), random_effective(rng, data)
        lhs = positive_product(a + b, a + b, data)
        rhs = (positive_product(a, a, data) + 2 * positive_product(a, b, data)
               + positive_product(b, b, data))
        assert lhs >= rhs


def test_surface_json_round_trip():
    data = two_curve_surface()
    again = SurfaceData.from_json(data.to_json())
    assert again.form == data.form and again.candidates == data.candidates
