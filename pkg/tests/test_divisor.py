import numpy as np
import pytest
from marshmallow import ValidationError

from dto.divisor_dto import DivisorClassSchema
from models.divisor import (
    CurveKind,
    DivisorClass,
    Triple,
    canonical_class,
    cremona,
    intersect,
    monotone_normalize,
    weyl_orbit,
)
from repositories.curve_repository import exceptional_curves, get_curve_repository, square_zero_curves

L = DivisorClass.line()
E1, E2, E8 = (DivisorClass.exceptional(i) for i in (1, 2, 8))
K = canonical_class()


def random_classes(n, seed=7, d_range=(-5, 20), m_range=(-3, 8)):
    rng = np.random.default_rng(seed)
    return [
        DivisorClass(int(rng.integers(*d_range)), [int(x) for x in rng.integers(*m_range, size=8)])
        for _ in range(n)
    ]


def test_intersection_form():
    assert intersect(L, L) == 1
    assert intersect(E1, E2) == 0
    assert intersect(E1, E1) == -1
    assert intersect(K, K) == 1
    assert K == DivisorClass(-3, [-1] * 8)


def test_parse_pads_and_round_trips_text():
    F = DivisorClass.parse("9 3 3 3")
    assert F == DivisorClass(9, [3, 3, 3, 0, 0, 0, 0, 0])
    assert F.to_text() == "9 3 3 3 0 0 0 0 0"
    assert DivisorClass.parse(F.to_text()) == F


@pytest.mark.parametrize("text", ["", "1 2 x", "1 1 1 1 1 1 1 1 1 1"])
def test_parse_rejects_bad_input(text):
    with pytest.raises(ValidationError):
        DivisorClass.parse(text)


def test_schema_loads_divisor():
    assert DivisorClassSchema().load({"d": "3", "m": ["1", "1"]}) == DivisorClass(3, [1, 1])
    with pytest.raises(ValidationError):
        DivisorClassSchema().load({"d": 3, "m": [1] * 9})


def test_monotone_normalize():
    F = DivisorClass(5, [1, 3, 2, 0, 0, 0, 0, 0])
    G, permutation = monotone_normalize(F)
    assert G == DivisorClass(5, [3, 2, 1, 0, 0, 0, 0, 0])
    assert G.restore(permutation) == F

    already = DivisorClass(4, [2, 2, 1])
    assert monotone_normalize(already) == (already, tuple(range(8)))


def test_monotone_normalize_restores_random_classes():
    for F in random_classes(50):
        G, permutation = monotone_normalize(F)
        assert G.is_monotone()
        assert G.restore(permutation) == F


def test_cremona():
    assert cremona(E8, 1, 2, 3) == E8
    assert cremona(L, 1, 2, 3) == DivisorClass(2, [1, 1, 1])
    assert cremona(E1, 1, 2, 3) == DivisorClass(1, [0, 1, 1])
    with pytest.raises(ValidationError):
        cremona(L, 1, 1, 2)


def test_cremona_is_an_isometry_fixing_k():
    assert cremona(K, 2, 5, 7) == K
    for F, G in zip(random_classes(30), random_classes(30, seed=8)):
        assert cremona(cremona(F, 1, 4, 6), 1, 4, 6) == F
        assert intersect(cremona(F, 1, 4, 6), cremona(G, 1, 4, 6)) == intersect(F, G)


def test_table_sizes_and_adjunction():
    assert len(exceptional_curves()) == 240
    assert len(square_zero_curves()) == 2160
    for curve in exceptional_curves():
        assert curve.cls.square() == -1 and curve.cls.dot(K) == -1
        assert intersect(-K, curve.cls) == 1
    for curve in square_zero_curves():
        assert curve.cls.square() == 0 and curve.cls.dot(K) == -2


def test_tables_are_weyl_orbits():
    assert weyl_orbit(E1) == {c.cls for c in exceptional_curves()}
    assert weyl_orbit(L - E1) == {c.cls for c in square_zero_curves()}


def test_table_order_starts_with_the_exceptional_divisors():
    curves = get_curve_repository().exceptional()
    assert [c.cls for c in curves[:8]] == [DivisorClass.exceptional(i) for i in range(1, 9)]


@pytest.mark.parametrize(
    "cls, lam, Lam",
    [
        (DivisorClass(0, [-1]), 0, 0),
        (DivisorClass(1, [1, 1]), 0, 1),
        (DivisorClass(3, [2, 1, 1, 1, 1, 1, 1]), 1, 2),
        (DivisorClass(6, [3, 2, 2, 2, 2, 2, 2, 2]), 3, 3),
    ],
)
def test_curve_thresholds(cls, lam, Lam):
    curve = get_curve_repository().find(cls, CurveKind.EXCEPTIONAL)
    assert (curve.lam, curve.Lam) == (lam, Lam)


def test_products_match_intersections():
    repository = get_curve_repository()
    F = DivisorClass(153, [54] * 8)
    products = repository.products(F)
    assert [int(p) for p in products] == [F.dot(c.cls) for c in repository.exceptional()]
    huge = DivisorClass(10 ** 15, [10 ** 14] * 8)
    assert int(repository.products(huge).min()) == min(huge.dot(c.cls) for c in repository.exceptional())


def test_triple_round_trip():
    triple = Triple(17, 6, 6)
    assert Triple.from_divisor(triple.to_divisor()) == triple
    with pytest.raises(ValidationError):
        Triple.from_divisor(DivisorClass(5, [2, 1]))
