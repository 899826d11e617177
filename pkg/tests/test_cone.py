import pytest

from models.cone import cone_contains, cone_decompose, nearly_uniform_nef_generators
from models.divisor import DivisorClass, Triple


def combine(coefficients):
    d = a = b = 0
    for c, g in zip(coefficients, nearly_uniform_nef_generators()):
        d, a, b = d + c * g.d, a + c * g.a, b + c * g.b
    return Triple(d, a, b)


def test_generators_are_nef_and_monotone(cohomology):
    for g in nearly_uniform_nef_generators():
        assert cone_contains(g)
        assert g.to_divisor().is_monotone()
        assert cohomology.is_nef(g.to_divisor())


def test_uniform_sextic_multiple_is_nef(cohomology):
    assert cone_contains(Triple(17, 6, 6))
    assert cohomology.is_nef(DivisorClass(17, [6] * 8))
    assert not cohomology.is_nef(DivisorClass.exceptional(1))


@pytest.mark.parametrize("triple", [Triple(2, 1, 0), Triple(5, 2, 0), Triple(3, 1, 2), Triple(16, 6, 6)])
def test_outside_points(triple):
    assert not cone_contains(triple)
    assert cone_decompose(triple) is None


def test_decompose_reconstructs():
    for triple in [Triple(17, 6, 6), Triple(19, 7, 2), Triple(40, 14, 9), Triple(0, 0, 0)]:
        coefficients = cone_decompose(triple)
        assert coefficients is not None and min(coefficients) >= 0
        assert combine(coefficients) == triple


def test_decompose_large_degree():
    # 10 L + 25 (8, 3, 0) + 30 (11, 4, 3) + 20 (17, 6, 6)
    triple = Triple(880, 315, 210)
    coefficients = cone_decompose(triple)
    assert coefficients is not None and min(coefficients) >= 0
    assert combine(coefficients) == triple
    assert cone_decompose(Triple(1000, 375, 200)) is None


def test_lattice_points_are_generated():
    for d in range(41):
        for a in range(d + 1):
            for b in range(a + 1):
                triple = Triple(d, a, b)
                assert cone_contains(triple) == (cone_decompose(triple) is not None), triple


def test_membership_agrees_with_nefness(cohomology):
    for d in range(0, 25):
        for a in range(0, d // 2 + 2):
            for b in range(0, a + 1):
                triple = Triple(d, a, b)
                assert cone_contains(triple) == cohomology.is_nef(triple.to_divisor()), triple
