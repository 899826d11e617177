import numpy as np
import pytest

from models.divisor import DivisorClass, monotone_normalize
from models.scheme import FatPointScheme

L = DivisorClass.line()


@pytest.mark.slow
def test_random_classes(cohomology, mu_rank_service):
    rng = np.random.default_rng(20011)
    for _ in range(10_000):
        F = DivisorClass(int(rng.integers(-60, 61)), [int(x) for x in rng.integers(-25, 26, size=8)])
        assert cohomology.h0(F) - cohomology.h1(F) + cohomology.h2(F) == cohomology.chi(F)
        report = mu_rank_service.mu_rank(F)
        assert report.cok - report.ker == cohomology.h0(F + L) - 3 * cohomology.h0(F)
        shuffled = mu_rank_service.mu_rank(F.permuted([int(i) for i in rng.permutation(8)]))
        assert (shuffled.ker, shuffled.cok) == (report.ker, report.cok)
        G, _ = monotone_normalize(F)
        if cohomology.h0(G) > 0:
            ker_bound, cok_bound = mu_rank_service.ql_bounds(G)
            assert report.ker <= ker_bound
            if cok_bound is not None:
                assert report.cok <= cok_bound


@pytest.mark.slow
def test_resolutions_are_permutation_invariant(resolution_service):
    rng = np.random.default_rng(20012)
    for _ in range(200):
        mults = [int(x) for x in rng.integers(0, 20, size=8)]
        expected = resolution_service.resolution(FatPointScheme(tuple(mults)))
        rng.shuffle(mults)
        assert resolution_service.resolution(FatPointScheme(tuple(mults))) == expected
