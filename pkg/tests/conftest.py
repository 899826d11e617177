import os

import pytest

from services.cohomology_service import CohomologyService
from services.divisor_service import DivisorService
from services.mu_rank_service import MuRankService
from services.oracle_service import EngineAdapter, OracleService
from services.resolution_service import ResolutionService

TEST_CONFIG = {
    "LOG_LEVEL": "WARNING",
    "LOG_FILE": None,
    "PRIME": 1_000_003,
    "SEED": 20011,
    "SEED_COUNT": 2,
    "WORKERS": 2,
}


def pytest_collection_modifyitems(config, items):
    if os.environ.get("FATPOINTS_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="set FATPOINTS_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def cohomology():
    return CohomologyService()


@pytest.fixture(scope="session")
def mu_rank_service(cohomology):
    return MuRankService(cohomology)


@pytest.fixture(scope="session")
def resolution_service(mu_rank_service):
    return ResolutionService(mu_rank_service)


@pytest.fixture(scope="session")
def divisor_service(cohomology):
    return DivisorService(cohomology.repository)


@pytest.fixture(scope="session")
def oracle(resolution_service):
    return OracleService(EngineAdapter(resolution_service))


@pytest.fixture
def config():
    return dict(TEST_CONFIG)
