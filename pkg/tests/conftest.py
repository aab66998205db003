import pytest

from chocbar.solver import SolveCache


@pytest.fixture(scope="session")
def cache() -> SolveCache:
    """One shared memo table for the whole run; results are cache-transparent."""
    return SolveCache()
