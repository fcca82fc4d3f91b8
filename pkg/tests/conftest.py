import pytest

from zumkeller.scan import survey_range


@pytest.fixture(scope="session")
def survey_1e6():
    """One shared full pass over 1..10^6; several acceptance criteria
    read different facets of the same survey."""
    return survey_range(1, 10**6)
