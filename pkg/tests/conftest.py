import pytest

from nosql_advisor.advisor import load_canonical_bundle
from nosql_advisor.dataset import load_canonical


@pytest.fixture(scope="session")
def canonical():
    return load_canonical()


@pytest.fixture(scope="session")
def bundle():
    return load_canonical_bundle()
