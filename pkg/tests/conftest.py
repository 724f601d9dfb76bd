import pytest

from contractfree.enumeration import SpaceCache


@pytest.fixture(scope="session")
def space_cache():
    """One enumeration cache shared by the whole run; levels build lazily."""
    return SpaceCache()
