import pytest

from motzkin import oracle


@pytest.fixture(scope="session")
def words_through():
    """Concatenated lexicographic enumeration up to a length, cached per session."""
    cache = {}

    def get(max_len: int):
        if max_len not in cache:
            cache[max_len] = [w for n in range(1, max_len + 1)
                              for w in oracle.enumerate_range(n)]
        return cache[max_len]

    return get
