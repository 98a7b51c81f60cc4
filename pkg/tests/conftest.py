import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def catalogue_records():
    """graph6 records of the hand-encoded fixture file, without newlines."""
    return [
        line.encode("ascii")
        for line in (DATA / "catalogue.g6").read_text().splitlines()
        if line
    ]


@pytest.fixture(scope="session")
def graphs_by_n():
    """Memoised access to the enumeration stream, shared by the whole run."""
    from rep3.enumeration import enumerate_graphs

    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = list(enumerate_graphs(n))
        return cache[n]

    return get
