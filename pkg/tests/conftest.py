import pytest

from mapgerm import invariant_report, load_germ_spec, validate_map_germ
from mapgerm.catalog import get_entry


@pytest.fixture(scope="session")
def catalog_germ():
    cache = {}

    def _get(name):
        if name not in cache:
            cache[name] = validate_map_germ(load_germ_spec(get_entry(name).spec))
        return cache[name]

    return _get


@pytest.fixture(scope="session")
def catalog_report(catalog_germ):
    cache = {}

    def _get(name):
        if name not in cache:
            cache[name] = invariant_report(catalog_germ(name))
        return cache[name]

    return _get
