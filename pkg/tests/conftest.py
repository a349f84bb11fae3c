import pytest

from mseqcorr.field import build_field


def pytest_addoption(parser):
    parser.addoption("--long-run", action="store_true", default=False, help="run multi-minute checks (m = 22 search)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-run"):
        return
    skip = pytest.mark.skip(reason="needs --long-run")
    for item in items:
        if "long_run" in item.keywords:
            item.add_marker(skip)


_CACHE = {}


def field(k, **kw):
    key = (k, tuple(sorted(kw.items())))
    if key not in _CACHE:
        _CACHE[key] = build_field(k, **kw)
    return _CACHE[key]


@pytest.fixture(scope="session")
def get_field():
    return field
