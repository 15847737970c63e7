import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(autouse=True, scope="session")
def _table_cache(tmp_path_factory):
    import os

    old = os.environ.get("SEMISEP_CACHE")
    os.environ["SEMISEP_CACHE"] = str(tmp_path_factory.mktemp("cache"))
    yield
    if old is None:
        os.environ.pop("SEMISEP_CACHE", None)
    else:
        os.environ["SEMISEP_CACHE"] = old
