import os

import pytest
from hypothesis import settings

from jacklab import symfunc

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session", autouse=True)
def jack_cache_dir(tmp_path_factory):
    """Keep the on-disk Jack cache of the test run out of the user's home."""
    path = tmp_path_factory.mktemp("jackcache")
    symfunc.set_default_cache(symfunc.JackCache(str(path)))
    yield path
