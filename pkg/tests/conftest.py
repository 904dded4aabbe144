import pytest

from fockr import cache
from fockr.params import symbolic_params
from fockr.ratfunc import RatFunc


@pytest.fixture(scope="session")
def P():
    return symbolic_params()


@pytest.fixture
def tmp_cache(tmp_path):
    cache.set_cache_dir(tmp_path / "cache")
    yield tmp_path / "cache"
    cache.set_cache_dir(None)


def parse(text: str) -> RatFunc:
    """Build a RatFunc from a printed expression such as ``(q^2 - 1)/(q*t)``."""
    ns = {name: RatFunc.var(name) for name in "qtuv"}
    return eval(text.replace("^", "**"), {"__builtins__": {}}, ns)
