import pytest
from hypothesis import settings

from lascoux.psi_engine import dense_psi_table

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def dense22():
    """psi of every subset of [22]; about 13 s and a few hundred MB, built once."""
    return dense_psi_table(22)
