import pytest

import nilbu


@pytest.fixture(scope="session")
def sweep16():
    """The standard sweep: every family row, b from b_min to b_min + 16."""
    return list(nilbu.sweep(16))
