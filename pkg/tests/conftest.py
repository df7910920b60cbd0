import pytest

from dunkl_deng_fan.model.params import DunklParams, MolecularParams


@pytest.fixture
def section_iv():
    """Well of the reference study: D_e = 15, lambda = 0.5, r_e = 1, m = 1."""
    return MolecularParams()


@pytest.fixture
def ground():
    return DunklParams(mu=0.0, ell=0)
