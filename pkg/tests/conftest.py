import numpy as np
import pytest

from domain.chain import ChainParams, build_correlations


# Reference mode sums of the four-site chain at alpha = 0.9
G0 = 0.7359692
G1 = 0.3046002
H0 = 0.4618291
EPSILON = 0.9236581


@pytest.fixture
def small_chain():
    return ChainParams(4, 0.9)


@pytest.fixture
def decoupled_chain():
    return ChainParams(4, 0.0)


@pytest.fixture(scope="session")
def chain_100():
    params = ChainParams(100, 0.9)
    return params, build_correlations(params)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
