from config.logging_config import reset_logging
from model.ubbs1_params import Ubbs1Params
from service.estimation_service import EstimationService
from service.sampling_service import SamplingService
from service.specfun_service import SpecfunService
from service.ubbs1_service import Ubbs1Service

import pytest


@pytest.fixture(autouse=True)
def _isolated_logging():
    yield
    reset_logging()


@pytest.fixture
def specfun():
    return SpecfunService()


@pytest.fixture
def ubbs1():
    return Ubbs1Service()


@pytest.fixture
def sampling():
    return SamplingService()


@pytest.fixture
def estimation():
    return EstimationService()


@pytest.fixture
def symmetric_params():
    return Ubbs1Params(0.5, 0.5, 1.0, 1.0, 0.0)


@pytest.fixture
def correlated_params():
    return Ubbs1Params(0.5, 0.5, 1.0, 1.0, 0.25)


@pytest.fixture
def bimodal_params():
    return Ubbs1Params(1.6, 0.7, 1.1, 0.9, 0.6)


@pytest.fixture
def draw(sampling):
    """Fábrica de amostras UBBS1 com semente fixa."""
    def _draw(params, n, seed):
        return sampling.sample_ubbs1(n, params, sampling.rng(seed))
    return _draw
