import numpy as np
import pytest

from clone_entanglement.config import SettingsSingleton


@pytest.fixture
def rng():
    return np.random.default_rng(20020315)


@pytest.fixture(autouse=True)
def fresh_settings():
    SettingsSingleton.reset()
    yield
    SettingsSingleton.reset()
