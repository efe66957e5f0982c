import pytest

from hhsum import config


@pytest.fixture(autouse=True)
def _restore_config():
    saved = config.get_config()
    yield
    config.set_config(saved)
