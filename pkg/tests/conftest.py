import pytest

from asai_local.settings import reset_settings


@pytest.fixture(autouse=True)
def default_settings():
    reset_settings()
