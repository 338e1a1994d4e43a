import pytest

from helpers import worked_system


@pytest.fixture
def worked():
    return worked_system()
