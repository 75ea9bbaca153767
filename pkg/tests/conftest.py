import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hesskit import HessenbergFunction


@pytest.fixture
def h334() -> HessenbergFunction:
    return HessenbergFunction((3, 3, 3, 4))


def springer_h(n: int) -> HessenbergFunction:
    return HessenbergFunction(range(1, n + 1))
