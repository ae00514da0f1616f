import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def rng():
    return random.Random(20250809)


@pytest.fixture
def data_dir():
    return DATA_DIR
