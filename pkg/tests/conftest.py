"""
Общие фикстуры тестов
"""

from pathlib import Path

import numpy as np
import pytest

from neil_algebra.hardy_alpha import Alpha, canonicalize_alpha

TEST_FILES = Path(__file__).parent.parent / "test_files"


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def files() -> Path:
    return TEST_FILES


def random_alpha(rng) -> Alpha:
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return canonicalize_alpha(v[0], v[1])
