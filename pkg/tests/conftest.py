import random

import pytest

from rankred.matroids import PartitionModel


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def three_block_model():
    return PartitionModel.from_lists([([0, 1, 2], 2), ([3, 4], 2), ([5, 6, 7, 8], 1)])
