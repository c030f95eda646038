import random

import pytest

from minrank.field import GF, Q


@pytest.fixture
def rng():
    return random.Random(20061015)


FIELDS = [Q, GF(2), GF(3), GF(5), GF(11)]
