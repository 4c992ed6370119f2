import sys
from pathlib import Path
from random import Random

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from brickpart import random_split_partition

CORPUS_SEED = 20250810


def build_corpus(count_2d: int = 120, count_3d: int = 80):
    """Deterministic randomized recursive-split corpus: valid partitions in
    d = 2 and d = 3 with small rational coordinates."""
    rng = Random(CORPUS_SEED)
    corpus = [random_split_partition(rng, 2, rng.randrange(3, 11)) for _ in range(count_2d)]
    corpus += [random_split_partition(rng, 3, rng.randrange(3, 9)) for _ in range(count_3d)]
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
