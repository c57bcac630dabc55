import itertools
import random

import pytest

from muskit import Text, build_index, compute_mus


def all_texts(alphabet: bytes, max_len: int):
    """Every nonempty text over the alphabet up to max_len, as Text objects."""
    for length in range(1, max_len + 1):
        for combo in itertools.product(alphabet, repeat=length):
            yield Text(bytes(combo))


def random_text(rng: random.Random, alphabet: bytes, max_len: int) -> Text:
    n = rng.randint(1, max_len)
    return Text(bytes(rng.choice(alphabet) for _ in range(n)))


def mus_of(data: bytes):
    return compute_mus(build_index(Text(data)))


@pytest.fixture(scope="session", autouse=True)
def warm_numba():
    # compile the LCP kernel once so timed tests measure steady state
    build_index(Text(b"banana"))
