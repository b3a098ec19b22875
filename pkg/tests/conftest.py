from __future__ import annotations

import functools

import pytest

from spstring.corpus import cycle, sp_all, theta_family


@functools.lru_cache(maxsize=None)
def small_corpus(max_n: int = 10) -> tuple:
    """Every transitive-edge-free SP graph up to ``max_n`` vertices, plus thetas and cycles."""
    graphs = list(sp_all(max_n))
    graphs += list(theta_family())
    graphs += [cycle(n) for n in range(3, 13)]
    return tuple(graphs)


@functools.lru_cache(maxsize=None)
def enumerated(max_n: int) -> tuple:
    return tuple(sp_all(max_n))


@pytest.fixture(scope="session")
def corpus10():
    return small_corpus(10)


@pytest.fixture(scope="session")
def corpus12():
    return enumerated(12)
