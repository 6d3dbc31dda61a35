# ----------------------------------------------------------
# Domination Lab
# File: tests/conftest.py
# ----------------------------------------------------------
# Description:
# Shared fixtures:
#   • isolated LabConfig rooted in tmp_path (no DOMLAB_* leakage)
#   • seeded numpy random generator for random graph corpora
#   • small reference graphs
#   • a fresh stability cache per test
# ----------------------------------------------------------

import os

import networkx as nx
import numpy as np
import pytest

from domlab.certification import clear_stability_cache
from domlab.graph_core import Graph, from_networkx
from domlab.lab_config import LabConfig


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Drop DOMLAB_* variables so defaults are predictable."""
    for name in list(os.environ):
        if name.startswith("DOMLAB_"):
            monkeypatch.delenv(name, raising=False)
    yield


@pytest.fixture(autouse=True)
def fresh_stability_cache():
    clear_stability_cache()
    yield
    clear_stability_cache()


@pytest.fixture
def lab_config(tmp_path):
    config = LabConfig(base_dir=tmp_path, claim_budget=60, global_budget=600)
    config.validate()
    return config


@pytest.fixture
def rng():
    return np.random.default_rng(20251017)


def random_connected_graph(rng, n: int, p: float = 0.3, min_degree: int = 2) -> Graph:
    """Rejection-sample a connected G(n, p) graph with the given minimum degree."""
    while True:
        seed = int(rng.integers(0, 2**31 - 1))
        graph = nx.gnp_random_graph(n, p, seed=seed)
        if nx.is_connected(graph) and min(d for _, d in graph.degree()) >= min_degree:
            return from_networkx(graph)


def random_cubic_graph(rng, n: int) -> Graph:
    while True:
        seed = int(rng.integers(0, 2**31 - 1))
        graph = nx.random_regular_graph(3, n, seed=seed)
        if nx.is_connected(graph):
            return from_networkx(graph)


@pytest.fixture
def petersen():
    return from_networkx(nx.petersen_graph())
