"""Shared fixtures and hypothesis strategies."""

import random

import pytest
from hypothesis import strategies as st

import corpus as corpus_module


@pytest.fixture(scope="session")
def expr_corpus():
    return corpus_module.corpus()


@st.composite
def variety_exprs(draw, max_dim=8):
    """Random valid variety expressions of dimension 1..max_dim."""
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    dim = draw(st.integers(min_value=1, max_value=max_dim))
    return corpus_module.random_expr(random.Random(seed), dim)
