"""Run the usage examples embedded in the library docstrings."""

import doctest
import importlib

import pytest

_MODULE_NAMES = [
    "lyubeznik.betti",
    "lyubeznik.graph",
    "lyubeznik.oracle",
    "lyubeznik.parser",
    "lyubeznik.series",
    "lyubeznik.table",
    "lyubeznik.variety",
]


@pytest.mark.parametrize("name", _MODULE_NAMES)
def test_module_doctests(name):
    # importlib sidesteps the package re-exports, which shadow some
    # submodule attributes (lyubeznik.betti is the function).
    module = importlib.import_module(name)
    failures, _ = doctest.testmod(module, verbose=False)
    assert failures == 0
