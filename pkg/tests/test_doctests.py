from __future__ import annotations

import doctest
import importlib
import pkgutil

import pytest

import alcoves

MODULES = sorted(m.name for m in pkgutil.iter_modules(alcoves.__path__, "alcoves."))


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    result = doctest.testmod(importlib.import_module(name))
    assert result.failed == 0
