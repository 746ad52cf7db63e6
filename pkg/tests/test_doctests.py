import doctest

import pytest

import coxsort.coxeter
import coxsort.hecke
import coxsort.homology
import coxsort.totalpos


@pytest.mark.parametrize("module", [
    coxsort.coxeter,
    coxsort.hecke,
    coxsort.homology,
    coxsort.totalpos,
], ids=lambda m: m.__name__)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.attempted > 0
    assert result.failed == 0
