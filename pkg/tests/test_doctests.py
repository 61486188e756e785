"""Run the docstring examples sprinkled through the library modules."""
import doctest

import pytest

import weaksort.counting
import weaksort.perms
import weaksort.series


@pytest.mark.parametrize(
    "module", [weaksort.perms, weaksort.counting, weaksort.series]
)
def test_module_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
