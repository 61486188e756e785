"""
The verification gate: one test per criterion, same functions that back
`weaksort verify`.  Every check is exact.
"""
import pytest

from weaksort.acceptance import CRITERIA


@pytest.mark.parametrize(
    "name,check", CRITERIA, ids=[name.replace(" ", "-") for name, _ in CRITERIA]
)
def test_criterion(name, check, capsys):
    check()
    with capsys.disabled():
        print(f"PASS {name}")
