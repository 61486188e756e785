"""
Table recurrences counting the avoiders of the first three triples.

For a class T in {pi1, pi2, pi3} let a_n(i) be the number of avoiders of
length n with first entry i, and let b_n(i) refine by the second entry:

    pi1: b_n(i) counts avoiders starting (i, n-1)
    pi2: b_n(i) counts avoiders starting (i, i+1)
    pi3: b_n(i) counts avoiders starting (i, n)

All three classes satisfy the same interior recurrence for 1 <= i <= n-3,

    a_n(i) = a_{n-1}(1) + ... + a_{n-1}(i) + b_n(i)
    b_n(i) = b_{n-1}(1) + ... + b_{n-1}(i)

with boundary values a_n(n-2) = a_n(n-1) = a_n(n) = a_{n-1} (the full count
one level down) and, writing a_{n-2} for the count two levels down:

    pi1: b_n(n-1) = 0,  b_n(n-2) = b_n(n) = a_{n-2}
    pi2, pi3: b_n(n) = 0,  b_n(n-2) = b_n(n-1) = a_{n-2}

Prefix sums make one level O(n) arithmetic operations, so a full run to
nmax costs O(nmax^2).  Entries grow like 5^n; Python integers keep them
exact.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perms import TRIPLES
from .counting import enumerate_avoiders

CLASS_IDS = ("pi1", "pi2", "pi3")


@dataclass(frozen=True)
class RecurrenceTable:
    """Vectors a_n(1..n) and b_n(1..n) for one class at one length."""

    class_id: str
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def total(self) -> int:
        """|S_n(T)|, the sum of the a-vector (1 for n = 0)."""
        return sum(self.a) if self.n > 0 else 1


def _second_entry(class_id: str, n: int, i: int) -> int:
    """The second entry whose count b_n(i) tracks, given first entry i."""
    if class_id == "pi1":
        return n - 1
    if class_id == "pi2":
        return i + 1
    if class_id == "pi3":
        return n
    raise ValueError(f"unknown class {class_id!r}; choose from {CLASS_IDS}")


def seed_tables(class_id: str) -> list[RecurrenceTable]:
    """Tables for n = 0, 1, 2, computed directly from the definitions."""
    _second_entry(class_id, 3, 1)  # validate class_id
    # b_2(i) counts the single length-2 avoider starting (i, second(i));
    # only (2,1) qualifies for pi1, only (1,2) for pi2 and pi3.
    b2 = (0, 1) if class_id == "pi1" else (1, 0)
    return [
        RecurrenceTable(class_id, 0, (), ()),
        RecurrenceTable(class_id, 1, (1,), (0,)),
        RecurrenceTable(class_id, 2, (1, 1), b2),
    ]


def advance(table: RecurrenceTable, prev_total: int) -> RecurrenceTable:
    """
    The table one level up.  prev_total must be the total of the table one
    level below `table` (needed by the boundary values).
    """
    n = table.n + 1
    if n < 3:
        raise ValueError("advance applies from n=3 up; seed smaller tables directly")
    cid = table.class_id
    b = [0] * n
    run = 0
    for i in range(1, n - 2):  # interior 1 <= i <= n-3
        run += table.b[i - 1]
        b[i - 1] = run
    if cid == "pi1":
        b[n - 3] = prev_total      # b_n(n-2)
        b[n - 2] = 0               # b_n(n-1)
        b[n - 1] = prev_total      # b_n(n)
    else:
        b[n - 3] = prev_total
        b[n - 2] = prev_total
        b[n - 1] = 0
    a = [0] * n
    run = 0
    for i in range(1, n - 2):
        run += table.a[i - 1]
        a[i - 1] = run + b[i - 1]
    a[n - 3] = a[n - 2] = a[n - 1] = table.total
    return RecurrenceTable(cid, n, tuple(a), tuple(b))


def tables_upto(class_id: str, nmax: int) -> list[RecurrenceTable]:
    """Tables for n = 0..nmax."""
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    out = seed_tables(class_id)[: nmax + 1]
    while len(out) <= nmax:
        out.append(advance(out[-1], out[-2].total))
    return out


def count_via_recurrence(class_id: str, nmax: int) -> list[int]:
    """[|S_0(T)|, ..., |S_nmax(T)|] from the recurrence; O(nmax^2) total."""
    return [t.total for t in tables_upto(class_id, nmax)]


def empirical_table(n: int, class_id: str) -> RecurrenceTable:
    """
    The same table computed by brute-force enumeration, for validating
    `advance`.  Only sensible at enumeration scale (n <= 10 or so).
    """
    _second_entry(class_id, 3, 1)
    avoiders = enumerate_avoiders(n, TRIPLES[class_id])
    a = [0] * n
    b = [0] * n
    for p in avoiders:
        i = p[0]
        a[i - 1] += 1
        if n >= 2 and p[1] == _second_entry(class_id, n, i):
            b[i - 1] += 1
    return RecurrenceTable(class_id, n, tuple(a), tuple(b))


def verify_kernel_identity(nmax: int):
    """
    Numerical check of the kernel-method identity tying the b-tables to the
    a-tables of class pi1:

        B(x) = x(sqrt(1-4x) - 1)/2 + (2x^2 + x - x*sqrt(1-4x))/2 * A(x)

    where A and B are the generating functions of the level totals sum_i
    a_n(i) and sum_i b_n(i).  Builds both sides as exact truncated series
    and returns (identity holds, residual series) at order nmax.
    """
    from fractions import Fraction

    from . import series

    if nmax < 2:
        raise ValueError("nmax must be >= 2")
    tabs = tables_upto("pi1", nmax)
    A = series.from_ints([t.total for t in tabs], nmax)
    B = series.from_ints([sum(t.b) for t in tabs], nmax)
    sq = series.sqrt_one_minus_4x(nmax)
    x = series.from_ints([0, 1], nmax)
    one = series.from_ints([1], nmax)
    half = Fraction(1, 2)
    rhs = (x * (sq - one)) * half + ((x * x * 2 + x - x * sq) * half) * A
    residual = B - rhs
    return residual.is_zero(), residual
