"""
Structure theory and direct counting for the avoiders of the fifth triple
{3214, 3241, 4213}.

Every nonempty permutation p splits at a horizontal line just below its last
entry: the *upper* part holds the entries >= p_n (the last entry included),
the *lower* part the rest.  The upper part splits again at the maximum n into
a head (entries weakly left of n) and a tail.  An entry is a *key* if it lies
in the upper head or is a left-to-right minimum of the upper tail.  The
lower tail collects the lower entries positioned after the first upper entry.

p avoids the triple exactly when four conditions hold:

    1. the upper part (standardized) avoids 213;
    2. the lower part avoids 321;
    3. the lower tail is increasing;
    4. each maximal block of lower entries that are contiguous in p sits
       immediately left of a key entry (except the initial block, which
       starts the permutation).

Counting by a = |upper|, k = #keys, i = |lower tail| turns the
characterization into the closed formula `count_avoiders`, built from
generalized Catalan numbers C_{n,k} (see `series.gen_catalan`) and the
counts `keyed_213_count` / `tail_321_count`.  `construct` inverts the
analysis: it assembles the unique avoider from a choice of upper pattern,
lower permutation, and block distribution, and is a bijection onto the
avoiders with 3 <= a <= n-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .counting import enumerate_avoiders
from .perms import TRIPLES, Perm, contains, standardize
from .series import catalan, gen_catalan


def _comb0(m: int, r: int) -> int:
    """Binomial that vanishes outside 0 <= r <= m (m may go negative)."""
    if m < 0 or r < 0 or r > m:
        return 0
    return comb(m, r)


@dataclass(frozen=True)
class Decomposition:
    """The split of a permutation used by the structure theorem.  All parts
    are tuples of (position, value) pairs in position order."""

    perm: Perm
    upper: tuple[tuple[int, int], ...]
    lower: tuple[tuple[int, int], ...]
    upper_head: tuple[tuple[int, int], ...]
    upper_tail: tuple[tuple[int, int], ...]
    lower_tail: tuple[tuple[int, int], ...]
    keys: tuple[tuple[int, int], ...]
    blocks: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def a(self) -> int:
        """Length of the upper part."""
        return len(self.upper)

    @property
    def k(self) -> int:
        """Number of key entries."""
        return len(self.keys)

    @property
    def i(self) -> int:
        """Number of lower entries after the first key entry."""
        return len(self.lower_tail)

    @property
    def key_values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.keys)

    @property
    def key_positions(self) -> tuple[int, ...]:
        return tuple(pos for pos, _ in self.keys)


def decompose(p: Perm) -> Decomposition:
    """Split any nonempty permutation (avoider or not) at its last entry."""
    n = len(p)
    if n == 0:
        raise ValueError("cannot decompose the empty permutation")
    last = p[-1]
    upper = tuple((i + 1, v) for i, v in enumerate(p) if v >= last)
    lower = tuple((i + 1, v) for i, v in enumerate(p) if v < last)
    n_pos = p.index(n) + 1
    upper_head = tuple((pos, v) for pos, v in upper if pos <= n_pos)
    upper_tail = tuple((pos, v) for pos, v in upper if pos > n_pos)
    first_upper_pos = upper[0][0]
    lower_tail = tuple((pos, v) for pos, v in lower if pos > first_upper_pos)
    keys = list(upper_head)
    low = n + 1
    for pos, v in upper_tail:
        if v < low:
            keys.append((pos, v))
            low = v
    blocks: list[tuple[tuple[int, int], ...]] = []
    current: list[tuple[int, int]] = []
    prev_pos = None
    for pos, v in lower:
        if prev_pos is not None and pos != prev_pos + 1:
            blocks.append(tuple(current))
            current = []
        current.append((pos, v))
        prev_pos = pos
    if current:
        blocks.append(tuple(current))
    return Decomposition(
        perm=p,
        upper=upper,
        lower=lower,
        upper_head=upper_head,
        upper_tail=upper_tail,
        lower_tail=lower_tail,
        keys=tuple(keys),
        blocks=tuple(blocks),
    )


def check_structure(p: Perm) -> tuple[bool, str | None]:
    """
    Evaluate the four structural conditions; returns (True, None) or
    (False, name of the first violated condition).  Agreement with
    avoidance of the fifth triple is the structure theorem under test.
    """
    d = decompose(p)
    upper_vals = tuple(v for _, v in d.upper)
    if contains(standardize(upper_vals), (2, 1, 3)):
        return False, "upper part contains 213"
    lower_vals = tuple(v for _, v in d.lower)
    if contains(lower_vals, (3, 2, 1)):
        return False, "lower part contains 321"
    tail_vals = [v for _, v in d.lower_tail]
    if any(a > b for a, b in zip(tail_vals, tail_vals[1:])):
        return False, "lower tail not increasing"
    key_positions = set(d.key_positions)
    lower_positions = {pos for pos, _ in d.lower}
    for pos, _ in d.lower:
        nxt = pos + 1
        if nxt not in lower_positions and nxt not in key_positions:
            return False, "lower block not flush against a key entry"
    return True, None


# --------------------------------------------------------------------------
# counting ingredients


def keyed_213_count(n: int, k: int) -> int:
    """
    Number of 213-avoiding permutations of 1..n ending in 1 that have k key
    entries:  sum_j binom(k-2, j-1) * C_{n-k, k-2-j}.
    """
    if n < 2:
        raise ValueError("defined for n >= 2")
    return sum(
        _comb0(k - 2, j - 1) * gen_catalan(n - k, k - 2 - j) for j in range(1, n)
    )


def keyed_213_count_by_max_position(n: int, j: int, k: int) -> int:
    """
    Same count, refined by the position j of the maximum entry n:
    binom(k-2, j-1) * C_{n-k, k-2-j}.  At j = 1 (maximum first) this is
    C_{n-k, k-3}.
    """
    return _comb0(k - 2, j - 1) * gen_catalan(n - k, k - 2 - j)


def keyed_213_count_brute(n: int, k: int, j: int | None = None) -> int:
    """
    Independent oracle for the two counts above, by enumeration of the
    213-avoiders ending in 1 (optionally restricted to maximum at position j).
    """
    total = 0
    for q in enumerate_avoiders(n, [(2, 1, 3)]):
        if q[-1] != 1:
            continue
        if j is not None and q.index(n) + 1 != j:
            continue
        if decompose(q).k == k:
            total += 1
    return total


def tail_321_count(n: int, i: int) -> int:
    """
    Number of 321-avoiding permutations of 1..n whose last i entries are
    increasing: C_{n-i, i}.
    """
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    return gen_catalan(n - i, i)


def tail_321_count_brute(n: int, i: int) -> int:
    """Oracle for `tail_321_count` by enumeration."""
    avoiders = enumerate_avoiders(n, [(3, 2, 1)])
    return sum(1 for q in avoiders if _tail_increasing(q, i))


def _tail_increasing(q: Perm, i: int) -> bool:
    tail = q[len(q) - i :]
    return all(a < b for a, b in zip(tail, tail[1:]))


# --------------------------------------------------------------------------
# the counting formulas


def count_by_upper_length(n: int, a: int) -> int:
    """
    Number of avoiders of the fifth triple of length n whose upper part has
    length a, for the three boundary cases a in {1, 2, n}: each equals
    C_{n-1}.  (a=1 means the last entry is n and the rest avoids 321; a=2
    means the last entry is n-1; a=n means the last entry is 1 and the whole
    permutation avoids 213.)
    """
    if n < 3:
        raise ValueError("the three cases are distinct only for n >= 3")
    if a not in (1, 2, n):
        raise ValueError(f"a must be 1, 2 or n={n}")
    return catalan(n - 1)


def count_avoiders(n: int) -> int:
    """
    |S_n({3214, 3241, 4213})| by the closed formula

        3 C_{n-1} + sum_{a=3}^{n-1} sum_{k=3}^{a} sum_{j=1}^{a-1}
            binom(k-2, j-1) C_{a-k, k-j-2} C_{n-a, k-1}

    for n >= 3, with 1, 1, 2 directly for n = 0, 1, 2.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n <= 2:
        return (1, 1, 2)[n]
    total = 3 * catalan(n - 1)
    for a in range(3, n):
        for k in range(3, a + 1):
            tail_factor = gen_catalan(n - a, k - 1)
            if tail_factor:
                total += tail_factor * keyed_213_count(a, k)
    return total


def count_indecomposable(n: int) -> int:
    """
    Number of indecomposable avoiders of the fifth triple of length n:
    1, 1, 3, 11, 43, 173, 707, ... for n = 1, 2, 3, ... (OEIS A026671).

    Same shape as `count_avoiders` with the boundary term replaced by
    C_{n-2} + C_{n-1} and the lower-part factor C_{b-i,i} tightened to
    C_{b-i,i-1} (lower prefixes must never form an initial segment of the
    positive integers, which would split off a summand).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return 1
    total = catalan(n - 2) + catalan(n - 1)
    for a in range(3, n):
        b = n - a
        for k in range(3, a + 1):
            inner = sum(
                gen_catalan(b - i, i - 1) * _comb0(i + k - 2, i)
                for i in range(b + 1)
            )
            if inner:
                total += keyed_213_count(a, k) * inner
    return total


# --------------------------------------------------------------------------
# constructive generation


def construct(
    n: int,
    upper_pattern: Perm,
    lower_perm: Perm,
    distribution: tuple[int, ...],
) -> Perm:
    """
    Assemble the unique avoider of length n from:

    upper_pattern
        a 213-avoiding permutation of length a ending in 1 (the upper part,
        standardized); its key count k fixes the number of blocks;
    lower_perm
        a 321-avoiding permutation of length b = n - a whose last
        i = sum(distribution) entries are increasing;
    distribution
        a weak composition of i into k - 1 parts: how many of those final
        increasing entries go immediately before each non-first key.

    The first b - i lower entries open the permutation (before the first
    upper entry); the upper pattern is shifted up by b.  Raises ValueError
    on any incompatible combination.
    """
    a = len(upper_pattern)
    b = n - a
    if not 3 <= a <= n - 1:
        raise ValueError(f"need 3 <= len(upper_pattern) <= n-1, got a={a}, n={n}")
    if upper_pattern[-1] != 1:
        raise ValueError("upper pattern must end in 1")
    if contains(upper_pattern, (2, 1, 3)):
        raise ValueError("upper pattern must avoid 213")
    if len(lower_perm) != b:
        raise ValueError(f"lower permutation must have length {b}")
    if contains(lower_perm, (3, 2, 1)):
        raise ValueError("lower permutation must avoid 321")
    i = sum(distribution)
    if any(part < 0 for part in distribution):
        raise ValueError("distribution parts must be >= 0")
    if i > b:
        raise ValueError(f"distribution places {i} entries but only {b} available")
    if not _tail_increasing(lower_perm, i):
        raise ValueError(f"last {i} entries of the lower permutation must increase")
    keys = decompose(upper_pattern).key_positions
    k = len(keys)
    if k < 3:
        raise ValueError(f"upper pattern has only {k} keys; need at least 3")
    if len(distribution) != k - 1:
        raise ValueError(f"distribution needs k-1 = {k - 1} parts")
    shifted = tuple(v + b for v in upper_pattern)
    head = list(lower_perm[: b - i])
    tail = lower_perm[b - i :]
    blocks: list[tuple[int, ...]] = []
    at = 0
    for size in distribution:
        blocks.append(tail[at : at + size])
        at += size
    out: list[int] = head
    block_index = 0
    non_first_keys = set(keys[1:])
    for pos in range(1, a + 1):
        if pos in non_first_keys:
            out.extend(blocks[block_index])
            block_index += 1
        out.append(shifted[pos - 1])
    return tuple(out)


def brute_force_count(n: int) -> int:
    """|S_n| of the fifth triple by enumeration (cross-check at small n)."""
    return len(enumerate_avoiders(n, TRIPLES["pi5"]))
