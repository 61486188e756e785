"""
Permutations in one-line notation and the basic pattern-avoidance toolkit.

A permutation of length n is a tuple of the integers 1..n, each appearing
exactly once; the empty tuple is the (valid) permutation of length 0.  Values
and positions are 1-based throughout.  The text form is space-separated
one-line notation, e.g. "3 1 4 2" (the empty string for length 0).

A pattern is itself a permutation; p contains the pattern tau when some
subsequence of p is order-isomorphic to tau.  Pattern sets are frozensets of
patterns, acted on entrywise by the dihedral group of order eight generated
by reverse, complement, and inverse.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

Perm = tuple[int, ...]
PatternSet = frozenset[Perm]


def is_permutation(seq: Sequence[int]) -> bool:
    """
    Check that seq is a rearrangement of 1..n.

    >>> [is_permutation(s) for s in [(), (1,), (2, 1), (1, 1), (0, 1)]]
    [True, True, True, False, False]
    """
    return sorted(seq) == list(range(1, len(seq) + 1))


def as_perm(seq: Iterable[int]) -> Perm:
    """Coerce to a tuple and validate."""
    p = tuple(seq)
    if not is_permutation(p):
        raise ValueError(f"not a permutation of 1..n: {p!r}")
    return p


def parse_perm(text: str) -> Perm:
    """
    Parse space-separated one-line notation ("" gives the empty permutation).

    >>> parse_perm("3 1 4 2")
    (3, 1, 4, 2)
    """
    return as_perm(int(tok) for tok in text.split())


def format_perm(p: Perm) -> str:
    return " ".join(str(v) for v in p)


def parse_pattern_set(text: str) -> PatternSet:
    """Parse a semicolon-separated list of one-line permutations."""
    return frozenset(parse_perm(part) for part in text.split(";") if part.strip())


def format_pattern_set(patterns: PatternSet) -> str:
    return "; ".join(format_perm(t) for t in sorted(patterns))


# --------------------------------------------------------------------------
# containment


def find_occurrence(p: Sequence[int], tau: Sequence[int]) -> tuple[int, ...] | None:
    """
    Positions (1-based, increasing) of an occurrence of tau in p, or None.

    Backtracks over candidate positions, pruning any partial choice that is
    not order-isomorphic to the matching prefix of tau.  Patterns of interest
    here have length at most 4, so the worst case is mild.

    >>> find_occurrence((2, 4, 3, 1), (1, 3, 2))
    (1, 2, 3)
    """
    k = len(tau)
    n = len(p)
    if k == 0:
        return ()
    if k > n:
        return None
    chosen: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == k:
            return True
        # tau has k-j-1 letters left after this one; leave room on the right
        for i in range(start, n - (k - j - 1)):
            v = p[i]
            if all((p[c] < v) == (tau[t] < tau[j]) for t, c in enumerate(chosen)):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return tuple(i + 1 for i in chosen)
    return None


def contains(p: Sequence[int], tau: Sequence[int]) -> bool:
    """True when some subsequence of p is order-isomorphic to tau."""
    return find_occurrence(p, tau) is not None


def avoids(p: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True when p contains none of the given patterns."""
    return all(find_occurrence(p, tau) is None for tau in patterns)


# --------------------------------------------------------------------------
# the eight symmetries


def reverse(p: Perm) -> Perm:
    return tuple(reversed(p))


def complement(p: Perm) -> Perm:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def _closure() -> dict[str, tuple[str, ...]]:
    """
    The dihedral group of order eight as words in the generators r, c, i.

    BFS from the identity gives one shortest word per element; words act left
    to right ("ri" applies reverse first, then inverse).
    """
    gens = {"r": reverse, "c": complement, "i": inverse}
    probe = [(1, 3, 2), (3, 1, 2), (2, 4, 1, 3), (1, 4, 2, 3)]

    def fingerprint(word: tuple[str, ...]):
        return tuple(_apply_word(word, q) for q in probe)

    elements = {fingerprint(()): ()}
    frontier = [()]
    while frontier:
        nxt = []
        for word in frontier:
            for g in gens:
                new = word + (g,)
                fp = fingerprint(new)
                if fp not in elements:
                    elements[fp] = new
                    nxt.append(new)
        frontier = nxt
    return {("".join(w) or "e"): w for w in elements.values()}


def _apply_word(word: tuple[str, ...], p: Perm) -> Perm:
    for g in word:
        p = {"r": reverse, "c": complement, "i": inverse}[g](p)
    return p


#: name -> generator word for each of the 8 symmetries ("e" is the identity)
SYMMETRIES: dict[str, tuple[str, ...]] = _closure()


def apply_symmetry(name: str, patterns: PatternSet) -> PatternSet:
    """Apply one of the eight symmetries entrywise to a pattern set."""
    if name not in SYMMETRIES:
        raise KeyError(f"unknown symmetry {name!r}; choose from {sorted(SYMMETRIES)}")
    word = SYMMETRIES[name]
    return frozenset(_apply_word(word, t) for t in patterns)


def orbit(patterns: PatternSet) -> set[PatternSet]:
    """All distinct images of the pattern set under the eight symmetries."""
    return {apply_symmetry(name, patterns) for name in SYMMETRIES}


def canonical_form(patterns: PatternSet) -> tuple[Perm, ...]:
    """
    Canonical representative of the symmetry orbit: the lexicographically
    smallest sorted tuple among the eight images.  Used to deduplicate
    pattern sets in the exhaustive search.
    """
    return min(tuple(sorted(img)) for img in orbit(frozenset(patterns)))


# --------------------------------------------------------------------------
# standardization, direct sums, extrema


def standardize(seq: Sequence[int]) -> Perm:
    """
    The permutation order-isomorphic to seq (entries must be distinct).

    >>> standardize((10, 13, 18))
    (1, 2, 3)
    >>> standardize((14, 15, 17, 16, 11, 12, 9))
    (4, 5, 7, 6, 2, 3, 1)
    """
    if len(set(seq)) != len(seq):
        raise ValueError(f"entries not distinct: {seq!r}")
    rank = {v: r + 1 for r, v in enumerate(sorted(seq))}
    return tuple(rank[v] for v in seq)


def direct_sum(p: Perm, q: Perm) -> Perm:
    """Concatenate p with q shifted up by len(p)."""
    m = len(p)
    return p + tuple(v + m for v in q)


def direct_sum_all(parts: Iterable[Perm]) -> Perm:
    out: Perm = ()
    for part in parts:
        out = direct_sum(out, part)
    return out


def components(p: Perm) -> tuple[Perm, ...]:
    """
    The unique maximal decomposition of p as a direct sum of indecomposable
    permutations.  A new component closes at every prefix whose value set is
    an initial segment {1..r}.

    >>> components((2, 1, 3, 4))
    ((2, 1), (1,), (1,))
    """
    comps = []
    start = 0
    high = 0
    for i, v in enumerate(p):
        high = max(high, v)
        if high == i + 1:
            comps.append(standardize(p[start:i + 1]))
            start = i + 1
    return tuple(comps)


def is_indecomposable(p: Perm) -> bool:
    return len(components(p)) == 1


@dataclass(frozen=True)
class Extrema:
    """Left-to-right maxima, right-to-left maxima, and left-to-right minima,
    each as a tuple of (position, value) pairs in position order."""

    lr_maxima: tuple[tuple[int, int], ...]
    rl_maxima: tuple[tuple[int, int], ...]
    lr_minima: tuple[tuple[int, int], ...]


def extrema(p: Perm) -> Extrema:
    """Positions and values of the extremal entries (empty tuples for n=0)."""
    lr_max, lr_min, rl_max = [], [], []
    high = 0
    low = len(p) + 1
    for i, v in enumerate(p):
        if v > high:
            lr_max.append((i + 1, v))
            high = v
        if v < low:
            lr_min.append((i + 1, v))
            low = v
    high = 0
    for i in range(len(p) - 1, -1, -1):
        if p[i] > high:
            rl_max.append((i + 1, p[i]))
            high = p[i]
    rl_max.reverse()
    return Extrema(tuple(lr_max), tuple(rl_max), tuple(lr_min))


def all_perms(n: int) -> Iterable[Perm]:
    """All permutations of 1..n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


# --------------------------------------------------------------------------
# the five pattern triples sharing the weak sorting counting sequence

TRIPLES: dict[str, PatternSet] = {
    "pi1": frozenset({(1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 4, 2)}),
    "pi2": frozenset({(1, 2, 4, 3), (1, 3, 2, 4), (1, 3, 4, 2)}),
    "pi3": frozenset({(1, 3, 2, 4), (1, 3, 4, 2), (1, 4, 3, 2)}),
    "pi4": frozenset({(2, 3, 1, 4), (3, 2, 1, 4), (4, 2, 1, 3)}),
    "pi5": frozenset({(3, 2, 1, 4), (3, 2, 4, 1), (4, 2, 1, 3)}),
}

#: the triple avoided by the weak sorting permutations; same symmetry class
#: as TRIPLES["pi1"]
WEAK_SORTING_TRIPLE: PatternSet = frozenset({(3, 2, 4, 1), (3, 4, 2, 1), (4, 3, 2, 1)})

#: the pair whose avoiders are counted by the large Schroder numbers
SCHRODER_PAIR: PatternSet = frozenset({(3, 2, 1, 4), (4, 2, 1, 3)})
