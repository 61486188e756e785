"""Permutation toolkit: containment, symmetries, sums, extrema."""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weaksort.perms import (
    SYMMETRIES,
    TRIPLES,
    WEAK_SORTING_TRIPLE,
    all_perms,
    apply_symmetry,
    avoids,
    canonical_form,
    complement,
    components,
    contains,
    direct_sum,
    direct_sum_all,
    extrema,
    find_occurrence,
    format_perm,
    inverse,
    is_permutation,
    orbit,
    parse_perm,
    reverse,
    standardize,
)

perm_strategy = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)


def test_is_permutation():
    assert is_permutation(())
    assert is_permutation((2, 1, 3))
    assert not is_permutation((0, 1))
    assert not is_permutation((1, 1, 2))


def test_parse_and_format_roundtrip():
    assert parse_perm("3 1 4 2") == (3, 1, 4, 2)
    assert parse_perm("") == ()
    assert format_perm((3, 1, 4, 2)) == "3 1 4 2"
    with pytest.raises(ValueError):
        parse_perm("1 3")


def test_contains_examples():
    # 2,4,3 inside 2431 is ordered like 132
    assert contains((2, 4, 3, 1), (1, 3, 2))
    assert not contains((4, 3, 2, 1), (1, 2, 3, 4))
    # i, n-1, n, n-2 is ordered like 1342 wherever it embeds
    assert contains((1, 5, 6, 4, 3, 2), (1, 3, 4, 2))
    assert contains((2, 4, 3, 1), ())
    assert not contains((1, 2), (1, 2, 3))


def test_find_occurrence_positions():
    occ = find_occurrence((2, 4, 3, 1), (1, 3, 2))
    assert occ == (1, 2, 3)
    assert find_occurrence((1, 2, 3), (3, 2, 1)) is None


def test_avoids_examples():
    assert avoids((1, 2, 3), TRIPLES["pi1"])
    assert not avoids((1, 2, 3, 4), TRIPLES["pi1"])
    assert avoids((3, 4, 1, 2), TRIPLES["pi5"])


def test_symmetry_group_order():
    assert len(SYMMETRIES) == 8
    assert SYMMETRIES["e"] == ()


def test_symmetries_are_bijections_on_s4():
    s4 = set(all_perms(4))
    for name in SYMMETRIES:
        image = {apply_symmetry(name, frozenset({p})) for p in s4}
        assert len(image) == 24, name


def test_involutions_exhaustive():
    # reverse, complement, inverse are involutions for every |p| <= 6
    for n in range(7):
        for p in all_perms(n):
            assert reverse(reverse(p)) == p
            assert complement(complement(p)) == p
            assert inverse(inverse(p)) == p


def test_contains_preserved_by_symmetry_exhaustive():
    # simultaneous symmetry preserves containment, |p| <= 5, |tau| <= 3
    patterns = [t for k in range(1, 4) for t in all_perms(k)]
    for n in range(1, 6):
        for p in all_perms(n):
            for tau in patterns:
                base = contains(p, tau)
                for name in SYMMETRIES:
                    gp = next(iter(apply_symmetry(name, frozenset({p}))))
                    gt = next(iter(apply_symmetry(name, frozenset({tau}))))
                    assert contains(gp, gt) == base


def test_inverse_complement_of_first_triple():
    # complement then inverse carries the first triple onto the weak
    # sorting triple {3241, 3421, 4321}
    assert apply_symmetry("ci", TRIPLES["pi1"]) == WEAK_SORTING_TRIPLE


def test_orbit_examples():
    assert orbit(frozenset({(1, 2)})) == {
        frozenset({(1, 2)}),
        frozenset({(2, 1)}),
    }
    assert reverse(reverse((3, 1, 2))) == (3, 1, 2)


def test_orbit_size_divides_8_for_all_triples():
    s4 = list(all_perms(4))
    for triple in itertools.combinations(s4, 3):
        assert 8 % len(orbit(frozenset(triple))) == 0


def test_canonical_form_is_orbit_invariant():
    rep = canonical_form(TRIPLES["pi1"])
    assert rep == canonical_form(WEAK_SORTING_TRIPLE)
    assert rep == ((1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 4, 2))


def test_standardize_examples():
    assert standardize((10, 13, 18)) == (1, 2, 3)
    assert standardize(()) == ()
    assert standardize((14, 15, 17, 16, 11, 12, 9)) == (4, 5, 7, 6, 2, 3, 1)
    with pytest.raises(ValueError):
        standardize((1, 1))


@given(perm_strategy)
def test_standardize_idempotent(p):
    assert standardize(p) == p


def test_direct_sum_examples():
    assert direct_sum((1,), (2, 1)) == (1, 3, 2)
    assert components((1, 2, 3)) == ((1,), (1,), (1,))
    assert components((2, 1, 3, 4)) == ((2, 1), (1,), (1,))


def test_components_roundtrip_exhaustive():
    for n in range(8):
        for p in all_perms(n):
            assert direct_sum_all(components(p)) == p


@given(perm_strategy)
@settings(max_examples=50)
def test_components_roundtrip_property(p):
    assert direct_sum_all(components(p)) == p


def test_extrema_examples():
    ext = extrema((5, 1, 4, 9, 6, 8, 10, 2, 7, 3))
    assert tuple(v for _, v in ext.lr_maxima) == (5, 9, 10)
    assert tuple(v for _, v in ext.rl_maxima) == (10, 7, 3)
    assert tuple(q for q, _ in ext.lr_maxima) == (1, 4, 7)
    assert tuple(q for q, _ in ext.rl_maxima) == (7, 9, 10)
    ext = extrema((2, 3, 1))
    assert tuple(v for _, v in ext.lr_minima) == (2, 1)


def test_extrema_decreasing():
    n = 6
    ext = extrema(tuple(range(n, 0, -1)))
    assert tuple(v for _, v in ext.lr_maxima) == (n,)
    assert tuple(v for _, v in ext.rl_maxima) == tuple(range(n, 0, -1))


def test_extrema_degenerate():
    ext = extrema(())
    assert ext.lr_maxima == ext.rl_maxima == ext.lr_minima == ()


def test_max_entry_is_both_lr_and_rl_max():
    for p in all_perms(5):
        ext = extrema(p)
        assert (p.index(5) + 1, 5) in ext.lr_maxima
        assert (p.index(5) + 1, 5) in ext.rl_maxima
