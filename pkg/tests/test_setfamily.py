"""Families as bitmask sets: shadows, matchings, covers, compressions."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shadowlab.combinatorics import ParameterDomainError, binom
from shadowlab.setfamily import (
    Family,
    cover_number,
    degree,
    delete_vertex,
    elements,
    ell_shadow,
    format_family,
    full_layer,
    has_matching_of_size,
    is_shifted,
    is_t_intersecting,
    kset,
    link,
    matching_number,
    max_degree,
    parse_family,
    shadow,
    shift_closure,
    shift_ij,
)

families = st.integers(5, 9).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda k: st.lists(
            st.sets(st.integers(1, n), min_size=k, max_size=k).map(kset),
            min_size=1,
            max_size=12,
        ).map(lambda ms: Family(n, k, ms))
    )
)


def test_kset_elements_roundtrip():
    assert kset((3, 1, 5)) == 0b10101
    assert elements(0b10101) == (1, 3, 5)
    assert kset(()) == 0


@given(st.sets(st.integers(1, 30), max_size=8))
def test_kset_elements_property(elems):
    assert set(elements(kset(elems))) == elems


def test_family_validation():
    with pytest.raises(ParameterDomainError):
        Family(4, 2, [kset((1, 5))])  # outside universe
    with pytest.raises(ParameterDomainError):
        Family(4, 2, [kset((1, 2, 3))])  # wrong uniformity
    with pytest.raises(ParameterDomainError):
        Family(70, 2, [])  # universe too large
    fam = Family(5, 2, [kset((2, 3)), kset((1, 2)), kset((2, 3))])
    assert len(fam) == 2
    assert list(fam) == sorted(fam.members)


def test_shadow_of_full_layer():
    assert set(shadow(full_layer(6, 3)).members) == set(full_layer(6, 2).members)
    with pytest.raises(ParameterDomainError):
        shadow(full_layer(4, 0))


@given(families, st.data())
@settings(max_examples=60, deadline=None)
def test_ell_shadow_methods_agree(fam, data):
    ell = data.draw(st.integers(1, fam.k))
    direct = ell_shadow(fam, ell, method="direct")
    iterated = ell_shadow(fam, ell, method="iterate")
    assert set(direct.members) == set(iterated.members)


def test_is_t_intersecting():
    star = Family(6, 3, [kset((1, 2, 3)), kset((1, 4, 5)), kset((1, 2, 6))])
    assert is_t_intersecting(star, 1)
    assert not is_t_intersecting(star, 2)
    assert is_t_intersecting(Family(6, 3, []), 5)
    with pytest.raises(ParameterDomainError):
        is_t_intersecting(star, 0)


def test_matching_and_cover_frozen():
    assert matching_number(full_layer(7, 3)) == 2
    assert cover_number(full_layer(5, 3)) == 3
    star = Family(8, 3, [m for m in full_layer(8, 3) if m & 1])
    assert cover_number(star) == 1
    assert matching_number(star) == 1
    window = Family(9, 3, [m for m in full_layer(9, 3) if m & 0b11])
    assert matching_number(window) == 2
    assert has_matching_of_size(window, 2)
    assert not has_matching_of_size(window, 3)
    assert has_matching_of_size(window, 0)


def test_shift_ij_examples():
    fam = Family(4, 2, [kset((2, 4)), kset((1, 4))])
    out = shift_ij(fam, 1, 2)
    # {2,4} -> {1,4} collides, stays; {1,4} has 1 already
    assert set(out.members) == set(fam.members)
    out = shift_ij(Family(4, 2, [kset((2, 4))]), 1, 2)
    assert set(out.members) == {kset((1, 4))}
    with pytest.raises(ParameterDomainError):
        shift_ij(fam, 2, 2)
    with pytest.raises(ParameterDomainError):
        shift_ij(fam, 0, 1)


@given(families, st.data())
@settings(max_examples=80, deadline=None)
def test_shift_preserves_size(fam, data):
    i = data.draw(st.integers(1, fam.n - 1))
    j = data.draw(st.integers(i + 1, fam.n))
    assert len(shift_ij(fam, i, j)) == len(fam)


@given(families)
@settings(max_examples=60, deadline=None)
def test_shift_closure_is_shifted_and_idempotent(fam):
    closed = shift_closure(fam)
    assert len(closed) == len(fam)
    assert is_shifted(closed)
    again = shift_closure(closed)
    assert list(again) == list(closed)


def test_is_shifted_examples():
    assert is_shifted(Family(5, 2, [kset((1, 2)), kset((1, 3))]))
    assert not is_shifted(Family(5, 2, [kset((1, 3))]))  # misses {1,2}


def test_parse_format_roundtrip():
    fam = Family(6, 3, [kset((1, 2, 4)), kset((2, 3, 6))])
    text = format_family(fam)
    back = parse_family(text)
    assert back.n == 6 and back.k == 3 and list(back) == list(fam)
    assert parse_family("n=5 k=0\n").k == 0


def test_parse_family_errors():
    with pytest.raises(ParameterDomainError):
        parse_family("k=3\n1 2 3\n")  # missing n
    with pytest.raises(ParameterDomainError):
        parse_family("n=6 k=3\n1 2\n")  # wrong length
    with pytest.raises(ParameterDomainError):
        parse_family("n=6 k=3\n3 2 1\n")  # must increase
    with pytest.raises(ParameterDomainError):
        parse_family("n=6 k=3\n1 2 9\n")  # outside universe


def test_degree_link_delete():
    fam = Family(6, 3, [kset((1, 2, 3)), kset((1, 4, 5)), kset((2, 4, 6))])
    assert degree(fam, 1) == 2
    assert max_degree(fam) == 2
    lk = link(fam, 1)
    assert set(lk.members) == {kset((2, 3)), kset((4, 5))} and lk.k == 2
    rest = delete_vertex(fam, 1)
    assert set(rest.members) == {kset((2, 4, 6))} and rest.n == 6


def test_binom_layer_consistency():
    for n in range(0, 9):
        for k in range(0, n + 1):
            assert len(full_layer(n, k)) == binom(n, k)
