"""Named families: construction, closed-form sizes, thresholds."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shadowlab.combinatorics import ParameterDomainError, binom, em_size_general
from shadowlab.families import (
    FamilySpec,
    build,
    format_family_spec,
    parse_family_spec,
    size,
    threshold,
)
from shadowlab.setfamily import is_t_intersecting, kset, matching_number


def test_parse_format_roundtrip():
    for text in (
        "ekr:n=8,k=3",
        "em:n=10,k=3,s=3,t=2",
        "akt:n=10,k=3,t=1",
        "hm:n=10,k=4,s=2,t=2",
        "hmt:n=10,k=4,t=2",
        "h3:n=7,k=4",
        "pf:n=10,k=3,s=3",
        "pf:n=8,k=3",
    ):
        spec = parse_family_spec(text)
        assert parse_family_spec(format_family_spec(spec)) == spec


def test_parse_spec_errors():
    with pytest.raises(ParameterDomainError):
        parse_family_spec("nope:n=5,k=2")
    with pytest.raises(ParameterDomainError):
        parse_family_spec("em:k=3,s=1,t=1")  # missing n
    with pytest.raises(ParameterDomainError):
        parse_family_spec("em:n=5,n=6,k=3")  # duplicate
    with pytest.raises(ParameterDomainError):
        parse_family_spec("em:n=5,k=x")


def test_frozen_sizes():
    assert size(FamilySpec("akt", 10, 3, t=1)) == 22
    assert size(FamilySpec("akt", 12, 4, t=2)) == 26
    assert size(FamilySpec("akt", 14, 5, t=2)) == 166
    assert size(FamilySpec("hmt", 10, 4, t=2)) == 70
    assert size(FamilySpec("h0", 6, 3)) == 10
    assert size(FamilySpec("em", 12, 3, s=5, t=2)) == 80


def test_sizes_match_enumeration():
    for n in range(3, 10):
        for k in range(1, min(n, 5) + 1):
            assert size(FamilySpec("ekr", n, k)) == len(build(FamilySpec("ekr", n, k)))
            for s in range(0, 5):
                for t in range(0, 5):
                    spec = FamilySpec("em", n, k, s=s, t=t)
                    assert size(spec) == len(build(spec))
                    if n >= s + t:
                        spec = FamilySpec("hm", n, k, s=s, t=t)
                        assert size(spec) == len(build(spec))
            for t in range(1, k):
                if n >= k + 1:
                    spec = FamilySpec("akt", n, k, t=t)
                    assert size(spec) == len(build(spec))
                if n >= k + t:
                    spec = FamilySpec("hmt", n, k, t=t)
                    assert size(spec) == len(build(spec))


def test_h_family_sizes_and_bounds():
    for n in range(6, 10):
        for k in (3, 4):
            for name in ("h0", "h1", "h2", "h3", "h4", "h5"):
                spec = FamilySpec(name, n, k)
                assert size(spec) == len(build(spec))
            assert size(FamilySpec("h0", n, k)) < 3 * binom(n, k - 2) - 2 * binom(n, k - 3)
            assert size(FamilySpec("h1", n, k)) < 3 * binom(n, k - 2) - 2 * binom(n, k - 3)
            for name in ("h2", "h3", "h4", "h5"):
                assert size(FamilySpec(name, n, k)) <= 2 * binom(n, k - 2)


def test_star_equals_unit_window():
    for n in range(3, 9):
        for k in range(1, min(n, 4) + 1):
            a = build(FamilySpec("ekr", n, k))
            b = build(FamilySpec("em", n, k, s=1, t=1))
            assert list(a) == list(b)


def test_two_window_with_empty_second_window():
    for n in range(4, 9):
        for k in range(1, 4):
            for s in range(1, 5):
                if n >= s:
                    a = build(FamilySpec("hm", n, k, s=s, t=0))
                    b = build(FamilySpec("em", n, k, s=s - 1, t=1))
                    assert list(a) == list(b)


def test_akt_is_t_intersecting():
    for n, k, t in ((8, 3, 1), (9, 4, 2), (10, 5, 3)):
        fam = build(FamilySpec("akt", n, k, t=t))
        assert is_t_intersecting(fam, t)


def test_pf_chain_counts_and_matching():
    fam = build(FamilySpec("pf", 10, 3, s=3))
    assert len(fam) == 81  # C(9,2) + (C(8,2)-1) + (C(7,2)-C(4,2)) + 3 blocks
    assert matching_number(fam) == 3
    assert kset((2, 3, 4)) in fam and kset((8, 9, 10)) in fam
    assert kset((2, 8, 9)) in fam and kset((3, 4, 6)) not in fam
    fam = build(FamilySpec("pf", 7, 3, s=1))
    assert len(fam) == 13 and matching_number(fam) == 1


def test_pf_generated_counts():
    fam = build(FamilySpec("pf", 8, 3))
    assert len(fam) == 10  # six {1,y,z} triples plus four exceptional sets
    assert kset((2, 3, 4)) in fam and kset((1, 3, 4)) in fam
    assert kset((3, 5, 6)) in fam and kset((4, 5, 6)) in fam
    assert kset((1, 2, 5)) in fam and kset((2, 5, 6)) not in fam
    up = build(FamilySpec("pf", 8, 4))
    assert all(any(m & g == g for g in fam) for m in up)


def test_build_domain_errors():
    for bad in (
        FamilySpec("akt", 5, 3, t=3),
        FamilySpec("hmt", 4, 3, t=2),
        FamilySpec("h4", 5, 3),
        FamilySpec("pf", 9, 3, s=3),
        FamilySpec("pf", 5, 3),
        FamilySpec("ekr", 3, 0),
    ):
        with pytest.raises(ParameterDomainError):
            build(bad)
    with pytest.raises(ParameterDomainError):
        build(FamilySpec("em", 8, 3))  # missing s, t


def test_threshold_frozen():
    assert threshold("t13", 10, 3).exact == 22
    assert threshold("t13", 10, 4).exact == 70
    assert threshold("t16", 12, 4, t=2).exact == 33
    assert threshold("t16", 14, 5, t=2).exact == 190
    th = threshold("t111", 12, 3, s=2)
    assert th.asymptotic and th.constant == 10 and th.scale == 12 and th.cutoff() == 120
    assert threshold("t111", 12, 3, s=1).constant == 3
    assert threshold("t111", 12, 4, s=2).constant == 12


def test_threshold_low_t_uses_maximum():
    th = threshold("t16", 30, 5, t=1)
    alt = em_size_general(30, 5, 3, 2)
    akt = size(FamilySpec("akt", 30, 5, t=1))
    assert th.exact == max(akt, alt)


def test_threshold_domain_errors():
    with pytest.raises(ParameterDomainError):
        threshold("t13", 6, 3)  # needs n > 2k
    with pytest.raises(ParameterDomainError):
        threshold("t16", 20, 3, t=None)
    with pytest.raises(ParameterDomainError):
        threshold("t16", 8, 3, t=1)  # n too small
    with pytest.raises(ParameterDomainError):
        threshold("t111", 12, 3)  # needs s
    with pytest.raises(ParameterDomainError):
        threshold("t99", 12, 3)


@given(st.integers(3, 9), st.integers(3, 5))
@settings(max_examples=40, deadline=None)
def test_h_families_are_up_closures(n, k):
    if n < k:
        return
    base = build(FamilySpec("h1", max(n, 4), 3))
    fam = build(FamilySpec("h1", max(n, 4), k))
    for m in fam:
        assert any(m & b == b for b in base)
