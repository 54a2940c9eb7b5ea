"""Binomials, layer sizes, and binomial-block representations."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shadowlab.combinatorics import (
    CascadeRep,
    NoRepresentationError,
    ParameterDomainError,
    binom,
    cascade_generalized,
    cascade_hm,
    cascade_standard,
    em_size,
    em_size_general,
    hm_size,
    segment_profile,
    shadow_size_em_segment,
    shadow_size_hm_segment,
)


def brute_em_size(n: int, k: int, s: int, t: int) -> int:
    window = set(range(1, s + 1))
    return sum(1 for c in combinations(range(1, n + 1), k) if len(window & set(c)) >= t)


def brute_hm_size(n: int, k: int, s: int, t: int) -> int:
    first = set(range(1, s))
    second = set(range(s + 1, s + t + 1))
    count = 0
    for c in combinations(range(1, n + 1), k):
        cs = set(c)
        if cs & first or (s in cs and cs & second):
            count += 1
    return count


def test_binom_conventions():
    assert binom(5, 2) == 10
    assert binom(0, 0) == 1
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(-2, 0) == 0
    assert binom(-1, 2) == 0


def test_em_size_three_uniform_window_line():
    for n in range(7, 40):
        assert em_size(n, 3, 3, 2) == 3 * n - 8


def test_em_size_frozen_values():
    assert em_size(12, 4, 4, 3) == 33
    assert em_size(14, 5, 4, 3) == 190
    assert em_size(12, 4, 2, 2) == 45
    assert em_size(14, 5, 2, 2) == 220
    assert em_size(12, 3, 5, 2) == 80
    assert em_size(12, 3, 2, 1) == 100


def test_em_size_matches_enumeration():
    for n in range(1, 10):
        for k in range(0, min(n, 5) + 1):
            for s in range(0, 6):
                for t in range(0, min(k, s) + 1):
                    if n >= k >= t >= 0 and s >= t:
                        assert em_size(n, k, s, t) == brute_em_size(n, k, s, t)


@given(st.integers(1, 10), st.integers(0, 5), st.integers(0, 6), st.integers(0, 5))
@settings(max_examples=80, deadline=None)
def test_em_size_general_matches_enumeration(n, k, s, t):
    if k <= n:
        assert em_size_general(n, k, s, t) == brute_em_size(n, k, s, t)


def test_em_size_general_conventions():
    assert em_size_general(8, 3, 2, 0) == binom(8, 3)
    assert em_size_general(8, 3, 2, 3) == 0
    assert em_size_general(2, 3, 1, 1) == 0
    assert em_size_general(8, -1, 2, 0) == 0
    assert em_size_general(5, 3, 3, 3) == 1


def test_em_size_domain():
    with pytest.raises(ParameterDomainError):
        em_size(5, 3, 2, 3)  # t > s
    with pytest.raises(ParameterDomainError):
        em_size(2, 3, 3, 2)  # n < k


def test_hm_size_matches_enumeration():
    for n in range(1, 10):
        for k in range(1, min(n, 5) + 1):
            for s in range(0, 5):
                for t in range(0, 5):
                    if n >= s + t:
                        assert hm_size(n, k, s, t) == brute_hm_size(n, k, s, t), (n, k, s, t)


def test_hm_size_frozen():
    assert hm_size(6, 3, 1, 1) == 4
    assert hm_size(10, 4, 0, 3) == 0  # empty first window and no anchor


def test_cascade_standard_examples():
    rep = cascade_standard(1, 4)
    assert rep.h == 4 and rep.a == (4,) and rep.evaluate() == 1
    rep = cascade_standard(10, 3)
    assert rep.h == 3 and rep.a == (5,)
    rep = cascade_standard(22, 2)
    assert rep.evaluate() == 22


@given(st.integers(1, 4000), st.integers(1, 6))
@settings(max_examples=120, deadline=None)
def test_cascade_standard_roundtrip(m, k):
    rep = cascade_standard(m, k)
    assert rep.evaluate() == m
    assert rep.h >= 1 and len(rep.a) == k - rep.h + 1
    assert all(rep.a[i] < rep.a[i + 1] for i in range(len(rep.a) - 1))


def test_cascade_generalized_star():
    rep = cascade_generalized(22, 3, 1, 1)
    assert rep.h == 2 and rep.a == (2, 8)
    assert rep.evaluate() == 22


def test_cascade_generalized_gaps():
    with pytest.raises(NoRepresentationError):
        cascade_generalized(2, 2, 3, 2)
    with pytest.raises(NoRepresentationError):
        cascade_generalized(6, 3, 4, 2)


def test_segment_profile_fills_gaps():
    rep = segment_profile(2, 2, 3, 2)
    assert (rep.h, rep.a, rep.t_levels) == (1, (1, 2), (1, 2))
    assert rep.evaluate() == 2
    rep = segment_profile(6, 3, 4, 2)
    assert (rep.h, rep.a, rep.t_levels) == (1, (1, 2, 4), (1, 2, 2))
    assert rep.evaluate() == 6


@given(st.integers(1, 6), st.integers(0, 5), st.data())
@settings(max_examples=120, deadline=None)
def test_segment_profile_roundtrip(k, s, data):
    t = data.draw(st.integers(0, min(k, s)))
    cap = binom(s, k) if t == k else 3000
    if cap == 0:
        return
    m = data.draw(st.integers(1, min(3000, cap)))
    rep = segment_profile(m, k, s, t)
    assert rep.evaluate() == m


def test_shadow_size_em_segment_frozen():
    assert shadow_size_em_segment(22, 3, 1, 1, 1) == 30
    assert shadow_size_em_segment(13, 3, 1, 1, 1) == 19
    assert shadow_size_em_segment(16, 3, 1, 1, 1) == 23
    assert shadow_size_em_segment(80, 3, 2, 1, 1) == 55
    assert shadow_size_em_segment(6, 3, 4, 2, 2) == 5


def test_shadow_size_em_segment_ell_domain():
    with pytest.raises(ParameterDomainError):
        shadow_size_em_segment(5, 3, 1, 1, 0)
    with pytest.raises(ParameterDomainError):
        shadow_size_em_segment(5, 3, 1, 1, 3)


def test_hm_cascade_and_shadow():
    rep = cascade_hm(4, 3, 1, 1)
    assert rep.evaluate() == 4
    assert shadow_size_hm_segment(4, 3, 1, 1) == 15
    with pytest.raises(NoRepresentationError):
        cascade_hm(3, 3, 0, 2)
    with pytest.raises(NoRepresentationError):
        cascade_hm(3, 3, 1, 0)


def test_cascade_rep_validation():
    with pytest.raises(ParameterDomainError):
        CascadeRep(k=3, h=0, s=0, t=0, a=(1, 2, 3))
    with pytest.raises(ParameterDomainError):
        CascadeRep(k=3, h=2, s=0, t=0, a=(5,))  # wrong length
    with pytest.raises(ParameterDomainError):
        CascadeRep(k=3, h=2, s=0, t=0, a=(4, 4))  # not increasing
