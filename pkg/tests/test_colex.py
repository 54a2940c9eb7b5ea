"""Colex order, ranking, and initial segments of restricted layers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shadowlab.colex import (
    SegmentSpec,
    ambient_size,
    colex_cmp,
    colex_rank,
    colex_unrank,
    initial_segment,
    profile_from_last,
    segment_shadow_size,
)
from shadowlab.combinatorics import (
    ParameterDomainError,
    binom,
    em_size_general,
    hm_size,
    segment_profile,
)
from shadowlab.setfamily import kset


def test_colex_cmp_is_numeric_order():
    a, b = kset((1, 2, 5)), kset((3, 4, 5))
    assert colex_cmp(a, b) < 0 and colex_cmp(b, a) > 0 and colex_cmp(a, a) == 0
    with pytest.raises(ParameterDomainError):
        colex_cmp(kset((1, 2)), kset((1, 2, 3)))


def test_colex_rank_examples():
    assert colex_rank(kset((1, 2, 3))) == 0
    assert colex_rank(kset((1, 2, 4))) == 1
    assert colex_rank(kset((2, 3, 4))) == 3


@given(st.integers(0, 100_000), st.integers(1, 6))
@settings(max_examples=150, deadline=None)
def test_rank_unrank_roundtrip(rank, k):
    mask = colex_unrank(rank, k)
    assert mask.bit_count() == k
    assert colex_rank(mask) == rank


def test_unrank_orders_whole_layer():
    masks = [colex_unrank(r, 3) for r in range(binom(7, 3))]
    assert masks == sorted(masks)
    assert all(m < (1 << 7) for m in masks)


def _filter_equals_decompose(kind, n_max, k_max, s_max, t_max):
    for n in range(1, n_max + 1):
        for k in range(1, min(n, k_max) + 1):
            for s in range(0, s_max + 1):
                for t in range(0, t_max + 1):
                    if kind == "em" and not (k >= t and s >= t):
                        continue
                    if kind == "hm" and n < s + t:
                        continue
                    total = (
                        em_size_general(n, k, s, t) if kind == "em" else hm_size(n, k, s, t)
                    )
                    for m in range(0, total + 1):
                        spec = SegmentSpec(kind, k=k, m=m, n=n, s=s, t=t)
                        fam = initial_segment(spec, method="both")
                        assert len(fam) == m


def test_em_segments_filter_equals_decompose():
    _filter_equals_decompose("em", 7, 4, 3, 3)


def test_hm_segments_filter_equals_decompose():
    _filter_equals_decompose("hm", 7, 4, 3, 3)


def test_full_segments_both_methods():
    for m in range(0, binom(6, 3) + 1):
        fam = initial_segment(SegmentSpec("full", k=3, m=m, n=6), method="both")
        assert len(fam) == m


def test_initial_segment_prefix_property():
    long = initial_segment(SegmentSpec("em", k=3, m=25, n=9, s=2, t=1))
    short = initial_segment(SegmentSpec("em", k=3, m=10, n=9, s=2, t=1))
    assert list(short) == list(long)[:10]


def test_segment_shadow_size_frozen():
    assert segment_shadow_size(SegmentSpec("em", k=3, m=22, n=10, s=1, t=1), 1) == 30
    assert segment_shadow_size(SegmentSpec("full", k=3, m=10, n=6), 1) == 10


def test_segment_length_domain():
    with pytest.raises(ParameterDomainError):
        initial_segment(SegmentSpec("em", k=3, m=99, n=5, s=1, t=1))
    with pytest.raises(ParameterDomainError):
        initial_segment(SegmentSpec("em", k=3, m=2, s=3, t=3))  # capacity binom(3,3)=1


def test_ambient_size_cases():
    assert ambient_size(SegmentSpec("em", k=3, m=0, n=8, s=2, t=1)) == em_size_general(8, 3, 2, 1)
    assert ambient_size(SegmentSpec("full", k=3, m=0)) is None
    assert ambient_size(SegmentSpec("em", k=3, m=0, s=3, t=3)) == 1
    assert ambient_size(SegmentSpec("em", k=3, m=0, s=2, t=2)) is None
    assert ambient_size(SegmentSpec("hm", k=2, m=0, s=1, t=3)) == 3
    assert ambient_size(SegmentSpec("hm", k=3, m=0, s=0, t=2)) == 0


def test_segment_spec_validation():
    with pytest.raises(ParameterDomainError):
        SegmentSpec("nope", k=3, m=1)
    with pytest.raises(ParameterDomainError):
        SegmentSpec("em", k=3, m=-1, s=1, t=1)
    with pytest.raises(ParameterDomainError):
        SegmentSpec("em", k=3, m=1, s=1, t=2)  # t > s
    with pytest.raises(ParameterDomainError):
        SegmentSpec("em", k=3, m=1, n=2, s=1, t=1)  # n < k
    with pytest.raises(ParameterDomainError):
        SegmentSpec("hm", k=2, m=1, n=3, s=2, t=2)  # n < s + t


def test_unbounded_segment_resolves_universe():
    fam = initial_segment(SegmentSpec("em", k=3, m=5, s=1, t=1))
    assert fam.n == max(max(e for e in (mask.bit_length() for mask in fam)), 3)


@given(st.integers(1, 5), st.integers(0, 4), st.data())
@settings(max_examples=100, deadline=None)
def test_profile_from_last_matches_greedy(k, s, data):
    t = data.draw(st.integers(0, min(k, s)))
    cap = binom(s, k) if t == k else 400
    if cap == 0:
        return
    m = data.draw(st.integers(1, min(400, cap)))
    fam = initial_segment(SegmentSpec("em", k=k, m=m, s=s, t=t))
    last = list(fam)[-1]
    assert profile_from_last(last, k, s, t) == segment_profile(m, k, s, t)
