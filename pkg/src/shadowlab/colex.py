"""Colex order, ranking, and initial segments of restricted uniform layers.

Colex order on equal-size sets: A precedes B iff the largest element of the
symmetric difference lies in B.  On bitmasks this is plain numeric order, which
is what every routine here exploits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .combinatorics import (
    CascadeRep,
    HMCascadeRep,
    ParameterDomainError,
    binom,
    cascade_hm,
    em_size_general,
    hm_size,
    segment_profile,
)
from .setfamily import Family, KSet, elements, ell_shadow, kset

KINDS = ("full", "em", "hm")


def colex_cmp(a: KSet, b: KSet) -> int:
    """-1, 0, or 1 as the set a precedes, equals, or follows b in colex order."""
    if a.bit_count() != b.bit_count():
        raise ParameterDomainError("colex order only compares sets of equal size")
    if a == b:
        return 0
    return -1 if a < b else 1


def colex_rank(mask: KSet) -> int:
    """Number of same-size sets preceding mask in colex order."""
    rank = 0
    for idx, e in enumerate(elements(mask), start=1):
        rank += binom(e - 1, idx)
    return rank


def colex_unrank(rank: int, k: int) -> KSet:
    """The k-set of the given colex rank (inverse of colex_rank)."""
    if rank < 0 or k < 0:
        raise ParameterDomainError(f"need rank >= 0 and k >= 0, got rank={rank} k={k}")
    mask = 0
    r = rank
    for i in range(k, 0, -1):
        e = i
        step = 1
        while binom(e, i) <= r:  # find largest e with C(e-1, i) <= r, i.e. C(e, i) > r fails
            e += step
            step *= 2
        lo, hi = i, e
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if binom(mid - 1, i) <= r:
                lo = mid
            else:
                hi = mid - 1
        e = lo
        mask |= 1 << (e - 1)
        r -= binom(e - 1, i)
    if r:
        raise AssertionError("unrank failed to consume the rank")
    return mask


@dataclass(frozen=True)
class SegmentSpec:
    """A colex initial segment: the first m members of a (possibly restricted) layer.

    kind is one of 'full' (all k-sets), 'em' (k-sets meeting the window {1..s} in
    at least t elements), 'hm' (the two-window layer).  n may be None for the
    unbounded universe.
    """

    kind: str
    k: int
    m: int
    n: int | None = None
    s: int = 0
    t: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ParameterDomainError(f"segment kind must be one of {KINDS}, got {self.kind!r}")
        if self.m < 0:
            raise ParameterDomainError(f"segment length must be >= 0, got m={self.m}")
        if self.kind == "hm":
            if not (self.k >= 1 and self.s >= 0 and self.t >= 0):
                raise ParameterDomainError(
                    f"two-window segment needs k >= 1, s >= 0, t >= 0, got k={self.k} s={self.s} t={self.t}"
                )
        else:
            if self.k < 0:
                raise ParameterDomainError(f"uniformity must be >= 0, got k={self.k}")
            if self.kind == "em" and not (self.k >= self.t >= 0 and self.s >= self.t):
                raise ParameterDomainError(
                    f"window segment needs k >= t >= 0 and s >= t, got k={self.k} s={self.s} t={self.t}"
                )
        if self.n is not None:
            if self.n < self.k:
                raise ParameterDomainError(f"universe n={self.n} is smaller than k={self.k}")
            if self.kind == "hm" and self.n < self.s + self.t:
                raise ParameterDomainError(
                    f"two-window families need n >= s + t, got n={self.n} s={self.s} t={self.t}"
                )


def ambient_size(spec: SegmentSpec) -> int | None:
    """Total number of members of the ambient layer (None when infinite)."""
    if spec.n is not None:
        if spec.kind == "full":
            return binom(spec.n, spec.k)
        if spec.kind == "em":
            return em_size_general(spec.n, spec.k, spec.s, spec.t)
        return hm_size(spec.n, spec.k, spec.s, spec.t)
    if spec.kind == "full":
        return None if spec.k >= 1 else 1
    if spec.kind == "em":
        if spec.t > min(spec.k, spec.s):
            return 0
        if spec.k == 0:
            return 1
        if spec.t == spec.k:
            return binom(spec.s, spec.k)
        return None
    # two-window layer over the unbounded universe
    s, t, k = spec.s, spec.t, spec.k
    if s == 0 or (s == 1 and t == 0):
        return 0
    if k == 1:
        return s - 1
    if k == 2 and s == 1:
        return t
    return None


def _qualifies(kind: str, mask: KSet, s: int, t: int) -> bool:
    if kind == "full":
        return True
    if kind == "em":
        return (mask & ((1 << s) - 1)).bit_count() >= t
    if s >= 1 and mask & ((1 << (s - 1)) - 1):
        return True
    if s >= 1 and (mask >> (s - 1)) & 1:
        window = ((1 << t) - 1) << s
        return bool(mask & window)
    return False


def _gosper_stream(k: int, limit_mask: int | None):
    """All k-set masks in numeric (= colex) order, optionally below a universe bound."""
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    while limit_mask is None or mask <= limit_mask:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def _stream_em_masks(k: int, s: int, t: int, bound: int | None):
    """Members of the window-hitting layer in colex order (universe {1..bound} or unbounded)."""
    if k == 0:
        if t <= 0:
            yield 0
        return
    e = k
    while bound is None or e <= bound:
        tt = t - 1 if e <= s else t
        if e > s and max(tt, 0) > min(k - 1, s):
            return  # no later top element can qualify either
        if max(tt, 0) <= min(k - 1, s):
            top = 1 << (e - 1)
            for sub in _stream_em_masks(k - 1, s, tt, e - 1):
                yield sub | top
        e += 1


def _stream(spec: SegmentSpec):
    if spec.kind == "em":
        yield from _stream_em_masks(spec.k, spec.s, spec.t, spec.n)
        return
    limit = (1 << spec.n) - 1 if spec.n is not None else None
    for mask in _gosper_stream(spec.k, limit):
        if _qualifies(spec.kind, mask, spec.s, spec.t):
            yield mask


def _resolve_n(spec: SegmentSpec, masks: list[KSet]) -> int:
    if spec.n is not None:
        return spec.n
    top = max((m.bit_length() for m in masks), default=0)
    return max(top, spec.k)


def _check_length(spec: SegmentSpec) -> None:
    total = ambient_size(spec)
    if total is not None and spec.m > total:
        raise ParameterDomainError(
            f"segment length m={spec.m} exceeds the ambient layer size {total}"
        )


def _filter_segment(spec: SegmentSpec) -> list[KSet]:
    _check_length(spec)
    out: list[KSet] = []
    for mask in _stream(spec):
        if len(out) == spec.m:
            break
        out.append(mask)
    if len(out) < spec.m:
        raise ParameterDomainError(
            f"segment length m={spec.m} exceeds the ambient layer size {len(out)}"
        )
    return out


def _decompose_segment(spec: SegmentSpec) -> list[KSet]:
    _check_length(spec)
    if spec.m == 0:
        return []
    if spec.k == 0:
        return [0]
    out: list[KSet] = []
    if spec.kind in ("full", "em"):
        rep = segment_profile(spec.m, spec.k, spec.s, spec.t)
        for i in reversed(rep.levels):
            tail = kset(rep.tail_elements(i))
            for head in _stream_em_masks(i, rep.s, rep.hits_needed(i), rep.bound(i)):
                out.append(head | tail)
    else:
        rep = cascade_hm(spec.m, spec.k, spec.s, spec.t)
        for i in reversed(rep.levels):
            tail = kset(rep.tail_elements(i))
            bound = rep.bound(i)
            for combo in combinations(range(1, bound + 1), i):
                head = kset(combo)
                if _qualifies("hm", head, spec.s, spec.t):
                    out.append(head | tail)
    return out


def initial_segment(spec: SegmentSpec, method: str = "filter") -> Family:
    """The first m members of the layer in colex order, as a Family.

    method='filter' streams the layer in colex order and truncates;
    method='decompose' assembles the segment from its cascade block profile;
    method='both' computes both, asserts they agree, and returns the result.
    The universe of the result is spec.n, or the largest element used when the
    spec is over the unbounded universe.
    """
    if method == "both":
        left = _filter_segment(spec)
        right = _decompose_segment(spec)
        if left != sorted(right):
            raise AssertionError(
                f"filter and decompose disagree for {spec}: {len(left)} vs {len(right)} members"
            )
        masks = left
    elif method == "filter":
        masks = _filter_segment(spec)
    elif method == "decompose":
        masks = sorted(_decompose_segment(spec))
    else:
        raise ParameterDomainError(f"unknown segment method {method!r}")
    return Family(_resolve_n(spec, masks), spec.k, masks)


def segment_shadow_size(spec: SegmentSpec, ell: int) -> int:
    """|ell-shadow| of the segment, computed directly (construct, then shade)."""
    if not 1 <= ell <= spec.k - 1:
        raise ParameterDomainError(f"shadow depth needs 1 <= ell < k, got ell={ell} k={spec.k}")
    return len(ell_shadow(initial_segment(spec), ell))


def _colex_max_member(e: int, j: int, s: int, hits: int) -> KSet | None:
    """Colex-largest j-subset of {1..e} meeting {1..s} in at least hits elements."""
    mask = 0
    slots = j
    need = max(hits, 0)
    for c in range(e, 0, -1):
        if slots == 0:
            break
        after = need - (1 if c <= s else 0)
        after = max(after, 0)
        rem = slots - 1
        if rem <= c - 1 and after <= min(c - 1, s, rem):
            mask |= 1 << (c - 1)
            slots -= 1
            need = after
    return mask if slots == 0 and need == 0 else None


def profile_from_last(mask: KSet, k: int, s: int, t: int) -> CascadeRep:
    """Cascade block profile of the colex segment of the window-hitting layer
    ending at the given member (read off the member alone, in O(k) steps)."""
    if mask.bit_count() != k:
        raise ParameterDomainError("profile_from_last needs a k-set mask")
    blocks: list[tuple[int, int, int]] = []
    cur = mask
    level = k
    hits = t
    while True:
        e = cur.bit_length()
        top = _colex_max_member(e, level, s, hits)
        if top is not None and cur == top:
            blocks.append((level, e, hits))
            break
        blocks.append((level, e - 1, hits))
        cur ^= 1 << (e - 1)
        level -= 1
        if e <= s and hits > 0:
            hits -= 1
    blocks.reverse()
    return CascadeRep(
        k=k,
        h=blocks[0][0],
        s=s,
        t=t,
        a=tuple(b[1] for b in blocks),
        t_levels=tuple(b[2] for b in blocks),
    )
