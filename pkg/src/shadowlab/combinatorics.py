"""Exact arithmetic for restricted uniform layers and their colex initial segments.

Everything here is pure integer arithmetic (Python bignums, so results are exact at
any size).  The central objects are two parameterized families of k-sets:

* the *window-hitting layer* ``EM(n, k, s, t)``: k-subsets of {1..n} that meet the
  prefix window {1..s} in at least t elements;
* the *two-window layer* ``HM(n, k, s, t)``: k-subsets that either meet {1..s-1}, or
  contain s and meet {s+1..s+t}.

For each we provide closed-form sizes, greedy cascade representations of an
arbitrary count m (generalizing the binomial cascade used in the Kruskal-Katona
bound), and closed-form sizes of the ell-shadow of the first m members in colex
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ParameterDomainError(ValueError):
    """Arguments fall outside a function's documented domain."""


class NoRepresentationError(ValueError):
    """The requested count cannot be expressed by the requested cascade scheme."""


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the zero convention: 0 unless 0 <= b <= a."""
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def em_size(n: int, k: int, s: int, t: int) -> int:
    """Number of k-subsets of {1..n} meeting {1..s} in at least t elements.

    Domain: n >= k >= t >= 0 and s >= t.
    """
    if not (n >= k >= t >= 0 and s >= t):
        raise ParameterDomainError(
            f"em_size needs n >= k >= t >= 0 and s >= t, got n={n} k={k} s={s} t={t}"
        )
    return binom(n, k) - sum(binom(s, j) * binom(n - s, k - j) for j in range(t))


def em_size_general(n: int, k: int, s: int, t: int) -> int:
    """em_size extended to arbitrary integer parameters.

    Conventions: empty when k < 0 or n < k or t > min(k, s); the full layer when
    t <= 0.  Used wherever cascade blocks walk outside the strict em_size domain.
    """
    if k < 0 or n < k:
        return 0
    if t <= 0:
        return binom(n, k)
    if t > min(k, s):
        return 0
    return binom(n, k) - sum(binom(s, j) * binom(n - s, k - j) for j in range(t))


def hm_size(n: int, k: int, s: int, t: int) -> int:
    """Closed-form size of the two-window layer on {1..n}.

    Evaluates C(n,k) - C(n-s,k) - C(n-s-t,k-1), clamped at zero (the raw form goes
    negative in degenerate corners such as s = 0, where the family is empty).  The
    closed form equals the enumerated size whenever n >= s + t (the constructor's
    domain); outside it, small discrepancies exist and are surfaced by the
    verification module rather than corrected here.

    Domain: n >= k >= 1, s >= 0, t >= 0.
    """
    if not (n >= k >= 1 and s >= 0 and t >= 0):
        raise ParameterDomainError(
            f"hm_size needs n >= k >= 1, s >= 0, t >= 0, got n={n} k={k} s={s} t={t}"
        )
    value = binom(n, k) - binom(n - s, k) - binom(n - s - t, k - 1)
    return value if value > 0 else 0


def _hm_value(a: int, i: int, s: int, t: int) -> int:
    """hm_size without domain validation (still clamped at zero)."""
    if i < 0 or a < i:
        return 0
    value = binom(a, i) - binom(a - s, i) - binom(a - s - t, i - 1)
    return value if value > 0 else 0


@dataclass(frozen=True)
class CascadeRep:
    """Cascade representation of a count m over the window-hitting layers.

    Levels run h..k; the level-i block is the full layer of i-sets bounded by
    ``bound(i)`` needing ``hits_needed(i)`` window elements, so that

        m = sum over i in levels of em_size_general(bound(i), i, s, hits_needed(i)).

    ``a`` stores the bounds ascending by level (a[0] belongs to level h).  When
    ``t_levels`` is None every level requires t window hits (the constant-t
    scheme); otherwise t_levels stores the per-level requirement, which drops by
    one each time a tail element of the decomposition lands inside the window.
    """

    k: int
    h: int
    s: int
    t: int
    a: tuple[int, ...]
    t_levels: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not (1 <= self.h <= self.k):
            raise ParameterDomainError(f"cascade levels need 1 <= h <= k, got h={self.h} k={self.k}")
        if len(self.a) != self.k - self.h + 1:
            raise ParameterDomainError("cascade bound count does not match the level range")
        for off, (i, ai) in enumerate(zip(self.levels, self.a)):
            if ai < i:
                raise ParameterDomainError(f"cascade bound a_{i}={ai} below its level")
            if off + 1 < len(self.a) and not ai < self.a[off + 1]:
                raise ParameterDomainError("cascade bounds must increase strictly with the level")
        if self.t_levels is not None and len(self.t_levels) != len(self.a):
            raise ParameterDomainError("per-level hit counts do not match the level range")

    @property
    def levels(self) -> range:
        return range(self.h, self.k + 1)

    def bound(self, i: int) -> int:
        return self.a[i - self.h]

    def hits_needed(self, i: int) -> int:
        if self.t_levels is None:
            return self.t
        return self.t_levels[i - self.h]

    def tail_elements(self, i: int) -> tuple[int, ...]:
        """Elements adjoined to the level-i block: bound(j) + 1 for j in (i, k]."""
        return tuple(self.bound(j) + 1 for j in range(i + 1, self.k + 1))

    def evaluate(self) -> int:
        return sum(
            em_size_general(self.bound(i), i, self.s, self.hits_needed(i)) for i in self.levels
        )

    def shadow_size(self, ell: int) -> int:
        """Size of the ell-shadow of the represented colex initial segment."""
        if not 1 <= ell <= self.k - 1:
            raise ParameterDomainError(f"shadow depth needs 1 <= ell <= k-1, got ell={ell}")
        return sum(
            em_size_general(self.bound(i), i - ell, self.s, max(self.hits_needed(i) - ell, 0))
            for i in self.levels
        )


@dataclass(frozen=True)
class HMCascadeRep:
    """Cascade representation of a count m over the two-window layers.

    m = sum over i in h..k of the clamped closed form for the level-i block
    (bound ``a``, parameters s and t at every level).
    """

    k: int
    h: int
    s: int
    t: int
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (1 <= self.h <= self.k):
            raise ParameterDomainError(f"cascade levels need 1 <= h <= k, got h={self.h} k={self.k}")
        if len(self.a) != self.k - self.h + 1:
            raise ParameterDomainError("cascade bound count does not match the level range")
        for off, (i, ai) in enumerate(zip(self.levels, self.a)):
            if ai < i:
                raise ParameterDomainError(f"cascade bound a_{i}={ai} below its level")
            if off + 1 < len(self.a) and not ai < self.a[off + 1]:
                raise ParameterDomainError("cascade bounds must increase strictly with the level")

    @property
    def levels(self) -> range:
        return range(self.h, self.k + 1)

    def bound(self, i: int) -> int:
        return self.a[i - self.h]

    def tail_elements(self, i: int) -> tuple[int, ...]:
        return tuple(self.bound(j) + 1 for j in range(i + 1, self.k + 1))

    def evaluate(self) -> int:
        return sum(_hm_value(self.bound(i), i, self.s, self.t) for i in self.levels)


def _last_at_most(value_at, lo: int, hi: int, budget: int) -> int:
    """Largest a in [lo, hi] with value_at(a) <= budget.

    Requires value_at(lo) <= budget and value_at nondecreasing on [lo, hi].
    """
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if value_at(mid) <= budget:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _level_pick(value_at, lo: int, budget: int, cap: int | None, const_from: int | None):
    """Greedy bound for one cascade level: largest a with value_at(a) <= budget.

    value_at must be nondecreasing, strictly increasing without bound beyond
    const_from (pass const_from=None for that case everywhere); when const_from is
    given, value_at is constant for a >= const_from and the search never moves past
    it.  cap, when given, restricts to a < cap.  Returns (a, value) or None.
    """
    if cap is not None and cap <= lo:
        return None
    if value_at(lo) > budget:
        return None
    if const_from is not None:
        top = max(lo, const_from)
        if cap is not None:
            top = min(top, cap - 1)
    else:
        top = lo
        step = 1
        while (cap is None or top < cap - 1) and value_at(top) <= budget:
            top = top + step if cap is None else min(top + step, cap - 1)
            step *= 2
    if value_at(top) <= budget:
        a = top
    else:
        a = _last_at_most(value_at, lo, top, budget)
    return a, value_at(a)


def _greedy_em_blocks(m: int, k: int, s: int, t: int, vary_hits: bool):
    """Greedy cascade blocks [(level, bound, hits)] for the window-hitting layers.

    With vary_hits=False this is the constant-t scheme (levels stop at max(t, 1));
    with vary_hits=True the hit requirement drops by one whenever the implied tail
    element bound+1 lies inside the window, which makes the representation exist
    for every m up to the ambient capacity.
    """
    blocks: list[list[int]] = []
    budget = m
    cap: int | None = None
    hits = t
    floor = 1 if vary_hits else max(t, 1)
    for i in range(k, floor - 1, -1):
        if budget == 0:
            break
        if hits > min(i, s):
            break  # level family is empty; the remainder cannot be absorbed
        const = s if hits == i else None
        pick = _level_pick(lambda x: em_size_general(x, i, s, hits), i, budget, cap, const)
        if pick is None:
            break
        a, value = pick
        if value == 0:
            break
        blocks.append([i, a, hits])
        budget -= value
        cap = a
        if vary_hits and a + 1 <= s and hits > 0:
            hits -= 1
    if budget:
        raise NoRepresentationError(
            f"m={m} has no cascade representation for k={k} s={s} t={t}"
            + ("" if vary_hits else " with a constant hit requirement")
        )
    # Canonical terminal block: the minimal bound describing the same block family.
    i, a, hv = blocks[-1]
    value = em_size_general(a, i, s, hv)
    while a > i and em_size_general(a - 1, i, s, hv) == value:
        a -= 1
    blocks[-1][1] = a
    return blocks


def cascade_generalized(m: int, k: int, s: int, t: int) -> CascadeRep:
    """Greedy constant-t cascade representation of m over the window-hitting layers.

    m = sum over i in h..k of em_size(a_i, i, s, t) with a_k > ... > a_h >= h >=
    max(t, 1).  Such a representation does not exist for every m when t >= 2 (the
    level values can skip integers); NoRepresentationError is raised in that case.
    ``segment_profile`` provides the always-existing variable-hits alternative.

    Domain: k >= t >= 0, s >= t, m >= 1.
    """
    if not (k >= t >= 0 and s >= t and m >= 1):
        raise ParameterDomainError(
            f"cascade_generalized needs k >= t >= 0, s >= t, m >= 1, got m={m} k={k} s={s} t={t}"
        )
    blocks = _greedy_em_blocks(m, k, s, t, vary_hits=False)
    h = blocks[-1][0]
    return CascadeRep(k=k, h=h, s=s, t=t, a=tuple(b[1] for b in reversed(blocks)))


def cascade_standard(m: int, k: int) -> CascadeRep:
    """Greedy binomial cascade of m at uniformity k: m = sum C(a_i, i), a_k > ... > a_h >= h."""
    if not (m >= 1 and k >= 1):
        raise ParameterDomainError(f"cascade_standard needs m >= 1 and k >= 1, got m={m} k={k}")
    return cascade_generalized(m, k, 0, 0)


def segment_profile(m: int, k: int, s: int, t: int) -> CascadeRep:
    """Block profile of the first m members (colex) of the window-hitting layer.

    Same greedy scheme as cascade_generalized, except the hit requirement drops by
    one whenever the block's tail element lands inside the window.  This matches
    the actual block structure of the colex initial segment and exists for every
    m up to the ambient layer's capacity.

    Domain: k >= t >= 0, s >= t, m >= 1.
    """
    if not (k >= t >= 0 and s >= t and m >= 1):
        raise ParameterDomainError(
            f"segment_profile needs k >= t >= 0, s >= t, m >= 1, got m={m} k={k} s={s} t={t}"
        )
    blocks = _greedy_em_blocks(m, k, s, t, vary_hits=True)
    h = blocks[-1][0]
    return CascadeRep(
        k=k,
        h=h,
        s=s,
        t=t,
        a=tuple(b[1] for b in reversed(blocks)),
        t_levels=tuple(b[2] for b in reversed(blocks)),
    )


def _hm_level1_pick(budget: int, s: int, t: int, cap: int | None):
    """Terminal level-1 bound: minimal a whose closed-form value equals the budget."""
    top = s + t + 1
    if cap is not None:
        top = min(top, cap - 1)
    for a in range(1, top + 1):
        if _hm_value(a, 1, s, t) == budget:
            return a
    return None


def cascade_hm(m: int, k: int, s: int, t: int) -> HMCascadeRep:
    """Greedy cascade representation of m over the two-window layers.

    m = sum over i in h..k of the closed form C(a_i,i) - C(a_i-s,i) - C(a_i-s-t,i-1)
    with a_k > ... > a_h >= h >= 1.  Raises NoRepresentationError when m exceeds
    what the scheme can express (e.g. s = 0, or m beyond a finite capacity).

    Domain: k >= 1, s >= 0, t >= 0, m >= 1.
    """
    if not (k >= 1 and s >= 0 and t >= 0 and m >= 1):
        raise ParameterDomainError(
            f"cascade_hm needs k >= 1, s >= 0, t >= 0, m >= 1, got m={m} k={k} s={s} t={t}"
        )
    if s == 0 or (s == 1 and t == 0):
        raise NoRepresentationError(f"the two-window scheme is empty for s={s} t={t}")
    blocks: list[list[int]] = []
    budget = m
    cap: int | None = None
    for i in range(k, 0, -1):
        if budget == 0:
            break
        if i == 1:
            a1 = _hm_level1_pick(budget, s, t, cap)
            if a1 is None:
                break
            blocks.append([1, a1])
            budget = 0
            break
        const = t + 1 if (i == 2 and s == 1) else None
        pick = _level_pick(lambda x: _hm_value(x, i, s, t), i, budget, cap, const)
        if pick is None:
            break
        a, value = pick
        if value == 0:
            break
        blocks.append([i, a])
        budget -= value
        cap = a
    if budget:
        raise NoRepresentationError(f"m={m} has no two-window cascade for k={k} s={s} t={t}")
    i, a = blocks[-1]
    value = _hm_value(a, i, s, t)
    while a > i and _hm_value(a - 1, i, s, t) == value:
        a -= 1
    blocks[-1][1] = a
    h = blocks[-1][0]
    return HMCascadeRep(k=k, h=h, s=s, t=t, a=tuple(b[1] for b in reversed(blocks)))


def shadow_size_em_segment(m: int, k: int, s: int, t: int, ell: int) -> int:
    """Size of the ell-shadow of the first m colex members of the window-hitting layer.

    Evaluated blockwise over segment_profile(m, k, s, t): the level-i block with
    bound a and h hits contributes em_size_general(a, i - ell, s, max(h - ell, 0)).
    Exact for every m up to the ambient capacity.

    Domain: k >= t >= 0, s >= t, m >= 1, 1 <= ell <= k - 1.
    """
    if not (k >= t >= 0 and s >= t and m >= 1):
        raise ParameterDomainError(
            f"shadow_size_em_segment needs k >= t >= 0, s >= t, m >= 1, got m={m} k={k} s={s} t={t}"
        )
    if not 1 <= ell <= k - 1:
        raise ParameterDomainError(f"shadow depth needs 1 <= ell <= k-1, got ell={ell} k={k}")
    return segment_profile(m, k, s, t).shadow_size(ell)


def shadow_size_hm_segment(m: int, k: int, s: int, t: int) -> int:
    """Claimed size of the shadow of the first m colex members of the two-window layer.

    Evaluates sum C(a_i, i-1) over cascade_hm(m, k, s, t).  Caveat: the claim is
    known to overshoot for s = 1 (the verification module reports the deltas); for
    s >= 2 it matches direct computation on the tested grids.
    """
    rep = cascade_hm(m, k, s, t)
    return sum(binom(rep.bound(i), i - 1) for i in rep.levels)
