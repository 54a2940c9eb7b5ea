"""Brute-force verification of shadow lower bounds at desk scale.

Engines:

* exhaustive — every family of the layer (numpy subset-OR dynamic program when
  unconstrained, depth-first search with a node budget when constrained).
* shifted   — every shifted family, enumerated as downsets of the dominance
  order in one depth-first pass that records per-size minima.
* randomized — seeded random subfamilies of known extremal hosts, relabeled,
  compressed, and compared against the segment formula.  Trials are pure
  functions of (seed, trial index), so reports are byte-identical no matter
  how many worker processes are used.

All checks return a VerificationReport whose to_json() is stable (sorted keys,
integers rendered as decimal strings).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from itertools import combinations
from math import factorial
from multiprocessing import Pool
from random import Random

import numpy as np

from .colex import SegmentSpec, colex_rank, initial_segment, segment_shadow_size
from .combinatorics import (
    NoRepresentationError,
    ParameterDomainError,
    binom,
    em_size_general,
    hm_size,
    shadow_size_em_segment,
    shadow_size_hm_segment,
)
from .families import FamilySpec, build, threshold
from .setfamily import (
    Family,
    KSet,
    _matching_search,
    _shift_closure_masks,
    elements,
    full_layer,
    is_t_intersecting,
    kset,
    matching_number,
    shadow,
)

DEFAULT_BUDGET = 50_000_000


class BudgetExceededError(RuntimeError):
    """Raised when a search exceeds its node budget (see SHADOWLAB_BUDGET)."""


def resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("SHADOWLAB_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class Constraint:
    """A side condition on the families searched.

    kind: 't_intersecting' (every two members share >= t elements),
    'matching_at_most' (no s+1 pairwise disjoint members), or
    'subfamily_of' (members drawn from the given mask pool).
    """

    kind: str
    t: int | None = None
    s: int | None = None
    members: tuple[KSet, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind == "t_intersecting":
            if self.t is None or self.t < 1:
                raise ParameterDomainError("t_intersecting constraint needs t >= 1")
        elif self.kind == "matching_at_most":
            if self.s is None or self.s < 0:
                raise ParameterDomainError("matching_at_most constraint needs s >= 0")
        elif self.kind == "subfamily_of":
            if self.members is None:
                raise ParameterDomainError("subfamily_of constraint needs a member pool")
        else:
            raise ParameterDomainError(f"unknown constraint kind {self.kind!r}")


@dataclass
class VerificationReport:
    """Outcome of one check, serializable to stable JSON."""

    check_id: str
    params: dict
    verdict: str  # PASS | FAIL | REPORT-ONLY
    mode: str | None = None
    seed: int | None = None
    trials: int | None = None
    quantities: dict = field(default_factory=dict)
    witness: dict | list | None = None

    def to_dict(self) -> dict:
        out = {
            "schema": 1,
            "check_id": self.check_id,
            "params": self.params,
            "verdict": self.verdict,
            "quantities": self.quantities,
        }
        if self.mode is not None:
            out["mode"] = self.mode
        if self.seed is not None:
            out["seed"] = self.seed
        if self.trials is not None:
            out["trials"] = self.trials
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def to_json(self) -> str:
        return json.dumps(_stringify_ints(self.to_dict()), sort_keys=True, separators=(",", ":"))


def _stringify_ints(obj):
    """Render every int (not bool) as a decimal string, recursively."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(key): _stringify_ints(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify_ints(value) for value in obj]
    return obj


# ---------------------------------------------------------------------------
# minimum shadow search


def _layer_masks(n: int, k: int) -> list[KSet]:
    return [kset(c) for c in combinations(range(1, n + 1), k)]


def _slot_mask(mask: KSet, take: int) -> int:
    """Bitmask, over colex slot indices, of the take-subsets of mask."""
    out = 0
    for sub in combinations(elements(mask), take):
        out |= 1 << colex_rank(kset(sub))
    return out


def _exhaustive_profile(n: int, k: int, ell: int, budget: int):
    """Minimum ell-shadow over ALL m-element families, for every m at once.

    Returns (mins, pop, sizes) numpy arrays: mins[m] is the minimum, and a
    witness for m is decoded from the lowest subset index attaining it.
    """
    pool = sorted(_layer_masks(n, k))
    big = len(pool)
    slots = binom(n, k - ell)
    if (1 << big) > budget:
        raise BudgetExceededError(f"exhaustive search needs 2^{big} states, budget {budget}")
    dtype = np.uint8 if slots <= 8 else np.uint16 if slots <= 16 else np.uint32 if slots <= 32 else np.uint64
    if (1 << big) * dtype().itemsize > 1 << 31:
        raise BudgetExceededError(f"exhaustive table for 2^{big} states with {slots} slots is too large")
    subs = [_slot_mask(m, k - ell) for m in pool]
    arr = np.zeros(1 << big, dtype=dtype)
    for b in range(big):
        arr.reshape(-1, 1 << (b + 1))[:, 1 << b :] |= dtype(subs[b])
    sizes = np.bitwise_count(arr).astype(np.uint8)
    pop = np.bitwise_count(np.arange(1 << big, dtype=np.uint32)).astype(np.uint8)
    mins = np.full(big + 1, 255, dtype=np.uint8)
    np.minimum.at(mins, pop, sizes)
    return pool, mins, pop, sizes


def _decode_witness(pool: list[KSet], index: int) -> tuple[KSet, ...]:
    out = []
    bits = index
    while bits:
        low = bits & -bits
        out.append(pool[low.bit_length() - 1])
        bits ^= low
    return tuple(out)


def _pairwise_bitmasks(pool: list[KSet], constraint: Constraint | None):
    """conflict[i] = indices unusable together with i; disjoint[i] = indices disjoint from i."""
    big = len(pool)
    conflict = [0] * big
    disjoint = [0] * big
    need_conflict = constraint is not None and constraint.kind == "t_intersecting"
    need_disjoint = constraint is not None and constraint.kind == "matching_at_most"
    if not (need_conflict or need_disjoint):
        return conflict, disjoint
    for i in range(big):
        for j in range(i + 1, big):
            inter = (pool[i] & pool[j]).bit_count()
            if need_conflict and inter < constraint.t:
                conflict[i] |= 1 << j
                conflict[j] |= 1 << i
            if need_disjoint and inter == 0:
                disjoint[i] |= 1 << j
                disjoint[j] |= 1 << i
    return conflict, disjoint


def _packing_exists(avail: int, need: int, disjoint: list[int]) -> bool:
    """Whether avail (an index bitmask) holds `need` pairwise-disjoint pool members."""
    if need <= 0:
        return True
    while avail:
        if avail.bit_count() < need:
            return False
        low = avail & -avail
        avail ^= low
        if _packing_exists(avail & disjoint[low.bit_length() - 1], need - 1, disjoint):
            return True
    return False


def _immediate_predecessors(mask: KSet) -> list[KSet]:
    """Covers below mask in the dominance order: one element lowered by one."""
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        if low > 1 and not mask & (low >> 1):
            out.append((mask ^ low) | (low >> 1))
    return out


def _shifted_pool(n: int, k: int, constraint: Constraint | None) -> list[KSet]:
    """Masks that can appear in a shifted family meeting the constraint.

    In a shifted family where every two members intersect, each member has
    some position i with i-th smallest element <= 2i-1; that prefilter cuts
    the pool hard for the intersecting case.
    """
    pool = sorted(_layer_masks(n, k))
    if constraint is not None and constraint.kind == "t_intersecting" and constraint.t == 1:
        keep = []
        for mask in pool:
            elems = elements(mask)
            if any(elems[i] <= 2 * i + 1 for i in range(len(elems))):
                keep.append(mask)
        return keep
    return pool


def _dfs_min_shadow(
    pool: list[KSet],
    n: int,
    k: int,
    ell: int,
    m_max: int,
    constraint: Constraint | None,
    shifted: bool,
    budget: int,
):
    """One DFS pass recording, for every size up to m_max, the minimum ell-shadow.

    In shifted mode the enumeration runs over downsets of the dominance order
    (members added in increasing colex position, all predecessors present).
    Returns (best, witnesses): arrays indexed by family size; inf where no
    family of that size satisfies the constraints.
    """
    big = len(pool)
    index_of = {mask: i for i, mask in enumerate(pool)}
    subs = [_slot_mask(m, k - ell) for m in pool]
    conflict, disjoint = _pairwise_bitmasks(pool, constraint)
    match_cap = constraint.s if constraint is not None and constraint.kind == "matching_at_most" else None
    preds = [0] * big
    if shifted:
        for i, mask in enumerate(pool):
            bits = 0
            for p in _immediate_predecessors(mask):
                j = index_of.get(p)
                if j is None:
                    bits = -1  # a predecessor was filtered out: mask can never appear
                    break
                bits |= 1 << j
            preds[i] = bits

    best = [None] * (m_max + 1)
    witnesses: list[tuple[KSet, ...] | None] = [None] * (m_max + 1)
    best[0] = 0
    witnesses[0] = ()
    nodes = 0

    def reachable_improvement(count: int, start: int, shadow_count: int) -> bool:
        top = min(m_max, count + big - start)
        for c in range(count + 1, top + 1):
            if best[c] is None or shadow_count < best[c]:
                return True
        return False

    def rec(start: int, chosen_bm: int, chosen: list[KSet], shadow_mask: int, count: int) -> None:
        nonlocal nodes
        if count >= m_max:
            return
        if not reachable_improvement(count, start, shadow_mask.bit_count()):
            return
        for i in range(start, big):
            if shifted and (preds[i] == -1 or preds[i] & ~chosen_bm):
                continue
            if conflict[i] & chosen_bm:
                continue
            if match_cap is not None and _packing_exists(
                chosen_bm & disjoint[i], match_cap, disjoint
            ):
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(f"search exceeded budget of {budget} nodes")
            new_mask = shadow_mask | subs[i]
            new_count = count + 1
            chosen.append(pool[i])
            size = new_mask.bit_count()
            if best[new_count] is None or size < best[new_count]:
                best[new_count] = size
                witnesses[new_count] = tuple(chosen)
            rec(i + 1, chosen_bm | (1 << i), chosen, new_mask, new_count)
            chosen.pop()

    rec(0, 0, [], 0, 0)
    return best, witnesses


def min_shadow(
    n: int,
    k: int,
    m: int,
    ell: int = 1,
    constraint: Constraint | None = None,
    mode: str = "exhaustive",
    budget: int | None = None,
) -> tuple[int, tuple[KSet, ...]]:
    """Minimum |ell-shadow| over families of m distinct k-sets from {1..n}.

    mode='exhaustive' searches all families (subject to the constraint);
    mode='shifted' searches shifted families only, which suffices for bounds
    preserved by compressions.  Returns the minimum and a witness family.
    """
    if not (0 <= k <= n):
        raise ParameterDomainError(f"need 0 <= k <= n, got n={n} k={k}")
    if not 1 <= ell <= max(k - 1, 0) and not (k >= 1 and ell == k):
        raise ParameterDomainError(f"shadow depth needs 1 <= ell <= k, got ell={ell} k={k}")
    if m < 0 or m > binom(n, k):
        raise ParameterDomainError(f"no family of {m} distinct {k}-sets inside {{1..{n}}}")
    budget = resolve_budget(budget)
    if m == 0:
        return 0, ()
    if mode == "exhaustive":
        if constraint is None:
            pool, mins, pop, sizes = _exhaustive_profile(n, k, ell, budget)
            value = int(mins[m])
            hit = np.flatnonzero((pop == m) & (sizes == value))
            return value, _decode_witness(pool, int(hit[0]))
        pool = (
            sorted(constraint.members)
            if constraint.kind == "subfamily_of"
            else sorted(_layer_masks(n, k))
        )
        best, wit = _dfs_min_shadow(pool, n, k, ell, m, constraint, False, budget)
    elif mode == "shifted":
        if constraint is not None and constraint.kind == "subfamily_of":
            raise ParameterDomainError("subfamily_of is not meaningful for shifted search")
        pool = _shifted_pool(n, k, constraint)
        best, wit = _dfs_min_shadow(pool, n, k, ell, m, constraint, True, budget)
    else:
        raise ParameterDomainError(f"unknown search mode {mode!r}")
    if best[m] is None:
        raise ParameterDomainError(f"no family of size {m} satisfies the constraint")
    return best[m], wit[m]


# ---------------------------------------------------------------------------
# scans and theorem checks


def kk_scan(n: int, k: int, ell: int = 1, m_max: int | None = None, budget: int | None = None) -> VerificationReport:
    """Exhaustive check that colex initial segments minimize the ell-shadow."""
    budget = resolve_budget(budget)
    total = binom(n, k)
    m_max = total if m_max is None else min(m_max, total)
    pool, mins, pop, sizes = _exhaustive_profile(n, k, ell, budget)
    rows = []
    mismatches = []
    for m in range(0, m_max + 1):
        seg = segment_shadow_size(SegmentSpec("full", k=k, m=m, n=n), ell) if m else 0
        got = int(mins[m]) if m else 0
        rows.append({"m": m, "minimum": got, "segment": seg})
        if got != seg:
            mismatches.append({"m": m, "minimum": got, "segment": seg})
    return VerificationReport(
        check_id="kk",
        params={"n": n, "k": k, "ell": ell, "m_max": m_max},
        mode="exhaustive",
        verdict="PASS" if not mismatches else "FAIL",
        quantities={"rows": rows, "mismatches": mismatches},
    )


def check_theorem_1_3(
    n: int,
    k: int,
    ell: int = 1,
    mode: str = "shifted",
    budget: int | None = None,
    sweep: bool = True,
) -> VerificationReport:
    """Shadow bound for intersecting families above the size threshold.

    Above the threshold the minimum ell-shadow must match the star-segment
    value; at the threshold itself the family that meets the window {1..3}
    twice shows the bound would fail (near miss), so the threshold is sharp.
    """
    thr = threshold("t13", n, k).exact
    cap = binom(n - 1, k - 1)
    quantities: dict = {"threshold": thr, "max_size": cap}
    violations = []
    if sweep:
        budget = resolve_budget(budget)
        pool = _shifted_pool(n, k, Constraint("t_intersecting", t=1))
        best, wit = _dfs_min_shadow(
            pool, n, k, ell, cap, Constraint("t_intersecting", t=1), mode == "shifted", budget
        )
        rows = []
        for m in range(thr + 1, cap + 1):
            bound = shadow_size_em_segment(m, k, 1, 1, ell)
            got = best[m]
            rows.append({"m": m, "minimum": got, "bound": bound})
            if got is None or got < bound:
                violations.append(
                    {
                        "m": m,
                        "minimum": got,
                        "bound": bound,
                        "witness": [w for w in (wit[m] or ())],
                    }
                )
        quantities["rows"] = rows
        quantities["violations"] = violations
        quantities["violation_count"] = len(violations)
    if k == 3:
        fam = build(FamilySpec("em", n, k, s=3, t=2))
        near_shadow = len(shadow(fam))
        seg = shadow_size_em_segment(thr, k, 1, 1, ell)
        quantities["near_miss"] = {
            "m": thr,
            "family_shadow": near_shadow,
            "segment_bound": seg,
            "strict": near_shadow < seg,
        }
        sharp = near_shadow < seg
    else:
        sharp = True
    verdict = "PASS" if not violations and sharp else "FAIL"
    return VerificationReport(
        check_id="t13",
        params={"n": n, "k": k, "ell": ell},
        mode=mode if sweep else "direct",
        verdict=verdict,
        quantities=quantities,
    )


def fact_17_scan(k: int, t: int, n_range: range, ell: int = 1) -> VerificationReport:
    """Compare the (t+2, t+1)-window family against the segment bound at its size.

    For each n the family has a closed-form ell-shadow; the scan locates the
    least n from which that shadow falls strictly below the segment value and
    stays below through the range.
    """
    rows = []
    for n in n_range:
        m = em_size_general(n, k, t + 2, t + 1)
        left = em_size_general(n, k - ell, t + 2, t + 1 - ell)
        right = shadow_size_em_segment(m, k, t, t, ell)
        rows.append({"n": n, "m": m, "family_shadow": left, "segment_bound": right, "strict": left < right})
    first = None
    for idx in range(len(rows) - 1, -1, -1):
        if not rows[idx]["strict"]:
            first = rows[idx + 1]["n"] if idx + 1 < len(rows) else None
            break
    else:
        first = rows[0]["n"] if rows else None
    return VerificationReport(
        check_id="fact17",
        params={"k": k, "t": t, "ell": ell, "n_min": n_range.start, "n_max": n_range.stop - 1},
        mode="scan",
        verdict="PASS" if first is not None else "FAIL",
        quantities={"rows": rows, "first_strict_n": first},
    )


def post_t111_scan(k: int, s: int, n_range: range) -> VerificationReport:
    """Compare the two-hit wide-window family against the segment bound at its size.

    The family meets {1..2s+1} in at least two elements, so s+1 members cannot
    be pairwise disjoint; its shadow sits strictly below the matching-bound
    segment value once n is modest, showing the size threshold is needed.
    """
    rows = []
    for n in n_range:
        fam = build(FamilySpec("em", n, k, s=2 * s + 1, t=2))
        m = len(fam)
        left = len(shadow(fam))
        right = shadow_size_em_segment(m, k, s, 1, 1)
        rows.append({"n": n, "m": m, "family_shadow": left, "segment_bound": right, "strict": left < right})
    first = None
    for idx in range(len(rows) - 1, -1, -1):
        if not rows[idx]["strict"]:
            first = rows[idx + 1]["n"] if idx + 1 < len(rows) else None
            break
    else:
        first = rows[0]["n"] if rows else None
    return VerificationReport(
        check_id="post_t111",
        params={"k": k, "s": s, "n_min": n_range.start, "n_max": n_range.stop - 1},
        mode="scan",
        verdict="PASS" if first is not None else "FAIL",
        quantities={"rows": rows, "first_strict_n": first},
    )


# ---------------------------------------------------------------------------
# randomized checks


def _relabeled(mask: KSet, image: list[int]) -> KSet:
    out = 0
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        out |= 1 << image[low.bit_length() - 1]
    return out


def _one_shadow_count(masks: list[KSet]) -> int:
    out: set[KSet] = set()
    for m in masks:
        rest = m
        while rest:
            bit = rest & -rest
            out.add(m ^ bit)
            rest ^= bit
    return len(out)


def _t16_trial(payload) -> tuple:
    seed, trial, n, k, t, host = payload
    rng = Random(f"{seed}:{trial}")
    m = rng.randint(1, min(len(host), 60))
    sample = rng.sample(host, m)
    image = rng.sample(range(n), n)
    relabeled = [_relabeled(mask, image) for mask in sample]
    compressed = _shift_closure_masks(relabeled, n)
    lhs = _one_shadow_count(compressed)
    rhs = shadow_size_em_segment(m, k, t, t, 1)
    return (trial, m, lhs, rhs, lhs >= rhs)


def _t111_trial(payload) -> tuple:
    seed, trial, n, k, s, em_host, full_host, full_n, cutoff = payload
    rng = Random(f"{seed}:{trial}")
    use_full = trial % 2 == 1
    host, host_n = (full_host, full_n) if use_full else (em_host, n)
    m = rng.randint(1, min(len(host), 60))
    sample = rng.sample(host, m)
    image = rng.sample(range(n), host_n)
    relabeled = [_relabeled(mask, image) for mask in sample]
    compressed = _shift_closure_masks(relabeled, n)
    lhs = _one_shadow_count(compressed)
    rhs = shadow_size_em_segment(m, k, s, 1, 1)
    asserted = (not use_full) or m > cutoff
    ok = lhs >= rhs if asserted else True
    return (trial, "full" if use_full else "window", m, lhs, rhs, asserted, ok)


def _run_trials(worker, payloads, jobs: int) -> list:
    if jobs <= 1:
        return [worker(p) for p in payloads]
    chunk = max(1, (len(payloads) + jobs - 1) // jobs)
    with Pool(jobs) as pool:
        return pool.map(worker, payloads, chunksize=chunk)


def check_theorem_1_6(
    n: int,
    k: int,
    t: int,
    ell: int = 1,
    mode: str = "randomized",
    seed: int = 0xC0FFEE,
    trials: int = 10_000,
    jobs: int = 1,
    budget: int | None = None,
) -> VerificationReport:
    """Shadow bound for t-intersecting families.

    randomized mode samples subfamilies of the t-core host (all members share
    {1..t}), relabels, compresses, and requires the one-step shadow to reach
    the segment value — valid at every size because compression subfamilies
    of the host stay t-intersecting and the bound is relabel-invariant.
    """
    if ell != 1:
        raise ParameterDomainError("randomized and swept checks compare one-step shadows (ell=1)")
    thr = threshold("t16", n, k, t=t)
    if mode == "randomized":
        host = tuple(build(FamilySpec("em", n, k, s=t, t=t)).members)
        payloads = [(seed, trial, n, k, t, host) for trial in range(trials)]
        results = _run_trials(_t16_trial, payloads, jobs)
        violations = [r for r in results if not r[4]]
        margins = [r[2] - r[3] for r in results]
        quantities = {
            "threshold": thr.exact,
            "host_size": len(host),
            "violations": [
                {"trial": r[0], "m": r[1], "shadow": r[2], "bound": r[3]} for r in violations[:20]
            ],
            "violation_count": len(violations),
            "min_margin": min(margins),
            "max_m": max(r[1] for r in results),
        }
        return VerificationReport(
            check_id="t16",
            params={"n": n, "k": k, "t": t, "ell": ell},
            mode=mode,
            seed=seed,
            trials=trials,
            verdict="PASS" if not violations else "FAIL",
            quantities=quantities,
        )
    if mode not in ("shifted", "exhaustive"):
        raise ParameterDomainError(f"unknown mode {mode!r} for the t-intersecting check")
    budget = resolve_budget(budget)
    cap = binom(n - t, k - t)
    constraint = Constraint("t_intersecting", t=t)
    pool = _shifted_pool(n, k, constraint) if mode == "shifted" else sorted(_layer_masks(n, k))
    best, wit = _dfs_min_shadow(pool, n, k, ell, cap, constraint, mode == "shifted", budget)
    violations = []
    rows = []
    for m in range(thr.exact + 1, cap + 1):
        bound = shadow_size_em_segment(m, k, t, t, ell)
        got = best[m]
        rows.append({"m": m, "minimum": got, "bound": bound})
        if got is None or got < bound:
            violations.append({"m": m, "minimum": got, "bound": bound})
    return VerificationReport(
        check_id="t16",
        params={"n": n, "k": k, "t": t, "ell": ell},
        mode=mode,
        verdict="PASS" if not violations else "FAIL",
        quantities={"threshold": thr.exact, "rows": rows, "violations": violations},
    )


def check_theorem_1_11(
    n: int,
    k: int,
    s: int,
    mode: str = "randomized",
    seed: int = 0xC0FFEE,
    trials: int = 10_000,
    jobs: int = 1,
    budget: int | None = None,
) -> VerificationReport:
    """Shadow bound for families whose matching number is at most s.

    randomized mode alternates two hosts: the window family (meets {1..s};
    bound valid at every size) and the full layer on (s+1)k-1 points (bound
    asserted only above the asymptotic cutoff, which may be vacuous at desk
    scale — vacuous trials are counted, not asserted).
    """
    thr = threshold("t111", n, k, s=s)
    cutoff = thr.cutoff()
    if mode == "randomized":
        em_host_family = build(FamilySpec("em", n, k, s=s, t=1))
        full_n = (s + 1) * k - 1
        full_host_family = full_layer(full_n, k)
        nu_em = matching_number(em_host_family)
        nu_full = matching_number(full_host_family)
        em_host = tuple(em_host_family.members)
        full_host = tuple(full_host_family.members)
        payloads = [
            (seed, trial, n, k, s, em_host, full_host, full_n, cutoff) for trial in range(trials)
        ]
        results = _run_trials(_t111_trial, payloads, jobs)
        violations = [r for r in results if not r[6]]
        asserted = [r for r in results if r[5]]
        vacuous = trials - len(asserted)
        quantities = {
            "cutoff": cutoff,
            "cutoff_vacuous_for_full_host": cutoff >= min(len(full_host), 60),
            "host_sizes": {"window": len(em_host), "full": len(full_host)},
            "host_matching_numbers": {"window": nu_em, "full": nu_full},
            "violation_count": len(violations),
            "violations": [
                {"trial": r[0], "host": r[1], "m": r[2], "shadow": r[3], "bound": r[4]}
                for r in violations[:20]
            ],
            "vacuous_trials": vacuous,
            "min_margin": min(r[3] - r[4] for r in asserted) if asserted else None,
        }
        verdict = "PASS" if not violations and nu_em <= s and nu_full <= s else "FAIL"
        return VerificationReport(
            check_id="t111",
            params={"n": n, "k": k, "s": s},
            mode=mode,
            seed=seed,
            trials=trials,
            verdict=verdict,
            quantities=quantities,
        )
    if mode not in ("shifted", "exhaustive"):
        raise ParameterDomainError(f"unknown mode {mode!r} for the matching-bound check")
    budget = resolve_budget(budget)
    constraint = Constraint("matching_at_most", s=s)
    cap = min(binom(n, k), em_size_general(n, k, s, 1) + binom(n, k - 2))
    pool = _shifted_pool(n, k, constraint) if mode == "shifted" else sorted(_layer_masks(n, k))
    best, wit = _dfs_min_shadow(pool, n, k, 1, cap, constraint, mode == "shifted", budget)
    rows = []
    violations = []
    for m in range(cutoff + 1, cap + 1):
        bound = shadow_size_em_segment(m, k, s, 1, 1)
        got = best[m]
        rows.append({"m": m, "minimum": got, "bound": bound})
        if got is not None and got < bound:
            violations.append({"m": m, "minimum": got, "bound": bound})
    return VerificationReport(
        check_id="t111",
        params={"n": n, "k": k, "s": s},
        mode=mode,
        verdict="PASS" if not violations else "FAIL",
        quantities={"cutoff": cutoff, "rows": rows, "violations": violations},
    )


# ---------------------------------------------------------------------------
# formula cross-checks


def em_segment_shadow_grid(
    n_max: int = 10, k_max: int = 5, s_max: int = 4, ell_all: bool = True
) -> VerificationReport:
    """Segment shadow formula vs. direct enumeration over a dense grid.

    For every window layer (including the full layer at s=t=0) the running
    colex segment is grown one member at a time while its ell-shadow set is
    maintained incrementally, so each length m is compared exactly once.
    """
    from .colex import _stream  # local: private streaming helper

    cells = 0
    comparisons = 0
    mismatches = []
    for n in range(2, n_max + 1):
        for k in range(1, min(n, k_max) + 1):
            for s in range(0, s_max + 1):
                for t in range(0, min(k, s) + 1):
                    total = em_size_general(n, k, s, t)
                    if total == 0:
                        continue
                    ells = range(1, k) if ell_all else [1]
                    for ell in ells:
                        spec = SegmentSpec("em", k=k, m=total, n=n, s=s, t=t)
                        cells += 1
                        seen: set[KSet] = set()
                        count = 0
                        take = k - ell
                        for idx, mask in enumerate(_stream(spec)):
                            if idx >= total:
                                break
                            for sub in combinations(elements(mask), take):
                                key = kset(sub)
                                if key not in seen:
                                    seen.add(key)
                                    count += 1
                            m = idx + 1
                            formula = shadow_size_em_segment(m, k, s, t, ell)
                            comparisons += 1
                            if formula != count:
                                mismatches.append(
                                    {"n": n, "k": k, "s": s, "t": t, "ell": ell, "m": m,
                                     "formula": formula, "direct": count}
                                )
    return VerificationReport(
        check_id="em_segment_shadow_grid",
        params={"n_max": n_max, "k_max": k_max, "s_max": s_max},
        mode="exhaustive",
        verdict="PASS" if not mismatches else "FAIL",
        quantities={"cells": cells, "comparisons": comparisons, "mismatches": mismatches[:50],
                    "mismatch_count": len(mismatches)},
    )


def cascade_roundtrip_grid(k_max: int = 6, s_max: int = 5, m_cap: int = 5000) -> VerificationReport:
    """Round-trip, canonicity, and constant-hits agreement for representations.

    For every (k, s, t) and every length up to the cap: the varying-hits
    profile must evaluate back to the length and must match the profile read
    off the last member of the segment (canonical uniqueness); where the
    constant-hits representation exists its value must round-trip too, and
    the lengths where it does not exist are counted as gaps.
    """
    from .colex import _stream_em_masks, profile_from_last
    from .combinatorics import cascade_generalized, segment_profile

    checked = 0
    gaps = 0
    gap_cells: dict = {}
    failures = []
    for k in range(1, k_max + 1):
        for s in range(0, s_max + 1):
            for t in range(0, min(k, s) + 1):
                capacity = binom(s, k) if t == k else None
                top = m_cap if capacity is None else min(m_cap, capacity)
                if top == 0:
                    continue
                stream = _stream_em_masks(k, s, t, None)
                cell_gaps = 0
                for m in range(1, top + 1):
                    last = next(stream)
                    prof = segment_profile(m, k, s, t)
                    ok_value = prof.evaluate() == m
                    walk = profile_from_last(last, k, s, t)
                    ok_walk = walk == prof
                    try:
                        const = cascade_generalized(m, k, s, t)
                        ok_const = const.evaluate() == m
                    except NoRepresentationError:
                        ok_const = True
                        cell_gaps += 1
                    if not (ok_value and ok_walk and ok_const):
                        failures.append(
                            {"k": k, "s": s, "t": t, "m": m,
                             "value_ok": ok_value, "walk_ok": ok_walk, "const_ok": ok_const}
                        )
                    checked += 1
                if cell_gaps:
                    gap_cells[f"k={k},s={s},t={t}"] = cell_gaps
                    gaps += cell_gaps
    return VerificationReport(
        check_id="cascade_roundtrip_grid",
        params={"k_max": k_max, "s_max": s_max, "m_cap": m_cap},
        mode="exhaustive",
        verdict="PASS" if not failures else "FAIL",
        quantities={"checked": checked, "failures": failures[:50], "failure_count": len(failures),
                    "constant_hits_gaps": gaps, "gap_cells": gap_cells},
    )


def hm_shadow_formula_scan(n_max: int = 10, k_max: int = 5, s_max: int = 4, t_max: int = 4) -> VerificationReport:
    """Two-window full-family shadow formula vs. direct enumeration.

    The formula is exact for window width s >= 2; at s = 1 it overcounts, and
    those cells are collected as report-only discrepancies rather than
    failures (the first one appears at n=6, k=3, s=1, t=1: claimed 15, actual 9).
    """
    mismatches_wide = []
    deltas_s1 = []
    cells = 0
    for n in range(2, n_max + 1):
        for k in range(2, min(n, k_max) + 1):
            for s in range(1, s_max + 1):
                for t in range(0, t_max + 1):
                    if n < s + t or (s == 1 and t == 0):
                        continue
                    m = hm_size(n, k, s, t)
                    if m == 0:
                        continue
                    try:
                        formula = shadow_size_hm_segment(m, k, s, t)
                    except NoRepresentationError:
                        continue
                    fam = initial_segment(SegmentSpec("hm", k=k, m=m, n=n, s=s, t=t))
                    direct = len(shadow(fam))
                    cells += 1
                    if formula != direct:
                        row = {"n": n, "k": k, "s": s, "t": t, "m": m,
                               "formula": formula, "direct": direct}
                        if s == 1:
                            deltas_s1.append(row)
                        else:
                            mismatches_wide.append(row)
    return VerificationReport(
        check_id="hm_shadow_formula_scan",
        params={"n_max": n_max, "k_max": k_max, "s_max": s_max, "t_max": t_max},
        mode="exhaustive",
        verdict="PASS" if not mismatches_wide else "FAIL",
        quantities={"cells": cells, "wide_mismatches": mismatches_wide[:20],
                    "narrow_window_discrepancies": deltas_s1,
                    "narrow_window_discrepancy_count": len(deltas_s1)},
    )


def shifting_suite(trials: int = 10_000, seed: int = 0xC0FFEE) -> VerificationReport:
    """Randomized invariants of single compressions S_ij.

    Each trial draws a random family (n in 6..12, k in 1..4) and applies every
    compression S_ij once, asserting: the size is preserved; t-intersection
    (t = 1, 2) is preserved when present; the matching number does not grow;
    and the ell-shadow (ell = 1, 2) does not grow.
    """
    violations = []
    checked = 0
    for trial in range(trials):
        rng = Random(f"{seed}:shift:{trial}")
        n = rng.randint(6, 12)
        k = rng.randint(1, 4)
        m = rng.randint(1, 15)
        layer = binom(n, k)
        m = min(m, layer)
        members = []
        seen = set()
        while len(members) < m:
            mask = 0
            for e in rng.sample(range(1, n + 1), k):
                mask |= 1 << (e - 1)
            if mask not in seen:
                seen.add(mask)
                members.append(mask)
        fam = Family(n, k, members)
        inter1 = is_t_intersecting(fam, 1)
        inter2 = is_t_intersecting(fam, 2) if k >= 2 else False
        nu = _matching_search(fam.members, n, k, None)
        shadow_sizes = {}
        for ell in (1, 2):
            if 1 <= ell <= k - 1 or (k >= 1 and ell == k):
                if ell <= k:
                    shadow_sizes[ell] = _ell_shadow_count(fam.members, k, ell)
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                shifted = _apply_shift(fam.members, i, j)
                checked += 1
                bad = None
                if len(set(shifted)) != m:
                    bad = "size"
                elif inter1 and not _pairwise_t(shifted, 1):
                    bad = "lost one-intersection"
                elif inter2 and not _pairwise_t(shifted, 2):
                    bad = "lost two-intersection"
                elif _matching_search(tuple(sorted(shifted)), n, k, nu + 1) >= nu + 1:
                    bad = "matching grew"
                else:
                    for ell, before in shadow_sizes.items():
                        if _ell_shadow_count(shifted, k, ell) > before:
                            bad = f"shadow depth {ell} grew"
                            break
                if bad:
                    violations.append({"trial": trial, "n": n, "k": k, "i": i, "j": j,
                                       "reason": bad, "members": list(fam.members)})
    return VerificationReport(
        check_id="shifting_suite",
        params={"n_range": [6, 12], "k_range": [1, 4]},
        mode="randomized",
        seed=seed,
        trials=trials,
        verdict="PASS" if not violations else "FAIL",
        quantities={"applications": checked, "violation_count": len(violations),
                    "violations": violations[:20]},
    )


def _apply_shift(members: tuple[KSet, ...], i: int, j: int) -> list[KSet]:
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    present = set(members)
    out = []
    for m in members:
        if m & bj and not m & bi:
            cand = (m ^ bj) | bi
            out.append(cand if cand not in present else m)
        else:
            out.append(m)
    return out


def _pairwise_t(masks: list[KSet], t: int) -> bool:
    for a, b in combinations(set(masks), 2):
        if (a & b).bit_count() < t:
            return False
    return True


def _ell_shadow_count(masks, k: int, ell: int) -> int:
    take = k - ell
    seen = set()
    for m in masks:
        for sub in combinations(elements(m), take):
            seen.add(sub)
    return len(seen)


# ---------------------------------------------------------------------------
# real-valued size solver


def _binom_real(x: float, j: int) -> float:
    out = 1.0
    for i in range(j):
        out *= x - i
    return out / factorial(j)


def solve_real_size(m: int, k: int, s: int, t: int, form: str = "em") -> float:
    """The real x with layer-size polynomial equal to m, by bisection to 1e-9.

    form='em': sum over j >= t of C(s,j) * C(x-s, k-j), increasing for
    x >= s+k-t-1.  form='hm': C(x,k) - C(x-s,k) - C(x-s-t,k-1), increasing
    for x >= s+t+k-1.  Raises if m < 1 or if m is below the value at the
    left end of the monotone domain.
    """
    if m < 1:
        raise ParameterDomainError(f"size to invert must be >= 1, got m={m}")
    if k < 1 or s < 0 or t < 0:
        raise ParameterDomainError(f"need k >= 1 and s, t >= 0, got k={k} s={s} t={t}")
    if form == "em":
        if t > min(k, s):
            raise ParameterDomainError(f"empty window layer: t={t} exceeds min(k={k}, s={s})")
        lo = float(s + k - t - 1)

        def f(x: float) -> float:
            return sum(binom(s, j) * _binom_real(x - s, k - j) for j in range(t, min(s, k) + 1))

    elif form == "hm":
        if s < 1 or (s == 1 and t == 0):
            raise ParameterDomainError(f"two-window form needs s >= 1 and (s, t) != (1, 0), got s={s} t={t}")
        lo = float(s + t + k - 1)

        def f(x: float) -> float:
            return _binom_real(x, k) - _binom_real(x - s, k) - _binom_real(x - s - t, k - 1)

    else:
        raise ParameterDomainError(f"unknown form {form!r} (use 'em' or 'hm')")
    if f(lo) > m:
        raise ParameterDomainError(
            f"m={m} is below the polynomial's value {f(lo):.3f} at the domain edge x={lo}"
        )
    hi = lo + 1.0
    while f(hi) < m:
        hi = lo + 2.0 * (hi - lo)
    while hi - lo > 1e-9:
        mid = 0.5 * (lo + hi)
        if f(mid) < m:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
