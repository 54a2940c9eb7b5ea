"""Finite uniform set families as integer bitmasks, with shadow/shift machinery.

A k-set over the universe {1..n} is an int mask with bit e-1 standing for element
e; a family is a sorted tuple of such masks.  For equal-size sets, numeric order
of masks coincides with colex order, so families are stored colex-ascending.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .combinatorics import ParameterDomainError

KSet = int

MAX_UNIVERSE = 64


def kset(elements: Iterable[int]) -> KSet:
    """Mask for a set given by its elements (1-based)."""
    mask = 0
    for e in elements:
        if e < 1:
            raise ParameterDomainError(f"elements are 1-based positive integers, got {e}")
        mask |= 1 << (e - 1)
    return mask


def elements(mask: KSet) -> tuple[int, ...]:
    """Elements of a mask, ascending."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


@dataclass(frozen=True)
class Family:
    """A family of k-subsets of {1..n}, stored deduplicated and colex-ascending."""

    n: int
    k: int
    members: tuple[KSet, ...]

    def __init__(self, n: int, k: int, members: Iterable[KSet] = ()):
        if not (0 <= n <= MAX_UNIVERSE):
            raise ParameterDomainError(f"universe size must be in 0..{MAX_UNIVERSE}, got {n}")
        if not 0 <= k <= n:
            raise ParameterDomainError(f"uniformity must satisfy 0 <= k <= n, got k={k} n={n}")
        full = (1 << n) - 1
        seen = sorted(set(members))
        for m in seen:
            if m & ~full:
                raise ParameterDomainError(f"member {elements(m)} leaves the universe 1..{n}")
            if m.bit_count() != k:
                raise ParameterDomainError(f"member {elements(m)} is not a {k}-set")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "members", tuple(seen))

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "Family":
        return cls(n, k, (kset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[KSet]:
        return iter(self.members)

    def __contains__(self, mask: KSet) -> bool:
        return mask in set(self.members)

    def member_sets(self) -> list[tuple[int, ...]]:
        return [elements(m) for m in self.members]

    def __repr__(self) -> str:
        return f"Family(n={self.n}, k={self.k}, {len(self.members)} members)"


def full_layer(n: int, k: int) -> Family:
    """All k-subsets of {1..n}."""
    return Family(n, k, (kset(c) for c in combinations(range(1, n + 1), k)))


def shadow(family: Family) -> Family:
    """All (k-1)-sets obtained by removing one element from a member."""
    if family.k == 0:
        raise ParameterDomainError("the shadow of a 0-uniform family is undefined")
    out: set[KSet] = set()
    for m in family.members:
        rest = m
        while rest:
            bit = rest & -rest
            out.add(m ^ bit)
            rest ^= bit
    return Family(family.n, family.k - 1, out)


def ell_shadow(family: Family, ell: int, method: str = "direct") -> Family:
    """All (k-ell)-sets contained in some member (1 <= ell <= k).

    method="direct" enumerates (k-ell)-subsets of each member; method="iterate"
    applies the one-step shadow ell times.  Both agree (tested property).
    """
    if not 1 <= ell <= family.k:
        raise ParameterDomainError(f"shadow depth needs 1 <= ell <= k, got ell={ell} k={family.k}")
    if method == "iterate":
        out = family
        for _ in range(ell):
            out = shadow(out)
        return out
    if method != "direct":
        raise ParameterDomainError(f"unknown shadow method {method!r}")
    result: set[KSet] = set()
    take = family.k - ell
    for m in family.members:
        for sub in combinations(elements(m), take):
            result.add(kset(sub))
    return Family(family.n, take, result)


def is_t_intersecting(family: Family, t: int) -> bool:
    """Every two distinct members share at least t elements (empty family: True)."""
    if t < 1:
        raise ParameterDomainError(f"intersection level must be >= 1, got {t}")
    if not family.members:
        return True
    if family.k < t:
        return False
    ms = family.members
    for idx, a in enumerate(ms):
        for b in ms[idx + 1 :]:
            if (a & b).bit_count() < t:
                return False
    return True


def _matching_search(members: tuple[KSet, ...], n: int, k: int, target: int | None) -> int:
    """Largest pairwise-disjoint subfamily size (stops early at target if given)."""
    if k == 0:
        return 1 if members else 0
    best = 0

    def rec(start: int, used: KSet, count: int) -> bool:
        nonlocal best
        if count > best:
            best = count
            if target is not None and best >= target:
                return True
        bound = count + (n - used.bit_count()) // k
        if bound <= best if target is None else bound < target:
            return False
        for idx in range(start, len(members)):
            m = members[idx]
            if not m & used:
                if rec(idx + 1, used | m, count + 1):
                    return True
        return False

    rec(0, 0, 0)
    return best


def matching_number(family: Family) -> int:
    """Maximum number of pairwise disjoint members (exact, branch and bound)."""
    return _matching_search(family.members, family.n, family.k, None)


def has_matching_of_size(family: Family, r: int) -> bool:
    """Whether some r members are pairwise disjoint (early-exit search)."""
    if r <= 0:
        return True
    return _matching_search(family.members, family.n, family.k, r) >= r


def cover_number(family: Family) -> int:
    """Minimum size of a vertex set meeting every member (exact, empty family: 0)."""
    if not family.members:
        return 0
    support = 0
    for m in family.members:
        support |= m
    verts = elements(support)
    for r in range(0, len(verts) + 1):
        for combo in combinations(verts, r):
            c = kset(combo)
            if all(m & c for m in family.members):
                return r
    raise AssertionError("unreachable: the full support always covers")


def shift_ij(family: Family, i: int, j: int) -> Family:
    """The (i,j) compression: replace j by i in a member when the result is new.

    A member A with j but not i becomes (A - j) + i unless that set is already in
    the family.  Requires 1 <= i < j <= n.  Preserves cardinality.
    """
    if not 1 <= i < j <= family.n:
        raise ParameterDomainError(f"shift needs 1 <= i < j <= n, got i={i} j={j} n={family.n}")
    bi = 1 << (i - 1)
    bj = 1 << (j - 1)
    present = set(family.members)
    out = []
    for m in family.members:
        if m & bj and not m & bi:
            moved = (m ^ bj) | bi
            out.append(m if moved in present else moved)
        else:
            out.append(m)
    return Family(family.n, family.k, out)


def _shift_closure_masks(masks: Iterable[KSet], n: int) -> list[KSet]:
    """Fixpoint of all (i,j) compressions, swept in lexicographic (i,j) order."""
    current = set(masks)
    bits = [1 << e for e in range(n)]
    changed = True
    while changed:
        changed = False
        for ii in range(n - 1):
            bi = bits[ii]
            for jj in range(ii + 1, n):
                bj = bits[jj]
                moved = []
                for m in current:
                    if m & bj and not m & bi:
                        cand = (m ^ bj) | bi
                        if cand not in current:
                            moved.append((m, cand))
                if moved:
                    changed = True
                    for old, new in moved:
                        current.discard(old)
                        current.add(new)
        # repeat sweeps until a whole pass is silent
    return sorted(current)


def shift_closure(family: Family) -> Family:
    """Apply all (i,j) compressions repeatedly until the family is shifted."""
    return Family(family.n, family.k, _shift_closure_masks(family.members, family.n))


def is_shifted(family: Family) -> bool:
    """Closed under replacing any element by any smaller absent element."""
    present = set(family.members)
    for m in family.members:
        for j in elements(m):
            bj = 1 << (j - 1)
            for i in range(1, j):
                bi = 1 << (i - 1)
                if not m & bi and ((m ^ bj) | bi) not in present:
                    return False
    return True


def degree(family: Family, v: int) -> int:
    """Number of members containing v."""
    if not 1 <= v <= family.n:
        raise ParameterDomainError(f"vertex must lie in 1..{family.n}, got {v}")
    bv = 1 << (v - 1)
    return sum(1 for m in family.members if m & bv)


def max_degree(family: Family) -> int:
    """Largest vertex degree (0 for the empty family)."""
    if not family.members:
        return 0
    return max(degree(family, v) for v in range(1, family.n + 1))


def link(family: Family, v: int) -> Family:
    """The (k-1)-sets A - v over members A containing v (universe kept)."""
    if not 1 <= v <= family.n:
        raise ParameterDomainError(f"vertex must lie in 1..{family.n}, got {v}")
    bv = 1 << (v - 1)
    return Family(family.n, family.k - 1, (m ^ bv for m in family.members if m & bv))


def delete_vertex(family: Family, v: int) -> Family:
    """Members avoiding v (universe kept)."""
    if not 1 <= v <= family.n:
        raise ParameterDomainError(f"vertex must lie in 1..{family.n}, got {v}")
    bv = 1 << (v - 1)
    return Family(family.n, family.k, (m for m in family.members if not m & bv))


def parse_family(text: str) -> Family:
    """Parse the plain-text family format.

    First significant line: ``n=<n> k=<k>``.  Every further significant line is
    one member as space-separated increasing elements.  Lines starting with ``#``
    and blank lines are ignored; inline ``#`` comments are stripped.
    """
    header: tuple[int, int] | None = None
    members: list[KSet] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = dict(p.split("=", 1) for p in line.split())
            if set(parts) != {"n", "k"}:
                raise ParameterDomainError(f"family header must be 'n=<n> k=<k>', got {raw!r}")
            header = (int(parts["n"]), int(parts["k"]))
            continue
        elems = [int(tok) for tok in line.split()]
        if any(b >= a for a, b in zip(elems[1:], elems)):
            raise ParameterDomainError(f"member elements must increase strictly: {raw!r}")
        if len(elems) != header[1]:
            raise ParameterDomainError(f"member {raw!r} does not have k={header[1]} elements")
        members.append(kset(elems))
    if header is None:
        raise ParameterDomainError("family text has no 'n=<n> k=<k>' header")
    return Family(header[0], header[1], members)


def format_family(family: Family) -> str:
    """Serialize a family to the plain-text format (members colex-ascending)."""
    lines = [f"n={family.n} k={family.k}"]
    lines.extend(" ".join(str(e) for e in elements(m)) for m in family.members)
    return "\n".join(lines) + "\n"
