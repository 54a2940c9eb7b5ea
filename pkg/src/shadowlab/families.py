"""Named extremal families, their closed-form sizes, and theorem thresholds.

Catalog (spec-string name in parentheses):

* ``ekr``   — k-sets containing element 1 (the star).
* ``em``    — k-sets meeting the window {1..s} in at least t elements.
* ``akt``   — k-sets containing {1..t} and meeting {t+1..k+1}, plus the t sets
              {1..k+1} minus one window element.
* ``hm``    — two-window family: meet {1..s-1}, or contain s and meet {s+1..s+t}.
* ``hmt``   — star members meeting {2..k} or containing {k+1..k+t}, plus the t
              sets {2..k, k+i}.
* ``h0..h5``— the six small 3-uniform configurations (up-closed to k-sets for
              k >= 4) that appear as near-extremal examples.
* ``pf``    — with s: the chain-of-transversals family over s disjoint blocks;
              without s: the family generated by triples {1, y, z} across two
              fixed windows plus four exceptional sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .combinatorics import ParameterDomainError, binom, em_size_general, hm_size
from .setfamily import Family, KSet, kset

FAMILY_NAMES = ("ekr", "em", "akt", "hm", "hmt", "h0", "h1", "h2", "h3", "h4", "h5", "pf")


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance; s and t are used only where the name needs them."""

    name: str
    n: int
    k: int
    s: int | None = None
    t: int | None = None

    def __post_init__(self) -> None:
        if self.name not in FAMILY_NAMES:
            raise ParameterDomainError(f"unknown family name {self.name!r} (one of {FAMILY_NAMES})")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse 'name:key=value,...' (keys n, k, s, t; order free)."""
    name, _, rest = text.partition(":")
    name = name.strip().lower()
    params: dict[str, int] = {}
    if rest.strip():
        for part in rest.split(","):
            key, _, value = part.partition("=")
            key = key.strip().lower()
            if key not in ("n", "k", "s", "t") or not value.strip().lstrip("-").isdigit():
                raise ParameterDomainError(f"bad family-spec parameter {part!r} in {text!r}")
            if key in params:
                raise ParameterDomainError(f"duplicate parameter {key!r} in {text!r}")
            params[key] = int(value)
    if "n" not in params or "k" not in params:
        raise ParameterDomainError(f"family spec {text!r} needs at least n= and k=")
    return FamilySpec(name=name, n=params["n"], k=params["k"], s=params.get("s"), t=params.get("t"))


def format_family_spec(spec: FamilySpec) -> str:
    out = f"{spec.name}:n={spec.n},k={spec.k}"
    if spec.s is not None:
        out += f",s={spec.s}"
    if spec.t is not None:
        out += f",t={spec.t}"
    return out


def _need(spec: FamilySpec, s: bool, t: bool) -> tuple[int, int]:
    if s and spec.s is None:
        raise ParameterDomainError(f"family {spec.name!r} needs parameter s")
    if t and spec.t is None:
        raise ParameterDomainError(f"family {spec.name!r} needs parameter t")
    return spec.s if s else 0, spec.t if t else 0


def _layer_masks(n: int, k: int):
    return (kset(c) for c in combinations(range(1, n + 1), k))


def _triple_configuration(variant: int, n: int) -> list[KSet]:
    """The six 3-uniform configurations over {1..n}."""
    out: set[KSet] = set()
    if variant == 0:
        w = kset((1, 2, 3))
        for m in _layer_masks(n, 3):
            if (m & w).bit_count() >= 2:
                out.add(m)
        return sorted(out)
    if variant == 1:
        hit = kset((2, 3, 4))
        for m in _layer_masks(n, 3):
            if m & 1 and m & hit:
                out.add(m)
        out.add(kset((2, 3, 4)))
        return sorted(out)
    if variant == 2:
        hit = kset((2, 3))
        for m in _layer_masks(n, 3):
            if m & 1 and m & hit:
                out.add(m)
        out.update(kset(x) for x in ((2, 3, 4), (2, 3, 5), (1, 4, 5)))
        return sorted(out)
    pair = kset((1, 2))
    extras = {
        3: ((1, 3, 4), (1, 3, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 4, 5)),
        4: ((1, 3, 4), (1, 5, 6), (2, 3, 5), (2, 3, 6), (2, 4, 5), (2, 4, 6)),
        5: ((1, 3, 4), (1, 5, 6), (1, 3, 6), (2, 3, 5), (2, 3, 6), (2, 4, 6)),
    }[variant]
    for m in _layer_masks(n, 3):
        if m & pair == pair:
            out.add(m)
    out.update(kset(x) for x in extras)
    return sorted(out)


def build(spec: FamilySpec) -> Family:
    """Materialize the named family over {1..n}."""
    n, k = spec.n, spec.k
    if spec.name == "ekr":
        if not n >= k >= 1:
            raise ParameterDomainError(f"star family needs n >= k >= 1, got n={n} k={k}")
        return Family(n, k, (m for m in _layer_masks(n, k) if m & 1))

    if spec.name == "em":
        s, t = _need(spec, True, True)
        if not (n >= k >= 0 and s >= 0 and t >= 0):
            raise ParameterDomainError(f"window family needs n >= k >= 0, s,t >= 0, got {spec}")
        if t > min(k, s):
            return Family(n, k, ())
        window = (1 << s) - 1
        return Family(n, k, (m for m in _layer_masks(n, k) if (m & window).bit_count() >= t))

    if spec.name == "akt":
        (_, t) = _need(spec, False, True)
        if not (1 <= t <= k - 1 and n >= k + 1):
            raise ParameterDomainError(f"akt needs 1 <= t <= k-1 and n >= k+1, got {spec}")
        core = (1 << t) - 1
        window = ((1 << (k + 1)) - 1) ^ core  # elements t+1 .. k+1
        members = [m for m in _layer_masks(n, k) if m & core == core and m & window]
        full = (1 << (k + 1)) - 1
        members.extend(full ^ (1 << (i - 1)) for i in range(1, t + 1))
        return Family(n, k, members)

    if spec.name == "hm":
        s, t = _need(spec, True, True)
        if not (n >= k >= 1 and s >= 0 and t >= 0 and n >= s + t):
            raise ParameterDomainError(f"two-window family needs n >= k >= 1 and n >= s+t, got {spec}")
        w1 = (1 << (s - 1)) - 1 if s >= 1 else 0
        sbit = 1 << (s - 1) if s >= 1 else 0
        w2 = ((1 << t) - 1) << s
        return Family(
            n, k, (m for m in _layer_masks(n, k) if m & w1 or (m & sbit and m & w2))
        )

    if spec.name == "hmt":
        (_, t) = _need(spec, False, True)
        if not (1 <= t <= k - 1 and n >= k + t):
            raise ParameterDomainError(f"hmt needs 1 <= t <= k-1 and n >= k+t, got {spec}")
        mid = ((1 << k) - 1) ^ 1  # elements 2..k
        tailwin = ((1 << t) - 1) << k  # elements k+1..k+t
        members = [
            m
            for m in _layer_masks(n, k)
            if m & 1 and (m & mid or (m & tailwin) == tailwin)
        ]
        members.extend(mid | (1 << (k + i - 1)) for i in range(1, t + 1))
        return Family(n, k, members)

    if spec.name in ("h0", "h1", "h2", "h3", "h4", "h5"):
        variant = int(spec.name[1])
        min_n = {0: 3, 1: 4}.get(variant, 6)
        if not (n >= k >= 3 and n >= min_n):
            raise ParameterDomainError(
                f"{spec.name} needs n >= k >= 3 and n >= {min_n}, got n={n} k={k}"
            )
        triples = _triple_configuration(variant, n)
        if k == 3:
            return Family(n, 3, triples)
        return Family(
            n, k, (m for m in _layer_masks(n, k) if any(m & b == b for b in triples))
        )

    # pf
    if spec.s is not None:
        s = spec.s
        if not (k >= 3 and s >= 1 and n >= s * k + 1):
            raise ParameterDomainError(f"pf with s needs k >= 3, s >= 1, n >= s*k+1, got {spec}")
        blocks = [kset(range((i - 1) * k + 2, i * k + 2)) for i in range(1, s + 1)]
        anchors = [1] + [(i - 1) * k + 2 for i in range(1, s)]  # anchor_0 = 1, anchor_i = min block_i
        suffix = [0] * (s + 1)
        for i in range(s - 1, -1, -1):
            suffix[i] = suffix[i + 1] | blocks[i]
        members = set(blocks)
        for m in _layer_masks(n, k):
            for i in range(s):
                if m & (1 << (anchors[i] - 1)) and m & suffix[i]:
                    members.add(m)
                    break
        return Family(n, k, members)

    if not (k >= 3 and n >= 2 * k):
        raise ParameterDomainError(f"pf needs k >= 3 and n >= 2k, got {spec}")
    y_window = range(2, k + 2)
    z_window = range(k + 2, 2 * k + 1)
    generators = [kset((1, y, z)) for y in y_window for z in z_window]
    zmask = kset(z_window)
    generators.extend(
        (kset(y_window), kset((1, k, k + 1)), zmask | (1 << (k - 1)), zmask | (1 << k))
    )
    return Family(
        n, k, (m for m in _layer_masks(n, k) if any(m & g == g for g in generators))
    )


def size(spec: FamilySpec) -> int:
    """Family size; closed form where one is known, else the enumerated count."""
    n, k = spec.n, spec.k
    if spec.name == "ekr":
        return binom(n - 1, k - 1)
    if spec.name == "em":
        s, t = _need(spec, True, True)
        return em_size_general(n, k, s, t)
    if spec.name == "akt":
        (_, t) = _need(spec, False, True)
        return binom(n - t, k - t) - binom(n - k - 1, k - t) + t
    if spec.name == "hm":
        s, t = _need(spec, True, True)
        return hm_size(n, k, s, t)
    if spec.name == "hmt":
        (_, t) = _need(spec, False, True)
        if t == 2:
            return binom(n - 1, k - 1) - binom(n - k, k - 1) + binom(n - k - 2, k - 3) + 2
        return len(build(spec))
    if spec.name == "h0":
        return 3 * binom(n - 3, k - 2) + binom(n - 3, k - 3)
    if spec.name == "h1":
        return 3 * binom(n - 4, k - 2) + 4 * binom(n - 4, k - 3) + binom(n - 4, k - 4)
    return len(build(spec))


@dataclass(frozen=True)
class Threshold:
    """A theorem's size threshold: exact, or an asymptotic constant * scale."""

    exact: int | None = None
    constant: int | None = None
    scale: int | None = None
    asymptotic: bool = False

    def cutoff(self) -> int:
        """The working cutoff: the exact value, or constant * scale (asymptotic)."""
        if self.exact is not None:
            return self.exact
        return self.constant * self.scale


def threshold(theorem_id: str, n: int, k: int, s: int | None = None, t: int | None = None) -> Threshold:
    """Size threshold above which the named shadow lower bound applies.

    theorem_id: 't13' (intersecting families), 't16' (t-intersecting families),
    't111' (bounded matching number; asymptotic — the vanishing term is not
    computed, so the returned cutoff is the bare constant * C(n, k-2)).
    """
    tid = theorem_id.lower().replace(".", "").replace("_", "")
    if tid in ("t13", "13"):
        if not (n > 2 * k >= 6):
            raise ParameterDomainError(f"threshold t13 needs n > 2k >= 6, got n={n} k={k}")
        if k == 3:
            return Threshold(exact=3 * n - 8)
        return Threshold(
            exact=binom(n - 1, k - 1) - binom(n - k, k - 1) + binom(n - k - 2, k - 3) + 2
        )
    if tid in ("t16", "16"):
        if t is None:
            raise ParameterDomainError("threshold t16 needs t")
        if not (1 <= t <= k - 1 and k >= 3 and n > (t + 1) * (k - t + 1)):
            raise ParameterDomainError(
                f"threshold t16 needs 1 <= t <= k-1, k >= 3, n > (t+1)(k-t+1), got n={n} k={k} t={t}"
            )
        alt = em_size_general(n, k, t + 2, t + 1)
        if 2 * t < k - 1:
            akt = size(FamilySpec("akt", n=n, k=k, t=t))
            return Threshold(exact=max(akt, alt))
        return Threshold(exact=alt)
    if tid in ("t111", "111"):
        if s is None:
            raise ParameterDomainError("threshold t111 needs s")
        if not (k >= 3 and s >= 1):
            raise ParameterDomainError(f"threshold t111 needs k >= 3 and s >= 1, got k={k} s={s}")
        if s == 1:
            constant = 3
        elif k == 3:
            constant = binom(2 * s + 1, 2)
        else:
            constant = k * binom(s + 1, 2)
        return Threshold(constant=constant, scale=binom(n, k - 2), asymptotic=True)
    raise ParameterDomainError(f"unknown theorem id {theorem_id!r} (use t13, t16, t111)")
