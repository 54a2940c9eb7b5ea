"""Command-line interface.

Subcommands: shadow (of a family file), segment (materialize a colex initial
segment), cascade (binomial-block representation of a length), family (build a
named family), verify (run a check), compare (ell-shadow sizes of two
operands).  Exit codes: 0 pass, 1 check failure, 2 usage or domain error,
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import os
import sys

from .colex import SegmentSpec, initial_segment, segment_shadow_size
from .combinatorics import (
    NoRepresentationError,
    ParameterDomainError,
    cascade_generalized,
    cascade_hm,
    cascade_standard,
    segment_profile,
)
from .families import FAMILY_NAMES, FamilySpec, build, parse_family_spec, size
from .setfamily import ell_shadow, format_family, parse_family, shadow
from .verify import (
    BudgetExceededError,
    VerificationReport,
    cascade_roundtrip_grid,
    check_theorem_1_3,
    check_theorem_1_6,
    check_theorem_1_11,
    em_segment_shadow_grid,
    fact_17_scan,
    hm_shadow_formula_scan,
    kk_scan,
    post_t111_scan,
    shifting_suite,
)

_SEGMENT_KEYS = ("n", "k", "s", "t", "m")


def _parse_segment_string(text: str, m_override: int | None = None) -> SegmentSpec:
    """Parse 'kind:key=value,...' with kinds full/em/hm/ekr (ekr = em with s=t=1)."""
    body = text[len("segment:"):] if text.startswith("segment:") else text
    kind, _, rest = body.partition(":")
    kind = kind.strip().lower()
    params: dict[str, int] = {}
    if rest.strip():
        for part in rest.split(","):
            key, _, value = part.partition("=")
            key = key.strip().lower()
            if key not in _SEGMENT_KEYS or not value.strip().lstrip("-").isdigit():
                raise ParameterDomainError(f"bad segment parameter {part!r} in {text!r}")
            if key in params:
                raise ParameterDomainError(f"duplicate parameter {key!r} in {text!r}")
            params[key] = int(value)
    if kind == "ekr":
        kind = "em"
        params.setdefault("s", 1)
        params.setdefault("t", 1)
    if kind not in ("full", "em", "hm"):
        raise ParameterDomainError(
            f"segment kind must be full, em, hm, or ekr, got {kind!r}"
        )
    if "k" not in params:
        raise ParameterDomainError(f"segment spec {text!r} needs k=")
    m = m_override if m_override is not None else params.get("m")
    if m is None:
        raise ParameterDomainError(f"segment spec {text!r} needs a length m")
    return SegmentSpec(
        kind, k=params["k"], m=m, n=params.get("n"), s=params.get("s", 0), t=params.get("t", 0)
    )


def _operand_ell_shadow(text: str, ell: int) -> int:
    """Shadow size of a compare operand: segment string, family spec, or file path."""
    if text.startswith("segment:"):
        return segment_shadow_size(_parse_segment_string(text), ell)
    name = text.partition(":")[0].strip().lower()
    if ":" in text and name in FAMILY_NAMES:
        return len(ell_shadow(build(parse_family_spec(text)), ell))
    if os.path.exists(text):
        with open(text, encoding="utf-8") as handle:
            return len(ell_shadow(parse_family(handle.read()), ell))
    raise ParameterDomainError(
        f"operand {text!r} is neither a segment spec, a family spec, nor a readable file"
    )


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_shadow(args) -> int:
    with open(args.infile, encoding="utf-8") as handle:
        fam = parse_family(handle.read())
    result = ell_shadow(fam, args.ell)
    if args.out:
        _write_or_print(format_family(result), args.out)
    print(len(result))
    return 0


def _cmd_segment(args) -> int:
    spec = _parse_segment_string(args.spec, m_override=args.m)
    if args.ell is not None:
        print(segment_shadow_size(spec, args.ell))
        return 0
    fam = initial_segment(spec, method=args.method)
    _write_or_print(format_family(fam), args.out)
    return 0


def _format_cascade(rep) -> str:
    a = ",".join(str(x) for x in rep.a)
    line = f"h={rep.h} a=[{a}] value={rep.evaluate()}"
    t_levels = getattr(rep, "t_levels", None)
    if t_levels and len(set(t_levels)) > 1:
        line += " t=[" + ",".join(str(x) for x in t_levels) + "]"
    return line


def _cmd_cascade(args) -> int:
    if args.hm:
        if args.s is None or args.t is None:
            raise ParameterDomainError("--hm needs both --s and --t")
        rep = cascade_hm(args.m, args.k, args.s, args.t)
    elif args.profile:
        if args.s is None or args.t is None:
            raise ParameterDomainError("--profile needs both --s and --t")
        rep = segment_profile(args.m, args.k, args.s, args.t)
    elif args.s is not None or args.t is not None:
        if args.s is None or args.t is None:
            raise ParameterDomainError("give both --s and --t, or neither")
        rep = cascade_generalized(args.m, args.k, args.s, args.t)
    else:
        rep = cascade_standard(args.m, args.k)
    print(_format_cascade(rep))
    return 0


def _cmd_family(args) -> int:
    spec = parse_family_spec(args.spec)
    if args.count_only:
        print(size(spec))
        return 0
    fam = build(spec)
    _write_or_print(format_family(fam), args.out)
    return 0


def _cmd_compare(args) -> int:
    left = _operand_ell_shadow(args.left, args.ell)
    right = _operand_ell_shadow(args.right, args.ell)
    rel = "<" if left < right else ">" if left > right else "="
    print(f"{left} {rel} {right}")
    return 0


def _need_params(args, *names) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise ParameterDomainError(f"--check {args.check} needs --{name.replace('_', '-')}")


def _run_verify(args) -> list[VerificationReport]:
    if args.check == "kk":
        _need_params(args, "n", "k")
        return [kk_scan(args.n, args.k, args.ell, m_max=args.m_max, budget=args.budget)]
    if args.check == "t13":
        _need_params(args, "n", "k")
        return [
            check_theorem_1_3(
                args.n, args.k, args.ell,
                mode=args.mode or "shifted", budget=args.budget, sweep=not args.no_sweep,
            )
        ]
    if args.check == "t16":
        _need_params(args, "n", "k", "t")
        mode = args.mode or "randomized"
        if mode == "scan":
            return [fact_17_scan(args.k, args.t, range(args.n, args.n_max + 1), args.ell)]
        return [
            check_theorem_1_6(
                args.n, args.k, args.t, args.ell, mode=mode,
                seed=args.seed, trials=args.trials, jobs=args.jobs, budget=args.budget,
            )
        ]
    if args.check == "t111":
        _need_params(args, "n", "k", "s")
        mode = args.mode or "randomized"
        if mode == "scan":
            return [post_t111_scan(args.k, args.s, range(args.n, args.n_max + 1))]
        return [
            check_theorem_1_11(
                args.n, args.k, args.s, mode=mode,
                seed=args.seed, trials=args.trials, jobs=args.jobs, budget=args.budget,
            )
        ]
    if args.check == "formulas":
        n_max = args.n_max if args.n_max is not None else 10
        return [
            em_segment_shadow_grid(n_max=min(n_max, 10)),
            cascade_roundtrip_grid(m_cap=args.m_max or 5000),
            hm_shadow_formula_scan(n_max=min(n_max, 10)),
        ]
    if args.check == "shifting":
        return [shifting_suite(trials=args.trials, seed=args.seed)]
    raise ParameterDomainError(f"unknown check {args.check!r}")


def _cmd_verify(args) -> int:
    reports = _run_verify(args)
    failed = False
    for rep in reports:
        if args.json:
            print(rep.to_json())
        else:
            extras = []
            for key in ("violation_count", "mismatch_count", "failure_count", "first_strict_n"):
                if key in rep.quantities:
                    extras.append(f"{key}={rep.quantities[key]}")
            if rep.trials is not None:
                extras.append(f"trials={rep.trials}")
            print(f"{rep.check_id}: {rep.verdict}" + (" (" + ", ".join(extras) + ")" if extras else ""))
        failed = failed or rep.verdict == "FAIL"
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shadowlab",
        description="Exact shadows of uniform set families: segments, cascades, named families, checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shadow", help="ell-shadow of a family read from a text file")
    p.add_argument("--in", dest="infile", required=True, help="family file (n=.. k=.. header)")
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--out", help="write the shadow family to this file")
    p.set_defaults(func=_cmd_shadow)

    p = sub.add_parser("segment", help="colex initial segment of a (restricted) layer")
    p.add_argument("--spec", required=True, help="kind:k=..[,n=..][,s=..][,t=..][,m=..]")
    p.add_argument("--m", type=int, help="segment length (overrides m= in the spec)")
    p.add_argument("--method", choices=("filter", "decompose", "both"), default="both")
    p.add_argument("--ell", type=int, help="print the ell-shadow size instead of members")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_segment)

    p = sub.add_parser("cascade", help="binomial-block representation of a length")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--hm", action="store_true", help="two-window representation")
    p.add_argument("--profile", action="store_true", help="varying-hits representation (always exists)")
    p.set_defaults(func=_cmd_cascade)

    p = sub.add_parser("family", help="build a named family")
    p.add_argument("--spec", required=True, help="name:n=..,k=..[,s=..][,t=..]")
    p.add_argument("--count-only", action="store_true", help="print the closed-form size only")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("verify", help="run a verification check")
    p.add_argument("--check", required=True,
                   choices=("kk", "t13", "t16", "t111", "formulas", "shifting"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--mode", choices=("exhaustive", "shifted", "randomized", "scan"))
    p.add_argument("--seed", type=int, default=0xC0FFEE)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, help="node budget (default from SHADOWLAB_BUDGET)")
    p.add_argument("--m-max", type=int, help="upper size/length bound where applicable")
    p.add_argument("--n-max", type=int, help="scan upper end (modes that sweep n)")
    p.add_argument("--no-sweep", action="store_true", help="t13: skip the sweep, report the near miss only")
    p.add_argument("--json", action="store_true", help="print stable JSON reports")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("compare", help="compare ell-shadow sizes of two operands")
    p.add_argument("--left", required=True, help="family spec, segment:spec with m=, or family file")
    p.add_argument("--right", required=True)
    p.add_argument("--ell", type=int, default=1)
    p.set_defaults(func=_cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ParameterDomainError, NoRepresentationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
