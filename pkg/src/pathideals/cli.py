"""Command line entry point: ``pathideals {gen,depth,sdepth,verify,scan}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .depth import DEFAULT_PRIME, depth_quotient
from .families import cycle_ideal, path_ideal, u_ideal
from .monomial import MonomialIdeal, ideal_power
from .sdepth import sdepth_quotient, validate_partition
from .verify import FAIL, Settings, conjecture_scan, run_grid, summarize, write_csv, write_jsonl


def family_ideal(family: str, n: int, m: int | None = None, t: int = 1, d: int | None = None) -> MonomialIdeal:
    if family == "path":
        return ideal_power(path_ideal(n, m), t)
    if family == "cycle":
        return ideal_power(cycle_ideal(n, m), t)
    if family == "u":
        return u_ideal(n, d if d is not None else m)
    raise ValueError(f"unknown family {family!r}")


def load_ideal(spec: str) -> tuple[MonomialIdeal, str]:
    """Read ``cycle:n:m[:t]``, ``path:n:m[:t]``, ``u:n:d`` or a JSON file path."""
    head, _, rest = spec.partition(":")
    if head in ("path", "cycle", "u") and rest:
        nums = [int(x) for x in rest.split(":")]
        if head == "u":
            return family_ideal("u", nums[0], d=nums[1]), spec
        t = nums[2] if len(nums) > 2 else 1
        return family_ideal(head, nums[0], nums[1], t), spec
    return MonomialIdeal.from_json(Path(spec).read_text()), spec


def _cmd_gen(a) -> int:
    I = family_ideal(a.family, a.n, a.m, a.t, a.d)
    print(I.to_json())
    return 0


def _cmd_depth(a) -> int:
    I, name = load_ideal(a.ideal)
    r = depth_quotient(I, a.char, a.budget, ideal_id=name)
    print(json.dumps(r.to_dict(), sort_keys=True))
    return 0


def _cmd_sdepth(a) -> int:
    I, name = load_ideal(a.ideal)
    r = sdepth_quotient(I, budget=a.budget, ideal_id=name)
    out = r.to_dict(certificate=a.certify)
    if a.certify and r.certificate is not None:
        out["validated_sdepth"] = validate_partition(I, r.certificate)
    print(json.dumps(out, sort_keys=True))
    return 0


def _settings(a) -> Settings:
    return Settings(a.char, a.lattice_budget, a.budget, a.poset_budget)


def _emit(records, out: str | None) -> None:
    if out:
        write_jsonl(records, out)
        write_csv(records, str(Path(out).with_suffix(".csv")))
    else:
        for r in records:
            print(json.dumps(r.to_dict(), sort_keys=True))
    for statement, counts in sorted(summarize(records).items()):
        print(f"{statement}: " + " ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)


def _cmd_verify(a) -> int:
    records = run_grid(a.statement, a.n_max, a.t_max, _settings(a), a.jobs)
    _emit(records, a.out)
    return 1 if any(r.verdict == FAIL for r in records) else 0


def _cmd_scan(a) -> int:
    ranges = {"n": a.n, "t": a.t}
    if a.grid:
        for part in a.grid.split(","):
            key, _, val = part.partition("=")
            ranges[key.strip()] = val.strip()
    n_lo, n_hi = (int(x) for x in ranges["n"].split(".."))
    t_lo, t_hi = (int(x) for x in ranges["t"].split(".."))
    records = conjecture_scan(range(n_lo, n_hi + 1), range(t_lo, t_hi + 1), _settings(a))
    _emit(records, a.out)
    for r in records:
        if r.verdict == FAIL:
            print(f"COUNTEREXAMPLE n={r.params['n']} m={r.params['m']} t={r.params['t']} "
                  f"depth={r.computed['depth']} < d-1={r.params['d'] - 1}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pathideals", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print a family ideal as JSON")
    g.add_argument("--family", choices=["path", "cycle", "u"], required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--t", type=int, default=1)
    g.add_argument("--d", type=int)
    g.set_defaults(func=_cmd_gen)

    d = sub.add_parser("depth", help="depth of S/I")
    d.add_argument("--ideal", required=True, help="JSON file or family spec such as cycle:6:5:2")
    d.add_argument("--char", type=int, default=DEFAULT_PRIME)
    d.add_argument("--budget", type=int, default=None, help="LCM lattice size limit")
    d.set_defaults(func=_cmd_depth)

    s = sub.add_parser("sdepth", help="Stanley depth of S/I")
    s.add_argument("--ideal", required=True)
    s.add_argument("--budget", type=int, default=None, help="search node limit")
    s.add_argument("--certify", action="store_true", help="include and re-validate the partition")
    s.set_defaults(func=_cmd_sdepth)

    for name, helptext in (("verify", "check statements on a grid"), ("scan", "search for depth < d-1")):
        v = sub.add_parser(name, help=helptext)
        v.add_argument("--char", type=int, default=DEFAULT_PRIME)
        v.add_argument("--budget", type=int, default=Settings.search_budget, help="sdepth search node limit")
        v.add_argument("--poset-budget", type=int, default=Settings.poset_budget,
                       help="largest poset handed to the partition search")
        v.add_argument("--lattice-budget", type=int, default=None)
        v.add_argument("--out", help="JSONL path; a CSV is written next to it")
        if name == "verify":
            v.add_argument("--statement", default="all")
            v.add_argument("--n-max", type=int, default=7)
            v.add_argument("--t-max", type=int, default=4)
            v.add_argument("--jobs", type=int, default=1)
            v.set_defaults(func=_cmd_verify)
        else:
            v.add_argument("--conjecture", choices=["d-minus-1"], default="d-minus-1")
            v.add_argument("--n", default="4..8", help="range lo..hi")
            v.add_argument("--t", default="1..3", help="range lo..hi")
            v.add_argument("--grid", help="combined ranges, e.g. n=4..6,t=1..3")
            v.set_defaults(func=_cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
