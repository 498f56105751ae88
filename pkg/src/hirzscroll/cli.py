"""Command-line interface.

    hirzscroll cohom --e 1 --div 2,0
    hirzscroll scroll --b 5 --k 11
    hirzscroll oracle --b 5 --k 11 --seed 1
    hirzscroll hilbert --grid-b 5..7 --format csv
    hirzscroll f0
    hirzscroll verify-paper --out report.json

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable, Iterator

from hirzscroll import __version__, cech, chow, divisors, hilbert, scroll, verify
from hirzscroll.divisors import DivisorClass, Surface
from hirzscroll.scroll import ParameterError, ScrollFamily


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _div(text: str) -> DivisorClass:
    try:
        return DivisorClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _flatten(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, (list, tuple)):
            out[key] = "(" + ",".join(str(x) for x in v) + ")"
        else:
            out[key] = v
    return out


# ---------------------------------------------------------------- queries


def cohom_result(e: int, D: DivisorClass) -> dict:
    S = Surface(e)
    h = divisors.cohomology_divisor(D, S)
    pos = divisors.classify_divisor(D, S)
    out = h.as_dict()
    out["positivity"] = {
        "effective": pos.effective,
        "nef": pos.nef,
        "ample": pos.ample,
        "very_ample": pos.very_ample,
    }
    return out


def scroll_result(b: int, k: int) -> tuple[dict, list[str]]:
    warnings: list[str] = []
    regime = scroll.validate_family(b, k)
    fam = ScrollFamily(b, k)
    A = divisors.cohomology_divisor(fam.A, fam.surface)
    B = divisors.cohomology_divisor(fam.B, fam.surface)
    out: dict = {
        "regime": regime.as_dict(),
        "A": str(fam.A),
        "B": str(fam.B),
        "exact": {"A": A.as_dict(), "B": B.as_dict()},
    }
    if not regime.meets_ass_3_1:
        warnings.append(f"(b, k) = ({b}, {k}) fails k >= b >= 4: exact cohomology of A, B only")
        return out, warnings
    table = scroll.cohomology_table(b, k)
    out["cohomology"] = table.as_dict()
    out["dim_ext1"] = scroll.dim_ext1(b, k)
    out["end_dim"] = scroll.end_dim(b, k)
    out["h0B_ge_h1A"] = scroll.check_h0B_ge_h1A(b, k)
    if not table.covered:
        warnings.append(f"k = {k} > 4b - 1: generic h^1(E) not covered")
        return out, warnings
    if not regime.meets_ass_5_1:
        gate = "b >= 5" if b < 5 else "k <= 4b - 8"
        warnings.append(f"(b, k) = ({b}, {k}) fails the {gate} gate: cohomology data only")
        return out, warnings
    out["invariants"] = chow.numerical_invariants(fam).as_dict()
    out["chi_normal"] = chow.chi_normal(fam)
    rep = hilbert.hilbert_report(b, k)
    out["hilbert"] = rep.as_dict()
    out["table_row"] = hilbert.table_row(b, k).as_dict()
    return out, warnings


def oracle_result(b: int, k: int, trials: int, seed: int, coeff_bound: int, structured: bool) -> tuple[dict, list[str]]:
    warnings = []
    if not b <= k <= 4 * b - 1:
        warnings.append(f"k = {k} outside b <= k <= 4b - 1: outside paper range")
    h0, h1, cert = cech.generic_extension_cohomology(b, k, trials, seed, coeff_bound, structured)
    sampler = cech.sample_extension if structured else cech.sample_unstructured_extension
    best = sampler(b, k, seed, coeff_bound, cert.best_trial)
    T = cech.splitting_type_of_extension(best)
    ext_dim = (
        divisors.cohomology_divisor(ScrollFamily(b, k).A - ScrollFamily(b, k).B).h1
        if structured
        else cech.unstructured_ext_dim(b, k)
    )
    return (
        {
            "h0": h0,
            "h1": h1,
            "split": best.is_zero() if structured else False,
            "ext_dim": ext_dim,
            "splitting_type": list(T.alphas),
            "certificate": cert.as_dict(),
            "in_vanishing_range": not warnings,
        },
        warnings,
    )


def hilbert_result(b: int, k: int) -> dict:
    return hilbert.hilbert_report(b, k).as_dict()


# ---------------------------------------------------------------- output


class Emitter:
    def __init__(self, fmt: str, stream):
        self.fmt, self.stream = fmt, stream
        self._csv = None
        self.records: list[dict] = []

    def emit(self, record: dict) -> None:
        if self.fmt == "csv":
            row = _flatten({"params": record["params"], **record["results"]})
            if self._csv is None:
                self._csv = csv.DictWriter(self.stream, fieldnames=list(row), extrasaction="ignore",
                                           lineterminator="\n")
                self._csv.writeheader()
            self._csv.writerow(row)
            self.stream.flush()
            for w in record["warnings"]:
                print(f"warning: {w}", file=sys.stderr)
        elif self.fmt == "table":
            flat = _flatten({"params": record["params"], **record["results"]})
            width = max(len(k) for k in flat)
            for key, v in flat.items():
                print(f"{key:<{width}}  {v}", file=self.stream)
            for w in record["warnings"]:
                print(f"warning: {w}", file=self.stream)
            print(file=self.stream)
        else:
            self.records.append(record)

    def close(self) -> None:
        if self.fmt == "json":
            payload = self.records[0] if len(self.records) == 1 else self.records
            json.dump(payload, self.stream, indent=2)
            self.stream.write("\n")


def _record(query: str, params: dict, results: dict, warnings: list[str], seed=None) -> dict:
    return {
        "query": query,
        "params": params,
        "results": results,
        "warnings": warnings,
        "version": __version__,
        "seed": seed,
    }


def _pairs(args, default_k: callable) -> Iterator[tuple[int, int]]:
    if args.grid_b is None:
        if args.b is None or args.k is None:
            raise ParameterError("give --b and --k, or a sweep with --grid-b")
        yield args.b, args.k
        return
    for b in range(args.grid_b[0], args.grid_b[1] + 1):
        lo, hi = default_k(b)
        if args.grid_k:
            lo, hi = max(lo, args.grid_k[0]), min(hi, args.grid_k[1])
        for k in range(lo, hi + 1):
            yield b, k


# ---------------------------------------------------------------- commands


def cmd_cohom(args, em: Emitter) -> int:
    em.emit(_record("cohom", {"e": args.e, "div": str(args.div)}, cohom_result(args.e, args.div), []))
    return 0


def cmd_scroll(args, em: Emitter) -> int:
    for b, k in _pairs(args, lambda b: (b, 4 * b - 8)):
        results, warnings = scroll_result(b, k)
        em.emit(_record("scroll", {"b": b, "k": k}, results, warnings))
    return 0


def cmd_oracle(args, em: Emitter) -> int:
    for b, k in _pairs(args, lambda b: (b, 4 * b - 1)):
        results, warnings = oracle_result(b, k, args.trials, args.seed, args.coeff_bound, not args.unstructured)
        params = {"b": b, "k": k, "trials": args.trials, "coeff_bound": args.coeff_bound,
                  "structured": not args.unstructured}
        em.emit(_record("oracle", params, results, warnings, seed=args.seed))
    return 0


def cmd_hilbert(args, em: Emitter) -> int:
    for b, k in _pairs(args, lambda b: (b, 4 * b - 8)):
        em.emit(_record("hilbert", {"b": b, "k": k}, hilbert_result(b, k), []))
    return 0


def cmd_f0(args, em: Emitter) -> int:
    ks = [args.k] if args.k is not None else range(7, 11)
    for k in ks:
        rep = hilbert.f0_invariants(k)
        warnings = []
        if not rep.n_in_quoted_range:
            warnings.append(f"n = 16 - k = {rep.n} lies outside the quoted range 7 <= n <= 10")
        em.emit(_record("f0", {"k": k}, rep.as_dict(), warnings))
    return 0


def cmd_verify(args, out_stream) -> int:
    grid = verify.Grid(args.grid_b, args.grid_k)
    report = verify.run_all(grid, seed=args.seed, trials=args.trials, coeff_bound=args.coeff_bound)
    payload = {
        "query": "verify-paper",
        "params": {"grid_b": args.grid_b, "grid_k": args.grid_k, "trials": args.trials,
                   "coeff_bound": args.coeff_bound},
        "results": {
            "checks": [c.as_dict() for c in report["checks"]],
            "summary": report["summary"],
            "failed": report["failed"],
        },
        "warnings": [],
        "version": __version__,
        "seed": args.seed,
    }
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    if args.format == "json":
        json.dump(payload, out_stream, indent=2)
        out_stream.write("\n")
    else:
        for c in report["checks"]:
            print(f"{c.status.upper():7} {c.id}  ({c.cases} cases, {c.seconds:.2f} s)", file=out_stream)
            for f in c.failures[:5]:
                print(f"        {json.dumps(f)}", file=out_stream)
        s = report["summary"]
        print(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped", file=out_stream)
    return 1 if report["failed"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hirzscroll", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table", "csv"], default="table")
    common.add_argument("--out", help="also write the output to this file")
    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--grid-b", type=_range, metavar="LO..HI")
    grid.add_argument("--grid-k", type=_range, metavar="LO..HI")
    bk = argparse.ArgumentParser(add_help=False)
    bk.add_argument("--b", type=int)
    bk.add_argument("--k", type=int)
    rand = argparse.ArgumentParser(add_help=False)
    rand.add_argument("--trials", type=int, default=5)
    rand.add_argument("--seed", type=int, default=0)
    rand.add_argument("--coeff-bound", type=int, default=100)

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("cohom", parents=[common], help="cohomology of a divisor on F_e")
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--div", type=_div, required=True, metavar="A,B",
                   help="class A*C0 + B*f; write --div=-2,0 for a negative first entry")
    p.set_defaults(func=cmd_cohom)

    p = sub.add_parser("scroll", parents=[common, bk, grid], help="full report for one family")
    p.set_defaults(func=cmd_scroll)

    p = sub.add_parser("oracle", parents=[common, bk, grid, rand], help="Cech oracle for general extensions")
    p.add_argument("--unstructured", action="store_true",
                   help="sample all of Ext^1 of the pushforwards instead of Ext^1(B, A) on F_1")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("hilbert", parents=[common, bk, grid], help="Hilbert-component dimension counts")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("f0", parents=[common], help="scrolls over the quadric F_0")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_f0)

    p = sub.add_parser("verify-paper", parents=[common, grid, rand], help="run every verification check")
    p.set_defaults(func=cmd_verify)
    return parser


def _validate(parser, args) -> None:
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be >= 1")
    if getattr(args, "coeff_bound", 1) < 1:
        parser.error("--coeff-bound must be >= 1")
    if getattr(args, "seed", 0) < 0:
        parser.error("--seed must be >= 0")
    if getattr(args, "e", 0) < 0:
        parser.error("--e must be >= 0")


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    if args.command == "verify-paper":
        return cmd_verify(args, sys.stdout)
    fh = open(args.out, "w") if args.out else None
    try:
        em = Emitter(args.format, _Tee(sys.stdout, fh) if fh else sys.stdout)
        try:
            status = args.func(args, em)
        except ParameterError as exc:
            parser.error(str(exc))
        em.close()
        return status
    finally:
        if fh:
            fh.close()


class _Tee:
    def __init__(self, *streams):
        self.streams = streams

    def write(self, s):
        for st in self.streams:
            st.write(s)

    def flush(self):
        for st in self.streams:
            st.flush()


if __name__ == "__main__":
    sys.exit(main())
