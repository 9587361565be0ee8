"""Command-line harness exposing the experiments with reproducible reports.

Every command emits a single self-describing report (JSON by default, CSV as
a tabular projection) embedding the full configuration, the field modulus and
the element-order convention.  Identical configurations produce byte-identical
output.  Exit codes: 0 success, 1 usage error or bound violation, 2 when a
machine-checked structural expectation fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, asdict

import deephole.codes as codes_mod
from deephole import classify, families, numbertheory
from deephole.codes import prs, rs
from deephole.errors import BoundExceededError, TheoremAssertionError
from deephole.gf import GF, field_of_order, is_prime, make_field
from deephole.poly import monic_irreducibles

DEFAULT_MAX_Q = 13
COMMANDS = (
    "covering-radius",
    "enum-deep-cosets",
    "family",
    "completeness",
    "hypergraph",
    "cubic-coverage",
    "ssp",
    "n3",
    "zero-sum-free",
)


class UsageError(Exception):
    pass


@dataclass
class ExperimentConfig:
    command: str
    q: int | None = None
    p: int | None = None
    m: int | None = None
    k: int | None = None
    degree: int | None = None
    set: tuple[int, ...] | None = None
    r: int | None = None
    tag: str | None = None
    code: str | None = None
    format: str = "json"
    out: str | None = None
    threads: int = 1
    unsafe_bounds: bool = False

    def field(self) -> GF:
        if self.q is not None:
            return field_of_order(self.q)
        return make_field(self.p, self.m or 1)

    def check_size_guard(self):
        guard = int(os.environ.get("DEEPHOLE_MAX_Q", DEFAULT_MAX_Q))
        if self.unsafe_bounds:
            return
        q = self.field().q
        if q > guard:
            raise BoundExceededError(
                f"q = {q} exceeds the size guard {guard} "
                "(set DEEPHOLE_MAX_Q or pass --unsafe-bounds)"
            )

    def describe(self) -> dict:
        d = asdict(self)
        d["set"] = list(self.set) if self.set is not None else None
        return d


# -- runners -------------------------------------------------------------------


def _base_report(cfg: ExperimentConfig, field: GF) -> dict:
    return {
        "command": cfg.command,
        "config": cfg.describe(),
        "field": field.describe(),
    }


def run_covering_radius(cfg: ExperimentConfig) -> dict:
    field = cfg.field()
    if cfg.k is None:
        raise UsageError("covering-radius requires --k")
    kind = cfg.code or "rs"
    if kind == "rs":
        code = rs(field, cfg.k, D=cfg.set)
    elif kind == "prs":
        if cfg.set is not None:
            raise UsageError("--set only applies to affine codes")
        code = prs(field, cfg.k)
    else:
        raise UsageError(f"unknown code kind {kind!r}")
    rho = code.covering_radius()
    report = _base_report(cfg, field)
    result = {"kind": kind, "n": code.n, "k": code.k, "rho": rho}
    assertions = {}
    q = field.q
    if kind == "rs":
        assertions["rho_equals_n_minus_k"] = rho == code.n - code.k
    else:
        exceptional = q % 2 == 0 and cfg.k in (2, q - 2)
        conj = q - cfg.k + 1 if exceptional else q - cfg.k
        result["conjecture_value"] = conj
        result["matches_conjecture"] = rho == conj
    report["result"] = result
    report["assertions"] = assertions
    return report


def run_enum_deep_cosets(cfg: ExperimentConfig) -> dict:
    field = cfg.field()
    if cfg.k is None:
        raise UsageError("enum-deep-cosets requires --k")
    code = prs(field, cfg.k)
    total = len(classify.deep_syndromes(code))
    q, r = field.q, code.redundancy
    in_range = classify.in_theorem_range(q, cfg.k)
    formula = classify.deep_count_formula(q, r) if r in (3, 4) else None
    report = _base_report(cfg, field)
    report["result"] = {
        "total": total,
        "redundancy": r,
        "formula": formula,
        "in_theorem_range": in_range,
    }
    report["assertions"] = (
        {"count_matches_formula": total == formula} if in_range else {}
    )
    return report


def run_family(cfg: ExperimentConfig) -> dict:
    field = cfg.field()
    tag = cfg.tag
    fams = []
    if tag == "degree_k":
        if cfg.k is None:
            raise UsageError("family degree_k requires --k")
        fams = [families.degree_k_family(prs(field, cfg.k))]
    elif tag == "quadratic":
        if cfg.k is None:
            raise UsageError("family quadratic requires --k")
        if cfg.degree not in (None, 2):
            raise UsageError("quadratic families use --degree 2")
        code = prs(field, cfg.k)
        fams = [families.quadratic_family(code, p) for p in monic_irreducibles(field, 2)]
    elif tag == "cubic":
        if cfg.degree not in (None, 3):
            raise UsageError("cubic families use --degree 3")
        k = field.q - 3 if cfg.k is None else cfg.k
        code = prs(field, k)
        fams = [families.cubic_family(code, p) for p in monic_irreducibles(field, 3)]
    elif tag == "inverse_monomial":
        if cfg.set is None or cfg.k is None:
            raise UsageError("family inverse_monomial requires --set and --k")
        code = rs(field, cfg.k, D=cfg.set)
        fams = [
            families.inverse_monomial_family(code, delta)
            for delta in range(field.q)
            if delta not in cfg.set
        ]
    elif tag == "zero_sum_free":
        if cfg.set is None or cfg.r is None:
            raise UsageError("family zero_sum_free requires --set and --r")
        fams = [families.zero_sum_free_family(field, cfg.set, cfg.r)]
    else:
        raise UsageError(f"unknown family tag {tag!r}; choose from {families.TAGS}")
    report = _base_report(cfg, field)
    report["result"] = {
        "families": [f.describe() for f in fams],
        "num_families": len(fams),
        "total_distinct_cosets": len(frozenset().union(*(f.cosets for f in fams))),
    }
    report["assertions"] = {}
    return report


def run_completeness(cfg: ExperimentConfig) -> dict:
    field = cfg.field()
    res = classify.completeness_check(field, threads=cfg.threads)
    report = _base_report(cfg, field)
    report["result"] = res
    report["assertions"] = {"union_equals_deep_set": res["equal"]}
    return report


def run_hypergraph(cfg: ExperimentConfig) -> dict:
    field = cfg.field()
    h = classify.build_hypergraph(field, threads=cfg.threads)
    stats = classify.hypergraph_stats(h)
    code = h.code
    report = _base_report(cfg, field)
    report["result"] = {
        "num_vertices": stats["num_vertices"],
        "num_edges": stats["num_edges"],
        "degree_histogram": stats["degree_histogram"],
        "vertices": sorted(list(code.unpack_syndrome(v)) for v in h.vertices),
        "edges": [
            {"poly": list(coeffs), "vertices": sorted(verts)}
            for coeffs, verts in sorted(h.edges.items())
        ],
    }
    report["assertions"] = stats["checks"]
    return report


def run_cubic_coverage(cfg: ExperimentConfig) -> dict:
    field = cfg.field()
    res = classify.cubic_coverage_experiment(field, threads=cfg.threads)
    report = _base_report(cfg, field)
    report["result"] = res
    report["assertions"] = {}
    return report


def run_ssp(cfg: ExperimentConfig) -> dict:
    field = cfg.field()
    if cfg.k is None:
        raise UsageError("ssp requires --k")
    D = cfg.set if cfg.set is not None else field.element_reprs()
    counts = numbertheory.subset_sum_row(field, D, cfg.k)
    report = _base_report(cfg, field)
    result = {
        "D": sorted(D),
        "k": cfg.k,
        "counts_by_encoding": counts,
        "all_positive": all(c > 0 for c in counts),
    }
    report["result"] = result
    assertions = {}
    q = field.q
    full = set(D) == set(range(q))
    in_range = (1 <= cfg.k <= q - 1) if q % 2 else (3 <= cfg.k <= q - 3)
    if full and in_range:
        assertions["full_field_counts_positive"] = result["all_positive"]
    report["assertions"] = assertions
    return report


def run_n3(cfg: ExperimentConfig) -> dict:
    field = cfg.field()
    rows = numbertheory.n3_sweep(field)
    all_match = all(r["n3_bruteforce"] == r["n3_formula"] for r in rows)
    report = _base_report(cfg, field)
    report["result"] = {
        "rows": rows,
        "num_rows": len(rows),
        "all_match": all_match,
        "zero_classes": sum(1 for r in rows if r["n3_bruteforce"] == 0),
    }
    report["assertions"] = {"formula_matches_bruteforce": all_match}
    return report


def run_zero_sum_free(cfg: ExperimentConfig) -> dict:
    field = cfg.field()
    if cfg.r is None:
        raise UsageError("zero-sum-free requires --r")
    default_candidate = cfg.set is None
    if default_candidate:
        if field.m != 1:
            raise UsageError("default candidate sets exist for prime fields only")
        D = tuple(numbertheory.initial_segment(field.p, cfg.r))
    else:
        D = cfg.set
    ok = numbertheory.is_zero_sum_free(field, D, cfg.r)
    report = _base_report(cfg, field)
    report["result"] = {
        "set": sorted(D),
        "r": cfg.r,
        "default_candidate": default_candidate,
        "zero_sum_free": ok,
        "violations": [
            list(v) for v in numbertheory.zero_sum_violations(field, D, cfg.r)
        ],
    }
    report["assertions"] = {}
    return report


_RUNNERS = {
    "covering-radius": run_covering_radius,
    "enum-deep-cosets": run_enum_deep_cosets,
    "family": run_family,
    "completeness": run_completeness,
    "hypergraph": run_hypergraph,
    "cubic-coverage": run_cubic_coverage,
    "ssp": run_ssp,
    "n3": run_n3,
    "zero-sum-free": run_zero_sum_free,
}


def run(cfg: ExperimentConfig) -> tuple[dict, int]:
    """Execute one experiment; returns (report, exit code)."""
    cfg.check_size_guard()
    saved = None
    if cfg.unsafe_bounds:
        saved = (
            codes_mod.MAX_EXHAUSTIVE_CODEWORDS,
            codes_mod.MAX_SYNDROME_SPACE,
            codes_mod.MAX_SPAN_REDUNDANCY,
        )
        codes_mod.MAX_EXHAUSTIVE_CODEWORDS = sys.maxsize
        codes_mod.MAX_SYNDROME_SPACE = sys.maxsize
        codes_mod.MAX_SPAN_REDUNDANCY = sys.maxsize
    try:
        report = _RUNNERS[cfg.command](cfg)
    finally:
        if saved is not None:
            (
                codes_mod.MAX_EXHAUSTIVE_CODEWORDS,
                codes_mod.MAX_SYNDROME_SPACE,
                codes_mod.MAX_SPAN_REDUNDANCY,
            ) = saved
    ok = all(report.get("assertions", {}).values())
    return report, 0 if ok else 2


# -- serialization ----------------------------------------------------------------


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _csv_rows(report: dict) -> tuple[list[str], list[list]]:
    cmd = report["command"]
    res = report["result"]
    q = report["field"]["q"]
    if cmd == "n3":
        header = ["q", "qpoly", "alpha", "n3_bruteforce", "n3_formula", "r3"]
        rows = [
            [q, json.dumps(r["qpoly"]), json.dumps(r["alpha"]),
             r["n3_bruteforce"], r["n3_formula"], r["r3"]]
            for r in res["rows"]
        ]
        return header, rows
    if cmd == "family":
        header = ["tag", "params", "coset_count"]
        rows = [
            [f["tag"], json.dumps(f["params"], sort_keys=True), f["coset_count"]]
            for f in res["families"]
        ]
        return header, rows
    if cmd == "ssp":
        header = ["g", "count"]
        return header, list(enumerate(res["counts_by_encoding"]))
    if cmd == "hypergraph":
        header = ["degree", "vertex_count"]
        return header, sorted(res["degree_histogram"].items())
    if cmd in ("cubic-coverage", "completeness"):
        tag = "cubic" if cmd == "cubic-coverage" else "quadratic"
        total = res["total"] if cmd == "cubic-coverage" else res["total_deep_cosets"]
        frac = (
            res["fraction"]
            if cmd == "cubic-coverage"
            else res["union_size"] / total
        )
        header = ["q", "k", "total_cosets", "family_tag", "family_cosets",
                  "covered_fraction"]
        rows = [
            [res["q"], res["k"], total, tag, fam["cosets"], frac]
            for fam in res["per_family"]
        ]
        return header, rows
    header = ["key", "value"]
    rows = [
        [k, v if isinstance(v, (int, float, str, bool)) else json.dumps(v)]
        for k, v in sorted(res.items())
    ]
    return header, rows


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header, rows = _csv_rows(report)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def report_diff(a: dict, b: dict) -> list[dict]:
    """Field-by-field structured diff of two reports of the same kind;
    an empty diff means the reports are equal."""
    if a.get("command") != b.get("command"):
        raise ValueError(
            f"cannot diff reports of different kinds: "
            f"{a.get('command')!r} vs {b.get('command')!r}"
        )
    diffs: list[dict] = []
    _diff_walk(a, b, "", diffs)
    return diffs


def _diff_walk(a, b, path, out):
    if isinstance(a, dict) and isinstance(b, dict):
        for key in sorted(set(a) | set(b)):
            sub = f"{path}.{key}" if path else str(key)
            if key not in a:
                out.append({"path": sub, "a": None, "b": b[key]})
            elif key not in b:
                out.append({"path": sub, "a": a[key], "b": None})
            else:
                _diff_walk(a[key], b[key], sub, out)
        return
    if isinstance(a, list) and isinstance(b, list):
        if len(a) != len(b):
            out.append({"path": f"{path}.length", "a": len(a), "b": len(b)})
            return
        for i, (x, y) in enumerate(zip(a, b)):
            _diff_walk(x, y, f"{path}[{i}]", out)
        return
    if a != b:
        out.append({"path": path, "a": a, "b": b})


# -- argument parsing ------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_set(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x != "")
    except ValueError:
        raise UsageError(f"--set expects comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="deephole", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "family":
            p.add_argument("tag", choices=families.TAGS)
        p.add_argument("--q", type=int, help="field size as a prime power")
        p.add_argument("--p", type=int, help="field characteristic")
        p.add_argument("--m", type=int, help="extension degree (with --p)")
        p.add_argument("--k", type=int, help="code dimension")
        p.add_argument("--degree", type=int, choices=(2, 3))
        p.add_argument("--set", type=str, help="comma-separated element encodings")
        p.add_argument("--r", type=int, help="subset size / zero-sum-free order")
        if name == "covering-radius":
            p.add_argument("--code", choices=("rs", "prs"), default="rs")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", type=str, help="output path (default stdout)")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--unsafe-bounds", action="store_true")
    return parser


def config_from_args(args) -> ExperimentConfig:
    if (args.q is None) == (args.p is None):
        raise UsageError("give exactly one of --q or --p (with optional --m)")
    if args.q is not None and args.m is not None:
        raise UsageError("--m only combines with --p")
    if args.p is not None and not is_prime(args.p):
        raise UsageError(f"--p {args.p} is not prime")
    return ExperimentConfig(
        command=args.command,
        q=args.q,
        p=args.p,
        m=args.m,
        k=args.k,
        degree=args.degree,
        set=_parse_set(args.set) if args.set is not None else None,
        r=args.r,
        tag=getattr(args, "tag", None),
        code=getattr(args, "code", None),
        format=args.format,
        out=args.out,
        threads=args.threads,
        unsafe_bounds=args.unsafe_bounds,
    )


def run_command(argv) -> tuple[dict | None, int]:
    """Parse argv, run, and return (report, exit code); no output is produced
    for rejected configurations."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = config_from_args(args)
        report, code = run(cfg)
        return report, code
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return None, 1
    except TheoremAssertionError as e:
        print(f"structural check failed: {e}", file=sys.stderr)
        return None, 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return None, 1


def main(argv=None) -> int:
    report, code = run_command(sys.argv[1:] if argv is None else argv)
    if report is not None:
        fmt = report["config"]["format"]
        text = render_csv(report) if fmt == "csv" else render_json(report)
        out = report["config"]["out"]
        if out:
            with open(out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
