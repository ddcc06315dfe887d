"""Command-line surface: spectra, claim verification, polynomials, families.

Output contract: one JSON object per line on stdout with sorted keys and
floats fixed at 12 significant digits, so identical runs are byte-identical
regardless of worker count; the human-readable summary goes to stderr.
Exit codes: 0 all claims confirmed, 2 refuted, 3 reversed-direction only,
1 usage or input errors.
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from cdspectra import quotients, verify
from cdspectra.families import FAMILIES
from cdspectra.graphcore import (
    DisconnectedGraph,
    Graph,
    Graph6Error,
    complement,
    diameter,
    distance_matrix,
    from_graph6,
    to_graph6,
)
from cdspectra.spectra import sym_eigenvalues

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2
EXIT_REVERSED = 3

QUOTIENT_PARAMS = {
    "H": ("s", "t"), "B1": ("p", "q"), "B2": ("p", "q"), "T": ("n",),
    "L": ("p", "q"), "Lprime": ("n",), "Ldprime": ("n",),
}


def fmt_float(x: float) -> str:
    return format(float(x), ".12g")


def to_json(obj) -> str:
    """Deterministic JSON: sorted keys, floats at 12 significant digits."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(to_json(v) for v in obj) + "]"
    if isinstance(obj, np.ndarray):
        return to_json(obj.tolist())
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: str(kv[0]))
        return "{" + ",".join(f"{json.dumps(str(k))}:{to_json(v)}" for k, v in items) + "}"
    raise TypeError(f"unserializable type {type(obj)!r}")


def emit(obj, out=None) -> None:
    print(to_json(obj), file=out or sys.stdout)


@dataclass
class RunConfig:
    subcommand: str
    family: str | None = None
    params: dict = field(default_factory=dict)
    n: int | None = None
    p_max: int = 12
    claims: list[str] = field(default_factory=list)
    tol: float = 1e-9
    workers: int = 1
    use_stdin: bool = False
    csv_path: str | None = None
    output: str = "json"


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("CDSPECTRA_WORKERS", "1")))
    except ValueError:
        return 1


def _family_params(args, family: str, names: tuple[str, ...]) -> tuple[int, ...]:
    vals = []
    for name in names:
        v = getattr(args, name, None)
        if v is None:
            raise SystemExit2(f"family {family} needs --{name}")
        vals.append(int(v))
    return tuple(vals)


class SystemExit2(Exception):
    """Usage error carrying exit code 1."""


def _build_family_graph(args) -> Graph:
    family = args.family
    if family not in FAMILIES:
        raise SystemExit2(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}")
    names = FAMILIES[family].param_names
    return FAMILIES[family].build(*_family_params(args, family, names))


def _graph_record(label: str, g: Graph, tol: float) -> dict:
    d = diameter(g)
    dc = distance_matrix(complement(g)).astype(np.float64)
    spec = sym_eigenvalues(dc)
    part = verify.sign_partition(g)
    return {
        "input": label,
        "n": g.n,
        "diameter": d,
        "lambda1_complement": spec.lambda1,
        "lambda_n_complement": spec.lambda_n,
        "complement_spectrum": [float(v) for v in spec.values],
        "p": part.p,
        "q": part.q,
        "degenerate_least_eigenvalue": part.degenerate,
        "graph6": to_graph6(g),
    }


def cmd_spectrum(cfg: RunConfig, args) -> int:
    records = []
    errors = 0
    if args.family:
        g = _build_family_graph(args)
        records.append(_graph_record(args.family, g, cfg.tol))
    else:
        for lineno, line in enumerate(sys.stdin, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                g = from_graph6(line)
                records.append(_graph_record(f"line {lineno}", g, cfg.tol))
            except (Graph6Error, DisconnectedGraph, ValueError) as exc:
                errors += 1
                records.append({"line": lineno, "error": str(exc)})
    for r in records:
        emit(r)
    print(f"spectrum: {len(records) - errors} graphs, {errors} errors", file=sys.stderr)
    return EXIT_USAGE if errors else EXIT_OK


def cmd_poly(cfg: RunConfig, args) -> int:
    family = args.family
    if family not in QUOTIENT_PARAMS:
        raise SystemExit2(
            f"family {family!r} has no quotient model; "
            f"supported: {', '.join(sorted(QUOTIENT_PARAMS))}")
    params = _family_params(args, family, QUOTIENT_PARAMS[family])
    rep = quotients.quotient_consistency(family, params, cfg.tol)
    emit({
        "family": family,
        "params": list(params),
        "printed_coefficients": list(rep.printed_poly.coeffs),
        "derived_coefficients": list(rep.derived_poly.coeffs),
        "match": rep.poly_matches,
        "matrix_matches_printed": rep.matrix_matches,
        "roots": rep.quotient_roots,
        "roots_in_full_spectrum": rep.roots_matched,
        "lambda1_is_quotient_root": rep.lambda1_is_root,
        "lambda_n_is_quotient_root": rep.lambda_n_is_root,
    })
    print(f"poly {family}{params}: printed==derived: {rep.poly_matches}", file=sys.stderr)
    return EXIT_OK


def cmd_family(cfg: RunConfig, args) -> int:
    g = _build_family_graph(args)
    print(to_graph6(g))
    print(f"family {args.family}: n={g.n}, edges={g.edge_count()}, "
          f"diameter={diameter(g)}", file=sys.stderr)
    return EXIT_OK


def _stream_theorem(tid: str, lines, workers: int) -> verify.VerificationReport:
    """Theorem check over an external graph6 stream instead of enumeration."""
    graphs: list[Graph] = []
    verify.enumerate_diam_gt3(sink=graphs.append, source=lines)
    if not graphs:
        raise SystemExit2("no diameter>3 graphs in the input stream")
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise SystemExit2("input stream mixes graph orders")
    values = {
        "l1": [verify.complement_distance_spectrum(g).lambda1 for g in graphs],
        "ln": [verify.complement_distance_spectrum(g).lambda_n for g in graphs],
    }
    rep = verify.check_theorem_on_values(tid, n, graphs, values)
    rep.notes.append("external graph6 stream: verdict covers the supplied graphs only")
    return rep


def cmd_verify(cfg: RunConfig, args) -> int:
    claims = [c.strip() for c in (args.claims or "").split(",") if c.strip()]
    if not claims:
        raise SystemExit2("no claims given; use --claims id[,id...]")
    for c in claims:
        if c not in verify.CLAIM_IDS:
            raise SystemExit2(
                f"unknown claim id {c!r}; known: {', '.join(verify.CLAIM_IDS)}")
    reports = []
    for c in claims:
        if cfg.use_stdin:
            if not c.startswith("T"):
                raise SystemExit2("--stdin supports theorem claims only")
            rep = _stream_theorem(c, sys.stdin, cfg.workers)
        else:
            rep = verify.run_claim(c, n=cfg.n, p_max=cfg.p_max, workers=cfg.workers)
        reports.append(rep)
        emit(rep.to_dict())
        print(f"{rep.claim_id}: {rep.status}"
              + (f" (margin {fmt_float(rep.margin)})" if rep.margin is not None else ""),
              file=sys.stderr)
    if cfg.csv_path:
        _write_csv(cfg.csv_path, reports)
    statuses = {r.status for r in reports}
    if "refuted" in statuses:
        return EXIT_REFUTED
    if "confirmed-with-reversed-direction" in statuses:
        return EXIT_REVERSED
    return EXIT_OK


def _write_csv(path: str, reports) -> None:
    import csv

    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["claim", "status", "margin", "witnesses", "counterexamples", "notes"])
        for r in reports:
            w.writerow([
                r.claim_id, r.status,
                "" if r.margin is None else fmt_float(r.margin),
                ";".join(r.witnesses), ";".join(r.counterexamples),
                " | ".join(r.notes),
            ])


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family id (path, star, H, T, T1, T2, B1, B2, L, Lprime, Ldprime)")
    for name in ("n", "s", "t", "a", "b", "p", "q"):
        p.add_argument(f"--{name}", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cdspectra",
        description="Distance spectra of complements of diameter>3 graphs: "
                    "families, quotient polynomials, exhaustive verification.")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("spectrum", help="per-graph complement distance spectrum")
    _add_family_args(sp)
    sp.add_argument("--tol", type=float, default=1e-9)

    pp = sub.add_parser("poly", help="quotient polynomial coefficients and roots")
    _add_family_args(pp)
    pp.add_argument("--tol", type=float, default=1e-9)

    fp = sub.add_parser("family", help="materialize a family graph as graph6")
    _add_family_args(fp)

    vp = sub.add_parser("verify", help="verify lemma/theorem claims")
    vp.add_argument("--claims", required=True,
                    help="comma-separated ids, e.g. T2.8,3.4,quotient-consistency")
    vp.add_argument("--n", type=int, default=None, help="order for scans")
    vp.add_argument("--p-max", type=int, default=12, help="grid upper bound for p")
    vp.add_argument("--workers", type=int, default=_default_workers(),
                    help="worker processes for exhaustive scans "
                         "(default $CDSPECTRA_WORKERS or 1)")
    vp.add_argument("--stdin", action="store_true",
                    help="read class members as graph6 lines from stdin")
    vp.add_argument("--csv", default=None, help="write a CSV summary table here")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        subcommand=args.subcommand,
        family=getattr(args, "family", None),
        n=getattr(args, "n", None),
        p_max=getattr(args, "p_max", 12),
        tol=getattr(args, "tol", 1e-9),
        workers=getattr(args, "workers", 1),
        use_stdin=getattr(args, "stdin", False),
        csv_path=getattr(args, "csv", None),
    )
    try:
        if args.subcommand == "spectrum":
            return cmd_spectrum(cfg, args)
        if args.subcommand == "poly":
            return cmd_poly(cfg, args)
        if args.subcommand == "family":
            return cmd_family(cfg, args)
        if args.subcommand == "verify":
            return cmd_verify(cfg, args)
        raise SystemExit2(f"unknown subcommand {args.subcommand!r}")
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
