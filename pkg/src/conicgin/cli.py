"""Command-line front end: single computations, verification sweeps, file
cache, and JSON/CSV/SVG emission. All outputs are deterministic functions of
the run configuration (prime, r, m, seed, trials)."""

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from .errors import ConicGinError, DegenerateInput, GenericityFailure
from .fatpoints import (
    DEFAULT_PRIME,
    SECOND_PRIME,
    degree_cap,
    hilbert_function,
    uniform_conic_config,
)
from .ffield import is_prime
from .ginlab import (
    artinian_h_vector,
    generic_gin,
    shape_certificate,
    staircase_from_hilbert,
    staircase_product_contained,
)
from .polytope import (
    convergence_report,
    gamma_product_check,
    limit_figure_svg,
    limit_shape,
    report_csv,
    scaled_intercepts,
)
from .resolutions import (
    betti_to_json_dict,
    catalisano_resolve,
    closed_form_resolution,
    consecutive_cancellation_reachable,
    extremal_shifts,
    hf_from_betti,
    hilbert_burch_of_gin,
    predicted_extremal_shifts,
)
from .staircase import GinStaircase


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --- gin cache ---------------------------------------------------------------


def _cache_path(out_dir: Path, prime, r, m, seed, trials) -> Path:
    return out_dir / "cache" / f"gin_p{prime}_r{r}_m{m}_s{seed}_t{trials}.json"


def compute_gin(out_dir: Path, prime, r, m, seed, trials, method) -> dict:
    """Gin staircase plus h-vector, via the requested route(s), cached on
    disk keyed by (prime, r, m, seed, trials)."""
    path = _cache_path(out_dir, prime, r, m, seed, trials)
    entry = {}
    if path.exists():
        entry = json.loads(path.read_text())
    cfg = uniform_conic_config(r, m, seed=seed, prime=prime)
    changed = False
    if method in ("hilbert", "both") and "hilbert" not in entry:
        h = artinian_h_vector(cfg)
        entry["h_vector"] = list(h)
        entry["hilbert"] = staircase_from_hilbert(h).to_json_dict()
        changed = True
    if method in ("oracle", "both") and "oracle" not in entry:
        entry["oracle"] = generic_gin(cfg, trials=trials, seed=seed).to_json_dict()
        changed = True
    entry.update(prime=prime, r=r, m=m, seed=seed, trials=trials,
                 t_values=list(cfg.t_values))
    if changed:
        _write_atomic(path, _dump_json(entry))
    if "oracle" in entry and "hilbert" in entry:
        entry["verdict"] = ("agree" if entry["oracle"] == entry["hilbert"]
                            else "disagree")
    return entry


def _staircase_from_entry(entry: dict, method: str) -> GinStaircase:
    key = "oracle" if method == "oracle" else "hilbert"
    if key not in entry:
        key = "oracle" if "oracle" in entry else "hilbert"
    return GinStaircase.from_json_dict(entry[key])


# --- config validation -------------------------------------------------------


def _validate_field_config(args, m_top: int) -> None:
    if args.r < 2:
        raise DegenerateInput(f"need r >= 2 points, got r={args.r}")
    if args.trials < 2:
        raise ConicGinError("need trials >= 2")
    guard = 1000 * degree_cap(args.r, m_top)
    if not is_prime(args.prime):
        raise ConicGinError(f"--prime {args.prime} is not prime")
    if args.prime <= guard:
        raise ConicGinError(
            f"--prime {args.prime} is below the degree guard {guard} "
            f"for r={args.r}, m<={m_top}")


def _formats(args, available):
    if not args.format:
        return set(available)
    return set(args.format) & set(available)


# --- subcommands -------------------------------------------------------------


def cmd_gin(args) -> int:
    _validate_field_config(args, args.m)
    out_dir = Path(args.out_dir)
    entry = compute_gin(out_dir, args.prime, args.r, args.m, args.seed,
                        args.trials, args.method)
    if entry.get("verdict") == "disagree":
        raise GenericityFailure(
            f"oracle and h-vector routes disagree: {entry['oracle']} "
            f"vs {entry['hilbert']}")
    stair = _staircase_from_entry(entry, args.method)
    doc = stair.to_json_dict()
    doc["provenance"] = {
        "prime": args.prime, "r": args.r, "m": args.m, "seed": args.seed,
        "trials": args.trials, "t_values": entry["t_values"],
        "method": args.method, "verdict": entry.get("verdict", f"{args.method}-only"),
    }
    base = out_dir / f"gin_r{args.r}_m{args.m}"
    fmts = _formats(args, ("json", "csv"))
    if "json" in fmts:
        _write_atomic(base.with_suffix(".json"), _dump_json(doc))
    if "csv" in fmts:
        lines = ["a,lambda_a"] + [f"{a},{lam}" for a, lam in stair.csv_rows()]
        _write_atomic(base.with_suffix(".csv"), "\n".join(lines) + "\n")
    print(f"gin r={args.r} m={args.m}: alpha={stair.alpha} "
          f"lambdas={list(stair.lambdas)} ({doc['provenance']['verdict']})")
    return 0


def cmd_resolve(args) -> int:
    if args.r < 2:
        raise DegenerateInput(f"need r >= 2 points, got r={args.r}")
    doc = {"provenance": {"r": args.r, "m": args.m, "method": args.method}}
    if args.method in ("closed", "both"):
        closed = closed_form_resolution(args.r, args.m)
    if args.method in ("recursion", "both"):
        recursion = catalisano_resolve(args.r, args.m)
    if args.method == "both":
        doc["provenance"]["verdict"] = "equal" if closed == recursion else "unequal"
        table = closed
    else:
        table = closed if args.method == "closed" else recursion
    doc.update(betti_to_json_dict(table))
    path = Path(args.out_dir) / f"resolve_r{args.r}_m{args.m}.json"
    if "json" in _formats(args, ("json",)):
        _write_atomic(path, _dump_json(doc))
    print(f"resolution r={args.r} m={args.m}: f0={list(table.f0)} "
          f"f1={list(table.f1)}" + (
              f" ({doc['provenance']['verdict']})" if args.method == "both" else ""))
    if doc["provenance"].get("verdict") == "unequal":
        return 1
    return 0


def _gin_entries_for_sweep(args, m_values, method) -> dict:
    out_dir = Path(args.out_dir)

    def one(m):
        return m, compute_gin(out_dir, args.prime, args.r, m, args.seed,
                              args.trials, method)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            return dict(pool.map(one, m_values))
    return dict(one(m) for m in m_values)


def _certificate_label(stair, r, m) -> str:
    try:
        cert = shape_certificate(stair, r, m)
    except ConicGinError:
        return "no closed-form certificate"
    return "passed" if cert.passed else "failed"


def cmd_limit(args) -> int:
    if args.m_max < 1:
        raise ConicGinError("need --m-max >= 1")
    _validate_field_config(args, args.m_max)
    m_values = list(range(1, args.m_max + 1))
    entries = _gin_entries_for_sweep(args, m_values, "hilbert")
    staircases = [(m, _staircase_from_entry(entries[m], "hilbert"))
                  for m in m_values]
    rows = convergence_report(args.r, staircases)
    cells = [{"m": m, "certificate": _certificate_label(s, args.r, m)}
             for m, s in staircases]
    if any(c["certificate"] == "failed" for c in cells):
        raise GenericityFailure(f"shape certificate failed: {cells}")
    limit = limit_shape(args.r)
    doc = {
        "provenance": {"prime": args.prime, "r": args.r, "m_max": args.m_max,
                       "seed": args.seed, "trials": args.trials},
        "limit": {"gamma1": str(limit.gamma1), "gamma2": str(limit.gamma2)},
        "cells": cells,
    }
    out_dir = Path(args.out_dir)
    fmts = _formats(args, ("json", "csv", "svg"))
    if "csv" in fmts:
        _write_atomic(out_dir / f"limit_r{args.r}.csv", report_csv(rows))
    if "svg" in fmts:
        _write_atomic(out_dir / f"limit_r{args.r}.svg",
                      limit_figure_svg(args.r, staircases))
    if "json" in fmts:
        _write_atomic(out_dir / f"limit_r{args.r}.json", _dump_json(doc))
    print(f"limit r={args.r}: boundary ({limit.gamma1},0)-(0,{limit.gamma2}), "
          f"{len(rows)} staircases")
    return 0


# --- verify ------------------------------------------------------------------


def _closed_form_supported(r: int, m: int) -> bool:
    return (r >= 4 and (r % 2 == 0 or m % 2 == 0)) or (r == 3 and m % 2 == 0)


def _family(name, status, detail):
    return {"family": name, "status": status, "detail": detail}


def _run_verify_families(args) -> list[dict]:
    r, m_max = args.r, args.m_max
    all_m = list(range(1, m_max + 1))
    sup_m = [m for m in all_m if _closed_form_supported(r, m)]
    families = []

    if r >= 4 and sup_m:
        bad = [m for m in sup_m
               if catalisano_resolve(r, m) != closed_form_resolution(r, m)]
        families.append(_family(
            "closed_vs_recursion", "fail" if bad else "pass",
            f"cells m={sup_m}" + (f", mismatch at {bad}" if bad else "")))
    else:
        families.append(_family(
            "closed_vs_recursion", "skip",
            "recursion needs r >= 4 and a closed-form cell"))

    if r >= 3 and sup_m:
        bad = [m for m in sup_m
               if extremal_shifts(closed_form_resolution(r, m))
               != predicted_extremal_shifts(r, m)]
        families.append(_family(
            "lemma_shifts", "fail" if bad else "pass",
            f"cells m={sup_m}" + (f", mismatch at {bad}" if bad else "")))
    else:
        families.append(_family("lemma_shifts", "skip",
                                "no closed-form cells for this r"))

    if r >= 3 and sup_m:
        bad = []
        for m in sup_m:
            table = closed_form_resolution(r, m)
            for prime in (args.prime, SECOND_PRIME):
                cfg = uniform_conic_config(r, m, seed=args.seed, prime=prime)
                for d in range(degree_cap(r, m) + 1):
                    if hf_from_betti(table, d) != hilbert_function(cfg, d):
                        bad.append((m, prime, d))
        families.append(_family(
            "oracle_hf", "fail" if bad else "pass",
            f"cells m={sup_m}, primes ({args.prime}, {SECOND_PRIME})"
            + (f", mismatch at {bad}" if bad else "")))
    else:
        families.append(_family("oracle_hf", "skip",
                                "no closed-form cells for this r"))

    entries = _gin_entries_for_sweep(args, all_m, "both")
    oracle = {m: GinStaircase.from_json_dict(entries[m]["oracle"]) for m in all_m}

    cert_failures = []
    skipped_cells = []
    for m in all_m:
        if _closed_form_supported(r, m):
            if not shape_certificate(oracle[m], r, m).passed:
                cert_failures.append(m)
        else:
            skipped_cells.append(m)
    detail = f"cells m={all_m}, structure checked by the oracle sweep"
    if skipped_cells:
        detail += f"; certificate skipped (no closed form) at m={skipped_cells}"
    families.append(_family(
        "gin_structure", "fail" if cert_failures else "pass",
        detail + (f"; certificate failed at {cert_failures}" if cert_failures else "")))

    two_route_bad = [m for m in all_m if entries[m].get("verdict") != "agree"]
    families.append(_family(
        "two_route_gin", "fail" if two_route_bad else "pass",
        f"cells m={all_m}" + (f", disagree at {two_route_bad}" if two_route_bad else "")))

    if sup_m:
        bad = []
        for m in sup_m:
            table = closed_form_resolution(r, m)
            seq = consecutive_cancellation_reachable(
                hilbert_burch_of_gin(oracle[m]), table)
            D, U = extremal_shifts(table)
            if seq is None or U in seq or D in seq:
                bad.append(m)
        families.append(_family(
            "cancellation", "fail" if bad else "pass",
            f"cells m={sup_m}" + (f", failed at {bad}" if bad else "")))
    else:
        families.append(_family("cancellation", "skip",
                                "no closed-form cells for this r"))

    limit = limit_shape(r)
    conv_bad = []
    for m in all_m:
        g1, g2 = scaled_intercepts(oracle[m], m)
        if r >= 4 and _closed_form_supported(r, m):
            expect = (Fraction(2), Fraction(r, 2) + Fraction(1, m))
        elif r == 3 and m % 2 == 0:
            expect = (Fraction(3, 2), Fraction(2))
        elif r == 2:
            expect = (Fraction(1), Fraction(2))
        else:
            continue
        if (g1, g2) != expect:
            conv_bad.append((m, str(g1), str(g2)))
    if not gamma_product_check(limit, r):
        conv_bad.append(("gamma-product", str(limit.gamma1), str(limit.gamma2)))
    families.append(_family(
        "convergence", "fail" if conv_bad else "pass",
        f"cells m={all_m}" + (f", failed at {conv_bad}" if conv_bad else "")))

    pairs = [(i, j) for i in all_m for j in all_m
             if i <= j and i + j <= min(m_max, 4)]
    if pairs:
        bad = [(i, j) for i, j in pairs
               if not staircase_product_contained(
                   oracle[i], oracle[j], oracle[i + j])]
        families.append(_family(
            "graded_system", "fail" if bad else "pass",
            f"pairs {pairs}" + (f", failed at {bad}" if bad else "")))
    else:
        families.append(_family("graded_system", "skip", "needs m_max >= 2"))

    return families


def cmd_verify(args) -> int:
    _validate_field_config(args, args.m_max)
    families = _run_verify_families(args)
    for fam in families:
        print(f"{fam['status'].upper():4s} {fam['family']}: {fam['detail']}")
    passed = all(fam["status"] != "fail" for fam in families)
    report = {
        "r": args.r, "m_max": args.m_max, "prime": args.prime,
        "seed": args.seed, "trials": args.trials,
        "families": families, "passed": passed,
    }
    _write_atomic(Path(args.out_dir) / "verify_report.json", _dump_json(report))
    return 0 if passed else 1


# --- parser ------------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--trials", type=int, default=3)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--out-dir", default="out")
    sub.add_argument("--format", action="append",
                     choices=("json", "csv", "svg"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conicgin",
        description="Symbolic powers of conic point ideals: gin staircases, "
                    "Betti tables, and limiting Newton polytopes over GF(p).")
    subs = parser.add_subparsers(dest="command", required=True)

    gin = subs.add_parser("gin", help="gin staircase of one (r, m) cell")
    gin.add_argument("--r", type=int, required=True)
    gin.add_argument("--m", type=int, required=True)
    gin.add_argument("--method", choices=("oracle", "hilbert", "both"),
                     default="both")
    _add_common(gin)
    gin.set_defaults(func=cmd_gin)

    res = subs.add_parser("resolve", help="Betti table of one (r, m) cell")
    res.add_argument("--r", type=int, required=True)
    res.add_argument("--m", type=int, required=True)
    res.add_argument("--method", choices=("closed", "recursion", "both"),
                     default="both")
    _add_common(res)
    res.set_defaults(func=cmd_resolve)

    lim = subs.add_parser("limit", help="convergence sweep and figure")
    lim.add_argument("--r", type=int, required=True)
    lim.add_argument("--m-max", type=int, required=True)
    _add_common(lim)
    lim.set_defaults(func=cmd_limit)

    ver = subs.add_parser("verify", help="run the invariant families")
    ver.add_argument("--r", type=int, default=4)
    ver.add_argument("--m-max", type=int, default=2)
    _add_common(ver)
    ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConicGinError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
