"""Command-line front end: verification suite, simulations, and reports.

Subcommands
-----------
identities  run the algebra/frame verification suite, print one line per check
simulate    EPR correlation estimators over an angle sweep or a single pair
hopf        transition/transport residuals and the null-bivector limit probe
s7          7-sphere trivector report (contraction terms, grade decomposition)

Every run writes ``manifest.json`` into the output directory: command name,
full config echo, seed, package version, start/end timestamps, and a sha256
digest per emitted data file.  Data files contain no timestamps, so a rerun
with the same flags and seed is byte-identical.  Numeric CSV fields carry 17
significant digits with a locale-independent decimal point.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import math
import os
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .epr import ExperimentConfig, SweepSpec, correlation_raw, correlation_standard, sweep
from .hopf import (
    DegenerateAxisError,
    null_limit_probe,
    parallel_transport_check,
    phase_flip_at_pi,
    transition_relation,
)
from .identities import IDENTITY_TOL, run_identity_checks
from .multivector import blade_label, norm, unit_vector
from .seven_sphere import Embedding, build_J, embed, raw_score_7, standard_score_7, vector7
from .multivector import contract

DEFAULT_SEED = 42
SEED_ENV_VAR = "CLIFFSPHERE_SEED"

#: Acceptance bound for the transport and transition residuals.
HOPF_TOL = 1e-10

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Bad flag value or configuration input."""


def _fmt(x: float) -> str:
    """17 significant digits, locale independent."""
    return format(float(x), ".17g")


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _parse_vector(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected 'x,y,z', got {text!r}")
    try:
        v = np.array([float(p) for p in parts])
    except ValueError as exc:
        raise UsageError(f"could not parse vector {text!r}: {exc}") from exc
    try:
        return unit_vector(v)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_sweep(text: str) -> SweepSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"expected 'START:STOP:STEPS', got {text!r}")
    try:
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
        return SweepSpec(start_deg=start, stop_deg=stop, steps=steps)
    except ValueError as exc:
        raise UsageError(f"bad sweep {text!r}: {exc}") from exc


def _parse_separations(text: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"bad separation list {text!r}: {exc}") from exc


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"{SEED_ENV_VAR}={env!r} is not an integer") from exc
    return DEFAULT_SEED


def _write_manifest(out_dir: Path, command: str, config: dict, seed: int,
                    outputs: list[Path], started: str) -> None:
    manifest = {
        "command": command,
        "config": config,
        "seed": seed,
        "version": __version__,
        "started_utc": started,
        "finished_utc": _utc_now(),
        "outputs": [
            {"path": p.name, "sha256": _sha256(p)} for p in outputs
        ],
    }
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _prepare_out(out: str) -> Path:
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    return out_dir


def _nonzero_terms(mv) -> dict[str, float]:
    return {
        blade_label(mask): float(c)
        for mask, c in enumerate(mv.coeffs)
        if c != 0.0
    }


# -- subcommands -----------------------------------------------------------------


def cmd_identities(args) -> int:
    started = _utc_now()
    seed = _resolve_seed(args.seed)
    out_dir = _prepare_out(args.out)
    print(f"identity suite: tolerance {args.tolerance:g}, {args.pairs} vector pairs")
    results = run_identity_checks(
        tolerance=args.tolerance,
        n_pairs=args.pairs,
        seed=seed,
        inject_sign_flip=args.inject_sign_flip,
    )
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:55s} max residual {r.residual:.3e}  tol {r.tolerance:.1e}")
    n_pass = sum(1 for r in results if r.passed)
    print(f"{n_pass}/{len(results)} checks passed")
    config = {
        "tolerance": args.tolerance,
        "pairs": args.pairs,
        "inject_sign_flip": args.inject_sign_flip,
        "out": str(args.out),
    }
    _write_manifest(out_dir, "identities", config, seed, [], started)
    return EXIT_OK if n_pass == len(results) else EXIT_VERIFICATION


def cmd_simulate(args) -> int:
    started = _utc_now()
    seed = _resolve_seed(args.seed)
    out_dir = _prepare_out(args.out)
    if (args.a is None) != (args.b is None):
        raise UsageError("--a and --b must be given together")
    if args.a is not None:
        a = _parse_vector(args.a)
        b = _parse_vector(args.b)
        cfg = ExperimentConfig(n_trials=args.trials, seed=seed)
        std = correlation_standard(a, b, cfg)
        raw = correlation_raw(a, b, cfg)
        theta = math.degrees(
            math.atan2(float(np.linalg.norm(np.cross(a, b))), float(np.dot(a, b)))
        )
        rows = [
            (theta, raw.scalar, std.scalar, *std.residual_coeffs,
             std.residual_norm, std.stderr, cfg.n_trials)
        ]
        config = {"trials": args.trials, "a": args.a, "b": args.b, "out": str(args.out)}
    else:
        spec = _parse_sweep(args.sweep)
        cfg = ExperimentConfig(n_trials=args.trials, seed=seed, sweep=spec)
        rows = [
            (r.theta_deg, r.raw_mean, r.std_scalar, *r.residual,
             r.residual_norm, r.stderr, r.n)
            for r in sweep(cfg)
        ]
        config = {"trials": args.trials, "sweep": args.sweep, "out": str(args.out)}

    csv_path = out_dir / "correlations.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["theta_deg", "raw_mean", "std_scalar", "resid_x", "resid_y",
             "resid_z", "resid_norm", "stderr", "n"]
        )
        for row in rows:
            writer.writerow([_fmt(v) for v in row[:-1]] + [str(row[-1])])
    print(f"wrote {csv_path} ({len(rows)} rows)")
    _write_manifest(out_dir, "simulate", config, seed, [csv_path], started)
    return EXIT_OK


def cmd_hopf(args) -> int:
    started = _utc_now()
    seed = _resolve_seed(args.seed)
    out_dir = _prepare_out(args.out)
    phi = math.radians(args.phi_deg)
    if not 0.0 < phi < math.pi:
        raise UsageError("--phi-deg must lie strictly between 0 and 180")
    a = np.array([1.0, 0.0, 0.0])
    b = np.array([math.cos(phi), math.sin(phi), 0.0])
    separations = _parse_separations(args.limit_separations)

    failures = 0
    try:
        _, _, transition_res = transition_relation(a, b, args.psi_a)
        transport_res = parallel_transport_check(a, b, args.psi_a, 1)
    except DegenerateAxisError as exc:
        raise UsageError(str(exc)) from exc
    _, _, flip_res = phase_flip_at_pi(args.psi_a)
    for name, res in (
        ("transition residual", transition_res),
        ("transport residual (lam=+1)", transport_res),
        ("phase flip at pi residual", flip_res),
    ):
        ok = res < HOPF_TOL
        failures += 0 if ok else 1
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {res:.3e}  (tol {HOPF_TOL:.0e})")

    try:
        rows = null_limit_probe(a, separations)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    csv_path = out_dir / "null_limit.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["psi_rad", "wedge_magnitude", "axis_x", "axis_y", "axis_z"])
        for row in rows:
            writer.writerow([_fmt(row.psi_rad), _fmt(row.magnitude)]
                            + [_fmt(x) for x in row.axis])
    print(f"wrote {csv_path} ({len(rows)} rows)")

    config = {
        "psi_a": args.psi_a,
        "phi_deg": args.phi_deg,
        "limit_separations": separations,
        "out": str(args.out),
    }
    _write_manifest(out_dir, "hopf", config, seed, [csv_path], started)
    return EXIT_OK if failures == 0 else EXIT_VERIFICATION


def cmd_s7(args) -> int:
    started = _utc_now()
    seed = _resolve_seed(args.seed)
    out_dir = _prepare_out(args.out)
    a = _parse_vector(args.a)
    lam = args.lam
    if args.embedding == "default":
        embedding = Embedding.default()
        embedding_echo = "default"
    else:
        try:
            matrix = np.loadtxt(args.embedding)
            embedding = Embedding.from_matrix(matrix)
        except (OSError, ValueError) as exc:
            raise UsageError(f"bad isometry file {args.embedding!r}: {exc}") from exc
        embedding_echo = str(args.embedding)

    J = build_J().value
    n7 = embed(a, embedding)
    jn = contract(J, vector7(n7))
    std = standard_score_7(a, lam, embedding)
    raw = raw_score_7(a, lam, embedding)
    report = {
        "a": [float(x) for x in a],
        "lambda": lam,
        "embedding": embedding_echo,
        "n7": [float(x) for x in n7],
        "J": _nonzero_terms(J),
        "contract_terms": _nonzero_terms(jn),
        "standard_score": _nonzero_terms(std),
        "raw_score": {
            "coefficients": _nonzero_terms(raw.value),
            "scalar_part": raw.scalar,
            "grade_norms": {str(g): v for g, v in raw.grade_norm.items()},
        },
    }
    report_path = out_dir / "s7_report.json"
    report_path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    print(f"wrote {report_path}")
    print(f"contraction terms: {', '.join(sorted(_nonzero_terms(jn)))}")
    print(f"raw-score scalar part: {_fmt(raw.scalar)}")

    config = {"a": args.a, "lambda": lam, "embedding": embedding_echo, "out": str(args.out)}
    _write_manifest(out_dir, "s7", config, seed, [report_path], started)
    return EXIT_OK


# -- argument parsing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffsphere",
        description="Clifford-algebra identity suite and EPR-Bohm orientation simulator",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default="./out", help="output directory (default ./out)")
        p.add_argument(
            "--seed",
            type=int,
            default=None,
            help=f"RNG seed (default ${SEED_ENV_VAR} or {DEFAULT_SEED})",
        )

    p = sub.add_parser("identities", help="run the verification suite")
    common(p)
    p.add_argument("--tolerance", type=float, default=IDENTITY_TOL,
                   help="threshold for the floating algebraic identities")
    p.add_argument("--pairs", type=int, default=1000,
                   help="random unit-vector pairs per identity")
    p.add_argument("--inject-sign-flip", action="store_true",
                   help="test mode: corrupt a structure constant; the suite must fail")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("simulate", help="run the correlation estimators")
    common(p)
    p.add_argument("--trials", type=int, default=100_000, help="trials per direction pair")
    p.add_argument("--sweep", default="0:180:37",
                   help="angle sweep START:STOP:STEPS in degrees (default 0:180:37)")
    p.add_argument("--a", default=None, help="Alice direction x,y,z (with --b)")
    p.add_argument("--b", default=None, help="Bob direction x,y,z (with --a)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("hopf", help="transport residuals and null-limit probe")
    common(p)
    p.add_argument("--psi-a", type=float, default=0.01, help="fiber angle of a -> a'")
    p.add_argument("--phi-deg", type=float, default=90.0, help="angle between a and b")
    p.add_argument("--limit-separations",
                   default="1e-1,1e-2,1e-3,1e-4,1e-5,1e-6",
                   help="comma-separated probe angles, strictly decreasing")
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("s7", help="7-sphere trivector report")
    common(p)
    p.add_argument("--a", default="1,0,0", help="base direction x,y,z")
    p.add_argument("--lambda", dest="lam", type=int, default=1, choices=(1, -1),
                   help="orientation sign")
    p.add_argument("--embedding", default="default",
                   help="'default' (zero padding) or a text file with a 7x3 isometry")
    p.set_defaults(func=cmd_s7)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
