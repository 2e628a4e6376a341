"""Batch command-line interface.

Commands: ``measure`` (weight tables), ``convert`` (equivalent Schur
parameters), ``correlations`` (brute-force point correlations),
``verify`` (named identity suites), ``decompose`` (parameter-plane
structure report).  Everything is exact: parameters are "p/q" strings,
never floats.  Reports stream as JSON lines with a summary object last;
identical configuration and seed give byte-identical output.

Exit codes: 0 success, 1 falsified identity, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .conversion import schur_params_from_vir, y_side_params, z_linearity_witness
from .measures import (
    MeasureSpec,
    MiwaParams,
    cauchy_normalizer,
    correlation,
    weight_table,
)
from .operators import KerovParams
from .partitions import HalfInt
from .repstructure import decomposition_report
from .rings import Poly, Scalar, parse_rational, rational_str, scalar_to_json
from .suites import SUITES, run_suite

OUT_DIR_ENV = "YOUNGFOCK_OUT_DIR"


@dataclass
class RunConfig:
    command: str
    params: Dict[str, Fraction] = field(default_factory=dict)
    x: Dict[int, Fraction] = field(default_factory=dict)
    y: Dict[int, Fraction] = field(default_factory=dict)
    max_degree: int = 0
    ring: str = "rational"
    output: str = "json"
    seed: int = 0
    kind: str = "schur"
    m_order: int = 2
    points: List[HalfInt] = field(default_factory=list)
    suite: str = ""
    out: Optional[str] = None

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError("max-degree must be >= 0")


class _CliError(Exception):
    pass


def _parse_miwa(text: Optional[str]) -> Dict[int, Fraction]:
    if not text:
        return {}
    out: Dict[int, Fraction] = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise _CliError(f"bad parameter entry {piece!r}; expected k=p/q")
        key, _, value = piece.partition("=")
        k = int(key)
        if k < 1:
            raise _CliError(f"parameter index {k} must be >= 1")
        out[k] = parse_rational(value)
    return out


def _parse_points(text: Optional[str]) -> List[HalfInt]:
    if not text:
        return []
    try:
        entries = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliError(f"points must be a JSON list of half-integer strings: {exc}")
    if not isinstance(entries, list):
        raise _CliError("points must be a JSON list")
    return [HalfInt.parse(str(e)) for e in entries]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="youngfock",
        description="exact measure tables, Schur conversions and identity "
        "verification on the diagram Fock space",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-degree", type=int, default=4)
        p.add_argument("--ring", choices=["rational", "poly-z"], default="rational")
        p.add_argument("--output", choices=["json", "csv"], default="json")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="write to this file instead of stdout")

    m = sub.add_parser("measure", help="tabulate unnormalized and normalized weights")
    m.add_argument("--kind", choices=["schur", "virasoro", "m-virasoro"], required=True)
    m.add_argument("--m", type=int, default=2, help="order for the m-virasoro kind")
    m.add_argument("--z", default="0")
    m.add_argument("--w", default="0")
    m.add_argument("--gamma", default="0")
    m.add_argument("--x", default="")
    m.add_argument("--y", default="")
    common(m)

    c = sub.add_parser("convert", help="equivalent Schur parameters X_N (and Y_N)")
    c.add_argument("--x", default="")
    c.add_argument("--y", default="")
    c.add_argument("--z", default="0")
    c.add_argument("--w", default="0")
    common(c)

    r = sub.add_parser("correlations", help="brute-force correlation of a point set")
    r.add_argument("--kind", choices=["schur", "virasoro", "m-virasoro"], required=True)
    r.add_argument("--m", type=int, default=2)
    r.add_argument("--z", default="0")
    r.add_argument("--w", default="0")
    r.add_argument("--gamma", default="0")
    r.add_argument("--x", default="")
    r.add_argument("--y", default="")
    r.add_argument("--points", required=True,
                   help='JSON list of half-integers, e.g. \'["1/2","-3/2"]\'')
    common(r)

    v = sub.add_parser("verify", help="run a named identity suite")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--max-degree", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--output", choices=["json", "csv"], default="json")
    v.add_argument("--out", default=None)

    d = sub.add_parser("decompose", help="parameter-plane structure report")
    d.add_argument("--z", required=True)
    d.add_argument("--w", required=True)
    d.add_argument("--max-degree", type=int, default=6)
    d.add_argument("--output", choices=["json", "csv"], default="json")
    d.add_argument("--out", default=None)

    return parser


def _resolve_out(path: Optional[str]):
    if path is None:
        return None
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(lines: List[str], out: Optional[str]) -> None:
    text = "\n".join(lines) + "\n"
    target = _resolve_out(out)
    if target is None:
        sys.stdout.write(text)
    else:
        with open(target, "w") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig(
        command=args.command,
        max_degree=getattr(args, "max_degree", 0) or 0,
        ring=getattr(args, "ring", "rational"),
        output=getattr(args, "output", "json"),
        seed=getattr(args, "seed", 0) or 0,
        kind=getattr(args, "kind", "schur"),
        m_order=getattr(args, "m", 2),
        suite=getattr(args, "suite", "") or "",
        out=getattr(args, "out", None),
    )
    for name in ("z", "w", "gamma"):
        raw = getattr(args, name, None)
        if raw is not None:
            cfg.params[name] = parse_rational(raw)
    cfg.x = _parse_miwa(getattr(args, "x", None))
    cfg.y = _parse_miwa(getattr(args, "y", None))
    cfg.points = _parse_points(getattr(args, "points", None))
    return cfg


def _measure_spec(cfg: RunConfig) -> MeasureSpec:
    z: Scalar = cfg.params.get("z", Fraction(0))
    if cfg.ring == "poly-z":
        z = Poly.gen()
    return MeasureSpec(
        kind=cfg.kind,
        params=MiwaParams(x=dict(cfg.x), y=dict(cfg.y)),
        kerov=KerovParams(z=z, w=cfg.params.get("w", Fraction(0))),
        truncation=cfg.max_degree,
        m_order=cfg.m_order,
        gamma=cfg.params.get("gamma", Fraction(0)),
    )


def _run_measure(cfg: RunConfig) -> int:
    spec = _measure_spec(cfg)
    table = weight_table(spec)
    payload = table.to_json()
    summary = {
        "command": "measure",
        "kind": spec.kind,
        "degree": table.degree,
        "params": {
            "z": scalar_to_json(spec.kerov.z),
            "w": scalar_to_json(spec.kerov.w),
            "x": {str(k): rational_str(v) for k, v in sorted(cfg.x.items())},
            "y": {str(k): rational_str(v) for k, v in sorted(cfg.y.items())},
        },
        "z_trunc": payload["z_trunc"],
        "ok": True,
    }
    if spec.kind == "m-virasoro":
        summary["m"] = spec.m_order
        summary["params"]["gamma"] = rational_str(cfg.params.get("gamma", Fraction(0)))
    if spec.kind == "schur":
        summary["cauchy_normalizer"] = scalar_to_json(
            cauchy_normalizer(spec.params, table.degree))
    if cfg.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        for row in table.to_csv_rows():
            writer.writerow(row)
        _emit([buf.getvalue().rstrip("\n")], cfg.out)
        return 0
    lines = [_dump(r) for r in payload["weights"]]
    lines.append(_dump(summary))
    _emit(lines, cfg.out)
    return 0


def _run_convert(cfg: RunConfig) -> int:
    lines = []
    n_max = cfg.max_degree
    witnesses = z_linearity_witness(cfg.x, n_max) if cfg.x else []
    if cfg.ring == "poly-z":
        xs = schur_params_from_vir(cfg.x, Poly.gen(), n_max) if cfg.x else []
    else:
        xs = schur_params_from_vir(cfg.x, cfg.params.get("z", Fraction(0)), n_max) if cfg.x else []
    for n in range(1, len(xs) + 1):
        lines.append(_dump({
            "N": n,
            "A": scalar_to_json(witnesses[n - 1].a),
            "B": scalar_to_json(witnesses[n - 1].b),
            "X": scalar_to_json(xs[n - 1]),
        }))
    if cfg.y:
        w: Scalar = cfg.params.get("w", Fraction(0))
        if cfg.ring == "poly-z":
            w = Poly.gen()
        ys, wit_y = y_side_params(cfg.y, w, n_max)
        for n in range(1, len(ys) + 1):
            lines.append(_dump({
                "N": n,
                "C": scalar_to_json(wit_y[n - 1].a),
                "D": scalar_to_json(wit_y[n - 1].b),
                "Y": scalar_to_json(ys[n - 1]),
            }))
    lines.append(_dump({"command": "convert", "max_degree": n_max, "ok": True}))
    _emit(lines, cfg.out)
    return 0


def _run_correlations(cfg: RunConfig) -> int:
    spec = _measure_spec(cfg)
    table = weight_table(spec)
    prob = correlation(cfg.points, table)
    lines = [
        _dump({"points": [str(x) for x in cfg.points],
               "probability": scalar_to_json(prob)}),
        _dump({"command": "correlations", "kind": spec.kind,
               "degree": table.degree, "ok": True}),
    ]
    _emit(lines, cfg.out)
    return 0


def _run_verify(cfg: RunConfig) -> int:
    max_degree = cfg.max_degree if cfg.max_degree else None
    report = run_suite(cfg.suite, seed=cfg.seed, max_degree=max_degree)
    lines = [_dump({"check": c["name"], "ok": c["ok"],
                    **({"detail": c["detail"]} if "detail" in c else {})})
             for c in report["checks"]]
    lines += [_dump({"probe": p["name"],
                     **{k: v for k, v in p.items() if k != "name"}})
              for p in report["probes"]]
    lines.append(_dump({
        "command": "verify",
        "suite": report["suite"],
        "identity": report["identity"],
        "params": report["params"],
        "ok": report["ok"],
    }))
    _emit(lines, cfg.out)
    return 0 if report["ok"] else 1


def _run_decompose(cfg: RunConfig) -> int:
    rep = decomposition_report(cfg.params["z"], cfg.params["w"], cfg.max_degree)
    _emit([_dump(rep.to_json())], cfg.out)
    return 0


def run(config: RunConfig) -> int:
    """Execute one parsed configuration; returns the process exit code."""
    if config.command == "measure":
        return _run_measure(config)
    if config.command == "convert":
        return _run_convert(config)
    if config.command == "correlations":
        return _run_correlations(config)
    if config.command == "verify":
        return _run_verify(config)
    if config.command == "decompose":
        return _run_decompose(config)
    raise _CliError(f"unknown command {config.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        cfg = _config_from_args(args)
        return run(cfg)
    except (_CliError, ValueError, KeyError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        sys.stderr.write("run with --help for usage\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
