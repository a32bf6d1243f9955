"""Command-line interface.

Subcommands map one-to-one onto the library: ``families`` (the classified
algebras), ``ricci`` (curvature of a metric), ``der`` (derivation
algebras), ``reduce`` (canonical representative of a metric), ``soliton``
(solvsoliton certificates), ``orbit`` (mean curvature of the associated
orbit), and ``verify`` (soliton <-> minimal-orbit agreement over a lambda
grid).  Exit codes: 0 success/agreement, 1 a verify row disagrees,
2 invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import moduli, orbit_geometry, soliton
from .curvature import metric_data, ricci_operator
from .derivations import conjugate_subspace, derivation_algebra
from .errors import InvalidFamilyError, NonSPDMetricError, SingularMatrixError
from .lie_core import FAMILY_TAGS, Family, jacobi_residual, make_family, parse_family

_FAMILY_HELP = "family string: h3, r3, r3_1, r3a:a=<float>, r3pa:a=<float>"

_DESCRIPTIONS = {
    "h3": "[e1,e2] = e3 (Heisenberg)",
    "r3": "[e1,e2] = e2 + e3, [e1,e3] = e3",
    "r3_a": "[e1,e2] = e2, [e1,e3] = a e3, -1 <= a <= 1",
    "r3_1": "[e1,e2] = e2, [e1,e3] = e3",
    "r3p_a": "[e1,e2] = a e2 - e3, [e1,e3] = e2 + a e3, a >= 0",
}


@dataclass(frozen=True)
class RunConfig:
    """Inputs of one verify sweep."""

    family: Family
    grid: tuple
    soliton_tol: float = 1e-8
    minimal_tol: float = 1e-8
    reduce_tol: float = 1e-7
    fmt: str = "table"
    out: str | None = None


@dataclass(frozen=True)
class VerifyRow:
    family: str
    a: float | None
    lam: float
    is_soliton: bool
    soliton_residual: float
    h_norm: float
    orbit_dim: int
    agrees: bool


def default_grid(family: Family) -> tuple:
    """The verify grid used when none is given.

    r3: 50 log-spaced points on [0.1, 10]; r3_a: 51 linear on [-5, 5];
    r3p_a: 41 linear on [1, 5]; h3 and r3_1 have a single class, so one
    row at lambda = 1.
    """
    if family.tag == "r3":
        return tuple(float(x) for x in np.geomspace(0.1, 10.0, 50))
    if family.tag == "r3_a":
        return tuple(float(x) for x in np.linspace(-5.0, 5.0, 51))
    if family.tag == "r3p_a":
        return tuple(float(x) for x in np.linspace(1.0, 5.0, 41))
    return (1.0,)


def verify_main_theorem(cfg: RunConfig):
    """One row per grid lambda: soliton verdict vs minimality of the orbit.

    Returns (rows, exit_status) with status 0 when every row agrees and
    1 otherwise.
    """
    rows = []
    fam = cfg.family
    a = None if fam.a is None else float(fam.a)
    for lam in cfg.grid:
        verdict = soliton.soliton_from_frame(fam, lam, tol=cfg.soliton_tol)
        mc = orbit_geometry.orbit_at(fam, moduli.rep_matrix(fam, lam))
        minimal = mc.norm < cfg.minimal_tol
        rows.append(VerifyRow(family=fam.label(), a=a, lam=float(lam),
                              is_soliton=verdict.is_soliton,
                              soliton_residual=verdict.certificate.residual,
                              h_norm=mc.norm, orbit_dim=mc.orbit_dim,
                              agrees=verdict.is_soliton == minimal))
    status = 0 if all(r.agrees for r in rows) else 1
    return rows, status


def _row_dict(row: VerifyRow) -> dict:
    return {
        "family": row.family,
        "a": row.a,
        "lambda": row.lam,
        "is_soliton": row.is_soliton,
        "soliton_residual": row.soliton_residual,
        "H_norm": row.h_norm,
        "orbit_dim": row.orbit_dim,
        "agrees": row.agrees,
    }


def emit_report(rows, fmt: str) -> str:
    """Render verify rows as json, csv, or an aligned table."""
    if not rows:
        raise ValueError("no rows to report")
    if fmt == "json":
        return json.dumps([_row_dict(r) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "a", "lambda", "is_soliton",
                         "soliton_residual", "H_norm", "orbit_dim", "agrees"])
        for r in rows:
            writer.writerow([
                r.family,
                "" if r.a is None else repr(r.a),
                repr(r.lam),
                "true" if r.is_soliton else "false",
                repr(r.soliton_residual),
                repr(r.h_norm),
                r.orbit_dim,
                "true" if r.agrees else "false",
            ])
        return buf.getvalue()
    if fmt == "table":
        header = ["family", "a", "lambda", "is_soliton", "soliton_residual",
                  "H_norm", "orbit_dim", "agrees"]
        body = [[r.family,
                 "" if r.a is None else f"{r.a:g}",
                 f"{r.lam:.6g}",
                 str(r.is_soliton),
                 f"{r.soliton_residual:.3e}",
                 f"{r.h_norm:.3e}",
                 str(r.orbit_dim),
                 str(r.agrees)] for r in rows]
        widths = [max(len(header[i]), *(len(b[i]) for b in body)) for i in range(len(header))]
        lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header))]
        lines.extend("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(b))
                     for b in body)
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _jsonable(obj):
    if isinstance(obj, np.ndarray):
        return [_jsonable(row) for row in obj.tolist()]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    return obj


def _render_payload(payload: dict, fmt: str) -> str:
    payload = _jsonable(payload)
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "value"])
        for k, v in payload.items():
            writer.writerow([k, json.dumps(v)])
        return buf.getvalue()
    if fmt == "table":
        lines = []
        for k, v in payload.items():
            if isinstance(v, list) and v and isinstance(v[0], list):
                lines.append(f"{k}:")
                lines.extend("  " + "  ".join(f"{x:12.8g}" if isinstance(x, float) else str(x)
                                              for x in row) for row in v)
            else:
                lines.append(f"{k}: {v}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _read_gram(args) -> np.ndarray | None:
    if getattr(args, "gram", None) is not None:
        return np.array(args.gram, dtype=float).reshape(3, 3)
    if getattr(args, "gram_file", None) is not None:
        with open(args.gram_file) as fh:
            data = json.load(fh)
        arr = np.array(data, dtype=float)
        if arr.shape != (3, 3):
            raise ValueError(f"gram file must hold a 3x3 array, got shape {arr.shape}")
        return arr
    return None


def _family_from(args) -> Family:
    return parse_family(args.family, args.a)


def _cmd_families(args):
    if args.family is not None:
        fam = _family_from(args)
        sc = make_family(fam, exact=args.exact)
        payload = {
            "family": fam.label(),
            "brackets": _DESCRIPTIONS[fam.tag],
            "a": None if fam.a is None else float(fam.a),
            "structure_constants": [[i + 1, j + 1, k + 1, float(v)]
                                    for i, j, k, v in sc.nonzero()],
            "jacobi_residual": jacobi_residual(sc),
        }
        return payload, 0
    payload = {tag: _DESCRIPTIONS[tag] for tag in FAMILY_TAGS}
    return payload, 0


def _cmd_ricci(args):
    fam = _family_from(args)
    gram = _read_gram(args)
    if gram is None:
        gram = np.eye(3)
    sc = make_family(fam, exact=args.exact)
    res = ricci_operator(metric_data(sc, gram))
    payload = {
        "family": fam.label(),
        "gram": gram,
        "ric_frame": res.ric_frame,
        "ric_canonical": res.ric_canonical,
        "scalar": res.scalar,
    }
    return payload, 0


def _cmd_der(args):
    fam = _family_from(args)
    der = derivation_algebra(make_family(fam, exact=args.exact))
    payload = {"family": fam.label(), "dim": der.dim}
    if args.lam is not None:
        der = conjugate_subspace(der, moduli.rep_matrix(fam, args.lam))
        payload["lambda"] = args.lam
    payload["basis"] = [b for b in der.basis]
    return payload, 0


def _cmd_reduce(args):
    fam = _family_from(args)
    gram = _read_gram(args)
    if gram is None:
        raise ValueError("reduce requires --gram or --gram-file")
    g = moduli.metric_to_group(gram)
    rep, trace = moduli.reduce(fam, g)
    data = moduli.milnor_data(fam, gram)
    payload = {
        "family": fam.label(),
        "lambda": rep.lam,
        "k_scale": data.k_scale,
        "rep_matrix": rep.matrix,
        "scalar": trace.scalar,
        "witness_residual": moduli.witness_residual(rep, trace, g),
        "steps": [name for name, _ in trace.steps],
        "frame_brackets": [[i + 1, j + 1, k + 1, float(v)]
                           for i, j, k, v in data.frame_brackets.nonzero()],
    }
    return payload, 0


def _cmd_soliton(args):
    fam = _family_from(args)
    gram = _read_gram(args)
    if args.lam is not None and gram is not None:
        raise ValueError("give either --lambda or a Gram matrix, not both")
    if args.lam is not None:
        verdict = soliton.soliton_from_frame(fam, args.lam, tol=args.tol)
        mode = {"mode": "frame", "lambda": args.lam}
    else:
        if gram is None:
            gram = np.eye(3)
        verdict = soliton.solvsoliton_check(make_family(fam), gram, tol=args.tol)
        mode = {"mode": "gram", "gram": gram}
    payload = {"family": fam.label(), **mode,
               "is_soliton": verdict.is_soliton,
               "is_einstein": verdict.is_einstein,
               "c": verdict.certificate.c,
               "D": verdict.certificate.d,
               "residual": verdict.certificate.residual,
               "tol": args.tol}
    return payload, 0


def _cmd_orbit(args):
    fam = _family_from(args)
    gram = _read_gram(args)
    if args.lam is not None and gram is not None:
        raise ValueError("give either --lambda or a Gram matrix, not both")
    if args.lam is not None:
        g = moduli.rep_matrix(fam, args.lam)
    elif gram is not None:
        g = moduli.metric_to_group(gram)
    else:
        g = np.eye(3)
    mc = orbit_geometry.orbit_at(fam, g)
    payload = {"family": fam.label(),
               "orbit_dim": mc.orbit_dim,
               "stab_dim": mc.stab_dim,
               "H": mc.h,
               "H_norm": mc.norm,
               "per_normal": [{"normal": a, "component": v}
                              for a, v in mc.per_normal]}
    return payload, 0


def _parse_grid(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("grid must be start:stop:count")
    start, stop = float(parts[0]), float(parts[1])
    count = int(parts[2])
    if count < 1:
        raise ValueError("grid count must be >= 1")
    return tuple(float(x) for x in np.linspace(start, stop, count))


def _cmd_verify(args):
    fam = _family_from(args)
    if args.lam is not None and args.grid is not None:
        raise ValueError("give either --lambda or --grid, not both")
    if args.lam is not None:
        grid = tuple(float(x) for x in args.lam.split(","))
    elif args.grid is not None:
        grid = _parse_grid(args.grid)
    else:
        grid = default_grid(fam)
    cfg = RunConfig(family=fam, grid=grid, soliton_tol=args.tol,
                    minimal_tol=args.tol, fmt=args.format, out=args.out)
    rows, status = verify_main_theorem(cfg)
    text = emit_report(rows, cfg.fmt)
    _write(text, cfg.out)
    return None, status


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _add_common(p, gram: bool = False, lam: bool = False, tol: bool = False,
                exact: bool = False, family_required: bool = True):
    p.add_argument("--family", required=family_required, help=_FAMILY_HELP)
    p.add_argument("--a", type=float, default=None,
                   help="family parameter, if not embedded in --family")
    if gram:
        p.add_argument("--gram", type=float, nargs=9, metavar="X",
                       help="Gram matrix as 9 numbers, row major")
        p.add_argument("--gram-file", help="path to a JSON 3x3 array")
    if lam:
        p.add_argument("--lambda", dest="lam", type=float, default=None,
                       help="lambda of the canonical representative")
    if tol:
        p.add_argument("--tol", type=float, default=1e-8,
                       help="tolerance (default 1e-8)")
    if exact:
        p.add_argument("--exact", action="store_true",
                       help="build structure constants in exact rationals")
    p.add_argument("--format", choices=("json", "csv", "table"),
                   default="table", help="output format")
    p.add_argument("--out", default=None, help="write output to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solvgeo",
        description="Curvature, solvsolitons, and orbit geometry of "
                    "left-invariant metrics on 3-dimensional solvable Lie groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("families", help="list the classified families")
    _add_common(p, exact=True, family_required=False)
    p.set_defaults(fn=_cmd_families)

    p = sub.add_parser("ricci", help="Ricci operator of a metric")
    _add_common(p, gram=True, exact=True)
    p.set_defaults(fn=_cmd_ricci)

    p = sub.add_parser("der", help="derivation algebra of a family")
    _add_common(p, lam=True, exact=True)
    p.set_defaults(fn=_cmd_der)

    p = sub.add_parser("reduce", help="canonical representative of a metric")
    _add_common(p, gram=True)
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("soliton", help="solvsoliton certificate")
    _add_common(p, gram=True, lam=True, tol=True)
    p.set_defaults(fn=_cmd_soliton)

    p = sub.add_parser("orbit", help="mean curvature of the metric's orbit")
    _add_common(p, gram=True, lam=True)
    p.set_defaults(fn=_cmd_orbit)

    p = sub.add_parser("verify", help="soliton vs minimal-orbit sweep")
    _add_common(p, tol=True)
    p.add_argument("--lambda", dest="lam", default=None,
                   help="comma-separated lambda values")
    p.add_argument("--grid", default=None,
                   help="start:stop:count linear grid (default grid is "
                        "family specific; log-spaced for r3)")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, status = args.fn(args)
    except (InvalidFamilyError, NonSPDMetricError, SingularMatrixError,
            ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if payload is not None:
        _write(_render_payload(payload, args.format), args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
