"""Command-line front end: figure datasets, verification reports, potentials.

Every dataset run writes one CSV per curve (header ``r,re,im``, 17 significant
digits, LF endings) plus a JSON manifest naming the parameters, curve files,
and marker radii, so identical configurations reproduce byte-identical files.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .darboux import extra_eigenstate, normalize, partner_potential, superpotential
from .errors import GamowSusyError
from .gamow import ComplexWavenumber, GamowSpec, transformation_field, wavenumber_from_energy
from .numerics import RadialGrid
from .potentials import RadialModel, effective_potential, hydrogen_bound_state
from .verify import run_verification

# caption parameter sets: (r_max, markers as (radius, glyph, curve-label))
_FIGURES = {
    1: {
        "r_max": 20.0,
        "markers": [(1.0, "disk", "u"), (19.0, "circle", "u")],
        "xi": 0.0,
    },
    2: {
        "r_max": 20.0,
        "markers": [(2.0, "disk", "v"), (6.0, "circle", "v")],
        "xi": 0.0,
    },
    3: {
        "r_max": 20.0,
        "markers": [],
        "xi": 0.0,
    },
    4: {
        "r_max": 20.0,
        "markers": [
            (0.05, "disk", "omega"),
            (19.5, "circle", "omega"),
            (0.05, "disk", "psi_eps"),
            (19.0, "circle", "psi_eps"),
        ],
        "xi": 1.0,
    },
    5: {
        "r_max": 40.0,
        "markers": [(2.0, "disk", "v"), (6.0, "circle", "v")],
        "xi": 1.0,
    },
}

_DEFAULT_EPS = complex(-0.2604, 0.104)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gamowsusy",
        description="Non-Hermitian SUSY partners of the radial Coulomb problem",
    )
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, rmax_default=40.0):
        sp.add_argument("--l", dest="ell", type=int, default=1, help="angular momentum")
        sp.add_argument("--eps-re", type=float, default=_DEFAULT_EPS.real)
        sp.add_argument("--eps-im", type=float, default=_DEFAULT_EPS.imag)
        sp.add_argument("--xi-re", type=float, default=0.0)
        sp.add_argument("--xi-im", type=float, default=0.0)
        sp.add_argument("--rmin", type=float, default=1e-3)
        sp.add_argument("--rmax", type=float, default=rmax_default)
        sp.add_argument("--n", type=int, default=4000, help="grid points")
        sp.add_argument("--out", type=Path, default=Path("."), help="output directory")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")

    fig = sub.add_parser("figure", help="emit a caption-matching dataset")
    fig.add_argument("number", type=int, help="figure number, 1..5")
    common(fig)

    ver = sub.add_parser("verify", help="run the verification suite")
    common(ver)

    pot = sub.add_parser("potential", help="emit the partner potential")
    common(pot)

    sta = sub.add_parser("state", help="emit a transformed or extra eigenstate")
    sta.add_argument(
        "--which", choices=("extra", "bound"), default="extra", help="state family"
    )
    sta.add_argument("--bound-n", type=int, default=2, help="n for --which bound")
    common(sta)
    return p


def _wavenumber(args) -> ComplexWavenumber:
    # a real negative energy selects the conventional (Hermitian) reduction
    # with the decaying real k > 0
    if args.eps_im == 0.0 and args.eps_re < 0.0:
        return ComplexWavenumber.real_positive(float(np.sqrt(-args.eps_re)))
    return wavenumber_from_energy(complex(args.eps_re, args.eps_im))


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _write_curve(path: Path, r: np.ndarray, values: np.ndarray, fmt: str) -> None:
    if fmt == "json":
        payload = {
            "r": [_fmt(x) for x in r],
            "re": [_fmt(float(v)) for v in values.real],
            "im": [_fmt(float(v)) for v in values.imag],
        }
        path.write_text(json.dumps(payload, indent=1) + "\n")
        return
    lines = ["r,re,im"]
    for x, v in zip(r, values):
        lines.append(f"{_fmt(x)},{_fmt(float(v.real))},{_fmt(float(v.imag))}")
    path.write_text("\n".join(lines) + "\n")


def _manifest_params(args, figure=None):
    d = {
        "ell": args.ell,
        "eps_re": args.eps_re,
        "eps_im": args.eps_im,
        "xi_re": args.xi_re,
        "xi_im": args.xi_im,
        "rmin": args.rmin,
        "rmax": args.rmax,
        "n": args.n,
    }
    if figure is not None:
        d["figure"] = figure
    return d


def _emit(out_dir: Path, stem: str, params: dict, curves, markers, fmt: str) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    ext = "csv" if fmt == "csv" else "json"
    entries = []
    for label, r, values in curves:
        fname = f"{stem}_{label}.{ext}"
        _write_curve(out_dir / fname, r, values, fmt)
        entries.append({"file": fname, "label": label})
    manifest = {
        "params": params,
        "curves": entries,
        "markers": [{"r": r, "glyph": g, "curve": c} for (r, g, c) in markers],
    }
    (out_dir / f"{stem}.json").write_text(json.dumps(manifest, indent=2) + "\n")


def _run_figure(args) -> int:
    n = args.number
    if n not in _FIGURES:
        print(f"error: figure must be 1..5, got {n}", file=sys.stderr)
        return 2
    cfg = _FIGURES[n]
    # figure subcommands override range and mixing to the caption values
    # unless the user moved them off the defaults
    if args.rmax == 40.0 and n != 5:
        args.rmax = cfg["r_max"]
    if args.xi_re == 0.0 and args.xi_im == 0.0:
        args.xi_re = cfg["xi"]
    kz = _wavenumber(args)
    xi = complex(args.xi_re, args.xi_im)
    spec = GamowSpec(ell=args.ell, k=kz, xi=xi)
    grid = RadialGrid.make(args.rmin, args.rmax, args.n)
    r = grid.points
    curves = []
    if n == 1:
        u = transformation_field(spec, grid)
        curves.append(("u", r, u.values))
    elif n in (2, 5):
        pp = partner_potential(superpotential(spec))
        v = pp.evaluate(r)
        curves.append(("v", r, v))
        if n == 5:
            curves.append(("re_v", r, v.real.astype(complex)))
            v0 = effective_potential(RadialModel(ell=0), r).astype(complex)
            curves.append(("coulomb_l0", r, v0))
    elif n == 3:
        pp = partner_potential(superpotential(spec))
        v = pp.evaluate(r)
        curves.append(("re_v", r, v.real.astype(complex)))
        v2 = effective_potential(RadialModel(ell=args.ell + 1), r).astype(complex)
        curves.append((f"coulomb_l{args.ell + 1}", r, v2))
    elif n == 4:
        w = transformation_field(spec, grid)
        curves.append(("omega", r, w.values))
        ex = extra_eigenstate(superpotential(spec), grid)
        if not ex.divergent:
            ex = normalize(ex)
        curves.append(("psi_eps", r, ex.psi.values))
    _emit(
        args.out,
        f"fig{n}",
        _manifest_params(args, figure=n),
        curves,
        cfg["markers"],
        args.format,
    )
    return 0


def _run_verify(args) -> int:
    hermitian_k = None
    if args.eps_im == 0.0 and args.eps_re < 0.0:
        hermitian_k = float(np.sqrt(-args.eps_re))
    report = run_verification(
        args.ell,
        complex(args.eps_re, args.eps_im),
        complex(args.xi_re, args.xi_im),
        hermitian_k=hermitian_k,
    )
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "verification.json").write_text(report.to_json() + "\n")
    for line in report.summary_lines():
        print(line)
    return 0 if report.passed else 1


def _run_potential(args) -> int:
    kz = _wavenumber(args)
    spec = GamowSpec(ell=args.ell, k=kz, xi=complex(args.xi_re, args.xi_im))
    grid = RadialGrid.make(args.rmin, args.rmax, args.n)
    pp = partner_potential(superpotential(spec))
    v = pp.evaluate(grid.points)
    _emit(args.out, "potential", _manifest_params(args), [("v", grid.points, v)], [], args.format)
    return 0


def _run_state(args) -> int:
    kz = _wavenumber(args)
    spec = GamowSpec(ell=args.ell, k=kz, xi=complex(args.xi_re, args.xi_im))
    grid = RadialGrid.make(args.rmin, args.rmax, args.n)
    if args.which == "extra":
        ex = extra_eigenstate(superpotential(spec), grid)
        if not ex.divergent:
            ex = normalize(ex)
        params = _manifest_params(args)
        params["state"] = "extra"
        params["divergent"] = ex.divergent
        params["norm"] = ex.norm
        _emit(args.out, "state", params, [("psi_eps", grid.points, ex.psi.values)], [], args.format)
        return 0
    from .darboux import transform_bound_state

    st = hydrogen_bound_state(args.bound_n, args.ell, grid)
    ts = transform_bound_state(st, superpotential(spec))
    ts = normalize(ts)
    params = _manifest_params(args)
    params["state"] = f"bound-{args.bound_n}"
    params["energy"] = ts.lam.real
    params["norm"] = ts.norm
    _emit(
        args.out,
        "state",
        params,
        [(f"psi_{args.bound_n}", grid.points, ts.psi.values)],
        [],
        args.format,
    )
    return 0


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.subcommand == "figure":
            return _run_figure(args)
        if args.subcommand == "verify":
            return _run_verify(args)
        if args.subcommand == "potential":
            return _run_potential(args)
        return _run_state(args)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    except GamowSusyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
