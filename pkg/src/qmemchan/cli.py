"""Command-line driver: capacities, parameter sweeps, figure datasets.

Subcommands: two-qubit | sweep | entropy-rate | mutual-info | figures.
CSV output is byte-stable: fixed 12-significant-digit floats, LF endings,
deterministic row order.  Exit codes: 0 success, 2 invalid input,
3 tolerance not reached (partial results still printed).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .channel import ChannelParams
from .ensembles import (
    InputFamily,
    basis_product,
    default_families,
    ghz,
    max_entangled_halves,
    orbit_mutual_information,
    w_state,
)
from .errors import InvalidParameterError, InvalidStateError
from .hmm_rate import (
    FlipProcess,
    capacity_upper_bound,
    entropy_rate_bracket,
    markov_entropy_rate,
    product_state_capacity,
)
from .two_qubit import threshold_f, two_use_capacity

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_TOLERANCE = 3

FAMILY_BUILDERS = {
    "product": basis_product,
    "ghz": ghz,
    "w": w_state,
    "max_entangled": max_entangled_halves,
}


def _fmt(value) -> str:
    """Deterministic cell formatting: floats at 12 significant digits."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _write_csv(header, rows, out_path: str | None) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    text = "\n".join(lines) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text, encoding="utf-8", newline="\n")


def _write_json(obj, out_path: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text, encoding="utf-8", newline="\n")


def _resolve_params(args, allow_non_cp: bool = False) -> ChannelParams:
    have_xs = args.x0 is not None or args.x1 is not None
    have_ad = args.a is not None or args.d is not None
    if have_xs and have_ad:
        raise InvalidParameterError("--x0/--x1 and --a/--d are mutually exclusive")
    if args.mu is None:
        raise InvalidParameterError("--mu is required")
    if have_xs:
        if args.x0 is None or args.x1 is None:
            raise InvalidParameterError("both --x0 and --x1 are required together")
        return ChannelParams.from_x(args.mu, args.x0, args.x1, allow_non_cp=allow_non_cp)
    if args.a is None or args.d is None:
        raise InvalidParameterError("both --a and --d are required (or use --x0/--x1)")
    return ChannelParams(mu=args.mu, a=args.a, d=args.d, allow_non_cp=allow_non_cp)


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mu", type=float, help="Markov memory, in (-1, 1)")
    parser.add_argument("--a", type=float, help="x0 + x1")
    parser.add_argument("--d", type=float, help="x0 - x1")
    parser.add_argument("--x0", type=float, help="branch-0 retention (alternative to --a/--d)")
    parser.add_argument("--x1", type=float, help="branch-1 retention (alternative to --a/--d)")


def _parse_families(names: str, n: int) -> list[InputFamily]:
    if names == "all":
        return default_families(n)
    families = []
    for name in names.split(","):
        name = name.strip()
        if name not in FAMILY_BUILDERS:
            raise InvalidParameterError(
                f"unknown family {name!r}; choose from {sorted(FAMILY_BUILDERS)} or 'all'"
            )
        families.append(FAMILY_BUILDERS[name](n))
    return families


def max_valid_d(a: float) -> float:
    """Largest-magnitude d keeping both x0 and x1 in [-1/3, 1] (positive sign).

    The -d channel merely relabels the branches and has identical statistics
    under the symmetric chain.
    """
    d = min(2.0 - a, a + 2.0 / 3.0)
    if d < 0.0:
        raise InvalidParameterError(f"a = {a:.6g} outside [-2/3, 2]; no valid d exists")
    return d


# ----------------------------------------------------------------------------
# two-qubit
# ----------------------------------------------------------------------------


def _two_qubit_record(params: ChannelParams) -> dict:
    result = two_use_capacity(params)
    return {
        "mu": params.mu,
        "a": params.a,
        "d": params.d,
        "x0": params.x0,
        "x1": params.x1,
        "valid": True,
        "f": result.f,
        "lambda00": result.spectrum.lambda00,
        "lambda01": result.spectrum.lambda01,
        "lambda11": result.spectrum.lambda11,
        "c2_product": result.c2_product,
        "c2_entangled": result.c2_entangled,
        "capacity": result.capacity_bits_per_use,
        "optimal_family": result.optimal_family.value,
        "theta_star": result.theta_star,
    }


def cmd_two_qubit(args) -> int:
    params = _resolve_params(args)
    _write_json(_two_qubit_record(params), args.out)
    return EXIT_OK


# ----------------------------------------------------------------------------
# sweep
# ----------------------------------------------------------------------------


def _sweep_triple(args, value: float):
    fixed = {"mu": args.mu, "a": args.a, "d": args.d}
    fixed[args.axis] = value
    if args.d_mode == "max_valid":
        fixed["d"] = max_valid_d(fixed["a"])
    return fixed["mu"], fixed["a"], fixed["d"]


def _sweep_columns(quantity: str, families: list[InputFamily]) -> list[str]:
    base = ["row_type", "index", "mu", "a", "d", "x0", "x1", "valid"]
    if quantity == "f":
        return base + ["f"]
    if quantity == "c2":
        return base + ["f", "c2_product", "c2_entangled", "capacity", "optimal_family"]
    if quantity == "i_n":
        cols = base + ["f"]
        for family in families:
            cols += [f"i_n_{family.kind}", f"per_use_{family.kind}"]
        return cols
    if quantity == "c_prod":
        return base + ["c_prod", "c_prod_lower", "c_prod_upper", "n_used", "converged"]
    return base + ["bound", "c_prod_upper", "markov_rate"]  # quantity == "bound"


def _sweep_cells(quantity: str, params: ChannelParams | None, args, families) -> list:
    """Quantity cells for one grid point; nan-filled when params are invalid."""
    if quantity == "f":
        width = 1
    elif quantity == "c2":
        width = 5
    elif quantity == "i_n":
        width = 1 + 2 * len(families)
    elif quantity == "c_prod":
        width = 5
    else:
        width = 3
    if params is None:
        return [float("nan")] * width
    if quantity == "f":
        return [threshold_f(params)]
    if quantity == "c2":
        r = two_use_capacity(params)
        return [r.f, r.c2_product, r.c2_entangled, r.capacity_bits_per_use, r.optimal_family.value]
    if quantity == "i_n":
        cells = [threshold_f(params)]
        for family in families:
            try:
                mi = orbit_mutual_information(family, params)
                cells += [mi.i_n, mi.per_use]
            except InvalidStateError:
                cells += [float("nan"), float("nan")]
        return cells
    if quantity == "c_prod":
        est = product_state_capacity(params, n_max=args.n_max, tolerance=args.tolerance)
        return [est.capacity, est.lower, est.upper, est.n_used, est.converged]
    est = product_state_capacity(params, n_max=args.n_max, tolerance=args.tolerance)
    bound = capacity_upper_bound(params, estimate=est)
    return [bound, est.upper, markov_entropy_rate(params.memory)]


def _try_params(mu, a, d) -> ChannelParams | None:
    try:
        return ChannelParams(mu=mu, a=a, d=d)
    except InvalidParameterError:
        return None


def _try_triple(args, value: float):
    """(mu, a, d) at one grid point, or None when no valid d exists there."""
    try:
        return _sweep_triple(args, value)
    except InvalidParameterError:
        return None


def _crossover_value(args, lo: float, hi: float, f_lo: float) -> float:
    """Bisect the sign change of f between two grid points on the sweep axis."""
    for _ in range(200):
        mid = (lo + hi) / 2.0
        triple = _try_triple(args, mid)
        params = _try_params(*triple) if triple else None
        if params is None:
            break
        f_mid = threshold_f(params)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-13:
            break
    return (lo + hi) / 2.0


def cmd_sweep(args) -> int:
    if args.lo >= args.hi:
        raise InvalidParameterError(f"--lo {args.lo} must be < --hi {args.hi}")
    if args.steps < 2:
        raise InvalidParameterError(f"--steps {args.steps} must be >= 2")
    for name in ("mu", "a"):
        if name != args.axis and getattr(args, name) is None:
            raise InvalidParameterError(f"--{name} must be fixed when sweeping {args.axis}")
    if args.d_mode == "max_valid" and args.axis == "d":
        raise InvalidParameterError("--d-mode max_valid cannot sweep the d axis")
    if args.axis != "d" and args.d is None and args.d_mode != "max_valid":
        raise InvalidParameterError("--d must be fixed (or use --d-mode max_valid)")
    families = _parse_families(args.families, args.n) if args.quantity == "i_n" else []
    grid = np.linspace(args.lo, args.hi, args.steps)
    header = _sweep_columns(args.quantity, families)
    rows = []
    f_values: list[float | None] = []
    for index, value in enumerate(grid):
        triple = _try_triple(args, float(value))
        if triple is None:
            # no admissible d at this grid point; flag the row, keep sweeping
            fixed = {"mu": args.mu, "a": args.a, "d": float("nan"), args.axis: float(value)}
            nan_cells = _sweep_cells(args.quantity, None, args, families)
            rows.append(["grid", index, fixed["mu"], fixed["a"], fixed["d"],
                         float("nan"), float("nan"), False] + nan_cells)
            f_values.append(None)
            continue
        mu, a, d = triple
        params = _try_params(mu, a, d)
        x0, x1 = (a + d) / 2.0, (a - d) / 2.0
        cells = _sweep_cells(args.quantity, params, args, families)
        rows.append(["grid", index, mu, a, d, x0, x1, params is not None] + cells)
        f_values.append(threshold_f(params) if params is not None else None)
    if args.quantity in ("f", "c2"):
        inserted = 0
        for index in range(len(grid) - 1):
            f_lo, f_hi = f_values[index], f_values[index + 1]
            if f_lo is None or f_hi is None or f_lo * f_hi >= 0.0:
                continue
            value = _crossover_value(args, float(grid[index]), float(grid[index + 1]), f_lo)
            mu, a, d = _sweep_triple(args, value)
            params = _try_params(mu, a, d)
            cells = _sweep_cells(args.quantity, params, args, families)
            row = ["crossover", index, mu, a, d, (a + d) / 2.0, (a - d) / 2.0, params is not None]
            rows.insert(index + 1 + inserted, row + cells)
            inserted += 1
    if args.format == "json":
        def jsonable(cell):
            if isinstance(cell, bool):
                return int(cell)
            if isinstance(cell, float) and math.isnan(cell):
                return None
            return cell

        obj = {"axis": args.axis, "quantity": args.quantity, "columns": header,
               "rows": [[jsonable(cell) for cell in row] for row in rows]}
        _write_json(obj, args.out)
    else:
        _write_csv(header, rows, args.out)
    return EXIT_OK


# ----------------------------------------------------------------------------
# entropy-rate
# ----------------------------------------------------------------------------


def _bracket_is_monotone(params: ChannelParams, n_used: int) -> bool:
    process = FlipProcess.from_params(params)
    prev = None
    for n in range(2, n_used + 1):
        bracket = entropy_rate_bracket(process, n)
        if prev is not None:
            if bracket.upper > prev.upper + 1e-12 or bracket.lower < prev.lower - 1e-12:
                return False
        prev = bracket
    return True


def cmd_entropy_rate(args) -> int:
    params = _resolve_params(args)
    est = product_state_capacity(params, n_max=args.n_max, tolerance=args.tolerance)
    rate = markov_entropy_rate(params.memory)
    record = {
        "mu": params.mu,
        "a": params.a,
        "d": params.d,
        "x0": params.x0,
        "x1": params.x1,
        "valid": True,
        "lower": est.rate_bracket.lower,
        "upper": est.rate_bracket.upper,
        "n_used": est.n_used,
        "converged": est.converged,
        "bracket_monotone": _bracket_is_monotone(params, est.n_used),
        "c_prod": est.capacity,
        "c_prod_bracket": [est.lower, est.upper],
        "markov_rate": rate,
        "capacity_upper_bound": capacity_upper_bound(params, estimate=est),
    }
    _write_json(record, args.out)
    return EXIT_OK if est.converged else EXIT_TOLERANCE


# ----------------------------------------------------------------------------
# mutual-info
# ----------------------------------------------------------------------------


def cmd_mutual_info(args) -> int:
    params = _resolve_params(args)
    families = _parse_families(args.families, args.n)
    ranked = sorted(
        (orbit_mutual_information(f, params) for f in families), key=lambda r: -r.per_use
    )
    if args.format == "json":
        obj = {
            "mu": params.mu,
            "a": params.a,
            "d": params.d,
            "x0": params.x0,
            "x1": params.x1,
            "valid": True,
            "n": args.n,
            "rows": [
                {"family": mi.family.kind, "i_n": mi.i_n, "per_use": mi.per_use}
                for mi in ranked
            ],
        }
        _write_json(obj, args.out)
    else:
        header = ["family", "n", "mu", "a", "d", "x0", "x1", "valid", "i_n", "per_use"]
        rows = [
            [mi.family.kind, args.n, params.mu, params.a, params.d,
             params.x0, params.x1, True, mi.i_n, mi.per_use]
            for mi in ranked
        ]
        _write_csv(header, rows, args.out)
    return EXIT_OK


# ----------------------------------------------------------------------------
# figures
# ----------------------------------------------------------------------------


def _fig1_rows():
    header = ["mu", "a", "d", "x0", "x1", "valid", "f",
              "i2_product", "i2_entangled", "per_use_product", "per_use_entangled"]
    rows = []
    for mu in np.linspace(-0.95, 0.95, 39):
        for a in np.linspace(-2.0 / 3.0, 2.0, 33):
            d = min(2.0 - a, a + 2.0 / 3.0)
            params = _try_params(float(mu), float(a), float(d))
            x0, x1 = (a + d) / 2.0, (a - d) / 2.0
            if params is None:
                rows.append([float(mu), float(a), float(d), x0, x1, False] + [float("nan")] * 5)
                continue
            r = two_use_capacity(params)
            rows.append([
                float(mu), float(a), float(d), x0, x1, True, r.f,
                2.0 * r.c2_product, 2.0 * r.c2_entangled, r.c2_product, r.c2_entangled,
            ])
    return header, rows


def _fig2_rows():
    header = ["panel", "row_type", "axis_value", "mu", "a", "d", "x0", "x1", "valid",
              "f", "i2_product", "i2_entangled", "capacity", "optimal_family"]
    panels = [
        ("mu_sweep", "mu", np.linspace(-0.95, 0.95, 77), {"a": 1.0 / 3.0, "d": -1.0}),
        ("a_sweep", "a", np.linspace(-2.0 / 3.0, 2.0, 81), {"mu": 2.0 / 3.0, "d": -1.0}),
        ("d_sweep", "d", np.linspace(-4.0 / 3.0, 4.0 / 3.0, 81), {"mu": 2.0 / 3.0, "a": 1.0 / 3.0}),
    ]
    rows = []
    for panel, axis, grid, fixed in panels:
        def triple(value: float):
            point = dict(fixed)
            point[axis] = value
            return point["mu"], point["a"], point["d"]

        def cells(row_type: str, value: float):
            mu, a, d = triple(value)
            params = _try_params(mu, a, d)
            x0, x1 = (a + d) / 2.0, (a - d) / 2.0
            if params is None:
                return [panel, row_type, value, mu, a, d, x0, x1, False] + [float("nan")] * 4 + [""]
            r = two_use_capacity(params)
            return [panel, row_type, value, mu, a, d, x0, x1, True, r.f,
                    2.0 * r.c2_product, 2.0 * r.c2_entangled,
                    r.capacity_bits_per_use, r.optimal_family.value]

        f_vals = []
        for value in grid:
            mu, a, d = triple(float(value))
            params = _try_params(mu, a, d)
            f_vals.append(threshold_f(params) if params is not None else None)
            rows.append(cells("grid", float(value)))
        # crossover rows appended per panel, after the grid, in axis order
        for i in range(len(grid) - 1):
            f_lo, f_hi = f_vals[i], f_vals[i + 1]
            if f_lo is None or f_hi is None or f_lo * f_hi >= 0.0:
                continue
            lo, hi = float(grid[i]), float(grid[i + 1])
            for _ in range(200):
                mid = (lo + hi) / 2.0
                params = _try_params(*triple(mid))
                f_mid = threshold_f(params) if params is not None else None
                if f_mid is None or hi - lo < 1e-13 or f_mid == 0.0:
                    break
                if (f_mid < 0.0) == (f_lo < 0.0):
                    lo = mid
                else:
                    hi = mid
            rows.append(cells("crossover", (lo + hi) / 2.0))
    return header, rows


def _mutual_info_cells(family: InputFamily, params: ChannelParams | None):
    if params is None:
        return [float("nan"), float("nan")]
    try:
        mi = orbit_mutual_information(family, params)
        return [mi.i_n, mi.per_use]
    except InvalidStateError:
        return [float("nan"), float("nan")]


def _fig3_rows():
    header = ["mu", "a", "d", "x0", "x1", "valid", "n", "family", "i_n", "per_use"]
    mu, a, d = 0.9, 2.0 / 3.0, -4.0 / 3.0
    params = ChannelParams(mu=mu, a=a, d=d)
    rows = []
    for n in (2, 4, 6, 8):
        for family in default_families(n):
            cells = _mutual_info_cells(family, params)
            rows.append([mu, a, d, params.x0, params.x1, True, n, family.kind] + cells)
    return header, rows


def _entangled_grid_rows(n: int, a_grid, mu_grid):
    header = ["panel", "mu", "a", "d", "x0", "x1", "cp", "family", "n", "i_n", "per_use"]
    rows = []
    for mu in mu_grid:
        for a in a_grid:
            d = min(2.0 - a, a + 2.0 / 3.0)
            params = _try_params(float(mu), float(a), float(d))
            x0, x1 = (a + d) / 2.0, (a - d) / 2.0
            for family in (basis_product(n), max_entangled_halves(n)):
                cells = _mutual_info_cells(family, params)
                rows.append(["grid", float(mu), float(a), float(d), x0, x1,
                             params is not None, family.kind, n] + cells)
    return header, rows


def _fig4_rows():
    header, rows = _entangled_grid_rows(
        4, np.linspace(-2.0 / 3.0, 2.0, 17), np.linspace(-0.9, 0.9, 13)
    )
    # caption sweep: a = 1/3, d = 4/3 puts x1 = -1/2 outside the CP range;
    # rows are kept with cp = 0 and nan entropies wherever positivity fails.
    a, d = 1.0 / 3.0, 4.0 / 3.0
    x0, x1 = (a + d) / 2.0, (a - d) / 2.0
    for mu in np.linspace(-0.95, 0.95, 39):
        params = ChannelParams(mu=float(mu), a=a, d=d, allow_non_cp=True)
        for family in default_families(4):
            cells = _mutual_info_cells(family, params)
            rows.append(["mu_sweep", float(mu), a, d, x0, x1, False, family.kind, 4] + cells)
    return header, rows


def _fig5_rows():
    return _entangled_grid_rows(6, np.linspace(-2.0 / 3.0, 2.0, 13), np.linspace(-0.9, 0.9, 9))


def cmd_figures(args) -> int:
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        builders = {
            "fig1.csv": _fig1_rows,
            "fig2.csv": _fig2_rows,
            "fig3.csv": _fig3_rows,
            "fig4.csv": _fig4_rows,
            "fig5.csv": _fig5_rows,
        }
        for name, builder in builders.items():
            header, rows = builder()
            _write_csv(header, rows, str(out_dir / name))
        manifest = {
            "version": __version__,
            "log_base": 2,
            "units": {"capacity": "bits per channel use", "entropy": "bits"},
            "conventions": {
                "normalization": "per_use = i_n / n; raw i_n emitted alongside",
                "max_entangled_bipartition": "first n/2 qubits vs last n/2",
                "initial_memory": "stationary",
                "d_max_valid": "d = min(2 - a, a + 2/3); the sign flip relabels branches "
                               "and leaves every emitted quantity unchanged",
                "fig4_mu_sweep": "a = 1/3, d = 4/3 lies outside the CP range (x1 = -1/2); "
                                 "rows carry cp = 0 and nan where output positivity fails",
            },
            "figures": {
                "fig1.csv": {"n": 2, "mu": [-0.95, 0.95, 39], "a": [-2/3, 2.0, 33], "d": "max_valid"},
                "fig2.csv": {"n": 2, "panels": ["mu_sweep", "a_sweep", "d_sweep"],
                             "fixed": {"mu_sweep": {"a": 1/3, "d": -1.0},
                                       "a_sweep": {"mu": 2/3, "d": -1.0},
                                       "d_sweep": {"mu": 2/3, "a": 1/3}}},
                "fig3.csv": {"mu": 0.9, "a": 2/3, "d": -4/3, "n": [2, 4, 6, 8]},
                "fig4.csv": {"n": 4, "grid_d": "max_valid",
                             "mu_sweep": {"a": 1/3, "d": 4/3}},
                "fig5.csv": {"n": 6, "grid_d": "max_valid"},
            },
        }
        _write_json(manifest, str(out_dir / "manifest.json"))
    except OSError as exc:
        print(f"figures: cannot write under {out_dir}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


# ----------------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmemchan",
        description="Capacities of the Markov-modulated qubit depolarizing channel",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p2 = sub.add_parser("two-qubit", help="two-use capacity, threshold f, both branches")
    _add_param_flags(p2)
    p2.add_argument("--out", default=None, help="output file (default stdout)")
    p2.set_defaults(func=cmd_two_qubit)

    ps = sub.add_parser("sweep", help="sweep one parameter axis, emit CSV rows")
    _add_param_flags(ps)
    ps.add_argument("--axis", required=True, choices=["mu", "a", "d"])
    ps.add_argument("--lo", type=float, required=True)
    ps.add_argument("--hi", type=float, required=True)
    ps.add_argument("--steps", type=int, required=True)
    ps.add_argument("--d-mode", dest="d_mode", choices=["explicit", "max_valid"],
                    default="explicit")
    ps.add_argument("--quantity", required=True, choices=["f", "c2", "i_n", "c_prod", "bound"])
    ps.add_argument("--n", type=int, default=2, help="qubit count for i_n sweeps")
    ps.add_argument("--families", default="all")
    ps.add_argument("--tolerance", type=float, default=1e-4)
    ps.add_argument("--n-max", dest="n_max", type=int, default=20)
    ps.add_argument("--format", choices=["csv", "json"], default="csv")
    ps.add_argument("--out", default=None)
    ps.set_defaults(func=cmd_sweep)

    pe = sub.add_parser("entropy-rate", help="bracket the flip-process entropy rate")
    _add_param_flags(pe)
    pe.add_argument("--tolerance", type=float, default=1e-4)
    pe.add_argument("--n-max", dest="n_max", type=int, default=20)
    pe.add_argument("--out", default=None)
    pe.set_defaults(func=cmd_entropy_rate)

    pm = sub.add_parser("mutual-info", help="per-family orbit mutual information")
    _add_param_flags(pm)
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--families", default="all")
    pm.add_argument("--format", choices=["csv", "json"], default="csv")
    pm.add_argument("--out", default=None)
    pm.set_defaults(func=cmd_mutual_info)

    pf = sub.add_parser("figures", help="regenerate the figure datasets")
    pf.add_argument("--out", dest="out_dir", required=True, help="output directory")
    pf.set_defaults(func=cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidParameterError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
