"""Command-line front end emitting machine-readable reports.

Subcommands map onto the library one-to-one:

- construct: one wave, its parameter set and construction residuals
- curve:     sweep omega, tabulate the wave family and its derivatives
- spectrum:  eigenvalue structure of both linearized operators
- theta:     growth coefficient of the companion Hill solution vs dT/dB
- evolve:    standing-wave fidelity run (sup error against the rotation)
- stability: perturbed evolution, orbital distance time series
- audit:     sweep-wide derivative and integral-identity checks

Reports embed the resolved configuration and library version.  All
numeric fields are printed with 17 significant digits so doubles
round-trip exactly; identical configurations produce byte-identical
output regardless of --jobs.

Exit codes: 0 success; 1 domain or configuration error; 2 a numeric
assertion failed (an audit threshold or an internal consistency check);
64 usage error; 74 output could not be written.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .curve import (
    CurveError,
    curve_sample,
    d2d_direct,
    d2d_identity,
    derivative_audit,
    identity_audit,
    sample_curve,
)
from .errors import (
    ConfigError,
    ContractError,
    CqnlsError,
    DomainError,
    NumericError,
)
from .evolve import run_fidelity, run_stability
from .hill import HillOperatorSpec, combined_counts, spectrum_report, theta_constant
from .waves import b_threshold, build_wave, period_of_B, quadrature_residual

_USAGE_EXIT = 64
_IO_EXIT = 74

_CURVE_COLUMNS = (
    "omega", "alpha3", "B", "m", "mass", "p4", "p6", "inv2",
    "dphi2", "ratio2", "dmass_domega", "d2_dd", "status", "message",
)
_AUDIT_COLUMNS = (
    "omega", "dalpha3_domega", "dB_domega", "dalpha1_domega", "dalpha2_domega",
    "dk_partial", "dk_partial_closed", "dk_partial_match", "dT_dB",
    "d2_direct", "d2_identity", "d2_route_reldiff",
    "ident_quartic_rate", "ident_virial", "ident_mass_rate", "ident_log_derivative",
    "status",
)


class _Parser(argparse.ArgumentParser):
    """argparse that exits with the usage code instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit2(message)


class SystemExit2(Exception):
    """Usage error carrying the message for exit code 64."""


@dataclass(frozen=True)
class RunConfig:
    """Resolved invocation: subcommand plus every numeric knob."""

    subcommand: str
    L: float
    omega: object  # float or tuple of floats for start:stop:count sweeps
    N: int
    dt: float | None
    t_end: float | None
    delta: float
    perturbation: str
    seed: int
    jobs: int
    output_path: str
    format: str
    max_identity_residual: float


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _to_json(obj, indent=0) -> str:
    # local serializer so floats carry 17 significant digits
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f'{inner}"{key}": {_to_json(val, indent + 1)}' for key, val in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(isinstance(v, (int, float, str, bool, type(None))) for v in seq):
            return "[" + ", ".join(_to_json(v) for v in seq) + "]"
        items = ",\n".join(f"{inner}{_to_json(v, indent + 1)}" for v in seq)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, float):
        if math.isnan(obj):
            return "NaN"
        if math.isinf(obj):
            return "Infinity" if obj > 0 else "-Infinity"
        return f"{obj:.17g}"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _parse_omega(text: str):
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"omega range must be start:stop:count, got {text!r}")
        try:
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError as exc:
            raise ConfigError(f"malformed omega range {text!r}") from exc
        if count < 2 or stop <= start:
            raise ConfigError(
                f"omega range needs stop > start and count >= 2, got {text!r}"
            )
        return tuple(np.linspace(start, stop, count).tolist())
    try:
        return float(text)
    except ValueError as exc:
        raise ConfigError(f"omega must be a number or start:stop:count, got {text!r}") from exc


def _scalar_omega(config: RunConfig) -> float:
    if isinstance(config.omega, tuple):
        raise ConfigError(
            f"subcommand {config.subcommand!r} needs a single omega, got a range"
        )
    return config.omega


def _config_echo(config: RunConfig) -> dict:
    # output_path and jobs do not influence any computed value, and leaving
    # them out keeps reports from identical numeric configs byte-identical
    doc = asdict(config)
    del doc["output_path"]
    del doc["jobs"]
    doc["version"] = __version__
    if isinstance(config.omega, tuple):
        doc["omega"] = list(config.omega)
    return doc


def _csv_lines(config: RunConfig, columns, rows) -> list[str]:
    lines = [f"# cqnls {config.subcommand} report, version {__version__}"]
    for key, value in sorted(_config_echo(config).items()):
        if key == "version":
            continue
        if isinstance(value, list):
            value = "[" + " ".join(_fmt(float(v)) for v in value) + "]"
        lines.append(f"# {key} = {_fmt(value)}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(cell) for cell in row))
    return lines


def _emit(config: RunConfig, text: str) -> None:
    if config.output_path in ("-", ""):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    try:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    except OSError as exc:
        raise _OutputError(f"cannot write {config.output_path!r}: {exc}") from exc


class _OutputError(Exception):
    pass


def _report(config: RunConfig, columns, rows, json_rows=None) -> None:
    if config.format == "csv":
        _emit(config, "\n".join(_csv_lines(config, columns, rows)))
    else:
        doc = {
            "config": _config_echo(config),
            "rows": json_rows
            if json_rows is not None
            else [dict(zip(columns, row)) for row in rows],
        }
        _emit(config, _to_json(doc))


def _run_construct(config: RunConfig) -> int:
    omega = _scalar_omega(config)
    wp, prof = build_wave(config.L, omega, config.N)
    r_quad, r_ode = quadrature_residual(prof, wp)
    doc = {
        "config": _config_echo(config),
        "wave": {
            "L": wp.L, "omega": wp.omega,
            "alpha1": wp.alpha1, "alpha2": wp.alpha2, "alpha3": wp.alpha3,
            "m": wp.m, "g": wp.g, "beta_sq": wp.beta_sq, "B": wp.B,
        },
        "residuals": {"r_quad": r_quad, "r_ode": r_ode},
    }
    if config.format == "csv":
        columns = ("L", "omega", "alpha1", "alpha2", "alpha3", "m", "g",
                   "beta_sq", "B", "r_quad", "r_ode")
        row = [wp.L, wp.omega, wp.alpha1, wp.alpha2, wp.alpha3, wp.m, wp.g,
               wp.beta_sq, wp.B, r_quad, r_ode]
        _report(config, columns, [row])
    else:
        _emit(config, _to_json(doc))
    return 0


def _omega_list(config: RunConfig) -> list[float]:
    if isinstance(config.omega, tuple):
        return list(config.omega)
    return [config.omega]


def _run_curve(config: RunConfig) -> int:
    omegas = _omega_list(config)
    samples = sample_curve(config.L, omegas, config.N)
    rows = []
    for entry in samples:
        if isinstance(entry, CurveError):
            rows.append([entry.omega] + [math.nan] * 11 + ["error", entry.message])
        else:
            rows.append([
                entry.omega, entry.alpha3, entry.B, entry.m, entry.mass,
                entry.p4, entry.p6, entry.inv2, entry.dphi2, entry.ratio2,
                entry.dmass_domega, entry.d2_dd, "ok", "",
            ])
    _report(config, _CURVE_COLUMNS, rows)
    return 0


def _run_spectrum(config: RunConfig) -> int:
    omega = _scalar_omega(config)
    wp, prof = build_wave(config.L, omega, config.N)
    reports = {}
    for kind in ("L1", "L2"):
        rep = spectrum_report(HillOperatorSpec(kind, wp, prof))
        reports[kind] = rep
    counts = combined_counts(reports["L1"], reports["L2"])
    doc = {"config": _config_echo(config)}
    for kind, rep in reports.items():
        doc[kind] = {
            "eigenvalues_low": [float(v) for v in rep.eigenvalues[:10]],
            "parity_low": list(rep.parity[:10]),
            "n_negative": rep.n_negative,
            "zero_index": rep.zero_index,
            "zero_match_error": rep.zero_match_error,
            "tol_zero": rep.tol_zero,
        }
    doc["combined"] = {
        "n_negative": counts.n_negative,
        "zero_multiplicity": counts.zero_multiplicity,
        "n_negative_even": counts.n_negative_even,
        "zero_multiplicity_even": counts.zero_multiplicity_even,
    }
    if config.format == "csv":
        columns = ("operator", "index", "eigenvalue", "parity")
        rows = []
        for kind, rep in reports.items():
            for idx in range(10):
                rows.append([kind, idx, float(rep.eigenvalues[idx]), rep.parity[idx]])
        _report(config, columns, rows)
    else:
        _emit(config, _to_json(doc))
    return 0


def _run_theta(config: RunConfig) -> int:
    omega = _scalar_omega(config)
    wp, prof = build_wave(config.L, omega, config.N)
    theta = theta_constant(wp, prof, config.dt)
    # centered difference of the period in B, Richardson extrapolated
    hB = min(1e-6, 0.1 * abs(wp.B), 0.1 * abs(wp.B - b_threshold(omega)))
    coarse = (period_of_B(wp.B + hB, omega) - period_of_B(wp.B - hB, omega)) / (2 * hB)
    fine = (period_of_B(wp.B + hB / 2, omega) - period_of_B(wp.B - hB / 2, omega)) / hB
    dT_dB = (4.0 * fine - coarse) / 3.0
    mismatch = abs(dT_dB + theta / 2.0) / abs(theta)
    doc = {
        "config": _config_echo(config),
        "theta": theta,
        "dT_dB": dT_dB,
        "relative_mismatch": mismatch,
        "sign_link_holds": (theta < 0.0) == (dT_dB > 0.0),
    }
    if config.format == "csv":
        columns = ("omega", "theta", "dT_dB", "relative_mismatch", "sign_link_holds")
        _report(config, columns, [[omega, theta, dT_dB, mismatch,
                                   (theta < 0.0) == (dT_dB > 0.0)]])
    else:
        _emit(config, _to_json(doc))
    if mismatch > 1e-4:
        raise NumericError(
            f"theta/period cross-check mismatch {mismatch:.3e} exceeds 1e-4"
        )
    return 0


def _run_evolve(config: RunConfig) -> int:
    omega = _scalar_omega(config)
    dt = config.dt if config.dt is not None else 1e-4
    t_end = config.t_end if config.t_end is not None else 10.0
    rep = run_fidelity(config.L, omega, t_end, dt, config.N)
    rows = [[t, s] for t, s in zip(rep.times, rep.sup_error)]
    summary = {
        "mass_drift": rep.mass_drift,
        "energy_drift": rep.energy_drift,
        "rotation_rate_error": rep.rotation_rate_error,
        "max_sup_error": float(np.max(rep.sup_error)),
    }
    if config.format == "csv":
        lines = _csv_lines(config, ("t", "sup_error"), rows)
        head = [lines[0]] + [f"# {k} = {_fmt(v)}" for k, v in summary.items()]
        _emit(config, "\n".join(head + lines[1:]))
    else:
        doc = {"config": _config_echo(config), "summary": summary,
               "rows": [dict(zip(("t", "sup_error"), row)) for row in rows]}
        _emit(config, _to_json(doc))
    return 0


def _run_stability(config: RunConfig) -> int:
    omega = _scalar_omega(config)
    dt = config.dt if config.dt is not None else 1e-4
    t_end = config.t_end if config.t_end is not None else 50.0
    rep = run_stability(
        config.L, omega, config.delta, config.perturbation, t_end, dt,
        config.N, seed=config.seed,
    )
    rows = [[t, d] for t, d in zip(rep.times, rep.orbital_dist)]
    summary = {
        "mass_drift": rep.mass_drift,
        "energy_drift": rep.energy_drift,
        "max_dist": rep.max_dist,
        "parity_defect": rep.parity_defect,
    }
    if config.format == "csv":
        lines = _csv_lines(config, ("t", "orbital_dist"), rows)
        head = [lines[0]] + [f"# {k} = {_fmt(v)}" for k, v in summary.items()]
        _emit(config, "\n".join(head + lines[1:]))
    else:
        doc = {"config": _config_echo(config), "summary": summary,
               "rows": [dict(zip(("t", "orbital_dist"), row)) for row in rows]}
        _emit(config, _to_json(doc))
    return 0


def _audit_point(config: RunConfig, omegas: list[float], idx: int):
    omega = omegas[idx]
    h_route = 5e-3 if omega >= 8.0 else 1e-4 * max(1.0, omega)
    audit = derivative_audit(config.L, omega, N=config.N)
    direct = d2d_direct(config.L, omega, h_route, config.N)
    ident = d2d_identity(config.L, omega, h_route, config.N)
    route_rel = abs(direct - ident) / max(abs(direct), 1e-300)
    if 0 < idx < len(omegas) - 1:
        ia = identity_audit(
            curve_sample(config.L, omegas[idx], config.N),
            curve_sample(config.L, omegas[idx - 1], config.N),
            curve_sample(config.L, omegas[idx + 1], config.N),
        )
        residuals = [ia.quartic_rate, ia.virial, ia.mass_rate, ia.log_derivative]
    else:
        residuals = [math.nan] * 4

    ok = (
        audit.dalpha3 > 0.0
        and audit.dalpha2 < 0.0
        and audit.dk_partial < 0.0
        and audit.dk_partial_match <= 1e-5
        and audit.dT_dB > 0.0
        and direct > 0.0
        and ident > 0.0
        and route_rel <= 1e-4
        and all(
            math.isnan(r) or abs(r) <= config.max_identity_residual
            for r in residuals
        )
    )
    row = [
        omega, audit.dalpha3, audit.dB, audit.dalpha1, audit.dalpha2,
        audit.dk_partial, audit.dk_partial_closed, audit.dk_partial_match,
        audit.dT_dB, direct, ident, route_rel,
    ] + residuals + ["ok" if ok else "fail"]
    return row, ok


def _run_audit(config: RunConfig) -> int:
    omegas = _omega_list(config)
    if len(omegas) < 3:
        raise ConfigError(
            f"audit needs an omega range with count >= 3, got {len(omegas)} point(s)"
        )
    spacing = np.diff(omegas)
    if np.max(np.abs(spacing - spacing[0])) > 1e-9 * abs(spacing[0]):
        raise ConfigError("audit needs uniformly spaced omega values")
    with ThreadPoolExecutor(max_workers=max(1, config.jobs)) as pool:
        results = list(
            pool.map(lambda i: _audit_point(config, omegas, i), range(len(omegas)))
        )
    rows = [row for row, _ in results]
    all_ok = all(ok for _, ok in results)
    _report(config, _AUDIT_COLUMNS, rows)
    if not all_ok:
        raise NumericError("one or more audited quantities violated its threshold")
    return 0


_DISPATCH = {
    "construct": _run_construct,
    "curve": _run_curve,
    "spectrum": _run_spectrum,
    "theta": _run_theta,
    "evolve": _run_evolve,
    "stability": _run_stability,
    "audit": _run_audit,
}

_DEFAULT_FORMAT = {
    "construct": "json",
    "curve": "csv",
    "spectrum": "json",
    "theta": "json",
    "evolve": "csv",
    "stability": "csv",
    "audit": "json",
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cqnls",
        description="Periodic standing waves of the cubic-quintic Schrodinger "
        "equation: construction, spectra, and stability experiments.",
    )
    parser.add_argument("--version", action="version", version=f"cqnls {__version__}")
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    sub.required = True

    docs = {
        "construct": "build one wave; report parameters and residuals (json default)",
        "curve": "sweep omega; CSV columns: " + ",".join(_CURVE_COLUMNS),
        "spectrum": "linearized-operator spectra; CSV columns: operator,index,eigenvalue,parity",
        "theta": "Hill growth coefficient and dT/dB cross-check (json default)",
        "evolve": "standing-wave fidelity run; CSV columns: t,sup_error",
        "stability": "perturbed run; CSV columns: t,orbital_dist",
        "audit": "derivative/identity audit over a uniform sweep (count >= 3); "
        "identity residuals difference the sweep triples, so their "
        "truncation scales with the spacing squared - sweep finely; "
        "CSV columns: " + ",".join(_AUDIT_COLUMNS),
    }
    for name, help_text in docs.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--L", type=float, default=2.0 * math.pi,
                       help="spatial period (default 2*pi)")
        p.add_argument("--omega", required=True,
                       help="frequency, a number or start:stop:count sweep")
        p.add_argument("--N", type=int, default=256,
                       help="grid size, a power of two >= 64 (default 256)")
        p.add_argument("--dt", type=float, default=None,
                       help="time step (evolve/stability) or Hill RK4 step (theta)")
        p.add_argument("--t-end", dest="t_end", type=float, default=None,
                       help="final time (default 10 for evolve, 50 for stability)")
        p.add_argument("--delta", type=float, default=1e-3,
                       help="perturbation size for stability (default 1e-3)")
        p.add_argument("--perturbation", default="mode_cos1",
                       choices=("mode_cos1", "bump", "random_even"),
                       help="perturbation shape for stability")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for random_even (default 0)")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker threads for sweeps (output order is fixed)")
        p.add_argument("--output", default="-",
                       help="output path, - for stdout (default)")
        p.add_argument("--format", choices=("csv", "json"), default=None,
                       help="report format (subcommand-specific default)")
        p.add_argument("--max-identity-residual", type=float, default=1e-5,
                       help="audit threshold for integral-identity residuals")
    return parser


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        subcommand=args.subcommand,
        L=args.L,
        omega=_parse_omega(args.omega),
        N=args.N,
        dt=args.dt,
        t_end=args.t_end,
        delta=args.delta,
        perturbation=args.perturbation,
        seed=args.seed,
        jobs=args.jobs,
        output_path=args.output,
        format=args.format or _DEFAULT_FORMAT[args.subcommand],
        max_identity_residual=args.max_identity_residual,
    )


def run(config: RunConfig) -> int:
    """Dispatch one resolved configuration; returns the exit status."""
    try:
        return _DISPATCH[config.subcommand](config)
    except (ContractError, NumericError) as exc:
        print(f"cqnls {config.subcommand}: numeric assertion failed: {exc}",
              file=sys.stderr)
        return 2
    except (DomainError, ConfigError) as exc:
        print(f"cqnls {config.subcommand}: {exc}", file=sys.stderr)
        return 1
    except CqnlsError as exc:
        print(f"cqnls {config.subcommand}: {exc}", file=sys.stderr)
        return 1
    except _OutputError as exc:
        print(f"cqnls {config.subcommand}: {exc}", file=sys.stderr)
        return _IO_EXIT


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(args)
    except SystemExit2 as exc:
        print(f"cqnls: usage error: {exc}", file=sys.stderr)
        return _USAGE_EXIT
    except ConfigError as exc:
        print(f"cqnls: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
