"""Command-line front end: ``qeccd {coeffs,chi,figures,sweep,audit}``.

Exit codes: 0 success, 1 numerical-invariant violation, 2 configuration or
output error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

import numpy as np

from . import analysis, channel, tomography
from .channel import COEFFICIENT_NAMES, ChannelParams

EXIT_OK, EXIT_INVARIANT, EXIT_CONFIG = 0, 1, 2
QECCD_EXACT_TOL = 1e-9
FIG1_G_CUTOFF = 0.1


class ConfigError(Exception):
    pass


class InvariantViolation(Exception):
    pass


@dataclass
class Protocol:
    mode: str = "exact"
    shots: int | None = None
    seed: int | None = None
    beta0: list = field(default_factory=lambda: [1.0, 0.0])
    beta1: list = field(default_factory=lambda: [0.0, 0.0])
    method: str = "qeccd"


@dataclass
class Output:
    directory: str = "out"
    format: str = "csv"


@dataclass
class Figures:
    r12_grid: list | None = None
    fig3a_r12: list = field(default_factory=lambda: [0.1, 100.0])
    initial_state: str = "ee"
    quantities: list = field(default_factory=lambda: ["D", "Dstar", "discord"])


@dataclass
class RunConfig:
    channel: ChannelParams = field(default_factory=ChannelParams)
    t_grid: list | None = None
    protocol: Protocol = field(default_factory=Protocol)
    output: Output = field(default_factory=Output)
    figures: Figures = field(default_factory=Figures)

    def to_dict(self) -> dict:
        return {
            "channel": self.channel.to_dict(),
            "t_grid": self.t_grid,
            "protocol": asdict(self.protocol),
            "output": asdict(self.output),
            "figures": asdict(self.figures),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "RunConfig":
        if not isinstance(doc, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(doc) - {"channel", "t_grid", "protocol", "output", "figures"}
        if unknown:
            raise ConfigError(f"unknown config sections: {sorted(unknown)}")
        try:
            cfg = cls(
                channel=ChannelParams.from_dict(doc.get("channel", {})),
                t_grid=doc.get("t_grid"),
                protocol=_section(Protocol, doc.get("protocol", {})),
                output=_section(Output, doc.get("output", {})),
                figures=_section(Figures, doc.get("figures", {})),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc
        cfg.validate()
        return cfg

    def validate(self) -> None:
        p = self.protocol
        if p.mode not in ("exact", "sampled"):
            raise ConfigError(f"mode must be exact or sampled, got {p.mode!r}")
        if p.method not in ("direct", "qpt", "qeccd"):
            raise ConfigError(f"method must be direct, qpt or qeccd, got {p.method!r}")
        if p.mode == "sampled" and not (isinstance(p.shots, int) and p.shots > 0):
            raise ConfigError("sampled mode needs a positive integer shots")
        if self.output.format not in ("csv", "json"):
            raise ConfigError("output format must be csv or json")
        if self.figures.initial_state not in analysis.INITIAL_STATES:
            raise ConfigError(f"initial_state must be one of {sorted(analysis.INITIAL_STATES)}")
        try:
            amp = abs(self.beta0) ** 2 + abs(self.beta1) ** 2
        except (TypeError, ValueError) as exc:
            raise ConfigError("beta0/beta1 must be numbers or [re, im] pairs") from exc
        if abs(amp - 1) > 1e-12:
            raise ConfigError("logical amplitudes must satisfy |beta0|^2 + |beta1|^2 = 1")
        self.times()

    @property
    def beta0(self) -> complex:
        return _complex(self.protocol.beta0)

    @property
    def beta1(self) -> complex:
        return _complex(self.protocol.beta1)

    def times(self) -> np.ndarray:
        """Time grid: explicit list, {start, stop, num} linspace, or the default sweep grid."""
        g = self.t_grid
        if g is None:
            return analysis.default_t_grid(self.channel.gamma)
        if isinstance(g, dict):
            try:
                return np.linspace(float(g["start"]), float(g["stop"]), int(g["num"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigError("t_grid object needs numeric start, stop, num") from exc
        try:
            out = np.asarray(g, dtype=float)
        except (TypeError, ValueError) as exc:
            raise ConfigError("t_grid must be a list of numbers") from exc
        if out.ndim != 1 or out.size == 0 or np.any(out < 0):
            raise ConfigError("t_grid must be a nonempty list of nonnegative times")
        return out


def _section(kind, data):
    if not isinstance(data, dict):
        raise ConfigError(f"section {kind.__name__.lower()} must be an object")
    names = {f.name for f in fields(kind)}
    unknown = set(data) - names
    if unknown:
        raise ConfigError(f"unknown {kind.__name__.lower()} keys: {sorted(unknown)}")
    return kind(**data)


def _complex(x) -> complex:
    if isinstance(x, (list, tuple)):
        re, im = x
        return complex(float(re), float(im))
    return complex(float(x))


def load_config(path: str | None) -> RunConfig:
    if path is None:
        return RunConfig()
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON in {path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return RunConfig.from_dict(doc)


# --- output ------------------------------------------------------------------


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])


def write_json(path: Path, doc) -> None:
    path.write_text(json.dumps(doc, indent=2, sort_keys=True, default=_json_default) + "\n")


def _json_default(o):
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, complex):
        return [o.real, o.imag]
    raise TypeError(type(o).__name__)


def write_chi(out: Path, stem: str, chi: tomography.ProcessMatrix, fmt: str) -> None:
    write_csv(out / f"{stem}.csv", ["row_label", "col_label", "re", "im"], chi.to_rows())
    if fmt == "json":
        write_json(out / f"{stem}.json", chi.to_json())


# --- commands ----------------------------------------------------------------


def cmd_coeffs(cfg: RunConfig, out: Path) -> int:
    t = cfg.times()
    c = channel.coefficients(cfg.channel, t)
    header, cols = ["t"], [t]
    for name in COEFFICIENT_NAMES:
        v = np.broadcast_to(getattr(c, name), t.shape)
        if np.iscomplexobj(v):
            header += [f"Re {name}", f"Im {name}"]
            cols += [v.real, v.imag]
        else:
            header.append(name)
            cols.append(v)
    write_csv(out / "coeffs.csv", header, zip(*cols))
    return EXIT_OK


def _chi_for(cfg: RunConfig, method: str):
    p = cfg.channel
    if method == "direct":
        return tomography.direct_chi(p, cfg.beta0, cfg.beta1), None
    if method == "qpt":
        return tomography.qpt_chi(p), None
    rec = tomography.reconstruct(
        p, cfg.protocol.mode, cfg.protocol.shots, cfg.protocol.seed, beta0=cfg.beta0, beta1=cfg.beta1
    )
    return rec.chi, rec


def cmd_chi(cfg: RunConfig, out: Path) -> int:
    method = cfg.protocol.method
    chi, rec = _chi_for(cfg, method)
    write_chi(out, f"chi_{method}", chi, cfg.output.format)
    checks = {k: {"value": float(v), "ok": bool(ok)} for k, (v, ok) in chi.check().items()}
    report = {"method": method, "mode": cfg.protocol.mode, "invariants": checks}
    status = EXIT_OK
    if rec is not None:
        ref = tomography.direct_chi(cfg.channel, cfg.beta0, cfg.beta1)
        err = np.abs(chi.entries - ref.entries)
        report["max_abs_error"] = float(err.max())
        report["configurations"] = rec.n_configurations
        report["low_statistics_rows"] = len(rec.low_statistics_rows)
        write_csv(
            out / "chi_errors.csv",
            ["row_label", "col_label", "re", "im", "oracle_re", "oracle_im", "abs_error"],
            [
                (a, b, chi.entries[i, j].real, chi.entries[i, j].imag, ref.entries[i, j].real, ref.entries[i, j].imag, err[i, j])
                for i, a in enumerate(chi.labels)
                for j, b in enumerate(chi.labels)
            ],
        )
        write_csv(
            out / "schedule_results.csv",
            ["table", "a", "b", "toggle", "syndrome", "target_l", "target_m", "part", "xi", "value", "low_statistics"],
            [
                (r.row.table, r.row.a, r.row.b, r.row.toggle, r.row.syndrome_bits, *r.row.target, r.row.part, r.xi, r.value, r.low_statistics)
                for r in rec.rows
            ],
        )
        (out / "schedule.json").write_text(tomography.reference_schedule().dumps() + "\n")
        report["audit"] = _write_audit(cfg, out)
        if cfg.protocol.mode == "exact" and report["max_abs_error"] >= QECCD_EXACT_TOL:
            status = EXIT_INVARIANT
    if cfg.protocol.mode == "exact" and not all(c["ok"] for c in checks.values()):
        status = EXIT_INVARIANT
    write_json(out / "report.json", report)
    print(f"{method}: " + ", ".join(f"{k}={v['value']:.3g}" for k, v in checks.items()))
    if "max_abs_error" in report:
        print(f"max |qeccd - direct| = {report['max_abs_error']:.3g}")
    return status


def _write_audit(cfg: RunConfig, out: Path) -> dict:
    rows = tomography.audit_schedule(cfg.channel)
    write_csv(
        out / "audit.csv",
        ["table", "a", "b", "printed_syndrome", "toggle", "printed_l", "printed_m", "status", "printed_value",
         "oracle_value", "corrected_expr", "corrected_value", "expr", "detail"],
        [
            (r.row.table, r.row.a, r.row.b, r.row.printed_syndrome, r.row.toggle, *r.row.printed_target, r.status,
             None if r.printed_value is None else r.printed_value.real, r.oracle_value, r.corrected_expr,
             None if r.corrected_value is None else r.corrected_value.real, r.row.analytic_expr, r.detail)
            for r in rows
        ],
    )
    return tomography.audit_summary(rows)


def cmd_audit(cfg: RunConfig, out: Path) -> int:
    summary = _write_audit(cfg, out)
    write_json(out / "audit_summary.json", summary)
    print(", ".join(f"{k}={v}" for k, v in sorted(summary.items())))
    return EXIT_OK


def _fig1_rows(cfg: RunConfig):
    x = np.concatenate([[0.0], np.geomspace(1e-3, FIG1_G_CUTOFF, 20, endpoint=False), np.linspace(FIG1_G_CUTOFF, 20, 200)])
    p = cfg.channel
    F = channel.spatial_F(x / p.k0, p.k0, p.alpha)
    for xi, fi in zip(x, F):
        divergent = xi < FIG1_G_CUTOFF
        g = None if divergent else channel.spatial_G(xi / p.k0, p.k0, p.alpha)
        yield xi, fi, g, divergent


def _r12_grid(cfg: RunConfig) -> list[float]:
    if cfg.figures.r12_grid is not None:
        return [float(r) for r in cfg.figures.r12_grid]
    return [float(r) for r in np.geomspace(0.1, 100.0, 31)]


SWEEP_HEADER = ["r12", "t", "D", "Dstar", "discord"]


def _result_row(r: analysis.AnalysisResult):
    return (r.r12, r.t, r.D, r.Dstar, r.discord)


def cmd_figures(cfg: RunConfig, out: Path) -> int:
    write_csv(out / "fig1.csv", ["k0r12", "F", "G", "G_divergent"], _fig1_rows(cfg))
    rho0 = analysis.INITIAL_STATES[cfg.figures.initial_state]
    t = cfg.times()
    rows = []
    for r in cfg.figures.fig3a_r12:
        rows += analysis.time_series(cfg.channel.replace(r12=float(r)), t, ("D", "Dstar", "discord"), rho0)
    write_csv(out / "fig3a.csv", SWEEP_HEADER, map(_result_row, rows))
    grid = _r12_grid(cfg)
    fig3b = analysis.sweep(cfg.channel, grid, ("D", "Dstar", "discord"), t, rho0)
    write_csv(out / "fig3b.csv", SWEEP_HEADER, map(_result_row, fig3b))
    fig4 = analysis.sweep(cfg.channel, grid, ("discord", "D", "Dstar"), t, rho0)
    write_csv(out / "fig4.csv", SWEEP_HEADER, map(_result_row, fig4))
    return EXIT_OK


def cmd_sweep(cfg: RunConfig, out: Path) -> int:
    quantities = tuple(cfg.figures.quantities)
    bad = set(quantities) - {"D", "Dstar", "discord"}
    if bad or not quantities:
        raise ConfigError(f"unknown quantities {sorted(bad)}" if bad else "no quantities requested")
    rho0 = analysis.INITIAL_STATES[cfg.figures.initial_state]
    res = analysis.sweep(cfg.channel, _r12_grid(cfg), quantities, cfg.times(), rho0)
    write_csv(out / "sweep.csv", SWEEP_HEADER, map(_result_row, res))
    if cfg.output.format == "json":
        write_json(out / "sweep.json", [r.as_dict() for r in res])
    return EXIT_OK


COMMANDS = {"coeffs": cmd_coeffs, "chi": cmd_chi, "figures": cmd_figures, "sweep": cmd_sweep, "audit": cmd_audit}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qeccd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", help="JSON run configuration")
        sp.add_argument("--mode", choices=("exact", "sampled"))
        sp.add_argument("--shots", type=int)
        sp.add_argument("--seed", type=int)
        sp.add_argument("--out", help="output directory")
        sp.add_argument("--method", choices=("direct", "qpt", "qeccd"))
    return parser


def resolve(args) -> RunConfig:
    cfg = load_config(args.config)
    for name in ("mode", "shots", "seed", "method"):
        v = getattr(args, name)
        if v is not None:
            setattr(cfg.protocol, name, v)
    if args.out is not None:
        cfg.output.directory = args.out
    if cfg.protocol.mode == "sampled" and cfg.protocol.seed is None:
        cfg.protocol.seed = int(np.random.SeedSequence().entropy % 2**63)
    cfg.validate()
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve(args)
        out = Path(cfg.output.directory)
        try:
            out.mkdir(parents=True, exist_ok=True)
            write_json(out / "config.json", cfg.to_dict())
        except OSError as exc:
            raise ConfigError(f"cannot write to {out}: {exc}") from exc
        try:
            return COMMANDS[args.command](cfg, out)
        except OSError as exc:
            raise ConfigError(f"cannot write output: {exc}") from exc
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (InvariantViolation, channel.DivergentCouplingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT if isinstance(exc, InvariantViolation) else EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
