"""Command-line front end: ``sweep``, ``death``, ``verify`` and ``compare``.

Exit status: 0 success, 1 usage or configuration error, 2 I/O error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass

import numpy as np

from . import closed_forms
from .channels import NoiseScenario, apply_channel, assemble_scenario, completeness_defect
from .negativity import detect_revival, find_death_point, sweep
from .states import density_from_pure, initial_state, validate_density

log = logging.getLogger(__name__)

EXIT_OK, EXIT_CONFIG, EXIT_IO = 0, 1, 2
CPTP_TOL = 1e-10
VERIFY_SAMPLES = (0.0, 0.25, 0.5, 0.75, 1.0)
DEFAULT_STEPS = {"sweep": 101, "death": 101, "verify": 5, "compare": 11}


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    state_label: str = "GHZ"
    sites: str = "abc"
    correlation: str = "correlated"
    normalization: str = "renormalize"
    p_min: float = 0.0
    p_max: float = 1.0
    p_steps: int | None = None
    output_path: str | None = None
    seed: int = 0  # reserved; no command draws random numbers

    def __post_init__(self):
        if self.state_label.upper() not in ("GHZ", "W"):
            raise ConfigError(f"--state must be GHZ or W, got {self.state_label!r}")
        object.__setattr__(self, "state_label", self.state_label.upper())
        if not self.sites or set(self.sites) - set("abc") or len(set(self.sites)) != len(self.sites):
            raise ConfigError(f"--sites must be distinct letters from 'abc', got {self.sites!r}")
        if not (0.0 <= self.p_min <= self.p_max <= 1.0):
            raise ConfigError(f"need 0 <= p-min <= p-max <= 1, got [{self.p_min}, {self.p_max}]")
        if self.p_steps is not None and self.p_steps < 1:
            raise ConfigError("--p-steps must be positive")
        if self.command == "sweep" and self.steps < 2:
            raise ConfigError("sweep needs --p-steps >= 2")
        if self.p_min == self.p_max and self.steps > 1:
            raise ConfigError("a grid with several points needs p-min < p-max")
        if self.seed < 0:
            raise ConfigError("--seed must be non-negative")

    @property
    def steps(self) -> int:
        return self.p_steps if self.p_steps is not None else DEFAULT_STEPS[self.command]

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(self.p_min, self.p_max, self.steps)

    def scenario(self) -> NoiseScenario:
        try:
            return NoiseScenario(tuple(self.sites), self.correlation, 0.0, self.normalization)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc


def fmt(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    try:
        return open(path, "w", encoding="utf-8", newline="\n"), True
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def sweep_csv(cfg: RunConfig) -> tuple[str, str]:
    """CSV text and a one-line summary for a sweep."""
    result = sweep(cfg.state_label, cfg.scenario(), cfg.grid)
    lines = ["p,n_a_bc,n_b_ac,n_c_ab,tripartite,raw_trace"]
    for p, t, tr in zip(result.p_values, result.triples, result.traces_before_normalization):
        lines.append(",".join(fmt(v) for v in (p, *t.as_tuple(), tr)))
    trip = result.tripartite
    dead = np.nonzero(trip <= 1e-9)[0]
    death = fmt(result.p_values[dead[0]]) if dead.size else "none"
    rev = detect_revival(result)
    revival = f"{fmt(rev[1])}" if rev else "none"
    summary = (
        f"state={cfg.state_label} scenario={result.scenario.kind}:{''.join(result.scenario.affected_qubits)} "
        f"min_tripartite={fmt(trip.min())} max_tripartite={fmt(trip.max())} "
        f"death_p={death} revival_p={revival}"
    )
    return "\n".join(lines) + "\n", summary


def run_sweep(cfg: RunConfig) -> int:
    text, summary = sweep_csv(cfg)
    out, close = _open_out(cfg.output_path)
    try:
        out.write(text)
    finally:
        if close:
            out.close()
    print(summary)
    return EXIT_OK


def run_death(cfg: RunConfig) -> int:
    try:
        p = find_death_point(cfg.state_label, cfg.scenario(), (cfg.p_min, cfg.p_max))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    line = f"death_p={p:.4f}" if p is not None else "death_p=none"
    print(line)
    if cfg.output_path:
        out, close = _open_out(cfg.output_path)
        try:
            out.write(line + "\n")
        finally:
            if close:
                out.close()
    return EXIT_OK


def verify_report(cfg: RunConfig) -> tuple[str, bool]:
    scenario = cfg.scenario()
    rho0 = density_from_pure(initial_state(cfg.state_label))
    ok = True
    lines = [
        f"state={cfg.state_label} scenario={scenario.kind}:{''.join(scenario.affected_qubits)} "
        f"cptp_expected={'yes' if scenario.trace_preserving else 'no'}",
        "p,completeness_defect,hermiticity_defect,min_eigenvalue,trace",
    ]
    for p in VERIFY_SAMPLES:
        kraus = assemble_scenario(scenario.at(p))
        defect = completeness_defect(kraus)
        diag = validate_density(apply_channel(rho0, kraus, "literal"))
        lines.append(",".join(fmt(v) for v in (p, defect, diag.hermiticity_defect, diag.min_eigenvalue, diag.trace)))
        if scenario.trace_preserving and defect > CPTP_TOL:
            ok = False
    return "\n".join(lines) + "\n", ok


def run_verify(cfg: RunConfig) -> int:
    text, ok = verify_report(cfg)
    out, close = _open_out(cfg.output_path)
    try:
        out.write(text)
    finally:
        if close:
            out.close()
    scenario = cfg.scenario()
    if not scenario.trace_preserving:
        print(
            f"warning: {scenario.kind} map is not trace preserving (expected); "
            "see completeness_defect column",
            file=sys.stderr,
        )
    if not ok:
        print("error: a trace-preserving scenario has completeness defect above tolerance", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_OK


def compare_report(cfg: RunConfig) -> str:
    samples = [round(float(p), 12) for p in cfg.grid]
    blocks = []
    for kind, numeric_kind in closed_forms.audit_pairs(cfg.state_label):
        report = closed_forms.compare_analytic_numeric(kind, cfg.state_label, samples, numeric_kind)
        blocks.append(report.format())
    return "\n".join(blocks)


def run_compare(cfg: RunConfig) -> int:
    text = compare_report(cfg)
    out, close = _open_out(cfg.output_path)
    try:
        out.write(text)
    finally:
        if close:
            out.close()
    return EXIT_OK


COMMANDS = {"sweep": run_sweep, "death": run_death, "verify": run_verify, "compare": run_compare}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--state", default="GHZ", help="initial state: GHZ or W")
    common.add_argument("--sites", default="abc", help="affected qubits, e.g. a, ab, abc")
    common.add_argument("--correlation", default="correlated", choices=("correlated", "non_correlated"))
    common.add_argument("--normalization", default="renormalize", choices=("literal", "renormalize"))
    common.add_argument("--p-min", type=float, default=0.0)
    common.add_argument("--p-max", type=float, default=1.0)
    common.add_argument("--p-steps", type=int, default=None)
    common.add_argument("--out", default=None, help="output file (default: standard output)")
    common.add_argument("--seed", type=int, default=0, help="reserved, currently unused")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="tripartite-noise", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("sweep", parents=[common], help="negativity over a p grid, written as CSV")
    sub.add_parser("death", parents=[common], help="first p where tripartite negativity vanishes")
    sub.add_parser("verify", parents=[common], help="channel completeness and output-state checks")
    sub.add_parser("compare", parents=[common], help="audit printed closed forms against Kraus sums")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig(
            command=args.command,
            state_label=args.state,
            sites=args.sites,
            correlation=args.correlation,
            normalization=args.normalization,
            p_min=args.p_min,
            p_max=args.p_max,
            p_steps=args.p_steps,
            output_path=args.out,
            seed=args.seed,
        )
        log.debug("config: %s", cfg)
        return COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
