"""Command-line interface: ``suqosc {spectrum,quadrupole,wavefunction,verify,algebra-check}``.

Output is JSON (round-trip exact floats) or CSV (12 significant digits).
Exit codes: 0 ok, 1 verification failure, 2 invalid configuration,
3 branch not admissible.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .algebra import DEFAULT_M_LATTICE, DEFAULT_S_LATTICE, commutator_residuals, default_w_lattice
from .casimir import CasimirKind
from .deform import DeformationParameter, Regime
from .exceptions import BranchNotAdmissibleError, ParameterDomainError, SuqoscError
from .quadrupole import quadrupole_sweep
from .radial import RadialState, radial_wavefunction
from .spectrum import Branch, enumerate_levels, energy
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_CONFIG = 2
EXIT_BRANCH = 3

GENERATED_BY = f"suqosc {__version__}"
_Q_MODES = {"real": Regime.REAL_POSITIVE, "circle": Regime.UNIT_CIRCLE}


class ConfigError(SuqoscError, ValueError):
    """Rejected command-line configuration."""


@dataclass(frozen=True)
class RunConfig:
    q_mode: str = "real"
    w: float | None = None
    casimir: str = "cq"
    nmax: int = 3
    lmax: int = 3
    emax: float = math.inf
    format: str = "json"

    def __post_init__(self):
        if self.q_mode not in _Q_MODES:
            raise ConfigError(f"--q-mode must be one of {sorted(_Q_MODES)}")
        if self.casimir not in {k.value for k in CasimirKind}:
            raise ConfigError("--casimir must be cq or cqprime")
        if self.format not in ("json", "csv"):
            raise ConfigError("--format must be json or csv")
        if self.nmax < 0 or self.lmax < 0:
            raise ConfigError("--nmax and --lmax must be non-negative")
        if not self.emax > 0:
            raise ConfigError("--emax must be positive")
        if self.w is not None:
            self.parameter()  # validates the domain

    @property
    def regime(self) -> Regime:
        return _Q_MODES[self.q_mode]

    @property
    def kind(self) -> CasimirKind:
        return CasimirKind(self.casimir)

    def parameter(self, w: float | None = None) -> DeformationParameter:
        w = self.w if w is None else w
        if w is None:
            raise ConfigError("--w is required")
        try:
            return DeformationParameter(self.regime, w)
        except ParameterDomainError as exc:
            raise ConfigError(str(exc)) from exc

    def echo(self) -> dict:
        out = asdict(self)
        out["emax"] = None if math.isinf(self.emax) else self.emax
        return out


# ------------------------------------------------------------ serialisation


def _csv_value(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def to_csv(columns: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_value(row[c]) for c in columns])
    return buf.getvalue()


def to_json(payload: dict) -> str:
    # json uses repr() for floats: shortest string that round-trips exactly
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------ commands

LEVEL_COLUMNS = ["n", "l", "branch", "alpha", "energy"]
QUADRUPOLE_COLUMNS = ["w", "branch", "angular", "radial", "Q"]
WAVEFUNCTION_COLUMNS = ["r", "R"]
ALGEBRA_COLUMNS = ["s", "m", "w", "offdiag", "diag_err", "j3_err"]


def cmd_spectrum(config: RunConfig) -> tuple[str, int]:
    p = config.parameter()
    levels = enumerate_levels(config.emax, config.nmax, config.lmax, config.kind, p)
    rows = [lev.as_dict() for lev in levels]
    if config.format == "csv":
        return to_csv(LEVEL_COLUMNS, rows), EXIT_OK
    payload = {"generated_by": GENERATED_BY, "config": config.echo(), "count": len(rows), "levels": rows}
    return to_json(payload), EXIT_OK


def cmd_quadrupole(config: RunConfig, wgrid, n: int) -> tuple[str, int]:
    for w in wgrid:
        config.parameter(float(w))
    points = quadrupole_sweep(wgrid, n, config.kind, config.regime)
    rows = [r.as_dict() for pt in points for r in pt.results]
    if config.format == "csv":
        return to_csv(QUADRUPOLE_COLUMNS, rows), EXIT_OK
    payload = {
        "generated_by": GENERATED_BY,
        "config": config.echo(),
        "n": n,
        "count": len(rows),
        "rows": rows,
        "absent": [{"w": pt.w, "branches": [b.value for b in pt.absent]} for pt in points if pt.absent],
    }
    return to_json(payload), EXIT_OK


def cmd_wavefunction(config: RunConfig, n: int, l: int, branch: str, rgrid) -> tuple[str, int]:
    p = config.parameter()
    levels = {lev.branch: lev for lev in energy(n, l, config.kind, p)}
    try:
        want = Branch(branch)
    except ValueError as exc:
        raise ConfigError(f"unknown branch {branch!r}") from exc
    if want not in levels:
        have = ", ".join(b.value for b in levels) or "none"
        raise BranchNotAdmissibleError(f"branch {branch!r} not admissible for n={n}, l={l} (available: {have})")
    lev = levels[want]
    r = np.asarray(rgrid, dtype=float)
    values = radial_wavefunction(RadialState(n, lev.alpha), r)
    rows = [{"r": float(a), "R": float(b)} for a, b in zip(r, np.atleast_1d(values))]
    diverges = lev.alpha < 1.0
    if config.format == "csv":
        if diverges:
            print(f"note: alpha={lev.alpha:.6g} < 1, R(r) ~ r^{lev.alpha - 1:.6g} diverges as r -> 0", file=sys.stderr)
        return to_csv(WAVEFUNCTION_COLUMNS, rows), EXIT_OK
    payload = {
        "generated_by": GENERATED_BY,
        "config": config.echo(),
        "level": lev.as_dict(),
        "diverges_at_origin": diverges,
        "small_r_exponent": lev.alpha - 1.0,
        "samples": rows,
    }
    return to_json(payload), EXIT_OK


def cmd_verify(suite: str, fmt: str = "text", tolerances: dict | None = None) -> tuple[str, int]:
    try:
        results = run_suite(suite, tolerances)
    except KeyError as exc:
        raise ConfigError(exc.args[0]) from exc
    code = EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED
    if fmt == "json":
        payload = {
            "generated_by": GENERATED_BY,
            "suite": suite,
            "passed": code == EXIT_OK,
            "checks": [
                {"name": f"{r.suite}.{r.name}", "residual": r.residual if math.isfinite(r.residual) else None, "tolerance": r.tolerance, "status": "PASS" if r.passed else "FAIL", "error": r.error}
                for r in results
            ],
        }
        return to_json(payload), code
    lines = [r.line() for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", code


def cmd_algebra_check(config: RunConfig, s_values, m_values, w_values) -> tuple[str, int]:
    rows = []
    for w in w_values:
        p = config.parameter(float(w))
        for s in s_values:
            for m in m_values:
                res = commutator_residuals(float(s), int(m), p)
                rows.append(
                    {
                        "s": float(s),
                        "m": int(m),
                        "w": p.w,
                        "offdiag": res.offdiag_max,
                        "diag_err": res.diag_err,
                        "j3_err": res.j3_err,
                        "diag_target": res.diag_target,
                    }
                )
    if config.format == "csv":
        return to_csv(ALGEBRA_COLUMNS, rows), EXIT_OK
    worst = max((max(r["offdiag"], r["diag_err"], r["j3_err"]) for r in rows), default=0.0)
    payload = {"generated_by": GENERATED_BY, "config": config.echo(), "max_residual": worst, "rows": rows}
    return to_json(payload), EXIT_OK


# ------------------------------------------------------------ argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID_CONFIG, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _tolerance(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    try:
        tol = float(value)
    except ValueError:
        tol = math.nan
    if not sep or not tol > 0:
        raise argparse.ArgumentTypeError(f"expected SUITE.CHECK=POSITIVE_NUMBER, got {text!r}")
    return name.strip(), tol


def _common(sub: argparse.ArgumentParser, need_w: bool) -> None:
    sub.add_argument("--q-mode", choices=sorted(_Q_MODES), default="real")
    sub.add_argument("--w", type=float, required=need_w, default=None)
    sub.add_argument("--casimir", choices=[k.value for k in CasimirKind], default="cq")
    sub.add_argument("--format", choices=["json", "csv"], default="json")
    sub.add_argument("--out", default=None, help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="suqosc", description="su_q(2)-invariant harmonic oscillator")
    parser.add_argument("--version", action="version", version=GENERATED_BY)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = subs.add_parser("spectrum", help="bound-state level table")
    _common(sp, need_w=True)
    sp.add_argument("--nmax", type=int, default=3)
    sp.add_argument("--lmax", type=int, default=3)
    sp.add_argument("--emax", type=float, default=math.inf)

    qp = subs.add_parser("quadrupole", help="l = 0 quadrupole moments over a w grid")
    _common(qp, need_w=False)
    qp.add_argument("--n", type=int, default=0)
    qp.add_argument("--w-grid", type=_float_list, default=None, help="comma-separated w values")
    qp.add_argument("--w-min", type=float, default=0.1)
    qp.add_argument("--w-max", type=float, default=None)
    qp.add_argument("--w-count", type=int, default=30)

    wp = subs.add_parser("wavefunction", help="sample R(r) of one level")
    _common(wp, need_w=True)
    wp.add_argument("--n", type=int, default=0)
    wp.add_argument("--l", type=int, default=0)
    wp.add_argument("--branch", default="only", choices=[b.value for b in Branch])
    wp.add_argument("--r-min", type=float, default=0.01)
    wp.add_argument("--r-max", type=float, default=6.0)
    wp.add_argument("--r-count", type=int, default=100)

    vp = subs.add_parser("verify", help="run the oracle suite")
    vp.add_argument("--suite", choices=["all", *SUITES], default="all")
    vp.add_argument("--format", choices=["text", "json"], default="text")
    vp.add_argument(
        "--tol",
        action="append",
        type=_tolerance,
        default=[],
        metavar="SUITE.CHECK=VALUE",
        help="override one check's tolerance (repeatable)",
    )
    vp.add_argument("--out", default=None)

    ap = subs.add_parser("algebra-check", help="commutator residuals on monomials")
    _common(ap, need_w=False)
    ap.add_argument("--s", type=_float_list, default=list(DEFAULT_S_LATTICE))
    ap.add_argument("--m", type=_int_list, default=list(DEFAULT_M_LATTICE))
    ap.add_argument("--w-grid", type=_float_list, default=None)
    return parser


def _config(args, **extra) -> RunConfig:
    return RunConfig(q_mode=args.q_mode, w=args.w, casimir=args.casimir, format=args.format, **extra)


def _default_wmax(regime: Regime) -> float:
    return 3.0 if regime is Regime.REAL_POSITIVE else 2.5


def dispatch(args) -> tuple[str, int]:
    if args.command == "verify":
        return cmd_verify(args.suite, args.format, dict(args.tol))
    if args.command == "spectrum":
        return cmd_spectrum(_config(args, nmax=args.nmax, lmax=args.lmax, emax=args.emax))
    if args.command == "quadrupole":
        config = _config(args)
        if args.w_grid:
            grid = args.w_grid
        elif args.w is not None:
            grid = [args.w]
        else:
            if args.w_count < 1:
                raise ConfigError("--w-count must be positive")
            w_max = _default_wmax(config.regime) if args.w_max is None else args.w_max
            grid = [float(v) for v in np.linspace(args.w_min, w_max, args.w_count)]
        return cmd_quadrupole(config, grid, args.n)
    if args.command == "wavefunction":
        if args.r_count < 1 or not 0 < args.r_min <= args.r_max:
            raise ConfigError("need 0 < --r-min <= --r-max and --r-count >= 1")
        rgrid = np.linspace(args.r_min, args.r_max, args.r_count)
        return cmd_wavefunction(_config(args), args.n, args.l, args.branch, rgrid)
    if args.command == "algebra-check":
        config = _config(args)
        if args.w_grid:
            w_values = args.w_grid
        elif args.w is not None:
            w_values = [args.w]
        else:
            w_values = [float(v) for v in default_w_lattice(config.regime)]
        return cmd_algebra_check(config, args.s, args.m, w_values)
    raise ConfigError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = dispatch(args)
    except BranchNotAdmissibleError as exc:
        print(f"suqosc: {exc}", file=sys.stderr)
        return EXIT_BRANCH
    except (ConfigError, ParameterDomainError, ValueError) as exc:
        print(f"suqosc: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INVALID_CONFIG
    _emit(text, getattr(args, "out", None))
    return code


if __name__ == "__main__":
    sys.exit(main())
