"""Command line front end: every command writes one table (CSV) or one report (JSON)
and exits with 0 only if all internal checks pass."""

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np
import yaml

import hpfg
from hpfg.Analysis.collision import collision_experiment, exhaustive_collision_probability
from hpfg.Analysis.fidelity import fidelity_exact, support_bound_check, max_fidelity
from hpfg.Analysis.oracle_check import verify_cubic_solver, verify_quadratic_solver
from hpfg.Analysis.query_bounds import analytic_bounds
from hpfg.Analysis.success_analysis import total_success, verify_eta_bound
from hpfg.FiniteField.ff_core import as_modulus
from hpfg.GraphSystems.graph_system_solver import GraphSystemSolver
from hpfg.GraphSystems.system_instance import SystemInstance
from hpfg.QuantumSim.algorithm import run_algorithm
from hpfg.QuantumSim.black_box import BlackBox
from hpfg.QuantumSim.measurement import validate_dense_pipeline
from hpfg.Util.param_util import (
    BRUTE_FORCE_GUARD,
    CheckFailedError,
    ConfigError,
    GuardExceededError,
    make_rng,
    parse_int_list,
    resolve_seed,
)

logger = logging.getLogger(__name__)

COMMANDS = [
    "solve",
    "success",
    "bounds",
    "verify-appendix",
    "verify-eta",
    "fidelity",
    "collision",
    "simulate",
    "end-to-end",
]
_FORMATS = ["csv", "json"]
_LEADING_COLUMNS = ["p", "n", "k", "mode"]
_TRAILING_COLUMNS = ["seed", "version"]
# keys of RunConfig that do not change the results and stay out of the artifact
_UNRECORDED = ("output", "jobs", "config")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CHECK = 3
EXIT_GUARD = 4


@dataclass
class RunConfig:
    command: Optional[str] = None
    p: Tuple[int, ...] = (5,)
    degree: Optional[int] = None
    copies: Optional[int] = None
    variables: int = 1
    seed: Optional[int] = 0
    trials: int = 10000
    repetitions: int = 500
    epsilon: float = 0.5
    output: Optional[str] = None
    format: str = "json"
    mode: str = "full"
    jobs: int = 1
    x: Optional[Tuple[int, ...]] = None
    w: Optional[Tuple[int, ...]] = None
    q: Optional[Tuple[int, ...]] = None
    q_tilde: Optional[Tuple[int, ...]] = None
    config: Optional[str] = None

    def validate(self):
        """Raises ConfigError for an unusable configuration; checks every p."""
        if self.command not in COMMANDS:
            raise ConfigError(
                "command %s not supported. Chose among %s." % (self.command, COMMANDS)
            )
        if self.format not in _FORMATS:
            raise ConfigError("format %s not supported. Chose among %s." % (self.format, _FORMATS))
        if not self.p:
            raise ConfigError("at least one prime is needed")
        for p in self.p:
            as_modulus(p)
        if self.degree is not None and self.degree < 1:
            raise ConfigError("degree must be >= 1, got %s" % self.degree)
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1, got %s" % self.jobs)
        return self

    def record(self):
        """Configuration as written into the output artifact."""
        record = asdict(self)
        for key in _UNRECORDED:
            record.pop(key)
        return record


def default_config_path():
    """data/RunConfig/default.yml next to the package."""
    path = os.path.dirname(hpfg.__file__)
    module_path, _ = os.path.split(path)
    return os.path.join(module_path, "data/RunConfig/default.yml")


def _read_yaml(path):
    try:
        with open(path, "r") as file:
            content = yaml.safe_load(file)
    except (OSError, yaml.YAMLError) as error:
        raise ConfigError("could not read configuration %s: %s" % (path, error))
    if content is None:
        return {}
    if not isinstance(content, dict):
        raise ConfigError("configuration %s must be a mapping" % path)
    return content


def _apply(config, values, source):
    names = {item.name for item in fields(RunConfig)}
    for key, value in values.items():
        key = key.replace("-", "_")
        if key not in names:
            raise ConfigError("unknown configuration key '%s' in %s" % (key, source))
        if key in ("p", "x", "w", "q", "q_tilde"):
            value = parse_int_list(value)
        setattr(config, key, value)


def load_run_config(overrides=None, config_path=None, default_path=None):
    """Builds a RunConfig from the default file, an optional user file and explicit
    overrides, in increasing precedence. The seed falls back to HPFG_SEED before the
    file values.

    :param overrides: dict of explicit values, None entries are ignored
    :param config_path: user YAML file or None
    :param default_path: default YAML file, data/RunConfig/default.yml when None
    :return: RunConfig
    """
    overrides = {} if overrides is None else overrides
    config = RunConfig()
    default_path = default_config_path() if default_path is None else default_path
    if os.path.exists(default_path):
        _apply(config, _read_yaml(default_path), default_path)
    if config_path is not None:
        _apply(config, _read_yaml(config_path), config_path)
    explicit = {key: value for key, value in overrides.items() if value is not None}
    seed = explicit.pop("seed", None)
    _apply(config, explicit, "command line")
    config.seed = resolve_seed(seed, default=0 if config.seed is None else config.seed)
    config.config = config_path
    return config.validate()


def _degree(config, default=2):
    return default if config.degree is None else config.degree


def _rows_for(config, n, k, results):
    """Adds the identifying columns to each result row."""
    rows = []
    for result in results:
        row = {"p": result.pop("p"), "n": n, "k": k, "mode": config.mode}
        row.update(result)
        row.update({"seed": config.seed, "version": hpfg.__version__})
        rows.append(row)
    return rows


def _prefixed(checks, p):
    return {"%s[p=%d]" % (name, p): bool(value) for name, value in checks.items()}


def run_solve(config, rng):
    if config.x is None or config.w is None:
        raise ConfigError("solve needs --x and --w")
    if config.degree is not None and config.degree != len(config.w):
        raise ConfigError("--degree %d does not match len(w) = %d" % (config.degree, len(config.w)))
    rows, checks = [], {}
    for p in config.p:
        instance = SystemInstance(p, config.x, config.w)
        solution_set = GraphSystemSolver(p, rng=rng).solve(instance)
        rows += _rows_for(config, instance.n, instance.k, [{
            "p": p,
            "x": list(instance.x),
            "w": list(instance.w),
            "solutions": solution_set.to_list(),
            "eta": solution_set.eta,
            "branch": solution_set.branch,
        }])
        checks.update(_prefixed(
            {"solutions_verified": all(instance.is_solution(b) for b in solution_set)}, p
        ))
    return rows, checks


def run_success(config, rng):
    n = _degree(config)
    k = n if config.copies is None else config.copies
    rows, checks = [], {}
    for p in config.p:
        report = total_success(p, n, k=k, mode=config.mode, jobs=config.jobs)
        rows += _rows_for(config, n, k, [{
            "p": p,
            "success": report.success,
            "paper_bound": report.paper_bound,
            "total_success": report.total_success,
            "restricted_success": report.restricted_success,
            "rays": report.rays,
            "good_x": report.good_x,
        }])
        checks.update(_prefixed(report.checks(), p))
    return rows, checks


def run_bounds(config, rng):
    n = _degree(config)
    rows, checks = [], {}
    for p in config.p:
        report = analytic_bounds(p, n=n, m=config.variables, k=config.copies,
                                 epsilon=config.epsilon)
        lower = report.lower
        rows += _rows_for(config, n, n if config.copies is None else config.copies, [{
            "p": p,
            "m": report.m,
            "states": report.states,
            "upper": report.upper,
            "lower": lower.numerator if lower.denominator == 1 else str(lower),
            "fidelity_bound": report.fidelity_bound,
            "copies_needed": report.copies_needed,
            "quadratic_bound": report.quadratic_bound,
            "cubic_bound": report.cubic_bound,
        }])
        checks.update(_prefixed(report.checks(), p))
    return rows, checks


def run_verify_appendix(config, rng):
    n = _degree(config, default=3)
    if n not in (2, 3):
        raise ConfigError("verify-appendix covers degree 2 and 3, got %d" % n)
    rows, checks = [], {}
    for p in config.p:
        if n == 2:
            report = verify_quadratic_solver(p)
        else:
            report = verify_cubic_solver(p, rng=rng)
        row = {
            "p": p,
            "instances": report.instances,
            "mismatches": report.mismatches,
            "max_eta_good": report.max_eta_good,
            "good_pairs": report.good_pairs,
            "label_disagreements": report.label_disagreements,
        }
        for branch in sorted(report.branch_counts):
            row["instances_%s" % branch] = report.branch_counts[branch]
            row["max_eta_%s" % branch] = report.branch_max_eta.get(branch, 0)
        rows += _rows_for(config, n, n, [row])
        checks.update(_prefixed(report.checks(), p))
        logger.info("instances=%d mismatches=%d", report.instances, report.mismatches)
    return rows, checks


def run_verify_eta(config, rng):
    rows, checks = [], {}
    for p in config.p:
        report = verify_eta_bound(p)
        rows += _rows_for(config, 3, 3, [{
            "p": p,
            "max_eta": report.max_eta,
            "good_pairs": report.good_pairs,
            "argmax": list(report.argmax) if report.argmax is not None else None,
        }])
        checks.update(_prefixed({"eta_le_10": report.holds}, p))
    return rows, checks


def run_fidelity(config, rng):
    rows, checks = [], {}
    for p in config.p:
        if config.q is not None and config.q_tilde is not None:
            report = fidelity_exact(config.q, config.q_tilde, p)
            n = report.n
            row = {
                "p": p,
                "q": list(report.q),
                "q_tilde": list(report.q_tilde),
                "fidelity": report.fidelity,
                "bound": report.bound,
                "alpha": report.alpha,
                "support_bound": report.support_bound,
                "max_intersections": report.max_intersections,
            }
            checks.update(_prefixed(report.checks(), p))
        else:
            n = _degree(config)
            fidelity, argmax = max_fidelity(p, n)
            bound = n / np.sqrt(p)
            row = {"p": p, "max_fidelity": fidelity, "argmax": list(argmax), "bound": bound}
            checks.update(_prefixed({"fidelity_le_bound": fidelity <= bound + 1e-12}, p))
        rows += _rows_for(config, n, n, [row])
    violations, worst = support_bound_check(config.trials, rng)
    checks["support_bound_holds"] = violations == 0
    logger.info("support bound: %d violations in %d pairs, worst gap %.3g", violations,
                config.trials, worst)
    return rows, checks


def run_collision(config, rng):
    n = _degree(config)
    rows, checks = [], {}
    for p in config.p:
        report = collision_experiment(p, config.trials, seed=rng, n=n)
        row = {
            "p": p,
            "trials": report.trials,
            "collisions": report.collisions,
            "estimate": report.estimate,
            "expected": report.expected,
            "sigma": report.sigma,
            "exhaustive": None,
        }
        report_checks = report.checks()
        if p**4 <= BRUTE_FORCE_GUARD:
            exact = exhaustive_collision_probability(p, q=rng.integers(0, p, size=n))
            row["exhaustive"] = str(exact)
            report_checks["exhaustive_is_1_over_p"] = exact == Fraction(1, p)
        rows += _rows_for(config, n, n, [row])
        checks.update(_prefixed(report_checks, p))
    return rows, checks


def _hidden_coefficients(config, p, n, rng):
    if config.q is not None:
        return tuple(int(value) % p for value in config.q)
    return tuple(int(value) for value in rng.integers(0, p, size=n))


def run_simulate(config, rng):
    n = _degree(config) if config.q is None else len(config.q)
    rows, checks = [], {}
    for p in config.p:
        report = validate_dense_pipeline(_hidden_coefficients(config, p, n, rng), p)
        rows += _rows_for(config, n, n, [{
            "p": p,
            "q": list(report.q),
            "outcomes": report.outcomes,
            "off_block_residual": report.off_block_residual,
            "trace_error": report.trace_error,
            "reduced_state_error": report.reduced_state_error,
            "detection_error": report.detection_error,
            "distribution_error": report.distribution_error,
            "completion_error": report.completion_error,
            "solver_mismatches": report.solver_mismatches,
        }])
        checks.update(_prefixed(report.checks(), p))
    return rows, checks


def run_end_to_end(config, rng):
    n = _degree(config) if config.q is None else len(config.q)
    rows, checks = [], {}
    for p in config.p:
        black_box = BlackBox(p, _hidden_coefficients(config, p, n, rng), rng=rng)
        report = run_algorithm(black_box, config.repetitions, seed=rng, k=config.copies)
        rows += _rows_for(config, n, report.k, [{
            "p": p,
            "q": list(black_box.q),
            "repetitions": report.repetitions,
            "successes": report.successes,
            "success_rate": report.success_rate,
            "expected": report.expected,
            "sigma": report.sigma,
            "queries": report.queries,
            "transcript": [[list(x), list(q_hat), success]
                           for _, x, q_hat, success in report.transcript()],
        }])
        checks.update(_prefixed(report.checks(), p))
    return rows, checks


_RUNNERS = {
    "solve": run_solve,
    "success": run_success,
    "bounds": run_bounds,
    "verify-appendix": run_verify_appendix,
    "verify-eta": run_verify_eta,
    "fidelity": run_fidelity,
    "collision": run_collision,
    "simulate": run_simulate,
    "end-to-end": run_end_to_end,
}


def _plain(value):
    """JSON-compatible python value."""
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, Fraction):
        return str(value)
    return value


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.12g" % value
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"), sort_keys=True)
    return str(value)


def format_csv(rows):
    """Header plus one line per row, LF line endings."""
    columns = []
    for row in rows:
        for key in row:
            if key not in columns and key not in _TRAILING_COLUMNS:
                columns.append(key)
    columns = [c for c in _LEADING_COLUMNS if c in columns] + [
        c for c in columns if c not in _LEADING_COLUMNS
    ] + _TRAILING_COLUMNS
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(column)) for column in columns])
    return buffer.getvalue()


def format_json(config, rows, checks):
    document = {
        "config": _plain(config.record()),
        "results": _plain(rows),
        "checks": _plain(checks),
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def dispatch(config):
    """Runs one configured command.

    :param config: validated RunConfig
    :return: (rows, checks, rendered output text)
    """
    rng = make_rng(config.seed)
    logger.info("running %s with p=%s seed=%d", config.command, list(config.p), config.seed)
    rows, checks = _RUNNERS[config.command](config, rng)
    rows = [_plain(row) for row in rows]
    if config.format == "csv":
        text = format_csv(rows)
    else:
        text = format_json(config, rows, checks)
    return rows, checks, text


def _write(text, output):
    if output is None:
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="\n") as file:
            file.write(text)
    except OSError as error:
        raise ConfigError("could not write output %s: %s" % (output, error))


def _failure(error, message, exit_code):
    record = {"error": error, "message": message, "exit_code": exit_code}
    sys.stderr.write(json.dumps(record, sort_keys=True) + "\n")
    return exit_code


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", help="comma separated odd primes, e.g. 5,7,11")
    common.add_argument("--degree", type=int, help="degree n of the hidden polynomial")
    common.add_argument("--copies", type=int, help="number of copies k, defaults to n")
    common.add_argument("--variables", type=int, help="number of variables m (bounds)")
    common.add_argument("--seed", type=int, help="seed, falls back to HPFG_SEED")
    common.add_argument("--trials", type=int, help="Monte Carlo trials")
    common.add_argument("--repetitions", type=int, help="end-to-end repetitions")
    common.add_argument("--epsilon", type=float, help="allowed error probability (bounds)")
    common.add_argument("--output", help="output file, standard output when omitted")
    common.add_argument("--format", choices=_FORMATS)
    common.add_argument("--mode", choices=["full", "paper_restricted"])
    common.add_argument("--jobs", type=int, help="worker processes")
    common.add_argument("--config", help="YAML file overriding the default configuration")
    common.add_argument(
        "--x", help="coefficient tuple x, e.g. 1,2 or -1,2; entries are reduced mod p"
    )
    common.add_argument("--w", help="right-hand side w, e.g. 0,4; entries are reduced mod p")
    common.add_argument("--q", help="hidden coefficients q_1,...,q_n, reduced mod p")
    common.add_argument(
        "--q-tilde", dest="q_tilde", help="second polynomial (fidelity), reduced mod p"
    )
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true")
    verbosity.add_argument("--quiet", action="store_true")

    parser = argparse.ArgumentParser(
        prog="hpfg",
        description="Exact analysis and simulation of hidden polynomial function graphs.",
    )
    parser.add_argument("--version", action="version", version=hpfg.__version__)
    subparsers = parser.add_subparsers(dest="command")
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common])
    return parser


_TUPLE_OPTIONS = ("--p", "--x", "--w", "--q", "--q-tilde")


def _join_negative_values(argv):
    """Rewrites '--x -1,2' to '--x=-1,2' so argparse does not read -1,2 as a flag."""
    joined = []
    index = 0
    while index < len(argv):
        item = argv[index]
        following = argv[index + 1] if index + 1 < len(argv) else None
        negative = following is not None and following[:1] == "-" and following[1:2].isdigit()
        if item in _TUPLE_OPTIONS and negative:
            joined.append("%s=%s" % (item, following))
            index += 2
        else:
            joined.append(item)
            index += 1
    return joined


def main(argv=None):
    """Entry point of the hpfg command.

    :param argv: argument list, sys.argv[1:] when None
    :return: exit code
    """
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_CONFIG
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )
    overrides = {
        key: value
        for key, value in vars(args).items()
        if key not in ("verbose", "quiet", "config")
    }
    try:
        config = load_run_config(overrides, config_path=args.config)
        _, checks, text = dispatch(config)
        _write(text, config.output)
    except GuardExceededError as error:
        return _failure("GuardExceededError", str(error), EXIT_GUARD)
    except CheckFailedError as error:
        return _failure("CheckFailedError", str(error), EXIT_CHECK)
    except ValueError as error:
        return _failure(error.__class__.__name__, str(error), EXIT_CONFIG)
    failed = sorted(name for name, passed in checks.items() if not passed)
    if failed:
        return _failure("CheckFailedError", "failed checks: %s" % ", ".join(failed), EXIT_CHECK)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
