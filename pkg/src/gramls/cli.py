"""Command-line front end: CSV in, plain tables or CSV out.

Subcommands
-----------
fit        coefficients, residual sum of squares, degrees of freedom
coeff      a single coefficient via the projector-chain route
pinv       left generalized inverse as CSV
precision  one element of (X^T X)^{-1}, or the full matrix as CSV
wfit       weighted coefficients (dense symmetric or diagonal weights)
epistasis  all-pairs interaction scan, optional permutation p-values
verify     cross-check the main solvers against the elimination oracle

Columns are selected by header name when the file has a header row, else by
1-based index; a ``^k`` suffix derives an elementwise power of a column
(e.g. ``age^2``).  All numbers are printed with shortest round-trip
formatting, so identical inputs give byte-identical output.

Exit codes: 0 success, 2 parse/dimension errors, 3 rank-deficient or
singular systems.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import IO

import numpy as np

from .epistasis import pairwise_scan
from .errors import (
    CsvFormatError,
    DimensionError,
    InsufficientRowsError,
    InsufficientSamplesError,
    NotSymmetricError,
    RankDeficientError,
    SingularSystemError,
)
from .io import format_value, read_matrix_csv, write_matrix_csv
from .matrix import Matrix, prepend_ones
from .oracle import gauss_solve_normal_equations
from .orthogonal import sgso
from .pseudoinverse import generalized_inverse, precision_element, precision_matrix
from .solve import coeff_single, fit, lu_upper_augmented, solve_all
from .weighted import diagonal_weights, weighted_coeffs, weighted_sgso


@dataclass
class RunConfig:
    command: str
    input_path: str
    header: bool = True
    output: str | None = None
    pivot_floor: float = 1e-12
    response: str | None = None
    predictors: str | None = None
    intercept: bool = False
    index: int | None = None
    i: int | None = None
    j: int | None = None
    full: bool = False
    weights_path: str | None = None
    pheno: str | None = None
    n_perm: int = 0
    seed: int = 0
    threads: int = 1


def _resolve_base(token: str, names: list[str] | None, width: int) -> int:
    """0-based column index for a name or 1-based index token."""
    if names is not None and token in names:
        return names.index(token)
    try:
        idx = int(token)
    except ValueError:
        available = ", ".join(names) if names else f"1..{width}"
        raise ValueError(f"column {token!r} not found (available: {available})")
    if not 1 <= idx <= width:
        raise ValueError(f"column index {idx} out of range 1..{width}")
    return idx - 1


def _column_label(token: str, names: list[str] | None) -> str:
    if names is not None:
        return token
    base, sep, power = token.partition("^")
    return f"col{base}{sep}{power}"


def _select_predictors(
    data: Matrix, names: list[str] | None, tokens_arg: str | None, exclude: int | None
) -> tuple[list[str], Matrix]:
    """Build (labels, matrix) from a comma-separated predictor selection.

    Without a selection, every column except ``exclude`` is used in file
    order.  A ``base^k`` token takes the elementwise k-th power of a column.
    """
    width = data.shape[1]
    if tokens_arg is None:
        cols = [k for k in range(width) if k != exclude]
        if names is not None:
            labels = [names[k] for k in cols]
        else:
            labels = [f"col{k + 1}" for k in cols]
        return labels, np.asfortranarray(data[:, cols])

    tokens = [t.strip() for t in tokens_arg.split(",") if t.strip()]
    if not tokens:
        raise ValueError("empty predictor selection")
    columns = []
    labels = []
    for token in tokens:
        if names is not None and token in names:
            base, power = token, 1
        else:
            base, sep, exponent = token.partition("^")
            if sep:
                try:
                    power = int(exponent)
                except ValueError:
                    raise ValueError(f"bad power in predictor token {token!r}")
                if power < 1:
                    raise ValueError(f"power must be >= 1 in token {token!r}")
            else:
                power = 1
            base = base.strip()
        k = _resolve_base(base, names, width)
        col = data[:, k] if power == 1 else data[:, k] ** power
        columns.append(col)
        labels.append(_column_label(token, names))
    return labels, np.asfortranarray(np.column_stack(columns))


def _design(
    config: RunConfig, need_response: bool
) -> tuple[list[str], Matrix, np.ndarray | None]:
    names, data = read_matrix_csv(config.input_path, header=config.header)
    response = None
    exclude = None
    if need_response:
        if config.response is None:
            raise ValueError("a --response column is required")
        exclude = _resolve_base(config.response, names, data.shape[1])
        response = data[:, exclude]
    labels, X = _select_predictors(data, names, config.predictors, exclude)
    if config.intercept:
        labels = ["intercept"] + labels
        X = prepend_ones(X)
    return labels, X, response


def _relabel(err: RankDeficientError, labels: list[str]) -> RankDeficientError:
    if 0 <= err.index < len(labels):
        new = RankDeficientError(err.index, err.pivot, err.floor)
        new.args = (f"column '{labels[err.index]}': {err.args[0]}",)
        return new
    return err


@contextmanager
def _open_output(config: RunConfig, stdout: IO[str]):
    if config.output is None:
        yield stdout
    else:
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _cmd_fit(config: RunConfig, stdout: IO[str]) -> None:
    labels, X, y = _design(config, need_response=True)
    try:
        result = fit(X, y, intercept=False, pivot_floor=config.pivot_floor)
    except RankDeficientError as err:
        raise _relabel(err, labels)
    with _open_output(config, stdout) as out:
        for label, b in zip(labels, result.beta):
            out.write(f"beta[{label}]\t{format_value(b)}\n")
        out.write(f"rss\t{format_value(result.rss)}\n")
        out.write(f"dof\t{result.dof}\n")


def _cmd_coeff(config: RunConfig, stdout: IO[str]) -> None:
    labels, X, y = _design(config, need_response=True)
    if config.index is None:
        raise ValueError("--index is required")
    if not 1 <= config.index <= len(labels):
        raise ValueError(f"--index {config.index} out of range 1..{len(labels)}")
    try:
        B = sgso(X, pivot_floor=config.pivot_floor)
    except RankDeficientError as err:
        raise _relabel(err, labels)
    value = coeff_single(config.index - 1, X, y, B)
    with _open_output(config, stdout) as out:
        out.write(f"{format_value(value)}\n")


def _cmd_pinv(config: RunConfig, stdout: IO[str]) -> None:
    labels, X, _ = _design(config, need_response=False)
    try:
        P = generalized_inverse(X, pivot_floor=config.pivot_floor)
    except RankDeficientError as err:
        raise _relabel(err, labels)
    with _open_output(config, stdout) as out:
        write_matrix_csv(out, P.rows)


def _cmd_precision(config: RunConfig, stdout: IO[str]) -> None:
    labels, X, _ = _design(config, need_response=False)
    p = X.shape[1]
    try:
        if config.full:
            S = precision_matrix(generalized_inverse(X, pivot_floor=config.pivot_floor))
            with _open_output(config, stdout) as out:
                write_matrix_csv(out, S)
            return
        if config.i is None or config.j is None:
            raise ValueError("need --i and --j (or --full)")
        if not (1 <= config.i <= p and 1 <= config.j <= p):
            raise ValueError(f"indices ({config.i}, {config.j}) out of range 1..{p}")
        value = precision_element(
            config.i - 1, config.j - 1, X, pivot_floor=config.pivot_floor
        )
    except RankDeficientError as err:
        raise _relabel(err, labels)
    with _open_output(config, stdout) as out:
        out.write(f"{format_value(value)}\n")


def _cmd_wfit(config: RunConfig, stdout: IO[str]) -> None:
    labels, X, y = _design(config, need_response=True)
    if config.weights_path is None:
        raise ValueError("--weights is required")
    _, Wdata = read_matrix_csv(config.weights_path, header=config.header)
    if Wdata.shape[1] == 1:
        W = diagonal_weights(Wdata[:, 0])
    else:
        W = Wdata
    try:
        B = weighted_sgso(X, W, pivot_floor=config.pivot_floor)
    except RankDeficientError as err:
        raise _relabel(err, labels)
    beta = weighted_coeffs(X, y, B)
    with _open_output(config, stdout) as out:
        for label, b in zip(labels, beta):
            out.write(f"beta[{label}]\t{format_value(b)}\n")


def _fmt_opt(x: float | None) -> str:
    return "NA" if x is None else format_value(x)


def _cmd_epistasis(config: RunConfig, stdout: IO[str]) -> None:
    names, data = read_matrix_csv(config.input_path, header=config.header)
    if config.pheno is None:
        raise ValueError("a --pheno column is required")
    ph = _resolve_base(config.pheno, names, data.shape[1])
    loci = [k for k in range(data.shape[1]) if k != ph]
    if len(loci) < 2:
        raise DimensionError("need at least 2 locus columns besides the phenotype")
    G = np.asfortranarray(data[:, loci])
    stats = pairwise_scan(
        G,
        data[:, ph],
        n_perm=config.n_perm,
        seed=config.seed,
        pivot_floor=config.pivot_floor,
        threads=config.threads,
    )
    columns = ["i", "j", "beta3", "tstat", "dof"]
    if config.n_perm > 0:
        columns.append("p_perm")
    with _open_output(config, stdout) as out:
        out.write(",".join(columns) + "\n")
        for s in stats:
            row = [str(s.i + 1), str(s.j + 1), _fmt_opt(s.beta3), _fmt_opt(s.tstat), str(s.dof)]
            if config.n_perm > 0:
                row.append(_fmt_opt(s.p_perm))
            out.write(",".join(row) + "\n")


def _normwise_max_rel(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(float(np.max(np.abs(b))), 1e-30)
    return float(np.max(np.abs(a - b))) / scale


def _cmd_verify(config: RunConfig, stdout: IO[str]) -> None:
    labels, X, y = _design(config, need_response=True)
    try:
        oracle = gauss_solve_normal_equations(X, y).beta
        F = lu_upper_augmented(X, y, pivot_floor=config.pivot_floor)
        main_beta = solve_all(F)
        B = sgso(X, pivot_floor=config.pivot_floor)
        singles = np.array([coeff_single(k, X, y, B) for k in range(X.shape[1])])
        pinv_beta = generalized_inverse(X, pivot_floor=config.pivot_floor).rows @ y
    except RankDeficientError as err:
        raise _relabel(err, labels)
    discrepancies = {
        "solve_all_vs_oracle": _normwise_max_rel(main_beta, oracle),
        "coeff_single_vs_oracle": _normwise_max_rel(singles, oracle),
        "pinv_times_y_vs_oracle": _normwise_max_rel(pinv_beta, oracle),
    }
    with _open_output(config, stdout) as out:
        for key, value in discrepancies.items():
            out.write(f"{key}\t{format_value(value)}\n")
        out.write(f"max_rel_discrepancy\t{format_value(max(discrepancies.values()))}\n")


_COMMANDS = {
    "fit": _cmd_fit,
    "coeff": _cmd_coeff,
    "pinv": _cmd_pinv,
    "precision": _cmd_precision,
    "wfit": _cmd_wfit,
    "epistasis": _cmd_epistasis,
    "verify": _cmd_verify,
}


def run(config: RunConfig, stdout: IO[str] = sys.stdout, stderr: IO[str] = sys.stderr) -> int:
    """Execute one command; returns the process exit code."""
    try:
        _COMMANDS[config.command](config, stdout)
        return 0
    except (RankDeficientError, SingularSystemError) as err:
        print(f"error: {err}", file=stderr)
        return 3
    except (
        CsvFormatError,
        DimensionError,
        NotSymmetricError,
        InsufficientRowsError,
        InsufficientSamplesError,
        ValueError,
        OSError,
    ) as err:
        print(f"error: {err}", file=stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gramls",
        description="Closed-form least squares from a square-root-free orthogonal basis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="input CSV file")
    common.add_argument(
        "--no-header", action="store_true",
        help="input has no header row; select columns by 1-based index",
    )
    common.add_argument("--output", default=None, help="output file (default stdout)")
    common.add_argument(
        "--pivot-floor", type=float, default=1e-12,
        help="relative rank tolerance for pivots (default 1e-12)",
    )

    design = argparse.ArgumentParser(add_help=False)
    design.add_argument(
        "--predictors", default=None,
        help="comma-separated columns (name or 1-based index, optional ^k power); "
        "default: all non-response columns",
    )
    design.add_argument("--intercept", action="store_true", help="prepend a ones column")

    response = argparse.ArgumentParser(add_help=False)
    response.add_argument("--response", required=True, help="response column")

    p = sub.add_parser("fit", parents=[common, design, response],
                       help="all coefficients, rss, dof")
    p = sub.add_parser("coeff", parents=[common, design, response],
                       help="a single coefficient")
    p.add_argument("--index", type=int, required=True,
                   help="1-based coefficient index (intercept counts when present)")
    sub.add_parser("pinv", parents=[common, design],
                   help="left generalized inverse as CSV")
    p = sub.add_parser("precision", parents=[common, design],
                       help="precision-matrix element(s)")
    p.add_argument("--i", type=int, default=None, help="1-based row index")
    p.add_argument("--j", type=int, default=None, help="1-based column index")
    p.add_argument("--full", action="store_true", help="write the whole matrix as CSV")
    p = sub.add_parser("wfit", parents=[common, design, response],
                       help="weighted coefficients")
    p.add_argument("--weights", required=True,
                   help="CSV with an n-by-n symmetric matrix, or one column of diagonal weights")
    p = sub.add_parser("epistasis", parents=[common],
                       help="all-pairs interaction scan")
    p.add_argument("--pheno", required=True, help="phenotype column")
    p.add_argument("--perms", type=int, default=0, help="permutations per pair (default 0)")
    p.add_argument("--seed", type=int, default=0, help="permutation seed (default 0)")
    p.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")
    sub.add_parser("verify", parents=[common, design, response],
                   help="compare the main solvers against the elimination oracle")
    return parser


def config_from_args(argv: list[str] | None = None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        input_path=ns.input,
        header=not ns.no_header,
        output=ns.output,
        pivot_floor=ns.pivot_floor,
        response=getattr(ns, "response", None),
        predictors=getattr(ns, "predictors", None),
        intercept=getattr(ns, "intercept", False),
        index=getattr(ns, "index", None),
        i=getattr(ns, "i", None),
        j=getattr(ns, "j", None),
        full=getattr(ns, "full", False),
        weights_path=getattr(ns, "weights", None),
        pheno=getattr(ns, "pheno", None),
        n_perm=getattr(ns, "perms", 0),
        seed=getattr(ns, "seed", 0),
        threads=getattr(ns, "threads", 1),
    )


def main(argv: list[str] | None = None) -> int:
    return run(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
