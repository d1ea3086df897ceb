import logging
from pathlib import Path
from typing import Callable, Dict, List

import numpy as np

from mlcheck.config import Config
from mlcheck.errors import UsageError
from mlcheck.messages import Messages
from mlcheck.models import Command, Identity, LogisticProblem, RunConfig
from mlcheck.services.identity_lab import coeff_mismatch, coeff_ratio, lemma5_lhs_rhs, scan_gap
from mlcheck.services.logistic_solver import (
    compare_west_vs_reference,
    fabm_solve,
    west_residual,
)
from mlcheck.services.mittag_leffler import mittag_leffler
from mlcheck.store import ReportStore

logger = logging.getLogger(__name__)

COEFF_GRID = [round(0.01 * i, 2) for i in range(1, 101)]

GAP_COLUMNS = ['t', 'lhs', 'rhs', 'gap']


def _say(text: str) -> None:
    print(text)


def _csv_name(command: str, alpha: float, tag: str = '') -> str:
    middle = f"_{tag}" if tag else ''
    return f"{command}{middle}_alpha{alpha:g}.csv"


def _svg_name(csv_name: str) -> str:
    return csv_name[:-len('.csv')] + '.svg'


def cmd_ml_eval(cfg: RunConfig, store: ReportStore) -> List[Path]:
    """E_{alpha,beta}(z) tabulated on z = -t for every alpha"""
    files = []
    z = -cfg.grid().points()
    for alpha in cfg.alphas:
        values = np.array([mittag_leffler(alpha, float(zi), beta=cfg.beta) for zi in z])
        name = _csv_name(Command.ML_EVAL.value, alpha)
        files.append(store.write_csv(name, ['z', 'value'], np.column_stack([z, values])))
        _say(Messages.ML_EVAL["done"](alpha, cfg.beta, len(z), files[-1]))

        if cfg.emit_svg:
            label = f"E_{alpha:g},{cfg.beta:g}(z)"
            files.append(store.write_svg(_svg_name(name), z, [(label, values, '-')], xlabel='z'))
    return files


def cmd_coeff_check(cfg: RunConfig, store: ReportStore) -> List[Path]:
    """Gamma(2a+1)/(4 Gamma(a+1)^2) against 1/2 over the alpha list, plus a_n vs b_n"""
    alphas = sorted(set(cfg.alphas))
    if len(alphas) < 2:
        raise UsageError(Messages.COEFF_CHECK["too_few"])

    ratios = np.array([coeff_ratio(alpha) for alpha in alphas])
    deficits = 0.5 - ratios
    table = np.column_stack([alphas, ratios, deficits])
    path = store.write_csv(f"{Command.COEFF_CHECK.value}.csv", ['alpha', 'ratio', 'deficit'], table)
    files = [path]
    _say(Messages.COEFF_CHECK["done"](len(alphas), path))

    below_one = [i for i, alpha in enumerate(alphas) if 0 < alpha < 1]
    if below_one:
        worst = min(below_one, key=lambda i: deficits[i])
        _say(Messages.COEFF_CHECK["min_deficit"](alphas[worst], deficits[worst]))
    if 1.0 in alphas:
        _say(Messages.COEFF_CHECK["at_one"](deficits[alphas.index(1.0)]))

    blocks = []
    for alpha in alphas:
        rows = coeff_mismatch(alpha, cfg.n_max)
        blocks.append(np.column_stack([np.full(len(rows), alpha), rows]))
    mismatch = store.write_csv('coeff_mismatch.csv', ['alpha', 'n', 'a', 'b', 'diff'], np.vstack(blocks))
    files.append(mismatch)
    _say(Messages.COEFF_CHECK["mismatch"](mismatch))

    if cfg.emit_svg:
        files.append(store.write_svg(
            f"{Command.COEFF_CHECK.value}.svg", np.array(alphas),
            [('ratio', ratios, '-'), ('1/2', np.full(len(alphas), 0.5), '--')],
            xlabel='alpha',
        ))
    return files


def _write_gap_report(cfg: RunConfig, store: ReportStore, report, name: str) -> List[Path]:
    files = [store.write_csv(name, GAP_COLUMNS, report.columns())]
    if cfg.emit_svg:
        table = report.columns()
        files.append(store.write_svg(
            _svg_name(name), table[:, 0],
            [('lhs', table[:, 1], '-'), ('rhs', table[:, 2], '--')],
            title=f"{report.identity}, alpha={report.alpha:g}",
        ))
    return files


def cmd_identity_check(cfg: RunConfig, store: ReportStore) -> List[Path]:
    files = []
    grid = cfg.grid()
    for alpha in cfg.alphas:
        report = scan_gap(alpha, cfg.k, grid, cfg.identity, workers=Config.WORKERS)
        name = _csv_name(Command.IDENTITY_CHECK.value, alpha, cfg.identity.value)
        files.extend(_write_gap_report(cfg, store, report, name))
        _say(Messages.IDENTITY_CHECK["done"](cfg.identity.value, alpha, report.sup_gap, report.argmax_t, name))
    return files


def cmd_semigroup_check(cfg: RunConfig, store: ReportStore) -> List[Path]:
    """E(a (2t)^alpha) vs E(a t^alpha)^2 with a = -k^alpha"""
    files = []
    grid = cfg.grid()
    for alpha in cfg.alphas:
        report = scan_gap(alpha, cfg.k, grid, Identity.SEMIGROUP, workers=Config.WORKERS)
        name = _csv_name(Command.SEMIGROUP_CHECK.value, alpha)
        files.extend(_write_gap_report(cfg, store, report, name))
        _say(Messages.IDENTITY_CHECK["done"](Identity.SEMIGROUP.value, alpha, report.sup_gap,
                                             report.argmax_t, name))
    return files


def cmd_lemma_check(cfg: RunConfig, store: ReportStore) -> List[Path]:
    """(n+1) E(-n x) against sum_j E(-(n-j) x) E(-j x) for n = 0..n_max"""
    files = []
    times = cfg.grid().points()
    for alpha in cfg.alphas:
        rows = []
        for n in range(cfg.n_max + 1):
            for t in times:
                lhs, rhs = lemma5_lhs_rhs(n, alpha, cfg.k, float(t))
                rows.append((n, t, lhs, rhs, lhs - rhs))
        table = np.array(rows, dtype=float)
        name = _csv_name(Command.LEMMA_CHECK.value, alpha)
        files.append(store.write_csv(name, ['n', 't', 'lhs', 'rhs', 'residual'], table))
        _say(Messages.LEMMA_CHECK["done"](alpha, cfg.n_max, float(np.max(np.abs(table[:, 4]))), name))

        if cfg.emit_svg:
            curves = [
                (f"n={n}", table[table[:, 0] == n, 4], '-') for n in range(cfg.n_max + 1)
            ]
            files.append(store.write_svg(_svg_name(name), times, curves, ylabel='residual'))
    return files


def cmd_solve_logistic(cfg: RunConfig, store: ReportStore) -> List[Path]:
    """PECE solution, with the West series and its difference when u0 > 1/2"""
    files = []
    grid = cfg.grid()
    for alpha in cfg.alphas:
        problem = LogisticProblem(alpha=alpha, k=cfg.k, u0=cfg.u0)
        name = _csv_name(Command.SOLVE_LOGISTIC.value, alpha)

        if problem.u0 > 0.5:
            report = compare_west_vs_reference(problem, grid)
            table = report.columns()
            # t, u_fabm, u_west, diff
            columns = np.column_stack([table[:, 0], table[:, 2], table[:, 1], table[:, 3]])
            path = store.write_csv(name, ['t', 'u_fabm', 'u_west', 'diff'], columns)
            u_end = table[-1, 2]
            curves = [('u_fabm', table[:, 2], '-'), ('u_west', table[:, 1], '--')]
        else:
            solution = fabm_solve(problem, grid)
            columns = np.column_stack([grid.points(), solution.array])
            path = store.write_csv(name, ['t', 'u_fabm'], columns)
            u_end = solution.values[-1]
            curves = [('u_fabm', solution.array, '-')]
            report = None

        files.append(path)
        _say(Messages.SOLVE_LOGISTIC["done"](alpha, u_end, path))
        if report is not None:
            _say(Messages.SOLVE_LOGISTIC["compare"](report.sup_gap))
        else:
            _say(Messages.SOLVE_LOGISTIC["no_series"](problem.u0))

        if cfg.emit_svg:
            files.append(store.write_svg(_svg_name(name), grid.points(), curves, ylabel='u'))
    return files


def cmd_west_residual(cfg: RunConfig, store: ReportStore) -> List[Path]:
    """D^alpha u - k^alpha u (1 - u) for the West series on the grid"""
    files = []
    grid = cfg.grid()
    for alpha in cfg.alphas:
        problem = LogisticProblem(alpha=alpha, k=cfg.k, u0=cfg.u0)
        report = west_residual(problem, grid)
        name = _csv_name(Command.WEST_RESIDUAL.value, alpha)
        files.append(store.write_csv(name, ['t', 'u_west', 'lhs', 'rhs', 'residual'], report.columns()))
        _say(Messages.WEST_RESIDUAL["done"](alpha, report.sup_residual, report.argmax_t, name))

        if cfg.emit_svg:
            table = report.columns()
            files.append(store.write_svg(
                _svg_name(name), table[:, 0],
                [('D^alpha u', table[:, 2], '-'), ('k^alpha u(1-u)', table[:, 3], '--')],
            ))
    return files


def cmd_figure1(cfg: RunConfig, store: ReportStore) -> List[Path]:
    """E(-2 k^a t^a) and E(-k^a t^a)^2 for every alpha, one CSV each and one combined plot"""
    files = []
    grid = cfg.grid()
    curves = []
    for alpha in cfg.alphas:
        report = scan_gap(alpha, cfg.k, grid, Identity.EQ6, workers=Config.WORKERS)
        name = _csv_name(Command.FIGURE1.value, alpha)
        files.append(store.write_csv(name, GAP_COLUMNS, report.columns()))
        _say(Messages.FIGURE1["done"](alpha, report.sup_gap, report.argmax_t, name))

        table = report.columns()
        curves.append((f"E(-2x), alpha={alpha:g}", table[:, 1], '-'))
        curves.append((f"E(-x)^2, alpha={alpha:g}", table[:, 2], '--'))

    if cfg.emit_svg:
        path = store.write_svg(f"{Command.FIGURE1.value}.svg", grid.points(), curves)
        files.append(path)
        _say(Messages.FIGURE1["svg"](path))
    return files


COMMANDS: Dict[Command, Callable[[RunConfig, ReportStore], List[Path]]] = {
    Command.ML_EVAL: cmd_ml_eval,
    Command.COEFF_CHECK: cmd_coeff_check,
    Command.IDENTITY_CHECK: cmd_identity_check,
    Command.LEMMA_CHECK: cmd_lemma_check,
    Command.SEMIGROUP_CHECK: cmd_semigroup_check,
    Command.SOLVE_LOGISTIC: cmd_solve_logistic,
    Command.WEST_RESIDUAL: cmd_west_residual,
    Command.FIGURE1: cmd_figure1,
}
