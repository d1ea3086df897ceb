import numpy as np
import pytest
from pytest import approx

from mlcheck.main import EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_USAGE, build_parser, config_from_args, run
from mlcheck.models import Command, Identity
from mlcheck.services.run_logger import RunLogger
from mlcheck.store import ReportStore


def _run(out, *argv):
    run_logger = RunLogger()
    code = run([*argv, '--out', str(out)], run_logger=run_logger)
    return code, run_logger


def test_defaults():
    cfg = config_from_args(build_parser().parse_args(['figure1']))
    assert cfg.command is Command.FIGURE1
    assert cfg.alphas == [0.9, 0.75, 0.5, 0.25]
    assert cfg.identity is Identity.REMARK
    assert cfg.grid().n_steps == 500

    cfg = config_from_args(build_parser().parse_args(['coeff-check']))
    assert len(cfg.alphas) == 100
    assert cfg.alphas[-1] == 1.0


def test_figure1_writes_one_csv_per_alpha(tmp_path):
    out = tmp_path / 'out'
    code, run_logger = _run(out, 'figure1', '--steps', '50', '--alpha', '0.5', '--alpha', '1')
    assert code == EXIT_OK
    assert run_logger.runs[-1]['success'] is True
    assert len(run_logger.runs[-1]['files']) == 2

    store = ReportStore(str(out))
    header, data = store.read_csv('figure1_alpha0.5.csv')
    assert header == ['t', 'lhs', 'rhs', 'gap']
    assert data.shape == (51, 4)
    assert data[0, 3] == 0.0
    assert np.max(np.abs(data[:, 3])) > 0.07

    _, exponential = store.read_csv('figure1_alpha1.csv')
    assert np.max(np.abs(exponential[:, 3])) <= 1e-11


def test_figure1_output_is_reproducible(tmp_path):
    first, second = tmp_path / 'a', tmp_path / 'b'
    argv = ('figure1', '--steps', '40', '--alpha', '0.75', '--svg')
    assert _run(first, *argv)[0] == EXIT_OK
    assert _run(second, *argv)[0] == EXIT_OK
    for name in ('figure1_alpha0.75.csv', 'figure1.svg'):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_figure1_default_run_is_deterministic(tmp_path):
    first, second = tmp_path / 'a', tmp_path / 'b'
    assert _run(first, 'figure1')[0] == EXIT_OK
    assert _run(second, 'figure1')[0] == EXIT_OK
    names = [f'figure1_alpha{alpha}.csv' for alpha in ('0.9', '0.75', '0.5', '0.25')]
    assert sorted(p.name for p in first.iterdir()) == sorted(names)
    for name in names:
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_coeff_check(tmp_path):
    out = tmp_path / 'out'
    code, _ = _run(out, 'coeff-check', '--alpha', '0.5', '--alpha', '1', '--n-max', '3')
    assert code == EXIT_OK
    store = ReportStore(str(out))
    header, data = store.read_csv('coeff-check.csv')
    assert header == ['alpha', 'ratio', 'deficit']
    assert data[0, 2] == approx(0.5 - 1.0 / np.pi, abs=1e-12)
    assert abs(data[1, 2]) <= 1e-13

    header, mismatch = store.read_csv('coeff_mismatch.csv')
    assert header == ['alpha', 'n', 'a', 'b', 'diff']
    assert mismatch.shape == (8, 5)


@pytest.mark.parametrize("argv, files", [
    (('identity-check', '--identity', 'eq6', '--alpha', '0.5'), ['identity-check_eq6_alpha0.5.csv']),
    (('semigroup-check', '--alpha', '0.5'), ['semigroup-check_alpha0.5.csv']),
    (('lemma-check', '--alpha', '0.5', '--n-max', '2'), ['lemma-check_alpha0.5.csv']),
    (('solve-logistic', '--alpha', '0.5'), ['solve-logistic_alpha0.5.csv']),
    (('west-residual', '--alpha', '0.5'), ['west-residual_alpha0.5.csv']),
    (('ml-eval', '--alpha', '0.5', '--svg'), ['ml-eval_alpha0.5.csv', 'ml-eval_alpha0.5.svg']),
])
def test_commands_write_their_files(tmp_path, argv, files):
    out = tmp_path / 'out'
    code, run_logger = _run(out, *argv, '--steps', '20', '--t-max', '2')
    assert code == EXIT_OK
    assert sorted(p.name for p in out.iterdir()) == sorted(files)
    assert len(run_logger.runs[-1]['files']) == len(files)


def test_solve_logistic_columns(tmp_path):
    out = tmp_path / 'out'
    store = ReportStore(str(out))
    assert _run(out, 'solve-logistic', '--alpha', '0.5', '--steps', '20')[0] == EXIT_OK
    assert store.read_csv('solve-logistic_alpha0.5.csv')[0] == ['t', 'u_fabm', 'u_west', 'diff']

    assert _run(out, 'solve-logistic', '--alpha', '0.5', '--steps', '20', '--u0', '0.3')[0] == EXIT_OK
    header, data = store.read_csv('solve-logistic_alpha0.5.csv')
    assert header == ['t', 'u_fabm']
    assert data[0, 1] == 0.3


def test_solve_logistic_reference_cases(tmp_path):
    out = tmp_path / 'out'
    store = ReportStore(str(out))
    assert _run(out, 'solve-logistic', '--alpha', '1', '--u0', '0.5', '--steps', '5000')[0] == EXIT_OK
    _, data = store.read_csv('solve-logistic_alpha1.csv')
    exact = 0.5 / (0.5 + 0.5 * np.exp(-data[:, 0]))
    assert np.max(np.abs(data[:, 1] - exact)) <= 1e-4

    assert _run(out, 'solve-logistic', '--alpha', '0.5', '--u0', '1', '--steps', '50')[0] == EXIT_OK
    _, data = store.read_csv('solve-logistic_alpha0.5.csv')
    assert np.all(data[:, 1] == 1.0)


def test_west_residual_at_one(tmp_path):
    out = tmp_path / 'out'
    assert _run(out, 'west-residual', '--alpha', '0.5', '--t-max', '2', '--steps', '20')[0] == EXIT_OK
    header, data = ReportStore(str(out)).read_csv('west-residual_alpha0.5.csv')
    assert header == ['t', 'u_west', 'lhs', 'rhs', 'residual']
    assert data[10, 0] == approx(1.0)
    assert data[10, 4] == approx(-2.93e-3, abs=5e-4)


@pytest.mark.parametrize("argv", [
    ('bogus',),
    ('coeff-check', '--alpha', '0.5'),
    ('figure1', '--steps', 'abc'),
    ('figure1', '--steps', '0'),
    ('figure1', '--t-max', '-1'),
    ('solve-logistic', '--t-max', '0'),
])
def test_usage_errors(tmp_path, argv):
    assert _run(tmp_path / 'out', *argv)[0] == EXIT_USAGE


def test_output_path_is_a_file(tmp_path):
    blocker = tmp_path / 'taken'
    blocker.write_text('not a directory')
    code, run_logger = _run(blocker, 'figure1', '--steps', '10', '--alpha', '0.5')
    assert code == EXIT_IO
    assert run_logger.runs[-1]['success'] is False


@pytest.mark.parametrize("argv", [
    ('west-residual', '--alpha', '0.5', '--u0', '0.4'),
    ('ml-eval', '--alpha', '3'),
    ('figure1', '--alpha', '-0.5'),
])
def test_domain_errors(tmp_path, argv, capsys):
    code, run_logger = _run(tmp_path / 'out', *argv, '--steps', '10')
    assert code == EXIT_DOMAIN
    assert run_logger.runs[-1]['error_message']
    assert capsys.readouterr().err
