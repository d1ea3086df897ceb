"""
Run logging and report storage
"""

import logging
import time

import numpy as np
from pytest import raises

from mlcheck.services.run_logger import RunLogger


def test_successful_run_is_recorded(caplog):
    run_logger = RunLogger()
    with caplog.at_level(logging.INFO):
        entry = run_logger.log_run('figure1', {'k': 1.0}, ['out/figure1_alpha0.5.csv'], latency_ms=12)
    assert entry['success'] is True
    assert run_logger.runs == [entry]
    assert '✅ figure1' in caplog.text


def test_failed_run_is_recorded(caplog):
    run_logger = RunLogger()
    with caplog.at_level(logging.ERROR):
        entry = run_logger.log_run('west-residual', {}, success=False, error_message='diverges')
    assert entry['files'] == []
    assert '❌ west-residual failed' in caplog.text
    assert 'diverges' in caplog.text


def test_timed_measures_and_reraises():
    run_logger = RunLogger()
    with raises(ZeroDivisionError):
        with run_logger.timed() as clock:
            time.sleep(0.01)
            1 / 0
    assert clock['latency_ms'] >= 10

    with run_logger.timed() as clock:
        assert clock['latency_ms'] is None
    assert clock['latency_ms'] >= 0


def test_csv_layout(store):
    path = store.write_csv('table.csv', ['t', 'value'], np.array([[0.0, 1.0], [0.5, 1.0 / 3.0]]))
    text = path.read_text(encoding='utf-8')
    assert text.splitlines()[0] == 't,value'
    assert text.splitlines()[2] == '5.0000000000000000e-01,3.3333333333333331e-01'
    assert '\r' not in text

    header, data = store.read_csv('table.csv')
    assert header == ['t', 'value']
    assert data[1, 1] == 1.0 / 3.0


def test_csv_column_mismatch(store):
    with raises(ValueError):
        store.write_csv('bad.csv', ['t'], np.zeros((3, 2)))


def test_svg_is_written(store):
    x = np.linspace(0.0, 1.0, 11)
    path = store.write_svg('plot.svg', x, [('x^2', x * x, '-')], title='square')
    assert path.read_text(encoding='utf-8').lstrip().startswith('<?xml')
