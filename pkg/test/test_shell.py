# vim: tabstop=4 shiftwidth=4 softtabstop=4

# Copyright (c) 2026 The hcchar Authors
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.

import csv
import os

import click.testing
import pytest

import hcchar
from hcchar import characters
from hcchar import formats
from hcchar import polyring
from hcchar import shell
from hcchar import verify


@pytest.fixture()
def runner(temp_dir):
    return click.testing.CliRunner()


def _invoke(runner, args):
    return runner.invoke(shell.cli, args, obj={})


def test_cli():
    with pytest.raises(SystemExit):
        shell.main()


def test_version(runner):
    result = _invoke(runner, ['--version'])

    assert 0 == result.exit_code
    assert hcchar.__version__ in result.output


def test_char(runner):
    result = _invoke(runner, ['char', '--lambda', '4,2', '--mu', '3,3'])

    assert 0 == result.exit_code
    assert '4*q^4 - 16*q^3 + 28*q^2 - 16*q + 4\n' == result.output


@pytest.mark.parametrize('method', shell.METHOD_CHOICES)
def test_char_with_method(runner, method):
    args = ['char', '--lambda', '4,2,1', '--mu', '7', '--method', method]
    result = _invoke(runner, args)

    assert 0 == result.exit_code
    assert '0\n' == result.output


def test_char_with_even_class(runner):
    result = _invoke(runner, ['char', '--lambda', '3', '--mu', '2,1'])

    assert 0 == result.exit_code
    assert '4*q - 4\n' == result.output


def test_char_with_debug(runner):
    args = ['--debug', 'char', '--lambda', '3', '--mu', '3']
    result = _invoke(runner, args)

    assert 0 == result.exit_code
    assert 'DEBUG: char 3 3 took' in result.output


def test_char_weight_mismatch(runner):
    result = _invoke(runner, ['char', '--lambda', '3,1', '--mu', '3'])

    assert shell.EXIT_DOMAIN == result.exit_code
    assert '|lambda| = 4 differs from |mu| = 3' in result.output


def test_char_non_strict_lambda(runner):
    result = _invoke(runner, ['char', '--lambda', '2,2', '--mu', '3,1'])

    assert shell.EXIT_DOMAIN == result.exit_code


def test_char_odd_method_on_even_class(runner):
    args = ['char', '--lambda', '3,1', '--mu', '2,2', '--method', 'pieri']
    result = _invoke(runner, args)

    assert shell.EXIT_DOMAIN == result.exit_code


def test_char_arithmetic_failure(runner, mocker):
    mocker.patch(
        'hcchar.characters.character',
        side_effect=characters.NonIntegralError('not integral'))
    result = _invoke(runner, ['char', '--lambda', '3', '--mu', '3'])

    assert shell.EXIT_ARITHMETIC == result.exit_code
    assert 'not integral' in result.output


def test_char_uses_config_method(runner, temp_dir, mocker):
    temp_dir.join('hcchar.yml').write('method: pfaffian')
    spy = mocker.spy(characters, 'character')
    result = _invoke(runner, ['char', '--lambda', '3', '--mu', '3'])

    assert 0 == result.exit_code
    assert 'pfaffian' == spy.call_args[0][2]


def test_char_bad_config(runner, temp_dir):
    temp_dir.join('hcchar.yml').write('method: guess')
    result = _invoke(runner, ['char', '--lambda', '3', '--mu', '3'])

    assert shell.EXIT_DOMAIN == result.exit_code
    assert "Unknown method 'guess'" in result.output


def test_table(runner):
    result = _invoke(runner, ['table', '--n', '3'])
    rows = list(csv.reader(result.output.splitlines()))

    assert 0 == result.exit_code
    assert ['mu\\lambda', '3', '2,1'] == rows[0]
    assert ['1,1,1', '8', '4'] == rows[2]


@pytest.mark.parametrize('fmt', ['json', 'latex'])
def test_table_formats(runner, fmt):
    result = _invoke(runner, ['table', '--n', '3', '--format', fmt])

    assert 0 == result.exit_code
    assert formats.render(characters.char_table(3), fmt) == result.output


def test_table_with_jobs(runner):
    serial = _invoke(runner, ['table', '--n', '5'])
    parallel = _invoke(runner, ['table', '--n', '5', '--jobs', '2'])

    assert 0 == parallel.exit_code
    assert serial.output == parallel.output


def test_table_out(runner, temp_dir):
    path = temp_dir.join('table.csv').strpath
    result = _invoke(runner, ['table', '--n', '4', '--out', path])

    assert 0 == result.exit_code
    assert '' == result.output
    with open(path) as stream:
        assert stream.read().startswith('mu\\lambda,4,"3,1"\n')


def test_table_out_unwritable(runner, temp_dir):
    path = os.path.join(temp_dir.strpath, 'missing', 'table.csv')
    result = _invoke(runner, ['table', '--n', '3', '--out', path])

    assert shell.EXIT_IO == result.exit_code


def test_table_bad_weight(runner):
    result = _invoke(runner, ['table', '--n', '0'])

    assert shell.EXIT_DOMAIN == result.exit_code


def test_table_is_cached(runner, cache_dir, mocker):
    first = _invoke(runner, ['table', '--n', '4'])
    spy = mocker.spy(characters, 'char_table')
    second = _invoke(runner, ['table', '--n', '4'])

    assert os.path.isfile(os.path.join(cache_dir, 'table-4.json'))
    assert first.output == second.output
    assert 0 == spy.call_count


def test_table_cross_check_failure(runner, cache_dir, mocker):
    broken = characters.char_table(3)
    broken.cells[((3, ), (3, ))] = polyring.ZERO
    mocker.patch('hcchar.characters.char_table', return_value=broken)
    result = _invoke(runner, ['table', '--n', '3'])

    assert shell.EXIT_ARITHMETIC == result.exit_code
    assert not os.path.exists(os.path.join(cache_dir, 'table-3.json'))


@pytest.mark.parametrize('mu, nu, at_q, expected', [
    ('3', '3', '1', '6'),
    ('1,1', '1,1', '1', '8'),
    ('3', '1,1,1', '1', '0'),
    ('1', '1', None, '2'),
])
def test_sbtr(runner, mu, nu, at_q, expected):
    args = ['sbtr', '--mu', mu, '--nu', nu]
    if at_q is not None:
        args += ['--at-q', at_q]
    result = _invoke(runner, args)

    assert 0 == result.exit_code
    assert expected + '\n' == result.output


def test_sbtr_weight_mismatch(runner):
    result = _invoke(runner, ['sbtr', '--mu', '3', '--nu', '1,1'])

    assert shell.EXIT_DOMAIN == result.exit_code


def test_sbtr_bad_point(runner):
    args = ['sbtr', '--mu', '3', '--nu', '3', '--at-q', 'x']
    result = _invoke(runner, args)

    assert shell.EXIT_DOMAIN == result.exit_code


def test_verify(runner):
    args = ['verify', '--n-max', '3', '--suite', 'tables']
    result = _invoke(runner, args)

    assert 0 == result.exit_code
    assert 'PASS golden table n=3\n' == result.output


def test_verify_failure(runner, mocker):
    mocker.patch(
        'hcchar.verify.run_suite',
        return_value=[verify.Check('broken', False, 'detail')])
    result = _invoke(runner, ['verify'])

    assert shell.EXIT_VERIFY_FAILED == result.exit_code
    assert 'FAIL broken: detail' in result.output
