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

import fractions
import sys

import click

import hcchar
from hcchar import bitrace
from hcchar import cache
from hcchar import characters
from hcchar import config
from hcchar import formats
from hcchar import partitions
from hcchar import polyring
from hcchar import util
from hcchar import verify

EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_ARITHMETIC = 3
EXIT_IO = 4

METHOD_CHOICES = ('auto', ) + characters.METHODS


def main():
    """ hcchar - Hecke-Clifford characters and spin bitraces. """
    cli(obj={})


@click.group()
@click.option(
    '--config',
    default=config.DEFAULT_CONFIG_FILE,
    help='Path to config file.  Default hcchar.yml')
@click.option(
    '--debug/--no-debug',
    default=False,
    help='Enable or disable debug mode. Default is disabled.')
@click.version_option(version=hcchar.__version__)
@click.pass_context
def cli(ctx, config, debug):  # pragma: no cover
    ctx.obj['args'] = {}
    ctx.obj['args']['debug'] = debug
    ctx.obj['args']['config'] = config


def _fail(code, e):
    util.print_error(str(e))
    sys.exit(code)


def _guarded(func, *args, **kwargs):
    """ Run ``func``, mapping failures onto the documented exit codes. """
    try:
        return func(*args, **kwargs)
    except (ValueError, config.ParseError) as e:
        _fail(EXIT_DOMAIN, e)
    except ArithmeticError as e:
        _fail(EXIT_ARITHMETIC, e)
    except OSError as e:
        _fail(EXIT_IO, e)


def _settings(ctx):
    args = ctx.obj.get('args')

    return _guarded(config.config, args.get('config')), args.get('debug')


@click.command()
@click.option('--lambda', 'lam', required=True, help='Strict partition.')
@click.option('--mu', required=True, help='Partition of the same weight.')
@click.option(
    '--method',
    type=click.Choice(METHOD_CHOICES),
    default=None,
    help='Algorithm.  Default from config, else auto.')
@click.pass_context
def char(ctx, lam, mu, method):
    """ Print one character value zeta^lambda_mu(q). """
    settings, debug = _settings(ctx)
    method = method or settings.method

    def compute():
        shape = partitions.parse_partition(lam, partitions.StrictPartition)
        cls = partitions.parse_partition(mu)
        return util.timed(
            'char {} {}'.format(shape, cls),
            characters.character,
            shape,
            cls,
            method,
            settings.order,
            debug=debug)

    util.print_info(_guarded(compute).render())


def _build_table(n, method, jobs, order, debug):
    cache_dir = config.get_cache_dir()
    if cache_dir:
        table = cache.load_table(cache_dir, n, debug=debug)
        if table is not None:
            return table
    table = util.timed(
        'table n={}'.format(n),
        characters.char_table,
        n,
        method,
        jobs,
        order,
        debug=debug)
    if cache_dir:
        _cross_check(table, method, order)
        cache.store_table(cache_dir, table, debug=debug)

    return table


def _cross_check(table, method, order):
    other = 'combinatorial' if method == 'recursive' else 'recursive'
    for (lam, mu), value in table.cells.items():
        if characters.character(lam, mu, other, order) != value:
            msg = 'Methods {} and {} disagree on zeta^{}_{}'.format(
                method, other, lam, mu)
            raise ArithmeticError(msg)


@click.command()
@click.option('--n', 'n', type=int, required=True, help='Weight n >= 1.')
@click.option(
    '--format',
    'fmt',
    type=click.Choice(sorted(formats.RENDERERS)),
    default='csv',
    help='Output format.  Default csv.')
@click.option('--out', 'out', default=None, help='Write to this file.')
@click.option(
    '--method',
    type=click.Choice(METHOD_CHOICES),
    default=None,
    help='Algorithm.  Default from config, else auto.')
@click.option('--jobs', type=int, default=None, help='Worker processes.')
@click.pass_context
def table(ctx, n, fmt, out, method, jobs):
    """ Print the character table of weight n. """
    settings, debug = _settings(ctx)
    result = _guarded(_build_table, n, method or settings.method, jobs or
                      settings.jobs, settings.order, debug)
    text = formats.render(result, fmt)
    if out:
        _guarded(_write, out, text)
    else:
        click.echo(text, nl=False)


def _write(path, text):
    with open(path, 'w') as stream:
        stream.write(text)


@click.command()
@click.option('--mu', required=True, help='First composition.')
@click.option('--nu', required=True, help='Second composition.')
@click.option('--at-q', 'at_q', default=None, help='Evaluate at q.')
@click.pass_context
def sbtr(ctx, mu, nu, at_q):
    """ Print the spin bitrace sbtr(mu, nu). """
    _, debug = _settings(ctx)

    def compute():
        first = partitions.parse_partition(mu, partitions.Composition)
        second = partitions.parse_partition(nu, partitions.Composition)
        value = util.timed('sbtr', bitrace.sbtr, first, second, debug=debug)
        if at_q is None:
            return value.render()
        return str(polyring.eval_at(value, fractions.Fraction(at_q)))

    util.print_info(_guarded(compute))


@click.command(name='verify')
@click.option(
    '--n-max', 'n_max', type=int, default=7, help='Largest weight.  Default 7')
@click.option(
    '--suite',
    type=click.Choice(verify.SUITES + ('all', )),
    default='all',
    help='Suite to run.  Default all.')
@click.pass_context
def verify_command(ctx, n_max, suite):
    """ Run verification suites and report PASS/FAIL per check. """
    _, debug = _settings(ctx)
    checks = util.timed(
        'verify {}'.format(suite),
        _guarded,
        verify.run_suite,
        suite,
        n_max,
        debug=debug)
    if not verify.report(checks):
        sys.exit(EXIT_VERIFY_FAILED)


cli.add_command(char)
cli.add_command(table)
cli.add_command(sbtr)
cli.add_command(verify_command)
