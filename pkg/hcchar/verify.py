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

"""
Verification suites.  Each suite returns a list of `Check` results, run
sequentially so that reports are stable.
"""

import collections

from hcchar import bitrace
from hcchar import characters
from hcchar import golden
from hcchar import partitions
from hcchar import polyring
from hcchar import util

SUITES = ('tables', 'cross', 'symmetry', 'ortho')

Check = collections.namedtuple('Check', ['name', 'ok', 'detail'])


def _cell_name(lam, mu):
    return 'zeta^{}_{}'.format(
        partitions.format_partition(lam), partitions.format_partition(mu))


def check_tables(n_max):
    """ Compare computed tables with the embedded golden tables. """
    checks = []
    for n in golden.available():
        if n > n_max:
            continue
        expected = golden.golden_table(n)
        table = characters.char_table(n, 'recursive')
        mismatched = [
            _cell_name(lam, mu) for (lam, mu), value in expected.items()
            if table.cells.get((lam, mu)) != value
        ]
        missing = set(table.cells) != set(expected)
        ok = not mismatched and not missing
        detail = ', '.join(mismatched) if mismatched else ''
        if missing:
            detail = 'table shape differs'
        checks.append(Check('golden table n={}'.format(n), ok, detail))

    return checks


def _closed_forms(lam, mu):
    n = sum(mu)
    forms = {}
    if len(lam) == 1:
        forms['one-row'] = characters.char_one_row(mu)
    if mu == (n, ):
        forms['single-part'] = characters.char_single_part(lam)
    if len(lam) == 2:
        forms['two-row'] = characters.char_two_row(lam[0], mu)
    if all(part == 1 for part in mu):
        forms['column'] = characters.char_column(lam)
    if all(part == 1 for part in mu[1:]):
        forms['hook'] = characters.char_hook_mu(lam, mu[0])

    return forms


def check_cross(n_max):
    """ Every method and every applicable closed form agree cell by cell. """
    checks = []
    for n in range(1, n_max + 1):
        failures = []
        cells = 0
        for mu in partitions.enumerate_partitions(n, 'odd'):
            for lam in partitions.enumerate_partitions(n, 'strict'):
                cells += 1
                values = {
                    method: characters.character(lam, mu, method)
                    for method in characters.METHODS
                }
                values.update(_closed_forms(tuple(lam), tuple(mu)))
                if len(set(values.values())) != 1:
                    failures.append('{} ({})'.format(
                        _cell_name(lam, mu), ', '.join(sorted(values))))
        checks.append(Check('methods agree n={} ({} cells)'.format(n, cells),
                            not failures, '; '.join(failures)))

    return checks


def check_symmetry(n_max):
    """ Each value is palindromic with degree at most n - l(mu). """
    checks = []
    for n in range(1, n_max + 1):
        failures = []
        table = characters.char_table(n, 'combinatorial')
        for (lam, mu), value in table.cells.items():
            if not polyring.is_palindromic(value):
                failures.append('{} not palindromic'.format(
                    _cell_name(lam, mu)))
            if value.degree > n - len(mu):
                failures.append('{} degree {}'.format(
                    _cell_name(lam, mu), value.degree))
        checks.append(Check('symmetry n={}'.format(n), not failures,
                            '; '.join(failures)))

    return checks


def check_ortho(n_max):
    """
    The character sum, the bitrace recursion and the contingency sum agree,
    and reduce to 2^(l(mu)) z_mu delta at q = 1.
    """
    checks = []
    for n in range(1, n_max + 1):
        failures = []
        odd = partitions.enumerate_partitions(n, 'odd')
        for mu in odd:
            for nu in odd:
                lhs = bitrace.orthogonality_lhs(mu, nu)
                by_recursion = bitrace.sbtr(mu, nu)
                by_matrices = bitrace.sbtr_matrix(mu, nu)
                expected = (2**mu.length * partitions.z_lambda(mu)
                            if mu == nu else 0)
                if not lhs == by_recursion == by_matrices:
                    failures.append('sbtr[{}; {}]'.format(mu, nu))
                elif polyring.eval_at(lhs, 1) != expected:
                    failures.append('sbtr[{}; {}] at q=1'.format(mu, nu))
        checks.append(Check('orthogonality n={}'.format(n), not failures,
                            '; '.join(failures)))

    return checks


_RUNNERS = {
    'tables': check_tables,
    'cross': check_cross,
    'symmetry': check_symmetry,
    'ortho': check_ortho,
}


def run_suite(suite, n_max):
    """
    Run one suite, or every suite for ``all``.

    :return: list of Check
    """
    if suite == 'all':
        checks = []
        for name in SUITES:
            checks.extend(_RUNNERS[name](n_max))
        return checks
    if suite not in _RUNNERS:
        raise ValueError('Unknown suite {!r}'.format(suite))

    return _RUNNERS[suite](n_max)


def report(checks):
    """ Print one PASS/FAIL line per check and return True if all passed. """
    for check in checks:
        if check.ok:
            util.print_info('PASS {}'.format(check.name))
        else:
            util.print_warn('FAIL {}: {}'.format(check.name, check.detail))

    return all(check.ok for check in checks)
