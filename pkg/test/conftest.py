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
import os
import random

import pytest

from hcchar import polyring


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="need --runslow option to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture()
def temp_dir(tmpdir, request):
    saved = os.getcwd()
    d = tmpdir.mkdir('work')
    os.chdir(d.strpath)

    def cleanup():
        os.chdir(saved)

    request.addfinalizer(cleanup)

    return d


@pytest.fixture()
def hcchar_config_file(temp_dir, request):
    fixture = request.param
    d = temp_dir
    c = d.join(os.extsep.join(('hcchar', 'yml')))
    c.write(request.getfixturevalue(fixture))

    return c.strpath


@pytest.fixture()
def cache_dir(tmpdir, monkeypatch):
    d = tmpdir.mkdir('cache')
    monkeypatch.setenv('HCCHAR_CACHE', d.strpath)

    return d.strpath


@pytest.helpers.register
def poly(text):
    """ Build a QPoly from its text form. """
    return polyring.parse_poly(text)


def _determinant(rows):
    size = len(rows)
    if size == 0:
        return polyring.ONE
    total = polyring.ZERO
    for j in range(size):
        entry = rows[0][j]
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _determinant(minor)
        total = total + term if j % 2 == 0 else total - term

    return total


@pytest.helpers.register
def determinant(rows):
    """ Determinant by cofactor expansion along the first row. """
    return _determinant(rows)


@pytest.helpers.register
def is_horizontal_strip(outer, inner):
    """ True when outer/inner has at most one cell in each column. """
    columns = []
    for i, part in enumerate(outer):
        below = inner[i] if i < len(inner) else 0
        if below > part:
            return False
        columns.extend(range(below + 1, part + 1))
    if len(inner) > len(outer):
        return False

    return len(columns) == len(set(columns))


@pytest.helpers.register
def integer_antisymmetric(size, seed=1):
    """ A deterministic antisymmetric integer matrix as dense rows. """
    rows = [[polyring.ZERO] * size for _ in range(size)]
    value = seed
    for i in range(size):
        for j in range(i + 1, size):
            value = (value * 7 + 3) % 11
            entry = polyring.QPoly.const(fractions.Fraction(value - 5))
            rows[i][j] = entry
            rows[j][i] = -entry

    return rows


def _random_poly(rng, degree, bound):
    return polyring.QPoly(
        rng.randint(-bound, bound) for _ in range(degree + 1))


@pytest.helpers.register
def random_poly(rng, degree=3, bound=4):
    """ A QPoly with integer coefficients in [-bound, bound]. """
    return _random_poly(rng, degree, bound)


@pytest.helpers.register
def polynomial_antisymmetric(size, seed=1, degree=2):
    """ A random antisymmetric matrix with QPoly entries as dense rows. """
    rng = random.Random(seed)
    rows = [[polyring.ZERO] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            entry = _random_poly(rng, degree, 4)
            rows[i][j] = entry
            rows[j][i] = -entry

    return rows
