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
Golden character tables for n = 3..7, shipped as ``data/golden.yml``.
"""

import collections
import functools
import os
import re

import yaml

from hcchar import partitions
from hcchar import polyring

GOLDEN_FILE = os.path.join(os.path.dirname(__file__), 'data', 'golden.yml')

_BRACKET = re.compile(r'^\((\d+)\)_q$')
_POWER = re.compile(r'^\((.+)\)\^(\d+)$')


class ParseError(Exception):
    """ Error raised when the golden data can't be loaded properly. """
    pass


def parse_factor(factor):
    """
    Turn one golden factor into a polynomial.

    :param factor: An int, ``'(k)_q'``, ``'(poly)^e'`` or polynomial text.
    :return: QPoly
    """
    if isinstance(factor, int):
        return polyring.QPoly.const(factor)
    text = factor.replace(' ', '')
    match = _BRACKET.match(text)
    if match:
        return polyring.round_bracket(int(match.group(1)))
    match = _POWER.match(text)
    if match:
        return polyring.parse_poly(match.group(1))**int(match.group(2))

    return polyring.parse_poly(text)


def parse_cell(factors):
    result = polyring.ONE
    for factor in factors:
        result = result * parse_factor(factor)

    return result


@functools.lru_cache(maxsize=None)
def _load(filename):
    with open(filename, 'r') as stream:
        try:
            return yaml.safe_load(stream)
        except yaml.YAMLError as e:
            msg = 'Error parsing golden tables: {0}'.format(e)
            raise ParseError(msg)


def available(filename=GOLDEN_FILE):
    """ The weights n with an embedded golden table. """
    return sorted(_load(filename))


def golden_table(n, filename=GOLDEN_FILE):
    """
    The golden table of weight ``n`` keyed by (lambda, mu).

    :return: collections.OrderedDict
    """
    data = _load(filename)
    if n not in data:
        raise KeyError('No golden table for n = {}'.format(n))
    entry = data[n]
    columns = [
        partitions.parse_partition(text, partitions.StrictPartition)
        for text in entry['columns']
    ]
    cells = collections.OrderedDict()
    for row_text, row in entry['rows'].items():
        mu = partitions.parse_partition(row_text, partitions.OddPartition)
        if len(row) != len(columns):
            msg = 'Row {} of table {} has {} cells, expected {}'.format(
                row_text, n, len(row), len(columns))
            raise ParseError(msg)
        for lam, factors in zip(columns, row):
            cells[(lam, mu)] = parse_cell(factors)

    return cells
