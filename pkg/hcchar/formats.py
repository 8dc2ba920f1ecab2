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
Renderers for character tables: JSON (the cache and ``--format json``),
CSV and LaTeX.
"""

import collections
import csv
import io
import json

from hcchar import characters
from hcchar import partitions
from hcchar import polyring

SCHEMA_VERSION = 1


def table_to_json(table):
    """
    Serialize a table as
    {"n": int, "cells": [{"lambda": [...], "mu": [...], "poly": {...}}],
    "version": 1}.

    :param table: A characters.CharTable.
    :return: str
    """
    cells = [{
        'lambda': list(lam),
        'mu': list(mu),
        'poly': poly.to_json()
    } for (lam, mu), poly in table.cells.items()]
    document = {'n': table.n, 'cells': cells, 'version': SCHEMA_VERSION}

    return json.dumps(document, indent=2) + '\n'


def table_from_json(text):
    """
    Rebuild a table from :func:`table_to_json` output.

    :param text: A JSON string.
    :return: characters.CharTable
    :raises ValueError: on a malformed document or schema version.
    """
    return table_from_document(json.loads(text))


def table_from_document(document):
    """ As :func:`table_from_json`, for an already decoded document. """
    if not isinstance(document, dict):
        raise ValueError('Table document must be an object')
    if document.get('version') != SCHEMA_VERSION:
        raise ValueError('Unsupported table schema version {!r}'.format(
            document.get('version')))
    n = document['n']
    rows = partitions.enumerate_partitions(n, 'odd')
    columns = partitions.enumerate_partitions(n, 'strict')
    cells = {}
    for cell in document['cells']:
        key = (partitions.StrictPartition(cell['lambda']),
               partitions.OddPartition(cell['mu']))
        cells[key] = polyring.QPoly.from_json(cell['poly'])
    ordered = collections.OrderedDict()
    for mu in rows:
        for lam in columns:
            ordered[(lam, mu)] = cells[(lam, mu)]

    return characters.CharTable(n, rows, columns, ordered)


def table_to_csv(table):
    """ Header row of lambdas, first column mu, canonical polynomial text. """
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator='\n')
    header = [partitions.format_partition(lam) for lam in table.columns]
    writer.writerow(['mu\\lambda'] + header)
    for mu in table.rows:
        writer.writerow([partitions.format_partition(mu)] +
                        [table.cells[(lam, mu)].render()
                         for lam in table.columns])

    return stream.getvalue()


def _latex_partition(parts):
    counts = collections.Counter(parts)
    body = []
    for part in sorted(counts, reverse=True):
        if counts[part] > 1:
            body.append('{}^{{{}}}'.format(part, counts[part]))
        else:
            body.append(str(part))

    return '({})'.format(','.join(body))


def table_to_latex(table):
    """ A tabular with mu down the side and lambda across the top. """
    layout = '|c|' + 'c|' * len(table.columns)
    lines = [
        r'\begin{tabular}{' + layout + '}',
        r'\hline',
        r'$\mu \backslash \lambda$ & ' + ' & '.join(
            '${}$'.format(_latex_partition(lam))
            for lam in table.columns) + r' \\',
        r'\hline',
    ]
    for mu in table.rows:
        cells = ['${}$'.format(table.cells[(lam, mu)].latex())
                 for lam in table.columns]
        lines.append('${}$ & '.format(_latex_partition(mu)) +
                     ' & '.join(cells) + r' \\')
        lines.append(r'\hline')
    lines.append(r'\end{tabular}')

    return '\n'.join(lines) + '\n'


RENDERERS = {
    'json': table_to_json,
    'csv': table_to_csv,
    'latex': table_to_latex,
}


def render(table, fmt):
    if fmt not in RENDERERS:
        raise ValueError('Unknown format {!r}'.format(fmt))

    return RENDERERS[fmt](table)
