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
Persistent cache of character tables, one JSON file per weight n.

Entries are written under an inter-process lock through a temporary file
and an atomic rename, so concurrent writers leave a valid file behind.
"""

import json
import os
import tempfile

import fasteners

from hcchar import config
from hcchar import formats
from hcchar import util


def _table_file(cache_dir, n):
    return os.path.join(cache_dir, 'table-{}.json'.format(n))


def load_table(cache_dir, n, debug=False):
    """
    Return the cached table of weight ``n``, or None when it is missing or
    unreadable.  Corrupt entries are reported and ignored.

    :param cache_dir: A string containing the cache directory.
    :param n: An int.
    :param debug: An optional bool to toggle debug output.
    :return: characters.CharTable or None
    """
    path = _table_file(cache_dir, n)
    if not os.path.exists(path):
        util.print_debug('cache miss for n = {}'.format(n), debug)
        return None
    try:
        with open(path, 'r') as stream:
            document = json.load(stream)
        if isinstance(document, dict) and document.get('n') != n:
            util.print_warn('Ignoring cache entry {} for n = {}'.format(
                path, document.get('n')))
            return None
        table = formats.table_from_document(document)
    except (ValueError, KeyError, TypeError) as e:
        util.print_warn('Ignoring corrupt cache entry {}: {}'.format(path, e))
        return None
    util.print_debug('cache hit for n = {}'.format(n), debug)

    return table


def store_table(cache_dir, table, debug=False):
    """
    Write ``table`` to the cache atomically and return the path.

    :param cache_dir: A string containing the cache directory.
    :param table: A characters.CharTable.
    :param debug: An optional bool to toggle debug output.
    :return: str
    """
    config.makedirs(config.get_lock_dir(cache_dir))
    path = _table_file(cache_dir, table.n)
    lock_file = config.get_lock_file(cache_dir, os.path.basename(path))
    with fasteners.InterProcessLock(lock_file):
        fd, temp_path = tempfile.mkstemp(dir=cache_dir, suffix='.tmp')
        try:
            with os.fdopen(fd, 'w') as stream:
                stream.write(formats.table_to_json(table))
            os.replace(temp_path, path)
        except Exception:
            if os.path.exists(temp_path):
                os.remove(temp_path)
            raise
    util.print_debug('cached n = {} at {}'.format(table.n, path), debug)

    return path
