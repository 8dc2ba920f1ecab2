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

import collections
import errno
import os

import yaml

from hcchar import characters


class ParseError(Exception):
    """ Error raised when a config can't be loaded properly. """
    pass


DEFAULT_CONFIG_FILE = 'hcchar.yml'
CACHE_ENV = 'HCCHAR_CACHE'

Config = collections.namedtuple('Config', ['method', 'jobs', 'order'])

DEFAULTS = {
    'method': 'auto',
    'jobs': 1,
    'order': 'decreasing',
}


def config(filename=DEFAULT_CONFIG_FILE):
    """
    Construct a `Config` object from a YAML file and return it.

    A missing file yields the defaults.

    :param filename: A string containing the path to YAML file.
    :return: Config
    """
    data = dict(DEFAULTS)
    if os.path.exists(filename):
        data.update(_validate(_get_config(filename) or {}))

    return Config(**data)


def _get_config(filename):
    """
    Parse the provided YAML file and return a dict.

    :param filename: A string containing the path to YAML file.
    :return: dict
    """
    with open(filename, 'r') as stream:
        try:
            return yaml.safe_load(stream)
        except yaml.YAMLError as e:
            msg = 'Error parsing hcchar config: {0}'.format(e)
            raise ParseError(msg)


def _validate(data):
    if not isinstance(data, dict):
        raise ParseError('hcchar config must be a mapping')
    unknown = set(data) - set(DEFAULTS)
    if unknown:
        msg = 'Unknown hcchar config keys: {}'.format(', '.join(
            sorted(unknown)))
        raise ParseError(msg)
    method = data.get('method', DEFAULTS['method'])
    if method != 'auto' and method not in characters.METHODS:
        raise ParseError('Unknown method {!r}'.format(method))
    jobs = data.get('jobs', DEFAULTS['jobs'])
    if not isinstance(jobs, int) or isinstance(jobs, bool) or jobs < 1:
        raise ParseError('jobs must be a positive int, got {!r}'.format(jobs))
    order = data.get('order', DEFAULTS['order'])
    if order not in characters.ORDERS:
        raise ParseError('Unknown order {!r}'.format(order))

    return data


def get_cache_dir():
    """ Return the cache directory, or None when caching is disabled. """
    path = os.environ.get(CACHE_ENV)
    if not path:
        return None

    return os.path.expanduser(path)


def get_lock_dir(cache_dir):
    """
    Construct the cache's lock directory and return a str.

    :param cache_dir: A string containing the cache directory.
    :return: str
    """
    return os.path.join(cache_dir, 'lock')


def get_lock_file(cache_dir, name):
    """ Return the lock file guarding the cache entry ``name``. """
    return os.path.join(get_lock_dir(cache_dir), name)


def makedirs(path):
    """
    Create the directory ``path`` if missing and return None.

    :param path: A string containing a directory path.
    :return: None
    """
    try:
        os.makedirs(path)
    except OSError as exc:
        if exc.errno == errno.EEXIST:
            pass
        else:
            raise
