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

import sys
import time

import colorama

colorama.init(autoreset=True)


def print_info(msg):
    """ Print the given message to STDOUT. """
    print(msg)


def print_warn(msg):
    """ Print the given message to STDOUT in YELLOW. """
    print('{}{}'.format(colorama.Fore.YELLOW, msg))


def print_error(msg):
    """ Print the given message to STDERR in RED. """
    print('{}{}'.format(colorama.Fore.RED, msg), file=sys.stderr)


def print_debug(msg, debug=False):
    """ Print the given message in YELLOW when debug output is enabled. """
    if debug:
        print_warn('  DEBUG: {}'.format(msg))


def timed(label, func, *args, debug=False, **kwargs):
    """
    Call ``func`` and report its wall time when debugging.

    :param label: A string naming the work in the debug line.
    :param func: The callable to run.
    :param debug: An optional bool to toggle debug output.
    :return: whatever ``func`` returns
    """
    start = time.time()
    result = func(*args, **kwargs)
    print_debug('{} took {:.3f}s'.format(label, time.time() - start), debug)

    return result
