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
Partitions, compositions and shifted diagrams.

Partitions are tuple subclasses so they hash and compare like the plain
tuples used as memo keys elsewhere.  Cells of shifted diagrams are 1-indexed
``(row, column)`` pairs; row i of the shifted diagram of a strict partition
occupies columns i .. i + lambda_i - 1.
"""

import collections
import enum
import fractions
import functools
import itertools
import math
import re

from hcchar import polyring

_EXPONENT = re.compile(r'^(\d+)\^(\d+)$')


class Partition(tuple):
    """ A weakly decreasing tuple of positive ints. """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        cls._validate(parts)

        return super(Partition, cls).__new__(cls, parts)

    @classmethod
    def _validate(cls, parts):
        if any(p <= 0 for p in parts):
            raise ValueError('Parts must be positive: {}'.format(parts))
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError('Parts must be decreasing: {}'.format(parts))

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, format_partition(self))

    def __str__(self):
        return format_partition(self)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    @property
    def multiplicities(self):
        return collections.Counter(self)

    @property
    def epsilon(self):
        return epsilon(self)

    @property
    def delta(self):
        return delta(self)


class StrictPartition(Partition):
    """ A partition with distinct parts. """

    @classmethod
    def _validate(cls, parts):
        super(StrictPartition, cls)._validate(parts)
        if any(a == b for a, b in zip(parts, parts[1:])):
            raise ValueError('Parts must be distinct: {}'.format(parts))


class OddPartition(Partition):
    """ A partition all of whose parts are odd. """

    @classmethod
    def _validate(cls, parts):
        super(OddPartition, cls)._validate(parts)
        if any(p % 2 == 0 for p in parts):
            raise ValueError('Parts must be odd: {}'.format(parts))


class Composition(tuple):
    """
    A finite tuple of non-negative ints.  Zeros are allowed and do not count
    towards the length.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError('Parts must be non-negative: {}'.format(parts))

        return super(Composition, cls).__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return sum(1 for p in self if p)


def epsilon(parts):
    """ floor(l / 2) for the number l of nonzero parts. """
    return _length(parts) // 2


def delta(parts):
    """ l mod 2 for the number l of nonzero parts. """
    return _length(parts) % 2


def _length(parts):
    return sum(1 for p in parts if p)


def parse_partition(text, cls=Partition):
    """
    Parse ``'4,2,1'`` (or ``'3,1^4'``, or ``'-'`` for the empty partition).

    :param text: A string of comma separated parts.
    :param cls: The partition class to build.
    :return: Partition
    """
    text = text.strip()
    if text in ('', '-', '()'):
        return cls(())
    parts = []
    for token in text.strip('()').split(','):
        token = token.strip()
        match = _EXPONENT.match(token)
        if match:
            parts.extend([int(match.group(1))] * int(match.group(2)))
        elif token.isdigit():
            parts.append(int(token))
        else:
            raise ValueError('Unable to parse partition {!r}'.format(text))

    return cls(parts)


def format_partition(parts):
    """ Render a partition as ``'3,1,1'``; the empty one is ``'-'``. """
    if not parts:
        return '-'

    return ','.join(str(p) for p in parts)


def _generate(n, largest, kind):
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        if kind == 'odd' and part % 2 == 0:
            continue
        bound = part - 1 if kind == 'strict' else part
        for rest in _generate(n - part, bound, kind):
            yield (part, ) + rest


_KINDS = {
    'all': Partition,
    'strict': StrictPartition,
    'odd': OddPartition,
}


@functools.lru_cache(maxsize=None)
def enumerate_partitions(n, kind='all'):
    """
    All partitions of ``n`` of the given kind, in reverse-lexicographic
    order.

    :param n: A non-negative int.
    :param kind: One of ``all``, ``strict``, ``odd``.
    :return: tuple
    """
    if kind not in _KINDS:
        raise ValueError('Unknown partition kind {!r}'.format(kind))
    if n < 0:
        return ()
    cls = _KINDS[kind]

    return tuple(cls(p) for p in _generate(n, n, kind))


def z_lambda(parts):
    """ The centralizer order prod_i i^(m_i) m_i!. """
    result = 1
    for part, mult in collections.Counter(parts).items():
        result *= part**mult * math.factorial(mult)

    return result


def zt_denominator(parts):
    """ prod_i (1 - q^(lambda_i)) as a QPoly. """
    result = polyring.ONE
    for part in parts:
        result = result * (1 - polyring.QPoly.monomial(1, part))

    return result


def _bounded(k, caps):
    if not caps:
        if k == 0:
            yield ()
        return
    rest_capacity = sum(caps[1:])
    for first in range(min(k, caps[0]), -1, -1):
        if k - first > rest_capacity:
            break
        for rest in _bounded(k - first, caps[1:]):
            yield (first, ) + rest


def bounded_compositions(k, mu):
    """
    Compositions tau of ``k`` with len(tau) = len(mu) and tau_i <= mu_i.

    :param k: A non-negative int.
    :param mu: A tuple of non-negative ints (the caps).
    :return: generator of tuples
    """
    return _bounded(k, tuple(mu))


def all_compositions(k, length):
    """ Compositions of ``k`` into exactly ``length`` non-negative parts. """
    return _bounded(k, (k, ) * length)


def coarsenings(rho):
    """
    Every composition obtained from ``rho`` by merging runs of adjacent
    parts, including ``rho`` itself.
    """
    rho = tuple(rho)
    if not rho:
        yield ()
        return
    for merges in itertools.product((False, True), repeat=len(rho) - 1):
        merged = [rho[0]]
        for part, merge in zip(rho[1:], merges):
            if merge:
                merged[-1] += part
            else:
                merged.append(part)
        yield tuple(merged)


def contains(outer, inner):
    """ True when the diagram of ``inner`` fits inside ``outer``. """
    if len(inner) > len(outer):
        return False

    return all(b <= a for a, b in zip(outer, inner))


def shifted_cells(parts):
    """ The cells of the shifted diagram as a frozenset of (row, col). """
    return frozenset((i, j)
                     for i, part in enumerate(parts, 1)
                     for j in range(i, i + part))


def skew_cells(outer, inner):
    """ Cells of the shifted skew diagram outer/inner. """
    return shifted_cells(outer) - shifted_cells(inner)


def intermediate_strict(inner, outer):
    """
    All strict partitions nu with inner <= nu <= outer.

    :param inner: A strict partition.
    :param outer: A strict partition containing ``inner``.
    :return: generator of tuples
    """
    rows = len(outer)
    lower = tuple(inner) + (0, ) * (rows - len(inner))

    def walk(i, previous):
        if i == rows:
            yield ()
            return
        top = min(outer[i], previous - 1)
        for value in range(top, lower[i] - 1, -1):
            if value == 0:
                if all(b == 0 for b in lower[i:]):
                    yield ()
                continue
            for rest in walk(i + 1, value):
                yield (value, ) + rest

    return walk(0, float('inf'))


def is_generalized_strip(cells):
    """ True when no 2x2 block of cells lies inside ``cells``. """
    for i, j in cells:
        if ((i, j + 1) in cells and (i + 1, j) in cells and
                (i + 1, j + 1) in cells):
            return False

    return True


def connected_components(cells):
    """
    Edge-connected components of a set of cells, each a sorted tuple, the
    list ordered by the first cell of each component.
    """
    remaining = set(cells)
    components = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        stack = [start]
        component = [start]
        while stack:
            i, j = stack.pop()
            for neighbour in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if neighbour in remaining:
                    remaining.discard(neighbour)
                    stack.append(neighbour)
                    component.append(neighbour)
        components.append(tuple(sorted(component)))

    return sorted(components)


class SkewKind(enum.Enum):
    SHIFTED_BORDER_STRIP = 'ShiftedBorderStrip'
    GENERALIZED_STRIP = 'GeneralizedStrip'
    DOUBLE_STRIP = 'DoubleStrip'
    GENERALIZED_DOUBLE_STRIP = 'GeneralizedDoubleStrip'
    NOT_GDS = 'NotGDS'


SkewClassification = collections.namedtuple(
    'SkewClassification', ['kind', 'c', 'beta_components', 'l_jump'])


def classify_skew(outer, inner):
    """
    Classify the shifted skew diagram outer/inner.

    A skew diagram is a generalized double strip when some strict nu between
    the two shapes splits it into two pieces free of 2x2 blocks.  ``c`` is
    the number of diagonals holding two cells.  The cells alone on their
    diagonal form the beta part; ``beta_components`` holds, for each of its
    connected components, the number of cells in each row from top to
    bottom.  For NotGDS diagrams ``c`` is 0 and the component list empty.

    :param outer: A strict partition.
    :param inner: A strict partition.
    :return: SkewClassification
    """
    outer, inner = tuple(outer), tuple(inner)
    l_jump = len(outer) - len(inner)
    not_gds = SkewClassification(SkewKind.NOT_GDS, 0, [], l_jump)
    if not contains(outer, inner):
        return not_gds
    cells = skew_cells(outer, inner)
    diagonals = collections.Counter(j - i for i, j in cells)
    if any(count > 2 for count in diagonals.values()):
        return not_gds
    if not _has_gds_split(outer, inner):
        return not_gds

    c = sum(1 for count in diagonals.values() if count == 2)
    beta = [cell for cell in cells if diagonals[cell[1] - cell[0]] == 1]
    rows = []
    for component in connected_components(beta):
        counts = collections.Counter(i for i, _ in component)
        rows.append(tuple(counts[i] for i in sorted(counts)))
    m = len(rows)
    if c == 0:
        kind = (SkewKind.SHIFTED_BORDER_STRIP
                if m == 1 else SkewKind.GENERALIZED_STRIP)
    else:
        kind = (SkewKind.DOUBLE_STRIP
                if m == 1 else SkewKind.GENERALIZED_DOUBLE_STRIP)

    return SkewClassification(kind, c, rows, l_jump)


def _has_gds_split(outer, inner):
    for nu in intermediate_strict(inner, outer):
        if (is_generalized_strip(skew_cells(outer, nu)) and
                is_generalized_strip(skew_cells(nu, inner))):
            return True

    return False


def _interlacing(lower, upper, total):
    """ Strict x with lower_i <= x_i <= upper_i summing to ``total``. """
    size = len(lower)

    def walk(i, previous, remaining):
        if i == size:
            if remaining == 0:
                yield ()
            return
        # once a row is empty every later row is empty
        top = 0 if previous == 0 else min(upper[i], remaining, previous - 1)
        for value in range(top, lower[i] - 1, -1):
            for rest in walk(i + 1, value, remaining - value):
                yield (value, ) + rest

    for candidate in walk(0, float('inf'), total):
        yield tuple(p for p in candidate if p)


def horizontal_strip_a(outer, inner):
    """
    The number of columns c of the unshifted skew diagram outer/inner such
    that column c + 1 holds no cell of it.
    """
    columns = set()
    for i, part in enumerate(outer):
        below = inner[i] if i < len(inner) else 0
        columns.update(range(below + 1, part + 1))

    return sum(1 for col in columns if col + 1 not in columns)


def pieri_strips(kappa, r, mode='sub'):
    """
    Strict partitions differing from ``kappa`` by a horizontal r-strip.

    With ``mode='sub'`` yields (xi, a) for xi inside kappa with
    kappa_(i+1) <= xi_i <= kappa_i; with ``mode='add'`` yields (lam, a) for
    lam containing kappa with kappa_i <= lam_i <= kappa_(i-1).  ``a`` is
    :func:`horizontal_strip_a` of the larger shape over the smaller one.

    :param kappa: A strict partition.
    :param r: A non-negative int.
    :param mode: ``sub`` or ``add``.
    :return: generator of (tuple, int)
    """
    kappa = tuple(kappa)
    if mode == 'sub':
        lower = kappa[1:] + (0, )
        for xi in _interlacing(lower[:len(kappa)], kappa, sum(kappa) - r):
            yield xi, horizontal_strip_a(kappa, xi)
    elif mode == 'add':
        lower = kappa + (0, )
        upper = ((kappa[0] if kappa else 0) + r, ) + kappa
        for lam in _interlacing(lower, upper, sum(kappa) + r):
            yield lam, horizontal_strip_a(lam, kappa)
    else:
        raise ValueError('Unknown strip mode {!r}'.format(mode))


def shifted_syt_count(parts):
    """
    Number of standard shifted tableaux by the product formula
    n!/prod(lambda_i!) * prod_{i<j} (lambda_i - lambda_j)/(lambda_i +
    lambda_j).
    """
    parts = tuple(parts)
    result = fractions.Fraction(math.factorial(sum(parts)))
    for part in parts:
        result /= math.factorial(part)
    for a, b in itertools.combinations(parts, 2):
        result *= fractions.Fraction(a - b, a + b)

    return int(result)


@functools.lru_cache(maxsize=None)
def shifted_syt_enumerate(parts):
    """
    Number of standard shifted tableaux, counted by walking every chain of
    corner removals down to the empty shape.
    """
    parts = tuple(parts)
    if not parts:
        return 1
    total = 0
    for i, part in enumerate(parts):
        smaller = parts[:i] + (part - 1, ) + parts[i + 1:]
        if i + 1 < len(parts) and smaller[i] <= parts[i + 1]:
            continue
        total += shifted_syt_enumerate(tuple(p for p in smaller if p))

    return total


def shifted_hook_lengths(parts):
    """
    Hook lengths of the cells of the shifted diagram, read in the doubled
    diagram (lambda_1, lambda_2, ... | lambda_1 - 1, lambda_2 - 1, ...).

    :return: dict mapping (row, col) to the hook length
    """
    parts = tuple(parts)
    d = len(parts)
    column_tops = [parts[j] - 1 + (j + 1) for j in range(d)]
    rows = [parts[i] + i + 1 for i in range(d)]
    i = d + 1
    while True:
        length = sum(1 for top in column_tops if top >= i)
        if not length:
            break
        rows.append(length)
        i += 1

    def column_length(col):
        return sum(1 for row in rows if row >= col)

    hooks = {}
    for i, j in shifted_cells(parts):
        col = j + 1
        hooks[(i, j)] = rows[i - 1] - col + column_length(col) - i + 1

    return hooks


def shifted_syt_hooks(parts):
    """ Number of standard shifted tableaux by the shifted hook formula. """
    product = 1
    for hook in shifted_hook_lengths(parts).values():
        product *= hook

    return math.factorial(sum(parts)) // product
