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
Pfaffians of antisymmetric polynomial matrices and the Pfaffian formula for
the principally specialized skew Schur Q-functions Q_(lambda/mu)(t, -1).
"""

from hcchar import partitions
from hcchar import polyring
from hcchar import vertex


class OddSizeError(ValueError):
    """ Error raised when a Pfaffian of an odd sized matrix is requested. """
    pass


class NotContainedError(ValueError):
    """ Error raised when the inner shape of a skew diagram does not fit. """
    pass


class AntisymMatrix(object):
    """
    An antisymmetric matrix given by its strictly upper triangular entries.

    Indices are 0-based.  Missing upper entries are zero.

    :param size: A non-negative int.
    :param upper: A dict mapping (i, j) with i < j to QPoly entries.
    """

    def __init__(self, size, upper=None):
        self.size = size
        self.upper = {}
        for (i, j), value in (upper or {}).items():
            if not 0 <= i < j < size:
                raise ValueError('Entry ({}, {}) is not strictly upper '
                                 'triangular in size {}'.format(i, j, size))
            if not isinstance(value, polyring.QPoly):
                value = polyring.QPoly.const(value)
            if value:
                self.upper[(i, j)] = value

    @classmethod
    def from_rows(cls, rows):
        """
        Build from a dense square list of rows, checking antisymmetry.

        :param rows: A list of lists of QPoly or rationals.
        :return: AntisymMatrix
        """
        size = len(rows)
        upper = {}
        for i in range(size):
            if len(rows[i]) != size:
                raise ValueError('Matrix is not square')
            for j in range(size):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError('Matrix is not antisymmetric at '
                                     '({}, {})'.format(i, j))
                if i < j:
                    upper[(i, j)] = rows[i][j]

        return cls(size, upper)

    def entry(self, i, j):
        if i == j:
            return polyring.ZERO
        if i < j:
            return self.upper.get((i, j), polyring.ZERO)

        return -self.upper.get((j, i), polyring.ZERO)

    def rows(self):
        """ The dense form as a list of lists. """
        return [[self.entry(i, j) for j in range(self.size)]
                for i in range(self.size)]

    def permuted(self, order):
        """
        The matrix whose (i, j) entry is entry(order[i], order[j]).

        :param order: A permutation of range(size).
        :return: AntisymMatrix
        """
        rows = [[self.entry(a, b) for b in order] for a in order]

        return AntisymMatrix.from_rows(rows)


def pfaffian(matrix):
    """
    Pfaffian by expansion along the first remaining row, memoized on the
    set of remaining indices.

    :param matrix: An AntisymMatrix.
    :return: QPoly
    :raises OddSizeError: for odd sizes.
    """
    if matrix.size % 2:
        msg = 'Pfaffian of a {0}x{0} matrix is undefined'.format(matrix.size)
        raise OddSizeError(msg)
    memo = {}

    def expand(indices):
        if not indices:
            return polyring.ONE
        if indices in memo:
            return memo[indices]
        first = indices[0]
        total = polyring.ZERO
        for pos in range(1, len(indices)):
            entry = matrix.entry(first, indices[pos])
            if not entry:
                continue
            term = entry * expand(indices[1:pos] + indices[pos + 1:])
            total = total + term if pos % 2 else total - term
        memo[indices] = total

        return total

    return expand(tuple(range(matrix.size)))


def rotate(matrix, p, q):
    """
    Cyclically move row and column p to position q (1-based, p < q); rows
    p+1 .. q shift up by one.  Pf(matrix) = (-1)^(q-p) Pf(rotate(matrix)).

    :return: AntisymMatrix
    """
    if not 1 <= p < q <= matrix.size:
        raise ValueError('Need 1 <= p < q <= {}'.format(matrix.size))
    order = list(range(matrix.size))
    moved = order[p - 1]
    order[p - 1:q - 1] = order[p:q]
    order[q - 1] = moved

    return matrix.permuted(order)


def build_skew_matrix(lam, mu):
    """
    The antisymmetric matrix whose Pfaffian is Q_(lambda/mu)(t, -1).

    Rows 0..s-1 belong to the parts of lambda and carry f_(lambda_i,
    lambda_j) above the diagonal; the block pairing lambda_i with the
    reversed parts of mu (padded by a zero when l(lambda) + l(mu) is odd)
    carries f_(lambda_i - mu_(r-j)).  The mu block is zero.

    :param lam: A strict partition.
    :param mu: A strict partition contained in ``lam``.
    :return: AntisymMatrix
    :raises NotContainedError: when mu is not inside lambda.
    """
    lam, mu = tuple(lam), tuple(mu)
    if not partitions.contains(lam, mu):
        msg = '{} is not contained in {}'.format(
            partitions.format_partition(mu), partitions.format_partition(lam))
        raise NotContainedError(msg)
    s = len(lam)
    if (s + len(mu)) % 2:
        mu = mu + (0, )
    r = len(mu)
    upper = {}
    for i in range(s):
        for j in range(i + 1, s):
            upper[(i, j)] = vertex.f_pair(lam[i], lam[j])
        for j in range(r):
            upper[(i, s + j)] = vertex.f_single(lam[i] - mu[r - 1 - j])

    return AntisymMatrix(s + r, upper)


def skew_Q_principal(lam, mu):
    """ Q_(lambda/mu)(t, -1) as the Pfaffian of :func:`build_skew_matrix`. """
    return pfaffian(build_skew_matrix(lam, mu))


def g_star_pfaffian(k, lam):
    """
    g*_k Q_lambda.1 = sum over strict nu inside lambda with |nu| = |lambda| - k
    of Q_(lambda/nu)(t, -1) Q_nu.1.

    :return: vertex.QBasisElement
    """
    terms = {}
    for nu in partitions.enumerate_partitions(sum(lam) - k, 'strict'):
        if not partitions.contains(lam, nu):
            continue
        value = skew_Q_principal(lam, nu)
        if value:
            terms[tuple(nu)] = value

    return vertex.QBasisElement(terms)
