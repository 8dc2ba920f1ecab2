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
The spin bitrace sbtr(mu, nu) = T^mu_nu / (q - 1)^(l(mu) + l(nu)).

T is built from the generating series alpha_n of the g*-g commutation;
alpha_tau = prod_i alpha_(tau_i).
"""

import fractions
import functools
import math

from hcchar import characters
from hcchar import partitions
from hcchar import polyring


class WeightMismatchError(ValueError):
    """ Error raised when two compositions of different weight are paired. """
    pass


_U = polyring.Q - 1
_U2 = _U * _U
_MIDDLE = 2 * polyring.Q * (polyring.Q**2 - polyring.Q + 1)
_TAIL = polyring.Q**2 * _U2
_Q4 = polyring.Q**4


class AlphaTable(object):
    """ alpha_0, alpha_1, ... grown on demand by the four-term recursion. """

    def __init__(self):
        self.values = [polyring.ONE]

    def __getitem__(self, n):
        if n < 0:
            return polyring.ZERO
        while len(self.values) <= n:
            self.values.append(self._next(len(self.values)))

        return self.values[n]

    def _next(self, n):
        a = self.values
        if n == 1:
            return 2 * _U2 * a[0]
        if n == 2:
            return _U2 * a[1]
        if n == 3:
            return _U2 * a[2] + _MIDDLE * a[1] + 2 * _TAIL * a[0]
        if n == 4:
            return _U2 * a[3] + _MIDDLE * a[2] + _TAIL * a[1]

        return (_U2 * a[n - 1] + _MIDDLE * a[n - 2] + _TAIL * a[n - 3] -
                _Q4 * a[n - 4])


_ALPHA = AlphaTable()


def alpha(n):
    """ alpha_n(q) from the recursion; alpha_0 = 1, alpha_n = 0 for n < 0. """
    return _ALPHA[n]


def alpha_direct(n):
    """
    alpha_n = sum over odd rho |- n of 2^(l(rho)) prod_i (q^(rho_i) - 1)^2
    / z_rho.
    """
    if n < 0:
        return polyring.ZERO
    result = polyring.ZERO
    for rho in partitions.enumerate_partitions(n, 'odd'):
        term = polyring.QPoly.const(
            fractions.Fraction(2**len(rho), partitions.z_lambda(rho)))
        for part in rho:
            term = term * (polyring.QPoly.monomial(1, part) - 1)**2
        result = result + term

    return result


def alpha_tau(tau):
    result = polyring.ONE
    for part in tau:
        result = result * alpha(part)

    return result


def _weights_match(mu, nu):
    if sum(mu) != sum(nu):
        msg = 'Weights differ: |{}| = {} and |{}| = {}'.format(
            partitions.format_partition(mu), sum(mu),
            partitions.format_partition(nu), sum(nu))
        raise WeightMismatchError(msg)


@functools.lru_cache(maxsize=None)
def _t(mu, nu):
    if not mu:
        return polyring.ONE if not any(nu) else polyring.ZERO
    total = polyring.ZERO
    for tau in partitions.bounded_compositions(mu[0], nu):
        rest = tuple(b - t for b, t in zip(nu, tau))
        total = total + alpha_tau(tau) * _t(mu[1:], rest)

    return total


def T_mu_nu(mu, nu):
    """
    T^mu_nu = sum over tau |= mu_1 with tau_i <= nu_i of alpha_tau
    T^(mu[1])_(nu - tau).

    :param mu: A composition.
    :param nu: A composition of the same weight.
    :return: QPoly
    """
    mu, nu = tuple(partitions.Composition(mu)), tuple(
        partitions.Composition(nu))
    _weights_match(mu, nu)

    return _t(mu, nu)


def contingency_matrices(rows, cols):
    """
    Every matrix of non-negative ints with the given row and column sums.

    :return: generator of tuples of row tuples
    """
    rows, cols = tuple(rows), tuple(cols)
    if sum(rows) != sum(cols):
        return

    def walk(i, remaining):
        if i == len(rows):
            if not any(remaining):
                yield ()
            return
        for row in partitions.bounded_compositions(rows[i], remaining):
            rest = tuple(c - r for c, r in zip(remaining, row))
            for tail in walk(i + 1, rest):
                yield (row, ) + tail

    for matrix in walk(0, cols):
        yield matrix


def _length(parts):
    return sum(1 for p in parts if p)


def sbtr(mu, nu):
    """ T^mu_nu / (q - 1)^(l(mu) + l(nu)). """
    value = T_mu_nu(mu, nu)

    return polyring.exact_div_qminus1_pow(value, _length(mu) + _length(nu))


def sbtr_matrix(mu, nu):
    """ The bitrace as a sum over contingency matrices of prod alpha(a_ij). """
    mu, nu = tuple(mu), tuple(nu)
    _weights_match(mu, nu)
    total = polyring.ZERO
    for matrix in contingency_matrices(mu, nu):
        term = polyring.ONE
        for row in matrix:
            term = term * alpha_tau(row)
        total = total + term

    return polyring.exact_div_qminus1_pow(total, _length(mu) + _length(nu))


def orthogonality_lhs(mu, nu, method='auto'):
    """
    sum over strict lambda |- n of 2^(-delta(lambda)) zeta^lambda_mu
    zeta^lambda_nu.
    """
    _weights_match(mu, nu)
    total = polyring.ZERO
    for lam in partitions.enumerate_partitions(sum(mu), 'strict'):
        product = (characters.character(lam, mu, method) *
                   characters.character(lam, nu, method))
        total = total + product * fractions.Fraction(1, 2**lam.delta)

    return total


def regular_char(mu):
    """ 2^n (q - 1)^(n - l(mu)) n! / prod_i mu_i!. """
    mu = partitions.Partition(mu)
    n = mu.size
    count = math.factorial(n)
    for part in mu:
        count //= math.factorial(part)

    return 2**n * count * _U**(n - mu.length)
