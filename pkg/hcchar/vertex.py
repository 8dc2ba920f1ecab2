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
Vertex operators Q_m on Gamma, Clifford straightening, and the action of
g*_k on the basis Q_lambda.1.

Q_m a = sum_i q_(m+i) D_i(a) where D_i is the odd differential operator
with weight -1 per derivative; Q_lambda.1 = Q_(lambda_1) ... Q_(lambda_l).1
is the Schur Q-function.  The operators satisfy
{Q_m, Q_n} = (-1)^m 2 delta_(m,-n), Q_(-n).1 = 0 for n > 0 and Q_0.1 = 1.
"""

import collections
import functools

from hcchar import gamma
from hcchar import partitions
from hcchar import polyring

SignedMonomial = collections.namedtuple('SignedMonomial',
                                        ['sign', 'partition'])


def _minus_one(part):
    return polyring.QPoly.const(-1)


def apply_Q_m(m, a):
    """
    Apply the vertex operator Q_m to an element of Gamma.

    :param m: An int (any sign).
    :param a: A GammaElement.
    :return: GammaElement
    """
    result = gamma.ZERO
    for i in range(a.max_degree() + 1):
        if m + i < 0:
            continue
        lowered = gamma.differential_sum(i, a, _minus_one)
        if lowered:
            result = result + gamma.gamma_mul(gamma.expand_q_n(m + i),
                                              lowered)

    return result


@functools.lru_cache(maxsize=None)
def Q_lambda_vacuum(lam):
    """
    Q_lambda.1 in the power-sum basis.

    :param lam: A tuple of ints (usually a strict partition).
    :return: GammaElement
    """
    element = gamma.ONE
    for part in reversed(tuple(lam)):
        element = apply_Q_m(part, element)

    return element


def signed_sort(seq):
    """
    Sort distinct positive indices decreasingly, tracking the sign of the
    permutation.  A repeated index makes the monomial vanish.

    :param seq: A tuple of positive ints.
    :return: SignedMonomial
    """
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        return SignedMonomial(0, partitions.StrictPartition())
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq))
                     if seq[i] < seq[j])
    ordered = tuple(sorted(seq, reverse=True))

    return SignedMonomial((-1)**inversions,
                          partitions.StrictPartition(ordered))


def _accumulate(target, source, factor):
    for key, value in source.items():
        target[key] = target.get(key, 0) + value * factor


@functools.lru_cache(maxsize=None)
def _straighten(seq):
    if not seq:
        return {(): 1}
    if all(part > 0 for part in seq):
        monomial = signed_sort(seq)
        if not monomial.sign:
            return {}
        return {tuple(monomial.partition): monomial.sign}
    last = seq[-1]
    if last < 0:
        return {}
    if last == 0:
        return _straighten(seq[:-1])
    for i in range(len(seq) - 1):
        a, b = seq[i], seq[i + 1]
        if a > b:
            continue
        if a == b:
            if a:
                return {}
            return _straighten(seq[:i] + seq[i + 2:])
        result = {}
        _accumulate(result, _straighten(seq[:i] + (b, a) + seq[i + 2:]), -1)
        if a == -b:
            _accumulate(result, _straighten(seq[:i] + seq[i + 2:]),
                        2 * (-1)**b)
        return {k: v for k, v in result.items() if v}

    return {seq: 1}


def straighten(seq):
    """
    Rewrite Q_(a_1) ... Q_(a_k).1 for arbitrary ints a_i as a combination of
    Q_lambda.1 with lambda strict.

    :param seq: A sequence of ints.
    :return: list of (QPoly, StrictPartition)
    """
    return [(polyring.QPoly.const(coeff), partitions.StrictPartition(lam))
            for lam, coeff in sorted(_straighten(tuple(seq)).items())]


class QBasisElement(object):
    """ A finite combination of Q_lambda.1 with lambda strict. """
    __slots__ = ('terms', )

    def __init__(self, terms=None):
        clean = {}
        for lam, coeff in (terms or {}).items():
            if not isinstance(coeff, polyring.QPoly):
                coeff = polyring.QPoly.const(coeff)
            if coeff:
                clean[tuple(partitions.StrictPartition(lam))] = coeff
        self.terms = clean

    @classmethod
    def basis(cls, lam):
        return cls({tuple(lam): 1})

    def coefficient(self, lam):
        return self.terms.get(tuple(lam), polyring.ZERO)

    def vacuum_coefficient(self):
        return self.coefficient(())

    def items(self):
        return self.terms.items()

    def __eq__(self, other):
        if not isinstance(other, QBasisElement):
            return NotImplemented

        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = ' + '.join(
            '({})*Q[{}]'.format(c, partitions.format_partition(lam))
            for lam, c in sorted(self.terms.items()))

        return 'QBasisElement({})'.format(body or '0')

    def to_gamma(self):
        """ Expand in the power-sum basis. """
        result = gamma.ZERO
        for lam, coeff in self.terms.items():
            result = result + Q_lambda_vacuum(lam).scale(coeff)

        return result


@functools.lru_cache(maxsize=None)
def f_single(k):
    """ f_k = 2(q-1)(k)_q, with f_0 = 1 and f_k = 0 for k < 0. """
    if k < 0:
        return polyring.ZERO
    if k == 0:
        return polyring.ONE

    return 2 * (polyring.Q - 1) * polyring.round_bracket(k)


@functools.lru_cache(maxsize=None)
def f_coeff(tau):
    """ f_tau = prod_i f_(tau_i); zero parts contribute 1. """
    result = polyring.ONE
    for part in tau:
        result = result * f_single(part)

    return result


@functools.lru_cache(maxsize=None)
def f_pair(m, n):
    """
    f_(m,n) = f_m f_n + 2 sum_(a=1..n) (-1)^a f_(m+a) f_(n-a), and
    f_(m,0) = f_m.
    """
    if n == 0:
        return f_single(m)
    result = f_single(m) * f_single(n)
    for a in range(1, n + 1):
        result = result + 2 * (-1)**a * f_single(m + a) * f_single(n - a)

    return result


def f_pair_closed(m, n):
    """
    Closed form of :func:`f_pair`: f_(m,0) = f_m, f_(n,n) = 0 for n > 0,
    f_(m,n) = 2(-q)^n f_(m-n) for m > n > 0, antisymmetric otherwise.
    """
    if n == 0:
        return f_single(m)
    if m == 0:
        return -f_single(n)
    if m == n:
        return polyring.ZERO
    if m < n:
        return -f_pair_closed(n, m)

    return 2 * polyring.QPoly.monomial((-1)**n, n) * f_single(m - n)


def apply_g_star_Qbasis(k, a):
    """
    g*_k Q_lambda.1 = sum over tau |= k with l(lambda) parts of
    f_tau Q_(lambda - tau).1, straightened back into the strict basis.

    :param k: A non-negative int.
    :param a: A QBasisElement.
    :return: QBasisElement
    """
    if k == 0:
        return a
    terms = {}
    for lam, coeff in a.terms.items():
        for tau in partitions.all_compositions(k, len(lam)):
            weight = f_coeff(tau)
            if not weight:
                continue
            shifted = tuple(x - y for x, y in zip(lam, tau))
            for result, sign in _straighten(shifted).items():
                terms[result] = (terms.get(result, polyring.ZERO) +
                                 coeff * weight * sign)

    return QBasisElement(terms)


def processing_order(mu, order='decreasing'):
    """
    The order in which the parts of ``mu`` are consumed.

    :param order: ``decreasing``, ``increasing`` or ``given``.
    """
    if order == 'decreasing':
        return tuple(sorted(mu, reverse=True))
    elif order == 'increasing':
        return tuple(sorted(mu))
    elif order == 'given':
        return tuple(mu)
    raise ValueError('Unknown processing order {!r}'.format(order))


def g_star_chain(lam, mu, order='decreasing'):
    """
    Apply g*_(mu_i) to Q_lambda.1 for every part of ``mu``.

    :return: QBasisElement
    """
    element = QBasisElement.basis(lam)
    for part in processing_order(mu, order):
        element = apply_g_star_Qbasis(part, element)

    return element
