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
The ring Gamma of symmetric functions generated by odd power sums, with
polynomial coefficients in q.

Elements are stored in the power-sum basis {p_rho : rho an odd partition}.
The inner product is <p_rho, p_sigma> = 2^(-l(rho)) z_rho delta.
"""

import collections
import fractions
import functools
import math

from hcchar import partitions
from hcchar import polyring


def _as_poly(value):
    if isinstance(value, polyring.QPoly):
        return value

    return polyring.QPoly.const(value)


class GammaElement(object):
    """
    A finite linear combination of odd power sums.

    :param terms: A dict mapping odd partitions to QPoly (or rational)
     coefficients.  Zero coefficients are dropped.
    """
    __slots__ = ('terms', )

    def __init__(self, terms=None):
        clean = {}
        for rho, coeff in (terms or {}).items():
            coeff = _as_poly(coeff)
            if coeff:
                clean[tuple(partitions.OddPartition(rho))] = coeff
        self.terms = clean

    @classmethod
    def _trusted(cls, terms):
        element = cls.__new__(cls)
        element.terms = {rho: c for rho, c in terms.items() if c}

        return element

    def coefficient(self, rho):
        return self.terms.get(tuple(rho), polyring.ZERO)

    def degrees(self):
        """ The set of weights |rho| carrying a nonzero coefficient. """
        return {sum(rho) for rho in self.terms}

    def max_degree(self):
        return max(self.degrees(), default=0)

    def is_zero(self):
        return not self.terms

    def items(self):
        return self.terms.items()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GammaElement):
            return NotImplemented

        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    __hash__ = None

    def __add__(self, other):
        terms = dict(self.terms)
        for rho, coeff in other.terms.items():
            terms[rho] = terms.get(rho, polyring.ZERO) + coeff

        return GammaElement._trusted(terms)

    def __neg__(self):
        return GammaElement._trusted({r: -c for r, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = _as_poly(factor)

        return GammaElement._trusted(
            {r: c * factor for r, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GammaElement):
            return gamma_mul(self, other)

        return self.scale(other)

    __rmul__ = __mul__

    def __repr__(self):
        return 'GammaElement({})'.format(self)

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for rho in sorted(self.terms, key=lambda r: (sum(r), r)):
            parts.append('({})*p{}'.format(self.terms[rho],
                                            partitions.format_partition(rho)))

        return ' + '.join(parts)


ONE = GammaElement._trusted({(): polyring.ONE})
ZERO = GammaElement._trusted({})


def power_sum(rho):
    """ The basis element p_rho. """
    return GammaElement({rho: 1})


def _merge(rho, sigma):
    return tuple(sorted(rho + sigma, reverse=True))


def gamma_mul(a, b):
    """
    Multiply two elements of Gamma.

    :param a: A GammaElement.
    :param b: A GammaElement.
    :return: GammaElement
    """
    terms = collections.defaultdict(lambda: polyring.ZERO)
    for rho, x in a.terms.items():
        for sigma, y in b.terms.items():
            key = _merge(rho, sigma)
            terms[key] = terms[key] + x * y

    return GammaElement._trusted(terms)


def inner_product(a, b):
    """
    The bilinear form <p_rho, p_sigma> = 2^(-l(rho)) z_rho delta_(rho,sigma).

    :return: QPoly
    """
    result = polyring.ZERO
    for rho, x in a.terms.items():
        y = b.terms.get(rho)
        if y is None:
            continue
        weight = fractions.Fraction(partitions.z_lambda(rho), 2**len(rho))
        result = result + x * y * weight

    return result


def _sum_over_odd(n, coefficient):
    if n < 0:
        return ZERO
    if n == 0:
        return ONE
    terms = {}
    for rho in partitions.enumerate_partitions(n, 'odd'):
        terms[tuple(rho)] = coefficient(rho) * fractions.Fraction(
            1, partitions.z_lambda(rho))

    return GammaElement._trusted(terms)


@functools.lru_cache(maxsize=None)
def expand_q_n(n):
    """ q_n = sum over odd rho |- n of 2^(l(rho))/z_rho p_rho. """
    return _sum_over_odd(n, lambda rho: polyring.QPoly.const(2**len(rho)))


@functools.lru_cache(maxsize=None)
def expand_g_n(n):
    """
    g_n = sum over odd rho |- n of (-2)^(l(rho)) prod_i (1 - q^(rho_i)) / z_rho
    p_rho.
    """
    return _sum_over_odd(
        n, lambda rho: (-2)**len(rho) * partitions.zt_denominator(rho))


@functools.lru_cache(maxsize=None)
def expand_Q_star_n(n):
    """ Q*_n.1 = sum over odd rho |- n of (-2)^(l(rho))/z_rho p_rho. """
    return _sum_over_odd(n, lambda rho: polyring.QPoly.const((-2)**len(rho)))


def g_mu(mu):
    """ The product g_mu = g_(mu_1) g_(mu_2) ... """
    result = ONE
    for part in mu:
        result = gamma_mul(result, expand_g_n(part))

    return result


def _differentiate(rho, sigma):
    """
    Apply prod_n d^(m_n(sigma))/dp_n^(m_n(sigma)) to p_rho, where
    d/dp_n p_rho = m_n(rho) p_(rho - n).

    :return: (tuple, int) or (None, 0)
    """
    counts = collections.Counter(rho)
    factor = 1
    for part, times in collections.Counter(sigma).items():
        available = counts[part]
        if available < times:
            return None, 0
        factor *= math.factorial(available) // math.factorial(available -
                                                                times)
        counts[part] = available - times

    return tuple(sorted(counts.elements(), reverse=True)), factor


def differential_sum(k, a, weight):
    """
    Apply D_k = sum over odd sigma |- k of prod_n weight(n)^(m_n) /m_n!
    d^(m_n)/dp_n^(m_n).

    :param k: A non-negative int.
    :param a: A GammaElement.
    :param weight: A callable mapping an odd part n to a QPoly.
    :return: GammaElement
    """
    if k < 0:
        return ZERO
    if k == 0:
        return a
    operators = []
    for sigma in partitions.enumerate_partitions(k, 'odd'):
        coeff = polyring.ONE
        for part, times in collections.Counter(sigma).items():
            coeff = coeff * weight(part)**times * fractions.Fraction(
                1, math.factorial(times))
        operators.append((tuple(sigma), coeff))

    terms = collections.defaultdict(lambda: polyring.ZERO)
    for rho, value in a.terms.items():
        for sigma, coeff in operators:
            lowered, factor = _differentiate(rho, sigma)
            if lowered is None:
                continue
            terms[lowered] = terms[lowered] + value * coeff * factor

    return GammaElement._trusted(terms)


def _g_star_weight(part):
    return polyring.QPoly.monomial(1, part) - 1


def apply_g_star_pbasis(k, a):
    """
    Apply the adjoint g*_k of multiplication by g_k, realized as
    sum over odd sigma |- k of prod_n (q^n - 1)^(m_n)/m_n! d^(m_n)/dp_n^(m_n).

    :param k: An int; g*_0 is the identity and g*_k = 0 for k < 0.
    :param a: A GammaElement.
    :return: GammaElement
    """
    return differential_sum(k, a, _g_star_weight)


def principal_specialize(a):
    """ Send p_r to q^r - 1 and return the resulting QPoly. """
    result = polyring.ZERO
    for rho, coeff in a.terms.items():
        value = coeff
        for part in rho:
            value = value * _g_star_weight(part)
        result = result + value

    return result
