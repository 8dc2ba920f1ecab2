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
Exact univariate polynomials in q over the rationals.

Every character value, structure constant and bitrace computed by hcchar is
a :class:`QPoly`.  Coefficients are :class:`fractions.Fraction` so that the
intermediate values of the oracle method, which carry 1/z_rho factors, stay
exact.
"""

import fractions
import json
import numbers
import re

VARIABLE = 'q'

_TERM = re.compile(r'([+-])([^+-]+)')
_MONOMIAL = re.compile(r'^(?:(\d+(?:/\d+)?)\*?)?q(?:\^(\d+))?$')
_CONSTANT = re.compile(r'^\d+(?:/\d+)?$')


class NonDivisibleError(ArithmeticError):
    """ Error raised when an exact division by a power of (q-1) fails. """
    pass


def _coerce(value):
    if isinstance(value, QPoly):
        return value
    if isinstance(value, numbers.Rational):
        return QPoly((value, ))

    return NotImplemented


class QPoly(object):
    """
    A polynomial sum(coeffs[i] * q^i) with rational coefficients.

    The coefficient tuple is normalized so that it never ends in a zero; the
    zero polynomial has an empty tuple.  Instances are immutable and
    hashable.
    """
    __slots__ = ('coeffs', )

    def __init__(self, coeffs=()):
        coeffs = [fractions.Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def __getstate__(self):
        return (self.coeffs, )

    def __setstate__(self, state):
        self.coeffs = state[0]

    @classmethod
    def const(cls, value):
        return cls((value, ))

    @classmethod
    def monomial(cls, coeff, exponent):
        """
        Return coeff * q^exponent.

        :param coeff: A rational coefficient.
        :param exponent: A non-negative int.
        :return: QPoly
        """
        if exponent < 0:
            raise ValueError('Negative exponent {}'.format(exponent))

        return cls((0, ) * exponent + (coeff, ))

    @property
    def degree(self):
        """ Degree of the polynomial, -1 for zero. """
        return len(self.coeffs) - 1

    @property
    def valuation(self):
        """ Lowest exponent with a nonzero coefficient, -1 for zero. """
        for i, c in enumerate(self.coeffs):
            if c:
                return i

        return -1

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        return self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result

        return not result

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c

        return QPoly(summed)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other

        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPoly()
        product = [fractions.Fraction(0)] * (len(self.coeffs) +
                                             len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b

        return QPoly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, numbers.Integral) or exponent < 0:
            raise ValueError('Exponent must be a non-negative int')
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1

        return result

    def __call__(self, value):
        """ Evaluate at ``value`` by Horner's rule. """
        result = fractions.Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c

        return result

    def __repr__(self):
        return 'QPoly({!r})'.format(self.render())

    def __str__(self):
        return self.render()

    def render(self):
        """
        Canonical text form ``a_d*q^d + ... + a_0`` with explicit signs.

        :return: str
        """
        return _render(self, _text_monomial)

    def latex(self):
        """ Render for a LaTeX math cell, e.g. ``4q^{4} - 16q^{3} + 4``. """
        return _render(self, _latex_monomial)

    def to_json(self):
        return {
            'var': VARIABLE,
            'coeffs': [[c.numerator, c.denominator] for c in self.coeffs]
        }

    @classmethod
    def from_json(cls, data):
        """
        Rebuild a polynomial from the output of :meth:`to_json`.

        :param data: A dict (or a JSON string) with ``var`` and ``coeffs``.
        :return: QPoly
        """
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or data.get('var') != VARIABLE:
            raise ValueError('Not a polynomial in {}: {!r}'.format(VARIABLE,
                                                                    data))
        coeffs = []
        for pair in data.get('coeffs', []):
            num, den = pair
            if not isinstance(num, int) or not isinstance(den, int) or not den:
                raise ValueError('Bad coefficient {!r}'.format(pair))
            coeffs.append(fractions.Fraction(num, den))

        return cls(coeffs)


ZERO = QPoly()
ONE = QPoly((1, ))
Q = QPoly((0, 1))


def _text_monomial(magnitude, exponent):
    if exponent == 0:
        return str(magnitude)
    prefix = '' if magnitude == 1 else '{}*'.format(magnitude)
    if exponent == 1:
        return '{}q'.format(prefix)

    return '{}q^{}'.format(prefix, exponent)


def _latex_monomial(magnitude, exponent):
    if magnitude.denominator != 1:
        coeff = r'\frac{{{}}}{{{}}}'.format(magnitude.numerator,
                                            magnitude.denominator)
    else:
        coeff = str(magnitude.numerator)
    if exponent == 0:
        return coeff
    if magnitude == 1:
        coeff = ''
    if exponent == 1:
        return '{}q'.format(coeff)

    return '{}q^{{{}}}'.format(coeff, exponent)


def _render(poly, monomial):
    parts = []
    for exponent in range(poly.degree, -1, -1):
        c = poly.coeffs[exponent]
        if not c:
            continue
        term = monomial(abs(c), exponent)
        if not parts:
            parts.append('-' + term if c < 0 else term)
        else:
            parts.append(('- ' if c < 0 else '+ ') + term)

    return ' '.join(parts) if parts else '0'


def parse_poly(text):
    """
    Parse the canonical text form back into a polynomial.

    :param text: A string such as ``'4*q^4 - 16*q^3 + 4'`` or ``'-q'``.
    :return: QPoly
    """
    compact = text.replace(' ', '')
    if not compact:
        raise ValueError('Empty polynomial text')
    if compact[0] not in '+-':
        compact = '+' + compact
    terms = _TERM.findall(compact)
    if ''.join(sign + body for sign, body in terms) != compact:
        raise ValueError('Unable to parse polynomial {!r}'.format(text))

    result = ZERO
    for sign, body in terms:
        if _CONSTANT.match(body):
            coeff, exponent = fractions.Fraction(body), 0
        else:
            match = _MONOMIAL.match(body)
            if not match:
                raise ValueError('Unable to parse term {!r}'.format(body))
            coeff = fractions.Fraction(match.group(1) or 1)
            exponent = int(match.group(2) or 1)
        if sign == '-':
            coeff = -coeff
        result = result + QPoly.monomial(coeff, exponent)

    return result


def poly_arith(a, b, op):
    """
    Apply ``op`` to two polynomials and return the result.

    :param a: A QPoly.
    :param b: A QPoly, or a rational scalar for ``scale``; ignored for
     ``neg``.
    :param op: One of ``add``, ``sub``, ``mul``, ``neg``, ``scale``.
    :return: QPoly
    """
    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    elif op == 'neg':
        return -a
    elif op == 'scale':
        return a * fractions.Fraction(b)
    raise ValueError('Unknown polynomial operation {!r}'.format(op))


def _divide_by_q_minus_one(f):
    coeffs = f.coeffs
    if not coeffs:
        return f
    quotient = [0] * (len(coeffs) - 1)
    carry = fractions.Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry += coeffs[i]
        quotient[i - 1] = carry
    if carry + coeffs[0]:
        msg = '{} is not divisible by (q - 1)'.format(f.render())
        raise NonDivisibleError(msg)

    return QPoly(quotient)


def exact_div_qminus1_pow(f, m):
    """
    Divide by (q-1)^m exactly, by repeated synthetic division.

    :param f: A QPoly.
    :param m: A non-negative int.
    :return: QPoly
    :raises NonDivisibleError: if a remainder is left.
    """
    if m < 0:
        raise ValueError('Negative power {}'.format(m))
    original = f
    try:
        for _ in range(m):
            f = _divide_by_q_minus_one(f)
    except NonDivisibleError:
        msg = '{} is not divisible by (q - 1)^{}'.format(original.render(), m)
        raise NonDivisibleError(msg)

    return f


def eval_at(f, x):
    """ Evaluate ``f`` at the rational ``x``. """
    return f(fractions.Fraction(x))


def is_palindromic(f):
    """
    True when the coefficients between the valuation and the degree read the
    same in both directions.  Zero is palindromic.
    """
    if not f:
        return True
    body = f.coeffs[f.valuation:]

    return body == body[::-1]


def round_bracket(k):
    """
    The alternating integer (k)_q = q^(k-1) - q^(k-2) + ... + (-1)^(k-1).

    (0)_q = 1 and (k)_q = 0 for k < 0.

    :return: QPoly
    """
    if k < 0:
        return ZERO
    if k == 0:
        return ONE

    return QPoly((-1)**(k - 1 - i) for i in range(k))


def square_bracket(k):
    """ The q-integer [k]_q = 1 + q + ... + q^(k-1), k >= 1. """
    if k < 1:
        raise ValueError('[k]_q needs k >= 1, got {}'.format(k))

    return QPoly((1, ) * k)


def q_minus_one_power(m):
    """ Return (q - 1)^m. """
    return (Q - 1)**m
