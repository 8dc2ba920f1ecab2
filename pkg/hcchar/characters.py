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
Characters zeta^lambda_mu(q) of the Hecke-Clifford algebra.

Every method computes the unnormalized value G^lambda_mu(q) =
<g_mu, Q_lambda.1>; the character is
zeta^lambda_mu = 2^(-epsilon(lambda)) G^lambda_mu / (q - 1)^(l(mu)).

``oracle``, ``recursive`` and ``pfaffian`` accept any partition mu;
``combinatorial`` and ``pieri`` require mu odd.
"""

import collections
import concurrent.futures
import fractions
import functools

from hcchar import gamma
from hcchar import partitions
from hcchar import pfaffian
from hcchar import polyring
from hcchar import vertex

METHODS = ('oracle', 'recursive', 'pfaffian', 'combinatorial', 'pieri')
ORDERS = ('decreasing', 'increasing', 'given')

CharTable = collections.namedtuple('CharTable',
                                   ['n', 'rows', 'columns', 'cells'])


class DomainError(ValueError):
    """ Error raised when arguments fall outside a method's hypotheses. """
    pass


class NotGDSError(ValueError):
    """ Error raised when a skew diagram is not a generalized double strip. """
    pass


class BadShapeError(ValueError):
    """ Error raised when a closed form is asked for outside its domain. """
    pass


class NonIntegralError(ArithmeticError):
    """ Error raised when a character value has a non-integer coefficient. """
    pass


def _check(lam, mu, odd=False):
    lam = partitions.StrictPartition(lam)
    mu = (partitions.OddPartition if odd else partitions.Partition)(mu)
    if lam.size != mu.size:
        msg = '|lambda| = {} differs from |mu| = {}'.format(lam.size, mu.size)
        raise DomainError(msg)

    return tuple(lam), tuple(mu)


def _require_odd(mu):
    if any(part % 2 == 0 for part in mu):
        msg = '{} is not an odd partition'.format(
            partitions.format_partition(mu))
        raise DomainError(msg)


def normalize(value, lam, mu):
    """
    Turn G^lambda_mu into zeta^lambda_mu and assert integrality.

    :return: QPoly
    """
    scaled = value * fractions.Fraction(1, 2**partitions.epsilon(lam))
    length = sum(1 for part in mu if part)
    result = polyring.exact_div_qminus1_pow(scaled, length)
    if not result.is_integral():
        msg = 'zeta^{}_{} = {} is not integral'.format(
            partitions.format_partition(lam), partitions.format_partition(mu),
            result)
        raise NonIntegralError(msg)

    return result


# G^lambda_mu by method


@functools.lru_cache(maxsize=None)
def g_oracle(lam, mu):
    """ G^lambda_mu = <g_mu, Q_lambda.1> computed inside Gamma. """
    return gamma.inner_product(
        gamma.g_mu(mu), vertex.Q_lambda_vacuum(tuple(lam)))


def g_recursive(lam, mu, order='decreasing'):
    """ Vacuum coefficient of g*_(mu_l) ... g*_(mu_1) Q_lambda.1. """
    return vertex.g_star_chain(lam, mu, order).vacuum_coefficient()


_skew_value = functools.lru_cache(maxsize=None)(pfaffian.skew_Q_principal)


@functools.lru_cache(maxsize=None)
def _contained_strict(lam, size):
    return tuple(
        tuple(nu) for nu in partitions.enumerate_partitions(size, 'strict')
        if partitions.contains(lam, nu))


@functools.lru_cache(maxsize=None)
def g_pfaffian(lam, mu):
    """ Peel mu_1 off with Q_(lambda/nu)(t, -1) evaluated as a Pfaffian. """
    lam, mu = tuple(lam), tuple(mu)
    if not mu:
        return polyring.ONE if not lam else polyring.ZERO
    total = polyring.ZERO
    for nu in _contained_strict(lam, sum(lam) - mu[0]):
        weight = _skew_value(lam, nu)
        if weight:
            total = total + weight * g_pfaffian(nu, mu[1:])

    return total


@functools.lru_cache(maxsize=None)
def _gds_weight(lam, nu):
    kind = partitions.classify_skew(lam, nu)
    if kind.kind is partitions.SkewKind.NOT_GDS:
        return None
    result = polyring.QPoly.monomial((-1)**kind.c, kind.c)
    if kind.l_jump == 2:
        result = result * 2
    for rows in kind.beta_components:
        result = result * sbs_principal(rows)

    return result


def sbs_principal(rows):
    """
    Principal specialization of a shifted border strip with the given row
    counts (top to bottom): sum over coarsenings tau of
    (-1)^(s - l(tau)) f_tau.
    """
    rows = tuple(rows)
    result = polyring.ZERO
    for tau in partitions.coarsenings(rows):
        sign = (-1)**(len(rows) - len(tau))
        result = result + sign * vertex.f_coeff(tau)

    return result


def wt_gds(lam, nu):
    """
    Q_(lambda/nu)(t, -1) for a generalized double strip:
    (-t)^c 2^[l(lambda) = l(nu) + 2] prod over beta components of the
    border strip weight.

    :raises NotGDSError: if lambda/nu is not a generalized double strip.
    """
    value = _gds_weight(tuple(lam), tuple(nu))
    if value is None:
        msg = '{}/{} is not a generalized double strip'.format(
            partitions.format_partition(lam), partitions.format_partition(nu))
        raise NotGDSError(msg)

    return value


@functools.lru_cache(maxsize=None)
def g_combinatorial(lam, mu):
    """ Sum over chains of generalized double strips of the product of wt. """
    lam, mu = tuple(lam), tuple(mu)
    if not mu:
        return polyring.ONE if not lam else polyring.ZERO
    total = polyring.ZERO
    for nu in _contained_strict(lam, sum(lam) - mu[0]):
        weight = _gds_weight(lam, nu)
        if weight:
            total = total + weight * g_combinatorial(nu, mu[1:])

    return total


@functools.lru_cache(maxsize=None)
def g_pieri(lam, mu):
    """
    Peel off the first row of lambda: sum over i >= lambda_1, tau in
    C^mu_i and xi with lambda[1]/xi a horizontal (i - lambda_1)-strip of
    (-1)^(i - lambda_1) 2^(a) f_tau G^xi_(mu - tau).
    """
    lam, mu = tuple(lam), tuple(mu)
    n = sum(mu)
    if not lam:
        return polyring.ONE if n == 0 else polyring.ZERO
    if sum(lam) != n:
        return polyring.ZERO
    first, rest = lam[0], lam[1:]
    total = polyring.ZERO
    for i in range(first, n + 1):
        strips = list(partitions.pieri_strips(rest, i - first, 'sub'))
        if not strips:
            continue
        sign = (-1)**(i - first)
        for tau in partitions.bounded_compositions(i, mu):
            weight = vertex.f_coeff(tau)
            if not weight:
                continue
            remainder = tuple(
                sorted((m - t for m, t in zip(mu, tau) if m - t),
                       reverse=True))
            for xi, a in strips:
                inner = g_pieri(xi, remainder)
                if inner:
                    total = total + sign * 2**a * weight * inner

    return total


# characters


def char_oracle(lam, mu):
    lam, mu = _check(lam, mu)

    return normalize(g_oracle(lam, mu), lam, mu)


def char_recursive(lam, mu, order='decreasing'):
    """
    zeta^lambda_mu through repeated g*_k on the Q-basis.

    :param order: processing order of the parts of mu.
    """
    lam, mu = _check(lam, mu)

    return normalize(g_recursive(lam, mu, order), lam, mu)


def char_pfaffian(lam, mu):
    lam, mu = _check(lam, mu)

    return normalize(g_pfaffian(lam, mu), lam, mu)


def char_combinatorial(lam, mu):
    lam, mu = _check(lam, mu)
    _require_odd(mu)

    return normalize(g_combinatorial(lam, mu), lam, mu)


def char_pieri(lam, mu):
    lam, mu = _check(lam, mu)
    _require_odd(mu)

    return normalize(g_pieri(lam, mu), lam, mu)


def g_value(lam, mu, method='auto', order='decreasing'):
    """ G^lambda_mu for the named method. """
    lam, mu = _check(lam, mu)
    method = _resolve(method, mu)
    if method in ('combinatorial', 'pieri'):
        _require_odd(mu)
    if method == 'oracle':
        return g_oracle(lam, mu)
    elif method == 'recursive':
        return g_recursive(lam, mu, order)
    elif method == 'pfaffian':
        return g_pfaffian(lam, mu)
    elif method == 'combinatorial':
        return g_combinatorial(lam, mu)

    return g_pieri(lam, mu)


def _resolve(method, mu):
    if method == 'auto':
        if all(part % 2 for part in mu):
            return 'combinatorial'
        return 'recursive'
    if method not in METHODS:
        raise DomainError('Unknown method {!r}'.format(method))

    return method


def character(lam, mu, method='auto', order='decreasing'):
    """
    zeta^lambda_mu(q) by the named method.

    :param lam: A strict partition.
    :param mu: A partition of the same weight.
    :param method: One of :data:`METHODS` or ``auto`` (combinatorial for odd
     mu, recursive otherwise).
    :param order: processing order for the recursive method.
    :return: QPoly
    """
    lam, mu = _check(lam, mu)

    return normalize(g_value(lam, mu, method, order), lam, mu)


# closed forms


def char_one_row(mu):
    """ zeta^(n)_mu = 2^(l(mu)) prod_i (mu_i)_q. """
    mu = partitions.Partition(mu)
    result = polyring.QPoly.const(2**mu.length)
    for part in mu:
        result = result * polyring.round_bracket(part)

    return result


def char_single_part(lam):
    """
    zeta^lambda_(n) = 2(-q)^(lambda_2) (lambda_1 - lambda_2)_q when
    l(lambda) <= 2, and 0 otherwise.
    """
    lam = partitions.StrictPartition(lam)
    if not lam:
        raise BadShapeError('The empty partition has no single part class')
    if lam.length > 2:
        return polyring.ZERO
    second = lam[1] if lam.length == 2 else 0

    return (2 * polyring.QPoly.monomial((-1)**second, second) *
            polyring.round_bracket(lam[0] - second))


def c_generating(mu):
    """
    Expand the generating polynomial C(v) = (2q-2)^(l(mu)) prod_i sum_j
    (2q-2)^(1 - [j = mu_i] - [j = 0]) (j)_q (mu_i - j)_q v^j.

    :param mu: A composition, read as the parts mu_1 .. mu_l.
    :return: list of QPoly of length |mu| + 1 indexed by r, where entry r
     is the coefficient of v^r in C(v), that is c_r(mu; q).
    """
    u = 2 * (polyring.Q - 1)
    product = [polyring.ONE]
    for m in mu:
        factor = [
            u**(2 - (j == 0) - (j == m)) * polyring.round_bracket(j) *
            polyring.round_bracket(m - j) for j in range(m + 1)
        ]
        merged = [polyring.ZERO] * (len(product) + m)
        for i, a in enumerate(product):
            for j, b in enumerate(factor):
                merged[i + j] = merged[i + j] + a * b
        product = merged

    return product


def c_coefficient(mu, i):
    """ c_i(mu; q) = sum over tau in C^mu_i of f_tau f_(mu - tau). """
    result = polyring.ZERO
    for tau in partitions.bounded_compositions(i, mu):
        rest = tuple(m - t for m, t in zip(mu, tau))
        result = result + vertex.f_coeff(tau) * vertex.f_coeff(rest)

    return result


def char_two_row(k, mu):
    """
    zeta^(k, n-k)_mu for n - k < k < n from the coefficients of C(v):
    G = c_k + 2 sum_(i > k) (-1)^(i-k) c_i.

    :raises BadShapeError: when (k, n - k) is not a two-row strict
     partition.
    """
    mu = partitions.Partition(mu)
    n = mu.size
    if not n - k < k < n:
        msg = '({},{}) is not a two-row strict partition'.format(k, n - k)
        raise BadShapeError(msg)
    c = c_generating(mu)
    value = c[k]
    for i in range(k + 1, n + 1):
        value = value + 2 * (-1)**(i - k) * c[i]

    return normalize(value, (k, n - k), tuple(mu))


def char_column(lam):
    """ zeta^lambda_(1^n) = 2^(n - epsilon(lambda)) g^lambda. """
    lam = partitions.StrictPartition(lam)
    value = 2**(lam.size - lam.epsilon) * partitions.shifted_syt_count(lam)

    return polyring.QPoly.const(value)


def char_hook_mu(lam, k):
    """
    zeta^lambda_(k, 1^(n-k)) for odd k = 2^(n-k-epsilon(lambda))/(q-1)
    sum over k-generalized double strips lambda/nu of wt(lambda/nu) g^nu.
    """
    lam = partitions.StrictPartition(lam)
    n = lam.size
    if k < 1 or k % 2 == 0 or k > n:
        msg = '({},1^{}) is not an odd hook'.format(k, n - k)
        raise BadShapeError(msg)
    total = polyring.ZERO
    for nu in _contained_strict(tuple(lam), n - k):
        weight = _gds_weight(tuple(lam), nu)
        if weight:
            total = total + weight * partitions.shifted_syt_count(nu)
    total = total * fractions.Fraction(2**(n - k), 2**lam.epsilon)

    return polyring.exact_div_qminus1_pow(total, 1)


# tables


def _table_cell(args):
    lam, mu, method, order = args

    return character(lam, mu, method, order)


def char_table(n, method='auto', jobs=1, order='decreasing'):
    """
    The character table of weight ``n``: rows are odd partitions mu,
    columns strict partitions lambda, both in reverse-lexicographic order.

    :param n: A positive int.
    :param method: One of :data:`METHODS` or ``auto``.
    :param jobs: Worker processes; 1 computes in-process.
    :return: CharTable with ``cells`` keyed by (lambda, mu)
    """
    if n < 1:
        raise DomainError('Table weight must be positive, got {}'.format(n))
    rows = partitions.enumerate_partitions(n, 'odd')
    columns = partitions.enumerate_partitions(n, 'strict')
    keys = [(lam, mu) for mu in rows for lam in columns]
    work = [(lam, mu, method, order) for lam, mu in keys]
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_table_cell, work))
    else:
        values = [_table_cell(args) for args in work]

    return CharTable(n, rows, columns,
                     collections.OrderedDict(zip(keys, values)))
