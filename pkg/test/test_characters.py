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

import fractions

import pytest

from hcchar import characters
from hcchar import gamma
from hcchar import golden
from hcchar import partitions
from hcchar import polyring
from hcchar import vertex


def _odd_cells(n):
    for mu in partitions.enumerate_partitions(n, 'odd'):
        for lam in partitions.enumerate_partitions(n, 'strict'):
            yield lam, mu


def _all_cells(n):
    for mu in partitions.enumerate_partitions(n):
        for lam in partitions.enumerate_partitions(n, 'strict'):
            yield lam, mu


@pytest.mark.parametrize('method', characters.METHODS)
@pytest.mark.parametrize('n', [3, 4, 5, 6, 7])
def test_char_table_matches_golden(n, method):
    table = characters.char_table(n, method)

    assert golden.golden_table(n) == table.cells


def test_char_table_layout():
    table = characters.char_table(5)

    assert 5 == table.n
    assert ((5, ), (3, 1, 1), (1, 1, 1, 1, 1)) == table.rows
    assert ((5, ), (4, 1), (3, 2)) == table.columns
    assert [((5, ), (5, )), ((4, 1), (5, ))] == list(table.cells)[:2]


def test_char_table_in_worker_processes():
    assert characters.char_table(5, jobs=2) == characters.char_table(5)


def test_char_table_raises_on_empty_weight():
    with pytest.raises(characters.DomainError):
        characters.char_table(0)


@pytest.mark.parametrize('lam, mu, expected', [
    ((4, 2), (3, 3), '4*q^4 - 16*q^3 + 28*q^2 - 16*q + 4'),
    ((4, 2, 1), (3, 3, 1), '8*q^4 - 48*q^3 + 72*q^2 - 48*q + 8'),
    ((4, 2, 1), (7, ), '0'),
    ((5, 1), (5, 1), '2*q^4 - 6*q^3 + 6*q^2 - 6*q + 2'),
    ((6, 2, 1), (5, 3, 1),
     '8*q^6 - 64*q^5 + 160*q^4 - 208*q^3 + 160*q^2 - 64*q + 8'),
])
def test_character_examples(lam, mu, expected):
    result = characters.character(lam, mu)

    assert pytest.helpers.poly(expected) == result
    assert polyring.is_palindromic(result)


@pytest.mark.parametrize('method', characters.METHODS)
def test_character_methods_agree_on_examples(method):
    expected = characters.character((4, 2, 1), (3, 3, 1), 'recursive')

    assert expected == characters.character((4, 2, 1), (3, 3, 1), method)


def _assert_methods_agree(n):
    for lam, mu in _odd_cells(n):
        values = [characters.character(lam, mu, m) for m in characters.METHODS]
        assert all(values[0] == value for value in values[1:]), (lam, mu)


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, 7])
def test_all_methods_agree_on_odd_classes(n):
    _assert_methods_agree(n)


@pytest.mark.slow
def test_all_methods_agree_on_odd_classes_of_weight_eight():
    _assert_methods_agree(8)


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6])
def test_general_methods_agree_on_every_class(n):
    for lam, mu in _all_cells(n):
        expected = characters.character(lam, mu, 'oracle')
        assert expected == characters.character(lam, mu, 'recursive')
        assert expected == characters.character(lam, mu, 'pfaffian')


@pytest.mark.parametrize('order', characters.ORDERS)
def test_recursive_is_independent_of_processing_order(order):
    for lam, mu in _all_cells(6):
        expected = characters.character(lam, mu, 'recursive')
        assert expected == characters.character(lam, mu, 'recursive', order)


def test_recursive_in_given_order_of_a_composition():
    expected = vertex.g_star_chain((4, 2), (3, 2, 1)).vacuum_coefficient()
    result = vertex.g_star_chain((4, 2), (1, 3, 2), 'given')

    assert expected == result.vacuum_coefficient()


@pytest.mark.parametrize('n', [3, 4, 5, 6, 7])
def test_characters_are_palindromic_with_bounded_degree(n):
    for lam, mu in _all_cells(n):
        value = characters.character(lam, mu)
        assert polyring.is_palindromic(value)
        assert value.degree <= n - len(mu)


@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_characters_at_one_are_integers(n):
    for lam, mu in _all_cells(n):
        value = characters.character(lam, mu)
        assert value.is_integral()
        assert polyring.eval_at(value, 1).denominator == 1


def test_character_raises_on_weight_mismatch():
    with pytest.raises(characters.DomainError):
        characters.character((3, 1), (3, ))


def test_character_raises_on_non_strict_lambda():
    with pytest.raises(ValueError):
        characters.character((2, 2), (3, 1))


@pytest.mark.parametrize('method', ['combinatorial', 'pieri'])
def test_odd_methods_raise_on_even_parts(method):
    with pytest.raises(characters.DomainError):
        characters.character((3, 1), (2, 2), method)


def test_character_raises_on_unknown_method():
    with pytest.raises(characters.DomainError):
        characters.character((3, 1), (3, 1), 'magic')


def test_auto_method_selection():
    assert 'combinatorial' == characters._resolve('auto', (3, 1, 1))
    assert 'recursive' == characters._resolve('auto', (2, 1))
    assert 'pfaffian' == characters._resolve('pfaffian', (2, 1))


def test_normalize_raises_on_non_integral_values():
    value = polyring.QPoly.const(fractions.Fraction(1, 3))

    with pytest.raises(characters.NonIntegralError):
        characters.normalize(value, (2, 1), ())


@pytest.mark.parametrize('mu', [(1, ), (3, 1), (2, 2, 1), (4, 2), (7, )])
def test_char_one_row(mu):
    n = sum(mu)

    assert characters.character((n, ), mu) == characters.char_one_row(mu)


def test_char_one_row_example():
    expected = pytest.helpers.poly('8*q^2 - 8*q + 8')

    assert expected == characters.char_one_row((3, 1, 1))


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, 7])
def test_char_single_part(n):
    for lam in partitions.enumerate_partitions(n, 'strict'):
        expected = characters.character(lam, (n, ))
        assert expected == characters.char_single_part(lam)


def test_char_single_part_raises_on_empty_partition():
    with pytest.raises(characters.BadShapeError):
        characters.char_single_part(())


@pytest.mark.parametrize('mu', [(3, 3), (5, 2), (2, 2, 1), (4, 3, 1)])
def test_c_generating_matches_c_coefficient(mu):
    c = characters.c_generating(mu)

    assert sum(mu) + 1 == len(c)
    for i, value in enumerate(c):
        assert characters.c_coefficient(mu, i) == value


def test_c_generating_is_indexed_by_power_of_v():
    u = 2 * (polyring.Q - 1)

    assert [polyring.ONE] == characters.c_generating(())
    assert [u, u] == characters.c_generating((1, ))
    assert [u * (polyring.Q - 1), u * u,
            u * (polyring.Q - 1)] == characters.c_generating((2, ))


def test_c_generating_is_symmetric():
    c = characters.c_generating((5, 2))

    assert c == c[::-1]


@pytest.mark.parametrize('n', [3, 4, 5, 6, 7])
def test_char_two_row(n):
    for mu in partitions.enumerate_partitions(n):
        for k in range(n // 2 + 1, n):
            expected = characters.character((k, n - k), mu)
            assert expected == characters.char_two_row(k, mu)


def test_char_two_row_example():
    expected = 16 * polyring.q_minus_one_power(4)

    assert expected == characters.char_two_row(5, (3, 3, 1))


@pytest.mark.parametrize('k, mu', [(3, (3, 3)), (6, (3, 3)), (2, (3, 1))])
def test_char_two_row_raises_outside_two_row_shapes(k, mu):
    with pytest.raises(characters.BadShapeError):
        characters.char_two_row(k, mu)


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, 7])
def test_char_column(n):
    for lam in partitions.enumerate_partitions(n, 'strict'):
        expected = characters.character(lam, (1, ) * n)
        assert expected == characters.char_column(lam)


def test_char_column_example():
    assert 160 == characters.char_column((4, 2))


@pytest.mark.parametrize('n', [3, 4, 5, 6, 7])
def test_char_hook_mu(n):
    for k in range(1, n + 1, 2):
        mu = (k, ) + (1, ) * (n - k)
        for lam in partitions.enumerate_partitions(n, 'strict'):
            expected = characters.character(lam, mu)
            assert expected == characters.char_hook_mu(lam, k)


@pytest.mark.parametrize('k', [0, 2, 6])
def test_char_hook_mu_raises_outside_odd_hooks(k):
    with pytest.raises(characters.BadShapeError):
        characters.char_hook_mu((3, 2), k)


def test_wt_gds_examples():
    lam = (15, 14, 10, 8, 7, 6, 5, 3, 1)
    nu = (13, 11, 8, 6, 5, 4, 2, 1)
    expected = (-32 * polyring.QPoly.monomial(1, 5) *
                polyring.q_minus_one_power(7) *
                pytest.helpers.poly('q^2 - 3*q + 1'))

    assert expected == characters.wt_gds(lam, nu)


def test_wt_gds_raises_off_double_strips():
    with pytest.raises(characters.NotGDSError):
        characters.wt_gds((3, 2, 1), ())


def test_sbs_principal_single_row():
    assert pytest.helpers.poly('2*q^2 - 4*q + 2') == characters.sbs_principal(
        (2, ))


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_frobenius_expansion(n):
    for mu in partitions.enumerate_partitions(n):
        result = gamma.ZERO
        for lam in partitions.enumerate_partitions(n, 'strict'):
            coefficient = characters.g_value(lam, mu, 'recursive')
            weight = coefficient * fractions.Fraction(1, 2**len(lam))
            result = result + vertex.Q_lambda_vacuum(tuple(lam)).scale(weight)

        assert gamma.g_mu(mu) == result


@pytest.mark.parametrize('func', [
    characters.char_oracle,
    characters.char_recursive,
    characters.char_pfaffian,
    characters.char_combinatorial,
    characters.char_pieri,
])
def test_char_functions(func):
    expected = pytest.helpers.poly('4*q^4 - 16*q^3 + 28*q^2 - 16*q + 4')

    assert expected == func((4, 2), (3, 3))
