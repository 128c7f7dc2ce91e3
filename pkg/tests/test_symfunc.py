"""Tests for truncated symmetric functions and the border-strip rule.

The independent oracle expands Schur functions into monomials in m
variables through the branching rule (iterated horizontal strips), which
shares no code with the beta-set border-strip implementation under test.
"""

import itertools
from functools import lru_cache

import pytest

from hecketrace.scalars import ONE, Q, Scalar, ZERO
from hecketrace.symfunc import (
    POWERSUM,
    SCHUR,
    SymElement,
    add_strips,
    basis_change,
    character,
    conjugate,
    content_sum,
    mul_powersum,
    newton_series_check,
    partitions_of,
    powersum_derivative,
    remove_strips,
    sym_mul,
    zee,
)


# -- the monomial-expansion oracle -------------------------------------------

@lru_cache(maxsize=None)
def schur_poly(nu, m):
    """s_nu(x_1..x_m) as {exponent tuple: int}, by the branching rule."""
    if m == 0:
        return {(): 1} if not nu else {}
    if len(nu) > m:
        return {}
    out = {}
    for mu in _horizontal_strip_subshapes(nu):
        inner = schur_poly(mu, m - 1)
        strip = sum(nu) - sum(mu)
        for vec, c in inner.items():
            key = vec + (strip,)
            out[key] = out.get(key, 0) + c
    return out


def _horizontal_strip_subshapes(nu):
    """All mu contained in nu with nu/mu a horizontal strip."""
    if not nu:
        yield ()
        return
    bounds = []
    for i, part in enumerate(nu):
        lo = nu[i + 1] if i + 1 < len(nu) else 0
        bounds.append(range(lo, part + 1))
    for choice in itertools.product(*bounds):
        yield tuple(p for p in choice if p > 0)


def poly_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def powersum_poly(k, m):
    out = {}
    for i in range(m):
        vec = [0] * m
        vec[i] = k
        out[tuple(vec)] = 1
    return out


def expand_in_schur(poly, m):
    """Greedy Schur expansion of a symmetric polynomial dict."""
    poly = dict(poly)
    coeffs = {}
    while poly:
        shape = max(
            (tuple(sorted(vec, reverse=True)) for vec, c in poly.items() if c),
            default=None,
        )
        if shape is None:
            break
        vec = tuple(sorted(shape, reverse=True)) + (0,) * (m - len(shape))
        c = poly.get(vec, 0)
        assert c, "expansion lost triangularity"
        lam = tuple(p for p in shape if p > 0)
        coeffs[lam] = c
        for e2, c2 in schur_poly(lam, m).items():
            v = poly.get(e2, 0) - c * c2
            if v:
                poly[e2] = v
            else:
                poly.pop(e2, None)
    return coeffs


def oracle_mul_powersum(k, lam):
    """p_k s_lam in the Schur basis, via brute-force monomial expansion."""
    m = sum(lam) + k
    poly = poly_mul(powersum_poly(k, m), schur_poly(tuple(lam), m))
    return expand_in_schur(poly, m)


# -- basic structure ----------------------------------------------------------

def test_partitions_of():
    assert partitions_of(0) == ((),)
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_conjugate_and_zee():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert zee((1, 1, 1)) == 6
    assert zee((2, 1)) == 2
    assert zee((3,)) == 3


def test_strip_addition_examples():
    assert add_strips((), 1) == [((1,), 1)]
    out = dict(add_strips((1,), 2))
    assert out == {(3,): 1, (1, 1, 1): -1}
    # removal is the transpose relation of addition
    for lam in [(2,), (2, 1), (3, 1)]:
        for k in (1, 2, 3):
            for mu, sign in add_strips(lam, k):
                assert (lam, sign) in remove_strips(mu, k)


def test_mul_powersum_examples():
    N = 8
    assert mul_powersum(1, SymElement.unit(N)) == SymElement.schur(N, (1,))
    got = mul_powersum(2, SymElement.schur(N, (1,)))
    expected = SymElement.schur(N, (3,)) - SymElement.schur(N, (1, 1, 1))
    assert got == expected


def test_mul_powersum_against_monomial_oracle():
    N = 12
    for size in range(0, 6):
        for lam in partitions_of(size):
            for k in range(1, 5):
                got = mul_powersum(k, SymElement.schur(N, lam))
                expected = oracle_mul_powersum(k, lam)
                got_ints = {
                    mu: c for mu, c in got.terms.items()
                }
                assert set(got_ints) == set(expected), (lam, k)
                for mu, c in expected.items():
                    assert got_ints[mu] == Scalar.from_int(c), (lam, k, mu)


def test_truncation_drops_high_degree():
    f = SymElement.schur(3, (2,))
    assert mul_powersum(2, f).is_zero()
    assert mul_powersum(1, f) == SymElement.schur(3, (3,)) + SymElement.schur(
        3, (2, 1)
    )


def test_powersum_derivative_examples():
    # 2 d/dp_2 applied to p_2 in the powersum basis gives 2
    f = SymElement.powersum(8, (2,))
    assert powersum_derivative(2, f) == SymElement.unit(8, POWERSUM).scale(2)
    assert powersum_derivative(1, SymElement.schur(8, (1,))) == SymElement.unit(8)
    assert powersum_derivative(2, SymElement.schur(8, (3,))) == SymElement.schur(
        8, (1,)
    )
    assert powersum_derivative(3, SymElement.unit(8)).is_zero()


def _operator_matrix(op, N, d_from, d_to):
    rows = list(partitions_of(d_to))
    cols = list(partitions_of(d_from))
    mat = {}
    for j, lam in enumerate(cols):
        image = op(SymElement.schur(N, lam))
        for mu, c in image.terms.items():
            mat[(rows.index(mu), j)] = c
    return mat, len(rows), len(cols)


def test_derivative_is_transpose_of_multiplication():
    N = 8
    for k in (1, 2, 3):
        for d in range(0, N - k + 1):
            mul_mat, nr, nc = _operator_matrix(
                lambda f: mul_powersum(k, f), N, d, d + k
            )
            der_mat, nr2, nc2 = _operator_matrix(
                lambda f: powersum_derivative(k, f), N, d + k, d
            )
            assert (nr, nc) == (nc2, nr2)
            assert der_mat == {(j, i): c for (i, j), c in mul_mat.items()}


def test_canonical_commutation():
    N = 9
    for k in (1, 2, 3):
        for m in (1, 2, 3):
            # blocks where both composition orders stay within degree N
            for d in range(0, N - k - m + 1):
                for lam in partitions_of(d):
                    f = SymElement.schur(N, lam)
                    lhs = powersum_derivative(k, mul_powersum(m, f)) - (
                        mul_powersum(m, powersum_derivative(k, f))
                    )
                    expected = f.scale(k) if k == m else SymElement.zero(N)
                    assert lhs == expected, (k, m, lam)


def test_powersum_operators_commute():
    N = 8
    for k in (1, 2, 3):
        for m in (1, 2, 3):
            for d in range(0, N - k - m + 1):
                for lam in partitions_of(d):
                    f = SymElement.schur(N, lam)
                    assert mul_powersum(k, mul_powersum(m, f)) == mul_powersum(
                        m, mul_powersum(k, f)
                    )


def test_content_sum():
    assert content_sum((), 1) == ZERO
    assert content_sum((2, 1), 1) == ONE + Q + Q ** -1
    assert content_sum((2,), 2) == ONE + Q ** 2


def test_character_values():
    # chi^(n)_mu = 1 and chi^(1^n)_mu = sign for every cycle type mu
    for n in range(1, 6):
        for mu in partitions_of(n):
            assert character((n,), mu) == 1
            sign = (-1) ** (n - len(mu))
            assert character((1,) * n, mu) == sign
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 1), (3,)) == -1


def test_basis_change_examples():
    N = 8
    p1 = SymElement.powersum(N, (1,))
    assert basis_change(p1, SCHUR) == SymElement.schur(N, (1,))
    p2 = SymElement.powersum(N, (2,))
    assert basis_change(p2, SCHUR) == SymElement.schur(N, (2,)) - (
        SymElement.schur(N, (1, 1))
    )


def test_basis_change_roundtrip():
    N = 6
    for size in range(0, N + 1):
        for lam in partitions_of(size):
            f = SymElement.schur(N, lam)
            assert basis_change(basis_change(f, POWERSUM), SCHUR) == f
            g = SymElement.powersum(N, lam)
            assert basis_change(basis_change(g, SCHUR), POWERSUM) == g


def test_basis_change_agrees_with_iterated_multiplication():
    # p_mu as iterated border-strip multiplication equals the character map
    N = 7
    for size in range(1, 6):
        for mu in partitions_of(size):
            elem = SymElement.unit(N)
            for part in mu:
                elem = mul_powersum(part, elem)
            assert elem == basis_change(SymElement.powersum(N, mu), SCHUR)


def test_sym_mul_pieri():
    N = 6
    s1 = SymElement.schur(N, (1,))
    prod = sym_mul(s1, s1)
    assert prod == SymElement.schur(N, (2,)) + SymElement.schur(N, (1, 1))
    s21 = SymElement.schur(N, (2, 1))
    assert sym_mul(s1, s21) == sym_mul(s21, s1)


def test_newton_series():
    assert newton_series_check(1)
    assert newton_series_check(3)
    assert newton_series_check(6)
    with pytest.raises(ValueError):
        newton_series_check(0)
