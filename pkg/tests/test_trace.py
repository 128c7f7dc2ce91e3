"""Tests for the trace (zeroth Hochschild homology) of the affine tower."""

import itertools
import random

import pytest

from hecketrace.affine import AffineElement, juxtapose, mul, w_element
from hecketrace.scalars import ONE, Q, QM1, ZERO, Scalar, qbrace
from hecketrace.trace import (
    PieceCache,
    build_piece,
    dimension_table,
    free_multidegree_count,
    get_piece,
    lift,
    monomial_basis,
    reduce_element,
    trace_class_of,
    trace_mul,
)


def x(n, j, p=1):
    return AffineElement.gen_x(n, j, p)


def t(n, i):
    return AffineElement.gen_t(n, i)


def one(n):
    return AffineElement.one(n)


def multiset_pair_count(n, d):
    """Independent oracle: enumerate multisets of (a>=1, b>=0) pairs."""
    pairs = sorted(
        ((a, b) for a in range(1, n + 1) for b in range(d + 1)), reverse=True
    )

    def rec(idx, n_rem, d_rem):
        if n_rem == 0 and d_rem == 0:
            return 1
        if idx == len(pairs) or n_rem <= 0:
            return 0
        count = 0
        a, b = pairs[idx]
        k = 0
        while k * a <= n_rem and k * b <= d_rem:
            count += rec(idx + 1, n_rem - k * a, d_rem - k * b)
            k += 1
        return count

    return rec(0, n, d)


def test_free_multidegree_count_oracle():
    for n in range(1, 5):
        for d in range(5):
            assert free_multidegree_count(n, d) == multiset_pair_count(n, d)
    # hand values: rank 1 always one monomial; (2,1) has two; (3,2) has six
    for d in range(5):
        assert free_multidegree_count(1, d) == 1
    assert free_multidegree_count(2, 1) == 2
    assert free_multidegree_count(3, 2) == 6


def test_rank1_pieces_are_one_dimensional():
    for d in range(5):
        piece = get_piece(1, d)
        assert piece.ambient_dimension == 1
        assert piece.quotient_dimension == 1


def test_piece_2_1_by_hand():
    piece = get_piece(2, 1)
    assert piece.ambient_dimension == 4
    assert piece.commutator_rank == 2
    assert piece.quotient_dimension == 2


def test_piece_2_0():
    piece = get_piece(2, 0)
    assert piece.ambient_dimension == 2
    assert piece.quotient_dimension == 2


def test_atoms_and_pairs_spans_agree():
    for n, d in [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (2, 3)]:
        a = build_piece(n, d, mode="atoms")
        p = build_piece(n, d, mode="pairs")
        assert a.commutator_rank == p.commutator_rank, (n, d)
        assert sorted(a.pivots) == sorted(p.pivots), (n, d)


def test_trace_relation_example():
    # x_1 - x_2 - ((q-1)/q) x_2 t_1 lies in the commutator subspace
    piece = get_piece(2, 1)
    e = x(2, 1) - x(2, 2) - mul(x(2, 2), t(2, 1)).scale(QM1 / Q)
    assert reduce_element(e, piece).is_zero()
    # but x_1 itself does not
    assert not reduce_element(x(2, 1), piece).is_zero()


def test_commutators_reduce_to_zero():
    rng = random.Random(23)
    piece = get_piece(2, 2)
    monos = monomial_basis(2, 1)
    for _ in range(10):
        k1, k2 = rng.choice(monos), rng.choice(monos)
        a = AffineElement(2, {k1: ONE})
        b = AffineElement(2, {k2: Scalar.from_int(rng.randint(1, 3))})
        comm = mul(a, b) - mul(b, a)
        if comm.is_zero():
            continue
        assert reduce_element(comm, piece).is_zero()


def test_reduce_errors():
    piece = get_piece(2, 1)
    with pytest.raises(ValueError):
        reduce_element(x(2, 1) + one(2), piece)  # inhomogeneous
    with pytest.raises(ValueError):
        reduce_element(x(3, 1), piece)  # rank mismatch
    with pytest.raises(ValueError):
        reduce_element(x(2, 1, 2), piece)  # wrong degree


def test_ambient_cap():
    with pytest.raises(ValueError):
        build_piece(3, 4, max_ambient_dim=10)


def test_trace_mul_commutator_example():
    # [x_1].[1_1] - [1_1].[x_1] equals the class of ((q-1)/q) x_2 t_1
    u = trace_class_of(x(1, 1))
    v = trace_class_of(one(1))
    comm = trace_mul(u, v) - trace_mul(v, u)
    expected = trace_class_of(mul(x(2, 2), t(2, 1)).scale(QM1 / Q))
    assert comm == expected
    # [1_1].[1_1] is the class of 1 in rank 2
    assert trace_mul(v, v) == trace_class_of(one(2))


def test_trace_mul_well_defined():
    # perturbing a representative by a commutator does not change products
    piece = get_piece(2, 1)
    u = trace_class_of(x(2, 1))
    v = trace_class_of(one(1))
    perturbation = mul(t(2, 1), x(2, 1)) - mul(x(2, 1), t(2, 1))
    rep = lift(u, piece) + perturbation
    u2 = reduce_element(rep, piece)
    assert u2 == u
    assert trace_mul(u2, v) == trace_mul(u, v)


def test_trace_mul_associative_small():
    a = trace_class_of(x(1, 1))
    b = trace_class_of(one(1))
    c = trace_class_of(x(1, 1, 2))
    lhs = trace_mul(trace_mul(a, b), c)
    rhs = trace_mul(a, trace_mul(b, c))
    assert lhs == rhs


def test_torus_commutator_rank2_degree1():
    # [w_{1,1}, w_{1,0}] = {1} w_{2,1} as trace classes
    w11, w10 = w_element(1, 1), w_element(1, 0)
    comm = trace_class_of(juxtapose(w11, w10) - juxtapose(w10, w11))
    expected = trace_class_of(w_element(2, 1)).scale(qbrace(1))
    assert comm == expected


def test_torus_commutator_rank2_degree2():
    # [w_{1,2}, w_{1,0}] = {2} w_{2,2} as trace classes
    w12, w10 = w_element(1, 2), w_element(1, 0)
    comm = trace_class_of(juxtapose(w12, w10) - juxtapose(w10, w12))
    expected = trace_class_of(w_element(2, 2)).scale(qbrace(2))
    assert comm == expected


def test_dimension_table_small():
    table = dimension_table(2, 3)
    for cell in table.values():
        assert cell["match"]
    assert table[(2, 1)]["computed"] == 2
    assert table[(1, 3)]["computed"] == 1


def test_dimension_rank3_low_degrees():
    cache = PieceCache()
    for d in (0, 1, 2):
        piece = cache.get(3, d)
        assert piece.quotient_dimension == free_multidegree_count(3, d), d
