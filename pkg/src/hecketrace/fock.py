"""The Fock-space representation of the positive Hall algebra.

Operators act on symmetric functions truncated at degree N, stored as
exact matrix blocks in the Schur basis, one block per source degree.
The generator actions are

    (l, 0)  -> multiplication by the power sum p_l,
    (-l, 0) -> the scaled derivative l d/dp_l,
    (0, l)  -> diagonal with eigenvalue 1/({1}^l {l}) + ({l}/{1}^l) B_l

where B_l is the content sum of the indexing partition.  A general point
(a, b) with a != 0, b >= 1 is built recursively as

    rho(a, b) = -[rho(a, 0), rho(0, b)] / {a b}

and memoized; decomposition independence is a tested property, not an
assumption.  Truncation bookkeeping: a block at source degree d exists
exactly when every intermediate degree of the defining composition stays
in [0, N] (degrees below 0 carry the zero space, so such blocks exist
and are empty; degrees above N are genuinely undefined and excluded).

relation_check compares [rho(x), rho(y)] with the bracket image on all
blocks where both sides are defined.
"""

from __future__ import annotations

from .hecke import content_polynomial, jm, mul as hecke_mul
from .hecke import central_element_x, young_symmetrizer_star
from .hecke import HeckeElement
from .scalars import ONE, ZERO, Scalar, qbrace
from .symfunc import (
    SCHUR,
    SymElement,
    content_sum,
    mul_powersum,
    partitions_of,
    powersum_derivative,
)


class FockOperator:
    """Degree-graded exact operator on truncated symmetric functions.

    blocks[d] maps source degree d to target degree d + shift as a sparse
    column dict: {col_index: {row_index: Scalar}} relative to the
    canonical partition lists of the two degrees.  A block whose target
    degree is negative is an empty dict (the zero space).
    """

    __slots__ = ("N", "shift", "blocks")

    def __init__(self, N, shift, blocks):
        self.N = N
        self.shift = shift
        self.blocks = blocks

    @staticmethod
    def zero(N, shift, domain):
        return FockOperator(N, shift, {d: {} for d in domain})

    def domain(self):
        return set(self.blocks)

    def scale(self, c):
        if isinstance(c, int):
            c = Scalar.from_int(c)
        blocks = {}
        for d, cols in self.blocks.items():
            if c.is_zero():
                blocks[d] = {}
                continue
            blocks[d] = {
                j: {i: c * v for i, v in col.items()} for j, col in cols.items()
            }
        return FockOperator(self.N, self.shift, blocks)

    def __add__(self, other):
        if self.N != other.N or self.shift != other.shift:
            raise ValueError("operator shapes differ")
        blocks = {}
        for d in self.domain() & other.domain():
            cols = {}
            for j in set(self.blocks[d]) | set(other.blocks[d]):
                col = dict(self.blocks[d].get(j, {}))
                for i, v in other.blocks[d].get(j, {}).items():
                    s = col.get(i, ZERO) + v
                    if s.is_zero():
                        col.pop(i, None)
                    else:
                        col[i] = s
                if col:
                    cols[j] = col
            blocks[d] = cols
        return FockOperator(self.N, self.shift, blocks)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def __eq__(self, other):
        return (
            isinstance(other, FockOperator)
            and self.N == other.N
            and self.shift == other.shift
            and self.blocks == other.blocks
        )

    def equal_on_common_blocks(self, other):
        common = self.domain() & other.domain()
        if not common:
            raise ValueError("no common blocks to compare")
        return all(self.blocks[d] == other.blocks[d] for d in common)

    def apply(self, f):
        """Apply to a SymElement in the Schur basis."""
        if f.basis != SCHUR or f.N != self.N:
            raise ValueError("operand must be Schur-basis with matching N")
        out = SymElement.zero(self.N)
        for lam, c in f.terms.items():
            d = sum(lam)
            if d not in self.blocks:
                raise ValueError(f"operator undefined on degree {d}")
            target = list(partitions_of(d + self.shift)) if d + self.shift >= 0 else []
            col = self.blocks[d].get(_pindex(d)[lam], {})
            for i, v in col.items():
                out = out + SymElement.schur(self.N, target[i]).scale(c * v)
        return out


def _pindex(d):
    return {lam: i for i, lam in enumerate(partitions_of(d))}


def compose(a, b):
    """a after b; blocks exist where the chain stays within bounds."""
    if a.N != b.N:
        raise ValueError("truncation mismatch")
    blocks = {}
    for d, bcols in b.blocks.items():
        mid = d + b.shift
        if mid < 0:
            # the inner factor lands in the zero space; composite is zero
            blocks[d] = {}
            continue
        if mid not in a.blocks:
            continue
        acols = a.blocks[mid]
        cols = {}
        for j, bcol in bcols.items():
            col = {}
            for k, bv in bcol.items():
                acol = acols.get(k)
                if not acol:
                    continue
                for i, av in acol.items():
                    s = col.get(i, ZERO) + av * bv
                    if s.is_zero():
                        col.pop(i, None)
                    else:
                        col[i] = s
            if col:
                cols[j] = col
        blocks[d] = cols
    return FockOperator(a.N, a.shift + b.shift, blocks)


def commutator(a, b):
    return compose(a, b) - compose(b, a)


def identity_operator(N, domain):
    blocks = {}
    for d in domain:
        size = len(partitions_of(d))
        blocks[d] = {j: {j: ONE} for j in range(size)}
    return FockOperator(N, 0, blocks)


def _matrix_of(op_func, N, shift):
    """Blocks of a degree-homogeneous operator given on Schur generators."""
    blocks = {}
    for d in range(N + 1):
        if d + shift > N:
            continue
        cols = {}
        if d + shift >= 0:
            target_index = _pindex(d + shift)
            for j, lam in enumerate(partitions_of(d)):
                image = op_func(SymElement.schur(N, lam))
                col = {}
                for mu, c in image.terms.items():
                    col[target_index[mu]] = c
                if col:
                    cols[j] = col
        blocks[d] = cols
    return blocks


def rho_generator(point, N):
    """The operator of a generator point (l,0), (-l,0) or (0,l)."""
    a, b = point
    if b == 0 and a >= 1:
        return FockOperator(
            N, a, _matrix_of(lambda f: mul_powersum(a, f), N, a)
        )
    if b == 0 and a <= -1:
        l = -a
        return FockOperator(
            N, a, _matrix_of(lambda f: powersum_derivative(l, f), N, a)
        )
    if a == 0 and b >= 1:
        br1 = qbrace(1)
        scale = qbrace(b) / br1 ** b
        const = (br1 ** b * qbrace(b)).inverse()
        blocks = {}
        for d in range(N + 1):
            cols = {}
            for j, lam in enumerate(partitions_of(d)):
                ev = const + scale * content_sum(lam, b) if lam else const
                if not ev.is_zero():
                    cols[j] = {j: ev}
            blocks[d] = cols
        return FockOperator(N, 0, blocks)
    raise ValueError(f"{point} is not a generator point")


_rho_memo = {}


def rho(point, N):
    """The operator of any point (a, b) with b >= 0, (a, b) != (0, 0).

    Non-generator points use the canonical decomposition through
    ((a, 0), (0, b)); results are memoized per (point, N).
    """
    a, b = point
    if b < 0 or (a, b) == (0, 0):
        raise ValueError(f"{point} is not a valid point")
    key = (a, b, N)
    if key in _rho_memo:
        return _rho_memo[key]
    if a == 0 or b == 0:
        op = rho_generator(point, N)
    else:
        horizontal = rho((a, 0), N)
        vertical = rho((0, b), N)
        d = a * b
        op = commutator(horizontal, vertical).scale(-(qbrace(d).inverse()))
    _rho_memo[key] = op
    return op


def rho_via(u, v, N):
    """rho(u + v) from the decomposition (u, v); needs det(u, v) != 0."""
    d = u[0] * v[1] - u[1] * v[0]
    if d == 0:
        raise ValueError("decomposition needs a nonzero determinant")
    return commutator(rho(u, N), rho(v, N)).scale(-(qbrace(d).inverse()))


def relation_check(x, y, N):
    """Compare [rho(x), rho(y)] with the bracket image on valid blocks."""
    a1, b1 = x
    a2, b2 = y
    lhs = commutator(rho(x, N), rho(y, N))
    if b1 == 0 and b2 == 0 and a1 == -a2:
        rhs = identity_operator(N, lhs.domain()).scale(-a1)
        return lhs.equal_on_common_blocks(rhs)
    d = a1 * b2 - b1 * a2
    if d == 0:
        return all(not cols for cols in lhs.blocks.values())
    rhs = rho((a1 + a2, b1 + b2), N).scale(-qbrace(d))
    return lhs.equal_on_common_blocks(rhs)


def vacuum_annihilation(ell):
    """The annihilation operator kills the vacuum vector."""
    if ell < 1:
        raise ValueError("index must be >= 1")
    N = ell + 1
    image = rho((-ell, 0), N).apply(SymElement.unit(N))
    return image.is_zero()


def jm_cross_check(lam):
    """Tie the Hecke route to the content-sum formula for a partition.

    Computes the central element (1/{1})(1/{1}^2 + x) of the rank-|lam|
    Hecke algebra, acts on the starred Young symmetrizer, extracts the
    scalar, and compares with (1/{1})(1/{1}^2 + content sum) computed on
    the symmetric-function side.  Raises if the action is not scalar.
    """
    lam = tuple(lam)
    n1 = sum(lam)
    if not 1 <= n1 <= 5:
        raise ValueError("partition size must be between 1 and 5")
    br1 = qbrace(1)
    x = central_element_x(n1 - 1)
    w_op = (
        HeckeElement.one(n1).scale((br1 ** 2).inverse()) + x
    ).scale(br1.inverse())
    zs = young_symmetrizer_star(lam)
    image = hecke_mul(w_op, zs)
    key = next(iter(zs.terms))
    scalar = image.terms.get(key, ZERO) / zs.terms[key]
    if image != zs.scale(scalar):
        raise ArithmeticError("central element did not act by a scalar")
    expected = br1.inverse() * ((br1 ** 2).inverse() + content_sum(lam, 1))
    return scalar == expected
