"""Zeroth Hochschild homology of the graded pieces of the tower {AH_n^+}.

A graded piece (n, d) is the span of the PBW monomials x^a T_w of rank n
and total x-degree d.  Its commutator subspace is the degree-d part of
[A, A]; the quotient is HH_0 in that bidegree.  Everything is exact
linear algebra over Q(s): commutator rows are row-reduced into an RREF
whose non-pivot columns index the quotient basis.

Commutator generators: the identity [u, vw] = [uv, w] + [wu, v] shows
that commutators [m, g] of a basis monomial m with a single algebra
generator g (some t_i or x_j) already span [A, A] in each degree, so
only those pairs are generated.  A property test compares this against
the span of all basis-monomial pairs on small pieces.

Trace classes multiply through the tower: lift to representatives,
juxtapose, reduce in the target piece.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .affine import AffineElement, juxtapose, mul
from .hecke import all_perms, identity_perm, right_gen
from .scalars import ONE, ZERO, Scalar

DEFAULT_AMBIENT_CAP = 5000


def compositions(total, parts):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


class GradedPiece:
    """One bidegree (rank, degree) with its computed quotient structure."""

    __slots__ = (
        "rank",
        "degree",
        "basis",
        "index",
        "rows",
        "pivots",
        "quotient_cols",
    )

    def __init__(self, rank, degree, basis, index, rows, pivots):
        self.rank = rank
        self.degree = degree
        self.basis = basis
        self.index = index
        self.rows = rows          # RREF rows: dict {col: Scalar}, pivot = 1
        self.pivots = pivots      # dict {pivot col: row position}
        self.quotient_cols = [
            j for j in range(len(basis)) if j not in pivots
        ]

    @property
    def ambient_dimension(self):
        return len(self.basis)

    @property
    def commutator_rank(self):
        return len(self.rows)

    @property
    def quotient_dimension(self):
        return len(self.quotient_cols)


class TraceClass:
    """Coordinates of a trace class relative to a piece's quotient basis."""

    __slots__ = ("rank", "degree", "coords")

    def __init__(self, rank, degree, coords):
        self.rank = rank
        self.degree = degree
        self.coords = tuple(coords)

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, TraceClass)
            and self.rank == other.rank
            and self.degree == other.degree
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.rank, self.degree, self.coords))

    def scale(self, c):
        return TraceClass(self.rank, self.degree, [c * x for x in self.coords])

    def __add__(self, other):
        if (self.rank, self.degree) != (other.rank, other.degree):
            raise ValueError("trace classes live in different pieces")
        return TraceClass(
            self.rank,
            self.degree,
            [a + b for a, b in zip(self.coords, other.coords)],
        )

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def __repr__(self):
        return f"TraceClass(n={self.rank}, d={self.degree}, {list(self.coords)})"


def monomial_basis(n, d):
    """Ordered ambient basis of the (n, d) piece: (exponents, perm) keys."""
    return [
        (exps, w)
        for exps in sorted(compositions(d, n))
        for w in sorted(all_perms(n))
    ]


def _eliminate(row, rows, pivots):
    """Reduce a sparse row against RREF rows in place; returns the row."""
    for col in sorted(row):
        if col not in row:
            continue
        pos = pivots.get(col)
        if pos is None:
            continue
        factor = row[col]
        for c2, v2 in rows[pos].items():
            cur = row.get(c2, ZERO) - factor * v2
            if cur.is_zero():
                row.pop(c2, None)
            else:
                row[c2] = cur
    return row


def _insert_row(row, rows, pivots):
    """Insert a new row into the RREF; returns True if rank grew."""
    row = _eliminate(row, rows, pivots)
    if not row:
        return False
    # pivot choice: cheapest entry (fewest polynomial terms), ties by column
    pivot_col = min(
        row, key=lambda c: (len(row[c].num) + len(row[c].den), c)
    )
    inv = row[pivot_col].inverse()
    row = {c: inv * v for c, v in row.items()}
    # back-eliminate the new pivot from existing rows
    for pos, existing in enumerate(rows):
        v = existing.get(pivot_col)
        if v is None:
            continue
        for c2, v2 in row.items():
            cur = existing.get(c2, ZERO) - v * v2
            if cur.is_zero():
                existing.pop(c2, None)
            else:
                existing[c2] = cur
    pivots[pivot_col] = len(rows)
    rows.append(row)
    return True


def _element_row(e, index):
    row = {}
    for key, c in e.terms.items():
        row[index[key]] = c
    return row


def _commutator_generators(n, d, mode):
    """Yield pairs (u, v) of AffineElements whose commutators span [A,A]_d."""
    basis_by_degree = {k: monomial_basis(n, k) for k in range(d + 1)}
    gens = []
    zero_exp = (0,) * n
    idp = identity_perm(n)
    for i in range(n - 1):
        gens.append((zero_exp, right_gen(idp, i), 0))
    for j in range(n):
        exps = [0] * n
        exps[j] = 1
        gens.append((tuple(exps), idp, 1))

    def elem(key):
        return AffineElement(n, {key: ONE})

    if mode == "atoms":
        for gexps, gperm, gdeg in gens:
            if d - gdeg < 0:
                continue
            g = AffineElement(n, {(gexps, gperm): ONE})
            for key in basis_by_degree[d - gdeg]:
                yield AffineElement(n, {key: ONE}), g
    elif mode == "pairs":
        for d1 in range(d + 1):
            d2 = d - d1
            if d1 > d2:
                continue
            for k1, key1 in enumerate(basis_by_degree[d1]):
                keys2 = basis_by_degree[d2]
                start = k1 + 1 if d1 == d2 else 0
                for key2 in keys2[start:]:
                    yield elem(key1), elem(key2)
    else:
        raise ValueError("mode must be 'atoms' or 'pairs'")


def build_piece(n, d, max_ambient_dim=DEFAULT_AMBIENT_CAP, mode="atoms"):
    """Construct the (n, d) graded piece of the trace.

    Enumerates the ambient monomial basis, generates spanning commutators,
    and row-reduces them exactly over Q(s).
    """
    if n < 1 or d < 0:
        raise ValueError("need rank >= 1 and degree >= 0")
    basis = monomial_basis(n, d)
    if len(basis) > max_ambient_dim:
        raise ValueError(
            f"ambient dimension {len(basis)} exceeds cap {max_ambient_dim}"
        )
    index = {key: j for j, key in enumerate(basis)}
    rows = []
    pivots = {}
    for u, v in _commutator_generators(n, d, mode):
        comm = mul(u, v) - mul(v, u)
        if comm.is_zero():
            continue
        _insert_row(_element_row(comm, index), rows, pivots)
    return GradedPiece(n, d, basis, index, rows, pivots)


class PieceCache:
    """Caches built pieces; the default instance backs the module API."""

    def __init__(self, max_ambient_dim=DEFAULT_AMBIENT_CAP):
        self.max_ambient_dim = max_ambient_dim
        self._pieces = {}

    def get(self, n, d):
        key = (n, d)
        if key not in self._pieces:
            self._pieces[key] = build_piece(n, d, self.max_ambient_dim)
        return self._pieces[key]


_default_cache = PieceCache()


def get_piece(n, d):
    return _default_cache.get(n, d)


def reduce_element(e, piece):
    """Project a homogeneous element onto the piece's quotient basis."""
    if e.rank != piece.rank:
        raise ValueError("rank mismatch with the graded piece")
    if not e.is_homogeneous():
        raise ValueError("element is not degree-homogeneous")
    if e.terms and e.degree() != piece.degree:
        raise ValueError(
            f"element degree {e.degree()} differs from piece degree "
            f"{piece.degree}"
        )
    row = _eliminate(_element_row(e, piece.index), piece.rows, piece.pivots)
    leftover = set(row) - set(piece.quotient_cols)
    if leftover:
        raise AssertionError("reduction left support on pivot columns")
    coords = [row.get(j, ZERO) for j in piece.quotient_cols]
    return TraceClass(piece.rank, piece.degree, coords)


def lift(tc, piece):
    """A representative AffineElement of a trace class."""
    terms = {}
    for c, j in zip(tc.coords, piece.quotient_cols):
        if not c.is_zero():
            terms[piece.basis[j]] = c
    return AffineElement(piece.rank, terms)


def trace_mul(u, v, cache=None):
    """Product of trace classes through the tower inclusion."""
    cache = cache or _default_cache
    pu = cache.get(u.rank, u.degree)
    pv = cache.get(v.rank, v.degree)
    target = cache.get(u.rank + v.rank, u.degree + v.degree)
    prod = juxtapose(lift(u, pu), lift(v, pv))
    return reduce_element(prod, target)


def trace_class_of(e, cache=None):
    """Reduce a homogeneous element in the piece it determines."""
    cache = cache or _default_cache
    if e.is_zero():
        raise ValueError("the zero element has no well-defined bidegree")
    return reduce_element(e, cache.get(e.rank, e.degree()))


@lru_cache(maxsize=None)
def free_multidegree_count(n, d):
    """Monomial count of multidegree (n, d) in free commuting variables.

    One variable u_{a,b} for each a >= 1, b >= 0, with u_{a,b} of degree
    (a, b); counts multisets of pairs with coordinate sums (n, d).
    """
    pairs = [(a, b) for a in range(1, n + 1) for b in range(d + 1)]

    def count(idx, n_rem, d_rem):
        if n_rem == 0 and d_rem == 0:
            return 1
        if idx == len(pairs) or n_rem <= 0:
            return 0
        a, b = pairs[idx]
        total = 0
        k = 0
        while k * a <= n_rem and k * b <= d_rem:
            total += count(idx + 1, n_rem - k * a, d_rem - k * b)
            k += 1
        return total

    return count(0, n, d)


def dimension_table(max_n, max_d, cache=None):
    """Computed HH_0 dimensions next to the free-polynomial counts.

    Returns {(n, d): {"computed": int, "expected": int, "match": bool}}.
    """
    cache = cache or _default_cache
    table = {}
    for n in range(1, max_n + 1):
        for d in range(max_d + 1):
            piece = cache.get(n, d)
            expected = free_multidegree_count(n, d)
            table[(n, d)] = {
                "computed": piece.quotient_dimension,
                "expected": expected,
                "match": piece.quotient_dimension == expected,
            }
    return table
