"""The finite Hecke algebra H_n in the natural basis {T_w}.

Permutations of {0..n-1} are plain tuples in one-line notation (p[i] is
the image of i); composition applies the right factor first, so that
multiplying w on the right by the simple transposition s_i swaps the
entries of w at positions i, i+1.  The generator index i is 0-based
internally; the public constructors take the usual 1-based labels.

A HeckeElement is a sparse Scalar-linear combination of permutations.
The product is computed by factoring the right operand into generators
along reduced words and applying the quadratic relation

    T_w T_{s_i} = T_{w s_i}                   if length goes up,
    T_w T_{s_i} = (q-1) T_w + q T_{w s_i}     if length goes down.

Besides arithmetic the module provides Jucys-Murphy elements, Young
symmetrizers with their eigenvalue data, the central element that acts
on irreducibles by content sums, and the full/alternating idempotents.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .scalars import ONE, Q, QM1, ZERO, Scalar, qfact, qfact_inv, qint


# -- permutations ---------------------------------------------------------

def identity_perm(n):
    return tuple(range(n))


def perm_mul(u, v):
    """Composition u*v, applying v first."""
    return tuple(u[x] for x in v)


def perm_inverse(u):
    out = [0] * len(u)
    for i, x in enumerate(u):
        out[x] = i
    return tuple(out)


def perm_length(w):
    """Coxeter length = inversion count."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def right_gen(w, i):
    """w * s_i: swap entries at positions i, i+1."""
    lst = list(w)
    lst[i], lst[i + 1] = lst[i + 1], lst[i]
    return tuple(lst)


def left_gen(i, w):
    """s_i * w: swap the values i, i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


@lru_cache(maxsize=None)
def reduced_word(w):
    """A reduced word (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k}.

    Extracted by repeatedly removing a right descent.
    """
    word = []
    w = tuple(w)
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                word.append(i)
                w = right_gen(w, i)
                break
        else:
            break
    return tuple(reversed(word))


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(n))]


def transposition(n, a, b):
    """The transposition of the 0-based values a, b in S_n."""
    lst = list(range(n))
    lst[a], lst[b] = lst[b], lst[a]
    return tuple(lst)


# -- elements -------------------------------------------------------------

class HeckeElement:
    """Sparse element of H_n: dict {one-line perm: Scalar}, zeros pruned."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        self.rank = rank
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    self.terms[w] = c

    @staticmethod
    def zero(n):
        return HeckeElement(n)

    @staticmethod
    def one(n):
        return HeckeElement(n, {identity_perm(n): ONE})

    @staticmethod
    def basis(n, w):
        return HeckeElement(n, {tuple(w): ONE})

    @staticmethod
    def generator(n, i):
        """T_{s_i} with the 1-based label i in 1..n-1."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for rank {n}")
        return HeckeElement(n, {right_gen(identity_perm(n), i - 1): ONE})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            v = terms.get(w, ZERO) + c
            if v.is_zero():
                terms.pop(w, None)
            else:
                terms[w] = v
        return HeckeElement(self.rank, terms) if terms else HeckeElement(self.rank)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c):
        if isinstance(c, int):
            c = Scalar.from_int(c)
        if c.is_zero():
            return HeckeElement(self.rank)
        return HeckeElement(self.rank, {w: c * x for w, x in self.terms.items()})

    def _check(self, other):
        if not isinstance(other, HeckeElement):
            raise TypeError("expected a HeckeElement")
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        self._check(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "HeckeElement(0)"
        bits = [f"({c})*T{list(w)}" for w, c in sorted(self.terms.items())]
        return "HeckeElement(" + " + ".join(bits) + ")"


def _mul_right_gen(terms, i):
    """Multiply a term dict on the right by T_{s_i} (0-based i)."""
    out = {}
    for w, c in terms.items():
        if w[i] < w[i + 1]:
            ws = right_gen(w, i)
            v = out.get(ws, ZERO) + c
            if v.is_zero():
                out.pop(ws, None)
            else:
                out[ws] = v
        else:
            ws = right_gen(w, i)
            v = out.get(w, ZERO) + c * QM1
            if v.is_zero():
                out.pop(w, None)
            else:
                out[w] = v
            v = out.get(ws, ZERO) + c * Q
            if v.is_zero():
                out.pop(ws, None)
            else:
                out[ws] = v
    return out


def mul(a, b):
    """Bilinear product in H_n."""
    a._check(b)
    n = a.rank
    result = {}
    for v, cv in b.terms.items():
        word = reduced_word(v)
        terms = {w: c * cv for w, c in a.terms.items()}
        for i in word:
            terms = _mul_right_gen(terms, i)
        for w, c in terms.items():
            s = result.get(w, ZERO) + c
            if s.is_zero():
                result.pop(w, None)
            else:
                result[w] = s
    return HeckeElement(n, result) if result else HeckeElement(n)


def star(a):
    """The anti-involution determined by T_w -> T_{w^(-1)}."""
    return HeckeElement(
        a.rank, {perm_inverse(w): c for w, c in a.terms.items()}
    )


def generator_inverse(n, i):
    """T_{s_i}^(-1) = q^(-1) (T_{s_i} - (q-1))."""
    qinv = Q ** -1
    e = HeckeElement.generator(n, i).scale(qinv)
    return e + HeckeElement.one(n).scale(-qinv * QM1)


# -- Jucys-Murphy elements -------------------------------------------------

def jm(n, m):
    """The m-th Jucys-Murphy element L_m in H_n (1-based m, L_1 = 0).

    L_m = sum_{i=1}^{m-1} q^(i-m+1) T_{(i m)}; the cycle (i m) has the
    reduced word t_i ... t_{m-1} ... t_i, so each summand is a single
    basis element.
    """
    if not 1 <= m <= n:
        raise ValueError(f"index {m} out of range for rank {n}")
    terms = {}
    for i in range(1, m):
        terms[transposition(n, i - 1, m - 1)] = Scalar.q_power(i - m + 1)
    return HeckeElement(n, terms)


# -- partitions and tableaux ------------------------------------------------

def check_partition(lam):
    lam = tuple(lam)
    if any(p <= 0 for p in lam):
        raise ValueError(f"{lam} is not a partition")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition")
    return lam


def conjugate_partition(lam):
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def _row_tableau_entries(lam):
    """Box -> entry map for the tableau numbered along rows."""
    entries = {}
    k = 1
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            entries[(i, j)] = k
            k += 1
    return entries


def _column_tableau_entries(lam):
    """Box -> entry map for the tableau numbered along columns."""
    conj = conjugate_partition(lam)
    entries = {}
    k = 1
    for j, col in enumerate(conj, start=1):
        for i in range(1, col + 1):
            entries[(i, j)] = k
            k += 1
    return entries


def tableau_permutation(lam):
    """The permutation carrying the row tableau to the column tableau.

    It sends the entry a box carries in the column-numbered tableau to
    the entry the same box carries in the row-numbered tableau.  This
    direction is the distinguished double-coset representative with
    trivial intersection between the conjugated row subgroup and the
    column subgroup, which is what makes the symmetrizer nonzero; the
    opposite direction annihilates it for shapes like (3, 1).
    """
    lam = check_partition(lam)
    row = _row_tableau_entries(lam)
    col = _column_tableau_entries(lam)
    n = sum(lam)
    out = [0] * n
    for box, a in row.items():
        out[col[box] - 1] = a - 1
    return tuple(out)


def young_subgroup(lam, n):
    """All permutations preserving the consecutive blocks of sizes lam."""
    blocks = []
    start = 0
    for part in lam:
        blocks.append(list(range(start, start + part)))
        start += part
    while start < n:
        blocks.append([start])
        start += 1
    perms = []
    for combo in itertools.product(
        *(itertools.permutations(b) for b in blocks)
    ):
        flat = []
        for blk in combo:
            flat.extend(blk)
        perms.append(tuple(flat))
    return perms


def young_symmetrizer(lam):
    """z = x_lam T_w y_lam' with x, y the (signed) Young subgroup sums.

    x_lam sums T_w over the row subgroup; y_lam' sums (-q)^(-l(w)) T_w
    over the column subgroup; w is the row-to-column tableau permutation.
    """
    lam = check_partition(lam)
    n = sum(lam)
    x = HeckeElement(
        n, {w: ONE for w in young_subgroup(lam, n)}
    )
    conj = conjugate_partition(lam)
    mq_inv = -(Q ** -1)  # (-q)^(-1)
    y = HeckeElement(
        n,
        {w: mq_inv ** perm_length(w) for w in young_subgroup(conj, n)},
    )
    tw = HeckeElement.basis(n, tableau_permutation(lam))
    return mul(mul(x, tw), y)


def young_symmetrizer_star(lam):
    """The image of the Young symmetrizer under the * anti-involution."""
    return star(young_symmetrizer(lam))


def jm_eigenvalue(lam, m):
    """Eigenvalue of L_m on the left ideal of the starred symmetrizer.

    Equals q [j-i]_q where (i, j) is the box labelled m in the
    column-numbered tableau of shape lam.
    """
    lam = check_partition(lam)
    n = sum(lam)
    if not 1 <= m <= n:
        raise ValueError(f"index {m} out of range for |lam| = {n}")
    col = _column_tableau_entries(lam)
    for (i, j), entry in col.items():
        if entry == m:
            return Q * qint(j - i)
    raise AssertionError("unreachable")


def content_polynomial(lam):
    """sum over boxes (i, j) of q^(j-i) as a Scalar."""
    lam = check_partition(lam)
    total = ZERO
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            total = total + Scalar.q_power(j - i)
    return total


# -- the central element ----------------------------------------------------

def central_element_x(n):
    """The element x of H_{n+1} acting on irreducibles by content sums.

    Built from the defining sum
        x = 1 + sum_{i=1}^{n} q^(i-n-1) t_i...t_{n-1} t_n t_n t_{n-1}...t_i
    and checked against the equivalent form
        x = 1 + n + ((q-1)/q) (L_1 + ... + L_{n+1}).
    """
    if n < 0:
        raise ValueError("rank parameter must be >= 0")
    rank = n + 1
    total = HeckeElement.one(rank)
    for i in range(1, n + 1):
        word = list(range(i, n + 1)) + list(range(n, i - 1, -1))  # 1-based
        elem = HeckeElement.one(rank)
        for g in word:
            elem = mul(elem, HeckeElement.generator(rank, g))
        total = total + elem.scale(Scalar.q_power(i - (n + 1)))
    alt = HeckeElement.one(rank).scale(Scalar.from_int(1 + n))
    coeff = QM1 / Q
    for i in range(1, rank + 1):
        alt = alt + jm(rank, i).scale(coeff)
    if total != alt:
        raise AssertionError("the two defining forms of x disagree")
    return total


# -- idempotents ------------------------------------------------------------

@lru_cache(maxsize=None)
def hecke_idempotent(n, kind):
    """e(n) (kind='row') or e'(n) (kind='column'); idempotency is checked.

    e(n)  = [n]_q!^(-1)      sum_w T_w
    e'(n) = [n]_{q^-1}!^(-1) sum_w (-q)^(-l(w)) T_w
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    if kind == "row":
        coeff = qfact(n).inverse()
        e = HeckeElement(n, {w: coeff for w in all_perms(n)})
    elif kind == "column":
        coeff = qfact_inv(n).inverse()
        mq_inv = -(Q ** -1)
        e = HeckeElement(
            n, {w: coeff * mq_inv ** perm_length(w) for w in all_perms(n)}
        )
    else:
        raise ValueError("kind must be 'row' or 'column'")
    if mul(e, e) != e:
        raise AssertionError(f"idempotency failed for {kind} rank {n}")
    return e
