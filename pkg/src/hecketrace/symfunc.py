"""Truncated symmetric functions in the Schur and power-sum bases.

Partitions are weakly decreasing tuples of positive integers.  A
SymElement is a Scalar-linear combination of partitions, tagged with the
basis it is written in ('schur' or 'powersum') and a hard truncation
degree N: homogeneous components above N are dropped by every operation.

Multiplication by a power sum p_k acts in the Schur basis by the
border-strip rule: p_k s_lam = sum over partitions mu obtained from lam
by adding a connected border strip of k boxes, signed by (-1)^height.
Border strips are enumerated through beta-sets (first-column hook
lengths): adding a k-strip is moving one beta number up by k, and the
height is the number of beta numbers jumped over.  The scaled derivative
k d/dp_k is the adjoint: it removes k-strips with the same signs.

basis_change converts through the character expansion
p_mu = sum_lam chi^lam_mu s_lam (computed by iterated strip removal) and
its inverse s_lam = sum_mu chi^lam_mu p_mu / z_mu.
"""

from __future__ import annotations

from functools import lru_cache

from .scalars import ONE, ZERO, Scalar


# -- partitions ---------------------------------------------------------------

def check_partition(lam):
    lam = tuple(lam)
    if any(p <= 0 for p in lam):
        raise ValueError(f"{lam} is not a partition")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a partition")
    return lam


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, in reverse lexicographic order."""

    def rec(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    return tuple(rec(n, n)) if n >= 0 else ()


def conjugate(lam):
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def zee(lam):
    """The centralizer order prod_i i^{m_i} m_i! of a cycle type."""
    out = 1
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        fact = 1
        for i in range(2, m + 1):
            fact *= i
        out *= p ** m * fact
    return out


def _beta_set(lam, length):
    """Strictly decreasing beta numbers lam_i - i + length, i = 1..length."""
    lam = lam + (0,) * (length - len(lam))
    return [lam[i] - (i + 1) + length for i in range(length)]


def _partition_from_beta(beta):
    length = len(beta)
    beta = sorted(beta, reverse=True)
    lam = [beta[i] + (i + 1) - length for i in range(length)]
    return tuple(p for p in lam if p > 0)


def add_strips(lam, k):
    """All (mu, sign) with mu = lam plus a connected k-box border strip."""
    lam = check_partition(lam)
    length = len(lam) + k
    beta = _beta_set(lam, length)
    present = set(beta)
    out = []
    for b in beta:
        if b + k in present:
            continue
        height = sum(1 for x in beta if b < x < b + k)
        new_beta = [x for x in beta if x != b] + [b + k]
        out.append((_partition_from_beta(new_beta), (-1) ** height))
    return out


def remove_strips(lam, k):
    """All (mu, sign) with lam = mu plus a connected k-box border strip."""
    lam = check_partition(lam)
    length = len(lam) + 1
    beta = _beta_set(lam, length)
    present = set(beta)
    out = []
    for b in beta:
        if b - k < 0 or b - k in present:
            continue
        height = sum(1 for x in beta if b - k < x < b)
        new_beta = [x for x in beta if x != b] + [b - k]
        out.append((_partition_from_beta(new_beta), (-1) ** height))
    return out


# -- elements -----------------------------------------------------------------

SCHUR = "schur"
POWERSUM = "powersum"


class SymElement:
    """Truncated symmetric function: {partition: Scalar} in a tagged basis."""

    __slots__ = ("N", "basis", "terms")

    def __init__(self, N, basis, terms=None):
        if basis not in (SCHUR, POWERSUM):
            raise ValueError(f"unknown basis {basis!r}")
        self.N = N
        self.basis = basis
        self.terms = {}
        if terms:
            for lam, c in terms.items():
                if sum(lam) <= N and not c.is_zero():
                    self.terms[lam] = c

    @staticmethod
    def zero(N, basis=SCHUR):
        return SymElement(N, basis)

    @staticmethod
    def unit(N, basis=SCHUR):
        return SymElement(N, basis, {(): ONE})

    @staticmethod
    def schur(N, lam):
        return SymElement(N, SCHUR, {check_partition(lam): ONE})

    @staticmethod
    def powersum(N, lam):
        return SymElement(N, POWERSUM, {check_partition(lam): ONE})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, SymElement)
            and self.N == other.N
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.N, self.basis, tuple(sorted(self.terms.items()))))

    def _check(self, other):
        if not isinstance(other, SymElement):
            raise TypeError("expected a SymElement")
        if self.N != other.N or self.basis != other.basis:
            raise ValueError("mixing truncations or bases")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            v = terms.get(lam, ZERO) + c
            if v.is_zero():
                terms.pop(lam, None)
            else:
                terms[lam] = v
        return SymElement(self.N, self.basis, terms)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c):
        if isinstance(c, int):
            c = Scalar.from_int(c)
        if c.is_zero():
            return SymElement(self.N, self.basis)
        return SymElement(
            self.N, self.basis, {lam: c * v for lam, v in self.terms.items()}
        )

    def homogeneous_component(self, d):
        return SymElement(
            self.N,
            self.basis,
            {lam: c for lam, c in self.terms.items() if sum(lam) == d},
        )

    def __repr__(self):
        if not self.terms:
            return f"SymElement(0; N={self.N}, {self.basis})"
        tag = "s" if self.basis == SCHUR else "p"
        bits = [
            f"({c})*{tag}{list(lam)}" for lam, c in sorted(self.terms.items())
        ]
        return " + ".join(bits) + f"  (N={self.N}, {self.basis})"


def mul_powersum(k, f):
    """Multiplication by the power sum p_k; components above N are dropped."""
    if k < 1:
        raise ValueError("power sum index must be >= 1")
    terms = {}
    if f.basis == SCHUR:
        for lam, c in f.terms.items():
            if sum(lam) + k > f.N:
                continue
            for mu, sign in add_strips(lam, k):
                v = terms.get(mu, ZERO) + c * sign
                if v.is_zero():
                    terms.pop(mu, None)
                else:
                    terms[mu] = v
    else:
        for lam, c in f.terms.items():
            if sum(lam) + k > f.N:
                continue
            mu = tuple(sorted(lam + (k,), reverse=True))
            v = terms.get(mu, ZERO) + c
            if v.is_zero():
                terms.pop(mu, None)
            else:
                terms[mu] = v
    return SymElement(f.N, f.basis, terms)


def powersum_derivative(k, f):
    """The adjoint k d/dp_k of multiplication by p_k.

    On the Schur basis it removes k-box border strips with the
    border-strip signs; it annihilates the unit and satisfies
    [k d/dp_k, p_k] = k on safe truncation blocks.
    """
    if k < 1:
        raise ValueError("power sum index must be >= 1")
    terms = {}
    if f.basis == SCHUR:
        for lam, c in f.terms.items():
            for mu, sign in remove_strips(lam, k):
                v = terms.get(mu, ZERO) + c * sign
                if v.is_zero():
                    terms.pop(mu, None)
                else:
                    terms[mu] = v
    else:
        for lam, c in f.terms.items():
            mult = sum(1 for p in lam if p == k)
            if not mult:
                continue
            removed = list(lam)
            removed.remove(k)
            mu = tuple(removed)
            v = terms.get(mu, ZERO) + c * (k * mult)
            if v.is_zero():
                terms.pop(mu, None)
            else:
                terms[mu] = v
    return SymElement(f.N, f.basis, terms)


def content_sum(lam, ell):
    """sum over boxes (i, j) of q^(ell (j - i)), exactly in Q(s)."""
    lam = check_partition(lam)
    if ell < 1:
        raise ValueError("scaling index must be >= 1")
    total = ZERO
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            total = total + Scalar.q_power(ell * (j - i))
    return total


@lru_cache(maxsize=None)
def character(lam, mu):
    """Symmetric group character chi^lam_mu by iterated strip removal."""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("character needs |lam| = |mu|")
    if not lam:
        return 1
    k, rest = mu[0], mu[1:]
    total = 0
    for nu, sign in remove_strips(lam, k):
        total += sign * character(nu, rest)
    return total


def basis_change(f, target):
    """Exact change of basis between Schur and power-sum expansions."""
    if target not in (SCHUR, POWERSUM):
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return SymElement(f.N, f.basis, dict(f.terms))
    terms = {}
    if target == SCHUR:
        # p_mu = sum_lam chi^lam_mu s_lam
        for mu, c in f.terms.items():
            for lam in partitions_of(sum(mu)):
                chi = character(lam, mu)
                if not chi:
                    continue
                v = terms.get(lam, ZERO) + c * chi
                if v.is_zero():
                    terms.pop(lam, None)
                else:
                    terms[lam] = v
    else:
        # s_lam = sum_mu chi^lam_mu p_mu / z_mu
        for lam, c in f.terms.items():
            for mu in partitions_of(sum(lam)):
                chi = character(lam, mu)
                if not chi:
                    continue
                coeff = c * Scalar.from_fraction(chi, zee(mu))
                v = terms.get(mu, ZERO) + coeff
                if v.is_zero():
                    terms.pop(mu, None)
                else:
                    terms[mu] = v
    return SymElement(f.N, target, terms)


def sym_mul(f, g):
    """General product, computed through the power-sum basis."""
    fp = basis_change(f, POWERSUM) if f.basis != POWERSUM else f
    gp = basis_change(g, POWERSUM) if g.basis != POWERSUM else g
    terms = {}
    for lam, c1 in fp.terms.items():
        for mu, c2 in gp.terms.items():
            if sum(lam) + sum(mu) > f.N:
                continue
            nu = tuple(sorted(lam + mu, reverse=True))
            v = terms.get(nu, ZERO) + c1 * c2
            if v.is_zero():
                terms.pop(nu, None)
            else:
                terms[nu] = v
    prod = SymElement(f.N, POWERSUM, terms)
    return basis_change(prod, f.basis) if f.basis != POWERSUM else prod


def newton_series_check(N):
    """Verify exp(sum_n p_n u^n / n) = sum_n h_n u^n through degree N.

    The exponential is expanded with the recurrence n c_n =
    sum_{j=1}^n p_j c_{n-j} (differentiating the series), and each c_n is
    compared with the one-row Schur function of degree n.
    """
    if N < 1:
        raise ValueError("degree bound must be >= 1")
    coeffs = [SymElement.unit(N)]
    for n in range(1, N + 1):
        total = SymElement.zero(N)
        for j in range(1, n + 1):
            total = total + mul_powersum(j, coeffs[n - j])
        cn = total.scale(Scalar.from_fraction(1, n))
        coeffs.append(cn)
        if cn != SymElement.schur(N, (n,)):
            return False
    return True
