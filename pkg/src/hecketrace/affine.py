"""The positive affine Hecke algebra AH_n^+ in PBW normal form.

Basis monomials are x_1^{a_1} ... x_n^{a_n} T_w with all a_i >= 0,
stored as (exponent tuple, permutation tuple).  The defining cross
relation t_i x_{i+1} t_i = q x_i is used through the two derived
single-step rewriting rules (obtained by multiplying the relation by
t_i^{-1} = q^{-1}(t_i - (q-1)) on either side):

    t_i x_i     = x_{i+1} t_i + (q-1) x_i
    t_i x_{i+1} = x_i t_i     - (q-1) x_i

together with t_i x_j = x_j t_i for j outside {i, i+1}.  These rules are
not independent axioms; their consistency (both reduction orders give
t_i x_{i+1} t_i = q x_i) is covered by tests.

The module also provides the tower product (juxtaposition of ranks), the
affine-linear change of variables between the x and y generator systems,
the strand-cabling substitution on braid words, and the two-parameter
family of elements whose trace classes generate the trace of the tower.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .hecke import (
    HeckeElement,
    identity_perm,
    left_gen,
    perm_length,
    reduced_word,
)
from .scalars import ONE, Q, QM1, ZERO, Scalar, qbrace

_HALF = Scalar.s_power(-1)  # q^(-1/2)


class AffineElement:
    """Sparse element of AH_n^+: dict {(exps, perm): Scalar}."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        self.rank = rank
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if not c.is_zero():
                    self.terms[key] = c

    @staticmethod
    def zero(n):
        return AffineElement(n)

    @staticmethod
    def one(n):
        return AffineElement(n, {((0,) * n, identity_perm(n)): ONE})

    @staticmethod
    def gen_x(n, j, power=1):
        """x_j^power with the 1-based label j in 1..n."""
        if not 1 <= j <= n:
            raise ValueError(f"x index {j} out of range for rank {n}")
        if power < 0:
            raise ValueError("negative x powers are not in AH^+")
        exps = [0] * n
        exps[j - 1] = power
        return AffineElement(n, {(tuple(exps), identity_perm(n)): ONE})

    @staticmethod
    def gen_t(n, i):
        """T_{s_i} with the 1-based label i in 1..n-1."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"t index {i} out of range for rank {n}")
        from .hecke import right_gen

        return AffineElement(
            n, {((0,) * n, right_gen(identity_perm(n), i - 1)): ONE}
        )

    @staticmethod
    def from_hecke(e):
        n = e.rank
        zero = (0,) * n
        return AffineElement(n, {(zero, w): c for w, c in e.terms.items()})

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Max total x-degree over monomials (-1 for the zero element)."""
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e, _ in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        return (
            isinstance(other, AffineElement)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            v = terms.get(key, ZERO) + c
            if v.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = v
        return AffineElement(self.rank, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c):
        if isinstance(c, int):
            c = Scalar.from_int(c)
        if c.is_zero():
            return AffineElement(self.rank)
        return AffineElement(
            self.rank, {key: c * x for key, x in self.terms.items()}
        )

    def _check(self, other):
        if not isinstance(other, AffineElement):
            raise TypeError("expected an AffineElement")
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
            return "AffineElement(0)"
        bits = []
        for (e, w), c in sorted(self.terms.items()):
            xs = "".join(
                f"x{j + 1}^{p}" if p > 1 else f"x{j + 1}"
                for j, p in enumerate(e)
                if p
            )
            bits.append(f"({c})*{xs or '1'}*T{list(w)}")
        return "AffineElement(" + " + ".join(bits) + ")"


@lru_cache(maxsize=None)
def _push_t(p, r):
    """t x^p y^r in normal form for adjacent variables x = x_i, y = x_{i+1}.

    Returns a tuple of (coeff, p', r', has_t) meaning coeff x^{p'} y^{r'}
    optionally followed by t.  Independent of i and of the rank.
    """
    if p == 0 and r == 0:
        return ((ONE, 0, 0, True),)
    out = []
    if p > 0:
        # t x = y t + (q-1) x
        for c, p2, r2, has_t in _push_t(p - 1, r):
            out.append((c, p2, r2 + 1, has_t))
        out.append((QM1, p, r, False))
    else:
        # t y = x t - (q-1) x
        for c, p2, r2, has_t in _push_t(0, r - 1):
            out.append((c, p2 + 1, r2, has_t))
        out.append((-QM1, 1, r - 1, False))
    # merge duplicate monomials
    merged = {}
    for c, p2, r2, has_t in out:
        key = (p2, r2, has_t)
        v = merged.get(key, ZERO) + c
        if v.is_zero():
            merged.pop(key, None)
        else:
            merged[key] = v
    return tuple((c, p2, r2, h) for (p2, r2, h), c in merged.items())


def _left_t(i, terms):
    """Multiply a normal-form term dict on the left by t_{s_i} (0-based)."""
    out = {}

    def acc(key, c):
        v = out.get(key, ZERO) + c
        if v.is_zero():
            out.pop(key, None)
        else:
            out[key] = v

    for (e, w), c in terms.items():
        for cf, p2, r2, has_t in _push_t(e[i], e[i + 1]):
            ne = list(e)
            ne[i] = p2
            ne[i + 1] = r2
            ne = tuple(ne)
            coeff = c * cf
            if not has_t:
                acc((ne, w), coeff)
                continue
            # left Hecke multiplication of T_w by t_i
            if w.index(i) < w.index(i + 1):
                acc((ne, left_gen(i, w)), coeff)
            else:
                acc((ne, w), coeff * QM1)
                acc((ne, left_gen(i, w)), coeff * Q)
    return out


def mul(a, b):
    """Bilinear product in AH_n^+, reduced to PBW normal form."""
    a._check(b)
    n = a.rank
    result = {}
    for (ae, aw), ca in a.terms.items():
        word = reduced_word(aw)
        for (be, bv), cb in b.terms.items():
            terms = {(be, bv): ca * cb}
            for i in reversed(word):
                terms = _left_t(i, terms)
            for (e, w), c in terms.items():
                key = (tuple(x + y for x, y in zip(ae, e)), w)
                v = result.get(key, ZERO) + c
                if v.is_zero():
                    result.pop(key, None)
                else:
                    result[key] = v
    return AffineElement(n, result)


def juxtapose(a, b):
    """Image of a (x) b under the tower inclusion AH_m (x) AH_n -> AH_{m+n}.

    The left factor keeps its generator labels, the right factor's labels
    shift up by the left rank.  The two images commute, so the product of
    normal forms is again a normal form.
    """
    m, n = a.rank, b.rank
    result = {}
    for (ae, aw), ca in a.terms.items():
        for (be, bv), cb in b.terms.items():
            exps = ae + be
            perm = aw + tuple(m + x for x in bv)
            c = ca * cb
            v = result.get((exps, perm), ZERO) + c
            if v.is_zero():
                result.pop((exps, perm), None)
            else:
                result[(exps, perm)] = v
    return AffineElement(m + n, result)


def _substitute_linear(e, alpha, beta):
    """Replace each x_j by alpha x_j + beta, expanding binomially."""
    n = e.rank
    result = AffineElement(n)
    for (exps, w), c in e.terms.items():
        # expand variable by variable into (coeff, exponent vector) pairs
        partial = {(0,) * n: c}
        for j, p in enumerate(exps):
            if p == 0:
                continue
            new = {}
            for k in range(p + 1):
                coeff = alpha ** k * beta ** (p - k) * math.comb(p, k)
                if coeff.is_zero():
                    continue
                for vec, cv in partial.items():
                    nv = list(vec)
                    nv[j] += k
                    nv = tuple(nv)
                    s = new.get(nv, ZERO) + cv * coeff
                    if s.is_zero():
                        new.pop(nv, None)
                    else:
                        new[nv] = s
            partial = new
        for vec, cv in partial.items():
            key = (vec, w)
            s = result.terms.get(key, ZERO) + cv
            if s.is_zero():
                result.terms.pop(key, None)
            else:
                result.terms[key] = s
    return result


def substitute_y(e):
    """Read the input's letters as y-generators and expand into x-letters.

    The change of variables is y_j = (q-1) x_j - q/(q-1); a PBW monomial
    y^a T_w becomes the corresponding polynomial in the x_j times T_w.
    """
    return _substitute_linear(e, QM1, -(Q / QM1))


def substitute_y_inverse(e):
    """Inverse change of variables: x_j = y_j/(q-1) + q/(q-1)^2."""
    return _substitute_linear(e, QM1.inverse(), Q / (QM1 * QM1))


# -- braid letters -----------------------------------------------------------

def sigma_plus(n, i):
    """sigma_i = q^(-1/2) t_i."""
    return AffineElement.gen_t(n, i).scale(_HALF)


def sigma_minus(n, i):
    """sigma_i^(-1) = q^(-1/2) (t_i - (q-1))."""
    return AffineElement.gen_t(n, i).scale(_HALF) + AffineElement.one(n).scale(
        -_HALF * QM1
    )


def _letter_element(n, letter):
    kind = letter[0]
    if kind == "x":
        _, j, *rest = letter
        power = rest[0] if rest else 1
        if power < 1:
            raise ValueError("x letters need positive powers")
        return AffineElement.gen_x(n, j, power)
    if kind == "s":
        return sigma_plus(n, letter[1])
    if kind == "sinv":
        return sigma_minus(n, letter[1])
    raise ValueError(f"unknown letter {letter!r}")


def evaluate_word(n, word):
    """Evaluate a braid word (x/s/sinv letters) in AH_n^+."""
    out = AffineElement.one(n)
    for letter in word:
        out = mul(out, _letter_element(n, letter))
    return out


def _cable_letter(d, letter):
    """Image of a single letter under the d-fold strand cabling."""
    kind = letter[0]
    if kind == "x":
        _, j, *rest = letter
        power = rest[0] if rest else 1
        if power < 1:
            raise ValueError("x letters need positive powers")
        out = []
        for _ in range(power):
            out.extend(("x", d * (j - 1) + t) for t in range(1, d + 1))
        return out
    if kind == "s":
        i = letter[1]
        out = []
        for t in range(1, d + 1):
            # descending chain sigma_{di+t-1} ... sigma_{d(i-1)+t}
            out.extend(
                ("s", a) for a in range(d * i + t - 1, d * (i - 1) + t - 1, -1)
            )
        return out
    if kind == "sinv":
        image = _cable_letter(d, ("s", letter[1]))
        return [("sinv", a) for _, a in reversed(image)]
    raise ValueError(f"unknown letter {letter!r}")


def threading(n, d, word):
    """Cable each strand into d parallel strands, then evaluate in AH_{dn}^+.

    The input word uses letters ("x", j[, power]), ("s", i), ("sinv", i)
    with 1-based indices valid for rank n; the result lives in rank d*n.
    """
    if d < 1:
        raise ValueError("multiplicity must be >= 1")
    expanded = []
    for letter in word:
        expanded.extend(_cable_letter(d, letter))
    return evaluate_word(d * n, expanded)


def p_element(n, k):
    """The averaging element p_k of rank n (p_1 = 1).

    p_k = ({1}/{k}) sum_{i=0}^{k-1}
          sigma_1 ... sigma_i sigma_{i+1}^(-1) ... sigma_{k-1}^(-1).
    """
    if k < 1 or k > n:
        raise ValueError("need 1 <= k <= rank")
    if k == 1:
        return AffineElement.one(n)
    total = AffineElement.zero(n)
    for i in range(k):
        word = [("s", a) for a in range(1, i + 1)]
        word += [("sinv", a) for a in range(i + 1, k)]
        total = total + evaluate_word(n, word)
    return total.scale(qbrace(1) / qbrace(k))


def w_element(a, b):
    """The rank-a, degree-b torus element of AH_a^+.

    With d = gcd(a, b) (d = a when b = 0), a = d*n and b = d*m, this is
    p_d times the d-fold cabling of (x_n sigma_{n-1} ... sigma_1)^m.
    """
    if a < 1:
        raise ValueError("rank must be >= 1")
    if b < 0:
        raise ValueError("degree must be >= 0")
    d = a if b == 0 else math.gcd(a, b)
    n, m = a // d, b // d
    base = [("x", n)] + [("s", i) for i in range(n - 1, 0, -1)]
    cabled = threading(n, d, base * m)
    return mul(p_element(a, d), cabled)
