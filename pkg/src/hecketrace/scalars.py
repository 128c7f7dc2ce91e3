"""Exact arithmetic in the field Q(s) of rational functions in s = q^(1/2).

A Scalar is a reduced fraction of integer-coefficient Laurent polynomials
in s.  The variable of record is s, so that half-integer powers of q are
integer powers of s; q itself is s^2.  Representation is canonical:

  * gcd(numerator, denominator) is a unit,
  * the denominator is an honest polynomial (lowest exponent 0) with
    positive leading coefficient,
  * the integer contents of numerator and denominator are coprime.

Canonical form makes structural equality coincide with equality in Q(s),
so Scalars can be dict keys and compared directly.  No floating point is
used anywhere.

The module also provides the quantum-integer gadgets

  qbrace(k) = s^k - s^(-k)          (the symmetric bracket {k})
  qint(n)   = (1 - q^n)/(1 - q)     (the non-symmetric [n]_q, expanded)
  qfact(n)  = [n]_q [n-1]_q ... [1]_q

and standalone exact checkers for three combinatorial identities used to
pin down structure constants elsewhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Laurent polynomials are sparse dicts {exponent: coefficient} with int
# coefficients and no zero values stored.  {} is the zero polynomial.

_P_ONE = {0: 1}


def _padd(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _pneg(a):
    return {e: -c for e, c in a.items()}


def _pmul(a, b):
    if not a or not b:
        return {}
    if len(a) == 1:
        (ea, ca), = a.items()
        return {e + ea: c * ca for e, c in b.items()}
    if len(b) == 1:
        (eb, cb), = b.items()
        return {e + eb: c * cb for e, c in a.items()}
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _pshift(a, k):
    if k == 0:
        return dict(a)
    return {e + k: c for e, c in a.items()}


def _pcontent(a):
    g = 0
    for c in a.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _pscale_exact(a, d):
    # divide every coefficient by the integer d (must be exact)
    return {e: c // d for e, c in a.items()}


def _plead(a):
    # coefficient of the highest power of s
    return a[max(a)]


def _pdivexact(a, b):
    """Exact quotient of polynomials with min exponent 0 (integer result)."""
    if not a:
        return {}
    rem = dict(a)
    out = {}
    db = max(b)
    lb = b[db]
    while rem:
        da = max(rem)
        if da < db:
            raise ArithmeticError("inexact polynomial division")
        la = rem[da]
        if la % lb:
            raise ArithmeticError("inexact polynomial division")
        c = la // lb
        e = da - db
        out[e] = c
        for eb, cb in b.items():
            ee = eb + e
            v = rem.get(ee, 0) - c * cb
            if v:
                rem[ee] = v
            else:
                rem.pop(ee, None)
    return out


def _pprim(a):
    c = _pcontent(a)
    if c > 1:
        return _pscale_exact(a, c)
    return a


def _prem(a, b):
    """Pseudo-remainder of a by b (both min-exponent 0, b nonzero)."""
    rem = dict(a)
    db = max(b)
    lb = b[db]
    while rem and max(rem) >= db:
        da = max(rem)
        la = rem[da]
        # scale rem so the leading term cancels exactly
        if la % lb:
            rem = {e: c * lb for e, c in rem.items()}
            la = rem[da]
        c = la // lb
        for eb, cb in b.items():
            ee = eb + da - db
            v = rem.get(ee, 0) - c * cb
            if v:
                rem[ee] = v
            else:
                rem.pop(ee, None)
    return rem


def _pgcd(a, b):
    """gcd in Z[s] of two polynomials with min exponent 0, positive lead."""
    if not a:
        return _pprim(dict(b)) if b else {}
    if not b:
        return _pprim(dict(a))
    pa, pb = _pprim(a), _pprim(b)
    if len(pa) == 1 or len(pb) == 1:
        # a monomial gcd is s^min(exp) which is 1 here (min exponent 0)
        return dict(_P_ONE)
    while pb:
        r = _prem(pa, pb)
        pa, pb = pb, _pprim(r)
    if _plead(pa) < 0:
        pa = _pneg(pa)
    return pa


def _psplit(a):
    """Write a = s^k * a0 with a0 having min exponent 0; return (k, a0)."""
    if not a:
        return 0, {}
    k = min(a)
    if k == 0:
        return 0, a
    return k, {e - k: c for e, c in a.items()}


class Scalar:
    """An element of Q(s) in canonical reduced form.

    Immutable; supports +, -, *, /, ** and mixes with int.  Equality and
    hashing are structural, which by canonicality is field equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den, _raw=False):
        if _raw:
            self.num = num
            self.den = den
            self._hash = None
            return
        num = {e: c for e, c in num.items() if c}
        den = {e: c for e, c in den.items() if c}
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = {}
            self.den = dict(_P_ONE)
            self._hash = None
            return
        kn, n0 = _psplit(num)
        kd, d0 = _psplit(den)
        if d0 != _P_ONE:
            g = _pgcd(n0, d0)
            if g != _P_ONE:
                n0 = _pdivexact(n0, g)
                d0 = _pdivexact(d0, g)
            c = math.gcd(_pcontent(n0), _pcontent(d0))
            if c > 1:
                n0 = _pscale_exact(n0, c)
                d0 = _pscale_exact(d0, c)
            if _plead(d0) < 0:
                n0 = _pneg(n0)
                d0 = _pneg(d0)
        self.num = _pshift(n0, kn - kd) if kn != kd else n0
        self.den = d0
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_int(n):
        return Scalar({0: n} if n else {}, dict(_P_ONE), _raw=True)

    @staticmethod
    def from_fraction(p, q=1):
        return Scalar({0: p} if p else {}, {0: q})

    @staticmethod
    def s_power(k):
        return Scalar({k: 1}, dict(_P_ONE), _raw=True)

    @staticmethod
    def q_power(k):
        return Scalar({2 * k: 1}, dict(_P_ONE), _raw=True)

    # -- predicates ------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == _P_ONE and self.den == _P_ONE

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return Scalar.from_int(x)
        if isinstance(x, Fraction):
            return Scalar.from_fraction(x.numerator, x.denominator)
        return None

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            num = _padd(self.num, other.num)
            if self.den == _P_ONE:
                return Scalar(num, self.den, _raw=True)
            return Scalar(num, dict(self.den))
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_pneg(self.num), dict(self.den), _raw=True)

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == _P_ONE and other.den == _P_ONE:
            return Scalar(_pmul(self.num, other.num), dict(_P_ONE), _raw=True)
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def inverse(self):
        return Scalar(dict(self.den), dict(self.num))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        other = Scalar._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(
                (
                    tuple(sorted(self.num.items())),
                    tuple(sorted(self.den.items())),
                )
            )
            self._hash = h
        return h

    # -- display ----------------------------------------------------------

    @staticmethod
    def _poly_str(p):
        if not p:
            return "0"
        parts = []
        for e in sorted(p, reverse=True):
            c = p[e]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                var = "s" if e == 1 else f"s^{e}"
                body = var if c == 1 else f"{c}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        num = Scalar._poly_str(self.num)
        if self.den == _P_ONE:
            return num
        den = Scalar._poly_str(self.den)
        if len(self.num) > 1:
            num = f"({num})"
        if len(self.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar({self})"

    def expr_string(self):
        """Render with nonnegative exponents only (parseable grammar form)."""
        shift = min(self.num) if self.num else 0
        if shift >= 0:
            return str(self)
        scaled = Scalar(_pshift(self.num, -shift), _pshift(self.den, -shift),
                        _raw=True)
        return str(scaled)


ZERO = Scalar.from_int(0)
ONE = Scalar.from_int(1)
S = Scalar.s_power(1)
Q = Scalar.q_power(1)
QM1 = Q - ONE  # q - 1


def qbrace(k):
    """The symmetric quantum bracket {k} = s^k - s^(-k)."""
    if k == 0:
        return ZERO
    return Scalar({k: 1, -k: -1}, dict(_P_ONE), _raw=True)


def qint(n):
    """The non-symmetric quantum integer [n]_q = (1 - q^n)/(1 - q).

    Expanded form: 1 + q + ... + q^(n-1) for n > 0 and
    -(q^-1 + ... + q^n) for n < 0.
    """
    if n == 0:
        return ZERO
    if n > 0:
        return Scalar({2 * i: 1 for i in range(n)}, dict(_P_ONE), _raw=True)
    return Scalar({-2 * i: -1 for i in range(1, -n + 1)}, dict(_P_ONE),
                  _raw=True)


def qint_inv(n):
    """[n] in the variable q^(-1): (1 - q^(-n))/(1 - q^(-1))."""
    if n == 0:
        return ZERO
    if n > 0:
        return Scalar({-2 * i: 1 for i in range(n)}, dict(_P_ONE), _raw=True)
    return Scalar({2 * i: -1 for i in range(1, -n + 1)}, dict(_P_ONE),
                  _raw=True)


def qfact(n):
    """Quantum factorial [n]_q! = [n]_q [n-1]_q ... [1]_q, n >= 0."""
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0")
    out = ONE
    for i in range(2, n + 1):
        out = out * qint(i)
    return out


def qfact_inv(n):
    """Quantum factorial in the variable q^(-1)."""
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0")
    out = ONE
    for i in range(2, n + 1):
        out = out * qint_inv(i)
    return out


def binom(n, k):
    """C(n, k) with C(n, k) = 0 for k < 0 or k > n >= 0."""
    if k < 0:
        return 0
    if n < 0:
        raise ValueError("negative upper binomial index")
    if k > n:
        return 0
    return math.comb(n, k)


def binom_identity(ell, gamma, delta):
    """Check the weighted binomial column sum against its closed form.

    For ell in {0, 1, 2}:
      sum_{i=0}^{delta} (delta+1-i)^ell C(gamma+i, gamma)
    equals C(gamma+1+delta, delta), C(gamma+2+delta, delta), or
    C(gamma+3+delta, delta) + C(gamma+2+delta, delta-1) respectively.
    """
    if ell not in (0, 1, 2):
        raise ValueError("ell must be 0, 1 or 2")
    lhs = sum((delta + 1 - i) ** ell * binom(gamma + i, gamma)
              for i in range(delta + 1))
    if ell == 0:
        rhs = binom(gamma + 1 + delta, delta)
    elif ell == 1:
        rhs = binom(gamma + 2 + delta, delta)
    else:
        rhs = binom(gamma + 3 + delta, delta) + binom(gamma + 2 + delta,
                                                      delta - 1)
    return lhs == rhs


def coset_identity(part, k, p=None):
    """Check the alternating binomial sums with rational weights.

    part 1 (needs 0 < p < k):
      sum_{j=0}^p (-1)^(p-j) [1/(2k-j)] C(2k-j, p) C(p, j) = 0
    part 2 (p ignored): both equivalent forms of
      sum_{j=1}^k (-1)^(j+1) [2k/(k+j)] C(k+j, 2j) C(2j, j) = 2.
    """
    if part == 1:
        if p is None or not 0 < p < k:
            raise ValueError("part 1 needs 0 < p < k")
        total = Fraction(0)
        for j in range(p + 1):
            total += (
                (-1) ** (p - j)
                * Fraction(1, 2 * k - j)
                * binom(2 * k - j, p)
                * binom(p, j)
            )
        return total == 0
    if part == 2:
        first = Fraction(0)
        second = Fraction(0)
        for j in range(1, k + 1):
            w = (-1) ** (j + 1) * Fraction(2 * k, k + j)
            first += w * binom(k + j, 2 * j) * binom(2 * j, j)
            second += w * binom(k + j, j) * binom(k, j)
        return first == 2 and second == 2
    raise ValueError("part must be 1 or 2")


def crazy_identity(k):
    """Check the bracket-power telescoping sum against -q^k + 2 - q^(-k).

    Evaluates, exactly in Q(s),
      sum_{j=1}^k {1}^(2j) ( -k C(k+j-1, 2j-1)
                             + sum_{l=1}^{k-j+1} (k-l) l C(k+j-l-2, 2j-3) )
    where binomials with negative lower index vanish (the inner sum hits
    C(., -1) at j = 1).
    """
    if k < 1:
        raise ValueError("k must be positive")
    b1 = qbrace(1)
    lhs = ZERO
    for j in range(1, k + 1):
        inner = -k * binom(k + j - 1, 2 * j - 1)
        for l in range(1, k - j + 2):
            if 2 * j - 3 < 0:
                continue
            inner += (k - l) * l * binom(k + j - l - 2, 2 * j - 3)
        lhs = lhs + b1 ** (2 * j) * inner
    rhs = Scalar({2 * k: -1, 0: 2, -2 * k: -1}, dict(_P_ONE), _raw=True)
    return lhs == rhs
