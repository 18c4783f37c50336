"""
Exact arithmetic in the grading variable q.

A :class:`QPoly` is a dense tuple of Python integers, constant term first, with
trailing zeros trimmed; the zero polynomial is the empty tuple. A :class:`QRat`
is a reduced ratio of two such polynomials.

>>> qbinom(4, 2)
QPoly('1+q+2q^2+q^3+q^4')
>>> qpochhammer(2)
QPoly('1-q-q^2+q^3')
"""
from __future__ import annotations

import threading
from collections.abc import Iterable
from math import comb, gcd as igcd

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_gcd

__all__ = [
    "QPoly",
    "QRat",
    "ONE",
    "ZERO",
    "Q",
    "qint",
    "qbinom",
    "qbinom_by_division",
    "qpochhammer",
    "falling_q_product",
]


class QPoly:
    """Integer polynomial in q, stored densely in ascending powers."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", tuple(c[:end]))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    def __reduce__(self):
        return (QPoly, (self.coeffs,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> QPoly:
        if power < 0:
            raise ValueError(f"negative power {power}")
        return cls([0] * power + [coeff])

    @classmethod
    def coerce(cls, value) -> QPoly:
        if isinstance(value, QPoly):
            return value
        if isinstance(value, int):
            return cls([value])
        raise TypeError(f"cannot coerce {type(value).__name__} to QPoly")

    # --- inspection -------------------------------------------------------

    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def valuation(self) -> int:
        """Lowest power with a nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = igcd(g, c)
        return g

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may be an int, Fraction or QPoly."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # --- ring operations --------------------------------------------------

    def __add__(self, other) -> QPoly:
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> QPoly:
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QPoly:
        return QPoly.coerce(other) - self

    def __mul__(self, other) -> QPoly:
        if isinstance(other, int):
            return QPoly(c * other for c in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, r: int) -> QPoly:
        """Multiply by q^r."""
        if r < 0:
            raise ValueError(f"negative shift {r}")
        if not self.coeffs or r == 0:
            return self
        return QPoly((0,) * r + self.coeffs)

    def divmod(self, divisor: QPoly) -> tuple[QPoly, QPoly]:
        """Integer long division; raises ValueError if a step is not integral."""
        divisor = QPoly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead = d[-1]
        shift = len(rem) - len(d)
        if shift < 0:
            return ZERO, self
        quo = [0] * (shift + 1)
        for k in range(shift, -1, -1):
            top = rem[k + len(d) - 1]
            if top:
                c, r = divmod(top, lead)
                if r:
                    raise ValueError("non-integral quotient")
                quo[k] = c
                for j, y in enumerate(d):
                    rem[k + j] -= c * y
        return QPoly(quo), QPoly(rem)

    def exact_div(self, divisor) -> QPoly:
        quo, rem = self.divmod(QPoly.coerce(divisor))
        if rem:
            raise ValueError(f"{divisor} does not divide {self}")
        return quo

    def __floordiv__(self, other) -> QPoly:
        return self.exact_div(other)

    def gcd(self, other: QPoly) -> QPoly:
        """Primitive gcd over the integers, normalized to a positive leading coefficient."""
        if self.is_zero() and other.is_zero():
            return ZERO
        f = [ZZ(c) for c in reversed(self.coeffs)]
        g = [ZZ(c) for c in reversed(other.coeffs)]
        h = QPoly(int(c) for c in reversed(dup_gcd(f, g, ZZ)))
        cont = h.content()
        if h.coeffs[-1] < 0:
            cont = -cont
        return QPoly(c // cont for c in h.coeffs)

    # --- comparisons, hashing, text ---------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly('{self}')"

    def __str__(self) -> str:
        """Ascending powers with unit coefficients omitted, e.g. ``1+q+2q^2``."""
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts) if parts else "0"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list) -> QPoly:
        return cls(int(c) for c in data)


ZERO = QPoly()
ONE = QPoly([1])
Q = QPoly([0, 1])


class QRat:
    """
    Ratio of two integer polynomials in q, in lowest terms.

    The stored pair has no common nonconstant factor, the joint integer
    content of numerator and denominator is 1, and the denominator has a
    positive constant term (or a positive leading term if its constant term
    vanishes).

    >>> QRat(qpochhammer(2), QPoly([1, -1]))
    QRat('1-q^2')
    >>> QRat(2, 4) == QRat(1, 2)
    True
    """

    __slots__ = ("num", "den")

    num: QPoly
    den: QPoly

    def __init__(self, num=0, den=1):
        num = QPoly.coerce(num)
        den = QPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = igcd(num.content(), den.content())
            anchor = den.coeffs[0] if den.coeffs[0] else den.coeffs[-1]
            if anchor < 0:
                c = -c
            if c != 1:
                num = QPoly(x // c for x in num.coeffs)
                den = QPoly(x // c for x in den.coeffs)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QRat is immutable")

    def __reduce__(self):
        return (QRat, (self.num, self.den))

    @classmethod
    def coerce(cls, value) -> QRat:
        if isinstance(value, QRat):
            return value
        return cls(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0 and abs(self.den.coeffs[0]) == 1

    def as_qpoly(self) -> QPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial in q")
        return self.num * self.den.coeffs[0]

    def __add__(self, other) -> QRat:
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> QRat:
        return QRat(-self.num, self.den)

    def __sub__(self, other) -> QRat:
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QRat:
        return QRat.coerce(other) - self

    def __mul__(self, other) -> QRat:
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QRat:
        other = QRat.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero QRat")
        return QRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> QRat:
        return QRat.coerce(other) / self

    def __eq__(self, other) -> bool:
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"QRat('{self}')"

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def qint(n: int) -> QPoly:
    """The q-integer [n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError(f"negative q-integer {n}")
    return QPoly([1] * n)


_binom_lock = threading.Lock()
_binom_memo: dict[tuple[int, int], QPoly] = {}


def _lookup(n: int, r: int) -> QPoly:
    if r < 0 or r > n:
        return ZERO
    if r == 0 or r == n:
        return ONE
    return _binom_memo[(n, min(r, n - r))]


def qbinom(n: int, r: int) -> QPoly:
    """
    Gaussian binomial [n r]_q; zero unless n, r and n-r are all nonnegative.

    Built from the recurrence [n r] = q^r [n-1 r] + [n-1 r-1].

    >>> qbinom(3, 5)
    QPoly('0')
    >>> qbinom(5, 0)
    QPoly('1')
    """
    if n < 0 or r < 0 or r > n:
        return ZERO
    if r == 0 or r == n:
        return ONE
    key = (n, min(r, n - r))
    hit = _binom_memo.get(key)
    if hit is not None:
        return hit
    # Rows are filled bottom up so recursion depth stays bounded; entries are
    # published only once complete.
    for m in range(2, n + 1):
        for s in range(1, min(key[1], m // 2) + 1):
            if (m, s) in _binom_memo:
                continue
            value = _lookup(m - 1, s).shift(s) + _lookup(m - 1, s - 1)
            with _binom_lock:
                _binom_memo.setdefault((m, s), value)
    return _binom_memo[key]


def qbinom_by_division(n: int, r: int) -> QPoly:
    """[n r]_q as (1-q^n)...(1-q^(n-r+1)) / (q;q)_r, by exact division."""
    if n < 0 or r < 0 or r > n:
        return ZERO
    top = ONE
    for j in range(n - r + 1, n + 1):
        top = top * (ONE - Q.shift(j - 1))
    return top.exact_div(qpochhammer(r))


def qpochhammer(n: int) -> QPoly:
    """(q;q)_n = (1-q)(1-q^2)...(1-q^n)."""
    if n < 0:
        raise ValueError(f"(q;q)_n needs n >= 0, got {n}")
    out = ONE
    for j in range(1, n + 1):
        out = out * (ONE - QPoly.monomial(j))
    return out


def falling_q_product(i: int) -> QPoly:
    """(1-q)(1-q^2)...(1-q^i); same value as :func:`qpochhammer`."""
    return qpochhammer(i)


def binomial(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n else 0
