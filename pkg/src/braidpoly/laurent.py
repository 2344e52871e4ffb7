"""
Exact Laurent-polynomial arithmetic over the integers, plus coefficient-shape
analysis: symmetry, trapezoidal profile, stable length and log-concavity.

A polynomial is kept in canonical dense form: the exponent of its lowest term
(``offset``) and the tuple of integer coefficients from that exponent upward,
with nonzero first and last entries. The zero polynomial is ``(0, ())``, so
equality of values is equality of representations. Coefficients are plain
Python integers and never overflow.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Sequence


class DivisorZeroError(ZeroDivisionError):
    """Exact division by the zero polynomial."""


class NotDivisibleError(ArithmeticError):
    """No exact quotient exists over the Laurent ring."""


class ZeroPolynomialError(ValueError):
    """The requested operation is undefined for the zero polynomial."""


class ZeroPointError(ValueError):
    """Evaluation at 0 is undefined when negative exponents are allowed."""


class NonPositiveCoefficientsError(ValueError):
    """Trapezoid and log-concavity analysis need strictly positive entries."""


@dataclasses.dataclass(init=False, frozen=True)
class LaurentPoly:
    """
    An integer Laurent polynomial in one formal variable.

    The variable letter is purely presentational (``t`` for Burau matrices,
    ``s`` for shape analysis); the ring is the same.

    >>> LaurentPoly(-1, (1, 3, 1))
    LaurentPoly('s^-1 + 3 + s')
    >>> LaurentPoly(2, (0, 5))
    LaurentPoly('5s^3')
    >>> LaurentPoly(0, (0, 0))
    LaurentPoly('0')
    """

    offset: int
    coeffs: tuple[int, ...]

    def __init__(self, offset: int = 0, coeffs: Sequence[int] = ()):
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
            offset += 1
        while lo < hi and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            offset = 0
        object.__setattr__(self, "offset", int(offset))
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs[lo:hi]))

    @classmethod
    def monomial(cls, coeff: int, exponent: int = 0) -> LaurentPoly:
        return cls(exponent, (coeff,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Exponent of the highest term (-1 for the zero polynomial)."""
        return self.offset + len(self.coeffs) - 1

    def coeff(self, exponent: int) -> int:
        """Coefficient at a given exponent (0 outside the support)."""
        k = exponent - self.offset
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by the k-th power of the variable."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.offset + k, self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.offset + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset + i - lo] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(self.offset, tuple(c * other for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return LaurentPoly(self.offset + other.offset, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
                return LaurentPoly(-self.offset, self.coeffs) ** (-n)
            raise ValueError("negative powers exist only for unit monomials")
        result = LaurentPoly(0, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """
        Exact quotient over the Laurent ring.

        Raises DivisorZeroError on a zero divisor and NotDivisibleError when
        no Laurent polynomial q satisfies q * other == self.

        >>> LaurentPoly(0, (1, 0, 0, 1)).exact_div(LaurentPoly(0, (1, 1)))
        LaurentPoly('1 - s + s^2')
        """
        if not isinstance(other, LaurentPoly):
            raise TypeError("exact_div expects a LaurentPoly divisor")
        if other.is_zero():
            raise DivisorZeroError("division by the zero polynomial")
        if self.is_zero():
            return self
        num, den = list(self.coeffs), other.coeffs
        width = len(num) - len(den) + 1
        if width < 1:
            raise NotDivisibleError(f"{self!r} is not divisible by {other!r}")
        lead = den[-1]
        quot = [0] * width
        for k in range(width - 1, -1, -1):
            c = num[k + len(den) - 1]
            if c % lead:
                raise NotDivisibleError(f"{self!r} is not divisible by {other!r}")
            q = c // lead
            quot[k] = q
            if q:
                for j, d in enumerate(den):
                    num[k + j] -= q * d
        if any(num):
            raise NotDivisibleError(f"{self!r} is not divisible by {other!r}")
        return LaurentPoly(self.offset - other.offset, quot)

    __truediv__ = exact_div

    def substitute_neg(self) -> LaurentPoly:
        """
        Substitute the negated variable (x -> -x): the coefficient at
        exponent k picks up a factor (-1)^k. An involution.

        >>> LaurentPoly(0, (1, -1, 1)).substitute_neg()
        LaurentPoly('1 + s + s^2')
        """
        if not self.coeffs:
            return self
        return LaurentPoly(
            self.offset,
            tuple(-c if (self.offset + i) % 2 else c for i, c in enumerate(self.coeffs)),
        )

    def reverse(self) -> LaurentPoly:
        """Substitute x^-1 for x."""
        if not self.coeffs:
            return self
        return LaurentPoly(-self.degree(), tuple(reversed(self.coeffs)))

    def evaluate(self, x: int | Fraction) -> Fraction:
        """
        Exact evaluation at a nonzero rational point. The result is rational
        because negative exponents are allowed.

        >>> LaurentPoly(-1, (1,)).evaluate(2)
        Fraction(1, 2)
        """
        if x == 0:
            raise ZeroPointError("cannot evaluate a Laurent polynomial at 0")
        point = Fraction(x)
        acc = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                acc += c * point ** (self.offset + i)
        return acc

    def text(self, var: str = "s") -> str:
        """Human-readable form, lowest exponent first."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            k = self.offset + i
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def as_dict(self) -> dict:
        """JSON-friendly form: {"offset": ..., "coeffs": [...]}."""
        return {"offset": self.offset, "coeffs": list(self.coeffs)}

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.text()}')"


ZERO = LaurentPoly()
ONE = LaurentPoly(0, (1,))


def quantum_integer(n: int) -> LaurentPoly:
    """
    The quantum integer [n] = 1 + s + ... + s^(n-1), for n >= 1.

    >>> quantum_integer(5)
    LaurentPoly('1 + s + s^2 + s^3 + s^4')
    """
    if n < 1:
        raise ValueError(f"quantum integer needs n >= 1, got {n}")
    return LaurentPoly(0, (1,) * n)


def normalize_symmetric(p: LaurentPoly) -> tuple[LaurentPoly, bool]:
    """
    Multiply by a unit (plus or minus a power of the variable) so the result
    has offset 0 and a positive lowest coefficient; also report whether the
    coefficient sequence is palindromic. Idempotent on the polynomial part.

    >>> normalize_symmetric(LaurentPoly(-1, (1, 3, 1)))
    (LaurentPoly('1 + 3s + s^2'), True)
    >>> normalize_symmetric(LaurentPoly(2, (-1,)))
    (LaurentPoly('1'), True)
    """
    if p.is_zero():
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    coeffs = p.coeffs if p.coeffs[0] > 0 else tuple(-c for c in p.coeffs)
    return LaurentPoly(0, coeffs), coeffs == coeffs[::-1]


def trapezoid_plateau(seq: Sequence[int]) -> int | None:
    """
    Number of entries in the plateau when the sequence strictly increases,
    stays constant, then strictly decreases; None when it has no such
    profile. Entries must be strictly positive.
    """
    s = tuple(seq)
    if not s:
        raise ValueError("empty coefficient sequence")
    if any(x <= 0 for x in s):
        raise NonPositiveCoefficientsError("shape analysis needs positive coefficients")
    last = len(s) - 1
    i = 0
    while i < last and s[i] < s[i + 1]:
        i += 1
    j = i
    while j < last and s[j] == s[j + 1]:
        j += 1
    k = j
    while k < last and s[k] > s[k + 1]:
        k += 1
    return j - i + 1 if k == last else None


def is_log_concave_sequence(seq: Sequence[int]) -> bool:
    """a_i^2 >= a_(i-1) * a_(i+1) at every interior index; entries must be positive."""
    s = tuple(seq)
    if any(x <= 0 for x in s):
        raise NonPositiveCoefficientsError("log-concavity needs positive coefficients")
    return all(s[i] * s[i] >= s[i - 1] * s[i + 1] for i in range(1, len(s) - 1))


@dataclasses.dataclass(frozen=True)
class TrapezoidReport:
    """
    Shape verdicts for a nonzero polynomial's coefficient sequence.

    ``stable_length`` is one less than the size of the maximal constant run,
    so a strictly unimodal sequence has stable length 0; it is present only
    when the polynomial is symmetric and trapezoidal (which under the
    positivity convention implies all coefficients are nonzero).
    ``bound_holds`` is present only when both ``sigma`` and ``stable_length``
    are, and records stable_length <= |sigma|. When any coefficient is
    nonpositive, ``all_positive`` is False and the trapezoid/log-concavity
    verdicts are reported as False rather than raised as errors, so symmetry
    is still visible.
    """

    is_symmetric: bool
    is_trapezoidal: bool
    center: Fraction
    all_positive: bool
    stable_length: int | None
    is_log_concave: bool
    sigma: int | None
    bound_holds: bool | None


def analyze_shape(p: LaurentPoly, sigma: int | None = None) -> TrapezoidReport:
    """
    Analyze the coefficient shape of a nonzero polynomial.

    >>> analyze_shape(LaurentPoly(0, (1, 5, 5, 1)), sigma=-1).stable_length
    1
    """
    if p.is_zero():
        raise ZeroPolynomialError("cannot analyze the zero polynomial")
    c = p.coeffs
    symmetric = c == c[::-1]
    center = Fraction(2 * p.offset + len(c) - 1, 2)
    positive = all(x > 0 for x in c)
    if positive:
        plateau = trapezoid_plateau(c)
        trapezoidal = plateau is not None
        log_concave = is_log_concave_sequence(c)
    else:
        plateau = None
        trapezoidal = False
        log_concave = False
    stable = plateau - 1 if (plateau is not None and symmetric) else None
    bound = None
    if sigma is not None and stable is not None:
        bound = stable <= abs(sigma)
    return TrapezoidReport(
        is_symmetric=symmetric,
        is_trapezoidal=trapezoidal,
        center=center,
        all_positive=positive,
        stable_length=stable,
        is_log_concave=log_concave,
        sigma=sigma,
        bound_holds=bound,
    )
