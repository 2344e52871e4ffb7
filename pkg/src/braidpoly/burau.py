"""
Reduced Burau representation and the Alexander polynomial of a braid closure.

Conventions. For a braid group on n strands the representation acts on
(n-1)-dimensional space over integer Laurent polynomials in t. The image of
the i-th generator is the identity matrix except in row i (1-indexed), which
carries t at column i-1, -t at column i and 1 at column i+1 (columns outside
the matrix are dropped); the inverse generator has 1 at column i-1, -t^-1 at
column i and t^-1 at column i+1. The Alexander polynomial of the closure is
det(I - image(word)) divided exactly by 1 + t + ... + t^(n-1), then
normalized to offset 0 with a positive constant term (the representation
only determines it up to a unit).
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Iterable, Sequence

from .braid import BraidWord
from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    normalize_symmetric,
    quantum_integer,
)


@dataclasses.dataclass(frozen=True)
class PolyMatrix:
    """A square matrix of Laurent polynomials."""

    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __init__(self, entries: Iterable[Sequence[LaurentPoly]]):
        rows = tuple(tuple(row) for row in entries)
        for row in rows:
            if len(row) != len(rows):
                raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, dim: int) -> PolyMatrix:
        return cls(
            tuple(
                tuple(ONE if i == j else ZERO for j in range(dim))
                for i in range(dim)
            )
        )

    def __mul__(self, other: PolyMatrix) -> PolyMatrix:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = tuple(zip(*other.entries))
        rows = []
        for row in self.entries:
            out = []
            for col in cols:
                acc = ZERO
                for x, y in zip(row, col):
                    if x.coeffs and y.coeffs:
                        acc = acc + x * y
                out.append(acc)
            rows.append(tuple(out))
        return PolyMatrix(tuple(rows))

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return PolyMatrix(
            tuple(
                tuple(x - y for x, y in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            )
        )

    def det(self) -> LaurentPoly:
        """
        Exact determinant: cofactor expansion for dim <= 4, fraction-free
        elimination (divisions are exact over the Laurent ring) above that.
        """
        if self.dim == 0:
            return ONE
        if self.dim <= 4:
            return _cofactor_det(self.entries)
        return _bareiss_det(self.entries)


def _cofactor_det(rows: tuple[tuple[LaurentPoly, ...], ...]) -> LaurentPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ZERO
    for j, top in enumerate(rows[0]):
        if not top.coeffs:
            continue
        minor = tuple(r[:j] + r[j + 1 :] for r in rows[1:])
        term = top * _cofactor_det(minor)
        acc = acc - term if j % 2 else acc + term
    return acc


def _bareiss_det(rows: tuple[tuple[LaurentPoly, ...], ...]) -> LaurentPoly:
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = ZERO
        prev = pivot
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result


def burau_generator(n: int, i: int, exponent_sign: int = 1) -> PolyMatrix:
    """
    Image of the i-th elementary braid (or its inverse) in the reduced
    representation for n strands.
    """
    if n < 2:
        raise ValueError(f"need n >= 2 strands, got {n}")
    if not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} out of range [1, {n - 1}]")
    if exponent_sign not in (1, -1):
        raise ValueError("exponent_sign must be +1 or -1")
    return _syllable_image(n, i, exponent_sign)


@functools.lru_cache(maxsize=8192)
def _syllable_image(n: int, i: int, exponent: int) -> PolyMatrix:
    """
    Image of a whole syllable (i-th generator to a nonzero power), by the
    closed form: only row i differs from the identity. For exponent e > 0
    the row is (t*g, (-t)^e, g) with g = 1 + (-t) + ... + (-t)^(e-1) at
    columns i-1, i, i+1; for e = -q < 0 it is
    ((-t)^(1-q)*g, (-t)^-q, -(-t)^-q*g) with g = 1 + (-t) + ... + (-t)^(q-1).
    """
    dim = n - 1
    rows = [
        [ONE if r == c else ZERO for c in range(dim)] for r in range(dim)
    ]
    e = exponent
    if e > 0:
        g = LaurentPoly(0, tuple(-1 if j % 2 else 1 for j in range(e)))
        left = g.shift(1)
        mid = LaurentPoly.monomial(-1 if e % 2 else 1, e)
        right = g
    else:
        q = -e
        g = LaurentPoly(0, tuple(-1 if j % 2 else 1 for j in range(q)))
        unit = LaurentPoly.monomial(-1 if q % 2 else 1, -q)
        left = LaurentPoly.monomial(-1 if (1 - q) % 2 else 1, 1 - q) * g
        mid = unit
        right = -unit * g
    r = i - 1
    if r - 1 >= 0:
        rows[r][r - 1] = left
    rows[r][r] = mid
    if r + 1 < dim:
        rows[r][r + 1] = right
    return PolyMatrix(tuple(tuple(row) for row in rows))


def burau_word(word: BraidWord) -> PolyMatrix:
    """Ordered product of the syllable images of a braid word."""
    result = PolyMatrix.identity(word.strands - 1)
    for index, exponent in word.syllables:
        result = result * _syllable_image(word.strands, index, exponent)
    return result


@dataclasses.dataclass(frozen=True)
class AlexanderResult:
    """
    Alexander polynomial of a braid closure, up to units.

    ``poly_t`` is normalized to offset 0 with a positive constant term;
    ``poly_s`` is poly_t under the substitution s = -t, normalized the same
    way. ``degree`` is the degree of poly_t (-1 when zero).
    ``alternating_in_t`` records whether the coefficients of poly_t strictly
    alternate in sign with no internal zeros. ``is_zero`` marks a vanishing
    determinant (split closures).
    """

    poly_t: LaurentPoly
    poly_s: LaurentPoly
    degree: int
    alternating_in_t: bool
    is_zero: bool


def alexander(word: BraidWord) -> AlexanderResult:
    """
    Alexander polynomial of the closure of a braid word.

    Raises NotDivisibleError only on an internal fault: the determinant of
    I - image(word) is always divisible by 1 + t + ... + t^(n-1).
    """
    n = word.strands
    image = burau_word(word)
    delta = (PolyMatrix.identity(n - 1) - image).det()
    if delta.is_zero():
        return AlexanderResult(ZERO, ZERO, -1, False, True)
    quotient = delta.exact_div(quantum_integer(n))
    poly_t, _ = normalize_symmetric(quotient)
    poly_s, _ = normalize_symmetric(poly_t.substitute_neg())
    alternating = all(
        x * y < 0 for x, y in zip(poly_t.coeffs, poly_t.coeffs[1:])
    )
    return AlexanderResult(poly_t, poly_s, poly_t.degree(), alternating, False)
