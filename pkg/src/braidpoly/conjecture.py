"""
Closed-form identities for small block counts, leading-coefficient formulas,
and the trapezoid-plus-signature-bound verdict pipeline with its grid scan.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import itertools
from typing import Iterator, Sequence

from .braid import BlockBraid
from .burau import AlexanderResult, alexander
from .laurent import LaurentPoly, TrapezoidReport, analyze_shape, quantum_integer
from .signature import signature_closed_form


class NonIntegerCoefficientError(ArithmeticError):
    """A coefficient formula produced a non-integer; signals a defect."""


def closed_form_one_block(p: int, q: int, r: int) -> LaurentPoly:
    """Alexander polynomial (in s, up to units) of a one-block 4-braid closure."""
    if min(p, q, r) < 1:
        raise ValueError("block entries must be positive")
    return quantum_integer(p) * quantum_integer(q) * quantum_integer(r)


def stable_length_one_block(p: int, q: int, r: int) -> int:
    """
    Predicted stable length of the one-block closed form: with the entries
    sorted descending as (a, b, c), a - b - c + 1 when nonnegative, else 0
    or 1 by the parity of the degree a + b + c - 3.
    """
    a, b, c = sorted((p, q, r), reverse=True)
    length = a - b - c + 1
    if length >= 0:
        return length
    return 0 if (a + b + c - 3) % 2 == 0 else 1


def closed_form_two_block(
    p1: int, q1: int, r1: int, p2: int, q2: int, r2: int
) -> LaurentPoly:
    """Alexander polynomial (in s, up to units) of a two-block 4-braid closure."""
    if min(p1, q1, r1, p2, q2, r2) < 1:
        raise ValueError("block entries must be positive")
    qi = quantum_integer
    cross = qi(q1) * qi(q2) * (
        qi(p1) * qi(p2) * qi(r1 + r2) + qi(r1) * qi(r2) * qi(p1 + p2)
    )
    return cross.shift(1) + qi(p1 + p2) * qi(q1 + q2) * qi(r1 + r2)


def determinant_two_block(
    p1: int, q1: int, r1: int, p2: int, q2: int, r2: int
) -> int:
    """Link determinant of a two-block 4-braid closure."""
    if min(p1, q1, r1, p2, q2, r2) < 1:
        raise ValueError("block entries must be positive")
    return q1 * q2 * (p1 * p2 * (r1 + r2) + r1 * r2 * (p1 + p2)) + (p1 + p2) * (
        q1 + q2
    ) * (r1 + r2)


@dataclasses.dataclass(frozen=True)
class CoeffFormulaResult:
    """
    First four Alexander coefficients predicted from (strands, blocks).
    Each coefficient is reported only when the corresponding threshold on
    the minimal block entry holds (a0, a1 need > 1; a2 needs > 2; a3 needs
    > 3); when no minimal entry is supplied the formulas are reported
    unconditionally.
    """

    a0: int | None
    a1: int | None
    a2: int | None
    a3: int | None
    thresholds_met: tuple[bool, bool, bool, bool]


_COEFF_THRESHOLDS = (1, 1, 2, 3)


def _exact_int_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerCoefficientError(
            f"coefficient formula gave {num}/{den}, which is not an integer"
        )
    return q


def leading_coeffs(strands: int, blocks: int, min_entry: int | None = None) -> CoeffFormulaResult:
    """
    Closed-form first four coefficients of the Alexander polynomial (in s)
    of an alternating block-braid closure, as functions of the strand count
    and the number of blocks. Valid when the block entries exceed the
    per-coefficient thresholds; pass ``min_entry`` to mask the coefficients
    whose threshold fails.
    """
    n, m = strands, blocks
    if n < 3:
        raise ValueError(f"coefficient formulas need >= 3 strands, got {n}")
    if m < 1:
        raise ValueError(f"need at least one block, got {m}")
    a0 = 1
    a1 = (n - 2) * m + 1
    a2 = _exact_int_div((n - 2) ** 2 * m * m + (3 * (n - 2) + 2) * m, 2)
    if n == 3:
        a3 = _exact_int_div(m**3 + 12 * m * m + 17 * m - 6, 6)
    else:
        a3 = _exact_int_div(
            (n - 2) ** 3 * m**3 + 6 * (n - 1) * (n - 2) * m * m + (5 * (n - 1) + 1) * m,
            6,
        )
    met = tuple(min_entry is None or min_entry > t for t in _COEFF_THRESHOLDS)
    values = [v if ok else None for v, ok in zip((a0, a1, a2, a3), met)]
    return CoeffFormulaResult(*values, thresholds_met=met)


@dataclasses.dataclass(frozen=True)
class ConjectureReport:
    """
    Verdict bundle for one block braid: component count of the closure, the
    closed-form signature, the computed Alexander data, and the shape
    analysis of the s-form polynomial (absent for split closures).
    """

    components: int
    sigma: int
    alexander: AlexanderResult
    shape: TrapezoidReport | None

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    @property
    def bound_holds(self) -> bool | None:
        return self.shape.bound_holds if self.shape is not None else None


def check_conjecture(braid: BlockBraid) -> ConjectureReport:
    """
    Run the full pipeline on one block braid: expand, compute the Alexander
    polynomial through the Burau representation, the signature through the
    closed form, and analyze the shape of the s-form coefficients against
    the signature bound.
    """
    word = braid.expand()
    components = word.closure_components()
    sigma = signature_closed_form(braid).value
    result = alexander(word)
    shape = None if result.is_zero else analyze_shape(result.poly_s, sigma=sigma)
    return ConjectureReport(components, sigma, result, shape)


@dataclasses.dataclass(frozen=True)
class ScanRow:
    """One grid point of a scan, flattened for tabular output."""

    strands: int
    blocks: int
    sign: int
    parameters: tuple[int, ...]
    components: int
    sigma: int
    degree: int
    coeffs: tuple[int, ...]
    is_symmetric: bool | None
    is_trapezoidal: bool | None
    is_log_concave: bool | None
    stable_length: int | None
    bound_holds: bool | None


def scan_rows(
    strands: int,
    block_counts: Sequence[int],
    max_entry: int,
    sign: int = 1,
) -> Iterator[ScanRow]:
    """
    All block braids with the given strand count, block counts and entries
    in [1, max_entry], in lexicographic parameter order (block counts in the
    order given). One row per parameter point.
    """
    if max_entry < 1:
        raise ValueError(f"max entry must be >= 1, got {max_entry}")
    width = strands - 1
    for m in block_counts:
        if m < 1:
            raise ValueError(f"block counts must be >= 1, got {m}")
        for flat in itertools.product(range(1, max_entry + 1), repeat=m * width):
            rows = tuple(flat[j * width : (j + 1) * width] for j in range(m))
            report = check_conjecture(BlockBraid(strands, rows, sign))
            shape = report.shape
            yield ScanRow(
                strands=strands,
                blocks=m,
                sign=sign,
                parameters=flat,
                components=report.components,
                sigma=report.sigma,
                degree=report.alexander.degree,
                coeffs=report.alexander.poly_s.coeffs,
                is_symmetric=shape.is_symmetric if shape else None,
                is_trapezoidal=shape.is_trapezoidal if shape else None,
                is_log_concave=shape.is_log_concave if shape else None,
                stable_length=shape.stable_length if shape else None,
                bound_holds=shape.bound_holds if shape else None,
            )


SCAN_CSV_COLUMNS = (
    "n",
    "m",
    "sign",
    "params",
    "components",
    "sigma",
    "degree",
    "stable_length",
    "symmetric",
    "trapezoidal",
    "log_concave",
    "bound_holds",
    "coeffs",
)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _csv_line(cells: Sequence[str]) -> str:
    out = io.StringIO()
    csv.writer(out, lineterminator="\n").writerow(cells)
    return out.getvalue()


def scan_csv_lines(
    strands: int,
    block_counts: Sequence[int],
    max_entry: int,
    sign: int = 1,
) -> Iterator[str]:
    """CSV stream (header plus one line per grid point, '\\n'-terminated)."""
    yield _csv_line(SCAN_CSV_COLUMNS)
    width = strands - 1
    for row in scan_rows(strands, block_counts, max_entry, sign):
        params = ";".join(
            ",".join(str(x) for x in row.parameters[j * width : (j + 1) * width])
            for j in range(row.blocks)
        )
        yield _csv_line(
            [
                str(row.strands),
                str(row.blocks),
                "+" if row.sign > 0 else "-",
                params,
                str(row.components),
                str(row.sigma),
                str(row.degree),
                _csv_cell(row.stable_length),
                _csv_cell(row.is_symmetric),
                _csv_cell(row.is_trapezoidal),
                _csv_cell(row.is_log_concave),
                _csv_cell(row.bound_holds),
                " ".join(str(c) for c in row.coeffs),
            ]
        )
