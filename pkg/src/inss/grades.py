"""Exact membership grades and validated grade triples.

A grade is an exact decimal in [0, 1] held as an integer count of
ten-thousandths.  Every comparison in the package is therefore plain integer
comparison, and no value ever picks up binary floating-point noise.  A grade
triple bundles truth, indeterminacy and falsity degrees and enforces the
joint validity bounds at construction time:

* min(truth, falsity)        <= 0.5
* min(truth, indeterminacy)  <= 0.5
* min(falsity, indeterminacy) <= 0.5
* truth + indeterminacy + falsity <= 2

so any triple you can get your hands on is already valid (the one documented
escape hatch is :meth:`GradeTriple.unchecked`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation

from .errors import ConstraintViolation, OutOfRange, ParseError, PrecisionLoss

__all__ = [
    "GRADE_SCALE",
    "COMPONENTS",
    "Grade",
    "GradeTriple",
    "ZERO_TRIPLE",
    "complement_triple",
    "validate_triple",
]

GRADE_SCALE = 10_000
_HALF = GRADE_SCALE // 2
_SUM_CAP = 2 * GRADE_SCALE

COMPONENTS = ("truth", "indeterminacy", "falsity")


def _format_ticks(ticks: int) -> str:
    """Minimal decimal text for a count of ten-thousandths ("0.3", "1", "0.1234")."""
    whole, frac = divmod(ticks, GRADE_SCALE)
    if frac == 0:
        return str(whole)
    return f"{whole}.{frac:04d}".rstrip("0")


@dataclass(frozen=True, order=True)
class Grade:
    """One membership degree, counted in ten-thousandths (0 ..= 10000)."""

    ten_thousandths: int

    def __post_init__(self) -> None:
        if isinstance(self.ten_thousandths, bool) or not isinstance(self.ten_thousandths, int):
            raise OutOfRange(f"grade count must be an integer, got {self.ten_thousandths!r}")
        if not 0 <= self.ten_thousandths <= GRADE_SCALE:
            raise OutOfRange(f"grade = {_format_ticks(self.ten_thousandths)} outside [0, 1]")

    @classmethod
    def parse(cls, value: object, what: str = "grade") -> "Grade":
        """Read a grade from text, an int, a float, or a Decimal.

        Rejects values outside [0, 1] (OutOfRange), values that do not sit on
        the 1/10000 grid (PrecisionLoss), and non-numeric input (ParseError).
        ``what`` names the value in error messages.
        """
        if isinstance(value, Grade):
            return value
        if isinstance(value, bool) or value is None:
            raise ParseError(f"{what} {value!r} is not a decimal number")
        if isinstance(value, float):
            if not math.isfinite(value):
                raise ParseError(f"{what} {value!r} is not a decimal number")
            dec = Decimal(str(value))
        elif isinstance(value, int):
            dec = Decimal(value)
        elif isinstance(value, Decimal):
            dec = value
        elif isinstance(value, str):
            try:
                dec = Decimal(value.strip())
            except InvalidOperation:
                raise ParseError(f"{what} {value!r} is not a decimal number") from None
        else:
            raise ParseError(f"{what} {value!r} is not a decimal number")
        if not dec.is_finite():
            raise ParseError(f"{what} {value!r} is not a decimal number")
        if dec < 0 or dec > 1:
            raise OutOfRange(f"{what} = {dec} outside [0, 1]")
        scaled = dec * GRADE_SCALE
        ticks = int(scaled)
        if scaled != ticks:
            raise PrecisionLoss(f"{what} = {dec} has more than four decimal places")
        return cls(ticks)

    @property
    def text(self) -> str:
        """Canonical minimal-decimal form, with a leading zero ("0.3")."""
        return _format_ticks(self.ten_thousandths)

    def __str__(self) -> str:
        return self.text


def _first_violation(truth: Grade, indeterminacy: Grade, falsity: Grade) -> str | None:
    t = truth.ten_thousandths
    i = indeterminacy.ten_thousandths
    f = falsity.ten_thousandths
    for name_a, a, name_b, b in (
        ("truth", t, "falsity", f),
        ("truth", t, "indeterminacy", i),
        ("falsity", f, "indeterminacy", i),
    ):
        low = a if a <= b else b
        if low > _HALF:
            return f"min({name_a}, {name_b}) = {_format_ticks(low)} exceeds 0.5"
    # The bound checks above already cap the sum at 2 (at most one component
    # can exceed 0.5), so this only fires on hand-built unchecked data.
    if t + i + f > _SUM_CAP:
        return f"truth + indeterminacy + falsity = {_format_ticks(t + i + f)} exceeds 2"
    return None


@dataclass(frozen=True)
class GradeTriple:
    """Truth, indeterminacy and falsity degrees for one element.

    Construction checks the joint validity bounds and raises
    ConstraintViolation naming the first broken inequality, so every triple
    built through the constructor is valid.
    """

    truth: Grade
    indeterminacy: Grade
    falsity: Grade

    def __post_init__(self) -> None:
        problem = _first_violation(self.truth, self.indeterminacy, self.falsity)
        if problem is not None:
            raise ConstraintViolation(problem)

    @classmethod
    def unchecked(cls, truth: Grade, indeterminacy: Grade, falsity: Grade) -> "GradeTriple":
        """Build a triple without the joint bounds check.

        Exists solely to audit published data that breaks the bounds; the
        individual grades are still real grades.  Do not use this to smuggle
        values into ordinary computations.
        """
        for grade in (truth, indeterminacy, falsity):
            if not isinstance(grade, Grade):
                raise TypeError(f"expected Grade, got {grade!r}")
        self = object.__new__(cls)
        object.__setattr__(self, "truth", truth)
        object.__setattr__(self, "indeterminacy", indeterminacy)
        object.__setattr__(self, "falsity", falsity)
        return self

    def components(self) -> tuple[Grade, Grade, Grade]:
        return (self.truth, self.indeterminacy, self.falsity)

    def __str__(self) -> str:
        return f"({self.truth}, {self.indeterminacy}, {self.falsity})"


ZERO_TRIPLE = GradeTriple(Grade(0), Grade(0), Grade(0))


def validate_triple(truth: object, indeterminacy: object, falsity: object) -> GradeTriple:
    """Parse three raw values and return the validated triple they form."""
    return GradeTriple(
        Grade.parse(truth, "truth"),
        Grade.parse(indeterminacy, "indeterminacy"),
        Grade.parse(falsity, "falsity"),
    )


def complement_triple(triple: GradeTriple) -> GradeTriple:
    """Swap truth and falsity; indeterminacy stays put."""
    return GradeTriple(triple.falsity, triple.indeterminacy, triple.truth)
