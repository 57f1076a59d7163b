"""Comparison-matrix decision procedure.

Given a soft set and a chosen parameter list, each object is scored per
parameter by counting how many other objects it matches or beats in truth,
how many in indeterminacy (indeterminacy counts in the object's favour), and
how many it matches or beats in falsity (which counts against it):

    entry = truth_wins + indeterminacy_wins - falsity_wins

All three counts use >= against each other object, so ties count as wins.
Row sums give the scores; the best object is the highest score, earliest
universe position winning ties.  Per-column work is independent (columns
could be computed in parallel); this implementation is sequential and sorts
each column once, counting with bisection.
"""

from __future__ import annotations

from bisect import bisect_right
from collections.abc import Sequence
from dataclasses import dataclass

from .algebra import CompoundParameter, ParamLike, Parameter, SoftSet
from .errors import (
    EmptyParameterSet,
    EmptyUniverse,
    ReferenceMismatch,
    UnknownParameter,
)
from .grades import GradeTriple

__all__ = [
    "DecisionTable",
    "CellAudit",
    "ComparisonMatrix",
    "ScoreVector",
    "ReferenceMatrix",
    "MatrixDiff",
    "SelectionReport",
    "comparison_matrix",
    "scores",
    "select_best",
]


def _resolve_choice(soft_set: SoftSet, choice: Sequence[ParamLike | str]) -> tuple[ParamLike, ...]:
    resolved = []
    for entry in choice:
        if isinstance(entry, str):
            resolved.append(soft_set.find_parameter(entry))
        elif isinstance(entry, (Parameter, CompoundParameter)):
            if not soft_set.has_parameter(entry):
                raise UnknownParameter(f"unknown parameter '{entry.label}'")
            resolved.append(entry)
        else:
            raise TypeError(f"not a parameter or label: {entry!r}")
    return tuple(resolved)


class DecisionTable:
    """A soft set narrowed to the chosen parameters, laid out objects-by-parameters."""

    __slots__ = ("_soft_set", "_objects", "_parameters", "_rows")

    def __init__(self, soft_set: SoftSet, choice: Sequence[ParamLike | str] | None = None):
        entries = soft_set.parameters if choice is None else _resolve_choice(soft_set, choice)
        if not entries:
            raise EmptyParameterSet("a decision needs at least one parameter")
        if not soft_set.universe:
            raise EmptyUniverse("a decision needs at least one object")
        self._soft_set = soft_set.restrict(entries)
        self._objects = self._soft_set.universe
        self._parameters = self._soft_set.parameters
        columns = [self._soft_set.value_set(p) for p in self._parameters]
        self._rows = tuple(
            tuple(column[element] for column in columns) for element in self._objects
        )

    @property
    def soft_set(self) -> SoftSet:
        return self._soft_set

    @property
    def objects(self) -> tuple[str, ...]:
        return self._objects

    @property
    def parameters(self) -> tuple[ParamLike, ...]:
        return self._parameters

    @property
    def rows(self) -> tuple[tuple[GradeTriple, ...], ...]:
        return self._rows

    def __repr__(self) -> str:
        return f"DecisionTable({len(self._objects)} objects, {len(self._parameters)} parameters)"


@dataclass(frozen=True)
class CellAudit:
    """The three counts behind one matrix entry.

    Each field counts the other objects whose component this object matches
    or beats under the same parameter.
    """

    truth_wins: int
    indeterminacy_wins: int
    falsity_wins: int

    @property
    def value(self) -> int:
        return self.truth_wins + self.indeterminacy_wins - self.falsity_wins


@dataclass(frozen=True)
class ComparisonMatrix:
    """Matrix of audit cells, rows indexed by object, columns by parameter."""

    objects: tuple[str, ...]
    parameters: tuple[ParamLike, ...]
    audits: tuple[tuple[CellAudit, ...], ...]

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(cell.value for cell in row) for row in self.audits)

    def row(self, object_id: str) -> tuple[int, ...]:
        try:
            index = self.objects.index(object_id)
        except ValueError:
            raise ValueError(f"unknown object '{object_id}'") from None
        return tuple(cell.value for cell in self.audits[index])

    @property
    def column_sums(self) -> tuple[int, ...]:
        return tuple(
            sum(row[j].value for row in self.audits) for j in range(len(self.parameters))
        )


def comparison_matrix(table: DecisionTable) -> ComparisonMatrix:
    """Count wins per object and parameter.

    For each column, each component's values are sorted once; an object's win
    count is then the number of values at or below its own, self excluded.
    """
    if not table.parameters:
        raise EmptyParameterSet("a decision needs at least one parameter")
    if not table.objects:
        raise EmptyUniverse("a decision needs at least one object")
    count = len(table.objects)
    columns = []
    for j in range(len(table.parameters)):
        truths = [table.rows[i][j].truth.ten_thousandths for i in range(count)]
        indets = [table.rows[i][j].indeterminacy.ten_thousandths for i in range(count)]
        falsities = [table.rows[i][j].falsity.ten_thousandths for i in range(count)]
        sorted_truths = sorted(truths)
        sorted_indets = sorted(indets)
        sorted_falsities = sorted(falsities)
        columns.append(
            [
                CellAudit(
                    bisect_right(sorted_truths, truths[i]) - 1,
                    bisect_right(sorted_indets, indets[i]) - 1,
                    bisect_right(sorted_falsities, falsities[i]) - 1,
                )
                for i in range(count)
            ]
        )
    audits = tuple(tuple(columns[j][i] for j in range(len(columns))) for i in range(count))
    return ComparisonMatrix(table.objects, table.parameters, audits)


@dataclass(frozen=True)
class ScoreVector:
    """Row sums of the comparison matrix, plus the ranking they induce."""

    objects: tuple[str, ...]
    scores: tuple[int, ...]
    ranking: tuple[str, ...]


def scores(matrix: ComparisonMatrix) -> ScoreVector:
    """Sum each object's row; rank by descending score, earliest object first on ties."""
    totals = tuple(sum(cell.value for cell in row) for row in matrix.audits)
    order = sorted(range(len(totals)), key=lambda i: (-totals[i], i))
    return ScoreVector(matrix.objects, totals, tuple(matrix.objects[i] for i in order))


@dataclass(frozen=True)
class ReferenceMatrix:
    """An externally supplied matrix to audit the computed one against."""

    objects: tuple[str, ...]
    parameter_labels: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.objects):
            raise ValueError("reference matrix needs one row per object")
        for row in self.entries:
            if len(row) != len(self.parameter_labels):
                raise ValueError("reference matrix needs one column per parameter")


@dataclass(frozen=True)
class MatrixDiff:
    """One cell where the computed matrix disagrees with the reference."""

    object_id: str
    parameter: ParamLike
    computed: int
    reference: int


def _diff_against(matrix: ComparisonMatrix, reference: ReferenceMatrix) -> tuple[MatrixDiff, ...]:
    labels = tuple(p.label for p in matrix.parameters)
    if reference.objects != matrix.objects or reference.parameter_labels != labels:
        raise ReferenceMismatch(
            f"reference covers {list(reference.objects)} x {list(reference.parameter_labels)}, "
            f"computed matrix covers {list(matrix.objects)} x {list(labels)}"
        )
    diffs = []
    entries = matrix.entries
    for i, object_id in enumerate(matrix.objects):
        for j, param in enumerate(matrix.parameters):
            if entries[i][j] != reference.entries[i][j]:
                diffs.append(MatrixDiff(object_id, param, entries[i][j], reference.entries[i][j]))
    return tuple(diffs)


@dataclass(frozen=True)
class SelectionReport:
    """Everything the decision produced, ready for rendering or serialization."""

    table: DecisionTable
    matrix: ComparisonMatrix
    scores: ScoreVector
    best: str
    tied: bool
    reference_diff: tuple[MatrixDiff, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "objects": list(self.matrix.objects),
            "parameters": [p.label for p in self.matrix.parameters],
            "matrix": [list(row) for row in self.matrix.entries],
            "audits": [
                [[c.truth_wins, c.indeterminacy_wins, c.falsity_wins] for c in row]
                for row in self.matrix.audits
            ],
            "scores": list(self.scores.scores),
            "ranking": list(self.scores.ranking),
            "best": self.best,
            "tied": self.tied,
            "reference_diff": None
            if self.reference_diff is None
            else [
                {
                    "object": d.object_id,
                    "parameter": d.parameter.label,
                    "computed": d.computed,
                    "reference": d.reference,
                }
                for d in self.reference_diff
            ],
        }


def select_best(
    soft_set: SoftSet,
    choice: Sequence[ParamLike | str] | None = None,
    reference: ReferenceMatrix | None = None,
) -> SelectionReport:
    """Run the full procedure: restrict, count, score, pick.

    With a reference matrix, the report also carries every cell where the
    computed matrix disagrees with it.
    """
    table = DecisionTable(soft_set, choice)
    matrix = comparison_matrix(table)
    vector = scores(matrix)
    best = vector.ranking[0]
    top = max(vector.scores)
    tied = vector.scores.count(top) > 1
    diff = None if reference is None else _diff_against(matrix, reference)
    return SelectionReport(table, matrix, vector, best, tied, diff)
