"""Soft sets over a fixed universe, and the family operations on them.

A soft set maps each parameter in an ordered list to a value set: a total
assignment of grade triples over the universe.  Binary operations require
both operands to share the same universe, ids and order alike; a mismatch is
always an error, never a quiet ``False``.

Combination rules on shared parameters:

* union / OR product:  truth = max, indeterminacy = min, falsity = min
* intersection / AND product: truth = min, indeterminacy = min, falsity = max

These rules preserve the triple validity bounds, so results are rebuilt
through the checked GradeTriple constructor and closure holds by
construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType

from .errors import (
    DuplicateElement,
    DuplicateParameter,
    EmptyParameterIntersection,
    UniverseMismatch,
    UnknownParameter,
)
from .grades import ZERO_TRIPLE, GradeTriple, complement_triple

__all__ = [
    "Parameter",
    "CompoundParameter",
    "ParamLike",
    "InsSet",
    "SoftSet",
    "not_parameters",
    "is_subset",
    "equals",
    "complement",
    "is_null",
    "union",
    "intersection",
    "and_op",
    "or_op",
    "canonicalize",
]


@dataclass(frozen=True)
class Parameter:
    """A named attribute, possibly carrying a negation flag."""

    name: str
    negated: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name:
            raise ValueError(f"parameter name must be a non-empty string, got {self.name!r}")

    def negate(self) -> "Parameter":
        return Parameter(self.name, not self.negated)

    @property
    def label(self) -> str:
        return f"not {self.name}" if self.negated else self.name

    def sort_key(self) -> tuple:
        return (0, self.name, self.negated)


@dataclass(frozen=True)
class CompoundParameter:
    """A pair of parameters produced by the AND / OR products.

    Negation distributes over the pair, so a compound never carries its own
    flag.
    """

    left: "Parameter | CompoundParameter"
    right: "Parameter | CompoundParameter"

    def negate(self) -> "CompoundParameter":
        return CompoundParameter(self.left.negate(), self.right.negate())

    @property
    def label(self) -> str:
        return f"({self.left.label}, {self.right.label})"

    def sort_key(self) -> tuple:
        return (1, self.left.sort_key(), self.right.sort_key())


ParamLike = Parameter | CompoundParameter


def not_parameters(parameters: Iterable[ParamLike]) -> tuple[ParamLike, ...]:
    """Negate every parameter, keeping order."""
    return tuple(p.negate() for p in parameters)


class InsSet(Mapping):
    """A total assignment of grade triples over an ordered universe."""

    __slots__ = ("_universe", "_triples")

    def __init__(self, universe: Sequence[str], triples: Mapping[str, GradeTriple]):
        self._universe = tuple(universe)
        known = set(self._universe)
        missing = [e for e in self._universe if e not in triples]
        extra = sorted(e for e in triples if e not in known)
        if missing or extra:
            parts = []
            if missing:
                parts.append(f"missing elements {missing}")
            if extra:
                parts.append(f"unknown elements {extra}")
            raise ValueError("value set " + ", ".join(parts))
        for element in self._universe:
            if not isinstance(triples[element], GradeTriple):
                raise TypeError(f"value for {element!r} is not a GradeTriple")
        self._triples = {e: triples[e] for e in self._universe}

    @property
    def universe(self) -> tuple[str, ...]:
        return self._universe

    def __getitem__(self, element: str) -> GradeTriple:
        return self._triples[element]

    def __iter__(self):
        return iter(self._universe)

    def __len__(self) -> int:
        return len(self._universe)

    def __repr__(self) -> str:
        return f"InsSet({self._triples!r})"


class SoftSet:
    """An ordered family of value sets, one per parameter."""

    __slots__ = ("_universe", "_parameters", "_family")

    def __init__(
        self,
        universe: Sequence[str],
        parameters: Sequence[ParamLike],
        family: Mapping[ParamLike, Mapping[str, GradeTriple]],
    ):
        self._universe = tuple(universe)
        seen_elements = set()
        for element in self._universe:
            if not isinstance(element, str) or not element:
                raise ValueError(f"element id must be a non-empty string, got {element!r}")
            if element in seen_elements:
                raise DuplicateElement(f"duplicate element id '{element}'")
            seen_elements.add(element)

        self._parameters = tuple(parameters)
        seen_params: set[ParamLike] = set()
        seen_labels: dict[str, ParamLike] = {}
        for param in self._parameters:
            if not isinstance(param, (Parameter, CompoundParameter)):
                raise TypeError(f"not a parameter: {param!r}")
            if param in seen_params:
                raise DuplicateParameter(f"duplicate parameter '{param.label}'")
            if param.label in seen_labels:
                raise DuplicateParameter(
                    f"parameters {seen_labels[param.label]!r} and {param!r} share label '{param.label}'"
                )
            seen_params.add(param)
            seen_labels[param.label] = param

        given = set(family)
        if given != seen_params:
            missing = sorted(p.label for p in seen_params - given)
            extra = sorted(p.label for p in given - seen_params)
            parts = []
            if missing:
                parts.append(f"missing value sets for {missing}")
            if extra:
                parts.append(f"value sets for undeclared parameters {extra}")
            raise ValueError("family mismatch: " + ", ".join(parts))

        built = {}
        for param in self._parameters:
            try:
                built[param] = InsSet(self._universe, family[param])
            except ValueError as err:
                raise ValueError(f"parameter '{param.label}': {err}") from None
        self._family = built

    @property
    def universe(self) -> tuple[str, ...]:
        return self._universe

    @property
    def parameters(self) -> tuple[ParamLike, ...]:
        return self._parameters

    @property
    def family(self) -> Mapping[ParamLike, InsSet]:
        return MappingProxyType(self._family)

    def has_parameter(self, param: ParamLike) -> bool:
        return param in self._family

    def value_set(self, param: ParamLike) -> InsSet:
        try:
            return self._family[param]
        except KeyError:
            raise UnknownParameter(f"unknown parameter '{param.label}'") from None

    def triple(self, param: ParamLike, element: str) -> GradeTriple:
        return self.value_set(param)[element]

    def find_parameter(self, label: str) -> ParamLike:
        """Look a parameter up by its display label."""
        for param in self._parameters:
            if param.label == label:
                return param
        raise UnknownParameter(f"unknown parameter '{label}'")

    def restrict(self, parameters: Sequence[ParamLike]) -> "SoftSet":
        """The same universe, narrowed to the given parameters in the given order."""
        for param in parameters:
            if param not in self._family:
                raise UnknownParameter(f"unknown parameter '{param.label}'")
        return SoftSet(self._universe, tuple(parameters), {p: self._family[p] for p in parameters})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SoftSet):
            return NotImplemented
        return (
            self._universe == other._universe
            and self._parameters == other._parameters
            and all(self._family[p] == other._family[p] for p in self._parameters)
        )

    def __repr__(self) -> str:
        return f"SoftSet({len(self._universe)} elements, {len(self._parameters)} parameters)"


def _require_same_universe(left: SoftSet, right: SoftSet) -> None:
    if left.universe != right.universe:
        raise UniverseMismatch(
            f"universes differ: {list(left.universe)} vs {list(right.universe)}"
        )


def _join(a: GradeTriple, b: GradeTriple) -> GradeTriple:
    return GradeTriple(
        max(a.truth, b.truth),
        min(a.indeterminacy, b.indeterminacy),
        min(a.falsity, b.falsity),
    )


def _meet(a: GradeTriple, b: GradeTriple) -> GradeTriple:
    return GradeTriple(
        min(a.truth, b.truth),
        min(a.indeterminacy, b.indeterminacy),
        max(a.falsity, b.falsity),
    )


def is_subset(left: SoftSet, right: SoftSet) -> bool:
    """Containment: parameters included, truth and indeterminacy no larger,
    falsity no smaller, elementwise.  Not strict: equal sets contain each other."""
    _require_same_universe(left, right)
    right_params = set(right.parameters)
    if any(p not in right_params for p in left.parameters):
        return False
    for param in left.parameters:
        ours, theirs = left.value_set(param), right.value_set(param)
        for element in left.universe:
            a, b = ours[element], theirs[element]
            if not (
                a.truth <= b.truth
                and a.indeterminacy <= b.indeterminacy
                and a.falsity >= b.falsity
            ):
                return False
    return True


def equals(left: SoftSet, right: SoftSet) -> bool:
    """Mutual containment: same parameter set (order aside) and identical triples."""
    return is_subset(left, right) and is_subset(right, left)


def complement(soft_set: SoftSet) -> SoftSet:
    """Negate every parameter and swap truth with falsity in every triple."""
    family = {
        param.negate(): {e: complement_triple(tr) for e, tr in soft_set.value_set(param).items()}
        for param in soft_set.parameters
    }
    return SoftSet(soft_set.universe, not_parameters(soft_set.parameters), family)


def is_null(soft_set: SoftSet) -> bool:
    """True when every triple is (0, 0, 0)."""
    return all(
        triple == ZERO_TRIPLE
        for param in soft_set.parameters
        for triple in soft_set.value_set(param).values()
    )


def union(left: SoftSet, right: SoftSet) -> SoftSet:
    """Join on shared parameters (max/min/min); unshared value sets are copied.

    Result parameters: left's, then right's that left lacks, orders kept.
    """
    _require_same_universe(left, right)
    left_params, right_params = set(left.parameters), set(right.parameters)
    parameters = left.parameters + tuple(p for p in right.parameters if p not in left_params)
    family = {}
    for param in parameters:
        if param in left_params and param in right_params:
            ours, theirs = left.value_set(param), right.value_set(param)
            family[param] = {e: _join(ours[e], theirs[e]) for e in left.universe}
        elif param in left_params:
            family[param] = dict(left.value_set(param))
        else:
            family[param] = dict(right.value_set(param))
    return SoftSet(left.universe, parameters, family)


def intersection(left: SoftSet, right: SoftSet) -> SoftSet:
    """Meet on shared parameters (min/min/max); requires at least one."""
    _require_same_universe(left, right)
    right_params = set(right.parameters)
    parameters = tuple(p for p in left.parameters if p in right_params)
    if not parameters:
        raise EmptyParameterIntersection("the parameter sets share no member")
    family = {}
    for param in parameters:
        ours, theirs = left.value_set(param), right.value_set(param)
        family[param] = {e: _meet(ours[e], theirs[e]) for e in left.universe}
    return SoftSet(left.universe, parameters, family)


def and_op(left: SoftSet, right: SoftSet) -> SoftSet:
    """Pairwise product with the meet rule; columns in row-major pair order."""
    _require_same_universe(left, right)
    parameters = []
    family = {}
    for a in left.parameters:
        ours = left.value_set(a)
        for b in right.parameters:
            theirs = right.value_set(b)
            pair = CompoundParameter(a, b)
            parameters.append(pair)
            family[pair] = {e: _meet(ours[e], theirs[e]) for e in left.universe}
    return SoftSet(left.universe, tuple(parameters), family)


def or_op(left: SoftSet, right: SoftSet) -> SoftSet:
    """Pairwise product with the join rule; columns in row-major pair order."""
    _require_same_universe(left, right)
    parameters = []
    family = {}
    for a in left.parameters:
        ours = left.value_set(a)
        for b in right.parameters:
            theirs = right.value_set(b)
            pair = CompoundParameter(a, b)
            parameters.append(pair)
            family[pair] = {e: _join(ours[e], theirs[e]) for e in left.universe}
    return SoftSet(left.universe, tuple(parameters), family)


def canonicalize(soft_set: SoftSet) -> SoftSet:
    """Reorder parameters into the canonical sort, leaving values untouched.

    Makes order-insensitive identities (commutativity above all) literal
    structural equality.
    """
    ordered = tuple(sorted(soft_set.parameters, key=lambda p: p.sort_key()))
    return SoftSet(soft_set.universe, ordered, {p: soft_set.value_set(p) for p in ordered})
