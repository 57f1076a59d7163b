"""Reading, writing and rendering soft-set documents.

A soft-set document is a JSON object:

    {
      "format_version": 1,
      "universe": ["b1", "b2"],
      "parameters": [{"name": "bright", "negated": false}, ...],
      "grades": {
        "bright": {"b1": ["0.5", "0.6", "0.3"], "b2": [...]},
        ...
      }
    }

``universe`` and ``parameters`` are ordered; the ``grades`` maps are keyed by
parameter label and element id and must cover them exactly.  A parameter is
either ``{"name", "negated"}`` or a product ``{"left", "right"}`` of two
parameters.  Each cell is ``[truth, indeterminacy, falsity]``; values may
arrive as strings or numbers but are always written back as canonical
minimal-decimal strings.  Serialization is canonical and stable: two-space
indent, sorted object keys, trailing newline, so loading and saving any
document yields byte-identical output.

Reference matrices (for auditing a computed comparison matrix) use:

    {"format_version": 1, "objects": [...], "parameters": ["label", ...],
     "entries": [[0, -2, ...], ...]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import CompoundParameter, ParamLike, Parameter, SoftSet
from .decision import ReferenceMatrix
from .errors import (
    ConstraintViolation,
    DuplicateElement,
    DuplicateParameter,
    OutOfRange,
    ParseError,
    PrecisionLoss,
)
from .grades import COMPONENTS, Grade, GradeTriple

__all__ = [
    "FORMAT_VERSION",
    "load_soft_set",
    "soft_set_to_document",
    "serialize_soft_set",
    "save_soft_set",
    "load_reference_matrix",
    "render_table",
]

FORMAT_VERSION = 1


def _read_json(source: str | Path) -> object:
    text = Path(source).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(
            f"{source}: invalid JSON at line {err.lineno} column {err.colno}: {err.msg}"
        ) from None


def _expect_keys(obj: dict, required: set[str], where: str) -> None:
    missing = sorted(required - set(obj))
    extra = sorted(set(obj) - required)
    if missing:
        raise ParseError(f"{where}: missing key(s) {missing}")
    if extra:
        raise ParseError(f"{where}: unexpected key(s) {extra}")


def _check_version(doc: dict, where: str) -> None:
    version = doc.get("format_version")
    if isinstance(version, bool) or version != FORMAT_VERSION:
        raise ParseError(f"{where}: unsupported format_version {version!r}")


def _param_from_spec(spec: object, where: str) -> ParamLike:
    if not isinstance(spec, dict):
        raise ParseError(f"{where}: parameter must be an object, got {spec!r}")
    if set(spec) == {"name", "negated"}:
        name, negated = spec["name"], spec["negated"]
        if not isinstance(name, str) or not name:
            raise ParseError(f"{where}.name: must be a non-empty string")
        if not isinstance(negated, bool):
            raise ParseError(f"{where}.negated: must be true or false")
        return Parameter(name, negated)
    if set(spec) == {"left", "right"}:
        return CompoundParameter(
            _param_from_spec(spec["left"], f"{where}.left"),
            _param_from_spec(spec["right"], f"{where}.right"),
        )
    raise ParseError(
        f"{where}: expected keys {{'name', 'negated'}} or {{'left', 'right'}}, got {sorted(spec)}"
    )


def _param_to_spec(param: ParamLike) -> dict:
    if isinstance(param, Parameter):
        return {"name": param.name, "negated": param.negated}
    return {"left": _param_to_spec(param.left), "right": _param_to_spec(param.right)}


def load_soft_set(source: str | Path, *, check_grades: bool = True) -> SoftSet:
    """Load a soft-set document.

    Structural problems raise ParseError naming the offending location; grade
    problems re-raise with ``grades['<parameter>']['<element>']`` coordinates
    prepended.  ``check_grades=False`` skips only the joint triple bounds
    (for auditing published data that breaks them); each grade on its own is
    still parsed strictly.
    """
    doc = _read_json(source)
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: document must be a JSON object")
    _expect_keys(doc, {"format_version", "universe", "parameters", "grades"}, str(source))
    _check_version(doc, str(source))

    universe_raw = doc["universe"]
    if not isinstance(universe_raw, list):
        raise ParseError("universe: must be a list of element ids")
    universe: list[str] = []
    for index, element in enumerate(universe_raw):
        if not isinstance(element, str) or not element:
            raise ParseError(f"universe[{index}]: must be a non-empty string")
        if element in universe:
            raise DuplicateElement(f"universe[{index}]: duplicate element id '{element}'")
        universe.append(element)

    params_raw = doc["parameters"]
    if not isinstance(params_raw, list):
        raise ParseError("parameters: must be a list")
    parameters: list[ParamLike] = []
    labels: list[str] = []
    for index, spec in enumerate(params_raw):
        param = _param_from_spec(spec, f"parameters[{index}]")
        if param in parameters:
            raise DuplicateParameter(f"parameters[{index}]: duplicate parameter '{param.label}'")
        if param.label in labels:
            raise DuplicateParameter(
                f"parameters[{index}]: label '{param.label}' already used by another parameter"
            )
        parameters.append(param)
        labels.append(param.label)

    grades_raw = doc["grades"]
    if not isinstance(grades_raw, dict):
        raise ParseError("grades: must be an object keyed by parameter label")
    known = set(labels)
    for key in grades_raw:
        if key not in known:
            raise ParseError(f"grades: unknown parameter '{key}'")
    family = {}
    for param, label in zip(parameters, labels):
        if label not in grades_raw:
            raise ParseError(f"grades: missing entry for parameter '{label}'")
        cells = grades_raw[label]
        if not isinstance(cells, dict):
            raise ParseError(f"grades['{label}']: must be an object keyed by element id")
        for key in cells:
            if key not in universe:
                raise ParseError(f"grades['{label}']: unknown element '{key}'")
        value_set = {}
        for element in universe:
            if element not in cells:
                raise ParseError(f"grades['{label}']: missing element '{element}'")
            cell = cells[element]
            where = f"grades['{label}']['{element}']"
            if not isinstance(cell, list) or len(cell) != 3:
                raise ParseError(f"{where}: expected [truth, indeterminacy, falsity]")
            try:
                triple_grades = [
                    Grade.parse(raw, component) for raw, component in zip(cell, COMPONENTS)
                ]
            except (OutOfRange, PrecisionLoss, ParseError) as err:
                raise type(err)(f"{where}: {err}") from None
            if check_grades:
                try:
                    value_set[element] = GradeTriple(*triple_grades)
                except ConstraintViolation as err:
                    raise ConstraintViolation(f"{where}: {err}") from None
            else:
                value_set[element] = GradeTriple.unchecked(*triple_grades)
        family[param] = value_set

    return SoftSet(universe, parameters, family)


def soft_set_to_document(soft_set: SoftSet) -> dict:
    """The plain-dict document form of a soft set."""
    return {
        "format_version": FORMAT_VERSION,
        "universe": list(soft_set.universe),
        "parameters": [_param_to_spec(p) for p in soft_set.parameters],
        "grades": {
            param.label: {
                element: [grade.text for grade in triple.components()]
                for element, triple in soft_set.value_set(param).items()
            }
            for param in soft_set.parameters
        },
    }


def serialize_soft_set(soft_set: SoftSet) -> str:
    """Canonical document text: stable byte-for-byte across runs."""
    return json.dumps(soft_set_to_document(soft_set), indent=2, sort_keys=True) + "\n"


def save_soft_set(soft_set: SoftSet, target: str | Path) -> None:
    Path(target).write_text(serialize_soft_set(soft_set), encoding="utf-8")


def load_reference_matrix(source: str | Path) -> ReferenceMatrix:
    """Load a reference comparison matrix (integer entries, labelled axes)."""
    doc = _read_json(source)
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: document must be a JSON object")
    _expect_keys(doc, {"format_version", "objects", "parameters", "entries"}, str(source))
    _check_version(doc, str(source))
    objects = doc["objects"]
    labels = doc["parameters"]
    entries = doc["entries"]
    if not isinstance(objects, list) or not all(isinstance(o, str) and o for o in objects):
        raise ParseError("objects: must be a list of non-empty strings")
    if not isinstance(labels, list) or not all(isinstance(l, str) and l for l in labels):
        raise ParseError("parameters: must be a list of non-empty labels")
    if not isinstance(entries, list) or len(entries) != len(objects):
        raise ParseError("entries: need exactly one row per object")
    rows = []
    for index, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != len(labels):
            raise ParseError(f"entries[{index}]: need exactly one value per parameter")
        for value in row:
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParseError(f"entries[{index}]: values must be integers, got {value!r}")
        rows.append(tuple(row))
    return ReferenceMatrix(tuple(objects), tuple(labels), tuple(rows))


def render_table(soft_set: SoftSet) -> str:
    """Fixed-width text table: one row per element, one column per parameter.

    With no parameters only the header line is produced.
    """
    header = ["U"] + [p.label for p in soft_set.parameters]
    if not soft_set.parameters:
        return header[0]
    rows = [
        [element] + [str(soft_set.value_set(p)[element]) for p in soft_set.parameters]
        for element in soft_set.universe
    ]
    widths = [max(len(line[i]) for line in [header] + rows) for i in range(len(header))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in [header] + rows
    ]
    return "\n".join(lines)
