import random

import pytest
from helpers import fixture, random_soft_set

from inss import (
    CompoundParameter,
    DuplicateElement,
    DuplicateParameter,
    EmptyParameterIntersection,
    Grade,
    GradeTriple,
    InsSet,
    Parameter,
    SoftSet,
    UniverseMismatch,
    UnknownParameter,
    and_op,
    canonicalize,
    complement,
    equals,
    intersection,
    is_null,
    is_subset,
    load_soft_set,
    not_parameters,
    or_op,
    union,
)

T = GradeTriple
G = Grade


def triple(t, i, f):
    return T(G(t), G(i), G(f))


def tiny(universe=("x", "y"), names=("p", "q"), fill=(3000, 2000, 4000)):
    params = [Parameter(n) for n in names]
    family = {p: {e: triple(*fill) for e in universe} for p in params}
    return SoftSet(universe, params, family)


class TestParameters:
    def test_labels(self):
        assert Parameter("bright").label == "bright"
        assert Parameter("bright", negated=True).label == "not bright"
        pair = CompoundParameter(Parameter("Bright"), Parameter("Costly"))
        assert pair.label == "(Bright, Costly)"

    def test_negation(self):
        p = Parameter("bright")
        assert p.negate() == Parameter("bright", negated=True)
        assert p.negate().negate() == p
        pair = CompoundParameter(Parameter("a"), Parameter("b", negated=True))
        assert pair.negate() == CompoundParameter(
            Parameter("a", negated=True), Parameter("b")
        )
        assert pair.negate().label == "(not a, b)"

    def test_not_parameters_keeps_order(self):
        params = (Parameter("a"), Parameter("b", negated=True))
        assert [p.label for p in not_parameters(params)] == ["not a", "b"]

    def test_empty_name_rejected(self):
        with pytest.raises(ValueError):
            Parameter("")

    def test_sort_order_simple_before_compound(self):
        a = Parameter("zeta")
        pair = CompoundParameter(Parameter("alpha"), Parameter("beta"))
        assert sorted([pair, a], key=lambda p: p.sort_key()) == [a, pair]


class TestConstruction:
    def test_value_set_must_cover_universe(self):
        with pytest.raises(ValueError, match="missing elements"):
            InsSet(("x", "y"), {"x": triple(0, 0, 0)})
        with pytest.raises(ValueError, match="unknown elements"):
            InsSet(("x",), {"x": triple(0, 0, 0), "z": triple(0, 0, 0)})

    def test_value_set_requires_grade_triples(self):
        with pytest.raises(TypeError):
            InsSet(("x",), {"x": (0.3, 0.2, 0.4)})

    def test_duplicate_element_rejected(self):
        p = Parameter("p")
        with pytest.raises(DuplicateElement):
            SoftSet(("x", "x"), [p], {p: {"x": triple(0, 0, 0)}})

    def test_duplicate_parameter_rejected(self):
        p = Parameter("p")
        with pytest.raises(DuplicateParameter):
            SoftSet(("x",), [p, p], {p: {"x": triple(0, 0, 0)}})

    def test_label_collision_rejected(self):
        # distinct parameters, identical display labels
        sneaky = Parameter("(a, b)")
        pair = CompoundParameter(Parameter("a"), Parameter("b"))
        with pytest.raises(DuplicateParameter, match="share label"):
            SoftSet(("x",), [sneaky, pair], {})

    def test_family_must_match_parameters(self):
        p, q = Parameter("p"), Parameter("q")
        with pytest.raises(ValueError, match="family mismatch"):
            SoftSet(("x",), [p, q], {p: {"x": triple(0, 0, 0)}})

    def test_lookup_by_label_and_by_parameter(self):
        s = tiny()
        p = s.find_parameter("p")
        assert p == Parameter("p")
        assert s.value_set(p)["x"] == triple(3000, 2000, 4000)
        assert s.triple(p, "y") == triple(3000, 2000, 4000)
        with pytest.raises(UnknownParameter):
            s.find_parameter("nope")
        with pytest.raises(UnknownParameter):
            s.value_set(Parameter("nope"))

    def test_restrict_narrows_and_reorders(self):
        s = tiny(names=("p", "q"))
        q = s.find_parameter("q")
        narrowed = s.restrict([q])
        assert narrowed.parameters == (q,)
        assert narrowed.universe == s.universe
        with pytest.raises(UnknownParameter):
            s.restrict([Parameter("other")])


class TestGoldenTables:
    def test_union_matches_golden(self):
        a = load_soft_set(fixture("qualities_a.json"))
        b = load_soft_set(fixture("qualities_b.json"))
        assert union(a, b) == load_soft_set(fixture("qualities_union.json"))

    def test_intersection_matches_golden(self):
        a = load_soft_set(fixture("qualities_a.json"))
        b = load_soft_set(fixture("qualities_b.json"))
        assert intersection(a, b) == load_soft_set(fixture("qualities_intersection.json"))

    def test_and_matches_golden(self):
        a = load_soft_set(fixture("qualities_a.json"))
        b = load_soft_set(fixture("qualities_b.json"))
        result = and_op(a, b)
        assert result == load_soft_set(fixture("qualities_and.json"))
        labels = [p.label for p in result.parameters]
        assert labels[:3] == ["(Bright, Costly)", "(Bright, Colorful)", "(Cheap, Costly)"]

    def test_or_matches_golden(self):
        a = load_soft_set(fixture("qualities_a.json"))
        b = load_soft_set(fixture("qualities_b.json"))
        assert or_op(a, b) == load_soft_set(fixture("qualities_or.json"))

    def test_complement_matches_golden(self):
        attr = load_soft_set(fixture("attractiveness.json"))
        expected = load_soft_set(fixture("not_attractiveness.json"))
        assert complement(attr) == expected
        assert complement(expected) == attr

    def test_containment_pair(self):
        sizes = load_soft_set(fixture("sizes.json"))
        textures = load_soft_set(fixture("textures.json"))
        assert is_subset(sizes, textures)
        assert not is_subset(textures, sizes)
        assert not equals(sizes, textures)

    def test_published_intersection_differs_in_exactly_two_cells(self):
        computed = load_soft_set(fixture("qualities_intersection.json"))
        printed = load_soft_set(fixture("qualities_intersection_printed.json"))
        colorful = computed.find_parameter("Colorful")
        diffs = [
            e
            for e in computed.universe
            if computed.triple(colorful, e) != printed.triple(colorful, e)
        ]
        assert diffs == ["b3", "b4"]
        assert str(computed.triple(colorful, "b3")) == "(0.5, 0.3, 0.4)"
        assert str(printed.triple(colorful, "b3")) == "(0.6, 0.3, 0.4)"
        assert str(computed.triple(colorful, "b4")) == "(0.2, 0.2, 0.3)"
        assert str(printed.triple(colorful, "b4")) == "(0.8, 0.2, 0.3)"

    def test_published_or_differs_in_exactly_two_cells(self):
        computed = load_soft_set(fixture("qualities_or.json"))
        printed = load_soft_set(fixture("qualities_or_printed.json"))
        diffs = [
            (e, p.label)
            for p in computed.parameters
            for e in computed.universe
            if computed.triple(p, e) != printed.triple(p, e)
        ]
        assert sorted(diffs) == [
            ("b3", "(Colorful, Colorful)"),
            ("b5", "(Bright, Colorful)"),
        ]


class TestOperationShape:
    def test_union_keeps_left_then_new_right_parameters(self):
        a = load_soft_set(fixture("qualities_a.json"))
        b = load_soft_set(fixture("qualities_b.json"))
        labels = [p.label for p in union(a, b).parameters]
        assert labels == ["Bright", "Cheap", "Colorful", "Costly"]

    def test_intersection_requires_shared_parameters(self):
        with pytest.raises(EmptyParameterIntersection):
            intersection(tiny(names=("p",)), tiny(names=("q",)))

    def test_operations_require_identical_universes(self):
        a = tiny(universe=("x", "y"))
        b = tiny(universe=("y", "x"))
        for op in (union, intersection, and_op, or_op, is_subset, equals):
            with pytest.raises(UniverseMismatch):
                op(a, b)

    def test_and_with_single_parameter_side_mirrors_intersection(self):
        a = load_soft_set(fixture("qualities_a.json"))
        b = load_soft_set(fixture("qualities_b.json"))
        colorful = a.find_parameter("Colorful")
        anded = and_op(a.restrict([colorful]), b.restrict([b.find_parameter("Colorful")]))
        meet = intersection(a, b)
        pair = anded.parameters[0]
        assert pair.label == "(Colorful, Colorful)"
        for e in a.universe:
            assert anded.triple(pair, e) == meet.triple(colorful, e)

    def test_product_sizes_multiply(self):
        a = tiny(names=("p", "q"))
        b = tiny(names=("r", "s", "t"))
        assert len(and_op(a, b).parameters) == 6
        assert len(or_op(a, b).parameters) == 6

    def test_null_detection(self):
        assert is_null(load_soft_set(fixture("null_blouses.json")))
        assert not is_null(load_soft_set(fixture("attractiveness.json")))

    def test_subset_is_reflexive_and_antisymmetric_up_to_equality(self):
        s = load_soft_set(fixture("attractiveness.json"))
        assert is_subset(s, s)
        assert equals(s, s)

    def test_canonicalize_sorts_parameters_without_touching_values(self):
        s = load_soft_set(fixture("qualities_union.json"))
        canon = canonicalize(s)
        assert sorted(p.label for p in s.parameters) == [p.label for p in canon.parameters]
        for p in s.parameters:
            assert canon.value_set(p)[s.universe[0]] == s.value_set(p)[s.universe[0]]
        assert equals(s, canon)

    def test_equality_is_structural(self):
        rng = random.Random(7)
        s = random_soft_set(rng)
        same = SoftSet(s.universe, s.parameters, {p: dict(s.value_set(p)) for p in s.parameters})
        assert s == same
        assert not (s == "something else")
