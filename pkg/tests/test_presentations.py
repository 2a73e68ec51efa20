import json

import pytest

from quiverknot import (
    GeneratorIndexError,
    PresentationError,
    PresentationParseError,
    QuandlePresentation,
    UnknownGeneratorError,
    is_torus_presentation,
    parse_presentation,
    serialize_presentation,
    torus_p2_presentation,
)


def test_torus_trefoil_relations():
    pres = torus_p2_presentation(3)
    assert set(pres.relations) == {(2, 1, 3), (1, 3, 2), (3, 2, 1)}


def test_torus_hopf_link_relations():
    pres = torus_p2_presentation(2)
    assert set(pres.relations) == {(2, 1, 2), (1, 2, 1)}


def test_torus_p5_relations():
    pres = torus_p2_presentation(5)
    assert set(pres.relations) == {(2, 1, 5), (1, 5, 4), (3, 2, 1), (4, 3, 2), (5, 4, 3)}
    assert len(pres.relations) == 5


@pytest.mark.parametrize("p", range(2, 13))
def test_torus_counts_and_index_ranges(p):
    pres = torus_p2_presentation(p)
    assert pres.generator_count == p
    assert len(pres.generator_names) == p
    assert len(pres.relations) == p
    assert all(1 <= idx <= p for rel in pres.relations for idx in rel)


def test_torus_p_too_small():
    with pytest.raises(ValueError):
        torus_p2_presentation(1)


def test_parse_named_generators():
    text = json.dumps(
        {"generators": ["a", "b"], "relations": [["b", "a", "b"], ["a", "b", "a"]]}
    )
    pres = parse_presentation(text)
    assert pres.generator_names == ("a", "b")
    assert set(pres.relations) == set(torus_p2_presentation(2).relations)
    assert is_torus_presentation(pres)


def test_parse_unknown_generator():
    text = json.dumps({"generators": ["a", "b"], "relations": [["a", "b", "c"]]})
    with pytest.raises(UnknownGeneratorError):
        parse_presentation(text)


def test_parse_bad_json_reports_position():
    with pytest.raises(PresentationParseError) as exc:
        parse_presentation("{\"generators\": [\n!")
    assert "line" in str(exc.value)


def test_parse_integer_indices():
    text = json.dumps({"generators": ["a", "b"], "relations": [[2, 1, 2], [1, 2, 1]]})
    pres = parse_presentation(text)
    assert set(pres.relations) == {(2, 1, 2), (1, 2, 1)}


def test_parse_index_out_of_range():
    text = json.dumps({"generators": ["a", "b"], "relations": [[1, 2, 3]]})
    with pytest.raises(GeneratorIndexError):
        parse_presentation(text)


def test_parse_shape_errors():
    with pytest.raises(PresentationParseError):
        parse_presentation("[]")
    with pytest.raises(PresentationParseError):
        parse_presentation(json.dumps({"generators": ["a"]}))
    with pytest.raises(PresentationParseError):
        parse_presentation(json.dumps({"generators": ["a"], "relations": [["a", "a"]]}))
    with pytest.raises(PresentationParseError):
        parse_presentation(json.dumps({"generators": ["a", "a"], "relations": []}))


def test_duplicate_relation_rejected():
    with pytest.raises(PresentationError):
        QuandlePresentation(2, ("a", "b"), ((1, 2, 1), (1, 2, 1)))


def test_constructor_validates_indices_and_names():
    with pytest.raises(GeneratorIndexError):
        QuandlePresentation(2, ("a", "b"), ((1, 2, 3),))
    with pytest.raises(PresentationError):
        QuandlePresentation(2, ("a", "a"), ())


@pytest.mark.parametrize("p", range(2, 7))
def test_serialize_parse_round_trip(p):
    pres = torus_p2_presentation(p)
    assert parse_presentation(serialize_presentation(pres)) == pres


def test_round_trip_preserves_custom_names():
    pres = QuandlePresentation(3, ("left", "mid", "right"), ((1, 2, 3), (3, 2, 1)))
    assert parse_presentation(serialize_presentation(pres)) == pres


def test_is_torus_presentation_rejects_other_shapes():
    assert not is_torus_presentation(QuandlePresentation(1, ("a",), ()))
    pres = QuandlePresentation(3, ("a", "b", "c"), ((1, 2, 3),))
    assert not is_torus_presentation(pres)
    assert is_torus_presentation(torus_p2_presentation(7))
