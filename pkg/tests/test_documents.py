"""The textual document format: parsing, serialization, validation."""

import pytest

from acgw import (
    AcgwError,
    Document,
    ParseError,
    parse,
    serialize,
    validate_document,
    validate_complex,
    validate_snake_strong,
    validate_snake_weak,
)

from conftest import CORPUS_NAMES, corpus_doc, corpus_text


# ---------------------------------------------------------------------------
# Corpus round trips.
# ---------------------------------------------------------------------------


def test_corpus_parses_and_validates(corpus_name):
    doc = corpus_doc(corpus_name)
    assert validate_document(doc) == []


def test_corpus_round_trip_document_identity(corpus_name):
    doc = parse(corpus_text(corpus_name))
    assert parse(serialize(doc)) == doc


def test_corpus_round_trip_text_fixpoint(corpus_name):
    canonical = serialize(parse(corpus_text(corpus_name)))
    assert serialize(parse(canonical)) == canonical


def test_corpus_covers_every_section_kind():
    kinds = set()
    for name in CORPUS_NAMES:
        doc = corpus_doc(name)
        if doc.complexes:
            kinds.add("complex")
        if doc.hors:
            kinds.add("hor")
        if doc.maps:
            kinds.add("map")
        if doc.seses:
            kinds.add("ses")
        if doc.snakes_weak:
            kinds.add("snake")
        if doc.kind == "linear":
            kinds.add("linear")
    assert kinds == {"complex", "hor", "map", "ses", "snake", "linear"}


# ---------------------------------------------------------------------------
# Parsing: small hand-written documents.
# ---------------------------------------------------------------------------


def test_parse_minimal_set_document():
    doc = parse("instance set\ncomplex X:\n  object 0: b a\n")
    assert doc.kind == "set"
    X = doc.complex_named("X")
    assert X.obj(0) == ("a", "b")
    assert validate_complex(X) == []


def test_parse_empty_object_line():
    doc = parse("instance set\ncomplex X:\n  object 0:\n")
    assert doc.complex_named("X").obj(0) == ()


def test_parse_transition_with_explicit_legs():
    text = (
        "instance set\n"
        "complex X:\n"
        "  object 0: p\n"
        "  object 1: q\n"
        "  transition 1: t\n"
        "    up: t->q\n"
        "    down: t->p\n"
    )
    X = parse(text).complex_named("X")
    assert X.transition(1).obj == ("t",)
    assert X.transition(1).into_upper.data == (("t", "q"),)
    assert X.transition(1).into_lower.data == (("t", "p"),)
    assert validate_complex(X) == []


def test_parse_identity_legs_by_default():
    text = (
        "instance set\n"
        "complex X:\n"
        "  object 0: p\n"
        "  object 1: p\n"
        "  transition 1: p\n"
    )
    X = parse(text).complex_named("X")
    assert X.transition(1).into_upper.data == (("p", "p"),)
    assert X.transition(1).into_lower.data == (("p", "p"),)


def test_parse_linear_document_defaults():
    text = (
        "instance linear\n"
        "prime 3\n"
        "complex X:\n"
        "  object 0: dim 2\n"
        "  object 1: dim 2\n"
        "  transition 1: dim 0\n"
    )
    doc = parse(text)
    assert doc.prime == 3
    X = doc.complex_named("X")
    assert X.obj(0).dim == 2 and X.transition(1).obj.dim == 0
    assert validate_complex(X) == []


def test_parse_map_and_derived_bars():
    doc = corpus_doc("span_legs")
    m = doc.map_named("F")
    # Bar levels are derived, not written in the file, yet must validate.
    from acgw import validate_chain_map

    assert validate_chain_map(m) == []
    assert "bar" not in corpus_text("span_legs")


def test_named_lookup_errors():
    doc = corpus_doc("inclusion_pair")
    with pytest.raises(AcgwError):
        doc.complex_named("nope")
    with pytest.raises(AcgwError):
        doc.hor_named("nope")
    with pytest.raises(AcgwError):
        doc.ses_named("nope")


def test_snake_sections_build_and_validate():
    weak = corpus_doc("snake_weak_small").snake_weak_named("S")
    assert validate_snake_weak(weak) == []


# ---------------------------------------------------------------------------
# Parse errors carry line numbers.
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("instance frobnicate\n", 1, "unknown instance"),
        ("complex X:\n  object 0: a\n", 1, "instance line"),
        ("instance set\ncomplex X:\n  object 0: a\n  frob: 1\n", 4, "unexpected"),
        ("instance set\nhor f: A -> B\n", 2, "unknown complex"),
        ("instance set\ncomplex X:\n  object 0: a\ncomplex X:\n  object 0: b\n", 4, "duplicate"),
        ("instance set\ncomplex X:\n  object 0: a{b\n", 3, "bad id"),
        ("instance set\nprime 2\n", 2, "prime"),
        ("instance set\ncomplex X:\n", 2, "no objects"),
        (
            "instance linear\nprime 2\ncomplex X:\n  object 0: dim 1\n"
            "  object 1: dim 1\n  transition 1: dim 1\n    up: [[oops]]\n",
            7,
            "bad matrix",
        ),
    ],
)
def test_parse_error_lines(text, line, fragment):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.line == line
    assert fragment in str(err.value)


def test_parse_fills_degree_gaps_with_empty_objects():
    text = "instance set\ncomplex X:\n  object 0: a\n  object 2: b\n"
    X = parse(text).complex_named("X")
    assert [X.obj(i) for i in X.degrees()] == [("a",), (), ("b",)]
    assert validate_complex(X) == []
    # Canonical form spells the filled degree out.
    assert "object 1:" in serialize(parse(text))


# ---------------------------------------------------------------------------
# Serialization specifics.
# ---------------------------------------------------------------------------


def test_serialize_omits_identity_legs_and_empty_levels():
    text = serialize(corpus_doc("inclusion_pair"))
    assert "up:" not in text  # identity legs stay implicit for sets
    assert "level 1:" not in text  # empty levels stay implicit
    assert "level 2: a->a" in text


def test_serialize_linear_always_writes_matrices():
    text = serialize(corpus_doc("linear_small"))
    assert "up: [[1, 0]]" in text
    assert "down: [[0], [1]]" in text


def test_serialize_orders_sections():
    text = serialize(corpus_doc("inclusion_pair"))
    assert text.index("complex X:") < text.index("complex Y:")
    assert text.index("complex Y:") < text.index("hor f:")
    assert text.index("hor f:") < text.index("ses S:")


def test_document_equality_is_structural():
    a = parse(corpus_text("inclusion_pair"))
    b = parse(corpus_text("inclusion_pair"))
    assert a == b and a is not b
