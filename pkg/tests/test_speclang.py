import pytest
from hypothesis import given
from hypothesis import strategies as st

from paracr.rootsys import AlgebraType
from paracr.satake import bundled_catalog
from paracr.speclang import (
    SpecDocument,
    SpecError,
    dump_catalog,
    parse_catalog,
    parse_spec,
    print_spec,
)


def test_parse_classify_request():
    doc = parse_spec("algebra E6\npi1 {1,4,6}\nmode classify\n")
    assert doc.algebra == AlgebraType("E", 6)
    assert doc.pi1 == (1, 4, 6)
    assert doc.mode == "classify"
    assert doc.real_form is None and doc.satake is None


def test_parse_realform_with_split():
    doc = parse_spec(
        "algebra A3\nrealform su(2,2)\npi1 {1,2,3}\nsplit plus {1,3} minus {2}\n"
    )
    assert doc.real_form == "su(2,2)"
    assert doc.plus == (1, 3) and doc.minus == (2,)


def test_parse_index_out_of_range():
    with pytest.raises(SpecError) as err:
        parse_spec("algebra B2\npi1 {1,2,3}\n")
    assert "index 3 out of range" in str(err.value)
    assert err.value.line == 2


def test_parse_inline_satake():
    doc = parse_spec(
        "algebra A3\nsatake black {} arrows {(1,3)}\npi1 {1,3}\n"
    )
    assert doc.satake is not None
    assert doc.satake.arrows == frozenset({(1, 3)})


def test_parse_comments_and_blank_lines():
    doc = parse_spec(
        "# a request\n\nalgebra G2   # the exceptional one\n"
        "pi1 {1,2}\nmode enumerate\n"
    )
    assert doc.algebra == AlgebraType("G", 2)
    assert doc.mode == "enumerate"


@pytest.mark.parametrize("text,fragment,line", [
    ("pi1 {1,2}\n", "missing 'algebra'", 1),
    ("algebra H9\n", "", 1),
    ("algebra A3\nalgebra A4\n", "duplicate", 2),
    ("algebra A3\nfrobnicate {1}\n", "unknown statement", 2),
    ("algebra A3\nmode dance\n", "mode must be one of", 2),
    ("algebra A3\npi1 {1,2\n", "cannot parse", 2),
    ("algebra A3\nrealform x\nsatake black {} arrows {}\n", "mutually exclusive", 3),
    ("algebra A3\nsatake black {2} arrows {(1,2)}\n", "black", 2),
    ("algebra A3\nsatake black {2} arrows {}\npi1 {2,3}\n", "black vertex 2", 3),
    ("algebra A3\npi1 {1,3}\nsplit plus {1} minus {2}\n", "partition", 3),
    ("algebra A3\npi1 {1,3}\nsplit plus {1,3} minus {3}\n", "overlap", 3),
    ("algebra A3\nsplit plus {1} minus {3}\n", "requires a pi1", 2),
])
def test_parse_errors_with_location(text, fragment, line):
    with pytest.raises(SpecError) as err:
        parse_spec(text)
    assert fragment in str(err.value)
    assert err.value.line == line


def test_print_parse_identity_examples():
    for text in [
        "algebra E6\npi1 {1,4,6}\nmode classify\n",
        "algebra A3\nrealform su(2,2)\npi1 {1,2,3}\nsplit plus {1,3} minus {2}\nmode classify\n",
        "algebra A5\nsatake black {} arrows {(1,5),(2,4)}\npi1 {3}\nmode tables\n",
    ]:
        doc = parse_spec(text)
        assert parse_spec(print_spec(doc)) == doc


@st.composite
def documents(draw):
    family, lo = draw(st.sampled_from([("A", 1), ("B", 2), ("C", 3), ("D", 4)]))
    rank = draw(st.integers(lo, 8))
    algebra = AlgebraType(family, rank)
    vertices = st.integers(1, rank)
    pi1 = draw(st.one_of(st.none(), st.frozensets(vertices, min_size=1)))
    plus = minus = None
    if pi1 and len(pi1) >= 2 and draw(st.booleans()):
        chosen = sorted(pi1)
        cut = draw(st.integers(1, len(chosen) - 1))
        plus, minus = tuple(chosen[:cut]), tuple(chosen[cut:])
    mode = draw(st.sampled_from(["classify", "enumerate", "tables"]))
    return SpecDocument(
        algebra=algebra,
        pi1=tuple(sorted(pi1)) if pi1 is not None else None,
        plus=plus,
        minus=minus,
        mode=mode,
    )


@given(documents())
def test_print_parse_identity_property(doc):
    assert parse_spec(print_spec(doc)) == doc


def test_parse_catalog_roundtrip():
    diagrams = sorted(bundled_catalog().values(), key=lambda sd: sd.name)
    text = dump_catalog(diagrams)
    assert parse_catalog(text) == diagrams


def test_parse_catalog_rejects_incomplete_block():
    with pytest.raises(SpecError):
        parse_catalog("realform x\nalgebra A3\n")
    with pytest.raises(SpecError):
        parse_catalog("realform x\nalgebra A3\nsatake black {} arrows {}\nmode tables\n")
