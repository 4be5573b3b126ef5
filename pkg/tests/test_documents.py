import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie.algebra import HomLieAlgebra
from homlie.corpus import ALGEBRAS, all_documents
from homlie.documents import KINDS, Document, expect_kind, load, parse, serialize
from homlie.errors import InputError
from homlie.multilinear import Multivector
from homlie.scalar import Matrix
from golden_cases import doc_path
from strategies import invertible_matrices, raw_algebras

CORPUS = all_documents()


def test_corpus_covers_every_kind():
    assert {key.split("/")[0] for key in CORPUS} == set(KINDS)


@pytest.mark.parametrize("key", sorted(CORPUS))
def test_golden_document_round_trip(key):
    text = doc_path(key).read_text(encoding="utf-8")
    doc = parse(text)
    assert serialize(doc.value) == text
    assert serialize(CORPUS[key]) == text


def test_minimal_algebra():
    doc = parse('{"kind":"hom_lie_algebra","dim":1,"bracket":[],"phi":[["1"]]}')
    assert doc == Document("hom_lie_algebra", HomLieAlgebra.abelian(1))


def test_aff1_document_constants():
    doc = parse(
        '{"kind":"hom_lie_algebra","dim":2,"bracket":[{"i":1,"j":2,"coeffs":["0","1"]}],'
        '"phi":[["1","0"],["0","1"]]}'
    )
    assert doc.value == ALGEBRAS["aff1"]()


def test_rationals_are_reduced_on_output():
    doc = parse('{"kind":"linear_map","rows":1,"cols":1,"matrix":[["2/4"]]}')
    assert json.loads(serialize(doc.value))["matrix"] == [["1/2"]]


BAD = [
    ('{"kind":"hom_lie_algebra","dim":2,"bracket":[{"i":1,"j":1,"coeffs":["0","1"]}],"phi":[["1","0"],["0","1"]]}',
     "$.bracket[0]"),
    ('{"kind":"hom_lie_algebra","dim":1,"bracket":[],"phi":[[1]]}', "$.phi[0][0]"),
    ('{"kind":"hom_lie_algebra","dim":1,"bracket":[],"phi":[["1"]],"extra":0}', "unknown field"),
    ('{"kind":"nonsense"}', "$.kind"),
    ('{"dim":1}', "kind"),
    ('{"kind":"hom_lie_algebra","dim":2,"bracket":[{"i":1,"j":3,"coeffs":["0","1"]}],"phi":[["1","0"],["0","1"]]}',
     "$.bracket[0].j"),
    ('{"kind":"linear_map","rows":1,"cols":2,"matrix":[["1"]]}', "$.matrix[0]"),
    ('{"kind":"linear_map","rows":1,"cols":1,"matrix":[["1/0"]]}', "$.matrix[0][0]"),
    ('{\n  "kind": "linear_map",\n  "rows": 1,\n}', "line 4"),
]


@pytest.mark.parametrize("text,where", BAD)
def test_input_errors_are_located(text, where):
    with pytest.raises(InputError) as err:
        parse(text)
    assert where in str(err.value)


def test_load_missing_file(tmp_path):
    with pytest.raises(InputError, match="cannot read"):
        load(tmp_path / "absent.json")


def test_expect_kind():
    doc = parse('{"kind":"linear_map","rows":1,"cols":1,"matrix":[["1"]]}')
    assert expect_kind(doc, "linear_map") == Matrix.identity(1)
    with pytest.raises(InputError):
        expect_kind(doc, "hom_lie_algebra")


@given(st.integers(1, 3).flatmap(raw_algebras))
def test_algebra_round_trip_random(g):
    text = serialize(g)
    assert parse(text).value == g
    assert serialize(parse(text).value) == text


@given(invertible_matrices(3))
def test_linear_map_round_trip_random(M):
    assert parse(serialize(M)).value == M


def test_bivector_round_trip():
    r = Multivector(4, 2, {(0, 1): 1, (2, 3): "-3/2"})
    assert parse(serialize(r)).value == r
