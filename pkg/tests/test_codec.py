import json

import pytest

from jordan_atlas import codec
from jordan_atlas import matrices as mx
from jordan_atlas.errors import ParseError
from jordan_atlas.scalar import I, gaussian


@pytest.mark.parametrize("text, value", [
    ("3", gaussian(3)),
    ("-1/2", gaussian((-1, 2))),
    ("i", I),
    ("-i", -I),
    ("-1/2*i", gaussian(0, (-1, 2))),
    ("1/2+3/4*i", gaussian((1, 2), (3, 4))),
    ("2 - i", gaussian(2, -1)),
    (7, gaussian(7)),
])
def test_parse_scalar(text, value):
    assert codec.parse_scalar(text) == value


@pytest.mark.parametrize("text", ["0.5", "1/0", "abc", "", "2+", "1e3"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        codec.parse_scalar(text)


def test_floats_are_rejected():
    with pytest.raises(ParseError):
        codec.parse_scalar(0.5)


@pytest.mark.parametrize("value, text", [
    (gaussian(3), "3"),
    (gaussian((-1, 2)), "-1/2"),
    (I, "i"),
    (gaussian(0, (-1, 2)), "-1/2*i"),
    (gaussian((1, 2), (-3, 4)), "1/2-3/4*i"),
])
def test_format_scalar(value, text):
    assert codec.format_scalar(value) == text


def test_matrix_json():
    a = mx.matrix([[1, I], [gaussian((1, 2)), 0]])
    assert codec.matrix_to_json(a) == [["1", "i"], ["1/2", "0"]]
    assert codec.matrix_from_json([["1", "i"], ["1/2", "0"]]) == a


def test_ragged_matrix():
    with pytest.raises(ParseError):
        codec.matrix_from_json([["1", "0"], ["1"]])


def test_load_document_inline_and_file(tmp_path):
    document = {"ambient": {"kind": "full", "n": 3}}
    assert codec.load_document(json.dumps(document)) == document
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(document))
    assert codec.load_document(str(path)) == document


def test_load_document_invalid():
    with pytest.raises(ParseError):
        codec.load_document("{not json")


def test_dumps_sorts_keys():
    text = codec.dumps({"spec": 1, "basis": [], "ambient": {"n": 3, "kind": "full"}})
    assert text.index('"ambient"') < text.index('"basis"') < text.index('"spec"')
    assert text.index('"kind"') < text.index('"n"')
