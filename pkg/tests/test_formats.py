import json

import pytest

from wajsberg import chain, product, product_of, transport, Bijection
from wajsberg.formats import (
    FORMATS,
    TableDocument,
    TableParseError,
    guess_format,
    load_table,
    parse,
    read_document,
    render,
)
from wajsberg.regression import RECONSTRUCTIONS, fixture_dir, load_fixture

TABLES = [
    chain(1),
    chain(4),
    chain(9),
    chain(11),
    product(chain(2), chain(3)),
    product_of(chain(2), chain(2), chain(2)),
    transport(product(chain(2), chain(3)), Bijection((0, 3, 1, 4, 2, 5))),
]


@pytest.mark.parametrize("fmt", FORMATS)
@pytest.mark.parametrize("W", TABLES, ids=lambda W: f"n{W.n}")
def test_round_trip(fmt, W):
    text = render(W, fmt)
    back = parse(text, fmt).to_table()
    assert back == W and back.labels == W.labels and back.unit == W.unit
    assert render(back, fmt) == text


def test_text_layout_matches_printed_chain():
    text = render(chain(4), "text")
    assert text.splitlines()[3:] == [
        "O | E E E E",
        "A | B E E E",
        "B | A B E E",
        "E | O A B E",
    ]


def test_json_schema_fields():
    data = json.loads(render(chain(3), "json"))
    assert data == {
        "schema": 1,
        "n": 3,
        "labels": ["O", "A", "E"],
        "unit": "E",
        "op": [["E", "E", "E"], ["A", "E", "E"], ["O", "A", "E"]],
    }


def test_csv_layout():
    assert render(chain(2), "csv") == "#unit=E\nO,E\nE,E\nO,E\n"


def test_note_survives_round_trip():
    doc = TableDocument.from_table(chain(3), note="a note")
    for fmt in ("text", "json"):
        assert parse(render(doc, fmt), fmt).note == "a note"


def test_fixtures_parse():
    for name in RECONSTRUCTIONS:
        doc = load_fixture(name)
        assert doc.unit == "E" and doc.n == len(doc.labels)


def test_json_parse_error_has_line():
    with pytest.raises(TableParseError) as exc:
        parse('{\n  "schema": 1,\n  "n": 2,\n', "json", "broken.json")
    assert exc.value.line is not None
    assert str(exc.value).startswith("broken.json:")


@pytest.mark.parametrize(
    "text, fmt, match",
    [
        ('{"schema": 2, "n": 1, "labels": ["E"], "unit": "E", "op": [["E"]]}', "json", "schema"),
        ('{"schema": 1, "n": 2, "labels": ["E"], "unit": "E", "op": [["E"]]}', "json", "labels given"),
        ('{"schema": 1, "n": 1, "labels": ["E"], "unit": "X", "op": [["E"]]}', "json", "not a label"),
        ('{"schema": 1, "n": 1, "labels": ["E"], "op": [["E"]]}', "json", "missing"),
        ('{"schema": 1, "n": 2, "labels": ["O", "O"], "unit": "O", "op": [["O","O"],["O","O"]]}', "json", "unique"),
        ("[1, 2]", "json", "object"),
        ("x | O E\n--+---\nO | E\n", "text", "entries"),
        ("x | O E\n--+---\nO | E E\nE | O Q\n", "text", "unknown label"),
        ("x | O E\n--+---\nE | O E\nO | E E\n", "text", "same order"),
        ("nothing here\n", "text", "label | entries"),
        ("O,E\nE,E\nO,E\n", "csv", "#unit"),
        ("#unit=E\nO,E\nE\n", "csv", "entries"),
        ("", "csv", "empty"),
    ],
)
def test_parse_errors(text, fmt, match):
    with pytest.raises(TableParseError, match=match):
        parse(text, fmt)


def test_unknown_format():
    with pytest.raises(ValueError):
        render(chain(2), "xml")
    with pytest.raises(ValueError):
        parse("", "xml")


def test_files(tmp_path):
    assert guess_format("a.json") == "json" and guess_format("a.CSV") == "csv" and guess_format("a.txt") == "text"
    W = product(chain(2), chain(2))
    for fmt, suffix in (("text", "txt"), ("json", "json"), ("csv", "csv")):
        path = tmp_path / f"t.{suffix}"
        path.write_text(render(W, fmt), encoding="utf-8")
        assert load_table(path) == W
    with pytest.raises(TableParseError):
        read_document(tmp_path / "missing.json")


def test_fixture_dir_exists():
    assert (fixture_dir() / "expected_mismatches.json").exists()
