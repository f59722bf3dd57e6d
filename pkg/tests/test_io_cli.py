import json

import pytest

from steinerlab import (
    ParseError,
    ValidationError,
    cube,
    emit,
    oriental,
    parse,
    shape_library,
)
from steinerlab.cli import main
from steinerlab.retract import s2


def test_round_trip_complexes():
    for label, c in shape_library().items():
        text = emit(c)
        again = parse(text)
        assert again == c, label
        assert emit(again) == text, label


def test_round_trip_map():
    text = emit(s2())
    again = parse(text)
    assert again == s2()
    assert emit(again) == text


def test_emit_is_deterministic():
    assert emit(cube(3)) == emit(cube(3))


def test_oriental_document_has_face_terms():
    doc = json.loads(emit(oriental(2)))
    entries = {e["generator"]: e["terms"] for e in doc["differential"]}
    terms = {t["generator"]: t["coeff"] for t in entries["0.1.2"]}
    assert terms == {"1.2": "1", "0.2": "-1", "0.1": "1"}


def test_parse_rejects_invalid_json():
    with pytest.raises(ParseError):
        parse("{not json")


def test_parse_rejects_broken_complex():
    doc = json.loads(emit(oriental(1)))
    # corrupt the edge differential so the augmentation check fails
    doc["differential"][0]["terms"] = [
        {"generator": "0", "coeff": "1"},
        {"generator": "1", "coeff": "1"},
    ]
    with pytest.raises(ValidationError) as err:
        parse(json.dumps(doc))
    assert not err.value.report.passed


def test_parse_rejects_unknown_generator():
    doc = json.loads(emit(oriental(1)))
    doc["differential"][0]["terms"] = [{"generator": "nope", "coeff": "1"}]
    with pytest.raises(ParseError):
        parse(json.dumps(doc))


def test_parse_rejects_broken_d2():
    from steinerlab.acceptance import fixture_broken_d2

    with pytest.raises(ValidationError) as err:
        parse(emit(fixture_broken_d2()))
    assert any(i.name == "D2_ZERO" for i in err.value.report.failures())


def test_big_coefficients_survive():
    from steinerlab import BasedComplex, Chain

    big = 10**40
    c = BasedComplex(
        {0: [("x",), ("y",)], 1: [("e",)]},
        {("e",): Chain(0, {("x",): big, ("y",): -big})},
        {("x",): 1, ("y",): 1},
    )
    assert parse(emit(c)) == c


# -- CLI ---------------------------------------------------------------------


def test_cli_gen_info_round_trip(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["gen", "cube", "3", "--out", str(out)]) == 0
    assert main(["info", str(out)]) == 0
    text = capsys.readouterr().out
    assert "{0: 8, 1: 12, 2: 6, 3: 1}" in text


def test_cli_op_pipeline(tmp_path, capsys):
    a = tmp_path / "a.json"
    assert main(["gen", "oriental", "1", "--out", str(a)]) == 0
    assert main(["op", "join", str(a), "unit"]) == 0
    document = capsys.readouterr().out
    value = parse(document)
    from steinerlab import graded_counts

    assert graded_counts(value) == {0: 3, 1: 3, 2: 1}


def test_cli_verify_retract(capsys):
    assert main(["verify-retract", "xi", "3"]) == 0
    out = capsys.readouterr().out
    assert "PASSED" in out
    assert main(["verify-retract", "zeta", "2", "1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True


def test_cli_check_steiner_failure(tmp_path, capsys):
    from steinerlab.acceptance import fixture_loop

    bad = tmp_path / "loop.json"
    bad.write_text(emit(fixture_loop()))
    code = main(["check", "steiner", str(bad)])
    out = capsys.readouterr().out
    assert code == 1
    assert "STRONGLY_LOOPFREE" in out and "<=" in out


def test_cli_check_decompositions(capsys):
    assert main(["check", "boundary-decomp", "oriental", "3"]) == 0
    assert main(["check", "top-cell", "cube", "2"]) == 0
    capsys.readouterr()


def test_cli_check_identities(capsys):
    assert main(["check", "identities", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True


def test_cli_gen_wedge(capsys):
    assert main(["gen", "wedge", "interval", "1", "interval", "0"]) == 0
    from steinerlab import graded_counts

    value = parse(capsys.readouterr().out)
    assert graded_counts(value) == {0: 3, 1: 2}


def test_cli_usage_errors(capsys):
    assert main(["gen", "disk"]) == 2
    assert main(["op", "nonsense", "unit"]) == 2
    assert main(["check", "boundary-decomp", "pyramid", "3"]) == 2
    assert main(["info", "/does/not/exist.json"]) == 2
    capsys.readouterr()


def test_cli_atoms(capsys):
    assert main(["atoms", "oriental:2", "--gen", "0.1.2"]) == 0
    out = capsys.readouterr().out
    assert "minus[1] = 0.2" in out
    assert "plus[1] = 0.1 + 1.2" in out


def test_cli_gen_deterministic(capsys):
    assert main(["gen", "oriental", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "oriental", "3"]) == 0
    second = capsys.readouterr().out
    assert first == second
