import json

import jsonschema
import pytest


def validate(schema, name, doc):
    sub = {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]}
    jsonschema.validate(doc, sub)
    jsonschema.validate(doc, schema)


def test_schema_is_valid(schema):
    jsonschema.Draft202012Validator.check_schema(schema)


@pytest.mark.parametrize("name, code", [("t1", 0), ("t2", 1), ("balayan", 1), ("stump_e6", 0)])
def test_test_output(cli, root, schema, name, code):
    rc, out = cli("test", root / "fixtures" / f"{name}.json", "--json")
    doc = json.loads(out)
    validate(schema, "test_report", doc)
    assert rc == code == doc["exit_code"]


def test_oracle_output(cli, root, schema):
    rc, out = cli("test", root / "fixtures" / "symmetric4.json", "--json", "--oracle")
    doc = json.loads(out)
    validate(schema, "test_report", doc)
    assert doc["oracle"]["status"] == "witness"
    assert rc == 0


def test_parse_error_output(cli, tmp_path, schema):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    rc, out = cli("test", bad, "--json")
    validate(schema, "test_error", json.loads(out))
    assert rc == 2


def test_classify_output(cli, schema):
    rc, out = cli("classify-nilpotent", "--params", "1,2,3,4,2,1", "--json")
    validate(schema, "classify_report", json.loads(out))
    assert rc == 0


def test_construct_output(cli, tmp_path, schema):
    dest = tmp_path / "c.json"
    rc, out = cli("construct", "--sig", "2,2", "--seed", "7", "--json", "--out", dest)
    validate(schema, "construct_report", json.loads(out))
    assert rc == 0
    rc, out = cli("test", dest, "--json")
    assert rc == 1


def test_batch_output(cli, root, schema):
    rc, out = cli("batch", root / "fixtures", "--json")
    doc = json.loads(out)
    validate(schema, "batch_summary", doc)
    assert rc == 0
    assert doc["counts"]["conflicts"] == 0
