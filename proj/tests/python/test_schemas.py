import json
import os
import subprocess

import jsonschema
import pytest

import schur

CASES = [
    ("multiplier", ["multiplier", "mc:8,0,3"]),
    ("multiplier", ["multiplier", "fab:[2,4]"]),
    ("h2", ["h2", "mc:4,2,3"]),
    ("repgroup", ["repgroup", "fab:[2,2]", "--verify"]),
    ("repgroup", ["repgroup", "mc:8,0,3", "--verify", "--samples", "500"]),
    ("repgroup", ["repgroup", "mc:0,5,2"]),
    ("cocycle", ["cocycle", "fab:[2,2]", "--class", "1"]),
    ("cocycle", ["cocycle", "mc:12,0,5", "--lambda", "1", "--samples", "500"]),
    ("cocycle", ["cocycle", "heis:[1];4", "--lambda", "1", "--mu", "2", "--samples", "500"]),
    ("irr", ["irr", "mc:4,2,3", "--class", "1"]),
    ("induce", ["induce", "fab:[2,2]", "--subgroup", "1", "--class", "1"]),
    ("lift", ["lift", "dic:2", "--subgroup", "1"]),
    ("alpha-finite", ["alpha-finite", "--metacyclic", "5,0,2"]),
    ("alpha-finite", ["alpha-finite", "--metacyclic", "0,5,2"]),
    ("alpha-finite", ["alpha-finite", "--heisenberg", "4", "--lambda", "1", "--mu", "1", "--samples", "500"]),
    ("alpha-finite", ["alpha-finite", "--shift-demo", "--samples", "200"]),
    ("shift-demo", ["shift-demo", "--samples", "200", "--lambda-root", "7,3"]),
    ("shift-demo", ["--timing", "shift-demo", "--window", "1", "--samples", "10"]),
    ("selftest", ["selftest", "--corpus-order", "6"]),
]

ERROR_CASES = [
    ["multiplier", "mc:8,0,2"],
    ["h2", "mc:8,,3"],
    ["h2", "fab:[2,2,2,2,2]"],
    ["alpha-finite"],
    ["induce", "fab:[2,2]", "--subgroup", "1", "--class", "1", "--psi", "9"],
]


def load(schema_dir, name):
    with open(os.path.join(schema_dir, name + ".schema.json")) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    return schema


@pytest.mark.parametrize("name,args", CASES, ids=[" ".join(a) for _, a in CASES])
def test_output_validates(schema_dir, name, args):
    code, doc = schur.cli(*args)
    assert code == 0, doc
    jsonschema.validate(doc, load(schema_dir, name))
    assert doc["subcommand"] == name


@pytest.mark.parametrize("args", ERROR_CASES, ids=[" ".join(a) for a in ERROR_CASES])
def test_errors_validate(schema_dir, args):
    code, doc = schur.cli(*args)
    assert code in (2, 3)
    jsonschema.validate(doc, load(schema_dir, "error"))


def test_verification_subcommands_have_checks():
    for args in (["h2", "fab:[3]"], ["irr", "fab:[3]"], ["shift-demo", "--samples", "50"]):
        assert schur.cli(*args)[1]["checks"]


def test_every_schema_is_valid(schema_dir):
    for fname in os.listdir(schema_dir):
        with open(os.path.join(schema_dir, fname)) as f:
            jsonschema.Draft202012Validator.check_schema(json.load(f))


def test_executable_is_byte_identical(cli_binary):
    args = [cli_binary, "--seed", "5", "lift", "fab:[2,2]", "--class", "1"]
    first = subprocess.run(args, capture_output=True, check=True).stdout
    second = subprocess.run(args, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["seed"] == 5
