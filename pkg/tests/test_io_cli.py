"""Instance files, reports, and the command-line front end."""

from __future__ import annotations

import json

import pytest

from ldlab.cli import main, write_corpus
from ldlab.report import CheckReport, canonical_json
from ldlab.schema import (SchemaError, instance_digest, load_instance,
                          realize, save_instance, validate_instance)

L3 = {"schema_version": 1, "generator": "lukasiewicz", "params": {"n": 3}}
GH22 = {"schema_version": 1, "generator": "group_hopf",
        "params": {"p": 2, "m": 2, "dmax": 2}}


def write(tmp_path, name, data):
    path = tmp_path / name
    save_instance(data, str(path))
    return str(path)


def test_schema_accepts_generator_instances():
    validate_instance(L3)
    validate_instance(GH22)


def test_schema_rejects_unknown_field():
    with pytest.raises(SchemaError):
        validate_instance(dict(L3, bogus=1))


def test_schema_rejects_missing_body():
    with pytest.raises(SchemaError):
        validate_instance({"schema_version": 1})


def test_digest_is_stable_and_order_insensitive():
    d1 = instance_digest({"a": 1, "b": 2})
    d2 = instance_digest({"b": 2, "a": 1})
    assert d1 == d2
    assert len(d1) == 64


def test_realize_round_trip(tmp_path):
    path = write(tmp_path, "l3.json", L3)
    inst = realize(load_instance(path))
    assert inst.backend.n == 3


def test_report_json_is_canonical():
    rep = CheckReport()
    assert rep.to_json() == rep.to_json()
    assert "\n" not in rep.to_json()


def test_cli_validate_passes(tmp_path, capsys):
    path = write(tmp_path, "l3.json", L3)
    assert main(["validate", path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["overall"] is True


def test_cli_validate_mutated_chain_fails_monoidal(tmp_path, capsys):
    data = dict(L3, mutations=[{"kind": "star-table-entry", "at": [1, 2],
                                "value": 2}])
    path = write(tmp_path, "bad.json", data)
    assert main(["validate", path]) == 1
    out = json.loads(capsys.readouterr().out)
    failing = [r["axiom"] for r in out["results"] if not r["passed"]]
    assert "mon-⋆" in failing


def test_cli_validate_unknown_field_is_schema_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(dict(L3, bogus=1)))
    assert main(["validate", str(path)]) == 2


def test_cli_validate_unparseable_file_is_schema_error(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    assert main(["validate", str(path)]) == 2


def test_cli_missing_structure_exit(tmp_path):
    path = write(tmp_path, "l3.json", L3)
    assert main(["coincide", path]) == 3
    assert main(["validate", path, "--axioms", "nu"]) == 3


def test_cli_axiom_filter(tmp_path, capsys):
    path = write(tmp_path, "l3.json", L3)
    assert main(["validate", path, "--axioms", "tri"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert {r["axiom"] for r in out["results"]} == {"tri-1", "tri-2",
                                                    "tri-3", "tri-4"}


def test_cli_unknown_axiom_is_input_error(tmp_path):
    path = write(tmp_path, "l3.json", L3)
    assert main(["validate", path, "--axioms", "nosuch"]) == 2


def test_cli_generate_and_mutate(tmp_path, capsys):
    out = str(tmp_path / "l3.json")
    assert main(["generate", "lukasiewicz", "--params", "n=3",
                 "--out", out]) == 0
    mut = str(tmp_path / "l3-bad.json")
    assert main(["mutate", out, "--descriptor",
                 '{"kind": "star-table-entry", "at": [1, 2], "value": 2}',
                 "--out", mut]) == 0
    assert main(["validate", mut, "--axioms", "kernel"]) == 1


def test_cli_lift_output_revalidates(tmp_path):
    src = write(tmp_path, "gh22.json", GH22)
    out = str(tmp_path / "em.json")
    assert main(["lift", src, "--scope", "1,2", "--seed-dims", "1",
                 "--out", out]) == 0
    assert main(["validate", out, "--out", str(tmp_path / "r.json")]) == 0


def test_cli_coincide_and_compact(tmp_path):
    src = write(tmp_path, "gh22.json", GH22)
    assert main(["coincide", src, "--scope", "1,2",
                 "--out", str(tmp_path / "c.json")]) == 0
    assert main(["compact", src, "--scope", "1,2",
                 "--out", str(tmp_path / "h.json")]) == 0
    table = json.loads((tmp_path / "h.json").read_text())
    assert table["correspondence"] == {"Le": "BV-23", "Ln": "BV-22",
                                       "Le′": "BV-21", "Ln′": "BV-20"}


def test_cli_search_counts_are_nested(tmp_path, capsys):
    path = write(tmp_path, "l3.json", L3)
    assert main(["search", path]) == 0
    out = json.loads(capsys.readouterr().out)
    c = out["counts"]
    assert c["comonad"] == 4
    assert (c["comonad"] >= c["monoidal"] >= c["L1-L2"]
            >= c["liftable"] >= c["star-comonad"])


def test_cli_reports_are_byte_identical(tmp_path):
    path = write(tmp_path, "l3.json", L3)
    r1, r2 = str(tmp_path / "r1.json"), str(tmp_path / "r2.json")
    assert main(["validate", path, "--out", r1]) == 0
    assert main(["validate", path, "--out", r2]) == 0
    assert open(r1, "rb").read() == open(r2, "rb").read()


def test_corpus_round_trips(tmp_path):
    corpus = tmp_path / "corpus"
    write_corpus(str(corpus))
    manifest = json.loads((corpus / "manifest.json").read_text())
    assert len(manifest) >= 10
    for meta in manifest.values():
        data = load_instance(str(corpus / meta["file"]))
        assert instance_digest(data) == meta["digest"]
        realize(data)


def test_env_bound_maps_to_structure_exit(tmp_path, monkeypatch):
    src = write(tmp_path, "gh22.json", GH22)
    monkeypatch.setenv("LDLAB_MAX_ENUM", "3")
    assert main(["lift", src, "--scope", "1,2", "--seed-dims", "2"]) == 3
