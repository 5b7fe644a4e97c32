import pytest

import tmlab


def test_bundled():
    assert set(tmlab.bundled_ids()) == {"addition", "neary4x6", "pedagogical-utm", "rna-utm"}
    u = tmlab.load_machine("pedagogical-utm")
    assert u.alphabet == "_01LRXYUWShdeFZT"
    assert tmlab.stats(u)["entries"] == 1392


def test_run_addition():
    add = tmlab.load_machine("addition")
    r = tmlab.run(add, "*|||*||*")
    assert r["steps"] == 106
    assert r["reason"] == "EXPLICIT"
    assert r["tape"] == "*|||*||*|||||*"


def test_trace():
    add = tmlab.load_machine("addition")
    lines = tmlab.trace(add, "*|||*||*")
    assert len(lines) == 107
    assert lines[0] == "step=0 state=1 head=0 win=0 tape=*|||*||*"
    assert tmlab.trace(add, "*|||*||*", every=1000)[-1].startswith("step=106 ")


def test_encode_decode():
    add = tmlab.load_machine("addition")
    full = tmlab.encode(add, "*|||*||*")
    assert full.endswith("SW01hhU11hhU11hhU11hhU01hhU11hhU11hhU01hh_")
    d = tmlab.decode_config(full)
    assert d["clean"] and d["state"] == 1 and d["scanned"] == 0
    assert "".join(add.alphabet[r - 1] for r in d["ranks"]) == "*|||*||*"
    assert tmlab.decode_config("nothing") is None


def test_rna():
    assert tmlab.rna_encode("SW01hh") == "UUUGCACUGAGA"
    assert tmlab.rna_decode("UUUGCACUGAGA") == "SW01hh"
    with pytest.raises(ValueError):
        tmlab.rna_decode("ACG")


def test_parse_roundtrip():
    src = "name: t\nalphabet: _ a\nstates: 1\n\nstate 1:\n  _ -> a R\n  a -> !\n"
    m = tmlab.parse_table(src)
    assert m.to_text() == src
    with pytest.raises(tmlab.ParseError):
        tmlab.parse_table("name: t\nalphabet: _ a\nstates: 1\nstate 1:\n  q -> R\n")


def test_experiment_and_verify():
    e1 = tmlab.experiment("E1")
    assert e1["steps"] == e1["expected_steps"] == 106
    assert e1["region"] == e1["expected_region"]
    (a5,) = tmlab.verify("A5")
    assert a5["id"] == "A5" and a5["passed"]
