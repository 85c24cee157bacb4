import io
import json
import os
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mahlerkit.algebra import TruncatedSeries
from mahlerkit.cli import COMMANDS, OUTPUT_SCHEMAS, run
from mahlerkit.regular import thue_morse_prefix
from mahlerkit.serialize import (
    SERIES_SCHEMA,
    dumps_series,
    loads_series,
    read_series,
    write_series,
)

import corpus
import oracles

GOLDEN = Path(__file__).parent / "golden"
TM = corpus.THUE_MORSE
GEO = corpus.GEOMETRIC

# name -> argv; outputs are pinned byte for byte
GOLDEN_CASES = {
    "thue_morse_8.txt": ["thue-morse", "--count", "8"],
    "thue_morse_64.json": ["thue-morse", "--count", "64", "--format", "json"],
    "expand_16.json": ["expand", "--eq", TM, "--prefix", "1", "--order", "16"],
    "space_32.json": ["space", "--eq", TM, "--order", "32"],
    "verify_256.json": ["verify", "--eq", TM, "--series", "{tm256}"],
    "guess_eq.json": ["guess-eq", "--series", "{tm256}", "--max-order", "2", "--deg-bound", "2"],
    "minimize.txt": ["minimize", "--eq", "F(z) - (1-z)*(1-z^2)*F(z^4) = 0", "--order", "256", "--format", "text"],
    "rationalize.json": ["rationalize", "--eq", TM, "--order", "512", "--deg-bound", "16"],
    "dfinite.json": ["dfinite", "--eq", TM, "--order", "1024", "--ode-order", "6", "--ode-deg", "8"],
    "classify.json": ["classify", "--eq", TM, "--order", "1024", "--deg-bound", "16", "--ode-order", "6",
                      "--ode-deg", "8"],
    "kernel.json": ["kernel", "--eq", TM, "--order", "1024", "--depth", "4"],
    "rank.json": ["rank", "--eq", TM, "--order", "1024", "--depth", "4", "--cmp-len", "64"],
    "represent.json": ["represent", "--eq", TM, "--order", "1024", "--depth", "3"],
    "automaton.dot": ["automaton", "--eq", TM, "--order", "4096", "--depth", "4"],
    "decompose.txt": ["decompose", "--eq", TM, "--order", "1024", "--format", "text"],
    "radius.json": ["radius", "--eq", TM],
    "orbit.json": ["orbit", "--eq", TM, "--steps", "5", "--j", "0"],
    "profile.csv": ["profile", "--eq", TM, "--order", "4096", "--theta", "0", "--radii", "0.5,0.9,0.95"],
    "report.json": ["report", "--eq", TM, "--order", "256", "--grid-m", "2", "--radii", "0.5,0.9",
                    "--steps", "3"],
}


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def tm256(tmp_path_factory):
    path = tmp_path_factory.mktemp("series") / "tm256.json"
    write_series(path, TruncatedSeries(thue_morse_prefix(256)), 2)
    return str(path)


def _argv(argv, tm256):
    return [a.replace("{tm256}", tm256) for a in argv]


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name, tm256):
    code, out, _ = call(_argv(GOLDEN_CASES[name], tm256))
    path = GOLDEN / name
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")
    code2, out2, _ = call(_argv(GOLDEN_CASES[name], tm256))
    assert (code2, out2) == (code, out)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_json_outputs_match_schema(name, tm256):
    argv = _argv(GOLDEN_CASES[name], tm256)
    if "--format" in argv:
        i = argv.index("--format")
        argv = argv[:i] + argv[i + 2:]
    argv += ["--format", "json"]
    code, out, _ = call(argv)
    assert code in (0, 3)
    jsonschema.validate(json.loads(out), OUTPUT_SCHEMAS[argv[0]])


def test_every_command_has_a_schema():
    assert set(OUTPUT_SCHEMAS) == set(COMMANDS)


def test_thue_morse_text():
    assert call(["thue-morse", "--count", "8"])[1] == "1 -1 -1 1 -1 1 1 -1\n"


def test_expand_matches_recursion():
    code, out, _ = call(["expand", "--eq", TM, "--prefix", "1", "--order", "16"])
    f, k = loads_series(out)
    assert code == 0 and k == 2
    assert [int(x) for x in f.coeffs] == [oracles.popcount_sign(n) for n in range(16)]


def test_classify_geometric():
    code, out, _ = call(["classify", "--eq", GEO, "--order", "512", "--deg-bound", "16"])
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "rational"
    assert doc["certificate"]["candidate"]["den"] == ["1", "-1"]


class TestExitCodes:
    def test_verify_failure(self, tmp_path):
        values = thue_morse_prefix(32)
        values[3] = 0
        path = tmp_path / "bad.json"
        write_series(path, TruncatedSeries(values), 2)
        code, out, _ = call(["verify", "--eq", TM, "--series", str(path)])
        assert code == 1 and json.loads(out)["first_failure"] == 3

    def test_inconsistent_prefix(self):
        code, _, err = call(["expand", "--eq", "z*F(z) - F(z^2) = 0", "--prefix", "1,0", "--order", "8"])
        assert code == 1 and "error" in err

    def test_usage(self):
        assert call(["expand", "--eq", TM, "--order", "8"])[0] == 2
        assert call(["nonsense"])[0] == 2
        assert call(["radius", "--eq", "F(z^2) - F(z^3) = 0"])[0] == 2
        assert call(["radius", "--eq", "F(z) -"])[0] == 2
        assert call(["thue-morse", "--format", "dot"])[0] == 2

    def test_insufficient(self):
        assert call(["guess-eq", "--eq", TM, "--order", "16", "--deg-bound", "4"])[0] == 3
        assert call(["kernel", "--eq", TM, "--order", "16", "--depth", "4"])[0] == 3
        assert call(["expand", "--eq", "z*F(z) - F(z^2) = 0", "--prefix", "0", "--order", "8"])[0] == 3
        code, out, _ = call(["classify", "--eq", TM, "--order", "512", "--deg-bound", "16"])
        assert code == 3 and json.loads(out)["verdict"] == "no-rational-at-bounds"

    def test_not_automatic(self):
        assert call(["automaton", "--eq", "F(z) - (1+2*z)*F(z^2) = 0", "--order", "1024"])[0] == 3


def test_output_file(tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = call(["thue-morse", "--count", "4", "--output", str(target)])
    assert code == 0 and out == "" and target.read_text() == "1 -1 -1 1\n"


def test_eq_file(tmp_path):
    path = tmp_path / "eq.txt"
    path.write_text(TM + "\n")
    assert call(["radius", "--eq-file", str(path)])[0] == 0


fractions = st.fractions(max_denominator=10 ** 6).filter(lambda x: abs(x) < 10 ** 9)


@given(st.lists(fractions, min_size=1, max_size=30), st.one_of(st.none(), st.integers(2, 9)))
def test_series_document_round_trip(values, k):
    f = TruncatedSeries(values)
    text = dumps_series(f, k)
    doc = json.loads(text)
    jsonschema.validate(doc, SERIES_SCHEMA)
    g, k2 = loads_series(text)
    assert g.coeffs == f.coeffs and g.order == f.order and k2 == k
    assert all(isinstance(c, Fraction) for c in g.coeffs)


def test_series_file_round_trip(tmp_path):
    f = TruncatedSeries([Fraction(1, 3), Fraction(-7, 2), 0, 5])
    write_series(tmp_path / "s.json", f, 3)
    assert read_series(tmp_path / "s.json") == (f, 3)


def test_series_document_rejects_bad_counts():
    with pytest.raises(ValueError):
        loads_series('{"order": 3, "coeffs": ["1"]}')
    with pytest.raises(ValueError):
        loads_series('{"order": 1, "coeffs": ["0.5"]}')
