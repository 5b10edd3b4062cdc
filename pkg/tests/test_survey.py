import csv
import io
import json

import pytest

from gcomplete.survey import MAX_DEGREE, survey, survey_words, worker_count
from gcomplete.words import parse_index

EXPECTED = {
    1: [], 2: [], 3: [], 4: [],
    5: ["[0,0;1,1]"],
    6: ["[00;21]"],
    7: ["[00;13]", "[00;31]", "[10;11]"],
}


@pytest.mark.parametrize("d", range(1, 9))
def test_word_count(d):
    words = survey_words(d)
    assert len(words) == 3 ** (d - 1) == len(set(words))
    assert all(w.endswith("C") and len(w) == d for w in words)


@pytest.mark.parametrize("d", sorted(EXPECTED))
def test_exceptional_sets(d):
    got = survey(d).exceptional
    assert sorted(got) == sorted(parse_index(k) for k in EXPECTED[d])


def test_witness_values():
    rep = survey(6)
    k = parse_index("[00;21]")
    assert "BBBBCC" in rep.witnesses[k]
    assert rep._value("BBBBCC", k) < 0


def test_parallel_matches_serial():
    a = survey(6, workers=1)
    b = survey(6, workers=3)
    assert a.to_json() == b.to_json()


@pytest.mark.parametrize("d", range(1, 7))
def test_verify_against_lattices(d):
    assert survey(d, verify=True).oracle_mismatches == []


def test_formats():
    rep = survey(5)
    rows = list(csv.reader(io.StringIO(rep.render("csv"))))
    assert rows[0] == ["word", "index", "g_value"]
    assert len(rows) == 1 + 81 * 8
    obj = json.loads(rep.render("json"))
    assert obj["exceptional"] == ["[0,0;1,1]"]
    assert "BIC^3" in obj["witnesses"]["[0,0;1,1]"]
    text = rep.render("text", True)
    assert text.startswith("degree 5: 81 words\nexceptional: [0,0;1,1]\n")
    with pytest.raises(ValueError):
        rep.render("xml")


def test_degree_bounds():
    for d in (0, MAX_DEGREE + 1):
        with pytest.raises(ValueError):
            survey(d)
    with pytest.raises(ValueError):
        survey(3, max_degree=2)


def test_worker_count(monkeypatch):
    monkeypatch.delenv("GCOMPLETE_THREADS", raising=False)
    assert worker_count() == 1
    monkeypatch.setenv("GCOMPLETE_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("GCOMPLETE_THREADS", "0")
    assert worker_count() >= 1
    for bad in ("-1", "x"):
        monkeypatch.setenv("GCOMPLETE_THREADS", bad)
        with pytest.raises(ValueError):
            worker_count()
