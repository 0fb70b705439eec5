from __future__ import annotations

import io

import pytest

from segalfib.category import colim_oracle, corpus_category, corpus_presheaves, lim_oracle
from segalfib.cli import EXIT_FAIL, EXIT_PASS, EXIT_RESOURCE, EXIT_USAGE, run
from segalfib.workbench import Workbench, corpus_document, fixture_path, parse, serialize

INTERVAL = str(fixture_path("interval"))


def call(*argv) -> tuple[int, str]:
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def report(text: str):
    docs = parse(text)
    assert len(docs) == 1 and docs[0].kind == "report"
    return docs[0]


@pytest.fixture
def corpus_file(tmp_path):
    def write(name: str) -> str:
        p = tmp_path / "corpus.wb"
        p.write_text(serialize(corpus_document(name)), encoding="utf-8")
        return str(p)

    return write


def test_exit_codes():
    assert call("check-segal", INTERVAL, "--target", "[1]")[0] == EXIT_PASS
    assert call("check-horns", INTERVAL, "--target", "at0", "--family", "left")[0] == EXIT_FAIL
    assert call("check-segal", "/nonexistent.wb")[0] == EXIT_USAGE
    assert call("no-such-verb")[0] == EXIT_USAGE
    assert call("check-segal", INTERVAL, "--max-dim", "-1")[0] == EXIT_USAGE
    assert call("check-segal", INTERVAL, "--target", "missing")[0] == EXIT_USAGE
    assert call("sections-presheaf", INTERVAL, "--target", "fork", "--max-dim", "1")[0] == EXIT_RESOURCE


def test_parse_error_exit(tmp_path):
    p = tmp_path / "bad.wb"
    p.write_text("workbench 1\nbegin category c\nobjects x\n", encoding="utf-8")
    assert call("validate", str(p))[0] == EXIT_USAGE


def test_resource_report_names_budget():
    code, out = call("sections-presheaf", INTERVAL, "--target", "fork", "--max-dim", "1")
    assert code == EXIT_RESOURCE
    doc = report(out)
    assert doc.get1("verdict") == "fail"
    assert '"budget": "max_dim"' in doc.get1("witness")


def test_rightfib_on_grothendieck_fixture():
    code, out = call("check-rightfib", INTERVAL, "--target", "fork")
    assert code == EXIT_PASS
    assert report(out).get1("verdict") == "pass"


@pytest.mark.parametrize("name", ["[1]", "parallel", "square", "E", "Z/2"])
def test_hocolim_and_sections_match_oracles(name, corpus_file):
    path = corpus_file(name)
    C = corpus_category(name)
    for F in corpus_presheaves(C):
        target = f"{name}:{F.name}"
        code, out = call("hocolim", path, "--target", target)
        assert code == EXIT_PASS
        assert len(report(out).all("row")) == len(colim_oracle(F))
        code, out = call("sections", path, "--target", target)
        assert code == EXIT_PASS
        assert len(report(out).all("row")) == len(lim_oracle(F))


def test_fork_colim_and_lim():
    _, out = call("hocolim", INTERVAL, "--target", "fork")
    assert len(report(out).all("row")) == 1
    _, out = call("sections", INTERVAL, "--target", "fork")
    assert len(report(out).all("row")) == 2


def test_kan_extend_interval_fixture():
    code, out = call("kan-extend", INTERVAL, "--target", "point", "--along", "at0")
    assert code == EXIT_PASS
    wb = Workbench.from_text(serialize(parse(open(INTERVAL, encoding="utf-8").read())) + out.split("\n", 1)[1])
    Lan = wb.get("Lan(point)")
    assert [Lan.size(c) for c in range(2)] == [1, 0]


def test_rectify_and_unit():
    code, out = call("rectify", INTERVAL, "--target", "fork")
    assert code == EXIT_PASS
    doc = parse(out)[0]
    assert [len(v) - 1 for _, v in doc.all("value")] == [1, 2]
    assert call("unit-check", INTERVAL, "--target", "fork")[0] == EXIT_PASS


def test_fmt_is_identity_on_canonical_input():
    code, out = call("fmt", INTERVAL)
    assert code == EXIT_PASS
    assert out == open(INTERVAL, encoding="utf-8").read()


@pytest.mark.parametrize("kind", ["category", "presheaf", "cat-presheaf", "equivalence", "non-equivalence", "kan-pair"])
def test_generate_deterministic_and_valid(kind, tmp_path):
    a = call("generate", kind, "--seed", "7")
    b = call("generate", kind, "--seed", "7")
    assert a == b and a[0] == EXIT_PASS
    p = tmp_path / "g.wb"
    p.write_text(a[1], encoding="utf-8")
    assert call("validate", str(p))[0] == EXIT_PASS


def test_generated_equivalences_classified(tmp_path):
    p = tmp_path / "eq.wb"
    for seed in range(3):
        for kind, expected in (("equivalence", EXIT_PASS), ("non-equivalence", EXIT_FAIL)):
            p.write_text(call("generate", kind, "--seed", str(seed))[1], encoding="utf-8")
            assert call("check-dk", str(p), "--target", f"i{seed}")[0] == expected


@pytest.mark.parametrize("argv", [
    ("grothendieck", INTERVAL, "--target", "fork"),
    ("d-over-i", INTERVAL, "--along", "at0"),
    ("check-qcat", INTERVAL, "--target", "[1]"),
    ("to-bisimplicial", INTERVAL, "--target", "[1]", "--max-dim", "1", "--max-n", "1"),
])
def test_byte_identical_repeats(argv):
    assert call(*argv) == call(*argv)
