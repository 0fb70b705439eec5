from __future__ import annotations

from importlib.resources import files

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segalfib.cartesian import grothendieck_cat
from segalfib.category import CORPUS_NAMES, Presheaf, corpus_category, corpus_presheaves, presheaf_isomorphism
from segalfib.errors import WorkbenchParseError
from segalfib.generate import random_cat_presheaf, random_category, random_presheaf
from segalfib.workbench import (
    Token,
    Workbench,
    cat_presheaf_documents,
    category_document,
    corpus_document,
    load_fixture,
    parse,
    presheaf_document,
    serialize,
)

FIXTURES = sorted(p.name[:-3] for p in (files("segalfib") / "fixtures").iterdir() if p.name.endswith(".wb"))


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_round_trip(name):
    text = (files("segalfib") / "fixtures" / f"{name}.wb").read_text(encoding="utf-8")
    assert serialize(parse(text)) == text
    wb = load_fixture(name)
    for d in wb.docs:
        wb.get(d.name)


def test_interval_fixture():
    C = load_fixture("interval").get("[1]")
    assert (C.n_objects, C.n_morphisms) == (2, 3)


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpus_fixture_matches_builder(name):
    slug = {"[1]": "interval1", "[2]": "interval2", "Z/2": "z2"}.get(name, name)
    text = (files("segalfib") / "fixtures" / f"corpus_{slug}.wb").read_text(encoding="utf-8")
    assert text == serialize(corpus_document(name))
    wb = Workbench.from_text(text)
    C = corpus_category(name)
    B = wb.get(name)
    assert (B.n_objects, B.n_morphisms, len(B.comp)) == (C.n_objects, C.n_morphisms, len(C.comp))
    for F in corpus_presheaves(C):
        G = wb.get(f"{name}:{F.name}")
        assert [G.size(c) for c in range(C.n_objects)] == [F.size(c) for c in range(C.n_objects)]


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 100_000))
def test_random_documents_round_trip(seed):
    C = random_category(seed)
    F = random_presheaf(C, seed)
    text = serialize([category_document(C, "C"), presheaf_document(F, "F", "C")])
    assert serialize(parse(text)) == text
    wb = Workbench.from_text(text)
    G = wb.get("F")
    assert presheaf_isomorphism(G, Presheaf(G.base, F.values, F.action)) is not None


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 100_000))
def test_random_cat_presheaves_round_trip(seed):
    F = random_cat_presheaf(seed)
    text = serialize([category_document(F.base, "C")] + cat_presheaf_documents(F, "F", "C"))
    assert serialize(parse(text)) == text
    G = Workbench.from_text(text).get("F")
    assert grothendieck_cat(G, 1, 1).total.sizes() == grothendieck_cat(F, 1, 1).total.sizes()


@given(st.text(min_size=1, max_size=12))
def test_token_quoting(label):
    doc = parse(serialize(category_document(corpus_category("terminal"), label)))[0]
    assert doc.name == label
    assert Token(label).render() != "" and "\n" not in Token(label).render()


def test_canonical_field_order():
    text = "workbench 1\nbegin category c\nmorphism id_x x x\nidentity x id_x\nobjects x\nend\n"
    out = serialize(parse(text))
    assert out.splitlines()[2] == "objects x"


def _err(text):
    with pytest.raises(WorkbenchParseError) as info:
        wb = Workbench.from_text(text)
        for d in wb.docs:
            wb.get(d.name)
    return info.value


def test_parse_errors_carry_positions():
    e = _err("workbench 2\n")
    assert (e.line, e.column) == (1, 11)
    e = _err("workbench 1\nbegin category c\nobjectz x\nend\n")
    assert (e.line, e.column) == (3, 1)
    e = _err("workbench 1\nbegin category c\nobjects x\n")
    assert "not closed" in str(e)
    e = _err('workbench 1\nbegin category c\nobjects "x\nend\n')
    assert e.line == 3
    e = _err("workbench 1\nbegin category c\nobjects x\nobjects y\nend\n")
    assert "given twice" in str(e)
    e = _err("workbench 1\nbegin widget c\nend\n")
    assert "unknown kind" in str(e)


def test_malformed_composition_names_triple():
    text = (
        "workbench 1\nbegin category bad\nobjects x y\n"
        "morphism id_x x x\nmorphism id_y y y\nmorphism u x y\nmorphism v y x\n"
        "identity x id_x\nidentity y id_y\ncompose v u id_y\nend\n"
    )
    e = _err(text)
    assert "('v', 'u') -> 'id_y'" in str(e)


def test_explicit_simplicial_set_and_map():
    # the square as two triangles glued along the diagonal
    text = (
        "workbench 1\n"
        "begin simplicial-set sq\nmax-dim 2\n"
        "simplex 0 a\nsimplex 0 b\nsimplex 0 c\nsimplex 0 d\n"
        "simplex 1 ab b a\nsimplex 1 bd d b\nsimplex 1 ad d a\nsimplex 1 ac c a\nsimplex 1 cd d c\n"
        "simplex 2 t bd ad ab\nsimplex 2 s cd ad ac\nend\n"
        "begin simplicial-set pt\nmax-dim 2\nconstruction simplex 0\nend\n"
        "begin map collapse\nconstruction explicit\ndomain sq\ncodomain pt\nmax-dim 2\n"
        "send 0 a (0,)\nsend 0 b (0,)\nsend 0 c (0,)\nsend 0 d (0,)\n"
        "send 1 ab \"(0, 0)\"\nsend 1 bd \"(0, 0)\"\nsend 1 ad \"(0, 0)\"\nsend 1 ac \"(0, 0)\"\nsend 1 cd \"(0, 0)\"\n"
        "send 2 t \"(0, 0, 0)\"\nsend 2 s \"(0, 0, 0)\"\nend\n"
    )
    wb = Workbench.from_text(text)
    X = wb.get("sq")
    assert X.nondegenerate_counts() == (4, 5, 2)
    f = wb.get("collapse")
    f.validate()
    assert serialize(parse(text)) == text


def test_degenerate_face_reference():
    text = "workbench 1\nbegin simplicial-set loop\nmax-dim 2\nsimplex 0 v\nsimplex 1 e v v\nsimplex 2 z e e v|0,0\nend\n"
    X = Workbench.from_text(text).get("loop")
    assert X.nondegenerate_counts() == (1, 1, 1)


def test_bad_face_reference():
    text = "workbench 1\nbegin simplicial-set bad\nmax-dim 1\nsimplex 0 v\nsimplex 1 e v w\nend\n"
    assert "unknown 'w'" in str(_err(text))


def test_bisimplicial_constructions():
    text = serialize(corpus_document("[1]"))
    text += (
        "begin bisimplicial-set cls\nmax-m 2\nmax-n 1\nconstruction classification [1]\nend\n"
        "begin simplicial-set d1\nmax-dim 2\nconstruction simplex 1\nend\n"
        "begin bisimplicial-set bx\nmax-m 2\nmax-n 2\nconstruction box [1] d1\nend\n"
    )
    wb = Workbench.from_text(text)
    assert wb.get("cls").size(1, 1) == 3
    assert wb.get("bx").size(1, 1) == 9
