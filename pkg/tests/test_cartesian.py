from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segalfib.cartesian import (
    bis_representable_L,
    box_entry_count,
    cartesian_check,
    check_cat_adjunction,
    compare_box,
    constant_cat_presheaf,
    corpus_cat_presheaves,
    discrete_cat_presheaf,
    embed_constant,
    grothendieck_cat,
    representable_box,
    trivial_double,
    unit_shadow_check,
)
from segalfib.category import FunctorMap, Presheaf, corpus_category, corpus_presheaves, ordinal_category
from segalfib.generate import random_cat_presheaf
from segalfib.grothendieck import grothendieck
from segalfib.simplicial import boundary, standard_simplex

SMALL = ["terminal", "[1]", "parallel", "E", "Z/2"]


def test_all_terminal_values_reduce_to_set_construction(corpus_cat):
    T = corpus_category("terminal")
    F = constant_cat_presheaf(corpus_cat, T)
    G = grothendieck_cat(F, 2, 2)
    GS = grothendieck(corpus_presheaves(corpus_cat)[0], 2)
    for m in range(3):
        assert {G.total.size(m, n) for n in range(3)} == {GS.total.size(m)}


def test_terminal_base_gives_nerve_columns():
    T = corpus_category("terminal")
    G = grothendieck_cat(constant_cat_presheaf(T, ordinal_category(1)), 2, 3)
    assert all(G.total.size(m, n) == n + 2 for m in range(3) for n in range(4))


def test_entry_count_on_interval():
    # F(0) = [1], F(1) = terminal, F(0 -> 1) picks vertex 0 of [1]
    C = corpus_category("[1]")
    A, T = ordinal_category(1), corpus_category("terminal")
    act = [FunctorMap.identity(A), FunctorMap.identity(T), FunctorMap(T, A, [0], [A.ident[0]])]
    F = Presheaf(C, [A, T], act, kind="CAT")
    G = grothendieck_cat(F, 2, 2)
    G.validate()
    # strings id_0, id_1, (0 -> 1) over c_0 = 0, 1, 1: 3 + 1 + 1 cells
    assert G.total.size(1, 1) == 5
    assert cartesian_check(G).passed


@pytest.mark.parametrize("name", SMALL)
def test_corpus_cat_presheaves_are_cartesian(name):
    C = corpus_category(name)
    for F in corpus_cat_presheaves(C):
        P = grothendieck_cat(F, 2, 2)
        P.validate()
        rep = cartesian_check(P)
        assert rep.passed, rep.witness


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 100_000))
def test_random_cat_presheaves_are_cartesian(seed):
    F = random_cat_presheaf(seed)
    assert cartesian_check(grothendieck_cat(F, 2, 2)).passed


def test_embedded_right_fibration_passes():
    C = corpus_category("[1]")
    F = next(F for F in corpus_presheaves(C) if F.name == "fork")
    assert cartesian_check(embed_constant(grothendieck(F, 2), 2)).passed


def test_non_segal_columns_fail():
    rep = cartesian_check(trivial_double(corpus_category("[1]"), boundary(2, 2), 2))
    assert not rep.passed
    assert rep.witness["direction"] == "column"


def test_discrete_lift_matches_set_construction():
    C = corpus_category("square")
    F = next(F for F in corpus_presheaves(C) if F.name == "mixed")
    G = grothendieck_cat(discrete_cat_presheaf(F), 2, 1)
    GS = grothendieck(F, 2)
    assert [G.total.size(m, 0) for m in range(3)] == list(GS.total.sizes())


def test_bis_representable_L_values():
    C = corpus_category("[2]")
    s = C.nerve(1).labels[1][-1]
    Delta, F = bis_representable_L(C, s, 2)
    assert Delta.sizes() == standard_simplex(2).sizes()
    c0 = s[0][0]
    for c in range(C.n_objects):
        assert F.values[c].n_objects == 3 * len(C.hom(c, c0))


def test_box_entry_counts():
    C = corpus_category("square")
    for c in range(C.n_objects):
        B = representable_box(C, c, 2, 2)
        for i in range(3):
            for j in range(3):
                assert B.size(i, j) == box_entry_count(C, c, 2, i, j)


@pytest.mark.parametrize("name", ["[1]", "[2]", "parallel", "E", "idempotent"])
def test_box_comparison(name):
    C = corpus_category(name)
    N = C.nerve(1)
    for m in range(2):
        for s in N.labels[m]:
            for n in range(3):
                assert compare_box(C, s, n, 2).passed


@pytest.mark.parametrize("name", ["[1]", "Z/2", "parallel"])
def test_cat_adjunction_and_unit_shadow(name):
    C = corpus_category(name)
    N = C.nerve(1)
    for F in corpus_cat_presheaves(C):
        for s in N.labels[1]:
            assert check_cat_adjunction(F, s, 1).passed
    for s in N.labels[1]:
        assert unit_shadow_check(C, s, 1, max_dim=2).passed
