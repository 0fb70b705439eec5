from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segalfib.category import (
    constant_presheaf,
    corpus_category,
    corpus_presheaves,
    monoid_category,
    natural_transformations,
    over_category,
    presheaf_isomorphism,
    representable,
    wide_subcategory,
)
from segalfib.generate import random_fibration
from segalfib.grothendieck import (
    G_map,
    check_left_adjunction,
    check_naturality_L,
    check_naturality_R,
    check_right_adjunction,
    classification_diagram,
    counit,
    explicit_L,
    explicit_L_comparison,
    grothendieck,
    identity_complex,
    left_adjoint_L,
    maps_over,
    nerve_over_complex,
    representable_complex,
    right_adjoint_R,
    unit,
    vertex_complex,
)
from segalfib.simplicial import SimplicialMap, pi0


def _named(C, name):
    return next(F for F in corpus_presheaves(C) if F.name == name)


def test_trivial_base_gives_constant_levels():
    C = monoid_category(["e"], {}, "e")
    G = grothendieck(constant_presheaf(C, ["a", "b", "c"]), 3)
    assert G.total.sizes() == (3, 3, 3, 3)


def test_level_zero_size(corpus_presheaf):
    F = corpus_presheaf
    G = grothendieck(F, 2)
    assert G.total.size(0) == sum(F.size(c) for c in range(F.base.n_objects))
    G.validate()


def test_representable_gives_over_nerve(corpus_cat):
    for c in range(corpus_cat.n_objects):
        G = grothendieck(representable(corpus_cat, c), 3)
        S, _ = over_category(corpus_cat, c)
        assert G.total.sizes() == S.nerve(3).sizes()


def test_vertex_fibers_are_values(corpus_presheaf):
    F = corpus_presheaf
    G = grothendieck(F, 2)
    assert [len(f) for f in G.vertex_fibers()] == [F.size(c) for c in range(F.base.n_objects)]


def test_L_of_vertex_and_simplex(corpus_cat):
    C = corpus_cat
    for c in range(C.n_objects):
        assert presheaf_isomorphism(left_adjoint_L(vertex_complex(C, c, 2)), representable(C, c)) is not None
    N = C.nerve(2)
    for s in N.labels[2]:
        L = left_adjoint_L(representable_complex(C, s, 2))
        assert presheaf_isomorphism(L, representable(C, s[0][0])) is not None


def test_counit_is_isomorphism(corpus_presheaf):
    comps, LGF = counit(corpus_presheaf)
    assert all(sorted(row) == list(range(corpus_presheaf.size(c))) for c, row in enumerate(comps))
    assert presheaf_isomorphism(LGF, corpus_presheaf) is not None


def test_unit_is_bijective_on_fibrations(corpus_presheaf):
    f, _ = unit(grothendieck(corpus_presheaf, 3))
    f.validate()
    assert f.is_levelwise_bijective()


def test_unit_of_vertex_is_identity_inclusion():
    C = corpus_category("square")
    for c in range(C.n_objects):
        f, GL = unit(vertex_complex(C, c, 2))
        # level 0 of G L(Delta[0] -> c) is N(C/c)_0; the vertex goes to id_c
        assert GL.total.size(0) == len(over_category(C, c)[0].objects)
        (s, e), = [GL.total.labels[0][v] for v in f.levels[0]]
        assert s == ((c,), ())


def test_unit_level_zero_of_simplex():
    C = corpus_category("[2]")
    s = C.nerve(2).labels[2][-1]
    X = representable_complex(C, s, 2)
    f, GL = unit(X)
    # each vertex lands over its own object with the class of the identity
    for v, img in enumerate(f.levels[0]):
        assert GL.total.labels[0][img][0] == X.base.labels[0][X.projection.levels[0][v]]


def test_R_examples(corpus_presheaf):
    F = corpus_presheaf
    assert presheaf_isomorphism(right_adjoint_R(grothendieck(F, 3)), F) is not None


def test_R_of_identity_and_empty(corpus_cat):
    R = right_adjoint_R(identity_complex(corpus_cat, 3))
    assert all(R.size(c) == 1 for c in range(corpus_cat.n_objects))
    empty = constant_presheaf(corpus_cat, [])
    R0 = right_adjoint_R(grothendieck(empty, 3))
    assert all(R0.size(c) == 0 for c in range(corpus_cat.n_objects))


def test_explicit_L_examples():
    C = corpus_category("square")
    for b in range(C.n_objects):
        X = vertex_complex(C, b, 2)
        for c in range(C.n_objects):
            assert len(explicit_L(X, c)) == len(C.hom(c, b))
    F = _named(corpus_category("[1]"), "fork")
    assert len(explicit_L(grothendieck(F, 2), 0)) == 1
    empty = grothendieck(constant_presheaf(C, []), 2)
    assert explicit_L(empty, 0) == []


def test_explicit_L_comparison(corpus_presheaf):
    X = grothendieck(corpus_presheaf, 2)
    for c in range(corpus_presheaf.base.n_objects):
        assert explicit_L_comparison(X, c).passed


@pytest.mark.parametrize("name", ["[1]", "parallel", "Z/2", "E"])
def test_adjunction_bijections(name):
    C = corpus_category(name)
    for F in corpus_presheaves(C):
        for c in range(C.n_objects):
            assert check_left_adjunction(vertex_complex(C, c, 2), F).passed
            assert check_right_adjunction(F, nerve_over_complex(C, c, 2)).passed
            assert check_right_adjunction(representable(C, c), grothendieck(F, 2)).passed


def test_G_fully_faithful():
    C = corpus_category("parallel")
    Fs = corpus_presheaves(C)
    Gs = [grothendieck(F, 2) for F in Fs]
    for F, GF in zip(Fs, Gs):
        for F2, GF2 in zip(Fs, Gs):
            assert len(list(natural_transformations(F, F2))) == len(maps_over(GF, GF2))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 100_000))
def test_unit_on_random_fibrations(seed):
    X = random_fibration(seed)
    f, _ = unit(X)
    assert f.is_levelwise_bijective()


def test_classification_diagram_examples():
    C = corpus_category("[1]")
    W, incl = wide_subcategory(C, list(C.ident))
    K = classification_diagram(C, W, incl, 2, 2)
    K.validate()
    assert K.size(1, 1) == 3
    for m in range(3):
        assert {K.size(m, n) for n in range(3)} == {C.nerve(2).size(m)}
    E = corpus_category("E")
    WE, inclE = wide_subcategory(E, range(E.n_morphisms))
    KE = classification_diagram(E, WE, inclE, 1, 1)
    assert len(pi0(KE.vertical(0))) == 1


@pytest.mark.parametrize("name", ["[1]", "parallel", "E", "Z/2"])
def test_adjunction_naturality(name):
    C = corpus_category(name)
    Fs = corpus_presheaves(C)
    probes = [(A, B, nu) for A in Fs for B in Fs for nu in list(natural_transformations(A, B))[:1]]
    assert len(probes) >= 3
    for A, B, nu in probes:
        GA, GB = grothendieck(A, 2), grothendieck(B, 2)
        k = G_map(nu, GA, GB)
        assert check_naturality_L(k, GA, GB, nu, A, B).passed
        assert check_naturality_L(SimplicialMap.identity(GA.total), GA, GA, nu, A, B).passed
        assert check_naturality_R(nu, A, B, k, GA, GB).passed
