from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segalfib.category import (
    FunctorMap,
    colim_oracle,
    corpus_category,
    corpus_presheaves,
    full_subcategory,
    lim_oracle,
    presheaf_isomorphism,
    terminal_category,
)
from segalfib.errors import PreconditionError
from segalfib.fibrations import fiberwise_weq, right_fibration_check
from segalfib.generate import random_kan_pair
from segalfib.grothendieck import grothendieck, left_adjoint_L, vertex_complex
from segalfib.kan import (
    base_change,
    d_over_i,
    d_over_i_triples,
    dk_invariance_probe,
    hocolim,
    i_shriek,
    kan_extend,
    lan_oracle,
    sections,
    triple_of_cell,
)
from segalfib.simplicial import SimplicialMap


def _to_terminal(C):
    T = terminal_category()
    return FunctorMap(C, T, [0] * C.n_objects, [0] * C.n_morphisms)


def _at(C, v):
    return full_subcategory(C, [v])[1]


def test_d_over_i_terminal_is_singletons():
    T = corpus_category("terminal")
    W = d_over_i(FunctorMap.identity(T), 2, 2).cells
    assert all(W.size(m, n) == 1 for m in range(3) for n in range(3))


def test_d_over_i_vertex_inclusions():
    C = corpus_category("[1]")
    W1 = d_over_i(_at(C, 1), 3, 2).cells
    W1.validate()
    assert [[W1.size(m, n) for n in range(3)] for m in range(4)] == [[m + 2] * 3 for m in range(4)]
    # strings end-to-start: a prefix of 0s forces the whole string to be 0
    W0 = d_over_i(_at(C, 0), 3, 2).cells
    assert all(W0.size(m, n) == 1 for m in range(4) for n in range(3))


def test_d_over_i_matches_triples(corpus_cat):
    i = FunctorMap.identity(corpus_cat)
    DI = d_over_i(i, 2, 1)
    DI.cells.validate()
    for m in range(3):
        for n in range(2):
            cells = sorted(triple_of_cell(i, c) for c in DI.cells.labels[m][n])
            assert cells == sorted(d_over_i_triples(i, m, n))


def test_d_over_identity_column_zero_is_shifted_nerve(corpus_cat):
    i = FunctorMap.identity(corpus_cat)
    W = d_over_i(i, 2, 0).cells
    N = corpus_cat.nerve(3)
    assert [W.size(m, 0) for m in range(3)] == [N.size(m + 1) for m in range(3)]


def test_i_shriek_and_base_change():
    C = corpus_category("square")
    F = next(F for F in corpus_presheaves(C) if F.name == "mixed")
    G = grothendieck(F, 2)
    ident = FunctorMap.identity(C)
    assert i_shriek(G, ident).total is G.total
    assert base_change(G, ident).total.sizes() == G.total.sizes()
    for keep in ([0, 1], [1, 3], [2]):
        S, j = full_subcategory(C, keep)
        P = base_change(G, j)
        GFj = grothendieck(F.restrict(j), 2)
        assert P.total.sizes() == GFj.total.sizes()
        assert presheaf_isomorphism(left_adjoint_L(P), F.restrict(j)) is not None
    X = vertex_complex(C, 1, 2)
    S, j = full_subcategory(C, [1])
    Y = i_shriek(vertex_complex(S, 0, 2), j)
    assert Y.projection.levels == X.projection.levels


def test_kan_extend_worked_example():
    C = corpus_category("[1]")
    T = terminal_category()
    at0 = FunctorMap(T, C, [0], [C.ident[0]])
    K = kan_extend(vertex_complex(T, 0, 2), at0)
    L = left_adjoint_L(K)
    assert [L.size(c) for c in range(2)] == [1, 0]
    assert right_fibration_check(K.projection).passed


def test_kan_extend_along_identity(corpus_presheaf):
    F = corpus_presheaf
    X = grothendieck(F, 2)
    K = kan_extend(X, FunctorMap.identity(F.base))
    assert [len(f) for f in K.vertex_fibers()] == [len(f) for f in X.vertex_fibers()]


def test_kan_extend_to_terminal_is_hocolim(corpus_presheaf):
    X = grothendieck(corpus_presheaf, 2)
    K = kan_extend(X, _to_terminal(corpus_presheaf.base))
    assert K.total.size(0) == len(hocolim(X))


def test_kan_extend_matches_oracle(corpus_presheaf):
    F = corpus_presheaf
    for d in range(F.base.n_objects):
        i = _at(F.base, d)
        Fi = F.restrict(i)
        K = kan_extend(grothendieck(Fi, 2), i)
        assert right_fibration_check(K.projection).passed
        assert presheaf_isomorphism(left_adjoint_L(K), lan_oracle(Fi, i)) is not None


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 100_000))
def test_kan_extend_random_pairs(seed):
    i, F = random_kan_pair(seed)
    K = kan_extend(grothendieck(F, 2), i)
    assert right_fibration_check(K.projection).passed
    assert presheaf_isomorphism(left_adjoint_L(K), lan_oracle(F, i)) is not None


def test_kan_extend_rejects_non_fibration():
    C = corpus_category("[1]")
    N = C.nerve(2)
    from segalfib.fibered import FiberedComplex
    from segalfib.simplicial import standard_simplex

    S = standard_simplex(1, 2)
    to_vertex = SimplicialMap.from_function(S, N, lambda k, v: ((0,) * (k + 1), (C.ident[0],) * k))
    with pytest.raises(PreconditionError):
        kan_extend(FiberedComplex(S, N, to_vertex, category=C), FunctorMap.identity(C))


def test_hocolim_and_sections_match_oracles(corpus_presheaf):
    X = grothendieck(corpus_presheaf, 3)
    assert len(hocolim(X)) == len(colim_oracle(corpus_presheaf))
    assert len(sections(X)) == len(lim_oracle(corpus_presheaf))


def test_fork_colim_and_lim():
    C = corpus_category("[1]")
    F = next(F for F in corpus_presheaves(C) if F.name == "fork")
    X = grothendieck(F, 3)
    assert len(hocolim(X)) == 1
    assert len(sections(X)) == 2
    assert len(hocolim(vertex_complex(C, 0, 2))) == 1


def test_dk_probe():
    E = corpus_category("E")
    _, incl = full_subcategory(E, [0])
    S = incl.source
    point = grothendieck(corpus_presheaves(S)[0], 2)
    assert dk_invariance_probe(incl, [point]).passed
    for F in corpus_presheaves(E):
        assert dk_invariance_probe(FunctorMap.identity(E), [grothendieck(F, 2)]).passed
    C = corpus_category("[1]")
    with pytest.raises(PreconditionError):
        dk_invariance_probe(_at(C, 0), [])


def test_fiberwise_weq_of_base_change_identity(corpus_presheaf):
    G = grothendieck(corpus_presheaf, 2)
    P = base_change(G, FunctorMap.identity(corpus_presheaf.base))
    back = SimplicialMap.from_function(P.total, G.total, lambda k, lab: lab[0])
    q = SimplicialMap(P.total, G.base, P.projection.levels)
    assert fiberwise_weq(back, q, G.projection).passed
