from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segalfib.category import (
    FinCategory,
    FunctorMap,
    Presheaf,
    colim_oracle,
    constant_presheaf,
    corpus_category,
    corpus_presheaves,
    elements_oracle,
    full_subcategory,
    is_equivalence,
    lim_oracle,
    natural_transformations,
    over_category,
    presheaf_isomorphism,
    representable,
    under_category,
)
from segalfib.errors import ValidationError
from segalfib.fibrations import segal_check
from segalfib.generate import random_category, random_presheaf
from segalfib.simplicial import pi0


def _fork():
    C = corpus_category("[1]")
    return next(F for F in corpus_presheaves(C) if F.name == "fork")


def test_corpus_categories_validate(corpus_cat):
    corpus_cat.validate()
    assert corpus_cat.opposite().opposite().n_morphisms == corpus_cat.n_morphisms


def test_bad_composition_names_offending_triple():
    with pytest.raises(ValidationError, match="'v', 'u'"):
        FinCategory(
            ["x", "y"],
            [("id_x", "x", "x"), ("id_y", "y", "y"), ("u", "x", "y"), ("v", "y", "x")],
            {"x": "id_x", "y": "id_y"},
            {("v", "u"): "id_y", ("u", "v"): "id_y"},
        )


def test_non_associative_table_rejected():
    # a monoid {e, a, b} with a*a = b, a*b = a, b*a = b is not associative
    with pytest.raises(ValidationError):
        FinCategory(
            ["*"],
            [("e", "*", "*"), ("a", "*", "*"), ("b", "*", "*")],
            {"*": "e"},
            {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"},
        )


def test_nerve_examples():
    T = corpus_category("terminal").nerve(4)
    assert T.sizes() == (1,) * 5
    assert sum(T.nondegenerate_counts()[1:]) == 0
    N1 = corpus_category("[1]").nerve(3)
    assert N1.size(1) == 3
    assert N1.nondegenerate_counts()[1] == 1


def test_nerve_is_strict_segal(corpus_cat):
    assert segal_check(corpus_cat.nerve(4)).passed


def test_over_and_under_examples():
    C = corpus_category("[1]")
    over1, forget = over_category(C, 1)
    assert over1.n_objects == 2
    forget.validate()
    for name in ("E", "square", "idempotent"):
        D = corpus_category(name)
        for c in range(D.n_objects):
            O, _ = over_category(D, c)
            ident = O.obj_index[D.morphisms[D.ident[c]]] if D.morphisms[D.ident[c]] in O.obj_index else None
            # id_c is terminal: exactly one morphism from every object into it
            term = [o for o in range(O.n_objects) if all(len(O.hom(a, o)) == 1 for a in range(O.n_objects))]
            assert term, (name, c)
            assert ident is None or ident in term
    M = corpus_category("idempotent")
    U, _ = under_category(0, M)
    assert U.n_objects == M.n_morphisms


def test_colim_and_lim_examples():
    F = _fork()
    assert len(colim_oracle(F)) == 1
    assert len(lim_oracle(F)) == 2
    for name in ("[2]", "square", "E", "parallel"):
        C = corpus_category(name)
        assert len(colim_oracle(constant_presheaf(C, ["*"]))) == 1
        for c in range(C.n_objects):
            assert len(colim_oracle(representable(C, c))) == 1


def test_elements_oracle(corpus_presheaf):
    F = corpus_presheaf
    El, p = elements_oracle(F)
    p.validate()
    assert El.n_objects == sum(F.size(c) for c in range(F.base.n_objects))


def test_elements_of_point_and_representable():
    C = corpus_category("square")
    El, p = elements_oracle(constant_presheaf(C, ["*"]))
    assert (El.n_objects, El.n_morphisms) == (C.n_objects, C.n_morphisms)
    for c in range(C.n_objects):
        El, _ = elements_oracle(representable(C, c))
        O, _ = over_category(C, c)
        assert (El.n_objects, El.n_morphisms) == (O.n_objects, O.n_morphisms)


def test_is_equivalence_examples():
    E = corpus_category("E")
    assert is_equivalence(FunctorMap.identity(E)).passed
    sub, incl = full_subcategory(E, [0])
    assert is_equivalence(incl).passed
    C = corpus_category("[1]")
    _, at0 = full_subcategory(C, [0])
    rep = is_equivalence(at0)
    assert not rep.passed
    assert rep.witness["object"] == "1"


def test_presheaf_action_must_be_functorial():
    C = corpus_category("Z/2")
    with pytest.raises(ValidationError):
        Presheaf.from_labels(C, {"*": ["x", "y"]}, {"t": {"x": "x", "y": "x"}})


def test_natural_transformations_count():
    # maps from Hom(-,1) to F on [1] correspond to elements of F(1)
    C = corpus_category("[1]")
    F = _fork()
    assert len(list(natural_transformations(representable(C, 1), F))) == 2
    assert presheaf_isomorphism(F, F) is not None
    assert presheaf_isomorphism(F, constant_presheaf(C, ["*"])) is None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_generated_categories_and_presheaves_validate(seed):
    C = random_category(seed)
    C.validate()
    F = random_presheaf(C, seed)
    F.validate()
    # the colimit is the set of components of the category of elements
    El, _ = elements_oracle(F)
    assert len(colim_oracle(F)) == len(pi0(El.nerve(1)))
