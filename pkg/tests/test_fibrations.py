from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segalfib.category import CORPUS_NAMES, corpus_category, cyclic_group, corpus_presheaves, elements_oracle, full_subcategory, over_category
from segalfib.errors import PreconditionError, ResourceError
from segalfib.fibered import FiberedComplex
from segalfib.fibrations import (
    dwyer_kan_check,
    fiberwise_weq,
    ho_category,
    homotopy_equivalences,
    horn_indices,
    horn_lift_check,
    is_complete,
    is_conservative,
    is_fiberwise_complete,
    mor_set,
    over_object,
    quasicat_check,
    revalidate_horn_witness,
    revalidate_rightfib_pass,
    revalidate_rightfib_witness,
    revalidate_segal_witness,
    right_fibration_check,
    segal_check,
    terminal_objects,
    to_point,
    yoneda_check,
)
from segalfib.generate import mutated_nerve, random_complex_map
from segalfib.grothendieck import grothendieck
from segalfib.simplicial import SimplicialMap, boundary, e_groupoid, pullback, standard_simplex

MODES = ("square", "cond2", "cond3")


def test_segal_examples():
    assert segal_check(standard_simplex(3, 4)).passed
    rep = segal_check(boundary(2, 3))
    assert not rep.passed and rep.witness["n"] == 2
    assert revalidate_segal_witness(boundary(2, 3), rep.witness)


def test_right_fibration_fail_fixture():
    # Delta[1] -> Delta[0]: three edges but only two pairs (vertex, base edge)
    p = to_point(standard_simplex(1, 3))
    for mode in MODES:
        rep = right_fibration_check(p, mode)
        assert not rep.passed
        assert revalidate_rightfib_witness(p, rep.witness)


def test_grothendieck_is_right_fibration(corpus_presheaf):
    p = grothendieck(corpus_presheaf, 3).projection
    for mode in MODES:
        rep = right_fibration_check(p, mode)
        assert rep.passed
    assert revalidate_rightfib_pass(p, right_fibration_check(p, "cond2").witness, "cond2")
    assert revalidate_rightfib_pass(p, right_fibration_check(p, "cond3").witness, "cond3")


def test_over_category_forgetful_is_right_fibration(corpus_cat):
    for c in range(corpus_cat.n_objects):
        S, forget = over_category(corpus_cat, c)
        assert right_fibration_check(forget.nerve_map(3)).passed


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000))
def test_modes_agree(seed):
    _, p = random_complex_map(seed)
    verdicts = {right_fibration_check(p, m).passed for m in MODES}
    assert len(verdicts) == 1


def test_base_change_stability():
    C = corpus_category("square")
    F = next(F for F in corpus_presheaves(C) if F.name == "mixed")
    GF = grothendieck(F, 3)
    for keep in ([0, 1], [1, 3], [0, 2, 3]):
        _, j = full_subcategory(C, keep)
        jn = j.nerve_map(3)
        jn = SimplicialMap(jn.domain, GF.base, jn.levels)
        P, pr_base, _ = pullback(jn, GF.projection)
        assert right_fibration_check(pr_base).passed


def test_composition_laws():
    C = corpus_category("square")
    F = next(F for F in corpus_presheaves(C) if F.name == "mixed")
    El, p = elements_oracle(F)
    g = p.nerve_map(3)
    for x in range(El.n_objects):
        S, forget = over_category(El, x)
        f = forget.nerve_map(3)
        assert f.codomain is g.domain
        gf = f.then(g)
        assert right_fibration_check(f).passed and right_fibration_check(g).passed
        assert right_fibration_check(gf).passed
    # g and g f pass, so f passes; f and g f pass with f surjective on vertices, so g passes
    ident = El.nerve(3)
    f = SimplicialMap.identity(ident)
    assert right_fibration_check(f.then(g)).passed and right_fibration_check(f).passed


def test_horn_examples(corpus_presheaf):
    p = grothendieck(corpus_presheaf, 4).projection
    assert horn_lift_check(p, "right", require_unique=True, max_dim=4).passed


def test_inner_horns_on_nerves(corpus_cat):
    rep = quasicat_check(corpus_cat.nerve(4), 4)
    assert rep.passed and rep.details["unique"]


def test_boundary_fails_inner_horn_with_witness():
    p = to_point(boundary(2, 3))
    rep = horn_lift_check(p, "inner", max_dim=2)
    assert not rep.passed
    assert revalidate_horn_witness(p, rep.witness)
    assert not quasicat_check(boundary(2, 3), 2).passed
    assert quasicat_check(e_groupoid(4), 4).passed


def test_orientation_flips_verdict():
    # N(C/0) -> N([1]) is the vertex 0: a right fibration but not its mirror
    C = corpus_category("[1]")
    _, forget = over_category(C, 0)
    p = forget.nerve_map(3)
    assert horn_lift_check(p, "right", True, 3, "paper").passed
    assert not horn_lift_check(p, "right", True, 3, "mirror").passed
    _, at1 = full_subcategory(C, [1])
    q = at1.nerve_map(3)
    assert not horn_lift_check(q, "right", True, 3, "paper").passed
    assert horn_lift_check(q, "right", True, 3, "mirror").passed
    assert horn_indices(3, "right", "paper") == [0]
    assert horn_indices(3, "right", "mirror") == [3]
    assert horn_indices(3, "left", "paper") == [3]
    assert horn_indices(4, "inner") == [1, 2, 3]


def test_horn_budget():
    with pytest.raises(ResourceError):
        horn_lift_check(to_point(standard_simplex(1, 2)), "inner", max_dim=3)


def test_mor_set_and_homotopy_category():
    N1 = corpus_category("[1]").nerve(3)
    assert len(mor_set(N1, N1.index(0, N1.labels[0][0]), N1.index(0, N1.labels[0][1]))) == 1
    for name in ("square", "E", "Z/2"):
        C = corpus_category(name)
        H = ho_category(C.nerve(3))
        assert (H.n_objects, H.n_morphisms) == (C.n_objects, C.n_morphisms)
    # every edge of N(E) is invertible: 2 identities and 2 isomorphisms
    assert len(homotopy_equivalences(corpus_category("E").nerve(3))) == 4


def test_completeness():
    assert is_complete(corpus_category("square").nerve(3)).passed
    assert not is_complete(corpus_category("E").nerve(3)).passed
    for F in corpus_presheaves(corpus_category("E")):
        p = grothendieck(F, 3).projection
        assert is_conservative(p).passed
        assert is_fiberwise_complete(p).passed


def test_non_conservative():
    p = to_point(corpus_category("[1]").nerve(3))
    assert not is_conservative(p).passed


def test_dwyer_kan_examples():
    E = corpus_category("E")
    _, incl = full_subcategory(E, [0])
    assert dwyer_kan_check(incl.nerve_map(3)).passed
    C = corpus_category("[1]")
    _, at0 = full_subcategory(C, [0])
    rep = dwyer_kan_check(at0.nerve_map(3))
    assert not rep.passed
    assert rep.witness["reason"] == "not essentially surjective"
    with pytest.raises(PreconditionError):
        dwyer_kan_check(to_point(boundary(2, 3)))


def test_fiberwise_weq():
    C = corpus_category("[1]")
    F = next(F for F in corpus_presheaves(C) if F.name == "fork")
    pt = next(F for F in corpus_presheaves(C) if F.name == "point")
    GF, GP = grothendieck(F, 3), grothendieck(pt, 3)
    # collapse the fiber {b, c} to the point
    f = SimplicialMap.from_function(GF.total, GP.total, lambda k, lab: (lab[0], 0))
    assert not fiberwise_weq(f, GF.projection, GP.projection).passed
    ident = SimplicialMap.identity(GF.total)
    assert fiberwise_weq(ident, GF.projection, GF.projection).passed


def test_over_object_and_terminal():
    C = corpus_category("[1]")
    N = C.nerve(3)
    one = N.index(0, N.labels[0][1])
    XK = over_object(N, [one], 2)
    assert XK.total.sizes() == C.nerve(2).sizes()
    assert terminal_objects(N) == [one]
    assert right_fibration_check(XK.projection).passed


def test_yoneda(corpus_presheaf):
    G = grothendieck(corpus_presheaf, 3)
    for c in range(corpus_presheaf.base.n_objects):
        rep = yoneda_check(FiberedComplex(G.total, G.base, G.projection, category=corpus_presheaf.base), c)
        assert rep.passed


@pytest.mark.parametrize("seed", range(5))
def test_mutated_composition_breaks_segal(seed):
    M, info = mutated_nerve(cyclic_group(3), seed)
    rep = segal_check(M)
    assert not rep.passed and rep.witness["n"] == 3
    assert revalidate_segal_witness(M, rep.witness)


def test_corpus_mutations_stay_segal_or_do_not_exist():
    # a one-entry change that keeps endpoints never breaks associativity here
    for name in CORPUS_NAMES:
        try:
            M, _ = mutated_nerve(corpus_category(name))
        except ValueError:
            continue
        assert segal_check(M).passed


@pytest.mark.parametrize("seed", range(40))
def test_mutants_are_not_right_fibrations(seed):
    kind, p = random_complex_map(seed)
    p.validate()
    if kind == "mutant":
        assert not right_fibration_check(p).passed
