"""Acceptance criteria 1-12; each test prints one ``criterion N: pass|fail`` line."""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager

import pytest

from segalfib.cartesian import cartesian_check, compare_box, grothendieck_cat
from segalfib.category import (
    CORPUS_NAMES,
    corpus_category,
    corpus_presheaves,
    colim_oracle,
    cyclic_group,
    full_subcategory,
    lim_oracle,
    natural_transformations,
    over_category,
    presheaf_isomorphism,
    representable,
)
from segalfib.errors import PreconditionError
from segalfib.fibered import FiberedComplex
from segalfib.fibrations import (
    horn_lift_check,
    revalidate_segal_witness,
    right_fibration_check,
    segal_check,
    yoneda_check,
)
from segalfib.generate import (
    mutated_nerve,
    random_cat_presheaf,
    random_complex_map,
    random_equivalence,
    random_fibration,
    random_kan_pair,
    random_non_equivalence,
)
from segalfib.grothendieck import (
    G_map,
    check_left_adjunction,
    check_naturality_L,
    check_naturality_R,
    check_right_adjunction,
    counit,
    explicit_L_comparison,
    grothendieck,
    left_adjoint_L,
    nerve_over_complex,
    unit,
    vertex_complex,
)
from segalfib.kan import dk_invariance_probe, hocolim, kan_extend, lan_oracle, sections
from segalfib.ordinal import compose, degeneracy, face, factorize, from_generators, identity, monotone_maps
from segalfib.qcat import quasicat_nerve, right_horn_certificate
from segalfib.simplicial import product, standard_simplex
from segalfib.workbench import load_fixture

MODES = ("square", "cond2", "cond3")


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(n: int):
        ok = False
        try:
            yield
            ok = True
        finally:
            with capsys.disabled():
                print(f"\ncriterion {n}: {'pass' if ok else 'fail'}")

    return run


def _corpus():
    for name in CORPUS_NAMES:
        C = corpus_category(name)
        for F in corpus_presheaves(C):
            yield C, F


def test_criterion_01_segal_strictness(criterion):
    with criterion(1):
        for name in CORPUS_NAMES:
            assert segal_check(corpus_category(name).nerve(5)).passed, name
        M, info = mutated_nerve(cyclic_group(3))
        rep = segal_check(M)
        assert not rep.passed, info
        assert revalidate_segal_witness(M, rep.witness)


def test_criterion_02_mode_agreement(criterion):
    with criterion(2):
        kinds = Counter()
        for seed in range(200):
            kind, p = random_complex_map(seed)
            verdicts = {right_fibration_check(p, m).passed for m in MODES}
            assert len(verdicts) == 1, (seed, kind)
            kinds[(kind, verdicts.pop())] += 1
        assert {k for k, _ in kinds} >= {"grothendieck", "product", "mutant"}
        assert any(v for _, v in kinds) and not all(v for _, v in kinds)


def test_criterion_03_adjunctions(criterion):
    with criterion(3):
        for name in CORPUS_NAMES:
            C = corpus_category(name)
            Fs = corpus_presheaves(C)
            for F in Fs:
                GF = grothendieck(F, 2)
                for c in range(C.n_objects):
                    assert check_left_adjunction(vertex_complex(C, c, 2), F).passed, (name, F.name, c)
                    assert check_right_adjunction(F, nerve_over_complex(C, c, 2)).passed, (name, F.name, c)
                    assert check_right_adjunction(representable(C, c), GF).passed, (name, F.name, c)
            probes = [(A, B, nu) for A in Fs for B in Fs if A is not B for nu in list(natural_transformations(A, B))[:1]]
            assert len(probes) >= 3, name
            for A, B, nu in probes[:6]:
                GA, GB = grothendieck(A, 2), grothendieck(B, 2)
                k = G_map(nu, GA, GB)
                assert check_naturality_L(k, GA, GB, nu, A, B).passed, (name, A.name, B.name)
                assert check_naturality_R(nu, A, B, k, GA, GB).passed, (name, A.name, B.name)


def test_criterion_04_unit_and_counit(criterion):
    with criterion(4):
        for C, F in _corpus():
            eta, _ = unit(grothendieck(F, 3))
            assert eta.is_levelwise_bijective(), (C.name, F.name)
            comps, LGF = counit(F)
            assert all(sorted(row) == list(range(F.size(c))) for c, row in enumerate(comps))
            assert presheaf_isomorphism(LGF, F) is not None
        for seed in range(100):
            eta, _ = unit(random_fibration(seed))
            assert eta.is_levelwise_bijective(), seed


def test_criterion_05_explicit_L(criterion):
    with criterion(5):
        for C, F in _corpus():
            X = grothendieck(F, 2)
            for c in range(C.n_objects):
                assert explicit_L_comparison(X, c).passed, (C.name, F.name, c)


def test_criterion_06_yoneda(criterion):
    with criterion(6):
        for C, F in _corpus():
            G = grothendieck(F, 3)
            Z = FiberedComplex(G.total, G.base, G.projection, category=C)
            for c in range(C.n_objects):
                assert yoneda_check(Z, c).passed, (C.name, F.name, c)


def test_criterion_07_kan_extension(criterion):
    with criterion(7):
        for seed in range(50):
            i, F = random_kan_pair(seed)
            K = kan_extend(grothendieck(F, 2), i)
            assert right_fibration_check(K.projection).passed, seed
            assert presheaf_isomorphism(left_adjoint_L(K), lan_oracle(F, i)) is not None, seed
        wb = load_fixture("interval")
        at0, point = wb.get("at0"), wb.get("point")
        K = kan_extend(grothendieck(point, 2), at0)
        assert right_fibration_check(K.projection).passed
        L = left_adjoint_L(K)
        assert [L.size(c) for c in range(2)] == [1, 0]


def test_criterion_08_colimits_and_limits(criterion):
    with criterion(8):
        for C, F in _corpus():
            X = grothendieck(F, 3)
            assert len(hocolim(X)) == len(colim_oracle(F)), (C.name, F.name)
            assert len(sections(X)) == len(lim_oracle(F)), (C.name, F.name)
        fork = load_fixture("interval").get("fork")
        X = grothendieck(fork, 3)
        assert (len(hocolim(X)), len(sections(X))) == (1, 2)
        assert (len(colim_oracle(fork)), len(lim_oracle(fork))) == (1, 2)


def test_criterion_09_horns(criterion):
    with criterion(9):
        for C, F in _corpus():
            assert right_horn_certificate(F, 4).passed, (C.name, F.name)
        for name in CORPUS_NAMES:
            rep = quasicat_nerve(corpus_category(name), 4)
            assert rep.passed and rep.details["unique"], name
        C = corpus_category("[1]")
        _, forget = over_category(C, 0)
        p = forget.nerve_map(3)
        assert horn_lift_check(p, "right", True, 3, "paper").passed
        assert not horn_lift_check(p, "right", True, 3, "mirror").passed
        _, at1 = full_subcategory(C, [1])
        q = at1.nerve_map(3)
        assert not horn_lift_check(q, "right", True, 3, "paper").passed
        assert horn_lift_check(q, "right", True, 3, "mirror").passed


def test_criterion_10_cartesian(criterion):
    with criterion(10):
        for seed in range(20):
            rep = cartesian_check(grothendieck_cat(random_cat_presheaf(seed), 2, 2))
            assert rep.passed, (seed, rep.witness)
        for name in CORPUS_NAMES:
            C = corpus_category(name)
            N = C.nerve(1)
            for m in range(2):
                for s in N.labels[m]:
                    for n in range(3):
                        assert compare_box(C, s, n, 2).passed, (name, s, n)


def test_criterion_11_invariance(criterion):
    with criterion(11):
        E = corpus_category("E")
        _, incl = full_subcategory(E, [0])
        fibs = [grothendieck(F, 2) for F in corpus_presheaves(incl.source)]
        assert dk_invariance_probe(incl, fibs).passed
        for seed in range(10):
            i = random_equivalence(seed)
            fibs = [grothendieck(F, 2) for F in corpus_presheaves(i.source)]
            assert dk_invariance_probe(i, fibs).passed, seed
        for seed in range(10):
            i = random_non_equivalence(seed)
            with pytest.raises(PreconditionError):
                dk_invariance_probe(i, [grothendieck(representable(i.source, 0), 2)] if i.source.n_objects else [])


def test_criterion_12_engine_self_checks(criterion):
    with criterion(12):
        top = 6
        for n in range(2, top + 1):
            for j in range(n + 1):
                for i in range(j):
                    assert compose(face(n - 1, i), face(n, j)) == compose(face(n - 1, j - 1), face(n, i))
        for n in range(top - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    assert compose(degeneracy(n + 1, i), degeneracy(n, j)) == compose(degeneracy(n + 1, j + 1), degeneracy(n, i))
        for n in range(top):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = compose(face(n + 1, i), degeneracy(n, j))
                    if i < j:
                        rhs = compose(degeneracy(n - 1, j - 1), face(n, i))
                    elif i in (j, j + 1):
                        rhs = identity(n)
                    else:
                        rhs = compose(degeneracy(n - 1, j), face(n, i - 1))
                    assert lhs == rhs
        for m in range(6):
            for n in range(6):
                for f in monotone_maps(m, n):
                    degs, faces = factorize(f)
                    assert from_generators(m, degs, faces) == f
        X = standard_simplex(2, 5)
        for k in range(6):
            for x in range(X.size(k)):
                sigma, p, y = X.normal_form(k, x)
                assert X.act(sigma, y) == x and not X.is_degenerate(p, y)
        P = product(standard_simplex(1, 2), standard_simplex(1, 2))
        assert P.nondegenerate_counts()[2] == 2
