from __future__ import annotations

import pytest

from segalfib.cartesian import embed_constant
from segalfib.grothendieck import grothendieck
from segalfib.qcat import (
    fibered_i1,
    horn_contains_face,
    horn_factorization,
    i1_star,
    identity_classification_check,
    p1_star,
    quasicat_check,
    quasicat_nerve,
    right_horn_certificate,
)
from segalfib.simplicial import boundary, e_groupoid, standard_simplex


@pytest.mark.parametrize("X", [standard_simplex(2, 3), e_groupoid(3), boundary(2, 3)], ids=["Delta2", "E", "bd2"])
def test_i1_p1_round_trip(X):
    Y = i1_star(p1_star(X, 2))
    assert Y.labels == X.labels
    assert Y.faces == X.faces


def test_i1_of_constant_grothendieck(corpus_presheaf):
    G = grothendieck(corpus_presheaf, 2)
    P = embed_constant(G, 2)
    assert i1_star(P.total).labels == G.total.labels
    assert fibered_i1(P).total.labels == G.total.labels


def test_classification_column_is_nerve(corpus_cat):
    assert identity_classification_check(corpus_cat, 3).passed


def test_right_horn_certificate(corpus_presheaf):
    rep = right_horn_certificate(corpus_presheaf, 4)
    assert rep.passed


def test_quasicat_examples(corpus_cat):
    rep = quasicat_nerve(corpus_cat, 4)
    assert rep.passed and rep.details["unique"]


def test_quasicat_small():
    assert not quasicat_check(boundary(2, 3), 3).passed
    assert quasicat_check(e_groupoid(4), 4).passed


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_horn_factorization(n):
    rep = horn_factorization(n)
    assert rep.passed, rep.witness


def test_horn_contains_faces():
    for n in range(1, 5):
        assert horn_contains_face(n, 0, n)
        assert not horn_contains_face(n, 0, 0)
        for i in range(1, n + 1):
            assert horn_contains_face(n, 0, i)
