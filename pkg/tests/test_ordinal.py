from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from segalfib.ordinal import (
    OrdinalMap,
    compose,
    degeneracy,
    epi_mono,
    face,
    factorize,
    from_generators,
    identity,
    injective_maps,
    monotone_maps,
    special_map,
    surjective_maps,
)


@st.composite
def ordinal_maps(draw, max_dim=6):
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    vals = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return OrdinalMap(m, n, tuple(vals))


def test_rejects_non_monotone_and_out_of_range():
    with pytest.raises(ValueError):
        OrdinalMap(1, 1, (1, 0))
    with pytest.raises(ValueError):
        OrdinalMap(0, 1, (2,))
    with pytest.raises(ValueError):
        OrdinalMap(1, 1, (0,))


def test_compose_examples():
    assert compose(identity(2), identity(2)) == identity(2)
    # d^0 into [1] then d^0 into [2]: 0 -> 1 -> 2
    assert compose(face(1, 0), face(2, 0)).values == (2,)
    # s^0 onto [0] then d^0 into [1]: both points land on 1
    assert compose(degeneracy(0, 0), face(1, 0)).values == (1, 1)
    with pytest.raises(ValueError):
        compose(face(1, 0), face(1, 0))


def maps_from(m: int, max_dim=6):
    return st.integers(0, max_dim).flatmap(
        lambda n: st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1).map(
            lambda vals: OrdinalMap(m, n, tuple(sorted(vals)))
        )
    )


@given(ordinal_maps(), st.data())
def test_compose_associative_and_unital(f, data):
    g = data.draw(maps_from(f.target_dim))
    h = data.draw(maps_from(g.target_dim))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(identity(f.source_dim), f) == f == compose(f, identity(f.target_dim))


def test_simplicial_identities_to_dim_6():
    top = 6
    for n in range(2, top + 1):
        for j in range(n + 1):
            for i in range(j):
                # d^j d^i = d^i d^{j-1}
                assert compose(face(n - 1, i), face(n, j)) == compose(face(n - 1, j - 1), face(n, i))
    for n in range(0, top - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                # s^j s^i = s^i s^{j+1}
                assert compose(degeneracy(n + 1, i), degeneracy(n, j)) == compose(degeneracy(n + 1, j + 1), degeneracy(n, i))
    for n in range(0, top):
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


def test_factorize_examples():
    assert factorize(identity(3)) == ([], [])
    assert factorize(OrdinalMap(2, 1, (0, 0, 1))) == ([0], [])
    degs, faces = factorize(OrdinalMap(0, 2, (1,)))
    assert degs == []
    assert from_generators(0, degs, faces).values == (1,)


def test_factorize_round_trip_exhaustive_to_5():
    for m in range(6):
        for n in range(6):
            for f in monotone_maps(m, n):
                degs, faces = factorize(f)
                assert all(a > b for a, b in zip(degs, degs[1:]))
                assert all(a < b for a, b in zip(faces, faces[1:]))
                assert from_generators(m, degs, faces) == f


@given(ordinal_maps())
def test_epi_mono(f):
    e, m = epi_mono(f)
    assert e.is_surjective and m.is_injective
    assert compose(e, m) == f


def test_map_counts():
    assert len(list(monotone_maps(1, 1))) == 3
    assert len(list(injective_maps(1, 2))) == 3
    assert len(list(surjective_maps(3, 1))) == 3


def test_special_maps():
    assert special_map("gamma", m=2, n=1).values == (0, 1)
    assert special_map("gamma", m=2, n=1).target_dim == 4
    assert special_map("a_n", n=3) == OrdinalMap(0, 3, (0,))
    assert special_map("extend_J", j=identity(1), m=1, n=1) == identity(3)
    assert special_map("beta", m=1, n=2).values == (3, 4)
    assert special_map("alpha_i", n=3, i=1).values == (1, 2)
    with pytest.raises(ValueError):
        special_map("alpha_i", n=2, i=2)
    with pytest.raises(ValueError):
        special_map("nope")


def test_gamma_and_beta_formula_to_4():
    for m in range(5):
        for n in range(5):
            g = special_map("gamma", m=m, n=n)
            b = special_map("beta", m=m, n=n)
            assert all(g(i) == i for i in range(n + 1))
            assert all(b(i) == n + 1 + i for i in range(m + 1))
            # the two images split [m+n+1]
            assert sorted(g.values + b.values) == list(range(m + n + 2))
