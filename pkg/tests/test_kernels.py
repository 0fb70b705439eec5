from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from segalfib import kernels
from segalfib.category import corpus_category, corpus_presheaves
from segalfib.grothendieck import grothendieck
from segalfib.simplicial import SimplicialMap, boundary, enumerate_maps, horn, pi0, product, standard_simplex

compiled = pytest.mark.skipif("compiled" not in kernels.available_backends(), reason="extension not built")


def _maps(Y, X, **kw):
    count, rows = enumerate_maps(Y, X, **kw)
    return count, None if rows is None else np.asarray(rows).tolist()


def test_python_backend_always_available():
    assert "python" in kernels.available_backends()
    with kernels.use_backend("python"):
        assert kernels.backend_name() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


@compiled
@pytest.mark.parametrize("Y,X", [
    (horn(2, 1), standard_simplex(2)),
    (boundary(2), product(standard_simplex(1, 2), standard_simplex(1, 2))),
    (standard_simplex(2), product(standard_simplex(2), standard_simplex(1, 2))),
    (horn(3, 0), standard_simplex(3)),
])
def test_enumerate_maps_parity(Y, X):
    with kernels.use_backend("python"):
        a = _maps(Y, X)
    with kernels.use_backend("compiled"):
        b = _maps(Y, X)
    assert a == b and a[0] > 0
    with kernels.use_backend("compiled"):
        assert _maps(Y, X, limit=1, store=False) == (1, None)


@compiled
@pytest.mark.parametrize("name", ["[2]", "square", "E", "poset2x2"])
def test_relative_maps_parity(name):
    C = corpus_category(name)
    for F in corpus_presheaves(C):
        G = grothendieck(F, 2)
        kw = dict(base_domain=SimplicialMap.identity(G.base), base_codomain=G.projection)
        with kernels.use_backend("python"):
            a = _maps(G.base, G.total, **kw)
        with kernels.use_backend("compiled"):
            b = _maps(G.base, G.total, **kw)
        assert a == b


@compiled
@settings(max_examples=50, deadline=None)
@given(st.integers(1, 40), st.lists(st.tuples(st.integers(0, 39), st.integers(0, 39)), max_size=60))
def test_components_parity(n, edges):
    edges = [(a % n, b % n) for a, b in edges]
    src = np.array([a for a, _ in edges], dtype=np.int64)
    tgt = np.array([b for _, b in edges], dtype=np.int64)
    with kernels.use_backend("python"):
        a = kernels.components(n, src, tgt)
    with kernels.use_backend("compiled"):
        b = kernels.components(n, src, tgt)
    assert a.tolist() == b.tolist()
    assert all(a[v] <= v for v in range(n))


@pytest.mark.parametrize("backend", ["python", pytest.param("compiled", marks=compiled)])
def test_pi0_per_backend(backend):
    X = product(standard_simplex(1), standard_simplex(1))
    with kernels.use_backend(backend):
        assert pi0(X) == [[0, 1, 2, 3]]
        assert len(pi0(boundary(1))) == 2
