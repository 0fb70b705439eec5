from __future__ import annotations

import pytest

from segalfib.category import CORPUS_NAMES, corpus_category, corpus_presheaves


@pytest.fixture(params=CORPUS_NAMES)
def corpus_name(request):
    return request.param


@pytest.fixture
def corpus_cat(corpus_name):
    return corpus_category(corpus_name)


def corpus_pairs():
    """Every (category name, presheaf index) in the corpus."""
    return [(n, k) for n in CORPUS_NAMES for k in range(len(corpus_presheaves(corpus_category(n))))]


@pytest.fixture(params=corpus_pairs(), ids=lambda p: f"{p[0]}-{p[1]}")
def corpus_presheaf(request):
    name, k = request.param
    return corpus_presheaves(corpus_category(name))[k]
