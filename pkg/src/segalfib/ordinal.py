"""Monotone maps between finite ordinals, i.e. the arrows of the simplex category."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence


@dataclass(frozen=True)
class OrdinalMap:
    """A weakly increasing map ``[source_dim] -> [target_dim]``.

    Stored as its value table, so two maps are equal exactly when their
    tables agree.
    """

    source_dim: int
    target_dim: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if self.source_dim < 0 or self.target_dim < 0:
            raise ValueError("ordinal dimensions must be non-negative")
        if len(values) != self.source_dim + 1:
            raise ValueError(
                f"map out of [{self.source_dim}] needs {self.source_dim + 1} values, got {len(values)}"
            )
        for v in values:
            if not 0 <= v <= self.target_dim:
                raise ValueError(f"value {v} outside [{self.target_dim}]")
        for a, b in zip(values, values[1:]):
            if a > b:
                raise ValueError(f"values {values} are not weakly increasing")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __repr__(self) -> str:
        return f"OrdinalMap([{self.source_dim}]->[{self.target_dim}], {self.values})"

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.target_dim + 1))

    @property
    def is_identity(self) -> bool:
        return self.source_dim == self.target_dim and self.values == tuple(range(self.source_dim + 1))

    def then(self, other: "OrdinalMap") -> "OrdinalMap":
        """``other ∘ self``."""
        return compose(self, other)


def identity(n: int) -> OrdinalMap:
    return OrdinalMap(n, n, tuple(range(n + 1)))


def compose(f: OrdinalMap, g: OrdinalMap) -> OrdinalMap:
    """Return ``g ∘ f`` (apply ``f`` first)."""
    if f.target_dim != g.source_dim:
        raise ValueError(
            f"cannot compose [{f.source_dim}]->[{f.target_dim}] with [{g.source_dim}]->[{g.target_dim}]"
        )
    return OrdinalMap(f.source_dim, g.target_dim, tuple(g.values[v] for v in f.values))


@lru_cache(maxsize=None)
def face(n: int, i: int) -> OrdinalMap:
    """The coface ``d^i: [n-1] -> [n]`` skipping ``i``."""
    if n < 1 or not 0 <= i <= n:
        raise ValueError(f"no face d^{i} into [{n}]")
    return OrdinalMap(n - 1, n, tuple(j if j < i else j + 1 for j in range(n)))


@lru_cache(maxsize=None)
def degeneracy(n: int, i: int) -> OrdinalMap:
    """The codegeneracy ``s^i: [n+1] -> [n]`` hitting ``i`` twice."""
    if n < 0 or not 0 <= i <= n:
        raise ValueError(f"no degeneracy s^{i} onto [{n}]")
    return OrdinalMap(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 2)))


def factorize(f: OrdinalMap) -> tuple[list[int], list[int]]:
    """Epi-mono factorization as generator words, in order of application.

    Returns ``(degeneracy_indices, face_indices)``: apply ``s^j`` for the
    degeneracy indices left to right (strictly decreasing), then ``d^i``
    for the face indices left to right (strictly increasing).
    """
    vals = f.values
    degs = [j for j in range(f.source_dim) if vals[j] == vals[j + 1]]
    degs.reverse()
    image = set(vals)
    faces = [k for k in range(f.target_dim + 1) if k not in image]
    return degs, faces


def from_generators(source_dim: int, degeneracy_indices: Sequence[int], face_indices: Sequence[int]) -> OrdinalMap:
    """Rebuild a map from the words returned by :func:`factorize`."""
    result = identity(source_dim)
    dim = source_dim
    for j in degeneracy_indices:
        result = compose(result, degeneracy(dim - 1, j))
        dim -= 1
    for i in face_indices:
        result = compose(result, face(dim + 1, i))
        dim += 1
    return result


def epi_mono(f: OrdinalMap) -> tuple[OrdinalMap, OrdinalMap]:
    """Split ``f`` as ``mono ∘ epi`` with ``epi`` surjective and ``mono`` injective."""
    image = sorted(set(f.values))
    pos = {v: k for k, v in enumerate(image)}
    epi = OrdinalMap(f.source_dim, len(image) - 1, tuple(pos[v] for v in f.values))
    mono = OrdinalMap(len(image) - 1, f.target_dim, tuple(image))
    return epi, mono


def monotone_maps(m: int, n: int) -> Iterator[OrdinalMap]:
    """All monotone maps ``[m] -> [n]`` in lexicographic order of values."""
    for vals in combinations_with_replacement(range(n + 1), m + 1):
        yield OrdinalMap(m, n, vals)


def injective_maps(m: int, n: int) -> Iterator[OrdinalMap]:
    for vals in combinations(range(n + 1), m + 1):
        yield OrdinalMap(m, n, vals)


def surjective_maps(m: int, n: int) -> Iterator[OrdinalMap]:
    for f in monotone_maps(m, n):
        if f.is_surjective:
            yield f


def special_map(name: str, **params: int) -> OrdinalMap:
    """Named maps used by the constructions.

    ``alpha_i(n, i)``: ``[1] -> [n]`` sending ``0 < 1`` to ``i < i+1``.
    ``a_n(n)``: ``[0] -> [n]`` picking ``0``.
    ``face(n, i)`` / ``degeneracy(n, i)``: the generators.
    ``gamma(m, n)``: ``[n] -> [m+n+1]``, the identity on values.
    ``beta(m, n)``: ``[m] -> [m+n+1]``, ``i -> n+1+i``.
    ``extend_J(j, m, n)``: ``[m+n+1] -> [m'+n+1]``, identity on ``0..n``
    and ``j`` shifted by ``n+1`` above.
    """
    if name == "alpha_i":
        n, i = params["n"], params["i"]
        if not 0 <= i <= n - 1:
            raise ValueError(f"alpha_i needs 0 <= i <= n-1, got i={i}, n={n}")
        return OrdinalMap(1, n, (i, i + 1))
    if name == "a_n":
        n = params["n"]
        if n < 0:
            raise ValueError("a_n needs n >= 0")
        return OrdinalMap(0, n, (0,))
    if name == "face":
        return face(params["n"], params["i"])
    if name == "degeneracy":
        return degeneracy(params["n"], params["i"])
    if name == "gamma":
        m, n = params["m"], params["n"]
        _check_mn(m, n)
        return OrdinalMap(n, m + n + 1, tuple(range(n + 1)))
    if name == "beta":
        m, n = params["m"], params["n"]
        _check_mn(m, n)
        return OrdinalMap(m, m + n + 1, tuple(n + 1 + i for i in range(m + 1)))
    if name == "extend_J":
        j, m, n = params["j"], params["m"], params["n"]
        _check_mn(m, n)
        if not isinstance(j, OrdinalMap) or j.source_dim != m:
            raise ValueError(f"extend_J needs an OrdinalMap out of [{m}]")
        mp = j.target_dim
        vals = tuple(range(n + 1)) + tuple(n + 1 + j.values[i] for i in range(m + 1))
        return OrdinalMap(m + n + 1, mp + n + 1, vals)
    raise ValueError(f"unknown special map {name!r}")


def _check_mn(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ValueError(f"parameters must be non-negative, got m={m}, n={n}")
