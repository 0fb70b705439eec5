"""Finite, dimension-bounded simplicial and bisimplicial sets.

A :class:`SimplicialSet` stores every simplex up to ``max_dim`` together
with integer face and degeneracy tables.  Nondegenerate simplices and the
Eilenberg-Zilber normal form ``x = sigma^* y`` are derived from the tables;
:meth:`SimplicialSet.from_nondegenerate` builds a complex from exactly that
data, and the workbench format writes it back out.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from . import kernels
from .errors import ResourceError, ValidationError
from .ordinal import (
    OrdinalMap,
    compose,
    degeneracy,
    epi_mono,
    face,
    factorize,
    identity,
    monotone_maps,
)

Label = Hashable


@lru_cache(maxsize=4096)
def _words(theta: OrdinalMap) -> tuple[tuple[int, ...], tuple[int, ...]]:
    degs, faces = factorize(theta)
    return tuple(degs), tuple(faces)


class SimplicialSet:
    """A simplicial set truncated above ``max_dim``.

    ``faces[k][i][x]`` is the index of ``d_i x`` in level ``k-1`` and
    ``degens[k][i][x]`` the index of ``s_i x`` in level ``k+1``.
    """

    def __init__(
        self,
        max_dim: int,
        labels: Sequence[Sequence[Label]],
        faces: Sequence[Sequence[Sequence[int]]],
        degens: Sequence[Sequence[Sequence[int]]],
        name: str | None = None,
    ):
        if max_dim < 0:
            raise ValueError("max_dim must be non-negative")
        if len(labels) != max_dim + 1:
            raise ValueError(f"expected {max_dim + 1} levels of labels, got {len(labels)}")
        self.max_dim = max_dim
        self.labels: tuple[tuple[Label, ...], ...] = tuple(tuple(level) for level in labels)
        self.faces = tuple(tuple(tuple(row) for row in lvl) for lvl in faces)
        self.degens = tuple(tuple(tuple(row) for row in lvl) for lvl in degens)
        self.name = name
        self._index: list[dict[Label, int] | None] = [None] * (max_dim + 1)

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_action(
        cls,
        max_dim: int,
        levels: Callable[[int], Iterable[Label]],
        act: Callable[[OrdinalMap, Label], Label],
        name: str | None = None,
    ) -> "SimplicialSet":
        """Build from simplex enumerators and the action of generators.

        ``act(theta, x)`` must return ``theta^* x`` for a face or degeneracy
        ``theta`` whose target is the level of ``x``.
        """
        labels = [list(levels(k)) for k in range(max_dim + 1)]
        index = [{lab: i for i, lab in enumerate(level)} for level in labels]
        for k, idx in enumerate(index):
            if len(idx) != len(labels[k]):
                raise ValidationError(f"duplicate labels at level {k}")
        faces: list[list[list[int]]] = [[]]
        for k in range(1, max_dim + 1):
            rows = []
            for i in range(k + 1):
                th = face(k, i)
                rows.append([_lookup(index[k - 1], act(th, x), k - 1) for x in labels[k]])
            faces.append(rows)
        degens: list[list[list[int]]] = []
        for k in range(max_dim):
            rows = []
            for i in range(k + 1):
                th = degeneracy(k, i)
                rows.append([_lookup(index[k + 1], act(th, x), k + 1) for x in labels[k]])
            degens.append(rows)
        X = cls(max_dim, labels, faces, degens, name=name)
        X._index = index
        return X

    @classmethod
    def from_nondegenerate(
        cls,
        max_dim: int,
        simplices: Sequence[Sequence[tuple[Label, Sequence[tuple[OrdinalMap, Label]]]]],
        name: str | None = None,
    ) -> "SimplicialSet":
        """Expand Eilenberg-Zilber data into a full complex.

        ``simplices[p]`` lists ``(name, face_refs)`` for nondegenerate
        ``p``-simplices, where ``face_refs[i] = (sigma, y)`` says
        ``d_i = sigma^* y`` with ``sigma`` a surjection and ``y``
        nondegenerate.  Degenerate simplices are labelled ``(y, sigma.values)``.
        """
        nd_dim: dict[Label, int] = {}
        refs: dict[Label, tuple[tuple[OrdinalMap, Label], ...]] = {}
        for p, level in enumerate(simplices):
            for nm, fr in level:
                if nm in nd_dim:
                    raise ValidationError(f"duplicate nondegenerate simplex {nm!r}")
                nd_dim[nm] = p
                fr = tuple(fr)
                if p == 0 and fr:
                    raise ValidationError(f"vertex {nm!r} cannot have faces")
                if p > 0 and len(fr) != p + 1:
                    raise ValidationError(f"simplex {nm!r} of dimension {p} needs {p + 1} faces")
                refs[nm] = fr
        for nm, fr in refs.items():
            p = nd_dim[nm]
            for i, (sigma, y) in enumerate(fr):
                if y not in nd_dim:
                    raise ValidationError(f"face {i} of {nm!r} refers to unknown simplex {y!r}")
                if not sigma.is_surjective or sigma.source_dim != p - 1 or sigma.target_dim != nd_dim[y]:
                    raise ValidationError(
                        f"face {i} of {nm!r}: {sigma} is not a surjection [{p - 1}] -> [{nd_dim[y]}]"
                    )

        def to_label(sigma: OrdinalMap, y: Label) -> Label:
            return y if sigma.is_identity else (y, sigma.values)

        def act_nf(theta: OrdinalMap, sigma: OrdinalMap, y: Label) -> tuple[OrdinalMap, Label]:
            epi, mono = epi_mono(compose(theta, sigma))
            if mono.is_identity:
                return epi, y
            # mono = d^j o rest, so mono^* y = rest^* (d_j y)
            image = set(mono.values)
            j = next(v for v in range(mono.target_dim + 1) if v not in image)
            rest = OrdinalMap(mono.source_dim, mono.target_dim - 1,
                              tuple(v if v < j else v - 1 for v in mono.values))
            tau, z = refs[y][j]
            s2, z2 = act_nf(rest, tau, z)
            return compose(epi, s2), z2

        def levels(k: int):
            out = []
            for p in range(min(k, len(simplices) - 1) + 1):
                for nm, _ in simplices[p]:
                    for sigma in monotone_maps(k, p):
                        if sigma.is_surjective:
                            out.append(to_label(sigma, nm))
            return out

        def parse(k: int, lab: Label) -> tuple[OrdinalMap, Label]:
            if lab in nd_dim and nd_dim[lab] == k:
                return identity(k), lab
            y, vals = lab
            return OrdinalMap(k, nd_dim[y], vals), y

        def act(theta: OrdinalMap, lab: Label) -> Label:
            sigma, y = parse(theta.target_dim, lab)
            s2, y2 = act_nf(theta, sigma, y)
            return to_label(s2, y2)

        return cls.from_action(max_dim, levels, act, name=name)

    def eilenberg_zilber(self) -> list[list[tuple[Label, list[tuple[OrdinalMap, Label]]]]]:
        """Nondegenerate simplices with their faces in normal form, by dimension.

        The inverse of :meth:`from_nondegenerate` (up to labels of degenerate simplices).
        """
        out = []
        for k in range(self.dimension + 1):
            level = []
            for x in self.nondegenerate(k):
                refs = []
                if k > 0:
                    for i in range(k + 1):
                        sigma, p, y = self.normal_form(k - 1, self.faces[k][i][x])
                        refs.append((sigma, self.labels[p][y]))
                level.append((self.labels[k][x], refs))
            out.append(level)
        return out

    def extend(self, d: int) -> "SimplicialSet":
        """Raise ``max_dim`` to ``d`` by adding only degenerate simplices."""
        if d <= self.max_dim:
            return self.truncate(d)
        return SimplicialSet.from_nondegenerate(d, self.eilenberg_zilber(), name=self.name)

    # ------------------------------------------------------------------
    # access

    def size(self, k: int) -> int:
        return len(self.labels[k])

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.labels)

    def index(self, k: int, label: Label) -> int:
        idx = self._index[k]
        if idx is None:
            idx = {lab: i for i, lab in enumerate(self.labels[k])}
            self._index[k] = idx
        return idx[label]

    def has(self, k: int, label: Label) -> bool:
        try:
            self.index(k, label)
        except KeyError:
            return False
        return True

    def face(self, k: int, i: int, x: int) -> int:
        return self.faces[k][i][x]

    def degen(self, k: int, i: int, x: int) -> int:
        if k >= self.max_dim:
            raise ResourceError(f"s_{i} out of level {k} exceeds max_dim={self.max_dim}",
                                required=k + 1)
        return self.degens[k][i][x]

    def act(self, theta: OrdinalMap, x: int) -> int:
        """``theta^* x`` for ``theta: [m] -> [n]`` and ``x`` in level ``n``."""
        if theta.source_dim > self.max_dim:
            raise ResourceError(
                f"operator into level {theta.source_dim} exceeds max_dim={self.max_dim}",
                required=theta.source_dim,
            )
        degs, fcs = _words(theta)
        k = theta.target_dim
        for i in reversed(fcs):
            x = self.faces[k][i][x]
            k -= 1
        for j in reversed(degs):
            x = self.degens[k][j][x]
            k += 1
        return x

    def vertices_of(self, k: int, x: int) -> tuple[int, ...]:
        return tuple(self.act(OrdinalMap(0, k, (v,)), x) for v in range(k + 1))

    @cached_property
    def degenerate_flags(self) -> tuple[tuple[bool, ...], ...]:
        flags = [[False] * self.size(k) for k in range(self.max_dim + 1)]
        for k in range(self.max_dim):
            for row in self.degens[k]:
                for y in row:
                    flags[k + 1][y] = True
        return tuple(tuple(f) for f in flags)

    def is_degenerate(self, k: int, x: int) -> bool:
        return self.degenerate_flags[k][x]

    def nondegenerate(self, k: int) -> list[int]:
        flags = self.degenerate_flags[k]
        return [x for x in range(self.size(k)) if not flags[x]]

    def nondegenerate_counts(self) -> tuple[int, ...]:
        counts = [len(self.nondegenerate(k)) for k in range(self.max_dim + 1)]
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        return tuple(counts)

    @property
    def dimension(self) -> int:
        """Top dimension carrying a nondegenerate simplex (within ``max_dim``)."""
        return len(self.nondegenerate_counts()) - 1

    def normal_form(self, k: int, x: int) -> tuple[OrdinalMap, int, int]:
        """Return ``(sigma, p, y)`` with ``x = sigma^* y`` and ``y`` nondegenerate."""
        sigma = identity(k)
        while True:
            j = self._degeneracy_witness(k, x)
            if j is None:
                return sigma, k, x
            x = self.faces[k][j][x]
            sigma = compose(sigma, degeneracy(k - 1, j))
            k -= 1

    def _degeneracy_witness(self, k: int, x: int) -> int | None:
        if k == 0 or not self.degenerate_flags[k][x]:
            return None
        for j in range(k):
            y = self.faces[k][j][x]
            if self.degens[k - 1][j][y] == x:
                return j
        raise ValidationError(f"simplex {x} at level {k} is degenerate but no s_j d_j recovers it")

    # ------------------------------------------------------------------
    # checks

    def validate(self) -> None:
        """Exhaustively check the simplicial identities up to ``max_dim``."""
        D = self.max_dim
        for k in range(1, D + 1):
            if len(self.faces[k]) != k + 1:
                raise ValidationError(f"level {k} needs {k + 1} face maps")
            for row in self.faces[k]:
                if len(row) != self.size(k) or any(not 0 <= v < self.size(k - 1) for v in row):
                    raise ValidationError(f"face table at level {k} out of range")
        for k in range(D):
            if len(self.degens[k]) != k + 1:
                raise ValidationError(f"level {k} needs {k + 1} degeneracy maps")
            for row in self.degens[k]:
                if len(row) != self.size(k) or any(not 0 <= v < self.size(k + 1) for v in row):
                    raise ValidationError(f"degeneracy table at level {k} out of range")
        F, S = self.faces, self.degens
        for k in range(2, D + 1):
            for x in range(self.size(k)):
                for j in range(k + 1):
                    for i in range(j):
                        if F[k - 1][i][F[k][j][x]] != F[k - 1][j - 1][F[k][i][x]]:
                            raise ValidationError(f"d_{i} d_{j} != d_{j - 1} d_{i} on level {k} simplex {x}")
        for k in range(D):
            for x in range(self.size(k)):
                for j in range(k + 1):
                    y = S[k][j][x]
                    for i in range(k + 2):
                        fy = F[k + 1][i][y]
                        if i == j or i == j + 1:
                            want = x
                        elif i < j:
                            want = S[k - 1][j - 1][F[k][i][x]]
                        else:
                            want = S[k - 1][j][F[k][i - 1][x]]
                        if fy != want:
                            raise ValidationError(f"d_{i} s_{j} identity fails on level {k} simplex {x}")
        for k in range(D - 1):
            for x in range(self.size(k)):
                for j in range(k + 1):
                    for i in range(j + 1):
                        if S[k + 1][i][S[k][j][x]] != S[k + 1][j + 1][S[k][i][x]]:
                            raise ValidationError(f"s_{i} s_{j} != s_{j + 1} s_{i} on level {k} simplex {x}")

    # ------------------------------------------------------------------
    # derived objects

    def truncate(self, d: int) -> "SimplicialSet":
        if d > self.max_dim:
            raise ResourceError(f"cannot extend max_dim {self.max_dim} to {d}", required=d)
        if d == self.max_dim:
            return self
        return SimplicialSet(d, self.labels[: d + 1], self.faces[: d + 1], self.degens[:d], name=self.name)

    def opposite(self) -> "SimplicialSet":
        """Reverse the vertex order: ``d_i`` becomes ``d_{n-i}``."""
        faces = [[]] + [list(reversed(self.faces[k])) for k in range(1, self.max_dim + 1)]
        degens = [list(reversed(self.degens[k])) for k in range(self.max_dim)]
        return SimplicialSet(self.max_dim, self.labels, faces, degens, name=self.name)

    def relabel(self, fn: Callable[[int, Label], Label]) -> "SimplicialSet":
        labels = [[fn(k, lab) for lab in self.labels[k]] for k in range(self.max_dim + 1)]
        return SimplicialSet(self.max_dim, labels, self.faces, self.degens, name=self.name)

    @cached_property
    def flat(self) -> "_Flat":
        return _Flat(self)

    def __repr__(self) -> str:
        nm = f" {self.name!r}" if self.name else ""
        return f"<SimplicialSet{nm} max_dim={self.max_dim} sizes={self.sizes()}>"


def _lookup(index: dict, label: Label, k: int) -> int:
    try:
        return index[label]
    except KeyError:
        raise ValidationError(f"operator result {label!r} is not a level-{k} simplex") from None


class _Flat:
    """Global integer tables of a complex, in the layout the kernels expect."""

    def __init__(self, X: SimplicialSet):
        D = X.max_dim
        sizes = X.sizes()
        start = np.zeros(D + 2, dtype=np.int64)
        start[1:] = np.cumsum(sizes)
        n = int(start[-1])
        W = D + 1
        level = np.zeros(n, dtype=np.int64)
        faces = np.full((n, W), -1, dtype=np.int64)
        degs = np.full((n, W), -1, dtype=np.int64)
        deg_src = np.full(n, -1, dtype=np.int64)
        deg_j = np.zeros(n, dtype=np.int64)
        for k in range(D + 1):
            s = int(start[k])
            level[s : s + sizes[k]] = k
            if k >= 1:
                for i in range(k + 1):
                    faces[s : s + sizes[k], i] = np.asarray(X.faces[k][i], dtype=np.int64) + start[k - 1]
            if k < D:
                for j in range(k + 1):
                    degs[s : s + sizes[k], j] = np.asarray(X.degens[k][j], dtype=np.int64) + start[k + 1]
            if k >= 1:
                for x in range(sizes[k]):
                    j = X._degeneracy_witness(k, x)
                    if j is not None:
                        deg_src[s + x] = X.faces[k][j][x] + start[k - 1]
                        deg_j[s + x] = j
        d0_start = np.zeros(n, dtype=np.int64)
        d0_count = np.zeros(n, dtype=np.int64)
        order = []
        pos = 0
        for k in range(D):
            s, e = int(start[k]), int(start[k + 1])
            buckets: list[list[int]] = [[] for _ in range(e - s)]
            if k + 1 <= D:
                s1 = int(start[k + 1])
                for x in range(sizes[k + 1]):
                    buckets[X.faces[k + 1][0][x]].append(s1 + x)
            for g, b in enumerate(buckets):
                d0_start[s + g] = pos
                d0_count[s + g] = len(b)
                order.extend(b)
                pos += len(b)
        self.start = start
        self.n = n
        self.level = level
        self.faces = faces
        self.degs = degs
        self.deg_src = deg_src
        self.deg_j = deg_j
        self.d0_start = d0_start
        self.d0_count = d0_count
        self.d0_order = np.asarray(order, dtype=np.int64)

    def to_global(self, k: int, x: int) -> int:
        return int(self.start[k]) + x

    def to_local(self, g: int) -> tuple[int, int]:
        k = int(np.searchsorted(self.start, g, side="right")) - 1
        return k, g - int(self.start[k])


# ----------------------------------------------------------------------
# maps


class SimplicialMap:
    """Level maps ``levels[k][x] = f(x)`` for ``k <= domain.max_dim``."""

    def __init__(self, domain: SimplicialSet, codomain: SimplicialSet, levels: Sequence[Sequence[int]]):
        if domain.max_dim > codomain.max_dim:
            raise ResourceError(
                f"domain max_dim {domain.max_dim} exceeds codomain max_dim {codomain.max_dim}",
                required=domain.max_dim,
            )
        self.domain = domain
        self.codomain = codomain
        self.levels = tuple(tuple(int(v) for v in lvl) for lvl in levels)
        if len(self.levels) != domain.max_dim + 1:
            raise ValueError("one level table per domain level is required")

    @classmethod
    def from_function(
        cls, domain: SimplicialSet, codomain: SimplicialSet, fn: Callable[[int, Label], Label]
    ) -> "SimplicialMap":
        levels = [
            [codomain.index(k, fn(k, lab)) for lab in domain.labels[k]] for k in range(domain.max_dim + 1)
        ]
        return cls(domain, codomain, levels)

    @classmethod
    def identity(cls, X: SimplicialSet) -> "SimplicialMap":
        return cls(X, X, [range(X.size(k)) for k in range(X.max_dim + 1)])

    @classmethod
    def from_global(cls, domain: SimplicialSet, codomain: SimplicialSet, row) -> "SimplicialMap":
        fd, fc = domain.flat, codomain.flat
        levels = []
        for k in range(domain.max_dim + 1):
            s, e = int(fd.start[k]), int(fd.start[k + 1])
            levels.append([int(v) - int(fc.start[k]) for v in row[s:e]])
        return cls(domain, codomain, levels)

    def __call__(self, k: int, x: int) -> int:
        return self.levels[k][x]

    def global_row(self) -> np.ndarray:
        fc = self.codomain.flat
        return np.concatenate(
            [np.asarray(self.levels[k], dtype=np.int64) + fc.start[k] for k in range(self.domain.max_dim + 1)]
        ) if self.domain.max_dim >= 0 else np.zeros(0, dtype=np.int64)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return self.levels

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialMap)
            and self.domain is other.domain
            and self.codomain is other.codomain
            and self.levels == other.levels
        )

    def __hash__(self) -> int:
        return hash(self.levels)

    def then(self, g: "SimplicialMap") -> "SimplicialMap":
        """``g ∘ self``."""
        return SimplicialMap(
            self.domain, g.codomain, [[g.levels[k][v] for v in self.levels[k]] for k in range(self.domain.max_dim + 1)]
        )

    def validate(self) -> None:
        X, Y = self.domain, self.codomain
        for k in range(X.max_dim + 1):
            if len(self.levels[k]) != X.size(k) or any(not 0 <= v < Y.size(k) for v in self.levels[k]):
                raise ValidationError(f"level {k} of map out of range")
        for k in range(1, X.max_dim + 1):
            for i in range(k + 1):
                for x in range(X.size(k)):
                    if self.levels[k - 1][X.faces[k][i][x]] != Y.faces[k][i][self.levels[k][x]]:
                        raise ValidationError(f"map does not commute with d_{i} at level {k} simplex {x}")
        for k in range(X.max_dim):
            for j in range(k + 1):
                for x in range(X.size(k)):
                    if self.levels[k + 1][X.degens[k][j][x]] != Y.degens[k][j][self.levels[k][x]]:
                        raise ValidationError(f"map does not commute with s_{j} at level {k} simplex {x}")

    def is_levelwise_bijective(self) -> bool:
        return all(
            len(set(self.levels[k])) == self.codomain.size(k) == self.domain.size(k)
            for k in range(self.domain.max_dim + 1)
        )

    def fiber(self, k: int, y: int) -> list[int]:
        return [x for x, v in enumerate(self.levels[k]) if v == y]


def enumerate_maps(
    Y: SimplicialSet,
    X: SimplicialSet,
    *,
    base_domain: SimplicialMap | None = None,
    base_codomain: SimplicialMap | None = None,
    fixed: dict[tuple[int, int], int] | None = None,
    limit: int = -1,
    store: bool = True,
):
    """All simplicial maps ``Y -> X`` (optionally over a common base).

    ``Y`` must not exceed ``X.max_dim``; truncate it first.  With
    ``base_domain: Y -> B`` and ``base_codomain: X -> B`` only maps over
    ``B`` are produced.  Returns ``(count, rows)`` where each row lists
    global ``X`` indices in ``Y``'s global order (see :meth:`SimplicialMap.from_global`).
    """
    if Y.max_dim > X.max_dim:
        raise ResourceError(
            f"domain max_dim {Y.max_dim} exceeds target max_dim {X.max_dim}", required=Y.max_dim
        )
    fy, fx = Y.flat, X.flat
    ny = fy.n
    y_base = np.full(ny, -1, dtype=np.int64)
    x_base = np.zeros(fx.n, dtype=np.int64)
    if (base_domain is None) != (base_codomain is None):
        raise ValueError("base_domain and base_codomain go together")
    if base_domain is not None:
        if base_domain.codomain is not base_codomain.codomain:
            raise ValueError("base maps must share a codomain")
        y_base = base_domain.global_row().copy()
        x_base = base_codomain.global_row().copy()
    y_fixed = np.full(ny, -1, dtype=np.int64)
    for (k, y), x in (fixed or {}).items():
        y_fixed[fy.to_global(k, y)] = fx.to_global(k, x)
    count, rows = kernels.enumerate_maps(
        np.ascontiguousarray(fy.level),
        np.ascontiguousarray(fy.faces),
        np.ascontiguousarray(fy.deg_src),
        np.ascontiguousarray(fy.deg_j),
        np.ascontiguousarray(y_base),
        np.ascontiguousarray(y_fixed),
        np.ascontiguousarray(fx.start),
        np.ascontiguousarray(fx.faces),
        np.ascontiguousarray(fx.degs),
        np.ascontiguousarray(x_base),
        np.ascontiguousarray(fx.d0_start),
        np.ascontiguousarray(fx.d0_count),
        np.ascontiguousarray(fx.d0_order),
        int(limit),
        bool(store),
    )
    return count, rows


def all_maps(Y: SimplicialSet, X: SimplicialSet, **kwargs) -> list[SimplicialMap]:
    _, rows = enumerate_maps(Y, X, **kwargs)
    return [SimplicialMap.from_global(Y, X, row) for row in rows]


# ----------------------------------------------------------------------
# basic complexes


def standard_simplex(n: int, max_dim: int | None = None) -> SimplicialSet:
    """``Delta[n]``: k-simplices are monotone maps ``[k] -> [n]`` (as value tuples)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    D = n if max_dim is None else max_dim
    return SimplicialSet.from_action(
        D,
        lambda k: [f.values for f in monotone_maps(k, n)],
        lambda th, v: tuple(v[i] for i in th.values),
        name=f"Delta[{n}]",
    )


def subcomplex(X: SimplicialSet, keep: Callable[[int, Label], bool], name: str | None = None) -> SimplicialSet:
    """The subcomplex of simplices satisfying ``keep`` (must be closed under operators)."""
    labels = [[lab for lab in X.labels[k] if keep(k, lab)] for k in range(X.max_dim + 1)]
    old = [[X.index(k, lab) for lab in labels[k]] for k in range(X.max_dim + 1)]
    new = [{o: i for i, o in enumerate(old[k])} for k in range(X.max_dim + 1)]
    try:
        faces = [[]] + [
            [[new[k - 1][X.faces[k][i][o]] for o in old[k]] for i in range(k + 1)] for k in range(1, X.max_dim + 1)
        ]
        degens = [[[new[k + 1][X.degens[k][i][o]] for o in old[k]] for i in range(k + 1)] for k in range(X.max_dim)]
    except KeyError:
        raise ValidationError("selected simplices are not closed under faces and degeneracies") from None
    return SimplicialSet(X.max_dim, labels, faces, degens, name=name)


def coskeleton(X: SimplicialSet, name: str | None = None) -> SimplicialSet:
    """Extend ``X`` by one level whose simplices are the compatible boundaries.

    A new ``d``-simplex is a tuple ``(a_0, ..., a_d)`` of ``(d-1)``-simplices
    with ``d_i a_j = d_{j-1} a_i`` for ``i < j``.  Nerves of categories are
    2-coskeletal, so on a nerve this reproduces the next level exactly.
    """
    n = X.max_dim
    if n < 1:
        raise ValueError("coskeleton needs max_dim >= 1")
    d = n + 1
    tuples: list[tuple[int, ...]] = []

    def extend(prefix: list[int]) -> None:
        j = len(prefix)
        if j == d + 1:
            tuples.append(tuple(prefix))
            return
        for a in range(X.size(n)):
            if all(X.faces[n][i][a] == X.faces[n][j - 1][prefix[i]] for i in range(j)):
                prefix.append(a)
                extend(prefix)
                prefix.pop()

    extend([])
    top = [tuple(X.labels[n][a] for a in t) for t in tuples]

    def levels(k: int):
        return X.labels[k] if k < d else top

    def act(theta: OrdinalMap, lab):
        k = theta.target_dim
        if k == d:
            return lab[_missing(theta)]
        if theta.source_dim == d:
            y = X.index(k, lab)
            return tuple(X.labels[n][X.act(compose(face(d, i), theta), y)] for i in range(d + 1))
        return X.labels[theta.source_dim][X.act(theta, X.index(k, lab))]

    return SimplicialSet.from_action(d, levels, act, name=name)


def with_face(X: SimplicialSet, k: int, i: int, x: int, y: int, name: str | None = None) -> SimplicialSet:
    """A copy of ``X`` with ``d_i`` of the k-simplex ``x`` redirected to ``y``; validated."""
    faces = [list(map(list, lvl)) for lvl in X.faces]
    faces[k][i][x] = y
    Y = SimplicialSet(X.max_dim, X.labels, faces, X.degens, name=name or X.name)
    Y.validate()
    return Y


def _missing(theta: OrdinalMap) -> int:
    return next(v for v in range(theta.target_dim + 1) if v not in theta.values)


def inclusion(sub: SimplicialSet, X: SimplicialSet) -> SimplicialMap:
    return SimplicialMap.from_function(sub, X, lambda k, lab: lab)


def horn(n: int, k: int, max_dim: int | None = None) -> SimplicialSet:
    """``Lambda^k[n]``: the faces ``d^i`` of ``Delta[n]`` with ``i != k``."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"no horn Lambda^{k}[{n}]")
    D = n if max_dim is None else max_dim
    full = standard_simplex(n, D)
    allowed = [i for i in range(n + 1) if i != k]
    return subcomplex(full, lambda lvl, v: any(i not in v for i in allowed), name=f"Lambda^{k}[{n}]")


def boundary(n: int, max_dim: int | None = None) -> SimplicialSet:
    if n < 1:
        raise ValueError("boundary needs n >= 1")
    D = n if max_dim is None else max_dim
    full = standard_simplex(n, D)
    return subcomplex(full, lambda lvl, v: len(set(v)) < n + 1, name=f"dDelta[{n}]")


def constant(elements: Sequence[Label], max_dim: int, name: str | None = None) -> SimplicialSet:
    """The discrete complex on a finite set: every simplex is a degenerate vertex."""
    elements = list(elements)
    return SimplicialSet.from_action(max_dim, lambda k: elements, lambda th, x: x, name=name)


def e_groupoid(max_dim: int) -> SimplicialSet:
    """Nerve of the walking isomorphism ``x <-> y``: k-simplices are words in ``{x, y}`` of length ``k+1``."""
    from itertools import product as iproduct

    return SimplicialSet.from_action(
        max_dim,
        lambda k: list(iproduct("xy", repeat=k + 1)),
        lambda th, w: tuple(w[i] for i in th.values),
        name="E",
    )


def product(X: SimplicialSet, Y: SimplicialSet, name: str | None = None) -> SimplicialSet:
    """Levelwise cartesian product, truncated at the smaller ``max_dim``."""
    D = min(X.max_dim, Y.max_dim)
    labels = [[(a, b) for a in X.labels[k] for b in Y.labels[k]] for k in range(D + 1)]
    ny = [Y.size(k) for k in range(D + 1)]

    def pair_table(tx, ty, k_to):
        return [tx[a] * ny[k_to] + ty[b] for a in range(len(tx)) for b in range(len(ty))]

    faces = [[]] + [[pair_table(X.faces[k][i], Y.faces[k][i], k - 1) for i in range(k + 1)] for k in range(1, D + 1)]
    degens = [[pair_table(X.degens[k][i], Y.degens[k][i], k + 1) for i in range(k + 1)] for k in range(D)]
    return SimplicialSet(D, labels, faces, degens, name=name)


def product_projections(X: SimplicialSet, Y: SimplicialSet, P: SimplicialSet) -> tuple[SimplicialMap, SimplicialMap]:
    D = P.max_dim
    X, Y = X.truncate(D), Y.truncate(D)
    ny = [Y.size(k) for k in range(D + 1)]
    p1 = SimplicialMap(P, X, [[x // ny[k] for x in range(P.size(k))] for k in range(D + 1)])
    p2 = SimplicialMap(P, Y, [[x % ny[k] for x in range(P.size(k))] for k in range(D + 1)])
    return p1, p2


def pullback(f: SimplicialMap, g: SimplicialMap, name: str | None = None):
    """Levelwise fiber product of ``f: X -> B`` and ``g: Y -> B``.

    Returns ``(P, pr_X, pr_Y)``; simplices of ``P`` are labelled by pairs of labels.
    """
    if f.codomain is not g.codomain:
        raise ValueError("pullback needs a common codomain")
    X, Y = f.domain, g.domain
    D = min(X.max_dim, Y.max_dim)
    pairs = []
    for k in range(D + 1):
        by_base: dict[int, list[int]] = {}
        for y in range(Y.size(k)):
            by_base.setdefault(g.levels[k][y], []).append(y)
        pairs.append([(x, y) for x in range(X.size(k)) for y in by_base.get(f.levels[k][x], ())])
    index = [{p: i for i, p in enumerate(level)} for level in pairs]
    faces = [[]] + [
        [[index[k - 1][(X.faces[k][i][x], Y.faces[k][i][y])] for x, y in pairs[k]] for i in range(k + 1)]
        for k in range(1, D + 1)
    ]
    degens = [
        [[index[k + 1][(X.degens[k][i][x], Y.degens[k][i][y])] for x, y in pairs[k]] for i in range(k + 1)]
        for k in range(D)
    ]
    labels = [[(X.labels[k][x], Y.labels[k][y]) for x, y in pairs[k]] for k in range(D + 1)]
    P = SimplicialSet(D, labels, faces, degens, name=name)
    p1 = SimplicialMap(P, X if X.max_dim == D else X.truncate(D), [[x for x, _ in pairs[k]] for k in range(D + 1)])
    p2 = SimplicialMap(P, Y if Y.max_dim == D else Y.truncate(D), [[y for _, y in pairs[k]] for k in range(D + 1)])
    return P, p1, p2


def disjoint_union(parts: Sequence[SimplicialSet], name: str | None = None) -> SimplicialSet:
    """Coproduct; simplices are labelled ``(part_index, label)``."""
    D = min(p.max_dim for p in parts)
    labels, faces, degens = [], [[]], []
    offsets = []
    for k in range(D + 1):
        off, acc = [], 0
        for p in parts:
            off.append(acc)
            acc += p.size(k)
        offsets.append(off)
        labels.append([(j, lab) for j, p in enumerate(parts) for lab in p.labels[k]])
    for k in range(1, D + 1):
        faces.append([[offsets[k - 1][j] + v for j, p in enumerate(parts) for v in p.faces[k][i]] for i in range(k + 1)])
    for k in range(D):
        degens.append([[offsets[k + 1][j] + v for j, p in enumerate(parts) for v in p.degens[k][i]] for i in range(k + 1)])
    return SimplicialSet(D, labels, faces, degens, name=name)


def component_labels(X: SimplicialSet) -> np.ndarray:
    """For each vertex, the smallest vertex index in its connected component."""
    if X.max_dim == 0:
        return np.arange(X.size(0), dtype=np.int64)
    src = np.asarray(X.faces[1][0], dtype=np.int64)
    tgt = np.asarray(X.faces[1][1], dtype=np.int64)
    return kernels.components(X.size(0), np.ascontiguousarray(src), np.ascontiguousarray(tgt))


def pi0(X: SimplicialSet) -> list[list[int]]:
    """Connected components as sorted lists of vertex indices, ordered by least vertex."""
    roots = component_labels(X)
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(roots):
        groups.setdefault(int(r), []).append(v)
    return [groups[r] for r in sorted(groups)]


# ----------------------------------------------------------------------
# Segal spine and internal hom


def spine(X: SimplicialSet, n: int, x: int) -> tuple[int, ...]:
    """The edges ``alpha_i^* x`` joining consecutive vertices of an n-simplex."""
    return tuple(X.act(OrdinalMap(1, n, (i, i + 1)), x) for i in range(n))


def is_strict_segal(X: SimplicialSet) -> bool:
    from .fibrations import segal_check

    return X.max_dim < 2 or segal_check(X).passed


def internal_hom(A: SimplicialSet, X: SimplicialSet, max_dim: int, name: str | None = None) -> "InternalHom":
    """``X^A``: k-simplices are simplicial maps ``Delta[k] x A -> X``.

    Maps are computed between ``X.max_dim``-truncations.  That is exact when
    ``max_dim + dim(A) <= X.max_dim``, or when ``X`` is a strict Segal set
    (maps into a nerve are determined by 2-skeleta); otherwise a
    :class:`ResourceError` is raised.
    """
    D = X.max_dim
    if max_dim + A.dimension > D and not (D >= 2 and is_strict_segal(X)):
        raise ResourceError(
            f"internal_hom needs X.max_dim >= {max_dim + A.dimension} (X is not a strict Segal set)",
            required=max_dim + A.dimension,
        )
    return InternalHom(A, X, max_dim, name=name)


class InternalHom:
    """The mapping complex ``X^A`` with its evaluation data.

    ``complex`` is the :class:`SimplicialSet`; simplex labels are the
    global rows of the corresponding maps ``Delta[k] x A -> X``.
    """

    def __init__(self, A: SimplicialSet, X: SimplicialSet, max_dim: int, name: str | None = None):
        D = X.max_dim
        A_D = A.truncate(D) if A.max_dim >= D else A.extend(D)
        self.A, self.X, self.max_dim = A_D, X, max_dim
        self.sources = [product(standard_simplex(k, D), A_D) for k in range(max_dim + 1)]
        rows_by_level = []
        for k in range(max_dim + 1):
            _, rows = enumerate_maps(self.sources[k], X)
            rows_by_level.append([tuple(int(v) for v in r) for r in rows])
        self._rows = rows_by_level

        def act(theta: OrdinalMap, row):
            k, m = theta.target_dim, theta.source_dim
            Pm, Pk = self.sources[m], self.sources[k]
            fm, fk = Pm.flat, Pk.flat
            out = []
            for j in range(D + 1):
                for (sig, a) in Pm.labels[j]:
                    g = fk.to_global(j, Pk.index(j, (tuple(theta.values[v] for v in sig), a)))
                    out.append(row[g])
            return tuple(out)

        self.complex = SimplicialSet.from_action(max_dim, lambda k: rows_by_level[k], act, name=name)

    def evaluation(self, vertex: int) -> SimplicialMap:
        """Restriction along ``Delta[k] x {vertex} -> Delta[k] x A`` (``vertex`` a 0-simplex of A)."""
        H, X, A = self.complex, self.X, self.A
        levels = []
        for k in range(self.max_dim + 1):
            Pk = self.sources[k]
            a_k = A.labels[k][A.act(OrdinalMap(k, 0, (0,) * (k + 1)), vertex)]
            g = Pk.flat.to_global(k, Pk.index(k, (tuple(range(k + 1)), a_k)))
            levels.append([row[g] - int(X.flat.start[k]) for row in H.labels[k]])
        return SimplicialMap(H, X.truncate(self.max_dim) if X.max_dim > self.max_dim else X, levels)


# ----------------------------------------------------------------------
# bisimplicial sets


class BiSimplicialSet:
    """A bisimplicial set with bounds ``(max_m, max_n)``.

    The first index ``m`` is the horizontal direction, ``n`` the vertical
    one.  ``hfaces[m][n][i]`` is ``d_i`` in the m-direction, ``vfaces[m][n][i]``
    in the n-direction; likewise for degeneracies.
    """

    def __init__(self, max_m, max_n, labels, hfaces, hdegens, vfaces, vdegens, name=None):
        self.max_m, self.max_n = max_m, max_n
        self.labels = tuple(tuple(tuple(c) for c in row) for row in labels)
        self.hfaces, self.hdegens = hfaces, hdegens
        self.vfaces, self.vdegens = vfaces, vdegens
        self.name = name
        self._index = {}

    @classmethod
    def from_action(cls, max_m, max_n, levels, act_h, act_v, name=None) -> "BiSimplicialSet":
        """``levels(m, n)`` enumerates cells; ``act_h(theta, x)`` / ``act_v(phi, x)``
        apply a generator in the m- resp. n-direction."""
        labels = [[list(levels(m, n)) for n in range(max_n + 1)] for m in range(max_m + 1)]
        index = [[{lab: i for i, lab in enumerate(labels[m][n])} for n in range(max_n + 1)] for m in range(max_m + 1)]
        hf = [[None] * (max_n + 1) for _ in range(max_m + 1)]
        hd = [[None] * (max_n + 1) for _ in range(max_m + 1)]
        vf = [[None] * (max_n + 1) for _ in range(max_m + 1)]
        vd = [[None] * (max_n + 1) for _ in range(max_m + 1)]
        for m in range(max_m + 1):
            for n in range(max_n + 1):
                cells = labels[m][n]
                if m >= 1:
                    hf[m][n] = [[_lookup(index[m - 1][n], act_h(face(m, i), x), m - 1) for x in cells] for i in range(m + 1)]
                if m < max_m:
                    hd[m][n] = [[_lookup(index[m + 1][n], act_h(degeneracy(m, i), x), m + 1) for x in cells] for i in range(m + 1)]
                if n >= 1:
                    vf[m][n] = [[_lookup(index[m][n - 1], act_v(face(n, i), x), n - 1) for x in cells] for i in range(n + 1)]
                if n < max_n:
                    vd[m][n] = [[_lookup(index[m][n + 1], act_v(degeneracy(n, i), x), n + 1) for x in cells] for i in range(n + 1)]
        W = cls(max_m, max_n, labels, hf, hd, vf, vd, name=name)
        W._index = {(m, n): index[m][n] for m in range(max_m + 1) for n in range(max_n + 1)}
        return W

    def size(self, m: int, n: int) -> int:
        return len(self.labels[m][n])

    def index(self, m: int, n: int, label) -> int:
        idx = self._index.get((m, n))
        if idx is None:
            idx = {lab: i for i, lab in enumerate(self.labels[m][n])}
            self._index[(m, n)] = idx
        return idx[label]

    def horizontal(self, n: int) -> SimplicialSet:
        """``X_{., n}``: the simplicial set in the m-direction at fixed ``n``."""
        M = self.max_m
        return SimplicialSet(
            M,
            [self.labels[m][n] for m in range(M + 1)],
            [[]] + [self.hfaces[m][n] for m in range(1, M + 1)],
            [self.hdegens[m][n] for m in range(M)],
            name=f"{self.name or 'W'}[.,{n}]",
        )

    def vertical(self, m: int) -> SimplicialSet:
        """``X_{m, .}``: the simplicial set in the n-direction at fixed ``m``."""
        N = self.max_n
        return SimplicialSet(
            N,
            [self.labels[m][n] for n in range(N + 1)],
            [[]] + [self.vfaces[m][n] for n in range(1, N + 1)],
            [self.vdegens[m][n] for n in range(N)],
            name=f"{self.name or 'W'}[{m},.]",
        )

    def validate(self) -> None:
        for n in range(self.max_n + 1):
            self.horizontal(n).validate()
        for m in range(self.max_m + 1):
            self.vertical(m).validate()
        # horizontal and vertical operators commute
        for m in range(self.max_m + 1):
            for n in range(self.max_n + 1):
                for x in range(self.size(m, n)):
                    hops = []
                    if m >= 1:
                        hops += [("f", i, self.hfaces[m][n][i], -1) for i in range(m + 1)]
                    if m < self.max_m:
                        hops += [("s", i, self.hdegens[m][n][i], +1) for i in range(m + 1)]
                    vops = []
                    if n >= 1:
                        vops += [("f", i, self.vfaces[m][n][i], -1) for i in range(n + 1)]
                    if n < self.max_n:
                        vops += [("s", i, self.vdegens[m][n][i], +1) for i in range(n + 1)]
                    for hk, hi, ht, hdm in hops:
                        for vk, vi, vt, vdn in vops:
                            m2, n2 = m + hdm, n + vdn
                            a = self._vop(vk, vi, m2, n, ht[x])
                            b = self._hop(hk, hi, m, n2, vt[x])
                            if a != b:
                                raise ValidationError(f"operators do not commute at ({m},{n}) cell {x}")

    def _hop(self, kind, i, m, n, x):
        return (self.hfaces if kind == "f" else self.hdegens)[m][n][i][x]

    def _vop(self, kind, i, m, n, x):
        return (self.vfaces if kind == "f" else self.vdegens)[m][n][i][x]

    def sizes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.size(m, n) for n in range(self.max_n + 1)) for m in range(self.max_m + 1))

    def __repr__(self) -> str:
        return f"<BiSimplicialSet {self.name or ''} bounds=({self.max_m},{self.max_n})>"


def diagonal(W: BiSimplicialSet) -> SimplicialSet:
    """``diag(W)_k = W_{k,k}`` with ``d_i = d_i^h d_i^v`` and ``s_i = s_i^h s_i^v``."""
    D = min(W.max_m, W.max_n)
    labels = [W.labels[k][k] for k in range(D + 1)]
    faces = [[]]
    for k in range(1, D + 1):
        rows = []
        for i in range(k + 1):
            v = W.vfaces[k][k][i]
            h = W.hfaces[k][k - 1][i]
            rows.append([h[v[x]] for x in range(W.size(k, k))])
        faces.append(rows)
    degens = []
    for k in range(D):
        rows = []
        for i in range(k + 1):
            v = W.vdegens[k][k][i]
            h = W.hdegens[k][k + 1][i]
            rows.append([h[v[x]] for x in range(W.size(k, k))])
        degens.append(rows)
    return SimplicialSet(D, labels, faces, degens, name=f"diag({W.name or 'W'})")


def constant_in_n(X: SimplicialSet, max_n: int, name: str | None = None) -> BiSimplicialSet:
    """``(p X)_{m,n} = X_m``: constant in the vertical direction."""
    M = X.max_dim
    labels = [[X.labels[m]] * (max_n + 1) for m in range(M + 1)]
    hf = [[X.faces[m] if m >= 1 else None] * (max_n + 1) for m in range(M + 1)]
    hd = [[X.degens[m] if m < M else None] * (max_n + 1) for m in range(M + 1)]
    ident = [list(range(X.size(m))) for m in range(M + 1)]
    vf = [[([ident[m]] * (n + 1)) if n >= 1 else None for n in range(max_n + 1)] for m in range(M + 1)]
    vd = [[([ident[m]] * (n + 1)) if n < max_n else None for n in range(max_n + 1)] for m in range(M + 1)]
    return BiSimplicialSet(M, max_n, labels, hf, hd, vf, vd, name=name or X.name)


def box_product(X: SimplicialSet, Y: SimplicialSet, name: str | None = None) -> BiSimplicialSet:
    """``(X box Y)_{i,j} = X_i x Y_j``."""
    M, N = X.max_dim, Y.max_dim
    return BiSimplicialSet.from_action(
        M,
        N,
        lambda m, n: [(a, b) for a in range(X.size(m)) for b in range(Y.size(n))],
        lambda th, c: (X.act(th, c[0]), c[1]),
        lambda ph, c: (c[0], Y.act(ph, c[1])),
        name=name,
    )


class BiSimplicialMap:
    """Cell maps ``levels[m][n][x]`` commuting with both directions."""

    def __init__(self, domain: BiSimplicialSet, codomain: BiSimplicialSet, levels):
        self.domain, self.codomain = domain, codomain
        self.levels = tuple(tuple(tuple(int(v) for v in c) for c in row) for row in levels)

    @classmethod
    def from_function(cls, domain, codomain, fn) -> "BiSimplicialMap":
        levels = [
            [[codomain.index(m, n, fn(m, n, lab)) for lab in domain.labels[m][n]] for n in range(domain.max_n + 1)]
            for m in range(domain.max_m + 1)
        ]
        return cls(domain, codomain, levels)

    def horizontal(self, n: int) -> SimplicialMap:
        return SimplicialMap(
            self.domain.horizontal(n), self.codomain.horizontal(n), [self.levels[m][n] for m in range(self.domain.max_m + 1)]
        )

    def vertical(self, m: int) -> SimplicialMap:
        return SimplicialMap(
            self.domain.vertical(m), self.codomain.vertical(m), [self.levels[m][n] for n in range(self.domain.max_n + 1)]
        )

    def validate(self) -> None:
        for n in range(self.domain.max_n + 1):
            self.horizontal(n).validate()
        for m in range(self.domain.max_m + 1):
            self.vertical(m).validate()
