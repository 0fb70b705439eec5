"""Finite categories, functors, presheaves and brute-force (co)limit oracles.

Objects and morphisms carry arbitrary hashable labels but are handled by
integer index internally.  Nerves use the convention that an n-simplex is a
string ``c_0 <- c_1 <- ... <- c_n`` with ``f_k: c_k -> c_{k-1}``, so
``d_i`` drops ``c_i`` and vertex 0 is the ultimate target.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import ValidationError
from .ordinal import OrdinalMap
from .report import CheckReport
from .simplicial import SimplicialMap, SimplicialSet

Label = Hashable


class FinCategory:
    """A finite category given by its composition table.

    ``composition`` maps ``(g, f)`` to ``g ∘ f``; composites with identities
    may be omitted and are filled in.
    """

    def __init__(
        self,
        objects: Sequence[Label],
        morphisms: Sequence[tuple[Label, Label, Label]],
        identities: Mapping[Label, Label],
        composition: Mapping[tuple[Label, Label], Label],
        name: str | None = None,
        check: bool = True,
    ):
        self.name = name
        self.objects = tuple(objects)
        self.obj_index = {o: i for i, o in enumerate(self.objects)}
        if len(self.obj_index) != len(self.objects):
            raise ValidationError("duplicate object labels")
        self.morphisms = tuple(m for m, _, _ in morphisms)
        self.mor_index = {m: i for i, m in enumerate(self.morphisms)}
        if len(self.mor_index) != len(self.morphisms):
            raise ValidationError("duplicate morphism labels")
        try:
            self.src = tuple(self.obj_index[s] for _, s, _ in morphisms)
            self.tgt = tuple(self.obj_index[t] for _, _, t in morphisms)
        except KeyError as exc:
            raise ValidationError(f"morphism refers to unknown object {exc.args[0]!r}") from None
        ident = []
        for o in self.objects:
            if o not in identities:
                raise ValidationError(f"object {o!r} has no identity")
            m = identities[o]
            if m not in self.mor_index:
                raise ValidationError(f"identity of {o!r} is unknown morphism {m!r}")
            i = self.mor_index[m]
            if self.src[i] != self.obj_index[o] or self.tgt[i] != self.obj_index[o]:
                raise ValidationError(f"identity {m!r} of {o!r} is not an endomorphism of {o!r}")
            ident.append(i)
        self.ident = tuple(ident)
        self._is_identity = [False] * len(self.morphisms)
        for i in self.ident:
            self._is_identity[i] = True
        comp: dict[tuple[int, int], int] = {}
        for (g, f), h in composition.items():
            try:
                gi, fi, hi = self.mor_index[g], self.mor_index[f], self.mor_index[h]
            except KeyError as exc:
                raise ValidationError(
                    f"composition ({g!r}, {f!r}) -> {h!r} names unknown morphism {exc.args[0]!r}"
                ) from None
            if self.src[gi] != self.tgt[fi]:
                raise ValidationError(f"composition ({g!r}, {f!r}) -> {h!r}: {g!r} and {f!r} are not composable")
            if self.src[hi] != self.src[fi] or self.tgt[hi] != self.tgt[gi]:
                raise ValidationError(
                    f"composition ({g!r}, {f!r}) -> {h!r}: result has the wrong source or target"
                )
            comp[(gi, fi)] = hi
        for f in range(len(self.morphisms)):
            for key, val in (((self.ident[self.tgt[f]], f), f), ((f, self.ident[self.src[f]]), f)):
                if key in comp and comp[key] != val:
                    g, ff = key
                    raise ValidationError(
                        f"composition ({self.morphisms[g]!r}, {self.morphisms[ff]!r}) -> "
                        f"{self.morphisms[comp[key]]!r} violates the unit law"
                    )
                comp[key] = val
        self.comp = comp
        self._homs: dict[tuple[int, int], list[int]] = {}
        for m in range(len(self.morphisms)):
            self._homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
        self._nerves: dict[int, SimplicialSet] = {}
        if check:
            self.validate()

    # ------------------------------------------------------------------

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    def hom(self, a: int, b: int) -> list[int]:
        return self._homs.get((a, b), [])

    def compose(self, g: int, f: int) -> int:
        """``g ∘ f`` by index."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise ValidationError(
                f"no composite recorded for ({self.morphisms[g]!r}, {self.morphisms[f]!r})"
            ) from None

    def compose_chain(self, chain: Sequence[int], obj: int | None = None) -> int:
        """Composite ``chain[0] ∘ chain[1] ∘ ...``; the identity of ``obj`` if empty."""
        if not chain:
            if obj is None:
                raise ValueError("empty chain needs an object")
            return self.ident[obj]
        h = chain[-1]
        for g in reversed(chain[:-1]):
            h = self.compose(g, h)
        return h

    def is_identity(self, f: int) -> bool:
        return self._is_identity[f]

    def inverse(self, f: int) -> int | None:
        a, b = self.src[f], self.tgt[f]
        for g in self.hom(b, a):
            if self.comp[(g, f)] == self.ident[a] and self.comp[(f, g)] == self.ident[b]:
                return g
        return None

    def is_iso(self, f: int) -> bool:
        return self.inverse(f) is not None

    def isomorphic(self, a: int, b: int) -> int | None:
        """An isomorphism ``a -> b`` if one exists."""
        for f in self.hom(a, b):
            if self.is_iso(f):
                return f
        return None

    def validate(self) -> None:
        n = len(self.morphisms)
        for g in range(n):
            for f in range(n):
                if self.src[g] == self.tgt[f] and (g, f) not in self.comp:
                    raise ValidationError(
                        f"composition table missing ({self.morphisms[g]!r}, {self.morphisms[f]!r})"
                    )
        for (g, f), gf in self.comp.items():
            for h in range(n):
                if self.src[h] != self.tgt[g]:
                    continue
                left = self.comp[(h, gf)]
                right = self.comp[(self.comp[(h, g)], f)]
                if left != right:
                    raise ValidationError(
                        "associativity fails on "
                        f"({self.morphisms[h]!r}, {self.morphisms[g]!r}, {self.morphisms[f]!r})"
                    )

    def opposite(self) -> "FinCategory":
        return FinCategory(
            self.objects,
            [(m, self.objects[self.tgt[i]], self.objects[self.src[i]]) for i, m in enumerate(self.morphisms)],
            {o: self.morphisms[self.ident[i]] for i, o in enumerate(self.objects)},
            {(self.morphisms[f], self.morphisms[g]): self.morphisms[h] for (g, f), h in self.comp.items()},
            name=f"{self.name}^op" if self.name else None,
            check=False,
        )

    def nerve(self, max_dim: int) -> SimplicialSet:
        """The nerve, truncated at ``max_dim`` (memoized)."""
        X = self._nerves.get(max_dim)
        if X is None:
            X = _build_nerve(self, max_dim)
            self._nerves[max_dim] = X
        return X

    def __repr__(self) -> str:
        return f"<FinCategory {self.name or ''} objects={self.n_objects} morphisms={self.n_morphisms}>"


def _strings(C: FinCategory, n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    level = [((c,), ()) for c in range(C.n_objects)]
    for _ in range(n):
        nxt = []
        for objs, mors in level:
            last = objs[-1]
            for f in range(C.n_morphisms):
                if C.tgt[f] == last:
                    nxt.append((objs + (C.src[f],), mors + (f,)))
        level = nxt
    return level


def string_act(C: FinCategory, theta: OrdinalMap, s):
    """``theta^*`` on a nerve string ``(objects, morphisms)``."""
    objs, mors = s
    vals = theta.values
    new_objs = tuple(objs[v] for v in vals)
    new_mors = []
    for k in range(1, len(vals)):
        lo, hi = vals[k - 1], vals[k]
        new_mors.append(C.compose_chain(mors[lo:hi], objs[hi]))
    return new_objs, tuple(new_mors)


def string_target_map(C: FinCategory, s, j: int) -> int:
    """The composite ``c_j -> c_0`` of a string."""
    objs, mors = s
    return C.compose_chain(mors[:j], objs[0])


def _build_nerve(C: FinCategory, max_dim: int) -> SimplicialSet:
    return SimplicialSet.from_action(
        max_dim,
        lambda n: _strings(C, n),
        lambda th, s: string_act(C, th, s),
        name=f"N({C.name})" if C.name else "N(C)",
    )


def nerve(C: FinCategory, max_dim: int) -> SimplicialSet:
    return C.nerve(max_dim)


# ----------------------------------------------------------------------
# functors


class FunctorMap:
    """A functor given by index tables on objects and morphisms."""

    def __init__(self, source: FinCategory, target: FinCategory, obj_map: Sequence[int], mor_map: Sequence[int], check=True):
        self.source, self.target = source, target
        self.obj_map = tuple(obj_map)
        self.mor_map = tuple(mor_map)
        if check:
            self.validate()

    @classmethod
    def from_labels(cls, source, target, obj_map: Mapping, mor_map: Mapping, check=True) -> "FunctorMap":
        try:
            om = [target.obj_index[obj_map[o]] for o in source.objects]
            mm = [target.mor_index[mor_map[m]] for m in source.morphisms]
        except KeyError as exc:
            raise ValidationError(f"functor table incomplete or unknown label {exc.args[0]!r}") from None
        return cls(source, target, om, mm, check=check)

    @classmethod
    def identity(cls, C: FinCategory) -> "FunctorMap":
        return cls(C, C, range(C.n_objects), range(C.n_morphisms), check=False)

    def validate(self) -> None:
        S, T = self.source, self.target
        if len(self.obj_map) != S.n_objects or len(self.mor_map) != S.n_morphisms:
            raise ValidationError("functor tables have the wrong length")
        for f in range(S.n_morphisms):
            F = self.mor_map[f]
            if T.src[F] != self.obj_map[S.src[f]] or T.tgt[F] != self.obj_map[S.tgt[f]]:
                raise ValidationError(f"functor does not preserve source/target of {S.morphisms[f]!r}")
        for a in range(S.n_objects):
            if self.mor_map[S.ident[a]] != T.ident[self.obj_map[a]]:
                raise ValidationError(f"functor does not preserve the identity of {S.objects[a]!r}")
        for (g, f), h in S.comp.items():
            if T.comp[(self.mor_map[g], self.mor_map[f])] != self.mor_map[h]:
                raise ValidationError(
                    f"functor does not preserve composite ({S.morphisms[g]!r}, {S.morphisms[f]!r})"
                )

    def then(self, G: "FunctorMap") -> "FunctorMap":
        """``G ∘ self``."""
        return FunctorMap(
            self.source,
            G.target,
            [G.obj_map[o] for o in self.obj_map],
            [G.mor_map[m] for m in self.mor_map],
            check=False,
        )

    def nerve_map(self, max_dim: int) -> SimplicialMap:
        NS, NT = self.source.nerve(max_dim), self.target.nerve(max_dim)
        om, mm = self.obj_map, self.mor_map
        return SimplicialMap.from_function(
            NS, NT, lambda k, s: (tuple(om[o] for o in s[0]), tuple(mm[m] for m in s[1]))
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FunctorMap)
            and self.obj_map == other.obj_map
            and self.mor_map == other.mor_map
        )

    def __hash__(self) -> int:
        return hash((self.obj_map, self.mor_map))


# ----------------------------------------------------------------------
# presheaves


class Presheaf:
    """A contravariant functor on ``base``.

    kind ``SET``: ``values[c]`` is a tuple of element labels and
    ``action[f]`` sends indices of ``F(b)`` to indices of ``F(a)`` for
    ``f: a -> b``.  kind ``CAT``: ``values[c]`` is a :class:`FinCategory`
    and ``action[f]`` a :class:`FunctorMap` ``F(b) -> F(a)``.
    """

    def __init__(self, base: FinCategory, values: Sequence, action: Sequence, kind: str = "SET", name=None, check=True):
        if kind not in ("SET", "CAT"):
            raise ValueError(f"unknown presheaf kind {kind!r}")
        self.base, self.kind, self.name = base, kind, name
        self.values = tuple(tuple(v) if kind == "SET" else v for v in values)
        self.action = tuple(tuple(a) if kind == "SET" else a for a in action)
        self._elem_index = None
        if check:
            self.validate()

    @classmethod
    def from_labels(cls, base: FinCategory, values: Mapping, action: Mapping, name=None, check=True) -> "Presheaf":
        """SET presheaf from ``values[obj] = [labels]`` and ``action[mor] = {x: F(mor)(x)}``."""
        vals = [tuple(values[o]) for o in base.objects]
        idx = [{x: i for i, x in enumerate(v)} for v in vals]
        act = []
        for m in range(base.n_morphisms):
            a, b = base.src[m], base.tgt[m]
            label = base.morphisms[m]
            if label in action:
                table = action[label]
                try:
                    act.append([idx[a][table[x]] for x in vals[b]])
                except KeyError as exc:
                    raise ValidationError(f"action of {label!r} undefined or invalid at {exc.args[0]!r}") from None
            elif base.is_identity(m):
                act.append(list(range(len(vals[b]))))
            else:
                raise ValidationError(f"no action given for morphism {label!r}")
        return cls(base, vals, act, name=name, check=check)

    def size(self, c: int) -> int:
        return len(self.values[c]) if self.kind == "SET" else self.values[c].n_objects

    def act(self, f: int, x: int) -> int:
        return self.action[f][x]

    def index(self, c: int, label) -> int:
        if self._elem_index is None:
            self._elem_index = [{x: i for i, x in enumerate(v)} for v in self.values]
        return self._elem_index[c][label]

    def validate(self) -> None:
        C = self.base
        if len(self.values) != C.n_objects or len(self.action) != C.n_morphisms:
            raise ValidationError("presheaf tables have the wrong length")
        if self.kind == "SET":
            for f in range(C.n_morphisms):
                a, b = C.src[f], C.tgt[f]
                t = self.action[f]
                if len(t) != len(self.values[b]) or any(not 0 <= v < len(self.values[a]) for v in t):
                    raise ValidationError(f"action of {C.morphisms[f]!r} is not a map F(target) -> F(source)")
            for c in range(C.n_objects):
                if self.action[C.ident[c]] != tuple(range(len(self.values[c]))):
                    raise ValidationError(f"identity of {C.objects[c]!r} does not act trivially")
            for (g, f), h in C.comp.items():
                # F(g f) = F(f) F(g)
                Fg, Ff, Fh = self.action[g], self.action[f], self.action[h]
                if any(Ff[Fg[x]] != Fh[x] for x in range(len(Fh))):
                    raise ValidationError(
                        f"action fails contravariant functoriality on ({C.morphisms[g]!r}, {C.morphisms[f]!r})"
                    )
        else:
            for c in range(C.n_objects):
                self.values[c].validate()
            for f in range(C.n_morphisms):
                a, b = C.src[f], C.tgt[f]
                F = self.action[f]
                if F.source is not self.values[b] or F.target is not self.values[a]:
                    raise ValidationError(f"action of {C.morphisms[f]!r} has the wrong endpoints")
                F.validate()
            for c in range(C.n_objects):
                if self.action[C.ident[c]] != FunctorMap.identity(self.values[c]):
                    raise ValidationError(f"identity of {C.objects[c]!r} does not act trivially")
            for (g, f), h in C.comp.items():
                if self.action[g].then(self.action[f]) != self.action[h]:
                    raise ValidationError(
                        f"action fails contravariant functoriality on ({C.morphisms[g]!r}, {C.morphisms[f]!r})"
                    )

    def restrict(self, j: FunctorMap, name=None) -> "Presheaf":
        """``F ∘ j`` for ``j: D -> base``."""
        if j.target is not self.base:
            raise ValueError("functor must land in the presheaf's base")
        return Presheaf(
            j.source,
            [self.values[j.obj_map[d]] for d in range(j.source.n_objects)],
            [self.action[j.mor_map[m]] for m in range(j.source.n_morphisms)],
            kind=self.kind,
            name=name,
            check=False,
        )

    def simplex_presheaf(self, n: int) -> "Presheaf":
        """For a CAT presheaf, the SET presheaf ``c -> N(F(c))_n``."""
        if self.kind != "CAT":
            raise ValueError("simplex_presheaf needs a CAT presheaf")
        C = self.base
        levels = [self.values[c].nerve(n).labels[n] for c in range(C.n_objects)]
        idx = [{s: i for i, s in enumerate(lv)} for lv in levels]
        act = []
        for f in range(C.n_morphisms):
            a, b = C.src[f], C.tgt[f]
            F = self.action[f]
            act.append(
                [idx[a][(tuple(F.obj_map[o] for o in s[0]), tuple(F.mor_map[m] for m in s[1]))] for s in levels[b]]
            )
        return Presheaf(C, levels, act, check=False)

    def __repr__(self) -> str:
        return f"<Presheaf {self.name or ''} kind={self.kind} on {self.base.name or 'C'}>"


def representable(C: FinCategory, c: int, name=None) -> Presheaf:
    """``Hom(-, c)``; elements are morphism indices."""
    values = [tuple(C.hom(a, c)) for a in range(C.n_objects)]
    idx = [{u: i for i, u in enumerate(v)} for v in values]
    action = [[idx[C.src[f]][C.compose(u, f)] for u in values[C.tgt[f]]] for f in range(C.n_morphisms)]
    return Presheaf(C, values, action, name=name or f"Hom(-,{C.objects[c]})", check=False)


def constant_presheaf(C: FinCategory, elements: Sequence, name=None) -> Presheaf:
    elements = tuple(elements)
    ident = list(range(len(elements)))
    return Presheaf(C, [elements] * C.n_objects, [ident] * C.n_morphisms, name=name, check=False)


# ----------------------------------------------------------------------
# natural transformations


def is_natural(F: Presheaf, G: Presheaf, comps: Sequence[Sequence[int]]) -> bool:
    C = F.base
    for f in range(C.n_morphisms):
        a, b = C.src[f], C.tgt[f]
        for x in range(F.size(b)):
            if comps[a][F.act(f, x)] != G.act(f, comps[b][x]):
                return False
    return True


def natural_transformations(
    F: Presheaf, G: Presheaf, limit: int | None = None, injective: bool = False
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All natural transformations ``F -> G`` of SET presheaves.

    Elements are assigned one at a time; each choice propagates forced
    values along the action of every morphism.  With ``injective`` only
    componentwise injective transformations are produced.
    """
    C = F.base
    if G.base is not C:
        raise ValueError("presheaves live on different bases")
    into = [[f for f in range(C.n_morphisms) if C.tgt[f] == b and not C.is_identity(f)] for b in range(C.n_objects)]
    order = [(c, x) for c in range(C.n_objects) for x in range(F.size(c))]
    count = 0

    def propagate(assign: dict, c: int, x: int, y: int) -> bool:
        stack = [(c, x, y)]
        while stack:
            c, x, y = stack.pop()
            have = assign.get((c, x))
            if have is not None:
                if have != y:
                    return False
                continue
            if injective:
                if (c, ~y) in assign:
                    return False
                assign[(c, ~y)] = x
            assign[(c, x)] = y
            for f in into[c]:
                stack.append((C.src[f], F.act(f, x), G.act(f, y)))
        return True

    def rec(pos: int, assign: dict):
        nonlocal count
        while pos < len(order) and order[pos] in assign:
            pos += 1
        if pos == len(order):
            yield tuple(tuple(assign[(c, x)] for x in range(F.size(c))) for c in range(C.n_objects))
            return
        c, x = order[pos]
        for y in range(G.size(c)):
            trial = dict(assign)
            if propagate(trial, c, x, y):
                yield from rec(pos + 1, trial)

    for t in rec(0, {}):
        yield t
        count += 1
        if limit is not None and count >= limit:
            return


def presheaf_isomorphism(F: Presheaf, G: Presheaf) -> tuple[tuple[int, ...], ...] | None:
    """A natural isomorphism ``F -> G`` if one exists."""
    C = F.base
    if any(F.size(c) != G.size(c) for c in range(C.n_objects)):
        return None
    for t in natural_transformations(F, G, injective=True):
        return t
    return None


# ----------------------------------------------------------------------
# constructions on categories


def poset_category(elements: Sequence[Label], leq: Iterable[tuple[Label, Label]], name=None) -> FinCategory:
    """The category of a finite poset given by generating relations ``a <= b``."""
    elements = list(elements)
    rel = {(a, a) for a in elements} | set(leq)
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    for a, b in rel:
        if a != b and (b, a) in rel:
            raise ValidationError(f"relation is not antisymmetric on {a!r}, {b!r}")

    def mname(a, b):
        return f"id_{a}" if a == b else f"{a}->{b}"

    order = {e: i for i, e in enumerate(elements)}
    pairs = sorted(rel, key=lambda p: (order[p[0]] != order[p[1]], order[p[0]], order[p[1]]))
    morphisms = [(mname(a, b), a, b) for a, b in pairs]
    comp = {}
    for a, b in pairs:
        for c, d in pairs:
            if d == a:
                comp[(mname(a, b), mname(c, d))] = mname(c, b)
    return FinCategory(elements, morphisms, {e: mname(e, e) for e in elements}, comp, name=name)


def ordinal_category(n: int) -> FinCategory:
    """``[n] = {0 < 1 < ... < n}``."""
    elements = [str(i) for i in range(n + 1)]
    return poset_category(elements, [(elements[i], elements[i + 1]) for i in range(n)], name=f"[{n}]")


def monoid_category(elements: Sequence[str], table: Mapping[tuple[str, str], str], unit: str, obj="*", name=None) -> FinCategory:
    """One-object category; ``table[(g, f)] = g f``."""
    morphisms = [(m, obj, obj) for m in elements]
    return FinCategory([obj], morphisms, {obj: unit}, dict(table), name=name)


def cyclic_group(n: int, name=None) -> FinCategory:
    """The one-object category of ``Z/n``; ``g{k}`` is addition of ``k``."""
    els = [f"g{k}" for k in range(n)]
    table = {(els[a], els[b]): els[(a + b) % n] for a in range(n) for b in range(n)}
    return monoid_category(els, table, "g0", name=name or f"Z/{n}")


def terminal_category() -> FinCategory:
    return FinCategory(["*"], [("id_*", "*", "*")], {"*": "id_*"}, {}, name="terminal")


def discrete_category(objects: Sequence[Label], name=None) -> FinCategory:
    return FinCategory(objects, [(f"id_{o}", o, o) for o in objects], {o: f"id_{o}" for o in objects}, {}, name=name)


def full_subcategory(C: FinCategory, objs: Sequence[int], name=None) -> tuple[FinCategory, FunctorMap]:
    """Full subcategory on the given object indices, with its inclusion."""
    objs = list(objs)
    keep = set(objs)
    mors = [m for m in range(C.n_morphisms) if C.src[m] in keep and C.tgt[m] in keep]
    S = FinCategory(
        [C.objects[o] for o in objs],
        [(C.morphisms[m], C.objects[C.src[m]], C.objects[C.tgt[m]]) for m in mors],
        {C.objects[o]: C.morphisms[C.ident[o]] for o in objs},
        {
            (C.morphisms[g], C.morphisms[f]): C.morphisms[C.compose(g, f)]
            for g in mors
            for f in mors
            if C.src[g] == C.tgt[f]
        },
        name=name,
        check=False,
    )
    return S, FunctorMap(S, C, objs, mors, check=False)


def wide_subcategory(C: FinCategory, mors: Iterable[int], name=None) -> tuple[FinCategory, FunctorMap]:
    """Subcategory on all objects and the given morphisms (plus identities); must be closed."""
    keep = set(mors) | set(C.ident)
    ms = sorted(keep)
    comp = {}
    for g in ms:
        for f in ms:
            if C.src[g] == C.tgt[f]:
                h = C.compose(g, f)
                if h not in keep:
                    raise ValidationError(
                        f"subcategory not closed: ({C.morphisms[g]!r}, {C.morphisms[f]!r}) -> {C.morphisms[h]!r}"
                    )
                comp[(C.morphisms[g], C.morphisms[f])] = C.morphisms[h]
    S = FinCategory(
        C.objects,
        [(C.morphisms[m], C.objects[C.src[m]], C.objects[C.tgt[m]]) for m in ms],
        {C.objects[o]: C.morphisms[C.ident[o]] for o in range(C.n_objects)},
        comp,
        name=name,
        check=False,
    )
    return S, FunctorMap(S, C, range(C.n_objects), ms, check=False)


def product_category(C: FinCategory, D: FinCategory, name=None) -> FinCategory:
    objs = [(a, b) for a in C.objects for b in D.objects]
    mors = [
        ((f, g), (C.objects[C.src[f]], D.objects[D.src[g]]), (C.objects[C.tgt[f]], D.objects[D.tgt[g]]))
        for f in range(C.n_morphisms)
        for g in range(D.n_morphisms)
    ]
    labels = {}
    for f in range(C.n_morphisms):
        for g in range(D.n_morphisms):
            labels[(f, g)] = (C.morphisms[f], D.morphisms[g])
    comp = {}
    for (f2, f1), f in C.comp.items():
        for (g2, g1), g in D.comp.items():
            comp[(labels[(f2, g2)], labels[(f1, g1)])] = labels[(f, g)]
    return FinCategory(
        objs,
        [(labels[m], s, t) for m, s, t in mors],
        {(a, b): (C.morphisms[C.ident[i]], D.morphisms[D.ident[j]]) for i, a in enumerate(C.objects) for j, b in enumerate(D.objects)},
        comp,
        name=name or (f"{C.name}x{D.name}" if C.name and D.name else None),
        check=False,
    )


def over_category(C: FinCategory, c: int, name=None) -> tuple[FinCategory, FunctorMap]:
    """``C/c``: objects are morphisms ``u: a -> c``; a morphism ``u -> v`` is ``g`` with ``v g = u``.

    Object labels are the morphism labels of ``C``; morphism labels are
    ``(g, u, v)``.  Returns the category and its forgetful functor.
    """
    objs = [u for u in range(C.n_morphisms) if C.tgt[u] == c]
    mors = []
    for u in objs:
        for v in objs:
            for g in C.hom(C.src[u], C.src[v]):
                if C.compose(v, g) == u:
                    mors.append((g, u, v))
    return _comma(C, objs, mors, name or f"{C.name or 'C'}/{C.objects[c]}")


def under_category(c: int, C: FinCategory, name=None) -> tuple[FinCategory, FunctorMap]:
    """``c/C``: objects are morphisms ``u: c -> a``; a morphism ``u -> v`` is ``g`` with ``g u = v``."""
    objs = [u for u in range(C.n_morphisms) if C.src[u] == c]
    mors = []
    for u in objs:
        for v in objs:
            for g in C.hom(C.tgt[u], C.tgt[v]):
                if C.compose(g, u) == v:
                    mors.append((g, u, v))
    return _comma(C, objs, mors, name or f"{C.objects[c]}/{C.name or 'C'}", under=True)


def _comma(C, objs, mors, name, under=False):
    L = C.morphisms
    key = {m: i for i, m in enumerate(mors)}
    labels = [(L[g], L[u], L[v]) for g, u, v in mors]
    comp = {}
    for (g2, u2, v2) in mors:
        for (g1, u1, v1) in mors:
            if u2 == v1:
                h = C.compose(g2, g1)
                comp[(labels[key[(g2, u2, v2)]], labels[key[(g1, u1, v1)]])] = labels[key[(h, u1, v2)]]
    S = FinCategory(
        [L[u] for u in objs],
        [(labels[i], L[u], L[v]) for i, (g, u, v) in enumerate(mors)],
        {L[u]: labels[key[(C.ident[C.tgt[u] if under else C.src[u]], u, u)]] for u in objs},
        comp,
        name=name,
        check=False,
    )
    forget = FunctorMap(
        S,
        C,
        [C.tgt[u] if under else C.src[u] for u in objs],
        [g for g, _, _ in mors],
        check=False,
    )
    return S, forget


# ----------------------------------------------------------------------
# oracles


def colim_oracle(F: Presheaf) -> list[list[tuple[int, int]]]:
    """Classes of ``⊔_c F(c)`` under ``x ~ F(u)(x)``, each sorted, ordered by least member."""
    C = F.base
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c in range(C.n_objects):
        for x in range(F.size(c)):
            parent[(c, x)] = (c, x)
    for f in range(C.n_morphisms):
        a, b = C.src[f], C.tgt[f]
        for x in range(F.size(b)):
            ra, rb = find((b, x)), find((a, F.act(f, x)))
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for e in parent:
        groups.setdefault(find(e), []).append(e)
    return [sorted(g) for _, g in sorted(groups.items())]


def lim_oracle(F: Presheaf) -> list[tuple[int, ...]]:
    """Compatible families ``(x_c)`` with ``F(u)(x_b) = x_a`` for every ``u: a -> b``."""
    C = F.base
    n = C.n_objects
    out = []

    def rec(c: int, fam: list[int]):
        if c == n:
            out.append(tuple(fam))
            return
        for x in range(F.size(c)):
            fam.append(x)
            ok = True
            for f in range(C.n_morphisms):
                a, b = C.src[f], C.tgt[f]
                if a <= c and b <= c and F.act(f, fam[b]) != fam[a]:
                    ok = False
                    break
            if ok:
                rec(c + 1, fam)
            fam.pop()

    rec(0, [])
    return out


def elements_oracle(F: Presheaf) -> tuple[FinCategory, FunctorMap]:
    """The category of elements: objects ``(c, x)``; ``(f, x): (a, F(f)x) -> (b, x)``."""
    C = F.base
    objs = [(c, x) for c in range(C.n_objects) for x in range(F.size(c))]
    mors = [(f, x) for f in range(C.n_morphisms) for x in range(F.size(C.tgt[f]))]
    comp = {}
    for (g, f), h in C.comp.items():
        for y in range(F.size(C.tgt[g])):
            comp[((g, y), (f, F.act(g, y)))] = (h, y)
    E = FinCategory(
        objs,
        [((f, x), (C.src[f], F.act(f, x)), (C.tgt[f], x)) for f, x in mors],
        {(c, x): (C.ident[c], x) for c, x in objs},
        comp,
        name=f"el({F.name or 'F'})",
        check=False,
    )
    proj = FunctorMap(E, C, [c for c, _ in objs], [f for f, _ in mors], check=False)
    return E, proj


def is_equivalence(i: FunctorMap) -> CheckReport:
    """Fully faithful and essentially surjective, by exhaustive search."""
    C, D = i.source, i.target
    pairs = 0
    for a in range(C.n_objects):
        for b in range(C.n_objects):
            pairs += 1
            img = [i.mor_map[f] for f in C.hom(a, b)]
            target = D.hom(i.obj_map[a], i.obj_map[b])
            if sorted(img) != sorted(target):
                return CheckReport(
                    "equivalence",
                    False,
                    {"reason": "not fully faithful", "pair": [C.objects[a], C.objects[b]],
                     "source_homs": len(img), "target_homs": len(target)},
                    {"pairs": pairs},
                )
    image = set(i.obj_map)
    for d in range(D.n_objects):
        if not any(D.isomorphic(d, e) is not None for e in image):
            return CheckReport(
                "equivalence",
                False,
                {"reason": "not essentially surjective", "object": D.objects[d]},
                {"pairs": pairs, "objects": d + 1},
            )
    witness = {}
    for d in range(D.n_objects):
        for e in sorted(image):
            iso = D.isomorphic(d, e)
            if iso is not None:
                witness[D.objects[d]] = D.morphisms[iso]
                break
    return CheckReport("equivalence", True, {"isomorphisms_to_image": witness}, {"pairs": pairs, "objects": D.n_objects})


# ----------------------------------------------------------------------
# corpus


def _square() -> FinCategory:
    return poset_category(
        ["00", "01", "10", "11"], [("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")], name="square"
    )


def _parallel_pair() -> FinCategory:
    return FinCategory(
        ["a", "b"],
        [("id_a", "a", "a"), ("id_b", "b", "b"), ("f", "a", "b"), ("g", "a", "b")],
        {"a": "id_a", "b": "id_b"},
        {},
        name="parallel",
    )


def _iso() -> FinCategory:
    return FinCategory(
        ["x", "y"],
        [("id_x", "x", "x"), ("id_y", "y", "y"), ("u", "x", "y"), ("v", "y", "x")],
        {"x": "id_x", "y": "id_y"},
        {("v", "u"): "id_x", ("u", "v"): "id_y"},
        name="E",
    )


CORPUS_BUILDERS: dict[str, Callable[[], FinCategory]] = {
    "terminal": terminal_category,
    "[1]": lambda: ordinal_category(1),
    "[2]": lambda: ordinal_category(2),
    "parallel": _parallel_pair,
    "square": _square,
    "E": _iso,
    "Z/2": lambda: monoid_category(
        ["e", "t"], {("t", "t"): "e"}, "e", name="Z/2"
    ),
    "idempotent": lambda: monoid_category(
        ["e", "p"], {("p", "p"): "p"}, "e", name="idempotent"
    ),
    "poset2x2": lambda: poset_category(
        ["a0", "a1", "b0", "b1"], [("a0", "b0"), ("a0", "b1"), ("a1", "b0"), ("a1", "b1")], name="poset2x2"
    ),
}

CORPUS_NAMES = tuple(CORPUS_BUILDERS)

_corpus_cache: dict[str, FinCategory] = {}


def corpus_category(name: str) -> FinCategory:
    """One of the named test categories (shared instance)."""
    if name not in _corpus_cache:
        try:
            _corpus_cache[name] = CORPUS_BUILDERS[name]()
        except KeyError:
            raise KeyError(f"unknown corpus category {name!r}; have {list(CORPUS_NAMES)}") from None
    return _corpus_cache[name]


def corpus_presheaves(C: FinCategory) -> list[Presheaf]:
    """SET presheaves exercised on every corpus category.

    The constant singleton, the empty presheaf, every representable, and
    a few hand-made ones keyed by the category's name.
    """
    out = [constant_presheaf(C, ["*"], name="point"), constant_presheaf(C, [], name="empty")]
    out += [representable(C, c) for c in range(C.n_objects)]
    if C.name == "[1]":
        out.append(Presheaf.from_labels(C, {"0": ["a"], "1": ["b", "c"]}, {"0->1": {"b": "a", "c": "a"}}, name="fork"))
    elif C.name == "parallel":
        out.append(Presheaf.from_labels(C, {"a": ["p", "q"], "b": ["r", "s"]},
                                        {"f": {"r": "p", "s": "q"}, "g": {"r": "q", "s": "q"}}, name="twist"))
    elif C.name == "Z/2":
        out.append(Presheaf.from_labels(C, {"*": ["x", "y", "z"]}, {"t": {"x": "y", "y": "x", "z": "z"}}, name="swap"))
    elif C.name == "idempotent":
        out.append(Presheaf.from_labels(C, {"*": ["x", "y", "z"]}, {"p": {"x": "x", "y": "x", "z": "z"}}, name="retract"))
    elif C.name == "E":
        out.append(Presheaf.from_labels(C, {"x": ["a", "b"], "y": ["c", "d"]},
                                        {"u": {"c": "b", "d": "a"}, "v": {"a": "d", "b": "c"}}, name="transport"))
    elif C.name == "square":
        out.append(Presheaf.from_labels(
            C, {"00": ["a", "b"], "01": ["c"], "10": ["d", "e"], "11": ["f"]},
            {"00->01": {"c": "a"}, "00->10": {"d": "a", "e": "b"}, "01->11": {"f": "c"},
             "10->11": {"f": "d"}, "00->11": {"f": "a"}}, name="mixed"))
    elif C.name == "[2]":
        out.append(Presheaf.from_labels(
            C, {"0": ["a", "b"], "1": ["c", "d"], "2": ["e"]},
            {"0->1": {"c": "a", "d": "a"}, "1->2": {"e": "d"}, "0->2": {"e": "a"}}, name="chain"))
    elif C.name == "poset2x2":
        out.append(Presheaf.from_labels(
            C, {"a0": ["p", "q"], "a1": ["r"], "b0": ["s", "t"], "b1": ["u"]},
            {"a0->b0": {"s": "p", "t": "q"}, "a0->b1": {"u": "q"}, "a1->b0": {"s": "r", "t": "r"}, "a1->b1": {"u": "r"}},
            name="zigzag"))
    for F in out:
        F.validate()
    return out
