"""Seeded generators for categories, presheaves, functors and maps of complexes.

Every generator is a pure function of its seed.  Categories are built as a
free category on a random graph (a DAG plus optional idempotent or
involutive loops), divided by the congruence generated by random pairs of
parallel paths, and closed into a composition table.
"""

from __future__ import annotations

import random
from collections import defaultdict

from .category import (
    FinCategory,
    FunctorMap,
    Presheaf,
    elements_oracle,
    full_subcategory,
    is_equivalence,
    ordinal_category,
    product_category,
    representable,
    terminal_category,
)
from .fibered import FiberedComplex
from .grothendieck import grothendieck
from .ordinal import OrdinalMap
from .simplicial import SimplicialMap, SimplicialSet, coskeleton, inclusion, product, product_projections, subcomplex, with_face


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        self.parent[max(a, b)] = min(a, b)
        return True


# ----------------------------------------------------------------------
# categories


def random_category(seed, max_objects: int = 3, edge_prob: float = 0.5, loop_prob: float = 0.3,
                    ident_prob: float = 0.5, max_paths: int = 60, name: str | None = None) -> FinCategory:
    """A random finite category; always satisfies the category axioms."""
    rng = _rng(seed)
    k = rng.randint(1, max_objects)
    objs = [f"o{i}" for i in range(k)]
    gens = []  # (label, src, tgt, loop kind)
    for i in range(k):
        for j in range(i + 1, k):
            for _ in range(2):
                if rng.random() < edge_prob:
                    gens.append((f"e{len(gens)}", i, j, None))
    for i in range(k):
        if rng.random() < loop_prob:
            gens.append((f"t{len(gens)}", i, i, rng.choice(["idem", "invol"])))
    paths = _paths(k, gens)
    while len(paths) > max_paths:
        # too many paths: drop the last non-loop generator
        drop = max(g for g, (_, s, t, kind) in enumerate(gens) if kind is None)
        gens.pop(drop)
        gens = [(f"{'e' if kd is None else 't'}{n}", s, t, kd) for n, (_, s, t, kd) in enumerate(gens)]
        paths = _paths(k, gens)
    return _quotient_category(rng, objs, gens, paths, ident_prob, name)


def _normalize(path, gens):
    out = []
    for g in path:
        if out and out[-1] == g and gens[g][3] is not None:
            if gens[g][3] == "invol":
                out.pop()
            continue
        out.append(g)
    return tuple(out)


def _paths(k, gens):
    """All normalized paths ``(src, tgt, word)``; words list generators in order of application."""
    out = []
    for a in range(k):
        frontier = [(a, ())]
        seen = set()
        while frontier:
            obj, word = frontier.pop()
            if (obj, word) in seen:
                continue
            seen.add((obj, word))
            out.append((a, obj, word))
            for g, (_, s, t, _) in enumerate(gens):
                if s == obj:
                    w2 = _normalize(word + (g,), gens)
                    if len(w2) > len(word):
                        frontier.append((t, w2))
    return sorted(set(out), key=lambda p: (p[0], p[1], len(p[2]), p[2]))


def _quotient_category(rng, objs, gens, paths, ident_prob, name):
    index = {p: i for i, p in enumerate(paths)}
    uf = _UnionFind(len(paths))
    parallel = defaultdict(list)
    for p in paths:
        parallel[(p[0], p[1])].append(p)
    for group in parallel.values():
        if len(group) > 1 and rng.random() < ident_prob:
            a, b = rng.sample(group, 2)
            uf.union(index[a], index[b])

    def compose(p, q):
        """``q`` after ``p``."""
        return (p[0], q[1], _normalize(p[2] + q[2], gens))

    by_src = defaultdict(list)
    by_tgt = defaultdict(list)
    for p in paths:
        by_src[p[0]].append(p)
        by_tgt[p[1]].append(p)
    changed = True
    while changed:
        changed = False
        for p in paths:
            r = paths[uf.find(index[p])]
            if r == p:
                continue
            for q in by_src[p[1]]:
                changed |= uf.union(index[compose(p, q)], index[compose(r, q)])
            for q in by_tgt[p[0]]:
                changed |= uf.union(index[compose(q, p)], index[compose(q, r)])
    reps = sorted({uf.find(i) for i in range(len(paths))})

    def label(p):
        return f"id_{objs[p[0]]}" if not p[2] else ".".join(gens[g][0] for g in p[2])

    mors = [(label(paths[r]), objs[paths[r][0]], objs[paths[r][1]]) for r in reps]
    comp = {}
    for r in reps:
        for s in reps:
            p, q = paths[r], paths[s]
            if p[1] == q[0]:
                comp[(label(q), label(p))] = label(paths[uf.find(index[compose(p, q)])])
    ident = {objs[a]: f"id_{objs[a]}" for a in range(len(objs))}
    return FinCategory(objs, mors, ident, comp, name=name or "random")


def inflate(C: FinCategory, c: int, name=None) -> tuple[FinCategory, FunctorMap, FunctorMap]:
    """Add an isomorphic copy of ``c``.  Returns ``(D, inclusion C -> D, collapse D -> C)``."""
    copy = f"{C.objects[c]}'"
    objs = list(C.objects) + [copy]
    p = list(range(C.n_objects)) + [c]
    mors, comp = [], {}

    def lab(f, x, y):
        if x < C.n_objects and y < C.n_objects:
            return C.morphisms[f]
        return f"{C.morphisms[f]}:{objs[x]}->{objs[y]}"

    homs = {}
    base_of = {}
    for x in range(len(objs)):
        for y in range(len(objs)):
            homs[(x, y)] = C.hom(p[x], p[y])
            for f in homs[(x, y)]:
                mors.append((lab(f, x, y), objs[x], objs[y]))
                base_of[lab(f, x, y)] = f
    for x in range(len(objs)):
        for y in range(len(objs)):
            for z in range(len(objs)):
                for f in homs[(x, y)]:
                    for g in homs[(y, z)]:
                        comp[(lab(g, y, z), lab(f, x, y))] = lab(C.compose(g, f), x, z)
    ident = {objs[x]: lab(C.ident[p[x]], x, x) for x in range(len(objs))}
    D = FinCategory(objs, mors, ident, comp, name=name or f"{C.name or 'C'}+{copy}")
    incl = FunctorMap(C, D, range(C.n_objects), [D.mor_index[C.morphisms[f]] for f in range(C.n_morphisms)])
    collapse = FunctorMap(D, C, p, [base_of[m] for m in D.morphisms])
    return D, incl, collapse


def random_equivalence(seed) -> FunctorMap:
    rng = _rng(seed)
    C = random_category(rng, max_objects=3)
    D, incl, collapse = inflate(C, rng.randrange(C.n_objects))
    return incl if rng.random() < 0.6 else collapse


def random_non_equivalence(seed) -> FunctorMap:
    rng = _rng(seed)
    C = random_category(rng, max_objects=3)
    candidates = []
    for _ in range(4):
        if C.n_objects > 1:
            keep = sorted(rng.sample(range(C.n_objects), rng.randint(1, C.n_objects - 1)))
            candidates.append(full_subcategory(C, keep)[1])
        c = rng.randrange(C.n_objects)
        T = terminal_category()
        candidates.append(FunctorMap(T, C, [c], [C.ident[c]]))
    for i in candidates:
        if not is_equivalence(i).passed:
            return i
    return _end_inclusion(C, 0)


def _end_inclusion(C: FinCategory, end: int) -> FunctorMap:
    """``C -> C x [1]`` at ``end``; never an equivalence."""
    I = ordinal_category(1)
    P = product_category(C, I)
    om = [P.obj_index[(o, I.objects[end])] for o in C.objects]
    mm = [P.mor_index[(C.morphisms[f], I.morphisms[I.ident[end]])] for f in range(C.n_morphisms)]
    return FunctorMap(C, P, om, mm)


def _projection(C: FinCategory) -> FunctorMap:
    I = ordinal_category(1)
    P = product_category(C, I)
    return FunctorMap(P, C, [C.obj_index[o[0]] for o in P.objects], [C.mor_index[m[0]] for m in P.morphisms])


def random_functor(seed) -> FunctorMap:
    """A random functor from a small menu of constructions."""
    rng = _rng(seed)
    C = random_category(rng, max_objects=3)
    kind = rng.choice(["full", "inflate", "collapse", "terminal", "end", "projection", "identity"])
    if kind == "full" and C.n_objects > 1:
        keep = sorted(rng.sample(range(C.n_objects), rng.randint(1, C.n_objects - 1)))
        return full_subcategory(C, keep)[1]
    if kind in ("inflate", "collapse"):
        _, incl, collapse = inflate(C, rng.randrange(C.n_objects))
        return incl if kind == "inflate" else collapse
    if kind == "terminal":
        T = terminal_category()
        return FunctorMap(C, T, [0] * C.n_objects, [0] * C.n_morphisms)
    if kind == "end":
        return _end_inclusion(C, rng.randrange(2))
    if kind == "projection":
        return _projection(C)
    return FunctorMap.identity(C)


# ----------------------------------------------------------------------
# presheaves


def random_presheaf(C: FinCategory, seed, max_generators: int = 2, max_merges: int = 3, name: str | None = None) -> Presheaf:
    """A quotient of a coproduct of representables (and possibly a point)."""
    rng = _rng(seed)
    gens = [rng.randrange(C.n_objects) for _ in range(rng.randint(0, max_generators))]
    with_point = rng.random() < 0.3
    reps = [representable(C, c) for c in gens]
    elems = [[(k, u) for k, R in enumerate(reps) for u in R.values[c]] + ([("pt",)] if with_point else [])
             for c in range(C.n_objects)]
    index = [{e: i for i, e in enumerate(row)} for row in elems]

    def act(f, e):
        if e == ("pt",):
            return e
        k, u = e
        return (k, C.compose(u, f))

    offsets = [0]
    for row in elems:
        offsets.append(offsets[-1] + len(row))
    uf = _UnionFind(offsets[-1])
    for _ in range(rng.randint(0, max_merges)):
        c = rng.randrange(C.n_objects)
        if len(elems[c]) >= 2:
            x, y = rng.sample(range(len(elems[c])), 2)
            uf.union(offsets[c] + x, offsets[c] + y)
    changed = True
    while changed:
        changed = False
        for f in range(C.n_morphisms):
            a, b = C.src[f], C.tgt[f]
            for y, e in enumerate(elems[b]):
                r = uf.find(offsets[b] + y)
                if r != offsets[b] + y:
                    e2 = elems[b][r - offsets[b]]
                    changed |= uf.union(offsets[a] + index[a][act(f, e)], offsets[a] + index[a][act(f, e2)])
    values, cls = [], []
    for c in range(C.n_objects):
        roots = sorted({uf.find(offsets[c] + x) for x in range(len(elems[c]))})
        rid = {r: i for i, r in enumerate(roots)}
        values.append(tuple(f"x{c}_{i}" for i in range(len(roots))))
        cls.append([rid[uf.find(offsets[c] + x)] for x in range(len(elems[c]))])
    roots_of = [sorted({uf.find(offsets[c] + x) for x in range(len(elems[c]))}) for c in range(C.n_objects)]
    action = []
    for f in range(C.n_morphisms):
        a, b = C.src[f], C.tgt[f]
        action.append([cls[a][index[a][act(f, elems[b][r - offsets[b]])]] for r in roots_of[b]])
    return Presheaf(C, values, action, name=name or "random")


def random_cat_presheaf(seed, max_objects: int = 3) -> Presheaf:
    """A CAT-valued presheaf: discrete times a poset, indiscrete, or ``L`` of a representable."""
    from .cartesian import bis_representable_L, discrete_cat_presheaf
    from .category import discrete_category, poset_category

    rng = _rng(seed)
    C = random_category(rng, max_objects=max_objects)
    F = random_presheaf(C, rng)
    kind = rng.choice(["discrete", "indiscrete", "poset", "representable"])
    if kind == "discrete":
        return discrete_cat_presheaf(F)
    if kind == "representable":
        c = rng.randrange(C.n_objects)
        return bis_representable_L(C, ((c,), ()), rng.randint(0, 2))[1]
    if kind == "indiscrete":
        vals = [_indiscrete(F.values[c]) for c in range(C.n_objects)]
        act = [_indiscrete_functor(vals[C.tgt[f]], vals[C.src[f]], F.action[f]) for f in range(C.n_morphisms)]
        return Presheaf(C, vals, act, kind="CAT", name="indiscrete")
    P = poset_category(["p", "q", "r"], [("p", "q"), ("p", "r")], name="V")
    discs = [discrete_category(F.values[c]) for c in range(C.n_objects)]
    vals = [product_category(D, P) for D in discs]
    act = []
    for f in range(C.n_morphisms):
        a, b = C.src[f], C.tgt[f]
        Da, Db = discs[a], discs[b]
        Fx = F.action[f]
        on_id = {Db.morphisms[Db.ident[x]]: Da.morphisms[Da.ident[Fx[x]]] for x in range(Db.n_objects)}
        om = {(x, p): (Da.objects[Fx[i]], p) for i, x in enumerate(Db.objects) for p in P.objects}
        mm = {(d, pm): (on_id[d], pm) for d, pm in vals[b].morphisms}
        act.append(FunctorMap.from_labels(vals[b], vals[a], om, mm))
    return Presheaf(C, vals, act, kind="CAT", name="discrete x V")


def _indiscrete(elements) -> FinCategory:
    elements = list(elements)
    mors = [((a, b), a, b) for a in elements for b in elements]
    comp = {((b, c), (a, b)): (a, c) for a in elements for b in elements for c in elements}
    return FinCategory(elements, mors, {a: (a, a) for a in elements}, comp, check=False)


def _indiscrete_functor(A: FinCategory, B: FinCategory, table) -> FunctorMap:
    om = list(table)
    mm = [B.mor_index[(B.objects[om[A.src[m]]], B.objects[om[A.tgt[m]]])] for m in range(A.n_morphisms)]
    return FunctorMap(A, B, om, mm, check=False)


def random_kan_pair(seed) -> tuple[FunctorMap, Presheaf]:
    rng = _rng(seed)
    i = random_functor(rng)
    return i, random_presheaf(i.source, rng)


# ----------------------------------------------------------------------
# maps of complexes


def random_complex_map(seed, max_dim: int = 3) -> tuple[str, SimplicialMap]:
    """A map into a nerve drawn from a mixture of fibrations, products, functor nerves and mutants.

    A mutant is a Grothendieck projection with one nondegenerate edge of
    the total complex removed, together with every simplex containing it.
    """
    rng = _rng(seed)
    kind = rng.choice(["grothendieck", "product", "functor", "elements", "mutant"])
    if kind == "grothendieck":
        C = random_category(rng)
        return kind, grothendieck(random_presheaf(C, rng), max_dim).projection
    if kind == "product":
        C = random_category(rng, max_objects=2)
        K = random_category(rng, max_objects=2, ident_prob=0.8)
        NC, NK = C.nerve(max_dim), K.nerve(max_dim)
        P = product(NC, NK)
        return kind, product_projections(NC, NK, P)[0]
    if kind == "functor":
        i = random_functor(rng)
        return kind, i.nerve_map(max_dim)
    if kind == "mutant":
        # redraw until the total complex has an edge to remove
        for _ in range(20):
            C = random_category(rng)
            p = grothendieck(random_presheaf(C, rng), max_dim).projection
            X = p.domain
            edges = X.nondegenerate(1)
            if edges:
                break
        else:
            return kind, p
        drop = rng.choice(edges)

        def keep(k, lab):
            x = X.index(k, lab)
            return all(X.act(OrdinalMap(1, k, (a, b)), x) != drop for a in range(k + 1) for b in range(a + 1, k + 1))

        S = subcomplex(X, keep)
        return kind, inclusion(S, X).then(p)
    C = random_category(rng)
    F = random_presheaf(C, rng)
    E, proj = elements_oracle(F)
    if E.n_objects == 0:
        return kind, proj.nerve_map(max_dim)
    keep = sorted(rng.sample(range(E.n_objects), rng.randint(1, E.n_objects)))
    S, incl = full_subcategory(E, keep)
    return kind, incl.then(proj).nerve_map(max_dim)


def random_fibration(seed, max_dim: int = 3) -> FiberedComplex:
    rng = _rng(seed)
    C = random_category(rng)
    return grothendieck(random_presheaf(C, rng), max_dim)


def mutated_nerve(C: FinCategory, seed=0) -> tuple[SimplicialSet, dict]:
    """``N(C)`` up to level 3 with one composite redirected.

    A nondegenerate 2-simplex ``(f, g)`` gets a different edge ``h'``
    parallel to ``g f`` as its ``d_1``; level 3 is then rebuilt as the
    compatible boundaries, so non-associativity shows up as a missing
    3-simplex.  Raises ``ValueError`` when ``C`` admits no such mutation.
    """
    rng = _rng(seed)
    N = C.nerve(2)
    options = []
    for x in N.nondegenerate(2):
        e = N.faces[2][1][x]
        ends = (N.faces[1][0][e], N.faces[1][1][e])
        options += [(x, e, e2) for e2 in range(N.size(1)) if e2 != e and (N.faces[1][0][e2], N.faces[1][1][e2]) == ends]
    if not options:
        raise ValueError(f"{C.name}: no composite has a parallel alternative")
    x, e, e2 = rng.choice(options)
    M = coskeleton(with_face(N, 2, 1, x, e2), name=f"mutated N({C.name})")
    return M, {"simplex": N.labels[2][x], "composite": N.labels[1][e], "mutant": N.labels[1][e2]}
