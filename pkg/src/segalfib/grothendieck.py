"""The Grothendieck construction over a nerve and its two adjoints.

``grothendieck(F)`` has n-simplices ``(s, x)`` with ``s = c_0 <- ... <- c_n`` a
string in ``C`` and ``x`` in ``F(c_0)``.  The left adjoint ``L`` is computed
by resolving a complex over ``NC`` by representables: every simplex ``x``
with ultimate target ``t(x)`` contributes ``Hom(-, t(x))``, glued along all
faces and degeneracies.  The right adjoint evaluates ``R(X)(c)`` as maps
over ``NC`` out of ``N(C/c)``.
"""

from __future__ import annotations

import warnings
from typing import Sequence

import numpy as np

from . import kernels
from .category import (
    FinCategory,
    FunctorMap,
    Presheaf,
    natural_transformations,
    over_category,
    string_act,
    string_target_map,
    under_category,
)
from .errors import ResourceError, ValidationError
from .fibered import FiberedComplex
from .ordinal import OrdinalMap, degeneracy, face
from .report import CheckReport
from .simplicial import (
    BiSimplicialSet,
    SimplicialMap,
    SimplicialSet,
    enumerate_maps,
    pi0,
    pullback,
)


class BudgetWarning(UserWarning):
    """A truncation may have cut off data the answer depends on."""


# ----------------------------------------------------------------------
# G


def grothendieck(F: Presheaf, max_dim: int) -> FiberedComplex:
    """``G(F)`` over ``N(C)``; simplices are ``(string, x)`` with ``x`` an element index of ``F(c_0)``."""
    if F.kind != "SET":
        raise ValueError("grothendieck needs a SET presheaf; use grothendieck_cat for CAT")
    C = F.base
    N = C.nerve(max_dim)

    def levels(n):
        return [(s, x) for s in N.labels[n] for x in range(F.size(s[0][0]))]

    def act(theta, cell):
        s, x = cell
        g = string_target_map(C, s, theta.values[0])
        return string_act(C, theta, s), F.act(g, x)

    G = SimplicialSet.from_action(max_dim, levels, act, name=f"G({F.name or 'F'})")
    proj = SimplicialMap.from_function(G, N, lambda k, cell: cell[0])
    return FiberedComplex(G, N, proj, category=C, name=G.name)


def representable_complex(C: FinCategory, string, max_dim: int) -> FiberedComplex:
    """``Delta[n] -> N(C)`` classifying an n-string."""
    from .simplicial import standard_simplex

    n = len(string[0]) - 1
    S = standard_simplex(n, max_dim)
    N = C.nerve(max_dim)
    proj = SimplicialMap.from_function(
        S, N, lambda k, v: string_act(C, OrdinalMap(k, n, v), string)
    )
    return FiberedComplex(S, N, proj, category=C, name=f"Delta[{n}]")


def vertex_complex(C: FinCategory, c: int, max_dim: int) -> FiberedComplex:
    return representable_complex(C, ((c,), ()), max_dim)


def nerve_over_complex(C: FinCategory, c: int, max_dim: int) -> FiberedComplex:
    """``N(C/c) -> N(C)`` through the forgetful functor."""
    S, forget = over_category(C, c)
    NS = S.nerve(max_dim)
    q = forget.nerve_map(max_dim)
    return FiberedComplex(NS, C.nerve(max_dim), SimplicialMap(NS, C.nerve(max_dim), q.levels), category=C, name=S.name)


def identity_complex(C: FinCategory, max_dim: int) -> FiberedComplex:
    N = C.nerve(max_dim)
    return FiberedComplex(N, N, SimplicialMap.identity(N), category=C, name=N.name)


def _target(X: FiberedComplex, n: int, x: int) -> int:
    """Object ``c_0`` of the string under ``x``."""
    return X.base.labels[n][X.projection.levels[n][x]][0][0]


# ----------------------------------------------------------------------
# L


class Rectification:
    """``L(X)`` together with the class map from generators ``(n, x, u)``."""

    def __init__(self, X: FiberedComplex):
        C = X.category
        if C is None:
            raise ValueError("rectification needs a complex over a nerve")
        self.X, self.C = X, C
        T = X.total
        D = T.max_dim
        self._gen_index: list[dict[tuple[int, int, int], int]] = []
        self._class: list[np.ndarray] = []
        self._reps: list[list[int]] = []
        self._rep_of_root: list[dict[int, int]] = []
        self._gens: list[list[tuple[int, int, int]]] = []
        tgt = [[_target(X, n, x) for x in range(T.size(n))] for n in range(D + 1)]
        self.targets = tgt
        for c in range(C.n_objects):
            gens = [(n, x, u) for n in range(D + 1) for x in range(T.size(n)) for u in C.hom(c, tgt[n][x])]
            index = {g: i for i, g in enumerate(gens)}
            src, dst = [], []
            for n in range(1, D + 1):
                for x in range(T.size(n)):
                    base = X.base.labels[n][X.projection.levels[n][x]]
                    for i in range(n + 1):
                        y = T.faces[n][i][x]
                        # Hom(-, t(d_i x)) -> Hom(-, t(x)) postcomposes with c_{theta(0)} -> c_0
                        g = base[1][0] if i == 0 else None
                        for u in C.hom(c, tgt[n - 1][y]):
                            src.append(index[(n - 1, y, u)])
                            dst.append(index[(n, x, C.compose(g, u) if g is not None else u)])
            for n in range(D):
                for x in range(T.size(n)):
                    for j in range(n + 1):
                        y = T.degens[n][j][x]
                        for u in C.hom(c, tgt[n][x]):
                            src.append(index[(n + 1, y, u)])
                            dst.append(index[(n, x, u)])
            roots = kernels.components(
                len(gens), np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64)
            ) if gens else np.zeros(0, dtype=np.int64)
            # level-0 generators come first, so each root is a level-0 generator
            rep_roots = sorted(set(int(r) for r in roots))
            for r in rep_roots:
                if gens[r][0] != 0:
                    raise ValidationError("class without a vertex representative")
            self._gens.append(gens)
            self._gen_index.append(index)
            self._class.append(roots)
            self._reps.append(rep_roots)
            self._rep_of_root.append({r: i for i, r in enumerate(rep_roots)})
        values = []
        for c in range(C.n_objects):
            values.append(tuple((T.labels[0][self._gens[c][r][1]], C.morphisms[self._gens[c][r][2]]) for r in self._reps[c]))
        action = []
        for h in range(C.n_morphisms):
            a, b = C.src[h], C.tgt[h]
            row = []
            for r in self._reps[b]:
                n, x, u = self._gens[b][r]
                row.append(self.class_of(a, n, x, C.compose(u, h)))
            action.append(row)
        self.presheaf = Presheaf(C, values, action, name=f"L({X.name or 'X'})", check=False)

    def class_of(self, c: int, n: int, x: int, u: int) -> int:
        """Element of ``L(X)(c)`` represented by ``(x, u: c -> t(x))``."""
        g = self._gen_index[c][(n, x, u)]
        return self._rep_of_root[c][int(self._class[c][g])]

    def vertex_rep(self, c: int, e: int) -> tuple[int, int]:
        """A representative ``(v, u)`` with ``v`` a vertex of ``X``."""
        _, v, u = self._gens[c][self._reps[c][e]]
        return v, u


def rectify(X: FiberedComplex) -> Rectification:
    return Rectification(X)


def left_adjoint_L(X: FiberedComplex) -> Presheaf:
    """``L(X)``; elements are labelled by a vertex representative ``(vertex, u)``."""
    return Rectification(X).presheaf


def L_map(k: SimplicialMap, src: Rectification, dst: Rectification) -> tuple[tuple[int, ...], ...]:
    """``L(k): L(X') -> L(X)`` for a map ``k: X' -> X`` over the base."""
    C = src.C
    comps = []
    for c in range(C.n_objects):
        row = []
        for e in range(src.presheaf.size(c)):
            v, u = src.vertex_rep(c, e)
            row.append(dst.class_of(c, 0, k.levels[0][v], u))
        comps.append(tuple(row))
    return tuple(comps)


def unit(X: FiberedComplex, R: Rectification | None = None) -> tuple[SimplicialMap, FiberedComplex]:
    """``X -> G(L(X))`` over the base: ``x -> (p(x), [x, id])``."""
    R = R or Rectification(X)
    C = X.category
    GL = grothendieck(R.presheaf, X.total.max_dim)
    T = X.total

    def fn(n, lab):
        x = T.index(n, lab)
        s = X.base.labels[n][X.projection.levels[n][x]]
        c0 = s[0][0]
        return s, R.class_of(c0, n, x, C.ident[c0])

    return SimplicialMap.from_function(T, GL.total, fn), GL


def counit(F: Presheaf, max_dim: int = 2) -> tuple[tuple[tuple[int, ...], ...], Presheaf]:
    """Components of ``L(G(F)) -> F``: ``[(s, a), u] -> F(u)(a)``."""
    G = grothendieck(F, max_dim)
    R = Rectification(G)
    C = F.base
    comps = []
    for c in range(C.n_objects):
        row = []
        for e in range(R.presheaf.size(c)):
            v, u = R.vertex_rep(c, e)
            s, a = G.total.labels[0][v]
            row.append(F.act(u, a))
        comps.append(tuple(row))
    return tuple(comps), R.presheaf


# ----------------------------------------------------------------------
# explicit L


def explicit_L(X: FiberedComplex, c: int) -> list[list[int]]:
    """``pi_0(N(c/C) x_{NC} X)`` as lists of vertex indices of the fiber product."""
    return pi0(_explicit_product(X, c)[0][0])


def _explicit_product(X: FiberedComplex, c: int):
    C = X.category
    D = min(X.total.max_dim, 2)
    U, forget = under_category(c, C)
    NU = U.nerve(D)
    N = C.nerve(D)
    q = SimplicialMap(NU, N, forget.nerve_map(D).levels)
    T = X.total.truncate(D)
    p = SimplicialMap(T, N, X.projection.levels[: D + 1])
    return pullback(q, p), U


def explicit_L_comparison(X: FiberedComplex, c: int, R: Rectification | None = None) -> CheckReport:
    """Compare ``pi_0`` of the fiber product with ``L(X)(c)`` through ``(u, x) -> [x, u]``."""
    R = R or Rectification(X)
    C = X.category
    (P, pr_u, pr_x), U = _explicit_product(X, c)
    comps = pi0(P)
    image = []
    for comp in comps:
        vals = set()
        for v in comp:
            u = C.mor_index[U.objects[pr_u.levels[0][v]]]
            x = pr_x.levels[0][v]
            vals.add(R.class_of(c, 0, x, u))
        if len(vals) != 1:
            return CheckReport("explicit-L", False, {"object": C.objects[c], "reason": "component maps to several classes"})
        image.append(vals.pop())
    ok = sorted(image) == list(range(R.presheaf.size(c)))
    witness = {"object": C.objects[c], "components": len(comps), "L": R.presheaf.size(c), "map": image}
    return CheckReport("explicit-L", ok, witness, {"vertices": P.size(0)})


# ----------------------------------------------------------------------
# R


class Sections:
    """``R(X)``: for each object ``c`` the maps ``N(C/c) -> X`` over ``N(C)``."""

    def __init__(self, X: FiberedComplex):
        C = X.category
        if C is None:
            raise ValueError("sections need a complex over a nerve")
        D = X.total.max_dim
        if D < 2:
            raise ResourceError("R needs max_dim >= 2 to see composition", required=2)
        self.X, self.C, self.D = X, C, D
        self.slices = []
        self.rows: list[list[tuple[int, ...]]] = []
        from .fibrations import segal_check

        exact = segal_check(X.total).passed
        for c in range(C.n_objects):
            S, forget = over_category(C, c)
            NS = S.nerve(D)
            q = SimplicialMap(NS, X.base, forget.nerve_map(D).levels)
            _, rows = enumerate_maps(NS, X.total, base_domain=q, base_codomain=X.projection)
            if not exact and len(S.nerve(D + 1).nondegenerate_counts()) > D + 1:
                warnings.warn(
                    f"R: N(C/{C.objects[c]}) has nondegenerate simplices above max_dim={D} "
                    "and the total complex is not Segal; the answer may depend on the budget",
                    BudgetWarning,
                    stacklevel=2,
                )
            self.slices.append((S, NS))
            self.rows.append([tuple(int(v) for v in r) for r in rows])
        self._row_index = [{r: i for i, r in enumerate(rows)} for rows in self.rows]
        values = [tuple(range(len(r))) for r in self.rows]
        action = []
        for h in range(C.n_morphisms):
            a, b = C.src[h], C.tgt[h]
            pull = self._precompose_table(h)
            action.append([self._row_index[a][tuple(row[g] for g in pull)] for row in self.rows[b]])
        self.presheaf = Presheaf(C, values, action, name=f"R({X.name or 'X'})", check=False)

    def _precompose_table(self, h: int) -> list[int]:
        """Global indices in ``N(C/b)`` of the image of each simplex of ``N(C/a)`` under ``h ∘ -``."""
        C = self.C
        a, b = C.src[h], C.tgt[h]
        Sa, NA = self.slices[a]
        Sb, NB = self.slices[b]
        omap = [Sb.obj_index[C.morphisms[C.compose(h, C.mor_index[u])]] for u in Sa.objects]
        mmap = []
        for lab in Sa.morphisms:
            g, u, v = lab
            gi, ui, vi = C.mor_index[g], C.mor_index[u], C.mor_index[v]
            mmap.append(Sb.mor_index[(g, C.morphisms[C.compose(h, ui)], C.morphisms[C.compose(h, vi)])])
        out = []
        for k in range(self.D + 1):
            for objs, mors in NA.labels[k]:
                img = (tuple(omap[o] for o in objs), tuple(mmap[m] for m in mors))
                out.append(NB.flat.to_global(k, NB.index(k, img)))
        return out

    def evaluate(self, c: int, e: int) -> int:
        """Vertex of ``X`` hit by ``id_c`` under the section ``e``."""
        S, NS = self.slices[c]
        idc = S.obj_index[self.C.morphisms[self.C.ident[c]]]
        return self.rows[c][e][NS.flat.to_global(0, idc)]

    def map_of(self, c: int, e: int) -> SimplicialMap:
        S, NS = self.slices[c]
        return SimplicialMap.from_global(NS, self.X.total, self.rows[c][e])


def right_adjoint_R(X: FiberedComplex) -> Presheaf:
    return Sections(X).presheaf


def yoneda_section(F: Presheaf, G: FiberedComplex, c: int, a: int) -> tuple[int, ...]:
    """The map ``N(C/c) -> G(F)`` sending a string ``u_0 <- ... <- u_n`` to ``(string, F(u_0)(a))``, as a global row."""
    C = F.base
    D = G.total.max_dim
    S, _ = over_category(C, c)
    NS = S.nerve(D)
    row = []
    for k in range(D + 1):
        for objs, mors in NS.labels[k]:
            u0 = C.mor_index[S.objects[objs[0]]]
            string = (tuple(C.src[C.mor_index[S.objects[o]]] for o in objs),
                      tuple(C.mor_index[S.morphisms[m][0]] for m in mors))
            row.append(G.total.flat.to_global(k, G.total.index(k, (string, F.act(u0, a)))))
    return tuple(row)


# ----------------------------------------------------------------------
# adjunction bijections


def maps_over(X: FiberedComplex, Y: FiberedComplex) -> list[tuple[int, ...]]:
    """All maps ``X -> Y`` over the common base, as global rows."""
    if X.base is not Y.base:
        raise ValueError("complexes live over different bases")
    _, rows = enumerate_maps(X.total, Y.total, base_domain=X.projection, base_codomain=Y.projection)
    return [tuple(int(v) for v in r) for r in rows]


def transpose_L(X: FiberedComplex, R: Rectification, GF: FiberedComplex, F: Presheaf, phi) -> tuple[int, ...]:
    """``phi: L(X) -> F`` to ``X -> G(F)``: ``x -> (p(x), phi([x, id]))``."""
    C = X.category
    T = X.total
    row = []
    for n in range(T.max_dim + 1):
        for x in range(T.size(n)):
            s = X.base.labels[n][X.projection.levels[n][x]]
            c0 = s[0][0]
            a = phi[c0][R.class_of(c0, n, x, C.ident[c0])]
            row.append(GF.total.flat.to_global(n, GF.total.index(n, (s, a))))
    return tuple(row)


def check_left_adjunction(X: FiberedComplex, F: Presheaf, R: Rectification | None = None, GF=None) -> CheckReport:
    """``Hom(L X, F) -> Hom_{NC}(X, G F)`` is a bijection."""
    R = R or Rectification(X)
    GF = GF or grothendieck(F, X.total.max_dim)
    nats = list(natural_transformations(R.presheaf, F))
    images = [transpose_L(X, R, GF, F, phi) for phi in nats]
    targets = maps_over(X, GF)
    ok = len(set(images)) == len(images) and sorted(images) == sorted(targets)
    return CheckReport("adjunction-L", ok, {"hom_L": len(nats), "hom_G": len(targets)}, {"maps": len(targets)})


def transpose_R(F: Presheaf, GF: FiberedComplex, S: Sections, psi_row: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """``psi: G(F) -> X`` to ``F -> R(X)``: ``a -> psi ∘ y_a``."""
    C = F.base
    comps = []
    for c in range(C.n_objects):
        row = []
        for a in range(F.size(c)):
            y = yoneda_section(F, GF, c, a)
            image = tuple(psi_row[g] for g in y)
            row.append(S._row_index[c][image])
        comps.append(tuple(row))
    return tuple(comps)


def check_right_adjunction(F: Presheaf, X: FiberedComplex, S: Sections | None = None, GF=None) -> CheckReport:
    """``Hom_{NC}(G F, X) -> Hom(F, R X)`` is a bijection."""
    S = S or Sections(X)
    GF = GF or grothendieck(F, X.total.max_dim)
    maps = maps_over(GF, X)
    images = [transpose_R(F, GF, S, m) for m in maps]
    nats = list(natural_transformations(F, S.presheaf))
    ok = len(set(images)) == len(images) and sorted(images) == sorted(nats)
    return CheckReport("adjunction-R", ok, {"hom_G": len(maps), "hom_R": len(nats)}, {"maps": len(maps)})


def G_map(nu, GF: FiberedComplex, GF2: FiberedComplex) -> SimplicialMap:
    """``G(nu)``: ``(s, x) -> (s, nu_{c_0}(x))`` for a natural transformation ``nu``."""
    return SimplicialMap.from_function(GF.total, GF2.total, lambda k, cell: (cell[0], nu[cell[0][0][0]][cell[1]]))


def _then_row(row, mid: SimplicialSet, g: SimplicialMap) -> tuple[int, ...]:
    """A global row into ``mid`` followed by ``g``."""
    out = []
    for j in row:
        n, x = mid.flat.to_local(j)
        out.append(g.codomain.flat.to_global(n, g.levels[n][x]))
    return tuple(out)


def _pre_row(k: SimplicialMap, row) -> tuple[int, ...]:
    """``k`` followed by the map with global row ``row`` out of ``k.codomain``."""
    Y = k.domain
    return tuple(row[k.codomain.flat.to_global(n, k.levels[n][x])] for n in range(Y.max_dim + 1) for x in range(Y.size(n)))


def _vcompose(nu, phi) -> tuple[tuple[int, ...], ...]:
    """``nu ∘ phi`` for componentwise index tables."""
    return tuple(tuple(nu[c][e] for e in row) for c, row in enumerate(phi))


def check_naturality_L(k: SimplicialMap, X2: FiberedComplex, X: FiberedComplex, nu, F: Presheaf, F2: Presheaf) -> CheckReport:
    """Transposition ``Hom(L X, F) -> Hom(X, G F)`` commutes with ``k: X2 -> X`` and ``nu: F -> F2``."""
    R, R2 = Rectification(X), Rectification(X2)
    D = X.total.max_dim
    GF, GF2 = grothendieck(F, D), grothendieck(F2, D)
    Lk = L_map(k, R2, R)
    Gnu = G_map(nu, GF, GF2)
    squares = 0
    for phi in natural_transformations(R.presheaf, F):
        t = transpose_L(X, R, GF, F, phi)
        if transpose_L(X2, R2, GF, F, _vcompose(phi, Lk)) != _pre_row(k, t):
            return CheckReport("naturality-L", False, {"variable": "X", "phi": phi}, {"squares": squares})
        if transpose_L(X, R, GF2, F2, _vcompose(nu, phi)) != _then_row(t, GF.total, Gnu):
            return CheckReport("naturality-L", False, {"variable": "F", "phi": phi}, {"squares": squares})
        squares += 2
    return CheckReport("naturality-L", True, None, {"squares": squares})


def check_naturality_R(nu, F2: Presheaf, F: Presheaf, k: SimplicialMap, X: FiberedComplex, X2: FiberedComplex) -> CheckReport:
    """Transposition ``Hom(G F, X) -> Hom(F, R X)`` commutes with ``nu: F2 -> F`` and ``k: X -> X2``."""
    S, S2 = Sections(X), Sections(X2)
    D = X.total.max_dim
    GF, GF2 = grothendieck(F, D), grothendieck(F2, D)
    Gnu = G_map(nu, GF2, GF)
    C = F.base
    Rk = tuple(
        tuple(S2._row_index[c][_then_row(row, X.total, k)] for row in S.rows[c]) for c in range(C.n_objects)
    )
    squares = 0
    for psi in maps_over(GF, X):
        t = transpose_R(F, GF, S, psi)
        if transpose_R(F2, GF2, S, _pre_row(Gnu, psi)) != _vcompose(t, nu):
            return CheckReport("naturality-R", False, {"variable": "F", "psi": psi}, {"squares": squares})
        if transpose_R(F, GF, S2, _then_row(psi, X.total, k)) != _vcompose(Rk, t):
            return CheckReport("naturality-R", False, {"variable": "X", "psi": psi}, {"squares": squares})
        squares += 2
    return CheckReport("naturality-R", True, None, {"squares": squares})


# ----------------------------------------------------------------------
# classification diagram


def string_category(C: FinCategory, W: FinCategory, w_incl: FunctorMap, n: int) -> FinCategory:
    """Objects: n-strings of ``W``-morphisms; morphisms: natural transformations in ``C``."""
    NW = W.nerve(n)
    objs = [(s[0], tuple(w_incl.mor_map[m] for m in s[1])) for s in NW.labels[n]]
    objs = [(tuple(w_incl.obj_map[o] for o in s[0]), s[1]) for s in objs]
    mors = []
    for s in objs:
        for t in objs:
            choices = [[]]
            for j in range(n + 1):
                choices = [ch + [f] for ch in choices for f in C.hom(s[0][j], t[0][j])]
            for comps in choices:
                if all(C.compose(t[1][j - 1], comps[j]) == C.compose(comps[j - 1], s[1][j - 1]) for j in range(1, n + 1)):
                    mors.append((s, t, tuple(comps)))
    comp = {}
    by_src = {}
    for m in mors:
        by_src.setdefault(m[0], []).append(m)
    for f in mors:
        for g in by_src.get(f[1], ()):
            comp[(g, f)] = (f[0], g[1], tuple(C.compose(g[2][j], f[2][j]) for j in range(n + 1)))
    return FinCategory(
        objs,
        [(m, m[0], m[1]) for m in mors],
        {s: (s, s, tuple(C.ident[o] for o in s[0])) for s in objs},
        comp,
        check=False,
    )


def classification_diagram(C: FinCategory, W: FinCategory, w_incl: FunctorMap, max_m: int, max_n: int) -> BiSimplicialSet:
    """Entry ``(m, n)``: m-strings in the category of n-strings of ``W``-morphisms.

    Equivalently, grids ``[m] x [n]`` in ``C`` whose n-direction arrows lie in ``W``.
    """
    if w_incl.source is not W or w_incl.target is not C:
        raise ValueError("w_incl must include W into C")
    if set(w_incl.obj_map) != set(range(C.n_objects)):
        raise ValidationError("W must contain every object")
    cats = [string_category(C, W, w_incl, n) for n in range(max_n + 1)]
    nerves = [A.nerve(max_m) for A in cats]

    def label(n, objs, mors):
        A = cats[n]
        return (tuple(A.objects[o] for o in objs), tuple(A.morphisms[m][2] for m in mors))

    def levels(m, n):
        return [label(n, *s) for s in nerves[n].labels[m]]

    def act_h(theta, cell):
        objs, mors = cell
        n = len(objs[0][0]) - 1
        vals = theta.values
        new_objs = tuple(objs[v] for v in vals)
        new_mors = []
        for k in range(1, len(vals)):
            lo, hi = vals[k - 1], vals[k]
            comps = [C.ident[o] for o in objs[hi][0]]
            for idx in range(hi - 1, lo - 1, -1):
                comps = [C.compose(mors[idx][j], comps[j]) for j in range(n + 1)]
            new_mors.append(tuple(comps))
        return new_objs, tuple(new_mors)

    def act_v(phi, cell):
        objs, mors = cell
        return (
            tuple(string_act(C, phi, s) for s in objs),
            tuple(tuple(comps[v] for v in phi.values) for comps in mors),
        )

    return BiSimplicialSet.from_action(max_m, max_n, levels, act_h, act_v, name="classification")
