"""Base change, direct image, the comma object D/i, left Kan extension and (co)limits.

Orientation: a cell of ``(D/i)_{m,n}`` is a pair ``(sigma, tau)`` with
``sigma`` an ``(m+n+1)``-string of ``D`` and ``tau`` an n-string of ``C``
such that vertices ``0..n`` of ``sigma`` are ``i(tau)``.  Vertices
``n+1..m+n+1`` carry the free ``D``-part, read off by ``beta(j) = n+1+j``.
So a vertex of ``D/i`` is a morphism ``d -> i(c)``, the comma shape that
computes left Kan extensions of presheaves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels

from .category import (
    FinCategory,
    FunctorMap,
    Presheaf,
    is_equivalence,
    natural_transformations,
    string_act,
)
from .errors import PreconditionError
from .fibered import FiberedComplex
from .fibrations import fiberwise_weq, right_fibration_check
from .grothendieck import G_map, Rectification, grothendieck, unit
from .ordinal import OrdinalMap, special_map
from .report import CheckReport
from .simplicial import (
    BiSimplicialSet,
    SimplicialMap,
    SimplicialSet,
    component_labels,
    enumerate_maps,
    pi0,
    pullback,
)


def _nerve_map(i: FunctorMap, D: int, X_base: SimplicialSet | None = None) -> SimplicialMap:
    m = i.nerve_map(D)
    src = X_base if X_base is not None else i.source.nerve(D)
    return SimplicialMap(src, i.target.nerve(D), m.levels)


def i_shriek(X: FiberedComplex, i: FunctorMap) -> FiberedComplex:
    """Postcompose the projection with ``N(i)``."""
    if X.category is not i.source:
        raise ValueError("functor must start at the complex's category")
    D = X.total.max_dim
    proj = X.projection.then(_nerve_map(i, D, X.base))
    return FiberedComplex(X.total, proj.codomain, proj, category=i.target, name=f"i!({X.name or 'X'})")


def base_change(Y: FiberedComplex, i: FunctorMap) -> FiberedComplex:
    """``Y x_{ND} NC``; simplices are pairs ``(y label, string)``."""
    if Y.category is not i.target:
        raise ValueError("functor must land in the complex's category")
    D = Y.total.max_dim
    Ni = _nerve_map(i, D)
    Ni = SimplicialMap(Ni.domain, Y.base, Ni.levels)
    P, pr_y, pr_c = pullback(Y.projection, Ni, name=f"i*({Y.name or 'Y'})")
    return FiberedComplex(P, pr_c.codomain, pr_c, category=i.source, name=P.name)


# ----------------------------------------------------------------------
# D/i


@dataclass
class DOverI:
    """``D/i`` with its projections to ``N(D)`` (via ``beta``) and to ``N(C)``."""

    functor: FunctorMap
    cells: BiSimplicialSet
    to_D: tuple  # to_D[m][n][x] -> index in N(D)_m
    to_C: tuple  # to_C[m][n][x] -> index in N(C)_n


def _shift(phi: OrdinalMap, m: int) -> OrdinalMap:
    """``[m+n'+1] -> [m+n+1]``: ``phi`` on ``0..n'``, shifted identity above."""
    n2, n = phi.source_dim, phi.target_dim
    return OrdinalMap(m + n2 + 1, m + n + 1, tuple(phi.values) + tuple(n + 1 + j for j in range(m + 1)))


def d_over_i(i: FunctorMap, max_m: int, max_n: int) -> DOverI:
    """The bisimplicial comma object ``(D/i)_{m,n} = D_{m+n+1} x_{D_n} C_n``."""
    C, Dc = i.source, i.target
    top = max_m + max_n + 1
    ND = Dc.nerve(top)
    NC = C.nerve(max_n)

    def i_string(tau):
        return tuple(i.obj_map[o] for o in tau[0]), tuple(i.mor_map[f] for f in tau[1])

    def levels(m, n):
        out = []
        by_prefix: dict = {}
        for sigma in ND.labels[m + n + 1]:
            prefix = (sigma[0][: n + 1], sigma[1][:n])
            by_prefix.setdefault(prefix, []).append(sigma)
        for tau in NC.labels[n]:
            for sigma in by_prefix.get(i_string(tau), ()):
                out.append((sigma, tau))
        return out

    def act_h(theta, cell):
        sigma, tau = cell
        n = len(tau[0]) - 1
        J = special_map("extend_J", j=theta, m=theta.source_dim, n=n)
        return string_act(Dc, J, sigma), tau

    def act_v(phi, cell):
        sigma, tau = cell
        m = len(sigma[0]) - len(tau[0]) - 1
        return string_act(Dc, _shift(phi, m), sigma), string_act(C, phi, tau)

    W = BiSimplicialSet.from_action(max_m, max_n, levels, act_h, act_v, name="D/i")
    NDm = Dc.nerve(max_m)
    to_D, to_C = [], []
    for m in range(max_m + 1):
        rowD, rowC = [], []
        for n in range(max_n + 1):
            beta = special_map("beta", m=m, n=n)
            rowD.append(tuple(NDm.index(m, string_act(Dc, beta, sigma)) for sigma, _ in W.labels[m][n]))
            rowC.append(tuple(NC.index(n, tau) for _, tau in W.labels[m][n]))
        to_D.append(tuple(rowD))
        to_C.append(tuple(rowC))
    return DOverI(i, W, tuple(to_D), tuple(to_C))


def d_over_i_triples(i: FunctorMap, m: int, n: int) -> list:
    """Independent description of ``(D/i)_{m,n}``: ``(delta, w, tau)`` with ``delta`` an
    m-string of ``D``, ``tau`` an n-string of ``C`` and ``w: delta_0 -> i(tau_n)``."""
    C, Dc = i.source, i.target
    out = []
    for tau in C.nerve(n).labels[n]:
        c_n = tau[0][-1]
        for delta in Dc.nerve(m).labels[m]:
            for w in Dc.hom(delta[0][0], i.obj_map[c_n]):
                out.append((delta, w, tau))
    return out


def triple_of_cell(i: FunctorMap, cell) -> tuple:
    sigma, tau = cell
    n = len(tau[0]) - 1
    return (sigma[0][n + 1 :], sigma[1][n + 1 :]), sigma[1][n], tau


# ----------------------------------------------------------------------
# Kan extension


def lan_oracle(F: Presheaf, i: FunctorMap) -> Presheaf:
    """Pointwise left Kan extension: ``Lan(F)(d)`` is the quotient of
    ``{(c, u: d -> i(c), x in F(c))}`` by ``(c, i(g) u, x) ~ (c', u, F(g) x)``."""
    C, Dc = i.source, i.target
    values, classes, lookup = [], [], []
    for d in range(Dc.n_objects):
        elems = [(c, u, x) for c in range(C.n_objects) for u in Dc.hom(d, i.obj_map[c]) for x in range(F.size(c))]
        index = {e: k for k, e in enumerate(elems)}
        parent = list(range(len(elems)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in range(C.n_morphisms):
            c2, c = C.src[g], C.tgt[g]
            for u in Dc.hom(d, i.obj_map[c2]):
                for x in range(F.size(c)):
                    a = find(index[(c, Dc.compose(i.mor_map[g], u), x)])
                    b = find(index[(c2, u, F.act(g, x))])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        roots = sorted({find(k) for k in range(len(elems))})
        rid = {r: k for k, r in enumerate(roots)}
        values.append(tuple((C.objects[elems[r][0]], Dc.morphisms[elems[r][1]], F.values[elems[r][0]][elems[r][2]]) for r in roots))
        classes.append([rid[find(k)] for k in range(len(elems))])
        lookup.append((elems, index, roots))
    action = []
    for h in range(Dc.n_morphisms):
        d2, d = Dc.src[h], Dc.tgt[h]
        elems, _, roots = lookup[d]
        _, index2, _ = lookup[d2]
        action.append([classes[d2][index2[(elems[r][0], Dc.compose(elems[r][1], h), elems[r][2])]] for r in roots])
    return Presheaf(Dc, values, action, name=f"Lan({F.name or 'F'})", check=False)


def kan_extend(X: FiberedComplex, i: FunctorMap, max_dim: int | None = None, require_fibration: bool = True) -> FiberedComplex:
    """Homotopy left Kan extension of a right fibration ``X -> NC`` along ``i``.

    Level ``m`` is ``pi_0`` in the n-direction of ``(D/i)_{m,.} x_{C_.} X_.``;
    its simplices are labelled by the least vertex ``(cell, x)`` of their class.
    """
    if require_fibration:
        rep = right_fibration_check(X.projection, "cond2")
        if not rep.passed:
            raise PreconditionError("kan_extend needs a right fibration (rectify first)", report=rep)
    M = X.total.max_dim if max_dim is None else max_dim
    DI = d_over_i(i, M, 1)
    W = DI.cells
    T, p = X.total, X.projection
    NC = i.source.nerve(1)
    if p.codomain.max_dim < 1:
        raise ValueError("total complex needs edges")
    # level m: vertices (w0, x) with to_C = p(x); edges (w1, e)
    reps_by_level, class_of = [], []
    for m in range(M + 1):
        x_over = {}
        for x in range(T.size(0)):
            x_over.setdefault(p.levels[0][x], []).append(x)
        e_over = {}
        for e in range(T.size(1)):
            e_over.setdefault(p.levels[1][e], []).append(e)
        verts = [(w, x) for w in range(W.size(m, 0)) for x in x_over.get(DI.to_C[m][0][w], ())]
        vidx = {v: k for k, v in enumerate(verts)}
        src, dst = [], []
        for w in range(W.size(m, 1)):
            for e in e_over.get(DI.to_C[m][1][w], ()):
                # faces in the n-direction
                src.append(vidx[(W.vfaces[m][1][0][w], T.faces[1][0][e])])
                dst.append(vidx[(W.vfaces[m][1][1][w], T.faces[1][1][e])])
        roots = kernels.components(len(verts), np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64)) if verts else []
        reps = sorted({int(r) for r in roots})
        reps_by_level.append([verts[r] for r in reps])
        class_of.append({v: verts[int(roots[k])] for k, v in enumerate(verts)})

    H0 = W.horizontal(0)

    def act(theta, rep):
        w, x = rep
        return class_of[theta.source_dim][(H0.act(theta, w), x)]

    K = SimplicialSet.from_action(M, lambda m: reps_by_level[m], act, name=f"Lan({X.name or 'X'})")
    ND = i.target.nerve(M)
    proj = SimplicialMap(K, ND, [[DI.to_D[m][0][w] for w, _ in reps_by_level[m]] for m in range(M + 1)])
    return FiberedComplex(K, ND, proj, category=i.target, name=K.name)


# ----------------------------------------------------------------------
# colimits and limits


def hocolim(X: FiberedComplex) -> list[list[int]]:
    """Components of the total complex."""
    return pi0(X.total)


def sections(Y: FiberedComplex) -> list[tuple[int, ...]]:
    """Maps ``NB -> Y`` over ``NB`` (sections of the projection), as global rows."""
    B = Y.base
    _, rows = enumerate_maps(B, Y.total, base_domain=SimplicialMap.identity(B), base_codomain=Y.projection)
    return [tuple(int(v) for v in r) for r in rows]


# ----------------------------------------------------------------------
# Dwyer-Kan invariance


def dk_invariance_probe(
    i: FunctorMap,
    fibrations: list[FiberedComplex],
    test_presheaves: list[Presheaf] | None = None,
) -> CheckReport:
    """Unit ``X -> i^* G L i_! X`` is fiberwise bijective, and ``i^*`` reflects fiberwise bijections.

    Rejects with :class:`PreconditionError` unless ``i`` is an equivalence.
    """
    eq = is_equivalence(i)
    if not eq.passed:
        raise PreconditionError("functor is not an equivalence of categories", report=eq)
    from .category import constant_presheaf, representable

    cost = {"fibrations": 0, "maps": 0}
    for X in fibrations:
        cost["fibrations"] += 1
        Y = i_shriek(X, i)
        R = Rectification(Y)
        u, GL = unit(Y, R)
        back = base_change(GL, i)
        # x -> (unit(x), p(x))
        T = X.total
        levels = []
        for n in range(T.max_dim + 1):
            row = []
            for x in range(T.size(n)):
                lab = (GL.total.labels[n][u.levels[n][x]], X.base.labels[n][X.projection.levels[n][x]])
                row.append(back.total.index(n, lab))
            levels.append(row)
        eta = SimplicialMap(T, back.total, levels)
        rep = fiberwise_weq(eta, X.projection, SimplicialMap(back.total, X.base, back.projection.levels))
        if not rep.passed:
            return CheckReport("dk-invariance", False, {"fibration": X.name, "unit": rep.witness}, cost)
    Dc = i.target
    if test_presheaves is None:
        test_presheaves = [constant_presheaf(Dc, ["*"], name="point")] + [representable(Dc, d) for d in range(Dc.n_objects)]
    D = fibrations[0].total.max_dim if fibrations else 2
    G = {id(F): grothendieck(F, D) for F in test_presheaves}
    pulled = {k: base_change(v, i) for k, v in G.items()}
    for F in test_presheaves:
        for F2 in test_presheaves:
            for nu in natural_transformations(F, F2, limit=8):
                cost["maps"] += 1
                up = G_map(nu, G[id(F)], G[id(F2)])
                down = _base_changed(pulled[id(F)], pulled[id(F2)], nu)
                up_ok = fiberwise_weq(up, G[id(F)].projection, G[id(F2)].projection).passed
                down_ok = fiberwise_weq(down, pulled[id(F)].projection, pulled[id(F2)].projection).passed
                if down_ok and not up_ok:
                    return CheckReport("dk-invariance", False,
                                       {"reason": "base change does not reflect a bijection", "presheaves": [F.name, F2.name]},
                                       cost)
    return CheckReport("dk-invariance", True, {"equivalence": eq.witness}, cost)


def _base_changed(P: FiberedComplex, P2: FiberedComplex, nu) -> SimplicialMap:
    return SimplicialMap.from_function(
        P.total, P2.total, lambda k, cell: ((cell[0][0], nu[cell[0][0][0][0]][cell[0][1]]), cell[1])
    )
