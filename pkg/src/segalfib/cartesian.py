"""Category-valued presheaves: the bisimplicial Grothendieck construction,
box products of representables, and the Cartesian fibration checker."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb

from .category import (
    FinCategory,
    FunctorMap,
    Presheaf,
    discrete_category,
    natural_transformations,
    over_category,
    poset_category,
    representable,
    string_act,
    string_target_map,
)
from .errors import ValidationError
from .fibered import FiberedComplex
from .fibrations import is_complete, right_fibration_check, segal_check
from .grothendieck import L_map, rectify
from .ordinal import OrdinalMap
from .report import CheckReport
from .simplicial import (
    BiSimplicialMap,
    BiSimplicialSet,
    SimplicialMap,
    SimplicialSet,
    box_product,
    constant,
    constant_in_n,
    product,
    product_projections,
    standard_simplex,
)


@dataclass
class DoubleFibered:
    """``projection: total -> base`` of bisimplicial sets; ``base`` is a nerve held constant in n."""

    total: BiSimplicialSet
    base: BiSimplicialSet
    projection: BiSimplicialMap
    category: FinCategory | None = None
    name: str | None = None

    def __post_init__(self):
        if self.projection.domain is not self.total or self.projection.codomain is not self.base:
            raise ValidationError("projection must run from total to base")

    def validate(self) -> None:
        self.total.validate()
        self.base.validate()
        self.projection.validate()

    def row(self, n: int) -> SimplicialMap:
        return self.projection.horizontal(n)

    def column(self, m: int) -> SimplicialSet:
        return self.total.vertical(m)


def _map_string(F: FunctorMap, y):
    return tuple(F.obj_map[o] for o in y[0]), tuple(F.mor_map[f] for f in y[1])


def grothendieck_cat(F: Presheaf, max_m: int, max_n: int) -> DoubleFibered:
    """Cells ``(m, n)``: ``(s, y)`` with ``s`` an m-string of ``C`` and ``y`` an n-string of ``F(c_0)``."""
    if F.kind != "CAT":
        raise ValueError("grothendieck_cat needs a CAT presheaf")
    C = F.base
    NC = C.nerve(max_m)
    fibers = [F.values[c].nerve(max_n) for c in range(C.n_objects)]

    def levels(m, n):
        return [(s, y) for s in NC.labels[m] for y in fibers[s[0][0]].labels[n]]

    def act_h(theta, cell):
        s, y = cell
        g = string_target_map(C, s, theta.values[0])
        return string_act(C, theta, s), _map_string(F.action[g], y)

    def act_v(phi, cell):
        s, y = cell
        return s, string_act(F.values[s[0][0]], phi, y)

    name = f"G({F.name or 'F'})"
    total = BiSimplicialSet.from_action(max_m, max_n, levels, act_h, act_v, name=name)
    base = constant_in_n(NC, max_n, name=NC.name)
    proj = BiSimplicialMap(
        total,
        base,
        [[[NC.index(m, s) for s, _ in total.labels[m][n]] for n in range(max_n + 1)] for m in range(max_m + 1)],
    )
    return DoubleFibered(total, base, proj, category=C, name=name)


def cartesian_check(P: DoubleFibered, mode: str = "square") -> CheckReport:
    """Every row is a right fibration and every column is Segal.

    Column completeness is reported in ``cost['incomplete_columns']`` and
    does not affect the verdict.
    """
    cost: Counter = Counter()
    for n in range(P.total.max_n + 1):
        rep = right_fibration_check(P.row(n), mode)
        cost["rows"] += 1
        if not rep.passed:
            return CheckReport("cartesian", False, {"direction": "row", "n": n, "witness": rep.witness}, cost)
    incomplete = []
    for m in range(P.total.max_m + 1):
        col = P.column(m)
        rep = segal_check(col)
        cost["columns"] += 1
        if not rep.passed:
            return CheckReport("cartesian", False, {"direction": "column", "m": m, "witness": rep.witness}, cost)
        if P.total.max_n >= 1 and not is_complete(col).passed:
            incomplete.append(m)
    cost["incomplete_columns"] = len(incomplete)
    return CheckReport("cartesian", True, {"incomplete_columns": incomplete}, cost)


# ----------------------------------------------------------------------
# CAT presheaves


def discrete_cat_presheaf(F: Presheaf) -> Presheaf:
    """A SET presheaf viewed as CAT-valued with discrete values."""
    C = F.base
    vals = [discrete_category(F.values[c], name=f"{F.name}({C.objects[c]})") for c in range(C.n_objects)]
    act = [
        FunctorMap(vals[C.tgt[f]], vals[C.src[f]], F.action[f], [vals[C.src[f]].ident[x] for x in F.action[f]], check=False)
        for f in range(C.n_morphisms)
    ]
    return Presheaf(C, vals, act, kind="CAT", name=F.name)


def constant_cat_presheaf(C: FinCategory, A: FinCategory, name=None) -> Presheaf:
    ident = FunctorMap.identity(A)
    return Presheaf(C, [A] * C.n_objects, [ident] * C.n_morphisms, kind="CAT", name=name or f"const({A.name})")


def bis_representable_L(C: FinCategory, string, n: int) -> tuple[SimplicialSet, Presheaf]:
    """``L`` of the bisimplicial representable on ``(string, [n])``: ``(Delta[n], [n]^op x Hom(-, c_0))``.

    ``[n]^op`` is used so that its nerve is ``Delta[n]`` itself.  The value
    at ``c`` is a poset on pairs ``(j, u)``; ``(j, u) -> (i, u)`` for ``i <= j``.
    """
    c0 = string[0][0]
    hom = representable(C, c0)
    vals = []
    for c in range(C.n_objects):
        elems = [(j, C.morphisms[u]) for u in hom.values[c] for j in range(n + 1)]
        rel = [((j + 1, u), (j, u)) for j, u in elems if j < n]
        vals.append(poset_category(elems, rel, name=f"[{n}]^op x Hom({C.objects[c]},{C.objects[c0]})"))
    act = []
    for f in range(C.n_morphisms):
        a, b = C.src[f], C.tgt[f]
        A, B = vals[b], vals[a]

        def on_obj(lab):
            j, u = lab
            return j, C.morphisms[C.compose(C.mor_index[u], f)]

        om = {lab: on_obj(lab) for lab in A.objects}
        mm = {}
        for k, lab in enumerate(A.morphisms):
            x, y = A.objects[A.src[k]], A.objects[A.tgt[k]]
            X, Y = on_obj(x), on_obj(y)
            mm[lab] = B.morphisms[B.hom(B.obj_index[X], B.obj_index[Y])[0]]
        act.append(FunctorMap.from_labels(A, B, om, mm))
    F = Presheaf(C, vals, act, kind="CAT", name=f"L(Delta[{len(string[0]) - 1},{n}])")
    return standard_simplex(n), F


def representable_box(C: FinCategory, c: int, n: int, max_m: int) -> BiSimplicialSet:
    """``N(C/c) box Delta[n]``."""
    S, _ = over_category(C, c)
    return box_product(S.nerve(max_m), standard_simplex(n), name=f"N({S.name}) box Delta[{n}]")


def compare_box(C: FinCategory, string, n: int, max_m: int) -> CheckReport:
    """Is ``G L(Delta[m, n])`` isomorphic to ``N(C/c_0) box Delta[n]``, entrywise and compatibly?"""
    c0 = string[0][0]
    _, F = bis_representable_L(C, string, n)
    GL = grothendieck_cat(F, max_m, n)
    S, _ = over_category(C, c0)
    box = box_product(S.nerve(max_m), standard_simplex(n))
    Delta = standard_simplex(n)
    NS = S.nerve(max_m)

    def to_box(m, k, cell):
        s, y = cell
        A = F.values[s[0][0]]
        objs = [A.objects[o] for o in y[0]]
        u = C.mor_index[objs[0][1]]
        js = tuple(o[0] for o in objs)
        # the over-string: u_k = u f_1 ... f_k
        us = [u]
        for f in s[1]:
            us.append(C.compose(us[-1], f))
        over_objs = tuple(S.obj_index[C.morphisms[v]] for v in us)
        over_mors = tuple(
            S.mor_index[(C.morphisms[s[1][t]], C.morphisms[us[t + 1]], C.morphisms[us[t]])] for t in range(len(s[1]))
        )
        return NS.index(m, (over_objs, over_mors)), Delta.index(k, js)

    phi = BiSimplicialMap.from_function(GL.total, box, to_box)
    sizes = {"entries": (max_m + 1) * (n + 1)}
    for m in range(max_m + 1):
        for k in range(n + 1):
            if GL.total.size(m, k) != box.size(m, k) or len(set(phi.levels[m][k])) != box.size(m, k):
                return CheckReport("box-comparison", False, {"entry": [m, k], "sizes": [GL.total.size(m, k), box.size(m, k)]}, sizes)
    try:
        phi.validate()
    except ValidationError as exc:
        return CheckReport("box-comparison", False, {"reason": str(exc)}, sizes)
    return CheckReport("box-comparison", True, {"sizes": [list(r) for r in box.sizes()]}, sizes)


def box_entry_count(C: FinCategory, c: int, n: int, i: int, j: int) -> int:
    """``|N(C/c)_i| * |monotone maps [j] -> [n]|``; the second factor is ``binom(n+j+1, j+1)``."""
    S, _ = over_category(C, c)
    return S.nerve(i).size(i) * comb(n + j + 1, j + 1)


def check_cat_adjunction(F: Presheaf, string, n: int) -> CheckReport:
    """``Hom(L(Delta[m,n]), F)`` against ``Hom_{NC}(Delta[m,n], G F)``.

    The left side is enumerated as natural transformations
    ``Hom(-, c_0) -> N(F(-))_n``; a functor ``[n]^op x Hom(c, c_0) -> F(c)``
    is a family of n-strings indexed by ``Hom(c, c_0)``.  The right side is
    the set of cells of ``G F`` at ``(m, n)`` over ``string``.
    """
    C = F.base
    m = len(string[0]) - 1
    c0 = string[0][0]
    Fn = F.simplex_presheaf(n)
    left = set(natural_transformations(representable(C, c0), Fn))
    G = grothendieck_cat(F, m, n)
    right = [cell for cell in G.total.labels[m][n] if cell[0] == string]
    seen = set()
    for s, y in right:
        # transpose: u -> N(F(u))(y)
        nu = tuple(
            tuple(Fn.index(c, _map_string(F.action[u], y)) for u in C.hom(c, c0)) for c in range(C.n_objects)
        )
        if nu not in left:
            return CheckReport("cat-adjunction", False, {"cell": str(y), "reason": "transpose is not natural"})
        seen.add(nu)
    ok = len(seen) == len(right) == len(left)
    return CheckReport(
        "cat-adjunction", ok, {"left": len(left), "right": len(right), "image": len(seen)}, {"maps": len(left)}
    )


def unit_shadow_check(C: FinCategory, string, n: int, max_dim: int = 3) -> CheckReport:
    """Row by row, ``L`` of the unit ``Delta[m,n] -> G L(Delta[m,n])`` is an isomorphism.

    Row ``k`` of ``Delta[m,n]`` is ``Delta[m] x Delta[n]_k`` over ``N(C)``; the
    unit sends ``(v, b)`` to ``(v^* s, the string (b, u_v))`` where ``u_v`` is the
    map from ``c_{v(0)}`` to ``c_0`` carried by ``s``.
    """
    m = len(string[0]) - 1
    Delta, F = bis_representable_L(C, string, n)
    GL = grothendieck_cat(F, max_dim, n)
    NC = C.nerve(max_dim)
    cost: Counter = Counter()
    for k in range(n + 1):
        Sm = standard_simplex(m, max_dim)
        K = constant(Delta.labels[k], max_dim, name=f"Delta[{n}]_{k}")
        P = product(Sm, K)
        p1, _ = product_projections(Sm, K, P)
        down = SimplicialMap.from_function(Sm, NC, lambda d, v: string_act(C, OrdinalMap(d, m, v), string))
        src = FiberedComplex(P, NC, p1.then(down), category=C)
        row = GL.row(k)
        dst = FiberedComplex(row.domain, NC, SimplicialMap(row.domain, NC, row.levels), category=C)

        def cell(pair):
            v, js = pair
            s2 = string_act(C, OrdinalMap(len(v) - 1, m, v), string)
            u = C.morphisms[string_target_map(C, string, v[0])]
            A = F.values[s2[0][0]]
            y = tuple(A.obj_index[(j, u)] for j in js)
            return s2, (y, tuple(A.hom(y[t + 1], y[t])[0] for t in range(len(y) - 1)))

        eta = SimplicialMap.from_function(P, row.domain, lambda d, pair: cell(pair))
        R_dst = rectify(dst)
        dst_size = [R_dst.presheaf.size(c) for c in range(C.n_objects)]
        comps = L_map(eta, rectify(src), R_dst)
        cost["rows"] += 1
        for c, comp in enumerate(comps):
            if len(set(comp)) != len(comp) or len(comp) != dst_size[c]:
                return CheckReport("unit-shadow", False, {"row": k, "object": C.objects[c]}, cost)
    return CheckReport("unit-shadow", True, None, cost)


def corpus_cat_presheaves(C: FinCategory) -> list[Presheaf]:
    """CAT presheaves exercised on the corpus: discrete lifts, constants, and ``L`` of representables."""
    from .category import corpus_presheaves, ordinal_category

    out = [discrete_cat_presheaf(F) for F in corpus_presheaves(C) if F.name in ("point", "fork", "twist", "swap", "retract", "transport", "mixed", "chain", "zigzag")]
    out.append(constant_cat_presheaf(C, ordinal_category(1)))
    out.append(bis_representable_L(C, ((0,), ()), 1)[1])
    return out


def trivial_double(C: FinCategory, Y: SimplicialSet, max_m: int) -> DoubleFibered:
    """``N(C) box Y -> N(C)``: a product in the n-direction."""
    NC = C.nerve(max_m)
    total = box_product(NC, Y, name=f"N({C.name}) box {Y.name}")
    base = constant_in_n(NC, Y.max_dim, name=NC.name)
    proj = BiSimplicialMap(
        total, base, [[[a for a, _ in total.labels[m][n]] for n in range(Y.max_dim + 1)] for m in range(max_m + 1)]
    )
    return DoubleFibered(total, base, proj, category=C, name=total.name)


def embed_constant(p: FiberedComplex, max_n: int) -> DoubleFibered:
    """A complex over ``N(C)`` held constant in the n-direction."""
    total = constant_in_n(p.total, max_n, name=p.name)
    base = constant_in_n(p.base, max_n, name=p.base.name)
    proj = BiSimplicialMap(total, base, [[p.projection.levels[m]] * (max_n + 1) for m in range(p.total.max_dim + 1)])
    return DoubleFibered(total, base, proj, category=p.category, name=p.name)
