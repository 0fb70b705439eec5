"""Decision procedures, with certificates, for Segal, fibration and equivalence conditions.

Discrete semantics throughout: a homotopy pullback is a strict pullback and
a weak equivalence is a bijection, so every condition is a finite check.
A morphism ``x -> y`` of a simplicial set is an edge ``e`` with ``d_0 e = x``
(source) and ``d_1 e = y`` (target); vertex 0 of a simplex is its ultimate
target.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from typing import Sequence

from .category import FinCategory, FunctorMap, over_category
from .errors import PreconditionError, ResourceError
from .fibered import FiberedComplex
from .ordinal import OrdinalMap, face
from .report import CheckReport
from .simplicial import (
    SimplicialMap,
    SimplicialSet,
    constant,
    enumerate_maps,
    horn,
    internal_hom,
    pullback,
    standard_simplex,
)

MODES = ("square", "cond2", "cond3")
FAMILIES = ("right", "inner", "left")
ORIENTATIONS = ("paper", "mirror")


def _edge(n: int, i: int) -> OrdinalMap:
    return OrdinalMap(1, n, (i, i + 1))


def _lab(X: SimplicialSet, k: int, x: int):
    return X.labels[k][x]


# ----------------------------------------------------------------------
# Segal


def segal_check(X: SimplicialSet) -> CheckReport:
    """Is ``X_n -> X_1 x_{X_0} ... x_{X_0} X_1`` bijective for ``2 <= n <= max_dim``?"""
    cost = Counter()
    for n in range(2, X.max_dim + 1):
        spines = {}
        for x in range(X.size(n)):
            sp = tuple(X.act(_edge(n, i), x) for i in range(n))
            cost["simplices"] += 1
            if sp in spines:
                return CheckReport(
                    "segal",
                    False,
                    {
                        "n": n,
                        "kind": "not injective",
                        "simplices": [_lab(X, n, spines[sp]), _lab(X, n, x)],
                        "spine": [_lab(X, 1, e) for e in sp],
                    },
                    dict(cost),
                )
            spines[sp] = x
        missing = _missing_chain(X, n, spines, cost)
        if missing is not None:
            return CheckReport(
                "segal",
                False,
                {"n": n, "kind": "not surjective", "spine": [_lab(X, 1, e) for e in missing]},
                dict(cost),
            )
    return CheckReport(
        "segal", True, {"levels": list(range(2, X.max_dim + 1)), "sizes": list(X.sizes())}, dict(cost),
        details={"vacuous": X.max_dim < 2},
    )


def _missing_chain(X: SimplicialSet, n: int, spines: dict, cost: Counter):
    """A chain of ``n`` composable edges that is not a spine, if any."""
    by_target = defaultdict(list)
    for e in range(X.size(1)):
        by_target[X.faces[1][1][e]].append(e)
    # edge i of a spine has vertex 1 equal to vertex 0 of edge i+1; count
    # chains by their vertex 0 before searching for a missing one
    ways = [1] * X.size(0)
    for _ in range(n):
        nxt = [0] * X.size(0)
        for e in range(X.size(1)):
            nxt[X.faces[1][1][e]] += ways[X.faces[1][0][e]]
        ways = nxt
    cost["chains"] += sum(ways)
    if sum(ways) == len(spines):
        return None
    stack = [[e] for e in range(X.size(1))]
    while stack:
        chain = stack.pop()
        if len(chain) == n:
            if tuple(chain) not in spines:
                return tuple(chain)
            continue
        for e in by_target[X.faces[1][0][chain[-1]]]:
            stack.append(chain + [e])
    return None


def revalidate_segal_witness(X: SimplicialSet, witness: dict) -> bool:
    """True when a failing Segal witness is a genuine violation."""
    n = witness["n"]
    spine = tuple(X.index(1, lab) for lab in witness["spine"])
    for i in range(n - 1):
        if X.faces[1][0][spine[i]] != X.faces[1][1][spine[i + 1]]:
            return False
    matches = [x for x in range(X.size(n)) if tuple(X.act(_edge(n, i), x) for i in range(n)) == spine]
    if witness["kind"] == "not injective":
        return len(matches) >= 2
    return len(matches) == 0


def require_segal(X: SimplicialSet, what: str = "input") -> None:
    rep = segal_check(X)
    if not rep.passed:
        raise PreconditionError(f"{what} is not a Segal set", report=rep)


# ----------------------------------------------------------------------
# right fibrations


def right_fibration_check(p: SimplicialMap, mode: str = "square") -> CheckReport:
    """Is ``p`` a right fibration?

    ``square``: ``(d_1, p): X_1 -> X_0 x_{B_0} B_1`` is bijective and ``X``
    is Segal.  ``cond2``: ``(a_n^*, p): X_n -> X_0 x_{B_0} B_n`` is
    bijective for every ``n >= 1``, ``a_n`` picking vertex 0.  ``cond3``:
    ``(d_n, p): X_n -> X_{n-1} x_{B_{n-1}} B_n`` is bijective for ``n >= 1``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    X, B = p.domain, p.codomain
    base_rep = segal_check(B)
    if not base_rep.passed:
        raise PreconditionError("base is not a Segal set", report=base_rep)
    cost = Counter()
    tables = {}
    if mode == "square":
        levels = [1] if X.max_dim >= 1 else []
    else:
        levels = list(range(1, X.max_dim + 1))
    for n in levels:
        if mode == "cond3":
            s = n - 1
            xmap = lambda x, n=n: X.faces[n][n][x]
            bmap = lambda b, n=n: B.faces[n][n][b]
            op = f"d_{n}"
        else:
            s = 0
            a_n = OrdinalMap(0, n, (0,))
            xmap = lambda x, a=a_n: X.act(a, x)
            bmap = lambda b, a=a_n: B.act(a, b)
            op = "d_1" if n == 1 else f"a_{n}"
        seen = {}
        for x in range(X.size(n)):
            key = (xmap(x), p.levels[n][x])
            cost["simplices"] += 1
            if key in seen:
                return CheckReport(
                    f"right-fibration[{mode}]",
                    False,
                    {
                        "n": n,
                        "map": op,
                        "kind": "lift not unique",
                        "simplices": [_lab(X, n, seen[key]), _lab(X, n, x)],
                        "over": [_lab(X, s, key[0]), _lab(B, n, key[1])],
                    },
                    dict(cost),
                )
            seen[key] = x
        fib = defaultdict(list)
        for y in range(X.size(s)):
            fib[p.levels[s][y]].append(y)
        for b in range(B.size(n)):
            for y in fib.get(bmap(b), ()):
                cost["pullback_pairs"] += 1
                if (y, b) not in seen:
                    return CheckReport(
                        f"right-fibration[{mode}]",
                        False,
                        {"n": n, "map": op, "kind": "no lift", "over": [_lab(X, s, y), _lab(B, n, b)]},
                        dict(cost),
                    )
        tables[n] = sorted((y, b, x) for (y, b), x in seen.items())
    if mode == "square":
        srep = segal_check(X)
        cost["segal_simplices"] += srep.cost.get("simplices", 0)
        if not srep.passed:
            return CheckReport(
                f"right-fibration[{mode}]", False, {"kind": "total not Segal", "segal": srep.witness}, dict(cost)
            )
    return CheckReport(f"right-fibration[{mode}]", True, {"bijections": tables}, dict(cost))


def revalidate_rightfib_witness(p: SimplicialMap, witness: dict) -> bool:
    """True when a failing right-fibration witness is a genuine violation."""
    X, B = p.domain, p.codomain
    if witness["kind"] == "total not Segal":
        return revalidate_segal_witness(X, witness["segal"])
    n = witness["n"]
    op = witness["map"]
    if op.startswith("d_") and op != "d_1":
        s, th = n - 1, face(n, n)
    else:
        s, th = 0, OrdinalMap(0, n, (0,))
    y = X.index(s, witness["over"][0])
    b = B.index(n, witness["over"][1])
    if p.levels[s][y] != B.act(th, b):
        return False
    lifts = [x for x in range(X.size(n)) if X.act(th, x) == y and p.levels[n][x] == b]
    if witness["kind"] == "no lift":
        return len(lifts) == 0
    return len(lifts) >= 2


def revalidate_rightfib_pass(p: SimplicialMap, witness: dict, mode: str = "cond2") -> bool:
    """Independently re-check a passing table: each entry is a lift and every pair is covered."""
    X, B = p.domain, p.codomain
    for n, rows in witness["bijections"].items():
        th = face(n, n) if mode == "cond3" else OrdinalMap(0, n, (0,))
        s = n - 1 if mode == "cond3" else 0
        pairs = set()
        for y, b, x in rows:
            if X.act(th, x) != y or p.levels[n][x] != b:
                return False
            pairs.add((y, b))
        want = {(y, b) for b in range(B.size(n)) for y in range(X.size(s)) if p.levels[s][y] == B.act(th, b)}
        if pairs != want or len(rows) != X.size(n):
            return False
    return True


# ----------------------------------------------------------------------
# horns


def horn_indices(n: int, family: str, orientation: str = "paper") -> list[int]:
    """Which horns ``Lambda^k[n]`` a family uses.

    With ``orientation="paper"`` a right fibration lifts against the horn
    made of all faces except ``d^0`` (so ``k = 0``); ``mirror`` swaps ends.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    if family == "inner":
        return list(range(1, n))
    right_end = 0 if orientation == "paper" else n
    if family == "right":
        return [right_end]
    return [n - right_end]


def horn_lift_check(
    p: SimplicialMap,
    family: str = "right",
    require_unique: bool = False,
    max_dim: int | None = None,
    orientation: str = "paper",
) -> CheckReport:
    """Does every horn in ``X`` over a simplex of ``B`` fill (uniquely)?"""
    X, B = p.domain, p.codomain
    D = min(X.max_dim, B.max_dim)
    top = D if max_dim is None else max_dim
    if top > D:
        raise ResourceError(
            f"horn lifting up to dimension {top} needs simplices of dimension {D + 1}, beyond max_dim",
            required=D + 1,
        )
    cost = Counter()
    worst_unique = True
    for n in range(1, top + 1):
        for k in horn_indices(n, family, orientation):
            rep = _horn_level(p, n, k, require_unique, cost)
            if rep is not None:
                return CheckReport(f"horn-lift[{family},{orientation}]", False, rep, dict(cost),
                                   details={"require_unique": require_unique})
            if cost.get("_nonunique"):
                worst_unique = False
    cost.pop("_nonunique", None)
    return CheckReport(
        f"horn-lift[{family},{orientation}]",
        True,
        {"dimensions": list(range(1, top + 1)), "unique": worst_unique},
        dict(cost),
        details={"require_unique": require_unique, "unique": worst_unique},
    )


def _horn_level(p: SimplicialMap, n: int, k: int, require_unique: bool, cost: Counter):
    X, B = p.domain, p.codomain
    H = horn(n, k, max_dim=n - 1)
    Xt = X.truncate(n - 1) if X.max_dim > n - 1 else X
    faces_idx = [i for i in range(n + 1) if i != k]
    face_pos = [H.flat.to_global(n - 1, H.index(n - 1, face(n, i).values)) for i in faces_idx]
    # B_n grouped by the horn-shaped tuple of faces
    b_by_faces = defaultdict(list)
    for b in range(B.size(n)):
        b_by_faces[tuple(B.faces[n][i][b] for i in faces_idx)].append(b)
    # X_n grouped by (image, faces)
    fillers = Counter()
    for x in range(X.size(n)):
        fillers[(p.levels[n][x],) + tuple(X.faces[n][i][x] for i in faces_idx)] += 1
    _, rows = enumerate_maps(H, Xt)
    start = int(Xt.flat.start[n - 1])
    for row in rows:
        xf = tuple(int(row[g]) - start for g in face_pos)
        bf = tuple(p.levels[n - 1][v] for v in xf)
        for b in b_by_faces.get(bf, ()):
            cost["horns"] += 1
            c = fillers.get((b,) + xf, 0)
            if c == 0 or (require_unique and c > 1):
                return {
                    "n": n,
                    "k": k,
                    "faces": {str(i): _lab(X, n - 1, v) for i, v in zip(faces_idx, xf)},
                    "base": _lab(B, n, b),
                    "fillers": c,
                }
            if c > 1:
                cost["_nonunique"] = 1
    return None


def revalidate_horn_witness(p: SimplicialMap, witness: dict) -> bool:
    """Recount fillers for a reported horn; True when the failure is genuine."""
    X, B = p.domain, p.codomain
    n, k = witness["n"], witness["k"]
    faces_idx = [i for i in range(n + 1) if i != k]
    xf = {i: X.index(n - 1, witness["faces"][str(i)]) for i in faces_idx}
    b = B.index(n, witness["base"])
    # the faces must form a horn: d_i d_j = d_{j-1} d_i
    for j in faces_idx:
        for i in faces_idx:
            if i < j and X.faces[n - 1][i][xf[j]] != X.faces[n - 1][j - 1][xf[i]]:
                return False
        if p.levels[n - 1][xf[j]] != B.faces[n][j][b]:
            return False
    c = sum(
        1
        for x in range(X.size(n))
        if p.levels[n][x] == b and all(X.faces[n][i][x] == xf[i] for i in faces_idx)
    )
    return c == witness["fillers"] and c != 1


def to_point(X: SimplicialSet) -> SimplicialMap:
    """The unique map to ``Delta[0]``."""
    P = standard_simplex(0, X.max_dim)
    return SimplicialMap(X, P, [[0] * X.size(k) for k in range(X.max_dim + 1)])


def quasicat_check(X: SimplicialSet, max_dim: int | None = None) -> CheckReport:
    """Inner horn filling up to ``max_dim``; uniqueness reported in ``details``."""
    rep = horn_lift_check(to_point(X), "inner", False, max_dim)
    return CheckReport("quasicategory", rep.passed, rep.witness, rep.cost, details={"unique": rep.details.get("unique", False) if rep.passed else False})


# ----------------------------------------------------------------------
# morphisms, homotopy category


def mor_set(X: SimplicialSet, x: int, y: int) -> list[int]:
    """Edges from ``x`` to ``y`` (source ``d_0``, target ``d_1``)."""
    return [e for e in range(X.size(1)) if X.faces[1][0][e] == x and X.faces[1][1][e] == y]


def _composer(X: SimplicialSet):
    """``(g, f) -> g ∘ f`` through the unique 2-simplex with spine ``(g, f)``."""
    table = {}
    for s in range(X.size(2)):
        g = X.act(_edge(2, 0), s)
        f = X.act(_edge(2, 1), s)
        table[(g, f)] = X.faces[2][1][s]
    return table


def ho_category(X: SimplicialSet) -> FinCategory:
    """The homotopy category of a Segal set (objects and morphisms keep ``X``'s labels)."""
    if X.max_dim < 2:
        raise ResourceError("the homotopy category needs 2-simplices", required=2)
    require_segal(X)
    comp = _composer(X)
    L0, L1 = X.labels[0], X.labels[1]
    return FinCategory(
        L0,
        [(L1[e], L0[X.faces[1][0][e]], L0[X.faces[1][1][e]]) for e in range(X.size(1))],
        {L0[v]: L1[X.degens[0][0][v]] for v in range(X.size(0))},
        {(L1[g], L1[f]): L1[h] for (g, f), h in comp.items()},
        name=f"ho({X.name})" if X.name else None,
        check=False,
    )


def homotopy_equivalences(X: SimplicialSet) -> list[int]:
    """Edges invertible in the homotopy category."""
    H = ho_category(X)
    return [e for e in range(X.size(1)) if H.is_iso(e)]


def is_complete(X: SimplicialSet) -> CheckReport:
    """Is every homotopy equivalence degenerate?"""
    he = homotopy_equivalences(X)
    degenerate = set(X.degens[0][0])
    for e in he:
        if e not in degenerate:
            H = ho_category(X)
            return CheckReport(
                "complete", False, {"equivalence": _lab(X, 1, e), "inverse": _lab(X, 1, H.inverse(e))},
                {"edges": X.size(1)},
            )
    return CheckReport("complete", True, {"equivalences": len(he)}, {"edges": X.size(1)})


def is_fiberwise_complete(p: SimplicialMap) -> CheckReport:
    """Is ``(d_1, p): X_1^he -> X_0 x_{B_0} B_1^he`` bijective?"""
    X, B = p.domain, p.codomain
    hx = homotopy_equivalences(X)
    hb = set(homotopy_equivalences(B))
    seen = {}
    for e in hx:
        if p.levels[1][e] not in hb:
            continue
        key = (X.faces[1][1][e], p.levels[1][e])
        if key in seen:
            return CheckReport("fiberwise-complete", False,
                               {"kind": "lift not unique", "edges": [_lab(X, 1, seen[key]), _lab(X, 1, e)]},
                               {"edges": len(hx)})
        seen[key] = e
    for b in sorted(hb):
        for y in range(X.size(0)):
            if p.levels[0][y] == B.faces[1][1][b] and (y, b) not in seen:
                return CheckReport("fiberwise-complete", False,
                                   {"kind": "no lift", "over": [_lab(X, 0, y), _lab(B, 1, b)]},
                                   {"edges": len(hx)})
    return CheckReport("fiberwise-complete", True, {"pairs": len(seen)}, {"edges": len(hx)})


def is_conservative(p: SimplicialMap) -> CheckReport:
    """Does every edge over a degenerate edge degenerate?"""
    X, B = p.domain, p.codomain
    degB = set(B.degens[0][0])
    degX = set(X.degens[0][0])
    for e in range(X.size(1)):
        if p.levels[1][e] in degB and e not in degX:
            return CheckReport("conservative", False, {"edge": _lab(X, 1, e)}, {"edges": e + 1})
    return CheckReport("conservative", True, None, {"edges": X.size(1)})


# ----------------------------------------------------------------------
# equivalences


def dwyer_kan_check(f: SimplicialMap) -> CheckReport:
    """Fully faithful on morphism sets and essentially surjective up to homotopy equivalence."""
    X, Y = f.domain, f.codomain
    require_segal(X, "domain")
    require_segal(Y, "codomain")
    cost = Counter()
    for x in range(X.size(0)):
        for y in range(X.size(0)):
            cost["pairs"] += 1
            src = mor_set(X, x, y)
            img = sorted(f.levels[1][e] for e in src)
            tgt = mor_set(Y, f.levels[0][x], f.levels[0][y])
            if img != sorted(tgt) or len(set(img)) != len(img):
                return CheckReport(
                    "dwyer-kan",
                    False,
                    {"reason": "not fully faithful", "pair": [_lab(X, 0, x), _lab(X, 0, y)],
                     "source_morphisms": len(src), "target_morphisms": len(tgt)},
                    dict(cost),
                )
    H = ho_category(Y)
    image = sorted(set(f.levels[0]))
    for y in range(Y.size(0)):
        cost["objects"] += 1
        if not any(H.isomorphic(y, v) is not None for v in image):
            return CheckReport("dwyer-kan", False, {"reason": "not essentially surjective", "object": _lab(Y, 0, y)}, dict(cost))
    return CheckReport("dwyer-kan", True, {"image": [_lab(Y, 0, v) for v in image]}, dict(cost))


def fiberwise_weq(f: SimplicialMap, p: SimplicialMap, q: SimplicialMap) -> CheckReport:
    """For ``f: X -> Y`` over ``B`` (``q f = p``), are vertex fibers in bijection via ``f``?"""
    X, Y, B = f.domain, f.codomain, p.codomain
    for k in range(X.max_dim + 1):
        for x in range(X.size(k)):
            if q.levels[k][f.levels[k][x]] != p.levels[k][x]:
                raise PreconditionError("map does not commute with the projections")
    for b in range(B.size(0)):
        fx = [x for x in range(X.size(0)) if p.levels[0][x] == b]
        fy = [y for y in range(Y.size(0)) if q.levels[0][y] == b]
        img = sorted(f.levels[0][x] for x in fx)
        if img != sorted(fy):
            return CheckReport("fiberwise-weq", False,
                               {"vertex": _lab(B, 0, b), "source_fiber": len(fx), "target_fiber": len(fy)},
                               {"vertices": b + 1})
    return CheckReport("fiberwise-weq", True, None, {"vertices": B.size(0)})


# ----------------------------------------------------------------------
# over objects, terminal objects, Yoneda


def over_object(X: SimplicialSet, K: Sequence[int], max_dim: int | None = None) -> FiberedComplex:
    """``X/K``: morphisms into objects of ``K``, over ``X`` by their source.

    Built as the pullback of evaluation at vertex 0 of ``X^{Delta[1]}``
    along the discrete subcomplex ``K``; the projection evaluates at vertex 1.
    """
    require_segal(X)
    D = X.max_dim if max_dim is None else max_dim
    H = internal_hom(standard_simplex(1, X.max_dim), X, D)
    ev_target = H.evaluation(0)
    ev_source = H.evaluation(1)
    Xd = ev_target.codomain
    Kset = sorted(set(K))
    Kc = constant([Xd.labels[0][v] for v in Kset], D, name="K")
    incl = SimplicialMap(Kc, Xd, [[Xd.act(OrdinalMap(k, 0, (0,) * (k + 1)), v) for v in Kset] for k in range(D + 1)])
    P, pr_h, _ = pullback(ev_target, incl, name=f"{X.name or 'X'}/K")
    proj = pr_h.then(ev_source)
    return FiberedComplex(P, ev_source.codomain, proj, name=P.name)


def terminal_objects(X: SimplicialSet) -> list[int]:
    """Vertices receiving exactly one morphism from every vertex."""
    require_segal(X)
    counts = Counter((X.faces[1][0][e], X.faces[1][1][e]) for e in range(X.size(1)))
    n = X.size(0)
    return [x for x in range(n) if all(counts.get((y, x), 0) == 1 for y in range(n))]


def yoneda_check(Z: FiberedComplex, c: int) -> CheckReport:
    """Restriction ``Hom_{NC}(N(C/c), Z) -> Z_c`` along ``{id_c}`` is a bijection."""
    C = Z.category
    if C is None:
        raise ValueError("Yoneda check needs a complex over a nerve")
    D = Z.total.max_dim
    S, forget = over_category(C, c)
    NS = S.nerve(D)
    q = forget.nerve_map(D)
    q = SimplicialMap(NS, Z.base, q.levels)
    count, rows = enumerate_maps(NS, Z.total, base_domain=q, base_codomain=Z.projection)
    idc = S.obj_index[C.morphisms[C.ident[c]]]
    vals = sorted(int(r[NS.flat.to_global(0, idc)]) for r in rows)
    fiber = Z.fiber(0, c)
    ok = vals == sorted(fiber)
    witness = {"maps": count, "fiber": len(fiber)}
    return CheckReport("yoneda", ok, witness, {"maps": count})
