"""Simplicial sets versus bisimplicial sets constant in one direction, and horn certification."""

from __future__ import annotations

from .category import FinCategory, Presheaf
from .fibered import FiberedComplex
from .fibrations import horn_indices, horn_lift_check, quasicat_check
from .grothendieck import classification_diagram, grothendieck
from .ordinal import special_map
from .report import CheckReport
from .simplicial import BiSimplicialSet, SimplicialMap, SimplicialSet, constant_in_n, horn, inclusion, standard_simplex


def p1_star(X: SimplicialSet, max_n: int = 2) -> BiSimplicialSet:
    """``(p_1^* X)_{m,n} = X_m``, constant in ``n``."""
    return constant_in_n(X, max_n, name=f"p1*({X.name or 'X'})")


def i1_star(W: BiSimplicialSet) -> SimplicialSet:
    """Column ``n = 0``: the simplicial set ``m -> W_{m,0}``."""
    X = W.horizontal(0)
    X.name = f"i1*({W.name or 'W'})"
    return X


def i1_star_map(p) -> SimplicialMap:
    """``i_1^*`` of a map of bisimplicial sets."""
    return p.horizontal(0)


def classification_of_identities(C: FinCategory, max_m: int, max_n: int = 1) -> BiSimplicialSet:
    """The classification diagram with only identities as weak equivalences."""
    from .category import wide_subcategory

    W, incl = wide_subcategory(C, [C.ident[c] for c in range(C.n_objects)])
    return classification_diagram(C, W, incl, max_m, max_n)


def right_horn_certificate(F: Presheaf, max_dim: int = 4, orientation: str = "paper") -> CheckReport:
    """Unique lifts of ``i_1^* G(F) -> N(C)`` against right horns up to ``max_dim``."""
    GF = grothendieck(F, max_dim)
    return horn_lift_check(GF.projection, "right", require_unique=True, max_dim=max_dim, orientation=orientation)


def horn_factorization(n: int) -> CheckReport:
    """``d^n: Delta[n-1] -> Delta[n]`` factors through the right horn, and the
    horn is reached from the face by attaching lower right horns.

    The second part is an explicit sequence of elementary expansions, each
    adding a simplex ``sigma`` together with its face ``d_0 sigma`` once the
    other faces are present: a pushout along ``Lambda^0[k] -> Delta[k]``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    k = horn_indices(n, "right", "paper")[0]
    H = horn(n, k, n)
    S = standard_simplex(n - 1, n)
    Dn = standard_simplex(n, n)
    d_n = special_map("face", n=n, i=n)
    face_map = SimplicialMap.from_function(S, Dn, lambda lvl, v: tuple(d_n.values[x] for x in v))
    try:
        into_horn = SimplicialMap.from_function(S, H, lambda lvl, v: tuple(d_n.values[x] for x in v))
    except KeyError:
        return CheckReport("horn-factorization", False, {"n": n, "reason": "face does not land in the horn"})
    if into_horn.then(inclusion(H, Dn)) != face_map:
        return CheckReport("horn-factorization", False, {"n": n, "reason": "composite differs from the face map"})
    # nondegenerate simplices are strictly increasing vertex tuples
    horn_cells = {v for d in range(n + 1) for v in H.labels[d] if len(set(v)) == len(v)}
    present = {v for v in horn_cells if n not in v}
    remaining = horn_cells - present
    steps = []
    while remaining:
        for sigma in sorted(remaining, key=lambda v: (len(v), v)):
            if len(sigma) < 2:
                continue
            tau = sigma[1:]
            others = [sigma[:i] + sigma[i + 1 :] for i in range(1, len(sigma))]
            tau_faces = [tau[:i] + tau[i + 1 :] for i in range(len(tau))] if len(tau) > 1 else []
            if tau in remaining and all(f in present for f in others) and all(f in present for f in tau_faces):
                present |= {sigma, tau}
                remaining -= {sigma, tau}
                steps.append((len(sigma) - 1, sigma))
                break
        else:
            return CheckReport("horn-factorization", False, {"n": n, "stuck": sorted(remaining)})
    if any(dim >= n for dim, _ in steps):
        return CheckReport("horn-factorization", False, {"n": n, "reason": "expansion of top dimension"})
    return CheckReport("horn-factorization", True, {"n": n, "expansions": steps}, {"steps": len(steps)})


def horn_contains_face(n: int, k: int, i: int) -> bool:
    """Does ``Lambda^k[n]`` contain the image of ``d^i``?"""
    H = horn(n, k, n - 1)
    return tuple(x for x in range(n + 1) if x != i) in set(H.labels[n - 1])


def quasicat_nerve(C: FinCategory, max_dim: int = 4) -> CheckReport:
    return quasicat_check(C.nerve(max_dim), max_dim)


def fibered_i1(P) -> FiberedComplex:
    """``i_1^*`` of a double fibered object, as a complex over ``N(C)``."""
    row = P.row(0)
    base = P.category.nerve(row.codomain.max_dim) if P.category is not None else row.codomain
    return FiberedComplex(row.domain, base, SimplicialMap(row.domain, base, row.levels), category=P.category)


def identity_classification_check(C: FinCategory, max_m: int = 3) -> CheckReport:
    """``i_1^*`` of the classification diagram with identity weak equivalences is ``N(C)``."""
    X = i1_star(classification_of_identities(C, max_m, 1))
    N = C.nerve(max_m)
    sizes = [X.size(m) for m in range(max_m + 1)]
    if sizes != [N.size(m) for m in range(max_m + 1)]:
        return CheckReport("classification-column", False, {"sizes": sizes, "nerve": [N.size(m) for m in range(max_m + 1)]})
    # a cell at (m, 0) is a string of 0-strings, i.e. an m-string of C
    f = SimplicialMap.from_function(
        X, N, lambda m, cell: (tuple(o[0][0] for o in cell[0]), tuple(comps[0] for comps in cell[1]))
    )
    f.validate()
    return CheckReport("classification-column", f.is_levelwise_bijective(), {"sizes": sizes})


__all__ = [
    "p1_star",
    "i1_star",
    "i1_star_map",
    "quasicat_check",
    "right_horn_certificate",
    "horn_factorization",
    "horn_contains_face",
    "quasicat_nerve",
    "classification_of_identities",
    "identity_classification_check",
    "fibered_i1",
]
