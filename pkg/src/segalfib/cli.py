"""Command line driver: ``segalfib <verb> [file] [flags]``.

Exit status: 0 pass (or construction done), 1 fail with witness,
2 usage or parse error, 3 a dimension budget was too small.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import cartesian, fibrations, generate, kan, qcat
from .category import FinCategory, FunctorMap, Presheaf
from .errors import PreconditionError, ResourceError, ValidationError, WorkbenchParseError
from .fibered import FiberedComplex
from .grothendieck import BudgetWarning, grothendieck, identity_complex, left_adjoint_L, right_adjoint_R, unit
from .report import CheckReport
from .simplicial import SimplicialMap, SimplicialSet, pi0
from .workbench import (
    Workbench,
    WorkbenchDocument,
    cat_presheaf_documents,
    category_document,
    functor_document,
    parse,
    presheaf_document,
    report_document,
    serialize,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------
# input helpers


def _target(wb: Workbench, args) -> str:
    if args.target:
        wb.doc(args.target)
        return args.target
    if not wb.docs:
        raise UsageError("input holds no documents")
    return wb.docs[-1].name


def _simplicial(wb: Workbench, name: str, D: int) -> SimplicialSet:
    d = wb.doc(name)
    obj = wb.get(name)
    if d.kind == "category":
        return obj.nerve(D)
    if d.kind == "simplicial-set":
        return obj.truncate(D) if obj.max_dim > D else obj
    if d.kind == "presheaf" and obj.kind == "SET":
        return grothendieck(obj, D).total
    raise UsageError(f"{name!r} ({d.kind}) is not a simplicial set")


def _fibered(wb: Workbench, name: str, D: int) -> FiberedComplex:
    d = wb.doc(name)
    obj = wb.get(name)
    if d.kind == "presheaf":
        if obj.kind != "SET":
            raise UsageError(f"{name!r} is CAT-valued; use grothendieck-cat")
        return grothendieck(obj, D)
    if d.kind == "map":
        what = d.get1("construction")
        if what == "grothendieck":
            return grothendieck(wb.get(d.get("construction")[1].text), obj.domain.max_dim)
        if what == "nerve":
            i = wb.get(d.get("construction")[1].text)
            N = i.target.nerve(obj.domain.max_dim)
            return FiberedComplex(obj.domain, N, SimplicialMap(obj.domain, N, obj.levels), category=i.target, name=name)
        cod = d.get1("codomain")
        if wb.doc(cod).kind == "category":
            C = wb.get(cod)
            N = C.nerve(obj.domain.max_dim)
            return FiberedComplex(obj.domain, N, SimplicialMap(obj.domain, N, obj.levels), category=C, name=name)
        return FiberedComplex(obj.domain, obj.codomain, obj, name=name)
    if d.kind == "category":
        return identity_complex(obj, D)
    raise UsageError(f"{name!r} ({d.kind}) is not a complex over a nerve")


def _map(wb: Workbench, name: str, D: int) -> SimplicialMap:
    d = wb.doc(name)
    if d.kind == "functor":
        return wb.get(name).nerve_map(D)
    if d.kind == "simplicial-set" or d.kind == "category":
        return fibrations.to_point(_simplicial(wb, name, D))
    return _fibered(wb, name, D).projection


def _functor(wb: Workbench, name: str | None) -> FunctorMap:
    if not name:
        raise UsageError("this verb needs --along FUNCTOR")
    wb.doc(name, ("functor",))
    return wb.get(name)


def _category_name(wb: Workbench, C: FinCategory) -> str:
    for d in wb.docs:
        if d.kind == "category" and wb.get(d.name) is C:
            return d.name
    return C.name or "C"


def _vertex_namer(wb: Workbench, name: str, X: FiberedComplex):
    """Render vertices of ``X``; vertices of ``G(F)`` print as ``object:element``."""
    F = wb.get(name) if wb.doc(name).kind == "presheaf" else None

    def render(v: int) -> str:
        lab = X.total.labels[0][v]
        if F is not None:
            (objs, _), x = lab
            return f"{F.base.objects[objs[0]]}:{F.values[objs[0]][x]}"
        return str(lab)

    return render


def _grid(W) -> list[tuple]:
    return [(m, *W.sizes()[m]) for m in range(W.max_m + 1)]


def _level_rows(X: SimplicialSet) -> list[tuple]:
    counts = list(X.nondegenerate_counts()) + [0] * (X.max_dim + 1)
    return [(k, X.size(k), counts[k]) for k in range(X.max_dim + 1)]


def _done(check: str, rows=(), witness=None, details=None) -> tuple[list[WorkbenchDocument], int]:
    rep = CheckReport(check, True, witness, {}, details or {})
    doc = report_document(rep, rows=rows)
    return [doc], EXIT_PASS


def _verdict(rep: CheckReport, rows=()) -> tuple[list[WorkbenchDocument], int]:
    return [report_document(rep, rows=rows)], EXIT_PASS if rep.passed else EXIT_FAIL


# ----------------------------------------------------------------------
# verbs


def v_validate(wb, args):
    for d in wb.docs:
        if d.kind != "report":
            wb.get(d.name)
    return _done("validate", rows=[(d.kind, d.name) for d in wb.docs])


def v_fmt(wb, args):
    return wb.docs, EXIT_PASS


def v_check_segal(wb, args):
    return _verdict(fibrations.segal_check(_simplicial(wb, _target(wb, args), args.max_dim)))


def v_check_rightfib(wb, args):
    p = _fibered(wb, _target(wb, args), args.max_dim).projection
    return _verdict(fibrations.right_fibration_check(p, args.mode))


def v_check_horns(wb, args):
    p = _map(wb, _target(wb, args), args.max_dim)
    rep = fibrations.horn_lift_check(p, args.family, args.unique, args.max_dim, args.orientation)
    return _verdict(rep)


def v_check_complete(wb, args):
    return _verdict(fibrations.is_complete(_simplicial(wb, _target(wb, args), args.max_dim)))


def v_check_dk(wb, args):
    name = _target(wb, args)
    d = wb.doc(name)
    if d.kind == "functor" and args.invariance:
        i = wb.get(name)
        from .category import constant_presheaf, representable

        tests = [constant_presheaf(i.target, ["*"], name="point")] + [representable(i.target, c) for c in range(i.target.n_objects)]
        fibs = [grothendieck(representable(i.source, c), args.max_dim) for c in range(i.source.n_objects)]
        try:
            rep = kan.dk_invariance_probe(i, fibs, tests)
        except PreconditionError as exc:
            rep = exc.report or CheckReport("dk-invariance", False, {"reason": str(exc)})
            rep = CheckReport("dk-invariance", False, {"precondition": str(exc), "equivalence": rep.witness}, rep.cost)
        return _verdict(rep)
    return _verdict(fibrations.dwyer_kan_check(_map(wb, name, args.max_dim)))


def v_check_qcat(wb, args):
    X = _simplicial(wb, _target(wb, args), args.max_dim)
    return _verdict(fibrations.quasicat_check(X, X.max_dim))


def v_grothendieck(wb, args):
    X = _fibered(wb, _target(wb, args), args.max_dim)
    return _done("grothendieck", rows=_level_rows(X.total), details={"levels": "k size nondegenerate"})


def _presheaf_out(wb, F: Presheaf, name: str) -> list[WorkbenchDocument]:
    return [presheaf_document(F, name, _category_name(wb, F.base))]


def v_rectify(wb, args):
    name = _target(wb, args)
    X = _fibered(wb, name, args.max_dim)
    if X.category is None:
        raise UsageError("rectify needs a complex over the nerve of a category")
    L = left_adjoint_L(X)
    render = _vertex_namer(wb, name, X)
    C = X.category
    # an element of L(X)(c) is a class of (vertex v, u: c -> p(v))
    labels = [[f"{render(X.total.index(0, v))}/{C.morphisms[C.mor_index[u]] if u in C.mor_index else u}" for v, u in L.values[c]]
              for c in range(C.n_objects)]
    L = Presheaf(C, labels, L.action, name=L.name, check=False)
    return _presheaf_out(wb, L, f"L({name})"), EXIT_PASS


def v_sections_presheaf(wb, args):
    name = _target(wb, args)
    X = _fibered(wb, name, args.max_dim)
    if X.category is None:
        raise UsageError("sections-presheaf needs a complex over the nerve of a category")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BudgetWarning)
        R = right_adjoint_R(X)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return _presheaf_out(wb, R, f"R({name})"), EXIT_PASS


def v_unit_check(wb, args):
    X = _fibered(wb, _target(wb, args), args.max_dim)
    eta, _ = unit(X)
    ok = eta.is_levelwise_bijective()
    bad = None
    if not ok:
        for k in range(X.total.max_dim + 1):
            if len(set(eta.levels[k])) != len(eta.levels[k]) or len(eta.levels[k]) != eta.codomain.size(k):
                bad = {"level": k, "sizes": [X.total.size(k), eta.codomain.size(k)]}
                break
    rep = CheckReport("unit", ok, bad, {"levels": X.total.max_dim + 1})
    return _verdict(rep)


def v_kan_extend(wb, args):
    name = _target(wb, args)
    i = _functor(wb, args.along)
    X = _fibered(wb, name, args.max_dim)
    if args.rectify:
        X = grothendieck(left_adjoint_L(X), X.total.max_dim)
    try:
        Y = kan.kan_extend(X, i, require_fibration=True)
    except PreconditionError as exc:
        witness = exc.report.witness if exc.report is not None else None
        return _verdict(CheckReport("kan-extend", False, {"precondition": str(exc), "witness": witness}))
    L = left_adjoint_L(Y)
    # classes of vertices of the extension have no readable name; number them per object
    C = L.base
    labels = [[f"{C.objects[c]}#{k}" for k in range(len(L.values[c]))] for c in range(C.n_objects)]
    L = Presheaf(C, labels, L.action, name=L.name, check=False)
    return _presheaf_out(wb, L, f"Lan({name})"), EXIT_PASS


def v_hocolim(wb, args):
    name = _target(wb, args)
    X = _fibered(wb, name, args.max_dim)
    comps = pi0(X.total)
    render = _vertex_namer(wb, name, X)
    rows = [tuple(render(v) for v in comp) for comp in comps]
    return _done("hocolim", rows=rows, details={"components": len(comps)})


def v_sections(wb, args):
    name = _target(wb, args)
    X = _fibered(wb, name, args.max_dim)
    secs = kan.sections(X)
    render = _vertex_namer(wb, name, X)
    # the first entries of a global row are the images of the base vertices
    rows = [tuple(render(v) for v in s[: X.base.size(0)]) for s in secs]
    return _done("sections", rows=rows, details={"sections": len(secs)})


def v_d_over_i(wb, args):
    i = _functor(wb, args.along or _target(wb, args))
    DI = kan.d_over_i(i, args.max_m, args.max_n)
    return _done("d-over-i", rows=_grid(DI.cells), details={"grid": "m then sizes for n = 0..max_n"})


def v_grothendieck_cat(wb, args):
    F = wb.get(_target(wb, args))
    if not isinstance(F, Presheaf) or F.kind != "CAT":
        raise UsageError("grothendieck-cat needs a CAT presheaf")
    P = cartesian.grothendieck_cat(F, args.max_m, args.max_n)
    return _done("grothendieck-cat", rows=_grid(P.total), details={"grid": "m then sizes for n = 0..max_n"})


def v_check_cartesian(wb, args):
    F = wb.get(_target(wb, args))
    if not isinstance(F, Presheaf) or F.kind != "CAT":
        raise UsageError("check-cartesian needs a CAT presheaf")
    return _verdict(cartesian.cartesian_check(cartesian.grothendieck_cat(F, args.max_m, args.max_n), args.mode))


def v_to_bisimplicial(wb, args):
    X = _simplicial(wb, _target(wb, args), args.max_dim)
    return _done("to-bisimplicial", rows=_grid(qcat.p1_star(X, args.max_n)))


def v_to_simplicial(wb, args):
    name = _target(wb, args)
    wb.doc(name, ("bisimplicial-set",))
    X = qcat.i1_star(wb.get(name))
    return _done("to-simplicial", rows=_level_rows(X))


def v_generate(wb, args):
    kind, seed = args.kind, args.seed
    if kind == "category":
        return [category_document(generate.random_category(seed), f"cat{seed}")], EXIT_PASS
    if kind == "presheaf":
        C = generate.random_category(seed)
        F = generate.random_presheaf(C, seed)
        return [category_document(C, f"cat{seed}"), presheaf_document(F, f"F{seed}", f"cat{seed}")], EXIT_PASS
    if kind == "cat-presheaf":
        F = generate.random_cat_presheaf(seed)
        return [category_document(F.base, f"cat{seed}")] + cat_presheaf_documents(F, f"F{seed}", f"cat{seed}"), EXIT_PASS
    if kind in ("equivalence", "non-equivalence", "kan-pair"):
        if kind == "kan-pair":
            i, F = generate.random_kan_pair(seed)
        elif kind == "equivalence":
            i, F = generate.random_equivalence(seed), None
        else:
            i, F = generate.random_non_equivalence(seed), None
        docs = [category_document(i.source, f"src{seed}"), category_document(i.target, f"tgt{seed}"),
                functor_document(i, f"i{seed}", f"src{seed}", f"tgt{seed}")]
        if F is not None:
            docs.append(presheaf_document(F, f"F{seed}", f"src{seed}"))
        return docs, EXIT_PASS
    raise UsageError(f"unknown generator kind {kind!r}")


VERBS = {
    "validate": (v_validate, "parse and build every document"),
    "fmt": (v_fmt, "print the canonical form of the input"),
    "generate": (v_generate, "emit a seeded random instance"),
    "check-segal": (v_check_segal, "strict Segal condition"),
    "check-rightfib": (v_check_rightfib, "right fibration in the chosen mode"),
    "check-horns": (v_check_horns, "horn lifting for a family and orientation"),
    "check-complete": (v_check_complete, "every homotopy equivalence is degenerate"),
    "check-dk": (v_check_dk, "Dwyer-Kan equivalence, or invariance of fibrations along a functor"),
    "check-qcat": (v_check_qcat, "inner horn filling"),
    "check-cartesian": (v_check_cartesian, "Cartesian fibration check of a CAT presheaf's construction"),
    "grothendieck": (v_grothendieck, "level sizes of the Grothendieck construction"),
    "grothendieck-cat": (v_grothendieck_cat, "bisimplicial Grothendieck construction sizes"),
    "rectify": (v_rectify, "the presheaf L(X)"),
    "sections-presheaf": (v_sections_presheaf, "the presheaf R(X)"),
    "unit-check": (v_unit_check, "is X -> G L X a levelwise bijection"),
    "kan-extend": (v_kan_extend, "left Kan extension along --along, rectified"),
    "hocolim": (v_hocolim, "components of the total complex"),
    "sections": (v_sections, "sections over the identity of the base"),
    "d-over-i": (v_d_over_i, "sizes of the comma object of a functor"),
    "to-bisimplicial": (v_to_bisimplicial, "constant bisimplicial set of a simplicial set"),
    "to-simplicial": (v_to_simplicial, "column zero of a bisimplicial set"),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="segalfib", description="Discrete Segal-space fibration workbench.")
    sub = ap.add_subparsers(dest="verb", metavar="verb")
    for verb, (_, help_text) in VERBS.items():
        p = sub.add_parser(verb, help=help_text)
        if verb == "generate":
            p.add_argument("kind", choices=["category", "presheaf", "cat-presheaf", "equivalence", "non-equivalence", "kan-pair"])
            p.add_argument("--seed", type=int, default=0)
            continue
        p.add_argument("file", help="workbench file, or - for stdin")
        p.add_argument("--target", help="document to act on (default: the last one)")
        p.add_argument("--max-dim", type=int, default=3)
        p.add_argument("--max-m", type=int, default=2)
        p.add_argument("--max-n", type=int, default=2)
        p.add_argument("--mode", choices=fibrations.MODES, default="square")
        p.add_argument("--family", choices=fibrations.FAMILIES, default="right")
        p.add_argument("--orientation", choices=fibrations.ORIENTATIONS, default="paper")
        p.add_argument("--unique", action="store_true", help="require unique fillers")
        p.add_argument("--along", help="functor document for kan-extend and d-over-i")
        p.add_argument("--rectify", action="store_true", help="replace the input by G(L(X)) first")
        p.add_argument("--invariance", action="store_true", help="check-dk: probe invariance of fibrations")
        p.add_argument("--seed", type=int, default=0)
    return ap


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    if not args.verb:
        ap.print_usage(sys.stderr)
        return EXIT_USAGE
    for flag in ("max_dim", "max_m", "max_n"):
        if getattr(args, flag, 0) is not None and getattr(args, flag, 0) < 0:
            print(f"error: --{flag.replace('_', '-')} must be non-negative", file=sys.stderr)
            return EXIT_USAGE
    fn = VERBS[args.verb][0]
    try:
        if args.verb == "generate":
            wb = Workbench([])
        else:
            text = sys.stdin.read() if args.file == "-" else _read(args.file)
            wb = Workbench(parse(text))
        docs, code = fn(wb, args)
    except ResourceError as exc:
        rep = CheckReport(args.verb, False, {"budget": exc.budget, "required": exc.required, "message": str(exc)})
        stdout.write(serialize(report_document(rep, name="resource")))
        print(f"error: {exc} (raise --{exc.budget.replace('_', '-')})", file=sys.stderr)
        return EXIT_RESOURCE
    except (WorkbenchParseError, ValidationError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stdout.write(serialize(docs))
    return code


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
