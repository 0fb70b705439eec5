"""The workbench text format.

A file starts with ``workbench 1`` and holds blocks::

    begin category [1]
    objects 0 1
    morphism id_0 0 0
    ...
    end

Each line inside a block is a field key followed by tokens.  A token is a
run of non-blank characters without ``"`` or ``|``, or a JSON string.
Face references in ``simplex`` lines may carry a degeneracy suffix
``|v0,v1,...``.  Output is canonical: fields appear in schema order, tokens
are separated by one space, so ``serialize(parse(t)) == t`` for canonical
text.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any

from .category import FinCategory, FunctorMap, Presheaf
from .errors import ValidationError, WorkbenchParseError
from .ordinal import OrdinalMap
from .report import CheckReport
from .simplicial import SimplicialMap, SimplicialSet

VERSION = 1
_RAW = re.compile(r'[^\s"|]+')

# key -> (min args, max args or None, repeatable, required)
SCHEMAS: dict[str, dict[str, tuple[int, int | None, bool, bool]]] = {
    "category": {
        "objects": (0, None, False, True),
        "morphism": (3, 3, True, False),
        "identity": (2, 2, True, False),
        "compose": (3, 3, True, False),
    },
    "functor": {
        "source": (1, 1, False, True),
        "target": (1, 1, False, True),
        "object": (2, 2, True, False),
        "morphism": (2, 2, True, False),
    },
    "presheaf": {
        "base": (1, 1, False, True),
        "kind": (1, 1, False, False),
        "value": (1, None, True, False),
        "action": (2, 3, True, False),
    },
    "simplicial-set": {
        "max-dim": (1, 1, False, True),
        "construction": (1, None, False, False),
        "simplex": (2, None, True, False),
    },
    "bisimplicial-set": {
        "max-m": (1, 1, False, True),
        "max-n": (1, 1, False, True),
        "construction": (2, None, False, True),
    },
    "map": {
        "construction": (1, None, False, True),
        "domain": (1, 1, False, False),
        "codomain": (1, 1, False, False),
        "max-dim": (1, 1, False, False),
        "send": (3, 3, True, False),
    },
    "report": {
        "check": (1, 1, False, True),
        "verdict": (1, 1, False, True),
        "witness": (1, 1, False, False),
        "cost": (2, 2, True, False),
        "detail": (2, 2, True, False),
        "row": (1, None, True, False),
    },
}
KINDS = tuple(SCHEMAS)


@dataclass(frozen=True)
class Token:
    """A label, optionally with a degeneracy suffix."""

    text: str
    suffix: tuple[int, ...] | None = None

    def render(self) -> str:
        base = self.text if _RAW.fullmatch(self.text) and self.text != "end" else json.dumps(self.text, ensure_ascii=False)
        if self.suffix is None:
            return base
        return base + "|" + ",".join(str(v) for v in self.suffix)


@dataclass
class WorkbenchDocument:
    kind: str
    name: str
    fields: list[tuple[str, tuple[Token, ...]]] = field(default_factory=list)
    version: int = VERSION
    positions: list[tuple[int, int]] = field(default_factory=list, compare=False, repr=False)

    def add(self, key: str, *values) -> "WorkbenchDocument":
        self.fields.append((key, tuple(v if isinstance(v, Token) else Token(str(v)) for v in values)))
        return self

    def get(self, key: str, default=None):
        for k, v in self.fields:
            if k == key:
                return v
        return default

    def get1(self, key: str, default=None) -> str | None:
        v = self.get(key)
        return default if v is None else v[0].text

    def all(self, key: str) -> list[tuple[int, tuple[Token, ...]]]:
        return [(i, v) for i, (k, v) in enumerate(self.fields) if k == key]

    def position(self, i: int) -> tuple[int | None, int | None]:
        return self.positions[i] if i < len(self.positions) else (None, None)

    def canonical(self) -> "WorkbenchDocument":
        order = {k: n for n, k in enumerate(SCHEMAS[self.kind])}
        pairs = sorted(range(len(self.fields)), key=lambda i: order[self.fields[i][0]])
        return WorkbenchDocument(
            self.kind,
            self.name,
            [self.fields[i] for i in pairs],
            self.version,
            [self.positions[i] for i in pairs] if len(self.positions) == len(self.fields) else [],
        )


# ----------------------------------------------------------------------
# text


def _tokenize(line: str, lineno: int) -> list[tuple[Token, int]]:
    out = []
    pos = 0
    n = len(line)
    decoder = json.JSONDecoder()
    while pos < n:
        if line[pos] == " ":
            pos += 1
            continue
        start = pos
        if line[pos] == '"':
            try:
                text, pos = decoder.raw_decode(line, pos)
            except json.JSONDecodeError as exc:
                raise WorkbenchParseError(f"bad quoted token: {exc.msg}", lineno, start + 1) from None
            if not isinstance(text, str):
                raise WorkbenchParseError("quoted token must be a string", lineno, start + 1)
        else:
            m = _RAW.match(line, pos)
            if m is None:
                raise WorkbenchParseError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
            text, pos = m.group(0), m.end()
        suffix = None
        if pos < n and line[pos] == "|":
            m = re.compile(r"\|(\d+(?:,\d+)*)").match(line, pos)
            if m is None:
                raise WorkbenchParseError("degeneracy suffix must be |v0,v1,...", lineno, pos + 1)
            suffix = tuple(int(v) for v in m.group(1).split(","))
            pos = m.end()
        if pos < n and line[pos] != " ":
            raise WorkbenchParseError("tokens must be separated by spaces", lineno, pos + 1)
        out.append((Token(text, suffix), start + 1))
    return out


def parse(text: str) -> list[WorkbenchDocument]:
    """Parse workbench text into documents; errors carry line and column."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0].strip() == "":
        raise WorkbenchParseError("missing header 'workbench <version>'", 1, 1)
    head = lines[0].split(" ")
    if head[0] != "workbench" or len(head) != 2:
        raise WorkbenchParseError("missing header 'workbench <version>'", 1, 1)
    if head[1] != str(VERSION):
        raise WorkbenchParseError(f"unsupported format version {head[1]!r}", 1, len("workbench ") + 1)
    docs: list[WorkbenchDocument] = []
    cur: WorkbenchDocument | None = None
    seen: dict[str, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if "\t" in line or "\r" in line:
            col = min(i for i in (line.find("\t"), line.find("\r")) if i >= 0) + 1
            raise WorkbenchParseError("tabs and carriage returns are not allowed", lineno, col)
        toks = _tokenize(line, lineno)
        if not toks:
            raise WorkbenchParseError("blank line", lineno, 1)
        (key, kcol), args = toks[0], toks[1:]
        if cur is None:
            if key.text != "begin" or key.suffix is not None:
                raise WorkbenchParseError(f"expected 'begin', found {key.text!r}", lineno, kcol)
            if len(args) != 2:
                raise WorkbenchParseError("'begin' takes a kind and a name", lineno, kcol)
            kind, name = args[0][0].text, args[1][0].text
            if kind not in SCHEMAS:
                raise WorkbenchParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", lineno, args[0][1])
            if name in seen:
                raise WorkbenchParseError(f"duplicate document name {name!r} (first on line {seen[name]})", lineno, args[1][1])
            seen[name] = lineno
            cur = WorkbenchDocument(kind, name)
            cur.positions = []
            continue
        if key.text == "end" and key.suffix is None:
            if args:
                raise WorkbenchParseError("'end' takes no arguments", lineno, args[0][1])
            _check_required(cur, lineno)
            docs.append(cur)
            cur = None
            continue
        schema = SCHEMAS[cur.kind]
        if key.text not in schema or key.suffix is not None:
            raise WorkbenchParseError(f"unknown field {key.text!r} for kind {cur.kind}", lineno, kcol)
        lo, hi, repeat, _ = schema[key.text]
        if len(args) < lo or (hi is not None and len(args) > hi):
            want = f"{lo}" if lo == hi else f"{lo}..{hi if hi is not None else ''}"
            raise WorkbenchParseError(f"field {key.text!r} takes {want} arguments, got {len(args)}", lineno, kcol)
        if not repeat and cur.get(key.text) is not None:
            raise WorkbenchParseError(f"field {key.text!r} given twice", lineno, kcol)
        if key.text != "simplex" and key.text != "send":
            for tok, col in args:
                if tok.suffix is not None:
                    raise WorkbenchParseError("degeneracy suffix only allowed in face references", lineno, col)
        cur.fields.append((key.text, tuple(t for t, _ in args)))
        cur.positions.append((lineno, kcol))
    if cur is not None:
        raise WorkbenchParseError(f"block {cur.name!r} is not closed with 'end'", len(lines) + 1, 1)
    return docs


def _check_required(doc: WorkbenchDocument, lineno: int) -> None:
    for key, (_, _, _, required) in SCHEMAS[doc.kind].items():
        if required and doc.get(key) is None:
            raise WorkbenchParseError(f"{doc.kind} {doc.name!r} lacks field {key!r}", lineno, 1)


def serialize(docs) -> str:
    """Canonical text for one document or a list of them."""
    if isinstance(docs, WorkbenchDocument):
        docs = [docs]
    out = [f"workbench {VERSION}"]
    for doc in docs:
        doc = doc.canonical()
        out.append(f"begin {Token(doc.kind).render()} {Token(doc.name).render()}")
        for key, vals in doc.fields:
            out.append(" ".join([key] + [v.render() for v in vals]))
        out.append("end")
    return "\n".join(out) + "\n"


# ----------------------------------------------------------------------
# objects -> documents


def _s(x) -> str:
    return x if isinstance(x, str) else str(x)


def category_document(C: FinCategory, name: str | None = None) -> WorkbenchDocument:
    doc = WorkbenchDocument("category", name or C.name or "C")
    doc.add("objects", *[_s(o) for o in C.objects])
    for m in range(C.n_morphisms):
        doc.add("morphism", _s(C.morphisms[m]), _s(C.objects[C.src[m]]), _s(C.objects[C.tgt[m]]))
    for c in range(C.n_objects):
        doc.add("identity", _s(C.objects[c]), _s(C.morphisms[C.ident[c]]))
    for (g, f), h in sorted(C.comp.items()):
        if C.is_identity(g) or C.is_identity(f):
            continue
        doc.add("compose", _s(C.morphisms[g]), _s(C.morphisms[f]), _s(C.morphisms[h]))
    return doc


def functor_document(i: FunctorMap, name: str, source: str, target: str) -> WorkbenchDocument:
    doc = WorkbenchDocument("functor", name).add("source", source).add("target", target)
    S, T = i.source, i.target
    for o in range(S.n_objects):
        doc.add("object", _s(S.objects[o]), _s(T.objects[i.obj_map[o]]))
    for m in range(S.n_morphisms):
        doc.add("morphism", _s(S.morphisms[m]), _s(T.morphisms[i.mor_map[m]]))
    return doc


def presheaf_document(F: Presheaf, name: str, base: str) -> WorkbenchDocument:
    if F.kind != "SET":
        raise ValueError("only SET presheaves serialize directly; write CAT values as categories")
    C = F.base
    doc = WorkbenchDocument("presheaf", name).add("base", base).add("kind", "SET")
    for c in range(C.n_objects):
        doc.add("value", _s(C.objects[c]), *[_s(x) for x in F.values[c]])
    for f in range(C.n_morphisms):
        if C.is_identity(f):
            continue
        vals_b, vals_a = F.values[C.tgt[f]], F.values[C.src[f]]
        for y in range(len(vals_b)):
            doc.add("action", _s(C.morphisms[f]), _s(vals_b[y]), _s(vals_a[F.action[f][y]]))
    return doc


def report_document(rep: CheckReport, name: str | None = None, rows=()) -> WorkbenchDocument:
    doc = WorkbenchDocument("report", name or rep.check).add("check", rep.check).add("verdict", rep.verdict)
    if rep.witness is not None:
        doc.add("witness", json.dumps(jsonable(rep.witness), sort_keys=True, ensure_ascii=False))
    for k, v in sorted(rep.cost.items()):
        doc.add("cost", k, v)
    for k, v in sorted(rep.details.items()):
        doc.add("detail", k, v if isinstance(v, str) else json.dumps(jsonable(v), sort_keys=True, ensure_ascii=False))
    for row in rows:
        doc.add("row", *[_s(x) for x in row])
    return doc


def jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (str, bool)) or x is None:
        return x
    if hasattr(x, "item"):
        return x.item()
    if isinstance(x, (int, float)):
        return x
    return str(x)


# ----------------------------------------------------------------------
# documents -> objects


class Workbench:
    """Documents indexed by name, with objects built on demand."""

    def __init__(self, docs: list[WorkbenchDocument]):
        self.docs = list(docs)
        self.by_name = {d.name: d for d in self.docs}
        self._built: dict[str, Any] = {}

    @classmethod
    def from_text(cls, text: str) -> "Workbench":
        return cls(parse(text))

    def doc(self, name: str, kinds: tuple[str, ...] | None = None) -> WorkbenchDocument:
        if name not in self.by_name:
            raise WorkbenchParseError(f"no document named {name!r}")
        d = self.by_name[name]
        if kinds and d.kind not in kinds:
            raise WorkbenchParseError(f"{name!r} is a {d.kind}, expected {' or '.join(kinds)}")
        return d

    def get(self, name: str):
        if name not in self._built:
            d = self.doc(name)
            builder = getattr(self, "_build_" + d.kind.replace("-", "_"), None)
            if builder is None:
                raise WorkbenchParseError(f"documents of kind {d.kind} do not build objects")
            self._built[name] = builder(d)
        return self._built[name]

    def _err(self, d: WorkbenchDocument, i: int, msg: str) -> WorkbenchParseError:
        line, col = d.position(i)
        return WorkbenchParseError(f"{d.kind} {d.name!r}: {msg}", line, col)

    def _build_category(self, d: WorkbenchDocument) -> FinCategory:
        objs = [t.text for t in d.get("objects")]
        mors = [tuple(t.text for t in v) for _, v in d.all("morphism")]
        ident = {}
        for i, v in d.all("identity"):
            ident[v[0].text] = v[1].text
        comp = {}
        for i, v in d.all("compose"):
            key = (v[0].text, v[1].text)
            if key in comp:
                raise self._err(d, i, f"composite ({key[0]!r}, {key[1]!r}) given twice")
            comp[key] = v[2].text
        try:
            return FinCategory(objs, mors, ident, comp, name=d.name)
        except ValidationError as exc:
            raise WorkbenchParseError(f"category {d.name!r}: {exc}") from None

    def _build_functor(self, d: WorkbenchDocument) -> FunctorMap:
        S = self._category(d.get1("source"))
        T = self._category(d.get1("target"))
        om = {v[0].text: v[1].text for _, v in d.all("object")}
        mm = {v[0].text: v[1].text for _, v in d.all("morphism")}
        try:
            return FunctorMap.from_labels(S, T, om, mm)
        except ValidationError as exc:
            raise WorkbenchParseError(f"functor {d.name!r}: {exc}") from None

    def _category(self, name: str) -> FinCategory:
        self.doc(name, ("category",))
        return self.get(name)

    def _build_presheaf(self, d: WorkbenchDocument) -> Presheaf:
        C = self._category(d.get1("base"))
        kind = d.get1("kind", "SET")
        if kind not in ("SET", "CAT"):
            raise self._err(d, next(i for i, (k, _) in enumerate(d.fields) if k == "kind"), f"unknown kind {kind!r}")
        values, action = {}, {}
        for i, v in d.all("value"):
            obj = v[0].text
            if obj not in C.obj_index:
                raise self._err(d, i, f"unknown object {obj!r}")
            if obj in values:
                raise self._err(d, i, f"value of {obj!r} given twice")
            values[obj] = [t.text for t in v[1:]]
        for o in C.objects:
            values.setdefault(o, [])
        try:
            if kind == "SET":
                for i, v in d.all("action"):
                    if len(v) != 3:
                        raise self._err(d, i, "SET action lines are 'action <morphism> <x> <F(morphism)(x)>'")
                    action.setdefault(v[0].text, {})[v[1].text] = v[2].text
                for m in range(C.n_morphisms):
                    if not values[C.objects[C.tgt[m]]]:
                        action.setdefault(C.morphisms[m], {})
                return Presheaf.from_labels(C, values, action, name=d.name)
            cats = [self._category(values[o][0]) if len(values[o]) == 1 else None for o in C.objects]
            if any(c is None for c in cats):
                raise WorkbenchParseError(f"presheaf {d.name!r}: CAT values are 'value <object> <category>'")
            acts = {}
            for i, v in d.all("action"):
                if len(v) != 2:
                    raise self._err(d, i, "CAT action lines are 'action <morphism> <functor>'")
                self.doc(v[1].text, ("functor",))
                acts[v[0].text] = self.get(v[1].text)
            table = []
            for m in range(C.n_morphisms):
                lab = C.morphisms[m]
                if lab in acts:
                    table.append(acts[lab])
                elif C.is_identity(m):
                    table.append(FunctorMap.identity(cats[C.src[m]]))
                else:
                    raise WorkbenchParseError(f"presheaf {d.name!r}: no action for {lab!r}")
            return Presheaf(C, cats, table, kind="CAT", name=d.name)
        except ValidationError as exc:
            raise WorkbenchParseError(f"presheaf {d.name!r}: {exc}") from None

    def _build_simplicial_set(self, d: WorkbenchDocument) -> SimplicialSet:
        from .simplicial import boundary, e_groupoid, horn, standard_simplex

        D = _int(d, "max-dim")
        cons = d.get("construction")
        if cons is not None:
            what, args = cons[0].text, [t.text for t in cons[1:]]
            try:
                if what == "nerve":
                    return self._category(args[0]).nerve(D)
                if what == "simplex":
                    return standard_simplex(int(args[0]), D)
                if what == "horn":
                    return horn(int(args[0]), int(args[1]), D)
                if what == "boundary":
                    return boundary(int(args[0]), D)
                if what == "e-groupoid":
                    return e_groupoid(D)
            except (IndexError, ValueError) as exc:
                raise WorkbenchParseError(f"simplicial-set {d.name!r}: bad construction arguments ({exc})") from None
            raise WorkbenchParseError(f"simplicial-set {d.name!r}: unknown construction {what!r}")
        levels: list[list] = []
        for i, v in d.all("simplex"):
            try:
                p = int(v[0].text)
            except ValueError:
                raise self._err(d, i, "simplex lines are 'simplex <dim> <label> <face refs...>'") from None
            while len(levels) <= p:
                levels.append([])
            refs = []
            for t in v[2:]:
                if t.suffix is None:
                    refs.append((None, t.text))
                else:
                    refs.append((t.suffix, t.text))
            levels[p].append((v[1].text, refs))
        dims = {}
        for p, lv in enumerate(levels):
            for nm, _ in lv:
                dims[nm] = p
        simplices = []
        for p, lv in enumerate(levels):
            row = []
            for nm, refs in lv:
                fr = []
                for suffix, y in refs:
                    if y not in dims:
                        raise WorkbenchParseError(f"simplicial-set {d.name!r}: face of {nm!r} refers to unknown {y!r}")
                    vals = suffix if suffix is not None else tuple(range(dims[y] + 1))
                    try:
                        fr.append((OrdinalMap(len(vals) - 1, dims[y], vals), y))
                    except ValueError as exc:
                        raise WorkbenchParseError(f"simplicial-set {d.name!r}: face of {nm!r}: {exc}") from None
                row.append((nm, fr))
            simplices.append(row)
        try:
            X = SimplicialSet.from_nondegenerate(D, simplices, name=d.name)
            X.validate()
        except ValidationError as exc:
            raise WorkbenchParseError(f"simplicial-set {d.name!r}: {exc}") from None
        return X

    def _build_bisimplicial_set(self, d: WorkbenchDocument):
        from .cartesian import grothendieck_cat
        from .kan import d_over_i
        from .qcat import classification_of_identities, p1_star
        from .simplicial import box_product

        M, N = _int(d, "max-m"), _int(d, "max-n")
        cons = d.get("construction")
        what, args = cons[0].text, [t.text for t in cons[1:]]
        if what == "box" and len(args) == 2:
            return box_product(self._simplicial(args[0], M), self._simplicial(args[1], N))
        if what == "constant":
            return p1_star(self._simplicial(args[0], M), N)
        if what == "grothendieck-cat":
            return grothendieck_cat(self.get(args[0]), M, N).total
        if what == "classification":
            return classification_of_identities(self._category(args[0]), M, N)
        if what == "d-over-i":
            return d_over_i(self.get(args[0]), M, N).cells
        raise WorkbenchParseError(f"bisimplicial-set {d.name!r}: unknown construction {what!r}")

    def _simplicial(self, name: str, D: int) -> SimplicialSet:
        d = self.doc(name, ("simplicial-set", "category"))
        if d.kind == "category":
            return self.get(name).nerve(D)
        X = self.get(name)
        return X.truncate(D) if X.max_dim > D else X

    def _build_map(self, d: WorkbenchDocument) -> SimplicialMap:
        from .grothendieck import grothendieck

        cons = d.get("construction")
        what, args = cons[0].text, [t.text for t in cons[1:]]
        D = _int(d, "max-dim", 3)
        if what == "grothendieck":
            return grothendieck(self.get(args[0]), D).projection
        if what == "nerve":
            i = self.get(args[0])
            if not isinstance(i, FunctorMap):
                raise WorkbenchParseError(f"map {d.name!r}: {args[0]!r} is not a functor")
            return i.nerve_map(D)
        if what != "explicit":
            raise WorkbenchParseError(f"map {d.name!r}: unknown construction {what!r}")
        if d.get("domain") is None or d.get("codomain") is None:
            raise WorkbenchParseError(f"map {d.name!r}: explicit maps need domain and codomain")
        X = self._simplicial(d.get1("domain"), D)
        Y = self._simplicial(d.get1("codomain"), D)
        sends: dict = {}
        for i, v in d.all("send"):
            try:
                p = int(v[0].text)
                x = X.index(p, v[1].text)
            except (ValueError, KeyError):
                raise self._err(d, i, f"unknown {v[0].text}-simplex {v[1].text!r} of the domain") from None
            t = v[2]
            try:
                lab = t.text if t.suffix is None else (t.text, t.suffix)
                y = Y.index(p, _coerce_label(Y, p, lab))
            except (KeyError, ValueError):
                raise self._err(d, i, f"unknown {p}-simplex {t.render()} of the codomain") from None
            sends[(p, x)] = y
        levels = []
        for k in range(D + 1):
            row = []
            for x in range(X.size(k)):
                sigma, p, y = X.normal_form(k, x)
                if (p, y) not in sends:
                    raise WorkbenchParseError(f"map {d.name!r}: no image for {X.labels[p][y]!r}")
                row.append(Y.act(sigma, sends[(p, y)]) if k != p else sends[(p, y)])
            levels.append(row)
        f = SimplicialMap(X, Y, levels)
        try:
            f.validate()
        except ValidationError as exc:
            raise WorkbenchParseError(f"map {d.name!r}: {exc}") from None
        return f


def _coerce_label(Y: SimplicialSet, p: int, lab):
    """Match a text label against ``Y``'s labels, which may be tuples."""
    try:
        Y.index(p, lab)
        return lab
    except KeyError:
        pass
    for cand in Y.labels[p]:
        if _s(cand) == (lab if isinstance(lab, str) else _s(lab)):
            return cand
    raise KeyError(lab)


def _int(d: WorkbenchDocument, key: str, default: int | None = None) -> int:
    v = d.get1(key)
    if v is None:
        if default is None:
            raise WorkbenchParseError(f"{d.kind} {d.name!r} lacks field {key!r}")
        return default
    try:
        n = int(v)
    except ValueError:
        raise WorkbenchParseError(f"{d.kind} {d.name!r}: {key} must be an integer, got {v!r}") from None
    if n < 0:
        raise WorkbenchParseError(f"{d.kind} {d.name!r}: {key} must be non-negative")
    return n


def load(path) -> Workbench:
    with open(path, encoding="utf-8") as fh:
        return Workbench.from_text(fh.read())


def fixture_path(name: str):
    """Path of a bundled fixture such as ``"interval"`` or ``"corpus_E"``."""
    from importlib.resources import files

    return files("segalfib") / "fixtures" / f"{name}.wb"


def load_fixture(name: str) -> Workbench:
    return Workbench.from_text(fixture_path(name).read_text(encoding="utf-8"))


def corpus_document(name: str) -> list[WorkbenchDocument]:
    """The corpus category ``name`` and its presheaves as documents."""
    from .category import corpus_category, corpus_presheaves

    C = corpus_category(name)
    docs = [category_document(C, name)]
    for F in corpus_presheaves(C):
        if F.name.startswith("Hom("):
            # elements of a representable are morphism indices; show their labels
            F = Presheaf(C, [[C.morphisms[u] for u in v] for v in F.values], F.action, name=F.name, check=False)
        docs.append(presheaf_document(F, f"{name}:{F.name}", name))
    return docs


def cat_presheaf_documents(F: Presheaf, name: str, base: str) -> list[WorkbenchDocument]:
    """A CAT presheaf as its value categories, action functors and the presheaf itself."""
    C = F.base
    docs = []
    cat_names = {}
    for c in range(C.n_objects):
        A = F.values[c]
        if id(A) not in cat_names:
            cat_names[id(A)] = f"{name}@{C.objects[c]}"
            docs.append(category_document(A, cat_names[id(A)]))
    pres = WorkbenchDocument("presheaf", name).add("base", base).add("kind", "CAT")
    for c in range(C.n_objects):
        pres.add("value", _s(C.objects[c]), cat_names[id(F.values[c])])
    for f in range(C.n_morphisms):
        if C.is_identity(f):
            continue
        fname = f"{name}@{C.morphisms[f]}"
        G = F.action[f]
        docs.append(functor_document(G, fname, cat_names[id(G.source)], cat_names[id(G.target)]))
        pres.add("action", _s(C.morphisms[f]), fname)
    return docs + [pres]
