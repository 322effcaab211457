"""Structure-constant file format: loading, validation and canonical output.

A workspace file is JSON with labeled blocks (algebras, modules, corings,
comodules, grouplikes, extensions, maps) whose scalar entries are strings:
"p/q" over the rationals, "n mod p" over a prime field.  References resolve
in block order, so files are acyclic by construction.  The canonical
formatter makes serialization deterministic byte-for-byte.
"""

from __future__ import annotations

import json

from .algmod import FBimodule, FiniteAlgebra, trivial_algebra
from .coring import Comodule, Coring, Grouplike
from .exactla import FieldFp, FieldQ, Matrix, QQ, UsageError
from .extension import CoringExtension

FORMAT_VERSION = "1"


class ParseError(Exception):
    """Unreadable or malformed workspace file."""


def _ser_matrix(field, m):
    return {"rows": m.rows, "cols": m.cols,
            "entries": [field.fmt(v) for row in m.data for v in row]}


def _de_matrix(field, obj, what="matrix"):
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("bad %s block" % what) from exc
    if len(entries) != rows * cols:
        raise ParseError("%s: expected %d entries, got %d"
                         % (what, rows * cols, len(entries)))
    vals = [field.parse(s) for s in entries]
    return Matrix(field, rows, cols,
                  [vals[i * cols:(i + 1) * cols] for i in range(rows)])


def _ser_vector(field, v):
    return [field.fmt(x) for x in v]


def _de_vector(field, obj):
    return [field.parse(s) for s in obj]


class Workspace:
    """Named structures loaded from (or destined for) a workspace file."""

    def __init__(self, field):
        self.field = field
        self.algebras = {}
        self.modules = {}
        self.module_algs = {}   # name -> (left_name|None, right_name|None)
        self.corings = {}
        self.coring_meta = {}   # name -> (base_name, carrier_name)
        self.comodules = {}
        self.comodule_meta = {}
        self.grouplikes = {}
        self.grouplike_meta = {}
        self.extensions = {}
        self.extension_meta = {}
        self.maps = {}
        self.map_meta = {}

    # -- assembly

    def add_algebra(self, name, alg):
        self.algebras[name] = alg
        return alg

    def add_module(self, name, mod, left_name=None, right_name=None):
        self.modules[name] = mod
        self.module_algs[name] = (left_name, right_name)
        return mod

    def add_coring(self, name, coring, base_name, carrier_name):
        self.corings[name] = coring
        self.coring_meta[name] = (base_name, carrier_name)
        return coring

    def add_comodule(self, name, com, coring_name, carrier_name):
        self.comodules[name] = com
        self.comodule_meta[name] = (coring_name, carrier_name)
        return com

    def add_grouplike(self, name, g, coring_name):
        self.grouplikes[name] = g
        self.grouplike_meta[name] = coring_name
        return g

    def add_extension(self, name, ext, inner_name, outer_name):
        self.extensions[name] = ext
        self.extension_meta[name] = (inner_name, outer_name)
        return ext

    def add_map(self, name, matrix, source, target):
        """source/target are (kind, name) pairs; kind in
        algebra|module|coring|comodule|dual-pairing."""
        self.maps[name] = matrix
        self.map_meta[name] = (tuple(source), tuple(target))
        return matrix

    def validate_all(self):
        """Run every structural validator, in deterministic block order."""
        for table in (self.algebras, self.modules, self.corings,
                      self.comodules, self.grouplikes, self.extensions):
            for name in sorted(table):
                table[name].validate()
        return True

    # -- space resolution for maps

    def space_dim(self, ref):
        kind, name = ref
        if kind == "algebra":
            return self.algebras[name].dim
        if kind == "module":
            return self.modules[name].dim
        if kind == "coring":
            return self.corings[name].dim
        if kind == "comodule":
            return self.comodules[name].dim
        raise UsageError("unknown space kind %r" % (kind,))

    # -- serialization

    def to_json(self):
        f = self.field
        out = {"format_version": FORMAT_VERSION}
        if isinstance(f, FieldQ):
            out["field"] = {"kind": "Q"}
        else:
            out["field"] = {"kind": "Fp", "p": f.p}
        out["algebras"] = {
            name: {"dim": alg.dim,
                   "mul": [[_ser_vector(f, alg.mul[i][j]) for j in range(alg.dim)]
                           for i in range(alg.dim)],
                   "unit": _ser_vector(f, alg.unit)}
            for name, alg in self.algebras.items()}
        out["modules"] = {}
        for name, mod in self.modules.items():
            left, right = self.module_algs[name]
            out["modules"][name] = {
                "left": left, "right": right, "dim": mod.dim,
                "left_act": [_ser_matrix(f, m) for m in mod.left_act],
                "right_act": [_ser_matrix(f, m) for m in mod.right_act]}
        out["corings"] = {}
        for name, c in self.corings.items():
            base, carrier = self.coring_meta[name]
            out["corings"][name] = {
                "base": base, "carrier": carrier,
                "coproduct": _ser_matrix(f, c.cc.sect().mul(c.coproduct)),
                "counit": _ser_matrix(f, c.counit)}
        out["comodules"] = {}
        for name, m in self.comodules.items():
            coring, carrier = self.comodule_meta[name]
            out["comodules"][name] = {
                "coring": coring, "carrier": carrier,
                "coaction": _ser_matrix(f, m.mc.sect().mul(m.coaction))}
        out["grouplikes"] = {
            name: {"coring": self.grouplike_meta[name],
                   "vector": _ser_vector(f, g.element)}
            for name, g in self.grouplikes.items()}
        out["extensions"] = {}
        for name, e in self.extensions.items():
            inner, outer = self.extension_meta[name]
            entry = {"inner": inner, "outer": outer,
                     "right_l_action": [_ser_matrix(f, m) for m in e.right_l_act],
                     "tau": _ser_matrix(f, e.cld.sect().mul(e.tau))}
            entry["split_map"] = _ser_matrix(f, e.split_map) \
                if e.split_map is not None else None
            out["extensions"][name] = entry
        out["maps"] = {}
        for name, mat in self.maps.items():
            src, tgt = self.map_meta[name]
            out["maps"][name] = {"source": list(src), "target": list(tgt),
                                 "matrix": _ser_matrix(f, mat)}
        return out

    def canonical_text(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=1) + "\n"


def parse_field(obj):
    kind = obj.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return FieldFp(int(obj["p"]))
    raise ParseError("unknown field kind %r" % (kind,))


def load_workspace(text, field_override=None):
    """Parse a workspace file; every block is validated on load.

    field_override replaces the declared field (used for reductions of
    rational fixtures to a prime field).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("not valid JSON: %s" % exc) from exc
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    if data.get("format_version") != FORMAT_VERSION:
        raise ParseError("unsupported format version %r" % data.get("format_version"))
    declared = parse_field(data.get("field", {}))
    field = field_override or declared
    if field_override is not None and not isinstance(declared, FieldQ):
        raise ParseError("field reduction is only defined for rational files")
    ws = Workspace(field)
    triv = trivial_algebra(field)

    def alg_of(name, what):
        if name is None:
            return triv
        if name not in ws.algebras:
            raise ParseError("%s references unknown algebra %r" % (what, name))
        return ws.algebras[name]

    for name in data.get("algebras", {}):
        blk = data["algebras"][name]
        dim = int(blk["dim"])
        mul = [[_de_vector(field, blk["mul"][i][j]) for j in range(dim)]
               for i in range(dim)]
        unit = _de_vector(field, blk["unit"])
        alg = FiniteAlgebra(field, dim, mul, unit, name=name)
        ws.add_algebra(name, alg)
    for name in data.get("modules", {}):
        blk = data["modules"][name]
        left = alg_of(blk.get("left"), "module %s" % name)
        right = alg_of(blk.get("right"), "module %s" % name)
        mod = FBimodule(left, right, int(blk["dim"]),
                        [_de_matrix(field, m, "left action of %s" % name)
                         for m in blk["left_act"]],
                        [_de_matrix(field, m, "right action of %s" % name)
                         for m in blk["right_act"]], name=name)
        ws.add_module(name, mod, blk.get("left"), blk.get("right"))
    for name in data.get("corings", {}):
        blk = data["corings"][name]
        base = alg_of(blk["base"], "coring %s" % name)
        if blk["carrier"] not in ws.modules:
            raise ParseError("coring %s references unknown module %r"
                             % (name, blk["carrier"]))
        carrier = ws.modules[blk["carrier"]]
        c = Coring(base, carrier, _de_matrix(field, blk["coproduct"],
                                             "coproduct of %s" % name),
                   _de_matrix(field, blk["counit"], "counit of %s" % name),
                   name=name)
        ws.add_coring(name, c, blk["base"], blk["carrier"])
    for name in data.get("comodules", {}):
        blk = data["comodules"][name]
        if blk["coring"] not in ws.corings:
            raise ParseError("comodule %s references unknown coring %r"
                             % (name, blk["coring"]))
        if blk["carrier"] not in ws.modules:
            raise ParseError("comodule %s references unknown module %r"
                             % (name, blk["carrier"]))
        m = Comodule(ws.corings[blk["coring"]], ws.modules[blk["carrier"]],
                     _de_matrix(field, blk["coaction"], "coaction of %s" % name),
                     name=name)
        ws.add_comodule(name, m, blk["coring"], blk["carrier"])
    for name in data.get("grouplikes", {}):
        blk = data["grouplikes"][name]
        if blk["coring"] not in ws.corings:
            raise ParseError("grouplike %s references unknown coring %r"
                             % (name, blk["coring"]))
        g = Grouplike(ws.corings[blk["coring"]], _de_vector(field, blk["vector"]))
        ws.add_grouplike(name, g, blk["coring"])
    for name in data.get("extensions", {}):
        blk = data["extensions"][name]
        for key in ("inner", "outer"):
            if blk[key] not in ws.corings:
                raise ParseError("extension %s references unknown coring %r"
                                 % (name, blk[key]))
        split = blk.get("split_map")
        ext = CoringExtension(
            ws.corings[blk["inner"]], ws.corings[blk["outer"]],
            [_de_matrix(field, m, "right action of %s" % name)
             for m in blk["right_l_action"]],
            _de_matrix(field, blk["tau"], "outer coaction of %s" % name),
            split_map=_de_matrix(field, split, "split map of %s" % name)
            if split is not None else None,
            name=name)
        ws.add_extension(name, ext, blk["inner"], blk["outer"])
    for name in data.get("maps", {}):
        blk = data["maps"][name]
        src = tuple(blk["source"])
        tgt = tuple(blk["target"])
        mat = _de_matrix(field, blk["matrix"], "map %s" % name)
        for ref, expect, axis in ((src, mat.cols, "source"),
                                  (tgt, mat.rows, "target")):
            try:
                dim = ws.space_dim(ref)
            except (KeyError, UsageError) as exc:
                raise ParseError("map %s has unresolvable %s %r"
                                 % (name, axis, ref)) from exc
            if dim != expect:
                raise ParseError("map %s: %s dimension mismatch" % (name, axis))
        ws.add_map(name, mat, src, tgt)
    return ws


def load_workspace_file(path, field_override=None):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc)) from exc
    if not text.strip():
        raise ParseError("empty file: %s" % path)
    return load_workspace(text, field_override=field_override)
