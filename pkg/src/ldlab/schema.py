"""Instance files: a small JSON model for generated instances, mutation
descriptors, realization into live structures, and serialization of
finite-table instances (the form the coalgebra-category emitter writes).

An instance file either names a generator with parameters, or carries a
fully explicit finite-table backend with its structure tables.  Mutations
are part of the file, so corpus failures replay deterministically.
"""

from __future__ import annotations

import json

import jsonschema

from .backends import TableBackend
from .report import SCHEMA_VERSION, canonical_json, digest
from .structures import (Functor, Lindist, Monoidal, Negation,
                         StructureMissing)

GENERATORS = ("lukasiewicz", "matrix_compact", "group_hopf")

MUTATION_KINDS = ("star-table-entry", "matrix-entry", "drop-swap-phi",
                  "zero-nu", "scale-nu", "identity-antipode")

INSTANCE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["schema_version"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "name": {"type": "string"},
        "generator": {"enum": list(GENERATORS)},
        "params": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "p": {"type": "integer", "minimum": 2},
                "m": {"type": "integer", "minimum": 1},
                "dmax": {"type": "integer", "minimum": 1},
            },
        },
        "comonad": {
            "type": "object",
            "additionalProperties": False,
            "required": ["kind"],
            "properties": {
                "kind": {"enum": ["identity", "interior", "hopf"]},
                "g": {"type": "array", "items": {"type": "integer"}},
            },
        },
        "mutations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind"],
                "properties": {"kind": {"enum": list(MUTATION_KINDS)}},
            },
        },
        "table": {"type": "object"},
        "meta": {"type": "object"},
    },
}


class SchemaError(Exception):
    """The instance file does not parse against the schema."""


def load_instance(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot parse {path}: {exc}") from exc
    validate_instance(data)
    return data


def validate_instance(data: dict) -> None:
    try:
        jsonschema.validate(data, INSTANCE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(exc.message) from exc
    if "generator" not in data and "table" not in data:
        raise SchemaError("instance needs either a generator or a table")


def instance_digest(data: dict) -> str:
    return digest(data)


def save_instance(data: dict, path: str) -> None:
    validate_instance(data)
    with open(path, "w") as fh:
        fh.write(canonical_json(data))
        fh.write("\n")


# ---------------------------------------------------------------------------
# realization

def realize(data: dict):
    """Instance dict to a LiveInstance, with mutations applied."""
    from . import instances as gen
    from .comonads import identity_comonad

    validate_instance(data)
    if "table" in data:
        inst = _realize_table(data)
    else:
        name = data["generator"]
        params = data.get("params", {})
        if name == "lukasiewicz":
            inst = gen.gen_lukasiewicz(params.get("n", 3))
        elif name == "matrix_compact":
            inst = gen.gen_matrix_compact(params.get("p", 2),
                                          params.get("dmax", 2))
        elif name == "group_hopf":
            inst = gen.gen_group_hopf(params.get("p", 2), params.get("m", 2),
                                      params.get("dmax", 2))
        else:  # pragma: no cover - schema forbids
            raise SchemaError(f"unknown generator {name}")

    com = data.get("comonad")
    if com is not None:
        kind = com["kind"]
        if kind == "identity":
            inst.comonad, inst.lift = identity_comonad(inst.bundle, inst.neg)
        elif kind == "interior":
            if not hasattr(inst.backend, "leq"):
                raise StructureMissing(
                    "interior comonads need a thin backend")
            g = com.get("g")
            if g is None or len(g) != inst.backend.n:
                raise StructureMissing("interior comonad needs a g table "
                                       "matching the carrier")
            entry = gen.interior_comonad(inst.backend, inst.bundle,
                                         inst.neg, list(g))
            inst.comonad, inst.lift = entry["comonad"], entry["lift"]
        elif kind == "hopf":
            if inst.hopf is None:
                raise StructureMissing("instance carries no Hopf algebra")

    for desc in data.get("mutations", []):
        inst = apply_mutation(inst, desc)
    inst.spec = data
    return inst


def apply_mutation(inst, desc: dict):
    from . import instances as gen
    kind = desc["kind"]
    if kind == "star-table-entry":
        if not hasattr(inst.backend, "leq"):
            raise StructureMissing("star-table-entry needs a thin backend")
        a, b = desc["at"]
        return gen.mutate_thin_star_entry(inst, a, b, desc["value"])
    if kind == "matrix-entry":
        if not hasattr(inst.backend, "p"):
            raise StructureMissing("matrix-entry needs a matrix backend")
        a, r, c = desc["at"]
        return gen.mutate_matrix_entry(inst, desc["family"], a, r, c,
                                       desc.get("delta", 1))
    if inst.lift is None or inst.comonad is None:
        raise StructureMissing(f"mutation {kind} needs a comonad with lifts")
    if kind == "zero-nu":
        return gen.mutate_zero_nu(inst)
    if kind == "scale-nu":
        return gen.mutate_scale_nu(inst, desc.get("factor", 2))
    if kind == "identity-antipode":
        if inst.hopf is None:
            raise StructureMissing("identity-antipode needs a Hopf algebra")
        return gen.mutate_identity_antipode(inst)
    if kind == "drop-swap-phi":
        if inst.hopf is None:
            raise StructureMissing("drop-swap-phi needs a Hopf comonad")
        return gen.mutate_drop_swap_phi(inst)
    raise SchemaError(f"unknown mutation kind {kind}")


# ---------------------------------------------------------------------------
# finite-table instances

def _k(*parts) -> str:
    return ",".join(str(p) for p in parts)


def serialize_table_instance(name: str, table: TableBackend,
                             bundle: Lindist, neg: Negation) -> dict:
    """Materialize a finite-table instance (for example the emitted
    coalgebra category) into the instance-file form."""
    n = table.n_objects
    objs = range(n)
    homs = {_k(a, b): table.hom_size(a, b) for a in objs for b in objs}
    comp = {}
    for (a, b, c), tbl in table.comp.items():
        comp[_k(a, b, c)] = [
            [tbl[g][f] for f in range(table.hom_size(a, b))]
            for g in range(table.hom_size(b, c))]
    identities = {str(a): table.identities[a] for a in objs}

    def mon_dict(mon: Monoidal) -> dict:
        obj = [[mon.obj(a, b) for b in objs] for a in objs]
        mor = {}
        for a1 in objs:
            for b1 in objs:
                for a2 in objs:
                    for b2 in objs:
                        rows = []
                        for f in table.hom(a1, b1):
                            rows.append([
                                mon.mor(f, g).payload
                                for g in table.hom(a2, b2)])
                        mor[_k(a1, b1, a2, b2)] = rows
        return {"unit": mon.unit, "obj": obj, "mor": mor}

    dl = {_k(a, b, c): bundle.dl(a, b, c).payload
          for a in objs for b in objs for c in objs}
    dr = {_k(a, b, c): bundle.dr(a, b, c).payload
          for a in objs for b in objs for c in objs}

    neg_dict = {
        "s_obj": [neg.S.obj(a) for a in objs],
        "sp_obj": [neg.Sp.obj(a) for a in objs],
        "s_mor": {_k(a, b): [neg.S.mor(f).payload for f in table.hom(a, b)]
                  for a in objs for b in objs},
        "sp_mor": {_k(a, b): [neg.Sp.mor(f).payload for f in table.hom(a, b)]
                   for a in objs for b in objs},
        "e": [neg.e(a).payload for a in objs],
        "n": [neg.n(a).payload for a in objs],
        "ep": [neg.ep(a).payload for a in objs],
        "np": [neg.np(a).payload for a in objs],
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "name": name,
        "table": {
            "backend": {"n_objects": n, "homs": homs, "comp": comp,
                        "identities": identities},
            "star": mon_dict(bundle.star),
            "par": mon_dict(bundle.par),
            "dl": dl,
            "dr": dr,
            "negation": neg_dict,
        },
    }


def _realize_table(data: dict):
    from .instances import LiveInstance
    t = data["table"]
    b = t["backend"]
    homs = {tuple(map(int, k.split(","))): v for k, v in b["homs"].items()}
    comp = {}
    for k, rows in b["comp"].items():
        a, bb, c = map(int, k.split(","))
        comp[(a, bb, c)] = {g: {f: rows[g][f] for f in range(len(rows[g]))}
                            for g in range(len(rows))}
    identities = {int(k): v for k, v in b["identities"].items()}
    table = TableBackend(b["n_objects"], homs, comp, identities)

    def mk_mon(d: dict, tag: str) -> Monoidal:
        obj_tbl = d["obj"]

        def mor(f, g):
            ids = d["mor"][_k(f.dom, f.cod, g.dom, g.cod)]
            return table.mor(obj_tbl[f.dom][g.dom], obj_tbl[f.cod][g.cod],
                             ids[f.payload][g.payload])
        return Monoidal(backend=table, tag=tag, unit=d["unit"],
                        obj=lambda a, bb: obj_tbl[a][bb], mor=mor)

    star = mk_mon(t["star"], "star")
    par = mk_mon(t["par"], "par")

    def dl(a, bb, c):
        return table.mor(star.obj(a, par.obj(bb, c)),
                         par.obj(star.obj(a, bb), c), t["dl"][_k(a, bb, c)])

    def dr(a, bb, c):
        return table.mor(star.obj(par.obj(a, bb), c),
                         par.obj(a, star.obj(bb, c)), t["dr"][_k(a, bb, c)])

    bundle = Lindist(star=star, par=par, dl=dl, dr=dr)

    nd = t["negation"]

    def mk_neg_functor(obj_key: str, mor_key: str) -> Functor:
        objs = nd[obj_key]

        def mor(f):
            ids = nd[mor_key][_k(f.dom, f.cod)]
            return table.mor(objs[f.cod], objs[f.dom], ids[f.payload])
        return Functor(backend=table, obj=lambda a: objs[a], mor=mor,
                       contravariant=True)

    S = mk_neg_functor("s_obj", "s_mor")
    Sp = mk_neg_functor("sp_obj", "sp_mor")
    neg = Negation(
        S=S, Sp=Sp,
        e=lambda a: table.mor(star.obj(S.obj(a), a), par.unit, nd["e"][a]),
        n=lambda a: table.mor(star.unit, par.obj(a, S.obj(a)), nd["n"][a]),
        ep=lambda a: table.mor(star.obj(a, Sp.obj(a)), par.unit, nd["ep"][a]),
        np=lambda a: table.mor(star.unit, par.obj(Sp.obj(a), a), nd["np"][a]))
    return LiveInstance(name=data.get("name", "table-instance"),
                        backend=table, bundle=bundle, neg=neg, spec=data)
