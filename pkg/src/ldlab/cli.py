"""Command-line front end.

Exit codes: 0 all requested checks pass, 1 at least one axiom fails,
2 parse or schema error, 3 missing-structure or precondition error.
Reports are canonical JSON: identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .backends import Scope, ScopeTooLarge
from .em import em_lindist_instance, enumerate_coalgebras
from .instances import enumerate_interior_comonads
from .lindist import lindist_from_star, star_from_lindist
from .report import canonical_json
from .schema import (SchemaError, instance_digest, load_instance, realize,
                     save_instance, serialize_table_instance,
                     validate_instance)
from .starcomonad import compact_hopf_check, notions_coincide
from .structures import PreconditionFailure, StructureMissing
from .suite import parse_axioms, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_SCHEMA, EXIT_MISSING = 0, 1, 2, 3

# The compact specialization of the four evaluation diagrams, as a fixed
# correspondence table emitted with every `compact` report.
BV_CORRESPONDENCE = {"Le": "BV-23", "Ln": "BV-22", "Le′": "BV-21",
                     "Ln′": "BV-20"}


def _scope_from(args) -> Scope:
    objects = None
    if getattr(args, "scope", None):
        objects = tuple(int(x) for x in args.scope.split(","))
    return Scope(objects=objects)


def _emit(args, payload: dict, summary_lines: list[str] | None = None) -> None:
    text = canonical_json(payload)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
            fh.write("\n")
    else:
        print(text)
    if getattr(args, "summary", False) and summary_lines:
        print("\n".join(summary_lines), file=sys.stderr)


def cmd_validate(args) -> int:
    inst = realize(load_instance(args.instance))
    axioms = parse_axioms(args.axioms)
    rep = run_suite(inst, axioms, _scope_from(args))
    _emit(args, rep.to_dict(), rep.summary().splitlines())
    return EXIT_PASS if rep.overall else EXIT_FAIL


def cmd_lift(args) -> int:
    inst = realize(load_instance(args.instance))
    if inst.comonad is None or inst.lift is None or inst.neg is None:
        raise StructureMissing("lifting needs a comonad with lifts")
    scope = _scope_from(args)
    seeds = []
    for a in (scope.objs(inst.backend) if args.seed_dims is None
              else [int(x) for x in args.seed_dims.split(",")]):
        seeds.extend(enumerate_coalgebras(inst.comonad, a, scope))
    table, em_bundle, em_neg, objs = em_lindist_instance(
        inst.bundle, inst.neg, inst.comonad, inst.lift, seeds, scope)
    data = serialize_table_instance(inst.name + "-coalgebras", table,
                                    em_bundle, em_neg)
    data["meta"] = {"source_digest": instance_digest(inst.spec),
                    "carriers": [o.carrier for o in objs]}
    _emit(args, data, [f"emitted {len(objs)} coalgebra objects"])
    return EXIT_PASS


def cmd_translate(args) -> int:
    inst = realize(load_instance(args.instance))
    if inst.neg is None:
        raise StructureMissing("translation needs negations")
    scope = _scope_from(args)
    # structural comparison happens below; full law validation of the
    # derived structures is `validate`'s job and is slow on matrix backends
    sa, cert = star_from_lindist(inst.bundle, inst.neg, scope,
                                 validate=args.check)
    payload = {"direction": "to-star-and-back", "notes": list(cert.notes)}
    if args.direction in ("round-trip", "to-lindist"):
        b2, neg2, cert2 = lindist_from_star(sa, scope, validate=args.check)
        payload["notes"].extend(cert2.notes)
        same_obj = all(
            b2.par.obj(a, b) == inst.bundle.par.obj(a, b)
            for a in scope.objs(inst.backend)
            for b in scope.objs(inst.backend))
        payload["par_objects_reproduced"] = same_obj
    _emit(args, payload)
    return EXIT_PASS


def cmd_coincide(args) -> int:
    inst = realize(load_instance(args.instance))
    if inst.comonad is None or inst.lift is None or inst.neg is None:
        raise StructureMissing(
            "the coincidence check needs a comonad with lifts")
    res = notions_coincide(inst.bundle, inst.neg, inst.comonad, inst.lift,
                           _scope_from(args))
    payload = {
        "verdict_a": res["verdict_a"],
        "verdict_b": res["verdict_b"],
        "coincide": res["coincide"],
        "side_a": res["side_a"].to_dict(),
        "side_b": res["side_b"].to_dict(),
    }
    _emit(args, payload,
          [f"formulation A: {'pass' if res['verdict_a'] else 'FAIL'}",
           f"formulation B: {'pass' if res['verdict_b'] else 'FAIL'}",
           f"verdicts coincide: {res['coincide']}"])
    return EXIT_PASS if res["coincide"] else EXIT_FAIL


def cmd_compact(args) -> int:
    inst = realize(load_instance(args.instance))
    if inst.comonad is None or inst.lift is None or inst.neg is None:
        raise StructureMissing(
            "the compact Hopf check needs a comonad with lifts")
    rep = compact_hopf_check(inst.bundle, inst.neg, inst.comonad, inst.lift,
                             _scope_from(args))
    payload = rep.to_dict()
    payload["correspondence"] = BV_CORRESPONDENCE
    _emit(args, payload, rep.summary().splitlines())
    return EXIT_PASS if rep.overall else EXIT_FAIL


def cmd_generate(args) -> int:
    if args.seed_corpus:
        write_corpus(args.seed_corpus)
        print(f"corpus written to {args.seed_corpus}")
        return EXIT_PASS
    params = {}
    for kv in args.params or []:
        k, _, v = kv.partition("=")
        params[k] = int(v)
    data = {"schema_version": 1, "generator": args.name, "params": params}
    validate_instance(data)
    realize(data)  # fail fast on bad parameters
    if args.out:
        save_instance(data, args.out)
    else:
        print(canonical_json(data))
    return EXIT_PASS


def cmd_search(args) -> int:
    inst = realize(load_instance(args.instance))
    if not hasattr(inst.backend, "leq"):
        raise StructureMissing("search enumerates interior comonads and "
                               "needs a thin backend")
    scope = _scope_from(args)
    from .comonads import check_L1, check_L2, check_nu
    from .em import check_em_compat
    rows = []
    tiers = {"comonad": 0, "monoidal": 0, "L1-L2": 0, "liftable": 0,
             "star-comonad": 0}
    for entry in enumerate_interior_comonads(inst):
        cm = entry["comonad"]
        row = {"g": list(entry["g"]), "tiers": ["comonad"]}
        tiers["comonad"] += 1
        if entry["has_phi"] and entry["has_psi"]:
            row["tiers"].append("monoidal")
            tiers["monoidal"] += 1
            if check_L1(inst.bundle, cm, scope).overall and \
               check_L2(inst.bundle, cm, scope).overall:
                row["tiers"].append("L1-L2")
                tiers["L1-L2"] += 1
                if entry["has_nu"] and \
                   check_nu(cm, inst.neg, entry["lift"], scope).overall:
                    row["tiers"].append("liftable")
                    tiers["liftable"] += 1
                    if check_em_compat(inst.bundle, inst.neg, cm,
                                       entry["lift"], scope).overall:
                        row["tiers"].append("star-comonad")
                        tiers["star-comonad"] += 1
        rows.append(row)
    payload = {"comonads": rows, "counts": tiers}
    _emit(args, payload,
          [f"{t}: {c}" for t, c in tiers.items()])
    return EXIT_PASS


def cmd_mutate(args) -> int:
    data = load_instance(args.instance)
    desc = json.loads(args.descriptor)
    data.setdefault("mutations", []).append(desc)
    validate_instance(data)
    realize(data)  # fail fast if the descriptor targets nothing
    if args.out:
        save_instance(data, args.out)
    else:
        print(canonical_json(data))
    return EXIT_PASS


# ---------------------------------------------------------------------------
# corpus

CORPUS = [
    ("lukasiewicz-3", {"schema_version": 1, "generator": "lukasiewicz",
                       "params": {"n": 3}, "comonad": {"kind": "identity"}}),
    ("lukasiewicz-4", {"schema_version": 1, "generator": "lukasiewicz",
                       "params": {"n": 4}}),
    ("lukasiewicz-3-interior", {
        "schema_version": 1, "generator": "lukasiewicz", "params": {"n": 3},
        "comonad": {"kind": "interior", "g": [0, 0, 2]}}),
    ("matrix-compact-2-3", {"schema_version": 1, "generator": "matrix_compact",
                            "params": {"p": 2, "dmax": 3}}),
    ("group-hopf-2-2", {"schema_version": 1, "generator": "group_hopf",
                        "params": {"p": 2, "m": 2, "dmax": 2}}),
    ("group-hopf-3-3", {"schema_version": 1, "generator": "group_hopf",
                        "params": {"p": 3, "m": 3, "dmax": 2}}),
    ("lukasiewicz-3-star-entry", {
        "schema_version": 1, "generator": "lukasiewicz", "params": {"n": 3},
        "mutations": [{"kind": "star-table-entry", "at": [1, 2],
                       "value": 2}]}),
    ("group-hopf-2-2-zero-nu", {
        "schema_version": 1, "generator": "group_hopf",
        "params": {"p": 2, "m": 2, "dmax": 2},
        "mutations": [{"kind": "zero-nu"}]}),
    ("group-hopf-3-3-identity-antipode", {
        "schema_version": 1, "generator": "group_hopf",
        "params": {"p": 3, "m": 3, "dmax": 2},
        "mutations": [{"kind": "identity-antipode"}]}),
    ("group-hopf-3-3-scale-nu", {
        "schema_version": 1, "generator": "group_hopf",
        "params": {"p": 3, "m": 3, "dmax": 2},
        "mutations": [{"kind": "scale-nu", "factor": 2}]}),
    ("group-hopf-2-2-drop-swap-phi", {
        "schema_version": 1, "generator": "group_hopf",
        "params": {"p": 2, "m": 2, "dmax": 2},
        "mutations": [{"kind": "drop-swap-phi"}]}),
]

# Expected overall suite verdict per corpus entry, used by the manifest.
CORPUS_EXPECTED = {
    "lukasiewicz-3": True,
    "lukasiewicz-4": True,
    "lukasiewicz-3-interior": True,
    "matrix-compact-2-3": True,
    "group-hopf-2-2": True,
    "group-hopf-3-3": True,
    "lukasiewicz-3-star-entry": False,
    "group-hopf-2-2-zero-nu": False,
    "group-hopf-3-3-identity-antipode": False,
    "group-hopf-3-3-scale-nu": False,
    "group-hopf-2-2-drop-swap-phi": False,
}


def write_corpus(directory: str) -> None:
    import os
    os.makedirs(directory, exist_ok=True)
    manifest = {}
    for name, data in CORPUS:
        path = os.path.join(directory, name + ".json")
        save_instance(data, path)
        manifest[name] = {"file": name + ".json",
                          "expected_overall": CORPUS_EXPECTED[name],
                          "digest": instance_digest(data)}
    with open(os.path.join(directory, "manifest.json"), "w") as fh:
        fh.write(canonical_json(manifest))
        fh.write("\n")


def corpus_scope(name: str) -> Scope:
    """The scope each corpus entry is checked under (matrix dims stay small)."""
    if name.startswith(("group-hopf", "matrix-compact")):
        return Scope(objects=(1, 2))
    return Scope()


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ldlab",
        description="checkers for linearly distributive and star-autonomous "
                    "structure over finite backends")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, instance=True):
        if instance:
            p.add_argument("instance", help="instance file (JSON)")
        p.add_argument("--scope", help="comma-separated object list")
        p.add_argument("--out", help="write the report to this path")
        p.add_argument("--summary", action="store_true",
                       help="also print a human-readable table to stderr")

    p = sub.add_parser("validate", help="run axiom checkers")
    common(p)
    p.add_argument("--axioms", help="comma-separated axiom ids or aliases")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lift", help="emit the coalgebra category instance")
    common(p)
    p.add_argument("--seed-dims", help="carriers to enumerate coalgebras on")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("translate", help="run the structure translations")
    common(p)
    p.add_argument("--direction", default="round-trip",
                   choices=["to-star", "to-lindist", "round-trip"])
    p.add_argument("--check", action="store_true",
                   help="also law-check the derived structures (slow on "
                        "matrix backends)")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("coincide",
                       help="compare the two comonad formulations")
    common(p)
    p.set_defaults(func=cmd_coincide)

    p = sub.add_parser("compact", help="compact Hopf diagram check")
    common(p)
    p.set_defaults(func=cmd_compact)

    p = sub.add_parser("generate", help="write instance files")
    p.add_argument("name", nargs="?", help="generator name")
    p.add_argument("--params", nargs="*", help="key=value parameters")
    p.add_argument("--out", help="write the instance to this path")
    p.add_argument("--seed-corpus", help="write the regression corpus here")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("search", help="classify interior comonads")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("mutate", help="append a mutation descriptor")
    p.add_argument("instance")
    p.add_argument("--descriptor", required=True, help="descriptor JSON")
    p.add_argument("--out", help="write the mutated instance here")
    p.set_defaults(func=cmd_mutate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (json.JSONDecodeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except (StructureMissing, PreconditionFailure, ScopeTooLarge) as exc:
        print(f"structure error: {exc}", file=sys.stderr)
        return EXIT_MISSING


if __name__ == "__main__":
    sys.exit(main())
