"""Base law checkers: category, strict monoidal, and symmetry laws.

These are the checks every other module builds on.  Failures are report
content, never exceptions; counterexamples are listed in deterministic
ascending-index order.
"""

from __future__ import annotations

import itertools

from .backends import Scope, ScopeTooLarge, seq
from .report import CheckReport
from .structures import Check, Monoidal, Symmetry


def check_category_laws(backend, scope: Scope | None = None) -> CheckReport:
    """Associativity and identity laws over every enumerable hom within scope."""
    scope = scope or Scope()
    rep = CheckReport(scope=scope.describe(backend))
    c = Check("cat")
    objs = scope.objs(backend)

    homs = {}
    for a, b in itertools.product(objs, objs):
        try:
            homs[(a, b)] = backend.hom(a, b, scope.bound())
        except ScopeTooLarge:
            homs[(a, b)] = None  # skipped; recorded via scope in the report

    for a in objs:
        ha = homs.get((a, a))
        if ha is None:
            continue
        ident = backend.identity(a) if backend.hom_size(a, a) else None
        for b in objs:
            hab = homs.get((a, b))
            if hab is None:
                continue
            for f in hab:
                if ident is not None:
                    c.eq((a, b, "left-id"),
                         lambda f=f: backend.compose(f, backend.identity(f.dom)),
                         lambda f=f: f)
                    c.eq((a, b, "right-id"),
                         lambda f=f: backend.compose(backend.identity(f.cod), f),
                         lambda f=f: f)

    for a, b in itertools.product(objs, objs):
        hab = homs.get((a, b))
        if hab is None:
            continue
        for b2 in objs:
            hbc = homs.get((b, b2))
            if hbc is None:
                continue
            for cobj in objs:
                hcd = homs.get((b2, cobj))
                if hcd is None:
                    continue
                for f, g, h in itertools.product(hab, hbc, hcd):
                    c.eq((a, b, b2, cobj),
                         lambda f=f, g=g, h=h: backend.compose(
                             h, backend.compose(g, f)),
                         lambda f=f, g=g, h=h: backend.compose(
                             backend.compose(h, g), f))
    rep.add(c.done())
    return rep


def check_monoidal_laws(backend, mon: Monoidal,
                        scope: Scope | None = None) -> CheckReport:
    """Strict associativity/unit on objects; functoriality on morphisms."""
    scope = scope or Scope()
    axiom = "mon-⋆" if mon.tag == "star" else "mon-⋄"
    rep = CheckReport(scope=scope.describe(backend))
    c = Check(axiom)
    objs = scope.objs(backend)

    for a, b, cc in itertools.product(objs, objs, objs):
        c.holds((a, b, cc, "assoc"),
                mon.obj(mon.obj(a, b), cc) == mon.obj(a, mon.obj(b, cc)),
                "object-level associativity fails")
    for a in objs:
        c.holds((a, "unit-left"), mon.obj(mon.unit, a) == a,
                "I (x) A != A")
        c.holds((a, "unit-right"), mon.obj(a, mon.unit) == a,
                "A (x) I != A")
        c.eq((a, "unit-mor"),
             lambda a=a: mon.mor(backend.identity(mon.unit), backend.identity(a)),
             lambda a=a: backend.identity(mon.obj(mon.unit, a)))

    # 1_A (x) 1_B = 1_{A(x)B}
    for a, b in itertools.product(objs, objs):
        c.eq((a, b, "id-tensor"),
             lambda a=a, b=b: mon.mor(backend.identity(a), backend.identity(b)),
             lambda a=a, b=b: backend.identity(mon.obj(a, b)))

    # (f (x) g) . (f' (x) g') = (f.f') (x) (g.g') over sampled generators
    for a1, a2, a3 in itertools.product(objs, objs, objs):
        fs1 = scope.hom_sample(backend, a1, a2)
        fs2 = scope.hom_sample(backend, a2, a3)
        for b1, b2, b3 in itertools.product(objs, objs, objs):
            gs1 = scope.hom_sample(backend, b1, b2)
            gs2 = scope.hom_sample(backend, b2, b3)
            for fp, f in itertools.product(fs1, fs2):
                for gp, g in itertools.product(gs1, gs2):
                    c.eq((a1, a2, a3, b1, b2, b3, "functorial"),
                         lambda f=f, g=g, fp=fp, gp=gp: backend.compose(
                             mon.mor(f, g), mon.mor(fp, gp)),
                         lambda f=f, g=g, fp=fp, gp=gp: mon.mor(
                             backend.compose(f, fp), backend.compose(g, gp)))
    rep.add(c.done())
    return rep


def check_symmetry_laws(backend, mon: Monoidal, sym: Symmetry,
                        scope: Scope | None = None) -> CheckReport:
    """Naturality, involutivity, and strict hexagons for a braiding."""
    scope = scope or Scope()
    rep = CheckReport(scope=scope.describe(backend))
    c = Check("sym")
    objs = scope.objs(backend)

    for a, b in itertools.product(objs, objs):
        c.eq((a, b, "involutive"),
             lambda a=a, b=b: backend.compose(sym.braid(b, a), sym.braid(a, b)),
             lambda a=a, b=b: backend.identity(mon.obj(a, b)))

    for a, b, cc in itertools.product(objs, objs, objs):
        c.eq((a, b, cc, "hexagon-left"),
             lambda a=a, b=b, cc=cc: sym.braid(mon.obj(a, b), cc),
             lambda a=a, b=b, cc=cc: backend.compose(
                 mon.mor(sym.braid(a, cc), backend.identity(b)),
                 mon.mor(backend.identity(a), sym.braid(b, cc))))
        c.eq((a, b, cc, "hexagon-right"),
             lambda a=a, b=b, cc=cc: sym.braid(a, mon.obj(b, cc)),
             lambda a=a, b=b, cc=cc: backend.compose(
                 mon.mor(backend.identity(b), sym.braid(a, cc)),
                 mon.mor(sym.braid(a, b), backend.identity(cc))))

    for a1, a2 in itertools.product(objs, objs):
        for b1, b2 in itertools.product(objs, objs):
            for f in scope.hom_sample(backend, a1, a2):
                for g in scope.hom_sample(backend, b1, b2):
                    c.eq((a1, a2, b1, b2, "natural"),
                         lambda f=f, g=g: backend.compose(
                             sym.braid(f.cod, g.cod), mon.mor(f, g)),
                         lambda f=f, g=g: backend.compose(
                             mon.mor(g, f), sym.braid(f.dom, g.dom)))
    rep.add(c.done())
    return rep
