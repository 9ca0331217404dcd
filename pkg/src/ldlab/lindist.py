"""Linearly distributive structure, negations, and the star-autonomous
translations in both directions.

The translation functions return the constructed structure together with a
:class:`TranslationCert` recording the canonical isomorphisms used, so that
round-trip tests can state exact equalities.  Composites written with
explicit unit isomorphisms are implemented with those isomorphisms collapsed
to identities (strict monoidal structures only).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .backends import (MatrixBackend, MissingWitness, Mor, Scope, ScopeTooLarge,
                       ThinBackend, invert, seq)
from .report import CheckReport
from .structures import (Check, Lindist, Monoidal, Negation,
                         PreconditionFailure, StarAutonomous)


# ---------------------------------------------------------------------------
# checkers

def check_lindist(bundle: Lindist, scope: Scope | None = None) -> CheckReport:
    """Naturality of both distributions plus the documented coherence subset.

    The coherence subset (the diagrams the constructions in this package
    actually traverse): unit collapses of dl/dr against both units, the
    star- and par-associativity compatibility squares for each distribution,
    and the dl/dr interchange square.
    """
    scope = scope or Scope()
    bk = bundle.backend
    st, pr = bundle.star, bundle.par
    rep = CheckReport(scope=scope.describe(bk))
    objs = scope.objs(bk)
    one = bk.identity

    nat = Check("lindist-nat")
    for a, b, cc in itertools.product(objs, objs, objs):
        for var, tgt in itertools.product(range(3), objs):
            srcs = (a, b, cc)
            for f in scope.hom_sample(bk, srcs[var], tgt):
                a2, b2, c2 = (f.cod if var == 0 else a,
                              f.cod if var == 1 else b,
                              f.cod if var == 2 else cc)
                fa = f if var == 0 else one(a)
                fb = f if var == 1 else one(b)
                fc = f if var == 2 else one(cc)
                nat.eq((a, b, cc, "dl", var, tgt),
                       lambda: bk.compose(
                           bundle.dl(a2, b2, c2),
                           st.mor(fa, pr.mor(fb, fc))),
                       lambda: bk.compose(
                           pr.mor(st.mor(fa, fb), fc),
                           bundle.dl(a, b, cc)))
                nat.eq((a, b, cc, "dr", var, tgt),
                       lambda: bk.compose(
                           bundle.dr(a2, b2, c2),
                           st.mor(pr.mor(fa, fb), fc)),
                       lambda: bk.compose(
                           pr.mor(fa, st.mor(fb, fc)),
                           bundle.dr(a, b, cc)))
    rep.add(nat.done())

    coh = Check("coh-subset")
    I, J = st.unit, pr.unit
    for b, cc in itertools.product(objs, objs):
        coh.eq((b, cc, "dl-unit-I"),
               lambda: bundle.dl(I, b, cc),
               lambda: one(pr.obj(b, cc)))
        coh.eq((b, cc, "dr-unit-I"),
               lambda: bundle.dr(b, cc, I),
               lambda: one(pr.obj(b, cc)))
    for a, b in itertools.product(objs, objs):
        coh.eq((a, b, "dl-unit-J"),
               lambda: bundle.dl(a, b, J),
               lambda: one(st.obj(a, b)))
        coh.eq((a, b, "dr-unit-J"),
               lambda: bundle.dr(J, a, b),
               lambda: one(st.obj(a, b)))
    for a, b, cc, d in itertools.product(objs, objs, objs, objs):
        # star-associativity compatibility
        coh.eq((a, b, cc, d, "dl-star-assoc"),
               lambda: bundle.dl(st.obj(a, b), cc, d),
               lambda: bk.compose(
                   bundle.dl(a, st.obj(b, cc), d),
                   st.mor(one(a), bundle.dl(b, cc, d))))
        coh.eq((a, b, cc, d, "dr-star-assoc"),
               lambda: bundle.dr(a, b, st.obj(cc, d)),
               lambda: bk.compose(
                   bundle.dr(a, st.obj(b, cc), d),
                   st.mor(bundle.dr(a, b, cc), one(d))))
        # par-associativity compatibility
        coh.eq((a, b, cc, d, "dl-par-assoc"),
               lambda: bundle.dl(a, b, pr.obj(cc, d)),
               lambda: bk.compose(
                   pr.mor(bundle.dl(a, b, cc), one(d)),
                   bundle.dl(a, pr.obj(b, cc), d)))
        coh.eq((a, b, cc, d, "dr-par-assoc"),
               lambda: bundle.dr(pr.obj(a, b), cc, d),
               lambda: bk.compose(
                   pr.mor(one(a), bundle.dr(b, cc, d)),
                   bundle.dr(a, pr.obj(b, cc), d)))
        # interchange: (A <> B) * (C <> D) -> A <> (B * C) <> D
        coh.eq((a, b, cc, d, "interchange"),
               lambda: bk.compose(
                   pr.mor(one(a), bundle.dl(b, cc, d)),
                   bundle.dr(a, b, pr.obj(cc, d))),
               lambda: bk.compose(
                   pr.mor(bundle.dr(a, b, cc), one(d)),
                   bundle.dl(pr.obj(a, b), cc, d)))
    rep.add(coh.done())
    return rep


def check_negation_functoriality(bundle: Lindist, neg: Negation,
                                 scope: Scope | None = None) -> CheckReport:
    """Contravariant functoriality of S, S' and dinaturality of e, n, e', n'.

    Reported under "lindist-nat" with family-tagged counterexample keys.
    """
    scope = scope or Scope()
    bk = bundle.backend
    st, pr = bundle.star, bundle.par
    rep = CheckReport(scope=scope.describe(bk))
    c = Check("lindist-nat")
    objs = scope.objs(bk)
    one = bk.identity

    for name, F in (("S", neg.S), ("S'", neg.Sp)):
        for a in objs:
            c.eq((a, f"{name}-id"),
                 lambda: F.mor(one(a)),
                 lambda: one(F.obj(a)))
        for a, b, cc in itertools.product(objs, objs, objs):
            for f in scope.hom_sample(bk, a, b):
                for g in scope.hom_sample(bk, b, cc):
                    c.eq((a, b, cc, f"{name}-compose"),
                         lambda: F.mor(bk.compose(g, f)),
                         lambda: bk.compose(F.mor(f), F.mor(g)))

    for a, b in itertools.product(objs, objs):
        for f in scope.hom_sample(bk, a, b):
            c.eq((a, b, "e-dinatural"),
                 lambda: bk.compose(neg.e(a), st.mor(neg.S.mor(f), one(a))),
                 lambda: bk.compose(neg.e(b), st.mor(one(neg.S.obj(b)), f)))
            c.eq((a, b, "n-dinatural"),
                 lambda: bk.compose(pr.mor(f, one(neg.S.obj(a))), neg.n(a)),
                 lambda: bk.compose(pr.mor(one(b), neg.S.mor(f)), neg.n(b)))
            c.eq((a, b, "e'-dinatural"),
                 lambda: bk.compose(neg.ep(a), st.mor(one(a), neg.Sp.mor(f))),
                 lambda: bk.compose(neg.ep(b), st.mor(f, one(neg.Sp.obj(b)))))
            c.eq((a, b, "n'-dinatural"),
                 lambda: bk.compose(pr.mor(one(neg.Sp.obj(a)), f), neg.np(a)),
                 lambda: bk.compose(pr.mor(neg.Sp.mor(f), one(b)), neg.np(b)))
    rep.add(c.done())
    return rep


def check_triangle_identities(bundle: Lindist, neg: Negation,
                              scope: Scope | None = None) -> CheckReport:
    """All four triangle identities, one axiom entry each, per object.

    tri-1: (1 <> e) . dr . (n * 1)   = 1 on A
    tri-2: (e <> 1) . dl . (1 * n)   = 1 on SA
    tri-3: (e' <> 1) . dl . (1 * n') = 1 on A
    tri-4: (1 <> e') . dr . (n' * 1) = 1 on S'A
    """
    scope = scope or Scope()
    bk = bundle.backend
    st, pr = bundle.star, bundle.par
    rep = CheckReport(scope=scope.describe(bk))
    objs = scope.objs(bk)
    one = bk.identity
    checks = [Check(f"tri-{i}") for i in (1, 2, 3, 4)]

    for a in objs:
        sa, spa = neg.S.obj(a), neg.Sp.obj(a)
        checks[0].eq((a,),
                     lambda: seq(bk,
                                 st.mor(neg.n(a), one(a)),
                                 bundle.dr(a, sa, a),
                                 pr.mor(one(a), neg.e(a))),
                     lambda: one(a))
        checks[1].eq((a,),
                     lambda: seq(bk,
                                 st.mor(one(sa), neg.n(a)),
                                 bundle.dl(sa, a, sa),
                                 pr.mor(neg.e(a), one(sa))),
                     lambda: one(sa))
        checks[2].eq((a,),
                     lambda: seq(bk,
                                 st.mor(one(a), neg.np(a)),
                                 bundle.dl(a, spa, a),
                                 pr.mor(neg.ep(a), one(a))),
                     lambda: one(a))
        checks[3].eq((a,),
                     lambda: seq(bk,
                                 st.mor(neg.np(a), one(spa)),
                                 bundle.dr(spa, a, spa),
                                 pr.mor(one(spa), neg.ep(a))),
                     lambda: one(spa))
    for c in checks:
        rep.add(c.done())
    return rep


def check_star_hom_bijection(sa: StarAutonomous,
                             scope: Scope | None = None) -> CheckReport:
    """The currying bijection hom(A (x) B, SC) ~ hom(A, S(B (x) C)).

    The map sends k: A -> S(B (x) C) to e[B,C] . (k (x) 1_B); it must be a
    bijection between the two hom-sets for every scoped triple.  Naturality
    in A is checked on sampled morphisms.  Triples whose hom-sets exceed the
    enumeration bound are skipped and counted in the report detail.
    """
    scope = scope or Scope()
    bk = sa.backend
    mon = sa.mon
    rep = CheckReport(scope=scope.describe(bk))
    c = Check("star-iso")
    objs = scope.objs(bk)
    skipped = 0

    def curry_fwd(k: Mor, b: int, cc: int) -> Mor:
        return bk.compose(sa.eAB(b, cc), mon.mor(k, bk.identity(b)))

    for a, b, cc in itertools.product(objs, objs, objs):
        ab = mon.obj(a, b)
        sc = sa.S.obj(cc)
        sbc = sa.S.obj(mon.obj(b, cc))
        try:
            h1 = bk.hom(ab, sc, scope.bound())
            h2 = bk.hom(a, sbc, scope.bound())
        except ScopeTooLarge:
            skipped += 1
            continue
        images = {}
        ok = c.holds((a, b, cc, "size"), len(h1) == len(h2),
                     f"hom sizes differ: {len(h1)} vs {len(h2)}")
        for k in h2:
            try:
                img = curry_fwd(k, b, cc)
            except MissingWitness as m:
                c.holds((a, b, cc, "total"), False,
                        f"currying undefined: {m.description}")
                ok = False
                continue
            if img.key() in images:
                c.holds((a, b, cc, "injective"), False,
                        "two curried forms collide")
                ok = False
            images[img.key()] = k
        if ok:
            h1keys = {m.key() for m in h1}
            c.holds((a, b, cc, "surjective"),
                    set(images) == h1keys,
                    "currying does not cover hom(A(x)B, SC)")
        # naturality in A
        for a2 in objs:
            for f in scope.hom_sample(bk, a2, a):
                for k in (h2 if len(h2) <= 4 else h2[:4]):
                    c.eq((a, b, cc, a2, "natural-A"),
                         lambda: curry_fwd(bk.compose(k, f), b, cc),
                         lambda: bk.compose(curry_fwd(k, b, cc),
                                            mon.mor(f, bk.identity(b))))
    res = c.done()
    if skipped:
        res.detail["skipped_tuples"] = skipped
    rep.add(res)
    return rep


def check_star_structure(sa: StarAutonomous,
                         scope: Scope | None = None) -> CheckReport:
    """Equivalence-witness invariants: w1/w2 invertible and natural."""
    scope = scope or Scope()
    bk = sa.backend
    rep = CheckReport(scope=scope.describe(bk))
    c = Check("star-iso")
    objs = scope.objs(bk)

    for a in objs:
        c.exists((a, "w1-invertible"), lambda: invert(bk, sa.w1(a)))
        c.exists((a, "w2-invertible"), lambda: invert(bk, sa.w2(a)))
    for a, b in itertools.product(objs, objs):
        for f in scope.hom_sample(bk, a, b):
            c.eq((a, b, "w1-natural"),
                 lambda: bk.compose(sa.w1(b), f),
                 lambda: bk.compose(sa.Sp.mor(sa.S.mor(f)), sa.w1(a)))
            c.eq((a, b, "w2-natural"),
                 lambda: bk.compose(f, sa.w2(a)),
                 lambda: bk.compose(sa.w2(b), sa.S.mor(sa.Sp.mor(f))))
    rep.add(c.done())
    return rep


# ---------------------------------------------------------------------------
# translations

@dataclass
class TranslationCert:
    """Canonical isomorphisms and conventions a translation relied on."""

    direction: str                      # "to-star" or "to-lindist"
    notes: tuple = ()
    w1: Callable[[int], Mor] | None = None
    w2: Callable[[int], Mor] | None = None
    detail: dict = field(default_factory=dict)


STRICT_UNIT_NOTE = ("unit isomorphisms I*A ~ A and A<>J ~ A are identities "
                    "(strict monoidal structures)")


def star_from_lindist(bundle: Lindist, neg: Negation,
                      scope: Scope | None = None,
                      validate: bool = True) -> tuple[StarAutonomous, TranslationCert]:
    """Star-autonomous structure from a bundle with negations.

    The tensor is the star tensor; the equivalence witnesses and the
    two-argument evaluation morphisms are built as explicit composites
    through the distributions and the (co)evaluation families.
    """
    scope = scope or Scope()
    bk = bundle.backend
    st, pr = bundle.star, bundle.par
    one = bk.identity

    if validate:
        pre = check_lindist(bundle, scope)
        pre.extend(check_triangle_identities(bundle, neg, scope))
        if not pre.overall:
            raise PreconditionFailure(
                "bundle fails lindist/triangle checks", pre)

    S, Sp = neg.S, neg.Sp

    def w1(a: int) -> Mor:
        # A = I*A -> (S'SA <> SA)*A -> S'SA <> (SA*A) -> S'SA <> J = S'SA
        sa_ = S.obj(a)
        return seq(bk,
                   st.mor(neg.np(sa_), one(a)),
                   bundle.dr(Sp.obj(sa_), sa_, a),
                   pr.mor(one(Sp.obj(sa_)), neg.e(a)))

    def w2(a: int) -> Mor:
        # S'SA = I*S'SA -> (A <> SA)*S'SA -> A <> (SA*S'SA) -> A <> J = A
        sa_ = S.obj(a)
        return seq(bk,
                   st.mor(neg.n(a), one(Sp.obj(sa_))),
                   bundle.dr(a, sa_, Sp.obj(sa_)),
                   pr.mor(one(a), neg.ep(sa_)))

    def eAB(a: int, b: int) -> Mor:
        # S(A*B)*A -> S(A*B)*A*(B <> SB) -> (S(A*B)*A*B) <> SB -> J <> SB
        ab = st.obj(a, b)
        x = st.obj(S.obj(ab), a)
        return seq(bk,
                   st.mor(one(x), neg.n(b)),
                   bundle.dl(x, b, S.obj(b)),
                   pr.mor(neg.e(ab), one(S.obj(b))))

    def epBA(b: int, a: int) -> Mor:
        # B*S'(A*B) -> (S'A <> A)*B*S'(A*B) -> S'A <> (A*B*S'(A*B)) -> S'A
        ab = st.obj(a, b)
        y = st.obj(b, Sp.obj(ab))
        return seq(bk,
                   st.mor(neg.np(a), one(y)),
                   bundle.dr(Sp.obj(a), a, y),
                   pr.mor(one(Sp.obj(a)), neg.ep(ab)))

    sa = StarAutonomous(mon=st, S=S, Sp=Sp, w1=w1, w2=w2, eAB=eAB, epBA=epBA)
    cert = TranslationCert(direction="to-star",
                           notes=(STRICT_UNIT_NOTE,),
                           w1=w1, w2=w2)
    if validate:
        post = check_star_structure(sa, scope)
        if not post.overall:
            raise PreconditionFailure(
                "constructed star structure fails its invariants", post)
    return sa, cert


def lindist_from_star(sa: StarAutonomous,
                      scope: Scope | None = None,
                      validate: bool = True) -> tuple[Lindist, Negation, TranslationCert]:
    """Bundle with negations from a star-autonomous structure.

    The par tensor is A <> B := S'(SB (x) SA) with unit SI; the distributions
    and the one-argument (co)evaluation families are the explicit composites
    through eAB/epBA.  The second presentation of the par tensor (through S
    instead of S') is needed by dr; this implementation requires the two star
    operations to agree on the nose over the scope, which holds for every
    backend family this package generates, and fails fast otherwise.
    """
    scope = scope or Scope()
    bk = sa.backend
    mon = sa.mon
    one = bk.identity
    S, Sp = sa.S, sa.Sp

    if validate:
        pre = check_star_structure(sa, scope)
        if not pre.overall:
            raise PreconditionFailure("star structure fails invariants", pre)

    probe = scope.objs(bk)
    for a in probe:
        if S.obj(a) != Sp.obj(a):
            raise PreconditionFailure(
                f"left and right star operations differ at object {a}; the "
                "single-presentation par tensor is not available")
    for a, b in itertools.product(probe, probe):
        for f in scope.hom_sample(bk, a, b):
            if S.mor(f) != Sp.mor(f):
                raise PreconditionFailure(
                    "left and right star operations differ on a morphism; "
                    "the single-presentation par tensor is not available")

    def par_obj(a: int, b: int) -> int:
        return Sp.obj(mon.obj(S.obj(b), S.obj(a)))

    def par_mor(f: Mor, g: Mor) -> Mor:
        return Sp.mor(mon.mor(S.mor(g), S.mor(f)))

    J = S.obj(mon.unit)
    par = Monoidal(backend=bk, tag="par", unit=J, obj=par_obj, mor=par_mor)

    def dl(a: int, b: int, cc: int) -> Mor:
        # A (x) S'(SC (x) SB) -> A (x) S'(SC (x) S(A(x)B) (x) A) -> S'(SC (x) S(A(x)B))
        ab = mon.obj(a, b)
        inner = mon.mor(one(S.obj(cc)), sa.eAB(a, b))
        return seq(bk,
                   mon.mor(one(a), Sp.mor(inner)),
                   sa.epBA(a, mon.obj(S.obj(cc), S.obj(ab))))

    def dr(b: int, cc: int, a: int) -> Mor:
        # S(S'C (x) S'B) (x) A -> S(A (x) S'(C(x)A) (x) S'B) (x) A -> S(S'(C(x)A) (x) S'B)
        ca = mon.obj(cc, a)
        inner = mon.mor(sa.epBA(a, cc), one(Sp.obj(b)))
        return seq(bk,
                   mon.mor(S.mor(inner), one(a)),
                   sa.eAB(a, mon.obj(Sp.obj(ca), Sp.obj(b))))

    def e(a: int) -> Mor:
        return sa.eAB(a, mon.unit)

    def ep(a: int) -> Mor:
        return sa.epBA(a, mon.unit)

    def n(a: int) -> Mor:
        return bk.compose(S.mor(sa.epBA(a, mon.unit)),
                          invert(bk, sa.w2(mon.unit)))

    def np(a: int) -> Mor:
        return bk.compose(Sp.mor(sa.eAB(a, mon.unit)), sa.w1(mon.unit))

    bundle = Lindist(star=mon, par=par, dl=dl, dr=dr)
    neg = Negation(S=S, Sp=Sp, e=e, n=n, ep=ep, np=np)
    cert = TranslationCert(direction="to-lindist",
                           notes=(STRICT_UNIT_NOTE,
                                  "par tensor in the single (right-star) "
                                  "presentation; star operations agree on "
                                  "the nose over the scope"),
                           w1=sa.w1, w2=sa.w2)
    if validate:
        post = check_lindist(bundle, scope)
        post.extend(check_triangle_identities(bundle, neg, scope))
        if not post.overall:
            raise PreconditionFailure(
                "derived bundle fails lindist/triangle checks", post)
    return bundle, neg, cert


def par_comparison_iso(bk, native_par: Monoidal, derived_par: Monoidal,
                       a: int, b: int) -> Mor:
    """Canonical iso from a native par tensor to its star-derived presentation.

    Thin backends: the unique parallel witness.  Matrix backends: the
    factor-swap permutation (the derived tensor reverses Kronecker factors).
    """
    src, tgt = native_par.obj(a, b), derived_par.obj(a, b)
    if isinstance(bk, ThinBackend):
        return bk.arrow(src, tgt)
    if isinstance(bk, MatrixBackend):
        if src != a * b or tgt != b * a:
            raise MissingWitness(
                f"unexpected par dimensions {src} vs {tgt} at ({a},{b})")
        return bk.swap(a, b)
    raise MissingWitness("no canonical comparison for this backend")
