"""Comonads on a backend, monoidal comonad laws, the distribution
compatibility squares, and the lifting transformations for negations.

Also houses the two concrete comonad generators that come from algebra:
the bialgebra comonad B <> (-) on a symmetric bundle, and the Hopf comonad
H (x) (-) on a compact matrix backend, together with its canonical lifting
transformations built from the antipode.
"""

from __future__ import annotations

import itertools

import numpy as np

from .backends import MatrixBackend, Mor, Scope, seq
from .report import CheckReport
from .structures import (Bialgebra, Check, Coalgebra, Comonad, Functor,
                         HopfAlgebra, Lindist, Monoidal, Negation, NegLift,
                         PreconditionFailure, StructureMissing, Symmetry)


# ---------------------------------------------------------------------------
# checkers

def check_comonad(cm: Comonad, scope: Scope | None = None) -> CheckReport:
    """Counit/comultiplication laws plus naturality of both families."""
    scope = scope or Scope()
    bk = cm.backend
    rep = CheckReport(scope=scope.describe(bk))
    c = Check("comonad")
    objs = scope.objs(bk)
    one = bk.identity

    for a in objs:
        ga = cm.G(a)
        c.eq((a, "counit-left"),
             lambda: bk.compose(cm.eps(cm.G(a)), cm.delta(a)),
             lambda: one(ga))
        c.eq((a, "counit-right"),
             lambda: bk.compose(cm.Gm(cm.eps(a)), cm.delta(a)),
             lambda: one(ga))
        c.eq((a, "coassoc"),
             lambda: bk.compose(cm.delta(cm.G(a)), cm.delta(a)),
             lambda: bk.compose(cm.Gm(cm.delta(a)), cm.delta(a)))
    for a, b in itertools.product(objs, objs):
        for f in scope.hom_sample(bk, a, b):
            c.eq((a, b, "eps-natural"),
                 lambda: bk.compose(f, cm.eps(a)),
                 lambda: bk.compose(cm.eps(b), cm.Gm(f)))
            c.eq((a, b, "delta-natural"),
                 lambda: bk.compose(cm.Gm(cm.Gm(f)), cm.delta(a)),
                 lambda: bk.compose(cm.delta(b), cm.Gm(f)))
            c.eq((a, b, "functor-compose"),
                 lambda: cm.Gm(bk.compose(f, one(a))),
                 lambda: bk.compose(cm.Gm(f), cm.Gm(one(a))))
    rep.add(c.done())
    return rep


def check_monoidal_comonad(mon: Monoidal, cm: Comonad,
                           scope: Scope | None = None) -> CheckReport:
    """Monoidal-comonad laws for the tensor carried by ``mon``.

    Uses phi/phi0 when ``mon.tag == "star"`` and psi/psi0 otherwise; the
    report entry is moncom-⋆ or moncom-⋄ accordingly.
    """
    scope = scope or Scope()
    bk = cm.backend
    if mon.tag == "star":
        axiom, lax, lax0 = "moncom-⋆", cm.phi, cm.phi0
    else:
        axiom, lax, lax0 = "moncom-⋄", cm.psi, cm.psi0
    if lax is None or lax0 is None:
        raise StructureMissing(
            f"comonad carries no monoidal structure for the {mon.tag} tensor")

    rep = CheckReport(scope=scope.describe(bk))
    c = Check(axiom)
    objs = scope.objs(bk)
    one = bk.identity
    I = mon.unit

    for a, b, cc in itertools.product(objs, objs, objs):
        c.eq((a, b, cc, "assoc"),
             lambda: bk.compose(lax(mon.obj(a, b), cc),
                                mon.mor(lax(a, b), one(cm.G(cc)))),
             lambda: bk.compose(lax(a, mon.obj(b, cc)),
                                mon.mor(one(cm.G(a)), lax(b, cc))))
    for a in objs:
        c.eq((a, "unit-left"),
             lambda: bk.compose(lax(I, a), mon.mor(lax0(), one(cm.G(a)))),
             lambda: one(cm.G(a)))
        c.eq((a, "unit-right"),
             lambda: bk.compose(lax(a, I), mon.mor(one(cm.G(a)), lax0())),
             lambda: one(cm.G(a)))
    for a, b in itertools.product(objs, objs):
        c.eq((a, b, "counit"),
             lambda: bk.compose(cm.eps(mon.obj(a, b)), lax(a, b)),
             lambda: mon.mor(cm.eps(a), cm.eps(b)))
        c.eq((a, b, "comult"),
             lambda: bk.compose(cm.delta(mon.obj(a, b)), lax(a, b)),
             lambda: seq(bk,
                         mon.mor(cm.delta(a), cm.delta(b)),
                         lax(cm.G(a), cm.G(b)),
                         cm.Gm(lax(a, b))))
    c.eq(("unit", "counit"),
         lambda: bk.compose(cm.eps(I), lax0()),
         lambda: one(I))
    c.eq(("unit", "comult"),
         lambda: bk.compose(cm.delta(I), lax0()),
         lambda: bk.compose(cm.Gm(lax0()), lax0()))
    for a1, a2, b1, b2 in itertools.product(objs, objs, objs, objs):
        for f in scope.hom_sample(bk, a1, a2):
            for g in scope.hom_sample(bk, b1, b2):
                c.eq((a1, a2, b1, b2, "natural"),
                     lambda: bk.compose(lax(a2, b2),
                                        mon.mor(cm.Gm(f), cm.Gm(g))),
                     lambda: bk.compose(cm.Gm(mon.mor(f, g)), lax(a1, b1)))
    rep.add(c.done())
    return rep


def _need(cm: Comonad, *names: str) -> None:
    for nm in names:
        if getattr(cm, nm) is None:
            raise StructureMissing(f"comonad is missing {nm}")


def check_L1(bundle: Lindist, cm: Comonad,
             scope: Scope | None = None) -> CheckReport:
    """Compatibility of the comonad with the left distribution.

    G(dl) . phi . (1 * psi)  =  psi . (phi <> 1) . dl
    on GA * (GB <> GC) -> G((A * B) <> C), for every scoped triple.
    """
    return _check_dist_square(bundle, cm, "L1", scope)


def check_L2(bundle: Lindist, cm: Comonad,
             scope: Scope | None = None) -> CheckReport:
    """Compatibility with the right distribution (mirror of the L1 square)."""
    return _check_dist_square(bundle, cm, "L2", scope)


def _check_dist_square(bundle: Lindist, cm: Comonad, which: str,
                       scope: Scope | None) -> CheckReport:
    scope = scope or Scope()
    _need(cm, "phi", "psi")
    bk = bundle.backend
    st, pr = bundle.star, bundle.par
    rep = CheckReport(scope=scope.describe(bk))
    c = Check(which)
    objs = scope.objs(bk)
    one = bk.identity

    for a, b, cc in itertools.product(objs, objs, objs):
        if which == "L1":
            c.eq((a, b, cc),
                 lambda: seq(bk,
                             st.mor(one(cm.G(a)), cm.psi(b, cc)),
                             cm.phi(a, pr.obj(b, cc)),
                             cm.Gm(bundle.dl(a, b, cc))),
                 lambda: seq(bk,
                             bundle.dl(cm.G(a), cm.G(b), cm.G(cc)),
                             pr.mor(cm.phi(a, b), one(cm.G(cc))),
                             cm.psi(st.obj(a, b), cc)))
        else:
            c.eq((a, b, cc),
                 lambda: seq(bk,
                             st.mor(cm.psi(a, b), one(cm.G(cc))),
                             cm.phi(pr.obj(a, b), cc),
                             cm.Gm(bundle.dr(a, b, cc))),
                 lambda: seq(bk,
                             bundle.dr(cm.G(a), cm.G(b), cm.G(cc)),
                             pr.mor(one(cm.G(a)), cm.phi(b, cc)),
                             cm.psi(a, st.obj(b, cc))))
    rep.add(c.done())
    return rep


def check_nu(cm: Comonad, neg: Negation, lift: NegLift,
             scope: Scope | None = None) -> CheckReport:
    """The two lifting squares for nu and nu', plus naturality.

    nu-1: eps[SGA] . nu[A] = S(eps[A])        (counit square)
    nu-2: delta[SGA] . nu[A] = GGS(delta[A]) . G(nu[GA]) . nu[A]
    and the primed twins for nu' against S'.
    """
    scope = scope or Scope()
    bk = cm.backend
    rep = CheckReport(scope=scope.describe(bk))
    c1, c2 = Check("nu-1"), Check("nu-2")
    objs = scope.objs(bk)

    for tag, F, nu in (("nu", neg.S, lift.nu), ("nu'", neg.Sp, lift.nup)):
        for a in objs:
            c1.eq((a, tag),
                  lambda: bk.compose(cm.eps(F.obj(cm.G(a))), nu(a)),
                  lambda: F.mor(cm.eps(a)))
            c2.eq((a, tag),
                  lambda: bk.compose(cm.delta(F.obj(cm.G(a))), nu(a)),
                  lambda: seq(bk,
                              nu(a),
                              cm.Gm(nu(cm.G(a))),
                              cm.Gm(cm.Gm(F.mor(cm.delta(a))))))
        for a, b in itertools.product(objs, objs):
            for f in scope.hom_sample(bk, a, b):
                c1.eq((a, b, tag, "natural"),
                      lambda: bk.compose(nu(a), F.mor(f)),
                      lambda: bk.compose(cm.Gm(F.mor(cm.Gm(f))), nu(b)))
    rep.add(c1.done())
    rep.add(c2.done())
    return rep


# ---------------------------------------------------------------------------
# lifting and its inverse

def lift_negation(cm: Comonad, neg: Negation, lift: NegLift):
    """Lifted contravariant functors on coalgebras.

    Returns (tilde_S, tilde_Sp): each maps a coalgebra (A, gamma) to the
    coalgebra on S A with coaction G(S gamma) . nu[A].
    """
    bk = cm.backend

    def mk(F: Functor, nu):
        def apply(co: Coalgebra) -> Coalgebra:
            gamma2 = bk.compose(cm.Gm(F.mor(co.gamma)), nu(co.carrier))
            return Coalgebra(carrier=F.obj(co.carrier), gamma=gamma2)
        return apply

    return mk(neg.S, lift.nu), mk(neg.Sp, lift.nup)


def nu_from_lift(cm: Comonad, neg: Negation, tilde_S, tilde_Sp) -> NegLift:
    """Recover the lifting transformations from lifted functors.

    Evaluates each lifted functor on the cofree coalgebra (GA, delta[A])
    and precomposes with S(eps[A]).
    """
    bk = cm.backend

    def mk(F: Functor, tilde):
        def nu(a: int) -> Mor:
            cofree = Coalgebra(carrier=cm.G(a), gamma=cm.delta(a))
            return bk.compose(tilde(cofree).gamma, F.mor(cm.eps(a)))
        return nu

    return NegLift(nu=mk(neg.S, tilde_S), nup=mk(neg.Sp, tilde_Sp))


# ---------------------------------------------------------------------------
# generators

def identity_comonad(bundle: Lindist,
                     neg: Negation | None = None) -> tuple[Comonad, NegLift]:
    """The identity comonad with identity monoidal structure and lifts.

    The lifting transformations are identities at the negated objects, so
    a negation is needed whenever it acts nontrivially on objects.
    """
    bk = bundle.backend
    one = bk.identity
    func = Functor(backend=bk, obj=lambda a: a, mor=lambda f: f)
    cm = Comonad(functor=func,
                 delta=one, eps=one,
                 phi=lambda a, b: one(bundle.star.obj(a, b)),
                 phi0=lambda: one(bundle.star.unit),
                 psi=lambda a, b: one(bundle.par.obj(a, b)),
                 psi0=lambda: one(bundle.par.unit))
    if neg is None:
        lift = NegLift(nu=one, nup=one)
    else:
        lift = NegLift(nu=lambda a: one(neg.S.obj(a)),
                       nup=lambda a: one(neg.Sp.obj(a)))
    return cm, lift


def bialgebra_law_failures(bundle: Lindist, B: Bialgebra) -> list[str]:
    """Names of bialgebra laws B fails against the par tensor; [] if valid."""
    bk = bundle.backend
    pr = bundle.par
    if bundle.sym is None:
        raise StructureMissing("bialgebra laws need a par braiding")
    c = bundle.sym.braid
    one = bk.identity
    b = B.carrier
    ib = one(b)
    bad = []

    def chk(name, lhs, rhs):
        if lhs != rhs:
            bad.append(name)

    chk("assoc", bk.compose(B.mul, pr.mor(B.mul, ib)),
        bk.compose(B.mul, pr.mor(ib, B.mul)))
    chk("unit-left", bk.compose(B.mul, pr.mor(B.unit, ib)), ib)
    chk("unit-right", bk.compose(B.mul, pr.mor(ib, B.unit)), ib)
    chk("coassoc", bk.compose(pr.mor(B.d, ib), B.d),
        bk.compose(pr.mor(ib, B.d), B.d))
    chk("counit-left", bk.compose(pr.mor(B.cu, ib), B.d), ib)
    chk("counit-right", bk.compose(pr.mor(ib, B.cu), B.d), ib)
    chk("compat-mul-d",
        bk.compose(B.d, B.mul),
        seq(bk,
            pr.mor(B.d, B.d),
            pr.mor(pr.mor(ib, c(b, b)), ib),
            pr.mor(B.mul, B.mul)))
    chk("compat-mul-cu", bk.compose(B.cu, B.mul), pr.mor(B.cu, B.cu))
    chk("compat-unit-d", bk.compose(B.d, B.unit), pr.mor(B.unit, B.unit))
    chk("compat-unit-cu", bk.compose(B.cu, B.unit), one(pr.unit))
    return bad


def hopf_law_failures(bk: MatrixBackend, mon: Monoidal, sym,
                      H: HopfAlgebra) -> list[str]:
    """Names of Hopf algebra laws H fails against the star tensor."""
    bundle = Lindist(star=mon, par=mon,
                     dl=lambda a, b, cc: bk.identity(mon.obj(mon.obj(a, b), cc)),
                     dr=lambda a, b, cc: bk.identity(mon.obj(mon.obj(a, b), cc)),
                     sym=sym)
    B = Bialgebra(carrier=H.carrier, mul=H.mul, unit=H.unit, d=H.d, cu=H.cu)
    bad = bialgebra_law_failures(bundle, B)
    one = bk.identity(H.carrier)
    eta_cu = bk.compose(H.unit, H.cu)
    if bk.compose(H.mul, bk.compose(mon.mor(H.antipode, one), H.d)) != eta_cu:
        bad.append("antipode-left")
    if bk.compose(H.mul, bk.compose(mon.mor(one, H.antipode), H.d)) != eta_cu:
        bad.append("antipode-right")
    return bad


def comonad_from_bialgebra(bundle: Lindist, B: Bialgebra,
                           validate: bool = True) -> Comonad:
    """The comonad B <> (-) with its monoidal structure for both tensors.

    Needs a braiding for the par tensor.  The star-tensor structure phi is
    the six-step composite threading both distributions and two braidings.
    """
    bk = bundle.backend
    st, pr = bundle.star, bundle.par
    if bundle.sym is None:
        raise StructureMissing("the bialgebra comonad needs a par braiding")
    c = bundle.sym.braid
    one = bk.identity
    b = B.carrier

    if validate:
        bad = bialgebra_law_failures(bundle, B)
        if bad:
            raise PreconditionFailure(f"bialgebra laws fail: {bad}")

    func = Functor(backend=bk,
                   obj=lambda a: pr.obj(b, a),
                   mor=lambda f: pr.mor(one(b), f))

    def delta(a: int) -> Mor:
        return pr.mor(B.d, one(a))

    def eps(a: int) -> Mor:
        return pr.mor(B.cu, one(a))

    def psi(u: int, v: int) -> Mor:
        return seq(bk,
                   pr.mor(pr.mor(one(b), c(u, b)), one(v)),
                   pr.mor(B.mul, one(pr.obj(u, v))))

    def psi0() -> Mor:
        return B.unit

    def phi(u: int, v: int) -> Mor:
        # (B<>U) * (B<>V) -> B <> (U * (B<>V)) -> B <> (U * (V<>B))
        #   -> B <> ((U*V) <> B) -> B <> B <> (U*V) -> B <> (U*V)
        uv = st.obj(u, v)
        return seq(bk,
                   bundle.dr(b, u, pr.obj(b, v)),
                   pr.mor(one(b), st.mor(one(u), c(b, v))),
                   pr.mor(one(b), bundle.dl(u, v, b)),
                   pr.mor(one(b), c(uv, b)),
                   pr.mor(B.mul, one(uv)))

    def phi0() -> Mor:
        # I = J <> I -> B <> I
        return pr.mor(B.unit, one(st.unit))

    return Comonad(functor=func, delta=delta, eps=eps,
                   phi=phi, phi0=phi0, psi=psi, psi0=psi0)


def hopf_comonad(bk: MatrixBackend, mon: Monoidal, H: HopfAlgebra,
                 validate: bool = True) -> tuple[Comonad, NegLift]:
    """The comonad H (x) (-) on a compact matrix backend, with lifts.

    The lifting transformation nu[A]: A -> H (x) H^* (x) A is built from the
    antipode; nu' uses the inverse antipode (the antipode matrix must be
    invertible, which the Hopf laws force in this setting).
    """
    one = bk.identity
    m = H.carrier

    if validate:
        sym = Symmetry(mon=mon, braid=lambda a, b2: bk.swap(a, b2))
        bad = hopf_law_failures(bk, mon, sym, H)
        if bad:
            raise PreconditionFailure(f"Hopf laws fail: {bad}")

    func = Functor(backend=bk,
                   obj=lambda a: m * a,
                   mor=lambda f: bk.kron(one(m), f))

    def delta(a: int) -> Mor:
        return bk.kron(H.d, one(a))

    def eps(a: int) -> Mor:
        return bk.kron(H.cu, one(a))

    def phi(u: int, v: int) -> Mor:
        return seq(bk,
                   bk.kron(bk.kron(one(m), bk.swap(u, m)), one(v)),
                   bk.kron(H.mul, one(u * v)))

    def phi0() -> Mor:
        return H.unit

    def nu_matrix(a: int, s: np.ndarray) -> Mor:
        # alpha |-> sum_k s(e_k) (x) e_k^* (x) alpha in H (x) H^* (x) A
        out = np.zeros((m * m * a, a), dtype=np.int64)
        for k in range(m):
            for l in range(m):
                for i in range(a):
                    out[(l * m + k) * a + i, i] = s[l, k] % bk.p
        return bk.mat(a, m * m * a, out)

    s = np.asarray(H.antipode.payload, dtype=np.int64)
    s_inv = np.asarray(bk.invert(H.antipode).payload, dtype=np.int64)

    lift = NegLift(nu=lambda a: nu_matrix(a, s),
                   nup=lambda a: nu_matrix(a, s_inv))
    cm = Comonad(functor=func, delta=delta, eps=eps,
                 phi=phi, phi0=phi0, psi=phi, psi0=phi0)
    return cm, lift
