"""Concrete instance generators: Lukasiewicz chains, interior comonads,
compact matrix categories with the transpose negation, group Hopf algebras,
and deterministic mutation operators for negative testing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .backends import MatrixBackend, Mor, ThinBackend
from .structures import (Comonad, Functor, HopfAlgebra, Lindist, Monoidal,
                         Negation, NegLift, Symmetry)


@dataclass
class LiveInstance:
    """A realized instance: backend plus whatever structure it carries."""

    name: str
    backend: object
    bundle: Lindist
    neg: Optional[Negation] = None
    comonad: Optional[Comonad] = None
    lift: Optional[NegLift] = None
    hopf: Optional[HopfAlgebra] = None
    spec: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# thin instances

def thin_monoidal(bk: ThinBackend, tag: str, unit: int, op) -> Monoidal:
    """Strict monoidal structure on a thin backend from a monotone table."""
    def mor(f: Mor, g: Mor) -> Mor:
        return bk.arrow(op(f.dom, g.dom), op(f.cod, g.cod))
    return Monoidal(backend=bk, tag=tag, unit=unit, obj=op, mor=mor)


def thin_bundle(bk: ThinBackend, star_op, star_unit: int,
                par_op, par_unit: int) -> Lindist:
    star = thin_monoidal(bk, "star", star_unit, star_op)
    par = thin_monoidal(bk, "par", par_unit, par_op)

    def dl(a: int, b: int, cc: int) -> Mor:
        return bk.arrow(star_op(a, par_op(b, cc)), par_op(star_op(a, b), cc))

    def dr(b: int, cc: int, a: int) -> Mor:
        return bk.arrow(star_op(par_op(b, cc), a), par_op(b, star_op(cc, a)))

    sym = Symmetry(mon=par,
                   braid=lambda a, b: bk.arrow(par_op(a, b), par_op(b, a)))
    return Lindist(star=star, par=par, dl=dl, dr=dr, sym=sym)


def thin_negation(bk: ThinBackend, bundle: Lindist, s_table) -> Negation:
    """Both negations given by one order-reversing involution table."""
    st, pr = bundle.star, bundle.par

    def s_obj(a: int) -> int:
        return s_table[a]

    def s_mor(f: Mor) -> Mor:
        return bk.arrow(s_table[f.cod], s_table[f.dom])

    S = Functor(backend=bk, obj=s_obj, mor=s_mor, contravariant=True)
    return Negation(
        S=S, Sp=S,
        e=lambda a: bk.arrow(st.obj(s_table[a], a), pr.unit),
        n=lambda a: bk.arrow(st.unit, pr.obj(a, s_table[a])),
        ep=lambda a: bk.arrow(st.obj(a, s_table[a]), pr.unit),
        np=lambda a: bk.arrow(st.unit, pr.obj(s_table[a], a)))


def gen_lukasiewicz(n: int) -> LiveInstance:
    """The n-element Lukasiewicz chain as a thin instance with negation.

    Carrier 0 .. n-1 (element i standing for i/(n-1)); the star tensor is
    the truncated sum-minus-top, the par tensor the truncated sum, and the
    negation is order reversal.  Self-dual: both negations coincide.
    """
    if n < 1:
        raise ValueError("need a chain of length at least 1")
    carrier = [str(i) for i in range(n)]
    leq = [[1 if i <= j else 0 for j in range(n)] for i in range(n)]
    bk = ThinBackend(carrier, leq)
    top = n - 1

    def star_op(a: int, b: int) -> int:
        return max(0, a + b - top)

    def par_op(a: int, b: int) -> int:
        return min(top, a + b)

    bundle = thin_bundle(bk, star_op, top, par_op, 0)
    neg = thin_negation(bk, bundle, [top - i for i in range(n)])
    return LiveInstance(name=f"lukasiewicz-{n}", backend=bk, bundle=bundle,
                        neg=neg,
                        spec={"generator": "lukasiewicz", "params": {"n": n}})


def interior_comonad(bk: ThinBackend, bundle: Lindist, neg: Negation,
                     g) -> dict:
    """One interior operator as a comonad, with whatever extra structure
    its inequalities support.

    Returns a dict with the comonad, the lift (or None), and availability
    flags for the two monoidal structures and the lifting transformations.
    """
    st, pr = bundle.star, bundle.par
    n = bk.n
    s = [neg.S.obj(a) for a in range(n)]

    func = Functor(backend=bk, obj=lambda a: g[a],
                   mor=lambda f: bk.arrow(g[f.dom], g[f.cod]))
    cm_kwargs = {}
    has_phi = (bk.leq(st.unit, g[st.unit])
               and all(bk.leq(st.obj(g[a], g[b]), g[st.obj(a, b)])
                       for a, b in itertools.product(range(n), range(n))))
    has_psi = (bk.leq(pr.unit, g[pr.unit])
               and all(bk.leq(pr.obj(g[a], g[b]), g[pr.obj(a, b)])
                       for a, b in itertools.product(range(n), range(n))))
    if has_phi:
        cm_kwargs["phi"] = lambda a, b: bk.arrow(
            st.obj(g[a], g[b]), g[st.obj(a, b)])
        cm_kwargs["phi0"] = lambda: bk.arrow(st.unit, g[st.unit])
    if has_psi:
        cm_kwargs["psi"] = lambda a, b: bk.arrow(
            pr.obj(g[a], g[b]), g[pr.obj(a, b)])
        cm_kwargs["psi0"] = lambda: bk.arrow(pr.unit, g[pr.unit])
    cm = Comonad(functor=func,
                 delta=lambda a: bk.identity(g[a]),
                 eps=lambda a: bk.arrow(g[a], a),
                 **cm_kwargs)
    has_nu = all(bk.leq(s[a], g[s[g[a]]]) for a in range(n))
    lift = None
    if has_nu:
        lift = NegLift(nu=lambda a: bk.arrow(s[a], g[s[g[a]]]),
                       nup=lambda a: bk.arrow(s[a], g[s[g[a]]]))
    return {"g": tuple(g), "comonad": cm, "lift": lift,
            "has_phi": has_phi, "has_psi": has_psi, "has_nu": has_nu}


def enumerate_interior_comonads(inst: LiveInstance) -> list[dict]:
    """All interior operators (monotone, deflationary, idempotent maps)
    on a thin instance, each packaged by :func:`interior_comonad`."""
    bk = inst.backend
    n = bk.n
    out = []
    for g in itertools.product(range(n), repeat=n):
        if not all(bk.leq(g[a], a) for a in range(n)):
            continue
        if any(g[g[a]] != g[a] for a in range(n)):
            continue
        if not all(bk.leq(g[a], g[b]) for a, b in
                   itertools.product(range(n), range(n)) if bk.leq(a, b)):
            continue
        out.append(interior_comonad(bk, inst.bundle, inst.neg, g))
    return out


# ---------------------------------------------------------------------------
# matrix instances

def matrix_negation(bk: MatrixBackend, bundle: Lindist) -> Negation:
    """The transpose negation with the standard basis pairing.

    Both negations coincide; on objects the star is the identity (a space
    and its dual share a dimension), on matrices it is transposition.
    """
    def s_mor(f: Mor) -> Mor:
        from scipy import sparse
        if sparse.issparse(f.payload):
            out = f.payload.T.tocsr()
            out.data %= bk.p
            return Mor(f.cod, f.dom, out)
        return bk.mat(f.cod, f.dom, np.asarray(f.payload).T)

    S = Functor(backend=bk, obj=lambda a: a, mor=s_mor, contravariant=True)

    def e(a: int) -> Mor:
        out = np.zeros((1, a * a), dtype=np.int64)
        for i in range(a):
            out[0, i * a + i] = 1
        return bk.mat(a * a, 1, out)

    def n(a: int) -> Mor:
        out = np.zeros((a * a, 1), dtype=np.int64)
        for i in range(a):
            out[i * a + i, 0] = 1
        return bk.mat(1, a * a, out)

    return Negation(S=S, Sp=S, e=e, n=n, ep=e, np=n)


def gen_matrix_compact(p: int, dmax: int) -> LiveInstance:
    """Finite-dimensional spaces over F_p with one tensor playing both
    roles: the compact setting, with trivial distributions and the
    transpose negation."""
    bk = MatrixBackend(p, list(range(1, dmax + 1)))

    def obj(a: int, b: int) -> int:
        return a * b

    mon = Monoidal(backend=bk, tag="star", unit=1, obj=obj, mor=bk.kron)
    par = Monoidal(backend=bk, tag="par", unit=1, obj=obj, mor=bk.kron)

    def ident_dist(a: int, b: int, cc: int) -> Mor:
        return bk.identity(a * b * cc)

    sym = Symmetry(mon=par, braid=bk.swap)
    bundle = Lindist(star=mon, par=par, dl=ident_dist, dr=ident_dist, sym=sym)
    neg = matrix_negation(bk, bundle)
    return LiveInstance(name=f"matrix-compact-p{p}-d{dmax}", backend=bk,
                        bundle=bundle, neg=neg,
                        spec={"generator": "matrix_compact",
                              "params": {"p": p, "dmax": dmax}})


def gen_group_hopf(p: int, m: int, dmax: int = 2) -> LiveInstance:
    """The group algebra F_p[Z/m] as a Hopf algebra inside the compact
    matrix instance, with its comonad and antipode-built lifts attached."""
    from .comonads import hopf_comonad
    inst = gen_matrix_compact(p, dmax)
    bk = inst.backend

    mul = np.zeros((m, m * m), dtype=np.int64)
    for i, j in itertools.product(range(m), range(m)):
        mul[(i + j) % m, i * m + j] = 1
    unit = np.zeros((m, 1), dtype=np.int64)
    unit[0, 0] = 1
    d = np.zeros((m * m, m), dtype=np.int64)
    for i in range(m):
        d[i * m + i, i] = 1
    cu = np.ones((1, m), dtype=np.int64)
    s = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        s[(-i) % m, i] = 1

    H = HopfAlgebra(carrier=m,
                    mul=bk.mat(m * m, m, mul),
                    unit=bk.mat(1, m, unit),
                    d=bk.mat(m, m * m, d),
                    cu=bk.mat(m, 1, cu),
                    antipode=bk.mat(m, m, s))
    cm, lift = hopf_comonad(bk, inst.bundle.star, H)
    return LiveInstance(name=f"group-hopf-p{p}-m{m}", backend=bk,
                        bundle=inst.bundle, neg=inst.neg,
                        comonad=cm, lift=lift, hopf=H,
                        spec={"generator": "group_hopf",
                              "params": {"p": p, "m": m, "dmax": dmax}})


def group_like_count(p: int, m: int) -> int:
    """Brute-force count of group-like columns in F_p[Z/m]: vectors g with
    d(g) = g (x) g and cu(g) = 1."""
    inst = gen_group_hopf(p, m, dmax=1)
    H, bk = inst.hopf, inst.backend
    d = np.asarray(H.d.payload)
    cu = np.asarray(H.cu.payload)
    count = 0
    for vec in itertools.product(range(p), repeat=m):
        v = np.array(vec, dtype=np.int64)
        if int((cu @ v % p).item()) != 1:
            continue
        if np.array_equal(d @ v % p, np.kron(v, v) % p):
            count += 1
    return count


# ---------------------------------------------------------------------------
# mutations

def mutate_zero_nu(inst: LiveInstance) -> LiveInstance:
    """Replace both lifting transformations by the zero morphisms."""
    bk, cm = inst.backend, inst.comonad
    neg = inst.neg

    def nu(a: int) -> Mor:
        sa = neg.S.obj(a)
        return bk.zero(sa, cm.G(neg.S.obj(cm.G(a))))

    lift = NegLift(nu=nu, nup=nu)
    return LiveInstance(name=inst.name + "+zero-nu", backend=bk,
                        bundle=inst.bundle, neg=neg, comonad=cm, lift=lift,
                        hopf=inst.hopf,
                        spec=dict(inst.spec, mutations=["zero-nu"]))


def mutate_scale_nu(inst: LiveInstance, factor: int) -> LiveInstance:
    """Multiply both lifting transformations by a scalar."""
    bk = inst.backend
    base = inst.lift

    def scale(fam):
        def nu(a: int) -> Mor:
            f = fam(a)
            return bk.mat(f.dom, f.cod, np.asarray(f.payload) * factor)
        return nu

    lift = NegLift(nu=scale(base.nu), nup=scale(base.nup))
    return LiveInstance(name=inst.name + f"+scale-nu-{factor}",
                        backend=bk, bundle=inst.bundle, neg=inst.neg,
                        comonad=inst.comonad, lift=lift, hopf=inst.hopf,
                        spec=dict(inst.spec,
                                  mutations=[{"kind": "scale-nu",
                                              "factor": factor}]))


def mutate_identity_antipode(inst: LiveInstance) -> LiveInstance:
    """Rebuild the Hopf comonad with the identity in place of the antipode."""
    from .comonads import hopf_comonad
    bk, H = inst.backend, inst.hopf
    bad = HopfAlgebra(carrier=H.carrier, mul=H.mul, unit=H.unit,
                      d=H.d, cu=H.cu, antipode=bk.identity(H.carrier))
    cm, lift = hopf_comonad(bk, inst.bundle.star, bad, validate=False)
    return LiveInstance(name=inst.name + "+identity-antipode", backend=bk,
                        bundle=inst.bundle, neg=inst.neg, comonad=cm,
                        lift=lift, hopf=bad,
                        spec=dict(inst.spec, mutations=["identity-antipode"]))


def mutate_drop_swap_phi(inst: LiveInstance) -> LiveInstance:
    """Corrupt the lax structure map by dropping its factor swap."""
    cm = inst.comonad
    bk = inst.backend
    H = inst.hopf

    def bad_phi(u: int, v: int) -> Mor:
        # same matrix shape as the true map, but missing the middle swap
        return bk.kron(H.mul, bk.identity(u * v))

    new_cm = Comonad(functor=cm.functor, delta=cm.delta, eps=cm.eps,
                     phi=bad_phi, phi0=cm.phi0, psi=bad_phi, psi0=cm.psi0)
    return LiveInstance(name=inst.name + "+drop-swap-phi", backend=bk,
                        bundle=inst.bundle, neg=inst.neg, comonad=new_cm,
                        lift=inst.lift, hopf=H,
                        spec=dict(inst.spec, mutations=["drop-swap-phi"]))


def mutate_thin_star_entry(inst: LiveInstance, a: int, b: int,
                           value: int) -> LiveInstance:
    """Overwrite one entry of a thin star-tensor table."""
    bk = inst.backend
    st = inst.bundle.star
    base = {(x, y): st.obj(x, y)
            for x, y in itertools.product(range(bk.n), range(bk.n))}
    base[(a, b)] = value

    def star_op(x: int, y: int) -> int:
        return base[(x, y)]

    pr = inst.bundle.par
    bundle = thin_bundle(bk, star_op, st.unit, pr.obj, pr.unit)
    neg = thin_negation(bk, bundle,
                        [inst.neg.S.obj(i) for i in range(bk.n)])
    return LiveInstance(
        name=inst.name + f"+star-entry-{a}-{b}-{value}", backend=bk,
        bundle=bundle, neg=neg,
        spec=dict(inst.spec,
                  mutations=[{"kind": "star-table-entry",
                              "at": [a, b], "value": value}]))


def mutate_matrix_entry(inst: LiveInstance, family: str, a: int,
                        row: int, col: int, delta: int) -> LiveInstance:
    """Add a constant to one entry of a negation family matrix at index a."""
    bk = inst.backend
    neg = inst.neg
    fams = {"e": neg.e, "n": neg.n, "e'": neg.ep, "n'": neg.np}
    base = fams[family]

    def patched(x: int) -> Mor:
        f = base(x)
        if x != a:
            return f
        arr = np.asarray(f.payload).copy()
        arr[row, col] += delta
        return bk.mat(f.dom, f.cod, arr)

    kwargs = {"e": neg.e, "n": neg.n, "ep": neg.ep, "np": neg.np}
    kwargs[{"e": "e", "n": "n", "e'": "ep", "n'": "np"}[family]] = patched
    new_neg = Negation(S=neg.S, Sp=neg.Sp, **kwargs)
    return LiveInstance(
        name=inst.name + f"+{family}-entry", backend=bk,
        bundle=inst.bundle, neg=new_neg, comonad=inst.comonad,
        lift=inst.lift, hopf=inst.hopf,
        spec=dict(inst.spec,
                  mutations=[{"kind": "matrix-entry", "family": family,
                              "at": [a, row, col], "delta": delta}]))
