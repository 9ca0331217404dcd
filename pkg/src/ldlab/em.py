"""Eilenberg-Moore machinery: coalgebra enumeration, the coalgebra
category as an explicit finite-table backend, and the four compatibility
diagrams tying a negation and its lifting transformations to the comonad.
"""

from __future__ import annotations

import itertools

import numpy as np

from .backends import (MatrixBackend, Mor, Scope, ScopeTooLarge, TableBackend,
                       seq)
from .report import CheckReport
from .structures import (Check, Coalgebra, Comonad, Lindist, Monoidal,
                         Negation, NegLift, PreconditionFailure)


# ---------------------------------------------------------------------------
# coalgebras

def is_coalgebra(cm: Comonad, co: Coalgebra) -> bool:
    """Counit and coassociativity laws for a candidate coaction."""
    bk = cm.backend
    a = co.carrier
    if co.gamma.dom != a or co.gamma.cod != cm.G(a):
        return False
    if bk.compose(cm.eps(a), co.gamma) != bk.identity(a):
        return False
    return (bk.compose(cm.delta(a), co.gamma)
            == bk.compose(cm.Gm(co.gamma), co.gamma))


def is_coalgebra_morphism(cm: Comonad, src: Coalgebra, dst: Coalgebra,
                          f: Mor) -> bool:
    bk = cm.backend
    if f.dom != src.carrier or f.cod != dst.carrier:
        return False
    return bk.compose(dst.gamma, f) == bk.compose(cm.Gm(f), src.gamma)


def _modp_rref(mat: np.ndarray, p: int):
    """Row-reduce mod p; returns (rref, pivot column list)."""
    m = mat.copy() % p
    rows, cols = m.shape
    piv = []
    r = 0
    for cc in range(cols):
        sel = None
        for rr in range(r, rows):
            if m[rr, cc] % p:
                sel = rr
                break
        if sel is None:
            continue
        m[[r, sel]] = m[[sel, r]]
        inv = pow(int(m[r, cc]), p - 2, p)
        m[r] = (m[r] * inv) % p
        for rr in range(rows):
            if rr != r and m[rr, cc] % p:
                m[rr] = (m[rr] - m[rr, cc] * m[r]) % p
        piv.append(cc)
        r += 1
        if r == rows:
            break
    return m, piv


def _affine_solutions(A: np.ndarray, b: np.ndarray, p: int):
    """All x with A x = b mod p, as (particular, nullspace basis) or None."""
    rows, cols = A.shape
    aug = np.concatenate([A % p, (b % p).reshape(-1, 1)], axis=1)
    red, piv = _modp_rref(aug, p)
    if cols in piv:
        return None
    part = np.zeros(cols, dtype=np.int64)
    for r, cc in enumerate(piv):
        part[cc] = red[r, cols]
    redA, pivA = _modp_rref(A, p)
    free = [cc for cc in range(cols) if cc not in pivA]
    basis = []
    for fc in free:
        v = np.zeros(cols, dtype=np.int64)
        v[fc] = 1
        for r, cc in enumerate(pivA):
            v[cc] = (-redA[r, fc]) % p
        basis.append(v % p)
    return part, basis


def enumerate_coalgebras(cm: Comonad, carrier: int,
                         scope: Scope | None = None) -> list[Coalgebra]:
    """Every coaction on the given carrier, in deterministic order.

    Matrix backends solve the counit constraint as a linear system first
    and only enumerate its solution space; other backends filter the raw
    hom-set.  Raises ScopeTooLarge when the search space exceeds the bound.
    """
    scope = scope or Scope()
    bk = cm.backend
    a = carrier
    ga = cm.G(a)

    if isinstance(bk, MatrixBackend):
        p = bk.p
        eps = np.asarray(cm.eps(a).payload, dtype=np.int64)
        cols = []
        for j in range(a):
            e_j = np.zeros(a, dtype=np.int64)
            e_j[j] = 1
            sol = _affine_solutions(eps, e_j, p)
            if sol is None:
                return []
            cols.append(sol)
        total = 1
        for part, basis in cols:
            total *= p ** len(basis)
        if total > scope.bound():
            raise ScopeTooLarge(a, ga, total, scope.bound())
        out = []
        spaces = []
        for part, basis in cols:
            vecs = []
            for coeffs in itertools.product(range(p), repeat=len(basis)):
                v = part.copy()
                for cf, bvec in zip(coeffs, basis):
                    v = (v + cf * bvec) % p
                vecs.append(v)
            vecs.sort(key=lambda v: tuple(v))
            spaces.append(vecs)
        for combo in itertools.product(*spaces):
            g = np.stack(combo, axis=1) % p
            cand = Coalgebra(carrier=a, gamma=bk.mat(a, ga, g))
            if is_coalgebra(cm, cand):
                out.append(cand)
        return out

    out = []
    for g in bk.hom(a, ga, scope.bound()):
        cand = Coalgebra(carrier=a, gamma=g)
        if is_coalgebra(cm, cand):
            out.append(cand)
    return out


def coalgebra_morphisms(cm: Comonad, src: Coalgebra, dst: Coalgebra,
                        scope: Scope | None = None) -> list[Mor]:
    scope = scope or Scope()
    bk = cm.backend
    return [f for f in bk.hom(src.carrier, dst.carrier, scope.bound())
            if is_coalgebra_morphism(cm, src, dst, f)]


def em_tensor(cm: Comonad, mon: Monoidal, c1: Coalgebra,
              c2: Coalgebra) -> Coalgebra:
    """Tensor of coalgebras through the lax structure for ``mon``."""
    bk = cm.backend
    lax = cm.phi if mon.tag == "star" else cm.psi
    return Coalgebra(
        carrier=mon.obj(c1.carrier, c2.carrier),
        gamma=bk.compose(lax(c1.carrier, c2.carrier),
                         mon.mor(c1.gamma, c2.gamma)))


def em_unit(cm: Comonad, mon: Monoidal) -> Coalgebra:
    lax0 = cm.phi0 if mon.tag == "star" else cm.psi0
    return Coalgebra(carrier=mon.unit, gamma=lax0())


def build_em_table(cm: Comonad, coalgebras: list[Coalgebra],
                   scope: Scope | None = None):
    """The coalgebra category over the given objects as a finite-table backend.

    Returns (table backend, hom lists) where ``hom lists`` maps an object
    pair to the underlying morphisms in table order.
    """
    scope = scope or Scope()
    n = len(coalgebras)
    hom_lists: dict[tuple[int, int], list[Mor]] = {}
    for i, j in itertools.product(range(n), range(n)):
        hom_lists[(i, j)] = coalgebra_morphisms(
            cm, coalgebras[i], coalgebras[j], scope)
    homs = {k: len(v) for k, v in hom_lists.items()}
    identities = {}
    bk = cm.backend
    for i, co in enumerate(coalgebras):
        ident = bk.identity(co.carrier)
        identities[i] = next(
            idx for idx, f in enumerate(hom_lists[(i, i)]) if f == ident)
    comp = {}
    for i, j, k in itertools.product(range(n), range(n), range(n)):
        tbl = {}
        for gi, g in enumerate(hom_lists[(j, k)]):
            row = {}
            for fi, f in enumerate(hom_lists[(i, j)]):
                gf = bk.compose(g, f)
                row[fi] = next(
                    idx for idx, h in enumerate(hom_lists[(i, k)]) if h == gf)
            tbl[gi] = row
        comp[(i, j, k)] = tbl
    return TableBackend(n, homs, comp, identities), hom_lists


# ---------------------------------------------------------------------------
# the four negation/comonad compatibility diagrams

def check_em_compat(bundle: Lindist, neg: Negation, cm: Comonad,
                    lift: NegLift, scope: Scope | None = None) -> CheckReport:
    """The four diagrams making the lifted negations interact with the
    (co)evaluation families: Le, Ln, Le′, Ln′, one entry each, per object.
    """
    scope = scope or Scope()
    bk = bundle.backend
    st, pr = bundle.star, bundle.par
    rep = CheckReport(scope=scope.describe(bk))
    objs = scope.objs(bk)
    one = bk.identity
    S, Sp = neg.S, neg.Sp

    le, ln = Check("Le"), Check("Ln")
    lep, lnp = Check("Le′"), Check("Ln′")

    for a in objs:
        ga = cm.G(a)
        le.eq((a,),
              lambda: seq(bk,
                          st.mor(one(S.obj(a)), cm.eps(a)),
                          neg.e(a),
                          cm.psi0()),
              lambda: seq(bk,
                          st.mor(lift.nu(a), cm.delta(a)),
                          cm.phi(S.obj(ga), ga),
                          cm.Gm(neg.e(ga))))
        ln.eq((a,),
              lambda: seq(bk,
                          neg.n(ga),
                          pr.mor(one(ga), lift.nu(ga)),
                          cm.psi(a, S.obj(cm.G(ga))),
                          cm.Gm(pr.mor(one(a), S.mor(cm.delta(a))))),
              lambda: seq(bk,
                          cm.phi0(),
                          cm.Gm(neg.n(a)),
                          cm.Gm(pr.mor(one(a), S.mor(cm.eps(a))))))
        lep.eq((a,),
               lambda: seq(bk,
                           st.mor(cm.eps(a), one(Sp.obj(a))),
                           neg.ep(a),
                           cm.psi0()),
               lambda: seq(bk,
                           st.mor(cm.delta(a), lift.nup(a)),
                           cm.phi(ga, Sp.obj(ga)),
                           cm.Gm(neg.ep(ga))))
        lnp.eq((a,),
               lambda: seq(bk,
                           neg.np(ga),
                           pr.mor(lift.nup(ga), one(ga)),
                           cm.psi(Sp.obj(cm.G(ga)), a),
                           cm.Gm(pr.mor(Sp.mor(cm.delta(a)), one(a)))),
               lambda: seq(bk,
                           cm.phi0(),
                           cm.Gm(neg.np(a)),
                           cm.Gm(pr.mor(Sp.mor(cm.eps(a)), one(a)))))
    for c in (le, ln, lep, lnp):
        rep.add(c.done())
    return rep


# ---------------------------------------------------------------------------
# coalgebra-side evaluation predicates and the emitted instance

def scoped_coalgebras(cm: Comonad, scope: Scope | None = None,
                      with_cofree: bool = True) -> list[Coalgebra]:
    """Every coalgebra on a scoped carrier, plus the cofree ones."""
    scope = scope or Scope()
    bk = cm.backend
    out: list[Coalgebra] = []
    seen = set()
    for a in scope.objs(bk):
        for co in enumerate_coalgebras(cm, a, scope):
            if co.key() not in seen:
                seen.add(co.key())
                out.append(co)
        if with_cofree:
            cofree = Coalgebra(carrier=cm.G(a), gamma=cm.delta(a))
            if cofree.key() not in seen:
                seen.add(cofree.key())
                out.append(cofree)
    return out


def evaluation_morphism_failures(bundle: Lindist, neg: Negation, cm: Comonad,
                                 lift: NegLift,
                                 coalgebras: list[Coalgebra]) -> list:
    """For each coalgebra, whether the four (co)evaluation morphisms are
    coalgebra morphisms between the lifted objects; returns failing keys.
    """
    from .comonads import lift_negation
    st, pr = bundle.star, bundle.par
    tilde_S, tilde_Sp = lift_negation(cm, neg, lift)
    unit_star = em_unit(cm, st)
    unit_par = em_unit(cm, pr)
    bad = []
    for co in coalgebras:
        a = co.carrier
        lifted_s = tilde_S(co)
        lifted_sp = tilde_Sp(co)
        if not is_coalgebra_morphism(
                cm, em_tensor(cm, st, lifted_s, co), unit_par, neg.e(a)):
            bad.append((co.key(), "e"))
        if not is_coalgebra_morphism(
                cm, unit_star, em_tensor(cm, pr, co, lifted_s), neg.n(a)):
            bad.append((co.key(), "n"))
        if not is_coalgebra_morphism(
                cm, em_tensor(cm, st, co, lifted_sp), unit_par, neg.ep(a)):
            bad.append((co.key(), "e'"))
        if not is_coalgebra_morphism(
                cm, unit_star, em_tensor(cm, pr, lifted_sp, co), neg.np(a)):
            bad.append((co.key(), "n'"))
    return bad


def distribution_morphism_failures(bundle: Lindist, cm: Comonad,
                                   coalgebras: list[Coalgebra]) -> list:
    """Both lifted distributions as coalgebra morphisms on all triples."""
    st, pr = bundle.star, bundle.par
    bad = []
    for c1, c2, c3 in itertools.product(coalgebras, repeat=3):
        src_l = em_tensor(cm, st, c1, em_tensor(cm, pr, c2, c3))
        dst_l = em_tensor(cm, pr, em_tensor(cm, st, c1, c2), c3)
        if not is_coalgebra_morphism(
                cm, src_l, dst_l,
                bundle.dl(c1.carrier, c2.carrier, c3.carrier)):
            bad.append((c1.key(), c2.key(), c3.key(), "dl"))
        src_r = em_tensor(cm, st, em_tensor(cm, pr, c1, c2), c3)
        dst_r = em_tensor(cm, pr, c1, em_tensor(cm, st, c2, c3))
        if not is_coalgebra_morphism(
                cm, src_r, dst_r,
                bundle.dr(c1.carrier, c2.carrier, c3.carrier)):
            bad.append((c1.key(), c2.key(), c3.key(), "dr"))
    return bad


def tensor_closure(bundle: Lindist, neg: Negation, cm: Comonad,
                   lift: NegLift, seeds: list[Coalgebra],
                   max_objects: int = 64) -> list[Coalgebra]:
    """Close a coalgebra set under both tensors, units, and lifted negations."""
    from .comonads import lift_negation
    tilde_S, tilde_Sp = lift_negation(cm, neg, lift)
    pool: dict = {}
    for co in [em_unit(cm, bundle.star), em_unit(cm, bundle.par)] + list(seeds):
        pool[co.key()] = co
    changed = True
    while changed:
        changed = False
        items = list(pool.values())
        new = []
        for co in items:
            new.append(tilde_S(co))
            new.append(tilde_Sp(co))
        for c1, c2 in itertools.product(items, items):
            new.append(em_tensor(cm, bundle.star, c1, c2))
            new.append(em_tensor(cm, bundle.par, c1, c2))
        for co in new:
            if co.key() not in pool:
                pool[co.key()] = co
                changed = True
                if len(pool) > max_objects:
                    raise PreconditionFailure(
                        f"coalgebra set does not close within {max_objects} "
                        "objects; restrict the seed set")
    return sorted(pool.values(), key=lambda c: c.key())


def em_lindist_instance(bundle: Lindist, neg: Negation, cm: Comonad,
                        lift: NegLift, seeds: list[Coalgebra],
                        scope: Scope | None = None):
    """The coalgebra category over a tensor-closed object set, as a
    finite-table backend carrying the inherited bundle and negations.

    Raises MissingWitness during later validation if some inherited
    structure morphism is not a coalgebra morphism, which is precisely
    the situation the re-validation suite is meant to expose.
    """
    from .comonads import lift_negation
    scope = scope or Scope()
    bk = cm.backend
    objs = tensor_closure(bundle, neg, cm, lift, seeds)
    table, hom_lists = build_em_table(cm, objs, scope)
    index = {co.key(): i for i, co in enumerate(objs)}
    tilde_S, tilde_Sp = lift_negation(cm, neg, lift)

    def locate(i: int, j: int, f: Mor) -> Mor:
        for idx, h in enumerate(hom_lists[(i, j)]):
            if h == f:
                return table.mor(i, j, idx)
        raise MissingWitness(
            f"morphism {f.dom}->{f.cod} is not a coalgebra morphism "
            f"between objects {i} and {j}")

    def obj_of(co: Coalgebra) -> int:
        key = co.key()
        if key not in index:
            raise MissingWitness("object escapes the closed coalgebra set")
        return index[key]

    def mk_mon(mon: Monoidal, unit_co: Coalgebra) -> Monoidal:
        def obj(i: int, j: int) -> int:
            return obj_of(em_tensor(cm, mon, objs[i], objs[j]))

        def mor(f: Mor, g: Mor) -> Mor:
            uf = hom_lists[(f.dom, f.cod)][f.payload]
            ug = hom_lists[(g.dom, g.cod)][g.payload]
            return locate(obj(f.dom, g.dom), obj(f.cod, g.cod),
                          mon.mor(uf, ug))
        return Monoidal(backend=table, tag=mon.tag,
                        unit=obj_of(unit_co), obj=obj, mor=mor)

    em_star = mk_mon(bundle.star, em_unit(cm, bundle.star))
    em_par = mk_mon(bundle.par, em_unit(cm, bundle.par))

    def dl(i: int, j: int, k: int) -> Mor:
        src = em_star.obj(i, em_par.obj(j, k))
        dst = em_par.obj(em_star.obj(i, j), k)
        return locate(src, dst, bundle.dl(
            objs[i].carrier, objs[j].carrier, objs[k].carrier))

    def dr(i: int, j: int, k: int) -> Mor:
        src = em_star.obj(em_par.obj(i, j), k)
        dst = em_par.obj(i, em_star.obj(j, k))
        return locate(src, dst, bundle.dr(
            objs[i].carrier, objs[j].carrier, objs[k].carrier))

    em_bundle = Lindist(star=em_star, par=em_par, dl=dl, dr=dr)

    from .structures import Functor

    def mk_neg_functor(F, tilde):
        def obj(i: int) -> int:
            return obj_of(tilde(objs[i]))

        def mor(f: Mor) -> Mor:
            uf = hom_lists[(f.dom, f.cod)][f.payload]
            return locate(obj(f.cod), obj(f.dom), F.mor(uf))
        return Functor(backend=table, obj=obj, mor=mor, contravariant=True)

    em_S = mk_neg_functor(neg.S, tilde_S)
    em_Sp = mk_neg_functor(neg.Sp, tilde_Sp)

    em_neg = Negation(
        S=em_S, Sp=em_Sp,
        e=lambda i: locate(em_star.obj(em_S.obj(i), i), em_par.unit,
                           neg.e(objs[i].carrier)),
        n=lambda i: locate(em_star.unit, em_par.obj(i, em_S.obj(i)),
                           neg.n(objs[i].carrier)),
        ep=lambda i: locate(em_star.obj(i, em_Sp.obj(i)), em_par.unit,
                            neg.ep(objs[i].carrier)),
        np=lambda i: locate(em_star.unit, em_par.obj(em_Sp.obj(i), i),
                            neg.np(objs[i].carrier)))
    return table, em_bundle, em_neg, objs


# ---------------------------------------------------------------------------
# two-route agreement suite

def checker_equivalence_suite(entries, scope: Scope | None = None) -> dict:
    """Run two independent formulations of negation lifting and compare.

    ``entries`` is a list of (name, bundle, neg, cm, lift).  The direct
    route checks the four evaluation diagrams (Le, Ln, Le′, Ln′) as
    composite equalities over scoped objects.  The coalgebra route asks,
    for every enumerated coalgebra including the cofree ones, whether the
    four (co)evaluation morphisms are coalgebra morphisms between the
    lifted objects.  The suite passes only if the verdicts agree on every
    instance.
    """
    scope = scope or Scope()
    rows = []
    for name, bundle, neg, cm, lift in entries:
        direct = check_em_compat(bundle, neg, cm, lift, scope).overall
        cos = scoped_coalgebras(cm, scope)
        em = not evaluation_morphism_failures(bundle, neg, cm, lift, cos)
        rows.append({"instance": name, "direct": direct,
                     "coalgebra_route": em, "agree": direct == em})
    return {
        "instances": rows,
        "agreement": all(r["agree"] for r in rows),
        "count": len(rows),
    }
