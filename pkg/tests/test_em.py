"""Coalgebras, their enumeration, and the lifted-structure checks."""

from __future__ import annotations

import pytest

from ldlab import Scope
from ldlab.comonads import identity_comonad
from ldlab.em import (build_em_table, check_em_compat,
                      checker_equivalence_suite, distribution_morphism_failures,
                      em_lindist_instance, em_tensor, em_unit,
                      enumerate_coalgebras, evaluation_morphism_failures,
                      is_coalgebra, is_coalgebra_morphism, scoped_coalgebras,
                      tensor_closure)
from ldlab.instances import mutate_zero_nu
from ldlab.kernel_checks import check_category_laws, check_monoidal_laws
from ldlab.lindist import check_lindist, check_triangle_identities


def test_unit_coalgebras_are_group_likes(gh22):
    """On the unit object the coalgebra structures are exactly the
    group-like elements of the algebra, one per group element."""
    cos = enumerate_coalgebras(gh22.comonad, 1, Scope(objects=(1,)))
    assert len(cos) == 2
    for co in cos:
        assert is_coalgebra(gh22.comonad, co)


@pytest.mark.parametrize("p,m,expected", [(2, 2, 2), (3, 3, 3)])
def test_unit_coalgebra_count_matches_group_like_count(p, m, expected):
    from ldlab.instances import gen_group_hopf, group_like_count
    inst = gen_group_hopf(p, m)
    cos = enumerate_coalgebras(inst.comonad, 1, Scope(objects=(1,)))
    assert len(cos) == expected
    assert group_like_count(p, m) == expected


def test_cofree_coalgebra_is_coalgebra(gh22):
    cm = gh22.comonad
    from ldlab.structures import Coalgebra
    cofree = Coalgebra(carrier=cm.G(1), gamma=cm.delta(1))
    assert is_coalgebra(cm, cofree)


def test_evaluation_morphisms_on_positive_instance(gh22, small_scope):
    cos = scoped_coalgebras(gh22.comonad, small_scope)
    assert cos
    bad = evaluation_morphism_failures(gh22.bundle, gh22.neg, gh22.comonad,
                                       gh22.lift, cos)
    assert bad == []


def test_distributions_are_coalgebra_morphisms(gh22):
    cos = scoped_coalgebras(gh22.comonad, Scope(objects=(1,)))
    assert distribution_morphism_failures(gh22.bundle, gh22.comonad,
                                          cos) == []


def test_zero_nu_breaks_both_routes(gh22, small_scope):
    broken = mutate_zero_nu(gh22)
    direct = check_em_compat(broken.bundle, broken.neg, broken.comonad,
                             broken.lift, small_scope)
    assert not direct.overall
    cos = scoped_coalgebras(broken.comonad, small_scope)
    bad = evaluation_morphism_failures(broken.bundle, broken.neg,
                                       broken.comonad, broken.lift, cos)
    assert bad


def test_checker_equivalence_full_agreement(l3, gh22, small_scope):
    cm_id, lift_id = identity_comonad(l3.bundle, l3.neg)
    from ldlab.instances import interior_comonad
    entry = interior_comonad(l3.backend, l3.bundle, l3.neg, [0, 0, 2])
    broken = mutate_zero_nu(gh22)
    from ldlab.instances import mutate_scale_nu
    scaled = mutate_scale_nu(gh22, 0)
    entries = [
        ("identity", l3.bundle, l3.neg, cm_id, lift_id),
        ("interior", l3.bundle, l3.neg, entry["comonad"], entry["lift"]),
        ("hopf-2-2", gh22.bundle, gh22.neg, gh22.comonad, gh22.lift),
        ("hopf-2-2-alt", gh22.bundle, gh22.neg, gh22.comonad, gh22.lift),
        ("hopf-zero-nu", broken.bundle, broken.neg, broken.comonad,
         broken.lift),
        ("hopf-scaled-nu", scaled.bundle, scaled.neg, scaled.comonad,
         scaled.lift),
    ]
    res = checker_equivalence_suite(entries, small_scope)
    assert res["count"] >= 6
    assert res["agreement"]
    verdicts = {r["instance"]: r for r in res["instances"]}
    assert not verdicts["hopf-zero-nu"]["direct"]
    assert not verdicts["hopf-scaled-nu"]["direct"]


def test_em_table_emission(gh22):
    scope = Scope(objects=(1,))
    seeds = enumerate_coalgebras(gh22.comonad, 1, scope)
    table, em_bundle, em_neg, objs = em_lindist_instance(
        gh22.bundle, gh22.neg, gh22.comonad, gh22.lift, seeds, scope)
    assert len(objs) == 2
    assert check_category_laws(table, Scope()).overall
    assert check_monoidal_laws(table, em_bundle.star, Scope()).overall
    assert check_monoidal_laws(table, em_bundle.par, Scope()).overall
    assert check_lindist(em_bundle, Scope()).overall
    assert check_triangle_identities(em_bundle, em_neg, Scope()).overall


def test_tensor_closure_converges(gh22):
    scope = Scope(objects=(1,))
    seeds = enumerate_coalgebras(gh22.comonad, 1, scope)
    closed = tensor_closure(gh22.bundle, gh22.neg, gh22.comonad, gh22.lift,
                            seeds)
    assert len(closed) == 2


def test_em_tensor_is_coalgebra(gh22):
    cm = gh22.comonad
    cos = enumerate_coalgebras(cm, 1, Scope(objects=(1,)))
    prod = em_tensor(cm, gh22.bundle.star, cos[0], cos[1])
    assert is_coalgebra(cm, prod)
    assert is_coalgebra(cm, em_unit(cm, gh22.bundle.star))


def test_counit_is_coalgebra_morphism_to_cofree(gh22):
    cm = gh22.comonad
    from ldlab.structures import Coalgebra
    for co in enumerate_coalgebras(cm, 1, Scope(objects=(1,))):
        cofree = Coalgebra(carrier=cm.G(1), gamma=cm.delta(1))
        assert is_coalgebra_morphism(cm, co, cofree, co.gamma)
