"""The single-negation comonad formulation and the compact specialization."""

from __future__ import annotations

import pytest

from ldlab import Scope
from ldlab.comonads import identity_comonad
from ldlab.instances import (gen_group_hopf, interior_comonad, mutate_scale_nu,
                             mutate_zero_nu)
from ldlab.lindist import star_from_lindist
from ldlab.starcomonad import (check_star_comonad, compact_hopf_check,
                               notions_coincide)
from ldlab.structures import StructureMissing


def test_star_comonad_squares_on_identity(l3):
    cm, lift = identity_comonad(l3.bundle, l3.neg)
    sa, _ = star_from_lindist(l3.bundle, l3.neg, Scope())
    rep = check_star_comonad(sa, cm, lift, Scope())
    assert rep.overall
    assert {r.axiom for r in rep.results} == {"SC-1", "SC-2", "SC-3", "SC-4"}


def test_notions_coincide_positive_instances(l3, gh22, small_scope):
    cm, lift = identity_comonad(l3.bundle, l3.neg)
    res = notions_coincide(l3.bundle, l3.neg, cm, lift, Scope())
    assert res["verdict_a"] and res["verdict_b"] and res["coincide"]

    entry = interior_comonad(l3.backend, l3.bundle, l3.neg, [0, 0, 2])
    res = notions_coincide(l3.bundle, l3.neg, entry["comonad"],
                           entry["lift"], Scope())
    assert res["verdict_a"] and res["verdict_b"] and res["coincide"]

    res = notions_coincide(gh22.bundle, gh22.neg, gh22.comonad, gh22.lift,
                           small_scope)
    assert res["verdict_a"] and res["verdict_b"] and res["coincide"]


def test_notions_coincide_on_mutated_negatives(gh22, gh33, small_scope):
    broken = mutate_zero_nu(gh22)
    res = notions_coincide(broken.bundle, broken.neg, broken.comonad,
                           broken.lift, small_scope)
    assert not res["verdict_a"] and not res["verdict_b"]
    assert res["coincide"]
    a_fail = set(res["side_a"].failing())
    assert {"Le", "Le′", "Ln", "Ln′", "nu-1"} <= a_fail
    assert {"SC-1", "SC-2"} <= set(res["side_b"].failing())

    scaled = mutate_scale_nu(gh33, 2)
    res = notions_coincide(scaled.bundle, scaled.neg, scaled.comonad,
                           scaled.lift, small_scope)
    assert not res["verdict_a"] and not res["verdict_b"]
    assert res["coincide"]
    assert {"nu-1", "nu-2"} <= set(res["side_a"].failing())

    from ldlab.instances import mutate_drop_swap_phi
    dropped = mutate_drop_swap_phi(gh22)
    res = notions_coincide(dropped.bundle, dropped.neg, dropped.comonad,
                           dropped.lift, small_scope)
    assert not res["verdict_a"] and not res["verdict_b"]
    assert res["coincide"]


def test_compact_check_passes_on_group_algebras(gh22, gh33, small_scope):
    for inst in (gh22, gh33):
        rep = compact_hopf_check(inst.bundle, inst.neg, inst.comonad,
                                 inst.lift, small_scope)
        assert rep.overall
        assert [r.axiom for r in rep.results] == ["BV-20", "BV-21", "BV-22",
                                                  "BV-23"]


def test_compact_check_rejects_non_compact_instance(l3):
    cm, lift = identity_comonad(l3.bundle, l3.neg)
    with pytest.raises(StructureMissing):
        compact_hopf_check(l3.bundle, l3.neg, cm, lift, Scope())


def test_identity_antipode_fails_compact_diagrams(small_scope):
    from ldlab.instances import mutate_identity_antipode
    bad = mutate_identity_antipode(gen_group_hopf(3, 3))
    rep = compact_hopf_check(bad.bundle, bad.neg, bad.comonad, bad.lift,
                             small_scope)
    assert not rep.overall
    assert set(rep.failing()) <= {"BV-20", "BV-21", "BV-22", "BV-23"}
