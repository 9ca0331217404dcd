"""Generators and mutation operators."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldlab import Scope
from ldlab.instances import (gen_group_hopf, gen_lukasiewicz,
                             gen_matrix_compact, group_like_count,
                             mutate_matrix_entry, mutate_thin_star_entry)


@given(n=st.integers(1, 7))
@settings(max_examples=20, deadline=None)
def test_chain_tensors_are_monotone_and_unital(n):
    inst = gen_lukasiewicz(n)
    st_, pr = inst.bundle.star, inst.bundle.par
    top = n - 1
    for a in range(n):
        assert st_.obj(top, a) == a
        assert pr.obj(0, a) == a
        for b in range(n):
            assert 0 <= st_.obj(a, b) <= top
            assert st_.obj(a, b) == st_.obj(b, a)
            assert pr.obj(a, b) == pr.obj(b, a)


@given(n=st.integers(1, 7), a=st.integers(0, 6))
@settings(max_examples=30, deadline=None)
def test_chain_negation_is_an_involution(n, a):
    inst = gen_lukasiewicz(n)
    a = a % n
    assert inst.neg.S.obj(inst.neg.S.obj(a)) == a


def test_chain_rejects_empty_carrier():
    with pytest.raises(ValueError):
        gen_lukasiewicz(0)


def test_matrix_compact_tensors_coincide():
    inst = gen_matrix_compact(2, 2)
    assert inst.bundle.star.obj(2, 2) == inst.bundle.par.obj(2, 2) == 4
    assert inst.bundle.dl(2, 2, 2) == inst.backend.identity(8)


def test_matrix_negation_pairing(mat22):
    bk = mat22.backend
    e2 = np.asarray(mat22.neg.e(2).payload)
    n2 = np.asarray(mat22.neg.n(2).payload)
    # evaluation then coevaluation traces to the dimension mod p
    assert int((e2 @ n2 % bk.p).item()) == 0  # dim 2 vanishes mod 2
    e1 = np.asarray(mat22.neg.e(1).payload)
    n1 = np.asarray(mat22.neg.n(1).payload)
    assert int((e1 @ n1 % bk.p).item()) == 1


@pytest.mark.parametrize("p,m", [(2, 2), (3, 3), (2, 3)])
def test_group_like_count_equals_group_order(p, m):
    assert group_like_count(p, m) == m


def test_group_hopf_carries_comonad(gh22):
    assert gh22.comonad is not None
    assert gh22.lift is not None
    assert gh22.hopf.carrier == 2


def test_star_entry_mutation_changes_only_one_entry(l3):
    bad = mutate_thin_star_entry(l3, 1, 2, 2)
    changed = [(a, b) for a in range(3) for b in range(3)
               if bad.bundle.star.obj(a, b) != l3.bundle.star.obj(a, b)]
    assert changed == [(1, 2)]


def test_matrix_entry_mutation_breaks_triangles(mat22):
    from ldlab.lindist import check_triangle_identities
    scope = Scope(objects=(1, 2))
    assert check_triangle_identities(mat22.bundle, mat22.neg, scope).overall
    bad = mutate_matrix_entry(mat22, "e", 2, 0, 1, 1)
    rep = check_triangle_identities(bad.bundle, bad.neg, scope)
    assert not rep.overall
