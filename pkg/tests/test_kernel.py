"""Backend primitives and the kernel law checkers."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldlab import MissingWitness, Scope, ScopeTooLarge, seq
from ldlab.backends import MatrixBackend, ThinBackend
from ldlab.kernel_checks import (check_category_laws, check_monoidal_laws,
                                 check_symmetry_laws)


def small_matrix(p, rows, cols):
    return st.lists(
        st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
        min_size=rows, max_size=rows).map(lambda m: np.array(m, dtype=np.int64))


def test_thin_backend_composes_witnesses(l3):
    bk = l3.backend
    f = bk.arrow(0, 1)
    g = bk.arrow(1, 2)
    assert bk.compose(g, f) == bk.arrow(0, 2)


def test_thin_backend_refuses_missing_witness(l3):
    with pytest.raises(MissingWitness):
        l3.backend.arrow(2, 0)


def test_category_laws_thin(l3):
    assert check_category_laws(l3.backend, Scope()).overall


def test_category_laws_matrix():
    bk = MatrixBackend(3, [1, 2])
    assert check_category_laws(bk, Scope()).overall


def test_monoidal_laws_both_tensors(l3):
    rep = check_monoidal_laws(l3.backend, l3.bundle.star, Scope())
    assert rep.overall
    rep = check_monoidal_laws(l3.backend, l3.bundle.par, Scope())
    assert rep.overall


def test_symmetry_laws(l3):
    sym = l3.bundle.sym
    assert check_symmetry_laws(l3.backend, sym.mon, sym, Scope()).overall


@given(f=small_matrix(5, 2, 3), g=small_matrix(5, 3, 2))
@settings(max_examples=50, deadline=None)
def test_matrix_composition_is_matrix_product(f, g):
    bk = MatrixBackend(5, [2, 3])
    mf = bk.mat(3, 2, f)
    mg = bk.mat(2, 3, g)
    got = bk.compose(mg, mf)
    assert np.array_equal(np.asarray(got.payload), (g @ f) % 5)


@given(f=small_matrix(3, 2, 2), g=small_matrix(3, 2, 2))
@settings(max_examples=50, deadline=None)
def test_swap_conjugation_exchanges_kron_factors(f, g):
    bk = MatrixBackend(3, [2])
    mf = bk.mat(2, 2, f)
    mg = bk.mat(2, 2, g)
    lhs = seq(bk, bk.swap(2, 2), bk.kron(mf, mg), bk.swap(2, 2))
    assert lhs == bk.kron(mg, mf)


def test_swap_inverse_is_reverse_swap():
    bk = MatrixBackend(2, [2, 3])
    assert bk.compose(bk.swap(3, 2), bk.swap(2, 3)) == bk.identity(6)
    assert bk.invert(bk.swap(2, 3)) == bk.swap(3, 2)


def test_invert_round_trips():
    bk = MatrixBackend(5, [3])
    m = bk.mat(3, 3, np.array([[1, 2, 0], [0, 1, 3], [0, 0, 1]]))
    inv = bk.invert(m)
    assert bk.compose(inv, m) == bk.identity(3)
    assert bk.compose(m, inv) == bk.identity(3)


def test_kron_reduces_mod_p():
    bk = MatrixBackend(2, [2])
    ones = bk.mat(2, 2, np.array([[1, 1], [1, 1]]))
    sq = bk.kron(ones, ones)
    assert np.asarray(sq.payload).max() <= 1


def test_hom_enumeration_respects_bound(monkeypatch):
    monkeypatch.setenv("LDLAB_MAX_ENUM", "3")
    bk = MatrixBackend(2, [2])
    with pytest.raises(ScopeTooLarge):
        bk.hom(2, 2)


def test_hom_sample_deterministic():
    bk = MatrixBackend(3, [2])
    sc = Scope(samples=5)
    a = [m.key() for m in sc.hom_sample(bk, 2, 2)]
    b = [m.key() for m in sc.hom_sample(bk, 2, 2)]
    assert a == b


def test_thin_backend_at_most_one_arrow():
    bk = ThinBackend(["x", "y"], [[1, 1], [0, 1]])
    assert bk.hom_size(0, 1) == 1
    assert bk.hom_size(1, 0) == 0
