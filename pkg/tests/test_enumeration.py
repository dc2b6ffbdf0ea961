from __future__ import annotations

import math

import pytest

from fusscatalan import diagrams as dg
from fusscatalan.algebra import Morphism
from fusscatalan.diagrams import FC, TL
from fusscatalan.enumeration import (
    BudgetExceeded,
    catalan,
    dimension,
    dims_table,
    embed_by_u,
    enumerate_diagrams,
)


def catalan_closed(k):
    return math.comb(2 * k, k) // (k + 1)


def test_catalan_recurrence_matches_closed_form():
    assert [catalan(k) for k in range(12)] == [catalan_closed(k) for k in range(12)]


@pytest.mark.parametrize("m,n", [(m, n) for m in range(9) for n in range(9) if m + n <= 8])
def test_tl_dimension_is_catalan(m, n):
    assert dimension(TL, m, n) == catalan_closed(m + n)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(5) if m + n <= 5])
def test_dimension_equals_enumeration(m, n):
    for kind in (TL, FC):
        assert dimension(kind, m, n) == len(enumerate_diagrams(kind, m, n))


def test_examples():
    assert len(enumerate_diagrams(TL, 1, 1)) == 2
    assert len(enumerate_diagrams(FC, 0, 1)) == 1
    fc11 = enumerate_diagrams(FC, 1, 1)
    assert set(fc11) == {dg.identity(FC, 1), dg.cap_cup(FC, 1, [(1, 2)]), dg.cap_cup(FC, 1, [(0, 3), (1, 2)])}


@pytest.mark.parametrize("total", [0, 2, 4, 6])
def test_frobenius_dimension_identity(total):
    half = dimension(FC, total // 2, total // 2)
    for m in range(total + 1):
        assert dimension(FC, m, total - m) == half


def test_dimension_depends_on_total_only():
    for total in range(7):
        assert len({dimension(FC, m, total - m) for m in range(total + 1)}) == 1


@pytest.mark.parametrize("kind,m,n", [(TL, 2, 3), (FC, 1, 2), (FC, 2, 2)])
def test_closed_under_adjoint(kind, m, n):
    assert sorted(dg.adjoint(d) for d in enumerate_diagrams(kind, m, n)) == enumerate_diagrams(kind, n, m)


def test_embed_by_u_injective():
    images = [embed_by_u(Morphism.from_diagram(d)) for d in enumerate_diagrams(FC, 1, 1)]
    assert all(x.cod == 2 and x.dom == 1 and not x.is_zero() for x in images)
    assert len({next(iter(x.terms)) for x in images}) == 3
    assert dimension(FC, 1, 2) >= dimension(FC, 1, 1)
    assert not embed_by_u(Morphism.identity(FC, 0)).is_zero()


def test_embedding_left_inverse():
    from fusscatalan.algebra import generators

    u = generators(FC).u
    for d in enumerate_diagrams(FC, 1, 1):
        x = Morphism.from_diagram(d)
        back = Morphism.identity(FC, 1).tensor(u.adjoint()).compose(embed_by_u(x))
        assert back == x


def test_budgets():
    with pytest.raises(BudgetExceeded):
        enumerate_diagrams(FC, 4, 5)
    with pytest.raises(BudgetExceeded):
        dimension(FC, 60, 60)
    assert dimension(FC, 5, 5, budget=40) == dimension(FC, 0, 10)


def test_dims_table():
    rows = dims_table(FC, 3)
    assert (0, 1, 1) in rows
    assert len(rows) == 16
