from __future__ import annotations

import pytest

from fusscatalan import diagrams as dg
from fusscatalan.algebra import Morphism
from fusscatalan.diagrams import FC, TL
from fusscatalan.enumeration import dimension, enumerate_diagrams
from fusscatalan.factorize import bend, factor_word, link_state_words, rainbow_word
from fusscatalan.relations import diagram_namespace
from fusscatalan.words import parse_word

SIGS = [(l, t - l) for t in range(5) for l in range(t + 1)]


@pytest.mark.parametrize("t", range(6))
def test_every_link_state_is_reached(t):
    table = link_state_words(t)
    assert len(table) == dimension(FC, 0, t)
    assert set(table) == set(enumerate_diagrams(FC, 0, t))


@pytest.mark.parametrize("l,k", [(1, 1), (2, 1), (1, 2), (2, 2), (0, 3), (3, 0)])
def test_bend_is_a_bijection(l, k):
    images = {bend(d) for d in enumerate_diagrams(FC, l, k)}
    assert images == set(enumerate_diagrams(FC, 0, l + k))


@pytest.mark.parametrize("l,k", SIGS)
def test_words_reproduce_diagrams(l, k):
    # only m, u, e are supplied; everything else is derived from words
    ns = diagram_namespace(FC, "words")
    for d in enumerate_diagrams(FC, l, k):
        word, s = factor_word(d)
        assert ns.evaluate(parse_word(word)) == Morphism.from_diagram(d, s)


def test_rainbow_is_nested():
    ns = diagram_namespace(FC)
    r2 = ns.evaluate(parse_word(rainbow_word(2)))
    (d, _), = r2.items()
    assert d.sig == dg.Signature(FC, 0, 4)
    assert dg.adjoint(d) == bend(dg.identity(FC, 2)) or d == bend(dg.identity(FC, 2))


def test_rejects_tl():
    with pytest.raises(ValueError):
        factor_word(dg.identity(TL, 1))
