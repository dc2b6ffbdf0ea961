from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from fusscatalan import diagrams as dg
from fusscatalan.algebra import (
    Morphism,
    build_generators,
    frobenius_transport,
    frobenius_untransport,
    generators,
    linear_combination,
    loop_scalar,
    transport_projection,
)
from fusscatalan.diagrams import FC, TL, SignatureError
from fusscatalan.enumeration import enumerate_diagrams
from fusscatalan.scalars import ONE, Scalar

from conftest import morphisms

B, W, D = Scalar.beta(), Scalar.omega(), Scalar.delta()


def one(kind):
    return Morphism.scalar(kind, ONE)


@pytest.mark.parametrize("kind", [TL, FC])
def test_basic_generator_identities(kind):
    g = generators(kind)
    assert g.u.adjoint().compose(g.u) == one(kind)
    assert g.m.compose(g.m.adjoint()) == Morphism.identity(kind, 1).scale(D ** 2)


def test_fc_generator_examples():
    g = build_generators(FC, 4)
    assert g.e.compose(g.e) == g.e
    assert g.e.compose(g.u) == g.u
    assert g.m.compose(g.e.pad(1)).compose(g.m.adjoint()) == one(FC).pad(1).scale(B ** 2)
    e1, e2 = g.jones(1), g.jones(2)
    e1 = e1.pad(1)
    assert e1.compose(e2.compose(e1)) == e1.scale(D ** -2)


def test_fc_derived_generators():
    g = generators(FC)
    i1 = Morphism.identity(FC, 1)
    f = i1.tensor(g.m.compose(g.e.pad(1))).compose(g.m.adjoint().pad(1)).scale(B ** -2)
    assert f == g.f
    assert g.jones(1) == g.u.compose(g.u.adjoint())
    assert g.jones(2) == g.m.adjoint().compose(g.m).scale(D ** -2)
    assert g.projection(1) == g.e and g.projection(2) == g.f
    for n in (1, 2):
        assert g.jones(n + 2) == i1.tensor(g.jones(n))
        assert g.projection(n + 2) == i1.tensor(g.projection(n))


def test_loop_weights():
    assert loop_scalar(TL, 2, 0) == D ** 2
    assert loop_scalar(FC, 1, 0) == B
    assert loop_scalar(FC, 0, 1) == W
    # black projection diagram squared: one black loop
    E = Morphism.from_diagram(dg.cap_cup(FC, 1, [(1, 2)]))
    assert E.compose(E) == E.scale(W)


@given(st.data())
def test_interchange_law(data):
    a = data.draw(morphisms(FC, 1, 1))
    b = data.draw(morphisms(FC, 1, 1))
    c = data.draw(morphisms(FC, 1, 0))
    d = data.draw(morphisms(FC, 0, 1))
    assert a.tensor(c).compose(b.tensor(d)) == a.compose(b).tensor(c.compose(d))


@given(st.sampled_from([TL, FC]), st.data())
def test_adjoint_anti_multiplicative(kind, data):
    x = data.draw(morphisms(kind, 2, 1))
    y = data.draw(morphisms(kind, 1, 2))
    assert x.compose(y).adjoint() == y.adjoint().compose(x.adjoint())
    assert x.adjoint().adjoint() == x


@given(st.data())
def test_bilinearity(data):
    x = data.draw(morphisms(FC, 1, 1))
    y = data.draw(morphisms(FC, 1, 1))
    z = data.draw(morphisms(FC, 1, 1))
    assert x.compose(y + z) == x.compose(y) + x.compose(z)
    assert (x + y).tensor(z) == x.tensor(z) + y.tensor(z)
    assert (x - x).is_zero()


@given(st.data())
def test_doubled_tl_subalgebra(data):
    # a TL loop (weight d) doubles into one white and one black loop (weight b*w)
    x = data.draw(morphisms(TL, 2, 2))
    y = data.draw(morphisms(TL, 2, 2))
    z = data.draw(morphisms(TL, 1, 2))
    assert x.compose(y).to_fc() == x.to_fc().compose(y.to_fc())
    assert x.tensor(z).to_fc() == x.to_fc().tensor(z.to_fc())
    assert x.adjoint().to_fc() == x.to_fc().adjoint()


def test_to_fc_maps_generators():
    tl, fc = generators(TL), generators(FC)
    assert tl.u.to_fc() == fc.u
    assert tl.m.to_fc() == fc.m


def test_errors():
    g = generators(FC)
    with pytest.raises(SignatureError):
        g.m.compose(g.m)
    with pytest.raises(SignatureError):
        g.e + g.f
    with pytest.raises(SignatureError):
        generators(TL).m.tensor(g.m)
    with pytest.raises(KeyError):
        generators(TL).lookup("e")


def test_linear_combination_merges_terms():
    d = dg.identity(FC, 1)
    x = linear_combination([(d, B), (d, -B), (dg.cap_cup(FC, 1, [(1, 2)]), W)])
    assert len(x) == 1


@pytest.mark.parametrize("l,k,w", [(1, 1, 2), (0, 1, 1), (0, 1, 2), (1, 0, 2), (0, 2, 2), (1, 2, 3)])
def test_frobenius_transport_roundtrip(l, k, w):
    for d in enumerate_diagrams(FC, l, k):
        x = Morphism.from_diagram(d)
        y = frobenius_transport(x, w)
        assert (y.dom, y.cod) == (w, w)
        assert frobenius_untransport(y, l, k) == x
        pk, pl = transport_projection(FC, w, k), transport_projection(FC, w, l)
        assert pk.compose(y) == y == y.compose(pl)


def test_frobenius_transport_of_u():
    g = generators(FC)
    assert frobenius_transport(g.u, 1) == g.u.compose(g.u.adjoint())
    assert frobenius_transport(Morphism.identity(FC, 1), 2) == g.jones(1).tensor(Morphism.identity(FC, 1))
    with pytest.raises(ValueError):
        frobenius_transport(Morphism.identity(FC, 2), 1)


def test_frobenius_images_independent():
    from fusscatalan.opmodel import span_rank
    import numpy as np

    for l, k, w in [(0, 1, 1), (1, 1, 2), (0, 2, 2)]:
        basis = enumerate_diagrams(FC, l, k)
        images = [frobenius_transport(Morphism.from_diagram(d), w) for d in basis]
        keys = sorted({d for y in images for d in y.terms})
        rows = np.array([[y.coefficient(d).eval(2, 3) for d in keys] for y in images])
        assert span_rank(rows) == len(basis)
