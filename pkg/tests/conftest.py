from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

from fusscatalan.algebra import Morphism
from fusscatalan.diagrams import FC, TL
from fusscatalan.enumeration import enumerate_diagrams
from fusscatalan.scalars import Scalar

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
half_exponents = st.integers(min_value=-8, max_value=8).map(lambda k: Fraction(k, 2))


@st.composite
def scalars(draw, max_terms=3):
    n = draw(st.integers(min_value=0, max_value=max_terms))
    s = Scalar.const(0)
    for _ in range(n):
        s = s + Scalar.monomial(draw(fractions), draw(half_exponents), draw(half_exponents))
    return s


def basis(kind, m, n):
    return enumerate_diagrams(kind, m, n)


def diagrams(kind, m, n):
    return st.sampled_from(basis(kind, m, n))


@st.composite
def morphisms(draw, kind, m, n, max_terms=3):
    out = Morphism.zero(basis(kind, m, n)[0].sig)
    for _ in range(draw(st.integers(min_value=1, max_value=max_terms))):
        d = draw(diagrams(kind, m, n))
        coeff = Scalar.monomial(draw(st.integers(min_value=-3, max_value=3)), draw(half_exponents), 0)
        out = out + Morphism.from_diagram(d, coeff) if coeff else out
    return out


kinds = st.sampled_from([TL, FC])
