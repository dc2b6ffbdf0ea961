"""Linear combinations of diagrams over :class:`Scalar`, and the named generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from . import diagrams as dg
from .diagrams import FC, TL, Diagram, Signature, SignatureError
from .scalars import DELTA, ONE, Scalar


def loop_scalar(kind: str, white: int, black: int) -> Scalar:
    """Value of the erased loops.

    TL loops are worth ``d = b*w``.  For FC, a white loop is worth ``b`` and a
    black loop ``w``; with the ``w b b w`` coloring this is the assignment that
    makes ``e = w^-1 E`` and ``f = b^-1 F`` idempotent and ``m e m* = b^2``.
    """
    if kind == TL:
        return DELTA ** (white + black)
    return Scalar.monomial(1, beta=white, omega=black)


class Morphism:
    """Element of TL²(m, n) or FC(m, n): a finite map Diagram -> nonzero Scalar."""

    __slots__ = ("sig", "_terms")

    def __init__(self, sig: Signature, terms: Mapping[Diagram, Scalar] | None = None):
        self.sig = sig
        clean = {}
        for d, c in (terms or {}).items():
            if d.sig != sig:
                raise SignatureError(f"diagram of {d.sig} in morphism of {sig}")
            c = Scalar.coerce(c)
            if c:
                clean[d] = c
        self._terms = dict(sorted(clean.items()))

    # -- construction -----------------------------------------------------------

    @classmethod
    def from_diagram(cls, d: Diagram, coeff=ONE) -> "Morphism":
        return cls(d.sig, {d: coeff})

    @classmethod
    def identity(cls, kind: str, k: int = 1) -> "Morphism":
        return cls.from_diagram(dg.identity(kind, k))

    @classmethod
    def scalar(cls, kind: str, c) -> "Morphism":
        """c · id_0."""
        return cls.from_diagram(dg.identity(kind, 0), Scalar.coerce(c))

    @classmethod
    def zero(cls, sig: Signature) -> "Morphism":
        return cls(sig)

    # -- inspection -------------------------------------------------------------

    @property
    def kind(self) -> str:
        return self.sig.kind

    @property
    def dom(self) -> int:
        return self.sig.dom

    @property
    def cod(self) -> int:
        return self.sig.cod

    @property
    def terms(self) -> dict[Diagram, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, d: Diagram) -> Scalar:
        return self._terms.get(d, Scalar())

    def as_scalar(self) -> Scalar:
        if self.dom or self.cod:
            raise SignatureError(f"{self.sig} is not a scalar signature")
        return self.coefficient(dg.identity(self.kind, 0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    def __hash__(self):
        return hash((self.sig, tuple(self._terms.items())))

    # -- linear structure -------------------------------------------------------

    def __add__(self, other: "Morphism") -> "Morphism":
        if self.sig != other.sig:
            raise SignatureError(f"cannot add {self.sig} and {other.sig}")
        out = dict(self._terms)
        for d, c in other._terms.items():
            out[d] = out[d] + c if d in out else c
        return Morphism(self.sig, out)

    def __neg__(self) -> "Morphism":
        return Morphism(self.sig, {d: -c for d, c in self._terms.items()})

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def scale(self, c) -> "Morphism":
        c = Scalar.coerce(c)
        return Morphism(self.sig, {d: c * x for d, x in self._terms.items()})

    def __rmul__(self, c) -> "Morphism":
        return self.scale(c)

    # -- category structure -----------------------------------------------------

    def compose(self, other: "Morphism") -> "Morphism":
        """self ∘ other (other applied first)."""
        if self.kind != other.kind or self.dom != other.cod:
            raise SignatureError(f"cannot compose {self.sig} after {other.sig}")
        out: dict[Diagram, Scalar] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                d, white, black = dg.compose_raw(a, b)
                c = ca * cb * loop_scalar(self.kind, white, black)
                out[d] = out[d] + c if d in out else c
        return Morphism(Signature(self.kind, other.dom, self.cod), out)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return self.compose(other)

    def tensor(self, other: "Morphism") -> "Morphism":
        if self.kind != other.kind:
            raise SignatureError(f"cannot tensor {self.kind} with {other.kind}")
        out: dict[Diagram, Scalar] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                out[dg.tensor(a, b)] = ca * cb
        return Morphism(Signature(self.kind, self.dom + other.dom, self.cod + other.cod), out)

    def adjoint(self) -> "Morphism":
        return Morphism(self.sig.adjoint(), {dg.adjoint(d): c.adjoint() for d, c in self._terms.items()})

    def pad(self, k: int) -> "Morphism":
        """self ⊗ id_k."""
        return self.tensor(Morphism.identity(self.kind, k)) if k else self

    def to_fc(self) -> "Morphism":
        if self.kind != TL:
            raise ValueError("to_fc expects a TL morphism")
        return Morphism(Signature(FC, self.dom, self.cod), {dg.tl_to_fc(d): c for d, c in self._terms.items()})

    def evaluate(self, beta0: float, omega0: float) -> dict[Diagram, float]:
        return {d: c.eval(beta0, omega0) for d, c in self._terms.items()}

    # -- text -------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return f"0 [{self.kind} {self.dom} {self.cod}]"
        return "\n+ ".join(f"({c}) [{d}]" for d, c in self._terms.items())

    def __repr__(self) -> str:
        return f"Morphism({self.sig.kind} {self.dom}->{self.cod}, {len(self)} terms)"


def linear_combination(items: Iterable[tuple[Diagram, Scalar]]) -> Morphism:
    items = list(items)
    out: dict[Diagram, Scalar] = {}
    for d, c in items:
        out[d] = out[d] + c if d in out else Scalar.coerce(c)
    return Morphism(items[0][0].sig, out)


# -- generators -------------------------------------------------------------------


@dataclass
class GeneratorSet:
    """u, m (and for FC e, f) plus the Jones projection families, as explicit
    normalized diagrams."""

    kind: str
    u: Morphism
    m: Morphism
    e: Morphism | None = None
    f: Morphism | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def jones(self, i: int) -> Morphism:
        """Bicolored (for TL: ordinary) Jones projection e_i = d^-1 × cap-cup."""
        key = ("e", i)
        if key not in self._cache:
            k, caps = dg.jones_caps(self.kind, i)
            self._cache[key] = Morphism.from_diagram(dg.cap_cup(self.kind, k, caps), DELTA ** -1)
        return self._cache[key]

    def projection(self, i: int) -> Morphism:
        """One-colored projection p_i: w^-1 × black cap-cup (odd i), b^-1 × white (even i)."""
        if self.kind != FC:
            raise ValueError("p_i exist only in FC")
        key = ("p", i)
        if key not in self._cache:
            k, caps = dg.projection_caps(i)
            coeff = Scalar.omega(-1) if i % 2 else Scalar.beta(-1)
            self._cache[key] = Morphism.from_diagram(dg.cap_cup(FC, k, caps), coeff)
        return self._cache[key]

    def lookup(self, name: str) -> Morphism | None:
        if name in ("u", "m", "e", "f"):
            value = getattr(self, name)
            if value is None:
                raise KeyError(f"{name} is not a {self.kind} generator")
            return value
        if name[0] == "e" and name[1:].isdigit():
            return self.jones(int(name[1:]))
        if name[0] == "p" and name[1:].isdigit():
            return self.projection(int(name[1:]))
        return None


@lru_cache(maxsize=None)
def generators(kind: str) -> GeneratorSet:
    u = Morphism.from_diagram(dg.unit_cap(kind), Scalar.delta(-0.5))
    m = Morphism.from_diagram(dg.multiplication_cup(kind), Scalar.delta(0.5))
    if kind == TL:
        return GeneratorSet(TL, u, m)
    e = Morphism.from_diagram(dg.cap_cup(FC, 1, [(1, 2)]), Scalar.omega(-1))
    f = Morphism.from_diagram(dg.cap_cup(FC, 2, [(3, 4)]), Scalar.beta(-1))
    return GeneratorSet(FC, u, m, e, f)


def build_generators(kind: str, max_index: int = 4) -> GeneratorSet:
    """GeneratorSet with e_i, p_i materialized for i <= max_index."""
    g = generators(kind)
    for i in range(1, max_index + 1):
        g.jones(i)
        if kind == FC:
            g.projection(i)
    return g


# -- Frobenius transport ------------------------------------------------------------


def _tensor_power(x: Morphism, k: int) -> Morphism:
    out = Morphism.scalar(x.kind, ONE)
    for _ in range(k):
        out = out.tensor(x)
    return out


def frobenius_transport(x: Morphism, w: int) -> Morphism:
    """Hom(l, k) -> End(w):  x |-> (u^{⊗(w-k)} ⊗ 1_k) x ((u*)^{⊗(w-l)} ⊗ 1_l)."""
    l, k = x.dom, x.cod
    if w < k or w < l:
        raise ValueError(f"w = {w} is smaller than the signature ({l}, {k})")
    u = generators(x.kind).u
    left = _tensor_power(u, w - k).tensor(Morphism.identity(x.kind, k))
    right = _tensor_power(u.adjoint(), w - l).tensor(Morphism.identity(x.kind, l))
    return left.compose(x).compose(right)


def frobenius_untransport(y: Morphism, l: int, k: int) -> Morphism:
    """End(w) -> Hom(l, k):  y |-> ((u*)^{⊗(w-k)} ⊗ 1_k) y (u^{⊗(w-l)} ⊗ 1_l)."""
    w = y.dom
    if y.cod != w:
        raise SignatureError("untransport expects an endomorphism")
    if w < k or w < l:
        raise ValueError(f"w = {w} is smaller than the signature ({l}, {k})")
    u = generators(y.kind).u
    left = _tensor_power(u.adjoint(), w - k).tensor(Morphism.identity(y.kind, k))
    right = _tensor_power(u, w - l).tensor(Morphism.identity(y.kind, l))
    return left.compose(y).compose(right)


def transport_projection(kind: str, w: int, k: int) -> Morphism:
    """(uu*)^{⊗(w-k)} ⊗ 1_k, which fixes the image of the transport on both sides."""
    u = generators(kind).u
    return _tensor_power(u.compose(u.adjoint()), w - k).tensor(Morphism.identity(kind, k))
