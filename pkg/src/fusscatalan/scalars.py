"""Exact Laurent polynomials in the half-integer powers of beta and omega.

A :class:`Scalar` is a finite sum ``sum c * b^(p/2) * w^(q/2)`` with rational
coefficients.  Exponents are stored doubled so that ``b^(1/2)`` is the key
``(1, 0)``.  The loop parameter ``d`` (delta) is always ``b * w``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterator, Mapping, Union

Number = Union[int, Fraction]
Key = tuple[int, int]


def _doubled(exponent) -> int:
    two_e = Fraction(exponent) * 2
    if two_e.denominator != 1:
        raise ValueError(f"exponent {exponent} is not a half-integer")
    return int(two_e)


class Scalar:
    """Immutable element of Q[b^(+-1/2), w^(+-1/2)] in canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Number] | None = None):
        clean: dict[Key, Fraction] = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: Number) -> "Scalar":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, coeff: Number = 1, beta=0, omega=0) -> "Scalar":
        """``coeff * b^beta * w^omega`` with half-integer exponents."""
        return cls({(_doubled(beta), _doubled(omega)): coeff})

    @classmethod
    def beta(cls, exponent=1) -> "Scalar":
        return cls.monomial(1, beta=exponent)

    @classmethod
    def omega(cls, exponent=1) -> "Scalar":
        return cls.monomial(1, omega=exponent)

    @classmethod
    def delta(cls, exponent=1) -> "Scalar":
        return cls.monomial(1, beta=exponent, omega=exponent)

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Key, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Key, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return Scalar(out)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Inverse of a nonzero monomial; general Laurent polynomials are not units."""
        if not self.is_monomial():
            raise ZeroDivisionError("only nonzero monomials are invertible")
        ((a, b), c), = self._terms.items()
        return Scalar({(-a, -b): 1 / c})

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def adjoint(self) -> "Scalar":
        # beta, omega are formal positive reals and coefficients are rational
        return self

    # -- numerics -----------------------------------------------------------

    def eval(self, beta0: float, omega0: float) -> float:
        if not (beta0 > 0 and omega0 > 0):
            raise ValueError(f"evaluation point must be positive, got ({beta0}, {omega0})")
        sb, sw = math.sqrt(beta0), math.sqrt(omega0)
        return math.fsum(float(c) * sb ** a * sw ** b for (a, b), c in self._terms.items())

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self._terms.items():
            factors = []
            if c != 1 or (a == 0 and b == 0):
                factors.append(str(c))
            if a:
                factors.append(f"b^({a}/2)")
            if b:
                factors.append(f"w^({b}/2)")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse the grammar produced by ``str``; also accepts ``d`` (=b*w), bare ``b``
        and integer exponents such as ``b^-2``."""
        src = text.strip()
        if not src:
            raise ValueError("empty scalar")
        # split on top-level + / - while keeping signs attached to terms
        total = ZERO
        for sign, body in _split_terms(src):
            term = ONE
            for factor in body.split("*"):
                term = term * _parse_factor(factor.strip())
            total = total + (term if sign > 0 else -term)
        return total


_FACTOR_RE = re.compile(
    r"^(?:(?P<num>\d+(?:/\d+)?)|(?P<sym>[bwd])(?:\^(?P<exp>-?\d+|\(\s*-?\d+\s*(?:/\s*\d+\s*)?\)))?)$"
)


def parse_exponent(text: str) -> Fraction:
    text = text.strip()
    if text.startswith("("):
        text = text[1:-1]
    return Fraction(text.replace(" ", ""))


def _parse_factor(factor: str) -> Scalar:
    m = _FACTOR_RE.match(factor)
    if not m:
        raise ValueError(f"bad scalar factor {factor!r}")
    if m.group("num") is not None:
        return Scalar.const(Fraction(m.group("num")))
    exp = parse_exponent(m.group("exp")) if m.group("exp") else Fraction(1)
    return {"b": Scalar.beta, "w": Scalar.omega, "d": Scalar.delta}[m.group("sym")](exp)


def _split_terms(src: str) -> list[tuple[int, str]]:
    out: list[tuple[int, str]] = []
    depth = 0
    sign = 1
    start = 0
    i = 0
    # a leading '-' belongs to the first term
    if src.startswith("-"):
        sign, start, i = -1, 1, 1
    while i < len(src):
        ch = src[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and src[i - 1] not in "^(":
            out.append((sign, src[start:i].strip()))
            sign = 1 if ch == "+" else -1
            start = i + 1
            # "a + -3 * b" form
            rest = src[start:].lstrip()
            if rest.startswith("-"):
                sign = -sign
                start = len(src) - len(rest) + 1
                i = start
                continue
        i += 1
    out.append((sign, src[start:].strip()))
    for _, body in out:
        if not body:
            raise ValueError(f"malformed scalar {src!r}")
    return out


ZERO = Scalar()
ONE = Scalar.const(1)
BETA = Scalar.beta()
OMEGA = Scalar.omega()
DELTA = Scalar.delta()
