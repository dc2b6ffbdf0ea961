"""A small word language over the generator alphabet, evaluated in any model.

Grammar (juxtaposition and ``.``/``∘`` compose, right factor applied first)::

    expr   := [+|-] chain ((+|-) chain)*
    chain  := tensor ([.] tensor)*
    tensor := post ((ox|⊗) post)*
    post   := atom *...
    atom   := NAME | SCALAR | ( expr ) | [ expr , expr ] | { scalar text }

NAME is one of ``m u e f v id id_k e<i> p<i>``; SCALAR is a rational number
or ``b``, ``w``, ``d`` with an optional exponent (``b^-2``, ``d^(1/2)``).
Scalars are endomorphisms of the object 0.  Following the convention
``x = x ⊗ 1``, composing or comparing morphisms of different sizes pads the
smaller one with identities on the right.

Names not supplied by a model are derived from ``m, u, e``::

    f = b^-2 (id ox (m e)) m*     e1 = u u*     e2 = d^-2 m* m
    p1 = e    p2 = f    v = m* u  e_{n+2} = id ox e_n    p_{n+2} = id ox p_n
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Callable

from .scalars import Scalar, parse_exponent

WORD_DEFINITIONS = {
    "f": "b^-2 (id ox (m e)) m*",
    "e1": "u u*",
    "e2": "d^-2 m* m",
    "p1": "e",
    "p2": "f",
    "v": "m* u",
}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<tensor>ox\b|⊗)
  | (?P<compose>\.|∘)
  | (?P<star>\*)
  | (?P<brace>\{[^}]*\})
  | (?P<punct>[()\[\],+\-])
  | (?P<name>id_\d+|id\b|[ep]\d+|[muefv](?![A-Za-z0-9_]))
  | (?P<sym>[bwd](?:\^(?:-?\d+|\(\s*-?\d+\s*(?:/\s*\d+\s*)?\)))?)
  | (?P<num>\d+(?:/\d+)?)
    """,
    re.VERBOSE,
)


class WordSyntaxError(ValueError):
    pass


def tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group()))
        pos = m.end()
    return out


def _scalar_token(kind: str, value: str) -> Scalar:
    if kind == "brace":
        return Scalar.parse(value[1:-1])
    if kind == "num":
        return Scalar.parse(value)
    sym, _, exp = value.partition("^")
    e = parse_exponent(exp) if exp else 1
    return {"b": Scalar.beta, "w": Scalar.omega, "d": Scalar.delta}[sym](e)


class _Parser:
    _ATOM_START = {"name", "sym", "num", "brace"}

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise WordSyntaxError(f"expected {value or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.i != len(self.tokens):
            raise WordSyntaxError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return node

    def expr(self):
        terms = []
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        terms.append((sign, self.chain()))
        while self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            terms.append((sign, self.chain()))
        return ("sum", terms) if len(terms) > 1 or terms[0][0] < 0 else terms[0][1]

    def _starts_atom(self):
        kind, value = self.peek()
        return kind in self._ATOM_START or value in ("(", "[")

    def chain(self):
        factors = [self.tensor()]
        while True:
            if self.peek()[0] == "compose":
                self.take()
                factors.append(self.tensor())
            elif self._starts_atom():
                factors.append(self.tensor())
            else:
                break
        return ("compose", factors) if len(factors) > 1 else factors[0]

    def tensor(self):
        factors = [self.post()]
        while self.peek()[0] == "tensor":
            self.take()
            factors.append(self.post())
        return ("tensor", factors) if len(factors) > 1 else factors[0]

    def post(self):
        node = self.atom()
        while self.peek()[0] == "star":
            self.take()
            node = ("adj", node)
        return node

    def atom(self):
        kind, value = self.peek()
        if kind == "name":
            self.take()
            return ("name", value)
        if kind in ("sym", "num", "brace"):
            self.take()
            return ("scalar", _scalar_token(kind, value))
        if value == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if value == "[":
            self.take("[")
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take("]")
            return ("comm", a, b)
        if value is None:
            raise WordSyntaxError(f"unexpected end of word in {self.text!r}")
        raise WordSyntaxError(f"unexpected {value!r} in {self.text!r}")


def parse_word(text: str):
    return _Parser(text).parse()


# -- size matching (x = x ⊗ 1) ----------------------------------------------------


def match_compose(a, b):
    """Pad so that ``a ∘ b`` is defined."""
    if a.dom > b.cod:
        b = b.pad(a.dom - b.cod)
    elif a.dom < b.cod:
        a = a.pad(b.cod - a.dom)
    return a, b


def match_sum(a, b):
    """Pad so that ``a`` and ``b`` share a signature."""
    da, db = a.cod - a.dom, b.cod - b.dom
    if da != db:
        raise ValueError(f"signatures ({a.dom},{a.cod}) and ({b.dom},{b.cod}) cannot be matched by padding")
    if a.dom > b.dom:
        b = b.pad(a.dom - b.dom)
    elif a.dom < b.dom:
        a = a.pad(b.dom - a.dom)
    return a, b


@dataclass
class Namespace:
    """Evaluation context: a model supplies some names, an identity family and
    a way to turn a Scalar into an endomorphism of the object 0."""

    resolve: Callable[[str], Any]
    identity: Callable[[int], Any]
    scalar: Callable[[Scalar], Any]
    derive: bool = True
    _cache: dict = field(default_factory=dict, repr=False)

    def lookup(self, name: str):
        if name in self._cache:
            return self._cache[name]
        value = None
        if name == "id":
            value = self.identity(1)
        elif name.startswith("id_"):
            value = self.identity(int(name[3:]))
        else:
            value = self.resolve(name)
        if value is None and self.derive:
            if name in WORD_DEFINITIONS:
                value = self.evaluate(WORD_DEFINITIONS[name])
            elif name[0] in "ep" and name[1:].isdigit() and int(name[1:]) > 2:
                value = self.identity(1).tensor(self.lookup(f"{name[0]}{int(name[1:]) - 2}"))
        if value is None:
            raise KeyError(f"unknown generator {name!r}")
        self._cache[name] = value
        return value

    def evaluate(self, word):
        node = parse_word(word) if isinstance(word, str) else word
        return self._eval(node)

    def _eval(self, node):
        tag = node[0]
        if tag == "name":
            return self.lookup(node[1])
        if tag == "scalar":
            return self.scalar(node[1])
        if tag == "adj":
            return self._eval(node[1]).adjoint()
        if tag == "tensor":
            out = self._eval(node[1][0])
            for sub in node[1][1:]:
                out = out.tensor(self._eval(sub))
            return out
        if tag == "compose":
            out = self._eval(node[1][-1])
            for sub in reversed(node[1][:-1]):
                a, b = match_compose(self._eval(sub), out)
                out = a.compose(b)
            return out
        if tag == "sum":
            out = None
            for sign, sub in node[1]:
                x = self._eval(sub)
                if sign < 0:
                    x = -x
                if out is None:
                    out = x
                else:
                    a, b = match_sum(out, x)
                    out = a + b
            return out
        if tag == "comm":
            x, y = self._eval(node[1]), self._eval(node[2])
            a, b = match_compose(x, y)
            c, d = match_compose(y, x)
            p, q = match_sum(a.compose(b), c.compose(d))
            return p - q
        raise ValueError(f"bad node {node!r}")
