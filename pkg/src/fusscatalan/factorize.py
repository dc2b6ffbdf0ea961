"""Rewrite FC basis diagrams as words in the generators m, u, e.

A diagram x ∈ FC(l, k) is bent to x' = (x ⊗ 1_l) R_l ∈ FC(0, l+k), where R_l
is the nested rainbow built from v = m* u.  Every x' is reached from
u^{⊗(l+k)} by a shortest word in the Jones projections e_i, p_i (breadth-first
over link states, generators tried in a fixed order), and x is recovered as
(1_k ⊗ R_l*) (x' ⊗ 1_l).  When l > k the adjoint is factored instead.
"""

from __future__ import annotations

from functools import lru_cache

from . import diagrams as dg
from .algebra import generators, loop_scalar
from .diagrams import FC, Diagram
from .scalars import Scalar


def rainbow_word(l: int) -> str:
    if l == 0:
        return "1"
    word = "v"
    for j in range(1, l):
        word = f"(id_{j} ox v ox id_{j}) {word}"
    return word


def _unit_power_word(t: int) -> str:
    return " ox ".join(["u"] * t) if t else "1"


def _generator_names(t: int) -> list[str]:
    names = []
    for i in range(1, 2 * t):
        names += [f"e{i}", f"p{i}"]
    return names


@lru_cache(maxsize=None)
def link_state_words(t: int) -> dict[Diagram, tuple[tuple[str, ...], Scalar]]:
    """For every reachable diagram D of FC(0, t): (names, s) with
    names[-1] ... names[0] applied to u^{⊗t} equal to s · D."""
    g = generators(FC)
    start = dg.identity(FC, 0)
    s0 = Scalar.delta(-t / 2) if t else Scalar.const(1)
    for _ in range(t):
        start = dg.tensor(start, dg.unit_cap(FC))
    found = {start: ((), s0)}
    frontier = [start]
    ops = []
    for name in _generator_names(t):
        gen = g.lookup(name)
        (diagram, coeff), = gen.items()
        pad = t - diagram.dom
        if pad:
            diagram = dg.tensor(diagram, dg.identity(FC, pad))
        ops.append((name, diagram, coeff))
    while frontier:
        nxt = []
        for state in frontier:
            word, s = found[state]
            for name, diagram, coeff in ops:
                new, white, black = dg.compose_raw(diagram, state)
                if new in found:
                    continue
                found[new] = (word + (name,), s * coeff * loop_scalar(FC, white, black))
                nxt.append(new)
        frontier = nxt
    return found


def bend(d: Diagram) -> Diagram:
    """Hom(l, k) -> Hom(0, l+k) on diagrams: codomain row followed by the
    reversed domain row."""
    sig = dg.Signature(d.kind, 0, d.dom + d.cod)
    t, b = d.sig.top, d.sig.bottom

    def move(i):
        return b + (t - 1 - i) if i < t else i - t

    return Diagram.from_pairs(sig, [(move(i), move(j)) for i, j in d.pairs])


def factor_word(d: Diagram) -> tuple[str, Scalar]:
    """(word, s) with the word evaluating to s · d in the diagram model."""
    if d.kind != FC:
        raise ValueError("factorization is implemented for FC diagrams")
    l, k = d.dom, d.cod
    if l > k:
        # keep the bending rainbow on the smaller side; s is real
        word, s = factor_word(dg.adjoint(d))
        return f"({word})*", s
    t = l + k
    table = link_state_words(t)
    target = bend(d)
    if target not in table:
        raise LookupError(f"no Jones word reaches {target}")
    names, s = table[target]
    inner = _unit_power_word(t)
    if names:
        inner = " ".join(reversed(names)) + f" ({inner})"
    if l == 0:
        return inner, s
    cap = f"id_{k} ox ({rainbow_word(l)})*" if k else f"({rainbow_word(l)})*"
    return f"({cap}) (({inner}) ox id_{l})", s
