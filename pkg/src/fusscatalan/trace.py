"""Unnormalized Markov trace, Gram matrices, positivity and rank."""

from __future__ import annotations

import numpy as np

from . import diagrams as dg
from .algebra import Morphism, generators, loop_scalar
from .diagrams import FC, Diagram, SignatureError
from .enumeration import DEFAULT_BUDGET, enumerate_diagrams
from .scalars import Scalar

DEFAULT_TOL = 1e-9


def closure_step(x: Morphism, v: Morphism) -> Morphism:
    """End(n) -> End(n-1):  x |-> (1_{n-1} ⊗ v*) (x ⊗ 1) (1_{n-1} ⊗ v)."""
    n = x.dom
    ident = Morphism.identity(x.kind, n - 1)
    return ident.tensor(v.adjoint()).compose(x.pad(1)).compose(ident.tensor(v))


def markov_close(x: Morphism) -> Scalar:
    """Close x ∈ End(n) down to End(0) with v = m* u, n times.  identity(n) |-> d^{2n}."""
    if x.dom != x.cod:
        raise SignatureError(f"markov_close needs a square signature, got {x.sig}")
    g = generators(x.kind)
    v = g.m.adjoint().compose(g.u)
    while x.dom > 0:
        x = closure_step(x, v)
    return x.as_scalar()


def closure_loops(d: Diagram) -> tuple[int, int]:
    """Loops (white, black) of the planar right closure of an endomorphism diagram,
    counted directly on the diagram: top point i is joined to bottom point i."""
    if d.dom != d.cod:
        raise SignatureError("closure needs a square diagram")
    t = d.sig.top
    seen = [False] * d.sig.size
    white = black = 0
    for start in range(t):
        if seen[start]:
            continue
        c = dg.color(start)
        x = start
        while not seen[x]:
            seen[x] = True
            y = d.partner[x]
            seen[y] = True
            # hop across the closing strand
            x = y - t if y >= t else y + t
        if d.kind == FC and c == dg.BLACK:
            black += 1
        else:
            white += 1
    return white, black


def diagram_trace(d: Diagram) -> Scalar:
    return loop_scalar(d.kind, *closure_loops(d))


def gram_entry(x: Diagram, y: Diagram) -> Scalar:
    """Markov trace of y* ∘ x."""
    d, white, black = dg.compose_raw(dg.adjoint(y), x)
    return loop_scalar(x.kind, white, black) * diagram_trace(d)


def gram_matrix_symbolic(kind: str, m: int, n: int, budget: int = DEFAULT_BUDGET) -> tuple[list[Diagram], list[list[Scalar]]]:
    basis = enumerate_diagrams(kind, m, n, budget)
    return basis, [[gram_entry(x, y) for y in basis] for x in basis]


def gram_matrix(kind: str, m: int, n: int, beta0: float, omega0: float, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    _, sym = gram_matrix_symbolic(kind, m, n, budget)
    g = np.array([[c.eval(beta0, omega0) for c in row] for row in sym], dtype=float).reshape(len(sym), len(sym))
    if not np.allclose(g, g.T, atol=1e-9, rtol=1e-12):
        raise AssertionError("Gram matrix is not symmetric")
    return g


def spectrum(g: np.ndarray) -> np.ndarray:
    if g.size == 0:
        return np.zeros(0)
    return np.linalg.eigvalsh((g + g.T) / 2)


def gram_rank(kind: str, m: int, n: int, beta0: float, omega0: float, tol: float = DEFAULT_TOL,
              budget: int = DEFAULT_BUDGET) -> tuple[int, bool]:
    """(numeric rank, positive semidefinite) of the Gram form."""
    ev = spectrum(gram_matrix(kind, m, n, beta0, omega0, budget))
    rank = int(np.sum(np.abs(ev) > tol))
    positive = bool(ev.size == 0 or ev.min() >= -tol)
    return rank, positive


is_positive = gram_rank
