"""Relation suites as data, and a model-independent checker.

A relation is a list of equations; an equation is a chain of words that must
all be equal (``A = B = C``).  Suites:

* ``T1``      -- the presentation of TL² by u, m
* ``T2``      -- the presentation of FC by m, u, e (with f defined from m, e)
* ``BJ``      -- the Jones projection relations (a)-(e) up to a maximal index
* ``reduced`` -- the reduced forms (alpha)-(epsilon)
* ``star``    -- the formulas (x), (y), (z), (t)
* ``useful``  -- m(e ⊗ e) = e m (1 ⊗ e) = e m e
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .algebra import Morphism, generators
from .diagrams import FC, TL
from .words import Namespace, match_sum, parse_word


@dataclass(frozen=True)
class Relation:
    id: str
    equations: tuple[tuple[str, ...], ...]


def _rel(rid: str, *equations: str) -> Relation:
    return Relation(rid, tuple(tuple(s.strip() for s in eq.split("=")) for eq in equations))


T1 = [
    _rel("i", "m m* = d^2"),
    _rel("ii", "u* u = 1"),
    _rel("iii", "m (m ox id) = m (id ox m)"),
    _rel("iv", "m (id ox u) = m (u ox id) = id"),
    _rel("v", "(m ox id) (id ox m*) = (id ox m) (m* ox id) = m* m"),
]

T2 = [
    Relation("1", tuple(eq for r in T1 for eq in r.equations)),
    _rel("2", "e = e e = e*", "f = f*", "(id ox f) f = f (id ox f)"),
    _rel("3", "e u = u"),
    _rel("4", "m e m* = m (id ox e) m* = b^2"),
    _rel("5", "m m (e ox e ox e) = e m m (e ox id ox e)"),
]

REDUCED = [
    _rel("alpha", "e1 e1 = e1", "e2 e2 = e2", "e1 e2 e1 = d^-2 e1", "e2 e1 e2 = d^-2 e2"),
    _rel("beta", "p1 p1 = p1", "p2 p2 = p2", "[p1, p2] = [id ox p1, p2] = [id ox p2, p2] = 0"),
    _rel("gamma", "[e2, id ox p2] = [p2, id ox e2] = 0", "e1 p1 = p1 e1 = e1", "e2 p2 = p2 e2 = e2"),
    _rel("delta1", "e1 p2 e1 = b^-2 e1", "(id ox e1) p2 (id ox e1) = b^-2 (id ox e1)"),
    _rel("delta2", "e2 p1 e2 = e2 (id ox p1) e2 = w^-2 e2"),
    _rel("epsilon1", "b^2 p2 e1 p2 = w^2 p1 e2 p1 = p1 p2"),
    _rel("epsilon2", "b^2 p2 (id ox e1) p2 = w^2 (id ox p1) e2 (id ox p1) = (id ox p1) p2"),
]

STAR = [
    _rel("x", "e m* m e = b^2 f* e"),
    _rel("y", "(id ox e) m* m (id ox e) = b^2 f* (id ox e)"),
    _rel("z", "f* = f* f"),
    _rel("t", "[e, f] = [id ox e, f] = [m* m, id ox f] = [f, id ox (m* m)] = 0"),
]

USEFUL = [
    _rel("useful", "m (e ox e) = e m (id ox e) = e m e"),
]


def bisch_jones(max_index: int = 4) -> list[Relation]:
    """Schemas (a)-(e) instantiated for all indices 1 <= i, j <= max_index."""
    n = max_index
    rng = range(1, n + 1)
    a, b, c, d, e = [], [], [], [], []
    for i in rng:
        a.append(f"e{i} e{i} = e{i}")
        b.append(f"p{i} p{i} = p{i}")
        c.append(f"e{i} p{i} = p{i} e{i} = e{i}")
        for j in rng:
            if abs(i - j) >= 2:
                if i < j:
                    a.append(f"e{i} e{j} = e{j} e{i}")
                c.append(f"p{i} e{j} = e{j} p{i}")
            if abs(i - j) == 1:
                a.append(f"e{i} e{j} e{i} = d^-2 e{i}")
            if i < j:
                b.append(f"p{i} p{j} = p{j} p{i}")
            if abs(i - j) == 1:
                # i even: e_odd p_even e_odd, p_even e_odd p_even
                if i % 2 == 0:
                    d.append(f"e{j} p{i} e{j} = b^-2 e{j}")
                    e.append(f"p{i} e{j} p{i} = b^-2 p{j} p{i}")
                else:
                    d.append(f"e{j} p{i} e{j} = w^-2 e{j}")
                    e.append(f"p{i} e{j} p{i} = w^-2 p{j} p{i}")
    return [_rel(f"{name}", *eqs) for name, eqs in zip("abcde", (a, b, c, d, e))]


SUITES = {
    "T1": lambda max_index: T1,
    "T2": lambda max_index: T2,
    "BJ": bisch_jones,
    "reduced": lambda max_index: REDUCED,
    "star": lambda max_index: STAR,
    "useful": lambda max_index: USEFUL,
}


def suite(name: str, max_index: int = 4) -> list[Relation]:
    try:
        return list(SUITES[name](max_index))
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None


@dataclass
class RelationResult:
    id: str
    holds: bool
    residual: float
    difference: Any  # first nonzero difference, or None
    failing: str | None = None

    def __str__(self):
        status = "ok" if self.holds else "FAIL"
        return f"{self.id}: {status}" + ("" if self.holds else f" ({self.failing})")


def check(
    relations: Sequence[Relation],
    ns: Namespace,
    size: Callable[[Any], float],
    tol: float = 0.0,
) -> list[RelationResult]:
    """Evaluate every equation chain in ``ns``.  ``size`` measures a difference
    (number of nonzero terms for exact models, max abs entry for numeric)."""
    results = []
    for rel in relations:
        worst = 0.0
        diff = None
        failing = None
        for eq in rel.equations:
            values = [ns.evaluate(parse_word(w)) for w in eq]
            for k in range(len(values) - 1):
                lhs, rhs = match_sum(values[k], values[k + 1])
                delta = lhs - rhs
                s = size(delta)
                if s > worst:
                    worst = s
                if s > tol and failing is None:
                    diff = delta
                    failing = f"{eq[k]} = {eq[k + 1]}"
        results.append(RelationResult(rel.id, failing is None, worst, diff, failing))
    return results


def diagram_namespace(kind: str, mode: str = "explicit") -> Namespace:
    """Namespace over exact diagram morphisms.

    ``explicit`` resolves every generator to its drawn diagram; ``words``
    supplies only m, u, e and derives f, e_i, p_i, v from them.
    """
    g = generators(kind)
    if mode == "explicit":
        resolve = g.lookup
    elif mode == "words":
        base = {"m": g.m, "u": g.u, "e": g.e}
        resolve = base.get
    else:
        raise ValueError(f"unknown generator mode {mode!r}")
    return Namespace(
        resolve=resolve,
        identity=lambda k: Morphism.identity(kind, k),
        scalar=lambda c: Morphism.scalar(kind, c),
    )


def verify_relations(name: str, kind: str | None = None, mode: str = "explicit", max_index: int = 4):
    """Run a suite exactly in the diagram model; T1 defaults to TL, the rest to FC."""
    if kind is None:
        kind = TL if name == "T1" else FC
    return check(suite(name, max_index), diagram_namespace(kind, mode), size=len)
