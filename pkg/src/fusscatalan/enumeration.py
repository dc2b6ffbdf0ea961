"""Enumeration and counting of TL / FC diagram bases."""

from __future__ import annotations

from functools import lru_cache

from .diagrams import FC, TL, Diagram, Signature, color

DEFAULT_BUDGET = 32
COUNT_BUDGET = 400


class BudgetExceeded(ValueError):
    pass


def _boundary_colors(sig: Signature) -> tuple[str, ...]:
    if sig.kind == TL:
        return ("x",) * sig.size
    return tuple(color(sig.point(sig.from_circular(c))[1]) for c in range(sig.size))


@lru_cache(maxsize=None)
def _interval_counts(colors: tuple[str, ...]) -> dict[tuple[int, int], int]:
    """Number of non-crossing color-respecting matchings of every interval [lo, hi)."""
    n = len(colors)
    count: dict[tuple[int, int], int] = {}
    for lo in range(n + 1):
        count[(lo, lo)] = 1
    for length in range(2, n + 1, 2):
        for lo in range(0, n - length + 1):
            hi = lo + length
            total = 0
            for j in range(lo + 1, hi, 2):
                if colors[j] == colors[lo]:
                    total += count[(lo + 1, j)] * count[(j + 1, hi)]
            count[(lo, hi)] = total
    return count


def dimension(kind: str, m: int, n: int, budget: int = COUNT_BUDGET) -> int:
    """dim Hom(m, n), by memoized interval counting (no materialization)."""
    sig = Signature(kind, m, n)
    if sig.size > budget:
        raise BudgetExceeded(f"{sig.size} points exceeds counting budget {budget}")
    if sig.size % 2:
        return 0
    return _interval_counts(_boundary_colors(sig))[(0, sig.size)]


def enumerate_diagrams(kind: str, m: int, n: int, budget: int = DEFAULT_BUDGET) -> list[Diagram]:
    """All basis diagrams of Hom(m, n), duplicate-free, in canonical order.

    Point 0 of every interval is matched to each color-compatible partner that
    leaves two independently matchable sub-intervals, so only planar matchings
    are ever built.
    """
    sig = Signature(kind, m, n)
    if sig.size > budget:
        raise BudgetExceeded(f"{sig.size} points exceeds enumeration budget {budget}")
    colors = _boundary_colors(sig)
    counts = _interval_counts(colors)
    memo: dict[tuple[int, int], list[tuple[tuple[int, int], ...]]] = {}

    def gen(lo: int, hi: int):
        if (lo, hi) in memo:
            return memo[(lo, hi)]
        if lo == hi:
            out = [()]
        else:
            out = []
            for j in range(lo + 1, hi, 2):
                if colors[j] != colors[lo]:
                    continue
                if not counts[(lo + 1, j)] or not counts[(j + 1, hi)]:
                    continue
                for inner in gen(lo + 1, j):
                    for outer in gen(j + 1, hi):
                        out.append(((lo, j),) + inner + outer)
        memo[(lo, hi)] = out
        return out

    diagrams = []
    for matching in gen(0, sig.size):
        pairs = [(sig.from_circular(a), sig.from_circular(b)) for a, b in matching]
        diagrams.append(Diagram.from_pairs(sig, pairs, check=False))
    diagrams.sort()
    return diagrams


def catalan(k: int) -> int:
    """Catalan numbers by the convolution recurrence C_{k+1} = sum C_i C_{k-i}."""
    c = [1]
    for j in range(k):
        c.append(sum(c[i] * c[j - i] for i in range(j + 1)))
    return c[k]


def embed_by_u(x):
    """Hom(m, n) -> Hom(m, n+1), x |-> x ⊗ u.  Left inverse: (1 ⊗ u*) ∘ -."""
    from .algebra import generators

    return x.tensor(generators(x.kind).u)


def dims_table(kind: str, max_index: int, budget: int = COUNT_BUDGET) -> list[tuple[int, int, int]]:
    return [(m, n, dimension(kind, m, n, budget)) for m in range(max_index + 1) for n in range(max_index + 1)]
