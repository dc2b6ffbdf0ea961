"""Temperley-Lieb and Fuss-Catalan diagrams as canonical planar matchings.

Points are numbered globally: the upper row (domain) is ``0 .. top-1`` left to
right and the lower row (codomain) is ``top .. top+bottom-1`` left to right.
``a ∘ b`` means *b first*: b is drawn above a and b's lower row is glued to
a's upper row.

A TL object is two points; an FC object is four points colored ``w b b w``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

TL = "TL"
FC = "FC"
KINDS = (TL, FC)
POINTS_PER_OBJECT = {TL: 2, FC: 4}

WHITE = "white"
BLACK = "black"


class SignatureError(ValueError):
    """Raised when diagrams or morphisms of incompatible shape are combined."""


def color(position: int) -> str:
    """Standard coloring of a row: w, b, b, w, w, b, b, w, ..."""
    return WHITE if position % 4 in (0, 3) else BLACK


@dataclass(frozen=True, order=True)
class Signature:
    kind: str
    dom: int
    cod: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.dom < 0 or self.cod < 0:
            raise ValueError("object indices must be nonnegative")

    @property
    def top(self) -> int:
        return POINTS_PER_OBJECT[self.kind] * self.dom

    @property
    def bottom(self) -> int:
        return POINTS_PER_OBJECT[self.kind] * self.cod

    @property
    def size(self) -> int:
        return self.top + self.bottom

    def point(self, index: int) -> tuple[str, int]:
        """Global index -> (row, position), row is 't' or 'b'."""
        if index < self.top:
            return "t", index
        return "b", index - self.top

    def index(self, row: str, position: int) -> int:
        return position if row == "t" else self.top + position

    def circular(self, index: int) -> int:
        """Position on the boundary circle: top left->right, then bottom right->left."""
        if index < self.top:
            return index
        return self.top + (self.bottom - 1 - (index - self.top))

    def from_circular(self, c: int) -> int:
        if c < self.top:
            return c
        return self.top + (self.bottom - 1 - (c - self.top))

    def point_color(self, index: int) -> str:
        return color(self.point(index)[1])

    def adjoint(self) -> "Signature":
        return Signature(self.kind, self.cod, self.dom)


@dataclass(frozen=True, order=True)
class Diagram:
    """A planar (and, for FC, color-respecting) perfect matching.

    ``pairs`` is the sorted tuple of ``(i, j)`` with ``i < j``; it is the
    canonical encoding.  Use :meth:`from_pairs` to build a validated diagram.
    """

    sig: Signature
    pairs: tuple[tuple[int, int], ...]
    partner: tuple[int, ...] = field(compare=False, repr=False, default=())

    def __post_init__(self):
        if not self.partner:
            p = [-1] * self.sig.size
            for i, j in self.pairs:
                p[i] = j
                p[j] = i
            object.__setattr__(self, "partner", tuple(p))

    @classmethod
    def from_pairs(cls, sig: Signature, pairs: Iterable[tuple[int, int]], check: bool = True) -> "Diagram":
        canon = tuple(sorted((min(i, j), max(i, j)) for i, j in pairs))
        if check:
            validate(sig, canon)
        return cls(sig, canon)

    @classmethod
    def _from_partner(cls, sig: Signature, partner: list[int]) -> "Diagram":
        pairs = tuple((i, j) for i, j in enumerate(partner) if i < j)
        return cls(sig, pairs, tuple(partner))

    @property
    def kind(self) -> str:
        return self.sig.kind

    @property
    def dom(self) -> int:
        return self.sig.dom

    @property
    def cod(self) -> int:
        return self.sig.cod

    def through_strings(self) -> int:
        t = self.sig.top
        return sum(1 for i, j in self.pairs if i < t <= j)

    def __str__(self) -> str:
        return format_diagram(self)


def validate(sig: Signature, pairs: tuple[tuple[int, int], ...]) -> None:
    seen = set()
    for i, j in pairs:
        if i == j or not (0 <= i < sig.size and 0 <= j < sig.size):
            raise ValueError(f"bad pair {(i, j)} for {sig}")
        if i in seen or j in seen:
            raise ValueError(f"point used twice in {pairs}")
        seen.update((i, j))
    if len(seen) != sig.size:
        raise ValueError(f"pairing does not cover all {sig.size} points")
    if not check_planar(pairs, sig):
        raise ValueError("pairing is not planar")
    if sig.kind == FC:
        for i, j in pairs:
            if sig.point_color(i) != sig.point_color(j):
                raise ValueError(f"string {(i, j)} joins different colors")


def check_planar(pairs: Iterable[tuple[int, int]], sig: Signature) -> bool:
    """Non-crossing test on the boundary circle via bracket matching."""
    n = sig.size
    other = [-1] * n
    for i, j in pairs:
        ci, cj = sig.circular(i), sig.circular(j)
        other[ci] = cj
        other[cj] = ci
    stack: list[int] = []
    for c in range(n):
        o = other[c]
        if o > c:
            stack.append(c)
        else:
            if not stack or stack[-1] != o:
                return False
            stack.pop()
    return not stack


# -- basic diagrams -----------------------------------------------------------


def identity(kind: str, k: int) -> Diagram:
    sig = Signature(kind, k, k)
    t = sig.top
    return Diagram(sig, tuple((i, t + i) for i in range(t)))


def cap_cup(kind: str, k: int, caps: Iterable[tuple[int, int]]) -> Diagram:
    """Endomorphism of k objects with the given position pairs capped in both rows
    and all remaining points joined vertically."""
    sig = Signature(kind, k, k)
    t = sig.top
    pairs = []
    used = set()
    for a, b in caps:
        pairs.append((a, b))
        pairs.append((t + a, t + b))
        used.update((a, b))
    pairs.extend((i, t + i) for i in range(t) if i not in used)
    return Diagram.from_pairs(sig, pairs)


def unit_cap(kind: str) -> Diagram:
    """The (unnormalized) cap 0 -> 1: a single cap for TL, a nested double cap for FC."""
    sig = Signature(kind, 0, 1)
    if kind == TL:
        return Diagram.from_pairs(sig, [(0, 1)])
    return Diagram.from_pairs(sig, [(0, 3), (1, 2)])


def multiplication_cup(kind: str) -> Diagram:
    """The (unnormalized) multiplication 2 -> 1: verticals flanking a middle (double) cup."""
    sig = Signature(kind, 2, 1)
    if kind == TL:
        return Diagram.from_pairs(sig, [(0, 4), (1, 2), (3, 5)])
    # top 0..7, bottom 8..11
    return Diagram.from_pairs(sig, [(0, 8), (1, 9), (2, 5), (3, 4), (6, 10), (7, 11)])


def jones_caps(kind: str, i: int) -> tuple[int, list[tuple[int, int]]]:
    """Smallest number of objects and the capped positions of the i-th bicolored
    Jones diagram (for TL, the usual i-th TL diagram)."""
    if i < 1:
        raise ValueError("Jones indices start at 1")
    if kind == TL:
        return (i + 2) // 2, [(i - 1, i)]
    k = i // 2 + 1
    return k, [(2 * i - 2, 2 * i + 1), (2 * i - 1, 2 * i)]


def projection_caps(i: int) -> tuple[int, list[tuple[int, int]]]:
    """FC only: the i-th one-colored projection caps positions (2i-1, 2i);
    black for odd i, white for even i."""
    if i < 1:
        raise ValueError("projection indices start at 1")
    return i // 2 + 1, [(2 * i - 1, 2 * i)]


# -- operations ---------------------------------------------------------------


def compose_raw(a: Diagram, b: Diagram) -> tuple[Diagram, int, int]:
    """``a ∘ b`` (b first).  Returns the glued diagram and the number of erased
    white and black loops.  TL loops are reported in the white counter."""
    if a.kind != b.kind:
        raise SignatureError(f"cannot compose {a.kind} with {b.kind}")
    if a.dom != b.cod:
        raise SignatureError(f"cannot compose {a.sig} after {b.sig}")
    pa, pb = a.partner, b.partner
    tb = b.sig.top
    mid = a.sig.top
    nb = a.sig.bottom
    sig = Signature(a.kind, b.dom, a.cod)
    out = [-1] * (tb + nb)
    seen_mid = [False] * mid

    def walk_from_b(q: int) -> int:
        # q is an index in b just reached; follow strings until an outer endpoint
        while True:
            if q < tb:
                return q
            k = q - tb
            seen_mid[k] = True
            r = pa[k]
            if r >= mid:
                return tb + (r - mid)
            seen_mid[r] = True
            q = pb[tb + r]

    for i in range(tb):
        if out[i] < 0:
            j = walk_from_b(pb[i])
            out[i], out[j] = j, i
    for j in range(nb):
        g = tb + j
        if out[g] < 0:
            r = pa[mid + j]
            if r >= mid:
                e = tb + (r - mid)
            else:
                seen_mid[r] = True
                e = walk_from_b(pb[tb + r])
            out[g], out[e] = e, g

    white = black = 0
    for k in range(mid):
        if seen_mid[k]:
            continue
        c = color(k)
        x = k
        while not seen_mid[x]:
            seen_mid[x] = True
            y = pb[tb + x] - tb
            seen_mid[y] = True
            x = pa[y]
        if a.kind == FC and c == BLACK:
            black += 1
        else:
            white += 1
    return Diagram._from_partner(sig, out), white, black


def tensor(a: Diagram, b: Diagram) -> Diagram:
    """Horizontal concatenation, b to the right of a."""
    if a.kind != b.kind:
        raise SignatureError(f"cannot tensor {a.kind} with {b.kind}")
    ta, ba = a.sig.top, a.sig.bottom
    tb = b.sig.top
    sig = Signature(a.kind, a.dom + b.dom, a.cod + b.cod)
    top = ta + tb

    def ma(i):
        return i if i < ta else top + (i - ta)

    def mb(i):
        return ta + i if i < tb else top + ba + (i - tb)

    pairs = [(ma(i), ma(j)) for i, j in a.pairs] + [(mb(i), mb(j)) for i, j in b.pairs]
    return Diagram.from_pairs(sig, pairs, check=False)


def adjoint(a: Diagram) -> Diagram:
    """Upside-down reflection."""
    t, bt = a.sig.top, a.sig.bottom
    sig = a.sig.adjoint()

    def flip(i):
        return bt + i if i < t else i - t

    return Diagram.from_pairs(sig, [(flip(i), flip(j)) for i, j in a.pairs], check=False)


def tl_to_fc(a: Diagram) -> Diagram:
    """Double every TL point into an adjacent like-colored FC pair; each TL string
    becomes two nested parallel strings."""
    if a.kind != TL:
        raise ValueError("tl_to_fc expects a TL diagram")
    sig = Signature(FC, a.dom, a.cod)
    pairs = []
    for i, j in a.pairs:
        ci, cj = sorted((a.sig.circular(i), a.sig.circular(j)))
        pairs.append((sig.from_circular(2 * ci), sig.from_circular(2 * cj + 1)))
        pairs.append((sig.from_circular(2 * ci + 1), sig.from_circular(2 * cj)))
    return Diagram.from_pairs(sig, pairs)


# -- text encoding --------------------------------------------------------------


def format_diagram(d: Diagram) -> str:
    def name(i):
        row, pos = d.sig.point(i)
        return f"{row}{pos + 1}"

    body = ", ".join(f"{name(i)}-{name(j)}" for i, j in d.pairs)
    return f"{d.kind} {d.dom} {d.cod} : {body}"


_DIAGRAM_RE = re.compile(r"^\s*(TL|FC)\s+(\d+)\s+(\d+)\s*:(.*)$")
_PAIR_RE = re.compile(r"\(?\s*([tb])(\d+)\s*[-,]\s*([tb])(\d+)\s*\)?")


def parse_diagram(text: str) -> Diagram:
    """Parse ``"FC 1 1 : t1-b1, t2-t3, t4-b4, b2-b3"`` (``(t1,t2)(b1,b2)`` also accepted)."""
    m = _DIAGRAM_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse diagram {text!r}")
    sig = Signature(m.group(1), int(m.group(2)), int(m.group(3)))
    pairs = []
    body = m.group(4)
    for pm in _PAIR_RE.finditer(body):
        r1, p1, r2, p2 = pm.groups()
        pairs.append((sig.index(r1, int(p1) - 1), sig.index(r2, int(p2) - 1)))
    leftover = _PAIR_RE.sub("", body).replace(",", "").strip()
    if leftover:
        raise ValueError(f"unparsed text {leftover!r} in diagram")
    for i, j in pairs:
        for row, pos in (sig.point(i), sig.point(j)):
            limit = sig.top if row == "t" else sig.bottom
            if pos >= limit:
                raise ValueError(f"point {row}{pos + 1} out of range for {sig}")
    return Diagram.from_pairs(sig, pairs)
