"""Operator realization on a finite-dimensional C*-algebra inclusion B ⊂ D.

Elements of a multi-matrix algebra are flat vectors: the row-major entries of
each block, concatenated.  The standard basis of this flat space is the set of
matrix units.  Operators D^{⊗a} -> D^{⊗b} are (dim^b × dim^a) complex matrices
in the orthonormal GNS basis of <x, y> = φ(y* x) with φ = Tr(Q ·).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import numpy as np

from .algebra import Morphism
from .diagrams import FC
from .enumeration import enumerate_diagrams
from .factorize import factor_word
from .relations import RelationResult, check, suite
from .scalars import Scalar
from .words import Namespace

OP_TOL = 1e-9


class CertificationError(ValueError):
    pass


# -- algebras and states ------------------------------------------------------------


@dataclass(frozen=True)
class MultiMatrixAlgebra:
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(n) for n in self.blocks))
        if not self.blocks or any(n < 1 for n in self.blocks):
            raise ValueError(f"block sizes must be positive and nonempty, got {self.blocks}")

    @property
    def dim(self) -> int:
        return sum(n * n for n in self.blocks)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for n in self.blocks:
            out.append(acc)
            acc += n * n
        return tuple(out)

    def split(self, x: np.ndarray) -> list[np.ndarray]:
        return [x[o:o + n * n].reshape(n, n) for o, n in zip(self.offsets, self.blocks)]

    def join(self, blocks) -> np.ndarray:
        return np.concatenate([np.asarray(b, dtype=complex).ravel() for b in blocks])

    def unit(self) -> np.ndarray:
        return self.join([np.eye(n) for n in self.blocks])

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.join([a @ b for a, b in zip(self.split(x), self.split(y))])

    def star(self, x: np.ndarray) -> np.ndarray:
        return self.join([a.conj().T for a in self.split(x)])


@dataclass
class AlgebraState:
    """φ(x) = Σ_blocks Tr(Q_block x_block) with each Q_block positive definite."""

    algebra: MultiMatrixAlgebra
    Q: tuple[np.ndarray, ...]

    def __post_init__(self):
        self.Q = tuple(np.atleast_2d(np.asarray(q, dtype=complex)) for q in self.Q)
        if len(self.Q) != len(self.algebra.blocks):
            raise ValueError("one density block per algebra block is required")
        for q, n in zip(self.Q, self.algebra.blocks):
            if q.shape != (n, n):
                raise ValueError(f"density block of shape {q.shape}, expected {(n, n)}")
            if not np.allclose(q, q.conj().T, atol=1e-12):
                raise ValueError("density blocks must be Hermitian")
        total = sum(np.trace(q).real for q in self.Q)
        if abs(total - 1) > 1e-10:
            raise ValueError(f"state is not normalized: Σ Tr(Q) = {total}")

    def __call__(self, x: np.ndarray) -> complex:
        return sum(np.trace(q @ b) for q, b in zip(self.Q, self.algebra.split(x)))

    def inner(self, x: np.ndarray, y: np.ndarray) -> complex:
        """<x, y> = φ(y* x)."""
        return self(self.algebra.multiply(self.algebra.star(y), x))

    def is_positive_definite(self) -> bool:
        return all(np.linalg.eigvalsh(q).min() > 0 for q in self.Q)

    def modular_automorphism(self, x: np.ndarray) -> np.ndarray:
        """σ with φ(ab) = φ(b σ(a)):  σ(a) = Q a Q^-1."""
        return self.algebra.join([q @ b @ np.linalg.inv(q) for q, b in zip(self.Q, self.algebra.split(x))])

    @classmethod
    def from_weights(cls, algebra: MultiMatrixAlgebra, weights) -> "AlgebraState":
        """Q_block = w_block · 1 (trace states)."""
        return cls(algebra, tuple(w * np.eye(n) for w, n in zip(weights, algebra.blocks)))


def canonical_trace(D: MultiMatrixAlgebra) -> AlgebraState:
    """Normalized trace of the left regular representation: block i acts on itself
    with multiplicity n_i, so Q_i = (n_i / dim D) · 1."""
    return AlgebraState.from_weights(D, [n / D.dim for n in D.blocks])


def canonical_trace_weights(D: MultiMatrixAlgebra) -> list[Fraction]:
    return [Fraction(n, D.dim) for n in D.blocks]


def gns_basis(state: AlgebraState, unit_first: bool = False) -> np.ndarray:
    """Columns are flat coordinates of an orthonormal basis for <x, y> = φ(y* x).

    Per block with Q = V diag(q) V*, the scaled rotated units V e_rc V* / sqrt(q_c)
    are orthonormal.  With ``unit_first`` the unit (of norm φ(1) = 1) is placed
    first and the rest is re-orthonormalized.
    """
    if not state.is_positive_definite():
        raise ValueError("Q is not positive definite")
    A = state.algebra
    cols = []
    for bi, (n, q) in enumerate(zip(A.blocks, state.Q)):
        vals, vecs = np.linalg.eigh(q)
        for r in range(n):
            for c in range(n):
                unit = np.zeros((n, n), dtype=complex)
                unit[r, c] = 1
                block = vecs @ unit @ vecs.conj().T / math.sqrt(vals[c])
                blocks = [np.zeros((m, m), dtype=complex) for m in A.blocks]
                blocks[bi] = block
                cols.append(A.join(blocks))
    basis = np.column_stack(cols)
    if unit_first:
        # in GNS coordinates the inner product is the standard one
        u = np.linalg.solve(basis, A.unit())
        qmat, _ = np.linalg.qr(np.column_stack([u, np.eye(A.dim)]))
        qmat = qmat[:, :A.dim]
        qmat[:, 0] *= np.vdot(qmat[:, 0], u) / abs(np.vdot(qmat[:, 0], u))
        basis = basis @ qmat
    return basis


def gns_basis_split(inclusion: "AlgebraInclusion", state: AlgebraState) -> np.ndarray:
    """Orthonormal basis whose first dim(B) vectors span the embedded B."""
    basis = gns_basis(state)
    y = np.linalg.solve(basis, inclusion.embedding_matrix)
    q, _ = np.linalg.qr(np.column_stack([y, np.eye(basis.shape[0])]))
    return basis @ q[:, :basis.shape[0]]


def gns_gram(state: AlgebraState, basis: np.ndarray) -> np.ndarray:
    k = basis.shape[1]
    return np.array([[state.inner(basis[:, j], basis[:, i]) for j in range(k)] for i in range(k)])


# -- inclusions ---------------------------------------------------------------------


@dataclass
class AlgebraInclusion:
    """B ⊂ D given by a multiplicity matrix Λ (rows: D-blocks, cols: B-blocks).

    In each D-block the B-blocks sit along the diagonal in column order, each
    repeated Λ_ij times.
    """

    B: MultiMatrixAlgebra
    D: MultiMatrixAlgebra
    multiplicity: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        self.multiplicity = tuple(tuple(int(v) for v in row) for row in self.multiplicity)
        lam = self.multiplicity
        if len(lam) != len(self.D.blocks) or any(len(r) != len(self.B.blocks) for r in lam):
            raise ValueError("multiplicity matrix has the wrong shape")
        if any(v < 0 for r in lam for v in r):
            raise ValueError("multiplicities must be nonnegative")
        for i, n in enumerate(self.D.blocks):
            if n != sum(v * m for v, m in zip(lam[i], self.B.blocks)):
                raise ValueError(f"embedding is not unital in D-block {i}")
        for j in range(len(self.B.blocks)):
            if not any(lam[i][j] for i in range(len(lam))):
                raise ValueError(f"B-block {j} is not embedded (not injective)")

    def _placements(self):
        """(D-block, offset, B-block) for every diagonal copy."""
        out = []
        for i, row in enumerate(self.multiplicity):
            off = 0
            for j, mult in enumerate(row):
                for _ in range(mult):
                    out.append((i, off, j))
                    off += self.B.blocks[j]
        return out

    def embed(self, x: np.ndarray) -> np.ndarray:
        xb = self.B.split(x)
        blocks = [np.zeros((n, n), dtype=complex) for n in self.D.blocks]
        for i, off, j in self._placements():
            m = self.B.blocks[j]
            blocks[i][off:off + m, off:off + m] = xb[j]
        return self.D.join(blocks)

    @cached_property
    def embedding_matrix(self) -> np.ndarray:
        return np.column_stack([self.embed(np.eye(self.B.dim)[:, k]) for k in range(self.B.dim)])

    def restrict(self, state: AlgebraState) -> AlgebraState:
        """φ|_B as a state on B: sum of the diagonal compressions of Q over all copies."""
        qs = [np.zeros((m, m), dtype=complex) for m in self.B.blocks]
        for i, off, j in self._placements():
            m = self.B.blocks[j]
            qs[j] += state.Q[i][off:off + m, off:off + m]
        return AlgebraState(self.B, tuple(qs))

    def index(self) -> Fraction:
        return Fraction(self.D.dim, self.B.dim)


def product_inclusion(b_blocks, w_blocks, qb=None, qw=None) -> tuple[AlgebraInclusion, AlgebraState]:
    """B ⊂ B ⊗ W with the product state φ ⊗ ψ (canonical traces by default).

    D-blocks are ordered (j, k) with j over B-blocks; block (j, k) is M_{w_k} ⊗ M_{m_j}
    so that b ↦ b ⊗ 1 places b_j along its diagonal.
    """
    B, W = MultiMatrixAlgebra(tuple(b_blocks)), MultiMatrixAlgebra(tuple(w_blocks))
    qb = canonical_trace(B).Q if qb is None else tuple(np.atleast_2d(np.asarray(q, dtype=complex)) for q in qb)
    qw = canonical_trace(W).Q if qw is None else tuple(np.atleast_2d(np.asarray(q, dtype=complex)) for q in qw)
    d_blocks, lam, qd = [], [], []
    for j, m in enumerate(B.blocks):
        for k, w in enumerate(W.blocks):
            d_blocks.append(m * w)
            lam.append(tuple(w if jj == j else 0 for jj in range(len(B.blocks))))
            qd.append(np.kron(qw[k], qb[j]))
    D = MultiMatrixAlgebra(tuple(d_blocks))
    return AlgebraInclusion(B, D, tuple(lam)), AlgebraState(D, tuple(qd))


def trivial_inclusion(D: MultiMatrixAlgebra) -> AlgebraInclusion:
    """ℂ ⊂ D."""
    return AlgebraInclusion(MultiMatrixAlgebra((1,)), D, tuple((n,) for n in D.blocks))


# -- operators ----------------------------------------------------------------------


@dataclass
class OperatorMorphism:
    """A linear map D^{⊗dom} -> D^{⊗cod} in the GNS basis."""

    matrix: np.ndarray
    dom: int
    cod: int
    d: int

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=complex)
        if self.matrix.shape != (self.d ** self.cod, self.d ** self.dom):
            raise ValueError(f"matrix shape {self.matrix.shape} does not fit {self.dom}->{self.cod} over dim {self.d}")

    @classmethod
    def identity(cls, d: int, k: int = 1) -> "OperatorMorphism":
        return cls(np.eye(d ** k), k, k, d)

    @classmethod
    def scalar(cls, d: int, c: complex) -> "OperatorMorphism":
        return cls(np.array([[c]]), 0, 0, d)

    def compose(self, other: "OperatorMorphism") -> "OperatorMorphism":
        if self.dom != other.cod:
            raise ValueError(f"cannot compose {self.dom}->{self.cod} after {other.dom}->{other.cod}")
        return OperatorMorphism(self.matrix @ other.matrix, other.dom, self.cod, self.d)

    def tensor(self, other: "OperatorMorphism") -> "OperatorMorphism":
        return OperatorMorphism(np.kron(self.matrix, other.matrix), self.dom + other.dom, self.cod + other.cod, self.d)

    def adjoint(self) -> "OperatorMorphism":
        return OperatorMorphism(self.matrix.conj().T, self.cod, self.dom, self.d)

    def pad(self, k: int) -> "OperatorMorphism":
        return self.tensor(OperatorMorphism.identity(self.d, k)) if k else self

    def _same(self, other):
        if (self.dom, self.cod) != (other.dom, other.cod):
            raise ValueError("signature mismatch")

    def __add__(self, other):
        self._same(other)
        return OperatorMorphism(self.matrix + other.matrix, self.dom, self.cod, self.d)

    def __sub__(self, other):
        self._same(other)
        return OperatorMorphism(self.matrix - other.matrix, self.dom, self.cod, self.d)

    def __neg__(self):
        return OperatorMorphism(-self.matrix, self.dom, self.cod, self.d)

    def scale(self, c: complex) -> "OperatorMorphism":
        return OperatorMorphism(c * self.matrix, self.dom, self.cod, self.d)

    def norm(self) -> float:
        return float(np.abs(self.matrix).max()) if self.matrix.size else 0.0


@dataclass
class OperatorModel:
    """GNS data and the operators m, u, e for (B ⊂ D, φ)."""

    inclusion: AlgebraInclusion
    state: AlgebraState
    basis: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.state.algebra != self.inclusion.D:
            raise ValueError("state does not live on D")
        self.basis = gns_basis(self.state)
        self._inv = np.linalg.inv(self.basis)

    @property
    def D(self) -> MultiMatrixAlgebra:
        return self.inclusion.D

    @property
    def d(self) -> int:
        return self.D.dim

    def coords(self, x: np.ndarray) -> np.ndarray:
        return self._inv @ x

    def element(self, c: np.ndarray) -> np.ndarray:
        return self.basis @ c

    @cached_property
    def M(self) -> OperatorMorphism:
        d, A = self.d, self.D
        cols = [self.coords(A.multiply(self.basis[:, i], self.basis[:, j])) for i in range(d) for j in range(d)]
        return OperatorMorphism(np.column_stack(cols), 2, 1, d)

    @cached_property
    def U(self) -> OperatorMorphism:
        return OperatorMorphism(self.coords(self.D.unit()).reshape(-1, 1), 0, 1, self.d)

    @cached_property
    def E(self) -> OperatorMorphism:
        y = self.coords(self.inclusion.embedding_matrix)
        q, _ = np.linalg.qr(y)
        return OperatorMorphism(q @ q.conj().T, 1, 1, self.d)

    def left(self, x: np.ndarray) -> np.ndarray:
        """Matrix of y |-> x y."""
        return np.column_stack([self.coords(self.D.multiply(x, self.basis[:, k])) for k in range(self.d)])

    def right(self, x: np.ndarray) -> np.ndarray:
        return np.column_stack([self.coords(self.D.multiply(self.basis[:, k], x)) for k in range(self.d)])

    def comultiplication_formula(self) -> np.ndarray:
        """Coordinate matrix of b |-> Σ_k b_k ⊗ b_k* b, to compare with M*."""
        d, A = self.d, self.D
        cols = []
        for j in range(d):
            b = self.basis[:, j]
            col = np.zeros(d * d, dtype=complex)
            for k in range(d):
                col += np.kron(np.eye(d)[:, k], self.coords(A.multiply(A.star(self.basis[:, k]), b)))
            cols.append(col)
        return np.column_stack(cols)


def operators_mue(inclusion: AlgebraInclusion, state: AlgebraState):
    model = OperatorModel(inclusion, state)
    return model.M, model.U, model.E


# -- certification ------------------------------------------------------------------


@dataclass
class DeltaFormReport:
    holds: bool
    delta2: float
    block_values: list[float]
    operator_residual: float

    def __iter__(self):
        return iter((self.holds, self.delta2))


def is_delta_form(D: MultiMatrixAlgebra, state: AlgebraState, tol: float = 1e-10) -> DeltaFormReport:
    """mm* = δ²·1 on the operator side, and Tr(Q_block^-1) = δ² for every block;
    both computed independently and required to agree."""
    if state.algebra != D:
        raise ValueError("state does not live on D")
    blocks = [float(np.trace(np.linalg.inv(q)).real) for q in state.Q]
    model = OperatorModel(trivial_inclusion(D), state)
    mm = model.M.compose(model.M.adjoint()).matrix
    delta2_op = float(np.trace(mm).real) / D.dim
    residual = float(np.abs(mm - delta2_op * np.eye(D.dim)).max())
    scale = max(1.0, delta2_op)
    block_ok = max(blocks) - min(blocks) <= tol * scale
    op_ok = residual <= OP_TOL * scale
    agree = abs(delta2_op - blocks[0]) <= tol * scale
    return DeltaFormReport(block_ok and op_ok and agree, delta2_op, blocks, residual)


@dataclass
class BetaOmegaReport:
    holds: bool
    beta2: float
    omega2: float
    delta2: float
    d_form: DeltaFormReport
    b_form: DeltaFormReport
    bimodule_residual: float

    def __iter__(self):
        return iter((self.holds, self.beta2, self.omega2))


def is_beta_omega_form(inclusion: AlgebraInclusion, state: AlgebraState, tol: float = OP_TOL) -> BetaOmegaReport:
    d_form = is_delta_form(inclusion.D, state)
    b_form = is_delta_form(inclusion.B, inclusion.restrict(state))
    model = OperatorModel(inclusion, state)
    E = model.E.matrix
    # e(b x b') = b e(x) b' over matrix units b, b' of B and the basis of D
    lefts = [model.left(b) for b in inclusion.embedding_matrix.T]
    rights = [model.right(b) for b in inclusion.embedding_matrix.T]
    worst = 0.0
    for L in lefts:
        for R in rights:
            op = L @ R
            worst = max(worst, float(np.abs(E @ op - op @ E).max()))
    holds = d_form.holds and b_form.holds and worst <= tol
    beta2 = b_form.delta2
    return BetaOmegaReport(holds, beta2, d_form.delta2 / beta2, d_form.delta2, d_form, b_form, worst)


@dataclass
class TraceRestrictionReport:
    holds: bool
    index: Fraction
    restricted_weights: list[Fraction]
    canonical_weights: list[Fraction]
    beta_omega: BetaOmegaReport | None = None

    def __iter__(self):
        return iter((self.holds, self.index))


def check_trace_restriction(inclusion: AlgebraInclusion) -> TraceRestrictionReport:
    """Does the canonical trace of D restrict to the canonical trace of B?

    Weights are compared exactly: the restriction puts Σ_i Λ_ij n_i / dim D on
    B-block j (trace states are scalar on each block).  When they agree, τ_D is
    certified numerically as a (β, ω)-form with β² = dim B, ω² = dim D / dim B.
    """
    wd = canonical_trace_weights(inclusion.D)
    restricted = [sum((inclusion.multiplicity[i][j] * wd[i] for i in range(len(wd))), Fraction(0))
                  for j in range(len(inclusion.B.blocks))]
    canon = canonical_trace_weights(inclusion.B)
    holds = restricted == canon
    report = TraceRestrictionReport(holds, inclusion.index(), restricted, canon)
    if holds:
        report.beta_omega = is_beta_omega_form(inclusion, canonical_trace(inclusion.D))
    return report


# -- generators and relations on the operator side -------------------------------------


@dataclass
class CertifiedModel:
    """An operator model whose state has been certified a (β, ω)-form."""

    model: OperatorModel
    report: BetaOmegaReport

    @classmethod
    def certify(cls, inclusion: AlgebraInclusion, state: AlgebraState, tol: float = OP_TOL) -> "CertifiedModel":
        report = is_beta_omega_form(inclusion, state, tol)
        if not report.holds:
            raise CertificationError(
                f"not a (β,ω)-form: δ-form on D {report.d_form.holds}, β-form on B {report.b_form.holds}, "
                f"bimodule residual {report.bimodule_residual:.3g}")
        return cls(OperatorModel(inclusion, state), report)

    @property
    def beta0(self) -> float:
        return math.sqrt(self.report.beta2)

    @property
    def omega0(self) -> float:
        return math.sqrt(self.report.omega2)

    @cached_property
    def namespace(self) -> Namespace:
        """m, u, e are the operators; f, e_i, p_i, v are derived from them by words."""
        m = self.model
        base = {"m": m.M, "u": m.U, "e": m.E}
        return Namespace(
            resolve=base.get,
            identity=lambda k: OperatorMorphism.identity(m.d, k),
            scalar=lambda c: OperatorMorphism.scalar(m.d, c.eval(self.beta0, self.omega0)),
        )

    def verify(self, suite_name: str, max_index: int = 4, tol: float = OP_TOL) -> list[RelationResult]:
        return check(suite(suite_name, max_index), self.namespace, size=OperatorMorphism.norm, tol=tol)

    def represent(self, x: Morphism) -> OperatorMorphism:
        """J(x): each basis diagram is rewritten as a word in m, u, e and evaluated
        on the operators."""
        if x.kind != FC:
            raise ValueError("represent expects an FC morphism")
        out = OperatorMorphism(np.zeros((self.model.d ** x.cod, self.model.d ** x.dom)), x.dom, x.cod, self.model.d)
        for diagram, c in x.items():
            out = out + self.represent_diagram(diagram).scale(c.eval(self.beta0, self.omega0))
        return out

    def represent_diagram(self, diagram) -> OperatorMorphism:
        cache = self.__dict__.setdefault("_rep_cache", {})
        if diagram not in cache:
            word, s = factor_word(diagram)
            value = self.namespace.evaluate(word)
            cache[diagram] = value.scale(s.inverse().eval(self.beta0, self.omega0))
        return cache[diagram]

    @cached_property
    def closure_weight(self) -> np.ndarray:
        """K with V*(X ⊗ 1)V = Tr(X K) for v = m* u."""
        V = self.namespace.lookup("v").matrix.reshape(self.model.d, self.model.d)
        return V @ V.conj().T

    def markov_close(self, X: OperatorMorphism) -> complex:
        """Operator-side closure, iterating (1 ⊗ V*)(X ⊗ 1)(1 ⊗ V) literally."""
        if X.dom != X.cod:
            raise ValueError("square operators only")
        V = self.namespace.lookup("v")
        while X.dom > 0:
            ident = OperatorMorphism.identity(self.model.d, X.dom - 1)
            X = ident.tensor(V.adjoint()).compose(X.pad(1)).compose(ident.tensor(V))
        return complex(X.matrix[0, 0])

    def fast_trace(self, X: OperatorMorphism) -> complex:
        """Same functional as :meth:`markov_close`, as Tr(X K^{⊗n})."""
        K = np.ones((1, 1))
        for _ in range(X.dom):
            K = np.kron(K, self.closure_weight)
        return complex(np.trace(X.matrix @ K))

    def gram(self, m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
        """(Gram matrix of represented FC(m, n) basis diagrams under the closure,
        matrix whose rows are the flattened operators)."""
        basis = enumerate_diagrams(FC, m, n)
        ops = [self.represent_diagram(d).matrix for d in basis]
        K = np.ones((1, 1))
        for _ in range(m):
            K = np.kron(K, self.closure_weight)
        rows = np.array([x.ravel() for x in ops])
        weighted = np.array([(x @ K).ravel() for x in ops])
        # G[i, j] = Tr(X_j^* X_i K)
        return weighted @ rows.conj().T, rows


def span_rank(rows: np.ndarray, rtol: float = 1e-8) -> int:
    if rows.size == 0:
        return 0
    s = np.linalg.svd(rows, compute_uv=False)
    return int(np.sum(s > rtol * s.max()))


# -- JSON input ---------------------------------------------------------------------


def load_inclusion(source) -> tuple[AlgebraInclusion, AlgebraState]:
    """Parse {"B": {"blocks": [..]}, "D": {"blocks": [..]}, "multiplicity": [[..]],
    "state": {"Q": [block matrices]} | "canonical"}."""
    if isinstance(source, (str, Path)):
        source = json.loads(Path(source).read_text())
    B = MultiMatrixAlgebra(tuple(source["B"]["blocks"]))
    D = MultiMatrixAlgebra(tuple(source["D"]["blocks"]))
    inclusion = AlgebraInclusion(B, D, tuple(tuple(r) for r in source["multiplicity"]))
    st = source.get("state", "canonical")
    if st == "canonical" or (isinstance(st, dict) and st.get("Q") == "canonical"):
        state = canonical_trace(D)
    else:
        state = AlgebraState(D, tuple(np.atleast_2d(np.asarray(q, dtype=float)) for q in st["Q"]))
    return inclusion, state
