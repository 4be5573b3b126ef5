"""Representations (V, A, rho) of hom-Lie algebras and their duals."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .algebra import Checker, HomLieAlgebra, ValidationReport, is_admissible, require_valid
from .errors import DomainError, InputError
from .multilinear import coad_matrix
from .scalar import ZERO, Matrix, unit


@dataclass(frozen=True)
class Representation:
    """``rho[i]`` is the m x m matrix of ``ρ(e_i)``; ``A`` is the twist on V."""

    algebra: HomLieAlgebra
    A: Matrix
    rho: tuple

    def __post_init__(self):
        rho = tuple(self.rho)
        object.__setattr__(self, "rho", rho)
        m = self.A.nrows
        if not self.A.is_square():
            raise InputError(f"A must be square, got {self.A.shape}")
        if len(rho) != self.algebra.dim:
            raise InputError(f"need {self.algebra.dim} action matrices, got {len(rho)}")
        for i, r in enumerate(rho):
            if r.shape != (m, m):
                raise InputError(f"rho[{i}] has shape {r.shape}, expected {(m, m)}")

    @property
    def dim_v(self) -> int:
        return self.A.nrows

    def act(self, x: Sequence) -> Matrix:
        """``ρ(x)`` for an arbitrary coefficient vector ``x``."""
        m = self.dim_v
        if len(x) != self.algebra.dim:
            raise InputError("element has the wrong length")
        rows = [[ZERO] * m for _ in range(m)]
        for i, c in enumerate(x):
            if not c:
                continue
            for a, row in enumerate(self.rho[i].rows):
                for b, t in enumerate(row):
                    if t:
                        rows[a][b] += c * t
        return Matrix(rows, m)


def _matrix_identity(chk: Checker, axiom: str, witness: tuple, lhs: Matrix, rhs: Matrix):
    # compare column by column so witnesses stay vector-valued
    for c in range(lhs.ncols):
        chk.expect(axiom, witness + (c,), lhs.column(c), rhs.column(c))


def check_representation(r: Representation) -> ValidationReport:
    """Twist compatibility on basis elements and the bracket condition on pairs ``i < j``.

    Witness tuples end with the V-basis column where the matrices differ.
    """
    g = r.algebra
    n = g.dim
    A = r.A
    phi_cols = g.twist.columns()
    chk = Checker()
    for i in range(n):
        _matrix_identity(chk, "rep-twist", (i,), r.act(phi_cols[i]) @ A, A @ r.rho[i])
    for i, j in combinations(range(n), 2):
        lhs = r.act(g.basis_bracket(i, j)) @ A
        rhs = r.act(phi_cols[i]) @ r.rho[j] - r.act(phi_cols[j]) @ r.rho[i]
        _matrix_identity(chk, "rep-bracket", (i, j), lhs, rhs)
    return chk.report()


def require_representation(r: Representation, what: str = "representation") -> None:
    report = check_representation(r)
    if not report.passed:
        f = report.failures[0]
        raise DomainError(f"{what} is not a representation ({f.axiom} fails at {f.witness})", report)


def dual_representation(r: Representation) -> Representation:
    """Candidate ``(V*, A^T, -ρ^T)``.  Not verified: the dual is a representation only when admissible."""
    require_representation(r)
    return Representation(r.algebra, r.A.T, tuple(-m.T for m in r.rho))


def admissible_rep_report(r: Representation) -> ValidationReport:
    g = r.algebra
    n = g.dim
    A = r.A
    phi_cols = g.twist.columns()
    chk = Checker()
    for i in range(n):
        _matrix_identity(chk, "admissible-twist", (i,), A @ r.act(phi_cols[i]), r.rho[i] @ A)
    for i, j in product(range(n), repeat=2):
        lhs = A @ r.act(g.basis_bracket(i, j))
        rhs = r.rho[i] @ r.act(phi_cols[j]) - r.rho[j] @ r.act(phi_cols[i])
        _matrix_identity(chk, "admissible-bracket", (i, j), lhs, rhs)
    return chk.report()


def is_admissible_rep(r: Representation) -> bool:
    require_representation(r)
    return admissible_rep_report(r).passed


def semidirect_product(r: Representation) -> HomLieAlgebra:
    """``g ⋉ V`` on the basis ``(e_1..e_n, f_1..f_m)`` with twist ``φ ⊕ A``."""
    require_representation(r)
    return semidirect_candidate(r)


def semidirect_candidate(r: Representation) -> HomLieAlgebra:
    g = r.algebra
    n, m = g.dim, r.dim_v
    N = n + m
    consts = {}
    for (i, j), c in g.constants.items():
        consts[(i, j)] = tuple(c) + (ZERO,) * m
    for i in range(n):
        for a in range(m):
            col = r.rho[i].column(a)
            if any(col):
                consts[(i, n + a)] = (ZERO,) * n + col
    twist = [list(row) + [ZERO] * m for row in g.twist.rows]
    twist += [[ZERO] * n + list(row) for row in r.A.rows]
    return HomLieAlgebra(N, consts, Matrix(twist, N))


def adjoint_rep(g: HomLieAlgebra) -> Representation:
    require_valid(g)
    return Representation(g, g.twist, tuple(g.ad(unit(g.dim, i)) for i in range(g.dim)))


def coadjoint_rep(g: HomLieAlgebra) -> Representation:
    require_valid(g)
    if not is_admissible(g):
        raise DomainError("coadjoint representation requires an admissible algebra")
    return Representation(g, g.twist.T, tuple(coad_matrix(g, unit(g.dim, i)) for i in range(g.dim)))


def trivial_rep(g: HomLieAlgebra, dim_v: int = 1, A: Matrix = None) -> Representation:
    if A is None:
        A = Matrix.identity(dim_v)
    return Representation(g, A, tuple(Matrix.zero(A.nrows, A.nrows) for _ in range(g.dim)))
