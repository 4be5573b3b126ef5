"""Operator identities and hom-left-symmetric algebras.

Also the two constructions of r-matrices from operators: from an O-operator
into the semidirect product with the dual representation, and from a regular
hom-left-symmetric algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Mapping, Optional

from .algebra import (
    Checker,
    HomLieAlgebra,
    ValidationReport,
    is_admissible,
    require_valid,
    validate,
)
from .cohomology import cocycle_witnesses
from .errors import DomainError, InputError, InvariantViolation
from .multilinear import Multivector, apply_map, extended_bracket
from .representations import (
    Representation,
    admissible_rep_report,
    adjoint_rep,
    check_representation,
    dual_representation,
    require_representation,
    semidirect_product,
)
from .scalar import ZERO, Matrix, Vector, invert, rational, solve_linear, unit, vadd, vsub, zeros


@dataclass(frozen=True)
class OOperatorDoc:
    """``T: V -> g`` as an n x m matrix, together with the representation on V."""

    rep: Representation
    T: Matrix

    def __post_init__(self):
        n, m = self.rep.algebra.dim, self.rep.dim_v
        if self.T.shape != (n, m):
            raise InputError(f"T has shape {self.T.shape}, expected {(n, m)}")


def is_o_operator(doc: OOperatorDoc) -> ValidationReport:
    """``T A = φ T`` and ``[Tu, Tv] = T(ρ(Tu)v - ρ(Tv)u)`` on basis pairs."""
    rep, T = doc.rep, doc.T
    require_representation(rep)
    g = rep.algebra
    m = rep.dim_v
    chk = Checker()
    TA, phiT = T @ rep.A, g.twist @ T
    for c in range(m):
        chk.expect("o-twist", (c,), TA.column(c), phiT.column(c))
    Tcols = T.columns()
    for i, j in combinations(range(m), 2):
        u, v = unit(m, i), unit(m, j)
        inner = vsub(rep.act(Tcols[i]).apply(v), rep.act(Tcols[j]).apply(u))
        chk.expect("o-bracket", (i, j), g.bracket(Tcols[i], Tcols[j]), T.apply(inner))
    return chk.report()


def hom_nijenhuis_report(g: HomLieAlgebra, N: Matrix) -> ValidationReport:
    require_valid(g)
    n = g.dim
    if N.shape != (n, n):
        raise InputError(f"N has shape {N.shape}, expected {(n, n)}")
    chk = Checker()
    Nphi, phiN = N @ g.twist, g.twist @ N
    for c in range(n):
        chk.expect("nijenhuis-twist", (c,), Nphi.column(c), phiN.column(c))
    Ncols = N.columns()
    for i, j in combinations(range(n), 2):
        x, y = unit(n, i), unit(n, j)
        inner = vsub(vadd(g.bracket(Ncols[i], y), g.bracket(x, Ncols[j])), N.apply(g.basis_bracket(i, j)))
        chk.expect("nijenhuis-bracket", (i, j), g.bracket(Ncols[i], Ncols[j]), N.apply(inner))
    return chk.report()


def is_hom_nijenhuis(g: HomLieAlgebra, N: Matrix) -> bool:
    return hom_nijenhuis_report(g, N).passed


def embedding_operator(doc: OOperatorDoc) -> Matrix:
    """``(x, u) -> (T u, 0)`` on ``g ⋉ V``."""
    n, m = doc.T.shape
    rows = [[ZERO] * n + list(doc.T.rows[a]) for a in range(n)] + [[ZERO] * (n + m) for _ in range(m)]
    return Matrix(rows, n + m)


@dataclass(frozen=True)
class EmbeddingResult:
    o_operator: bool
    nijenhuis: bool

    @property
    def agree(self) -> bool:
        return self.o_operator == self.nijenhuis


def nijenhuis_embedding(doc: OOperatorDoc) -> EmbeddingResult:
    """T is an O-operator exactly when its block embedding is hom-Nijenhuis on the semidirect product."""
    o = is_o_operator(doc).passed
    k = semidirect_product(doc.rep)
    return EmbeddingResult(o, is_hom_nijenhuis(k, embedding_operator(doc)))


def is_rota_baxter(g: HomLieAlgebra, R: Matrix) -> bool:
    """Weight-zero Rota-Baxter: ``Rφ = φR`` and ``[Rx, Ry] = R([Rx, y] + [x, Ry])``.

    Evaluated directly and as an O-operator for the adjoint representation.
    """
    require_valid(g)
    n = g.dim
    if R.shape != (n, n):
        raise InputError(f"R has shape {R.shape}, expected {(n, n)}")
    direct = R @ g.twist == g.twist @ R
    if direct:
        cols = R.columns()
        for i, j in combinations(range(n), 2):
            inner = vadd(g.bracket(cols[i], unit(n, j)), g.bracket(unit(n, i), cols[j]))
            if g.bracket(cols[i], cols[j]) != R.apply(inner):
                direct = False
                break
    via_o = is_o_operator(OOperatorDoc(adjoint_rep(g), R)).passed
    if direct != via_o:
        raise InvariantViolation("Rota-Baxter check disagrees with the adjoint O-operator check")
    return direct


# -- hom-left-symmetric algebras ------------------------------------------------

@dataclass(frozen=True, eq=False)
class HomLeftSymmetricAlgebra:
    """``product[(i, j)]`` is ``e_i · e_j``; missing entries are zero."""

    dim: int
    product: Mapping
    psi: Matrix

    def __post_init__(self):
        m = self.dim
        if self.psi.shape != (m, m):
            raise InputError(f"psi has shape {self.psi.shape}, expected {(m, m)}")
        clean = {}
        for (i, j), v in self.product.items():
            if not (0 <= i < m and 0 <= j < m):
                raise InputError(f"product index ({i}, {j}) out of range")
            v = tuple(rational(c) for c in v)
            if len(v) != m:
                raise InputError(f"product ({i}, {j}) has {len(v)} coefficients, expected {m}")
            if any(v):
                clean[(i, j)] = v
        object.__setattr__(self, "product", dict(sorted(clean.items())))

    def __eq__(self, other):
        if not isinstance(other, HomLeftSymmetricAlgebra):
            return NotImplemented
        return (self.dim, self.product, self.psi) == (other.dim, other.product, other.psi)

    def __hash__(self):
        return hash((self.dim, tuple(self.product.items()), self.psi))

    def basis_mult(self, i: int, j: int) -> Vector:
        return self.product.get((i, j), zeros(self.dim))

    def mult(self, u, v) -> Vector:
        acc = [ZERO] * self.dim
        for (i, j), w in self.product.items():
            c = u[i] * v[j]
            if c:
                for k, t in enumerate(w):
                    acc[k] += c * t
        return tuple(acc)

    def left(self, u) -> Matrix:
        """``L(u): v -> u·v``."""
        return Matrix.from_columns([self.mult(u, unit(self.dim, j)) for j in range(self.dim)], self.dim)


def validate_hlsa(h: HomLeftSymmetricAlgebra) -> ValidationReport:
    m = h.dim
    psi = h.psi
    P = psi.columns()
    chk = Checker()
    for i, j in product(range(m), repeat=2):
        chk.expect("hlsa-morphism", (i, j), psi.apply(h.basis_mult(i, j)), h.mult(P[i], P[j]))

    def assoc(a, b, c):
        return vsub(h.mult(h.basis_mult(a, b), P[c]), h.mult(P[a], h.basis_mult(b, c)))

    for i, j in combinations(range(m), 2):
        for k in range(m):
            chk.expect("left-symmetry", (i, j, k), assoc(i, j, k), assoc(j, i, k))
    return chk.report()


def require_hlsa(h: HomLeftSymmetricAlgebra):
    report = validate_hlsa(h)
    if not report.passed:
        f = report.failures[0]
        raise DomainError(f"not a hom-left-symmetric algebra ({f.axiom} fails at {f.witness})", report)


def commutator_algebra(h: HomLeftSymmetricAlgebra):
    """``(g(V), L)``: the bracket ``u·v - v·u`` with twist ψ, and left multiplication as a representation."""
    require_hlsa(h)
    m = h.dim
    consts = {(i, j): vsub(h.basis_mult(i, j), h.basis_mult(j, i)) for i, j in combinations(range(m), 2)}
    g = HomLieAlgebra(m, consts, h.psi)
    L = Representation(g, h.psi, tuple(h.left(unit(m, i)) for i in range(m)))
    if not validate(g).passed or not check_representation(L).passed:
        raise InvariantViolation("commutator of a valid hom-left-symmetric algebra failed to validate")
    return g, L


def induced_hlsa(doc: OOperatorDoc) -> HomLeftSymmetricAlgebra:
    """``u·v = ρ(Tu) v`` with twist ``A``."""
    report = is_o_operator(doc)
    if not report.passed:
        f = report.failures[0]
        raise DomainError(f"T is not an O-operator ({f.axiom} fails at {f.witness})", report)
    m = doc.rep.dim_v
    prod = {}
    for i in range(m):
        act = doc.rep.act(doc.T.column(i))
        for j in range(m):
            prod[(i, j)] = act.column(j)
    return HomLeftSymmetricAlgebra(m, prod, doc.rep.A)


# -- r-matrices from operators ------------------------------------------------------

@dataclass(frozen=True)
class RFromT:
    algebra: HomLieAlgebra
    r: Multivector
    schouten: Multivector
    o_operator_TA: bool
    orthogonal: bool
    invariant: Optional[bool]

    @property
    def chybe(self) -> bool:
        return self.schouten.is_zero()


def r_from_operator(n: int, T: Matrix) -> Multivector:
    """``Σ_i v^i ∧ T(v_i)`` in ``g ⊕ V*``, where ``v^i`` sits at index ``n + i``."""
    m = T.ncols
    coeffs = {}
    for i in range(m):
        for k in range(n):
            if T[k, i]:
                coeffs[(k, n + i)] = -T[k, i]
    return Multivector(n + m, 2, coeffs)


def build_r_from_T(doc: OOperatorDoc) -> RFromT:
    """The r-matrix of ``T`` in ``g ⋉ V*``; it solves CHYBE exactly when ``T∘A`` is an O-operator."""
    rep, T = doc.rep, doc.T
    require_representation(rep)
    if not admissible_rep_report(rep).passed:
        raise DomainError("representation is not admissible, so its dual is not a representation")
    if T @ rep.A != rep.algebra.twist @ T:
        raise DomainError("T does not intertwine the twists (T A != φ T)")
    dual = dual_representation(rep)
    k = semidirect_product(dual)
    r = r_from_operator(rep.algebra.dim, T)
    sq = extended_bracket(k, r, r) if k.dim else Multivector.zero(0, 3)
    o_ta = is_o_operator(OOperatorDoc(rep, T @ rep.A)).passed
    A = rep.A
    orthogonal = A.T @ A == Matrix.identity(A.nrows)
    invariant = None
    if orthogonal:
        invariant = apply_map(k.twist, r) == r
        if not invariant:
            raise InvariantViolation("r is not invariant under the twist although A is orthogonal")
    return RFromT(k, r, sq, o_ta, orthogonal, invariant)


def hlsa_conditions(h: HomLeftSymmetricAlgebra) -> ValidationReport:
    """``u·ψv = ψ²u·ψv`` and ``ψ((u·v - v·u)·w) = u·(ψv·w) - v·(ψu·w)`` on basis tuples."""
    m = h.dim
    psi = h.psi
    P = psi.columns()
    P2 = (psi @ psi).columns()
    E = [unit(m, i) for i in range(m)]
    chk = Checker()
    for i, j in product(range(m), repeat=2):
        chk.expect("hlsa-cond-1", (i, j), h.mult(E[i], P[j]), h.mult(P2[i], P[j]))
    for i, j in combinations(range(m), 2):
        comm = vsub(h.basis_mult(i, j), h.basis_mult(j, i))
        for k in range(m):
            lhs = psi.apply(h.mult(comm, E[k]))
            rhs = vsub(h.mult(E[i], h.mult(P[j], E[k])), h.mult(E[j], h.mult(P[i], E[k])))
            chk.expect("hlsa-cond-2", (i, j, k), lhs, rhs)
    return chk.report()


def hlsa_r(h: HomLeftSymmetricAlgebra) -> RFromT:
    """r-matrix ``Σ v^i ∧ ψ⁻¹(v_i)`` in ``g(V) ⋉ V*`` for a regular algebra meeting both conditions."""
    psi_inv = invert(h.psi)
    if psi_inv is None:
        raise DomainError("psi is singular")
    chk = Checker()
    chk.extend(validate_hlsa(h))
    conds = hlsa_conditions(h)
    chk.extend(conds)
    report = chk.report()
    if not report.passed:
        f = report.failures[0]
        raise DomainError(f"conditions fail ({f.axiom} at {f.witness})", report)
    g, L = commutator_algebra(h)
    if admissible_rep_report(L).passed != conds.passed:
        raise InvariantViolation("direct conditions disagree with admissibility of the left action")
    out = build_r_from_T(OOperatorDoc(L, psi_inv))
    if not out.chybe:
        raise InvariantViolation("constructed r does not solve the classical hom-Yang-Baxter equation")
    return out


def hlsa_from_2cocycle(g: HomLieAlgebra, B: Matrix) -> HomLeftSymmetricAlgebra:
    """Product defined by ``B(x·y, z) = -B(φ⁻¹y, [x, φz])``; ``B[i, j] = B(e_i, e_j)``."""
    require_valid(g)
    n = g.dim
    phi = g.twist
    phi_inv = invert(phi)
    if phi_inv is None:
        raise DomainError("algebra is not regular")
    if not is_admissible(g):
        raise DomainError("algebra is not admissible")
    if B.shape != (n, n):
        raise InputError(f"form has shape {B.shape}, expected {(n, n)}")
    if B.T != -B:
        raise InputError("form is not antisymmetric")
    if invert(B) is None:
        raise DomainError("form is degenerate")
    if phi.T @ B != B @ phi:
        raise DomainError("form is not twist-symmetric: B(φx, y) != B(x, φy)")
    bad = cocycle_witnesses(g, B)
    if bad:
        raise DomainError(f"form is not a 2-cocycle (cyclic sum {bad[0][1]} at {bad[0][0]})")
    BT = B.T
    prod = {}
    for i, j in product(range(n), repeat=2):
        y = phi_inv.column(j)
        rhs = []
        for k in range(n):
            w = g.bracket(unit(n, i), phi.column(k))
            rhs.append(-sum((y[a] * B[a, c] * w[c] for a in range(n) for c in range(n)), ZERO))
        prod[(i, j)] = solve_linear(BT, rhs)
    h = HomLeftSymmetricAlgebra(n, prod, phi)
    require_hlsa(h)
    g2, _ = commutator_algebra(h)
    if g2 != g:
        raise InvariantViolation("commutator of the induced product differs from the source bracket")
    return h
