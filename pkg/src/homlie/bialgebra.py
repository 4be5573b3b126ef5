"""Hom-Lie bialgebras through their matched pairs and Manin triples.

Throughout, g* carries the dual basis ``e^1..e^n`` and the twist ``φ^T``.  In
the double ``g ⊕ g*`` the g-block comes first.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Mapping, Sequence

from .algebra import (
    Checker,
    HomLieAlgebra,
    ValidationReport,
    admissibility_report,
    is_subalgebra,
    require_valid,
    validate,
)
from .cohomology import maurer_cartan_defect
from .errors import DomainError, InputError, InvariantViolation
from .multilinear import DUAL, PRIMAL, Multivector, ad_multi, pair, r_sharp_matrix
from .representations import Representation, check_representation
from .scalar import ZERO, Matrix, Vector, invert, rank, rational, unit, vadd, vsub


@dataclass(frozen=True, eq=False)
class HomLieBialgebra:
    """A hom-Lie algebra with a bracket on its dual; the dual twist is always ``φ^T``."""

    g: HomLieAlgebra
    dual_bracket: Mapping

    def __post_init__(self):
        # validates shapes and normalises the constants
        star = HomLieAlgebra(self.g.dim, self.dual_bracket, self.g.twist.T)
        object.__setattr__(self, "dual_bracket", star.constants)
        object.__setattr__(self, "_star", star)

    @property
    def dim(self) -> int:
        return self.g.dim

    @property
    def dual(self) -> HomLieAlgebra:
        """g* as a hom-Lie algebra in its own right (its basis is ``e^1..e^n``)."""
        return self._star

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomLieBialgebra):
            return NotImplemented
        return self.g == other.g and self.dual_bracket == other.dual_bracket

    def __hash__(self):
        return hash((self.g, tuple(self.dual_bracket.items())))


@dataclass(frozen=True)
class MatchedPairSpec:
    """``rho``: g acting on g2 (twist of g2); ``rho2``: g2 acting on g (twist of g)."""

    g: HomLieAlgebra
    g2: HomLieAlgebra
    rho: Representation
    rho2: Representation

    def __post_init__(self):
        if self.rho.algebra != self.g or self.rho2.algebra != self.g2:
            raise InputError("representations are not over the paired algebras")
        if self.rho.dim_v != self.g2.dim or self.rho2.dim_v != self.g.dim:
            raise InputError("representation spaces do not match the partner algebras")


@dataclass(frozen=True)
class BilinearForm:
    matrix: Matrix
    symmetric: bool = True

    def __call__(self, x, y):
        M = self.matrix
        return sum((x[i] * M[i, j] * y[j] for i in range(M.nrows) if x[i] for j in range(M.ncols) if y[j]), ZERO)


# -- matched pairs -------------------------------------------------------------

def double(mp: MatchedPairSpec) -> HomLieAlgebra:
    """Candidate bracket on ``g ⊕ g2``; the caller decides whether it validates."""
    g, h = mp.g, mp.g2
    n, m = g.dim, h.dim
    N = n + m
    consts = {}
    for (i, j), c in g.constants.items():
        consts[(i, j)] = tuple(c) + (ZERO,) * m
    for (a, b), c in h.constants.items():
        consts[(n + a, n + b)] = (ZERO,) * n + tuple(c)
    for i in range(n):
        for a in range(m):
            # [(e_i, 0), (0, f_a)] = (-ρ'(f_a) e_i, ρ(e_i) f_a)
            left = tuple(-x for x in mp.rho2.rho[a].column(i))
            right = mp.rho.rho[i].column(a)
            v = left + right
            if any(v):
                consts[(i, n + a)] = v
    twist = [list(r) + [ZERO] * m for r in g.twist.rows] + [[ZERO] * n + list(r) for r in h.twist.rows]
    return HomLieAlgebra(N, consts, Matrix(twist, N))


def matched_pair_report(mp: MatchedPairSpec) -> ValidationReport:
    """Both actions are representations and the two compatibility identities hold."""
    require_valid(mp.g, "first algebra")
    require_valid(mp.g2, "second algebra")
    g, h = mp.g, mp.g2
    n, m = g.dim, h.dim
    rho, rho2 = mp.rho, mp.rho2
    chk = Checker()
    chk.extend(check_representation(rho), "rho:")
    chk.extend(check_representation(rho2), "rho':")
    phi_g, phi_h = g.twist, h.twist
    Eg = [unit(n, i) for i in range(n)]
    Eh = [unit(m, a) for a in range(m)]
    for i, j in combinations(range(n), 2):
        x, y = Eg[i], Eg[j]
        for a in range(m):
            xp = Eh[a]
            lhs = rho2.act(phi_h.apply(xp)).apply(g.bracket(x, y))
            rhs = vadd(
                vadd(g.bracket(rho2.act(xp).apply(x), phi_g.apply(y)), g.bracket(phi_g.apply(x), rho2.act(xp).apply(y))),
                vsub(
                    rho2.act(rho.act(y).apply(xp)).apply(phi_g.apply(x)),
                    rho2.act(rho.act(x).apply(xp)).apply(phi_g.apply(y)),
                ),
            )
            chk.expect("matched-1", (i, j, a), lhs, rhs)
    for i in range(n):
        x = Eg[i]
        for a, b in combinations(range(m), 2):
            xp, yp = Eh[a], Eh[b]
            lhs = rho.act(phi_g.apply(x)).apply(h.bracket(xp, yp))
            rhs = vadd(
                vadd(h.bracket(rho.act(x).apply(xp), phi_h.apply(yp)), h.bracket(phi_h.apply(xp), rho.act(x).apply(yp))),
                vsub(
                    rho.act(rho2.act(yp).apply(x)).apply(phi_h.apply(xp)),
                    rho.act(rho2.act(xp).apply(x)).apply(phi_h.apply(yp)),
                ),
            )
            chk.expect("matched-2", (i, a, b), lhs, rhs)
    return chk.report()


def is_matched_pair(mp: MatchedPairSpec) -> bool:
    """Checked twice: directly, and by validating the double.  The two must agree."""
    direct = matched_pair_report(mp).passed
    via_double = validate(double(mp)).passed
    if direct != via_double:
        raise InvariantViolation(f"matched-pair identities say {direct}, double validation says {via_double}")
    return direct


def _coadjoint_unchecked(h: HomLieAlgebra) -> Representation:
    n = h.dim
    return Representation(h, h.twist.T, tuple(-(h.ad(unit(n, i)).T) for i in range(n)))


def bialgebra_matched_pair(b: HomLieBialgebra) -> MatchedPairSpec:
    """``(g, g*; ad*, ad*_{g*})`` without checking admissibility."""
    return MatchedPairSpec(b.g, b.dual, _coadjoint_unchecked(b.g), _coadjoint_unchecked(b.dual))


# -- bialgebra compatibility ---------------------------------------------------

def cobracket(partner: HomLieAlgebra, x: Sequence) -> Multivector:
    """``Δ(x)`` with ``<Δ(x), ξ∧η> = <x, [ξ, η]_partner>``, as a bivector on x's side."""
    n = partner.dim
    coeffs = {}
    for (a, b), c in partner.constants.items():
        coeffs[(a, b)] = sum((xk * ck for xk, ck in zip(x, c)), ZERO)
    return Multivector(n, 2, coeffs, PRIMAL)


def _compatibility(chk: Checker, h: HomLieAlgebra, partner: HomLieAlgebra, axiom: str):
    """``<Δ[x,y], φ'ξ∧η> = <ad_{φx}Δy - ad_{φy}Δx, φ'ξ∧η>`` with Δ dual to the partner bracket."""
    n = h.dim
    E = [unit(n, i) for i in range(n)]
    phi = h.twist.columns()
    phi_p = partner.twist.columns()
    tests = [[Multivector.from_vectors([phi_p[a], E[c]], DUAL) for c in range(n)] for a in range(n)]
    delta = [cobracket(partner, e) for e in E]
    for i, j in combinations(range(n), 2):
        lhs_mv = cobracket(partner, h.basis_bracket(i, j))
        rhs_mv = ad_multi(h, phi[i], delta[j]) - ad_multi(h, phi[j], delta[i])
        for a in range(n):
            lhs = [pair(t, lhs_mv) for t in tests[a]]
            rhs = [pair(t, rhs_mv) for t in tests[a]]
            chk.expect(axiom, (i, j, a), lhs, rhs)


def check_bialgebra(b: HomLieBialgebra) -> ValidationReport:
    """Both algebras valid and admissible, plus the two pairing identities.

    Witnesses for the pairing identities are ``(i, j, a)``: the bracket pair and
    the twisted covector index; the vectors run over the last covector.
    """
    g, gs = b.g, b.dual
    chk = Checker()
    chk.extend(validate(g), "g:")
    chk.extend(validate(gs), "g*:")
    chk.extend(admissibility_report(g), "g:")
    chk.extend(admissibility_report(gs), "g*:")
    _compatibility(chk, g, gs, "bialgebra-1")
    _compatibility(chk, gs, g, "bialgebra-2")
    return chk.report()


# -- standard double and Manin triples -----------------------------------------

def standard_form(n: int) -> BilinearForm:
    rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[i][n + i] = rows[n + i][i] = rational(1)
    return BilinearForm(Matrix(rows, 2 * n), True)


def standard_double(b: HomLieBialgebra, verify: bool = True):
    """The standard bracket on ``g ⊕ g*`` and the standard symmetric form.

    With ``verify=False`` the bracket is assembled for any candidate, which is
    what the equivalence checks need.
    """
    if verify:
        report = check_bialgebra(b)
        if not report.passed:
            f = report.failures[0]
            raise DomainError(f"not a hom-Lie bialgebra ({f.axiom} fails at {f.witness})", report)
    return double(bialgebra_matched_pair(b)), standard_form(b.dim)


def check_manin_triple(k: HomLieAlgebra, basis_g, basis_g2, S: BilinearForm) -> ValidationReport:
    N = k.dim
    bg = [tuple(rational(c) for c in v) for v in basis_g]
    bh = [tuple(rational(c) for c in v) for v in basis_g2]
    if any(len(v) != N for v in bg + bh):
        raise InputError("basis vectors have the wrong length")
    if len(bg) + len(bh) != N or (bg + bh and rank(Matrix.from_columns(bg + bh, N)) != N):
        raise InputError("the two bases do not jointly form a basis of the double")
    M = S.matrix
    if M.shape != (N, N) or M.T != M:
        raise InputError("form must be a symmetric N x N matrix")
    if invert(M) is None:
        raise InputError("form is degenerate")
    chk = Checker()
    chk.extend(validate(k), "k:")
    E = [unit(N, i) for i in range(N)]
    phi = k.twist.columns()
    for i, j in product(range(N), repeat=2):
        lhs = [S(k.basis_bracket(i, j), E[c]) for c in range(N)]
        rhs = [S(E[i], k.basis_bracket(j, c)) for c in range(N)]
        chk.expect("invariance-bracket", (i, j), lhs, rhs)
    for i in range(N):
        chk.expect("invariance-twist", (i,), [S(phi[i], E[c]) for c in range(N)], [S(E[i], phi[c]) for c in range(N)])
    for name, basis in (("g", bg), ("g'", bh)):
        for a in range(len(basis)):
            vals = [S(basis[a], basis[c]) for c in range(len(basis))]
            chk.expect(f"isotropy-{name}", (a,), vals, [ZERO] * len(basis))
        if not is_subalgebra(k, basis):
            chk.expect(f"subalgebra-{name}", (), (1,), (0,))
    if len(bg) != len(bh):
        chk.expect("dimension-split", (), (len(bg),), (len(bh),))
    return chk.report()


def _transport(k: HomLieAlgebra, Pinv: Matrix, cols, lo: int, hi: int):
    """Structure constants of the span of ``cols`` read in their own coordinates ``lo:hi``."""
    consts = {}
    for a, c in combinations(range(len(cols)), 2):
        coords = Pinv.apply(k.bracket(cols[a], cols[c]))
        consts[(a, c)] = coords[lo:hi]
    twist = Matrix.from_columns([Pinv.apply(k.phi(v))[lo:hi] for v in cols], hi - lo)
    return consts, twist


def normalize_manin_triple(k: HomLieAlgebra, basis_g, basis_g2, S: BilinearForm) -> HomLieBialgebra:
    """Identify g' with g* through ``ξ ↦ S(ξ, ·)|_g`` and return the induced bialgebra.

    The isomorphism between the standard double of the result and ``k`` is
    rebuilt and checked on every basis pair before returning.
    """
    report = check_manin_triple(k, basis_g, basis_g2, S)
    if not report.passed:
        f = report.failures[0]
        raise DomainError(f"not a Manin triple ({f.axiom} fails at {f.witness})", report)
    N = k.dim
    n = N // 2
    bg = [tuple(rational(c) for c in v) for v in basis_g]
    bh = [tuple(rational(c) for c in v) for v in basis_g2]
    P = Matrix.from_columns(bg + bh, N)
    Pinv = invert(P)
    g_consts, g_twist = _transport(k, Pinv, bg, 0, n)
    h_consts, h_twist = _transport(k, Pinv, bh, n, N)
    g = HomLieAlgebra(n, g_consts, g_twist)
    h = HomLieAlgebra(n, h_consts, h_twist)
    # column a of M is the covector S(b'_a, ·) restricted to g
    M = Matrix([[S(bh[a], bg[c]) for a in range(n)] for c in range(n)], n)
    Minv = invert(M)
    if M @ h.twist @ Minv != g.twist.T:
        raise InvariantViolation("transported dual twist differs from the transpose of the g twist")
    dual = {}
    for c, d in combinations(range(n), 2):
        u, v = Minv.column(c), Minv.column(d)
        dual[(c, d)] = M.apply(h.bracket(u, v))
    b = HomLieBialgebra(g, dual)

    std, std_form = standard_double(b, verify=False)
    # Ψ: g ⊕ g* -> k, e_i -> b_i, e^c -> Σ_a Minv[a, c] b'_a
    psi_cols = list(bg) + [
        tuple(sum((Minv[a, c] * bh[a][t] for a in range(n)), ZERO) for t in range(N)) for c in range(n)
    ]
    Psi = Matrix.from_columns(psi_cols, N)
    for i, j in combinations(range(N), 2):
        if Psi.apply(std.basis_bracket(i, j)) != k.bracket(psi_cols[i], psi_cols[j]):
            raise InvariantViolation(f"transport fails to preserve the bracket at {(i, j)}")
    if Psi @ std.twist != k.twist @ Psi:
        raise InvariantViolation("transport fails to intertwine the twists")
    if Psi.T @ S.matrix @ Psi != std_form.matrix:
        raise InvariantViolation("transported form is not the standard form")
    return b


def manin_components(b: HomLieBialgebra):
    """``(k, basis_g, basis_g*, S)`` for the standard triple of a candidate bialgebra."""
    k, S = standard_double(b, verify=False)
    n = b.dim
    return k, [unit(2 * n, i) for i in range(n)], [unit(2 * n, n + i) for i in range(n)], S


# -- Lagrangian graphs ------------------------------------------------------------

@dataclass(frozen=True)
class LagrangianResult:
    graph_closed: bool
    mc_zero: bool
    twist_compat: bool
    witness: tuple = ()
    lhs: Vector = ()
    rhs: Vector = ()

    @property
    def implication_holds(self) -> bool:
        return not (self.twist_compat and self.mc_zero) or self.graph_closed


def lagrangian_graph_check(b: HomLieBialgebra, R: Multivector) -> LagrangianResult:
    """Closure of the graph of ``R♯∘φ*`` in the standard double, against its two sufficient conditions."""
    n = b.dim
    if invert(b.g.twist) is None:
        raise DomainError("Lagrangian graph check needs a regular bialgebra")
    report = check_bialgebra(b)
    if not report.passed:
        f = report.failures[0]
        raise DomainError(f"not a hom-Lie bialgebra ({f.axiom} fails at {f.witness})", report)
    if R.dim != n:
        raise InputError("bivector dimension does not match")
    Rs = r_sharp_matrix(R)
    phiT = b.g.twist.T
    graph_map = Rs @ phiT
    twist_compat = graph_map == b.g.twist @ Rs
    mc_zero = maurer_cartan_defect(b, R, check=False).is_zero()

    k, _ = standard_double(b, verify=False)
    gens = [graph_map.column(i) + unit(n, i) for i in range(n)]

    def offender(v):
        # v = z + ζ lies in the graph iff z = R♯φ*(ζ)
        z, zeta = v[:n], v[n:]
        expect = graph_map.apply(zeta)
        return None if tuple(z) == tuple(expect) else (tuple(z), tuple(expect))

    for i in range(n):
        bad = offender(k.phi(gens[i]))
        if bad:
            return LagrangianResult(False, mc_zero, twist_compat, ("twist", i), *bad)
    for i, j in combinations(range(n), 2):
        bad = offender(k.bracket(gens[i], gens[j]))
        if bad:
            return LagrangianResult(False, mc_zero, twist_compat, ("bracket", i, j), *bad)
    return LagrangianResult(True, mc_zero, twist_compat)
