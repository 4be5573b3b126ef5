"""r-matrices and the coboundary bialgebras they induce."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .algebra import HomLieAlgebra, is_admissible, require_valid
from .bialgebra import HomLieBialgebra, check_bialgebra, cobracket
from .errors import DomainError, InputError, InvariantViolation
from .multilinear import (
    PRIMAL,
    Multivector,
    ad_multi,
    apply_map,
    coad_matrix,
    evaluate_trivector,
    extended_bracket,
    r_sharp_matrix,
)
from .scalar import ZERO, Matrix, Vector, invert, rational, unit, vsub


def _check_r(g: HomLieAlgebra, r: Multivector):
    if r.side != PRIMAL or r.grade != 2:
        raise InputError("an r-matrix is a primal bivector")
    if r.dim != g.dim:
        raise InputError(f"r has dimension {r.dim}, algebra has {g.dim}")


def r_sharp(g: HomLieAlgebra, r: Multivector) -> Matrix:
    """``r♯: g* -> g``; column ``i`` is ``r♯(e^i)``."""
    _check_r(g, r)
    return r_sharp_matrix(r)


def check_zero_cochain(g: HomLieAlgebra, r: Multivector) -> bool:
    """``φ r♯ φ^T == r♯``, cross-checked against ``φ^{⊗2} r == r``."""
    _check_r(g, r)
    phi = g.twist
    Rs = r_sharp_matrix(r)
    via_sharp = phi @ Rs @ phi.T == Rs
    via_tensor = apply_map(phi, r) == r
    if via_sharp != via_tensor:
        raise InvariantViolation("the two forms of the 0-cochain condition disagree")
    return via_sharp


def schouten_square(g: HomLieAlgebra, r: Multivector) -> Multivector:
    _check_r(g, r)
    return extended_bracket(g, r, r)


def check_invariance(g: HomLieAlgebra, r: Multivector) -> bool:
    """``ad_x [r, r] = 0`` for every basis vector ``x``."""
    sq = schouten_square(g, r)
    if sq.is_zero():
        return True
    return all(ad_multi(g, unit(g.dim, i), sq).is_zero() for i in range(g.dim))


def _require_regular_admissible(g: HomLieAlgebra):
    require_valid(g)
    if invert(g.twist) is None:
        raise DomainError("algebra is not regular (twist is singular)")
    if not is_admissible(g):
        raise DomainError("algebra is not admissible")


def induced_dual_bracket(g: HomLieAlgebra, r: Multivector) -> dict:
    """``[ξ, η] = ad*_{r♯φ*ξ} η - ad*_{r♯φ*η} ξ`` on the dual basis."""
    _check_r(g, r)
    _require_regular_admissible(g)
    n = g.dim
    M = r_sharp_matrix(r) @ g.twist.T
    out = {}
    for a, b in combinations(range(n), 2):
        v = vsub(coad_matrix(g, M.column(a)).column(b), coad_matrix(g, M.column(b)).column(a))
        if any(v):
            out[(a, b)] = v
    return out


def build_coboundary_bialgebra(g: HomLieAlgebra, r: Multivector) -> HomLieBialgebra:
    _check_r(g, r)
    _require_regular_admissible(g)
    if not check_zero_cochain(g, r):
        raise DomainError("r is not a 0-cochain (twist does not fix r)")
    if not check_invariance(g, r):
        raise DomainError("[r, r] is not ad-invariant")
    b = HomLieBialgebra(g, induced_dual_bracket(g, r))
    n = g.dim
    for i in range(n):
        x = unit(n, i)
        delta = cobracket(b.dual, x)
        if delta != ad_multi(g, x, r):
            raise InvariantViolation(f"cobracket of e{i + 1} differs from [x, r]")
        if cobracket(b.dual, g.phi(x)) != apply_map(g.twist, delta):
            raise InvariantViolation(f"cobracket does not commute with the twist at e{i + 1}")
    report = check_bialgebra(b)
    if not report.passed:
        f = report.failures[0]
        raise InvariantViolation(f"coboundary construction is not a bialgebra ({f.axiom} at {f.witness})")
    return b


def _dual_algebra(g: HomLieAlgebra, r: Multivector) -> HomLieAlgebra:
    return HomLieAlgebra(g.dim, induced_dual_bracket(g, r), g.twist.T)


def sharp_bracket_defect(g: HomLieAlgebra, r: Multivector, xi: Sequence, eta: Sequence) -> Vector:
    """``[r♯φ*ξ, r♯φ*η] - r♯φ*[ξ, η]_* - ½[r, r](ξ, η)``; zero whenever the preconditions hold."""
    _check_r(g, r)
    _require_regular_admissible(g)
    if not check_zero_cochain(g, r):
        raise DomainError("r is not a 0-cochain")
    xi = tuple(rational(c) for c in xi)
    eta = tuple(rational(c) for c in eta)
    M = r_sharp_matrix(r) @ g.twist.T
    star = _dual_algebra(g, r)
    lhs = vsub(g.bracket(M.apply(xi), M.apply(eta)), M.apply(star.bracket(xi, eta)))
    half = tuple(Fraction(1, 2) * c for c in evaluate_trivector(schouten_square(g, r), xi, eta))
    return vsub(lhs, half)


@dataclass(frozen=True)
class BFormResult:
    chybe: bool
    cyclic_identity: bool
    form: Matrix
    witness: tuple = ()


def bform_equivalence(g: HomLieAlgebra, r: Multivector) -> BFormResult:
    """CHYBE for an invertible ``r`` against the cyclic identity of ``B(x, y) = <r♯⁻¹x, y>``.

    The cyclic identity used is ``B(x,φ[y,z]) + B(z,φ[x,y]) + B(y,φ[z,x]) = 0``.
    """
    _check_r(g, r)
    _require_regular_admissible(g)
    if not check_zero_cochain(g, r):
        raise DomainError("r is not a 0-cochain")
    inv = invert(r_sharp_matrix(r))
    if inv is None:
        raise DomainError("r♯ is singular")
    n = g.dim
    B = inv.T  # B[i, j] = <r♯⁻¹ e_i, e_j>

    def form(x, y):
        return sum((x[i] * B[i, j] * y[j] for i in range(n) if x[i] for j in range(n) if y[j]), ZERO)

    E = [unit(n, i) for i in range(n)]
    witness = ()
    for i, j, k in product(range(n), repeat=3):
        x, y, z = E[i], E[j], E[k]
        s = (
            form(x, g.phi(g.bracket(y, z)))
            + form(z, g.phi(g.bracket(x, y)))
            + form(y, g.phi(g.bracket(z, x)))
        )
        if s:
            witness = (i, j, k)
            break
    return BFormResult(schouten_square(g, r).is_zero(), not witness, B, witness)


def twist_defect_vectors(g: HomLieAlgebra, r: Multivector) -> list:
    """Columns of ``r♯φ* - φr♯``; for a 0-cochain on a regular admissible algebra they are central."""
    Rs = r_sharp(g, r)
    return (Rs @ g.twist.T - g.twist @ Rs).columns()
