"""Exterior powers of g and g*, the extended bracket and its coadjoint dual.

Multivectors are stored on strictly increasing index tuples.  The pairing
between ``Λ^k g*`` and ``Λ^k g`` is the determinant pairing without a ``1/k!``
factor, so ``<e^I, e_J> = δ_IJ`` for sorted ``I``, ``J``.

    >>> e1, e2 = Multivector.vector((1, 0)), Multivector.vector((0, 1))
    >>> wedge(e1, e2).coeffs
    {(0, 1): Fraction(1, 1)}
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .algebra import HomLieAlgebra
from .errors import InputError
from .scalar import ZERO, Matrix, Vector, rational, unit

PRIMAL = "primal"
DUAL = "dual"


def _sort_sign(indices: Sequence[int]):
    """Sorted tuple and permutation sign, or ``(None, 0)`` on a repeated index."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return None, 0
    sign = 1
    # insertion sort counting transpositions
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    return tuple(idx), sign


@dataclass(frozen=True, eq=False)
class Multivector:
    """Element of ``Λ^grade`` of g (side ``"primal"``) or of g* (``"dual"``)."""

    dim: int
    grade: int
    coeffs: Mapping = field(default_factory=dict)
    side: str = PRIMAL

    def __post_init__(self):
        if self.side not in (PRIMAL, DUAL):
            raise InputError(f"unknown side {self.side!r}")
        if self.grade < 0:
            raise InputError("negative grade")
        clean = {}
        for key, c in self.coeffs.items():
            key = tuple(key)
            if len(key) != self.grade:
                raise InputError(f"key {key} does not have grade {self.grade}")
            if any(not 0 <= k < self.dim for k in key):
                raise InputError(f"index out of range in {key} for dim {self.dim}")
            if any(key[a] >= key[a + 1] for a in range(len(key) - 1)):
                raise InputError(f"key {key} is not strictly increasing")
            c = rational(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    # -- construction --------------------------------------------------------

    @classmethod
    def zero(cls, dim: int, grade: int, side: str = PRIMAL) -> "Multivector":
        return cls(dim, grade, {}, side)

    @classmethod
    def scalar(cls, dim: int, value, side: str = PRIMAL) -> "Multivector":
        return cls(dim, 0, {(): value}, side)

    @classmethod
    def basis(cls, dim: int, indices: Sequence[int], side: str = PRIMAL) -> "Multivector":
        key, sign = _sort_sign(indices)
        if key is None:
            return cls.zero(dim, len(indices), side)
        return cls(dim, len(key), {key: sign}, side)

    @classmethod
    def vector(cls, v: Sequence, side: str = PRIMAL) -> "Multivector":
        return cls(len(v), 1, {(k,): c for k, c in enumerate(v)}, side)

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence], side: str = PRIMAL, dim: int = None) -> "Multivector":
        """``v_1 ∧ ... ∧ v_k`` for coefficient vectors ``v_a``."""
        if not vectors:
            if dim is None:
                raise InputError("dimension required for the empty wedge")
            return cls.scalar(dim, 1, side)
        out = cls.vector(vectors[0], side)
        for v in vectors[1:]:
            out = wedge(out, cls.vector(v, side))
        return out

    # -- arithmetic ----------------------------------------------------------

    def _check_compatible(self, other: "Multivector"):
        if (self.dim, self.grade, self.side) != (other.dim, other.grade, other.side):
            raise InputError(
                f"incompatible multivectors: {(self.dim, self.grade, self.side)} vs "
                f"{(other.dim, other.grade, other.side)}"
            )

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return Multivector(self.dim, self.grade, out, self.side)

    def __neg__(self) -> "Multivector":
        return self.scale(-1)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, c) -> "Multivector":
        c = rational(c)
        return Multivector(self.dim, self.grade, {k: c * v for k, v in self.coeffs.items()}, self.side)

    def __rmul__(self, c) -> "Multivector":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return (self.dim, self.grade, self.side, self.coeffs) == (other.dim, other.grade, other.side, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.dim, self.grade, self.side, tuple(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        sym = "e" if self.side == PRIMAL else "e^"
        if not self.coeffs:
            return f"Multivector(0, grade={self.grade}, {self.side})"
        terms = " + ".join(f"{c}*" + "∧".join(f"{sym}{i + 1}" for i in k) for k, c in self.coeffs.items())
        return f"Multivector({terms})"

    def as_side(self, side: str) -> "Multivector":
        """Same coefficients, relabelled.  Used when g* is treated as an algebra in its own right."""
        return Multivector(self.dim, self.grade, self.coeffs, side)

    def to_vector(self) -> Vector:
        if self.grade != 1:
            raise InputError("only grade-1 multivectors convert to vectors")
        return tuple(self.coeffs.get((k,), ZERO) for k in range(self.dim))


def wedge(P: Multivector, Q: Multivector) -> Multivector:
    if P.side != Q.side:
        raise InputError("cannot wedge multivectors from different sides")
    if P.dim != Q.dim:
        raise InputError("dimension mismatch in wedge")
    grade = P.grade + Q.grade
    out = {}
    if grade <= P.dim:
        for I, a in P.coeffs.items():
            for J, b in Q.coeffs.items():
                key, sign = _sort_sign(I + J)
                if key is None:
                    continue
                out[key] = out.get(key, ZERO) + sign * a * b
    return Multivector(P.dim, grade, out, P.side)


def apply_map(M: Matrix, P: Multivector) -> Multivector:
    """Factorwise action ``M ∧ ... ∧ M`` on a multivector (M square, same side)."""
    if M.shape != (P.dim, P.dim):
        raise InputError(f"map of shape {M.shape} cannot act on dim-{P.dim} multivectors")
    cols = M.columns()
    out = Multivector.zero(P.dim, P.grade, P.side)
    for I, c in P.coeffs.items():
        out = out + Multivector.from_vectors([cols[i] for i in I], P.side, P.dim).scale(c)
    return out


def _check_bracket_args(g: HomLieAlgebra, *mvs: Multivector):
    for m in mvs:
        if m.side != PRIMAL:
            raise InputError("the extended bracket acts on primal multivectors")
        if m.grade == 0:
            raise InputError("the extended bracket is undefined on grade 0")
        if m.dim != g.dim:
            raise InputError(f"multivector dim {m.dim} does not match algebra dim {g.dim}")


def extended_bracket(g: HomLieAlgebra, P: Multivector, Q: Multivector) -> Multivector:
    """Bracket on ``Λ•g`` extending the hom-Lie bracket.

    On monomials ``x_1∧...∧x_m`` and ``y_1∧...∧y_n`` this is the signed sum over
    ``(i, j)`` of ``[x_i, y_j]`` wedged with the twisted remaining factors.
    """
    _check_bracket_args(g, P, Q)
    n = g.dim
    m, q = P.grade, Q.grade
    grade = m + q - 1
    out = Multivector.zero(n, grade)
    if grade > n:
        return out
    phi = g.twist.columns()
    for I, a in P.coeffs.items():
        for J, b in Q.coeffs.items():
            coef = a * b
            for s, i in enumerate(I):
                rest_i = [phi[x] for t, x in enumerate(I) if t != s]
                for t, j in enumerate(J):
                    br = g.basis_bracket(i, j)
                    if not any(br):
                        continue
                    rest_j = [phi[y] for u, y in enumerate(J) if u != t]
                    term = Multivector.from_vectors([br] + rest_i + rest_j, PRIMAL, n)
                    sign = -1 if (s + t) % 2 else 1
                    out = out + term.scale(sign * coef)
    return out


def ad_multi(g: HomLieAlgebra, x: Sequence, P: Multivector) -> Multivector:
    """``ad_x P = [x, P]`` on a primal multivector."""
    return extended_bracket(g, Multivector.vector(tuple(rational(c) for c in x)), P)


def coad_matrix(g: HomLieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``ad*_x`` on g*: ``<ad*_x ξ, y> = -<ξ, [x, y]>``."""
    return -(g.ad(x).T)


def ad_star_multi(g: HomLieAlgebra, x: Sequence, Phi: Multivector) -> Multivector:
    """Coadjoint action on ``Λ^p g*``; the twist enters as its transpose on the untouched factors."""
    if Phi.side != DUAL:
        raise InputError("ad* acts on dual multivectors")
    if Phi.dim != g.dim:
        raise InputError("dimension mismatch")
    n = g.dim
    coad = coad_matrix(g, x).columns()
    phiT = g.twist.T.columns()
    out = Multivector.zero(n, Phi.grade, DUAL)
    for I, c in Phi.coeffs.items():
        for s, i in enumerate(I):
            factors = [coad[k] if t == s else phiT[k] for t, k in enumerate(I)]
            out = out + Multivector.from_vectors(factors, DUAL, n).scale(c)
    return out


def pair(A: Multivector, B: Multivector):
    """Determinant pairing of a dual and a primal multivector of equal grade (either order)."""
    if A.side == B.side:
        raise InputError("pairing needs one primal and one dual argument")
    if A.grade != B.grade:
        raise InputError(f"cannot pair grade {A.grade} with grade {B.grade}")
    if A.dim != B.dim:
        raise InputError("dimension mismatch in pairing")
    small, big = (A, B) if len(A.coeffs) <= len(B.coeffs) else (B, A)
    return sum((c * big.coeffs[k] for k, c in small.coeffs.items() if k in big.coeffs), ZERO)


def evaluate_trivector(W: Multivector, xi: Sequence, eta: Sequence) -> Vector:
    """The vector ``W(ξ, η)`` in g defined by ``<γ, W(ξ, η)> = <ξ∧η∧γ, W>``."""
    if W.side != PRIMAL or W.grade != 3:
        raise InputError("expected a primal trivector")
    n = W.dim
    xe = Multivector.from_vectors([xi, eta], DUAL)
    return tuple(pair(wedge(xe, Multivector.vector(unit(n, k), DUAL)), W) for k in range(n))


def bivector_from_terms(dim: int, terms: Mapping) -> Multivector:
    """Build ``Σ c · e_i∧e_j`` from ``{(i, j): c}`` with arbitrary index order."""
    out = Multivector.zero(dim, 2)
    for (i, j), c in terms.items():
        out = out + Multivector.basis(dim, (i, j)).scale(c)
    return out


def r_sharp_matrix(R: Multivector) -> Matrix:
    """Matrix of ``R♯: g* -> g`` with ``<R♯(ξ), η> = <R, ξ∧η>``."""
    if R.side != PRIMAL or R.grade != 2:
        raise InputError("expected a primal bivector")
    n = R.dim
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), c in R.coeffs.items():
        # R♯(e^i) has e_j-coefficient c; R♯(e^j) has e_i-coefficient -c
        rows[j][i] += c
        rows[i][j] -= c
    return Matrix(rows, n)
