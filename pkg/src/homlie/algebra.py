"""Hom-Lie algebras given by structure constants.

A :class:`HomLieAlgebra` stores ``[e_i, e_j]`` only for ``i < j``; the
swapped order is the negation and the diagonal is zero, so the bracket is
antisymmetric by construction.  All indices are 0-based.

    >>> aff1 = HomLieAlgebra.from_structure(2, {(0, 1): (0, 1)})
    >>> aff1.bracket(unit(2, 0), unit(2, 1))
    (Fraction(0, 1), Fraction(1, 1))
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Mapping, Optional, Sequence

from .errors import DomainError, InputError
from .scalar import (
    ZERO,
    Matrix,
    Vector,
    in_span,
    invert,
    kernel_basis,
    rank,
    rational,
    unit,
    vadd,
    zeros,
)


@dataclass(frozen=True)
class Failure:
    """One violated identity with its basis tuple and both evaluated sides."""

    axiom: str
    witness: tuple
    lhs: Vector
    rhs: Vector


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def axioms(self) -> set:
        return {f.axiom for f in self.failures}

    def first(self, axiom: Optional[str] = None) -> Optional[Failure]:
        for f in self.failures:
            if axiom is None or f.axiom == axiom:
                return f
        return None


class Checker:
    """Accumulates failures while scanning basis tuples."""

    def __init__(self):
        self.failures = []

    def expect(self, axiom: str, witness, lhs, rhs) -> bool:
        lhs, rhs = tuple(lhs), tuple(rhs)
        if lhs != rhs:
            self.failures.append(Failure(axiom, tuple(witness), lhs, rhs))
            return False
        return True

    def extend(self, report: ValidationReport, prefix: str = ""):
        for f in report.failures:
            self.failures.append(Failure(prefix + f.axiom, f.witness, f.lhs, f.rhs))

    def report(self) -> ValidationReport:
        return ValidationReport(tuple(self.failures))


@dataclass(frozen=True, eq=False)
class HomLieAlgebra:
    """The triple (g, bracket, twist) over the rationals.

    ``constants`` maps ``(i, j)`` with ``i < j`` to the coefficient vector of
    ``[e_i, e_j]``.  ``twist`` is the n x n matrix of the structure map.
    """

    dim: int
    constants: Mapping
    twist: Matrix
    _table: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise InputError("negative dimension")
        if self.twist.shape != (n, n):
            raise InputError(f"twist has shape {self.twist.shape}, expected {(n, n)}")
        clean = {}
        for (i, j), coeffs in self.constants.items():
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"bracket index ({i}, {j}) out of range for dim {n}")
            if i >= j:
                raise InputError(f"bracket entries need i < j, got ({i}, {j})")
            coeffs = tuple(rational(c) for c in coeffs)
            if len(coeffs) != n:
                raise InputError(f"bracket ({i}, {j}) has {len(coeffs)} coefficients, expected {n}")
            if any(coeffs):
                clean[(i, j)] = coeffs
        object.__setattr__(self, "constants", dict(sorted(clean.items())))
        table = [[zeros(n)] * n for _ in range(n)]
        for (i, j), c in clean.items():
            table[i][j] = c
            table[j][i] = tuple(-x for x in c)
        object.__setattr__(self, "_table", tuple(tuple(r) for r in table))

    @classmethod
    def from_structure(cls, dim: int, constants: Mapping, twist=None) -> "HomLieAlgebra":
        if twist is None:
            twist = Matrix.identity(dim)
        elif not isinstance(twist, Matrix):
            twist = Matrix(twist, dim)
        return cls(dim, constants, twist)

    @classmethod
    def abelian(cls, dim: int, twist=None) -> "HomLieAlgebra":
        return cls.from_structure(dim, {}, twist)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomLieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.constants == other.constants and self.twist == other.twist

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.constants.items()), self.twist))

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self._table[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        return bracket_eval(self, x, y)

    def phi(self, x: Sequence) -> Vector:
        return self.twist.apply(x)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ``y -> [x, y]``."""
        return Matrix.from_columns([self.bracket(x, unit(self.dim, j)) for j in range(self.dim)], self.dim)

    def with_twist(self, twist: Matrix) -> "HomLieAlgebra":
        return HomLieAlgebra(self.dim, self.constants, twist)

    def is_abelian(self) -> bool:
        return not self.constants


def bracket_eval(g: HomLieAlgebra, x: Sequence, y: Sequence) -> Vector:
    n = g.dim
    if len(x) != n or len(y) != n:
        raise InputError(f"bracket arguments must have length {n}")
    acc = [ZERO] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = g._table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, t in enumerate(row[j]):
                if t:
                    acc[k] += c * t
    return tuple(acc)


def validate(g: HomLieAlgebra) -> ValidationReport:
    """Check the twist is a bracket morphism and the twisted Jacobi identity.

    Both identities are multilinear, so basis tuples suffice.  Jacobi is
    checked on all ordered triples, repeats included.
    """
    n = g.dim
    phiE = g.twist.columns()
    chk = Checker()
    for i, j in combinations(range(n), 2):
        chk.expect("morphism", (i, j), g.phi(g.basis_bracket(i, j)), g.bracket(phiE[i], phiE[j]))
    for i, j, k in product(range(n), repeat=3):
        total = vadd(
            vadd(g.bracket(phiE[i], g.basis_bracket(j, k)), g.bracket(phiE[j], g.basis_bracket(k, i))),
            g.bracket(phiE[k], g.basis_bracket(i, j)),
        )
        chk.expect("hom-jacobi", (i, j, k), total, zeros(n))
    return chk.report()


def require_valid(g: HomLieAlgebra, what: str = "algebra") -> None:
    report = validate(g)
    if not report.passed:
        f = report.failures[0]
        raise DomainError(f"{what} is not a hom-Lie algebra ({f.axiom} fails at {f.witness})", report)


def admissibility_report(g: HomLieAlgebra) -> ValidationReport:
    """The two (Id - twist^2) conditions characterising an admissible algebra."""
    n = g.dim
    phi = g.twist
    defect = Matrix.identity(n) - phi @ phi
    D = defect.columns()
    P = phi.columns()
    chk = Checker()
    for i, j in product(range(n), repeat=2):
        chk.expect("admissible-1", (i, j), g.bracket(D[i], P[j]), zeros(n))
    for i, j, k in product(range(n), repeat=3):
        lhs = g.bracket(D[i], g.bracket(P[j], unit(n, k)))
        rhs = g.bracket(D[j], g.bracket(P[i], unit(n, k)))
        chk.expect("admissible-2", (i, j, k), lhs, rhs)
    return chk.report()


def is_admissible(g: HomLieAlgebra) -> bool:
    return admissibility_report(g).passed


def center(g: HomLieAlgebra) -> list:
    """Basis of ``{x : [x, e_j] = 0 for all j}``."""
    n = g.dim
    if n == 0:
        return []
    # row (j, k): coefficient of e_k in [x, e_j] as a linear form in x
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([g.basis_bracket(i, j)[k] for i in range(n)])
    return kernel_basis(Matrix(rows, n))


@dataclass(frozen=True)
class Classification:
    regular: bool
    involutive: bool
    admissible: bool
    center: tuple


def classify(g: HomLieAlgebra) -> Classification:
    require_valid(g)
    n = g.dim
    return Classification(
        regular=invert(g.twist) is not None,
        involutive=g.twist @ g.twist == Matrix.identity(n),
        admissible=is_admissible(g),
        center=tuple(center(g)),
    )


def is_subalgebra(g: HomLieAlgebra, span: Sequence[Sequence]) -> bool:
    """Whether the span is stable under the twist and closed under the bracket."""
    n = g.dim
    span = [tuple(rational(c) for c in v) for v in span]
    for v in span:
        if len(v) != n:
            raise InputError(f"span vector has length {len(v)}, expected {n}")
    if span and rank(Matrix.from_columns(span, n)) < len(span):
        raise InputError("span vectors are linearly dependent")
    for v in span:
        if not in_span(span, g.phi(v), n):
            return False
    for a, b in combinations(range(len(span)), 2):
        if not in_span(span, g.bracket(span[a], span[b]), n):
            return False
    return True


def structure_tensor_oracle(g: HomLieAlgebra) -> list:
    """Brute-force axiom scan kept deliberately separate from :func:`validate`.

    Works from the full ``c[i][j][k]`` array with explicit index sums and
    returns the list of violated ``(axiom, witness)`` pairs.
    """
    n = g.dim
    c = [[list(g.basis_bracket(i, j)) for j in range(n)] for i in range(n)]
    f = [[g.twist[a, b] for b in range(n)] for a in range(n)]  # f[a][b]: coeff of e_a in phi(e_b)
    bad = []
    for i in range(n):
        for j in range(n):
            if any(c[i][j][k] + c[j][i][k] for k in range(n)):
                bad.append(("antisymmetry", (i, j)))
            if i >= j:
                continue
            # phi([e_i, e_j]) vs [phi e_i, phi e_j]
            for k in range(n):
                lhs = sum((f[k][m] * c[i][j][m] for m in range(n)), ZERO)
                rhs = sum((f[a][i] * f[b][j] * c[a][b][k] for a in range(n) for b in range(n)), ZERO)
                if lhs != rhs:
                    bad.append(("morphism", (i, j)))
                    break
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for out in range(n):
                    s = ZERO
                    for x, (p, q, r) in enumerate(((i, j, k), (j, k, i), (k, i, j))):
                        # [phi(e_p), [e_q, e_r]]
                        for a in range(n):
                            if not f[a][p]:
                                continue
                            for m in range(n):
                                if c[q][r][m]:
                                    s += f[a][p] * c[q][r][m] * c[a][m][out]
                    if s:
                        bad.append(("hom-jacobi", (i, j, k)))
                        break
    return bad

