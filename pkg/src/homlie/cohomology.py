"""Hom-cochains and the coboundary operators of a representation.

A k-cochain is stored by its values on increasing basis k-tuples; values on
arbitrary vectors are recovered through the minor expansion
``f(x_1..x_k) = Σ_I det[x_a(I_b)] f(e_I)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Mapping, Sequence

from .algebra import HomLieAlgebra
from .errors import DomainError, InputError
from .multilinear import PRIMAL, Multivector, apply_map, extended_bracket
from .representations import Representation
from .scalar import ZERO, Matrix, Vector, det, kernel_basis, rational, unit, vadd, vscale, vsub, zeros


@dataclass(frozen=True, eq=False)
class Cochain:
    """Antisymmetric k-linear map from g (dim ``source``) to V (dim ``target``)."""

    k: int
    source: int
    target: int
    values: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for key, v in self.values.items():
            key = tuple(key)
            if len(key) != self.k or any(not 0 <= i < self.source for i in key):
                raise InputError(f"bad cochain key {key} for k={self.k}, dim={self.source}")
            if any(key[a] >= key[a + 1] for a in range(self.k - 1)):
                raise InputError(f"cochain key {key} is not strictly increasing")
            v = tuple(rational(c) for c in v)
            if len(v) != self.target:
                raise InputError(f"cochain value at {key} has length {len(v)}, expected {self.target}")
            if any(v):
                clean[key] = v
        object.__setattr__(self, "values", dict(sorted(clean.items())))

    @classmethod
    def zero(cls, k: int, source: int, target: int) -> "Cochain":
        return cls(k, source, target, {})

    def at(self, key) -> Vector:
        return self.values.get(tuple(key), zeros(self.target))

    def __call__(self, *vectors) -> Vector:
        if len(vectors) != self.k:
            raise InputError(f"{self.k}-cochain called with {len(vectors)} arguments")
        if self.k == 0:
            return self.at(())
        out = zeros(self.target)
        for I, val in self.values.items():
            d = det([[x[i] for i in I] for x in vectors])
            if d:
                out = vadd(out, vscale(d, val))
        return out

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.k, self.source, self.target, self.values) == (other.k, other.source, other.target, other.values)

    def __hash__(self):
        return hash((self.k, self.source, self.target, tuple(self.values.items())))

    def __add__(self, other: "Cochain") -> "Cochain":
        if (self.k, self.source, self.target) != (other.k, other.source, other.target):
            raise InputError("incompatible cochains")
        keys = set(self.values) | set(other.values)
        return Cochain(self.k, self.source, self.target, {I: vadd(self.at(I), other.at(I)) for I in keys})

    def scale(self, c) -> "Cochain":
        return Cochain(self.k, self.source, self.target, {I: vscale(c, v) for I, v in self.values.items()})


def _check_shapes(rep: Representation, f: Cochain):
    if f.source != rep.algebra.dim or f.target != rep.dim_v:
        raise InputError(
            f"cochain maps dim {f.source} -> {f.target}, representation is dim {rep.algebra.dim} on {rep.dim_v}"
        )


def is_hom_cochain(rep: Representation, f: Cochain) -> bool:
    """``A(f(x_1..x_k)) == f(φx_1, .., φx_k)`` on increasing basis tuples."""
    _check_shapes(rep, f)
    phi = rep.algebra.twist.columns()
    for I in combinations(range(f.source), f.k):
        if rep.A.apply(f.at(I)) != f(*[phi[i] for i in I]):
            return False
    return True


def _apply_power(M: Matrix, v: Sequence, k: int) -> Vector:
    for _ in range(k):
        v = M.apply(v)
    return tuple(v)


def _bracket_terms(g: HomLieAlgebra, f: Cochain, xs: list) -> Vector:
    """``Σ_{i<j} (-1)^{i+j} f([x_i, x_j], φx_1, .., x̂_i, .., x̂_j, .., φx_{k+1})`` (1-based signs)."""
    out = zeros(f.target)
    phix = [g.phi(x) for x in xs]
    for a, b in combinations(range(len(xs)), 2):
        args = [g.bracket(xs[a], xs[b])] + [phix[c] for c in range(len(xs)) if c not in (a, b)]
        val = f(*args)
        out = vsub(out, val) if (a + b) % 2 else vadd(out, val)
    return out


def coboundary(rep: Representation, f: Cochain) -> Cochain:
    """Hom-coboundary ``d_ρ f``; the action term twists its argument by ``φ^k`` for a k-cochain."""
    _check_shapes(rep, f)
    if not is_hom_cochain(rep, f):
        raise DomainError("coboundary is defined on hom-cochains only")
    g = rep.algebra
    n, k = g.dim, f.k
    values = {}
    for J in combinations(range(n), k + 1):
        xs = [unit(n, j) for j in J]
        total = zeros(f.target)
        for a, x in enumerate(xs):
            rest = xs[:a] + xs[a + 1:]
            term = rep.act(_apply_power(g.twist, x, k)).apply(f(*rest))
            total = vsub(total, term) if a % 2 else vadd(total, term)
        if k >= 1:
            total = vadd(total, _bracket_terms(g, f, xs))
        values[J] = total
    return Cochain(k + 1, n, f.target, values)


def is_trivial_hom_cochain(g: HomLieAlgebra, f: Cochain) -> bool:
    phi = g.twist.columns()
    return all(f.at(I) == f(*[phi[i] for i in I]) for I in combinations(range(g.dim), f.k))


def trivial_coboundary(g: HomLieAlgebra, f: Cochain, check: bool = True) -> Cochain:
    """Coboundary for scalar cochains with trivial action: only the bracket terms survive.

    ``check=False`` evaluates the formula without requiring twist invariance.
    """
    if f.source != g.dim or f.target != 1:
        raise InputError("trivial coboundary needs a scalar-valued cochain on g")
    if check and not is_trivial_hom_cochain(g, f):
        raise DomainError("cochain is not invariant under the twist")
    n = g.dim
    values = {}
    if f.k >= 1:
        for J in combinations(range(n), f.k + 1):
            values[J] = _bracket_terms(g, f, [unit(n, j) for j in J])
    return Cochain(f.k + 1, n, 1, values)


def hom_cochain_basis(rep: Representation, k: int) -> list:
    """Basis of the space of k-hom-cochains, found as the kernel of ``f ↦ A∘f - f∘φ``."""
    g = rep.algebra
    n, m = g.dim, rep.dim_v
    keys = list(combinations(range(n), k))
    index = {(I, a): t for t, (I, a) in enumerate(product(keys, range(m)))}
    phi = g.twist
    rows = []
    for I in keys:
        # f(φe_{I_1}, .., φe_{I_k}) = Σ_J det(φ[J, I]) f(e_J)
        minors = {J: det([[phi[j, i] for i in I] for j in J]) for J in keys}
        for b in range(m):
            row = [ZERO] * len(index)
            for a in range(m):
                row[index[(I, a)]] += rep.A[b, a]
            for J, d in minors.items():
                if d:
                    row[index[(J, b)]] -= d
            rows.append(row)
    if not index:
        return []
    basis = kernel_basis(Matrix(rows, len(index))) if rows else [unit(len(index), t) for t in range(len(index))]
    out = []
    for vecf in basis:
        vals = {I: tuple(vecf[index[(I, a)]] for a in range(m)) for I in keys}
        out.append(Cochain(k, n, m, vals))
    return out


def is_two_cocycle(g: HomLieAlgebra, B: Matrix) -> bool:
    """``B(φx,[y,z]) + B(φy,[z,x]) + B(φz,[x,y]) = 0`` for an antisymmetric form ``B[i, j] = B(e_i, e_j)``."""
    n = g.dim
    if B.shape != (n, n):
        raise InputError(f"form has shape {B.shape}, expected {(n, n)}")
    if B.T != -B:
        raise InputError("form is not antisymmetric")
    return not cocycle_witnesses(g, B)


def bilinear(B: Matrix, x: Sequence, y: Sequence):
    return sum((x[i] * B[i, j] * y[j] for i in range(B.nrows) if x[i] for j in range(B.ncols) if y[j]), ZERO)


def cocycle_witnesses(g: HomLieAlgebra, B: Matrix) -> list:
    # the cyclic sum is alternating in (x, y, z); increasing triples suffice
    n = g.dim
    E = [unit(n, i) for i in range(n)]
    bad = []
    for i, j, k in combinations(range(n), 3):
        x, y, z = E[i], E[j], E[k]
        s = (
            bilinear(B, g.phi(x), g.bracket(y, z))
            + bilinear(B, g.phi(y), g.bracket(z, x))
            + bilinear(B, g.phi(z), g.bracket(x, y))
        )
        if s:
            bad.append(((i, j, k), s))
    return bad



def maurer_cartan_defect(b, R, check: bool = True):
    """``d*_T R + ½[R, R]`` for a bialgebra ``b`` and a primal bivector ``R``.

    ``R`` is read as a 2-cochain on g*; the result lives in ``Λ³g``.  With
    ``check=False`` the twist invariance of ``R`` is not required.
    """
    if R.side != PRIMAL or R.grade != 2 or R.dim != b.dim:
        raise InputError("expected a primal bivector of matching dimension")
    if check and apply_map(b.g.twist, R) != R:
        raise DomainError("bivector is not invariant under the twist")
    f = Cochain(2, R.dim, 1, {key: (c,) for key, c in R.coeffs.items()})
    dR = trivial_coboundary(b.dual, f, check=False)
    d_part = Multivector(R.dim, 3, {key: v[0] for key, v in dR.values.items()}, PRIMAL)
    return d_part + extended_bracket(b.g, R, R).scale(Fraction(1, 2))
