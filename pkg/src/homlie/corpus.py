"""Named example objects shared by the tests and the golden files.

Every builder is deterministic.  Names are stable because golden files are
keyed by them.
"""
from __future__ import annotations

from .algebra import HomLieAlgebra
from .bialgebra import HomLieBialgebra, manin_components, standard_double
from .cohomology import Cochain
from .documents import ManinTriple
from .multilinear import Multivector
from .operators import HomLeftSymmetricAlgebra, OOperatorDoc
from .representations import Representation, adjoint_rep, coadjoint_rep, trivial_rep
from .scalar import Matrix
from .yangbaxter import induced_dual_bracket

I2, I3 = Matrix.identity(2), Matrix.identity(3)


def aff1(twist=None) -> HomLieAlgebra:
    """``[e1, e2] = e2``."""
    return HomLieAlgebra.from_structure(2, {(0, 1): (0, 1)}, twist)


def heisenberg(twist=None) -> HomLieAlgebra:
    """``[e1, e2] = e3``."""
    return HomLieAlgebra.from_structure(3, {(0, 1): (0, 0, 1)}, twist)


def sl2() -> HomLieAlgebra:
    # basis h, e, f
    return HomLieAlgebra.from_structure(3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)})


def so3(twist=None) -> HomLieAlgebra:
    return HomLieAlgebra.from_structure(3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, -1, 0)}, twist)


def sl2_yau() -> HomLieAlgebra:
    """sl2 twisted by the automorphism ``diag(1, 2, 1/2)``: bracket ``α[x, y]``, twist ``α``."""
    return HomLieAlgebra.from_structure(
        3, {(0, 1): (0, 4, 0), (0, 2): (0, 0, -1), (1, 2): (1, 0, 0)}, Matrix.diag(1, 2, "1/2")
    )


def aff1_coadjoint_double() -> HomLieAlgebra:
    return standard_double(HomLieBialgebra(aff1(), {}))[0]


ALGEBRAS = {
    "abelian1": lambda: HomLieAlgebra.abelian(1),
    "abelian1_phi2": lambda: HomLieAlgebra.abelian(1, Matrix.diag(2)),
    "abelian2_phi0": lambda: HomLieAlgebra.abelian(2, Matrix.zero(2, 2)),
    "abelian3": lambda: HomLieAlgebra.abelian(3),
    "free3_phi0": lambda: HomLieAlgebra.from_structure(3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0)}, Matrix.zero(3, 3)),
    "aff1": aff1,
    "aff1_diag_1_m1": lambda: aff1(Matrix.diag(1, -1)),
    "aff1_diag_1_2": lambda: aff1(Matrix.diag(1, 2)),
    "heisenberg": heisenberg,
    "heisenberg_diag": lambda: heisenberg(Matrix.diag(1, -1, -1)),
    "heisenberg_shear": lambda: heisenberg(Matrix([[1, 0, 0], [0, 1, 0], [1, 0, 1]], 3)),
    "so3_diag": lambda: so3(Matrix.diag(1, -1, -1)),
    "sl2": sl2,
    "sl2_yau": sl2_yau,
    "aff1_coadjoint_double": aff1_coadjoint_double,
    "heisenberg_plus_1": lambda: HomLieAlgebra.from_structure(4, {(0, 1): (0, 0, 1, 0)}, Matrix.diag(1, -1, -1, 1)),
    "aff1_sum": lambda: HomLieAlgebra.from_structure(4, {(0, 1): (0, 1, 0, 0), (2, 3): (0, 0, 0, 1)}),
    # invalid on purpose
    "heisenberg_bad_twist": lambda: heisenberg(Matrix.diag(1, 2, 1)),
    "jacobi_broken": lambda: HomLieAlgebra.from_structure(3, {(0, 1): (0, 0, 1), (0, 2): (1, 0, 0)}),
    "aff1_shear_bad": lambda: aff1(Matrix([[1, 1], [0, 1]], 2)),
}


def _abelian_rep_phi0() -> Representation:
    g = ALGEBRAS["free3_phi0"]()
    # A = 0 makes every family of matrices a representation
    rho = (Matrix([[0, 1], [0, 0]], 2), Matrix([[1, 0], [0, 2]], 2), Matrix.zero(2, 2))
    return Representation(g, Matrix.zero(2, 2), rho)


REPRESENTATIONS = {
    "aff1_adjoint": lambda: adjoint_rep(aff1()),
    "aff1_coadjoint": lambda: coadjoint_rep(aff1()),
    "aff1_trivial": lambda: trivial_rep(aff1()),
    "aff1_trivial_swap": lambda: trivial_rep(aff1(), 2, Matrix([[0, 1], [1, 0]], 2)),
    "aff1_diag_1_2_adjoint": lambda: adjoint_rep(ALGEBRAS["aff1_diag_1_2"]()),
    "aff1_diag_1_m1_adjoint": lambda: adjoint_rep(ALGEBRAS["aff1_diag_1_m1"]()),
    "heisenberg_adjoint": lambda: adjoint_rep(heisenberg()),
    "heisenberg_coadjoint": lambda: coadjoint_rep(heisenberg()),
    "heisenberg_diag_adjoint": lambda: adjoint_rep(ALGEBRAS["heisenberg_diag"]()),
    "heisenberg_shear_adjoint": lambda: adjoint_rep(ALGEBRAS["heisenberg_shear"]()),
    "sl2_adjoint": lambda: adjoint_rep(sl2()),
    "sl2_yau_adjoint": lambda: adjoint_rep(sl2_yau()),
    "free3_phi0_rep": _abelian_rep_phi0,
}


def heisenberg_coboundary() -> HomLieBialgebra:
    g = heisenberg()
    return HomLieBialgebra(g, induced_dual_bracket(g, Multivector.basis(3, (0, 1))))


def sl2_coboundary(corrupt: bool = False) -> HomLieBialgebra:
    """Coboundary structure of ``r = e∧f``; ``corrupt`` flips the sign of ``[e^h, e^e]``."""
    g = sl2()
    dual = induced_dual_bracket(g, Multivector.basis(3, (1, 2)))
    if corrupt:
        dual[(0, 1)] = tuple(-c for c in dual[(0, 1)])
    return HomLieBialgebra(g, dual)


BIALGEBRAS = {
    "free3_phi0": lambda: HomLieBialgebra(ALGEBRAS["free3_phi0"](), {(0, 1): (0, 0, 1), (0, 2): (0, 1, 0)}),
    "aff1_zero": lambda: HomLieBialgebra(aff1(), {}),
    "aff1_coboundary": lambda: HomLieBialgebra(aff1(), {(0, 1): (1, 0)}),
    "aff1_diag_coboundary": lambda: HomLieBialgebra(aff1(Matrix.diag(1, -1)), {(0, 1): (0, 1)}),
    "heisenberg_zero": lambda: HomLieBialgebra(heisenberg(), {}),
    "heisenberg_coboundary": heisenberg_coboundary,
    "sl2_coboundary": sl2_coboundary,
    "abelian3_heisenberg_dual": lambda: HomLieBialgebra(HomLieAlgebra.abelian(3), {(0, 1): (0, 0, 1)}),
    # negatives: valid algebras on both sides, incompatible brackets
    "heisenberg_selfdual_bad": lambda: HomLieBialgebra(heisenberg(), {(0, 1): (0, 0, 1)}),
    "sl2_coboundary_corrupt": lambda: sl2_coboundary(corrupt=True),
}

BIVECTORS = {
    "r12_dim2": lambda: Multivector.basis(2, (0, 1)),
    "r12_dim3": lambda: Multivector.basis(3, (0, 1)),
    "r23_dim3": lambda: Multivector.basis(3, (1, 2)),
    "r_pair_dim4": lambda: Multivector(4, 2, {(0, 1): 1, (2, 3): 1}),
}


def hlsa_e11() -> HomLeftSymmetricAlgebra:
    """``e1·e1 = -e2``, all other products zero, ``ψ = Id``."""
    return HomLeftSymmetricAlgebra(2, {(0, 0): (0, -1)}, I2)


HLSAS = {
    "e11": hlsa_e11,
    "e11_perturbed": lambda: HomLeftSymmetricAlgebra(2, {(0, 0): (0, -1), (0, 1): (1, 0)}, I2),
    "zero2": lambda: HomLeftSymmetricAlgebra(2, {}, I2),
}

LINEAR_MAPS = {
    "rota_baxter_aff1": lambda: Matrix([[0, 0], [1, 0]], 2),
    "identity2": lambda: I2,
    "zero2": lambda: Matrix.zero(2, 2),
    "form_aff1": lambda: Matrix([[0, 1], [-1, 0]], 2),
    "form_heisenberg_12": lambda: Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], 3),
}

COCHAINS = {
    "identity_1_aff1": lambda: Cochain(1, 2, 2, {(0,): (1, 0), (1,): (0, 1)}),
    "e2_scalar_aff1": lambda: Cochain(1, 2, 1, {(1,): (1,)}),
}


def aff1_manin() -> ManinTriple:
    k, bg, bh, S = manin_components(BIALGEBRAS["aff1_coboundary"]())
    return ManinTriple(k, tuple(bg), tuple(bh), S)


def o_operator(name: str) -> OOperatorDoc:
    return OOperatorDoc(adjoint_rep(aff1()), LINEAR_MAPS[name]())


def all_documents() -> dict:
    """Every corpus object keyed by ``kind/name``."""
    out = {}
    for name, build in ALGEBRAS.items():
        out[f"hom_lie_algebra/{name}"] = build()
    for name, build in REPRESENTATIONS.items():
        out[f"representation/{name}"] = build()
    for name, build in BIALGEBRAS.items():
        out[f"bialgebra/{name}"] = build()
    for name, build in BIVECTORS.items():
        out[f"bivector/{name}"] = build()
    for name, build in HLSAS.items():
        out[f"hlsa/{name}"] = build()
    for name, build in LINEAR_MAPS.items():
        out[f"linear_map/{name}"] = build()
    for name, build in COCHAINS.items():
        out[f"cochain/{name}"] = build()
    out["manin_triple/aff1_coboundary"] = aff1_manin()
    return out
