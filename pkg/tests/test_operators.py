from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie.algebra import HomLieAlgebra, validate
from homlie.corpus import ALGEBRAS, HLSAS, LINEAR_MAPS, REPRESENTATIONS, aff1, o_operator
from homlie.errors import DomainError, InputError
from homlie.multilinear import Multivector
from homlie.operators import (
    HomLeftSymmetricAlgebra,
    OOperatorDoc,
    build_r_from_T,
    commutator_algebra,
    hlsa_conditions,
    hlsa_from_2cocycle,
    hlsa_r,
    induced_hlsa,
    is_hom_nijenhuis,
    is_o_operator,
    is_rota_baxter,
    nijenhuis_embedding,
    validate_hlsa,
)
from homlie.representations import adjoint_rep
from homlie.scalar import Matrix
from strategies import matrices

I2 = Matrix.identity(2)


def test_o_operator_examples():
    assert is_o_operator(o_operator("rota_baxter_aff1")).passed
    assert is_o_operator(o_operator("zero2")).passed
    f = is_o_operator(o_operator("identity2")).first()
    # [e1, e2] = e2 against T([e1,e2] - [e2,e1]) = 2 e2
    assert (f.axiom, f.witness, f.lhs, f.rhs) == ("o-bracket", (0, 1), (0, 1), (0, 2))


def test_o_operator_shape_error():
    with pytest.raises(InputError):
        OOperatorDoc(adjoint_rep(aff1()), Matrix.identity(3))


def test_nijenhuis_examples():
    g = aff1()
    assert is_hom_nijenhuis(g, I2)
    assert is_hom_nijenhuis(g, Matrix.zero(2, 2))
    assert is_hom_nijenhuis(ALGEBRAS["heisenberg_shear"](), ALGEBRAS["heisenberg_shear"]().twist)


@pytest.mark.parametrize("name", ["rota_baxter_aff1", "identity2", "zero2"])
def test_embedding_lemma_examples(name):
    res = nijenhuis_embedding(o_operator(name))
    assert res.agree
    assert res.o_operator == (name != "identity2")


REP_NAMES = [n for n in REPRESENTATIONS]


@given(st.sampled_from(REP_NAMES), st.data())
def test_embedding_lemma_random(name, data):
    rep = REPRESENTATIONS[name]()
    T = data.draw(matrices(rep.algebra.dim, rep.dim_v, st.integers(-1, 1)))
    assert nijenhuis_embedding(OOperatorDoc(rep, T)).agree


def test_rota_baxter():
    g = aff1()
    assert is_rota_baxter(g, LINEAR_MAPS["rota_baxter_aff1"]())
    assert is_rota_baxter(g, Matrix.zero(2, 2))
    assert not is_rota_baxter(g, I2)


@given(st.sampled_from(["aff1", "heisenberg", "sl2", "aff1_diag_1_m1"]), st.data())
def test_rota_baxter_paths_agree(name, data):
    g = ALGEBRAS[name]()
    R = data.draw(matrices(g.dim, g.dim, st.integers(-1, 1)))
    is_rota_baxter(g, R)  # raises InvariantViolation on disagreement


@pytest.mark.parametrize("name", ["e11", "zero2"])
def test_hlsa_valid(name):
    assert validate_hlsa(HLSAS[name]()).passed


def test_associative_commutative_is_hlsa():
    # polynomial-like algebra: e1 unit, e2·e2 = 0
    h = HomLeftSymmetricAlgebra(2, {(0, 0): (1, 0), (0, 1): (0, 1), (1, 0): (0, 1)}, I2)
    assert validate_hlsa(h).passed


def test_perturbed_hlsa_is_not_left_symmetric():
    assert "left-symmetry" in validate_hlsa(HLSAS["e11_perturbed"]()).axioms()


def test_commutator_of_e11_is_abelian():
    g, L = commutator_algebra(HLSAS["e11"]())
    assert g.is_abelian()
    assert L.rho[0] == Matrix([[0, 0], [-1, 0]], 2)


def test_induced_hlsa_rota_baxter():
    h = induced_hlsa(o_operator("rota_baxter_aff1"))
    assert h == HLSAS["e11"]()
    with pytest.raises(DomainError):
        induced_hlsa(o_operator("identity2"))


@given(st.data())
def test_induced_hlsa_makes_T_a_homomorphism(data):
    rep = adjoint_rep(ALGEBRAS["heisenberg"]())
    T = data.draw(matrices(3, 3, st.integers(-1, 1)))
    doc = OOperatorDoc(rep, T)
    if not is_o_operator(doc).passed:
        return
    gV, _ = commutator_algebra(induced_hlsa(doc))
    g = rep.algebra
    for i, j in product(range(3), repeat=2):
        assert T.apply(gV.basis_bracket(i, j)) == g.bracket(T.column(i), T.column(j))


def test_invertible_o_operator_recovers_product():
    # the identity is an invertible O-operator for (V, ψ, L) over the commutator algebra
    h = hlsa_from_2cocycle(aff1(), LINEAR_MAPS["form_aff1"]())
    g, L = commutator_algebra(h)
    doc = OOperatorDoc(L, Matrix.identity(2))
    assert is_o_operator(doc).passed
    assert induced_hlsa(doc) == h


def test_build_r_rota_baxter():
    out = build_r_from_T(o_operator("rota_baxter_aff1"))
    # r = e¹∧e2, with e¹ at index 2 of the double
    assert out.r == Multivector.basis(4, (1, 2)).scale(-1)
    assert out.chybe and out.o_operator_TA and out.orthogonal and out.invariant


def test_build_r_identity():
    out = build_r_from_T(o_operator("identity2"))
    assert not out.chybe and not out.o_operator_TA
    assert out.r == Multivector(4, 2, {(0, 2): -1, (1, 3): -1})


def test_build_r_errors():
    rep = REPRESENTATIONS["aff1_diag_1_2_adjoint"]()
    with pytest.raises(DomainError, match="admissible"):
        build_r_from_T(OOperatorDoc(rep, Matrix.zero(2, 2)))
    rep = REPRESENTATIONS["aff1_diag_1_m1_adjoint"]()
    with pytest.raises(DomainError, match="intertwine"):
        build_r_from_T(OOperatorDoc(rep, Matrix([[0, 1], [0, 0]], 2)))


ADMISSIBLE_REPS = ["aff1_adjoint", "aff1_coadjoint", "aff1_trivial", "heisenberg_adjoint", "heisenberg_diag_adjoint"]


@given(st.sampled_from(ADMISSIBLE_REPS), st.data())
def test_r_matrix_criterion(name, data):
    rep = REPRESENTATIONS[name]()
    n, m = rep.algebra.dim, rep.dim_v
    T = data.draw(matrices(n, m, st.integers(-1, 1)))
    if T @ rep.A != rep.algebra.twist @ T:
        return
    out = build_r_from_T(OOperatorDoc(rep, T))
    assert out.chybe == out.o_operator_TA


def test_hlsa_conditions_e11():
    assert hlsa_conditions(HLSAS["e11"]()).passed
    out = hlsa_r(HLSAS["e11"]())
    assert out.r == Multivector(4, 2, {(0, 2): -1, (1, 3): -1})
    assert out.chybe


def test_hlsa_zero_product():
    out = hlsa_r(HLSAS["zero2"]())
    assert out.algebra.is_abelian() and out.chybe


def test_perturbed_hlsa_rejected_with_triple():
    h = HLSAS["e11_perturbed"]()
    report = hlsa_conditions(h)
    f = report.first("hlsa-cond-2")
    assert f is not None and len(f.witness) == 3
    with pytest.raises(DomainError) as err:
        hlsa_r(h)
    assert len(err.value.report.failures[0].witness) == 3


def test_hlsa_r_needs_regular_psi():
    h = HomLeftSymmetricAlgebra(2, {}, Matrix.zero(2, 2))
    with pytest.raises(DomainError, match="singular"):
        hlsa_r(h)


def test_hlsa_from_2cocycle_aff1():
    h = hlsa_from_2cocycle(aff1(), LINEAR_MAPS["form_aff1"]())
    assert h.basis_mult(0, 0) == (-1, 0)
    assert h.basis_mult(1, 0) == (0, -1)
    assert h.basis_mult(0, 1) == (0, 0) and h.basis_mult(1, 1) == (0, 0)
    g, _ = commutator_algebra(h)
    assert g == aff1()


def test_hlsa_from_2cocycle_abelian_is_zero():
    B = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], 4)
    h = hlsa_from_2cocycle(HomLieAlgebra.abelian(4), B)
    assert all(not any(h.basis_mult(i, j)) for i in range(4) for j in range(4))


def test_hlsa_from_2cocycle_errors():
    g = non_unimodular()
    with pytest.raises(DomainError, match="2-cocycle"):
        hlsa_from_2cocycle(g, Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], 4))
    with pytest.raises(DomainError, match="degenerate"):
        hlsa_from_2cocycle(aff1(), Matrix.zero(2, 2))
    with pytest.raises(InputError):
        hlsa_from_2cocycle(aff1(), I2)


def non_unimodular():
    # [e1,e2]=e2, [e1,e3]=e3, e4 central: e^1∧e^2 + e^3∧e^4 fails the cyclic identity
    return HomLieAlgebra.from_structure(4, {(0, 1): (0, 1, 0, 0), (0, 2): (0, 0, 1, 0)})


def test_hlsa_from_2cocycle_rational_form():
    B = Matrix([[0, Fraction(1, 3)], [Fraction(-1, 3), 0]], 2)
    h = hlsa_from_2cocycle(aff1(), B)
    # the product does not depend on rescaling B
    assert h == hlsa_from_2cocycle(aff1(), LINEAR_MAPS["form_aff1"]())
    assert validate(commutator_algebra(h)[0]).passed
