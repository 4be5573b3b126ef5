from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie.algebra import is_admissible, validate
from homlie.corpus import ALGEBRAS, REPRESENTATIONS, aff1
from homlie.errors import DomainError, InputError
from homlie.representations import (
    Representation,
    adjoint_rep,
    check_representation,
    coadjoint_rep,
    dual_representation,
    is_admissible_rep,
    semidirect_candidate,
    semidirect_product,
    trivial_rep,
)
from homlie.scalar import Matrix, invert, unit


@pytest.mark.parametrize("name", list(REPRESENTATIONS))
def test_corpus_representations_pass(name):
    assert check_representation(REPRESENTATIONS[name]()).passed


@pytest.mark.parametrize("name", list(REPRESENTATIONS))
def test_admissible_iff_dual_is_representation(name):
    r = REPRESENTATIONS[name]()
    assert is_admissible_rep(r) == check_representation(dual_representation(r)).passed


@pytest.mark.parametrize("name", list(REPRESENTATIONS))
def test_semidirect_product_is_valid(name):
    assert validate(semidirect_product(REPRESENTATIONS[name]())).passed


def test_aff1_coadjoint_matrices():
    r = coadjoint_rep(aff1())
    assert r.rho[0] == Matrix([[0, 0], [0, -1]], 2)
    assert r.rho[1] == Matrix([[0, 1], [0, 0]], 2)


def test_aff1_coadjoint_semidirect():
    k = semidirect_product(coadjoint_rep(aff1()))
    assert k.basis_bracket(0, 3) == (0, 0, 0, -1)
    assert k.basis_bracket(1, 3) == (0, 0, 1, 0)
    assert k.basis_bracket(0, 1) == (0, 1, 0, 0)
    assert k.basis_bracket(2, 3) == (0, 0, 0, 0)


def test_dual_of_aff1_adjoint_is_coadjoint():
    d, c = dual_representation(adjoint_rep(aff1())), coadjoint_rep(aff1())
    assert d.rho == c.rho and d.A == c.A


def test_non_admissible_adjoint():
    r = REPRESENTATIONS["aff1_diag_1_2_adjoint"]()
    assert not is_admissible_rep(r)
    assert not check_representation(dual_representation(r)).passed
    with pytest.raises(DomainError):
        coadjoint_rep(ALGEBRAS["aff1_diag_1_2"]())


def test_broken_representation_witness():
    g = aff1()
    bad = Representation(g, Matrix.identity(1), (Matrix([[1]], 1), Matrix([[1]], 1)))
    report = check_representation(bad)
    f = report.first("rep-bracket")
    # ρ([e1,e2]) = ρ(e2) = 1 but [ρ(e1), ρ(e2)] = 0
    assert (f.witness, f.lhs, f.rhs) == ((0, 1, 0), (1,), (0,))
    with pytest.raises(DomainError):
        semidirect_product(bad)
    # the candidate bracket is still assembled, and it fails validation
    assert not validate(semidirect_candidate(bad)).passed


def test_shape_errors():
    with pytest.raises(InputError):
        Representation(aff1(), Matrix.identity(2), (Matrix.identity(2),))
    with pytest.raises(InputError):
        Representation(aff1(), Matrix.identity(2), (Matrix.identity(2), Matrix.identity(3)))


def test_trivial_rep_with_swap():
    r = REPRESENTATIONS["aff1_trivial_swap"]()
    assert check_representation(r).passed and is_admissible_rep(r)


REGULAR_ADMISSIBLE = [
    n for n in ALGEBRAS
    if validate(ALGEBRAS[n]()).passed and invert(ALGEBRAS[n]().twist) is not None and is_admissible(ALGEBRAS[n]())
]


@pytest.mark.parametrize("name", REGULAR_ADMISSIBLE)
def test_twist_square_invisible_to_brackets(name):
    # <(φ*)²ξ, [x, y]> = <ξ, [x, y]> on basis triples
    g = ALGEBRAS[name]()
    n = g.dim
    phi2 = g.twist @ g.twist
    for a, i, j in product(range(n), repeat=3):
        br = g.basis_bracket(i, j)
        lhs = sum(c * b for c, b in zip(phi2.T.apply(unit(n, a)), br))
        assert lhs == br[a]


@given(st.sampled_from(REGULAR_ADMISSIBLE), st.data())
def test_coadjoint_absorbs_twist_square(name, data):
    g = ALGEBRAS[name]()
    n = g.dim
    r = coadjoint_rep(g)
    phi2T = (g.twist @ g.twist).T
    i = data.draw(st.integers(0, n - 1))
    assert r.rho[i] @ phi2T == r.rho[i]


def test_trivial_rep_on_any_algebra_passes():
    for name in ("abelian2_phi0", "free3_phi0", "sl2"):
        assert check_representation(trivial_rep(ALGEBRAS[name](), 2)).passed
