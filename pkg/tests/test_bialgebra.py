from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie.algebra import is_admissible, validate
from homlie.bialgebra import (
    BilinearForm,
    HomLieBialgebra,
    MatchedPairSpec,
    bialgebra_matched_pair,
    check_bialgebra,
    check_manin_triple,
    double,
    is_matched_pair,
    lagrangian_graph_check,
    manin_components,
    matched_pair_report,
    normalize_manin_triple,
    standard_double,
)
from homlie.corpus import BIALGEBRAS, aff1, aff1_manin
from homlie.errors import DomainError, InputError
from homlie.multilinear import Multivector, coad_matrix
from homlie.representations import coadjoint_rep, trivial_rep
from homlie.scalar import Matrix, block_diag, invert, unit
from strategies import invertible_matrices, transport

NEGATIVES = {"heisenberg_selfdual_bad", "sl2_coboundary_corrupt"}


@pytest.mark.parametrize("name", list(BIALGEBRAS))
def test_three_characterisations_agree(name):
    b = BIALGEBRAS[name]()
    direct = check_bialgebra(b).passed
    matched = is_matched_pair(bialgebra_matched_pair(b))
    manin = check_manin_triple(*manin_components(b)).passed
    assert direct == matched == manin == (name not in NEGATIVES)


@pytest.mark.parametrize("name", sorted(NEGATIVES))
def test_failure_witnesses_correspond(name):
    b = BIALGEBRAS[name]()
    n = b.dim
    direct = check_bialgebra(b)
    matched = matched_pair_report(bialgebra_matched_pair(b))
    manin = check_manin_triple(*manin_components(b))
    w1 = {f.witness for f in direct.failures if f.axiom == "bialgebra-1"}
    assert w1 and w1 == {f.witness for f in matched.failures if f.axiom == "matched-1"}
    jacobi = {f.witness for f in manin.failures if f.axiom == "k:hom-jacobi"}
    assert {(i, j, n + a) for i, j, a in w1} <= jacobi
    # values on both sides are reported, and they differ
    for f in direct.failures + matched.failures + manin.failures:
        assert tuple(f.lhs) != tuple(f.rhs)


def test_corrupt_sl2_witness_values():
    f = check_bialgebra(BIALGEBRAS["sl2_coboundary_corrupt"]()).first()
    assert (f.axiom, f.witness) == ("bialgebra-1", (1, 2, 1))


def test_aff1_zero_double_is_coadjoint_semidirect():
    k, S = standard_double(BIALGEBRAS["aff1_zero"]())
    assert k.basis_bracket(0, 3) == (0, 0, 0, -1)
    assert k.basis_bracket(1, 3) == (0, 0, 1, 0)
    assert S.matrix == Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]], 4)


def test_aff1_coboundary_double_brackets():
    k, _ = standard_double(BIALGEBRAS["aff1_coboundary"]())
    assert validate(k).passed
    assert k.basis_bracket(2, 3) == (0, 0, 1, 0)  # [e¹, e²] = e¹


def test_matched_pair_with_abelian_partner():
    g = aff1()
    h = HomLieBialgebra(g, {}).dual
    mp = MatchedPairSpec(g, h, coadjoint_rep(g), trivial_rep(h, 2, Matrix.identity(2)))
    assert is_matched_pair(mp)
    assert double(mp) == standard_double(BIALGEBRAS["aff1_zero"]())[0]


def test_matched_pair_rejects_mismatched_dimensions():
    g = aff1()
    with pytest.raises(InputError):
        MatchedPairSpec(g, g, trivial_rep(g, 1), trivial_rep(g, 2))


def test_standard_double_verifies():
    with pytest.raises(DomainError):
        standard_double(BIALGEBRAS["heisenberg_selfdual_bad"]())
    k, _ = standard_double(BIALGEBRAS["heisenberg_selfdual_bad"](), verify=False)
    assert not validate(k).passed


@pytest.mark.parametrize("name", sorted(set(BIALGEBRAS) - NEGATIVES))
def test_normalize_round_trip(name):
    b = BIALGEBRAS[name]()
    assert normalize_manin_triple(*manin_components(b)) == b


@given(st.sampled_from(sorted(set(BIALGEBRAS) - NEGATIVES)), st.data())
def test_normalize_after_change_of_basis(name, data):
    b = BIALGEBRAS[name]()
    n = b.dim
    A = data.draw(invertible_matrices(n))
    B = data.draw(invertible_matrices(n))
    k, _, _, S = manin_components(b)
    P = block_diag(A, B)
    bg = [P.column(i) for i in range(n)]
    bh = [P.column(n + i) for i in range(n)]
    out = normalize_manin_triple(k, bg, bh, S)
    # g is read in the basis A, g* in the dual basis A^{-T}
    g2 = transport(b.g, A)
    dual2 = transport(b.dual, invert(A).T)
    assert out.g == g2
    assert out.dual == dual2
    assert check_bialgebra(out).passed


def test_normalize_rescaled_aff1():
    k, bg, bh, S = manin_components(BIALGEBRAS["aff1_coboundary"]())
    out = normalize_manin_triple(k, [tuple(2 * c for c in v) for v in bg], bh, S)
    # [2e1, 2e2] = 2·(2e2); dual basis is e^i/2, so [e¹/2, e²/2] = ½·(e¹/2)
    assert out.g.basis_bracket(0, 1) == (0, 2)
    assert out.dual.basis_bracket(0, 1) == (Fraction(1, 2), 0)


def test_manin_input_errors():
    k, bg, bh, S = manin_components(BIALGEBRAS["aff1_zero"]())
    with pytest.raises(InputError):
        check_manin_triple(k, bg, bg, S)
    with pytest.raises(InputError):
        check_manin_triple(k, bg, bh, BilinearForm(Matrix.zero(4, 4), True))
    with pytest.raises(InputError):
        check_manin_triple(k, bg[:1], bh, S)


def test_manin_axiom_failures():
    k, bg, bh, S = manin_components(BIALGEBRAS["aff1_zero"]())
    # a split into g and a non-isotropic complement
    mixed = [unit(4, 2), tuple(a + b for a, b in zip(unit(4, 3), unit(4, 1)))]
    report = check_manin_triple(k, bg, mixed, S)
    assert "isotropy-g'" in report.axioms()
    # identity form is not invariant on a non-abelian double
    report = check_manin_triple(k, bg, bh, BilinearForm(Matrix.identity(4), True))
    assert "invariance-bracket" in report.axioms()


def test_aff1_manin_document():
    m = aff1_manin()
    assert check_manin_triple(m.algebra, m.basis_g, m.basis_g2, m.form).passed


@pytest.mark.parametrize("name", sorted(set(BIALGEBRAS) - NEGATIVES))
def test_twisted_coadjoint_identity(name):
    # [ξ, ad*_{φy} η]_* = [(φ*)²ξ, ad*_{φy} η]_* when both sides are admissible
    b = BIALGEBRAS[name]()
    g, gs = b.g, b.dual
    assert is_admissible(g) and is_admissible(gs)
    n = g.dim
    phiT2 = gs.twist @ gs.twist
    for y, a, c in product(range(n), repeat=3):
        v = coad_matrix(g, g.phi(unit(n, y))).column(c)
        xi = unit(n, a)
        assert gs.bracket(xi, v) == gs.bracket(phiT2.apply(xi), v)


def test_lagrangian_aff1():
    b = BIALGEBRAS["aff1_coboundary"]()
    res = lagrangian_graph_check(b, Multivector.basis(2, (0, 1)))
    assert res.graph_closed and res.mc_zero and res.twist_compat


def test_lagrangian_heisenberg_negative():
    res = lagrangian_graph_check(BIALGEBRAS["heisenberg_zero"](), Multivector.basis(3, (0, 1)))
    assert not res.graph_closed and not res.mc_zero and res.twist_compat
    assert res.witness == ("bracket", 0, 1)
    assert res.lhs != res.rhs


def test_lagrangian_rejects_non_bialgebra():
    with pytest.raises(DomainError):
        lagrangian_graph_check(BIALGEBRAS["sl2_coboundary_corrupt"](), Multivector.basis(3, (0, 1)))
