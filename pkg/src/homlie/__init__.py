"""Exact-arithmetic toolkit for hom-Lie algebras and the structures built on them."""

from .algebra import (
    Classification,
    Failure,
    HomLieAlgebra,
    ValidationReport,
    admissibility_report,
    center,
    classify,
    is_admissible,
    is_subalgebra,
    structure_tensor_oracle,
    validate,
)
from .bialgebra import (
    BilinearForm,
    HomLieBialgebra,
    MatchedPairSpec,
    check_bialgebra,
    check_manin_triple,
    double,
    is_matched_pair,
    lagrangian_graph_check,
    normalize_manin_triple,
    standard_double,
)
from .cohomology import Cochain, coboundary, is_hom_cochain, is_two_cocycle, maurer_cartan_defect, trivial_coboundary
from .documents import parse, serialize
from .errors import DomainError, HomLieError, InputError, InvariantViolation
from .multilinear import Multivector, extended_bracket, pair, wedge
from .operators import (
    HomLeftSymmetricAlgebra,
    OOperatorDoc,
    build_r_from_T,
    commutator_algebra,
    hlsa_from_2cocycle,
    hlsa_r,
    induced_hlsa,
    is_hom_nijenhuis,
    is_o_operator,
    is_rota_baxter,
    nijenhuis_embedding,
    validate_hlsa,
)
from .representations import (
    Representation,
    adjoint_rep,
    check_representation,
    coadjoint_rep,
    dual_representation,
    is_admissible_rep,
    semidirect_product,
    trivial_rep,
)
from .scalar import Matrix, invert, kernel_basis, rational, solve_linear
from .yangbaxter import (
    bform_equivalence,
    build_coboundary_bialgebra,
    check_invariance,
    check_zero_cochain,
    induced_dual_bracket,
    sharp_bracket_defect,
    r_sharp,
    schouten_square,
)

__version__ = "0.1.0"

__all__ = [
    "BilinearForm",
    "Classification",
    "Cochain",
    "DomainError",
    "Failure",
    "HomLeftSymmetricAlgebra",
    "HomLieAlgebra",
    "HomLieBialgebra",
    "HomLieError",
    "InputError",
    "InvariantViolation",
    "MatchedPairSpec",
    "Matrix",
    "Multivector",
    "OOperatorDoc",
    "Representation",
    "ValidationReport",
    "adjoint_rep",
    "admissibility_report",
    "bform_equivalence",
    "build_coboundary_bialgebra",
    "build_r_from_T",
    "center",
    "check_bialgebra",
    "check_invariance",
    "check_manin_triple",
    "check_representation",
    "check_zero_cochain",
    "classify",
    "coadjoint_rep",
    "coboundary",
    "commutator_algebra",
    "double",
    "dual_representation",
    "extended_bracket",
    "hlsa_from_2cocycle",
    "hlsa_r",
    "induced_dual_bracket",
    "induced_hlsa",
    "invert",
    "is_admissible",
    "is_admissible_rep",
    "is_hom_cochain",
    "is_hom_nijenhuis",
    "is_matched_pair",
    "is_o_operator",
    "is_rota_baxter",
    "is_subalgebra",
    "is_two_cocycle",
    "kernel_basis",
    "lagrangian_graph_check",
    "maurer_cartan_defect",
    "nijenhuis_embedding",
    "normalize_manin_triple",
    "pair",
    "parse",
    "r_sharp",
    "rational",
    "schouten_square",
    "semidirect_product",
    "serialize",
    "sharp_bracket_defect",
    "solve_linear",
    "standard_double",
    "structure_tensor_oracle",
    "trivial_coboundary",
    "trivial_rep",
    "validate",
    "validate_hlsa",
    "wedge",
]
