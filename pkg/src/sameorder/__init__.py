"""Finite-group order statistics over Cayley tables.

Construct the classical small-group families, compute element-order
spectra and same-order types, decide whether a type is an arithmetic
progression, and re-check the structural rules behind those notions on a
built-in corpus or on user-supplied multiplication tables.
"""

from .cayley_io import export, format_cayley, ingest, parse_cayley
from .classify import (
    APVerdict,
    ClassificationRecord,
    TheoremFinding,
    classification_record,
    classify,
    is_arithmetic_progression,
    theorem_findings,
)
from .constructors import (
    CONSTRUCTOR_LIMIT,
    affine_cyclic,
    alternating,
    central_product,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    frobenius_field,
    frobenius_inversion,
    generalized_quaternion,
    holomorph_cyclic,
    semidihedral,
    semidirect_product,
    sl2,
    symmetric,
)
from .corpus import MAX_CORPUS_ORDER, builtin_corpus, expr_order
from .errors import (
    AmbiguousCenter,
    BadParameter,
    ExprSyntaxError,
    InternalInconsistency,
    InvalidAction,
    NotAGroup,
    NotASubgroup,
    NotNormal,
    ParseError,
    SameOrderError,
    SuiteFailure,
    TheoremViolation,
)
from .expr import Atom, GroupExpr, Product, eval_expr, parse_group_expr, render
from .group import FULL_CHECK_LIMIT, FiniteGroup, StructuralProfile, from_cayley_table
from .stats import (
    AuditReport,
    OrderSpectrum,
    SameOrderType,
    cyclic_subgroup_count,
    divisibility_audit,
    order_spectrum,
    same_order_type,
)
from .numtheory import euler_phi
from .suites import SUITE_NAMES, SuiteFinding, VerificationReport, evaluate_group, run_suite

__version__ = "0.1.0"

__all__ = [
    "APVerdict",
    "AmbiguousCenter",
    "Atom",
    "AuditReport",
    "BadParameter",
    "CONSTRUCTOR_LIMIT",
    "ClassificationRecord",
    "ExprSyntaxError",
    "FULL_CHECK_LIMIT",
    "FiniteGroup",
    "GroupExpr",
    "InternalInconsistency",
    "InvalidAction",
    "MAX_CORPUS_ORDER",
    "NotAGroup",
    "NotASubgroup",
    "NotNormal",
    "OrderSpectrum",
    "ParseError",
    "Product",
    "SUITE_NAMES",
    "SameOrderError",
    "SameOrderType",
    "StructuralProfile",
    "SuiteFailure",
    "SuiteFinding",
    "TheoremFinding",
    "TheoremViolation",
    "VerificationReport",
    "affine_cyclic",
    "alternating",
    "builtin_corpus",
    "central_product",
    "classification_record",
    "classify",
    "cyclic",
    "cyclic_subgroup_count",
    "dihedral",
    "direct_product",
    "divisibility_audit",
    "elementary_abelian",
    "euler_phi",
    "eval_expr",
    "evaluate_group",
    "export",
    "expr_order",
    "format_cayley",
    "frobenius_field",
    "frobenius_inversion",
    "from_cayley_table",
    "generalized_quaternion",
    "holomorph_cyclic",
    "ingest",
    "is_arithmetic_progression",
    "order_spectrum",
    "parse_cayley",
    "parse_group_expr",
    "render",
    "run_suite",
    "same_order_type",
    "semidihedral",
    "semidirect_product",
    "sl2",
    "symmetric",
    "theorem_findings",
]
