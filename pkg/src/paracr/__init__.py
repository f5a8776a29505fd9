"""Combinatorics of para-CR structures on flag manifolds.

Exact root-system machinery for the simple complex Lie algebras,
label-vector gradations, Satake diagrams of the real forms, and the
admissibility / alternate-split tests that decide which flag manifolds
carry an invariant para-CR structure.
"""
from .classify import (
    AbelianVerdict,
    AdmissibleVerdict,
    ClassificationReport,
    Pi1Decomposition,
    all_decompositions,
    check_abelian_part,
    check_admissible,
    classify,
    enumerate_reports,
    is_alternate,
)
from .grading import (
    Gradation,
    GradationFlags,
    IrreducibleComponent,
    depth_by_marks,
    gradation_flags,
    irreducible_components,
    labels_for,
    make_gradation,
)
from .rootsys import (
    AlgebraType,
    InvalidAlgebraError,
    RootSystem,
    build_root_system,
    cartan_matrix,
    dynkin_edges,
    dynkin_marks,
    is_root,
)
from .satake import (
    RealComponentSet,
    RealTypeVerdict,
    SatakeDiagram,
    catalog_lookup,
    check_real_type,
    real_components,
    standard_catalog,
)
from .speclang import SpecDocument, SpecError, parse_spec, print_spec

__all__ = [
    "AbelianVerdict",
    "AdmissibleVerdict",
    "AlgebraType",
    "ClassificationReport",
    "Gradation",
    "GradationFlags",
    "InvalidAlgebraError",
    "IrreducibleComponent",
    "Pi1Decomposition",
    "RealComponentSet",
    "RealTypeVerdict",
    "RootSystem",
    "SatakeDiagram",
    "SpecDocument",
    "SpecError",
    "all_decompositions",
    "build_root_system",
    "cartan_matrix",
    "catalog_lookup",
    "check_abelian_part",
    "check_admissible",
    "check_real_type",
    "classify",
    "depth_by_marks",
    "dynkin_edges",
    "dynkin_marks",
    "enumerate_reports",
    "gradation_flags",
    "irreducible_components",
    "is_alternate",
    "is_root",
    "labels_for",
    "make_gradation",
    "parse_spec",
    "print_spec",
    "real_components",
    "standard_catalog",
]
