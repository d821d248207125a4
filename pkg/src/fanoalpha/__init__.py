"""Exact-arithmetic invariants for Fano-type geometries.

Computes, entirely over exact rationals:

* intersection-number tables and the two closed forms of the volume
  polynomial for blow-ups along complete intersections of linear-system
  members,
* truncated volume integrals, beta invariants, and the codimension-k
  lower bound k/(n+1) for normalized log canonical thresholds,
* log canonical thresholds and Hilbert-Samuel multiplicities of monomial
  ideals via Newton polyhedra, exact linear programming, and staircase
  counting,
* stability criteria with machine-checkable inequality certificates,
* a validated catalog of worked example geometries.
"""

__version__ = "0.1.0"

from .beta_invariants import (
    BetaResult,
    ProfilePiece,
    SemistabilityVerdict,
    VolumeProfile,
    beta_from_profile,
    beta_linear_subspace,
    integral_identity_check,
    lct_lower_bound,
    linear_subspace_profile,
    semistability_verdict,
    truncated_integral,
    truncated_profile,
)
from .catalog import (
    AlphaBound,
    GeometryRecord,
    builtin_records,
    index_upper_bound_record,
    load_record,
    load_records,
    lookup,
    projective_space_record,
    save_record,
    validate_record,
)
from .ci_model import (
    CIModel,
    IntersectionTable,
    center_codimension,
    intersection_table,
    volume_polynomial,
    volume_polynomial_binomial,
    volume_polynomial_moving_fixed,
)
from .exact_math import Polynomial, Rational, as_rational, binomial, format_rational
from .monomial_lct import (
    DfemCertificate,
    Facet,
    MonomialIdeal,
    MonomialValuation,
    NewtonPolyhedron,
    covolume,
    dfem_check,
    is_integrally_closed,
    lct_monomial,
    lct_power,
    lct_via_facets,
    lct_via_lp,
    length_quotient,
    multiplicity,
    newton_polyhedron,
    power_colengths,
    random_antichain_ideal,
    random_m_primary_ideal,
    reduce_to_antichain,
)
from .stability_criteria import (
    CriterionVerdict,
    TraceLine,
    Verdict,
    alpha_lower_bound_consistency,
    alpha_monotonicity_check,
    divisibility_test,
    fujita_volume_test,
    projective_space_from_top_alpha,
    stability_from_alpha_pair,
    top_alpha_volume_bound,
)

__all__ = [
    "AlphaBound",
    "BetaResult",
    "CIModel",
    "CriterionVerdict",
    "DfemCertificate",
    "Facet",
    "GeometryRecord",
    "IntersectionTable",
    "MonomialIdeal",
    "MonomialValuation",
    "NewtonPolyhedron",
    "Polynomial",
    "ProfilePiece",
    "Rational",
    "SemistabilityVerdict",
    "TraceLine",
    "Verdict",
    "VolumeProfile",
    "alpha_lower_bound_consistency",
    "alpha_monotonicity_check",
    "as_rational",
    "beta_from_profile",
    "beta_linear_subspace",
    "binomial",
    "builtin_records",
    "center_codimension",
    "covolume",
    "dfem_check",
    "divisibility_test",
    "format_rational",
    "fujita_volume_test",
    "index_upper_bound_record",
    "integral_identity_check",
    "intersection_table",
    "is_integrally_closed",
    "lct_lower_bound",
    "lct_monomial",
    "lct_power",
    "lct_via_facets",
    "lct_via_lp",
    "length_quotient",
    "linear_subspace_profile",
    "load_record",
    "load_records",
    "lookup",
    "multiplicity",
    "newton_polyhedron",
    "power_colengths",
    "projective_space_from_top_alpha",
    "projective_space_record",
    "random_antichain_ideal",
    "random_m_primary_ideal",
    "reduce_to_antichain",
    "save_record",
    "semistability_verdict",
    "stability_from_alpha_pair",
    "top_alpha_volume_bound",
    "truncated_integral",
    "truncated_profile",
    "validate_record",
    "volume_polynomial",
    "volume_polynomial_binomial",
    "volume_polynomial_moving_fixed",
]
