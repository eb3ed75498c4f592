"""Mesh-pattern statistics on permutations: catalog patterns, three
complementation-style involutions, exhaustive joint-distribution checks,
and avoidance enumeration with closed-form cross-checks."""

from ._kernels import BACKEND
from .codes import (
    ActiveZone,
    SubexceedantFunction,
    active_zone,
    big_theta,
    lehmer,
    m0_set,
    m1_set,
    phi,
    psi,
    theta_code,
    unlehmer,
)
from .enumeration import (
    ClassResult,
    ad3_members_formula,
    avoiders_132,
    check_132_321_auxiliary,
    check_ad3_structure,
    check_corner_proposition,
    count_132_with,
    enumerate_class,
    formula_132_family,
)
from .genfun import (
    BivariatePolynomial,
    UnivariatePolynomial,
    f_poly_bruteforce,
    f_poly_recurrence,
    s_poly_bruteforce,
    s_poly_recurrence,
    verify_functional_equation,
)
from .mesh import (
    CATALOG_NAMES,
    MeshPattern,
    Occurrence,
    PatternParseError,
    avoids,
    catalog,
    contains,
    count,
    flip_diagonal,
    occurrences,
    parse_pattern,
    render_pattern,
)
from .perms import Permutation, catalan, iterate_sn, perm_at_rank
from .stats import (
    STAT_NAMES,
    active_pair_positions,
    active_pairs,
    fast_count,
    lrmin,
    p13_p14_fast,
    refined_vector,
    stat_tuple,
    zone_middles,
)
from .verify import (
    ClaimSpec,
    VerificationReport,
    claim_ids,
    resolve_claim_id,
    run_all,
    run_claim,
)

__version__ = "0.1.0"

__all__ = [
    "ActiveZone",
    "BACKEND",
    "BivariatePolynomial",
    "CATALOG_NAMES",
    "ClaimSpec",
    "ClassResult",
    "MeshPattern",
    "Occurrence",
    "PatternParseError",
    "Permutation",
    "STAT_NAMES",
    "SubexceedantFunction",
    "UnivariatePolynomial",
    "VerificationReport",
    "active_pair_positions",
    "active_pairs",
    "active_zone",
    "ad3_members_formula",
    "avoiders_132",
    "avoids",
    "big_theta",
    "catalan",
    "catalog",
    "check_132_321_auxiliary",
    "check_ad3_structure",
    "check_corner_proposition",
    "claim_ids",
    "contains",
    "count",
    "count_132_with",
    "enumerate_class",
    "f_poly_bruteforce",
    "f_poly_recurrence",
    "fast_count",
    "flip_diagonal",
    "formula_132_family",
    "iterate_sn",
    "lehmer",
    "lrmin",
    "m0_set",
    "m1_set",
    "occurrences",
    "p13_p14_fast",
    "parse_pattern",
    "perm_at_rank",
    "phi",
    "psi",
    "refined_vector",
    "render_pattern",
    "resolve_claim_id",
    "run_all",
    "run_claim",
    "s_poly_bruteforce",
    "s_poly_recurrence",
    "stat_tuple",
    "theta_code",
    "unlehmer",
    "verify_functional_equation",
    "zone_middles",
]
