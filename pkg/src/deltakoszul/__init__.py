"""Minimal graded resolutions, δ maps and Yoneda algebras of path-algebra quotients."""
from .algebra import GradedQuotientAlgebra, build_quotient, hilbert_function
from .delta import DeltaMap, GoodMapReport, classify, closed_form_delta, extract_delta, is_good_map
from .dsl import AlgebraFile, format_algebra, parse_algebra
from .family import (
    build_d_koszul_example,
    build_family_algebra,
    build_koszul_example,
    expected_resolution_shape,
)
from .field import QQ, PrimeField
from .quiver import Path, Quiver, Relation, enumerate_paths, validate_relations
from .resolution import (
    euler_check,
    minimal_resolution,
    projective_cover,
    top,
    trivial_module,
)
from .yoneda import (
    ExtClass,
    degree_obstruction,
    ext_groups,
    lift_class,
    minimal_generator_degrees,
    yoneda_product,
)

__version__ = "0.1.0"
