"""Exact-arithmetic construction and certification of quadratic plane maps
fixing three concurrent lines, their Picard-lattice actions, and the group
they generate."""

from .errors import (
    BadConfiguration,
    ConstructionFailed,
    CoxforgeError,
    DivisionByZero,
    DuplicateIndices,
    FieldMismatch,
    InadmissibleTau,
    Inconclusive,
    Indeterminate,
    IndexOutOfRange,
    NoSalemFactor,
    NotBasic,
    NotCubicFixing,
    NotDivisible,
    OrbitMismatch,
    RelationFailed,
    SearchBoundExceeded,
)
from .intpoly import (
    IntPolynomial,
    cyclotomic,
    min_poly_of_power,
    min_poly_of_product,
    poly_divide_exact,
    squarefree_part,
    strip_cyclotomic,
)
from .numfield import NFElem, NumberField, RootSelector
from .roots import Enclosure, RootClassification, classify_roots, largest_real_root
from .lattice import (
    Lattice,
    LatticeIsometry,
    char_poly,
    cremona_reflection,
    lefschetz_number,
    simple_reflection,
    spectral_radius,
    word,
)
from .salem import LEHMER, SalemVerdict, is_salem, power_is_salem, product_class
from .perm import ALL_PERMS, Perm3, parse_perm
from .plane import (
    OrbitData,
    ProjLinearMap,
    ProjPoint,
    QuadraticMap,
    cremona_apply,
    exceptional_data,
    inverse,
    orbit_data,
    quad_apply,
)
from .cubic import CubicPoint, RestrictionMap, collinear, embed, nonodal_kernel, restriction_of
from .diller import (
    ConstructedMap,
    DillerSolution,
    admissible_sigmas,
    construct_map,
    six_maps_n5,
    solve_parameters,
)
from .picard import (
    GeometricBasis,
    action_from_orbit_data,
    bk_charpoly,
    errata_report,
    induced_action,
)
from .groupengine import (
    GroupContext,
    build_context,
    classify_subgroup,
    enumerate_words,
    eval_word,
    normal_form,
    parse_word,
    verify_commutation,
    verify_dihedral,
    word_determinant,
    word_dyndeg,
)
from .realize import Certificate, build_omega, nonrealizability_certificate

__version__ = "0.1.0"
