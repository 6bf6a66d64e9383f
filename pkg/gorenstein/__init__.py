# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
#
# Import functions/classes to make the public API
from . import constants
from ._apolarity import (
    AlgebraMap,
    ArtinianAlgebra,
    GradedIdeal,
    OrientedAlgebra,
    ThomData,
    annihilator,
    colon,
    dual_generator,
    hilbert_combination,
    ideal_combine,
    is_projection,
    make_map,
    membership,
    natural_map,
    orient,
    preimage,
    quotient,
    rescale_orientation,
    thom_class,
)
from ._blowup import (
    AxiomsReport,
    BlowUpParameters,
    BlowUpResult,
    CriterionReport,
    DualBlowUp,
    DualBlowUpReport,
    FamilyFiber,
    GDualPolynomial,
    HatAlgebra,
    blowup_dual,
    blowup_ideal,
    blowup_polynomial,
    blowup_ring,
    bumd_status,
    cohomological_blowup,
    construct_hat,
    dual_pair_from_cofactor,
    exceptional_divisor,
    exceptional_form,
    family_fiber,
    g_dual_polynomial,
    gorenstein_criterion,
    hat_ideal,
    is_free_extension,
    lambda_family_fiber,
    monic_polynomial,
    rescale_blowup_variable,
    split_monic,
    truncated_extension,
    verify_blowup_axioms,
)
from ._cli import main
from ._cli.gallery import verify_all, verify_example
from ._cli.report import Report
from ._cli.session import SessionError, run_session, run_text
from ._errors import (
    ConditionFailed,
    ConsistencyError,
    DegenerateColon,
    DualProductOverlap,
    DuplicateVariable,
    EnumerationTooLarge,
    IllDefined,
    InvalidFan,
    NotArtinian,
    NotFactored,
    NotGorenstein,
    NotMonic,
    NotRegularSequence,
    NotSquare,
    NotSurjective,
    OrientationMissing,
    PolynomialSyntaxError,
    RingMismatch,
    ThomMismatch,
    UnknownVariable,
    WrongDegree,
    ZeroForm,
    ZeroInverse,
    ZeroThomClass,
)
from ._exact import (
    QQ_FIELD,
    Echelon,
    FieldSpec,
    determinant,
    field_inverse,
    mat_kernel,
    mat_mul,
    mat_rank,
    mat_solve,
    matrix,
    row_echelon,
)
from ._lefschetz import (
    HilbertCombinatorics,
    LefschetzVerdict,
    dominates,
    enumerate_forms,
    generic_lefschetz,
    hilbert_combinatorics,
    jordan_from_ranks,
    jordan_type,
    lefschetz_status,
    multiplication_matrix,
    nilpotent_jordan_type,
    random_forms,
    symbolic_lefschetz_determinant,
)
from ._polys import (
    GradedRing,
    Polynomial,
    adjoin_variable,
    contract,
    parse_factored,
    parse_poly,
)
from ._structure import (
    NO_OBSTRUCTION,
    NOT_BLOWUP,
    CompleteIntersectionReport,
    ConnectedSumData,
    ConnectedSumReport,
    MinGenReport,
    ToricFan,
    ToricPresentation,
    WatanabeReport,
    WatanabeStep,
    bug_obstruction,
    ci_classification,
    connected_sum,
    exact_zero_divisor_partner,
    is_compressed,
    maximal_hilbert,
    mingen_coordinates,
    mingen_homology,
    minimal_nonfaces,
    toric_presentation,
    verify_blowdown_as_connected_sum,
    verify_blowup_as_connected_sum,
    watanabe_embed,
)
from ._version import __version__

# Append a leading "v" to the generated version by setuptools_scm
__version__ = f"v{__version__}"
