# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Cohomological blow-ups: quotient, Macaulay dual and ideal presentations
"""
from .construction import (
    AxiomsReport,
    BlowUpParameters,
    BlowUpResult,
    CriterionReport,
    HatAlgebra,
    blowup_polynomial,
    blowup_ring,
    cohomological_blowup,
    construct_hat,
    exceptional_divisor,
    gorenstein_criterion,
    hat_ideal,
    monic_polynomial,
    split_monic,
    truncated_extension,
    verify_blowup_axioms,
)
from .duality import (
    DualBlowUp,
    DualBlowUpReport,
    GDualPolynomial,
    blowup_dual,
    bumd_status,
    dual_pair_from_cofactor,
    exceptional_form,
    g_dual_polynomial,
    is_free_extension,
)
from .family import (
    FamilyFiber,
    family_fiber,
    lambda_family_fiber,
    rescale_blowup_variable,
)
from .ideals import blowup_ideal
