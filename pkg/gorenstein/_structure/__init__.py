# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Structure of blow-ups: connected sums, minimal generators, complete
intersections, compressed algebras and toric varieties
"""
from .compressed import (
    NO_OBSTRUCTION,
    NOT_BLOWUP,
    bug_obstruction,
    is_compressed,
    maximal_hilbert,
)
from .connected_sum import (
    ConnectedSumData,
    ConnectedSumReport,
    connected_sum,
    verify_blowdown_as_connected_sum,
    verify_blowup_as_connected_sum,
)
from .generators import (
    CompleteIntersectionReport,
    MinGenReport,
    ci_classification,
    exact_zero_divisor_partner,
    mingen_coordinates,
    mingen_homology,
)
from .toric import ToricFan, ToricPresentation, minimal_nonfaces, toric_presentation
from .watanabe import WatanabeReport, WatanabeStep, watanabe_embed
