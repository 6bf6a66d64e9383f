# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Graded ideals, Artinian quotients, Macaulay duality and algebra maps
"""
from .algebra import (
    ArtinianAlgebra,
    OrientedAlgebra,
    dual_generator,
    hilbert_combination,
    orient,
    quotient,
    rescale_orientation,
)
from .ideal import (
    GradedIdeal,
    annihilator,
    colon,
    ideal_combine,
    kernel_space,
    map_rank,
    membership,
)
from .maps import (
    AlgebraMap,
    ThomData,
    is_projection,
    make_map,
    natural_map,
    preimage,
    thom_class,
)
