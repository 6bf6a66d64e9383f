# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Default values used throughout the library and the command line interface.
"""

#: Seed of the random number generator used to draw linear forms when none is
#: given
DEFAULT_SEED = 20240711

#: Number of random linear forms drawn by a randomized Lefschetz search
DEFAULT_TRIALS = 5

#: Random linear forms have integer coefficients in ``[-DEFAULT_BOUND,
#: DEFAULT_BOUND]``
DEFAULT_BOUND = 100

#: Largest number of linear forms (counted up to scalar) that an exhaustive
#: Lefschetz search over a finite field is allowed to enumerate
EXHAUSTIVE_CAP = 20000

#: Name of the variable adjoined by the blow-up constructions
BLOWUP_VARIABLE = "xi"

#: Names of the variables adjoined, in order, by the quadratic complete
#: intersection embedding. Further variables are named ``xi2``, ``xi3``, ...
EMBEDDING_VARIABLES = ("xi", "eta", "zeta", "theta", "kappa", "omega")
