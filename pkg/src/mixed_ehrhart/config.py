"""Tunable constants.

None of these are mathematical constants; they are acceptance knobs and
numerical tolerances chosen for desk-scale instances.
"""

from fractions import Fraction

# width below which an isolating interval is accepted
ISOLATION_TOLERANCE = Fraction(1, 1024)

# dilation-convergence check: distances at these r must not increase, and the
# last one must be below this fraction of the limit's largest coefficient
CONVERGENCE_CHECKPOINTS = (4, 8, 16)
CONVERGENCE_FRACTION = Fraction(1, 4)

# random polytopes: vertices drawn from {0..RANDOM_BOX}^d
RANDOM_BOX = 3
RANDOM_MIN_POINTS = 4
RANDOM_MAX_POINTS = 8

# extra dilates compared against direct counts when validating interpolation
EHRHART_HOLDOUT = 2
