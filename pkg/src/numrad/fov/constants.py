import math

# Angle sweeps
GRID_ANGLES = 720  # initial uniform grid of numerical_radius
SWEEP_CHUNK = 512  # Hermitian pencils per batched eigensolve
MAX_PEAKS = 32  # local maxima refined by golden-section search
GOLDEN_ITERATIONS = 60
MAX_BISECTION_ROUNDS = 60
INDEX_SWEEP_ANGLES = 2048  # boundary-sweep oracle of the sectorial index
DEFAULT_BOUNDARY_POINTS = 256
MIN_BOUNDARY_POINTS = 8

# Certificates
DEFAULT_TOL = 1e-10
ROUNDOFF_FACTOR = 64  # round-off floor of a certified radius: this * eps * ||A||_F
EPS = float.fromhex("0x1p-52")

# Accretivity and sectors
MARGIN_RTOL = 1e-10  # default margin = this * ||A||
ZERO_IM_RTOL = 1e-12  # ||Im A||_F <= this * ||A||_F reports gamma = 0 exactly
CONE_ARG_ATOL = 1e-12  # argument slack when deciding the cone orientation

HALF_PI = 0.5 * math.pi
TWO_PI = 2.0 * math.pi
