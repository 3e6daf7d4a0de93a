# Applicability
COMMUTE_RTOL = 1e-8  # double commuting when ||XY - YX||_F <= this * ||X|| ||Y||, likewise against Y*
GAMMA_CUTOFF = 1e-6  # sectorial indices below this count as gamma = 0
GAMMA_ATOL = 1e-12  # slack granted to a supplied gamma or cone against the computed one

# Error propagation
ROUNDOFF_FACTOR = 64  # floor of every computed norm: this * eps * ||A||_F
EPS = float.fromhex("0x1p-52")

# Parameter defaults
DEFAULT_ALPHA = 0.5
DEFAULT_HALVINGS = 2
