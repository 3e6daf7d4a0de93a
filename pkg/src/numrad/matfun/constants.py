# Contour quadrature
INITIAL_NODES = 64
MAX_NODES = 2**14
QUADRATURE_RTOL = 1e-10  # stop doubling when ||T_2M - T_M||_F <= this * ||T_2M||_F
NODE_CHUNK = 1024  # resolvents solved per batched LU call
ILL_CONDITIONED_RATIO = 1e-6  # delta / w below this flags the contour

# Square roots
MAX_ROOT_REDUCTIONS = 6  # square roots taken before the contour when it would need too many nodes
DB_MAX_ITERATIONS = 100
DB_RTOL = 1e-12
CHAIN_MAX_HALVINGS = 6
CHAIN_CROSS_CHECK_RTOL = 1e-7
