import math

# Matched inputs
FAMILY_SIZE = 2  # members per family in matched ensembles
ALPHA_RANGE = (0.05, 0.95)
MAX_TRIAL_HALVINGS = 4

# Reports
GOLDEN_ATOL = 1e-9
# inner edges of the relative-slack histogram; the outer buckets are open
HISTOGRAM_EDGES = (0.0, 1e-12, 1e-9, 1e-6, 1e-3, 1e-2, 1e-1, 0.5)

# Remark example: A = diag(3 + 2i, 1)
REMARK_ENTRIES = ((3.0 + 2.0j, 0.0), (0.0, 1.0))
REMARK_GOLDENS = {
    "w^2(A)": 13.0,
    "thm-2.2 rhs": 13.0,
    "base-quarter rhs": 6.5,
    "base-refined rhs": 9.0,
    "||AA* + A*A||": 26.0,
    "sin(gamma)": 2.0 / math.sqrt(13.0),
    "threshold": 2.0 * math.sqrt(2.0) / math.sqrt(13.0),
    "cor-2.5 rhs (B = I)": 2.0 * math.sqrt(13.0),
}
