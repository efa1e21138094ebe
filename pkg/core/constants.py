# Default desk-scale grid
DEFAULT_N = 2048
DEFAULT_EXTENT = 64.0

# λ sweeps
LAMBDA_MIN = 0.125
LAMBDA_MAX = 8.0
SMALL_LAMBDA_RANGE = (0.125, 0.5)
LARGE_LAMBDA_RANGE = (2.0, 8.0)
POINTS_PER_OCTAVE = 8
MIN_FIT_POINTS = 4

# Slope tolerances
GAUSSIAN_SLOPE_TOLERANCE = 0.05
BUMP_SLOPE_TOLERANCE = 0.1
RATIO_SPREAD_BUDGET = 4.0

# Window scales (Gaussian (2γ)^{1/4} e^{-πγx²})
DEFAULT_WINDOW_SCALE = 1.0
SMALL_REGIME_WINDOW_SCALE = 4.0
LARGE_REGIME_WINDOW_SCALE = 0.25

# Numerical thresholds
WINDOW_DECAY = 1e-14
SUPPORT_TAIL = 1e-12
BOUNDARY_DECAY = 1e-12
GRID_RTOL = 1e-12
NORMALIZATION_RTOL = 1e-10

# Gauss-Legendre nodes for the Taylor remainder t-integral
GAUSS_LEGENDRE_POINTS = 16

# Binary signal container
SIGNAL_FORMAT_VERSION = 1

# Local ζ quadrature for Gabor-matrix evaluation with closed-form symbols
LOCAL_QUADRATURE_N = 512
LOCAL_QUADRATURE_EXTENT = 16.0
