# Atomic units throughout: hbar = 1, masses in electron masses, lengths in bohr,
# energies in hartree.

# Molecular parameters used for every figure of the reference study
DEFAULT_D_E = 15.0
DEFAULT_LAMBDA = 0.5
DEFAULT_R_E = 1.0
DEFAULT_MASS = 1.0
HBAR = 1.0

# Pekeris expansion of 1/r^2 in s = exp(-lambda r)
PEKERIS_C0 = 1.0 / 12.0
PEKERIS_C1 = 10.0 / 12.0
PEKERIS_C2 = 1.0 / 12.0

# Dunkl parameter grid of the energy sweep and the densities of the ground-state plot
DEFAULT_MU_MIN = 0.0
DEFAULT_MU_MAX = 3.0
DEFAULT_MU_STEP = 0.25
DENSITY_MUS = (0.0, 1.5, 3.0)
SWEEP_LEVELS = (0, 1, 2)

# Root finding
ROOT_BRACKET_DELTA = 1e-14
RESIDUAL_TOLERANCE = 1e-12
SECANT_POLISH_STEPS = 3

# Finite-difference oracle
ORACLE_R_MIN_FACTOR = 1e-4
ORACLE_R_MAX_FACTOR = 25.0
ORACLE_POINTS = 4000
ORACLE_MIN_RECOMMENDED_POINTS = 2000
ORACLE_ORDER_BOUNDS = (1.5, 2.5)
ORACLE_ACCEPTANCE_ORDER_BOUNDS = (1.8, 2.2)
# bisection width; the default eps * |T| is dominated by the r_min barrier
ORACLE_EIGEN_TOL = 1e-13

# Quadrature
QUADRATURE_NODES = 16384
QUADRATURE_PANEL_ORDER = 16
QUADRATURE_R_MAX_SPAN = 40.0
QUADRATURE_TAIL_RATIO = 1e-14
NODE_COUNT_MIN_POINTS = 10_000

# CSV output
CSV_SIGNIFICANT_DIGITS = 12

# Acceptance grid shared by the mode comparison and the wavefunction checks
ACCEPTANCE_NS = (0, 1, 2)
ACCEPTANCE_ELLS = (0, 1, 2)
ACCEPTANCE_MUS = (0.0, 0.5, 1.0)
ALPHA_DRAWS = 1000
HARNESS_SEED = 1729
