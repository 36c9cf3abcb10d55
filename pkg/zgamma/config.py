"""
Configuration for the discrete Z^gamma engine.
Precision defaults, tolerances and export settings.
"""

# =============================================================================
# Precision
# =============================================================================

DEFAULT_BITS = 53            # Mantissa width for small grids
LARGE_GRID_BITS = 212        # Mantissa width once the grid outgrows SMALL_GRID_SIZE
SMALL_GRID_SIZE = 16         # Largest n+m still generated at DEFAULT_BITS
PRECISION_LADDER = (53, 106, 212, 424)  # Escalation steps for pattern generation
MIN_BITS = 53                # Narrowest context accepted

# Extra bits kept above the separatrix loss estimate
SEPARATRIX_MARGIN_BITS = 64

# =============================================================================
# Parameter Windows
# =============================================================================

ALPHA_MARGIN = 1e-3          # alpha must lie in [ALPHA_MARGIN, pi - ALPHA_MARGIN]

# =============================================================================
# Tolerances
# =============================================================================

KITE_TOL = 1e-10             # Relative edge spread at even vertices
ANGLE_TOL = 1e-8             # Intersection angle deviation (radians)
TANGENCY_TOL = 1e-8          # |d - (R1 + R2)| relative to scale
SIGN_BAND = 1e-8             # Sign condition values below band*scale count as zero
ORIENTATION_BAND = 1e-12     # |Im ratio| / |ratio| flagged as a zero crossing
RESIDUAL_FACTOR = 1e3        # Cross-ratio and constraint residuals, in units of eps
FIELD_RESIDUAL_FACTOR = 1e6  # Radius equation residuals, in units of eps
DEGENERATE_FACTOR = 1.0      # Degeneracy threshold, in units of eps * scale

# =============================================================================
# Series and Iteration
# =============================================================================

SERIES_MAX_TERMS = 100000    # Hard cap on Gauss series terms
SERIES_TOL_FACTOR = 10       # Series tolerance in units of eps when none is given
POLE_FACTOR = 10             # Reject c within POLE_FACTOR*eps of a non-positive integer
RICCATI_N_MAX = 200          # Default Riccati horizon

# =============================================================================
# Shooting
# =============================================================================

SEED_GRID = 64               # Uniform seed points per bisection pass
SEED_GRID_REFINEMENTS = 3    # Grid densifications before giving up on a pass
Q_TOL = 1e-12                # Target bracket width
SHOOT_MAX_PASSES = 200       # Safety cap on grid passes

# =============================================================================
# Geometry Checks
# =============================================================================

BRUTEFORCE_N_CAP = 14        # Largest n+m for pairwise quad intersection tests

# =============================================================================
# Asymptotics
# =============================================================================

FIT_MIN_SIZE = 40            # Smallest n_max accepted by the power-law fit

# =============================================================================
# Export Configuration
# =============================================================================

EXPORT_DIRECTORY = 'patterns'             # Default output directory
EXPORT_TIMESTAMP_FORMAT = '%Y%m%d_%H%M%S'  # Timestamp format for filenames
JSON_SCHEMA_VERSION = 1                   # Bumped on incompatible layout changes
SVG_DIGITS = 12                           # Significant digits in SVG coordinates
SVG_SIZE = 800                            # Pixel size of the longer SVG side
SVG_MARGIN = 0.05                         # Relative padding around the drawing
