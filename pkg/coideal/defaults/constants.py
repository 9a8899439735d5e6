'''
This is a central file for defining package default constant values used across coideal modules.
@author: coideal developers
'''


# Possible values: 'product', 'staging', 'development', 'debug'
MODE: str = 'product'

# Translates to level "logging.WARN = 30"
VERBOSITY: int = 3

# A Semantic Versioning number
VERSION: str = '0.1.0'

# Version of the published report schema (coideal.models.report)
REPORT_VERSION: str = '1.0.0'

# Default seed of the randomized subalgebra and Hopf module samplers
SEED: int = 1

# Resolutions are cut at max(TRUNCATION_MIN, 2 * dim)
TRUNCATION_MIN: int = 8

# Coideal subalgebras are enumerated exhaustively only up to this dimension of H
EXHAUSTIVE_MAX_DIM: int = 4

# Rational coefficients are drawn from {-COEFFICIENT_BOX, ..., COEFFICIENT_BOX}
COEFFICIENT_BOX: int = 2

# Number of sampled Hopf modules per category
SAMPLE_SIZE: int = 20

# Sampled Hopf modules larger than this are cut down to a generated subobject
SAMPLE_MAX_DIM: int = 16

# Objects sampled for the canonical isomorphisms are cut down to this dimension
ISO_MAX_DIM: int = 8

# Number of sampled object tuples per canonical isomorphism and instance
ISO_SAMPLES: int = 3

# Random coideal subalgebras drawn per algebra for the dominion check
DRAWS: int = 13

# Sample counts of a full run: dominion draws, passing samples per canonical
# isomorphism and sampled Hopf modules in the vanishing statements
REQUIRED_DRAWS: int = 100
REQUIRED_ISO_SAMPLES: int = 20
REQUIRED_VANISHING_SAMPLES: int = 50

# Size of the worker pool used by the verifier
WORKERS: int = 4

# Set by script
ERROR = None
