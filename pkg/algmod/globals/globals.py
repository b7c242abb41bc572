import os

"""Defining global settings shared by every engine of the package."""

# the one documented seed; every randomised routine derives its
# numpy Generator (PCG64) from it unless the caller passes another
DEFAULT_SEED = 0

# field limits
MAX_PRIME = 251
MAX_FIELD_ORDER = 65536
# below this order full addition / multiplication tables are built,
# above it log / exp tables and digit vectors are used
TABLE_FIELD_ORDER = 256

# closure budgets
MAX_CLASSES = 64
MAX_DIM = 4096
MAX_DEPTH = 16

# meataxe budgets
ISO_TRIALS = 128
FITTING_TRIALS = 64
NORTON_TRIALS = 256
# commutant switches from the stacked Sylvester system to spinning
# once the number of unknowns (dim ** 2) is above this value
SYLVESTER_UNKNOWNS = 400

# group enumeration
ORDER_CAP = 2000
ENUMERATION_CAP = 50000

# syzygy / periodicity probing
SHIFT_BUDGET = 2
PROBE_WINDOW = 6

# sl2 engine
SL2_REALIZE_CAP = 27
SYMBOLIC_STATE_BUDGET = 100000
CROSSCHECK_NODE_BUDGET = 200000

FIXTURE_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
    "fixtures",
)
