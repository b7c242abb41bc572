from . import pgroups
from . import syzygy
