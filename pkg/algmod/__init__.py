__version__ = "0.0.001"

from . import globals
from . import exactla
from . import modrep
from . import meataxe
from . import homalg
from . import algtest
from . import sl2tilt
from . import cli
