from . import errors
from . import globals
