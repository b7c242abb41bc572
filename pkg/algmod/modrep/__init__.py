from . import groups
from . import modules
from . import textio
