from . import field
from . import poly
from . import subspace
from . import matrix
from . import textio
