from . import spin
from . import chop
from . import series
from . import isotest
from . import decompose
