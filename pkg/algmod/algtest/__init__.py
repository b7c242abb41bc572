from . import verdicts
from . import closure
from . import rules
from . import report
