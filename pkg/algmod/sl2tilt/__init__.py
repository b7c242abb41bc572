from . import characters
from . import words
from . import tensor
from . import closure
