from .constants import *
from .validators import *
from .words import *
from .perm import *
from .exact import *
from .presentations import *
from .schreier import *
from .reps import *
from .reports import *

__version__ = "1.0.0"
