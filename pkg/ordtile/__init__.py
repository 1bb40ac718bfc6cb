from . import datatypes
from . import functions
from . import core
from . import structure
from . import tiling
from . import critical
from . import multipartite
from . import extremal
from . import partial
from . import thresholds
from . import data
