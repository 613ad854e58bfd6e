"""Search games on set partitions, the decompositions that certify who
wins them, and the graph and matroid width parameters they induce.

The kernel (canonical partition operations) runs from a compiled
extension when it is built; WIDTHGAMES_KERNEL=python forces the pure
fallback, WIDTHGAMES_KERNEL=cython insists on the extension.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .errors import *
from .ground import *
from .partitions import *
from .trees import *
from .scenario import *
from .game import *
from .decomposition import *
from .graphs import *
from .matroids import *
from .connectivity import *
from .widths import *
from . import oracle, serialize

__version__ = "0.1.0"
