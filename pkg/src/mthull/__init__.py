"""Exact arithmetic for multi-twisted codes over finite fields: reduced
generator matrices, Galois duals, hulls, and exhaustive minimum distance.
"""

from .errors import MthullError
from .gf import Field, FieldElement, make_field
from .mtcode import CodeSpec, parse_spec, format_spec, smallest_mt_containing
from .galois import dual_gpm, assumption_holds, contains, containment_witness
from .hull import classify, hull_dimension, hull_gpm
from .oracle import min_distance

__version__ = "0.1.0"

__all__ = [
    "MthullError",
    "Field",
    "FieldElement",
    "make_field",
    "CodeSpec",
    "parse_spec",
    "format_spec",
    "smallest_mt_containing",
    "dual_gpm",
    "assumption_holds",
    "contains",
    "containment_witness",
    "classify",
    "hull_dimension",
    "hull_gpm",
    "min_distance",
    "__version__",
]
