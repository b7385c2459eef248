"""fedder-dp1 - Fedder F-splitting and degree-1 del Pezzo surfaces in small characteristic"""
__version__ = "1.0.0"

from .census import CensusEngine, CensusSpec, run_census
from .classify import Classifier, classify
from .config import get_config, reload_config
from .dp1 import DP1Equation, discriminant, from_poly, j_invariant, smoothness, to_poly
from .fedder import is_fsplit_hypersurface
from .fields import field_of_order, make_field
from .logging_config import get_logger, setup_logging
from .mpoly import BinaryForm, parse_poly
from .tracing import get_tracer, setup_tracing
from .unifactor import roots

__all__ = [
    "__version__",
    "BinaryForm",
    "CensusEngine",
    "CensusSpec",
    "Classifier",
    "DP1Equation",
    "classify",
    "discriminant",
    "field_of_order",
    "from_poly",
    "get_config",
    "get_logger",
    "get_tracer",
    "is_fsplit_hypersurface",
    "j_invariant",
    "make_field",
    "parse_poly",
    "reload_config",
    "roots",
    "run_census",
    "setup_logging",
    "setup_tracing",
    "smoothness",
    "to_poly",
]
