"""Linear canonical transforms, linear canonical Riesz transforms and LCRT edge detection."""

from .core import (
    CLASSICAL,
    FOURIER,
    ChirpSpec,
    ParamMatrix,
    ParamPair,
    chirp_field,
    inverse,
    sharpness,
    special,
    validate,
)
from .edge import (
    EdgeMap,
    SweepPlan,
    edge_detect,
    edge_detect_rgb,
    gaussian_test_image,
    run_sweep,
)
from .errors import *  # noqa: F401,F403
from .grids import ComplexRaster, FreqGrid, SampleGrid
from .imageio import read_image, write_image
from .lcrt import (
    classical_riesz,
    hlcht_apply,
    lcht_apply,
    lcrt_apply,
    lcrt_conjugated,
    lcrt_oracle,
    riesz_symbol,
)
from .lct import (
    ChirpAliasingWarning,
    lct_forward_1d,
    lct_forward_2d,
    lct_inverse_1d,
    lct_inverse_2d,
    lct_oracle_1d,
    lct_oracle_2d,
)
from .metrics import MetricsReport, convergence_family, convergence_sweep, mse, subregion_mse
from .monogenic import MonogenicField, local_amplitude, local_orientation, local_phase, monogenic

__version__ = "0.1.0"
