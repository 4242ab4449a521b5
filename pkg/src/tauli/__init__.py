"""Explicit tau-Li coefficient criteria for zero regions of L-functions.

Constants and index thresholds from a zero-count model, truncated tau-Li
coefficients over zero lists, the geometry of ``|rho/(rho - tau)| >= R`` and
brute-force checks of the supporting inequalities.
"""

from .constants import ConstantBundle, constant_bundle, k1, k2, k3, k4, k3_positivity_threshold, m_f
from .errors import (
    DomainError,
    InadmissibleError,
    InfeasibleError,
    SingularityError,
    StripViolation,
    TermOverflow,
    ZeroFileError,
)
from .mobius import li_partial, li_term, mobius_map, re_li_partial, tail_sum
from .regions import boundary_curve, classify, kadiri_sigma, mccurley_sigma, region
from .special_functions import lambert_w, lambert_w0, lambert_wm1
from .thresholds import (
    ThresholdReport,
    detector_threshold,
    interval_direct,
    theorem1_N,
    theorem2,
    theorem2_interval,
    theorem2_R_cap,
    theorem2_T_floor,
    theorem3_N,
)
from .zero_model import (
    ZeroCountModel,
    ZeroSet,
    catalog_dirichlet,
    catalog_newform,
    count_estimate_integer,
    count_lower,
    count_upper,
    dyadic_count_lower,
    dyadic_count_upper,
    load_model,
    load_zeros,
    synthesize_zeros,
)

__version__ = "0.1.0"
