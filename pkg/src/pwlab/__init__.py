"""Exact minimum pseudoweights and pseudocodeword redundancy of binary linear codes."""

from .bounds import (
    awgnc_upper_bound,
    bound_gap_report,
    bsc_upper_bound,
    circulant_eigenvalue_bound,
    design_lower_bound,
    detect_design,
    eigenvalue_bound,
)
from .cone import cone_contains, extreme_rays, fundamental_cone
from .constructions import (
    all_dual_codewords_matrix,
    circulant,
    hamming_parity_check,
    named_code,
    weight_w_dual_matrix,
)
from .gf2core import BinaryMatrix, LinearCode, dual_code, is_parity_check_for, kernel_code, min_distance, rank
from .search import count_distinct_optimal_matrices, exhaustive_matrix_property, pseudoredundancy, redundancy_is_finite
from .weights import min_pseudoweights, w_awgnc, w_bec, w_bsc, w_maxfrac

__version__ = "0.1.0"
