"""Exact combinatorics of classical Weyl groups: a-functions, GK
dimensions of simple highest weight modules, and associated varieties of
Hermitian-type highest weight Harish-Chandra modules."""

from .afunction import a_value, a_value_symbol
from .domino import (
    DominoTableau,
    HollowTableau,
    hollow,
    insertion_tableau,
    pq_tableaux,
    recording_tableau,
)
from .gkdim import (
    CosetClass,
    coset_decompose,
    class_sequence,
    class_roots,
    gk_dimension,
    gk_report,
    make_weight,
    parse_weight,
)
from .hermitian import (
    HermitianGroup,
    NotHarishChandraError,
    OrbitResult,
    constants,
    is_hc_weight,
    orbit_dimension,
    orbit_index,
)
from .partitions import (
    ParityProfile,
    Partition,
    column_parity_count,
    row_parity,
    transpose,
    weighted_parity_sum,
)
from .rootsys import RootSystem, build, integral_subsystem, pairing, psi_plus, rho
from .signed_perms import (
    SignedPermutation,
    WeylType,
    act_on_weight,
    compose,
    group_elements,
    inverse,
    left_multiply_t,
    length,
    mirror_left,
    mirror_right,
    parse_window,
    right_multiply_t,
)
from .symbols import (
    BSymbol,
    DSymbol,
    b_symbol_of_shape,
    b_symbol_value,
    d_symbol_of_b,
    d_symbol_value,
)
from .tableaux import (
    YoungTableau,
    dual_rs_shape,
    max_union_decreasing,
    max_union_increasing,
    order_equivalent,
    rs_insert,
    rs_shape,
    shape_statistic,
)

__version__ = "0.1.0"
