"""Exact characters of symmetric groups and the decomposition of the
permutation character of ``S_2n`` on cosets of the centralizer of an n-cycle."""

from .centralizer import (
    CentralizerElementType,
    Decomposition,
    brute_force_decompose,
    centralizer_type_counts,
    coset_index,
    decompose_phi,
    merge_types,
    multiplicity,
    phi_class_function,
    sigma_power_type,
)
from .characters import (
    ClassFunction,
    MemoCache,
    character,
    character_table,
    degree,
    induce,
    inner_product,
    mn_value,
    restrict,
)
from .closed_forms import (
    ClosedFormResult,
    Family,
    mult_hook_one,
    mult_square,
    mult_trivial,
    mult_two_row,
    mult_two_row_k2,
    verify_closed_forms,
)
from .errors import CacheConsistencyError, ContractViolation, DomainError, IntegralityError
from .partitions import (
    Partition,
    RimHookRemoval,
    centralizer_order,
    class_size,
    enumerate_partitions,
    inner_corners,
    outer_corners,
    parse_partition,
    rim_hooks,
)

__version__ = "0.1.0"
