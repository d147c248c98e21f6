"""Exact equivariant cohomology of GKM spaces and Kirwan kernels of their symplectic reductions."""

from .catalog import builtin, catalog_names
from .cohomology import (
    EquivariantClass,
    basis,
    betti_series,
    class_mul,
    flow_up_class,
    gkm_check,
    kunneth,
    module_action,
    module_class,
    morse_index,
    negative_euler_class,
    symplectic_class,
    unit,
)
from .io import load_space, loads, serialize
from .kirwan import (
    DomainError,
    ReductionReport,
    check_stage_dimensions,
    forget_to_subtorus,
    half_space_kernel,
    kernel_ideal,
    reduce,
    structure_constants,
    verify_class_in_kernel,
    wall_sufficiency_check,
)
from .linalg import MultiPoly, Subspace, poly_add, poly_divides, poly_mul
from .space import (
    FixedPoint,
    GKMEdge,
    GKMSpace,
    Subtorus,
    TorusAction,
    is_regular_value,
    product,
    project_moment,
    validate,
    wall_normals,
    walls,
)

__version__ = "0.1.0"
