"""Conic bundles on rational elliptic surfaces, in exact integer arithmetic."""

from .admissibility import AdmissibilityReport, admits
from .conics import (
    ConicClass,
    FiberType,
    SingularConicFiber,
    classify_fiber,
    enumerate_conic_bundles,
    enumerate_singular_fibers,
    find_fiber_shapes,
    verify_conic_class,
)
from .construction import PlanePencil, conic_class_from_pencil
from .errors import DomainError, ModelFormatError, ResconicError
from .kodaira import (
    FiberGraph,
    KodairaType,
    build_fiber_graph,
    euler_number,
    fiber_multiplicities,
    mw_rank,
    parse_config,
    validate_config,
)
from .lattice import ANTICANONICAL, CANONICAL, DivisorClass, exceptional, intersect
from .modelfile import load_model, parse_model
from .surface import SurfaceModel, negative_curve_inventory, validate_model

__version__ = "0.1.0"

__all__ = [
    "ANTICANONICAL", "AdmissibilityReport", "CANONICAL", "ConicClass", "DivisorClass",
    "DomainError", "FiberGraph", "FiberType", "KodairaType", "ModelFormatError", "PlanePencil",
    "ResconicError", "SingularConicFiber", "SurfaceModel", "admits", "build_fiber_graph",
    "classify_fiber", "conic_class_from_pencil", "enumerate_conic_bundles",
    "enumerate_singular_fibers", "euler_number", "exceptional", "fiber_multiplicities",
    "find_fiber_shapes", "intersect", "load_model", "mw_rank", "negative_curve_inventory",
    "parse_config", "parse_model", "validate_config", "validate_model", "verify_conic_class",
]
