"""Exact arithmetic for integer-edge wheel embeddings and odd-distance wheels."""

__version__ = "0.1.0"

from .exactnum import MultiSurd, Rotation, RotationKind, squarefree_decompose
from .triangle import IntTriangle, angle_class, characteristic, triangle_cos, triangle_sin
from .classalgebra import (
    bipartition,
    build_transition_graph,
    enumerate_odd_solutions,
    eq4_holds,
    parity_certificate,
)
from .wheel import (
    Certificate,
    CertificateKind,
    WheelLengths,
    certify_odd_wheel,
    class_trail,
    closure_decide,
    realizable,
    residual_group_check,
    verify_coordinates,
)
from .pointset import characteristic_invariance, validate_integral
from .search import search_wheels
