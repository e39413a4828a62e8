"""Homology and Euler characteristics of generalized anchored configuration spaces."""

__version__ = "0.1.0"

from .combinatorics import binomial, pow_conv, stirling2
from .complex import (
    ChainComplex,
    VertexEdgeTuple,
    boundary_matrix,
    build_complex,
    enumerate_cells,
    quotient_complex,
)
from .errors import (
    AnchorHomError,
    HypothesisViolation,
    IntegrityError,
    InvalidParameterError,
    ResourceError,
    StateError,
)
from .euler import (
    EulerReport,
    euler_anchored,
    euler_brute_force,
    euler_closed_form,
    euler_cycle_generalized,
)
from .graph import AnchorSpec, CycleGraph, Graph, make_cycle, validate_for_euler
from .homology import HomologyResult, betti_closed_form, euler_poincare, homology
from .smith import SNFResult, rational_rank, smith_normal_form
from .sparse import SparseIntMatrix
