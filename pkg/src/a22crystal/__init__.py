"""Adjoint crystals of type A_2^(2), their energy functions, and Young walls."""

from .adjoint import (
    INFINITY,
    AdjointCrystal,
    AdjointElem,
    LambdaSpec,
    LimitCrystal,
    LimitElem,
    coherent_map,
    minimal_vector,
    verify_perfect,
)
from .crystal import (
    AffineCrystal,
    AffineElem,
    CrystalGraph,
    ResourceLimitError,
    TensorCrystal,
    axiom_check,
    component,
    graph_equal,
    tensor_e,
    tensor_eps,
    tensor_f,
    tensor_phi,
)
from .energy import H_affine, h_classical, verify_energy_axioms, verify_H_constancy
from .kernels import BACKEND
from .paths import Path, ground_path, multiplicity_table, path_component, path_e, path_f
from .weights import ALPHA0, ALPHA1, DELTA, LAMBDA0, LAMBDA1, ClassicalWeight, Weight, dominant, level, pair
from .youngwall import (
    Column,
    Wall,
    WallConditionError,
    WallCrystal,
    column_e,
    column_f,
    column_h,
    column_H,
    ground_wall,
    normalize,
    phi_inv,
    psi,
    render_ascii,
    signature_oracle,
    wall_e,
    wall_eps,
    wall_f,
    wall_phi,
    wall_validate,
    wall_wt,
)

__version__ = "0.1.0"
