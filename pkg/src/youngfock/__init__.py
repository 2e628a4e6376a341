"""Exact operator calculus on the Fock space of Young diagrams."""

from .partitions import Box, HalfInt, Partition, RimHookMove
from .fock import FockVector, MayaState, boson, boson_zero_eigenvalue, inner, psi, psi_star, vacuum
from .operators import (
    KerovParams,
    OperatorSpec,
    VirasoroParams,
    commutator_check,
    exp_lowering_bra,
    exp_raising,
    kerov_D,
    kerov_L,
    kerov_U,
    m_virasoro,
    rimhook_kerov,
    virasoro,
)
from .measures import MeasureSpec, MiwaParams, WeightTable, correlation, weight_table
from .rings import Poly, Scalar

__version__ = "0.1.0"
