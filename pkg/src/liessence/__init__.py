"""Essential elements of real Lie algebras, adjoint spectra and KMS temperatures."""

from .core import (
    Element,
    LieAlgebra,
    StructureError,
    Subspace,
    bracket,
    lie_closure,
    span_reduce,
    subspace_sum,
    verify_jacobi,
)
from .essential import (
    CapabilityError,
    compactness_obstruction,
    conjugate_element,
    invariance_closure,
    is_essential,
    killing_report,
)
from .kernels import BACKEND
from .thermal import find_sl2_triples, kms_temperature, modular_commutation_table

__version__ = "0.1.0"
