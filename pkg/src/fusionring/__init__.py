"""Exact Verlinde fusion rings and the simple-current theory of non-simply-connected groups."""

__version__ = "0.1.0"

from .errors import FusionRingError, InputError, NotPrequantizableError, ResourceError, UnsupportedError
from .rootdata import RootDatum, Weight, Coweight, build_root_datum, enumerate_level_weights
from .tensor import tensor_decompose, weight_multiplicity, weight_system
from .fusion import FusionElement, FusionTable, brane_quantize, fuse, fusion_coefficient, fusion_table
from .modular import ModularData, modular_data, verlinde_from_s
from .center import (
    CenterCharacter,
    CenterDatum,
    Orbit,
    basic_level,
    center_action,
    center_group,
    character_of_weight,
    extension_exists,
    fundamental_level,
    multiplicative_level,
    parse_group_spec,
    partition_by_character,
    subgroup,
)
from .nsc import (
    IrrepLabel,
    ModularInvariant,
    check_modular_invariance,
    classify_irreps,
    free_orbit_fusion,
    modular_invariant,
    quantize_orbit,
    virasoro_character,
)
from .kernels import BACKEND

__all__ = [name for name in dir() if not name.startswith("_")]
