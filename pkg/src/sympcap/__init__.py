"""sympcap: exact-arithmetic toolkit for type-C root calculus, symplectic
nilpotent orbits, root-exchange verification, quartic-cover lattice data and
Satake parameter bookkeeping."""

from .roots import Root, WeylElement, named_root, simple_root, commutator_support
from .orbits import (
    SymplecticPartition,
    OrbitPoset,
    enumerate_symplectic_partitions,
    dominance_compare,
    orbits_not_below,
    h_of_orbit,
    orbit_dimension,
    gk_dimension,
    dimension_equation_solve,
)
from .filtration import (
    GradedUnipotentData,
    RootCharacter,
    grade_orbit,
    heisenberg_quotient,
    generic_character,
    stabilizer_dimension,
    is_generic_character,
    split_form_check,
)
from .exchange import (
    RootGroupSet,
    ExchangeTriple,
    validate_root_group_set,
    conjugate,
    torus_scale,
    check_exchange_triple,
    check_exchange_quadruple,
)
from .corpus import load_corpus, run_entry
from .cover import (
    CoverDatum,
    TameElement,
    lattice_Y_Qn,
    dual_root_datum,
    tame_hilbert,
    sigma_D,
    cocycle_identity_check,
    distinguished_char_eval,
)
from .params import (
    ParamSet,
    SatakeEntry,
    UnitaryLabel,
    ExceptionalCharacter,
    chi_theta,
    chi_GL,
    is_exceptional,
    theta_lift_params,
    shimura_square,
    arthur_compose,
    is_tempered,
    cap_triple,
    nearly_equivalent,
)

__version__ = "0.1.0"
