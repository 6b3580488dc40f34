"""permion - exact symmetric-group and identical-particle toolkit."""

import logging

from .enums import (
    CommandStatus,
    LadderKind,
    OperatorOrder,
    OutputFormat,
    RepresentationKind,
    Statistics,
    Symmetry,
)
from .exceptions import (
    CapacityError,
    ClassFunctionError,
    ConfigurationError,
    CycleParseError,
    DegreeMismatchError,
    DimensionMismatchError,
    ModeError,
    OrderingError,
    PermionError,
    SingularMatrixError,
    TableauError,
)
from .first_quant import (
    NBodyTensor,
    antisymmetrize,
    basis_tensor,
    classify_symmetry,
    permute_particles,
    projector_rank,
    symmetrize,
)
from .linalg import RationalMatrix, determinant, mat_inverse, mat_mul, rank, trace
from .models import Limits
from .permutation import (
    CycleType,
    MultiplicationTable,
    Permutation,
    compose,
    conjugacy_classes,
    cycle_type,
    enumerate_group,
    format_cycles,
    generate_from,
    inverse,
    multiplication_table,
    parse_cycles,
    sign,
)
from .representation import (
    Representation,
    character,
    natural_rep,
    one_dim_rep,
    regular_rep,
    schur_weyl_commutation_check,
    standard_rep,
    verify_homomorphism,
)
from .second_quant import (
    FockBasis,
    FockOperator,
    OccupationString,
    boson_ladder,
    fermion_ladder,
    fock_basis,
    fock_state,
    majorana_ops,
    sector_dimension,
    slater_to_first_quantized,
    verify_car,
    verify_ccr,
    verify_generalized_car,
)
from .young import (
    GroupAlgebraElement,
    YoungFrame,
    YoungTableau,
    partitions,
    standard_tableaux,
    tableau_count_hook,
    verify_idempotent,
    young_ideal_rep,
    young_operator,
)

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    # Permutations
    "Permutation",
    "CycleType",
    "MultiplicationTable",
    "parse_cycles",
    "format_cycles",
    "compose",
    "inverse",
    "sign",
    "cycle_type",
    "enumerate_group",
    "generate_from",
    "multiplication_table",
    "conjugacy_classes",
    # Exact linear algebra
    "RationalMatrix",
    "mat_mul",
    "mat_inverse",
    "determinant",
    "rank",
    "trace",
    # Representations
    "Representation",
    "one_dim_rep",
    "natural_rep",
    "regular_rep",
    "standard_rep",
    "character",
    "verify_homomorphism",
    "schur_weyl_commutation_check",
    # Young operators
    "YoungFrame",
    "YoungTableau",
    "GroupAlgebraElement",
    "partitions",
    "standard_tableaux",
    "tableau_count_hook",
    "young_operator",
    "young_ideal_rep",
    "verify_idempotent",
    # First quantization
    "NBodyTensor",
    "basis_tensor",
    "permute_particles",
    "symmetrize",
    "antisymmetrize",
    "classify_symmetry",
    "projector_rank",
    # Second quantization
    "OccupationString",
    "FockBasis",
    "FockOperator",
    "fock_basis",
    "sector_dimension",
    "fermion_ladder",
    "boson_ladder",
    "verify_car",
    "verify_ccr",
    "fock_state",
    "majorana_ops",
    "verify_generalized_car",
    "slater_to_first_quantized",
    # Models
    "Limits",
    # Enums
    "RepresentationKind",
    "Statistics",
    "LadderKind",
    "Symmetry",
    "OperatorOrder",
    "CommandStatus",
    "OutputFormat",
    # Exceptions
    "PermionError",
    "CycleParseError",
    "DegreeMismatchError",
    "DimensionMismatchError",
    "SingularMatrixError",
    "CapacityError",
    "TableauError",
    "OrderingError",
    "ModeError",
    "ConfigurationError",
    "ClassFunctionError",
]
