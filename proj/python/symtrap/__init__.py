"""Permutation-symmetry bookkeeping for N particles in a one-dimensional harmonic trap.

Counts are exact Python ints. Irreps are written in bracket exponent notation
("[21^2]"), and shapes may be passed either that way or as part lists.
"""

from ._symtrap import (
    AlgorithmViolation,
    ConsistencyFailure,
    DimensionGuardExceeded,
    Error,
    InvalidInput,
    NotRepresentationCharacter,
    SearchExhausted,
    adiabatic_map,
    branch_multiplicity,
    character,
    character_table,
    component_basis,
    component_degeneracy,
    conjugate,
    format_partition,
    ground_state,
    hyperangular_dimension,
    irrep_dimension,
    lambda_reduction,
    partitions,
    sector_basis,
    sector_characters,
    sectors,
    shell_degeneracy,
    shell_dimension,
    shell_reduction,
    snippet_reduction,
    spectrum,
    spin_decomposition,
    verify_sector_oracle,
    verify_shell_oracle,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
