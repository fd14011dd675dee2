"""Exact Murnaghan-Nakayama rules for symplectic, orthogonal and
orthosymplectic characters, with brute-force Laurent polynomial oracles."""

from .characters import CharacterKind
from .laurent import LaurentPoly, determinant, exact_divide
from .partitions import Partition, SkewShape, StaircaseDelta
from .rules import (
    FormalExpansion,
    MixedExpansion,
    MixedTerm,
    classical_mn,
    even_orthogonal_mn,
    hook_mn,
    odd_orthogonal_mn,
    orthosymplectic_mn,
    symplectic_mn,
)

__version__ = "0.1.0"
