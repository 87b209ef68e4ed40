"""Seifert manifolds with Nil geometry: homology, double covers, Z2-indices.

The pipeline: classify a Seifert invariant into one of the seven Nil
families, compute its first homology, enumerate the epimorphisms onto Z2 and
their equivalence classes, identify the double cover each one cuts out
(verified by an independent Reidemeister-Schreier/Smith-form oracle), and
attach the Borsuk-Ulam Z2-index (1, 2 or 3) to every pair.  quotients_of
inverts the covering map and reproduces the free-involution diagrams.
"""

from .seifert import (FAMILIES, InvariantError, NilError, NilManifold, NotNil,
                      OrientationError, ParseError, SeifertInvariant, b_min,
                      cd_invariants, classify, euler_number, family_rows,
                      is_nil, normalize, orbifold_euler_char, parse_family,
                      parse_manifold, parse_seifert, reverse_orientation,
                      sweep)
from .presentation import (FinitePresentation, NotAHomomorphism, NotSurjective,
                           check_epimorphism, exponent_matrix, format_word,
                           free_reduce, fundamental_group, inverse_word,
                           reidemeister_schreier, word_parity)
from .homology import (AbelianGroup, abelianization, determinant, h1,
                       h1_closed_form, h1_stated_relations, mod2_rank,
                       smith_normal_form, torsion_subgroup_killed_by)
from .epimorphisms import (ConeSlide, ConeSwap, EpiClass, EpiClassPartition,
                           FiberFlip, InvalidCharacter, KleinSwap,
                           MoveNotApplicable, TorusShear, Z2Char, apply_move,
                           available_moves, char_for, enumerate_epis,
                           equivalence_classes, expected_epi_count,
                           expected_partition_shape, validate_char)
from .coverings import (CoveringDescriptor, double_cover,
                        expected_quotient_diagram, quotients_of, verify_cover)
from .bu_index import (cup_cube_nonzero, index_is_one, index_one_case,
                       index_report, index_three_case, z2_index)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "ConeSlide", "ConeSwap", "CoveringDescriptor", "EpiClass",
    "EpiClassPartition", "FAMILIES", "FiberFlip", "FinitePresentation",
    "InvalidCharacter", "InvariantError", "KleinSwap", "MoveNotApplicable",
    "NilError", "NilManifold", "NotAHomomorphism", "NotNil", "NotSurjective",
    "OrientationError", "ParseError", "SeifertInvariant", "TorusShear",
    "Z2Char", "abelianization", "apply_move", "available_moves", "b_min",
    "cd_invariants", "char_for", "check_epimorphism", "classify",
    "cup_cube_nonzero",
    "determinant", "double_cover", "enumerate_epis", "equivalence_classes",
    "euler_number", "expected_epi_count", "expected_partition_shape",
    "expected_quotient_diagram", "exponent_matrix", "family_rows",
    "format_word", "free_reduce", "fundamental_group", "h1", "h1_closed_form",
    "h1_stated_relations", "index_is_one", "index_one_case", "index_report",
    "index_three_case", "inverse_word", "is_nil", "mod2_rank", "normalize",
    "orbifold_euler_char", "parse_family", "parse_manifold", "parse_seifert",
    "quotients_of", "reidemeister_schreier", "reverse_orientation",
    "smith_normal_form", "sweep", "torsion_subgroup_killed_by",
    "validate_char", "verify_cover", "word_parity", "z2_index",
]
