"""Lagrangian symplectic matroids over exact arithmetic.

Bases, maximality, orientations, polytope skeletons and the index of an
oriented Lagrangian matroid, with a cross-check against the index of the
quadratic form of a representing symmetric matrix.
"""

from .errors import DomainError, GuardExceeded, NotationError
from .exactlin import GF2, Q, ExactMatrix, det, kronecker_index, congruence_diagonalize, matrix, rank
from .ground import (AdmissibleOrdering, AdmissibleSet, GroundIndex, Transversal, compare_sets,
                     enumerate_orderings, format_set, parse_admissible, parse_transversal, star)
from .matroid import BasisSystem, check_maximality, enumerate_lagrangian_matroids, height, is_even
from .orient import (RelativeSigns, SignTable, are_isomorphic, canonical_even_orientation,
                     enumerate_orientations, extend_signs, validate_orientation)
from .represent import Representation, extract_bases, fundamental_reduction, relative_signs
from .polytope import check_balance, compute_edges, orient_skeleton, polytope, signs_from_skeleton
from .index import crosscheck_quadratic, find_increasing_path, index_relative
from .matfile import figure, load_representation, parse_document

__version__ = "0.1.0"
