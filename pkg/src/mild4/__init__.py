"""Orbit classification and mildness of 4-generator quadratic pro-p presentations."""

from .classifier import (ClassificationReport, classify, classify_by_invariants,
                         classify_by_quadric, classify_by_reduction, classify_prime_set,
                         search_prime_sets)
from .census import OrbitCensus, enumerate_orbits
from .errors import (InternalInvariantViolation, Mild4Error, RankDeficient,
                     ValidationError)
from .exterior import AddCol, GroupWord, ScaleCol, SwapCol, act, dual_act, psi
from .field import FieldCtx, Subspace, orthogonal_complement
from .koch import LinkingData, PrimeSet, linking_matrix, presentation_from_linking, validate
from .lie import GradedDims, QuadraticPresentation, is_mild, quotient_dims, series_check
from .reduction import LineLabel, OrbitLabel, reduce_line, reduce_plane, verify_witness

__version__ = "0.1.0"
