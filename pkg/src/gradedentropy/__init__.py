"""Certified upper bounds for the entropy of quadratic monomial algebras."""

__version__ = "0.1.0"

from .algebra import (HilbertPrefix, QuadraticMonomialAlgebra, associated_digraph,
                      dimension, entropy_upper_from_dims, hilbert_prefix)
from .bounds import (BoundReport, Decomposition, FriedlandCubic, decompose, f_of_k,
                     figure_data, friedland_bound, rho_mpq, special_case_bound)
from .errors import ResourceLimitError, ValidationError
from .extremal import ExtremalParams, build_G, build_special, presentation
from .graph import Digraph
from .search import SearchResult, is_permutation_similar, max_spectral_radius
from .spectral import (CharPoly, SpectralRadiusResult, char_poly,
                       entropy_upper_via_digraph, spectral_radius, verify_recurrence,
                       walk_count)
