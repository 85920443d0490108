"""Braid group representations over Laurent polynomial rings.

The simple two-variable representation sigma_i -> I (+) [[0, t], [b, 0]] (+) I,
the general family of 2x2 crossing blocks that satisfy the braid relations
(which contains the unreduced Burau representation), exact relation checks,
and a search for short nontrivial braids in the kernel.
"""

from .braid import BraidWord, compose, free_reduce, inverse, parse_word, permutation
from .laurent import LaurentPolynomial, format_poly, parse_poly, var
from .path_oracle import path_matrix
from .polymatrix import PolyMatrix, determinant, identity, is_identity, monomial_decompose
from .rep import BURAU, SIMPLE, RepSpec, classify_case, cubic_residual, evaluate, generator_image, make_spec
from .search import SearchConfig, search_kernel
from .verify import check_relations, verify_kernel_witness

__version__ = "0.1.0"
