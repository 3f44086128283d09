"""Exact combinatorics of the blob algebra and the two-color Soergel
calculus of the infinite dihedral group.

All computations are exact: Laurent polynomials travel as
``[(exponent, coefficient), ...]`` lists, standard bitableaux as lists of
component labels (1 or 2), dihedral group elements as alternating words
like ``"sts"``.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from ._core import DomainError  # noqa: F401
except ImportError:  # in-tree build: the extension sits on sys.path
    from _core import *  # noqa: F401,F403
    from _core import DomainError  # noqa: F401

__all__ = [
    "DomainError",
    "Params",
    "validate_params",
    "cartan",
    "bruhat_leq",
    "kl_h",
    "multiply",
    "alcove_of",
    "act",
    "tmax",
    "residue_sequence",
    "residue_sequence_of_shape",
    "walk_of",
    "tableau_of",
    "enumerate_std",
    "enumerate_std_n",
    "is_residue_sequence",
    "equivalence_class",
    "lambda_data",
    "d_of",
    "is_321_avoiding",
    "block_decomposition",
    "klr_degree",
    "dotline_normal_form",
    "dotline_multiply",
    "dotline_dimension_oracle",
    "dotline_ordering_check",
    "enumerate_leaves",
    "graded_dim_soergel",
    "basis_of",
    "graded_dim_blob",
    "central_element_degree",
    "y_model",
    "f_map",
    "f_mu",
    "verify_bijection",
    "decomposition_matrix",
]
