"""Exact braid group computations: word problem, linking numbers, block braids and centralizer lower bounds."""

from .blocks import (
    BlockProfile,
    BlockStructure,
    block_crossing,
    block_linking,
    block_profile,
    block_twist,
    blocks_preserved,
    cable,
    tube_projection,
)
from .braid_core import (
    BraidError,
    BraidWord,
    Permutation,
    compose,
    exponent_sum,
    free_reduce,
    inverse,
    is_pure,
    parse_word,
    permutation_of,
)
from .certify import CertificateReport, default_candidate_set, lower_bound_certificate, verify_commutation
from .examples import (
    ExampleInstance,
    ExampleSpec,
    build_pa_example,
    build_twist_example,
    build_twist_example_odd,
    embed,
    pa_trace_and_dilatation,
)
from .pure_braid import LinkingMatrix, integer_rank, linking_matrix, pure_generator
from .word_problem import burau3, commutes, equal, is_identity, normal_form

__version__ = "0.1.0"
