"""k-alternating and k-zigzagging subsequence statistics of permutations."""

from .exact import (
    EnumReport,
    IdentityFailure,
    VerificationReport,
    check_identities,
    enumerate_stats,
    expected_alternating_length,
    expected_zigzag_length,
    iterate_permutations,
    peak_value_probability,
    verify_identities,
)
from .perm import (
    ASCENDING,
    DESCENDING,
    InvalidPermutationError,
    PeakValleySet,
    Permutation,
    Section,
    SectionChain,
    complement,
    decompose,
    decompose_reference,
    find_peaks_valleys,
    is_k_down,
    is_k_peak_at,
    is_k_up,
    make_permutation,
    values_at,
)
from .sampling import Estimate, estimate_average, sample_permutation
from .subseq import (
    ALTERNATING,
    EITHER,
    REVERSE_ALTERNATING,
    SubsequenceWitness,
    alternating_length,
    brute_force_longest,
    chain_lengths,
    is_k_alternating,
    longest_zigzag_witness,
    zigzag_length,
)

__version__ = "0.1.0"

__all__ = [
    "ALTERNATING",
    "ASCENDING",
    "DESCENDING",
    "EITHER",
    "REVERSE_ALTERNATING",
    "EnumReport",
    "Estimate",
    "IdentityFailure",
    "InvalidPermutationError",
    "PeakValleySet",
    "Permutation",
    "Section",
    "SectionChain",
    "SubsequenceWitness",
    "VerificationReport",
    "alternating_length",
    "brute_force_longest",
    "chain_lengths",
    "check_identities",
    "complement",
    "decompose",
    "decompose_reference",
    "enumerate_stats",
    "estimate_average",
    "expected_alternating_length",
    "expected_zigzag_length",
    "find_peaks_valleys",
    "is_k_alternating",
    "is_k_down",
    "is_k_peak_at",
    "is_k_up",
    "iterate_permutations",
    "longest_zigzag_witness",
    "make_permutation",
    "peak_value_probability",
    "sample_permutation",
    "values_at",
    "verify_identities",
    "zigzag_length",
]
