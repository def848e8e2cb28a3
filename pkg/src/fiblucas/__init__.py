"""Exact and modular Fibonacci/Lucas arithmetic with a divisibility verifier.

The library computes F_n and L_n by index doubling, classifies primes by
their index form (4r+1 or 4r+3) and residue mod 5, checks the identity
family tying the two sequences together, and verifies that each odd prime
divides exactly one factor of its predicted consecutive product:
F_{2r}*F_{2r+1} for p = 4r+1 (except p = 5), L_{2r+1}*L_{2r+2} for p = 4r+3.
"""

from .arith import (
    DEFAULT_MAX_EXACT_INDEX,
    MAX_EXACT_INDEX_ENV,
    MAX_MODULAR_INDEX,
    MAX_MODULUS,
    IndexTooLargeError,
    SequenceKind,
    SequencePair,
    fib,
    fib_pair,
    fib_pair_mod,
    lucas,
    lucas_pair,
    lucas_pair_mod,
    max_exact_index,
)
from .identities import (
    IdentityCheckResult,
    IdentityId,
    check_doubling_identity,
    check_lucas_fermat,
    check_product_identity,
    check_sum_identity,
    check_theorem_identities,
)
from .primes import (
    MAX_SUPPORTED,
    NotPrimeError,
    PrimeRange,
    is_prime,
    primes_in,
)
from .theorem import (
    ApparitionSide,
    DivisibilityWitness,
    ExceptionPrimeError,
    FiveResidue,
    PrimeClass,
    PrimeForm,
    ProductKind,
    TheoremViolationError,
    VerificationReport,
    classify_prime,
    expected_apparition_side,
    rank_of_apparition,
    theorem_witness,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_EXACT_INDEX",
    "MAX_EXACT_INDEX_ENV",
    "MAX_MODULAR_INDEX",
    "MAX_MODULUS",
    "MAX_SUPPORTED",
    "ApparitionSide",
    "DivisibilityWitness",
    "ExceptionPrimeError",
    "FiveResidue",
    "IdentityCheckResult",
    "IdentityId",
    "IndexTooLargeError",
    "NotPrimeError",
    "PrimeClass",
    "PrimeForm",
    "PrimeRange",
    "ProductKind",
    "SequenceKind",
    "SequencePair",
    "TheoremViolationError",
    "VerificationReport",
    "check_doubling_identity",
    "check_lucas_fermat",
    "check_product_identity",
    "check_sum_identity",
    "check_theorem_identities",
    "classify_prime",
    "expected_apparition_side",
    "fib",
    "fib_pair",
    "fib_pair_mod",
    "is_prime",
    "lucas",
    "lucas_pair",
    "lucas_pair_mod",
    "max_exact_index",
    "primes_in",
    "rank_of_apparition",
    "theorem_witness",
    "verify_range",
]
