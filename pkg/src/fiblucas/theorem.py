"""Divisibility witnesses for primes of the forms 4r+1 and 4r+3.

Every odd prime p other than 5 divides a product of two consecutive terms
whose indices sum to p: for p = 4r+1 the Fibonacci product F_{2r}*F_{2r+1},
for p = 4r+3 the Lucas product L_{2r+1}*L_{2r+2}.  Exactly one of the two
factors carries the divisibility, and which one is predicted by p mod 5:
residues 1 and 4 put it on the lower index, residues 2 and 3 on the higher.
p = 2 fits neither index form and p = 5 is the excluded prime (it divides
neither F_2 = 1 nor F_3 = 2); both are reported as exceptions.

In both forms the product indices are ((p-1)/2, (p+1)/2), so a single
modular doubling run per prime produces both factor residues.  Range sweeps
therefore cost O(log p) per prime and never touch big integers; the exact
big-integer path exists independently and is used by tests as the oracle for
these residues.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from .arith import _fib_pair_mod
from .primes import NotPrimeError, PrimeRange, is_prime, primes_in

_CHUNKS_PER_JOB = 8
_MIN_CHUNK_WIDTH = 1 << 14


class PrimeForm(Enum):
    FOUR_R_PLUS_1 = "FourRPlus1"
    FOUR_R_PLUS_3 = "FourRPlus3"
    SPECIAL_TWO = "SpecialTwo"
    SPECIAL_FIVE = "SpecialFive"


class FiveResidue(Enum):
    PLUS_MINUS_ONE = "PlusMinusOne"    # p mod 5 in {1, 4}
    PLUS_MINUS_TWO = "PlusMinusTwo"    # p mod 5 in {2, 3}
    ZERO = "Zero"                      # p = 5
    NOT_APPLICABLE = "NotApplicable"   # p = 2


class ProductKind(Enum):
    FIBONACCI_PRODUCT = "FibonacciProduct"
    LUCAS_PRODUCT = "LucasProduct"
    EXCEPTION_FIVE = "ExceptionFive"
    EXCEPTION_TWO = "ExceptionTwo"


class ApparitionSide(Enum):
    DIVIDES_P_MINUS_1 = "DividesFpMinus1"
    DIVIDES_P_PLUS_1 = "DividesFpPlus1"


class ExceptionPrimeError(ValueError):
    """p is 2 or 5, which have no consecutive-product witness."""

    def __init__(self, p: int, kind: ProductKind):
        self.p = p
        self.kind = kind
        super().__init__(f"p = {p} is an exception prime ({kind.value}); no witness exists")


class TheoremViolationError(RuntimeError):
    """A witness failed the exactly-one-zero or predicted-side invariant.

    The underlying statement is a theorem, so this always indicates an
    implementation bug; it is raised loudly rather than swallowed.
    """


@dataclass(frozen=True)
class PrimeClass:
    """A prime's index form (with its r) and residue class mod 5."""

    p: int
    form: PrimeForm
    r: int | None
    five_residue: FiveResidue


@dataclass(frozen=True)
class DivisibilityWitness:
    """Which consecutive factor p divides, with both residues as evidence.

    index_hi == index_lo + 1 and the residues are F or L values mod p at
    those indices, per product_kind.  divisible_index is the index whose
    residue is zero; in counterexample records (violations collected by
    verify_range) it is the PREDICTED index instead, and the residues show
    what was actually observed.
    """

    prime_class: PrimeClass
    product_kind: ProductKind
    index_lo: int
    index_hi: int
    divisible_index: int
    residue_lo: int
    residue_hi: int


@dataclass
class VerificationReport:
    """Aggregate result of sweeping a prime range for witnesses.

    Tallies split by product kind and witness side; their sum is the number
    of odd primes other than 5 in the range.  `witnesses` is populated only
    when the sweep is asked to keep them (summary-only sweeps stay O(1) in
    memory).  `elapsed` is wall-clock seconds and is deliberately excluded
    from equality so reports from differently-parallel runs compare equal.
    """

    range: PrimeRange
    count_fib_lo: int = 0
    count_fib_hi: int = 0
    count_lucas_lo: int = 0
    count_lucas_hi: int = 0
    exceptions_seen: list[int] = field(default_factory=list)
    counterexamples: list[DivisibilityWitness] = field(default_factory=list)
    witnesses: list[DivisibilityWitness] | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def witness_count(self) -> int:
        return self.count_fib_lo + self.count_fib_hi + self.count_lucas_lo + self.count_lucas_hi


def classify_prime(p: int) -> PrimeClass:
    """Sort a prime into 4r+1 / 4r+3 / the exceptions 2 and 5.

    Raises NotPrimeError for composite or sub-prime input.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        return PrimeClass(2, PrimeForm.SPECIAL_TWO, None, FiveResidue.NOT_APPLICABLE)
    if p == 5:
        return PrimeClass(5, PrimeForm.SPECIAL_FIVE, None, FiveResidue.ZERO)
    residue = FiveResidue.PLUS_MINUS_ONE if p % 5 in (1, 4) else FiveResidue.PLUS_MINUS_TWO
    if p % 4 == 1:
        return PrimeClass(p, PrimeForm.FOUR_R_PLUS_1, (p - 1) // 4, residue)
    return PrimeClass(p, PrimeForm.FOUR_R_PLUS_3, (p - 3) // 4, residue)


def _product_residues(p: int) -> tuple[ProductKind, int, int, int]:
    """(kind, index_lo, residue_lo, residue_hi) for an odd prime p not in {2, 5}.

    One doubling run at (p-1)/2 yields the Fibonacci pair; the Lucas pair for
    the 4r+3 form is derived from it in place.
    """
    half = (p - 1) >> 1
    a, b = _fib_pair_mod(half, p)
    if p & 3 == 1:
        return ProductKind.FIBONACCI_PRODUCT, half, a, b
    return ProductKind.LUCAS_PRODUCT, half, (b + b - a) % p, (a + a + b) % p


def theorem_witness(p: int) -> DivisibilityWitness:
    """Compute and validate the divisibility witness for one prime.

    Asserts that exactly one factor residue is zero and that the zero side
    matches the p mod 5 prediction; violations raise TheoremViolationError.
    Raises ExceptionPrimeError for p in {2, 5} and NotPrimeError otherwise.
    """
    cls = classify_prime(p)
    if cls.form is PrimeForm.SPECIAL_TWO:
        raise ExceptionPrimeError(p, ProductKind.EXCEPTION_TWO)
    if cls.form is PrimeForm.SPECIAL_FIVE:
        raise ExceptionPrimeError(p, ProductKind.EXCEPTION_FIVE)
    kind, index_lo, res_lo, res_hi = _product_residues(p)
    zero_lo, zero_hi = res_lo == 0, res_hi == 0
    if zero_lo == zero_hi:
        raise TheoremViolationError(
            f"p = {p}: expected exactly one zero factor, got residues ({res_lo}, {res_hi})"
        )
    predicted = index_lo if cls.five_residue is FiveResidue.PLUS_MINUS_ONE else index_lo + 1
    observed = index_lo if zero_lo else index_lo + 1
    if observed != predicted:
        raise TheoremViolationError(
            f"p = {p}: divisibility landed on index {observed}, "
            f"but p mod 5 = {p % 5} predicts index {predicted}"
        )
    return DivisibilityWitness(cls, kind, index_lo, index_lo + 1, observed, res_lo, res_hi)


def _witness_record(p: int, res_lo: int, res_hi: int, divisible_index: int) -> DivisibilityWitness:
    """Build the full dataclass record for a sweep entry (witness or violation)."""
    cls = classify_prime(p)
    kind = (
        ProductKind.FIBONACCI_PRODUCT
        if cls.form is PrimeForm.FOUR_R_PLUS_1
        else ProductKind.LUCAS_PRODUCT
    )
    half = (p - 1) >> 1
    return DivisibilityWitness(cls, kind, half, half + 1, divisible_index, res_lo, res_hi)


def _sweep_chunk(args: tuple[int, int, bool]) -> VerificationReport:
    """Sweep one contiguous sub-range; the per-prime loop is the hot path."""
    lo, hi, keep = args
    part = VerificationReport(PrimeRange(lo, hi))
    if keep:
        part.witnesses = []
    for p in primes_in(PrimeRange(lo, hi)):
        if p == 2 or p == 5:
            part.exceptions_seen.append(p)
            continue
        half = (p - 1) >> 1
        a, b = _fib_pair_mod(half, p)
        fib_branch = p & 3 == 1
        if fib_branch:
            res_lo, res_hi = a, b
        else:
            res_lo, res_hi = (b + b - a) % p, (a + a + b) % p
        zero_lo = res_lo == 0
        r5 = p % 5
        side_lo = r5 == 1 or r5 == 4
        if (zero_lo != (res_hi == 0)) and zero_lo == side_lo:
            if fib_branch:
                if zero_lo:
                    part.count_fib_lo += 1
                else:
                    part.count_fib_hi += 1
            elif zero_lo:
                part.count_lucas_lo += 1
            else:
                part.count_lucas_hi += 1
            if keep:
                part.witnesses.append(
                    _witness_record(p, res_lo, res_hi, half if zero_lo else half + 1)
                )
        else:
            predicted = half if side_lo else half + 1
            part.counterexamples.append(_witness_record(p, res_lo, res_hi, predicted))
    return part


def _partition(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split [lo, hi] into at most `parts` contiguous inclusive sub-ranges."""
    width = hi - lo + 1
    parts = max(1, min(parts, (width + _MIN_CHUNK_WIDTH - 1) // _MIN_CHUNK_WIDTH))
    base, extra = divmod(width, parts)
    bounds = []
    start = lo
    for i in range(parts):
        end = start + base - 1 + (1 if i < extra else 0)
        bounds.append((start, end))
        start = end + 1
    return bounds


def _merge_reports(full_range: PrimeRange, parts: list[VerificationReport], keep: bool) -> VerificationReport:
    """Combine sub-range reports; associative and order-insensitive by sorting."""
    merged = VerificationReport(full_range)
    if keep:
        merged.witnesses = []
    for part in parts:
        merged.count_fib_lo += part.count_fib_lo
        merged.count_fib_hi += part.count_fib_hi
        merged.count_lucas_lo += part.count_lucas_lo
        merged.count_lucas_hi += part.count_lucas_hi
        merged.exceptions_seen.extend(part.exceptions_seen)
        merged.counterexamples.extend(part.counterexamples)
        if keep:
            merged.witnesses.extend(part.witnesses)
    merged.exceptions_seen.sort()
    merged.counterexamples.sort(key=lambda w: w.prime_class.p)
    if keep:
        merged.witnesses.sort(key=lambda w: w.prime_class.p)
    return merged


def verify_range(
    rng: PrimeRange, parallelism: int = 1, keep_witnesses: bool = False
) -> VerificationReport:
    """Sweep every prime in the range and tally divisibility witnesses.

    Violations are collected as counterexample records, never raised, so a
    buggy build still produces a diagnosable report.  With parallelism > 1
    the range is partitioned into sub-ranges handled by worker processes;
    the merged report content is identical for any parallelism level.
    """
    if parallelism < 1:
        raise ValueError(f"parallelism must be positive, got {parallelism}")
    start = time.perf_counter()
    if parallelism == 1:
        report = _merge_reports(rng, [_sweep_chunk((rng.lo, rng.hi, keep_witnesses))], keep_witnesses)
    else:
        chunks = _partition(rng.lo, rng.hi, parallelism * _CHUNKS_PER_JOB)
        tasks = [(lo, hi, keep_witnesses) for lo, hi in chunks]
        with ProcessPoolExecutor(max_workers=min(parallelism, len(tasks))) as pool:
            parts = list(pool.map(_sweep_chunk, tasks))
        report = _merge_reports(rng, parts, keep_witnesses)
    report.elapsed = time.perf_counter() - start
    return report


def rank_of_apparition(p: int) -> int:
    """Smallest n >= 1 with p dividing F_n, by scanning the sequence mod p.

    For prime p the rank never exceeds p + 1, so the scan terminates.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    a, b = 0, 1  # F_0, F_1 mod p
    for n in range(1, p + 2):
        a, b = b, (a + b) % p
        if a == 0:
            return n
    raise TheoremViolationError(f"no Fibonacci multiple of {p} at index <= {p + 1}")


def expected_apparition_side(p: int) -> ApparitionSide:
    """Whether p divides F_{p-1} (p mod 5 in {1,4}) or F_{p+1} (p mod 5 in {2,3}).

    Defined for primes other than 2 and 5.
    """
    cls = classify_prime(p)
    if cls.form is PrimeForm.SPECIAL_TWO:
        raise ExceptionPrimeError(p, ProductKind.EXCEPTION_TWO)
    if cls.form is PrimeForm.SPECIAL_FIVE:
        raise ExceptionPrimeError(p, ProductKind.EXCEPTION_FIVE)
    if cls.five_residue is FiveResidue.PLUS_MINUS_ONE:
        return ApparitionSide.DIVIDES_P_MINUS_1
    return ApparitionSide.DIVIDES_P_PLUS_1
