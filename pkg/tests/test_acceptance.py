"""Acceptance gate: the nine headline behaviors at their stated budgets.

Each test covers one numbered criterion (see the marker); the conftest hook
prints a PASS/FAIL line per criterion at the end of the run.  Expected
values come from independent oracles: a flat sieve with residue-class
classification for the sweep tallies, recurrence iteration for sequence
values, and frozen example lists for the spot checks.
"""

import time

import pytest

from fiblucas.arith import fib, fib_pair_mod, lucas, lucas_pair_mod
from fiblucas.identities import (
    check_doubling_identity,
    check_lucas_fermat,
    check_product_identity,
    check_sum_identity,
    check_theorem_identities,
)
from fiblucas.primes import PrimeRange
from fiblucas.theorem import (
    ApparitionSide,
    ProductKind,
    expected_apparition_side,
    rank_of_apparition,
    theorem_witness,
    verify_range,
)

from conftest import run_cli, sieve_primes


@pytest.mark.acceptance(1)
def test_criterion_1_full_sweep_fibonacci_branch(ten_million_sweep, class_tallies_10_7):
    sweep, oracle = ten_million_sweep, class_tallies_10_7
    assert sweep.returncode == 0
    assert sweep.seconds < 60.0, f"sweep took {sweep.seconds:.1f}s"
    assert sweep.report["counterexamples"] == 0
    # Tally equality against the oracle classification proves every 4r+1
    # prime produced exactly one witness on its predicted side.
    assert sweep.report["fib_lo"] == oracle["fib_lo"]
    assert sweep.report["fib_hi"] == oracle["fib_hi"]
    assert sweep.report["witnesses"] == oracle["total"]


@pytest.mark.acceptance(2)
def test_criterion_2_full_sweep_lucas_branch(ten_million_sweep, class_tallies_10_7):
    sweep, oracle = ten_million_sweep, class_tallies_10_7
    assert sweep.returncode == 0
    assert sweep.report["counterexamples"] == 0
    assert sweep.report["lucas_lo"] == oracle["lucas_lo"]
    assert sweep.report["lucas_hi"] == oracle["lucas_hi"]
    assert sweep.report["exceptions"] == "5"


@pytest.mark.acceptance(3)
def test_criterion_3_five_exception():
    notice = run_cli("witness", "5")
    assert notice.returncode == 0
    assert "5" in notice.stdout and "F(2)" in notice.stdout
    # 5 divides neither F_2 = 1 nor F_3 = 2.
    assert fib(2) * fib(3) == 2
    assert (fib(2) * fib(3)) % 5 != 0
    # The closing congruence: L_5 = 11 = 1 (mod 5).
    assert lucas(5) == 11
    assert lucas(5) % 5 == 1
    assert check_lucas_fermat(5).passed
    report = verify_range(PrimeRange(5, 5))
    assert report.witness_count == 0
    assert report.exceptions_seen == [5]


@pytest.mark.acceptance(4)
def test_criterion_4_example_primes_land_on_predicted_factors():
    for p in (13, 17, 37):
        w = theorem_witness(p)
        assert w.product_kind is ProductKind.FIBONACCI_PRODUCT
        assert w.divisible_index == w.index_hi == (p - 1) // 2 + 1  # F_{2r+1}
    for p in (29, 41, 61):
        w = theorem_witness(p)
        assert w.product_kind is ProductKind.FIBONACCI_PRODUCT
        assert w.divisible_index == w.index_lo == (p - 1) // 2  # F_{2r}
    for p in (11, 19, 31):
        w = theorem_witness(p)
        assert w.product_kind is ProductKind.LUCAS_PRODUCT
        assert w.divisible_index == w.index_lo == (p - 1) // 2  # L_{2r+1}
    for p in (3, 7, 23, 43):
        w = theorem_witness(p)
        assert w.product_kind is ProductKind.LUCAS_PRODUCT
        assert w.divisible_index == w.index_hi == (p - 1) // 2 + 1  # L_{2r+2}


@pytest.mark.acceptance(5)
def test_criterion_5_identity_grids_exhaustive():
    failures = 0
    for n in range(0, 501):
        for m in range(0, n + 1):
            if not check_sum_identity(n, m).passed:
                failures += 1
            if not check_product_identity(n, m).passed:
                failures += 1
    for n in range(0, 5001):
        if not check_doubling_identity(n).passed:
            failures += 1
    for r in range(0, 1001):
        failures += sum(1 for result in check_theorem_identities(r) if not result.passed)
    assert failures == 0


@pytest.mark.acceptance(6)
def test_criterion_6_lucas_fermat_to_one_million():
    primes = sieve_primes(1_000_000)
    start = time.perf_counter()
    bad = [p for p in primes if lucas_pair_mod(p, p).first != 1 % p]
    elapsed = time.perf_counter() - start
    assert bad == []
    assert len(primes) == 78498
    assert elapsed < 10.0, f"congruence sweep took {elapsed:.1f}s"


@pytest.mark.acceptance(7)
def test_criterion_7_oracle_equivalence(primes_oracle_10_4, fib_oracle, lucas_oracle):
    import random

    for p in primes_oracle_10_4:
        if p in (2, 5):
            continue
        w = theorem_witness(p)
        seq = fib_oracle if w.product_kind is ProductKind.FIBONACCI_PRODUCT else lucas_oracle
        assert w.residue_lo == seq[w.index_lo] % p
        assert w.residue_hi == seq[w.index_hi] % p
    rng = random.Random(20260814)
    for _ in range(1000):
        n = rng.randrange(0, 10_001)
        m = rng.randrange(1, 2**32 + 1)
        pair = fib_pair_mod(n, m)
        assert (pair.first, pair.second) == (fib_oracle[n] % m, fib_oracle[n + 1] % m)
        lpair = lucas_pair_mod(n, m)
        assert (lpair.first, lpair.second) == (lucas_oracle[n] % m, lucas_oracle[n + 1] % m)


@pytest.mark.acceptance(8)
def test_criterion_8_apparition_rank_divides_predicted_side(primes_oracle_10_4):
    for p in primes_oracle_10_4:
        if p in (2, 5):
            continue
        alpha = rank_of_apparition(p)
        side = expected_apparition_side(p)
        entry = p - 1 if side is ApparitionSide.DIVIDES_P_MINUS_1 else p + 1
        assert entry % alpha == 0, (p, alpha)
        assert fib_pair_mod(entry, p).first == 0, p


@pytest.mark.acceptance(9)
def test_criterion_9_jobs_determinism():
    for fmt in ("human", "csv"):
        runs = [
            run_cli("verify", "--from", "3", "--to", "1000000", "--jobs", jobs, "--format", fmt)
            for jobs in ("1", "8")
        ]
        assert all(r.returncode == 0 for r in runs)
        assert runs[0].stdout == runs[1].stdout, f"{fmt} bodies differ"
        assert runs[0].stdout  # sanity: non-empty report body
