"""Shared oracles and the acceptance-gate reporting hook.

Expected values in the suite come from the independent oracles here: plain
recurrence iteration for the sequences, trial division and a flat boolean
sieve for primality.  None of them share code with the package under test.
"""

from __future__ import annotations

import re
import subprocess
import sys
import time
from types import SimpleNamespace

import pytest

ACCEPTANCE_CRITERIA = {
    1: "sweep [3, 10^7]: every 4r+1 prime (except 5) hits its predicted Fibonacci factor, zero counterexamples, under 60 s",
    2: "sweep [3, 10^7]: every 4r+3 prime hits its predicted Lucas factor, zero counterexamples",
    3: "p = 5 exclusion: witness notice, 5 does not divide F_2*F_3 = 2, and L_5 = 11 = 1 (mod 5)",
    4: "example primes: {13,17,37} -> F_{2r+1}, {29,41,61} -> F_{2r}, {11,19,31} -> L_{2r+1}, {3,7,23,43} -> L_{2r+2}",
    5: "identity grids: sum/product for 0 <= m <= n <= 500, doubling for n <= 5000, theorem family for r <= 1000, zero failures",
    6: "Lucas-Fermat congruence L_p = 1 (mod p) for every prime p <= 10^6, under 10 s",
    7: "oracle equivalence: modular residues match exact values reduced mod m for all witness primes <= 10^4 and 1000 random (n, m)",
    8: "apparition: for primes 2 < p <= 10^4 (p != 5) the rank divides p-1 or p+1 per side, and F_{p-+1} = 0 (mod p)",
    9: "determinism: verify report bodies byte-identical for --jobs 1 vs --jobs 8 over [3, 10^6]",
}


# --- independent oracles -------------------------------------------------


def fib_upto(n: int) -> list[int]:
    """F_0..F_n by direct recurrence iteration."""
    seq = [0, 1]
    while len(seq) <= n:
        seq.append(seq[-1] + seq[-2])
    return seq[: n + 1]


def lucas_upto(n: int) -> list[int]:
    """L_0..L_n by direct recurrence iteration."""
    seq = [2, 1]
    while len(seq) <= n:
        seq.append(seq[-1] + seq[-2])
    return seq[: n + 1]


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def sieve_flags(limit: int) -> bytearray:
    """flags[k] == 1 iff k is prime, for 0 <= k <= limit."""
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return flags


def sieve_primes(limit: int) -> list[int]:
    flags = sieve_flags(limit)
    return [k for k in range(2, limit + 1) if flags[k]]


@pytest.fixture(scope="session")
def fib_oracle() -> list[int]:
    return fib_upto(10_002)


@pytest.fixture(scope="session")
def lucas_oracle() -> list[int]:
    return lucas_upto(10_002)


@pytest.fixture(scope="session")
def primes_oracle_10_4() -> list[int]:
    return sieve_primes(10_000)


# --- acceptance fixtures --------------------------------------------------


def run_cli(*args: str) -> SimpleNamespace:
    """Run the installed CLI in a subprocess and time it."""
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "fiblucas", *args],
        capture_output=True,
        text=True,
        timeout=600,
    )
    seconds = time.perf_counter() - start
    return SimpleNamespace(
        returncode=proc.returncode, stdout=proc.stdout, stderr=proc.stderr, seconds=seconds
    )


def parse_verify_human(text: str) -> dict:
    fields = {}
    for label, key in (
        ("witnesses", "witnesses"),
        ("primes examined", "examined"),
        ("counterexamples", "counterexamples"),
    ):
        match = re.search(rf"^{re.escape(label)}\s+(\d+)$", text, re.MULTILINE)
        fields[key] = int(match.group(1)) if match else None
    for label, key in (
        (r"F\(2r\)", "fib_lo"),
        (r"F\(2r\+1\)", "fib_hi"),
        (r"L\(2r\+1\)", "lucas_lo"),
        (r"L\(2r\+2\)", "lucas_hi"),
    ):
        match = re.search(rf"^  {label}\s+.*:\s+(\d+)$", text, re.MULTILINE)
        fields[key] = int(match.group(1)) if match else None
    match = re.search(r"^exceptions seen\s+(.*)$", text, re.MULTILINE)
    fields["exceptions"] = match.group(1).strip() if match else None
    return fields


@pytest.fixture(scope="session")
def ten_million_sweep() -> SimpleNamespace:
    """One shared run of `verify --from 3 --to 10000000 --jobs 1`."""
    result = run_cli("verify", "--from", "3", "--to", "10000000", "--jobs", "1")
    result.report = parse_verify_human(result.stdout)
    return result


@pytest.fixture(scope="session")
def class_tallies_10_7() -> dict:
    """Oracle tallies over [3, 10^7]: sieve, then classify by p mod 4 and p mod 5."""
    flags = sieve_flags(10_000_000)
    tallies = {"fib_lo": 0, "fib_hi": 0, "lucas_lo": 0, "lucas_hi": 0}
    exceptions = []
    for p in range(3, 10_000_001, 2):
        if not flags[p]:
            continue
        if p == 5:
            exceptions.append(p)
            continue
        branch = "fib" if p % 4 == 1 else "lucas"
        side = "lo" if p % 5 in (1, 4) else "hi"
        tallies[f"{branch}_{side}"] += 1
    tallies["total"] = sum(tallies.values())
    tallies["exceptions"] = exceptions
    return tallies


# --- acceptance summary hook ----------------------------------------------


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(num): test covering the numbered acceptance criterion"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and (rep.when == "call" or rep.failed):
        rep.acceptance_num = marker.args[0]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results: dict[int, bool] = {}
    for reports in terminalreporter.stats.values():
        for rep in reports:
            num = getattr(rep, "acceptance_num", None)
            if num is None:
                continue
            results[num] = results.get(num, True) and rep.passed
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_CRITERIA):
        if num in results:
            verdict = "PASS" if results[num] else "FAIL"
        else:
            verdict = "FAIL (not run)"
        terminalreporter.write_line(f"[{num}] {verdict}  {ACCEPTANCE_CRITERIA[num]}")
