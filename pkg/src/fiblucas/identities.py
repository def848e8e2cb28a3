"""Exact verification of the identity family behind the divisibility theorem.

Every check evaluates both sides in exact integer arithmetic (never modular),
so a failed result is a genuine counterexample rather than a reduction
artifact.  The checks:

  SUM                    L_{n+m} - (-1)^m * L_{n-m} == 5 * F_m * F_n
  PRODUCT                L_{n+m} + (-1)^m * L_{n-m} == L_m * L_n
  DOUBLING               F_{2n} == F_n * L_n
  THEOREM_FIB_SUM        L_{4r+1} - 1 == 5 * F_{2r}  * F_{2r+1}
  THEOREM_FIB_PRODUCT    L_{4r+1} + 1 == L_{2r}   * L_{2r+1}
  THEOREM_LUCAS_SUM      L_{4r+3} + 1 == 5 * F_{2r+1} * F_{2r+2}
  THEOREM_LUCAS_PRODUCT  L_{4r+3} - 1 == L_{2r+1} * L_{2r+2}
  LUCAS_FERMAT           L_p == 1 (mod p) for prime p

The four THEOREM checks are the SUM/PRODUCT identities instantiated at
(n, m) = (2r+1, 2r) and (2r+2, 2r+1); `check_theorem_identities` evaluates
them directly so the substitution itself is covered by tests comparing the
two routes.  Indices are restricted to n >= m >= 0 (L_{n-m} is never extended
to negative indices) and the (-1)^m sign is handled as a parity branch, so
every intermediate stays a nonnegative integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import fib, fib_pair, lucas, lucas_pair, lucas_pair_mod
from .primes import NotPrimeError, is_prime


class IdentityId(Enum):
    SUM = "SUM"
    PRODUCT = "PRODUCT"
    DOUBLING = "DOUBLING"
    THEOREM_FIB_SUM = "THEOREM_FIB_SUM"
    THEOREM_FIB_PRODUCT = "THEOREM_FIB_PRODUCT"
    THEOREM_LUCAS_SUM = "THEOREM_LUCAS_SUM"
    THEOREM_LUCAS_PRODUCT = "THEOREM_LUCAS_PRODUCT"
    LUCAS_FERMAT = "LUCAS_FERMAT"


@dataclass(frozen=True)
class IdentityCheckResult:
    """One instantiated identity: indices, both sides, and the verdict."""

    identity: IdentityId
    indices: tuple[int, ...]
    lhs: int
    rhs: int
    passed: bool


def _result(identity: IdentityId, indices: tuple[int, ...], lhs: int, rhs: int) -> IdentityCheckResult:
    return IdentityCheckResult(identity, indices, lhs, rhs, lhs == rhs)


def _check_index_pair(n: int, m: int) -> None:
    if m < 0 or n < 0:
        raise ValueError(f"indices must be nonnegative, got n={n}, m={m}")
    if n < m:
        raise ValueError(f"identity requires n >= m, got n={n} < m={m}")


def check_sum_identity(n: int, m: int, max_index: int | None = None) -> IdentityCheckResult:
    """L_{n+m} - (-1)^m * L_{n-m} against 5 * F_m * F_n, for n >= m >= 0."""
    _check_index_pair(n, m)
    outer = lucas(n + m, max_index)
    inner = lucas(n - m, max_index)
    lhs = outer - inner if m % 2 == 0 else outer + inner
    rhs = 5 * fib(m, max_index) * fib(n, max_index)
    return _result(IdentityId.SUM, (n, m), lhs, rhs)


def check_product_identity(n: int, m: int, max_index: int | None = None) -> IdentityCheckResult:
    """L_{n+m} + (-1)^m * L_{n-m} against L_m * L_n, for n >= m >= 0."""
    _check_index_pair(n, m)
    outer = lucas(n + m, max_index)
    inner = lucas(n - m, max_index)
    lhs = outer + inner if m % 2 == 0 else outer - inner
    rhs = lucas(m, max_index) * lucas(n, max_index)
    return _result(IdentityId.PRODUCT, (n, m), lhs, rhs)


def check_doubling_identity(n: int, max_index: int | None = None) -> IdentityCheckResult:
    """F_{2n} against F_n * L_n."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    lhs = fib(2 * n, max_index)
    rhs = fib(n, max_index) * lucas(n, max_index)
    return _result(IdentityId.DOUBLING, (n,), lhs, rhs)


def check_theorem_identities(r: int, max_index: int | None = None) -> list[IdentityCheckResult]:
    """The four product decompositions of L_{4r+1} -+ 1 and L_{4r+3} +- 1.

    Evaluates each side exactly from two doubling runs: the Fibonacci pair at
    2r supplies F_{2r}..F_{2r+2} and L_{2r}..L_{2r+2}, the Lucas pair at 4r+1
    supplies L_{4r+1} and L_{4r+3}.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    fp = fib_pair(2 * r, max_index)
    f_lo, f_mid = fp.first, fp.second          # F_{2r}, F_{2r+1}
    f_hi = f_lo + f_mid                        # F_{2r+2}
    l_lo = f_mid + f_mid - f_lo                # L_{2r}
    l_mid = f_lo + f_lo + f_mid                # L_{2r+1}
    l_hi = l_lo + l_mid                        # L_{2r+2}
    lp = lucas_pair(4 * r + 1, max_index)
    l_41 = lp.first                            # L_{4r+1}
    l_43 = lp.first + lp.second                # L_{4r+3}
    return [
        _result(IdentityId.THEOREM_FIB_SUM, (r,), l_41 - 1, 5 * f_lo * f_mid),
        _result(IdentityId.THEOREM_FIB_PRODUCT, (r,), l_41 + 1, l_lo * l_mid),
        _result(IdentityId.THEOREM_LUCAS_SUM, (r,), l_43 + 1, 5 * f_mid * f_hi),
        _result(IdentityId.THEOREM_LUCAS_PRODUCT, (r,), l_43 - 1, l_mid * l_hi),
    ]


def check_lucas_fermat(p: int) -> IdentityCheckResult:
    """L_p mod p against 1, for prime p.  Raises NotPrimeError otherwise."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    lhs = lucas_pair_mod(p, p).first
    return _result(IdentityId.LUCAS_FERMAT, (p,), lhs, 1 % p)
