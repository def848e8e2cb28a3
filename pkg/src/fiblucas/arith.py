"""Exact and modular Fibonacci/Lucas evaluation in O(log n) doubling steps.

Both sequences satisfy X_{n+2} = X_{n+1} + X_n; Fibonacci seeds are
(F_0, F_1) = (0, 1) and Lucas seeds are (L_0, L_1) = (2, 1).  Everything here
is computed from the Fibonacci doubling step

    F_{2k}   = F_k * (2*F_{k+1} - F_k)
    F_{2k+1} = F_k**2 + F_{k+1}**2

plus the pair conversions L_n = 2*F_{n+1} - F_n and L_{n+1} = 2*F_n + F_{n+1},
so exact and modular paths share one algorithm.

Exact mode refuses indices above a practical bound (default 10**6, roughly a
209 kB decimal result) instead of stalling; the bound can be raised per call
or through the FIBLUCAS_MAX_EXACT_INDEX environment variable.  Modular mode
accepts any index and modulus up to 2**63 - 1; Python integers make every
intermediate product exact, so no overflow handling is needed.

All functions are pure and safe to call from concurrent threads or processes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum

DEFAULT_MAX_EXACT_INDEX = 10**6
MAX_EXACT_INDEX_ENV = "FIBLUCAS_MAX_EXACT_INDEX"

MAX_MODULAR_INDEX = 2**63 - 1
MAX_MODULUS = 2**63 - 1


class SequenceKind(Enum):
    FIBONACCI = "Fibonacci"
    LUCAS = "Lucas"


class IndexTooLargeError(ValueError):
    """Exact-mode index exceeds the configured practical bound."""


@dataclass(frozen=True)
class SequencePair:
    """Consecutive pair (X_n, X_{n+1}), exact or reduced mod `modulus`."""

    kind: SequenceKind
    index: int
    first: int
    second: int
    modulus: int | None = None


def max_exact_index() -> int:
    """Exact-mode index bound: FIBLUCAS_MAX_EXACT_INDEX if set, else 10**6."""
    raw = os.environ.get(MAX_EXACT_INDEX_ENV)
    if raw is None:
        return DEFAULT_MAX_EXACT_INDEX
    try:
        bound = int(raw)
    except ValueError:
        raise ValueError(
            f"{MAX_EXACT_INDEX_ENV} must be a nonnegative integer, got {raw!r}"
        ) from None
    if bound < 0:
        raise ValueError(f"{MAX_EXACT_INDEX_ENV} must be nonnegative, got {bound}")
    return bound


def _check_exact_index(n: int, max_index: int | None) -> None:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    bound = max_exact_index() if max_index is None else max_index
    if n > bound:
        raise IndexTooLargeError(
            f"index {n} exceeds the exact-mode bound {bound}; "
            f"use the modular operations or raise the bound"
        )


def _check_modular_args(n: int, m: int) -> None:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    if n > MAX_MODULAR_INDEX:
        raise ValueError(f"modular index must be at most 2**63 - 1, got {n}")
    if m < 1:
        raise ValueError(f"modulus must be at least 1, got {m}")
    if m > MAX_MODULUS:
        raise ValueError(f"modulus must be at most 2**63 - 1, got {m}")


def _fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) exactly, consuming the bits of n from the top."""
    a, b = 0, 1
    for i in range(n.bit_length() - 1, -1, -1):
        c = a * (b + b - a)
        d = a * a + b * b
        if (n >> i) & 1:
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def _fib_pair_mod(n: int, m: int) -> tuple[int, int]:
    """(F_n mod m, F_{n+1} mod m); the hot loop behind every divisibility check."""
    a, b = 0, 1 % m
    for i in range(n.bit_length() - 1, -1, -1):
        c = a * (b + b - a) % m
        d = (a * a + b * b) % m
        if (n >> i) & 1:
            a, b = d, (c + d) % m
        else:
            a, b = c, d
    return a, b


def fib_pair(n: int, max_index: int | None = None) -> SequencePair:
    """Exact (F_n, F_{n+1}).

    Raises IndexTooLargeError when n exceeds the exact-mode bound and
    ValueError for negative n.
    """
    _check_exact_index(n, max_index)
    a, b = _fib_pair(n)
    return SequencePair(SequenceKind.FIBONACCI, n, a, b)


def lucas_pair(n: int, max_index: int | None = None) -> SequencePair:
    """Exact (L_n, L_{n+1}), derived from the Fibonacci pair at n."""
    _check_exact_index(n, max_index)
    a, b = _fib_pair(n)
    return SequencePair(SequenceKind.LUCAS, n, b + b - a, a + a + b)


def fib_pair_mod(n: int, m: int) -> SequencePair:
    """(F_n mod m, F_{n+1} mod m) for any n, m up to 2**63 - 1."""
    _check_modular_args(n, m)
    a, b = _fib_pair_mod(n, m)
    return SequencePair(SequenceKind.FIBONACCI, n, a, b, modulus=m)


def lucas_pair_mod(n: int, m: int) -> SequencePair:
    """(L_n mod m, L_{n+1} mod m) for any n, m up to 2**63 - 1."""
    _check_modular_args(n, m)
    a, b = _fib_pair_mod(n, m)
    return SequencePair(SequenceKind.LUCAS, n, (b + b - a) % m, (a + a + b) % m, modulus=m)


def fib(n: int, max_index: int | None = None) -> int:
    """Exact F_n."""
    return fib_pair(n, max_index).first


def lucas(n: int, max_index: int | None = None) -> int:
    """Exact L_n."""
    return lucas_pair(n, max_index).first
