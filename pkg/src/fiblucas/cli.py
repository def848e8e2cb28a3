"""Command-line front end: range verification, single-prime queries, identity
sweeps, and raw sequence evaluation.

Output contract: stdout carries data, stderr carries diagnostics (including
timing, so report bodies are byte-identical across --jobs levels).  Exit
codes: 0 success, 1 verification/identity failure, 2 usage error.  The csv
and json formats carry the same information; csv uses a fixed column order
with LF line endings, json renders integers above 2**53 - 1 as decimal
strings so nothing loses precision.
"""

from __future__ import annotations

import csv
import io
import json

import click

from .arith import IndexTooLargeError, fib_pair, fib_pair_mod, lucas_pair, lucas_pair_mod
from .identities import (
    IdentityId,
    check_doubling_identity,
    check_lucas_fermat,
    check_product_identity,
    check_sum_identity,
    check_theorem_identities,
)
from .primes import MAX_SUPPORTED, NotPrimeError, PrimeRange, primes_in
from .theorem import (
    DivisibilityWitness,
    ExceptionPrimeError,
    PrimeForm,
    ProductKind,
    classify_prime,
    expected_apparition_side,
    theorem_witness,
    verify_range,
)

_FORMAT = click.Choice(["human", "csv", "json"])
_JSON_SAFE = 2**53 - 1

WITNESS_COLUMNS = (
    "p",
    "form",
    "r",
    "five_residue",
    "product_kind",
    "index_lo",
    "index_hi",
    "divisible_index",
    "residue_lo",
    "residue_hi",
)


def _jint(value: int | None) -> int | str | None:
    """Ints stay JSON numbers only while exactly representable in a double."""
    if value is None or value <= _JSON_SAFE:
        return value
    return str(value)


def _echo_json(obj) -> None:
    click.echo(json.dumps(obj, indent=2))


def _echo_csv(rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(WITNESS_COLUMNS)
    writer.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


def _witness_row(w: DivisibilityWitness) -> list[str]:
    c = w.prime_class
    return [
        str(c.p),
        c.form.value,
        "" if c.r is None else str(c.r),
        c.five_residue.value,
        w.product_kind.value,
        str(w.index_lo),
        str(w.index_hi),
        str(w.divisible_index),
        str(w.residue_lo),
        str(w.residue_hi),
    ]


def _exception_row(p: int) -> list[str]:
    c = classify_prime(p)
    kind = ProductKind.EXCEPTION_TWO if p == 2 else ProductKind.EXCEPTION_FIVE
    return [str(p), c.form.value, "", c.five_residue.value, kind.value, "", "", "", "", ""]


def _witness_obj(w: DivisibilityWitness) -> dict:
    c = w.prime_class
    return {
        "p": _jint(c.p),
        "form": c.form.value,
        "r": _jint(c.r),
        "five_residue": c.five_residue.value,
        "product_kind": w.product_kind.value,
        "index_lo": _jint(w.index_lo),
        "index_hi": _jint(w.index_hi),
        "divisible_index": _jint(w.divisible_index),
        "residue_lo": _jint(w.residue_lo),
        "residue_hi": _jint(w.residue_hi),
    }


def _exception_obj(p: int) -> dict:
    c = classify_prime(p)
    kind = ProductKind.EXCEPTION_TWO if p == 2 else ProductKind.EXCEPTION_FIVE
    return {
        "p": p,
        "form": c.form.value,
        "r": None,
        "five_residue": c.five_residue.value,
        "product_kind": kind.value,
        "index_lo": None,
        "index_hi": None,
        "divisible_index": None,
        "residue_lo": None,
        "residue_hi": None,
    }


@click.group()
@click.version_option(package_name="fiblucas")
def cli() -> None:
    """Fibonacci/Lucas divisibility toolkit.

    Computes F_n and L_n exactly or modularly, checks the identity family
    connecting them, and verifies per-prime divisibility witnesses: every
    prime 4r+1 (except 5) divides F_{2r}*F_{2r+1}, every prime 4r+3 divides
    L_{2r+1}*L_{2r+2}, with the divisible factor predicted by p mod 5.
    """


@cli.command()
@click.option("--from", "lo", type=int, required=True, metavar="P", help="Range start (inclusive, >= 2).")
@click.option("--to", "hi", type=int, required=True, metavar="Q", help="Range end (inclusive).")
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes for the sweep.")
@click.option("--format", "fmt", type=_FORMAT, default="human", show_default=True)
def verify(lo: int, hi: int, jobs: int, fmt: str) -> None:
    """Sweep all primes in [P, Q] for divisibility witnesses.

    Exits 0 when every prime passes, 1 if any counterexample is recorded.
    """
    if lo < 2:
        raise click.UsageError(f"--from must be at least 2, got {lo}")
    if hi < lo:
        raise click.UsageError(f"--to must be at least --from, got {lo}..{hi}")
    if hi > MAX_SUPPORTED:
        raise click.UsageError("--to must be at most 2**63 - 1")
    if jobs < 1:
        raise click.UsageError(f"--jobs must be positive, got {jobs}")

    keep = fmt != "human"
    report = verify_range(PrimeRange(lo, hi), parallelism=jobs, keep_witnesses=keep)
    click.echo(f"elapsed: {report.elapsed:.3f}s", err=True)

    if fmt == "human":
        examined = report.witness_count + len(report.exceptions_seen) + len(report.counterexamples)
        seen = ", ".join(str(p) for p in report.exceptions_seen) or "(none)"
        click.echo(f"range            [{lo}, {hi}]")
        click.echo(f"primes examined  {examined}")
        click.echo(f"witnesses        {report.witness_count}")
        click.echo(f"  F(2r)    p = 4r+1, p mod 5 in {{1,4}}:  {report.count_fib_lo}")
        click.echo(f"  F(2r+1)  p = 4r+1, p mod 5 in {{2,3}}:  {report.count_fib_hi}")
        click.echo(f"  L(2r+1)  p = 4r+3, p mod 5 in {{1,4}}:  {report.count_lucas_lo}")
        click.echo(f"  L(2r+2)  p = 4r+3, p mod 5 in {{2,3}}:  {report.count_lucas_hi}")
        click.echo(f"exceptions seen  {seen}")
        click.echo(f"counterexamples  {len(report.counterexamples)}")
        for w in report.counterexamples:
            click.echo(
                f"  p = {w.prime_class.p}: residues ({w.residue_lo}, {w.residue_hi}) "
                f"at indices ({w.index_lo}, {w.index_hi}), predicted index {w.divisible_index}"
            )
    elif fmt == "csv":
        entries = [(w.prime_class.p, _witness_row(w)) for w in report.witnesses]
        entries += [(p, _exception_row(p)) for p in report.exceptions_seen]
        entries += [(w.prime_class.p, _witness_row(w)) for w in report.counterexamples]
        entries.sort(key=lambda e: e[0])
        _echo_csv([row for _, row in entries])
    else:
        _echo_json(
            {
                "range": {"lo": _jint(lo), "hi": _jint(hi)},
                "count_fib_lo": report.count_fib_lo,
                "count_fib_hi": report.count_fib_hi,
                "count_lucas_lo": report.count_lucas_lo,
                "count_lucas_hi": report.count_lucas_hi,
                "witness_count": report.witness_count,
                "exceptions_seen": report.exceptions_seen,
                "counterexamples": [_witness_obj(w) for w in report.counterexamples],
                "witnesses": [_witness_obj(w) for w in report.witnesses],
            }
        )
    if report.counterexamples:
        raise SystemExit(1)


@cli.command()
@click.argument("p", type=int)
@click.option("--format", "fmt", type=_FORMAT, default="human", show_default=True)
def witness(p: int, fmt: str) -> None:
    """Show which consecutive factor the prime P divides.

    The exceptions P = 2 and P = 5 report a notice instead of a witness and
    still exit 0; composite P exits 2.
    """
    try:
        w = theorem_witness(p)
    except NotPrimeError as exc:
        raise click.UsageError(str(exc))
    except ExceptionPrimeError:
        if fmt == "human":
            if p == 2:
                click.echo("p = 2 fits neither index form 4r+1 nor 4r+3; no product witness exists.")
            else:
                click.echo(
                    "p = 5 is the excluded prime of the 4r+1 family: 5 = F(5) itself, "
                    "and 5 divides neither F(2) = 1 nor F(3) = 2; note L(5) = 11 = 1 (mod 5)."
                )
        elif fmt == "csv":
            _echo_csv([_exception_row(p)])
        else:
            _echo_json(_exception_obj(p))
        return

    if fmt == "human":
        c = w.prime_class
        click.echo(f"p                {c.p}")
        click.echo(f"form             {c.form.value} (r = {c.r})")
        click.echo(f"five_residue     {c.five_residue.value}")
        click.echo(f"product_kind     {w.product_kind.value}")
        click.echo(f"indices          ({w.index_lo}, {w.index_hi})")
        click.echo(f"divisible_index  {w.divisible_index}")
        click.echo(f"residues         ({w.residue_lo}, {w.residue_hi})")
    elif fmt == "csv":
        _echo_csv([_witness_row(w)])
    else:
        _echo_json(_witness_obj(w))


@cli.command()
@click.argument("p", type=int)
@click.option("--format", "fmt", type=_FORMAT, default="human", show_default=True)
def classify(p: int, fmt: str) -> None:
    """Show the index form, r, residue class mod 5, and apparition side of P."""
    try:
        c = classify_prime(p)
    except NotPrimeError as exc:
        raise click.UsageError(str(exc))
    try:
        side = expected_apparition_side(p).value
    except ExceptionPrimeError:
        side = None

    if fmt == "human":
        form = c.form.value if c.r is None else f"{c.form.value} (r = {c.r})"
        click.echo(f"p                {c.p}")
        click.echo(f"form             {form}")
        click.echo(f"five_residue     {c.five_residue.value}")
        click.echo(f"apparition_side  {side or '(none)'}")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "form", "r", "five_residue", "apparition_side"])
        writer.writerow([str(c.p), c.form.value, "" if c.r is None else str(c.r), c.five_residue.value, side or ""])
        click.echo(buf.getvalue(), nl=False)
    else:
        _echo_json(
            {
                "p": c.p,
                "form": c.form.value,
                "r": c.r,
                "five_residue": c.five_residue.value,
                "apparition_side": side,
            }
        )


@cli.command()
@click.option("--max-n", type=int, default=100, show_default=True, help="Upper n for SUM/PRODUCT/DOUBLING grids.")
@click.option("--max-m", type=int, default=None, help="Upper m for SUM/PRODUCT grids (default: --max-n).")
@click.option("--max-r", type=int, default=100, show_default=True, help="Upper r for the theorem identities.")
@click.option("--format", "fmt", type=_FORMAT, default="human", show_default=True)
def identities(max_n: int, max_m: int | None, max_r: int, fmt: str) -> None:
    """Exhaustively check every identity over the index grid.

    SUM and PRODUCT run for all 0 <= m <= min(max-m, n) <= n <= max-n,
    DOUBLING for n <= max-n, the four theorem identities for r <= max-r,
    and the Lucas-Fermat congruence for every prime p <= max-n.  Exits 1 if
    any instance fails (each failure is detailed on stderr).
    """
    if max_m is None:
        max_m = max_n
    if max_n < 0 or max_m < 0 or max_r < 0:
        raise click.UsageError("grid bounds must be nonnegative")
    if max_m > max_n:
        raise click.UsageError(f"--max-m must not exceed --max-n, got {max_m} > {max_n}")

    checked = {ident: 0 for ident in IdentityId}
    passed = {ident: 0 for ident in IdentityId}
    failures = []

    def record(result) -> None:
        checked[result.identity] += 1
        if result.passed:
            passed[result.identity] += 1
        else:
            failures.append(result)

    try:
        for m in range(max_m + 1):
            for n in range(m, max_n + 1):
                record(check_sum_identity(n, m))
                record(check_product_identity(n, m))
        for n in range(max_n + 1):
            record(check_doubling_identity(n))
        for r in range(max_r + 1):
            for result in check_theorem_identities(r):
                record(result)
        if max_n >= 2:
            for p in primes_in(PrimeRange(2, max_n)):
                record(check_lucas_fermat(p))
    except IndexTooLargeError as exc:
        raise click.UsageError(str(exc))

    rows = [
        [ident.value, str(checked[ident]), str(passed[ident]), str(checked[ident] - passed[ident])]
        for ident in IdentityId
    ]
    if fmt == "human":
        width = max(len(ident.value) for ident in IdentityId)
        click.echo(f"{'identity':<{width}}  checked  passed  failed")
        for name, n_checked, n_passed, n_failed in rows:
            click.echo(f"{name:<{width}}  {n_checked:>7}  {n_passed:>6}  {n_failed:>6}")
        click.echo("all identities hold" if not failures else f"identity failures: {len(failures)}")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "checked", "passed", "failed"])
        writer.writerows(rows)
        click.echo(buf.getvalue(), nl=False)
    else:
        _echo_json(
            {
                "identities": [
                    {"identity": name, "checked": int(c), "passed": int(ok), "failed": int(bad)}
                    for name, c, ok, bad in rows
                ],
                "all_passed": not failures,
            }
        )
    if failures:
        for f in failures:
            click.echo(f"FAIL {f.identity.value} at {f.indices}: lhs={f.lhs} rhs={f.rhs}", err=True)
        raise SystemExit(1)


@cli.command("eval")
@click.argument("sequence", type=click.Choice(["fib", "lucas"]))
@click.argument("n", type=int)
@click.option("--mod", "modulus", type=int, default=None, help="Reduce the value mod this integer.")
def eval_cmd(sequence: str, n: int, modulus: int | None) -> None:
    """Print F_n or L_n exactly, or its residue with --mod.

    Exact mode is bounded by FIBLUCAS_MAX_EXACT_INDEX (default 10**6);
    modular mode accepts any index up to 2**63 - 1.
    """
    try:
        if modulus is None:
            pair = fib_pair(n) if sequence == "fib" else lucas_pair(n)
        else:
            pair = fib_pair_mod(n, modulus) if sequence == "fib" else lucas_pair_mod(n, modulus)
    except (IndexTooLargeError, ValueError) as exc:
        raise click.UsageError(str(exc))
    click.echo(str(pair.first))


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
