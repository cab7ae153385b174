"""Vanishing/nonvanishing classification of p26(n) from the factorization of 12n + 13.

Two sufficient conditions force p26(n) = 0:

  cond I  : some prime = 3 (mod 4) divides m = 12n + 13 to an odd power,
            and some prime = 2 (mod 3) does too;
  cond II : m is a perfect square all of whose prime factors are
            = 11 (mod 12).

Five further hypotheses force p26(n) != 0 (names used in reports):

  prime-power          : m = p^alpha with p != 11 (mod 12);
  odd-exp-5-mod-12     : every prime = 3 (mod 4) divides m to an even
                         power, and some prime = 5 (mod 12) to an odd one;
  25-with-even-shape   : every prime = 5, 7, 11 (mod 12) divides m to an
                         even power, 25 | m, and no prime = 1 (mod 12)
                         has exponent = 4 (mod 5);
  49-with-even-shape   : same shape, 49 | m, and no prime = 1 (mod 12)
                         has exponent = 6 (mod 7);
  odd-exp-7-mod-12     : every prime = 2 (mod 3) divides m to an even
                         power, and some prime = 7 (mod 12) to an odd one.

The classifier never predicts outside these hypotheses; a computed zero
not covered by cond I / cond II would contradict the expected converse
and is surfaced by scan(), never suppressed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Factorization, factorize
from .errors import ConsistencyError
from .hecke import p26_cm

PREDICT_ZERO = "zero"
PREDICT_NONZERO = "nonzero"
PREDICT_NONE = "no-prediction"


@dataclass(frozen=True)
class ConditionProfile:
    """All condition flags for one n, derived from factorize(12n + 13)."""

    n: int
    m: int
    factorization: Factorization
    cond_i: bool
    cond_ii: bool
    n1: bool
    n2: bool
    prime_power: bool
    odd_exp_5: bool
    div_25: bool
    div_49: bool
    odd_exp_7: bool


@dataclass(frozen=True)
class VanishingReport:
    """Computed value, applicable conditions, and their reconciliation.

    consistent is False only when an applicable condition contradicts
    the computed value, which must never happen; such a report is a
    red-flag output and the CLI turns it into exit status 2.
    """

    profile: ConditionProfile
    p26_value: int
    predicted: str
    consistent: bool
    explanation: tuple[str, ...]


def _conditions(fac: Factorization) -> dict[str, bool]:
    odd = [(p, e) for p, e in fac if e % 2 == 1]
    has_3mod4_odd = any(p % 4 == 3 for p, _ in odd)
    has_2mod3_odd = any(p % 3 == 2 for p, _ in odd)
    witness = any(p % 12 != 11 for p, _ in fac)
    even_shape = all(e % 2 == 0 for p, e in fac if p % 12 in (5, 7, 11))
    return {
        "cond_i": has_3mod4_odd and has_2mod3_odd,
        "cond_ii": fac.is_square and bool(fac.factors)
        and all(p % 12 == 11 for p, _ in fac),
        "n1": not has_3mod4_odd and witness,
        "n2": not has_2mod3_odd and witness,
        "prime_power": len(fac.factors) == 1 and fac.factors[0][0] % 12 != 11,
        "odd_exp_5": not has_3mod4_odd and any(p % 12 == 5 for p, _ in odd),
        "div_25": even_shape
        and fac.value % 25 == 0
        and all(e % 5 != 4 for p, e in fac if p % 12 == 1),
        "div_49": even_shape
        and fac.value % 49 == 0
        and all(e % 7 != 6 for p, e in fac if p % 12 == 1),
        "odd_exp_7": not has_2mod3_odd and any(p % 12 == 7 for p, _ in odd),
    }


def profile(n: int) -> ConditionProfile:
    """Compute every condition flag for one index n >= 0."""
    if n < 0:
        raise ValueError("profile expects n >= 0")
    m = 12 * n + 13
    fac = factorize(m)
    flags = _conditions(fac)
    prof = ConditionProfile(n=n, m=m, factorization=fac, **flags)
    # logically impossible combinations; a violation means the flag
    # computation itself is broken
    if prof.cond_i and (prof.n1 or prof.n2):
        raise ConsistencyError(f"cond I with N1/N2 at n={n}")
    return prof


_ZERO_RULES = (("cond-I", "cond_i"), ("cond-II", "cond_ii"))
_NONZERO_RULES = (
    ("prime-power", "prime_power"),
    ("odd-exp-5-mod-12", "odd_exp_5"),
    ("25-with-even-shape", "div_25"),
    ("49-with-even-shape", "div_49"),
    ("odd-exp-7-mod-12", "odd_exp_7"),
)


def apply_theorems(n: int, prof: ConditionProfile | None = None) -> VanishingReport:
    """Predict zero/nonzero where a condition applies and reconcile with p26_cm."""
    if prof is None:
        prof = profile(n)
    value = p26_cm(n)
    zero_hits = tuple(name for name, attr in _ZERO_RULES if getattr(prof, attr))
    nonzero_hits = tuple(name for name, attr in _NONZERO_RULES if getattr(prof, attr))
    if zero_hits and nonzero_hits:
        raise ConsistencyError(
            f"contradictory predictions at n={n}: {zero_hits} vs {nonzero_hits}"
        )
    if zero_hits:
        predicted = PREDICT_ZERO
        consistent = value == 0
    elif nonzero_hits:
        predicted = PREDICT_NONZERO
        consistent = value != 0
    else:
        predicted = PREDICT_NONE
        consistent = True
    return VanishingReport(
        profile=prof,
        p26_value=value,
        predicted=predicted,
        consistent=consistent,
        explanation=zero_hits + nonzero_hits,
    )


def _odd_pair(fac: Factorization) -> bool:
    odd = [(p, e) for p, e in fac if e % 2 == 1]
    return any(p % 4 == 3 for p, _ in odd) and any(p % 3 == 2 for p, _ in odd)


def check_25n_plus_1(n: int) -> VanishingReport:
    """Vanishing biconditional for p26(25n + 1), gated on 12n + 1.

    Applicable when no prime = 1 (mod 12) divides 12n + 1 to a power
    = 4 (mod 5); then p26(25n + 1) = 0 exactly when 12n + 1 has both a
    3 (mod 4) and a 2 (mod 3) prime with odd exponent.  Outside the gate
    the report carries no prediction.
    """
    if n < 0:
        raise ValueError("check_25n_plus_1 expects n >= 0")
    base = factorize(12 * n + 1)
    target = 25 * n + 1
    prof = profile(target)
    value = p26_cm(target)
    if not all(e % 5 != 4 for p, e in base if p % 12 == 1):
        return VanishingReport(
            prof, value, PREDICT_NONE, True, ("mod-5-exponent-gate-failed",)
        )
    rhs = _odd_pair(base)
    return VanishingReport(
        prof,
        value,
        PREDICT_ZERO if rhs else PREDICT_NONZERO,
        (value == 0) == rhs,
        ("iff-25n-plus-1",),
    )


def check_49n_plus_3(n: int) -> VanishingReport:
    """Vanishing biconditional for p26(49n + 3); mod-7 analogue of check_25n_plus_1."""
    if n < 0:
        raise ValueError("check_49n_plus_3 expects n >= 0")
    base = factorize(12 * n + 1)
    target = 49 * n + 3
    prof = profile(target)
    value = p26_cm(target)
    if not all(e % 7 != 6 for p, e in base if p % 12 == 1):
        return VanishingReport(
            prof, value, PREDICT_NONE, True, ("mod-7-exponent-gate-failed",)
        )
    rhs = _odd_pair(base)
    return VanishingReport(
        prof,
        value,
        PREDICT_ZERO if rhs else PREDICT_NONZERO,
        (value == 0) == rhs,
        ("iff-49n-plus-3",),
    )


@dataclass(frozen=True)
class ScanSummary:
    start: int
    end: int
    zero_count: int
    explained_zero_count: int
    unexplained_zeros: tuple[int, ...]


def scan(start: int, end: int) -> tuple[list[VanishingReport], ScanSummary]:
    """Classify every n in [start, end] and summarize the zeros.

    A zero is explained when cond I or cond II holds.  Unexplained zeros
    would be counterexamples to the expected converse; they are listed
    prominently in the summary and must never be dropped.
    """
    if start < 0 or end < start:
        raise ValueError("scan expects 0 <= start <= end")
    reports = [apply_theorems(n) for n in range(start, end + 1)]
    zeros = [r for r in reports if r.p26_value == 0]
    unexplained = tuple(
        r.profile.n for r in zeros if not (r.profile.cond_i or r.profile.cond_ii)
    )
    summary = ScanSummary(
        start=start,
        end=end,
        zero_count=len(zeros),
        explained_zero_count=len(zeros) - len(unexplained),
        unexplained_zeros=unexplained,
    )
    return reports, summary


def report_record(report: VanishingReport) -> dict:
    """JSON-ready record; big integers rendered as decimal strings."""
    prof = report.profile
    return {
        "n": prof.n,
        "m": prof.m,
        "factors": [[p, e] for p, e in prof.factorization],
        "condI": prof.cond_i,
        "condII": prof.cond_ii,
        "n1": prof.n1,
        "n2": prof.n2,
        "theorems": list(report.explanation),
        "p26": str(report.p26_value),
        "predicted": report.predicted,
        "consistent": report.consistent,
    }


CSV_HEADER = "n,m,factors,condI,condII,n1,n2,theorems,p26,predicted,consistent"


def report_csv_row(report: VanishingReport) -> str:
    """One CSV row matching CSV_HEADER; same column content as the JSON record."""
    rec = report_record(report)
    factors = " ".join(f"{p}^{e}" for p, e in rec["factors"])
    theorems = " ".join(rec["theorems"])
    cells = [
        str(rec["n"]),
        str(rec["m"]),
        factors,
        str(rec["condI"]).lower(),
        str(rec["condII"]).lower(),
        str(rec["n1"]).lower(),
        str(rec["n2"]).lower(),
        theorems,
        rec["p26"],
        rec["predicted"],
        str(rec["consistent"]).lower(),
    ]
    return ",".join(cells)


def summary_record(summary: ScanSummary) -> dict:
    return {
        "start": summary.start,
        "end": summary.end,
        "zero_count": summary.zero_count,
        "explained_zero_count": summary.explained_zero_count,
        "unexplained_zeros": list(summary.unexplained_zeros),
    }
