"""Classification of generating sequences and oracle cross-verification.

Three certificate predicates decide, where possible, whether the walk
induced by a generating sequence is a minimum closed dominating walk of
the subdigraph it generates: a length-k constant run or a doubled
sequence certifies "never minimum", while pairwise-distinct (k-1)-windows
certify "always minimum". All three read the sequence cyclically. The
sweep harness enumerates sequences (one per rotation class), verifies
each against the exact oracle, and tallies where the certificates stay
silent.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, InvariantViolation, ResourceCapError
from .graphcore import generated_subdigraph
from .seqcore import Alphabet, CyclicSequence
from .watchman import (
    DEFAULT_VERTEX_CAP,
    enumerate_min_walks,
    induced_walk,
    solve_min_walk,
)


class Verdict(Enum):
    PROVABLY_NOT_WATCHMAN = "ProvablyNotWatchman"
    PROVABLY_WATCHMAN = "ProvablyWatchman"
    UNDETERMINED = "Undetermined"


class Reason(Enum):
    CONSTANT_RUN = "ConstantRun"
    DOUBLED_SEQUENCE = "DoubledSequence"
    DISTINCT_WINDOWS = "DistinctWindows"
    NONE = "None"


_VALID_PAIRS = {
    Verdict.PROVABLY_NOT_WATCHMAN: (Reason.CONSTANT_RUN, Reason.DOUBLED_SEQUENCE),
    Verdict.PROVABLY_WATCHMAN: (Reason.DISTINCT_WINDOWS,),
    Verdict.UNDETERMINED: (Reason.NONE,),
}


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    reason: Reason

    def __post_init__(self) -> None:
        if self.reason not in _VALID_PAIRS[self.verdict]:
            raise DomainError(
                f"verdict {self.verdict.value} cannot carry reason {self.reason.value}"
            )

    def __str__(self) -> str:
        return f"{self.verdict.value} ({self.reason.value})"


def _require_length(d: CyclicSequence, k: int) -> None:
    if k < 1:
        raise DomainError("order must be at least 1")
    if len(d) < k:
        raise DomainError(f"sequence shorter than order: length {len(d)} < k = {k}")


def has_constant_run(d: CyclicSequence, k: int) -> bool:
    """True iff some cyclic window of length k is constant.

    Runs may cross the seam: 1001 has the cyclic 2-run 11 at positions
    3, 0 even though no linear window repeats.
    """
    _require_length(d, k)
    return any(
        all(d[i + j] == d[i] for j in range(1, k)) for i in range(len(d))
    )


def has_linear_constant_run(d: CyclicSequence, k: int) -> bool:
    """Like has_constant_run but without wraparound, for seam diagnostics."""
    _require_length(d, k)
    syms = d.symbols
    return any(
        len(set(syms[i : i + k])) == 1 for i in range(len(syms) - k + 1)
    )


def is_doubled(d: CyclicSequence, k: int) -> bool:
    """True iff d is two copies of one sequence of length at least k."""
    n = len(d)
    half = n // 2
    return n % 2 == 0 and half >= k and d.symbols[:half] == d.symbols[half:]


def has_distinct_windows(d: CyclicSequence, k: int) -> bool:
    """True iff all cyclic windows of length k-1 are pairwise distinct."""
    _require_length(d, k)
    windows = {d.window(i, k - 1).symbols if k > 1 else () for i in range(len(d))}
    return len(windows) == len(d)


def classify(d: CyclicSequence, k: int) -> Classification:
    """Apply the certificates in fixed precedence.

    Negative certificates first (they settle the question); a doubled
    constant sequence therefore reports ConstantRun.
    """
    _require_length(d, k)
    if has_constant_run(d, k):
        return Classification(Verdict.PROVABLY_NOT_WATCHMAN, Reason.CONSTANT_RUN)
    if is_doubled(d, k):
        return Classification(Verdict.PROVABLY_NOT_WATCHMAN, Reason.DOUBLED_SEQUENCE)
    if has_distinct_windows(d, k):
        return Classification(Verdict.PROVABLY_WATCHMAN, Reason.DISTINCT_WINDOWS)
    return Classification(Verdict.UNDETERMINED, Reason.NONE)


@dataclass(frozen=True)
class VerificationRecord:
    """One sequence checked against the exact oracle.

    is_watchman means the induced walk attains the oracle optimum and its
    canonical rotation appears in the enumerated minimum set.
    constant_run_seam_only flags sequences whose constant run exists only
    across the cyclic seam, as evidence for the cyclic reading.
    """

    sequence: CyclicSequence
    order: int
    classification: Classification
    induced_length: int
    oracle_optimum: int
    is_watchman: bool
    constant_run_seam_only: bool = False

    def to_json(self) -> dict:
        return {
            "sequence": self.sequence.text,
            "alphabet": self.sequence.alphabet.size,
            "order": self.order,
            "verdict": self.classification.verdict.value,
            "reason": self.classification.reason.value,
            "induced_length": self.induced_length,
            "oracle_optimum": self.oracle_optimum,
            "is_watchman": self.is_watchman,
            "constant_run_seam_only": self.constant_run_seam_only,
        }


@dataclass(frozen=True)
class SkippedSequence:
    """A sweep entry whose oracle run would exceed the configured cap."""

    sequence: CyclicSequence
    order: int
    reason: str

    def to_json(self) -> dict:
        return {
            "sequence": self.sequence.text,
            "alphabet": self.sequence.alphabet.size,
            "order": self.order,
            "skipped": True,
            "reason": self.reason,
        }


def verify(
    d: CyclicSequence, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> VerificationRecord:
    """Build the generated subdigraph and test the induced walk for minimality.

    Raises ResourceCapError when the subdigraph exceeds the oracle cap,
    and InvariantViolation if the certificates and the oracle ever
    disagree (which would falsify a certificate, so it must never pass
    silently).
    """
    _require_length(d, k)
    graph = generated_subdigraph(d, k)
    walk = induced_walk(d, k, graph)
    result = solve_min_walk(graph, vertex_cap)
    if not result.feasible:  # pragma: no cover - induced walks always dominate
        raise InvariantViolation("generated subdigraph reported infeasible")
    optimum = result.optimum_length
    induced_length = walk.length
    if induced_length == optimum:
        minimum_set = {
            w.canonical_rotation() for w in enumerate_min_walks(graph, optimum, vertex_cap)
        }
        if walk.canonical_rotation() not in minimum_set:
            raise InvariantViolation(
                "induced walk attains the optimum but is missing from the "
                "enumerated minimum set"
            )
        is_watchman = True
    else:
        is_watchman = False

    classification = classify(d, k)
    if classification.verdict is Verdict.PROVABLY_WATCHMAN and not is_watchman:
        raise InvariantViolation(
            f"distinct-window certificate violated by {d.text} (k={k})"
        )
    if classification.verdict is Verdict.PROVABLY_NOT_WATCHMAN and is_watchman:
        raise InvariantViolation(
            f"negative certificate violated by {d.text} (k={k})"
        )
    seam_only = has_constant_run(d, k) and not has_linear_constant_run(d, k)
    return VerificationRecord(
        sequence=d,
        order=k,
        classification=classification,
        induced_length=induced_length,
        oracle_optimum=optimum,
        is_watchman=is_watchman,
        constant_run_seam_only=seam_only,
    )


def rotation_representatives(a: int, n: int):
    """All sequences of length n over a symbols, one per rotation class.

    Yields the lexicographically least member of each class, in
    lexicographic order.
    """
    alphabet = Alphabet(a)
    for tup in itertools.product(range(a), repeat=n):
        seq = CyclicSequence(tup, alphabet)
        if seq.is_least_rotation():
            yield seq


@dataclass
class SweepReport:
    """Deterministically ordered records plus summary statistics."""

    records: list[VerificationRecord | SkippedSequence]
    summary: dict

    def to_jsonl(self) -> str:
        lines = [json.dumps(entry.to_json()) for entry in self.records]
        lines.append(json.dumps({"summary": self.summary}))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            [
                "sequence",
                "length",
                "verdict",
                "reason",
                "induced_length",
                "oracle_optimum",
                "is_watchman",
            ]
        )
        for entry in self.records:
            if isinstance(entry, SkippedSequence):
                continue
            writer.writerow(
                [
                    entry.sequence.text,
                    len(entry.sequence),
                    entry.classification.verdict.value,
                    entry.classification.reason.value,
                    entry.induced_length,
                    entry.oracle_optimum,
                    entry.is_watchman,
                ]
            )
        return buf.getvalue()


DEFAULT_SWEEP_BUDGET = 100_000


def sweep(
    a: int,
    k: int,
    lengths,
    budget: int = DEFAULT_SWEEP_BUDGET,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> SweepReport:
    """Verify every sequence of the given lengths, one per rotation class.

    Records appear sorted by length then by canonical sequence text.
    Sequences whose subdigraph exceeds the oracle cap become skip
    entries; hitting the budget stops the sweep and marks the report
    truncated. The summary tallies verdict x is_watchman cells (the
    Undetermined/true cell holds the sequences no certificate explains)
    plus the seam-only constant-run evidence.
    """
    Alphabet(a)
    lengths = sorted(set(lengths))
    if not lengths:
        raise DomainError("no lengths to sweep")
    if lengths[0] < k:
        raise DomainError(f"sweep lengths must be at least the order k = {k}")
    if budget < 1:
        raise DomainError("budget must be positive")

    records: list[VerificationRecord | SkippedSequence] = []
    cells: dict[str, int] = {}
    for verdict in Verdict:
        for flag in (False, True):
            cells[f"{verdict.value}:{str(flag).lower()}"] = 0
    skipped = 0
    seam_total = 0
    seam_not_watchman = 0
    truncated = False

    for n in lengths:
        if truncated:
            break
        for seq in rotation_representatives(a, n):
            if len(records) >= budget:
                truncated = True
                break
            try:
                record = verify(seq, k, vertex_cap)
            except ResourceCapError as exc:
                records.append(SkippedSequence(seq, k, str(exc)))
                skipped += 1
                continue
            records.append(record)
            key = f"{record.classification.verdict.value}:{str(record.is_watchman).lower()}"
            cells[key] += 1
            if record.constant_run_seam_only:
                seam_total += 1
                if not record.is_watchman:
                    seam_not_watchman += 1

    summary = {
        "alphabet": a,
        "order": k,
        "lengths": lengths,
        "total": len(records),
        "verified": len(records) - skipped,
        "skipped": skipped,
        "truncated": truncated,
        "cells": cells,
        "seam_only_constant_runs": {
            "total": seam_total,
            "not_watchman": seam_not_watchman,
        },
    }
    return SweepReport(records, summary)
