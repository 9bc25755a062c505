"""Counterexample construction, its slack inequality, and family sweeps.

For deep families with lead > depth, second coefficient positive and last
coefficient > 1, a specific integer N in the window
(G_{L+s+2}, G_{L+s+3}) is claimed to carry two distinct legal
decompositions built from the same large prefix.  ``construction_slack``
computes the quantity whose negativity places N inside that window;
``construct_counterexample`` builds and verifies the two candidate
decompositions and reports exactly what holds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import (
    BudgetExceededError,
    ConstructionFailedError,
    NotApplicableError,
    RecurrenceError,
)
from .greedy import greedy_decompose
from .legality import Decomposition, evaluate, is_legal
from .recurrence import RecurrenceSpec, classify, parse_recurrence
from .enumerator import decompositions_up_to, enumerate_legal, first_nonunique
from .sequence import SequenceHandle


def _require_construction(handle: SequenceHandle) -> None:
    if not classify(handle.spec).construction_applies:
        raise NotApplicableError(
            f"{handle.spec.text}: construction needs a deep family with "
            "lead > depth, positive second coefficient and last coefficient > 1"
        )


def construction_slack(handle: SequenceHandle) -> int:
    """G_{s+L+2} minus the construction's fixed prefix value minus G_{s+3}.

    Negative slack means every x >= 1 pushes the constructed target above
    G_{s+L+2}, i.e. into the intended window.
    """
    _require_construction(handle)
    c, s, L = handle.spec.coefficients, handle.spec.depth, handle.spec.order
    total = handle.term(s + L + 2)
    for k in range(1, L - s):
        total -= c[s + k - 1] * handle.term(L + 3 - k)
    return total - handle.term(s + 3)


def case1_slack_closed_form(handle: SequenceHandle) -> int:
    """Closed form of the slack for order = depth+2: (2 - G_3)*lead^2 - 2*lead."""
    _require_construction(handle)
    if handle.spec.order != handle.spec.depth + 2:
        raise NotApplicableError("closed form only covers order = depth + 2")
    lead = handle.spec.lead
    return (2 - handle.term(3)) * lead * lead - 2 * lead


@dataclass(frozen=True)
class CounterexampleReport:
    """Verified outcome of the two-decompositions construction.

    ``decompA`` is the prefix + explicit G_{s+3} + greedy(x) decomposition.
    ``decompB`` is a second, distinct, verified-legal decomposition of the
    same N.  ``direct_pair_legal`` records whether the construction's own
    candidate for the second decomposition (prefix + greedy(G_{s+3}+x))
    passed the grammar; when it does not, ``decompB`` comes from exhaustive
    enumeration and ``direct_candidate`` keeps the rejected candidate.
    """

    n_value: int
    x: int
    decompA: Decomposition
    decompB: Decomposition
    window_ok: bool
    count_at_n: int
    direct_pair_legal: bool
    direct_candidate: Decomposition


def _merge(parts: dict[int, int], extra: Decomposition) -> Decomposition:
    merged = dict(parts)
    for idx, mult in extra.summands:
        merged[idx] = merged.get(idx, 0) + mult
    return Decomposition.from_dict(merged)


def construct_counterexample(handle: SequenceHandle) -> CounterexampleReport:
    """Build the two-decompositions witness for an applicable family.

    Raises ConstructionFailedError (with full diagnostics) when no second
    legal decomposition of the constructed N exists at all.
    """
    _require_construction(handle)
    c, s, L = handle.spec.coefficients, handle.spec.depth, handle.spec.order
    g_s3, g_s4 = handle.term(s + 3), handle.term(s + 4)
    x_cap = min(g_s3, g_s4 - g_s3)
    diagnostics: dict = {"recurrence": handle.spec.text, "x_cap": x_cap}
    if x_cap <= 1:
        raise ConstructionFailedError(
            f"no valid offset: min(G_{s+3}, G_{s+4}-G_{s+3}) = {x_cap} <= 1",
            diagnostics,
        )
    x = 1
    prefix = {
        L + 3 - k: c[s + k - 1]
        for k in range(1, L - s)
        if c[s + k - 1]
    }
    n_value = sum(mult * handle.term(idx) for idx, mult in prefix.items()) + g_s3 + x
    lo, hi = handle.term(L + s + 2), handle.term(L + s + 3)
    window_ok = lo < n_value < hi
    decomp_a = _merge({**prefix, s + 3: 1}, greedy_decompose(handle, x))
    candidate_b = _merge(prefix, greedy_decompose(handle, g_s3 + x))
    diagnostics.update(
        n_value=n_value, x=x, window=(lo, hi), window_ok=window_ok,
        decompA=str(decomp_a), direct_candidate=str(candidate_b),
    )
    a_legal = is_legal(decomp_a, handle).legal
    b_legal = is_legal(candidate_b, handle).legal
    diagnostics.update(decompA_legal=a_legal, direct_candidate_legal=b_legal)
    if evaluate(decomp_a, handle) != n_value or evaluate(candidate_b, handle) != n_value:
        raise ConstructionFailedError("constructed sums do not evaluate to N", diagnostics)
    all_decomps = sorted(enumerate_legal(handle, n_value), key=str)
    diagnostics["count_at_n"] = len(all_decomps)
    diagnostics["legal_decompositions"] = [str(d) for d in all_decomps]
    if not a_legal or not window_ok:
        raise ConstructionFailedError(
            "primary decomposition or window bound failed verification", diagnostics
        )
    decomp_b = None
    if b_legal and candidate_b != decomp_a:
        decomp_b = candidate_b
    else:
        for d in all_decomps:
            if d != decomp_a:
                decomp_b = d
                break
    if decomp_b is None:
        raise ConstructionFailedError(
            f"N = {n_value} admits no second legal decomposition "
            f"(count = {len(all_decomps)})",
            diagnostics,
        )
    assert is_legal(decomp_b, handle).legal and decomp_b != decomp_a
    return CounterexampleReport(
        n_value=n_value,
        x=x,
        decompA=decomp_a,
        decompB=decomp_b,
        window_ok=window_ok,
        count_at_n=len(all_decomps),
        direct_pair_legal=b_legal,
        direct_candidate=candidate_b,
    )


@dataclass(frozen=True)
class UniquenessReport:
    recurrence: str
    bound: int
    all_unique: bool
    violation: tuple[int, int] | None = None  # (N, count)
    witnesses: tuple[Decomposition, ...] = ()


def verify_uniqueness_range(
    handle: SequenceHandle, bound: int, budget: int | None = None
) -> UniquenessReport:
    """Scan 1..bound for a value with two legal decompositions."""
    hit = first_nonunique(handle, bound, budget)
    if hit is None:
        return UniquenessReport(handle.spec.text, bound, all_unique=True)
    value, count = hit
    witnesses = tuple(sorted(enumerate_legal(handle, value, budget), key=str))
    return UniquenessReport(
        handle.spec.text, bound, all_unique=False, violation=hit, witnesses=witnesses
    )


CSV_HEADER = (
    "recurrence,s,L,bound,first_nonunique_N,count_at_N,lemma22,"
    "counterexample_N,status,elapsed_ms"
)


@dataclass
class ExperimentRecord:
    """One row of a sweep: everything measured for a single family."""

    recurrence: str
    s: int
    L: int
    bound: int
    first_nonunique_n: int | None = None
    count_at_n: int | None = None
    slack: int | None = None
    counterexample_n: int | None = None
    status: str = "ok"
    elapsed_ms: int = 0
    note: str = ""

    def csv_cells(self) -> list[str]:
        def cell(v):
            return "" if v is None else str(v)

        return [
            self.recurrence,
            str(self.s),
            str(self.L),
            str(self.bound),
            cell(self.first_nonunique_n),
            cell(self.count_at_n),
            cell(self.slack),
            cell(self.counterexample_n),
            self.status,
            str(self.elapsed_ms),
        ]


def expand_grid(
    depths: range | list[int], spans: range | list[int], c_max: int
) -> tuple[list[str], list[str]]:
    """All coefficient texts with the given depths and span = order - depth.

    Lead and last coefficients range over 1..c_max, interior ones over
    0..c_max.  Returns (valid_texts, skipped_notes); grid points rejected by
    the parser (degenerate index sets) land in the notes.
    """
    valid: list[str] = []
    skipped: list[str] = []

    def tuples(span: int):
        if span == 1:
            for lead in range(1, c_max + 1):
                yield (lead,)
            return
        def rec(prefix, left):
            if left == 1:
                for last in range(1, c_max + 1):
                    yield prefix + (last,)
                return
            for mid in range(0, c_max + 1):
                yield from rec(prefix + (mid,), left - 1)
        for lead in range(1, c_max + 1):
            yield from rec((lead,), span - 1)

    for s in depths:
        for span in spans:
            for tail in tuples(span):
                text = ",".join(str(v) for v in (0,) * s + tail)
                try:
                    parse_recurrence(text)
                except RecurrenceError as exc:
                    skipped.append(f"{text}: {exc}")
                    continue
                valid.append(text)
    return valid, skipped


def probe_family(
    recurrences: list[str],
    bound: int,
    budget: int | None = None,
) -> list[ExperimentRecord]:
    """Run the full measurement battery over a list of families.

    Per family: classify, scan for the first non-unique value, and, when the
    construction applies, compute the slack and attempt the counterexample.
    Errors are embedded in the record; the sweep never aborts.
    """
    records: list[ExperimentRecord] = []
    for text in recurrences:
        started = time.perf_counter()
        spec = parse_recurrence(text)
        handle = SequenceHandle(spec)
        flags = classify(spec)
        rec = ExperimentRecord(
            recurrence=text, s=spec.depth, L=spec.order, bound=bound
        )
        try:
            hit = first_nonunique(handle, bound, budget)
            if hit is not None:
                rec.first_nonunique_n, rec.count_at_n = hit
            if flags.construction_applies:
                rec.slack = construction_slack(handle)
                try:
                    report = construct_counterexample(handle)
                    rec.counterexample_n = report.n_value
                    if not report.direct_pair_legal:
                        rec.note = "second decomposition found by enumeration"
                except ConstructionFailedError as exc:
                    rec.status = "inconsistent"
                    rec.note = str(exc)
                    n = exc.diagnostics.get("n_value")
                    if n is not None:
                        rec.counterexample_n = n
        except BudgetExceededError as exc:
            rec.status = "budget_exceeded"
            rec.note = str(exc)
        rec.elapsed_ms = int((time.perf_counter() - started) * 1000)
        records.append(rec)
    return records
