"""Exhaustive enumeration of legal decompositions and uniqueness scans.

Two independent routes exist on purpose:

* ``enumerate_legal`` expands the grammar top-down with value pruning and
  collects every legal word at the target's window alignment;
* ``naive_oracle`` brute-forces all bounded sparse maps with the right value
  and filters them through the legality verdict.

They must agree wherever the oracle is allowed to run; tests enforce that.
"""

from __future__ import annotations

import os

from .errors import BudgetExceededError, NotPLRSError, OracleBoundExceededError
from .legality import Decomposition, canonicalize, word_is_legal
from .recurrence import Kind
from .sequence import SequenceHandle

DEFAULT_GRAMMAR_BUDGET = 10**6
DEFAULT_ORACLE_BOUND = 500
_STATE_LIMIT = 2_000_000  # memo entries across one generator, guards blowup


def grammar_budget() -> int:
    """Default enumeration budget; ZECKLAB_BUDGET overrides it."""
    raw = os.environ.get("ZECKLAB_BUDGET")
    if raw and raw.isdigit():
        return int(raw)
    return DEFAULT_GRAMMAR_BUDGET


class _WordGenerator:
    """Memoized generation of legal words of exact length and value."""

    def __init__(self, handle: SequenceHandle):
        self.handle = handle
        spec = handle.spec
        self.c = spec.coefficients
        self.s = spec.depth
        self.L = spec.order
        self.plrs = spec.kind is Kind.PLRR
        self.memo: dict[tuple[int, int], frozenset] = {}

    def words(self, m: int, value: int) -> frozenset:
        """All legal words of length m whose value is exactly ``value``."""
        if value < 0:
            return frozenset()
        key = (m, value)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if len(self.memo) > _STATE_LIMIT:
            raise BudgetExceededError("grammar enumeration state limit reached")
        h, c, s, L = self.handle, self.c, self.s, self.L
        out: set[tuple[int, ...]] = set()
        if m == 0:
            if value == 0:
                out.add(())
            res = frozenset(out)
            self.memo[key] = res
            return res
        if not self.plrs and h.term(m) == value:
            out.add((1,) + (0,) * (m - 1))
        if (self.plrs or s < m) and m < L:
            if sum(c[i] * h.term(m - i) for i in range(m)) == value:
                out.add(c[:m])
        t_lo = 1 if self.plrs else s + 1
        # leading prefix positions all carry zero coefficients, so no value
        prefix_val = sum(c[i] * h.term(m - i) for i in range(t_lo - 1) if c[i])
        for t in range(t_lo, min(L, m) + 1):
            if t > t_lo:
                prefix_val += c[t - 2] * h.term(m - t + 2)
            if prefix_val > value:
                break
            g_t = h.term(m + 1 - t)
            a_lo = 1 if (self.plrs and t == 1) else 0
            for a in range(a_lo, c[t - 1]):
                used = prefix_val + a * g_t
                if used > value:
                    break
                rest = value - used
                for gap in range(0, m - t + 1):
                    tail_len = m - t - gap
                    if rest > h.max_word_value(tail_len):
                        break  # shorter tails only get smaller
                    for tail in self.words(tail_len, rest):
                        out.add(c[: t - 1] + (a,) + (0,) * gap + tail)
        res = frozenset(out)
        self.memo[key] = res
        return res


def _generator(handle: SequenceHandle) -> _WordGenerator:
    gen = getattr(handle, "_word_generator", None)
    if gen is None:
        gen = _WordGenerator(handle)
        handle._word_generator = gen
    return gen


def enumerate_legal(
    handle: SequenceHandle, n_value: int, budget: int | None = None
) -> set[Decomposition]:
    """Every legal decomposition of ``n_value``, canonicalized and deduplicated."""
    if n_value < 0:
        raise ValueError("value must be >= 0")
    limit = budget if budget is not None else grammar_budget()
    if n_value > limit:
        raise BudgetExceededError(f"value {n_value} exceeds enumeration budget {limit}")
    if n_value == 0:
        return {Decomposition()}
    m = handle.top_index(n_value)
    gen = _generator(handle)
    return {canonicalize(word, m) for word in gen.words(m, n_value)}


def count_legal(handle: SequenceHandle, n_value: int, budget: int | None = None) -> int:
    return len(enumerate_legal(handle, n_value, budget))


def naive_oracle(
    handle: SequenceHandle, n_value: int, bound: int | None = None
) -> set[Decomposition]:
    """Brute force every bounded sparse map of the right value, filter by
    the legality verdict.  Small inputs only.

    All candidates share the value, hence the window alignment; the verdict
    reduces to parsing each candidate's dense word at that one alignment.
    """
    limit = bound if bound is not None else DEFAULT_ORACLE_BOUND
    if n_value > limit:
        raise OracleBoundExceededError(f"value {n_value} exceeds oracle bound {limit}")
    if n_value < 0:
        raise ValueError("value must be >= 0")
    if n_value == 0:
        return {Decomposition()}
    top = handle.top_index(n_value)
    spec = handle.spec
    # coefficients of legal words never exceed max(c, 1)
    cap = max(spec.max_coefficient, 1)
    terms = [handle.term(i) for i in range(1, top + 1)]
    max_below = [cap * handle.term_sum(i) for i in range(top + 1)]
    out: set[Decomposition] = set()
    word = [0] * top

    def descend(idx: int, rest: int) -> None:
        if rest == 0:
            for pos in range(top - idx, top):
                word[pos] = 0
            if word_is_legal(word, spec):
                out.add(canonicalize(word, top))
            return
        if idx == 0 or rest > max_below[idx]:
            return
        g = terms[idx - 1]
        for mult in range(min(cap, rest // g), -1, -1):
            word[top - idx] = mult
            descend(idx - 1, rest - mult * g)
        word[top - idx] = 0

    descend(top, n_value)
    return out


def decompositions_up_to(
    handle: SequenceHandle, bound: int, budget: int | None = None
) -> dict[int, list[Decomposition]]:
    """All legal decompositions for every value 1..bound, in one grammar sweep.

    Words are generated per length with a running value cap; a word counts
    only at its value's window alignment, which keeps each decomposition
    exactly once.
    """
    if bound < 1:
        return {}
    limit = budget if budget is not None else grammar_budget()
    if bound > limit:
        raise BudgetExceededError(f"bound {bound} exceeds enumeration budget {limit}")
    top = handle.top_index(bound)
    spec = handle.spec
    c, s, L = spec.coefficients, spec.depth, spec.order
    plrs = spec.kind is Kind.PLRR
    by_len: list[set[tuple[tuple[int, ...], int]]] = [set([((), 0)])]
    for m in range(1, top + 1):
        out: set[tuple[tuple[int, ...], int]] = set()
        g_m = handle.term(m)
        if not plrs and g_m <= bound:
            out.add(((1,) + (0,) * (m - 1), g_m))
        if (plrs or s < m) and m < L:
            val = sum(c[i] * handle.term(m - i) for i in range(m))
            if val <= bound:
                out.add((c[:m], val))
        t_lo = 1 if plrs else s + 1
        prefix_val = sum(c[i] * handle.term(m - i) for i in range(t_lo - 1) if c[i])
        for t in range(t_lo, min(L, m) + 1):
            if t > t_lo:
                prefix_val += c[t - 2] * handle.term(m - t + 2)
            if prefix_val > bound:
                break
            g_t = handle.term(m + 1 - t)
            a_lo = 1 if (plrs and t == 1) else 0
            for a in range(a_lo, c[t - 1]):
                used = prefix_val + a * g_t
                if used > bound:
                    break
                head = c[: t - 1] + (a,)
                for gap in range(0, m - t + 1):
                    pad = head + (0,) * gap
                    for tail, tv in by_len[m - t - gap]:
                        if used + tv <= bound:
                            out.add((pad + tail, used + tv))
        by_len.append(out)
    buckets: dict[int, list[Decomposition]] = {}
    for m in range(1, top + 1):
        for word, val in by_len[m]:
            if val >= 1 and handle.top_index(val) == m:
                buckets.setdefault(val, []).append(canonicalize(word, m))
    return buckets


def first_nonunique(
    handle: SequenceHandle, bound: int, budget: int | None = None
) -> tuple[int, int] | None:
    """Smallest 1 <= N <= bound with at least two legal decompositions."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    probe = min(bound, 256)
    while True:
        buckets = decompositions_up_to(handle, probe, budget)
        for value in sorted(buckets):
            if len(buckets[value]) >= 2:
                return value, len(buckets[value])
        if probe >= bound:
            return None
        probe = min(bound, probe * 4)


def bijection_count(handle: SequenceHandle, n: int) -> tuple[int, int]:
    """(number of legal decompositions whose top summand index is exactly n,
    G_{n+1} - G_n).  Depth-0 families only; the two numbers should agree.

    The count walks the grammar: a word either is the full short prefix, or
    opens with a block at its first drop position followed by zeros and a
    legal tail.  For depth-0 families that derivation is unique per word, so
    plain addition counts words exactly.
    """
    if handle.spec.kind is not Kind.PLRR:
        raise NotPLRSError("alignment census requires a depth-0 recurrence")
    if n < 1:
        raise ValueError("alignment must be >= 1")
    c, L = handle.spec.coefficients, handle.spec.order
    counts = [1]  # counts[k]: legal words of length k with positive lead
    for k in range(1, n + 1):
        total = 1 if k < L else 0
        for t in range(1, min(L, k) + 1):
            choices = c[t - 1] - 1 if t == 1 else c[t - 1]
            if choices:
                # suffix after the block: all zeros, or zeros then a word
                total += choices * (1 + sum(counts[1 : k - t + 1]))
        counts.append(total)
    return counts[n], handle.term(n + 1) - handle.term(n)
