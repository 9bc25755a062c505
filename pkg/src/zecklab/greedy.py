"""Greedy decomposition: always terminates in a legal decomposition.

For a target N the algorithm anchors at the window top t = max{n: G_n <= N}
and walks the block positions i = depth+1 .. order over indices j = t+1-i,
taking full c_i copies while the remainder allows, otherwise taking
floor(remainder / G_j) < c_i copies and closing the block.  The remainder
then re-anchors at its own, strictly lower window.  Targets that are term
values short-circuit to a bare summand at the largest matching index.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NonProgressError
from .legality import Decomposition
from .sequence import SequenceHandle


@dataclass(frozen=True)
class BlockStep:
    """One level of the walk: either a bare summand or a block of takes."""

    kind: str  # "unit" or "block"
    anchor: int
    takes: tuple[tuple[int, int, int], ...] = ()  # (index, copies, term value)
    remainder: int = 0


@dataclass
class GreedyTrace:
    target: int
    steps: list[BlockStep] = field(default_factory=list)


def greedy_decompose(
    handle: SequenceHandle, n_value: int, trace: bool = False
) -> Decomposition | tuple[Decomposition, GreedyTrace]:
    """Decompose ``n_value`` greedily; returns (result, trace) when asked.

    Raises NonProgressError if a remainder fails to re-anchor strictly below
    the position where its block closed (never expected for valid specs).
    """
    if n_value < 0:
        raise ValueError("target must be >= 0")
    spec = handle.spec
    c, s, L = spec.coefficients, spec.depth, spec.order
    out: dict[int, int] = {}
    log = GreedyTrace(target=n_value)
    if n_value > 0:
        handle.extend_until_exceeds(n_value)
    remainder = n_value
    prev_stop: int | None = None
    while remainder > 0:
        exact = handle.index_of_value(remainder)
        if exact is not None:
            if prev_stop is not None and exact >= prev_stop:
                raise NonProgressError(
                    f"bare summand G_{exact} does not sit below stop index {prev_stop}"
                )
            assert exact not in out
            out[exact] = 1
            log.steps.append(BlockStep(kind="unit", anchor=exact, remainder=0))
            break
        anchor = handle.top_index(remainder)
        if prev_stop is not None and anchor >= prev_stop:
            raise NonProgressError(
                f"window {anchor} of remainder {remainder} did not drop below "
                f"stop index {prev_stop}"
            )
        takes: list[tuple[int, int, int]] = []
        stopped = False
        for i in range(s + 1, L + 1):
            j = anchor + 1 - i
            if j < 1:
                break
            g = handle.term(j)
            copies = min(remainder // g, c[i - 1])
            if copies:
                assert j not in out
                out[j] = copies
                remainder -= copies * g
                takes.append((j, copies, g))
            if copies < c[i - 1]:
                prev_stop = j
                stopped = True
                break
        if not stopped:
            # every position took its full cap: only possible when the walk
            # ran out of indices below the anchor, with nothing left over
            if remainder != 0:
                raise NonProgressError(
                    f"block at anchor {anchor} consumed all positions but left {remainder}"
                )
        log.steps.append(BlockStep(kind="block", anchor=anchor,
                                   takes=tuple(takes), remainder=remainder))
    result = Decomposition.from_dict(out)
    return (result, log) if trace else result
