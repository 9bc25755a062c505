import pytest
from hypothesis import given, settings, strategies as st

from zecklab import (
    Decomposition,
    SequenceHandle,
    enumerate_legal,
    evaluate,
    greedy_decompose,
    is_legal,
)

FAMILIES = ["0,2,2", "0,1,1", "0,2,1,2", "0,0,1,4", "0,3,1",
            "1,1", "3,2,4", "2,2", "0,1,2", "0,0,2,3"]


@pytest.mark.parametrize(
    "text,n,expected",
    [
        ("0,2,2", 164, {8: 2, 7: 1, 5: 2}),
        ("0,1,1", 10, {6: 1, 4: 1}),
        ("0,1,1", 5, {3: 1, 1: 1}),
        ("1,1", 100, {10: 1, 5: 1, 3: 1}),
    ],
)
def test_known_decompositions(text, n, expected, handles):
    assert greedy_decompose(handles(text), n).to_dict() == expected


def test_zero_gives_empty(handles):
    for text in FAMILIES:
        assert greedy_decompose(handles(text), 0) == Decomposition()


def test_term_values_become_bare_summands(handles):
    for text in FAMILIES:
        h = handles(text)
        for n in range(1, 15):
            d = greedy_decompose(h, h.term(n))
            assert len(d.summands) == 1 and d.summands[0][1] == 1


def test_duplicate_term_value_uses_largest_index(handles):
    assert greedy_decompose(handles("0,1,1"), 3).to_dict() == {4: 1}


@pytest.mark.parametrize("text", FAMILIES)
def test_totality_and_legality_sampled(text, handles):
    h = handles(text)
    for n in range(0, 800):
        d = greedy_decompose(h, n)
        assert evaluate(d, h) == n
        assert is_legal(d, h).legal, (text, n, str(d))


def test_determinism(handles):
    h = handles("0,2,1,2")
    assert greedy_decompose(h, 4321) == greedy_decompose(h, 4321)


def test_trace_records_blocks(handles):
    h = handles("0,2,2")
    d, trace = greedy_decompose(h, 164, trace=True)
    assert d.to_dict() == {8: 2, 7: 1, 5: 2}
    assert trace.steps[0].kind == "block"
    assert trace.steps[0].anchor == 9
    assert trace.steps[0].takes == ((8, 2, 56), (7, 1, 32))
    assert trace.steps[0].remainder == 20
    assert trace.steps[1].anchor == 6
    assert trace.steps[1].remainder == 0


def test_first_block_consumes_the_most(handles):
    # no legal decomposition beats the greedy first block's consumed value
    for text in ["0,2,2", "0,1,1", "1,1"]:
        h = handles(text)
        for n in range(2, 120):
            _, trace = greedy_decompose(h, n, trace=True)
            step = trace.steps[0]
            if step.kind != "block":
                continue
            consumed = n - step.remainder
            stop = min(i for i, _, _ in step.takes) if step.takes else step.anchor
            for d in enumerate_legal(h, n):
                above = sum(
                    m * h.term(i) for i, m in d.summands if i >= stop
                )
                assert above <= consumed, (text, n, str(d))


def test_large_value_stays_exact(handles):
    h = handles("0,2,1,2")
    n = 10**40 + 12345
    d = greedy_decompose(h, n)
    assert evaluate(d, h) == n
    assert is_legal(d, h).legal


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(FAMILIES), st.integers(0, 5000))
def test_totality_property(text, n):
    h = SequenceHandle.from_text(text)
    d = greedy_decompose(h, n)
    assert evaluate(d, h) == n
    assert is_legal(d, h).legal
