"""Exact sequence generation for a validated recurrence.

Terms are 1-indexed arbitrary-precision integers.  The first ``order`` terms
come from the initial-condition rules (plus the special 1,2,4,3 prefix for
the Lagonacci family); later terms follow the recurrence exactly.

The term cache is append-only: extend it up front, then share the handle
read-only across threads.
"""

from __future__ import annotations

from .errors import NonProgressError
from .recurrence import Kind, RecurrenceSpec, parse_recurrence


def _prescribed_terms(spec: RecurrenceSpec) -> list[int]:
    c, s, L = spec.coefficients, spec.depth, spec.order
    if spec.is_lagonacci:
        return [1, 2, 4, 3]
    if spec.kind is Kind.PLRR:
        # H_1 = 1, then each next term is the full lower combination plus one.
        terms = [1]
        for n in range(1, L):
            terms.append(sum(c[i] * terms[n - 1 - i] for i in range(n)) + 1)
        return terms
    terms = list(range(1, s + 2))
    for n in range(s + 2, L + 1):
        if c[s] <= s:
            terms.append(n)
        else:
            terms.append(sum(c[i - 1] * terms[n - i - 1] for i in range(s + 1, n)) + 1)
    return terms


class SequenceHandle:
    """A recurrence spec plus a memoized cache of its terms."""

    def __init__(self, spec: RecurrenceSpec):
        self.spec = spec
        self._terms: list[int] = _prescribed_terms(spec)
        self._prefix_len = len(self._terms)
        # largest index seen for each value; duplicates resolve upward
        self._index_of_value: dict[int, int] = {}
        self._duplicate_values = False
        for i, g in enumerate(self._terms, 1):
            if g in self._index_of_value:
                self._duplicate_values = True
            self._index_of_value[g] = i
        # cumulative term sums, used for enumeration value bounds
        self._cumsum = [0]
        for g in self._terms:
            self._cumsum.append(self._cumsum[-1] + g)

    @classmethod
    def from_text(cls, text: str) -> "SequenceHandle":
        return cls(parse_recurrence(text))

    @property
    def prescribed_length(self) -> int:
        return self._prefix_len

    @property
    def has_duplicate_values(self) -> bool:
        return self._duplicate_values

    def __len__(self) -> int:
        return len(self._terms)

    def _grow(self) -> None:
        c, L = self.spec.coefficients, self.spec.order
        k = len(self._terms)
        nxt = sum(c[i] * self._terms[k - 1 - i] for i in range(L) if c[i])
        self._terms.append(nxt)
        if nxt in self._index_of_value:
            self._duplicate_values = True
        self._index_of_value[nxt] = k + 1
        self._cumsum.append(self._cumsum[-1] + nxt)

    def term(self, n: int) -> int:
        """G_n, computing and caching any missing terms."""
        if n < 1:
            raise ValueError("term index must be >= 1")
        while len(self._terms) < n:
            self._grow()
        return self._terms[n - 1]

    def terms(self, count: int) -> list[int]:
        self.term(max(count, 1))
        return self._terms[:count]

    def extend_until_exceeds(self, bound: int) -> int:
        """Grow the cache until the last ``order`` terms all exceed ``bound``.

        Beyond that point every later term exceeds the bound too, since each
        term is a non-negative combination of the previous ``order`` terms
        with at least one positive coefficient.  Returns the last index.
        """
        if bound < 0:
            raise ValueError("bound must be >= 0")
        if bound >= 1 and self.spec.coefficients == (1,):
            # constant sequence 1, 1, 1, ...: the condition can never be met
            raise NonProgressError("sequence is constant; it never exceeds 1")
        L = self.spec.order
        while len(self._terms) < max(L, self._prefix_len):
            self._grow()
        while not all(g > bound for g in self._terms[-L:]):
            self._grow()
        return len(self._terms)

    def top_index(self, n_value: int) -> int:
        """Largest index t with G_t <= value; ties resolve to the later index."""
        if n_value < 1:
            raise ValueError("value must be >= 1")
        self.extend_until_exceeds(n_value)
        for i in range(len(self._terms), 0, -1):
            if self._terms[i - 1] <= n_value:
                return i
        raise AssertionError("unreachable: G_1 = 1")

    def index_of_value(self, value: int) -> int | None:
        """Largest n with G_n == value, or None when value is not a term."""
        if value < 1:
            return None
        self.extend_until_exceeds(value)
        return self._index_of_value.get(value)

    def term_sum(self, n: int) -> int:
        """G_1 + ... + G_n."""
        if n <= 0:
            return 0
        self.term(n)
        return self._cumsum[n]

    def max_word_value(self, m: int) -> int:
        """Upper bound on the value of any legal length-m coefficient word.

        Every coefficient of a legal word is at most max(c, 1): matched
        prefixes use c_i, a block position stays below its cap, and a bare
        summand uses 1.
        """
        cap = max(self.spec.max_coefficient, 1)
        return cap * self.term_sum(m)
