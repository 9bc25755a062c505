import pytest

from zecklab import SequenceHandle


@pytest.fixture(scope="session")
def handles():
    """Shared handle cache so term tables build once per session."""
    cache = {}

    def get(text: str) -> SequenceHandle:
        if text not in cache:
            cache[text] = SequenceHandle.from_text(text)
        return cache[text]

    return get
