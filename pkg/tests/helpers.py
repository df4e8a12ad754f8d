from hypothesis import strategies as st

from sncentral import Partition


@st.composite
def partitions(draw, max_n: int = 12, min_n: int = 0) -> Partition:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parts = []
    remaining = n
    while remaining:
        top = min(remaining, parts[-1] if parts else remaining)
        p = draw(st.integers(min_value=1, max_value=top))
        parts.append(p)
        remaining -= p
    return Partition(tuple(parts))


def P(*parts: int) -> Partition:
    return Partition(parts)


# filled by test_acceptance, printed by the terminal-summary hook in conftest
ACCEPTANCE_RESULTS: list[str] = []
