from hypothesis import HealthCheck, settings, strategies as st

from exchange_univ.partitions import partitions_of

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def partitions(draw, max_size: int = 8, min_size: int = 0, max_rows: int | None = None):
    """A uniformly chosen partition of a uniformly chosen size."""
    n = draw(st.integers(min_size, max_size))
    return draw(st.sampled_from(partitions_of(n, max_rows=max_rows)))
