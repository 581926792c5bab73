import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from exmat import Matrix01

settings.register_profile(
    "exmat",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exmat")


@st.composite
def matrices(draw, max_rows=6, max_cols=6, min_rows=1, min_cols=1):
    rows = draw(st.integers(min_rows, max_rows))
    cols = draw(st.integers(min_cols, max_cols))
    grid = draw(
        st.lists(
            st.lists(st.integers(0, 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return Matrix01.from_rows(grid)


@st.composite
def small_patterns(draw, max_rows=3, max_cols=3):
    return draw(matrices(max_rows=max_rows, max_cols=max_cols))


def seeded_rng(seed=0):
    return random.Random(seed)
