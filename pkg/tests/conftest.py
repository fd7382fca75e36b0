import math

import pytest
from hypothesis import strategies as st

# angles safely inside (0, 2*pi): the formulas blow up toward both ends
angles_open = st.floats(min_value=1e-3, max_value=2.0 * math.pi - 1e-3,
                        allow_nan=False, allow_infinity=False)

variances = st.floats(min_value=0.0, max_value=100.0,
                      allow_nan=False, allow_infinity=False)

positive_variances = st.floats(min_value=1e-3, max_value=100.0,
                               allow_nan=False, allow_infinity=False)

abscissas = st.floats(min_value=-20.0, max_value=20.0,
                      allow_nan=False, allow_infinity=False)


@pytest.fixture
def rng():
    import random

    return random.Random(20260810)
