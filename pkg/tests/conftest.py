import math
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import reject
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from psl2rep.errors import AmbiguousClass  # noqa: E402
from psl2rep.lift import Mat2, rot  # noqa: E402


def kan(theta: float, log_lam: float, x: float) -> Mat2:
    """Iwasawa-style product k(theta) a(lam) n(x), an independent way to hit all of PSL(2,R)."""
    k = Mat2.rotation(theta)
    lam = math.exp(log_lam)
    return k @ Mat2(lam, 0.0, 0.0, 1.0 / lam) @ Mat2(1.0, x, 0.0, 1.0)


matrices = st.builds(
    kan,
    st.floats(0.0, 2 * math.pi),
    st.floats(-1.2, 1.2),
    st.floats(-2.0, 2.0),
)


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(20240611))


def rot_or_reject(g):
    """rot, discarding hypothesis examples whose matrix sits in the ambiguous parabolic band."""
    try:
        return rot(g)
    except AmbiguousClass:
        reject()
