import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

S32 = math.sqrt(3.0) / 2.0
SQRT2 = math.sqrt(2.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)


def random_domain_points(rng, n, y_max=6.0):
    """Random points in the closure of the fundamental domain."""
    pts = []
    while len(pts) < n:
        x = rng.uniform(0.0, 0.5)
        y = rng.uniform(S32, y_max)
        if x * x + y * y >= 1.0:
            pts.append((x, y))
    return pts
