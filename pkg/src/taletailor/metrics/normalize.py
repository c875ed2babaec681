"""Min-max rescaling of a feature across a batch of candidates."""

from __future__ import annotations

import math
from collections.abc import Sequence


def min_max_normalize(scores: Sequence[float]) -> list[float]:
    """Map every value to (x - min) / (max - min).

    A constant feature maps to 0.5 everywhere so that it neither rewards nor
    penalizes any candidate.  The output lies in [0, 1] and contains 0 and 1
    whenever the batch is not constant.
    """
    if len(scores) == 0:
        raise ValueError("cannot normalize an empty batch")
    if not all(math.isfinite(x) for x in scores):
        raise ValueError("scores must all be finite")
    lo = min(scores)
    hi = max(scores)
    if hi == lo:
        return [0.5] * len(scores)
    span = hi - lo
    return [(x - lo) / span for x in scores]
