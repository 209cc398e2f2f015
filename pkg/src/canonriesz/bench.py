"""Timing of the multiplier LCRT against the kernel-sum oracle path."""

from __future__ import annotations

import time

from .edge import gaussian_test_image
from .lcrt import lcrt_apply, lcrt_oracle
from .presets import PAIR_A


def _best_ms(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1e3


def time_lcrt(sizes, repeats: int = 3, pair=PAIR_A, axis: int = 1) -> list:
    """Rows ``(n, fast_ms, oracle_ms)`` on an ``n x n`` Gaussian test image."""
    rows = []
    for n in sizes:
        img = gaussian_test_image(n, n / 8)
        fast = _best_ms(lambda: lcrt_apply(img, pair, axis), repeats)
        oracle = _best_ms(lambda: lcrt_oracle(img, pair, axis), repeats)
        rows.append((int(n), fast, oracle))
    return rows
