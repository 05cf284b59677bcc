"""Kernel dispatch: compiled extension when available, pure Python otherwise.

The compiled kernels work in C int64; `minimize_quartic` routes a call to
them only when a conservative worst-case bound on every intermediate fits,
and falls back to the arbitrary-precision Python kernels otherwise.  Results
are identical either way and independent of the slab partitioning, which is
controlled by SESHADRI_THREADS.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from . import _kernels_py

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

GAUSSIAN = _kernels_py.GAUSSIAN
EISENSTEIN = _kernels_py.EISENSTEIN

HAVE_COMPILED = _compiled is not None


def backend_name() -> str:
    return "compiled" if HAVE_COMPILED else "pure"


def worker_count() -> int:
    env = os.environ.get("SESHADRI_THREADS")
    if env:
        return max(1, int(env))
    return max(1, os.cpu_count() or 1)


def _int64_safe(coeffs: tuple[int, int, int, int], radius: int) -> bool:
    # worst intermediate is a window discriminant, < 2e5 * M^4 * R^2;
    # require a 2x margin on that before trusting the int64 kernels
    m = max(1, *(abs(c) for c in coeffs))
    return 400000 * m**4 * radius**2 < 2**63


def quartic_min_box(kind, coeffs, radius, a_lo, a_hi, best, prune=True, backend=None):
    """One slab of the box scan; see `_kernels_py.quartic_min_box`."""
    a1, a2, a3, a4 = coeffs
    if backend is None:
        backend = "compiled" if HAVE_COMPILED and _int64_safe(coeffs, radius) else "pure"
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        try:
            return _compiled.quartic_min_box(
                kind, a1, a2, a3, a4, radius, a_lo, a_hi, best, prune
            )
        except OverflowError:
            # fixed minimizer buffer exhausted (needs thousands of ties);
            # the pure kernels have no such cap
            pass
    return _kernels_py.quartic_min_box(
        kind, a1, a2, a3, a4, radius, a_lo, a_hi, best, prune
    )


def minimize_quartic(kind, coeffs, radius, best, prune=True, backend=None, workers=None):
    """Full box scan over a in [0, radius], b, c, d in [-radius, radius].

    The a-range is split into contiguous slabs, each scanned independently
    with the same starting bound, and the results merged; the outcome does
    not depend on the number of slabs.
    """
    if workers is None:
        workers = worker_count()
    workers = max(1, min(workers, radius + 1))
    bounds = [(radius + 1) * i // workers for i in range(workers + 1)]
    slabs = [(bounds[i], bounds[i + 1] - 1) for i in range(workers) if bounds[i] <= bounds[i + 1] - 1]

    def run(slab):
        lo, hi = slab
        return quartic_min_box(kind, coeffs, radius, lo, hi, best, prune, backend)

    if len(slabs) == 1:
        results = [run(slabs[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(slabs)) as pool:
            results = list(pool.map(run, slabs))

    overall = min(b for b, _ in results)
    mins = sorted({t for b, ts in results if b == overall for t in ts})
    return overall, mins
