# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; int64 mirror of `_kernels_py`.

Callers must guarantee that every intermediate fits in int64 (the dispatcher
in `kernels` checks a conservative bound before routing here).  The scan
loops release the GIL so slabs can run on real threads.
"""

from libc.math cimport sqrt
from libc.stdlib cimport free, malloc


GAUSSIAN = 0
EISENSTEIN = 1

cdef Py_ssize_t MIN_CAP = 16384


cdef long long _isqrt(long long n) noexcept nogil:
    cdef long long r
    if n <= 0:
        return 0
    r = <long long> sqrt(<double> n)
    while r > 0 and r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef long long _floordiv(long long a, long long b) noexcept nogil:
    # b > 0; round toward -inf like Python's //
    cdef long long q = a / b
    if a % b != 0 and (a < 0) != (b < 0):
        q -= 1
    return q


cdef void _quad_window(long long alpha, long long beta, long long gamma,
                       long long* lo, long long* hi) noexcept nogil:
    cdef long long disc = beta * beta - 4 * alpha * gamma
    cdef long long s, h, l
    if disc < 0:
        lo[0] = 1
        hi[0] = 0
        return
    s = _isqrt(disc)
    h = _floordiv(-beta + s, 2 * alpha)
    if (alpha * (h + 1) + beta) * (h + 1) + gamma <= 0:
        h += 1
    l = -_floordiv(beta + s, 2 * alpha)
    if (alpha * (l - 1) + beta) * (l - 1) + gamma <= 0:
        l -= 1
    lo[0] = l
    hi[0] = h


cdef void _lin_window(long long e, long long f, long long bound,
                      long long* lo, long long* hi) noexcept nogil:
    cdef long long s
    if bound < 0:
        lo[0] = 1
        hi[0] = 0
        return
    s = _isqrt(bound)
    lo[0] = -_floordiv(f + s, e)
    hi[0] = _floordiv(s - f, e)


cdef inline long long _gauss_value(long long a1, long long a2, long long a3,
                                   long long a4, long long a, long long b,
                                   long long c, long long d) noexcept nogil:
    return (a1 * (a * a + b * b)
            + a2 * (c * c + d * d)
            + a3 * ((a - c) * (a - c) + (b - d) * (b - d))
            + a4 * ((a - d) * (a - d) + (b + c) * (b + c)))


cdef inline long long _eis_value(long long a1, long long a2, long long a3,
                                 long long a4, long long a, long long b,
                                 long long c, long long d) noexcept nogil:
    cdef long long u = -a - b + d
    cdef long long v = b + c
    return (a1 * (a * a + a * b + b * b)
            + a2 * (c * c + c * d + d * d)
            + a3 * ((a - c) * (a - c) + (a - c) * (b - d) + (b - d) * (b - d))
            + a4 * (u * u + u * v + v * v))


cdef long long _max2(long long x, long long y) noexcept nogil:
    return x if x > y else y


cdef long long _min2(long long x, long long y) noexcept nogil:
    return x if x < y else y


def quartic_min_box(int kind, long long a1, long long a2, long long a3,
                    long long a4, long long radius, long long a_lo,
                    long long a_hi, long long best, bint prune):
    """Mirror of `_kernels_py.quartic_min_box` (identical semantics)."""
    cdef long long* buf = <long long*> malloc(4 * MIN_CAP * sizeof(long long))
    cdef Py_ssize_t count = 0
    if buf == NULL:
        raise MemoryError()
    cdef bint overflow = False
    cdef long long A = a1 + a3 + a4
    cdef long long C = a2 + a3 + a4
    cdef long long delta, a, b, c, d, q, u, v, K, S, rest, f
    cdef long long blo, bhi, clo, chi, dlo, dhi
    cdef long long U, V

    with nogil:
        if not prune:
            for a in range(a_lo, a_hi + 1):
                for b in range(-radius, radius + 1):
                    for c in range(-radius, radius + 1):
                        for d in range(-radius, radius + 1):
                            if a == 0 and b == 0 and c == 0 and d == 0:
                                continue
                            if kind == 0:
                                q = _gauss_value(a1, a2, a3, a4, a, b, c, d)
                            else:
                                q = _eis_value(a1, a2, a3, a4, a, b, c, d)
                            if q < best:
                                best = q
                                count = 0
                                overflow = False
                            if q == best:
                                if count >= MIN_CAP:
                                    overflow = True
                                else:
                                    buf[4 * count] = a; buf[4 * count + 1] = b
                                    buf[4 * count + 2] = c; buf[4 * count + 3] = d
                                    count += 1
        elif kind == 0:
            delta = A * C - a3 * a3 - a4 * a4
            for a in range(a_lo, a_hi + 1):
                if delta * a * a > C * best:
                    break
                _quad_window(delta, 0, delta * a * a - C * best, &blo, &bhi)
                for b in range(_max2(blo, -radius), _min2(bhi, radius) + 1):
                    u = -a3 * a + a4 * b
                    v = -a4 * a - a3 * b
                    K = A * (a * a + b * b)
                    _quad_window(C * C, 2 * C * u, C * (K - best) - v * v,
                                 &clo, &chi)
                    for c in range(_max2(clo, -radius), _min2(chi, radius) + 1):
                        S = C * (best - K - C * c * c - 2 * u * c) + v * v
                        _lin_window(C, v, S, &dlo, &dhi)
                        for d in range(_max2(dlo, -radius), _min2(dhi, radius) + 1):
                            if a == 0 and b == 0 and c == 0 and d == 0:
                                continue
                            q = K + C * (c * c + d * d) + 2 * (u * c + v * d)
                            if q < best:
                                best = q
                                count = 0
                                overflow = False
                            if q == best:
                                if count >= MIN_CAP:
                                    overflow = True
                                else:
                                    buf[4 * count] = a; buf[4 * count + 1] = b
                                    buf[4 * count + 2] = c; buf[4 * count + 3] = d
                                    count += 1
        else:
            delta = A * C - (a3 * a3 + a3 * a4 + a4 * a4)
            for a in range(a_lo, a_hi + 1):
                if 3 * delta * a * a > 4 * C * best:
                    break
                _quad_window(delta, delta * a, delta * a * a - C * best,
                             &blo, &bhi)
                for b in range(_max2(blo, -radius), _min2(bhi, radius) + 1):
                    U = -(2 * a3 + a4) * a + (a4 - a3) * b
                    V = -(a3 + 2 * a4) * a - (2 * a3 + a4) * b
                    K = A * (a * a + a * b + b * b)
                    _quad_window(3 * C * C, 2 * C * (2 * U - V),
                                 4 * C * (K - best) - V * V, &clo, &chi)
                    for c in range(_max2(clo, -radius), _min2(chi, radius) + 1):
                        rest = C * c * c + U * c + K
                        f = C * c + V
                        S = f * f + 4 * C * (best - rest)
                        _lin_window(2 * C, f, S, &dlo, &dhi)
                        for d in range(_max2(dlo, -radius), _min2(dhi, radius) + 1):
                            if a == 0 and b == 0 and c == 0 and d == 0:
                                continue
                            q = K + C * (c * c + c * d + d * d) + U * c + V * d
                            if q < best:
                                best = q
                                count = 0
                                overflow = False
                            if q == best:
                                if count >= MIN_CAP:
                                    overflow = True
                                else:
                                    buf[4 * count] = a; buf[4 * count + 1] = b
                                    buf[4 * count + 2] = c; buf[4 * count + 3] = d
                                    count += 1

    if overflow:
        free(buf)
        raise OverflowError("minimizer buffer exhausted")
    mins = [
        (buf[4 * i], buf[4 * i + 1], buf[4 * i + 2], buf[4 * i + 3])
        for i in range(count)
    ]
    free(buf)
    return best, mins
