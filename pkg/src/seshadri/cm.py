"""Seshadri constants on the two self-products with extra automorphisms.

Elliptic curves on these surfaces are images of maps x -> (s1(x), s2(x))
with s1 = a + b*i, s2 = c + d*i (order Z[i]) resp. s1 = a + b*z, s2 = c + d*z
with z = e^(i pi/3) (order Z[z]).  The degree of such a curve against a line
bundle is an explicit quartic expression in (a, b, c, d) divided by the gcd
invariant D; the Seshadri constant is the minimum of the undivided expression
over a box whose radius comes from a closed-form bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import kernels
from .lattice import NSClass, Surface, require_ample

Tuple4 = tuple[int, int, int, int]

_KIND = {
    Surface.CM_GAUSSIAN: kernels.GAUSSIAN,
    Surface.CM_EISENSTEIN: kernels.EISENSTEIN,
}

#: Basis curves in tuple form: F1 = image of x -> (0, x), F2 of x -> (x, 0),
#: Delta of x -> (x, x), Sigma of x -> (x, i(x)).
GENERATOR_TUPLES: dict[str, Tuple4] = {
    "F1": (0, 0, 1, 0),
    "F2": (1, 0, 0, 0),
    "Delta": (1, 0, 1, 0),
    "Sigma": (1, 0, 0, 1),
}


def _require_cm(surface: Surface) -> None:
    if not surface.is_cm:
        raise ValueError("surface mismatch: expected a CM surface")


def invariants(t: Tuple4, kind: Surface) -> Tuple4:
    """The four norm-form combinations whose gcd is the invariant D."""
    _require_cm(kind)
    a, b, c, d = t
    if kind is Surface.CM_GAUSSIAN:
        return (
            a * a + b * b,
            c * c + d * d,
            a * c + b * d,
            a * d - b * c,
        )
    return (
        a * a + a * b + b * b,
        c * c + c * d + d * d,
        a * c + b * c + b * d,
        a * d - b * c,
    )


def tuple_gcd(t: Tuple4, kind: Surface) -> int:
    """gcd of the four invariants; zeros among them are ignored."""
    if not any(t):
        raise ValueError("tuple must be nonzero")
    return gcd(*invariants(t, kind))


def _require_primitive(t: Tuple4) -> None:
    if gcd(*t) != 1:
        raise ValueError("tuple not primitive")


def degree_vector(t: Tuple4, kind: Surface) -> Tuple4:
    """Intersection numbers of the curve named by `t` with F1, F2, Delta, Sigma."""
    _require_cm(kind)
    _require_primitive(t)
    a, b, c, d = t
    dd = tuple_gcd(t, kind)
    if kind is Surface.CM_GAUSSIAN:
        raw = (
            a * a + b * b,
            c * c + d * d,
            (a - c) ** 2 + (b - d) ** 2,
            (a - d) ** 2 + (b + c) ** 2,
        )
    else:
        u, v = -a - b + d, b + c
        raw = (
            a * a + a * b + b * b,
            c * c + c * d + d * d,
            (a - c) ** 2 + (a - c) * (b - d) + (b - d) ** 2,
            u * u + u * v + v * v,
        )
    assert all(x % dd == 0 for x in raw)
    return tuple(x // dd for x in raw)


def degree_form(L: NSClass) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix of the quartic degree expression: Q(t) = D * (L . N_t)."""
    _require_cm(L.surface)
    a1, a2, a3, a4 = L.coeffs
    A, C = a1 + a3 + a4, a2 + a3 + a4
    if L.surface is Surface.CM_GAUSSIAN:
        rows = (
            (A, 0, -a3, -a4),
            (0, A, a4, -a3),
            (-a3, a4, C, 0),
            (-a4, -a3, 0, C),
        )
        return tuple(tuple(Fraction(v) for v in row) for row in rows)
    h = Fraction(1, 2)
    return (
        (Fraction(A), A * h, (-2 * a3 - a4) * h, (-a3 - 2 * a4) * h),
        (A * h, Fraction(A), (-a3 + a4) * h, (-2 * a3 - a4) * h),
        ((-2 * a3 - a4) * h, (-a3 + a4) * h, Fraction(C), C * h),
        ((-a3 - 2 * a4) * h, (-2 * a3 - a4) * h, C * h, Fraction(C)),
    )


def search_bound(L: NSClass) -> Fraction:
    """Box radius inside which the degree expression attains its minimum."""
    require_ample(L)
    _require_cm(L.surface)
    a1, a2, a3, a4 = L.coeffs
    if L.surface is Surface.CM_GAUSSIAN:
        num = 8 * max(
            (a1 + a3 + a4) ** 2, a3 * a3, a4 * a4, (a2 + a3 + a4) ** 2
        )
        den = a1 * a2 + a1 * a3 + a1 * a4 + a2 * a3 + a2 * a4 + 2 * a3 * a4
    else:
        num = 8 * max(
            (2 * a1 + 2 * a3 + 2 * a4) ** 2,
            (2 * a3 + a4) ** 2,
            (a3 + 2 * a4) ** 2,
            (a3 - a4) ** 2,
            (2 * a2 + 2 * a3 + 2 * a4) ** 2,
        )
        den = 3 * (a1 * a2 + a1 * a3 + a1 * a4 + a2 * a3 + a2 * a4 + a3 * a4)
    return Fraction(num, den)


def degree_value(L: NSClass, t: Tuple4) -> int:
    """The quartic degree expression (undivided by D) at an integer tuple."""
    return _value(_KIND[L.surface], *L.coeffs, t)


def _value(kind: int, a1: int, a2: int, a3: int, a4: int, t: Tuple4) -> int:
    from ._kernels_py import _value as impl

    return impl(kind, a1, a2, a3, a4, *t)


def unit_orbit(t: Tuple4, kind: Surface) -> tuple[Tuple4, ...]:
    """Tuples naming the same curve via unit multiples of the parametrisation."""
    _require_cm(kind)
    a, b, c, d = t
    if kind is Surface.CM_GAUSSIAN:
        return (
            (a, b, c, d),
            (-b, a, -d, c),
            (-a, -b, -c, -d),
            (b, -a, d, -c),
        )
    orbit = [t]
    for _ in range(5):
        a, b, c, d = orbit[-1]
        orbit.append((-b, a + b, -d, c + d))
    return tuple(orbit)


def canonical_tuple(t: Tuple4, kind: Surface) -> Tuple4:
    return min(unit_orbit(t, kind))


@dataclass(frozen=True)
class CMWitness:
    degrees: Tuple4
    representative: Tuple4


@dataclass(frozen=True)
class CMSeshadriResult:
    value: int
    witnesses: tuple[CMWitness, ...]


def seshadri_constant(
    L: NSClass,
    prune: bool = True,
    backend: str | None = None,
    workers: int | None = None,
) -> CMSeshadriResult:
    """Minimum curve degree over the bounded box, with all computing curves.

    The scan covers a in [0, B], b, c, d in [-B, B] with B the floor of
    `search_bound`; negating a tuple names the same curve, so the half-box
    sees every curve class.  Witnesses are deduplicated by degree vector and
    carry the lexicographically smallest unit-orbit representative.
    """
    require_ample(L)
    _require_cm(L.surface)
    kind = _KIND[L.surface]
    bound = search_bound(L)
    radius = bound.numerator // bound.denominator

    warm = [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0),
            (1, 0, 1, 0), (1, 0, 0, 1)]
    a1, a2, a3, a4 = L.coeffs
    best0 = min(_value(kind, a1, a2, a3, a4, t) for t in warm)

    best, mins = kernels.minimize_quartic(
        kind, L.coeffs, radius, best0, prune=prune, backend=backend, workers=workers
    )
    assert best > 0 and mins, "ample classes have a positive minimum in the box"

    by_degrees: dict[Tuple4, Tuple4] = {}
    for t in mins:
        assert gcd(*t) == 1, "a minimizer is always primitive"
        rep = canonical_tuple(reduce_tuple(t, L.surface), L.surface)
        vec = degree_vector(rep, L.surface)
        cur = by_degrees.get(vec)
        if cur is None or rep < cur:
            by_degrees[vec] = rep
    witnesses = tuple(
        CMWitness(vec, by_degrees[vec]) for vec in sorted(by_degrees)
    )
    return CMSeshadriResult(best, witnesses)


def congruence_solution_count(t: Tuple4) -> int:
    """Solutions (m, n) mod D of the four kernel congruences, counted directly."""
    _require_primitive(t)
    a, b, c, d = t
    dd = tuple_gcd(t, Surface.CM_GAUSSIAN)
    count = 0
    for m in range(dd):
        for n in range(dd):
            if (
                (a * m - b * n) % dd == 0
                and (b * m + a * n) % dd == 0
                and (c * m - d * n) % dd == 0
                and (d * m + c * n) % dd == 0
            ):
                count += 1
    return count


def _primitive(t: Tuple4) -> Tuple4:
    g = gcd(*t)
    return tuple(v // g for v in t) if g > 1 else t


def _gaussian_step(t: Tuple4, dd: int) -> Tuple4 | None:
    a, b, c, d = t
    for y in range(dd):
        if (
            (a + b * y) % dd == 0
            and (b - a * y) % dd == 0
            and (c + d * y) % dd == 0
            and (d - c * y) % dd == 0
        ):
            if y > dd // 2:
                y -= dd  # smaller lift, faster descent
            return (
                (a + y * b) // dd,
                (b - y * a) // dd,
                (c + y * d) // dd,
                (d - y * c) // dd,
            )
    return None


def _eisenstein_step(t: Tuple4, dd: int) -> Tuple4 | None:
    a, b, c, d = t
    for y in range(dd):
        if (
            (a - b * y) % dd == 0
            and (b + (a + b) * y) % dd == 0
            and (c - d * y) % dd == 0
            and (d + (c + d) * y) % dd == 0
        ):
            alt = y - dd
            if 1 + alt + alt * alt < 1 + y + y * y:
                y = alt
            return (
                (a - y * b) // dd,
                (b + y * (a + b)) // dd,
                (c - y * d) // dd,
                (d + y * (c + d)) // dd,
            )
    return None


def _brute_reduce(t: Tuple4, kind: Surface) -> Tuple4:
    """Bounded search for a reduced tuple with the target invariants."""
    dd = tuple_gcd(t, kind)
    target = tuple(v // dd for v in invariants(t, kind))
    m = max(abs(v) for v in t)
    rng = range(-m, m + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    cand = (a, b, c, d)
                    if not any(cand) or gcd(*cand) != 1:
                        continue
                    if invariants(cand, kind) == target and tuple_gcd(cand, kind) == 1:
                        return cand
    raise ValueError(f"no reduced tuple found for {t}")


def reduce_tuple(t: Tuple4, kind: Surface) -> Tuple4:
    """A primitive tuple of the same curve whose gcd invariant is 1.

    Repeatedly multiplies the parametrisation by (x + y*i)/D (resp. the
    hexagonal analogue) with x = 1 and y solving the kernel congruences;
    every step strictly decreases D.  The output is verified against the
    target identities, with a bounded brute-force fallback.
    """
    _require_cm(kind)
    _require_primitive(t)
    d0 = tuple_gcd(t, kind)
    target = tuple(v // d0 for v in invariants(t, kind))
    cur = t
    while True:
        dd = tuple_gcd(cur, kind)
        if dd == 1:
            break
        step = (
            _gaussian_step(cur, dd)
            if kind is Surface.CM_GAUSSIAN
            else _eisenstein_step(cur, dd)
        )
        if step is None or tuple_gcd(_primitive(step), kind) >= dd:
            return _brute_reduce(t, kind)
        cur = _primitive(step)
    if invariants(cur, kind) != target:
        return _brute_reduce(t, kind)
    return cur
