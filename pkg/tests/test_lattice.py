import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seshadri.lattice import (
    NSClass,
    Surface,
    generator_classes,
    gram_matrix,
    intersect,
    is_ample,
    is_nef,
    ns_class,
    self_intersection,
)

coeff = st.integers(min_value=-200, max_value=200)


def classes(surface):
    return st.tuples(*[coeff] * surface.rank).map(lambda t: NSClass(surface, t))


def test_gram_matrices():
    assert gram_matrix(Surface.NO_CM) == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    g = gram_matrix(Surface.CM_GAUSSIAN)
    assert g[2][3] == g[3][2] == 2
    assert all(g[i][i] == 0 for i in range(4))
    e = gram_matrix(Surface.CM_EISENSTEIN)
    assert all(e[i][j] == (0 if i == j else 1) for i in range(4) for j in range(4))


@pytest.mark.parametrize(
    "surface,x,y,expected",
    [
        (Surface.NO_CM, (1, 0, 0), (0, 1, 0), 1),
        (Surface.CM_GAUSSIAN, (0, 0, 1, 0), (0, 0, 0, 1), 2),
        (Surface.CM_EISENSTEIN, (0, 0, 1, 0), (0, 0, 0, 1), 1),
    ],
)
def test_intersect_examples(surface, x, y, expected):
    assert intersect(ns_class(surface, x), ns_class(surface, y)) == expected


def test_surface_mismatch():
    with pytest.raises(ValueError, match="surface mismatch"):
        intersect(ns_class(Surface.NO_CM, (1, 0, 0)), ns_class(Surface.CM_GAUSSIAN, (1, 0, 0, 0)))


def test_wrong_arity():
    with pytest.raises(ValueError):
        ns_class(Surface.NO_CM, (1, 2, 3, 4))


@pytest.mark.parametrize(
    "surface,x,expected",
    [
        (Surface.NO_CM, (3, 2, -1), 2),
        (Surface.CM_GAUSSIAN, (1, 1, 1, 1), 14),
        (Surface.NO_CM, (1, 0, 0), 0),
    ],
)
def test_self_intersection_examples(surface, x, expected):
    assert self_intersection(ns_class(surface, x)) == expected


@given(classes(Surface.NO_CM))
def test_self_intersection_closed_form_nocm(x):
    a1, a2, a3 = x.coeffs
    assert self_intersection(x) == 2 * (a1 * a2 + a1 * a3 + a2 * a3)


@given(classes(Surface.CM_GAUSSIAN))
def test_self_intersection_closed_form_gaussian(x):
    a1, a2, a3, a4 = x.coeffs
    assert self_intersection(x) == 2 * (
        a1 * a2 + a1 * a3 + a1 * a4 + a2 * a3 + a2 * a4 + 2 * a3 * a4
    )


@given(classes(Surface.CM_EISENSTEIN))
def test_self_intersection_closed_form_eisenstein(x):
    a1, a2, a3, a4 = x.coeffs
    assert self_intersection(x) == 2 * (
        a1 * a2 + a1 * a3 + a1 * a4 + a2 * a3 + a2 * a4 + a3 * a4
    )


@pytest.mark.parametrize(
    "surface,x,expected",
    [
        (Surface.NO_CM, (7, 6, -3), True),
        (Surface.NO_CM, (1, 0, 0), False),
        (Surface.CM_GAUSSIAN, (-1, 2, 1, 2), True),
    ],
)
def test_is_ample_examples(surface, x, expected):
    assert is_ample(ns_class(surface, x)) is expected


@pytest.mark.parametrize(
    "x,expected",
    [((1, 0, 0), True), ((1, 1, -2), False), ((1, 1, 0), True)],
)
def test_is_nef_examples(x, expected):
    assert is_nef(ns_class(Surface.NO_CM, x)) is expected


@given(st.sampled_from(list(Surface)), st.data())
def test_symmetry_and_evenness(surface, data):
    x = data.draw(classes(surface))
    y = data.draw(classes(surface))
    assert intersect(x, y) == intersect(y, x)
    assert self_intersection(x) % 2 == 0


@given(st.sampled_from(list(Surface)), st.data())
@settings(max_examples=60)
def test_bilinearity(surface, data):
    x = data.draw(classes(surface))
    y = data.draw(classes(surface))
    z = data.draw(classes(surface))
    k = data.draw(st.integers(min_value=-5, max_value=5))
    assert intersect(x + y, z) == intersect(x, z) + intersect(y, z)
    assert intersect(k * x, z) == k * intersect(x, z)


@given(st.sampled_from(list(Surface)), st.data())
def test_ample_implies_nef_and_positive_square(surface, data):
    x = data.draw(classes(surface))
    if is_ample(x):
        assert is_nef(x)
        assert self_intersection(x) >= 2


@given(classes(Surface.NO_CM), st.permutations([0, 1, 2]))
def test_ampleness_permutation_invariant(x, perm):
    permuted = ns_class(Surface.NO_CM, tuple(x.coeffs[i] for i in perm))
    assert is_ample(x) == is_ample(permuted)


def test_generators_are_nef_not_ample():
    for surface in Surface:
        for g in generator_classes(surface):
            assert is_nef(g) and not is_ample(g)
            assert self_intersection(g) == 0
