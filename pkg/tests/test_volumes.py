from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ultranorm import (
    ContainmentError,
    DiagonalNorm,
    PAdicQ,
    TrivialQ,
    TrivialValuationError,
    annihilator,
    content,
    det_norm,
    dGI,
    dual,
    gram_schmidt_project,
    lattice_norm,
    quotient,
    relative_volume,
    restrict,
    successive_minima,
    sup_ratio,
)
from ultranorm import _linalg as la
from ultranorm.rng import SplitMix64, random_basis, random_norm, random_weights
from ultranorm.volumes import content_via_volume

from .conftest import FIELDS, VALUED_FIELDS

Q2 = PAdicQ(2)
seeds = st.integers(0, 2**32)
I2 = [[1, 0], [0, 1]]
L12 = [[1, 0], [1, 2]]


def test_det_norm_examples():
    assert det_norm(DiagonalNorm.standard(Q2, [0, 0, 0])) == 0
    assert det_norm(DiagonalNorm.standard(Q2, [0, -1])) == -1
    # the lattice (1,0),(0,2) is the standard-basis norm with weights (0, -1)
    assert det_norm(lattice_norm(Q2, [[1, 0], [0, 2]])) == -1


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(seed=seeds, dim=st.integers(1, 5))
def test_det_of_dual(F, seed, dim):
    n = random_norm(F, dim, SplitMix64(seed))
    assert det_norm(dual(n)) == -det_norm(n)


def test_relative_volume_examples():
    n = random_norm(Q2, 3, SplitMix64(1))
    assert relative_volume(n, n) == 0
    c = Fraction(7, 4)
    assert relative_volume(n, n.shifted(-c)) == 3 * c  # n.shifted(-c) = e^c n
    assert relative_volume(lattice_norm(Q2, I2), lattice_norm(Q2, L12)) == 1


def test_successive_minima_examples():
    n = random_norm(Q2, 3, SplitMix64(2))
    assert successive_minima(n, n) == [0, 0, 0]
    assert successive_minima(lattice_norm(Q2, I2), lattice_norm(Q2, L12)) == [1, 0]


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(seed=seeds, dim=st.integers(1, 5))
def test_extreme_minima(F, seed, dim):
    rng = SplitMix64(seed)
    n1, n2 = random_norm(F, dim, rng), random_norm(F, dim, rng)
    lam = successive_minima(n1, n2)
    assert lam == sorted(lam, reverse=True)
    assert lam[0] == sup_ratio(n1, n2)
    assert lam[-1] == -sup_ratio(n2, n1)
    assert max(abs(lam[0]), abs(lam[-1])) == dGI(n1, n2)


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(seed=seeds, dim=st.integers(1, 3))
def test_min_max_principle(F, seed, dim):
    """lambda_i = max over i-dimensional U of min_{v in U} (nu1 - nu2), probed on random U."""
    rng = SplitMix64(seed)
    n1, n2 = random_norm(F, dim, rng), random_norm(F, dim, rng)
    lam = successive_minima(n1, n2)

    def inf_ratio(U):
        return -sup_ratio(restrict(n2, U), restrict(n1, U))

    for i in range(1, dim + 1):
        for _ in range(4):
            U = random_basis(F, dim, rng)[:i]
            assert inf_ratio(U) <= lam[i - 1]
    # the maximum is attained on the span of the i best joint basis vectors
    from ultranorm import codiagonalize

    c = codiagonalize(n1, n2)
    order = sorted(range(dim), key=lambda j: c.weights1[j] - c.weights2[j], reverse=True)
    for i in range(1, dim + 1):
        assert inf_ratio([c.vectors[j] for j in order[:i]]) == lam[i - 1]


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(seed=seeds, dim=st.integers(1, 6))
def test_minkowski_identity(F, seed, dim):
    rng = SplitMix64(seed)
    n1, n2 = random_norm(F, dim, rng), random_norm(F, dim, rng)
    assert relative_volume(n1, n2) == sum(successive_minima(n1, n2))


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(seed=seeds, dim=st.integers(1, 4))
def test_cocycle_and_lipschitz(F, seed, dim):
    rng = SplitMix64(seed)
    a, b, c = (random_norm(F, dim, rng) for _ in range(3))
    assert relative_volume(a, c) == relative_volume(a, b) + relative_volume(b, c)
    assert abs(relative_volume(a, b)) <= dim * dGI(a, b)


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(seed=seeds, dim=st.integers(1, 4))
def test_monotonicity(F, seed, dim):
    rng = SplitMix64(seed)
    n1, n2 = random_norm(F, dim, rng), random_norm(F, dim, rng)
    # lowering weights makes every vector longer (nu2' <= nu2)
    drop = [abs(x) for x in random_weights(dim, rng)]
    bigger = DiagonalNorm(F, n2.vectors, tuple(w - d for w, d in zip(n2.weights, drop)))
    assert relative_volume(n1, n2) <= relative_volume(n1, bigger)


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(seed=seeds, dim=st.integers(1, 4))
def test_projection_preserves_det(F, seed, dim):
    rng = SplitMix64(seed)
    n = random_norm(F, dim, rng)
    assert det_norm(gram_schmidt_project(n, random_basis(F, dim, rng))) == det_norm(n)


@pytest.mark.parametrize("F", FIELDS, ids=str)
@given(seed=seeds, dim=st.integers(2, 4))
def test_exact_sequence_additivity(F, seed, dim):
    rng = SplitMix64(seed)
    n = random_norm(F, dim, rng)
    k = rng.randint(1, dim - 1)
    S = random_basis(F, dim, rng)[:k]
    Z = annihilator(F, S)
    # lifts t_j of the quotient coordinates: Z t_j = e_j
    while True:
        A = Z + random_basis(F, dim, rng)[: dim - len(Z)]
        if la.det(A, F):
            break
    X = la.inverse(A, F)
    T = [[X[r][j] for r in range(dim)] for j in range(dim - k)]
    gen_change = F.v(la.det(la.transpose([list(map(F.coerce, s)) for s in S] + T), F))
    lhs = det_norm(restrict(n, S)) + det_norm(quotient(n, S))
    assert lhs == det_norm(n) + gen_change


def test_content_examples():
    assert content(I2, I2, Q2) == 0
    assert content(I2, L12, Q2) == 1
    assert content([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[2, 0, 0], [0, 2, 0], [0, 0, 2]], Q2) == 3
    with pytest.raises(ContainmentError):
        content(L12, I2, Q2)
    with pytest.raises(TrivialValuationError):
        content(I2, I2, TrivialQ)


@pytest.mark.parametrize("F", VALUED_FIELDS, ids=str)
@given(seed=seeds, dim=st.integers(1, 4))
def test_content_is_relative_volume(F, seed, dim):
    rng = SplitMix64(seed)
    outer = random_basis(F, dim, rng)
    mix = random_basis(F, dim, rng)
    # inner lattice: integral combinations, scaled into the outer lattice
    Gm = la.transpose(outer)
    inner = []
    for m in mix:
        shift = max(0, -min(F.v(x) for x in m if x))
        scale = F.uniformizer
        vec = [x for x in m]
        for _ in range(shift):
            vec = [x * scale for x in vec]
        inner.append(la.matvec(Gm, vec, F))
    assert content(outer, inner, F) == content_via_volume(outer, inner, F) >= 0
