from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ultranorm import (
    DiagonalNorm,
    GradedNormPair,
    LaurentQt,
    PAdicQ,
    TrivialQ,
    estimate_limit,
    jumping_values,
    scaled_volume,
    successive_minima,
)
from ultranorm.graded import jump_ks_statistic
from ultranorm.rng import SplitMix64, random_norm
from ultranorm.toric import sup_norm_weights, toric_pair
from ultranorm.toric.instances import REGISTRY, p1_breakpoint_half, random_p1, random_p2, trivial


def base_family(field, seed=0):
    def base(m):
        return random_norm(field, m + 1, SplitMix64(seed + m))
    return base


@pytest.mark.parametrize("F", [TrivialQ, PAdicQ(3), LaurentQt], ids=str)
def test_identical_families(F):
    base = base_family(F)
    pair = GradedNormPair(lambda m: (base(m), base(m)))
    for m in (1, 2, 3):
        assert scaled_volume(pair, m) == 0
        assert jumping_values(pair, m) == [0] * (m + 1)


@pytest.mark.parametrize("c", [Fraction(1, 3), Fraction(-2), Fraction(0)])
def test_shifted_family(c):
    pair = GradedNormPair.shifted(base_family(PAdicQ(2)), c)
    for m in (1, 2, 4):
        assert scaled_volume(pair, m) == c
        assert pair.check_closeness(m)


def test_jumps_at_degree_one_are_successive_minima():
    rng = SplitMix64(9)
    n1, n2 = random_norm(PAdicQ(2), 3, rng), random_norm(PAdicQ(2), 3, rng)
    pair = GradedNormPair(lambda m: (n1, n2))
    assert jumping_values(pair, 1) == successive_minima(n1, n2)


def test_degree_range():
    pair = GradedNormPair(lambda m: (None, None), m_max=3)
    with pytest.raises(ValueError):
        pair.norms(0)
    with pytest.raises(ValueError):
        pair.norms(4)


def riemann_oracle(phi, m):
    """(1/(m N_m)) sum_u m theta_hat(u/m) against the trivial metric, summed directly."""
    pts = phi.polytope.lattice_points(m)
    return sum(phi.hat(tuple(Fraction(x, m) for x in u)) for u in pts) / len(pts)


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_toric_scaled_volume_oracle(name):
    phi = REGISTRY[name]()
    pair = toric_pair(phi, trivial(phi.polytope))
    for m in (1, 2, 5, 9):
        assert scaled_volume(pair, m) == riemann_oracle(phi, m)


@given(st.integers(0, 2**32))
def test_boundedness_and_closeness(seed):
    rng = SplitMix64(seed)
    phi, psi = (random_p1(rng), random_p1(rng)) if seed % 2 else (random_p2(rng), random_p2(rng))
    pair = toric_pair(phi, psi)
    for m in (1, 3, 6):
        assert pair.check_closeness(m)
        assert abs(scaled_volume(pair, m)) <= pair.closeness


@given(st.integers(0, 2**32))
def test_sup_norms_are_submultiplicative(seed):
    rng = SplitMix64(seed)
    phi = random_p1(rng) if seed % 2 else random_p2(rng)
    m1, m2 = rng.randint(1, 10), rng.randint(1, 10)
    pts = {m: phi.polytope.lattice_points(m) for m in (m1, m2, m1 + m2)}
    w = {m: dict(zip(pts[m], sup_norm_weights(phi, m).weights)) for m in pts}
    for _ in range(10):
        u, v = rng.choice(pts[m1]), rng.choice(pts[m2])
        uv = tuple(a + b for a, b in zip(u, v))
        assert w[m1 + m2][uv] >= w[m1][u] + w[m2][v]


def test_jump_distribution_settles():
    phi = p1_breakpoint_half()
    pair = toric_pair(phi, trivial(phi.polytope))
    ks = [jump_ks_statistic(pair, m, 2 * m) for m in (2, 8, 32, 128)]
    assert all(b <= a for a, b in zip(ks, ks[1:]))
    assert ks[-1] < ks[0]


# -- extrapolation -----------------------------------------------------------------
def test_estimate_limit_examples():
    lim = estimate_limit([(1, 3), (2, 3), (5, 3)])
    assert lim.estimate == 3 and lim.error_bound == 0
    lim = estimate_limit([(m, 2 + Fraction(1, m)) for m in (10, 20, 40)])
    assert lim.estimate == pytest.approx(2, abs=1e-9)
    with pytest.raises(ValueError):
        estimate_limit([(1, 1), (2, 1)])
    with pytest.raises(ValueError):
        estimate_limit([(1, 1), (3, 1), (2, 1)])


@given(st.fractions(-10, 10, max_denominator=50), st.fractions(-10, 10, max_denominator=50),
       st.lists(st.integers(1, 500), min_size=3, max_size=8, unique=True))
def test_estimate_limit_exact_on_model(L, a, ms):
    lim = estimate_limit([(m, L + a / m) for m in sorted(ms)])
    assert lim.estimate == pytest.approx(float(L), abs=1e-12)
    assert lim.error_bound == pytest.approx(0, abs=1e-12)
