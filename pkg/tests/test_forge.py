import itertools
import random

import pytest

from ztekit import forge
from ztekit.forge import (SamplingError, load_fixture, sample, sample_central_leibniz, sample_linear_2rack,
                          solve_affine, solve_l3, solve_r)
from ztekit.leibniz2 import Leibniz2Algebra, check_central, check_leibniz2
from ztekit.rack2 import Linear2Rack, check_linear_2rack, is_group_like
from ztekit.ratmat import Mat, kron


def test_sampling_is_deterministic():
    a, b = sample_central_leibniz(17, 3, 2), sample_central_leibniz(17, 3, 2)
    assert a.L.bracket.m_uu == b.L.bracket.m_uu and a.L.l3 == b.L.l3 and a.e == b.e
    c = sample_central_leibniz(18, 3, 2)
    assert (c.L.bracket.m_uu, c.L.l3) != (a.L.bracket.m_uu, a.L.l3)
    r1, r2 = sample_linear_2rack(4, 2, 1)[0], sample_linear_2rack(4, 2, 1)[0]
    assert r1.r == r2.r and r1.delta.d0 == r2.delta.d0


@pytest.mark.parametrize("split", [None, "vector", "leibniz"])
@pytest.mark.parametrize("dims", [(2, 1), (3, 2)])
def test_samples_pass_their_checkers(split, dims):
    for seed in range(3):
        s = sample_central_leibniz(seed, *dims, split=split)
        assert check_leibniz2(s.L).passed and check_central(s.L, s.e)
        if split:
            assert s.phi @ Mat.column(s.e) == Mat.identity(1)
            assert (s.phi @ s.sigma0).is_zero()


def test_leibniz_split_kills_the_central_object():
    for seed in range(4):
        s = sample_central_leibniz(seed, 3, 1, split="leibniz")
        ev, I = Mat.column(s.e), Mat.identity(3)
        for slot in (kron(ev, I, I), kron(I, ev, I), kron(I, I, ev)):
            assert (s.L.l3 @ slot).is_zero()


def test_jacobiator_space_members_all_pass():
    s = sample_central_leibniz(1, 3, 2)
    space = solve_l3(s.L.space, s.L.bracket)
    rng = random.Random(0)
    for _ in range(4):
        l3 = space.member([rng.randint(-3, 3) for _ in space.kernel])
        assert check_leibniz2(Leibniz2Algebra(s.L.space, s.L.bracket, l3)).passed


def test_distributor_space_members_all_pass():
    R, _ = sample_linear_2rack(1, 3, 1)
    space = solve_r(R.space, R.delta, R.eps, R.lhd, R.lhd_inv)
    rng = random.Random(1)
    for _ in range(3):
        r = space.member([rng.randint(-2, 2) for _ in space.kernel])
        assert check_linear_2rack(Linear2Rack(R.space, R.delta, R.eps, R.lhd, R.lhd_inv, r)).passed


@pytest.mark.parametrize("which", ["l3", "r"])
def test_assembled_coefficients_agree_with_probing(which):
    if which == "l3":
        s = sample_central_leibniz(5, 3, 1)
        system = forge.l3_residual(s.L.space, s.L.bracket)
    else:
        R, _ = sample_linear_2rack(1, 2, 1)
        system = forge.r_residual(R.space, R.delta, R.eps, R.lhd, R.lhd_inv)
    rows, cols = system.rows, system.cols
    direct = solve_affine(system, rows, cols)
    probed = solve_affine(lambda x: system(x), rows, cols)
    assert direct.particular == probed.particular
    assert direct.kernel == probed.kernel


def test_normalized_distributor_kills_the_unit():
    I = Mat.identity(2)
    for seed in range(4):
        R, _ = sample_linear_2rack(seed, 2, 1, normalized=True)
        assert check_linear_2rack(R).passed
        grid = itertools.product(range(-6, 7), repeat=2)
        units = [v for v in grid if any(v) and R.eps @ Mat.column(v) == Mat.identity(1) and is_group_like(R, v)]
        assert len(units) == 1
        g = Mat.column(units[0])
        for slot in (kron(g, I, I), kron(I, g, I), kron(I, I, g)):
            assert (R.r @ slot).is_zero()


def test_sample_front_end():
    assert check_leibniz2(sample(0, (2, 1)).L).passed
    assert check_linear_2rack(sample(0, (2, 1), kind="rack2")).passed
    with pytest.raises(ValueError):
        sample(0, (2, 1), kind="other")
    with pytest.raises(SamplingError):
        sample_central_leibniz(0, 0, 1)


@pytest.mark.parametrize("name", sorted(forge.FIXTURES))
def test_fixtures_load(name):
    assert load_fixture(name) is not None


def test_fixture_e_has_nonzero_l3():
    L, e = load_fixture("FIX-E")
    assert not L.l3.is_zero() and L.space.d.is_zero()
