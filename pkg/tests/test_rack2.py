import random

import pytest

from ztekit.forge import r_residual, sample_central_leibniz, sample_linear_2rack, solve_r
from ztekit.leibniz2 import decategorify_leibniz, trivial_central_extension
from ztekit.rack2 import (Linear2Rack, check_linear_2rack, decategorify_rack, group_like_report,
                          is_group_like, rack_from_trivial_extension, trivial_rack)
from ztekit.ratmat import Mat, coker_projection, commutation, kron
from ztekit.split import flat_rack_from_central_leibniz
from ztekit.twovec import TwoVec


def test_trivial_rack_passes():
    assert check_linear_2rack(trivial_rack(TwoVec(Mat.zeros(2, 1)))).passed
    with pytest.raises(ValueError):
        trivial_rack(TwoVec(Mat.from_rows([[1], [0]])))


@pytest.mark.parametrize("seed,dims", [(0, (1, 1)), (1, (2, 1)), (2, (2, 2)), (3, (3, 1)), (4, (3, 2))])
def test_trivial_extension_rack_passes(seed, dims):
    s = sample_central_leibniz(seed, *dims)
    R = rack_from_trivial_extension(s.L)
    rep = check_linear_2rack(R)
    assert rep.passed, rep.failed()
    assert decategorify_rack(R).check().passed


def test_trivial_extension_coproduct_formula():
    s = sample_central_leibniz(7, 2, 1)
    R = rack_from_trivial_extension(s.L)
    one = [1, 0, 0]
    for a, x1, x2 in ((2, 1, -1), (0, 3, 5), (-1, 0, 2)):
        v = Mat.column([a, x1, x2])
        expect = kron(v, Mat.column(one)) + kron(Mat.column(one), Mat.column([0, x1, x2]))
        assert R.delta.d0 @ v == expect
    assert commutation(3, 3) @ R.delta.d0 == R.delta.d0


def test_trivial_extension_decategorifies_to_flat_formula():
    s = sample_central_leibniz(9, 3, 2)
    R = rack_from_trivial_extension(s.L)
    K, e = trivial_central_extension(s.L)
    g = decategorify_leibniz(K, e)
    _, sec = coker_projection(Mat.column(g.central))
    bottom = flat_rack_from_central_leibniz(g, g.central, sec)
    top = decategorify_rack(R)
    assert (top.delta, top.eps, top.lhd, top.lhd_inv) == (bottom.delta, bottom.eps, bottom.lhd, bottom.lhd_inv)


def test_group_like_objects():
    s = sample_central_leibniz(1, 2, 1)
    R = rack_from_trivial_extension(s.L)
    assert is_group_like(R, (0, 0, 0))
    assert is_group_like(R, (1, 0, 0))
    assert not is_group_like(R, (2, 0, 0))
    assert group_like_report(R, []).passed
    assert group_like_report(R, [(1, 0, 0)]).passed
    assert not group_like_report(R, [(2, 0, 0)]).flags["group_like"]


@pytest.mark.parametrize("seed", range(4))
def test_sampled_racks_pass(seed):
    R, route = sample_linear_2rack(seed, 3, 1)
    assert route in ("extension", "splitting")
    rep = check_linear_2rack(R)
    assert rep.passed, rep.failed()


@pytest.mark.parametrize("seed,dims", [(1, (2, 1)), (2, (3, 1)), (0, (2, 1))])
def test_perturbed_distributor_flagged_iff_outside_solution_space(seed, dims):
    # the checker walks composites; the expanded linear system is a second route
    R, _ = sample_linear_2rack(seed, *dims)
    residual = r_residual(R.space, R.delta, R.eps, R.lhd, R.lhd_inv)
    rng = random.Random(seed)
    flagged = 0
    for _ in range(12):
        i, j = rng.randrange(R.r.rows), rng.randrange(R.r.cols)
        mutant = R.r + Mat.unit(R.r.rows, R.r.cols, i, j)
        rep = check_linear_2rack(Linear2Rack(R.space, R.delta, R.eps, R.lhd, R.lhd_inv, mutant))
        outside = not all(m.is_zero() for m in residual(mutant))
        assert (not rep.passed) == outside
        flagged += outside
    free = len(solve_r(R.space, R.delta, R.eps, R.lhd, R.lhd_inv).kernel) == R.r.rows * R.r.cols
    # when every distributor solves the system, nothing can be flagged
    assert (flagged == 0) == free
