"""Checks under the extra hypotheses that make the constructions work.

These complement the acceptance suite: each one pins down the condition
under which a failing acceptance criterion does hold.
"""

import pytest

from mutation import trials
from protocol import leibniz_instances, plan_items, rack_instances

from ztekit.forge import l3_residual, r_residual, sample_central_leibniz, sample_linear_2rack, solve_r
from ztekit.leibniz2 import check_central
from ztekit.rack2 import Linear2Rack, check_linear_2rack
from ztekit.split import make_splitting, quotient_leibniz2, rack_from_splitting
from ztekit.zte import from_central_leibniz, from_linear_2rack, verify_zte

SMALL_PLAN = {(2, 1): 6, (3, 1): 6, (3, 2): 5, (4, 2): 3}


def test_central_object_killed_by_l3_gives_solutions():
    for dims, seed in plan_items(SMALL_PLAN):
        s = sample_central_leibniz(seed, *dims, split="leibniz")
        rep = verify_zte(from_central_leibniz(s.L, s.e))
        assert rep.passed, (dims, seed, rep.failed())


def test_normalized_distributors_give_solutions():
    for dims, seed, R in rack_instances(normalized=True, plan=tuple(SMALL_PLAN.items())):
        rep = verify_zte(from_linear_2rack(R))
        assert rep.passed, (dims, seed, rep.failed())


@pytest.mark.parametrize("seed,dims", [(1, (2, 1)), (3, (3, 1)), (2, (2, 2))])
def test_constructed_distributors_give_solutions(seed, dims):
    # the distributor the construction itself produces, without a redraw
    R, route = sample_linear_2rack(seed, *dims, redraw_r=False)
    assert check_linear_2rack(R).passed
    assert verify_zte(from_linear_2rack(R)).passed


def test_split_rack_distributor_can_be_repaired():
    # l3 does not kill e here, so the distributor r = l3∘Q⊗Q⊗Q misses the hexagon
    s = sample_central_leibniz(2, 3, 1, split="vector")
    assert not quotient_leibniz2(s.L, s.e).well_defined
    R = rack_from_splitting(make_splitting(s.L, s.e, s.sigma0))
    rep = check_linear_2rack(R)
    assert rep.failed() == ["c8"]
    space = solve_r(R.space, R.delta, R.eps, R.lhd, R.lhd_inv)
    assert not space.empty
    fixed = Linear2Rack(R.space, R.delta, R.eps, R.lhd, R.lhd_inv, space.particular)
    assert check_linear_2rack(fixed).passed


def test_unflagged_mutants_are_valid_structures():
    leib = [(s.L, s.e) for _, _, s in leibniz_instances()]
    racks = [R for _, _, R in rack_instances()]
    for k, kind, e, name, M, flipped in trials(leib, racks):
        if flipped:
            continue
        if kind == "leibniz":
            assert M.bracket.report().passed and check_central(M, e)
            residual = l3_residual(M.space, M.bracket)
            assert all(r.is_zero() for r in residual(M.l3)), (k, name)
        else:
            residual = r_residual(M.space, M.delta, M.eps, M.lhd, M.lhd_inv)
            assert all(r.is_zero() for r in residual(M.r)), (k, name)
