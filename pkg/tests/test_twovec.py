import pytest
from hypothesis import given, settings, strategies as st

from ztekit.ratmat import Mat, kron
from ztekit.twovec import (ChainMap, ComposabilityError, Homotopy, Mor, TensorCtx, TwoVec, compose_chain,
                           compose_word, decategorify_space, identity_chain, identity_mor, inverse_homotopy,
                           lift_chain_map, lift_homotopy, mor_add, mor_compose, mor_invert, swap_chain_map,
                           tensor_power, vcompose_homotopy, whisker, zero_chain, zero_homotopy)

V2 = TwoVec(Mat.from_rows([[2]]))


def test_compose_worked_example():
    f, g = Mor(V2, (1,), (3,)), Mor(V2, (7,), (5,))
    assert f.target == (7,)
    h = mor_compose(f, g)
    assert (h.src, h.arr, h.target) == ((1,), (8,), (17,))


def test_compose_rejects_mismatch():
    with pytest.raises(ComposabilityError):
        mor_compose(Mor(V2, (1,), (3,)), Mor(V2, (6,), (0,)))


def test_invert_worked_example():
    g = mor_invert(Mor(V2, (1,), (3,)))
    assert (g.src, g.arr) == ((7,), (-3,))


def spaces():
    return st.tuples(st.integers(1, 3), st.integers(0, 2)).flatmap(
        lambda s: st.lists(st.integers(-2, 2), min_size=s[0] * s[1], max_size=s[0] * s[1]).map(
            lambda xs: TwoVec(Mat.from_entries(s[0], s[1], xs))))


@given(spaces(), st.data())
def test_inverse_is_two_sided(V, data):
    src = data.draw(st.lists(st.integers(-5, 5), min_size=V.dim_obj, max_size=V.dim_obj))
    arr = data.draw(st.lists(st.integers(-5, 5), min_size=V.dim_arr, max_size=V.dim_arr))
    f = Mor(V, src, arr)
    g = mor_invert(f)
    assert mor_compose(f, g) == identity_mor(V, f.src)
    assert mor_compose(g, f) == identity_mor(V, f.target)


@given(spaces(), st.data())
def test_addition_is_functorial(V, data):
    def mor():
        s = data.draw(st.lists(st.integers(-3, 3), min_size=V.dim_obj, max_size=V.dim_obj))
        a = data.draw(st.lists(st.integers(-3, 3), min_size=V.dim_arr, max_size=V.dim_arr))
        return Mor(V, s, a)
    f, g = mor(), mor()
    f2, g2 = Mor(V, f.target, (0,) * V.dim_arr), Mor(V, g.target, (0,) * V.dim_arr)
    assert mor_add(mor_compose(f, f2), mor_compose(g, g2)) == mor_compose(mor_add(f, g), mor_add(f2, g2))


def test_tensor_power_dimensions():
    V = TwoVec(Mat.zeros(3, 2))
    ctx = tensor_power(V, 3)
    assert ctx.obj_dim == 27
    assert ctx.slot_dim == 18
    assert ctx.arr_dim == 54
    assert ctx.d_n.shape == (27, 54)


def test_d_n_acts_slotwise():
    d = Mat.from_rows([[1, 0], [2, 1]])
    V = TwoVec(d)
    ctx = TensorCtx(V, 2)
    I = Mat.identity(2)
    assert ctx.d_n.block(0, 4, 0, 4) == kron(d, I)
    assert ctx.d_n.block(0, 4, 4, 8) == kron(I, d)


def test_swap_is_an_involution_and_chain_map():
    V = TwoVec(Mat.from_rows([[1], [2]]))
    s = swap_chain_map(V, 1, 2)
    assert s.is_valid()
    assert compose_chain(s, s) == identity_chain(TensorCtx(V, 2))


def test_swaps_satisfy_braid_relation():
    V = TwoVec(Mat.from_rows([[1], [-1]]))
    a, b = swap_chain_map(V, 1, 3), swap_chain_map(V, 2, 3)
    assert compose_word(a, b, a) == compose_word(b, a, b)


def test_lift_commutes_with_composition():
    V = TwoVec(Mat.from_rows([[1], [0]]))
    s = swap_chain_map(V, 1, 2)
    lifted = lift_chain_map(compose_chain(s, s), 2, 3)
    assert lifted == compose_chain(lift_chain_map(s, 2, 3), lift_chain_map(s, 2, 3))
    assert lift_chain_map(s, 1, 3) == swap_chain_map(V, 1, 3)


def test_homotopy_conditions_and_calculus():
    d = Mat.from_rows([[1], [1]])
    V = TwoVec(d)
    ctx = TensorCtx(V, 1)
    h = Mat.from_rows([[1, 0]])
    F = identity_chain(ctx)
    G = ChainMap(ctx, ctx, Mat.identity(2) + d @ h, Mat.identity(1) + h @ d)
    assert G.is_valid()
    Y = Homotopy(F, G, h)
    assert Y.is_valid()
    assert not Homotopy(F, G, h.scale(2)).is_valid()
    back = inverse_homotopy(Y)
    assert back.is_valid()
    loop = vcompose_homotopy(Y, back)
    assert loop.h.is_zero() and loop.frm == loop.to
    assert zero_homotopy(G).is_valid()
    assert whisker(Y, pre=G, post=G).is_valid()
    for pos, n in ((2, 3), (1, 2)):
        assert lift_homotopy(Y, pos, n).h1_defect().is_zero()


def test_lifted_homotopy_arrow_condition_needs_d_zero():
    # in the truncated tensor an arrow beside a nonzero d(arrow) is dropped,
    # so the arrow condition of a lift survives only when d = 0 or h = 0
    d = Mat.from_rows([[1], [1]])
    ctx = TensorCtx(TwoVec(d), 1)
    h = Mat.from_rows([[1, 0]])
    G = ChainMap(ctx, ctx, Mat.identity(2) + d @ h, Mat.identity(1) + h @ d)
    assert not lift_homotopy(Homotopy(identity_chain(ctx), G, h), 2, 3).is_valid()

    V0 = TwoVec(Mat.zeros(2, 1))
    ctx0 = TensorCtx(V0, 1)
    Y0 = Homotopy(identity_chain(ctx0), identity_chain(ctx0), Mat.from_rows([[1, -1]]))
    assert Y0.is_valid()
    assert lift_homotopy(Y0, 2, 3).is_valid()
    assert lift_homotopy(Y0, 1, 2).is_valid()


def test_vertical_composition_needs_matching_ends():
    V = TwoVec(Mat.from_rows([[1]]))
    ctx = TensorCtx(V, 1)
    Y = zero_homotopy(identity_chain(ctx))
    Z = zero_homotopy(zero_chain(ctx, ctx))
    with pytest.raises(ComposabilityError):
        vcompose_homotopy(Y, Z)


def test_decategorify_space_is_cokernel():
    V = TwoVec(Mat.from_rows([[1], [1], [0]]))
    n, proj, sec = decategorify_space(V)
    assert n == 2
    assert (proj @ V.d).is_zero()
    assert proj @ sec == Mat.identity(2)
