import pytest

from ztekit.forge import fixture_e, l3_residual, sample_central_leibniz, sample_linear_2rack
from ztekit.leibniz2 import Leibniz2Algebra, leibniz_from_flat, zero_bilinear
from ztekit.rack2 import rack_from_trivial_extension, trivial_rack
from ztekit.ratmat import Mat, commutation, kron
from ztekit.twovec import (StructureError, TensorCtx, TwoVec, compose_chain, compose_word, identity_chain,
                           lift_chain_map, swap_chain_map)
from ztekit.zte import (decategorify_solution, from_central_leibniz, from_linear_2rack, side_homotopies,
                        verify_ybe, verify_zte)

X_X_IS_E = Mat.from_dict(2, 4, {(1, 0): 1})


def test_zero_bracket_gives_the_swap():
    V = TwoVec(Mat.from_rows([[1], [0]]))
    L = Leibniz2Algebra(V, zero_bilinear(V), Mat.zeros(1, 8))
    sol = from_central_leibniz(L, (1, 0))
    assert sol.B == swap_chain_map(V, 1, 2)
    assert sol.y.is_zero()
    assert verify_zte(sol).passed


def test_trivial_rack_gives_the_swap():
    V = TwoVec(Mat.zeros(2, 1))
    sol = from_linear_2rack(trivial_rack(V))
    assert sol.B == swap_chain_map(V, 1, 2)
    assert verify_zte(sol).passed


def test_braiding_on_basis_tensors():
    # basis (x, e) with [x, x] = e; B(a⊗b) = b⊗a + e⊗[a, b]
    sol = from_central_leibniz(leibniz_from_flat(X_X_IS_E), (0, 1))
    x, e = Mat.column([1, 0]), Mat.column([0, 1])
    B = sol.B.f0
    assert B @ kron(x, x) == kron(x, x) + kron(e, e)
    assert B @ kron(x, e) == kron(e, x)
    assert B @ kron(e, x) == kron(x, e)
    assert verify_zte(sol).passed


def test_non_central_object_is_rejected():
    with pytest.raises(StructureError):
        from_central_leibniz(leibniz_from_flat(X_X_IS_E), (1, 0))


def test_y_has_the_triple_words_as_ends():
    s = sample_central_leibniz(2, 3, 1, split="leibniz")
    sol = from_central_leibniz(s.L, s.e)
    b1, b2 = lift_chain_map(sol.B, 1, 3), lift_chain_map(sol.B, 2, 3)
    Y = sol.homotopy()
    assert Y.frm == compose_chain(compose_chain(b1, b2), b1)
    assert Y.to == compose_word(b2, b1, b2)
    assert Y.h1_defect().is_zero()


def _le(seed):
    s = sample_central_leibniz(seed, 3, 2, split="leibniz")
    return s.L, s.e


def test_inverse_is_two_sided_on_samples():
    for seed in range(3):
        sol = from_central_leibniz(*_le(seed))
        ident = identity_chain(TensorCtx(sol.space, 2))
        assert compose_chain(sol.B, sol.Binv) == ident and compose_chain(sol.Binv, sol.B) == ident


def test_non_solution_l3_breaks_the_tetrahedron_sides():
    L, e = fixture_e()
    residual = l3_residual(L.space, L.bracket)
    broken = 0
    for j in range(L.l3.cols):
        l3 = L.l3 + Mat.unit(1, L.l3.cols, 0, j)
        if all(r.is_zero() for r in residual(l3)):
            continue
        rep = verify_zte(from_central_leibniz(Leibniz2Algebra(L.space, L.bracket, l3), e))
        assert not rep.flags["z5"]
        broken += 1
    assert broken


def test_side_homotopies_share_ends():
    s = sample_central_leibniz(0, 2, 1, split="leibniz")
    left, right = side_homotopies(from_central_leibniz(s.L, s.e))
    assert left.frm == right.frm and left.to == right.to
    assert left.h == right.h


def test_rack_solution_matches_leibniz_on_trivial_extension():
    from ztekit.leibniz2 import trivial_central_extension
    s = sample_central_leibniz(6, 2, 1)
    a = from_central_leibniz(*trivial_central_extension(s.L))
    b = from_linear_2rack(rack_from_trivial_extension(s.L))
    assert (a.B, a.Binv, a.y) == (b.B, b.Binv, b.y)


def test_verify_ybe():
    assert verify_ybe(Mat.identity(4), 2)
    assert verify_ybe(commutation(2, 2), 2)
    assert not verify_ybe(Mat.zeros(4, 4), 2)
    m = Mat.identity(4) + Mat.unit(4, 4, 1, 2)
    assert not verify_ybe(m @ commutation(2, 2) + Mat.unit(4, 4, 0, 3), 2)


def test_decategorification_without_arrows_keeps_b():
    sol = from_central_leibniz(leibniz_from_flat(X_X_IS_E), (0, 1))
    ybe, rep = decategorify_solution(sol, ("leibniz", leibniz_from_flat(X_X_IS_E), (0, 1)))
    assert ybe.Bbar == sol.B.f0 and rep.passed


def test_rack_decategorification_square():
    R, _ = sample_linear_2rack(3, 3, 1)
    ybe, rep = decategorify_solution(from_linear_2rack(R), ("rack", R))
    assert rep.passed, rep.failed()
    assert verify_ybe(ybe.Bbar, ybe.dim)
