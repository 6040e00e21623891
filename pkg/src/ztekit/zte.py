"""Tetrahedron solutions (B, B~, Y) and their verification.

The categorified tetrahedron equation compares two vertical composites
of four whiskered copies of Y on four strands.  Both composites are
assembled along the two halves of the permutohedron; each step is a
lift of Y whiskered by words in B1 = B⊗I⊗I, B2 = I⊗B⊗I, B3 = I⊗I⊗B.
"""

import time
from dataclasses import dataclass

from .ratmat import Mat, ShapeError, block_matrix, commutation, inverse, kron, permute_factors
from .report import Report, Violation, check_equal, column_violations
from .twovec import (ChainMap, Homotopy, StructureError, TensorCtx, TwoVec, compose_chain,
                     compose_word, decategorify_space, identity_chain, lift_chain_map,
                     lift_homotopy, swap_chain_map)


@dataclass(frozen=True, eq=False)
class ZteSolution:
    space: TwoVec
    B: ChainMap
    Binv: ChainMap
    y: Mat

    def __post_init__(self):
        ctx2, ctx3 = TensorCtx(self.space, 2), TensorCtx(self.space, 3)
        for F in (self.B, self.Binv):
            if F.dom != ctx2 or F.cod != ctx2:
                raise ShapeError("B must act on two strands of the solution's space")
        if self.y.shape != (ctx3.arr_dim, ctx3.obj_dim):
            raise ShapeError(f"y has shape {self.y.shape}")

    def triple_words(self):
        b1, b2 = lift_chain_map(self.B, 1, 3), lift_chain_map(self.B, 2, 3)
        return compose_word(b1, b2, b1), compose_word(b2, b1, b2)

    def homotopy(self):
        frm, to = self.triple_words()
        return Homotopy(frm, to, self.y)


@dataclass(frozen=True)
class YbeSolution:
    dim: int
    Bbar: Mat


# ---------------------------------------------------------------------
# builders

def from_central_leibniz(L, e, check=True):
    from .leibniz2 import check_central
    if check and not check_central(L, e):
        raise StructureError("object is not central")
    V, u, w = L.space, L.u, L.w
    op = L.bracket
    m = op.chain_map()
    ev = Mat.column(e)
    ctx1, ctx2 = TensorCtx(V, 1), TensorCtx(V, 2)
    tau = swap_chain_map(V, 1, 2)
    # x |-> e ⊗ x lands in slot 2 on arrows, x |-> x ⊗ e in slot 1
    e_left = ChainMap(ctx1, ctx2, kron(ev, Mat.identity(u)),
                      block_matrix({(1, 0): kron(ev, Mat.identity(w))}, [ctx2.slot_dim] * 2, [w]))
    e_right = ChainMap(ctx1, ctx2, kron(Mat.identity(u), ev),
                       block_matrix({(0, 0): kron(Mat.identity(w), ev)}, [ctx2.slot_dim] * 2, [w]))
    B = tau + compose_chain(m, e_left)
    Binv = tau - compose_word(e_right, m, tau)
    ctx3 = TensorCtx(V, 3)
    third = kron(ev, ev, L.l3)
    y = block_matrix({(2, 0): third}, [ctx3.slot_dim] * 3, [ctx3.obj_dim])
    return ZteSolution(V, B, Binv, y)


def from_linear_2rack(R):
    V = R.space
    u = V.dim_obj
    D, lhd, lhd_inv = R.delta_chain(), R.lhd_chain(), R.lhd_inv_chain()
    B = compose_word(lift_chain_map(lhd, 2, 3), swap_chain_map(V, 1, 3), lift_chain_map(D, 2, 2))
    Binv = compose_word(lift_chain_map(lhd_inv, 1, 3), swap_chain_map(V, 1, 3),
                        swap_chain_map(V, 2, 3), lift_chain_map(D, 1, 2))
    # x⊗y⊗z -> z1 ⊗ (y1 ◁ z2) ⊗ r(x ⊗ y2 ⊗ z3)
    I = Mat.identity(u)
    d0 = R.delta.d0
    legs = kron(I, d0, kron(d0, I) @ d0)            # x, y1, y2, z1, z2, z3
    order = permute_factors([u] * 6, [3, 1, 4, 0, 2, 5])
    third = kron(I, R.lhd.m_uu, R.r) @ order @ legs
    ctx3 = TensorCtx(V, 3)
    y = block_matrix({(2, 0): third}, [ctx3.slot_dim] * 3, [ctx3.obj_dim])
    return ZteSolution(V, B, Binv, y)


# ---------------------------------------------------------------------
# verification

class WordCache:
    """Composites of B1, B2, B3 on four strands, keyed by digit strings.

    A word is written left to right and applied right to left; longer
    words are split in half so shared halves are computed once.
    """

    def __init__(self, B):
        self.B = [lift_chain_map(B, i, 4) for i in (1, 2, 3)]
        self.cache = {}

    def __call__(self, digits):
        if digits in self.cache:
            return self.cache[digits]
        if len(digits) == 1:
            out = self.B[int(digits) - 1]
        else:
            k = len(digits) // 2
            out = compose_word(self(digits[:k]), self(digits[k:]))
        self.cache[digits] = out
        return out


# Each side of the permutohedron: six words and four steps
# (which lift of Y, pre word, post word).  The step between the second
# and third word is an equality by far commutativity of B1 and B3.
LEFT_WORDS = ("121321", "212321", "213231", "231213", "232123", "323123")
LEFT_STEPS = ((1, "321", None), (2, "1", "21"), (1, "3", "23"), (2, "123", None))
RIGHT_WORDS = ("123121", "123212", "132312", "312132", "321232", "321323")
RIGHT_STEPS = ((1, None, "123"), (2, "12", "1"), (1, "32", "3"), (2, None, "321"))

# ends of Y lifted to four strands, as B-words
LIFTED_ENDS = {1: ("121", "212"), 2: ("232", "323")}
_STEP_PAIRS = ((0, 1), (1, 2), (3, 4), (4, 5))


def whiskered_h(Y, pre=None, post=None):
    h = Y.h
    if pre is not None:
        h = h @ pre.f0
    if post is not None:
        h = post.fw @ h
    return h


def lifted_ys(sol):
    Yh = sol.homotopy()
    return {1: lift_homotopy(Yh, 1, 4), 2: lift_homotopy(Yh, 2, 4)}


def check_lifted_ends(words, Y, rep, flag):
    """The lifted ends of Y must be the corresponding B-words exactly."""
    ok = True
    for which, (a, b) in LIFTED_ENDS.items():
        for label, got, want in (("from", Y[which].frm, a), ("to", Y[which].to, b)):
            if got != words(want):
                ok = False
                rep.set(flag, False, [Violation(flag, (f"lifted Y{which}", label, want), [])])
    rep.set(flag, ok)
    return ok


def run_side(words, Y, names, steps, rep, flag):
    """Check the schedule of one side and return its total h-matrix.

    A whiskered step post * Y * pre has endpoints post·(end of Y)·pre.
    Once the lifted ends of Y equal their B-words (checked separately),
    each endpoint equals the concatenated word, so matching the schedule
    reduces to string equality plus the one far-commutativity step.
    """
    ok = True
    for k, ((which, pre, post), (a, b)) in enumerate(zip(steps, _STEP_PAIRS)):
        frm, to = LIFTED_ENDS[which]
        for label, mid, want in (("from", frm, names[a]), ("to", to, names[b])):
            got = (post or "") + mid + (pre or "")
            if got != want:
                ok = False
                rep.set(flag, False, [Violation(flag, (f"step {k + 1}", label, got, want), [])])
    if words(names[2]) != words(names[3]):
        ok = False
        rep.set(flag, False, [Violation(flag, ("far commutativity", names[2], names[3]), [])])
    rep.set(flag, ok)
    total = None
    for which, pre, post in steps:
        h = whiskered_h(Y[which], words(pre) if pre else None, words(post) if post else None)
        total = h if total is None else total + h
    return total


def verify_zte(sol):
    t0 = time.perf_counter()
    rep = Report("zte")
    ctx2 = TensorCtx(sol.space, 2)
    ident = identity_chain(ctx2)
    ok_chain = sol.B.is_valid() and sol.Binv.is_valid()
    rep.set("z1", ok_chain, [] if ok_chain else [Violation("z1", ("chain condition",), [])])
    for label, F in (("B∘Binv", compose_chain(sol.Binv, sol.B)), ("Binv∘B", compose_chain(sol.B, sol.Binv))):
        same = F == ident
        rep.set("z1", same, [] if same else [Violation("z1", (label,), [])])

    Yh = sol.homotopy()
    u = sol.space.dim_obj
    d1 = Yh.h1_defect()
    rep.set("z2", d1.is_zero(), column_violations("z2", d1, [u, u, u]))
    d2 = Yh.h2_defect()
    if not d2.is_zero():
        from .leibniz2 import arrow_violations
        rep.set("z2", False, arrow_violations("z2", d2, Yh.dom))

    words = WordCache(sol.B)
    Y = lifted_ys(sol)
    ends_ok = check_lifted_ends(words, Y, rep, "z3")
    rep.set("z4", ends_ok)
    left = run_side(words, Y, LEFT_WORDS, LEFT_STEPS, rep, "z3")
    right = run_side(words, Y, RIGHT_WORDS, RIGHT_STEPS, rep, "z4")
    for a, b in ((LEFT_WORDS[0], RIGHT_WORDS[0]), (LEFT_WORDS[-1], RIGHT_WORDS[-1])):
        if words(a) != words(b):
            rep.set("z5", False, [Violation("z5", ("endpoint words differ", a, b), [])])
    check_equal(rep, "z5", left, right, [u] * 4)
    rep.timing = time.perf_counter() - t0
    return rep


def side_homotopies(sol):
    """The assembled LEFT and RIGHT composites as homotopies."""
    rep = Report("zte")
    words = WordCache(sol.B)
    Y = lifted_ys(sol)
    left = run_side(words, Y, LEFT_WORDS, LEFT_STEPS, rep, "left")
    right = run_side(words, Y, RIGHT_WORDS, RIGHT_STEPS, rep, "right")
    return (Homotopy(words(LEFT_WORDS[0]), words(LEFT_WORDS[-1]), left),
            Homotopy(words(RIGHT_WORDS[0]), words(RIGHT_WORDS[-1]), right))


def ybe_defect(m, dim):
    if m.shape != (dim * dim, dim * dim):
        raise ShapeError(f"expected a {dim * dim}x{dim * dim} matrix, got {m.shape}")
    I = Mat.identity(dim)
    a, b = kron(m, I), kron(I, m)
    return a @ b @ a - b @ a @ b


def verify_ybe(m, dim):
    if not ybe_defect(m, dim).is_zero():
        return False
    return inverse(m) is not None


# ---------------------------------------------------------------------
# decategorification

def decategorify_solution(sol, structure=None):
    """Bbar on coker(d)⊗2 plus a report on the decategorification square.

    ``structure`` may be ("leibniz", L, e) or ("rack", R); the flat
    formula of the decategorified structure is then compared with Bbar.
    """
    rep = Report("decat")
    n, proj, section = decategorify_space(sol.space)
    P2, S2 = kron(proj, proj), kron(section, section)
    Bbar = P2 @ sol.B.f0 @ S2
    check_equal(rep, "descends", Bbar @ P2, P2 @ sol.B.f0, [sol.space.dim_obj] * 2)
    rep.set("ybe", verify_ybe(Bbar, n))
    if structure is not None:
        kind = structure[0]
        if kind == "leibniz":
            from .leibniz2 import decategorify_leibniz
            _, L, e = structure
            flat = decategorify_leibniz(L, e)
            formula = commutation(n, n) + kron(Mat.column(flat.central), flat.mu)
        elif kind == "rack":
            from .rack2 import decategorify_rack
            flat = decategorify_rack(structure[1])
            formula = flat.braiding()
        else:
            raise ValueError(f"unknown structure kind {kind!r}")
        check_equal(rep, "square", Bbar, formula, [n, n])
    return YbeSolution(n, Bbar), rep
