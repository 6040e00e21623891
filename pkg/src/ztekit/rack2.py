"""Linear 2-racks: a cocommutative counital coalgebra on a 2-vector space
with a self-distributive operation ◁, its inverse ◁~, and a distributor
homotopy r between (x◁y)◁z and (x◁z1)◁(y◁z2).
"""

from dataclasses import dataclass
from itertools import product

from .leibniz2 import BilinearOp, arrow_violations, divmod_digits
from .ratmat import Mat, ShapeError, commutation, kron, permute_factors, vstack
from .report import Report, Violation, check_equal, column_violations
from .twovec import (ChainMap, ComposabilityError, Homotopy, Mor, MorFamily, TensorCtx,
                     TwoVec, compose_word, decategorify_space, identity_chain,
                     identity_family, lift_chain_map, mor_compose, swap_chain_map)


@dataclass(frozen=True, eq=False)
class Coproduct:
    d0: Mat
    dw: Mat

    def chain_map(self, space):
        return ChainMap(TensorCtx(space, 1), TensorCtx(space, 2), self.d0, self.dw)


@dataclass(frozen=True, eq=False)
class Linear2Rack:
    space: TwoVec
    delta: Coproduct
    eps: Mat
    lhd: BilinearOp
    lhd_inv: BilinearOp
    r: Mat

    def __post_init__(self):
        u, w = self.space.dim_obj, self.space.dim_arr
        shapes = (("delta0", self.delta.d0, (u * u, u)), ("deltaw", self.delta.dw, (2 * u * w, w)),
                  ("eps", self.eps, (1, u)), ("r", self.r, (w, u ** 3)))
        for name, m, shape in shapes:
            if m.shape != shape:
                raise ShapeError(f"{name} has shape {m.shape}, expected {shape}")
        for op in (self.lhd, self.lhd_inv):
            if op.space != self.space:
                raise ShapeError("operation lives on a different space")

    @property
    def u(self):
        return self.space.dim_obj

    @property
    def w(self):
        return self.space.dim_arr

    def delta_chain(self):
        return self.delta.chain_map(self.space)

    def eps_chain(self):
        return ChainMap(TensorCtx(self.space, 1), TensorCtx(self.space, 0),
                        self.eps, Mat.zeros(0, self.w))

    def lhd_chain(self):
        return self.lhd.chain_map(validate=False)

    def lhd_inv_chain(self):
        return self.lhd_inv.chain_map(validate=False)

    def distributor_ends(self):
        """(x◁y)◁z and (x◁z1)◁(y◁z2) as chain maps on three strands."""
        V = self.space
        lhd = self.lhd_chain()
        S = compose_word(lhd, lift_chain_map(lhd, 1, 3))
        both = compose_word(lift_chain_map(lhd, 2, 3), lift_chain_map(lhd, 1, 4))
        T = compose_word(lhd, both, swap_chain_map(V, 2, 4), lift_chain_map(self.delta_chain(), 3, 3))
        return S, T

    def distributor(self):
        S, T = self.distributor_ends()
        return Homotopy(S, T, self.r)


def _chain_equal(rep, flag, F, G):
    ok = True
    if F.dom != G.dom or F.cod != G.cod:
        rep.set(flag, False, [Violation(flag, ("shape",), [])])
        return False
    dims0 = [F.dom.u] * F.dom.strands
    diff0 = F.f0 - G.f0
    if not diff0.is_zero():
        ok = False
        rep.set(flag, False, column_violations(flag, diff0, dims0))
    diffw = F.fw - G.fw
    if not diffw.is_zero():
        ok = False
        rep.set(flag, False, arrow_violations(flag, diffw, F.dom))
    rep.set(flag, ok)
    return ok


def check_linear_2rack(R):
    rep = Report("linear2rack")
    V = R.space
    D, E = R.delta_chain(), R.eps_chain()
    lhd, lhd_inv = R.lhd_chain(), R.lhd_inv_chain()
    ctx1 = TensorCtx(V, 1)

    # structural data: Δ, ε, ◁, ◁~ are functors
    for flag, F in (("c0_delta", D), ("c0_eps", E)):
        diff = F.chain_defect()
        rep.set(flag, diff.is_zero(), column_violations(flag, diff, [max(diff.cols, 1)]))
    R.lhd.report(rep, "c0_lhd_")
    R.lhd_inv.report(rep, "c0_lhd_inv_")

    _chain_equal(rep, "c1", compose_word(lift_chain_map(D, 1, 2), D), compose_word(lift_chain_map(D, 2, 2), D))
    _chain_equal(rep, "c2", compose_word(swap_chain_map(V, 1, 2), D), D)
    _chain_equal(rep, "c3", compose_word(lift_chain_map(E, 1, 2), D), identity_chain(ctx1))
    _chain_equal(rep, "c3", compose_word(lift_chain_map(E, 2, 2), D), identity_chain(ctx1))

    DD = compose_word(lift_chain_map(D, 3, 3), lift_chain_map(D, 1, 2))
    lhd2 = compose_word(lift_chain_map(lhd, 2, 3), lift_chain_map(lhd, 1, 4))
    _chain_equal(rep, "c4", compose_word(D, lhd), compose_word(lhd2, swap_chain_map(V, 2, 4), DD))

    EE = compose_word(lift_chain_map(E, 1, 1), lift_chain_map(E, 2, 2))
    _chain_equal(rep, "c5", compose_word(E, lhd), EE)

    id_eps = lift_chain_map(E, 2, 2)
    spread = lift_chain_map(D, 2, 2)
    _chain_equal(rep, "c6", compose_word(lhd_inv, lift_chain_map(lhd, 1, 3), spread), id_eps)
    _chain_equal(rep, "c6", compose_word(lhd, lift_chain_map(lhd_inv, 1, 3), spread), id_eps)

    Rh = R.distributor()
    u = R.u
    d1 = Rh.h1_defect()
    rep.set("c7", d1.is_zero(), column_violations("c7", d1, [u, u, u]))
    d2 = Rh.h2_defect()
    rep.set("c7", d2.is_zero(), arrow_violations("c7", d2, Rh.dom))

    check_hexagon(R, rep)
    return rep


# ---------------------------------------------------------------------
# distributor hexagon

def hexagon_paths(R, ends=None):
    """Edge families of both sides of the distributor identity over U⊗4."""
    V, u = R.space, R.u
    S, T = ends or R.distributor_ends()
    ctx1 = TensorCtx(V, 1)
    I = Mat.identity(u)
    m, d0 = R.lhd.m_uu, R.delta.d0
    Rf = MorFamily(ctx1, S.f0, R.r)
    iota = identity_family(ctx1, I)

    def reorder(n, perm):
        return permute_factors([u] * n, perm)

    # (x◁z1) ⊗ (y◁z2) on three strands
    spread3 = kron(m, m) @ reorder(4, [0, 2, 1, 3]) @ kron(I, I, d0)
    e1 = R.lhd.on_families(Rf, iota)
    e2 = Rf.reindex(kron(spread3, I))
    legs = reorder(6, [0, 2, 4, 1, 3, 5]) @ kron(I, I, d0, d0)      # x z1 w1 y z2 w2
    e3 = R.lhd.on_families(Rf, Rf).reindex(legs)

    f1 = Rf.reindex(kron(m, I, I))
    zw = identity_family(ctx1, m)                                    # ι_{z◁w2}
    f2 = R.lhd.on_families(Rf, zw).reindex(reorder(5, [0, 1, 3, 2, 4]) @ kron(I, I, I, d0))
    w_legs = kron(d0, I) @ d0                                        # w11 w12 w2
    f3 = Rf.reindex(kron(m, m, m) @ reorder(6, [0, 3, 1, 4, 2, 5]) @ kron(I, I, I, w_legs))
    return [e1, e2, e3], [f1, f2, f3]


def check_hexagon(R, rep, flag="c8"):
    left, right = hexagon_paths(R)
    u = R.u
    bad = []
    for k in range(u ** 4):
        where = tuple(divmod_digits(k, u, 4))
        try:
            lhs = _path(left, k)
            rhs = _path(right, k)
        except ComposabilityError:
            bad.append(Violation(flag, where + ("not composable",), []))
            continue
        if lhs.src != rhs.src or lhs.arr != rhs.arr:
            diff = [a - b for a, b in zip(lhs.arr, rhs.arr)] + [a - b for a, b in zip(lhs.src, rhs.src)]
            bad.append(Violation(flag, where, diff))
    rep.set(flag, not bad, bad)


def _path(fams, k):
    out = fams[0].mor(k)
    for f in fams[1:]:
        out = mor_compose(out, f.mor(k))
    return out


# ---------------------------------------------------------------------
# the rack on K⊕L

def rack_from_trivial_extension(L):
    """Linear 2-rack on K⊕L; the K coordinate comes first."""
    u, w = L.u, L.w
    n = u + 1
    E = vstack(Mat.zeros(1, u), Mat.identity(u))           # U -> K⊕U
    P = E.T                                               # K⊕U -> U
    V = TwoVec(vstack(Mat.zeros(1, w), L.space.d))
    In, Iw = Mat.identity(n), Mat.identity(w)
    e0 = Mat.unit(n, 1, 0, 0)
    drop = E @ P                                          # zeroes the K coordinate
    d0 = kron(In, e0) + kron(e0, drop)
    dw = vstack(kron(Iw, e0), kron(e0, Iw))
    eps = e0.T
    op = L.bracket
    br_uu = E @ op.m_uu @ kron(P, P)
    scale_uu = kron(In, eps)                              # (a,x)⊗(b,y) -> b(a,x)
    lhd = BilinearOp(V, scale_uu + br_uu, kron(Iw, eps) + op.m_wu @ kron(Iw, P),
                     op.m_uw @ kron(P, Iw))
    lhd_inv = BilinearOp(V, scale_uu - br_uu, kron(Iw, eps) - op.m_wu @ kron(Iw, P),
                         -(op.m_uw @ kron(P, Iw)))
    r = L.l3 @ kron(P, P, P)
    return Linear2Rack(V, Coproduct(d0, dw), eps, lhd, lhd_inv, r)


def trivial_rack(space):
    """Δ(x) = x⊗x on basis vectors, x◁y = ε(y)x, r = 0.

    Arrows get Δ(w) = w⊗g + g⊗w for the first basis vector g; this is a
    chain map only when d = 0.
    """
    u, w = space.dim_obj, space.dim_arr
    if not space.d.is_zero():
        raise ValueError("the diagonal coproduct needs d = 0")
    diag = Mat.from_dict(u * u, u, {(i * u + i, i): 1 for i in range(u)})
    eps = Mat.from_rows([[1] * u])
    Iw = Mat.identity(w)
    g = Mat.unit(u, 1, 0, 0)
    dw = vstack(kron(Iw, g), kron(g, Iw))
    op = BilinearOp(space, kron(Mat.identity(u), eps), kron(Iw, eps), Mat.zeros(w, u * w))
    return Linear2Rack(space, Coproduct(diag, dw), eps, op, op, Mat.zeros(w, u ** 3))


# ---------------------------------------------------------------------
# flat linear racks

@dataclass(frozen=True, eq=False)
class FlatRack:
    dim: int
    delta: Mat
    eps: Mat
    lhd: Mat
    lhd_inv: Mat

    def braiding(self):
        n, I = self.dim, Mat.identity(self.dim)
        return kron(I, self.lhd) @ kron(commutation(n, n), I) @ kron(I, self.delta)

    def check(self):
        rep = Report("flat_rack")
        n, I = self.dim, Mat.identity(self.dim)
        D, E, m, mi = self.delta, self.eps, self.lhd, self.lhd_inv
        dims = [n]
        check_equal(rep, "coassociative", kron(D, I) @ D, kron(I, D) @ D, dims)
        check_equal(rep, "cocommutative", commutation(n, n) @ D, D, dims)
        check_equal(rep, "counit", kron(E, I) @ D, I, dims)
        check_equal(rep, "counit", kron(I, E) @ D, I, dims)
        mid = kron(I, commutation(n, n), I)
        check_equal(rep, "delta_lhd", D @ m, kron(m, m) @ mid @ kron(D, D), [n, n])
        check_equal(rep, "eps_lhd", E @ m, kron(E, E), [n, n])
        check_equal(rep, "inverse", mi @ kron(m, I) @ kron(I, D), kron(I, E), [n, n])
        check_equal(rep, "inverse", m @ kron(mi, I) @ kron(I, D), kron(I, E), [n, n])
        S = m @ kron(m, I)
        T = m @ kron(m, m) @ mid @ kron(I, I, D)
        check_equal(rep, "self_distributive", S, T, [n, n, n])
        return rep


def decategorify_rack(R):
    n, proj, sec = decategorify_space(R.space)
    P2 = kron(proj, proj)
    S2 = kron(sec, sec)
    return FlatRack(n, P2 @ R.delta.d0 @ sec, R.eps @ sec,
                    proj @ R.lhd.m_uu @ S2, proj @ R.lhd_inv.m_uu @ S2)


# ---------------------------------------------------------------------
# group-like objects

def is_group_like(R, x):
    xv = Mat.column(x)
    return R.delta.d0 @ xv == kron(xv, xv)


def group_like_report(R, candidates):
    rep = Report("group_like")
    V = R.space
    cands = [tuple(Mat.column(c).col_vector()) for c in candidates]
    known = set(cands)
    rep.set("group_like", True)
    rep.set("closed", True)
    rep.set("invertible", True)
    rep.set("distributor", True)
    for i, x in enumerate(cands):
        if not is_group_like(R, x):
            rep.set("group_like", False, [Violation("group_like", (i,), list(x))])

    def lhd(a, b):
        return tuple((R.lhd.m_uu @ kron(Mat.column(a), Mat.column(b))).col_vector())

    def lhd_inv(a, b):
        return tuple((R.lhd_inv.m_uu @ kron(Mat.column(a), Mat.column(b))).col_vector())

    for (i, x), (j, y) in product(enumerate(cands), repeat=2):
        xy = lhd(x, y)
        if xy not in known:
            rep.set("closed", False, [Violation("closed", (i, j), list(xy))])
        if lhd_inv(xy, y) != x or lhd(lhd_inv(x, y), y) != x:
            rep.set("invertible", False, [Violation("invertible", (i, j), [])])

    S, T = R.distributor_ends()
    zero_w = (0,) * R.w

    def Rc(a, b, c):
        t = kron(Mat.column(a), Mat.column(b), Mat.column(c))
        return Mor(V, (S.f0 @ t).col_vector(), (R.r @ t).col_vector() if R.w else ())

    def ident(a):
        return Mor(V, a, zero_w)

    for idx in product(range(len(cands)), repeat=4):
        x, y, z, w = (cands[k] for k in idx)
        try:
            left = mor_compose(mor_compose(R.lhd.apply(Rc(x, y, z), ident(w)),
                                           Rc(lhd(x, z), lhd(y, z), w)),
                               R.lhd.apply(Rc(x, z, w), Rc(y, z, w)))
            right = mor_compose(mor_compose(Rc(lhd(x, y), z, w),
                                            R.lhd.apply(Rc(x, y, w), R.lhd.apply(ident(z), ident(w)))),
                                Rc(lhd(x, w), lhd(y, w), lhd(z, w)))
        except ComposabilityError:
            rep.set("distributor", False, [Violation("distributor", idx + ("not composable",), [])])
            continue
        if left != right:
            diff = [a - b for a, b in zip(left.arr, right.arr)]
            rep.set("distributor", False, [Violation("distributor", idx, diff)])
    return rep
