"""Quotients by a central object, splittings, and the rack they induce.

For a central object e the quotient U/<e> has coordinates given by
``coker_projection`` of the column e.  A section σ0 of that projection
determines the idempotent Q = σ0·π0 with kernel <e>, and the functional
φ with x = φ(x)e + Qx.  Arrows of the quotient are U/<e> ⊕ W, so the only
freedom in lifting an arrow is a multiple c(w) of the identity on e.
"""

from dataclasses import dataclass

from .leibniz2 import BilinearOp, Leibniz2Algebra, check_central
from .ratmat import Mat, coker_projection, kron, solve, vstack
from .rack2 import Coproduct, FlatRack, Linear2Rack
from .report import Report, check_equal
from .twovec import StructureError, TwoVec, decategorify_space


def _line(e, n):
    if len(e) != n:
        raise ValueError(f"central object has length {len(e)}, expected {n}")
    if all(x == 0 for x in e):
        raise ValueError("the central object must be nonzero")
    ev = Mat.column(e)
    proj, sec = coker_projection(ev)
    return ev, proj, sec


def _phi(ev, Q):
    """The functional with (I - Q) = e·φ."""
    n = ev.rows
    rest = Mat.identity(n) - Q
    sol = solve(ev, rest)
    if sol is None:
        raise StructureError("I - Q does not take values in <e>")
    return sol


@dataclass(frozen=True, eq=False)
class QuotientLeibniz2:
    L: Leibniz2Algebra
    proj: Mat
    section: Mat
    well_defined: bool        # l3 kills e in every slot


def quotient_leibniz2(L, e, section=None):
    """Push the bracket and l3 down to U/<e>.

    Brackets are lifted along ``section`` (the canonical complement by
    default); centrality makes the result independent of that choice.
    l3 is lifted the same way, which is independent of the choice only
    when l3 vanishes as soon as one argument is e.
    """
    ev, proj, sec = _line(e, L.u)
    if not check_central(L, e):
        raise StructureError("object is not central")
    if section is not None:
        sec = section
    u, w = L.u, L.w
    Iw, I = Mat.identity(w), Mat.identity(u)
    V = TwoVec(proj @ L.space.d)
    op = L.bracket
    bar = BilinearOp(V, proj @ op.m_uu @ kron(sec, sec), op.m_wu @ kron(Iw, sec),
                     op.m_uw @ kron(sec, Iw))
    l3 = L.l3 @ kron(sec, sec, sec)
    kills = all((L.l3 @ m).is_zero() for m in (kron(ev, I, I), kron(I, ev, I), kron(I, I, ev)))
    return QuotientLeibniz2(Leibniz2Algebra(V, bar, l3), proj, sec, kills)


@dataclass(frozen=True, eq=False)
class Splitting:
    L: Leibniz2Algebra
    e: tuple
    sigma0: Mat
    c: Mat
    proj: Mat

    @property
    def Q(self):
        return self.sigma0 @ self.proj

    @property
    def phi(self):
        return _phi(Mat.column(self.e), self.Q)

    @property
    def is_homomorphism(self):
        """σ = (σ0, w -> (σ0·0 + c(w)e, w)) preserves sources iff c = 0."""
        return self.c.is_zero()

    def sigma1(self):
        """The lift of quotient arrows U/<e> ⊕ W -> U ⊕ W as (object part, W part)."""
        ev = Mat.column(self.e)
        return self.sigma0, ev @ self.c


def make_splitting(L, e, sigma0):
    ev, proj, _ = _line(e, L.u)
    n = L.u - 1
    if sigma0.shape != (L.u, n):
        raise ValueError(f"section has shape {sigma0.shape}, expected {(L.u, n)}")
    if proj @ sigma0 != Mat.identity(n):
        raise ValueError("sigma0 is not a section of the projection onto U/<e>")
    d = L.space.d
    gap = d - sigma0 @ proj @ d
    c = solve(ev, -gap) if L.w else Mat.zeros(1, 0)
    if c is None:
        raise StructureError("d - σ0π0d leaves <e>")      # cannot happen for a section
    return Splitting(L, tuple(e), sigma0, c, proj)


def splitting_report(sp):
    """Source and target equations of the induced arrow map."""
    rep = Report("splitting")
    L, ev = sp.L, Mat.column(sp.e)
    d, dbar = L.space.d, sp.proj @ L.space.d
    # σ1(0, w) = (c(w)e, w): source c(w)e must be σ0(0) = 0
    check_equal(rep, "source", ev @ sp.c, Mat.zeros(L.u, L.w), [L.w])
    # target c(w)e + dw must be σ0(π0 dw)
    check_equal(rep, "target", ev @ sp.c + d, sp.sigma0 @ dbar, [L.w])
    check_equal(rep, "section", sp.proj @ sp.sigma0, Mat.identity(L.u - 1), [L.u - 1])
    return rep


def is_leibniz_section(sp):
    """σ is a strict Leibniz 2-algebra map from the quotient back to L."""
    return leibniz_section_report(sp).passed


def leibniz_section_report(sp):
    rep = splitting_report(sp)
    L = sp.L
    q = quotient_leibniz2(L, sp.e, sp.sigma0)
    op, bar = L.bracket, q.L.bracket
    s, Iw = sp.sigma0, Mat.identity(L.w)
    n = L.u - 1
    check_equal(rep, "m_uu", op.m_uu @ kron(s, s), s @ bar.m_uu, [n, n])
    check_equal(rep, "m_wu", op.m_wu @ kron(Iw, s), bar.m_wu, [L.w, n])
    check_equal(rep, "m_uw", op.m_uw @ kron(s, Iw), bar.m_uw, [n, L.w])
    # J(x, y, z) = σ1(J̄(x̄, ȳ, z̄)) for all lifts x, y, z
    Q = sp.Q
    check_equal(rep, "l3", L.l3, L.l3 @ kron(Q, Q, Q), [L.u] * 3)
    return rep


def rack_from_splitting(sp):
    """Linear 2-rack on the space of L built from a splitting.

    Δ(x) = x⊗e + e⊗Qx,  ε = φ,  x◁y = φ(y)x + Q[x, y],  x◁~y = φ(y)x - Q[x, y],
    r = l3 ∘ Q⊗Q⊗Q.  Arrows follow the same formulas with σ1.
    """
    if not sp.is_homomorphism:
        raise StructureError("counit is not a functor: the splitting has c != 0 "
                             "(some d(w) has a component along e)")
    L = sp.L
    u, w = L.u, L.w
    ev = Mat.column(sp.e)
    Q, phi = sp.Q, sp.phi
    I, Iw = Mat.identity(u), Mat.identity(w)
    V = L.space
    op = L.bracket
    d0 = kron(I, ev) + kron(ev, Q)
    dw = vstack(kron(Iw, ev), kron(ev, Iw))
    scale = kron(I, phi)
    lhd = BilinearOp(V, scale + Q @ op.m_uu, kron(Iw, phi) + op.m_wu, op.m_uw)
    lhd_inv = BilinearOp(V, scale - Q @ op.m_uu, kron(Iw, phi) - op.m_wu, -op.m_uw)
    r = L.l3 @ kron(Q, Q, Q)
    return Linear2Rack(V, Coproduct(d0, dw), phi, lhd, lhd_inv, r)


def solutions_coincide(sp):
    """Compare the tetrahedron solutions of L and of its split rack."""
    from .zte import from_central_leibniz, from_linear_2rack
    rep = Report("coincide")
    L = sp.L
    a = from_central_leibniz(L, sp.e)
    b = from_linear_2rack(rack_from_splitting(sp))
    u, w = L.u, L.w
    check_equal(rep, "B_f0", a.B.f0, b.B.f0, [u, u])
    check_equal(rep, "B_fw", a.B.fw, b.B.fw, [w * u])
    check_equal(rep, "Binv_f0", a.Binv.f0, b.Binv.f0, [u, u])
    check_equal(rep, "Binv_fw", a.Binv.fw, b.Binv.fw, [w * u])
    check_equal(rep, "y", a.y, b.y, [u] * 3)
    rep.notes["leibniz_section"] = is_leibniz_section(sp)
    return rep


# ---------------------------------------------------------------------
# the flat case

def flat_rack_from_central_leibniz(g, e, sigma):
    """Linear rack on a central Leibniz algebra g (a FlatLeibniz)."""
    if not g.is_leibniz():
        raise StructureError("structure constants violate the Leibniz identity")
    ev, proj, _ = _line(e, g.dim)
    if not g.is_central(e):
        raise StructureError("the given element is not central")
    n = g.dim
    if sigma.shape != (n, n - 1) or proj @ sigma != Mat.identity(n - 1):
        raise ValueError("sigma is not a section of the projection onto g/<e>")
    Q = sigma @ proj
    phi = _phi(ev, Q)
    I = Mat.identity(n)
    delta = kron(I, ev) + kron(ev, Q)
    return FlatRack(n, delta, phi, kron(I, phi) + Q @ g.mu, kron(I, phi) - Q @ g.mu)


def decategorify_splitting(sp):
    """The flat central Leibniz algebra, ē and the induced section σ̄.

    Q fixes im(d) (im d lies in the image of σ0 when c = 0), so it
    descends to coker(d); σ̄ is that descended idempotent restricted to
    the complement of ē chosen by ``coker_projection``.
    """
    from .leibniz2 import decategorify_leibniz
    if not sp.is_homomorphism:
        raise StructureError("the splitting does not descend: c != 0")
    flat = decategorify_leibniz(sp.L, sp.e)
    n, p, s = decategorify_space(sp.L.space)
    Qbar = p @ sp.Q @ s
    _, _, sec = _line(flat.central, n)
    return flat, flat.central, Qbar @ sec


def prism_report(sp):
    """Decategorified split rack against the flat rack of the decategorified algebra."""
    from .rack2 import decategorify_rack
    rep = Report("prism")
    top = decategorify_rack(rack_from_splitting(sp))
    g, ebar, sbar = decategorify_splitting(sp)
    bottom = flat_rack_from_central_leibniz(g, ebar, sbar)
    n = g.dim
    check_equal(rep, "delta", top.delta, bottom.delta, [n])
    check_equal(rep, "eps", top.eps, bottom.eps, [n])
    check_equal(rep, "lhd", top.lhd, bottom.lhd, [n, n])
    check_equal(rep, "lhd_inv", top.lhd_inv, bottom.lhd_inv, [n, n])
    return rep
