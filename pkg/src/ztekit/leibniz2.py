"""Leibniz 2-algebras in the complex model.

A bracket is a bilinear functor given by three component matrices
(U⊗U -> U, W⊗U -> W, U⊗W -> W).  The Jacobiator is a homotopy between
the two 3-strand chain maps [[x,y],z] and [[x,z],y] + [x,[y,z]]; its
arrow part is l3: U⊗U⊗U -> W.
"""

from dataclasses import dataclass
from itertools import product

from .ratmat import Mat, ShapeError, kron, permute_factors, vstack
from .report import Report, Violation, column_violations
from .twovec import (ChainMap, ComposabilityError, Homotopy, Mor, MorFamily,
                     StructureError, TensorCtx, TwoVec, apply_chain, compose_chain,
                     identity_family, lift_chain_map, mor_compose, permute_chain_map,
                     tensor_families)


@dataclass(frozen=True, eq=False)
class BilinearOp:
    space: TwoVec
    m_uu: Mat
    m_wu: Mat
    m_uw: Mat

    def __post_init__(self):
        u, w = self.space.dim_obj, self.space.dim_arr
        for name, m, shape in (("m_uu", self.m_uu, (u, u * u)),
                               ("m_wu", self.m_wu, (w, w * u)),
                               ("m_uw", self.m_uw, (w, u * w))):
            if m.shape != shape:
                raise ShapeError(f"{name} has shape {m.shape}, expected {shape}")

    @property
    def u(self):
        return self.space.dim_obj

    @property
    def w(self):
        return self.space.dim_arr

    def b1_defect(self):
        d = self.space.d
        return self.m_uu @ kron(d, Mat.identity(self.u)) - d @ self.m_wu

    def b2_defect(self):
        d = self.space.d
        return self.m_uu @ kron(Mat.identity(self.u), d) - d @ self.m_uw

    def b3_defect(self):
        d, iw = self.space.d, Mat.identity(self.w)
        return self.m_wu @ kron(iw, d) - self.m_uw @ kron(d, iw)

    def report(self, rep=None, prefix=""):
        rep = rep or Report("bilinear")
        u, w = self.u, self.w
        for flag, diff, dims in ((prefix + "B1", self.b1_defect(), [w, u]),
                                 (prefix + "B2", self.b2_defect(), [u, w]),
                                 (prefix + "B3", self.b3_defect(), [w, w])):
            ok = diff.is_zero()
            rep.set(flag, ok, [] if ok else column_violations(flag, diff, dims))
        return rep

    def chain_map(self, validate=True):
        ctx1, ctx2 = TensorCtx(self.space, 1), TensorCtx(self.space, 2)
        from .ratmat import hstack
        F = ChainMap(ctx2, ctx1, self.m_uu, hstack(self.m_wu, self.m_uw))
        if validate:
            rep = self.report()
            bad = [k for k in ("B1", "B2") if not rep.flags[k]]
            if bad:
                raise StructureError("bracket violates " + ", ".join(bad))
        return F

    def apply(self, f, g):
        """Image of the morphism pair (f, g)."""
        d = self.space.d
        sf, sg = Mat.column(f.src), Mat.column(g.src)
        src = (self.m_uu @ kron(sf, sg)).col_vector()
        if not self.w:
            return Mor(self.space, src, ())
        af, ag = Mat.column(f.arr), Mat.column(g.arr)
        arr = (self.m_wu @ kron(af, sg) + self.m_uw @ kron(sf, ag)
               + self.m_wu @ kron(af, d @ ag))
        return Mor(self.space, src, arr.col_vector())

    def on_families(self, f, g):
        return apply_chain(self.chain_map(validate=False), tensor_families(f, g))


def zero_bilinear(space):
    u, w = space.dim_obj, space.dim_arr
    return BilinearOp(space, Mat.zeros(u, u * u), Mat.zeros(w, w * u), Mat.zeros(w, u * w))


@dataclass(frozen=True, eq=False)
class Leibniz2Algebra:
    space: TwoVec
    bracket: BilinearOp
    l3: Mat

    def __post_init__(self):
        u, w = self.space.dim_obj, self.space.dim_arr
        if self.bracket.space != self.space:
            raise ShapeError("bracket lives on a different space")
        if self.l3.shape != (w, u ** 3):
            raise ShapeError(f"l3 has shape {self.l3.shape}, expected {(w, u ** 3)}")

    @property
    def u(self):
        return self.space.dim_obj

    @property
    def w(self):
        return self.space.dim_arr


def bracket_chain_map(L):
    return L.bracket.chain_map()


def bracket_morphisms(L, f, g):
    op = L.bracket if isinstance(L, Leibniz2Algebra) else L
    return op.apply(f, g)


# ---------------------------------------------------------------------
# the two sides of the Jacobiator

def jacobiator_ends(op):
    """Chain maps [[x,y],z] and [[x,z],y] + [x,[y,z]] on three strands."""
    m = op.chain_map(validate=False)
    V = op.space
    inner_left = lift_chain_map(m, 1, 3)
    inner_right = lift_chain_map(m, 2, 3)
    lhs = compose_chain(inner_left, m)
    rhs = (compose_chain(compose_chain(permute_chain_map(V, [0, 2, 1]), inner_left), m)
           + compose_chain(inner_right, m))
    return lhs, rhs


def jacobiator_homotopy(L):
    lhs, rhs = jacobiator_ends(L.bracket)
    return Homotopy(lhs, rhs, L.l3)


def jacobiator_family(L, lhs0=None):
    """J as a family over basis triples: J_t : [[x,y],z] -> [[x,z],y] + [x,[y,z]]."""
    if lhs0 is None:
        lhs0 = jacobiator_ends(L.bracket)[0].f0
    return MorFamily(TensorCtx(L.space, 1), lhs0, L.l3)


def arrow_where(ctx, j):
    """Name an arrow-space basis column: slot number followed by its digits."""
    from .ratmat import tensor_digits
    if ctx.slot_dim == 0:
        return (j,)
    slot, k = divmod(j, ctx.slot_dim)
    return ("slot", slot + 1) + tensor_digits(k, ctx.slot_factors(slot + 1))


def arrow_violations(flag, diff, ctx):
    out = []
    cols = sorted({j for _, j, _ in diff.nonzeros()})
    for j in cols[:64]:
        out.append(Violation(flag, arrow_where(ctx, j), diff.col_vector(j)))
    return out


def pentagon_paths(L):
    """Edge families of both paths of the Jacobiator identity over U⊗4.

    Columns are indexed by basis quadruples x⊗y⊗z⊗w.  Returns the left
    and right lists of three families each (first edge first).
    """
    V, u = L.space, L.u
    op = L.bracket
    ctx1 = TensorCtx(V, 1)
    m = op.m_uu
    I = Mat.identity(u)
    J = jacobiator_family(L)
    iota = identity_family(ctx1, I)

    def J_at(index_map):
        return J.reindex(index_map)

    def idobj(objects):
        return identity_family(ctx1, objects)

    # reorder U⊗4 index from x y z w into the order an edge is written in
    def reorder(perm):
        return permute_factors([u] * 4, perm)

    mm = m @ kron(m, m)
    a1 = J_at(kron(m, I, I))
    a2 = op.on_families(J, iota).reindex(reorder([0, 1, 3, 2])) + idobj(mm)
    a3 = (J_at(kron(m, I, I) @ reorder([0, 3, 1, 2]))
          + J_at(kron(I, m, I) @ reorder([0, 1, 3, 2]))
          + J_at(kron(I, I, m)))

    b1 = op.on_families(J, iota)
    b2 = J_at(kron(m, I, I) @ reorder([0, 2, 1, 3])) + J_at(kron(I, m, I))
    mm_xz_yw = mm @ reorder([0, 2, 1, 3])
    mm_xw_yz = mm @ reorder([0, 3, 1, 2])
    b3 = (op.on_families(J, iota).reindex(reorder([0, 2, 3, 1]))
          + idobj(mm_xz_yw + mm_xw_yz)
          + op.on_families(iota, J))
    return [a1, a2, a3], [b1, b2, b3]


def compose_path(fams, k):
    out = fams[0].mor(k)
    for f in fams[1:]:
        out = mor_compose(out, f.mor(k))
    return out


def check_pentagon(L, rep, flag="J_identity"):
    left, right = pentagon_paths(L)
    u = L.u
    bad = []
    for k in range(u ** 4):
        where = tuple(divmod_digits(k, u, 4))
        try:
            lhs = compose_path(left, k)
            rhs = compose_path(right, k)
        except ComposabilityError:
            bad.append(Violation(flag, where + ("not composable",), []))
            continue
        if lhs.src != rhs.src or lhs.arr != rhs.arr:
            diff = [a - b for a, b in zip(lhs.arr, rhs.arr)]
            diff += [a - b for a, b in zip(lhs.src, rhs.src)]
            bad.append(Violation(flag, where, diff))
    rep.set(flag, not bad, bad)


def divmod_digits(k, base, n):
    out = []
    for _ in range(n):
        k, r = divmod(k, base)
        out.append(r)
    return reversed(out)


def check_leibniz2(L):
    rep = Report("leibniz2")
    op = L.bracket
    op.report(rep)
    u = L.u
    lhs, rhs = jacobiator_ends(op)
    Jh = Homotopy(lhs, rhs, L.l3)
    d1 = Jh.h1_defect()
    rep.set("J_endpoints", d1.is_zero(), column_violations("J_endpoints", d1, [u, u, u]))
    d2 = Jh.h2_defect()
    rep.set("J_naturality", d2.is_zero(), arrow_violations("J_naturality", d2, lhs.dom))
    check_pentagon(L, rep)
    return rep


# ---------------------------------------------------------------------
# central objects

def central_defects(op, e):
    ev = Mat.column(e)
    Iu, Iw = Mat.identity(op.u), Mat.identity(op.w)
    return {
        "left_obj": op.m_uu @ kron(ev, Iu),
        "right_obj": op.m_uu @ kron(Iu, ev),
        "left_arr": op.m_uw @ kron(ev, Iw),
        "right_arr": op.m_wu @ kron(Iw, ev),
    }


def check_central(L, e):
    op = L.bracket if isinstance(L, Leibniz2Algebra) else L
    if len(e) != op.u:
        raise ShapeError("central candidate has the wrong length")
    return all(m.is_zero() for m in central_defects(op, e).values())


# ---------------------------------------------------------------------
# flat Leibniz algebras

@dataclass(frozen=True, eq=False)
class FlatLeibniz:
    dim: int
    mu: Mat
    central: tuple = None

    def leibniz_defect(self):
        n, mu = self.dim, self.mu
        I = Mat.identity(n)
        left = mu @ kron(mu, I)
        right = left @ permute_factors([n] * 3, [0, 2, 1]) + mu @ kron(I, mu)
        return left - right

    def is_leibniz(self):
        return self.leibniz_defect().is_zero()

    def is_central(self, e):
        ev, I = Mat.column(e), Mat.identity(self.dim)
        return (self.mu @ kron(ev, I)).is_zero() and (self.mu @ kron(I, ev)).is_zero()


def decategorify_leibniz(L, e=None):
    from .twovec import decategorify_space
    n, proj, section = decategorify_space(L.space)
    mu = proj @ L.bracket.m_uu @ kron(section, section)
    ebar = None
    if e is not None:
        ebar = tuple((proj @ Mat.column(e)).col_vector()) if n else ()
    return FlatLeibniz(n, mu, ebar)


# ---------------------------------------------------------------------
# example constructions

def example_omega(g_mu, e, omega):
    """Discrete g with a skew invariant form gives l3(x,y,z) = ω([x,y],z) on W = K."""
    n = g_mu.rows
    if g_mu.shape != (n, n * n) or omega.shape != (n, n):
        raise ShapeError("structure constants or form have the wrong shape")
    g = FlatLeibniz(n, g_mu)
    if not g.is_leibniz():
        raise StructureError("structure constants violate the Leibniz identity")
    if not g.is_central(e):
        raise StructureError("the given element is not central")
    if not (omega + omega.T).is_zero():
        raise StructureError("form is not skew")
    basis = [Mat.unit(n, 1, i, 0) for i in range(n)]
    for x, y, z in product(range(n), repeat=3):
        lhs = (g_mu @ kron(basis[x], basis[y])).T @ omega @ basis[z]
        br = g_mu @ (kron(basis[x], basis[z]) + kron(basis[z], basis[x]))
        rhs = basis[y].T @ omega @ br
        if lhs != rhs:
            raise StructureError(f"form is not invariant at basis triple {(x, y, z)}")
    V = TwoVec(Mat.zeros(n, 1))
    op = BilinearOp(V, g_mu, Mat.zeros(1, n), Mat.zeros(1, n))
    # l3 = ω(mu(x⊗y), z) = vec(ω)^T (mu ⊗ I) in row form
    omega_row = Mat.from_rows([[omega[i, j] for i in range(n) for j in range(n)]])
    l3 = omega_row @ kron(g_mu, Mat.identity(n))
    return Leibniz2Algebra(V, op, l3), tuple(e)


def _embed(u):
    """U -> K⊕U and its retraction, K coordinate first."""
    E = vstack(Mat.zeros(1, u), Mat.identity(u))
    return E, E.T


def trivial_central_extension(L):
    """K⊕L: the extra K coordinate is a central object with no arrows."""
    u, w = L.u, L.w
    E, P = _embed(u)
    V = TwoVec(vstack(Mat.zeros(1, w), L.space.d))
    Iw = Mat.identity(w)
    op = L.bracket
    new = BilinearOp(V, E @ op.m_uu @ kron(P, P), op.m_wu @ kron(Iw, P), op.m_uw @ kron(P, Iw))
    l3 = L.l3 @ kron(P, P, P)
    e = (1,) + (0,) * u
    return Leibniz2Algebra(V, new, l3), e


def leibniz_from_flat(mu, central=None):
    """A Leibniz algebra as a Leibniz 2-algebra with no arrows."""
    n = mu.rows
    V = TwoVec(Mat.zeros(n, 0))
    op = BilinearOp(V, mu, Mat.zeros(0, 0), Mat.zeros(0, 0))
    return Leibniz2Algebra(V, op, Mat.zeros(0, n ** 3))
