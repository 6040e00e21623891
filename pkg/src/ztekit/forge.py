"""Instance generation.

For fixed lower data the Jacobiator and distributor conditions are
linear in l3 and r.  The solvers here write those conditions out in
expanded component form (independently of the diagram-composing
checkers) and solve them exactly.  Samplers build brackets that satisfy
the lower conditions by construction, then draw l3 or r from the
solution space and hide the construction under a random change of basis.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .leibniz2 import BilinearOp, Leibniz2Algebra, check_central, check_leibniz2
from .ratmat import (Mat, coker_projection, hstack, inverse, kernel_basis, kron,
                     permute_factors, permute_rows, regroup, solve, vstack)
from .twovec import StructureError, TwoVec


class SamplingError(RuntimeError):
    pass


# ---------------------------------------------------------------------
# affine solution spaces

@dataclass
class AffineSpace:
    particular: Mat = None
    kernel: list = field(default_factory=list)

    @property
    def empty(self):
        return self.particular is None

    def member(self, coeffs):
        out = self.particular
        for c, k in zip(coeffs, self.kernel):
            if c:
                out = out + k.scale(c)
        return out

    def contains(self, m, residual):
        return all(r.is_zero() for r in residual(m))


def _flatten(mats):
    out = []
    for m in mats:
        out.extend(m.entries)
    return out


class LinearSystem:
    """Blocks of the form const + Σ terms, each term linear in X.

    Term shapes (X is rows x cols):
      ("plain", A, B)     A·X·B      (None stands for an identity)
      ("left", A, T, B)   A·(X⊗T)·B
      ("right", A, T, B)  A·(T⊗X)·B
    """

    def __init__(self, rows, cols):
        self.rows, self.cols = rows, cols
        self.blocks = []

    def block(self, const, *terms):
        self.blocks.append((const, terms))

    def _apply(self, x, term):
        kind, A, *rest = term
        if kind == "plain":
            B = rest[0]
            out = x if A is None else A @ x
            return out if B is None else out @ B
        T, B = rest
        out = kron(x, T) if kind == "left" else kron(T, x)
        return (out if A is None else A @ out) @ B

    def __call__(self, x):
        out = []
        for const, terms in self.blocks:
            acc = const
            for t in terms:
                acc = acc + self._apply(x, t)
            out.append(acc)
        return out

    def _term_jacobian(self, term, p, N):
        xr, xc = self.rows, self.cols
        kind, A, *rest = term
        if kind == "plain":
            B = rest[0]
            A = Mat.identity(xr) if A is None else A
            B = Mat.identity(xc) if B is None else B
            return kron(A, B.T)
        T, B = rest
        tr, tc = T.shape
        if A is None:
            A = Mat.identity(xr * tr)
        if kind == "left":
            AT = regroup(A, [p, xr, tr], [1, 0, 2], 2) @ T
            B1 = regroup(B, [xc, tc, N], [1, 0, 2], 1)
        else:
            AT = regroup(A, [p, tr, xr], [2, 0, 1], 2) @ T
            B1 = regroup(B, [tc, xc, N], [0, 1, 2], 1)
        return regroup(AT @ B1, [xr, p, xc, N], [1, 3, 0, 2], 2)

    def jacobian(self):
        """Coefficient matrix (all blocks stacked, row-major) and constant."""
        mats, consts = [], []
        for const, terms in self.blocks:
            p, N = const.shape
            J = Mat.zeros(p * N, self.rows * self.cols)
            for t in terms:
                J = J + self._term_jacobian(t, p, N)
            mats.append(J)
            consts.append(Mat.column(const.entries))
        return vstack(*mats), vstack(*consts)


def solve_affine(residual, rows, cols):
    """All X (rows x cols) with residual(X) = 0, residual affine in X.

    A LinearSystem is solved from its assembled coefficients; any other
    callable is linearised by probing with unit matrices.
    """
    n = rows * cols
    if isinstance(residual, LinearSystem):
        A, const = residual.jacobian()
        base = list(const.col_vector())
    else:
        base = _flatten(residual(Mat.zeros(rows, cols)))
        items = {}
        for k in range(n):
            i, j = divmod(k, cols)
            probe = _flatten(residual(Mat.unit(rows, cols, i, j)))
            for r, (a, b) in enumerate(zip(probe, base)):
                if a != b:
                    items[(r, k)] = a - b
        A = Mat.from_dict(len(base), n, items)
    if n == 0:
        ok = all(b == 0 for b in base)
        return AffineSpace(Mat.zeros(rows, cols) if ok else None, [])
    if not base:
        return AffineSpace(Mat.zeros(rows, cols), [Mat.unit(rows, cols, *divmod(k, cols)) for k in range(n)])
    x = solve(A, Mat.column([-b for b in base]))
    if x is None:
        return AffineSpace(None, [])

    def reshape(vec):
        return Mat.from_entries(rows, cols, list(vec))

    return AffineSpace(reshape(x.col_vector()), [reshape(v) for v in kernel_basis(A)])


# ---------------------------------------------------------------------
# Jacobiator conditions in expanded form

def l3_residual(space, op, extra=()):
    """Linear system in l3.  ``extra`` lists matrices E with l3·E = 0 imposed."""
    d = space.d
    u, w = space.dim_obj, space.dim_arr
    m, mwu, muw = op.m_uu, op.m_wu, op.m_uw
    I, Iw = Mat.identity(u), Mat.identity(w)
    lhs0 = m @ kron(m, I)
    rhs0 = lhs0 @ permute_factors([u] * 3, [0, 2, 1]) + m @ kron(I, m)
    d3 = hstack(kron(d, I, I), kron(I, d, I), kron(I, I, d))
    lhs_w = hstack(mwu @ kron(mwu, I), mwu @ kron(muw, I), muw @ kron(m, Iw))
    rhs_w = (hstack(mwu @ kron(mwu, I) @ permute_factors([w, u, u], [0, 2, 1]),
                    muw @ kron(m, Iw) @ permute_factors([u, w, u], [0, 2, 1]),
                    mwu @ kron(muw, I) @ permute_factors([u, u, w], [0, 2, 1]))
             + hstack(mwu @ kron(Iw, m), muw @ kron(I, mwu), muw @ kron(I, muw)))
    p4 = lambda perm: permute_factors([u] * 4, perm)
    Iu = Mat.identity(u ** 4)

    sys_ = LinearSystem(w, u ** 3)
    sys_.block(lhs0 - rhs0, ("plain", d, None))
    sys_.block(lhs_w - rhs_w, ("plain", None, d3))
    # a - b, both sides of the coherence law on four objects
    sys_.block(Mat.zeros(w, u ** 4),
               ("plain", None, kron(m, I, I)),
               ("left", mwu, I, p4([0, 1, 3, 2])),
               ("plain", None, kron(m, I, I) @ p4([0, 3, 1, 2])),
               ("plain", None, kron(I, m, I) @ p4([0, 1, 3, 2])),
               ("plain", None, kron(I, I, m)),
               ("left", -mwu, I, Iu),
               ("plain", None, -(kron(m, I, I) @ p4([0, 2, 1, 3]))),
               ("plain", None, -kron(I, m, I)),
               ("left", -mwu, I, p4([0, 2, 3, 1])),
               ("right", -muw, I, Iu))
    for E in extra or ():
        sys_.block(Mat.zeros(w, E.cols), ("plain", None, E))
    return sys_


def solve_l3(space, bracket, extra=()):
    """Affine space of all l3 completing the bracket to a Leibniz 2-algebra."""
    u, w = space.dim_obj, space.dim_arr
    return solve_affine(l3_residual(space, bracket, extra), w, u ** 3)


# ---------------------------------------------------------------------
# distributor conditions in expanded form

def r_residual(space, delta, eps, lhd, lhd_inv=None, extra=()):
    """Linear system in r for fixed (Δ, ε, ◁).  ``extra`` as for l3_residual."""
    d = space.d
    u, w = space.dim_obj, space.dim_arr
    m, mwu, muw = lhd.m_uu, lhd.m_wu, lhd.m_uw
    d0, dw = delta.d0, delta.dw
    I, Iw = Mat.identity(u), Mat.identity(w)
    p = permute_factors
    S0 = m @ kron(m, I)
    T0 = m @ kron(m, m) @ p([u] * 4, [0, 2, 1, 3]) @ kron(I, I, d0)
    d3 = hstack(kron(d, I, I), kron(I, d, I), kron(I, I, d))
    S_w = hstack(mwu @ kron(mwu, I), mwu @ kron(muw, I), muw @ kron(m, Iw))
    top, bot = dw.block(0, w * u, 0, w), dw.block(w * u, 2 * w * u, 0, w)
    T_w = hstack(
        mwu @ kron(mwu, m) @ p([w, u, u, u], [0, 2, 1, 3]) @ kron(Iw, I, d0),
        muw @ kron(m, mwu) @ p([u, w, u, u], [0, 2, 1, 3]) @ kron(I, Iw, d0),
        mwu @ kron(muw, m) @ p([u, u, w, u], [0, 2, 1, 3]) @ kron(I, I, top)
        + muw @ kron(m, muw) @ p([u, u, u, w], [0, 2, 1, 3]) @ kron(I, I, bot))
    spread3 = kron(m, m) @ p([u] * 4, [0, 2, 1, 3]) @ kron(I, I, d0)
    legs6 = permute_rows(kron(I, I, d0, d0), [u] * 6, [0, 2, 4, 1, 3, 5])
    legs5 = permute_rows(kron(I, I, I, d0), [u] * 5, [0, 1, 3, 2, 4])
    legs_w = permute_rows(kron(I, I, I, kron(d0, I) @ d0), [u] * 6, [0, 3, 1, 4, 2, 5])

    sys_ = LinearSystem(w, u ** 3)
    sys_.block(S0 - T0, ("plain", d, None))
    sys_.block(S_w - T_w, ("plain", None, d3))
    # hexagon: left composite minus right composite
    sys_.block(Mat.zeros(w, u ** 4),
               ("left", mwu, I, Mat.identity(u ** 4)),
               ("plain", None, kron(spread3, I)),
               ("left", mwu, T0, legs6),
               ("right", muw, S0, legs6),
               ("plain", None, -kron(m, I, I)),
               ("left", -mwu, m, legs5),
               ("plain", None, -(kron(m, m, m) @ legs_w)))
    for E in extra or ():
        sys_.block(Mat.zeros(w, E.cols), ("plain", None, E))
    return sys_


def solve_r(space, delta, eps, lhd, lhd_inv=None, extra=()):
    """Affine space of all distributors r for fixed (Δ, ε, ◁)."""
    u, w = space.dim_obj, space.dim_arr
    return solve_affine(r_residual(space, delta, eps, lhd, lhd_inv, extra), w, u ** 3)


def unit_slot_constraints(g):
    """Matrices E with r·E = 0 meaning r vanishes once any argument is g."""
    gv, I = Mat.column(g), Mat.identity(len(g))
    return [kron(gv, I, I), kron(I, gv, I), kron(I, I, gv)]


# ---------------------------------------------------------------------
# random helpers

def _rng(seed, *tags):
    return random.Random(":".join(str(t) for t in (seed,) + tags))


def _rand_rat(rng, bound):
    num = rng.randint(-bound, bound)
    den = 1 if rng.random() < 0.7 else rng.randint(1, bound)
    return Fraction(num, den)


def _rand_mat(rng, rows, cols, bound, density=0.6):
    return Mat.from_entries(rows, cols, [_rand_rat(rng, bound) if rng.random() < density else 0
                                         for _ in range(rows * cols)])


def _unimodular(rng, n, bound=1):
    """Random integer matrix with determinant ±1, and its inverse."""
    lower = Mat.from_entries(n, n, [1 if i == j else (rng.randint(-bound, bound) if j < i else 0)
                                    for i in range(n) for j in range(n)])
    upper = Mat.from_entries(n, n, [rng.choice((1, -1)) if i == j else
                                    (rng.randint(-bound, bound) if j > i else 0)
                                    for i in range(n) for j in range(n)])
    perm = list(range(n))
    rng.shuffle(perm)
    pm = Mat.from_dict(n, n, {(i, perm[i]): 1 for i in range(n)})
    P = pm @ lower @ upper
    return P, inverse(P)


def _combo(rng, space, bound):
    return [rng.randint(-bound, bound) for _ in space.kernel]


# ---------------------------------------------------------------------
# changes of basis

def transform_bilinear(op, V, P, Pi, Q, Qi):
    return BilinearOp(V, P @ op.m_uu @ kron(Pi, Pi), Q @ op.m_wu @ kron(Qi, Pi),
                      Q @ op.m_uw @ kron(Pi, Qi))


def transform_leibniz(L, P, Pi, Q, Qi):
    V = TwoVec(P @ L.space.d @ Qi)
    return Leibniz2Algebra(V, transform_bilinear(L.bracket, V, P, Pi, Q, Qi),
                           Q @ L.l3 @ kron(Pi, Pi, Pi))


def transform_rack(R, P, Pi, Q, Qi):
    from .rack2 import Coproduct, Linear2Rack
    from .ratmat import block_matrix
    u, w = R.u, R.w
    V = TwoVec(P @ R.space.d @ Qi)
    arrow = block_matrix({(0, 0): kron(Q, P), (1, 1): kron(P, Q)}, [w * u] * 2, [w * u] * 2)
    delta = Coproduct(kron(P, P) @ R.delta.d0 @ Pi, arrow @ R.delta.dw @ Qi)
    return Linear2Rack(V, delta, R.eps @ Pi,
                       transform_bilinear(R.lhd, V, P, Pi, Q, Qi),
                       transform_bilinear(R.lhd_inv, V, P, Pi, Q, Qi),
                       Q @ R.r @ kron(Pi, Pi, Pi))


def _apply_vec(P, v):
    return tuple((P @ Mat.column(v)).col_vector())


# ---------------------------------------------------------------------
# central Leibniz 2-algebras

@dataclass
class CentralSample:
    L: Leibniz2Algebra
    e: tuple
    phi: Mat = None            # functional with phi(e) = 1 cutting out a complement
    seed: object = None
    notes: dict = field(default_factory=dict)

    @property
    def sigma0(self):
        """Section of U -> U/<e> onto ker(phi)."""
        if self.phi is None:
            return None
        ev = Mat.column(self.e)
        _, sec = coker_projection(ev)
        return (Mat.identity(len(self.e)) - ev @ self.phi) @ sec


def _layout(rng, u, w, split):
    """Sizes of X, C, Z and of I = im d inside Z."""
    for _ in range(100):
        dz = rng.randint(1, u)
        rest = u - dz
        dx = rng.randint(1, rest) if rest else 0
        dc = rest - dx
        cap = min(w, dz - (1 if split else 0))
        if cap < 0:
            continue
        di = rng.randint(0, cap)
        return dx, dc, dz, di
    raise SamplingError("no admissible layout")


def sample_central_leibniz(seed, u, w, bound=3, split=None, max_attempts=40):
    """Random central Leibniz 2-algebra with dim U = u, dim W = w.

    ``split`` is None, "vector" (a complement of <e> containing im d is
    recorded) or "leibniz" (the complement also contains every bracket
    and l3 kills e).
    """
    if u < 1:
        raise SamplingError("a central object needs dim U >= 1")
    failures = []
    for attempt in range(max_attempts):
        rng = _rng(seed, u, w, bound, split, attempt)
        try:
            out = _sample_once(rng, u, w, bound, split)
        except SamplingError as exc:
            failures.append(str(exc))
            continue
        out.seed = seed
        out.notes["attempt"] = attempt
        return out
    raise SamplingError(f"no instance after {max_attempts} attempts: {failures[-3:]}")


def _sample_once(rng, u, w, bound, split):
    dx, dc, dz, di = _layout(rng, u, w, split)
    X = list(range(dx))
    C = list(range(dx, dx + dc))
    Z = list(range(dx + dc, u))
    Ivec = Z[:di]
    free_z = Z[di:]
    # central object
    if split == "leibniz":
        e_coord = free_z[-1]
        e = [0] * u
        e[e_coord] = 1
        hit_z = [z for z in Z if z != e_coord]
    else:
        e = [0] * u
        while all(v == 0 for v in e) or (split and all(e[z] == 0 for z in free_z)):
            e = [0] * u
            for z in Z:
                e[z] = rng.randint(-bound, bound)
        hit_z = Z
    # d: first di arrows onto I, the rest into the kernel
    d = Mat.from_dict(u, w, {(Ivec[j], j): 1 for j in range(di)})
    K = list(range(di, w))

    items = {}
    targets_xx = C + hit_z
    for a in X:
        for b in X:
            for t in targets_xx:
                if rng.random() < 0.5:
                    items[(t, a * u + b)] = _rand_rat(rng, bound)
    A = Mat.from_dict(u, u * u, items)

    # β: C⊗X -> Z, γ: X⊗C -> Z chosen so the Leibnizator lands in I
    slots = [(z, c * u + x) for z in hit_z for c in C for x in X]
    slots += [(z, x * u + c) for z in hit_z for x in X for c in C]
    mod_i = [z for z in Z if z not in Ivec]

    def leibnizator(m):
        I = Mat.identity(u)
        lhs = m @ kron(m, I)
        return lhs - lhs @ permute_factors([u] * 3, [0, 2, 1]) - m @ kron(I, m)

    def constraint(vec):
        m = A + Mat.from_dict(u, u * u, {s: v for s, v in zip(slots, vec) if v})
        Lz = leibnizator(m)
        return [Lz[z, k] for z in mod_i for k in range(u ** 3)]

    if slots:
        base = constraint([0] * len(slots))
        rows = {}
        for k in range(len(slots)):
            probe = constraint([1 if j == k else 0 for j in range(len(slots))])
            for r, (a, b) in enumerate(zip(probe, base)):
                if a != b:
                    rows[(r, k)] = a - b
        sysm = Mat.from_dict(len(base), len(slots), rows)
        sol = solve(sysm, Mat.column([-b for b in base]))
        if sol is None:
            raise SamplingError("no completion of the bracket")
        vec = sol.col_vector()
        for kv in kernel_basis(sysm):
            c = rng.randint(-bound, bound)
            vec = [a + c * b for a, b in zip(vec, kv)]
        m_uu = A + Mat.from_dict(u, u * u, {s: v for s, v in zip(slots, vec) if v})
    else:
        m_uu = A
    lz = leibnizator(m_uu)
    for z in mod_i:
        if any(lz[z, k] for k in range(u ** 3)):
            raise SamplingError("Leibnizator outside im d")

    V = TwoVec(d)
    m_wu = Mat.zeros(w, w * u)
    m_uw = Mat.zeros(w, u * w)
    if K and di and rng.random() < 0.6:
        m_wu = Mat.from_dict(w, w * u, {(k, j * u + x): _rand_rat(rng, bound)
                                        for k in K for j in range(di) for x in X
                                        if rng.random() < 0.5})
        m_uw = Mat.from_dict(w, u * w, {(k, x * w + j): _rand_rat(rng, bound)
                                        for k in K for x in X for j in range(di)
                                        if rng.random() < 0.5})
    extra = None
    if split == "leibniz":
        ev = Mat.column(e)
        I = Mat.identity(u)
        extra = [kron(ev, I, I), kron(I, ev, I), kron(I, I, ev)]
    space = None
    for mw, mu_ in ((m_wu, m_uw), (Mat.zeros(w, w * u), Mat.zeros(w, u * w))):
        op = BilinearOp(V, m_uu, mw, mu_)
        space = solve_l3(V, op, extra)
        if not space.empty:
            break
    if space.empty:
        raise SamplingError("Jacobiator system inconsistent")
    l3 = space.member(_combo(rng, space, 1))
    L = Leibniz2Algebra(V, op, l3)

    phi = None
    if split:
        if split == "leibniz":
            phi_items = {(0, e_coord): 1}
            for x in X:
                if rng.random() < 0.5:
                    phi_items[(0, x)] = rng.randint(-bound, bound)
            phi = Mat.from_dict(1, u, phi_items)
        else:
            vals = [0] * u
            for k in range(u):
                if k not in Ivec:
                    vals[k] = rng.randint(-bound, bound)
            pe = sum(a * b for a, b in zip(vals, e))
            if pe == 0:
                j = next(z for z in free_z if e[z] != 0)
                vals[j] += Fraction(1 - pe, e[j])
                pe = 1
            phi = Mat.row([Fraction(v) / pe for v in vals])

    P, Pi = _unimodular(rng, u)
    Q, Qi = _unimodular(rng, w) if w else (Mat.zeros(0, 0), Mat.zeros(0, 0))
    L2 = transform_leibniz(L, P, Pi, Q, Qi)
    e2 = _apply_vec(P, e)
    phi2 = phi @ Pi if phi is not None else None
    return CentralSample(L2, e2, phi2, notes={"layout": (dx, dc, dz, di),
                                              "arrow_actions": not m_wu.is_zero() or not m_uw.is_zero()})


# ---------------------------------------------------------------------
# linear 2-racks

def sample_linear_2rack(seed, u, w, bound=3, redraw_r=True, normalized=False):
    """Random linear 2-rack: a structured rack with r redrawn from solve_r.

    With ``redraw_r=False`` the distributor of the construction is kept.
    ``normalized`` restricts the redraw to distributors vanishing whenever
    an argument is the group-like unit of the construction.
    """
    from .rack2 import Linear2Rack, rack_from_trivial_extension
    from .split import make_splitting, rack_from_splitting
    rng = _rng(seed, "rack", u, w, bound)
    route = "extension" if u < 2 or rng.random() < 0.5 else "splitting"
    if route == "extension":
        s = sample_central_leibniz(seed, u - 1, w, bound) if u > 1 else None
        if s is None:
            raise SamplingError("need dim U >= 2")
        R = rack_from_trivial_extension(s.L)
        unit = [1] + [0] * (u - 1)
    else:
        s = sample_central_leibniz(seed, u, w, bound, split="vector")
        R = rack_from_splitting(make_splitting(s.L, s.e, s.sigma0))
        unit = list(s.e)
    if redraw_r:
        extra = unit_slot_constraints(unit) if normalized else ()
        space = solve_r(R.space, R.delta, R.eps, R.lhd, R.lhd_inv, extra)
        if space.empty:
            raise SamplingError("distributor system inconsistent")
        r = space.member(_combo(rng, space, 1))
        R = Linear2Rack(R.space, R.delta, R.eps, R.lhd, R.lhd_inv, r)
    P, Pi = _unimodular(rng, u)
    Q, Qi = _unimodular(rng, w) if w else (Mat.zeros(0, 0), Mat.zeros(0, 0))
    return transform_rack(R, P, Pi, Q, Qi), route


def sample(seed, dims, coeff_bound=3, kind="leibniz2"):
    u, w = dims
    if kind == "leibniz2":
        return sample_central_leibniz(seed, u, w, coeff_bound)
    if kind == "rack2":
        return sample_linear_2rack(seed, u, w, coeff_bound)[0]
    raise ValueError(f"unknown sample kind {kind!r}")


# ---------------------------------------------------------------------
# fixtures

def fixture_a():
    """span{x, e} with [x, x] = e and nothing else, no arrows."""
    from .leibniz2 import leibniz_from_flat
    mu = Mat.from_dict(2, 4, {(1, 0): 1})
    return leibniz_from_flat(mu), (0, 1)


def fixture_b():
    V = TwoVec(Mat.zeros(2, 1))
    from .leibniz2 import zero_bilinear
    return Leibniz2Algebra(V, zero_bilinear(V), Mat.zeros(1, 8))


def fixture_c():
    from .leibniz2 import trivial_central_extension
    return trivial_central_extension(fixture_b())


def fixture_d():
    from .rack2 import rack_from_trivial_extension
    return rack_from_trivial_extension(fixture_b())


def fixture_e():
    """FIX-A lifted to W = K, d = 0, zero arrow actions, with l3 != 0."""
    L, e = fixture_a()
    V = TwoVec(Mat.zeros(2, 1))
    op = BilinearOp(V, L.bracket.m_uu, Mat.zeros(1, 2), Mat.zeros(1, 2))
    space = solve_l3(V, op)
    if space.empty:
        raise StructureError("FIX-E: Jacobiator system unexpectedly inconsistent")
    n = len(space.kernel)
    members = (space.member([int(i == k) for i in range(n)]) for k in range(n))
    l3 = next((m for m in members if not m.is_zero()), space.particular)
    return Leibniz2Algebra(V, op, l3), e


def fixture_f():
    from .finrack import z2_z3_conjugation_rack
    return z2_z3_conjugation_rack()


FIXTURES = {"FIX-A": fixture_a, "FIX-B": fixture_b, "FIX-C": fixture_c,
            "FIX-D": fixture_d, "FIX-E": fixture_e, "FIX-F": fixture_f}


def load_fixture(name):
    """Build a named fixture and run its checker."""
    from .rack2 import check_linear_2rack
    obj = FIXTURES[name]()
    if name in ("FIX-A", "FIX-C", "FIX-E"):
        L, e = obj
        rep = check_leibniz2(L)
        ok = rep.passed and check_central(L, e)
    elif name == "FIX-B":
        ok = check_leibniz2(obj).passed
    elif name == "FIX-D":
        ok = check_linear_2rack(obj).passed
    else:
        from .finrack import check_strict_2rack
        X, lhd, lhd_inv = obj
        ok = check_strict_2rack(X, lhd, lhd_inv).passed
    if not ok:
        raise StructureError(f"{name} fails its checker")
    return obj
