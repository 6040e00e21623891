"""2-vector spaces as 2-term complexes d: W -> U.

Objects live in U.  A morphism is a pair (src, arr) with src in U and
arr in W; its target is src + d(arr).  Linear functors between tensor
powers are chain maps, linear natural transformations are homotopies.

The n-fold tensor power keeps only the degree <= 1 part of the tensor
complex: objects U^n, arrows the direct sum over slots i of
U^(i-1) ⊗ W ⊗ U^(n-i).
"""

from dataclasses import dataclass
from functools import cached_property

from .ratmat import (Mat, ShapeError, block_matrix, coker_projection, hstack,
                     kron, kron_id, permute_factors, to_rat, vstack)


class ComposabilityError(ValueError):
    pass


class StructureError(ValueError):
    """Structure data violates a required identity."""


# ---------------------------------------------------------------------
# spaces and morphisms

@dataclass(frozen=True, eq=False)
class TwoVec:
    d: Mat

    @property
    def dim_obj(self):
        return self.d.rows

    @property
    def dim_arr(self):
        return self.d.cols

    def __eq__(self, other):
        return isinstance(other, TwoVec) and self.d == other.d

    def __hash__(self):
        return hash(self.d)

    # s, t, iota as block matrices over U ⊕ W
    @property
    def source_map(self):
        return hstack(Mat.identity(self.dim_obj), Mat.zeros(self.dim_obj, self.dim_arr))

    @property
    def target_map(self):
        return hstack(Mat.identity(self.dim_obj), self.d)

    @property
    def unit_map(self):
        return vstack(Mat.identity(self.dim_obj), Mat.zeros(self.dim_arr, self.dim_obj))


def make_two_vec(d):
    return TwoVec(d)


def ground_space():
    """The ground field as a discrete 2-vector space (U = K, W = 0)."""
    return TwoVec(Mat.zeros(1, 0))


@dataclass(frozen=True)
class Mor:
    space: TwoVec
    src: tuple
    arr: tuple

    def __post_init__(self):
        object.__setattr__(self, "src", tuple(to_rat(x) for x in self.src))
        object.__setattr__(self, "arr", tuple(to_rat(x) for x in self.arr))
        if len(self.src) != self.space.dim_obj or len(self.arr) != self.space.dim_arr:
            raise ShapeError("morphism does not fit its space")

    @property
    def target(self):
        dw = self.space.d @ Mat.column(self.arr) if self.arr else None
        if dw is None:
            return self.src
        return tuple(a + b for a, b in zip(self.src, dw.col_vector()))


def identity_mor(space, u):
    return Mor(space, tuple(u), (0,) * space.dim_arr)


def mor_compose(f, g):
    """g after f.  Requires target(f) = src(g)."""
    if f.space != g.space:
        raise ComposabilityError("morphisms live in different spaces")
    if f.target != g.src:
        raise ComposabilityError("target of the first morphism is not the source of the second")
    return Mor(f.space, f.src, tuple(a + b for a, b in zip(f.arr, g.arr)))


def mor_invert(f):
    return Mor(f.space, f.target, tuple(-a for a in f.arr))


def mor_add(f, g):
    return Mor(f.space, tuple(a + b for a, b in zip(f.src, g.src)),
               tuple(a + b for a, b in zip(f.arr, g.arr)))


# ---------------------------------------------------------------------
# tensor powers

@dataclass(frozen=True, eq=False)
class TensorCtx:
    base: TwoVec
    strands: int

    def __post_init__(self):
        if self.strands < 0:
            raise ValueError("strand count must be non-negative")

    def __eq__(self, other):
        return (isinstance(other, TensorCtx) and self.strands == other.strands
                and self.base == other.base)

    def __hash__(self):
        return hash((self.base, self.strands))

    @property
    def u(self):
        return self.base.dim_obj

    @property
    def w(self):
        return self.base.dim_arr

    @property
    def obj_dim(self):
        return self.u ** self.strands

    @property
    def slot_dim(self):
        return self.u ** (self.strands - 1) * self.w if self.strands else 0

    @property
    def arr_dim(self):
        return self.strands * self.slot_dim

    def slot_factors(self, i):
        """Factor dimensions of slot i (1-based)."""
        n = self.strands
        return [self.u] * (i - 1) + [self.w] + [self.u] * (n - i)

    def slot_offset(self, i):
        return (i - 1) * self.slot_dim

    @cached_property
    def d_n(self):
        if self.strands == 0:
            return Mat.zeros(1, 0)
        n, u = self.strands, self.u
        blocks = [kron_id(u ** (i - 1), self.base.d, u ** (n - i)) for i in range(1, n + 1)]
        return hstack(*blocks)

    def slot_block(self, m, i, j, cod=None):
        """Block of an arrow-level matrix: rows in slot i of cod, cols in slot j of self."""
        cod = cod or self
        r0 = cod.slot_offset(i)
        c0 = self.slot_offset(j)
        return m.block(r0, r0 + cod.slot_dim, c0, c0 + self.slot_dim)


def tensor_power(V, n):
    return TensorCtx(V, n)


# ---------------------------------------------------------------------
# chain maps

@dataclass(frozen=True, eq=False)
class ChainMap:
    dom: TensorCtx
    cod: TensorCtx
    f0: Mat
    fw: Mat

    def __post_init__(self):
        if self.f0.shape != (self.cod.obj_dim, self.dom.obj_dim):
            raise ShapeError(f"f0 has shape {self.f0.shape}, expected "
                             f"{(self.cod.obj_dim, self.dom.obj_dim)}")
        if self.fw.shape != (self.cod.arr_dim, self.dom.arr_dim):
            raise ShapeError(f"fw has shape {self.fw.shape}, expected "
                             f"{(self.cod.arr_dim, self.dom.arr_dim)}")

    def chain_defect(self):
        return self.f0 @ self.dom.d_n - self.cod.d_n @ self.fw

    def is_valid(self):
        return self.chain_defect().is_zero()

    def validate(self, what="chain map"):
        if not self.is_valid():
            raise StructureError(f"{what} does not commute with d")
        return self

    def __eq__(self, other):
        return (isinstance(other, ChainMap) and self.dom == other.dom and self.cod == other.cod
                and self.f0 == other.f0 and self.fw == other.fw)

    __hash__ = None

    def __add__(self, other):
        _same_ends(self, other)
        return ChainMap(self.dom, self.cod, self.f0 + other.f0, self.fw + other.fw)

    def __sub__(self, other):
        _same_ends(self, other)
        return ChainMap(self.dom, self.cod, self.f0 - other.f0, self.fw - other.fw)

    def __neg__(self):
        return ChainMap(self.dom, self.cod, -self.f0, -self.fw)

    def scale(self, k):
        return ChainMap(self.dom, self.cod, self.f0.scale(k), self.fw.scale(k))

    def apply_mor(self, src, arr):
        """Image of the morphism (src, arr) under the functor."""
        s = self.f0 @ Mat.column(src)
        a = self.fw @ Mat.column(arr) if self.dom.arr_dim else Mat.zeros(self.cod.arr_dim, 1)
        return s.col_vector(), a.col_vector()


def _same_ends(f, g):
    if f.dom != g.dom or f.cod != g.cod:
        raise ComposabilityError("chain maps have different domains or codomains")


def identity_chain(ctx):
    return ChainMap(ctx, ctx, Mat.identity(ctx.obj_dim), Mat.identity(ctx.arr_dim))


def zero_chain(dom, cod):
    return ChainMap(dom, cod, Mat.zeros(cod.obj_dim, dom.obj_dim), Mat.zeros(cod.arr_dim, dom.arr_dim))


def compose_chain(F, G):
    """G after F (F applied first)."""
    if F.cod != G.dom:
        raise ComposabilityError("codomain of F is not the domain of G")
    return ChainMap(F.dom, G.cod, G.f0 @ F.f0, G.fw @ F.fw)


def compose_word(*maps):
    """Compose a written word: the rightmost factor acts first."""
    if not maps:
        raise ValueError("empty word")
    out = maps[-1]
    for F in reversed(maps[:-1]):
        out = compose_chain(out, F)
    return out


def lift_chain_map(F, pos, n):
    """F acting on strands pos..pos+k-1 of an n-strand tensor power."""
    k, m = F.dom.strands, F.cod.strands
    if F.dom.base != F.cod.base:
        raise ShapeError("lifting needs a common base space")
    if pos < 1 or pos + k - 1 > n:
        raise ShapeError(f"window {pos}..{pos + k - 1} outside 1..{n}")
    V = F.dom.base
    u, w = V.dim_obj, V.dim_arr
    dom, cod = TensorCtx(V, n), TensorCtx(V, n - k + m)
    left, right = u ** (pos - 1), u ** (n - pos - k + 1)
    f0 = kron_id(left, F.f0, right)
    blocks = {}
    for j in range(1, n + 1):
        if j < pos:
            blocks[(j - 1, j - 1)] = kron_id(u ** (j - 1) * w * u ** (pos - 1 - j), F.f0, right)
        elif j >= pos + k:
            blocks[(j - k + m - 1, j - 1)] = kron_id(left, F.f0, u ** (j - pos - k) * w * u ** (n - j))
        else:
            jj = j - pos + 1
            for ii in range(1, m + 1):
                b = F.dom.slot_block(F.fw, ii, jj, F.cod)
                blocks[(pos - 1 + ii - 1, j - 1)] = kron_id(left, b, right)
    fw = block_matrix(blocks, [cod.slot_dim] * cod.strands, [dom.slot_dim] * n)
    return ChainMap(dom, cod, f0, fw)


def permute_chain_map(V, perm):
    """Strand permutation; output strand i carries input strand perm[i]."""
    n = len(perm)
    ctx = TensorCtx(V, n)
    u = V.dim_obj
    f0 = permute_factors([u] * n, perm)
    blocks = {}
    for i in range(n):
        j = perm[i]
        blocks[(i, j)] = permute_factors(ctx.slot_factors(j + 1), perm)
    fw = block_matrix(blocks, [ctx.slot_dim] * n, [ctx.slot_dim] * n)
    return ChainMap(ctx, ctx, f0, fw)


def swap_chain_map(V, pos, n):
    if pos < 1 or pos + 1 > n:
        raise ShapeError("swap position out of range")
    perm = list(range(n))
    perm[pos - 1], perm[pos] = perm[pos], perm[pos - 1]
    return permute_chain_map(V, perm)


# ---------------------------------------------------------------------
# homotopies

@dataclass(frozen=True, eq=False)
class Homotopy:
    frm: ChainMap
    to: ChainMap
    h: Mat

    def __post_init__(self):
        _same_ends(self.frm, self.to)
        if self.h.shape != (self.frm.cod.arr_dim, self.frm.dom.obj_dim):
            raise ShapeError(f"homotopy matrix has shape {self.h.shape}")

    @property
    def dom(self):
        return self.frm.dom

    @property
    def cod(self):
        return self.frm.cod

    def h1_defect(self):
        return self.cod.d_n @ self.h - (self.to.f0 - self.frm.f0)

    def h2_defect(self):
        return self.h @ self.dom.d_n - (self.to.fw - self.frm.fw)

    def is_valid(self):
        return self.h1_defect().is_zero() and self.h2_defect().is_zero()

    def component(self, k):
        """The component at the k-th basis object, as a morphism of the codomain."""
        src = self.frm.f0.col_vector(k)
        arr = self.h.col_vector(k) if self.h.rows else []
        return src, arr


def zero_homotopy(F):
    return Homotopy(F, F, Mat.zeros(F.cod.arr_dim, F.dom.obj_dim))


def inverse_homotopy(Y):
    return Homotopy(Y.to, Y.frm, -Y.h)


def whisker(Y, pre=None, post=None):
    """post * Y * pre: apply pre, then Y, then post."""
    frm, to, h = Y.frm, Y.to, Y.h
    if pre is not None:
        frm, to = compose_chain(pre, frm), compose_chain(pre, to)
        h = h @ pre.f0
    if post is not None:
        frm, to = compose_chain(frm, post), compose_chain(to, post)
        h = post.fw @ h
    return Homotopy(frm, to, h)


def vcompose_homotopy(h1, h2):
    """h2 after h1."""
    if h1.to != h2.frm:
        raise ComposabilityError("homotopy endpoints do not match")
    return Homotopy(h1.frm, h2.to, h1.h + h2.h)


def lift_homotopy(Y, pos, n):
    frm = lift_chain_map(Y.frm, pos, n)
    to = lift_chain_map(Y.to, pos, n)
    V = Y.dom.base
    u = V.dim_obj
    k = Y.dom.strands
    m = Y.cod.strands
    left, right = u ** (pos - 1), u ** (n - pos - k + 1)
    cod = frm.cod
    blocks = {}
    for ii in range(1, m + 1):
        r0 = Y.cod.slot_offset(ii)
        b = Y.h.block(r0, r0 + Y.cod.slot_dim, 0, Y.h.cols)
        blocks[(pos - 1 + ii - 1, 0)] = kron_id(left, b, right)
    h = block_matrix(blocks, [cod.slot_dim] * cod.strands, [frm.dom.obj_dim])
    return Homotopy(frm, to, h)


# ---------------------------------------------------------------------

def decategorify_space(V):
    """Isomorphism classes of objects: U / im d."""
    proj, section = coker_projection(V.d)
    return proj.rows, proj, section


# ---------------------------------------------------------------------
# morphism families
#
# A family is one morphism per basis tensor of an index space, stored
# column-wise.  Edges of coherence diagrams are built as families so
# that Sweedler legs and rebracketings are plain index maps.

@dataclass(frozen=True, eq=False)
class MorFamily:
    ctx: TensorCtx
    src: Mat
    arr: Mat

    def __post_init__(self):
        if self.src.rows != self.ctx.obj_dim or self.arr.rows != self.ctx.arr_dim:
            raise ShapeError("family rows do not match its tensor context")
        if self.src.cols != self.arr.cols:
            raise ShapeError("family source and arrow parts index different sets")

    @property
    def size(self):
        return self.src.cols

    @property
    def target(self):
        return self.src + self.ctx.d_n @ self.arr

    def reindex(self, m):
        return MorFamily(self.ctx, self.src @ m, self.arr @ m)

    def __add__(self, other):
        return MorFamily(self.ctx, self.src + other.src, self.arr + other.arr)

    def mor(self, k):
        if self.ctx.strands != 1:
            raise ShapeError("single morphisms are only extracted on one strand")
        arr = self.arr.col_vector(k) if self.arr.rows else []
        return Mor(self.ctx.base, self.src.col_vector(k), arr)


def identity_family(ctx, objects):
    return MorFamily(ctx, objects, Mat.zeros(ctx.arr_dim, objects.cols))


def apply_chain(F, fam):
    if fam.ctx != F.dom:
        raise ComposabilityError("family does not live in the functor's domain")
    return MorFamily(F.cod, F.f0 @ fam.src, F.fw @ fam.arr)


def tensor_families(f, g):
    """f ⊗ g, indexed by pairs; arrows via (f ⊗ id_t(g)) ∘ (id_s(f) ⊗ g)."""
    a, b = f.ctx.strands, g.ctx.strands
    ctx = TensorCtx(f.ctx.base, a + b)
    tg = g.target
    parts = []
    for i in range(1, a + 1):
        r0 = f.ctx.slot_offset(i)
        parts.append(kron(f.arr.block(r0, r0 + f.ctx.slot_dim, 0, f.size), tg))
    for j in range(1, b + 1):
        r0 = g.ctx.slot_offset(j)
        parts.append(kron(f.src, g.arr.block(r0, r0 + g.ctx.slot_dim, 0, g.size)))
    n = f.size * g.size
    arr = vstack(*parts) if parts else Mat.zeros(0, n)
    return MorFamily(ctx, kron(f.src, g.src), arr)
