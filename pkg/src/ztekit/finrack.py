"""Finite categories, set-level 2-racks and the strict 2-group conjugation rack.

Everything here is decided by enumeration over explicit tables.  Elements
are arbitrary hashable values (strings from JSON, tuples for product
constructions); ``label`` turns them into stable strings for reports.
"""

from dataclasses import dataclass, field
from itertools import product

from .report import Report, Violation
from .twovec import StructureError


def label(x):
    if isinstance(x, tuple):
        return "(" + ",".join(label(v) for v in x) + ")"
    return str(x)


def _v(flag, *where):
    return Violation(flag, tuple(label(w) for w in where), [])


# ---------------------------------------------------------------------
# categories and bifunctors

@dataclass
class FinCat:
    objects: list
    morphisms: list
    src: dict
    tgt: dict
    ident: dict
    comp: dict                 # (g, f) -> g∘f, defined when tgt[f] == src[g]

    def hom(self, a, b):
        return [f for f in self.morphisms if self.src[f] == a and self.tgt[f] == b]

    def composable(self):
        by_src = {}
        for g in self.morphisms:
            by_src.setdefault(self.src[g], []).append(g)
        for f in self.morphisms:
            for g in by_src.get(self.tgt[f], ()):
                yield g, f

    def inverse(self, f):
        for g in self.hom(self.tgt[f], self.src[f]):
            if self.comp[(g, f)] == self.ident[self.src[f]] and self.comp[(f, g)] == self.ident[self.tgt[f]]:
                return g
        return None

    def check(self, rep=None):
        rep = rep or Report("category")
        obs = set(self.objects)
        for flag in ("typed", "total", "unit", "associative"):
            rep.set(flag, True)
        for f in self.morphisms:
            if self.src.get(f) not in obs or self.tgt.get(f) not in obs:
                rep.set("typed", False, [_v("typed", f)])
        for x in self.objects:
            i = self.ident.get(x)
            if i is None or self.src.get(i) != x or self.tgt.get(i) != x:
                rep.set("typed", False, [_v("typed", "identity", x)])
        if not rep.flags["typed"]:
            return rep
        for g, f in self.composable():
            h = self.comp.get((g, f))
            if h is None:
                rep.set("total", False, [_v("total", g, f)])
            elif self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                rep.set("typed", False, [_v("typed", g, f)])
        if not rep.passed:
            return rep
        for f in self.morphisms:
            if self.comp[(f, self.ident[self.src[f]])] != f or self.comp[(self.ident[self.tgt[f]], f)] != f:
                rep.set("unit", False, [_v("unit", f)])
        pairs = list(self.composable())
        after = {}
        for g, f in pairs:
            after.setdefault(f, []).append(g)
        for g, f in pairs:
            for h in after.get(g, ()):
                if self.comp[(h, self.comp[(g, f)])] != self.comp[(self.comp[(h, g)], f)]:
                    rep.set("associative", False, [_v("associative", h, g, f)])
        return rep


def discrete_category(objects):
    objects = list(objects)
    ids = {x: ("id", x) for x in objects}
    mors = list(ids.values())
    return FinCat(objects, mors, {ids[x]: x for x in objects}, {ids[x]: x for x in objects},
                  ids, {(ids[x], ids[x]): ids[x] for x in objects})


def product_category(A, B):
    objects = list(product(A.objects, B.objects))
    mors = list(product(A.morphisms, B.morphisms))
    src = {m: (A.src[m[0]], B.src[m[1]]) for m in mors}
    tgt = {m: (A.tgt[m[0]], B.tgt[m[1]]) for m in mors}
    ident = {o: (A.ident[o[0]], B.ident[o[1]]) for o in objects}
    comp = {}
    for (g1, f1) in A.composable():
        for (g2, f2) in B.composable():
            comp[((g1, g2), (f1, f2))] = (A.comp[(g1, f1)], B.comp[(g2, f2)])
    return FinCat(objects, mors, src, tgt, ident, comp)


@dataclass
class FinBifunctor:
    obj: dict                  # (x, y) -> object
    mor: dict                  # (f, g) -> morphism


def check_bifunctor(X, F, rep, flag="functor"):
    """F : X × X -> X preserves sources, targets, identities and composites."""
    rep.set(flag, True)
    for x, y in product(X.objects, repeat=2):
        if (x, y) not in F.obj:
            rep.set(flag, False, [_v(flag, "missing object", x, y)])
    for f, g in product(X.morphisms, repeat=2):
        h = F.mor.get((f, g))
        if h is None:
            rep.set(flag, False, [_v(flag, "missing morphism", f, g)])
            continue
        if X.src[h] != F.obj.get((X.src[f], X.src[g])) or X.tgt[h] != F.obj.get((X.tgt[f], X.tgt[g])):
            rep.set(flag, False, [_v(flag, "source/target", f, g)])
    if not rep.flags[flag]:
        return rep
    for x, y in product(X.objects, repeat=2):
        if F.mor[(X.ident[x], X.ident[y])] != X.ident[F.obj[(x, y)]]:
            rep.set(flag, False, [_v(flag, "identity", x, y)])
    pairs = list(X.composable())
    for (f2, f1), (g2, g1) in product(pairs, repeat=2):
        lhs = F.mor[(X.comp[(f2, f1)], X.comp[(g2, g1)])]
        rhs = X.comp[(F.mor[(f2, g2)], F.mor[(f1, g1)])]
        if lhs != rhs:
            rep.set(flag, False, [_v(flag, "composite", f2, f1, g2, g1)])
    return rep


# ---------------------------------------------------------------------
# 2-racks

def _check_translations(X, lhd, lhd_inv, rep, flag="invertible"):
    """•◁̃x inverts •◁x on objects and on morphisms f ◁ id_x."""
    rep.set(flag, True)
    for x in X.objects:
        ix = X.ident[x]
        for y in X.objects:
            a, b = lhd_inv.obj.get((lhd.obj[(y, x)], x)), lhd_inv.obj.get((y, x))
            if a != y or b is None or lhd.obj.get((b, x)) != y:
                rep.set(flag, False, [_v(flag, "object", y, x)])
        for f in X.morphisms:
            a, b = lhd_inv.mor.get((lhd.mor[(f, ix)], ix)), lhd_inv.mor.get((f, ix))
            if a != f or b is None or lhd.mor.get((b, ix)) != f:
                rep.set(flag, False, [_v(flag, "morphism", f, x)])


def _check_distributor(X, lhd, R, rep):
    L, Lm, comp, ident = lhd.obj, lhd.mor, X.comp, X.ident
    rep.set("R_typed", True)
    for x, y, z in product(X.objects, repeat=3):
        r = R.get((x, y, z))
        want = (L[(L[(x, y)], z)], L[(L[(x, z)], L[(y, z)])])
        if r is None or (X.src[r], X.tgt[r]) != want:
            rep.set("R_typed", False, [_v("R_typed", x, y, z)])
    if not rep.flags["R_typed"]:
        return
    rep.set("R_natural", True)
    for f, g, h in product(X.morphisms, repeat=3):
        x, y, z = X.src[f], X.src[g], X.src[h]
        x2, y2, z2 = X.tgt[f], X.tgt[g], X.tgt[h]
        lhs = comp[(Lm[(Lm[(f, h)], Lm[(g, h)])], R[(x, y, z)])]
        rhs = comp[(R[(x2, y2, z2)], Lm[(Lm[(f, g)], h)])]
        if lhs != rhs:
            rep.set("R_natural", False, [_v("R_natural", f, g, h)])
    rep.set("distributor", True)
    for x, y, z, w in product(X.objects, repeat=4):
        iw, iz = ident[w], ident[z]
        left = comp[(Lm[(R[(x, z, w)], R[(y, z, w)])],
                     comp[(R[(L[(x, z)], L[(y, z)], w)], Lm[(R[(x, y, z)], iw)])])]
        right = comp[(R[(L[(x, w)], L[(y, w)], L[(z, w)])],
                      comp[(Lm[(R[(x, y, w)], Lm[(iz, iw)])], R[(L[(x, y)], z, w)])])]
        if left != right:
            rep.set("distributor", False, [_v("distributor", x, y, z, w)])


def check_semistrict_2rack(X, lhd, R, lhd_inv):
    rep = Report("semistrict_2rack")
    X.check(rep)
    if not rep.passed:
        return rep
    check_bifunctor(X, lhd, rep, "functor")
    if not rep.flags["functor"]:
        return rep
    _check_translations(X, lhd, lhd_inv, rep)
    _check_distributor(X, lhd, R, rep)
    return rep


def derived_inverse(X, lhd):
    """Invert each •◁x on objects and on morphisms f ◁ id_x, if bijective."""
    obj, mor = {}, {}
    for x in X.objects:
        ix = X.ident[x]
        for y in X.objects:
            obj.setdefault((lhd.obj[(y, x)], x), y)
        for f in X.morphisms:
            mor.setdefault((lhd.mor[(f, ix)], ix), f)
    return FinBifunctor(obj, mor)


def identity_distributor(X, lhd):
    L = lhd.obj
    return {(x, y, z): X.ident[L[(L[(x, y)], z)]] for x, y, z in product(X.objects, repeat=3)}


def is_rack(elements, op):
    """Self-distributivity plus bijective right translations, by exhaustion."""
    elements = list(elements)
    for a, b, c in product(elements, repeat=3):
        if op(op(a, b), c) != op(op(a, c), op(b, c)):
            return False
    for b in elements:
        if len({op(a, b) for a in elements}) != len(elements):
            return False
    return True


def morphism_lhd_inv(X, lhd, lhd_inv, f, g):
    """f ◁̃ g for f: a -> b, g: x -> y.

    Writing k ◁ g = (id ◁ g)∘(k ◁ id_x) gives
    k = ((id_{b◁̃y} ◁ g)^{-1} ∘ f) ◁̃ id_x when that morphism is invertible.
    Returns None when the construction does not apply.
    """
    b, x, y = X.tgt[f], X.src[g], X.tgt[g]
    b_ = lhd_inv.obj.get((b, y))
    if b_ is None:
        return None
    step = lhd.mor[(X.ident[b_], g)]
    inv = X.inverse(step)
    if inv is None or X.tgt[f] != X.src[inv]:
        return None
    return lhd_inv.mor.get((X.comp[(inv, f)], X.ident[x]))


def check_strict_2rack(X, lhd, lhd_inv=None):
    lhd_inv = lhd_inv or derived_inverse(X, lhd)
    rep = check_semistrict_2rack(X, lhd, identity_distributor(X, lhd), lhd_inv)
    rep.kind = "strict_2rack"
    if not rep.passed:
        return rep
    L, Lm = lhd.obj, lhd.mor
    rep.set("objects_rack", is_rack(X.objects, lambda a, b: L[(a, b)]))
    rep.set("morphisms_rack", is_rack(X.morphisms, lambda f, g: Lm[(f, g)]))
    rep.set("morphism_inverse", True)
    for f, g in product(X.morphisms, repeat=2):
        k = morphism_lhd_inv(X, lhd, lhd_inv, f, g)
        back = morphism_lhd_inv(X, lhd, lhd_inv, Lm[(f, g)], g)
        if k is None or Lm[(k, g)] != f or back != f:
            rep.set("morphism_inverse", False, [_v("morphism_inverse", f, g)])
    return rep


# ---------------------------------------------------------------------
# crossed modules and strict 2-groups

@dataclass
class FinGroup:
    elements: list
    mul: dict                  # (a, b) -> ab
    unit: object = None

    def __post_init__(self):
        if self.unit is None:
            self.unit = next(e for e in self.elements
                             if all(self.mul[(e, a)] == a == self.mul[(a, e)] for a in self.elements))

    def inv(self, a):
        return next(b for b in self.elements if self.mul[(a, b)] == self.unit)

    def is_group(self):
        E = self.elements
        if any((a, b) not in self.mul or self.mul[(a, b)] not in E for a, b in product(E, repeat=2)):
            return False
        if any(self.mul[(self.mul[(a, b)], c)] != self.mul[(a, self.mul[(b, c)])]
               for a, b, c in product(E, repeat=3)):
            return False
        return all(any(self.mul[(a, b)] == self.unit for b in E) for a in E)


def cyclic_group(n, name="c"):
    els = [f"{name}{k}" for k in range(n)]
    return FinGroup(els, {(els[a], els[b]): els[(a + b) % n] for a in range(n) for b in range(n)}, els[0])


@dataclass
class CrossedModule:
    G: FinGroup
    H: FinGroup
    boundary: dict             # H -> G
    action: dict               # (g, h) -> g·h

    def report(self):
        rep = Report("crossed_module")
        G, H, bd, act = self.G, self.H, self.boundary, self.action
        rep.set("groups", G.is_group() and H.is_group())
        rep.set("boundary_hom", all(bd[H.mul[(a, b)]] == G.mul[(bd[a], bd[b])]
                                    for a, b in product(H.elements, repeat=2)))
        ok = True
        for g in G.elements:
            for a, b in product(H.elements, repeat=2):
                if act[(g, H.mul[(a, b)])] != H.mul[(act[(g, a)], act[(g, b)])]:
                    ok = False
        for g, k in product(G.elements, repeat=2):
            for a in H.elements:
                if act[(G.mul[(g, k)], a)] != act[(g, act[(k, a)])]:
                    ok = False
        ok = ok and all(act[(G.unit, a)] == a for a in H.elements)
        rep.set("action", ok)
        for g, h in product(G.elements, H.elements):
            if bd[act[(g, h)]] != G.mul[(G.mul[(g, bd[h])], G.inv(g))]:
                rep.set("equivariance", False, [_v("equivariance", g, h)])
        rep.set("equivariance", True)
        for h, k in product(H.elements, repeat=2):
            if act[(bd[h], k)] != H.mul[(H.mul[(h, k)], H.inv(h))]:
                rep.set("peiffer", False, [_v("peiffer", h, k)])
        rep.set("peiffer", True)
        return rep


@dataclass
class Strict2Group:
    cat: FinCat
    tensor_obj: dict
    tensor_mor: dict
    unit: object
    dagger: dict
    notes: dict = field(default_factory=dict)

    def tensor(self, *ms):
        out = ms[0]
        for m in ms[1:]:
            out = self.tensor_mor[(out, m)]
        return out

    def report(self):
        rep = Report("strict_2group")
        C, T, To = self.cat, self.tensor_mor, self.tensor_obj
        C.check(rep)
        tensor = FinBifunctor(To, T)
        check_bifunctor(C, tensor, rep, "tensor_functor")
        iu = C.ident[self.unit]
        rep.set("tensor_associative", all(To[(To[(a, b)], c)] == To[(a, To[(b, c)])]
                                          for a, b, c in product(C.objects, repeat=3)))
        assoc = all(T[(T[(f, g)], h)] == T[(f, T[(g, h)])] for f, g, h in product(C.morphisms, repeat=3))
        rep.set("tensor_associative", assoc)
        for f in C.morphisms:
            if not (T[(f, iu)] == f == T[(iu, f)]):
                rep.set("tensor_unit", False, [_v("tensor_unit", f)])
        rep.set("tensor_unit", True)
        for g in C.objects:
            d = self.dagger[g]
            if To[(g, d)] != self.unit or To[(d, g)] != self.unit:
                rep.set("dagger", False, [_v("dagger", g)])
            if T[(C.ident[g], C.ident[d])] != iu or T[(C.ident[d], C.ident[g])] != iu:
                rep.set("dagger", False, [_v("dagger", "identity", g)])
        rep.set("dagger", True)
        rep.set("groupoid", all(C.inverse(f) is not None for f in C.morphisms))
        # interchange used to move β^{-1} factors past identities
        rep.set("interchange", True)
        if rep.flags["groupoid"]:
            inv = {f: C.inverse(f) for f in C.morphisms}
            for b1, b2 in C.composable():
                # b1∘b2 composable: b2 : h1 -> h2, b1 : h2 -> h3
                h1, h2, h3 = C.src[b2], C.tgt[b2], C.tgt[b1]
                i1, i2, i3 = (C.ident[self.dagger[h]] for h in (h1, h2, h3))
                whole = self.tensor(i1, inv[C.comp[(b1, b2)]], i3)
                split = C.comp[(self.tensor(i2, inv[b1], i3), self.tensor(i1, inv[b2], i2))]
                if whole != split:
                    rep.set("interchange", False, [_v("interchange", b1, b2)])
        return rep

    def bar(self, beta):
        """id_{h1†} ⊗ β^{-1} ⊗ id_{h2†} : h1† -> h2† for β : h1 -> h2."""
        C = self.cat
        h1, h2 = C.src[beta], C.tgt[beta]
        return self.tensor(C.ident[self.dagger[h1]], C.inverse(beta), C.ident[self.dagger[h2]])


def two_group_from_crossed_module(cm):
    """Objects G, morphisms (g, h) : g -> ∂(h)g, tensor by semidirect product."""
    rep = cm.report()
    if not rep.passed:
        raise StructureError(f"crossed module laws fail: {rep.failed()}")
    G, H, bd, act = cm.G, cm.H, cm.boundary, cm.action
    objects = list(G.elements)
    mors = [(g, h) for g in G.elements for h in H.elements]
    src = {m: m[0] for m in mors}
    tgt = {m: G.mul[(bd[m[1]], m[0])] for m in mors}
    ident = {g: (g, H.unit) for g in objects}
    comp = {}
    for f in mors:
        for h2 in H.elements:
            g2 = (tgt[f], h2)
            comp[(g2, f)] = (f[0], H.mul[(h2, f[1])])
    cat = FinCat(objects, mors, src, tgt, ident, comp)
    To = {(a, b): G.mul[(a, b)] for a, b in product(objects, repeat=2)}
    Tm = {((g1, h1), (g2, h2)): (G.mul[(g1, g2)], H.mul[(h1, act[(g1, h2)])])
          for (g1, h1), (g2, h2) in product(mors, repeat=2)}
    out = Strict2Group(cat, To, Tm, G.unit, {g: G.inv(g) for g in objects})
    rep = out.report()
    if not rep.passed:
        raise StructureError(f"strict 2-group laws fail: {rep.failed()}")
    return out


def z2_z3_crossed_module():
    """G = Z/2 acting on H = Z/3 by inversion, trivial boundary."""
    G, H = cyclic_group(2, "g"), cyclic_group(3, "h")
    act = {}
    for g in G.elements:
        for k, h in enumerate(H.elements):
            act[(g, h)] = h if g == G.unit else H.elements[(-k) % 3]
    return CrossedModule(G, H, {h: G.unit for h in H.elements}, act)


# ---------------------------------------------------------------------
# the conjugation 2-rack

def translation_action(G2):
    """F(g, x) = g ⊗ x on the 2-group itself."""
    return dict(G2.tensor_obj), dict(G2.tensor_mor)


def check_action(G2, X, F_obj, F_mor):
    """F : G × X -> X is a functor with F(g⊗h, -) = F(g, F(h, -)) and F(I, -) = id."""
    C = G2.cat
    PX = product_category(C, X)
    for (g, x) in PX.objects:
        if F_obj.get((g, x)) not in X.objects:
            raise ValueError(f"action undefined or off X at {label((g, x))}")
    for (a, xi) in PX.morphisms:
        m = F_mor.get((a, xi))
        if m is None or X.src[m] != F_obj[(C.src[a], X.src[xi])] or X.tgt[m] != F_obj[(C.tgt[a], X.tgt[xi])]:
            raise ValueError(f"action is not typed at {label((a, xi))}")
    for (g, x) in PX.objects:
        if F_mor[(C.ident[g], X.ident[x])] != X.ident[F_obj[(g, x)]]:
            raise ValueError(f"action does not preserve the identity at {label((g, x))}")
    for ((a2, x2), (a1, x1)) in PX.composable():
        if F_mor[(C.comp[(a2, a1)], X.comp[(x2, x1)])] != X.comp[(F_mor[(a2, x2)], F_mor[(a1, x1)])]:
            raise ValueError(f"action does not preserve composites at {label(((a2, x2), (a1, x1)))}")
    for g, h in product(C.objects, repeat=2):
        for x in X.objects:
            if F_obj[(G2.tensor_obj[(g, h)], x)] != F_obj[(g, F_obj[(h, x)])]:
                raise ValueError(f"action law fails at {label((g, h, x))}")
    for a, b in product(C.morphisms, repeat=2):
        for xi in X.morphisms:
            if F_mor[(G2.tensor_mor[(a, b)], xi)] != F_mor[(a, F_mor[(b, xi)])]:
                raise ValueError(f"action law fails at {label((a, b, xi))}")
    for x in X.objects:
        if F_obj[(G2.unit, x)] != x:
            raise ValueError(f"the unit does not act trivially at {label(x)}")


def conjugation_rack(G2, X, F):
    """(g, x) ◁ (h, y) = (h ⊗ g ⊗ h†, F(h, x)) on the product category G × X.

    Returns the product category, ◁, and the inverse ◁̃ obtained from
    •◁(h†, y).
    """
    F_obj, F_mor = F
    check_action(G2, X, F_obj, F_mor)
    C = G2.cat
    P = product_category(C, X)
    T, To, dag = G2.tensor, G2.tensor_obj, G2.dagger

    obj = {}
    for (g, x), (h, y) in product(P.objects, repeat=2):
        obj[((g, x), (h, y))] = (To[(To[(h, g)], dag[h])], F_obj[(h, x)])
    mor = {}
    for (a, xi), (b, eta) in product(P.morphisms, repeat=2):
        mor[((a, xi), (b, eta))] = (T(b, a, G2.bar(b)), F_mor[(b, xi)])
    lhd = FinBifunctor(obj, mor)

    inv_obj, inv_mor = {}, {}
    for (g, x), (h, y) in product(P.objects, repeat=2):
        hd = dag[h]
        inv_obj[((g, x), (h, y))] = (To[(To[(hd, g)], h)], F_obj[(hd, x)])
    for (a, xi) in P.morphisms:
        for (h, y) in P.objects:
            b = C.ident[dag[h]]
            inv_mor[((a, xi), P.ident[(h, y)])] = (T(b, a, G2.bar(b)), F_mor[(b, xi)])
    return P, lhd, FinBifunctor(inv_obj, inv_mor)


def z2_z3_conjugation_rack():
    """The Z/2-Z/3 crossed module acting on itself by left translation."""
    G2 = two_group_from_crossed_module(z2_z3_crossed_module())
    return conjugation_rack(G2, G2.cat, translation_action(G2))
