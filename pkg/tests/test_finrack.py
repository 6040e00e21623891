import itertools
import time

import pytest

from ztekit import finrack as fr


def dihedral(n):
    """a ◁ b = 2b - a mod n on a discrete category."""
    X = fr.discrete_category(range(n))
    obj = {(a, b): (2 * b - a) % n for a, b in itertools.product(range(n), repeat=2)}
    mor = {(X.ident[a], X.ident[b]): X.ident[obj[(a, b)]] for a, b in obj}
    return X, fr.FinBifunctor(obj, mor)


def brute_rack(elements, op):
    for a, b, c in itertools.product(elements, repeat=3):
        if op(op(a, b), c) != op(op(a, c), op(b, c)):
            return False
    return all(sorted(op(a, b) for a in elements) == sorted(elements) for b in elements)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_dihedral_quandle_is_a_strict_2rack(n):
    X, lhd = dihedral(n)
    rep = fr.check_strict_2rack(X, lhd)
    assert rep.passed, rep.failed()
    assert fr.is_rack(range(n), lambda a, b: lhd.obj[(a, b)])


def test_is_rack_agrees_with_brute_force():
    ops = {
        "dihedral": lambda a, b: (2 * b - a) % 4,
        "left": lambda a, b: a,
        "constant": lambda a, b: 0,
        "shift": lambda a, b: (a + 1) % 4,
        "mixed": lambda a, b: (a * b + 1) % 4,
    }
    for op in ops.values():
        assert fr.is_rack(range(4), op) == brute_rack(list(range(4)), op)
    assert not fr.is_rack(range(4), ops["constant"])


def test_category_checks_catch_a_broken_composite():
    G2 = fr.two_group_from_crossed_module(fr.z2_z3_crossed_module())
    C = G2.cat
    assert C.check().passed
    f, g = next((f, g) for g, f in C.composable() if C.comp[(g, f)] != f and g != C.ident[C.tgt[f]])
    broken = fr.FinCat(C.objects, C.morphisms, C.src, C.tgt, C.ident, dict(C.comp))
    broken.comp[(g, f)] = f
    assert not broken.check().passed


def test_product_and_discrete_categories():
    A = fr.discrete_category("ab")
    B = fr.two_group_from_crossed_module(fr.z2_z3_crossed_module()).cat
    P = fr.product_category(A, B)
    assert P.check().passed
    assert len(P.objects) == 4 and len(P.morphisms) == 2 * 6


def test_crossed_module_and_two_group():
    cm = fr.z2_z3_crossed_module()
    assert cm.report().passed
    G2 = fr.two_group_from_crossed_module(cm)
    assert G2.report().passed
    assert len(G2.cat.objects) == 2 and len(G2.cat.morphisms) == 6


def test_bad_crossed_module_is_rejected():
    cm = fr.z2_z3_crossed_module()
    # a nontrivial boundary into Z/2 cannot be a homomorphism from Z/3
    bd = {h: ("g1" if h != cm.H.unit else cm.G.unit) for h in cm.H.elements}
    bad = fr.CrossedModule(cm.G, cm.H, bd, cm.action)
    assert not bad.report().flags["boundary_hom"]
    with pytest.raises(fr.StructureError):
        fr.two_group_from_crossed_module(bad)


def test_conjugation_rack_passes():
    t0 = time.perf_counter()
    P, lhd, inv = fr.z2_z3_conjugation_rack()
    rep = fr.check_strict_2rack(P, lhd, inv)
    assert rep.passed, rep.failed()
    assert rep.flags["objects_rack"] and rep.flags["morphisms_rack"]
    assert brute_rack(P.objects, lambda a, b: lhd.obj[(a, b)])
    assert time.perf_counter() - t0 < 5


def test_mutated_rack_table_is_flagged():
    P, lhd, inv = fr.z2_z3_conjugation_rack()
    key = next(iter(lhd.obj))
    other = next(o for o in P.objects if o != lhd.obj[key])
    obj = dict(lhd.obj)
    obj[key] = other
    assert not fr.check_strict_2rack(P, fr.FinBifunctor(obj, lhd.mor), inv).passed


def test_semistrict_distributor_mutation():
    X, lhd = dihedral(3)
    R = fr.identity_distributor(X, lhd)
    inv = fr.derived_inverse(X, lhd)
    assert fr.check_semistrict_2rack(X, lhd, R, inv).passed
    bad = dict(R)
    bad[(0, 1, 2)] = X.ident[1]
    assert not fr.check_semistrict_2rack(X, lhd, bad, inv).flags["R_typed"]


def test_action_laws():
    G2 = fr.two_group_from_crossed_module(fr.z2_z3_crossed_module())
    F_obj, F_mor = fr.translation_action(G2)
    fr.check_action(G2, G2.cat, F_obj, F_mor)
    broken = dict(F_obj)
    broken[(G2.unit, "g1")] = G2.unit
    with pytest.raises(ValueError):
        fr.check_action(G2, G2.cat, broken, F_mor)


def test_morphism_inverse_is_two_sided():
    P, lhd, inv = fr.z2_z3_conjugation_rack()
    for f, g in itertools.product(P.morphisms, repeat=2):
        k = fr.morphism_lhd_inv(P, lhd, inv, f, g)
        assert lhd.mor[(k, g)] == f
        assert fr.morphism_lhd_inv(P, lhd, inv, lhd.mor[(f, g)], g) == f
