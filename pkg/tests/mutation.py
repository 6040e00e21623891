"""Single-entry perturbations of structures, shared by the mutation tests."""

import random

from ztekit.leibniz2 import BilinearOp, Leibniz2Algebra, check_central, check_leibniz2
from ztekit.rack2 import Coproduct, Linear2Rack, check_linear_2rack
from ztekit.ratmat import Mat
from ztekit.twovec import TwoVec


def bump(m, rng):
    """m plus one at a random entry; None for an empty matrix."""
    if not m.rows or not m.cols:
        return None
    i, j = rng.randrange(m.rows), rng.randrange(m.cols)
    return m + Mat.unit(m.rows, m.cols, i, j)


def leibniz_parts(L):
    op = L.bracket
    return {"d": L.space.d, "m_uu": op.m_uu, "m_wu": op.m_wu, "m_uw": op.m_uw, "l3": L.l3}


def rebuild_leibniz(parts):
    V = TwoVec(parts["d"])
    return Leibniz2Algebra(V, BilinearOp(V, parts["m_uu"], parts["m_wu"], parts["m_uw"]), parts["l3"])


def rack_parts(R):
    parts = {"d": R.space.d, "delta0": R.delta.d0, "deltaw": R.delta.dw, "eps": R.eps, "r": R.r}
    for tag, op in (("lhd", R.lhd), ("inv", R.lhd_inv)):
        parts.update({f"{tag}_uu": op.m_uu, f"{tag}_wu": op.m_wu, f"{tag}_uw": op.m_uw})
    return parts


def rebuild_rack(p):
    V = TwoVec(p["d"])
    ops = [BilinearOp(V, p[f"{t}_uu"], p[f"{t}_wu"], p[f"{t}_uw"]) for t in ("lhd", "inv")]
    return Linear2Rack(V, Coproduct(p["delta0"], p["deltaw"]), p["eps"], *ops, p["r"])


def mutate(parts, rng):
    """Perturb one nonempty matrix chosen at random; returns (name, new parts)."""
    names = [k for k, m in parts.items() if m.rows and m.cols]
    name = rng.choice(names)
    out = dict(parts)
    out[name] = bump(parts[name], rng)
    return name, out


def leibniz_trial(L, e, rng):
    """(mutated matrix, mutant, whether a checker flag flipped)."""
    name, parts = mutate(leibniz_parts(L), rng)
    M = rebuild_leibniz(parts)
    return name, M, not (check_leibniz2(M).passed and check_central(M, e))


def rack_trial(R, rng):
    name, parts = mutate(rack_parts(R), rng)
    M = rebuild_rack(parts)
    return name, M, not check_linear_2rack(M).passed


def trials(leibniz, racks, count=200):
    """Alternate Leibniz and rack mutants over the given passing instances."""
    for k in range(count):
        rng = trial_rng(k)
        if k % 2 == 0:
            L, e = leibniz[(k // 2) % len(leibniz)]
            yield (k, "leibniz", e) + leibniz_trial(L, e, rng)
        else:
            yield (k, "rack", None) + rack_trial(racks[(k // 2) % len(racks)], rng)


def trial_rng(seed):
    return random.Random(f"mutation-{seed}")
