"""JSON encoding of structures.  Rationals are "p/q" strings throughout."""

import json

from .leibniz2 import BilinearOp, Leibniz2Algebra
from .ratmat import Mat, rat_str, to_rat
from .rack2 import Coproduct, Linear2Rack
from .twovec import ChainMap, TensorCtx, TwoVec
from .zte import ZteSolution


class FormatError(ValueError):
    pass


def mat_to_json(m):
    return {"shape": [m.rows, m.cols], "rows": [[rat_str(x) for x in row] for row in m.to_rows()]}


def mat_from_json(obj):
    try:
        r, c = obj["shape"]
        rows = obj["rows"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad matrix record: {exc}") from None
    if len(rows) != r or any(len(row) != c for row in rows):
        raise FormatError(f"matrix rows do not match shape {r}x{c}")
    try:
        return Mat.from_entries(r, c, [to_rat(x) for row in rows for x in row])
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad matrix entry: {exc}") from None


def _get(obj, key):
    if key not in obj:
        raise FormatError(f"missing field {key!r}")
    return obj[key]


def _op_to_json(op):
    return {"m_uu": mat_to_json(op.m_uu), "m_wu": mat_to_json(op.m_wu), "m_uw": mat_to_json(op.m_uw)}


def _op_from_json(V, obj):
    return BilinearOp(V, *(mat_from_json(_get(obj, k)) for k in ("m_uu", "m_wu", "m_uw")))


def _chain_to_json(F):
    return {"f0": mat_to_json(F.f0), "fw": mat_to_json(F.fw)}


# ---------------------------------------------------------------------

def leibniz_to_json(L, e=None):
    out = {"kind": "leibniz2", "d": mat_to_json(L.space.d), "bracket": _op_to_json(L.bracket),
           "l3": mat_to_json(L.l3)}
    if e is not None:
        out["e"] = [rat_str(x) for x in e]
    return out


def leibniz_from_json(obj):
    V = TwoVec(mat_from_json(_get(obj, "d")))
    L = Leibniz2Algebra(V, _op_from_json(V, _get(obj, "bracket")), mat_from_json(_get(obj, "l3")))
    e = tuple(to_rat(x) for x in obj["e"]) if obj.get("e") is not None else None
    return L, e


def rack_to_json(R):
    return {"kind": "rack2", "d": mat_to_json(R.space.d),
            "delta": {"d0": mat_to_json(R.delta.d0), "dw": mat_to_json(R.delta.dw)},
            "eps": mat_to_json(R.eps), "lhd": _op_to_json(R.lhd),
            "lhd_inv": _op_to_json(R.lhd_inv), "r": mat_to_json(R.r)}


def rack_from_json(obj):
    V = TwoVec(mat_from_json(_get(obj, "d")))
    delta = _get(obj, "delta")
    return Linear2Rack(V, Coproduct(mat_from_json(_get(delta, "d0")), mat_from_json(_get(delta, "dw"))),
                       mat_from_json(_get(obj, "eps")), _op_from_json(V, _get(obj, "lhd")),
                       _op_from_json(V, _get(obj, "lhd_inv")), mat_from_json(_get(obj, "r")))


def zte_to_json(sol):
    return {"kind": "zte", "d": mat_to_json(sol.space.d), "B": _chain_to_json(sol.B),
            "Binv": _chain_to_json(sol.Binv), "y": mat_to_json(sol.y)}


def zte_from_json(obj):
    V = TwoVec(mat_from_json(_get(obj, "d")))
    ctx2 = TensorCtx(V, 2)

    def chain(rec):
        return ChainMap(ctx2, ctx2, mat_from_json(_get(rec, "f0")), mat_from_json(_get(rec, "fw")))

    return ZteSolution(V, chain(_get(obj, "B")), chain(_get(obj, "Binv")), mat_from_json(_get(obj, "y")))


def ybe_to_json(dim, m):
    return {"kind": "ybe", "dim": dim, "B": mat_to_json(m)}


def ybe_from_json(obj):
    m = mat_from_json(_get(obj, "B"))
    dim = obj.get("dim")
    if dim is None:
        dim = round(m.rows ** 0.5)
    return int(dim), m


# ---------------------------------------------------------------------
# finite tables: elements are strings, relations are lists of tuples

def fincat_to_json(X):
    from .finrack import label
    return {"kind": "fincat",
            "objects": [label(x) for x in X.objects],
            "morphisms": [label(f) for f in X.morphisms],
            "src": {label(f): label(X.src[f]) for f in X.morphisms},
            "tgt": {label(f): label(X.tgt[f]) for f in X.morphisms},
            "id": {label(x): label(X.ident[x]) for x in X.objects},
            "comp": [[label(g), label(f), label(h)] for (g, f), h in X.comp.items()]}


def fincat_from_json(obj):
    from .finrack import FinCat
    try:
        return FinCat(list(obj["objects"]), list(obj["morphisms"]), dict(obj["src"]), dict(obj["tgt"]),
                      dict(obj["id"]), {(g, f): h for g, f, h in obj["comp"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad category record: {exc}") from None


def bifunctor_to_json(F):
    from .finrack import label
    return {"obj": [[label(x), label(y), label(z)] for (x, y), z in F.obj.items()],
            "mor": [[label(f), label(g), label(h)] for (f, g), h in F.mor.items()]}


def bifunctor_from_json(obj):
    from .finrack import FinBifunctor
    try:
        return FinBifunctor({(x, y): z for x, y, z in obj["obj"]}, {(f, g): h for f, g, h in obj["mor"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad bifunctor record: {exc}") from None


def group_from_json(obj):
    from .finrack import FinGroup
    try:
        return FinGroup(list(obj["elements"]), {(a, b): c for a, b, c in obj["mul"]}, obj.get("unit"))
    except (KeyError, TypeError, ValueError, StopIteration) as exc:
        raise FormatError(f"bad group record: {exc!r}") from None


def crossed_module_from_json(obj):
    from .finrack import CrossedModule
    try:
        return CrossedModule(group_from_json(obj["G"]), group_from_json(obj["H"]), dict(obj["boundary"]),
                             {(g, h): k for g, h, k in obj["action"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad crossed module record: {exc}") from None


def crossed_module_to_json(cm):
    def group(G):
        return {"elements": list(G.elements), "unit": G.unit,
                "mul": [[a, b, c] for (a, b), c in G.mul.items()]}
    return {"kind": "crossed_module", "G": group(cm.G), "H": group(cm.H),
            "boundary": dict(cm.boundary), "action": [[g, h, k] for (g, h), k in cm.action.items()]}


def two_group_to_json(G2):
    from .finrack import FinBifunctor, label
    return {"kind": "strict_2group", "category": fincat_to_json(G2.cat),
            "tensor": bifunctor_to_json(FinBifunctor(G2.tensor_obj, G2.tensor_mor)),
            "unit": label(G2.unit), "dagger": {label(g): label(h) for g, h in G2.dagger.items()}}


# ---------------------------------------------------------------------

def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from None


def dump(obj, path=None):
    text = json.dumps(obj, indent=1, sort_keys=True, ensure_ascii=False)
    if path is None:
        return text
    with open(path, "w") as fh:
        fh.write(text + "\n")
    return text
