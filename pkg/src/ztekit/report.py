"""Check reports: named boolean flags plus replayable violation records."""

from dataclasses import dataclass, field

from .ratmat import rat_str, tensor_digits

SCHEMA_VERSION = 1
MAX_RECORDED = 64


@dataclass
class Violation:
    flag: str
    where: tuple
    diff: list

    def to_json(self):
        return {"flag": self.flag, "where": list(self.where),
                "diff": [rat_str(x) for x in self.diff]}


@dataclass
class Report:
    kind: str
    flags: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)
    timing: float = 0.0

    @property
    def passed(self):
        return all(self.flags.values())

    def set(self, flag, ok, violations=()):
        self.flags[flag] = bool(self.flags.get(flag, True) and ok)
        room = MAX_RECORDED - sum(1 for v in self.violations if v.flag == flag)
        if room > 0:
            self.violations.extend(list(violations)[:room])
        return ok

    def failed(self):
        return [k for k, v in self.flags.items() if not v]

    def merge(self, other, prefix=""):
        for k, v in other.flags.items():
            self.set(prefix + k, v)
        for v in other.violations:
            self.violations.append(Violation(prefix + v.flag, v.where, v.diff))
        return self

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "passed": self.passed,
            "flags": dict(sorted(self.flags.items())),
            "violations": [v.to_json() for v in self.violations],
            "notes": self.notes,
            "timing": round(self.timing, 4),
        }


def column_violations(flag, diff, dims):
    """One violation per nonzero column of ``diff``.

    Columns are indexed by basis tensors of shape ``dims``; the violation
    names the multi-index so the failure can be replayed.
    """
    out = []
    if diff.cols == 0:
        return out
    cols = sorted({j for _, j, _ in diff.nonzeros()})
    for j in cols[:MAX_RECORDED]:
        where = tensor_digits(j, dims) if dims else (j,)
        out.append(Violation(flag, where, diff.col_vector(j)))
    return out


def check_equal(report, flag, lhs, rhs, dims=None):
    """Record whether two matrices agree exactly; log differing columns."""
    if lhs.shape != rhs.shape:
        report.set(flag, False, [Violation(flag, ("shape",), [])])
        return False
    diff = lhs - rhs
    if diff.is_zero():
        report.set(flag, True)
        return True
    report.set(flag, False, column_violations(flag, diff, dims or [diff.cols]))
    return False
