"""Sampling protocol shared by the acceptance and supplementary tests.

Instances are cached so the decategorification and mutation checks reuse
the ones already built for the construction checks.
"""

from functools import lru_cache

from ztekit.forge import sample_central_leibniz, sample_linear_2rack

PLAN = {(2, 1): 14, (3, 1): 14, (3, 2): 12, (4, 2): 10}


def plan_items(plan=PLAN):
    for dims, count in plan.items():
        for seed in range(1, count + 1):
            yield dims, seed


@lru_cache(maxsize=None)
def leibniz_instances(split=None):
    return [(dims, seed, sample_central_leibniz(seed, *dims, split=split)) for dims, seed in plan_items()]


@lru_cache(maxsize=None)
def rack_instances(normalized=False, plan=None):
    items = plan_items(dict(plan) if plan else PLAN)
    return [(dims, seed, sample_linear_2rack(seed, *dims, normalized=normalized)[0]) for dims, seed in items]


def line(number, ok, detail):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
