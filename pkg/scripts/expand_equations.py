"""Expand the global equations of one context symbolically and summarize them.

Writes the equations as JSON with --out.  The default context is small; the
main space-curve context (n=3, p=2t+2) expands roughly nine million
wedge terms and takes minutes.
"""

import argparse
import collections
import time
from dataclasses import dataclass

from hilbreg.hilbert import context
from hilbreg.pluecker import equations


@dataclass
class Config:
    n: int = 2
    p: str = "3"
    rprime: int = 2
    s: int = 2
    families: str = "ABC"
    out: str = ""


def main(cfg):
    ctx = context(cfg.n, cfg.p, cfg.rprime, cfg.s)
    eqs = equations(ctx)
    fams = tuple(cfg.families)
    print(ctx.summary())
    print(eqs.structure.to_json())
    start = time.perf_counter()
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            count = eqs.write_json(fh, fams)
        print(f"wrote {count} equations to {cfg.out}")
    histogram = collections.Counter()
    distinct = set()
    for label, poly in eqs.iter_equations(fams):
        histogram[(label.family, poly.degree)] += 1
        distinct.add(poly if poly.sorted_terms()[0][1] > 0 else -poly)
    for (fam, deg), count in sorted(histogram.items()):
        print(f"family {fam}, degree {deg}: {count}")
    print(f"{sum(histogram.values())} equations, {len(distinct)} distinct up to sign, "
          f"{time.perf_counter() - start:.1f} s")
    bound = ctx.d + 2
    worst = max((deg for _, deg in histogram), default=0)
    print(f"max degree {worst} (bound d+2 = {bound})")
    return 0 if worst <= bound else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, value in vars(Config()).items():
        ap.add_argument(f"--{name}", type=type(value), default=value)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
