"""Pointwise soundness and completeness survey of the global equations.

Member side: random translates of every Borel chart's monomial point.
Non-member side: random subspaces, classified by the rank oracle in degree s+1.
"""

import argparse
import collections
import random
import time
from dataclasses import dataclass

from hilbreg.borel import enumerate_borel
from hilbreg.hilbert import context
from hilbreg.pluecker import GrassmannPoint, Verdict, membership_test
from hilbreg.samples import default_group_sample, orbit_marked_basis, random_subspace, subspace_ideal_rank


@dataclass
class Config:
    n: int = 3
    p: str = "2t+2"
    rprime: int = 2
    s: int = 2
    members: int = 10
    randoms: int = 20
    seed: int = 0


def as_point(ctx, rows):
    return GrassmannPoint(ctx.n, ctx.s, tuple(map(tuple, rows)))


def main(cfg):
    ctx = context(cfg.n, cfg.p, cfg.rprime, cfg.s)
    print(ctx.summary())
    rng = random.Random(cfg.seed)
    sample = default_group_sample(cfg.n, seed=cfg.seed)

    start = time.perf_counter()
    tally = collections.Counter()
    for J in enumerate_borel(cfg.n, ctx.p, cfg.rprime):
        for _ in range(cfg.members):
            F = orbit_marked_basis(J, cfg.s, rng)
            rep = membership_test(as_point(ctx, F.matrix()), ctx, sample)
            tally[(str(J), rep.verdict, rep.route)] += 1
    print(f"members ({time.perf_counter() - start:.1f} s)")
    for key, count in sorted(tally.items()):
        print(f"  {count:>4}  {key}")

    start = time.perf_counter()
    tally = collections.Counter()
    target = ctx.q_at(cfg.s + 1)
    for _ in range(cfg.randoms):
        rows = random_subspace(ctx.N, ctx.q, rng)
        profile = "q(s+1)" if subspace_ideal_rank(rows, cfg.n, cfg.s, cfg.s + 1) == target else "other"
        rep = membership_test(as_point(ctx, rows), ctx, sample)
        tally[(profile, rep.verdict, rep.route)] += 1
    print(f"random subspaces ({time.perf_counter() - start:.1f} s)")
    for key, count in sorted(tally.items()):
        print(f"  {count:>4}  {key}")
    unsound = sum(c for (profile, verdict, _), c in tally.items() if verdict == Verdict.MEMBER and profile == "other")
    print(f"random subspaces with the wrong rank but verdict Member: {unsound}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, value in vars(Config()).items():
        ap.add_argument(f"--{name}", type=type(value), default=value)
    main(Config(**vars(ap.parse_args())))
