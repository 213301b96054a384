"""Count saturated strongly stable ideals over a grid of (n, p, r')."""

import argparse
import time
from dataclasses import dataclass, field

from hilbreg.borel import enumerate_borel
from hilbreg.errors import DomainError
from hilbreg.hilbert import gotzmann_number, parse_polynomial


@dataclass
class Config:
    ns: list = field(default_factory=lambda: [2, 3])
    polys: list = field(default_factory=lambda: ["1", "2", "3", "4", "t+1", "2t+1", "2t+2", "3t", "3t+1"])
    show_ideals: bool = False


def main(cfg):
    print(f"{'n':>2} {'p':>8} {'r':>3} {'rprime':>6} {'count':>6} {'sec':>7}")
    for n in cfg.ns:
        for text in cfg.polys:
            p = parse_polynomial(text)
            if p.degree >= n:
                continue
            r = gotzmann_number(p)
            for rprime in range(1, r + 1):
                start = time.perf_counter()
                try:
                    ideals = enumerate_borel(n, p, rprime)
                except DomainError as exc:
                    print(f"{n:>2} {text:>8} {r:>3} {rprime:>6}  skipped: {exc}")
                    continue
                print(f"{n:>2} {text:>8} {r:>3} {rprime:>6} {len(ideals):>6} {time.perf_counter() - start:>7.2f}")
                if cfg.show_ideals:
                    for J in ideals:
                        print(f"{'':>24}{J}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ns", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--polys", nargs="+", default=Config().polys)
    ap.add_argument("--show-ideals", action="store_true")
    main(Config(**vars(ap.parse_args())))
