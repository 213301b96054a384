"""Reproduce the worked examples as a table of named checks."""

import argparse
import json
import time
from dataclasses import dataclass

from hilbreg.cli import run_paper_checks


@dataclass
class Config:
    as_json: bool = False


def main(cfg):
    start = time.perf_counter()
    results = run_paper_checks()
    if cfg.as_json:
        print(json.dumps(results, indent=2, default=str))
    else:
        width = max(len(r["name"]) for r in results)
        for r in results:
            print(f"{'ok ' if r['pass'] else 'BAD'}  {r['name']:<{width}}  {r['got']}")
    failed = [r["name"] for r in results if not r["pass"]]
    print(f"{len(results) - len(failed)}/{len(results)} checks in {time.perf_counter() - start:.2f} s")
    return 1 if failed else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", dest="as_json", action="store_true")
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
