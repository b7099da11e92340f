"""Run the three conjecture scans over a range of dimensions and write every report to JSON."""

import argparse
import json
from collections import Counter
from dataclasses import dataclass

from mucalc.harness import scan_conjecture


@dataclass
class Config:
    plan: tuple = ((1, 2), (1, 4), (2, 3), (2, 4), (3, 3), (3, 5))
    trials: int = 30
    seed: int = 0
    char: int = 0
    max_vertices: int = 10
    out: str = "scan_reports.json"


def main(cfg: Config):
    everything = []
    for which, d in cfg.plan:
        reps = scan_conjecture(which, d, cfg.trials, cfg.seed, cfg.char, cfg.max_vertices)
        counts = Counter(r.verdict for r in reps)
        print(f"conjecture {which}, d = {d}: {dict(counts)}")
        everything += [r.to_dict() for r in reps]
    with open(cfg.out, "w") as fh:
        json.dump(everything, fh, indent=1)
    print(f"{len(everything)} reports written to {cfg.out}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trials", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=10)
    p.add_argument("--out", default="scan_reports.json")
    a = p.parse_args()
    main(Config(trials=a.trials, seed=a.seed, char=a.char, max_vertices=a.max_vertices, out=a.out))
