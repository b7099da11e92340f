"""Random tame walks: check the g lower bound and the sigma bound on each, tally verdicts."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from mucalc.bistellar import tame_walk
from mucalc.harness import verify_glbt_tame_sphere, verify_sigma_bound_log


@dataclass
class Config:
    dims: tuple = (2, 3, 4, 5)
    walks: int = 20
    max_moves: int = 8
    max_vertices: int = 11
    seed: int = 0
    char: int = 0


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    for d in cfg.dims:
        tally = Counter()
        for _ in range(cfg.walks):
            _, log = tame_walk(d, rng.randint(0, cfg.max_moves), rng.randrange(2 ** 32),
                               max_vertices=cfg.max_vertices)
            for r in verify_glbt_tame_sphere(log, cfg.char) + verify_sigma_bound_log(log, cfg.char):
                tally[(r.theorem_id, r.verdict)] += 1
                if r.failed:
                    print("FAIL", r.to_dict())
        print(f"d = {d}: " + ", ".join(f"{tid}/{v}: {n}" for (tid, v), n in sorted(tally.items())))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--walks", type=int, default=20)
    p.add_argument("--max-moves", type=int, default=8)
    p.add_argument("--max-vertices", type=int, default=11)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--char", type=int, default=0)
    a = p.parse_args()
    main(Config(tuple(a.dims), a.walks, a.max_moves, a.max_vertices, a.seed, a.char))
