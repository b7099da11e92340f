"""Print sigma, mu and Betti numbers of every library complex as a markdown table."""

import argparse
from dataclasses import dataclass

from mucalc import library
from mucalc.homology import betti
from mucalc.sigma import mu_vector, sigma_vector


@dataclass
class Config:
    chars: tuple = (0, 2)
    max_vertices: int = 12


def fmt(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def main(cfg: Config):
    print("| complex | char | f | beta | sigma | mu |")
    print("|---|---|---|---|---|---|")
    for name in library.names():
        X = library.get(name)
        if X.num_vertices > cfg.max_vertices:
            continue
        for char in cfg.chars:
            print(f"| {name} | {char} | {fmt(X.f_vector)} | {fmt(betti(X, char))} "
                  f"| {fmt(sigma_vector(X, char))} | {fmt(mu_vector(X, char))} |")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--chars", type=int, nargs="+", default=[0, 2])
    p.add_argument("--max-vertices", type=int, default=12)
    a = p.parse_args()
    main(Config(tuple(a.chars), a.max_vertices))
