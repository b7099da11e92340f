"""Bistellar moves, move enumeration and seeded random walks.

Walks use ``random.Random(seed)`` (Mersenne Twister) and pick a move with
``rng.randrange(len(moves))`` from the applicable moves sorted by
(index, alpha, beta), so a (d, steps, seed) triple always reproduces the
same log.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from math import ceil

from .complex import (
    SimplicialComplex,
    from_mask,
    g_vector,
    induced,
    join,
    simplex_boundary,
    simplex_closure,
    standard_sphere,
    to_mask,
)


@dataclass(frozen=True)
class BistellarMove:
    """The move alpha -> beta, of index #beta - 1."""

    alpha: tuple
    beta: tuple

    def __post_init__(self):
        a, b = tuple(sorted(self.alpha)), tuple(sorted(self.beta))
        if not a or not b:
            raise ValueError("alpha and beta must be nonempty")
        if set(a) & set(b):
            raise ValueError("alpha and beta must be disjoint")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def index(self) -> int:
        return len(self.beta) - 1

    @property
    def dim(self) -> int:
        return len(self.alpha) + len(self.beta) - 2

    @property
    def alpha_mask(self) -> int:
        return to_mask(self.alpha)

    @property
    def beta_mask(self) -> int:
        return to_mask(self.beta)

    def reverse(self) -> "BistellarMove":
        return BistellarMove(self.beta, self.alpha)

    def to_dict(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_dict(cls, d: dict) -> "BistellarMove":
        return cls(tuple(d["alpha"]), tuple(d["beta"]))


def removed_part(move: BistellarMove) -> SimplicialComplex:
    """closure(alpha) * boundary(beta): what the move takes out."""
    return join(simplex_closure(move.alpha_mask), simplex_boundary(move.beta_mask))


def added_part(move: BistellarMove) -> SimplicialComplex:
    return join(simplex_closure(move.beta_mask), simplex_boundary(move.alpha_mask))


def admits(X: SimplicialComplex, move: BistellarMove) -> bool:
    if move.dim != X.dim:
        return False
    return induced(X, move.alpha_mask | move.beta_mask) == removed_part(move)


def apply_move(X: SimplicialComplex, move: BistellarMove) -> SimplicialComplex:
    if move.dim != X.dim:
        raise ValueError(f"move of dimension {move.dim} applied to a {X.dim}-complex")
    found = induced(X, move.alpha_mask | move.beta_mask)
    if found != removed_part(move):
        raise ValueError(
            f"move {move.alpha} -> {move.beta} not admitted: the induced subcomplex on "
            f"{from_mask(move.alpha_mask | move.beta_mask)} is not closure{move.alpha} * boundary{move.beta}"
        )
    out = (X.faces - removed_part(move).faces) | added_part(move).faces
    return SimplicialComplex(frozenset(out))


def applicable_moves(X: SimplicialComplex, max_index_exclusive: int | None = None,
                     fresh: int | None = None) -> list[BistellarMove]:
    """All moves of index < max_index_exclusive admitted by X.

    Index 0: every facet with the single fresh label ``fresh`` (default:
    one above the largest vertex).  Index t >= 1: faces alpha of dimension
    d - t whose link is the boundary of a (t+1)-set beta that is not a face.
    """
    d = X.dim
    if max_index_exclusive is None:
        max_index_exclusive = d + 1
    if max_index_exclusive > d + 1:
        raise ValueError("max_index_exclusive cannot exceed d + 1")
    if fresh is None:
        fresh = X.vertices[-1] + 1 if X.vertices else 0
    if X.vertex_mask >> fresh & 1:
        raise ValueError(f"fresh label {fresh} already used")
    out = []
    if max_index_exclusive > 0:
        for f in X.by_dim[d]:
            out.append(BistellarMove(from_mask(f), (fresh,)))
    faces = X.faces
    for t in range(1, max_index_exclusive):
        want = (1 << (t + 1)) - 1
        for a in X.by_dim[d - t]:
            lk = [f ^ a for f in faces if f & a == a]
            if len(lk) != want:
                continue
            beta = 0
            for g in lk:
                beta |= g
            if beta.bit_count() != t + 1 or beta in faces:
                continue
            mv = BistellarMove(from_mask(a), from_mask(beta))
            if admits(X, mv):
                out.append(mv)
    out.sort(key=lambda mv: (mv.index, mv.alpha, mv.beta))
    return out


def g_delta(d: int, t: int) -> tuple:
    """Expected change of (g_0..g_{d+1}) under a move of index t."""
    out = [0] * (d + 2)
    if 2 * t != d:
        out[t + 1] += 1
        out[d - t + 1] -= 1
    return tuple(out)


def g_update_check(X: SimplicialComplex, move: BistellarMove) -> bool:
    Y = apply_move(X, move)
    d = X.dim
    before, after = g_vector(X), g_vector(Y)
    return tuple(a - b for a, b in zip(after, before)) == g_delta(d, move.index)


# ---------------------------------------------------------------- logs and walks

@dataclass
class MoveLog:
    dim: int
    initial_labels: list
    moves: list = field(default_factory=list)
    seed: int | None = None

    def initial(self) -> SimplicialComplex:
        return standard_sphere(self.dim, self.initial_labels)

    def replay(self) -> SimplicialComplex:
        X = self.initial()
        for mv in self.moves:
            X = apply_move(X, mv)
        return X

    def is_tame(self) -> bool:
        return all(2 * mv.index < self.dim for mv in self.moves)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "seed": self.seed,
            "initial_labels": list(self.initial_labels),
            "moves": [mv.to_dict() for mv in self.moves],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "MoveLog":
        return cls(d["dim"], list(d["initial_labels"]),
                   [BistellarMove.from_dict(m) for m in d["moves"]], d.get("seed"))

    @classmethod
    def from_json(cls, text: str) -> "MoveLog":
        return cls.from_dict(json.loads(text))

    def digest(self) -> str:
        payload = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(payload).hexdigest()[:12]


def tame_walk(d: int, steps: int, seed: int, max_index_exclusive: int | None = None,
              max_vertices: int | None = None) -> tuple[SimplicialComplex, MoveLog]:
    """Random walk of ``steps`` moves from the standard d-sphere on labels 0..d+1.

    Moves are drawn uniformly among applicable moves of index
    < max_index_exclusive (default ceil(d/2), i.e. index < d/2).  With
    ``max_vertices`` set, index-0 moves are withheld once the complex has
    that many vertices, and the walk stops early if nothing else applies
    (the log then holds fewer than ``steps`` moves).  Fresh labels come from
    a counter that only grows.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if max_index_exclusive is None:
        max_index_exclusive = ceil(d / 2)
    rng = random.Random(seed)
    log = MoveLog(d, list(range(d + 2)), [], seed)
    X = log.initial()
    fresh = d + 2
    for _ in range(steps):
        moves = applicable_moves(X, max_index_exclusive, fresh)
        if max_vertices is not None and X.num_vertices >= max_vertices:
            moves = [mv for mv in moves if mv.index > 0]
            if not moves:
                break
        mv = moves[rng.randrange(len(moves))]
        X = apply_move(X, mv)
        log.moves.append(mv)
        if mv.index == 0:
            fresh += 1
    return X, log


def walk_length(X: SimplicialComplex) -> int:
    """sum over 0 <= ell < d/2 of g_{ell+1}: the number of moves in any tame history."""
    d = X.dim
    g = g_vector(X)
    return sum(g[ell + 1] for ell in range(d + 1) if 2 * ell < d)
