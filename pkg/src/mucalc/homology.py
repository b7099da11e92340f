"""Simplicial homology ranks over GF(p) or the rationals.

Every rank is computed by exact elimination: XOR on bit-packed columns for
characteristic 2, modular arithmetic for odd primes, and fraction-free integer
elimination (with content reduction) for characteristic 0.  Pivots are chosen
deterministically, by default the smallest row index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

from .complex import (
    SimplicialComplex,
    adjacency,
    components,
    from_mask,
    is_pseudomanifold,
    is_pure,
    to_mask,
)


def check_char(char: int) -> int:
    if char == 0:
        return 0
    if char < 2 or any(char % q == 0 for q in range(2, int(char ** 0.5) + 1)):
        raise ValueError(f"field characteristic must be 0 or a prime, got {char}")
    return char


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        check_char(self.characteristic)


def _char(field) -> int:
    if isinstance(field, FieldSpec):
        return field.characteristic
    return check_char(field)


# ---------------------------------------------------------------- rank engines

def rank_gf2(columns: Iterable[int], pivot: str = "min") -> int:
    """Rank over GF(2) of columns packed as integers (bit i = row i)."""
    pivots: dict[int, int] = {}
    r = 0
    for c in columns:
        while c:
            key = (c & -c) if pivot == "min" else (1 << (c.bit_length() - 1))
            p = pivots.get(key)
            if p is None:
                pivots[key] = c
                r += 1
                break
            c ^= p
    return r


def rank_modp(columns: Iterable[dict], p: int, pivot: str = "min") -> int:
    """Rank over GF(p) of sparse columns {row: coefficient}."""
    pick = min if pivot == "min" else max
    pivots: dict[int, dict] = {}
    for col in columns:
        c = {k: v % p for k, v in col.items() if v % p}
        while c:
            k = pick(c)
            piv = pivots.get(k)
            if piv is None:
                inv = pow(c[k], -1, p)
                pivots[k] = {r: v * inv % p for r, v in c.items()}
                break
            f = c[k]
            for r, v in piv.items():
                nv = (c.get(r, 0) - f * v) % p
                if nv:
                    c[r] = nv
                else:
                    c.pop(r, None)
    return len(pivots)


def rank_rational(columns: Iterable[dict], pivot: str = "min") -> int:
    """Rank over Q of sparse integer columns, by fraction-free elimination."""
    pick = min if pivot == "min" else max
    pivots: dict[int, dict] = {}
    for col in columns:
        c = {k: v for k, v in col.items() if v}
        while c:
            k = pick(c)
            piv = pivots.get(k)
            if piv is None:
                pivots[k] = c
                break
            a, b = piv[k], c[k]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {r: a * v for r, v in c.items()}
            for r, v in piv.items():
                nv = new.get(r, 0) - b * v
                if nv:
                    new[r] = nv
                else:
                    new.pop(r, None)
            content = 0
            for v in new.values():
                content = gcd(content, v)
                if content == 1:
                    break
            if content > 1:
                new = {r: v // content for r, v in new.items()}
            c = new
    return len(pivots)


def rank(columns, char: int, pivot: str = "min") -> int:
    if char == 2:
        return rank_gf2(columns, pivot)
    if char == 0:
        return rank_rational(columns, pivot)
    return rank_modp(columns, char, pivot)


# ---------------------------------------------------------------- chain data

class ChainData:
    """Oriented boundary columns of a complex, indexed per dimension.

    Column ``k`` of dimension ``n`` is the boundary of the ``k``-th n-face
    (sorted by mask) expressed in terms of indices of (n-1)-faces.
    Subcomplex ranks are obtained by selecting columns, and relative or
    restricted ranks by additionally masking rows.
    """

    def __init__(self, X: SimplicialComplex):
        self.X = X
        self.dim = X.dim
        self.faces = X.by_dim
        self.index = [{f: i for i, f in enumerate(g)} for g in self.faces]
        self.adj = adjacency(X)
        self.bits: list[list[int]] = [[]]
        self.signed: list[list[dict]] = [[]]
        for n in range(1, self.dim + 1):
            lower = self.index[n - 1]
            bits, signed = [], []
            for f in self.faces[n]:
                packed, col, sign = 0, {}, 1
                for v in from_mask(f):
                    i = lower[f ^ (1 << v)]
                    packed |= 1 << i
                    col[i] = sign
                    sign = -sign
                bits.append(packed)
                signed.append(col)
            self.bits.append(bits)
            self.signed.append(signed)

    def columns(self, n: int, char: int, keep=None, rows=None):
        """Boundary columns of dimension n.

        ``keep`` selects columns (a predicate on face masks); ``rows`` is an
        optional set of allowed row indices given as a bitmask.
        """
        faces = self.faces[n]
        if char == 2:
            src = self.bits[n]
            cols = [src[i] for i, f in enumerate(faces) if keep is None or keep(f)]
            if rows is not None:
                cols = [c & rows for c in cols]
            return cols
        src = self.signed[n]
        cols = [src[i] for i, f in enumerate(faces) if keep is None or keep(f)]
        if rows is not None:
            cols = [{r: v for r, v in c.items() if rows >> r & 1} for c in cols]
        return cols

    def boundary_rank(self, n: int, char: int, keep=None, rows=None, pivot="min") -> int:
        if n <= 0 or n > self.dim:
            return 0
        return rank(self.columns(n, char, keep, rows), char, pivot)

    def row_mask(self, n: int, keep) -> int:
        """Bitmask of n-face indices satisfying ``keep``."""
        out = 0
        for i, f in enumerate(self.faces[n]):
            if keep(f):
                out |= 1 << i
        return out

    def induced_reduced_betti(self, A: int, char: int, pivot="min") -> list[int]:
        """Reduced Betti numbers beta~_0..beta~_d of X[A] for nonempty A."""
        d = self.dim
        inside = (lambda f: f & ~A == 0)
        counts = [sum(1 for f in g if f & ~A == 0) for g in self.faces]
        comps = components(self.X, A, self.adj)
        ranks = [0] * (d + 2)
        if d >= 1:
            ranks[1] = counts[0] - comps
        for n in range(2, d + 1):
            if counts[n]:
                ranks[n] = self.boundary_rank(n, char, inside, pivot=pivot)
        out = [comps - 1]
        for n in range(1, d + 1):
            out.append(counts[n] - ranks[n] - ranks[n + 1])
        return out


@lru_cache(maxsize=512)
def chain_data(X: SimplicialComplex) -> ChainData:
    return ChainData(X)


# ---------------------------------------------------------------- Betti numbers

@dataclass(frozen=True)
class BettiData:
    """Reduced Betti numbers beta~_-1 .. beta~_d; index with ``betti[i]``."""

    reduced: tuple

    def __getitem__(self, i: int) -> int:
        j = i + 1
        return self.reduced[j] if 0 <= j < len(self.reduced) else 0

    @property
    def dim(self) -> int:
        return len(self.reduced) - 2

    @property
    def unreduced(self) -> tuple:
        """beta_0..beta_d (the empty complex has none)."""
        if len(self.reduced) < 2:
            return ()
        return (self.reduced[1] + 1,) + tuple(self.reduced[2:])

    def is_acyclic(self) -> bool:
        return not any(self.reduced)

    def is_sphere_like(self, n: int) -> bool:
        return all(self[i] == (1 if i == n else 0) for i in range(-1, max(n, self.dim) + 1))


def betti_reduced(X: SimplicialComplex, field=0, pivot: str = "min") -> BettiData:
    char = _char(field)
    if X.dim < 0:
        return BettiData((1,))
    cd = chain_data(X)
    return BettiData((0,) + tuple(cd.induced_reduced_betti(X.vertex_mask, char, pivot)))


def betti(X: SimplicialComplex, field=0) -> tuple:
    """Ordinary (unreduced) Betti numbers beta_0..beta_d."""
    return betti_reduced(X, field).unreduced


def betti_pair(X: SimplicialComplex, B, A, field=0, pivot: str = "min") -> tuple:
    """beta_i(X[B], X[A]) for i = 0..dim X, from the quotient chain complex."""
    char = _char(field)
    b = B if isinstance(B, int) else to_mask(B)
    a = A if isinstance(A, int) else to_mask(A)
    if a & ~b:
        raise ValueError("relative homology needs A to be a subset of B")
    if X.dim < 0:
        return ()
    cd = chain_data(X)

    def rel(f):
        return f & ~b == 0 and f & ~a != 0

    n_faces = [sum(1 for f in g if rel(f)) for g in cd.faces]
    ranks = [0] * (cd.dim + 2)
    for n in range(1, cd.dim + 1):
        if n_faces[n] and n_faces[n - 1]:
            rows = cd.row_mask(n - 1, rel)
            ranks[n] = cd.boundary_rank(n, char, rel, rows, pivot)
    return tuple(n_faces[n] - ranks[n] - ranks[n + 1] for n in range(cd.dim + 1))


def induced_kernel_dim(X: SimplicialComplex, A, j: int, field=0) -> int:
    """Dimension of the kernel of H_j(X[A]) -> H_j(X) (ordinary homology).

    Uses ker = (B_j(X) cap C_j(X[A])) / B_j(X[A]); the intersection has
    dimension rank d_{j+1} - rank(d_{j+1} restricted to rows outside X[A]).
    """
    char = _char(field)
    a = A if isinstance(A, int) else to_mask(A)
    if j < 0 or j >= X.dim:
        return 0
    cd = chain_data(X)

    def inside(f):
        return f & ~a == 0

    full = cd.boundary_rank(j + 1, char)
    outside_rows = cd.row_mask(j, lambda f: not inside(f))
    restricted = cd.boundary_rank(j + 1, char, None, outside_rows)
    sub = cd.boundary_rank(j + 1, char, inside)
    return full - restricted - sub


def induced_rank(X: SimplicialComplex, A, j: int, field=0) -> int:
    """Rank of the inclusion-induced map H_j(X[A]) -> H_j(X)."""
    Y_betti = betti_reduced_induced(X, A, field)
    bj = Y_betti[j] + (1 if j == 0 and Y_betti.dim >= 0 else 0)
    return bj - induced_kernel_dim(X, A, j, field)


def induced_injective(X: SimplicialComplex, A, j: int, field=0) -> bool:
    return induced_kernel_dim(X, A, j, field) == 0


def betti_reduced_induced(X: SimplicialComplex, A, field=0) -> BettiData:
    a = A if isinstance(A, int) else to_mask(A)
    a &= X.vertex_mask
    if a == 0:
        return BettiData((1,))
    cd = chain_data(X)
    bet = cd.induced_reduced_betti(a, _char(field))
    # trailing zeros above dim X[A] are harmless
    return BettiData((0,) + tuple(bet))


def injectivity_scan(X: SimplicialComplex, field=0) -> list[bool]:
    """For each degree j = 0..dim X: is H_j(Y) -> H_j(X) injective for every induced Y?"""
    char = _char(field)
    if X.dim < 0:
        return []
    cd = chain_data(X)
    verts = X.vertices
    m = len(verts)
    ok = [True] * (X.dim + 1)
    full = [cd.boundary_rank(j + 1, char) for j in range(X.dim + 1)]
    for bits in range(1 << m):
        a = 0
        for i in range(m):
            if bits >> i & 1:
                a |= 1 << verts[i]

        def inside(f, a=a):
            return f & ~a == 0

        for j in range(X.dim):
            if not ok[j] or full[j] == 0:
                continue
            outside_rows = cd.row_mask(j, lambda f: not inside(f))
            restricted = cd.boundary_rank(j + 1, char, None, outside_rows)
            sub = cd.boundary_rank(j + 1, char, inside)
            if full[j] - restricted - sub:
                ok[j] = False
    return ok


# ---------------------------------------------------------------- recognition

def _require_pure(X: SimplicialComplex):
    if not is_pure(X):
        raise ValueError("homology manifold recognition needs a pure complex")


@lru_cache(maxsize=8192)
def _sphere(X: SimplicialComplex, char: int) -> bool:
    n = X.dim
    if n < 0:
        return True
    if not is_pure(X) or (n >= 1 and not is_pseudomanifold(X)):
        return False
    if not betti_reduced(X, char).is_sphere_like(n):
        return False
    return all(_sphere(X.face_link(1 << v), char) for v in X.vertices)


@lru_cache(maxsize=8192)
def _closed_manifold(X: SimplicialComplex, char: int) -> bool:
    if X.dim < 0 or not is_pure(X):
        return False
    if X.dim >= 1 and not is_pseudomanifold(X):
        return False
    return all(_sphere(X.face_link(1 << v), char) for v in X.vertices)


@lru_cache(maxsize=8192)
def _manifold_with_boundary(X: SimplicialComplex, char: int) -> bool:
    if X.dim < 0 or not is_pure(X):
        return False
    if X.dim >= 1 and not is_pseudomanifold(X, allow_boundary=True):
        return False
    for v in X.vertices:
        L = X.face_link(1 << v)
        if not (_sphere(L, char) or _ball(L, char)):
            return False
    return True


@lru_cache(maxsize=8192)
def _boundary(X: SimplicialComplex, char: int) -> SimplicialComplex:
    bd = [f for f in X.faces if f and betti_reduced(X.face_link(f), char).is_acyclic()]
    return SimplicialComplex.from_faces(bd)


@lru_cache(maxsize=8192)
def _ball(X: SimplicialComplex, char: int) -> bool:
    if X.dim < 0:
        return False
    if not _manifold_with_boundary(X, char):
        return False
    if not betti_reduced(X, char).is_acyclic():
        return False
    bd = _boundary(X, char)
    return bd.dim == X.dim - 1 and _sphere(bd, char)


def is_homology_sphere(X: SimplicialComplex, field=0) -> bool:
    _require_pure(X)
    return _sphere(X, _char(field))


def is_homology_ball(X: SimplicialComplex, field=0) -> bool:
    _require_pure(X)
    return _ball(X, _char(field))


def is_closed_homology_manifold(X: SimplicialComplex, field=0) -> bool:
    _require_pure(X)
    return _closed_manifold(X, _char(field))


def is_homology_manifold_with_boundary(X: SimplicialComplex, field=0) -> bool:
    _require_pure(X)
    return _manifold_with_boundary(X, _char(field))


def boundary_complex(X: SimplicialComplex, field=0) -> SimplicialComplex:
    """Closure of the nonempty faces whose links are acyclic."""
    _require_pure(X)
    return _boundary(X, _char(field))
