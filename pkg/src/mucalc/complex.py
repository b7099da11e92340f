"""Finite abstract simplicial complexes.

A face is stored as an integer bitmask in which bit ``v`` is set when vertex
label ``v`` belongs to the face.  Labels are arbitrary non-negative integers,
so masks stay stable when complexes are combined, linked or modified by
bistellar moves.  The empty face is the mask ``0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"vertex labels must be non-negative, got {v}")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    """Sorted vertex labels of a face mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _as_mask(face) -> int:
    return face if isinstance(face, int) else to_mask(face)


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """An immutable downward-closed family of faces (bitmasks).

    Build instances with :func:`from_facets` or :meth:`from_faces`; the raw
    constructor trusts its input to be closed under subsets.
    """

    faces: frozenset

    @classmethod
    def from_faces(cls, masks: Iterable[int]) -> "SimplicialComplex":
        """Downward closure of an arbitrary collection of face masks."""
        closed = {0}
        for mask in masks:
            if mask in closed:
                continue
            closed.update(submasks(mask))
        return cls(frozenset(closed))

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __contains__(self, face) -> bool:
        return _as_mask(face) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __repr__(self):
        facets = " ".join("".join(str(v) if v < 10 else f"({v})" for v in f)
                          for f in self.facet_tuples())
        return f"SimplicialComplex(dim={self.dim}, facets=[{facets}])"

    @cached_property
    def vertex_mask(self) -> int:
        out = 0
        for f in self.faces:
            out |= f
        return out

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return from_mask(self.vertex_mask)

    @property
    def num_vertices(self) -> int:
        return self.vertex_mask.bit_count()

    @cached_property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.faces) - 1

    @cached_property
    def by_dim(self) -> tuple[tuple[int, ...], ...]:
        """Face masks grouped by dimension 0..dim, each group sorted."""
        groups: list[list[int]] = [[] for _ in range(self.dim + 1)]
        for f in self.faces:
            if f:
                groups[f.bit_count() - 1].append(f)
        return tuple(tuple(sorted(g)) for g in groups)

    @cached_property
    def facets(self) -> tuple[int, ...]:
        """Inclusion-maximal faces, sorted by (size, mask)."""
        faces = self.faces
        out = []
        for f in faces:
            rest = self.vertex_mask & ~f
            maximal = True
            while rest:
                low = rest & -rest
                if f | low in faces:
                    maximal = False
                    break
                rest ^= low
            if maximal:
                out.append(f)
        return tuple(sorted(out, key=lambda m: (m.bit_count(), m)))

    def facet_tuples(self) -> list[tuple[int, ...]]:
        return sorted(from_mask(f) for f in self.facets)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_d)."""
        return (1,) + tuple(len(g) for g in self.by_dim)

    def face_link(self, face) -> "SimplicialComplex":
        """Link of an arbitrary face: faces disjoint from it whose union with it is a face."""
        a = _as_mask(face)
        if a not in self.faces:
            raise ValueError(f"{from_mask(a)} is not a face")
        return SimplicialComplex(frozenset(f ^ a for f in self.faces if f & a == a))


# ---------------------------------------------------------------- constructors

def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    masks = [to_mask(f) for f in facets]
    if not masks:
        raise ValueError("no facets")
    return SimplicialComplex.from_faces(masks)


def void_sphere() -> SimplicialComplex:
    """The complex {emptyset}: boundary of a single vertex, the (-1)-sphere."""
    return SimplicialComplex(frozenset({0}))


def simplex_closure(face) -> SimplicialComplex:
    a = _as_mask(face)
    if a == 0:
        raise ValueError("simplex closure of the empty face")
    return SimplicialComplex(frozenset(submasks(a)))


def simplex_boundary(face) -> SimplicialComplex:
    a = _as_mask(face)
    if a == 0:
        raise ValueError("simplex boundary of the empty face")
    return SimplicialComplex(frozenset(s for s in submasks(a) if s != a))


def standard_sphere(d: int, labels: Sequence[int] | None = None) -> SimplicialComplex:
    """The (d+2)-vertex d-sphere, boundary of a (d+1)-simplex."""
    if labels is None:
        labels = range(d + 2)
    labels = list(labels)
    if len(set(labels)) != d + 2:
        raise ValueError(f"standard {d}-sphere needs exactly {d + 2} labels")
    return simplex_boundary(labels)


# ---------------------------------------------------------------- operations

def induced(X: SimplicialComplex, vertices) -> SimplicialComplex:
    """X[A]: the faces of X contained in A (labels outside V(X) are ignored)."""
    a = _as_mask(vertices)
    return SimplicialComplex(frozenset(f for f in X.faces if f & ~a == 0))


def link(X: SimplicialComplex, x: int) -> SimplicialComplex:
    if not X.vertex_mask >> x & 1:
        raise ValueError(f"vertex {x} not in complex")
    return X.face_link(1 << x)


def join(X1: SimplicialComplex, X2: SimplicialComplex) -> SimplicialComplex:
    if X1.vertex_mask & X2.vertex_mask:
        raise ValueError("join of complexes with overlapping vertex sets")
    return SimplicialComplex(frozenset(a | b for a in X1.faces for b in X2.faces))


def skeleton(X: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ValueError("skeleton dimension must be non-negative")
    if k >= X.dim:
        return X
    return SimplicialComplex(frozenset(f for f in X.faces if f.bit_count() <= k + 1))


def relabel(X: SimplicialComplex, mapping: dict[int, int]) -> SimplicialComplex:
    """Apply an injective vertex relabelling."""
    out = set()
    for f in X.faces:
        m = 0
        for v in from_mask(f):
            m |= 1 << mapping[v]
        out.add(m)
    return SimplicialComplex(frozenset(out))


def compressed(X: SimplicialComplex) -> SimplicialComplex:
    """Relabel the vertices to 0..m-1 preserving their order."""
    verts = X.vertices
    if verts == tuple(range(len(verts))):
        return X
    return relabel(X, {v: i for i, v in enumerate(verts)})


def is_connected(X: SimplicialComplex) -> bool:
    return X.num_vertices > 0 and components(X, X.vertex_mask) == 1


def adjacency(X: SimplicialComplex) -> dict[int, int]:
    adj = {v: 0 for v in X.vertices}
    for e in X.by_dim[1] if X.dim >= 1 else ():
        a, b = from_mask(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def components(X: SimplicialComplex, vertices: int, adj: dict[int, int] | None = None) -> int:
    """Number of connected components of the induced subcomplex on ``vertices``."""
    if adj is None:
        adj = adjacency(X)
    rest = vertices & X.vertex_mask
    n = 0
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = adj[low.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        rest &= ~comp
        n += 1
    return n


# ---------------------------------------------------------------- f and g

def f_vector(X: SimplicialComplex) -> tuple[int, ...]:
    return X.f_vector


def g_vector(X: SimplicialComplex, d: int | None = None) -> tuple[int, ...]:
    """(g_0, ..., g_{d+1}); ``d`` defaults to dim X and may be set larger.

    Passing ``d`` explicitly treats X as a d-dimensional complex with zero
    face counts above its actual dimension (used for vertex links).
    """
    if d is None:
        d = X.dim
    f = list(X.f_vector) + [0] * (d + 2 - len(X.f_vector))

    def fi(i):
        return f[i + 1]

    return tuple(
        sum((-1) ** (j - i - 1) * comb(d - i + 1, j - i - 1) * fi(i) for i in range(-1, j))
        for j in range(d + 2)
    )


def f_from_g(g: Sequence[int], d: int) -> tuple[int, ...]:
    """Invert :func:`g_vector`: returns (f_-1, ..., f_d)."""
    if len(g) != d + 2:
        raise ValueError(f"g-vector of a {d}-complex has {d + 2} entries")
    return tuple(
        sum(comb(d - j + 2, i - j + 1) * g[j] for j in range(i + 2))
        for i in range(-1, d + 1)
    )


# ---------------------------------------------------------------- predicates

def is_pure(X: SimplicialComplex) -> bool:
    top = X.dim + 1
    return all(f.bit_count() == top for f in X.facets)


def ridge_degrees(X: SimplicialComplex) -> dict[int, int]:
    """Number of facets through each codimension-one face of a pure complex."""
    deg = {r: 0 for r in X.by_dim[X.dim - 1]} if X.dim >= 1 else {0: 0}
    for f in X.facets:
        rest = f
        while rest:
            low = rest & -rest
            deg[f ^ low] += 1
            rest ^= low
    return deg


def is_pseudomanifold(X: SimplicialComplex, allow_boundary: bool = False) -> bool:
    if X.dim < 0 or not is_pure(X):
        return False
    if X.dim == 0:
        return True
    degrees = ridge_degrees(X).values()
    if allow_boundary:
        return all(1 <= k <= 2 for k in degrees)
    return all(k == 2 for k in degrees)


def is_two_neighbourly(X: SimplicialComplex) -> bool:
    m = X.num_vertices
    return (X.f_vector[2] if X.dim >= 1 else 0) == comb(m, 2)


# ---------------------------------------------------------------- facet-list text format

_TOKEN = re.compile(r"^[A-Za-z0-9_]+$")


def parse_facet_list(text: str) -> tuple[SimplicialComplex, list[str]]:
    """Parse whitespace-separated facets, one per line; ``#`` starts a comment.

    Tokens are mapped to labels 0, 1, 2, ... in order of first appearance.
    Returns the complex and the list of token names indexed by label.
    """
    names: list[str] = []
    index: dict[str, int] = {}
    facets = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        facet = []
        for tok in line.split():
            if not _TOKEN.match(tok):
                raise ValueError(f"line {lineno}: bad vertex token {tok!r}")
            if tok not in index:
                index[tok] = len(names)
                names.append(tok)
            facet.append(index[tok])
        facets.append(facet)
    return from_facets(facets), names


def format_facet_list(X: SimplicialComplex, names: Sequence[str] | None = None) -> str:
    """Canonical serialization: facets sorted lexicographically by compressed index."""
    verts = X.vertices
    pos = {v: i for i, v in enumerate(verts)}
    if names is None:
        names = {v: str(v) for v in verts}
    else:
        names = {v: names[v] for v in verts}
    rows = sorted(tuple(pos[v] for v in from_mask(f)) for f in X.facets if f)
    return "".join(" ".join(names[verts[i]] for i in row) + "\n" for row in rows)


def load_facet_list(path) -> tuple[SimplicialComplex, list[str]]:
    with open(path) as fh:
        return parse_facet_list(fh.read())
