"""Stackedness certificates.

The witness tried for an l-stacked d-sphere (or closed d-manifold) M is the
largest complex whose (d-l)-skeleton agrees with that of M.  A certificate is
valid when that complex is a homology (d+1)-ball (resp. manifold with
boundary) whose boundary is M.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bistellar import BistellarMove, apply_move
from .complex import (
    SimplicialComplex,
    from_mask,
    is_pure,
    link,
    simplex_closure,
    skeleton,
)
from .homology import (
    _ball,
    _boundary,
    _char,
    _closed_manifold,
    _manifold_with_boundary,
    _sphere,
)

MAX_STACKED_VERTICES = 20


def max_complex_with_skeleton(X: SimplicialComplex, k: int) -> SimplicialComplex:
    """{A subset of V(X) : every subset of A with at most k+1 vertices is a face of X}.

    Grown level by level: a set with more than k+1 vertices is kept when all
    of its codimension-one subsets were kept.
    """
    if not 0 <= k <= max(X.dim, 0):
        raise ValueError(f"skeleton dimension {k} out of range for a {X.dim}-complex")
    if X.num_vertices > MAX_STACKED_VERTICES:
        raise ValueError(f"clique extension capped at {MAX_STACKED_VERTICES} vertices")
    faces = {f for f in X.faces if f.bit_count() <= k + 1}
    level = [f for f in faces if f.bit_count() == k + 1]
    verts = X.vertices
    while level:
        nxt = set()
        for f in level:
            top = f.bit_length() - 1
            for v in verts:
                if v <= top:
                    continue
                g = f | (1 << v)
                rest, ok = f, True
                while rest:
                    low = rest & -rest
                    rest ^= low
                    if g ^ low not in faces:
                        ok = False
                        break
                if ok:
                    nxt.add(g)
        faces |= nxt
        level = list(nxt)
    return SimplicialComplex(frozenset(faces))


@dataclass
class StackedCertificate:
    subject: SimplicialComplex
    ell: int
    delta: SimplicialComplex
    checks: dict = field(default_factory=dict)
    kind: str = "sphere"

    @property
    def valid(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    @property
    def failed_check(self) -> str | None:
        for name, ok in self.checks.items():
            if not ok:
                return name
        return None

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "valid": self.valid,
            "failed_check": self.failed_check,
            "delta_facets": [list(f) for f in self.delta.facet_tuples()],
        }


def _certify(M: SimplicialComplex, ell: int, char: int, kind: str) -> StackedCertificate:
    d = M.dim
    if not 0 <= ell <= d:
        raise ValueError(f"ell = {ell} outside 0..{d}")
    delta = max_complex_with_skeleton(M, d - ell)
    checks = {}
    shape_ok = delta.dim == d + 1 and is_pure(delta)
    if kind == "sphere":
        checks["is_ball_or_manifold"] = shape_ok and _ball(delta, char)
    else:
        checks["is_ball_or_manifold"] = shape_ok and _manifold_with_boundary(delta, char)
    checks["boundary_matches"] = shape_ok and _boundary(delta, char) == M
    checks["skeleton_matches"] = skeleton(delta, d - ell) == skeleton(M, d - ell)
    return StackedCertificate(M, ell, delta, checks, kind)


def certify_stacked_sphere(S: SimplicialComplex, ell: int, field=0) -> StackedCertificate:
    """Try the canonical witness for S being an ell-stacked homology sphere.

    A valid certificate proves stackedness; an invalid one only says that the
    canonical witness failed.
    """
    char = _char(field)
    if not is_pure(S) or not _sphere(S, char):
        raise ValueError("certify_stacked_sphere needs a homology sphere")
    return _certify(S, ell, char, "sphere")


def certify_stacked_manifold(M: SimplicialComplex, ell: int, field=0) -> StackedCertificate:
    char = _char(field)
    if not is_pure(M) or not _closed_manifold(M, char):
        raise ValueError("certify_stacked_manifold needs a closed homology manifold")
    return _certify(M, ell, char, "manifold")


def is_locally_stacked(M: SimplicialComplex, ell: int, field=0) -> bool:
    char = _char(field)
    if not is_pure(M) or not _closed_manifold(M, char):
        raise ValueError("is_locally_stacked needs a closed homology manifold")
    return all(certify_stacked_sphere(link(M, x), ell, char).valid for x in M.vertices)


def transport_ball(A: SimplicialComplex, move: BistellarMove, ell: int) -> SimplicialComplex:
    """Carry a stacked ball across one bistellar move of its boundary.

    Index t <= ell - 1: glue on the simplex alpha | beta.
    Index t >= d - ell + 1: remove the facet alpha | beta.
    """
    d = A.dim - 1
    t = move.index
    if move.dim != d:
        raise ValueError(f"move of dimension {move.dim} for a ball of dimension {A.dim}")
    if t == ell:
        raise ValueError("stackedness not preserved: move index equals ell")
    if 2 * ell + 1 > d:
        raise ValueError(f"transport needs d >= 2 ell + 1 (d = {d}, ell = {ell})")
    whole = move.alpha_mask | move.beta_mask
    if t <= ell - 1:
        if move.beta_mask in A.faces:
            raise ValueError(f"beta {move.beta} is already a face of the ball")
        return SimplicialComplex(A.faces | simplex_closure(whole).faces)
    if t >= d - ell + 1:
        if whole not in A.faces:
            raise ValueError(f"{from_mask(whole)} is not a facet of the ball")
        return SimplicialComplex.from_faces(f for f in A.facets if f != whole)
    raise ValueError(f"index {t} cannot occur on the boundary of an {ell}-stacked ball")


def transport_along(A: SimplicialComplex, moves, ell: int, field=0):
    """Iterate :func:`transport_ball`, yielding (boundary, ball) after each move."""
    char = _char(field)
    R = _boundary(A, char)
    for mv in moves:
        A = transport_ball(A, mv, ell)
        R = apply_move(R, mv)
        yield R, A
