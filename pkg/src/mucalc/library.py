"""Named complexes with their face vectors checked on construction."""

from __future__ import annotations

from math import comb

from .complex import SimplicialComplex, from_facets, standard_sphere


def _stacked5():
    return from_facets([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5)])


def _octahedron():
    # antipodal pairs (1,2), (3,4), (5,6)
    return from_facets([(a, b, c) for a in (1, 2) for b in (3, 4) for c in (5, 6)])


def _rp2_6():
    return from_facets([
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
    ])


def _torus_7():
    facets = []
    for i in range(7):
        facets.append((i, (i + 1) % 7, (i + 3) % 7))
        facets.append((i, (i + 2) % 7, (i + 3) % 7))
    return from_facets(facets)


def _s2xs1_12():
    """Sphere-times-circle: three prism layers over the boundary of a tetrahedron,
    each triangle x interval split into three tetrahedra, glued cyclically."""
    def v(i, s):
        return 4 * (s % 3) + i

    facets = []
    for s in range(3):
        for (a, b, c) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]:
            facets.append((v(a, s), v(a, s + 1), v(b, s + 1), v(c, s + 1)))
            facets.append((v(a, s), v(b, s), v(b, s + 1), v(c, s + 1)))
            facets.append((v(a, s), v(b, s), v(c, s), v(c, s + 1)))
    return from_facets(facets)


_BUILDERS = {
    "stacked5": (_stacked5, (1, 5, 9, 6)),
    "octahedron": (_octahedron, (1, 6, 12, 8)),
    "rp2_6": (_rp2_6, (1, 6, 15, 10)),
    "torus_7": (_torus_7, (1, 7, 21, 14)),
    "s2xs1_12": (_s2xs1_12, (1, 12, 48, 72, 36)),
}

for _d in range(0, 7):
    _BUILDERS[f"S{_d}_{_d + 2}"] = (
        (lambda d=_d: standard_sphere(d)),
        tuple(comb(_d + 2, i + 1) for i in range(-1, _d + 1)),
    )


def names() -> list[str]:
    return sorted(_BUILDERS)


def get(name: str) -> SimplicialComplex:
    try:
        build, expected = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown complex {name!r}; known: {', '.join(names())}") from None
    X = build()
    if X.f_vector != expected:
        raise AssertionError(f"{name}: f-vector {X.f_vector} != expected {expected}")
    return X


def closed_manifolds(dim: int | None = None) -> list[tuple[str, SimplicialComplex]]:
    """Library entries that are connected closed manifolds (over every field)."""
    keep = ["stacked5", "octahedron", "torus_7", "s2xs1_12"] + [f"S{d}_{d + 2}" for d in range(1, 7)]
    out = [(n, get(n)) for n in keep]
    return [(n, X) for n, X in out if dim is None or X.dim == dim]


def spheres(dim: int | None = None) -> list[tuple[str, SimplicialComplex]]:
    keep = ["stacked5", "octahedron"] + [f"S{d}_{d + 2}" for d in range(0, 7)]
    out = [(n, get(n)) for n in keep]
    return [(n, X) for n, X in out if dim is None or X.dim == dim]
