import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import complexes, random_facets
from mucalc.complex import (
    f_from_g,
    f_vector,
    format_facet_list,
    from_facets,
    g_vector,
    induced,
    is_pseudomanifold,
    is_pure,
    is_two_neighbourly,
    join,
    link,
    parse_facet_list,
    simplex_boundary,
    simplex_closure,
    skeleton,
    standard_sphere,
    to_mask,
    void_sphere,
)


def closure_f(facets):
    """f-vector by enumerating every subset of every facet."""
    faces = set()
    for f in facets:
        for k in range(len(f) + 1):
            faces.update(combinations(sorted(f), k))
    d = max(len(f) for f in faces) - 1
    return tuple(sum(1 for f in faces if len(f) == i + 1) for i in range(-1, d + 1))


def test_boundary_of_tetrahedron(S24):
    assert S24.f_vector == (1, 4, 6, 4)
    assert S24.dim == 2


def test_single_vertex():
    X = from_facets([(1,)])
    assert X.faces == frozenset({0, to_mask([1])})
    assert X.dim == 0


def test_stacked5_face_numbers(stacked5):
    facets = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5)]
    assert stacked5 == from_facets(facets)
    assert stacked5.f_vector == (1, 5, 9, 6) == closure_f(facets)


def test_empty_input_rejected():
    with pytest.raises(ValueError, match="no facets"):
        from_facets([])


def test_redundant_faces_absorbed():
    assert from_facets([(1, 2, 3), (1, 2), (3,), (3, 2, 1)]) == simplex_closure(to_mask([1, 2, 3]))


def test_induced_examples(S24, stacked5):
    assert induced(S24, [1, 2, 3]) == simplex_closure(to_mask([1, 2, 3]))
    empty_triangle = induced(stacked5, [2, 3, 4])
    assert empty_triangle == simplex_boundary(to_mask([2, 3, 4]))
    assert induced(S24, [1, 2, 9]) == simplex_closure(to_mask([1, 2]))


def test_link_examples(S24, stacked5):
    assert link(S24, 1) == simplex_boundary(to_mask([2, 3, 4]))
    assert link(stacked5, 5) == simplex_boundary(to_mask([2, 3, 4]))
    assert link(stacked5, 2) == from_facets([(1, 3), (3, 5), (5, 4), (4, 1)])
    with pytest.raises(ValueError):
        link(S24, 7)


def test_join_examples(S24):
    assert join(S24, void_sphere()) == S24
    cone = join(simplex_closure(to_mask([0])), simplex_boundary(to_mask([1, 2, 3])))
    assert cone == from_facets([(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    square = join(simplex_boundary(to_mask([1, 2])), simplex_boundary(to_mask([3, 4])))
    assert square == from_facets([(1, 3), (3, 2), (2, 4), (4, 1)])
    with pytest.raises(ValueError):
        join(S24, S24)


def test_simplex_examples(S24):
    assert simplex_boundary(to_mask([5])) == void_sphere()
    assert standard_sphere(2, [1, 2, 3, 4]) == S24
    assert simplex_closure(to_mask([1, 2])).faces == frozenset({0, 0b010, 0b100, 0b110})
    for op in (simplex_closure, simplex_boundary):
        with pytest.raises(ValueError):
            op(0)


def test_skeleton_examples(S24, stacked5):
    K4 = from_facets(list(combinations([1, 2, 3, 4], 2)))
    assert skeleton(S24, 1) == K4
    K5_minus = from_facets([e for e in combinations([1, 2, 3, 4, 5], 2) if e != (1, 5)])
    assert skeleton(stacked5, 1) == K5_minus
    assert skeleton(stacked5, 2) == stacked5


def test_g_vector_examples(stacked5):
    for d in range(0, 7):
        assert g_vector(standard_sphere(d)) == (1,) + (0,) * (d + 1)
    # the closed formula gives g_3 = -1 here; see the repository notes
    assert g_vector(stacked5) == (1, 1, 0, -1)
    assert f_vector(stacked5) == (1, 5, 9, 6)


def test_f_from_g_roundtrip_random():
    rng = random.Random(7)
    for _ in range(100):
        X = from_facets(random_facets(rng, rng.randint(1, 7)))
        assert f_from_g(g_vector(X), X.dim) == X.f_vector


@given(complexes())
def test_f_from_g_roundtrip(X):
    assert f_from_g(g_vector(X), X.dim) == X.f_vector


def test_predicates(S24, stacked5):
    assert is_pure(S24) and is_pseudomanifold(S24) and is_two_neighbourly(S24)
    assert is_pseudomanifold(stacked5) and not is_two_neighbourly(stacked5)
    tri = simplex_closure(to_mask([1, 2, 3]))
    assert is_pseudomanifold(tri, allow_boundary=True) and not is_pseudomanifold(tri)
    assert not is_pure(from_facets([(1, 2, 3), (3, 4)]))


@given(complexes(), st.data())
def test_induced_properties(X, data):
    V = list(X.vertices)
    assert induced(X, V) == X
    A = data.draw(st.sets(st.sampled_from(V)))
    B = data.draw(st.sets(st.sampled_from(V)))
    assert induced(induced(X, A), B) == induced(X, A & B)
    Y = induced(X, A)
    assert all(f in X for f in Y.faces)


@given(complexes(max_vertices=5))
def test_link_of_cone_point(Y):
    apex = max(Y.vertices) + 1
    cone = join(simplex_closure(to_mask([apex])), Y)
    assert link(cone, apex) == Y


@given(complexes())
def test_two_neighbourly_iff_links_miss_nothing(X):
    # f0(X) - f0(lk x) = 1 for all x exactly when every pair is an edge
    # (needs every vertex to have a nonempty link, so compare only then)
    if X.num_vertices > 1 and all(link(X, x).num_vertices > 0 for x in X.vertices):
        tight = all(X.num_vertices - link(X, x).num_vertices == 1 for x in X.vertices)
        assert tight == is_two_neighbourly(X)


def test_facet_list_text_roundtrip(stacked5):
    text = format_facet_list(stacked5)
    again, names = parse_facet_list(text)
    assert again.f_vector == stacked5.f_vector
    assert len(names) == 5


def test_facet_list_tokens_and_comments():
    X, names = parse_facet_list("# a triangle\na b c\n\nb d  # an edge\n")
    assert names == ["a", "b", "c", "d"]
    assert X.f_vector == (1, 4, 4, 1)
    assert format_facet_list(X, names).split("\n")[0].split() == ["a", "b", "c"]
