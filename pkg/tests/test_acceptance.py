"""The fourteen acceptance criteria, exact arithmetic throughout.

Each test prints one line ``PASS|FAIL [n] label (seconds)`` and fails if its
check fails or its runtime limit is exceeded.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

from conftest import random_facets
from mucalc import library
from mucalc.bistellar import BistellarMove, MoveLog, applicable_moves, apply_move, g_update_check, tame_walk, walk_length
from mucalc.complex import from_facets, g_vector, is_connected, is_two_neighbourly, simplex_closure, skeleton, standard_sphere
from mucalc.harness import any_failed, link_g_sums, scan_conjecture, verify_duality, verify_manifold_glbt, verify_morse, verify_sigma_bound, verify_tightness
from mucalc.homology import betti, boundary_complex, injectivity_scan, is_homology_ball
from mucalc.sigma import a_ell, binomial_identity, mu_vector, mu_via_pairs, sigma_step, sigma_vector, track_a
from mucalc.stacked import certify_stacked_manifold, certify_stacked_sphere, transport_ball


@contextmanager
def criterion(capsys, n, label, limit):
    start = time.perf_counter()
    ok = False
    notes = {}
    try:
        yield notes
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < limit
        extra = "".join(f"; {k}: {v}" for k, v in notes.items())
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} [{n:2d}] {label} ({elapsed:.2f}s, limit {limit}s{extra})")
    assert elapsed < limit, f"criterion {n} took {elapsed:.1f}s"


def sphere_move_samples(seed, count, dims, max_m):
    """Random spheres (walks with moves of any index) and one random move each."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.choice(dims)
        R, _ = tame_walk(d, rng.randint(0, 5), rng.randrange(2 ** 32), max_index_exclusive=d + 1,
                         max_vertices=max_m - 1)
        moves = applicable_moves(R)
        mv = moves[rng.randrange(len(moves))]
        S = apply_move(R, mv)
        if S.num_vertices <= max_m:
            out.append((R, mv, S))
    return out


def test_c01_standard_sphere_sigma(capsys):
    # limit is 1 s per instance; eight instances
    with criterion(capsys, 1, "sigma of the standard d-sphere = (-1, 0, ..., 0, 1), d = 2..5, chars 0 and 2", 8):
        for d in range(2, 6):
            for char in (0, 2):
                start = time.perf_counter()
                expect = (F(-1),) + (F(0),) * (d - 1) + (F(1),)
                assert sigma_vector(standard_sphere(d), char) == expect
                assert time.perf_counter() - start < 1


def test_c02_stacked5_sigma_and_updates(capsys, S24, stacked5):
    with criterion(capsys, 2, "stacked5 sigma by brute force; one-move update and a_0 tracking reproduce it", 1):
        s = sigma_vector(stacked5)
        assert s == (F(-9, 10), F(1, 10), F(1))
        step = sigma_step(sigma_vector(S24), 0, 5, 2)
        assert step.differences[(0, -1)] == s[0]  # sigma_{-1} = 0
        log = MoveLog(2, [1, 2, 3, 4], [BistellarMove((2, 3, 4), (5,))])
        tr = track_a(log, 0)
        assert tr.exact and tr.value == a_ell(s, 0) == F(-9, 10)


def test_c03_top_relation(capsys):
    with criterion(capsys, 3, "sigma_{d-1} = 1 + sigma_0 on 50 seeded tame spheres, d = 2, 3, m <= 12", 120):
        rng = random.Random(3)
        for k in range(50):
            d = 2 + k % 2
            S, log = tame_walk(d, rng.randint(0, 12), rng.randrange(2 ** 32), max_vertices=12)
            assert log.is_tame() and S.num_vertices <= 12
            s = sigma_vector(S)
            assert s[d - 1] == 1 + s[0]


def test_c04_single_move_sigma(capsys):
    with criterion(capsys, 4, "one-move sigma update: unaffected indices exact, strict bounds, jump formula; 30 moves, m <= 10", 300) as notes:
        seen = {"plain": 0, "overlap": 0, "middle": 0}
        for R, mv, S in sphere_move_samples(4, 30, (2, 3, 4), 10):
            t, d = mv.index, R.dim
            sr, ss = sigma_vector(R), sigma_vector(S)
            step = sigma_step(sr, t, S.num_vertices, d)
            assert step.check(sr, ss) == []
            if 2 * t == d:
                seen["middle"] += 1
                continue
            assert len([x for x in step.strict if x[0] >= 0]) == len(step.strict) > 0
            if step.overlap:
                # shared index: only the telescoped form is exact (recorded in the notes)
                seen["overlap"] += 1
            else:
                seen["plain"] += 1
                assert set(step.differences) == {(t, t - 1), (d - t, d - t - 1)}
        notes["moves"] = seen
        assert seen["plain"] >= 10


def test_c05_mu_two_ways(capsys):
    with criterion(capsys, 5, "mu = covering-pair formula on 100 random complexes (m <= 9) and the library, chars 0 and 2", 300):
        rng = random.Random(5)
        suite = [from_facets(random_facets(rng, rng.randint(1, 9))) for _ in range(100)]
        suite += [library.get(n) for n in library.names()]
        for X in suite:
            for char in (0, 2):
                assert mu_via_pairs(X, char) == mu_vector(X, char)


def test_c06_duality(capsys, stacked5, S35, torus, rp2):
    with criterion(capsys, 6, "mu duality on stacked5, S3_5, torus_7, rp2_6 and 20 walk 3-spheres", 120):
        for char in (0, 2):
            for X in (stacked5, S35, torus, rp2):
                reps = verify_duality(X, char)
                assert not any_failed(reps)
        for seed in range(20):
            S, _ = tame_walk(3, 1 + seed % 6, seed, max_index_exclusive=4, max_vertices=10)
            assert not any_failed(verify_duality(S))


def test_c07_morse(capsys):
    with criterion(capsys, 7, "alternating/termwise mu >= beta and equality <=> injectivity, 50 random complexes, m <= 8", 300):
        rng = random.Random(7)
        equal, strict = 0, 0
        for _ in range(50):
            X = from_facets(random_facets(rng, rng.randint(2, 8)))
            for char in (0, 2):
                reps = verify_morse(X, char)
                # each report already compares equality against the injectivity scan
                assert not any_failed(reps)
                assert all(r.equality_witness is not None for r in reps if r.theorem_id == "morse-alternating")
                equal += sum(r.lhs == r.rhs for r in reps if r.detail != f"j={X.dim}")
                strict += sum(r.lhs != r.rhs for r in reps)
        assert equal > 0 and strict > 0  # both directions of the iff exercised


def test_c08_tightness(capsys, rp2):
    with criterion(capsys, 8, "tightness: rp2_6 tight over GF(2) only, standard spheres tight, tight => 2-neighbourly", 60):
        assert mu_vector(rp2, 2) == (1, 1, 1) and betti(rp2, 2) == (1, 1, 1)
        assert all(injectivity_scan(rp2, 2))
        assert not all(injectivity_scan(rp2, 0)) and mu_vector(rp2, 0) != betti(rp2, 0)
        for d in range(0, 5):
            assert all(injectivity_scan(standard_sphere(d), 0))
        rng = random.Random(8)
        pool = [library.get(n) for n in library.names() if library.get(n).num_vertices <= 10]
        pool += [from_facets(random_facets(rng, rng.randint(2, 7))) for _ in range(40)]
        tight = 0
        for X in pool:
            for char in (0, 2):
                reps = verify_tightness(X, char)
                assert not any_failed(reps)
                if is_connected(X) and all(injectivity_scan(X, char)):
                    tight += 1
                    assert is_two_neighbourly(X)
        assert tight >= 5


def test_c09_tame_lower_bound(capsys):
    with criterion(capsys, 9, "g_{l+1} >= 0 with equality <=> canonical l-stacked witness; walk length; 30 tame walks", 300):
        rng = random.Random(9)
        zero, positive = 0, 0
        for k in range(30):
            d = 3 + k % 3
            S, log = tame_walk(d, rng.randint(0, 6), rng.randrange(2 ** 32))
            g = g_vector(S)
            assert walk_length(S) == len(log.moves)
            for ell in range(d // 2 + 1):
                assert g[ell + 1] >= 0
                assert (g[ell + 1] == 0) == certify_stacked_sphere(S, ell).valid
                zero += g[ell + 1] == 0
                positive += g[ell + 1] > 0
        assert zero > 0 and positive > 0


def test_c10_equality_case(capsys, stacked5, octahedron):
    with criterion(capsys, 10, "sphere sigma bound: stacked5 equality at -9/10, octahedron strict", 1):
        (r,) = verify_sigma_bound(stacked5)
        assert r.lhs == r.rhs == "-9/10" and r.verdict == "equality-case"
        assert certify_stacked_sphere(stacked5, 1).valid
        (r,) = verify_sigma_bound(octahedron)
        assert F(r.lhs) < F(r.rhs) and r.verdict == "pass"
        assert not certify_stacked_sphere(octahedron, 1).valid


def test_c11_transport(capsys):
    with criterion(capsys, 11, "ball transport along 10 index-0 walks (d = 3, 4, l = 1); refuses t = l", 120):
        for k in range(10):
            d = 3 + k % 2
            _, log = tame_walk(d, 6, k, max_index_exclusive=1)
            R = standard_sphere(d)
            A = simplex_closure(R.vertex_mask)
            for mv in log.moves:
                A = transport_ball(A, mv, 1)
                R = apply_move(R, mv)
                assert is_homology_ball(A)
                assert boundary_complex(A) == R
                assert skeleton(A, d - 1) == skeleton(R, d - 1)
            flips = [mv for mv in applicable_moves(R, 2) if mv.index == 1]
            assert flips
            with pytest.raises(ValueError, match="stackedness not preserved"):
                transport_ball(A, flips[0], 1)


def test_c12_dimension_three(capsys, S35):
    with criterion(capsys, 12, "g_2 >= 10 beta_1 and mu_1 - mu_0 <= -1 + g_2/10 on S3_5 and 10 walk 3-spheres", 120):
        pool = [S35] + [tame_walk(3, 1 + k % 6, 100 + k, max_vertices=10)[0] for k in range(10)]
        kinds = set()
        for M in pool:
            reps = verify_manifold_glbt(M)
            assert not any_failed(reps)
            (r,) = [x for x in reps if x.theorem_id == "glbt-dim3"]
            assert (r.lhs == r.rhs) == certify_stacked_manifold(M, 1).valid
            assert any(x.theorem_id == "mu-bound-dim3" for x in reps)
            kinds.add(r.verdict)
        assert kinds == {"pass", "equality-case"}


def test_c13_identities(capsys):
    with criterion(capsys, 13, "binomial identity p, q, r <= 12; g-change pattern on 50 moves; link g-sums on 20 complexes", 60):
        for p in range(13):
            for q in range(13):
                for r in range(13):
                    lhs, rhs = binomial_identity(p, q, r)
                    assert lhs == rhs
        for R, mv, _ in sphere_move_samples(13, 50, (2, 3, 4, 5), 12):
            assert g_update_check(R, mv)
        rng = random.Random(13)
        for _ in range(20):
            X = from_facets(random_facets(rng, rng.randint(2, 8)))
            assert all(a == b for a, b in link_g_sums(X))


def test_c14_scans(capsys):
    with criterion(capsys, 14, "conjecture scans: sigma bound at d = 2, Betti form at d = 3; 50 instances each", 600):
        r1 = scan_conjecture(1, 2, 50, 14)
        r3 = scan_conjecture(3, 3, 50, 14)
        assert r1 and r3
        assert not any_failed(r1) and not any_failed(r3)
