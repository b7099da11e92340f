"""Sigma- and mu-vectors in exact rational arithmetic.

The sigma-vector is a brute-force sum over all 2^m induced subcomplexes.
The term for the empty vertex set contributes -1 to sigma_0 (and nothing to
higher entries); this is the convention under which the standard d-sphere has
sigma_i = -delta_{i0} for i < d.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .complex import SimplicialComplex, compressed, link
from .homology import _char, betti_pair, chain_data

MAX_SIGMA_VERTICES = 16


class RationalVector(tuple):
    """Tuple of Fractions; ``at(i)`` reads 0 outside the stored range."""

    def at(self, i: int) -> Fraction:
        return self[i] if 0 <= i < len(self) else Fraction(0)

    def as_strings(self) -> list[str]:
        return [fraction_str(x) for x in self]


class SigmaVector(RationalVector):
    pass


class MuVector(RationalVector):
    pass


def fraction_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def _size_counts(X: SimplicialComplex, char: int, lo: int, hi: int) -> list[list[int]]:
    """counts[k][i] = sum of beta~_i(X[A]) over nonempty A in [lo, hi) with #A = k.

    ``X`` must have vertices 0..m-1 so that subsets are plain integers.
    """
    cd = chain_data(X)
    m, d = X.num_vertices, X.dim
    counts = [[0] * (d + 1) for _ in range(m + 1)]
    for A in range(max(lo, 1), hi):
        row = counts[A.bit_count()]
        for i, b in enumerate(cd.induced_reduced_betti(A, char)):
            if b:
                row[i] += b
    return counts


def _chunk(args):
    X, char, lo, hi = args
    return _size_counts(X, char, lo, hi)


def sigma_vector(X: SimplicialComplex, field=0, workers: int = 1, force: bool = False) -> SigmaVector:
    """sigma_i = sum over A of beta~_i(X[A]) / binom(m, #A), for i = 0..dim X."""
    char = _char(field)
    if X.dim < 0:
        # only the empty subset: its -1 still lands in sigma_0
        return SigmaVector((Fraction(-1),))
    m = X.num_vertices
    if m > MAX_SIGMA_VERTICES and not force:
        raise ValueError(f"sigma brute force capped at {MAX_SIGMA_VERTICES} vertices (got {m})")
    Xc = compressed(X)
    total = 1 << m
    if workers > 1 and m >= 10:
        step = -(-total // (4 * workers))
        jobs = [(Xc, char, lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_chunk, jobs))
        counts = [[sum(p[k][i] for p in parts) for i in range(X.dim + 1)] for k in range(m + 1)]
    else:
        counts = _size_counts(Xc, char, 0, total)
    sigma = [Fraction(0)] * (X.dim + 1)
    sigma[0] = Fraction(-1)
    for k in range(1, m + 1):
        w = comb(m, k)
        for i, c in enumerate(counts[k]):
            if c:
                sigma[i] += Fraction(c, w)
    return SigmaVector(sigma)


def mu_vector(X: SimplicialComplex, field=0) -> MuVector:
    """The vertex-link aggregate of sigma-vectors:

    mu_0 = sum_x 1/(1 + f_0(lk x)),
    mu_i = sum_x (delta_{i1} + sigma_{i-1}(lk x)) / (1 + f_0(lk x)).
    """
    char = _char(field)
    d = X.dim
    mu = [Fraction(0)] * (d + 1)
    for x in X.vertices:
        L = link(X, x)
        w = Fraction(1, 1 + L.num_vertices)
        s = sigma_vector(L, char)
        mu[0] += w
        for i in range(1, d + 1):
            mu[i] += w * ((1 if i == 1 else 0) + s.at(i - 1))
    return MuVector(mu)


def mu_via_pairs(X: SimplicialComplex, field=0) -> MuVector:
    """mu_i = (1/m) sum_j binom(m-1, j-1)^{-1} sum over covering pairs A < B, #B = j,
    of beta_i(X[B], X[A]).  Costs m 2^(m-1) relative homology computations."""
    char = _char(field)
    Xc = compressed(X)
    m, d = Xc.num_vertices, Xc.dim
    totals = [[0] * (d + 1) for _ in range(m + 1)]
    for B in range(1, 1 << m):
        row = totals[B.bit_count()]
        rest = B
        while rest:
            x = rest & -rest
            rest ^= x
            for i, b in enumerate(betti_pair(Xc, B, B ^ x, char)):
                row[i] += b
    mu = [Fraction(0)] * (d + 1)
    for j in range(1, m + 1):
        w = m * comb(m - 1, j - 1)
        for i, c in enumerate(totals[j]):
            if c:
                mu[i] += Fraction(c, w)
    return MuVector(mu)


def a_ell(sv: Sequence, ell: int) -> Fraction:
    """Alternating partial sum sum_{i<=ell} (-1)^(ell-i) sigma_i."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    at = sv.at if isinstance(sv, RationalVector) else (lambda i: sv[i] if 0 <= i < len(sv) else 0)
    return sum(((-1) ** (ell - i) * Fraction(at(i)) for i in range(ell + 1)), Fraction(0))


def binomial_identity(p: int, q: int, r: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_i binom(p,i)/binom(p+q+r, r+i) = (p+q+r+1)/(q+r+1) / binom(q+r, r)."""
    lhs = sum((Fraction(comb(p, i), comb(p + q + r, r + i)) for i in range(p + 1)), Fraction(0))
    rhs = Fraction(p + q + r + 1, (q + r + 1) * comb(q + r, r))
    return lhs, rhs


# ---------------------------------------------------------------- single-move updates

def move_scale(t: int, d: int, m_after: int) -> Fraction:
    """The factor c relating sigma(S) to sigma(R) away from the affected indices."""
    if t == 0:
        return Fraction(m_after + 1, m_after)
    if t == d:
        return Fraction(m_after + 1, m_after + 2)
    return Fraction(1)


@dataclass
class SigmaStep:
    """Consequences of one bistellar move of index t for the sigma-vector.

    ``exact`` maps indices i to the predicted sigma_i(S); ``differences`` maps
    (i, j) to the predicted sigma_i(S) - sigma_j(S); ``strict`` lists
    (i, op, bound) with op in {"<", ">"} meaning sigma_i(S) op bound, and
    ``strict_differences`` does the same for differences.
    For t = d/2 nothing is predicted except the identity recorded in
    ``middle_identity``.

    When d is odd and t = (d -+ 1)/2 the two affected index pairs share an
    index, which then collects changes from both sides; the per-pair
    difference formulas overshoot there (``overlap`` is set).  Only their
    telescoped sum is exact, and each difference is off by a strictly signed
    amount, which is what gets asserted instead.
    """

    t: int
    d: int
    m_after: int
    c: Fraction
    exact: dict = field(default_factory=dict)
    differences: dict = field(default_factory=dict)
    strict: list = field(default_factory=list)
    strict_differences: list = field(default_factory=list)
    no_control: bool = False
    overlap: bool = False
    middle_identity: tuple | None = None

    def check(self, sigma_r: Sequence, sigma_s: Sequence) -> list[str]:
        """Return a list of violated claims (empty when everything holds)."""
        r = sigma_r if isinstance(sigma_r, RationalVector) else RationalVector(sigma_r)
        s = sigma_s if isinstance(sigma_s, RationalVector) else RationalVector(sigma_s)
        bad = []
        for i, v in self.exact.items():
            if s.at(i) != v:
                bad.append(f"sigma_{i}(S) = {s.at(i)} != {v}")
        for (i, j), v in self.differences.items():
            if s.at(i) - s.at(j) != v:
                bad.append(f"sigma_{i}(S) - sigma_{j}(S) = {s.at(i) - s.at(j)} != {v}")
        for i, op, bound in self.strict:
            val = s.at(i)
            if not (val < bound if op == "<" else val > bound):
                bad.append(f"sigma_{i}(S) = {val} not {op} {bound}")
        for (i, j), op, bound in self.strict_differences:
            val = s.at(i) - s.at(j)
            if not (val < bound if op == "<" else val > bound):
                bad.append(f"sigma_{i}(S) - sigma_{j}(S) = {val} not {op} {bound}")
        if self.middle_identity is not None:
            h = self.middle_identity[0]
            if s.at(h) - r.at(h) != s.at(h - 1) - r.at(h - 1):
                bad.append(f"middle identity fails at {h}")
        return bad


def sigma_step(sigma_r: Sequence, t: int, m_after: int, d: int) -> SigmaStep:
    """Predict sigma(S) from sigma(R) when S arises from R by a move of index t."""
    if not 0 <= t <= d:
        raise ValueError(f"move index {t} out of range for d = {d}")
    r = sigma_r if isinstance(sigma_r, RationalVector) else RationalVector(sigma_r)
    c = move_scale(t, d, m_after)
    step = SigmaStep(t, d, m_after, c)
    affected = {t - 1, t, d - t - 1, d - t}
    for i in range(d + 1):
        if i not in affected:
            step.exact[i] = c * r.at(i)
    if 2 * t == d:
        step.no_control = True
        step.middle_identity = (t,)
        return step
    jump = Fraction(m_after + 1, d + 3) / comb(d + 2, t + 1)
    low = c * (r.at(t) - r.at(t - 1)) + jump
    high = c * (r.at(d - t) - r.at(d - t - 1)) - jump
    if abs(d - 2 * t) == 1:
        step.overlap = True
        hi, lo = max(t, d - t), min(t - 1, d - t - 1)
        step.differences[(hi, lo)] = c * (r.at(hi) - r.at(lo))
        step.strict_differences.append(((t, t - 1), ">", low))
        step.strict_differences.append(((d - t, d - t - 1), "<", high))
    else:
        step.differences[(t, t - 1)] = low
        step.differences[(d - t, d - t - 1)] = high
    if t != 0:
        step.strict.append((t - 1, "<", c * r.at(t - 1)))
    if t != d:
        step.strict.append((d - t - 1, ">", c * r.at(d - t - 1)))
    step.strict.append((t, ">", c * r.at(t)))
    step.strict.append((d - t, "<", c * r.at(d - t)))
    # an index below 0 carries sigma = 0 on both sides; drop those claims
    step.strict = [s for s in step.strict if s[0] >= 0]
    return step


@dataclass
class AlternatingTracker:
    """Value of a_ell along a tame move log; ``exact`` turns False for good
    once a move of index ell + 1 occurs (the value is then a strict upper bound)."""

    d: int
    ell: int
    value: Fraction
    exact: bool = True
    m: int = 0
    history: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "exact" if self.exact else "upper-bound"


def track_a(log, ell: int) -> AlternatingTracker:
    """Fold the a_ell update rules for moves of index 0, 1..ell, >= ell+2 and ell+1."""
    d = log.dim
    if not 0 <= 2 * ell <= d - 2:
        raise ValueError(f"ell = {ell} outside 0..d/2-1 for d = {d}")
    tr = AlternatingTracker(d, ell, Fraction((-1) ** (ell + 1)), m=d + 2)
    for mv in log.moves:
        t = mv.index
        if 2 * t >= d:
            raise ValueError(f"move of index {t} >= d/2: not a tame log")
        if t == 0:
            tr.m += 1
            m = tr.m
            tr.value = Fraction(m + 1, m) * tr.value + (-1) ** ell * Fraction(m + 1, (d + 2) * (d + 3))
        elif t <= ell:
            tr.value += (-1) ** (ell - t) * Fraction(tr.m + 1, d + 3) / comb(d + 2, t + 1)
        elif t == ell + 1:
            tr.exact = False
        tr.history.append((t, tr.value, tr.exact))
    return tr

