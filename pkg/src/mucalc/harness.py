"""End-to-end checks of the inequalities, dualities and equality cases.

Every check produces a :class:`VerificationReport` carrying both sides as
exact ``num/den`` strings.  Verdicts:

* ``pass``           relation holds (strictly, for an inequality)
* ``equality-case``  an inequality holds with equality
* ``fail``           relation violated, or the predicted equality case
                     disagrees with the independent witness
* ``not-applicable`` hypotheses could not be certified; nothing was checked
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb

from . import library
from .bistellar import MoveLog, tame_walk, walk_length
from .complex import (
    SimplicialComplex,
    g_vector,
    is_connected,
    is_two_neighbourly,
    link,
)
from .homology import _char, _closed_manifold, _sphere, betti, injectivity_scan
from .sigma import a_ell, fraction_str, mu_vector, sigma_vector
from .stacked import certify_stacked_manifold, certify_stacked_sphere

SCAN_NOTE = ("instances are bistellar-reachable spheres and library complexes only; "
             "no claim is made about other homology spheres or manifolds")
MAX_SCAN_VERTICES = 10


@dataclass
class VerificationReport:
    theorem_id: str
    instance: str
    field_char: int
    lhs: str
    rhs: str
    relation: str
    verdict: str
    equality_witness: dict | None = None
    detail: str = ""
    recipe: dict | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"


def compare(lhs, rhs, relation: str) -> bool:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if relation == "<=":
        return lhs <= rhs
    if relation == ">=":
        return lhs >= rhs
    if relation == "=":
        return lhs == rhs
    raise ValueError(f"unknown relation {relation!r}")


def make_report(theorem_id, instance, char, lhs, rhs, relation, *, equality_expected=None,
                witness=None, detail="", recipe=None) -> VerificationReport:
    """Build a report and derive its verdict from lhs, rhs and relation.

    ``equality_expected`` is the independent prediction of whether equality
    holds; a disagreement is a failure.
    """
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    holds = compare(lhs, rhs, relation)
    equal = lhs == rhs
    if not holds:
        verdict = "fail"
        detail = detail or "relation violated"
    elif equality_expected is not None and equal != bool(equality_expected):
        verdict = "fail"
        detail = (detail + "; " if detail else "") + (
            "equality without the predicted witness" if equal else "witness present but inequality strict")
    elif equal and relation != "=":
        verdict = "equality-case"
    else:
        verdict = "pass"
    return VerificationReport(theorem_id, instance, char, fraction_str(lhs), fraction_str(rhs), relation,
                              verdict, witness, detail, recipe if verdict == "fail" else None)


def not_applicable(theorem_id, instance, char, detail) -> VerificationReport:
    return VerificationReport(theorem_id, instance, char, "", "", "", "not-applicable", None, detail)


def any_failed(reports) -> bool:
    return any(r.failed for r in reports)


def _alt(values, j: int, lo: int = 0) -> Fraction:
    return sum(((-1) ** (j - i) * Fraction(values[i] if i < len(values) else 0)
                for i in range(lo, j + 1)), Fraction(0))


def _padded_betti(X, char):
    b = list(betti(X, char))
    return b + [0] * (X.dim + 1 - len(b))


# ---------------------------------------------------------------- spheres

def sigma_bound_sides(S: SimplicialComplex, sigma, ell: int) -> tuple[Fraction, Fraction]:
    """a_ell(S) and (m+1)/(d+3) sum_{i<=ell+1} (-1)^(ell+1-i) g_i / binom(d+2, i)."""
    d, m = S.dim, S.num_vertices
    g = g_vector(S)
    rhs = Fraction(m + 1, d + 3) * sum(
        (Fraction((-1) ** (ell + 1 - i) * g[i], comb(d + 2, i)) for i in range(ell + 2)), Fraction(0))
    return a_ell(sigma, ell), rhs


def verify_glbt_tame_sphere(log: MoveLog, field=0, instance: str | None = None) -> list[VerificationReport]:
    """g_{l+1} >= 0 for 0 <= l <= d/2, with g_{l+1} = 0 iff the l-stacked witness exists."""
    char = _char(field)
    if not log.is_tame():
        raise ValueError("log contains a move of index >= d/2")
    S = log.replay()
    d = S.dim
    name = instance or f"walk:{log.digest()}"
    recipe = {"log": log.to_dict()}
    g = g_vector(S)
    out = [make_report("walk-length", name, char, len(log.moves), walk_length(S), "=", recipe=recipe,
                       detail="number of moves equals the sum of g_{l+1} over l < d/2")]
    for ell in range(d // 2 + 1):
        cert = certify_stacked_sphere(S, ell, char)
        out.append(make_report("glbt-tame-sphere", name, char, g[ell + 1], 0, ">=",
                               equality_expected=cert.valid, witness=cert.to_dict(),
                               detail=f"l={ell}", recipe=recipe))
    return out


def verify_sigma_bound(S: SimplicialComplex, field=0, instance: str = "complex", *,
                       theorem_id: str = "sigma-bound", recipe=None, sigma=None) -> list[VerificationReport]:
    """a_l(S) <= (m+1)/(d+3) sum (-1)^(l+1-i) g_i/binom(d+2,i) for 0 <= l <= d/2 - 1,
    with equality iff S is (l+1)-stacked (checked against the canonical witness)."""
    char = _char(field)
    d = S.dim
    if sigma is None:
        sigma = sigma_vector(S, char)
    out = []
    for ell in range(0, (d - 2) // 2 + 1 if d >= 2 else 0):
        lhs, rhs = sigma_bound_sides(S, sigma, ell)
        cert = certify_stacked_sphere(S, ell + 1, char)
        out.append(make_report(theorem_id, instance, char, lhs, rhs, "<=",
                               equality_expected=cert.valid, witness=cert.to_dict(),
                               detail=f"l={ell}", recipe=recipe))
    return out


def verify_sigma_bound_log(log: MoveLog, field=0, instance: str | None = None) -> list[VerificationReport]:
    S = log.replay()
    return verify_sigma_bound(S, field, instance or f"walk:{log.digest()}", recipe={"log": log.to_dict()})


# ---------------------------------------------------------------- all complexes

def verify_morse(X: SimplicialComplex, field=0, instance: str = "complex") -> list[VerificationReport]:
    """Alternating and termwise mu >= beta inequalities, with each equality case
    matched against a scan of inclusion maps from all induced subcomplexes."""
    char = _char(field)
    d = X.dim
    mu = mu_vector(X, char)
    beta = _padded_betti(X, char)
    scan = injectivity_scan(X, char) if X.num_vertices <= MAX_SCAN_VERTICES else None
    out = []
    for j in range(d + 1):
        inj = None if scan is None else scan[j]
        rel = "=" if j == d else ">="
        out.append(make_report("morse-alternating", instance, char, _alt(mu, j), _alt(beta, j), rel,
                               equality_expected=inj, detail=f"j={j}",
                               witness=None if scan is None else {"injective_degrees": scan}))
    for j in range(d + 1):
        inj = None if scan is None else (scan[j] and (j == 0 or scan[j - 1]))
        out.append(make_report("morse-termwise", instance, char, mu[j], beta[j], ">=",
                               equality_expected=inj, detail=f"j={j}"))
    return out


def verify_tightness(X: SimplicialComplex, field=0, instance: str = "complex") -> list[VerificationReport]:
    """Tightness two ways: mu = beta (and connected) versus the injectivity scan."""
    char = _char(field)
    connected = is_connected(X)
    mu = mu_vector(X, char)
    beta = _padded_betti(X, char)
    by_mu = connected and list(mu) == [Fraction(b) for b in beta]
    by_scan = connected and all(injectivity_scan(X, char))
    out = [make_report("tightness", instance, char, int(by_mu), int(by_scan), "=",
                       detail=f"tight={by_scan}; mu={[fraction_str(x) for x in mu]}; beta={beta}")]
    if by_scan:
        out.append(make_report("tight-two-neighbourly", instance, char,
                               int(is_two_neighbourly(X)), 1, "="))
    return out


def verify_duality(M: SimplicialComplex, field=0, instance: str = "complex") -> list[VerificationReport]:
    """mu_{d-i} = mu_i on closed manifolds; the sigma relations on spheres of dimension >= 2."""
    char = _char(field)
    if not _closed_manifold(M, char):
        raise ValueError("duality needs a closed homology manifold")
    d = M.dim
    mu = mu_vector(M, char)
    out = [make_report("mu-duality", instance, char, mu[i], mu[d - i], "=", detail=f"i={i}")
           for i in range(d // 2 + 1)]
    if d >= 2 and _sphere(M, char):
        s = sigma_vector(M, char)
        out.append(make_report("sigma-duality", instance, char, s[d], 1, "=", detail="top"))
        out.append(make_report("sigma-duality", instance, char, s[d - 1], 1 + s[0], "=", detail="d-1 vs 0"))
        for i in range(1, d - 1):
            out.append(make_report("sigma-duality", instance, char, s[d - 1 - i], s[i], "=", detail=f"i={i}"))
    return out


def link_g_sums(X: SimplicialComplex) -> list[tuple[int, int]]:
    """(sum_x g_i(lk x), (d+2-i) g_i(X) + (i+1) g_{i+1}(X)) for i = 0..d."""
    d = X.dim
    g = g_vector(X)
    lg = [g_vector(link(X, x), d - 1) for x in X.vertices]
    return [(sum(v[i] for v in lg), (d + 2 - i) * g[i] + (i + 1) * g[i + 1]) for i in range(d + 1)]


def certified_locally_tame(M: SimplicialComplex, field=0) -> bool:
    """Every vertex link certified tame: links of dimension <= 1 always are;
    higher links when they carry a valid 1-stacked witness (stacked spheres
    are built by index-0 moves alone)."""
    char = _char(field)
    if M.dim <= 2:
        return True
    return all(certify_stacked_sphere(link(M, x), 1, char).valid for x in M.vertices)


def manifold_mu_sides(M, mu, ell):
    d = M.dim
    g = g_vector(M)
    return _alt(mu, ell), (-1) ** ell + Fraction(g[ell + 1], comb(d + 2, ell + 1))


def glbt_sides(M, beta, ell):
    d = M.dim
    g = g_vector(M)
    return Fraction(g[ell + 1]), comb(d + 2, ell + 1) * _alt(beta, ell, lo=1)


def verify_manifold_glbt(M: SimplicialComplex, field=0, instance: str = "complex",
                         ells=None, locally_tame: bool | None = None) -> list[VerificationReport]:
    """Lower bounds for connected closed manifolds: the mu form, the Betti form,
    their dimension-three versions, and equality cases against witnesses."""
    char = _char(field)
    if not _closed_manifold(M, char):
        raise ValueError("needs a closed homology manifold")
    if not is_connected(M):
        raise ValueError("M must be connected")
    d = M.dim
    beta = _padded_betti(M, char)
    mu = mu_vector(M, char)
    g = g_vector(M)
    out = [make_report("connected-b0", instance, char, beta[0], 1, "=")]
    for i, (lhs, rhs) in enumerate(link_g_sums(M)):
        out.append(make_report("link-g-sum", instance, char, lhs, rhs, "=", detail=f"i={i}"))
    if locally_tame is None:
        locally_tame = certified_locally_tame(M, char)
    if ells is None:
        ells = [ell for ell in range(1, d) if 2 * ell + 1 <= d]
    stacked_certs = {}
    for ell in ells:
        cert = certify_stacked_manifold(M, ell, char)
        stacked_certs[ell] = cert
        if not locally_tame:
            out.append(not_applicable("manifold-mu-bound", instance, char, f"l={ell}; local tameness not certified"))
            out.append(not_applicable("glbt-manifold", instance, char, f"l={ell}; local tameness not certified"))
        else:
            lhs, rhs = manifold_mu_sides(M, mu, ell)
            loc = all(certify_stacked_sphere(link(M, x), ell, char).valid for x in M.vertices)
            out.append(make_report("manifold-mu-bound", instance, char, lhs, rhs, "<=",
                                   equality_expected=loc, detail=f"l={ell}"))
            # summing the per-link sphere bounds reproduces the manifold bound exactly
            link_lhs, link_rhs = Fraction(0), Fraction(0)
            for x in M.vertices:
                L = link(M, x)
                w = Fraction(1, 1 + L.num_vertices)
                l_lhs, l_rhs = sigma_bound_sides(L, sigma_vector(L, char), ell - 1)
                link_lhs += w * l_lhs
                link_rhs += w * l_rhs
            out.append(make_report("mu-bound-link-sum", instance, char, link_lhs, lhs, "=", detail=f"l={ell} lhs"))
            out.append(make_report("mu-bound-link-sum", instance, char, link_rhs, rhs, "=", detail=f"l={ell} rhs"))
            lhs, rhs = glbt_sides(M, beta, ell)
            out.append(make_report("glbt-manifold", instance, char, lhs, rhs, ">=",
                                   equality_expected=cert.valid, witness=cert.to_dict(), detail=f"l={ell}"))
        if cert.valid:
            lhs, rhs = glbt_sides(M, beta, ell)
            out.append(make_report("stacked-equality", instance, char, lhs, rhs, "=", detail=f"l={ell}"))
    if d == 3:
        loc = all(certify_stacked_sphere(link(M, x), 1, char).valid for x in M.vertices)
        out.append(make_report("mu-bound-dim3", instance, char, mu[1] - mu[0], -1 + Fraction(g[2], 10), "<=",
                               equality_expected=loc))
        cert = stacked_certs.get(1) or certify_stacked_manifold(M, 1, char)
        out.append(make_report("glbt-dim3", instance, char, g[2], 10 * beta[1], ">=",
                               equality_expected=cert.valid, witness=cert.to_dict()))
    return out


# ---------------------------------------------------------------- conjecture scans

def _scan_instances(which: int, d: int, trials: int, seed: int, max_vertices: int):
    rng = random.Random(seed)
    for k in range(trials):
        steps = rng.randint(1, 3 * d + 6)
        walk_seed = rng.randrange(2 ** 32)
        X, log = tame_walk(d, steps, walk_seed, max_index_exclusive=d + 1, max_vertices=max_vertices)
        yield f"walk:{log.digest()}", X, {"log": log.to_dict(), "scan_seed": seed, "trial": k}
    pool = library.spheres(d) if which == 1 else library.closed_manifolds(d)
    for name, X in pool:
        yield name, X, {"library": name}


def scan_conjecture(which: int, d: int, trials: int, seed: int, field=0,
                    max_vertices: int = MAX_SCAN_VERTICES) -> list[VerificationReport]:
    """Evaluate one conjectured statement on random bistellar spheres plus library entries.

    1: the sphere sigma bound with its equality case;
    2: the manifold mu bound (no tameness hypothesis);
    3: g_{l+1} >= binom(d+2, l+1) sum_{1<=i<=l} (-1)^(l-i) beta_i with equality iff l-stacked.
    """
    char = _char(field)
    if which not in (1, 2, 3):
        raise ValueError("conjecture must be 1, 2 or 3")
    out = []
    for name, X, recipe in _scan_instances(which, d, trials, seed, max_vertices):
        if which == 1:
            out.extend(verify_sigma_bound(X, char, name, theorem_id="conjecture-sigma-bound", recipe=recipe))
            continue
        if not is_connected(X):
            continue
        mu = mu_vector(X, char) if which == 2 else None
        beta = _padded_betti(X, char)
        for ell in range(1, d):
            if 2 * ell + 1 > d:
                break
            if which == 2:
                lhs, rhs = manifold_mu_sides(X, mu, ell)
                loc = all(certify_stacked_sphere(link(X, x), ell, char).valid for x in X.vertices)
                out.append(make_report("conjecture-manifold-mu-bound", name, char, lhs, rhs, "<=",
                                       equality_expected=loc, detail=f"l={ell}", recipe=recipe))
            else:
                lhs, rhs = glbt_sides(X, beta, ell)
                cert = certify_stacked_manifold(X, ell, char)
                out.append(make_report("conjecture-glbt", name, char, lhs, rhs, ">=",
                                       equality_expected=cert.valid, witness=cert.to_dict(),
                                       detail=f"l={ell}", recipe=recipe))
    for r in out:
        r.detail = (r.detail + "; " if r.detail else "") + SCAN_NOTE
    return out
