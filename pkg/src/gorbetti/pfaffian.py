"""Alternating polynomial matrices, pfaffians, and random codimension-3
Gorenstein ideals generated by maximal pfaffians.

Degree bookkeeping: a homogeneous alternating matrix carries integer
vectors ``m`` and ``n`` with ``deg y_ij = m_i - n_j``.  Skew symmetry
forces ``m_i + n_i`` to be the same for every i, and then the maximal
pfaffian obtained by deleting index t has degree
``sum_{s != t} (m_s - n_s) / 2``.
"""

import logging
import random
from dataclasses import dataclass, field

from .linalg import DEFAULT_MODULUS, PrimeField
from .polyring import Ideal, Ring, artinian_check, minimal_generators_by_degree
from .resolution import koszul_betti

__all__ = [
    "AlternatingMatrix",
    "pfaffian",
    "maximal_pfaffians",
    "random_alternating",
    "random_form",
    "generic_linear",
    "codim3_experiment",
    "run_trial",
    "profile_from_weights",
    "DEFAULT_PROFILES",
]

log = logging.getLogger(__name__)


class AlternatingMatrix:
    """Skew-symmetric matrix of homogeneous polynomials with zero diagonal.

    ``upper`` maps ``(i, j)`` with ``i < j`` to the entry y_ij; missing keys
    are zero.
    """

    def __init__(self, ring, size, upper, m=None, n=None):
        self.ring = ring
        self.size = size
        self.upper = {}
        for (i, j), f in upper.items():
            if not 0 <= i < j < size:
                raise ValueError(f"entry ({i}, {j}) is not strictly upper triangular in size {size}")
            if f.ring != ring:
                raise ValueError("entry from a different ring")
            if not f.is_zero():
                if not f.is_homogeneous():
                    raise ValueError(f"entry ({i}, {j}) is not homogeneous")
                self.upper[(i, j)] = f
        self.m = tuple(m) if m is not None else None
        self.n = tuple(n) if n is not None else None
        if self.m is not None:
            _check_profile(self.m, self.n, size)
            for (i, j), f in self.upper.items():
                d = self.m[i] - self.n[j]
                if d <= 0:
                    raise ValueError(f"entry ({i}, {j}) must vanish: its degree {d} is <= 0")
                if f.degree != d:
                    raise ValueError(f"entry ({i}, {j}) has degree {f.degree}, expected {d}")

    def __getitem__(self, key):
        i, j = key
        if i == j:
            return self.ring.zero()
        if i < j:
            return self.upper.get((i, j), self.ring.zero())
        return -self.upper.get((j, i), self.ring.zero())

    def rows(self):
        return [[self[i, j] for j in range(self.size)] for i in range(self.size)]

    def degree(self, i, j):
        return None if self.m is None else self.m[i] - self.n[j]

    def generator_degrees(self):
        """Expected degree of each maximal pfaffian from the profile."""
        if self.m is None:
            return None
        total = sum(a - b for a, b in zip(self.m, self.n))
        return [(total - (self.m[t] - self.n[t])) // 2 for t in range(self.size)]


def _check_profile(m, n, size):
    if n is None or len(m) != size or len(n) != size:
        raise ValueError("profile vectors m and n must both have one entry per row")
    if len({a + b for a, b in zip(m, n)}) != 1:
        raise ValueError("inconsistent profile: m_i + n_i must not depend on i")


def _pf(M, idx, memo):
    if not idx:
        return M.ring.one()
    if idx in memo:
        return memo[idx]
    first = idx[0]
    out = M.ring.zero()
    for k in range(1, len(idx)):
        y = M[first, idx[k]]
        if y.is_zero():
            continue
        rest = idx[1:k] + idx[k + 1:]
        term = y * _pf(M, rest, memo)
        out = out + term if k % 2 == 1 else out - term
    memo[idx] = out
    return out


def pfaffian(M):
    """Pfaffian by expansion along the first row, memoized on index subsets."""
    if M.size % 2:
        raise ValueError("the pfaffian needs an even-size matrix")
    return _pf(M, tuple(range(M.size)), {})


def maximal_pfaffians(M):
    """``f_t = (-1)^t Pf(M without row/column t)`` for t = 0..size-1."""
    if M.size % 2 == 0 or M.size < 3:
        raise ValueError("maximal pfaffians need an odd size >= 3")
    memo = {}
    out = []
    for t in range(M.size):
        idx = tuple(s for s in range(M.size) if s != t)
        f = _pf(M, idx, memo)
        out.append(f if t % 2 == 0 else -f)
    return out


def random_form(ring, d, rng):
    q = ring.field.q
    return ring.from_vector(d, {c: rng.randrange(q) for c in range(ring.dim(d))})


def random_alternating(size, m, n, seed, nvars=3, field=None):
    """Random alternating matrix with ``deg y_ij = m_i - n_j`` (zero when <= 0)."""
    if size % 2 == 0:
        raise ValueError("random_alternating builds odd-size matrices")
    _check_profile(m, n, size)
    field = field if field is not None else PrimeField(DEFAULT_MODULUS)
    if not isinstance(field, PrimeField):
        raise ValueError("random entries need a prime field")
    ring = Ring(nvars, field)
    rng = random.Random(seed)
    upper = {}
    for i in range(size):
        for j in range(i + 1, size):
            d = m[i] - n[j]
            if d > 0:
                upper[(i, j)] = random_form(ring, d, rng)
    return AlternatingMatrix(ring, size, upper, m, n)


def generic_linear(size, seed=0, nvars=3, field=None):
    """Random alternating matrix with all off-diagonal entries linear."""
    return random_alternating(size, (2,) * size, (1,) * size, seed, nvars, field)


def profile_from_weights(weights, const):
    """(m, n) with every entry degree equal to w_i + w_j - const."""
    return tuple(weights), tuple(const - w for w in weights)


# name -> (m, n); every entry degree is m_i + m_j - const
DEFAULT_PROFILES = {
    "nu3_quadric": profile_from_weights((1, 1, 1), 0),
    "nu3_mixed": profile_from_weights((1, 1, 2), 0),
    "nu5_linear": profile_from_weights((2,) * 5, 3),
    "nu5_mixed": profile_from_weights((1, 1, 2, 2, 2), 2),
    "nu5_quadric": profile_from_weights((1,) * 5, 0),
    "nu7_linear": profile_from_weights((2,) * 7, 3),
    "nu7_mixed": profile_from_weights((1, 1, 1, 2, 2, 2, 2), 2),
    "nu9_linear": profile_from_weights((2,) * 9, 3),
    "nu9_mixed": profile_from_weights((1, 1, 1, 1, 2, 2, 2, 2, 2), 2),
}


@dataclass
class TrialResult:
    trial: int
    profile: str
    seed: int
    status: str = "ok"
    p: int = None
    nu: int = None
    betti_totals: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    reason: str = ""

    def to_dict(self):
        return {
            "trial": self.trial,
            "profile": self.profile,
            "seed": self.seed,
            "p": self.p,
            "nu": self.nu,
            "betti_totals": list(self.betti_totals),
            "status": self.status,
            "violations": list(self.violations),
            "reason": self.reason,
        }


def run_trial(trial, name, m, n, seed, field=None):
    result = TrialResult(trial, name, seed)
    M = random_alternating(len(m), m, n, seed, 3, field)
    gens = maximal_pfaffians(M)
    if any(f.is_zero() for f in gens):
        result.status, result.reason = "skipped", "a maximal pfaffian vanishes"
        log.info("trial %d (%s): skipped, %s", trial, name, result.reason)
        return result
    I = Ideal(M.ring, gens)
    if not artinian_check(I).artinian:
        result.status, result.reason = "skipped", "pfaffians do not generate a height-3 ideal"
        log.info("trial %d (%s): skipped, %s", trial, name, result.reason)
        return result
    table = koszul_betti(I)
    totals = table.totals
    result.betti_totals = list(totals)
    result.p = min(f.degree for f in gens)
    result.nu = sum(minimal_generators_by_degree(I).values())
    bound = 2 * result.p + 1
    if result.nu > bound:
        result.violations.append("nu_le_2p_plus_1")
    if totals[2] > bound:
        result.violations.append("beta2_le_2p_plus_1")
    if totals[3] != 1:
        result.violations.append("beta3_eq_1")
    if not (totals[1] == totals[2] == M.size == result.nu):
        result.violations.append("buchsbaum_eisenbud_shape")
    if result.violations:
        result.status = "violation"
    return result


def codim3_experiment(trials, profiles=None, seed=0, field=None):
    """Random maximal-pfaffian ideals in three variables, cycling through
    ``profiles`` (name -> (m, n)).  Trial t uses seed ``seed * 1_000_003 + t``."""
    profiles = profiles if profiles is not None else DEFAULT_PROFILES
    names = sorted(profiles)
    results = []
    for t in range(trials):
        name = names[t % len(names)]
        m, n = profiles[name]
        results.append(run_trial(t, name, m, n, seed * 1_000_003 + t, field))
    summary = {
        "trials": trials,
        "skipped": sum(r.status == "skipped" for r in results),
        "violations": sum(r.status == "violation" for r in results),
    }
    return {"trials": [r.to_dict() for r in results], "summary": summary}
