"""Symmetric (Gorenstein) h-vectors and the degree-p generator bound.

For a graded Gorenstein ideal of codimension g >= 3 and initial degree
p >= 2 the number of minimal generators in degree p is at most

    nu0(g, p) = C(p+g-1, g-1) - C(p+g-3, g-1),

with equality only for the extremal algebra, whose h-vector is
``(1, g, ..., C(g+p-2, p-1), ..., g, 1)`` with socle degree 2p - 2.
This module computes these invariants, the local growth obstruction that
forbids certain generator counts, an exact-rational certificate for the
obstruction, and an exhaustive enumerator of symmetric O-sequences.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .binomial_core import binom, grouped_rep, is_o_sequence, macaulay_bound, macaulay_rep

__all__ = [
    "HVector",
    "Profile",
    "Certificate",
    "SearchLimitExceeded",
    "nu0",
    "extremal_multiplicity",
    "extremal_hvector",
    "pure_resolution_betti",
    "profile",
    "forbidden_nu",
    "certificate",
    "enumerate_symmetric_osequences",
    "growth_monotonic_scan",
]

DEFAULT_NODE_LIMIT = 2_000_000


class SearchLimitExceeded(RuntimeError):
    pass


def _check_gp(g, p):
    if g < 3 or p < 2:
        raise ValueError(f"need codimension g >= 3 and initial degree p >= 2, got g={g}, p={p}")


@dataclass(frozen=True)
class HVector:
    """Positive entries h_0 = 1, h_1, ..., h_sigma (trailing zeros dropped)."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        while len(entries) > 1 and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)
        if not entries or entries[0] != 1:
            raise ValueError(f"h-vector must start with 1: {entries}")
        if any(x <= 0 for x in entries):
            raise ValueError(f"h-vector entries must be positive: {entries}")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, d):
        if isinstance(d, slice):
            return self.entries[d]
        return self.entries[d] if 0 <= d < len(self.entries) else 0

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return " ".join(map(str, self.entries))

    @property
    def socle_degree(self):
        return len(self.entries) - 1

    @property
    def multiplicity(self):
        return sum(self.entries)

    @property
    def codimension(self):
        if len(self.entries) < 2:
            raise ValueError("codimension undefined for the h-vector (1)")
        return self.entries[1]

    @property
    def initial_degree(self):
        g = self.codimension
        d = 1
        while self[d] == binom(g + d - 1, d):
            d += 1
        return d

    @property
    def nu_p(self):
        g, p = self.codimension, self.initial_degree
        return binom(g + p - 1, g - 1) - self[p]

    @property
    def is_symmetric(self):
        return self.entries == self.entries[::-1]

    @property
    def is_unimodal(self):
        descended = False
        for a, b in zip(self.entries, self.entries[1:]):
            if b < a:
                descended = True
            elif b > a and descended:
                return False
        return True


class Profile(NamedTuple):
    g: int
    p: int
    sigma: int
    nu_p: int
    symmetric: bool
    unimodal: bool


def profile(h):
    if not isinstance(h, HVector):
        h = HVector(tuple(h))
    if len(h) < 2:
        raise ValueError("profile needs at least h_0 and h_1")
    if not is_o_sequence(h.entries):
        raise ValueError(f"not an O-sequence: {h}")
    return Profile(h.codimension, h.initial_degree, h.socle_degree, h.nu_p, h.is_symmetric, h.is_unimodal)


def nu0(g, p):
    """Number of degree-p generators of the extremal Gorenstein ideal."""
    _check_gp(g, p)
    return binom(p + g - 1, g - 1) - binom(p + g - 3, g - 1)


def extremal_multiplicity(g, p):
    _check_gp(g, p)
    return binom(g + p - 1, g) + binom(g + p - 2, g)


def extremal_hvector(g, p):
    _check_gp(g, p)
    sigma = 2 * p - 2
    half = [binom(g - 1 + d, d) for d in range(p)]
    return HVector(tuple(half[min(d, sigma - d)] for d in range(sigma + 1)))


def pure_resolution_betti(degrees):
    """Ranks of a pure resolution with shifts ``0 = d_0 < d_1 < ... < d_c``.

    beta_i = prod_{k >= 1, k != i} |d_k / (d_k - d_i)| for i >= 1.
    """
    degrees = [int(d) for d in degrees]
    if not degrees or degrees[0] != 0:
        raise ValueError("degree sequence must start at 0")
    if any(b <= a for a, b in zip(degrees, degrees[1:])):
        raise ValueError("degree sequence must be strictly increasing")
    betti = [1]
    for i in range(1, len(degrees)):
        r = Fraction(1)
        for k in range(1, len(degrees)):
            if k != i:
                r *= Fraction(degrees[k], abs(degrees[k] - degrees[i]))
        if r.denominator != 1:
            raise ValueError("degree sequence admits no pure resolution with integer ranks")
        betti.append(int(r))
    return tuple(betti)


def extremal_degree_sequence(g, p):
    _check_gp(g, p)
    return (0,) + tuple(range(p, p + g - 1)) + (2 * p + g - 2,)


def forbidden_nu(g, p):
    """Degree-p generator counts ruled out by the one-step growth obstruction.

    A count nu below nu0 leaves h_p = C(g+p-1, g-1) - nu; by symmetry some
    j >= p must carry h_j = h_p followed by h_{j+1} = h_{p-1}.  ``nu`` is
    forbidden when no such j admits that growth.  Returns
    ``(forbidden, nonunimodal_required)``; the latter holds the allowed
    counts whose h_p lies below h_{p-1}.
    """
    _check_gp(g, p)
    top = nu0(g, p)
    full = binom(g + p - 1, g - 1)
    target = binom(g + p - 2, g - 1)
    j_cap = p + 2 * full
    forbidden, nonunimodal = set(), set()
    for nu in range(1, top):
        h = full - nu
        if not _can_reach(h, target, p, j_cap):
            forbidden.add(nu)
        elif h < target:
            nonunimodal.add(nu)
    return forbidden, nonunimodal


def _can_reach(h, target, p, j_cap):
    for j in range(p, j_cap + 1):
        b = macaulay_bound(h, j)
        if b >= target:
            return True
        if b <= h:
            return False
    return False


@dataclass
class Certificate:
    g: int
    p: int
    j: int
    h: int
    trivial: bool = False
    grouped: Optional[object] = None
    k_ok: bool = True
    ratio_ok: bool = True
    f_values: list = field(default_factory=list)
    a_values: list = field(default_factory=list)
    b_values: list = field(default_factory=list)
    f_last_closed_form: Optional[Fraction] = None
    growth_bound: int = 0
    target: int = 0
    in_proof_range: bool = True
    verdict: bool = False

    @property
    def unreachable(self):
        return self.growth_bound < self.target

    @property
    def chain_ok(self):
        f = self.f_values
        return all(x > y for x, y in zip(f, f[1:])) and bool(f) and f[-1] > 0

    @property
    def contradiction(self):
        """F_0 > 0, whereas reaching the target from h would force F_0 < 0."""
        return bool(self.f_values) and self.f_values[0] > 0

    def to_dict(self):
        return {
            "g": self.g,
            "p": self.p,
            "j": self.j,
            "h": self.h,
            "trivial": self.trivial,
            "groups": [list(x) for x in self.grouped.groups] if self.grouped else [],
            "k_ok": self.k_ok,
            "ratio_ok": self.ratio_ok,
            "f_values": [str(x) for x in self.f_values],
            "a_values": [str(x) for x in self.a_values],
            "b_values": [str(x) for x in self.b_values],
            "growth_bound": self.growth_bound,
            "target": self.target,
            "in_proof_range": self.in_proof_range,
            "unreachable": self.unreachable,
            "contradiction": self.contradiction,
            "verdict": self.verdict,
        }


def certificate(g, p, j, h):
    """Exact inequality chain behind the bound on degree-p generators.

    Groups the j-th Macaulay representation of h by ``a_l - l`` and
    evaluates F_0, ..., F_r and A_s, B_s as fractions.  ``verdict`` is True
    when F_0 > ... > F_r > 0 holds (with F_r matching its closed form) and
    every A_s > B_s.  For h <= C(p+g-3, g-1) (``in_proof_range``) a valid
    chain contradicts growth from h to C(g+p-2, g-1) at degree j;
    ``unreachable`` records the direct Macaulay-bound check of the same fact.

    Raises ``ValueError`` on inputs outside the hypotheses.  A returned
    certificate with ``verdict`` False would be a bug, not a bad input.
    """
    _check_gp(g, p)
    if j < p:
        raise ValueError(f"need j >= p, got j={j}, p={p}")
    target = binom(g + p - 2, g - 1)
    if not 1 <= h < target:
        raise ValueError(f"need 1 <= h < C(g+p-2, g-1) = {target}, got {h}")
    cert = Certificate(g, p, j, h, growth_bound=macaulay_bound(h, j), target=target)
    cert.in_proof_range = h <= binom(p + g - 3, g - 1)
    if h <= j:
        # every a_l = l, so the bound is h itself
        cert.trivial = True
        cert.verdict = cert.growth_bound == h
        return cert

    gr = grouped_rep(macaulay_rep(h, j))
    cert.grouped = gr
    ks = [k for k, _, _ in gr.groups]
    js = [t for _, t, _ in gr.groups]
    is_ = [i for _, _, i in gr.groups]
    r = len(gr.groups) - 1
    k = ks[0]
    cert.k_ok = k <= g - 2
    cert.ratio_ok = Fraction(g - 1, p - 1) > Fraction(k + 1, j + 1)

    upper = [binom(js[n] + ks[n] + 1, js[n]) for n in range(r + 1)]
    lower = [binom(js[n] - is_[n] + ks[n], js[n] - is_[n] - 1) for n in range(r + 1)]
    slope = [Fraction(ks[n] + 1, js[n] + 1) for n in range(r + 1)]
    tail = [Fraction(ks[n] + 1, js[n] - is_[n]) for n in range(r + 1)]

    for s in range(r + 1):
        f = sum(((slope[s] - slope[n]) * upper[n] for n in range(s, r + 1)), Fraction(0))
        f += sum(((tail[n] - slope[s]) * lower[n] for n in range(s, r + 1)), Fraction(0))
        cert.f_values.append(f)
    for s in range(r):
        cert.a_values.append(Fraction(sum(upper[s + 1:])))
        cert.b_values.append(Fraction(sum(lower[s + 1:])))

    i_min = gr.source.smallest_index
    a_min = gr.source.terms[-1][0]
    cert.f_last_closed_form = (tail[r] - slope[r]) * binom(a_min, i_min - 1)
    cert.verdict = (
        cert.k_ok
        and cert.ratio_ok
        and cert.chain_ok
        and cert.f_values[-1] == cert.f_last_closed_form
        and all(a > b for a, b in zip(cert.a_values, cert.b_values))
    )
    return cert


def enumerate_symmetric_osequences(g, p, sigma_max, node_limit=DEFAULT_NODE_LIMIT):
    """Yield every symmetric O-sequence with h_1 = g, initial degree p and
    socle degree <= sigma_max.

    The ascending half is built entry by entry and mirrored.  Each new
    entry h_d is checked both for growth from h_{d-1} at degree d - 1 and
    for the mirrored step h_d -> h_{d-1} at degree sigma - d, so only
    genuine O-sequences reach the leaves.
    """
    if g < 1 or p < 1:
        raise ValueError("need g >= 1 and p >= 1")
    nodes = 0
    full = [binom(g + d - 1, d) for d in range(max(p, 1) + 1)]

    for sigma in range(1, sigma_max + 1):
        half_len = sigma // 2 + 1
        stack = [[1]]
        while stack:
            nodes += 1
            if nodes > node_limit:
                raise SearchLimitExceeded(
                    f"enumeration of (g={g}, p={p}, sigma<={sigma_max}) exceeds {node_limit} nodes"
                )
            half = stack.pop()
            d = len(half)
            if d == half_len:
                seq = half + half[: sigma + 1 - half_len][::-1]
                hv = _accept(seq, g, p)
                if hv is not None:
                    yield hv
                continue
            if d == 1:
                choices = [g]
            elif d < p:
                choices = [full[d]]
            else:
                hi = macaulay_bound(half[-1], d - 1)
                if d == p:
                    hi = min(hi, full[p] - 1)
                choices = range(1, hi + 1)
            children = []
            for c in choices:
                # mirrored step: value c at degree sigma - d, then half[-1]
                if sigma - d >= 1 and half[-1] > macaulay_bound(c, sigma - d):
                    continue
                children.append(half + [c])
            stack.extend(reversed(children))


def _accept(seq, g, p):
    if len(seq) < 2 or seq[1] != g or not is_o_sequence(seq):
        return None
    hv = HVector(tuple(seq))
    if hv.initial_degree != p or not hv.is_symmetric:
        return None
    return hv


def growth_monotonic_scan(h_max, j_min, j_max):
    """Check macaulay_bound(h, j+1) <= macaulay_bound(h, j) for 1 <= h <= h_max,
    j_min <= j < j_max.  Returns ``(ok, first_counterexample)``, scanning h
    outermost."""
    if h_max < 1 or j_min < 1 or j_max < j_min:
        raise ValueError("need h_max >= 1 and 1 <= j_min <= j_max")
    for h in range(1, h_max + 1):
        prev = macaulay_bound(h, j_min)
        for j in range(j_min, j_max):
            nxt = macaulay_bound(h, j + 1)
            if nxt > prev:
                return False, (h, j)
            prev = nxt
    return True, None
