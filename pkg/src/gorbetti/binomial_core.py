"""Binomial coefficients, Macaulay representations and the Macaulay growth bound.

Everything here is exact integer arithmetic.  The central object is the
j-th Macaulay representation of a positive integer h,

    h = C(a_j, j) + C(a_{j-1}, j-1) + ... + C(a_i, i),   a_j > ... > a_i >= i >= 1,

from which the maximal growth of a Hilbert function from degree j to
degree j + 1 is read off.
"""

from dataclasses import dataclass
from math import comb

__all__ = [
    "binom",
    "MacaulayRep",
    "GroupedRep",
    "macaulay_rep",
    "macaulay_bound",
    "grouped_rep",
    "is_o_sequence",
]


def binom(n, k):
    """Exact C(n, k) for non-negative n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binom needs non-negative arguments, got ({n}, {k})")
    return comb(n, k)


@dataclass(frozen=True)
class MacaulayRep:
    """The j-th Macaulay representation of ``value``.

    ``terms`` is a tuple of ``(a, l)`` pairs with ``l`` running from
    ``degree`` down to the smallest index ``i``.
    """

    value: int
    degree: int
    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a Macaulay representation needs at least one term")
        expected = self.degree
        prev_top = None
        for a, l in self.terms:
            if l != expected:
                raise ValueError(f"indices must run {self.degree}, {self.degree - 1}, ...; got {l}")
            if a < l or l < 1:
                raise ValueError(f"term C({a}, {l}) violates a_l >= l >= 1")
            if prev_top is not None and a >= prev_top:
                raise ValueError("tops must strictly decrease")
            prev_top = a
            expected -= 1
        if sum(binom(a, l) for a, l in self.terms) != self.value:
            raise ValueError("terms do not sum to value")

    @property
    def smallest_index(self):
        return self.terms[-1][1]

    def __str__(self):
        body = " + ".join(f"C({a},{l})" for a, l in self.terms)
        return f"{self.value} = {body}"


@dataclass(frozen=True)
class GroupedRep:
    """A Macaulay representation with runs of equal ``a_l - l`` merged.

    Each group is ``(k, top, length_minus_one)``: the run covers the
    indices ``top, top - 1, ..., top - length_minus_one`` and every term in
    it is ``C(l + k, l)``.
    """

    groups: tuple
    source: MacaulayRep

    def group_value(self, n):
        k, top, i = self.groups[n]
        return binom(top + k + 1, top) - binom(top - i + k, top - i - 1)

    def expand(self):
        """Expand the groups back into ``(a, l)`` terms."""
        terms = []
        for k, top, i in self.groups:
            for l in range(top, top - i - 1, -1):
                terms.append((l + k, l))
        return tuple(terms)


def macaulay_rep(h, j):
    """Greedy j-th Macaulay representation of h >= 1.

    At each index l the top a_l is the largest a with C(a, l) <= remainder.
    """
    if h < 1 or j < 1:
        raise ValueError(f"macaulay_rep needs h >= 1 and j >= 1, got ({h}, {j})")
    terms = []
    rest = h
    l = j
    while rest > 0:
        # l >= 1 here: the remainder after index l is < C(a_l, l - 1)
        a = _largest_top(rest, l)
        terms.append((a, l))
        rest -= binom(a, l)
        l -= 1
    return MacaulayRep(h, j, tuple(terms))


def _largest_top(rest, l):
    """Largest a with C(a, l) <= rest, for rest >= 1."""
    lo, step = l, 1
    while binom(lo + step, l) <= rest:
        lo += step
        step *= 2
    hi = lo + step  # C(hi, l) > rest
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binom(mid, l) <= rest:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_bound(h, j):
    """Maximal admissible value in degree j + 1 after value h in degree j."""
    if j < 1:
        raise ValueError(f"macaulay_bound needs j >= 1, got {j}")
    if h < 0:
        raise ValueError(f"macaulay_bound needs h >= 0, got {h}")
    if h == 0:
        return 0
    return sum(binom(a + 1, l + 1) for a, l in macaulay_rep(h, j).terms)


def grouped_rep(rep):
    groups = []
    for a, l in rep.terms:
        k = a - l
        if groups and groups[-1][0] == k:
            k0, top, i = groups[-1]
            groups[-1] = (k0, top, i + 1)
        else:
            groups.append((k, l, 0))
    return GroupedRep(tuple(groups), rep)


def is_o_sequence(h):
    """True iff ``h`` starts with 1 and obeys the Macaulay bound from degree 1 on.

    The step from degree 0 to degree 1 is unconstrained.  A zero entry
    forces zeros afterwards (the bound of 0 is 0).
    """
    h = list(h)
    if not h:
        raise ValueError("is_o_sequence needs a non-empty sequence")
    if any(x < 0 for x in h):
        return False
    if h[0] != 1:
        return False
    for j in range(1, len(h) - 1):
        if h[j + 1] > macaulay_bound(h[j], j):
            return False
    return True
