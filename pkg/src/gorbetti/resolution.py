"""Graded Betti numbers of artinian quotients R/I via Koszul homology.

beta_{i,j}(R/I) = dim_k H_i(x_1, ..., x_n; R/I)_j, and the Koszul complex
of R/I in internal degree j has terms wedge^i(k^n) (x) (R/I)_{j-i}.  For an
artinian quotient these are tiny, so every rank is an exact elimination
over the ideal's coefficient field.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .binomial_core import binom
from .hvector import pure_resolution_betti
from .linalg import Echelon
from .polyring import artinian_check

__all__ = [
    "BettiTable",
    "koszul_betti",
    "render_diagram",
    "structural_checks",
    "hilbert_from_betti",
    "compare_with_extremal",
]


@dataclass
class BettiTable:
    """Graded Betti numbers ``entries[(i, j)]`` with i homological, j internal degree."""

    n: int
    entries: dict = field(default_factory=dict)
    sigma: int = None

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    @classmethod
    def pure(cls, n, degrees):
        """Table of a pure resolution with shift ``degrees[i]`` in position i."""
        betti = pure_resolution_betti(degrees)
        sigma = degrees[-1] - n if len(degrees) == n + 1 else None
        return cls(n, {(i, d): b for i, (d, b) in enumerate(zip(degrees, betti))}, sigma)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    @property
    def totals(self):
        out = [0] * (self.n + 1)
        for (i, _), b in self.entries.items():
            out[i] += b
        return tuple(out)

    @property
    def rows(self):
        """Number of diagram rows: 1 + max of j - i."""
        return 1 + max((j - i for i, j in self.entries), default=0)

    def to_dict(self):
        return {
            "n": self.n,
            "sigma": self.sigma,
            "entries": [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())],
            "totals": list(self.totals),
        }


def koszul_betti(ideal, j_max=None, d_cap=None):
    check = artinian_check(ideal, d_cap)
    if not check.artinian:
        raise ValueError("koszul_betti needs an artinian quotient (Hilbert function never reached 0)")
    n = ideal.ring.n
    sigma = check.socle_degree
    if j_max is None:
        j_max = sigma + n
    if j_max < sigma + n:
        raise ValueError(f"j_max={j_max} is below sigma + n = {sigma + n}; the last syzygy would be lost")

    F = ideal.ring.field
    std = [ideal.standard_monomials(e) for e in range(sigma + 1)]
    subsets = [list(combinations(range(n), i)) for i in range(n + 1)]
    subset_pos = [{s: k for k, s in enumerate(level)} for level in subsets]

    def term_dim(i, d):
        e = d - i
        if i < 0 or i > n or e < 0 or e > sigma:
            return 0
        return len(subsets[i]) * len(std[e])

    def diff_rank(i, d):
        """Rank of the Koszul differential K_{i,d} -> K_{i-1,d}."""
        e = d - i
        if i < 1 or i > n or e < 0 or e + 1 > sigma:
            return 0
        table = ideal.ring.shift_table(e)
        target = ideal.piece(e + 1)
        ech = Echelon(F)
        for S in subsets[i]:
            for col in std[e]:
                vec = {}
                for k, t in enumerate(S):
                    img = target.reduce({table[t][col]: F(1)})
                    if not img:
                        continue
                    face = subset_pos[i - 1][S[:k] + S[k + 1:]]
                    sgn = 1 if k % 2 == 0 else -1
                    for c, x in img.items():
                        key = (face, c)
                        y = F.norm(vec.get(key, 0) + sgn * x)
                        if y:
                            vec[key] = y
                        else:
                            vec.pop(key, None)
                ech.add(vec)
        return ech.rank

    ranks = {}

    def rank(i, d):
        if (i, d) not in ranks:
            ranks[(i, d)] = diff_rank(i, d)
        return ranks[(i, d)]

    entries = {}
    for i in range(n + 1):
        for d in range(i, min(i + sigma, j_max) + 1):
            b = term_dim(i, d) - rank(i, d) - rank(i + 1, d)
            if b:
                entries[(i, d)] = b
    return BettiTable(n, entries, sigma)


def render_diagram(table):
    """Text diagram: row r, column c holds beta_{c, r+c}; zeros print as ``-``."""
    cells = [
        [str(table[(c, r + c)]) if table[(c, r + c)] else "-" for c in range(table.n + 1)]
        for r in range(table.rows)
    ]
    width = max(len(x) for row in cells for x in row)
    return "\n".join("  ".join(x.rjust(width) for x in row) for row in cells) + "\n"


def hilbert_from_betti(table, d_max):
    """h_d = sum_{i,j} (-1)^i beta_{i,j} C(d - j + n - 1, n - 1)."""
    n = table.n
    out = []
    for d in range(d_max + 1):
        h = 0
        for (i, j), b in table.entries.items():
            if j <= d:
                h += (-1) ** i * b * binom(d - j + n - 1, n - 1)
        out.append(h)
    return out


def structural_checks(table, expect_gorenstein=False):
    """Report dict with one boolean per check and a ``failures`` list."""
    n = table.n
    report = {}
    report["nonnegative"] = all(isinstance(b, int) and b >= 0 for b in table.entries.values())
    report["cyclic"] = table[(0, 0)] == 1 and all(j == 0 for i, j in table.entries if i == 0)
    report["euler_zero"] = sum((-1) ** i * b for i, b in enumerate(table.totals)) == 0
    if expect_gorenstein:
        report["last_betti_one"] = table.totals[n] == 1
        last = [j for i, j in table.entries if i == n]
        if len(last) == 1:
            s = last[0]
            dual = {(n - i, s - j): b for (i, j), b in table.entries.items()}
            report["dual_symmetric"] = dual == table.entries
        else:
            report["dual_symmetric"] = False
    report["failures"] = [k for k, v in report.items() if v is False]
    return report


def compare_with_extremal(table, p):
    """Per homological degree, (beta_i, extremal beta_i, beta_i <= extremal).

    The extremal algebra has the pure shifts 0, p, p+1, ..., p+n-2, 2p+n-2.
    """
    n = table.n
    degrees = (0,) + tuple(range(p, p + n - 1)) + (2 * p + n - 2,)
    ext = pure_resolution_betti(degrees)
    return [(b, e, b <= e) for b, e in zip(table.totals, ext)]
