"""Coefficient fields and incremental exact row reduction.

Vectors are sparse dicts ``column -> nonzero coefficient``.  Columns are
any totally ordered keys; the smallest column of a row is its pivot.
"""

from fractions import Fraction

__all__ = ["PrimeField", "RationalField", "make_field", "Echelon", "DEFAULT_MODULUS"]

DEFAULT_MODULUS = 32003


def _is_prime(q):
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """Z/qZ with elements stored as least non-negative residues."""

    def __init__(self, q=DEFAULT_MODULUS):
        if not _is_prime(q):
            raise ValueError(f"modulus {q} is not prime")
        self.q = q
        self.characteristic = q

    def __repr__(self):
        return f"PrimeField({self.q})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("F", self.q))

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.q) % self.q
        return int(x) % self.q

    def inv(self, x):
        if x % self.q == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.q)

    def norm(self, x):
        return x % self.q

    def to_str(self, x):
        return str(x)


class RationalField:
    def __init__(self):
        self.characteristic = 0

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __call__(self, x):
        return Fraction(x)

    def inv(self, x):
        return 1 / Fraction(x)

    def norm(self, x):
        return x

    def to_str(self, x):
        return str(x)


def make_field(char):
    """``char`` 0 gives the rationals, a prime q gives F_q."""
    return RationalField() if int(char) == 0 else PrimeField(int(char))


class Echelon:
    """A subspace kept as a fully reduced row echelon basis.

    Every stored row has leading coefficient 1 at its pivot and zeros in
    all other pivot columns.
    """

    def __init__(self, field):
        self.field = field
        self.rows = {}

    @property
    def rank(self):
        return len(self.rows)

    def copy(self):
        e = Echelon(self.field)
        e.rows = {k: dict(v) for k, v in self.rows.items()}
        return e

    def reduce(self, v):
        """Normal form of ``v``: its support avoids every pivot column."""
        norm = self.field.norm
        out = dict(v)
        for c in [c for c in v if c in self.rows]:
            coef = out.get(c)
            if not coef:
                continue
            for col, x in self.rows[c].items():
                y = norm(out.get(col, 0) - coef * x)
                if y:
                    out[col] = y
                else:
                    out.pop(col, None)
        return out

    def add(self, v):
        """Insert ``v``; return True if the rank grew."""
        w = self.reduce(v)
        if not w:
            return False
        norm = self.field.norm
        piv = min(w)
        inv = self.field.inv(w[piv])
        w = {c: norm(x * inv) for c, x in w.items()}
        for row in self.rows.values():
            coef = row.get(piv)
            if coef:
                for col, x in w.items():
                    y = norm(row.get(col, 0) - coef * x)
                    if y:
                        row[col] = y
                    else:
                        del row[col]
        self.rows[piv] = w
        return True

    def extend(self, vectors):
        return sum(1 for v in vectors if self.add(v))

    def contains(self, v):
        return not self.reduce(v)

    def basis(self):
        """Rows sorted by pivot."""
        return [self.rows[k] for k in sorted(self.rows)]

    def pivots(self):
        return sorted(self.rows)

    def __eq__(self, other):
        return isinstance(other, Echelon) and self.rows == other.rows


def rank(field, vectors):
    e = Echelon(field)
    e.extend(vectors)
    return e.rank
