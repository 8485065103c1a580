"""Graded polynomial rings over a prime field or the rationals, and
degree-by-degree linear algebra for homogeneous ideals.

No Groebner bases: every question asked here (dimension of I_d, Hilbert
function, colon ideal in a fixed degree, minimal generator counts) is a
finite linear algebra problem inside one graded piece R_d, with monomials
of degree d as columns ordered by graded reverse lexicographic order
(column 0 is the largest monomial).
"""

import re
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import NamedTuple, Optional

from .binomial_core import binom
from .linalg import DEFAULT_MODULUS, Echelon, PrimeField, RationalField, make_field

__all__ = [
    "PrimeField",
    "RationalField",
    "make_field",
    "Ring",
    "Polynomial",
    "Ideal",
    "ArtinianCheck",
    "parse_polynomial",
    "parse_ideal",
    "format_ideal",
    "degree_basis",
    "hilbert_function",
    "artinian_check",
    "colon_degreewise",
    "colon_piece",
    "minimal_generators_by_degree",
    "default_degree_cap",
]


@lru_cache(maxsize=None)
def _monomials(n, d):
    exps = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for v in combo:
            e[v] += 1
        exps.append(tuple(e))
    # grevlex, largest first: ascending in the reversed exponent vector
    exps.sort(key=lambda e: e[::-1])
    return tuple(exps)


@lru_cache(maxsize=None)
def _index(n, d):
    return {e: i for i, e in enumerate(_monomials(n, d))}


@lru_cache(maxsize=None)
def _shift_table(n, d):
    """``table[t][i]`` is the column in degree d+1 of x_t times monomial i."""
    target = _index(n, d + 1)
    table = []
    for t in range(n):
        row = []
        for e in _monomials(n, d):
            f = list(e)
            f[t] += 1
            row.append(target[tuple(f)])
        table.append(tuple(row))
    return tuple(table)


class Ring:
    """k[x1, ..., xn] with a fixed coefficient field."""

    def __init__(self, n, field=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.field = field if field is not None else PrimeField(DEFAULT_MODULUS)

    def __repr__(self):
        return f"Ring({self.n}, {self.field!r})"

    def __eq__(self, other):
        return isinstance(other, Ring) and other.n == self.n and other.field == self.field

    def __hash__(self):
        return hash((self.n, self.field))

    def monomials(self, d):
        return _monomials(self.n, d) if d >= 0 else ()

    def index(self, d):
        return _index(self.n, d)

    def dim(self, d):
        return binom(self.n + d - 1, d) if d >= 0 else 0

    def shift_table(self, d):
        return _shift_table(self.n, d)

    def gens(self):
        return [self.monomial(tuple(int(i == t) for i in range(self.n))) for t in range(self.n)]

    def monomial(self, exps, coef=1):
        return Polynomial(self, {tuple(exps): coef})

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.monomial((0,) * self.n)

    def from_vector(self, d, vec):
        mons = self.monomials(d)
        return Polynomial(self, {mons[c]: x for c, x in vec.items()})

    def with_field(self, field):
        return Ring(self.n, field)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        F = ring.field
        clean = {}
        for e, c in terms.items():
            if len(e) != ring.n:
                raise ValueError(f"exponent {e} does not match {ring.n} variables")
            c = F(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    def _check(self, other):
        if not isinstance(other, Polynomial) or other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial(self.ring, {(0,) * self.ring.n: other})

    def __add__(self, other):
        other = self._coerce(other)
        norm = self.ring.field.norm
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = norm(out.get(e, 0) + c)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        norm = self.ring.field.norm
        if not isinstance(other, Polynomial):
            s = self.ring.field(other)
            return Polynomial(self.ring, {e: norm(c * s) for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = norm(out.get(e, 0) + c1 * c2)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0][::-1]))

    def leading_coefficient(self):
        return self.sorted_terms()[0][1] if self.terms else 0

    def to_vector(self, d=None):
        if d is None:
            d = self.degree
        idx = self.ring.index(d)
        vec = {}
        for e, c in self.terms.items():
            if sum(e) != d:
                raise ValueError(f"polynomial is not homogeneous of degree {d}")
            vec[idx[e]] = c
        return vec

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ring.field
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            neg = isinstance(F, RationalField) and c < 0
            a = -c if neg else c
            mon = "*".join(
                f"x{v + 1}" if x == 1 else f"x{v + 1}^{x}" for v, x in enumerate(e) if x
            )
            if not mon:
                body = F.to_str(a)
            elif a == 1:
                body = mon
            else:
                body = f"{F.to_str(a)}*{mon}"
            if k == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|x(\d+)|(\^)|(\*)|([+-]))")


def parse_polynomial(text, ring):
    """Parse e.g. ``x1*x2*x3 + x3^2*x4`` or ``3x1^2 - x2x3``.

    Terms are products of integer coefficients and variables ``x1..xn``;
    ``*`` is optional and ``^`` takes a non-negative integer exponent.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"cannot parse {text!r} at position {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        num, var, caret, star, sign = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif var is not None:
            tokens.append(("var", int(var)))
        elif caret:
            tokens.append(("pow", None))
        elif star:
            tokens.append(("mul", None))
        else:
            tokens.append(("sign", sign))

    F = ring.field
    out = ring.zero()
    i = 0
    n = len(tokens)
    while i < n:
        sgn = 1
        while i < n and tokens[i][0] == "sign":
            if tokens[i][1] == "-":
                sgn = -sgn
            i += 1
        if i == n:
            raise ValueError(f"dangling sign in {text!r}")
        coef = F(sgn)
        exps = [0] * ring.n
        got = False
        while i < n and tokens[i][0] in ("num", "var", "mul"):
            kind, val = tokens[i]
            i += 1
            if kind == "mul":
                if not got or i == n or tokens[i][0] not in ("num", "var"):
                    raise ValueError(f"unexpected '*' in {text!r}")
                continue
            power = 1
            if i < n and tokens[i][0] == "pow":
                if i + 1 >= n or tokens[i + 1][0] != "num" or "/" in tokens[i + 1][1]:
                    raise ValueError(f"bad exponent in {text!r}")
                power = int(tokens[i + 1][1])
                i += 2
            if kind == "num":
                if "/" in val:
                    a, b = val.split("/")
                    base = F(a) * F.inv(F(b))
                else:
                    base = F(val)
                for _ in range(power):
                    coef = F.norm(coef * base)
            else:
                if not 1 <= val <= ring.n:
                    raise ValueError(f"variable x{val} outside x1..x{ring.n}")
                exps[val - 1] += power
            got = True
        if not got:
            raise ValueError(f"empty term in {text!r}")
        out = out + Polynomial(ring, {tuple(exps): coef})
        if i < n and tokens[i][0] != "sign":
            raise ValueError(f"unexpected token in {text!r}")
    return out


_HEADER = re.compile(r"^ring\s+n\s+(\d+)\s+char\s+(\d+)\s*$")


def parse_ideal(text, field=None):
    """Parse the ideal file format: a ``ring n <n> char <q|0>`` header,
    then one polynomial per line; blank lines and ``#`` comments skipped.

    ``field`` overrides the header's characteristic.
    """
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            m = _HEADER.match(line)
            if not m:
                raise ValueError(f"line {lineno}: expected header 'ring n <n> char <q|0>', got {line!r}")
            ring = Ring(int(m.group(1)), field if field is not None else make_field(int(m.group(2))))
            continue
        try:
            f = parse_polynomial(line, ring)
            if not f.is_homogeneous():
                raise ValueError(f"{line!r} is not homogeneous")
            gens.append(f)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if ring is None:
        raise ValueError("missing ring header")
    return Ideal(ring, gens)


def format_ideal(ideal):
    F = ideal.ring.field
    lines = [f"ring n {ideal.ring.n} char {F.characteristic}"]
    lines += [str(f) for f in ideal.generators]
    return "\n".join(lines) + "\n"


class ArtinianCheck(NamedTuple):
    artinian: bool
    socle_degree: Optional[int]
    inconclusive: bool


class Ideal:
    """A homogeneous ideal given by generators, with lazily computed pieces I_d."""

    def __init__(self, ring, generators):
        self.ring = ring
        gens = []
        for f in generators:
            if f.ring != ring:
                raise ValueError("generator from a different ring")
            if f.is_zero():
                continue
            if not f.is_homogeneous():
                raise ValueError(f"generator {f} is not homogeneous")
            gens.append(f)
        self.generators = tuple(gens)
        self._pieces = {}
        self._products = {}

    def __repr__(self):
        return f"Ideal({self.ring!r}, {len(self.generators)} generators)"

    @property
    def degrees(self):
        return [f.degree for f in self.generators]

    def with_field(self, field):
        ring = self.ring.with_field(field)
        gens = []
        for f in self.generators:
            if isinstance(self.ring.field, PrimeField) and isinstance(field, RationalField):
                raise ValueError("cannot lift prime-field coefficients to the rationals")
            gens.append(Polynomial(ring, dict(f.terms)))
        return Ideal(ring, gens)

    def piece(self, d):
        """I_d as an ``Echelon`` over the degree-d monomial columns."""
        if d in self._pieces:
            return self._pieces[d]
        F = self.ring.field
        if d < 0 or not self.generators or d < min(self.degrees):
            e = Echelon(F)
            self._products[d] = 0
            self._pieces[d] = e
            return e
        for k in range(min(self.degrees), d):
            self.piece(k)
        prev = self._pieces.get(d - 1)
        e = Echelon(F)
        if prev is not None and d >= 1 and prev.rank == self.ring.dim(d - 1) and prev.rank > 0:
            e.rows = {i: {i: F(1)} for i in range(self.ring.dim(d))}
            self._products[d] = e.rank
            self._pieces[d] = e
            return e
        if prev is not None and prev.rank:
            table = self.ring.shift_table(d - 1)
            for row in prev.basis():
                for t in range(self.ring.n):
                    sh = table[t]
                    e.add({sh[c]: x for c, x in row.items()})
        self._products[d] = e.rank
        for f in self.generators:
            if f.degree == d:
                e.add(f.to_vector(d))
        self._pieces[d] = e
        return e

    def dim(self, d):
        return self.piece(d).rank

    def products_dim(self, d):
        """dim of R_1 * I_{d-1} inside R_d."""
        self.piece(d)
        return self._products[d]

    def normal_form(self, f):
        """Reduce homogeneous ``f`` modulo I_{deg f}; returns a sparse vector."""
        if f.is_zero():
            return {}
        return self.piece(f.degree).reduce(f.to_vector())

    def standard_monomials(self, d):
        """Columns of R_d outside the pivots of I_d: a basis of (R/I)_d."""
        piv = self.piece(d).rows
        return [c for c in range(self.ring.dim(d)) if c not in piv]


def degree_basis(ideal, d):
    """``(dim I_d, reduced echelon basis as polynomials)``."""
    e = ideal.piece(d)
    return e.rank, [ideal.ring.from_vector(d, row) for row in e.basis()]


def hilbert_function(ideal, d_max):
    return [ideal.ring.dim(d) - ideal.dim(d) for d in range(d_max + 1)]


def default_degree_cap(ideal):
    """n * (D - 1) + 1 where D is the largest generator degree.

    An artinian ideal generated in degrees <= D contains, over an infinite
    field, a regular sequence of n forms of degree D, so its socle degree
    is at most n * (D - 1).
    """
    if not ideal.generators:
        return 1
    return ideal.ring.n * (max(ideal.degrees) - 1) + 1


def artinian_check(ideal, d_cap=None):
    if d_cap is None:
        d_cap = default_degree_cap(ideal)
    for d in range(d_cap + 1):
        if ideal.ring.dim(d) == ideal.dim(d):
            return ArtinianCheck(True, d - 1, False)
    return ArtinianCheck(False, None, True)


def colon_piece(ideal, f, d):
    """(I : f)_d as an ``Echelon`` over the degree-d monomial columns."""
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("colon needs a nonzero homogeneous polynomial")
    ring = ideal.ring
    F = ring.field
    e = f.degree
    target = ideal.piece(d + e)
    tidx = ring.index(d + e)
    aug = Echelon(F)
    for a, mon in enumerate(ring.monomials(d)):
        img = {}
        for fe, c in f.terms.items():
            col = tidx[tuple(x + y for x, y in zip(mon, fe))]
            img[col] = c
        img = target.reduce(img)
        v = {(0, c): x for c, x in img.items()}
        v[(1, a)] = F(1)
        aug.add(v)
    kernel = Echelon(F)
    for piv, row in aug.rows.items():
        if piv[0] == 1:
            kernel.add({c: x for (tag, c), x in row.items() if tag == 1})
    return kernel


def colon_degreewise(ideal, f, d):
    """Reduced echelon basis of (I : f)_d."""
    return [ideal.ring.from_vector(d, row) for row in colon_piece(ideal, f, d).basis()]


def minimal_generators_by_degree(ideal, d_max=None):
    """``{d: dim I_d - dim R_1 I_{d-1}}`` for degrees with a nonzero count."""
    if d_max is None:
        d_max = max(ideal.degrees, default=0)
    out = {}
    for d in range(d_max + 1):
        k = ideal.dim(d) - ideal.products_dim(d)
        if k:
            out[d] = k
    return out
