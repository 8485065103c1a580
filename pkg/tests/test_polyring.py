from fractions import Fraction

import pytest

from conftest import ci_ideal
from gorbetti.binomial_core import binom
from gorbetti.linalg import Echelon, rank
from gorbetti.polyring import (
    Ideal,
    PrimeField,
    RationalField,
    Ring,
    artinian_check,
    colon_degreewise,
    colon_piece,
    default_degree_cap,
    degree_basis,
    format_ideal,
    hilbert_function,
    minimal_generators_by_degree,
    parse_ideal,
    parse_polynomial,
)


def ring4(field):
    return Ring(4, field)


def poly_product(factors):
    out = [1]
    for f in factors:
        new = [0] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                new[i + j] += a * b
        out = new
    return out


def test_arithmetic_examples(field):
    R = ring4(field)
    x1, x2, x3, x4 = R.gens()
    assert (x1 * x2 - x3 * x4) * (x1 * x2 + x3 * x4) == x1**2 * x2**2 - x3**2 * x4**2
    f = x1 * x2 * x3 + x3**2 * x4
    assert (f + (-f)).is_zero()
    assert x1**2 * x2**4 == R.monomial((2, 4, 0, 0))
    assert (3 * f - f - f - f).is_zero()
    assert f.degree == 3 and f.is_homogeneous()
    assert not (x1 + x2**2).is_homogeneous()


def test_prime_field_reduction():
    R = Ring(2, PrimeField(7))
    x, y = R.gens()
    assert (7 * x).is_zero()
    assert (x + y) ** 7 == x**7 + y**7
    assert str(x - y) == "x1 + 6*x2"


def test_rational_coefficients():
    R = Ring(2, RationalField())
    f = parse_polynomial("1/2*x1 - 3/4x2", R)
    assert f.terms == {(1, 0): Fraction(1, 2), (0, 1): Fraction(-3, 4)}
    assert str(parse_polynomial("x1*x2 - x2^2", R)) == "x1*x2 - x2^2"


def test_parser_forms(field):
    R = ring4(field)
    x1, x2, x3, x4 = R.gens()
    assert parse_polynomial("x1*x2*x3 + x3^2*x4", R) == x1 * x2 * x3 + x3**2 * x4
    assert parse_polynomial("3x1^2 - x2x3", R) == 3 * x1**2 - x2 * x3
    assert parse_polynomial("-x4^4", R) == -(x4**4)
    assert parse_polynomial(" 2 * 3 * x1 ", R) == 6 * x1


@pytest.mark.parametrize("bad", ["", "x5", "x1^", "x1 +", "x1 ** 2", "y1", "x1 x2 )", "*x1"])
def test_parser_errors(bad):
    with pytest.raises(ValueError):
        parse_polynomial(bad, Ring(4, PrimeField(32003)))


def test_parse_ideal_errors():
    with pytest.raises(ValueError, match="header"):
        parse_ideal("x1^2\n")
    with pytest.raises(ValueError, match="missing ring header"):
        parse_ideal("# nothing\n")
    with pytest.raises(ValueError, match="line 3"):
        parse_ideal("ring n 2 char 0\nx1^2\nx1 + x2^2\n")


def test_format_round_trip(example1):
    again = parse_ideal(format_ideal(example1), example1.ring.field)
    assert again.generators == example1.generators


def test_degree_basis(example1, field):
    dim, basis = degree_basis(example1, 2)
    assert dim == 1
    assert basis == [example1.ring.gens()[0] ** 2]
    R = ring4(field)
    assert degree_basis(Ideal(R, []), 3) == (0, [])
    assert degree_basis(Ideal(R, R.gens()), 3)[0] == binom(6, 3) == 20


def test_hilbert_example1(example1):
    hf = hilbert_function(example1, 9)
    assert hf == [1, 4, 9, 13, 13, 9, 4, 1, 0, 0]
    assert sum(hf) == 54


def test_hilbert_complete_intersection(field):
    I = ci_ideal(ring4(field), (2, 4, 3, 4))
    oracle = poly_product([[1] * 2, [1] * 4, [1] * 3, [1] * 4])
    oracle += [0] * (11 - len(oracle))
    assert hilbert_function(I, 10) == oracle
    assert sum(oracle) == 2 * 4 * 3 * 4 == 96


def test_hilbert_zero_ideal(field):
    R = ring4(field)
    assert hilbert_function(Ideal(R, []), 8) == [binom(d + 3, 3) for d in range(9)]


def test_dimension_accounting(example1):
    R = example1.ring
    hf = hilbert_function(example1, 11)
    for d in range(12):
        assert example1.dim(d) + hf[d] == binom(R.n + d - 1, d)
        assert len(example1.standard_monomials(d)) == hf[d]


def test_ideal_pieces_grow(example1):
    R = example1.ring
    for d in range(1, 10):
        assert example1.products_dim(d) <= example1.dim(d)
        # R_1 * I_{d-1} has dimension at least dim I_{d-1}
        assert example1.products_dim(d) >= example1.dim(d - 1)


def test_pieces_against_dense_rank(example1_fp):
    """dim I_d equals the rank of all products monomial * generator in degree d."""
    I = example1_fp
    R = I.ring
    for d in range(2, 9):
        vecs = []
        for f in I.generators:
            if f.degree <= d:
                for mon in R.monomials(d - f.degree):
                    vecs.append((R.monomial(mon) * f).to_vector(d))
        assert rank(R.field, vecs) == I.dim(d)


def test_artinian_check(example1, field):
    assert artinian_check(example1, 12) == (True, 7, False)
    R = ring4(field)
    x1 = R.gens()[0]
    assert artinian_check(Ideal(R, [x1]), 10) == (False, None, True)
    assert artinian_check(Ideal(R, R.gens()), 2) == (True, 0, False)
    assert default_degree_cap(example1) == 4 * 5 + 1


def test_colon_example1(example1):
    R = example1.ring
    x1, x2, x3, x4 = R.gens()
    J = Ideal(R, [x1**2, x2**4, x3**3, x4**4])
    f = x1 * x2 - x3 * x4
    span2 = colon_degreewise(J, f, 2)
    assert span2 == [x1**2]
    for d in range(9):
        assert colon_piece(J, f, d) == example1.piece(d), d


def test_colon_trivial_cases(field):
    R = ring4(field)
    x1, x2, x3, x4 = R.gens()
    J = Ideal(R, [x1**2, x2 * x3])
    for d in range(5):
        assert colon_piece(J, R.one(), d) == J.piece(d)
    assert colon_piece(Ideal(R, [x1]), x1, 1).rank == 4
    assert colon_piece(Ideal(R, [x1]), x1, 0).rank == 1
    with pytest.raises(ValueError):
        colon_piece(J, R.zero(), 1)


def test_colon_contains_ideal(example1_fp):
    """(J : f) always contains J; check it degreewise on a non-regular f."""
    R = example1_fp.ring
    x1, x2, x3, x4 = R.gens()
    J = Ideal(R, [x1**2, x2**4, x3**3, x4**4])
    f = x1 * x3 + x2**2
    for d in range(7):
        c = colon_piece(J, f, d)
        assert all(c.contains(v) for v in J.piece(d).basis())
        # every kernel element really maps into J
        for v in c.basis():
            g = R.from_vector(d, v) * f
            assert J.normal_form(g) == {}


def test_minimal_generators(example1, field):
    assert minimal_generators_by_degree(example1) == {2: 1, 3: 3, 4: 4, 5: 1, 6: 1}
    R = ring4(field)
    x1, x2, x3, x4 = R.gens()
    assert minimal_generators_by_degree(Ideal(R, [x1**2, x1**3])) == {2: 1}
    assert minimal_generators_by_degree(ci_ideal(R, (2, 4, 3, 4))) == {2: 1, 3: 1, 4: 2}


def test_field_independence(example1_fp):
    q = parse_ideal(format_ideal(example1_fp).replace("char 32003", "char 0"))
    assert hilbert_function(q, 10) == hilbert_function(example1_fp, 10)
    for d in range(9):
        assert q.piece(d).pivots() == example1_fp.piece(d).pivots()


def test_with_field_rejects_lifting(example1_fp):
    with pytest.raises(ValueError):
        example1_fp.with_field(RationalField())


def test_echelon_basics():
    F = PrimeField(101)
    e = Echelon(F)
    assert e.add({0: 2, 1: 4}) and e.add({1: 3})
    assert not e.add({0: 1, 1: 5})
    assert e.rows == {0: {0: 1}, 1: {1: 1}}
    assert e.contains({0: 7, 1: 9})
    assert rank(RationalField(), [{0: 1, 1: 1}, {0: 2, 1: 2}, {2: 1}]) == 2
