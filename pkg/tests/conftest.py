import pytest

from gorbetti.cli import example1_text
from gorbetti.polyring import Ideal, PrimeField, RationalField, Ring, parse_ideal

# filled by test_acceptance; printed once at the end of the session
CRITERIA = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA):
        ok, label = CRITERIA[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key:>2}: {label}")


@pytest.fixture(params=["F32003", "Q"])
def field(request):
    return PrimeField(32003) if request.param == "F32003" else RationalField()


@pytest.fixture
def example1(field):
    return parse_ideal(example1_text(), field)


@pytest.fixture
def example1_fp():
    return parse_ideal(example1_text(), PrimeField(32003))


def ci_ideal(ring, exponents):
    """Monomial complete intersection (x1^a1, ..., xn^an)."""
    x = ring.gens()
    return Ideal(ring, [x[i] ** a for i, a in enumerate(exponents)])


def contract(ring, g, F):
    """g acting on F by contraction: x^a o x^b = x^(b-a), or 0."""
    out = {}
    for a, c in g.terms.items():
        for b, e in F.terms.items():
            if all(u <= v for u, v in zip(a, b)):
                k = tuple(v - u for u, v in zip(a, b))
                out[k] = ring.field.norm(out.get(k, 0) + c * e)
    return type(g)(ring, out)


def inverse_system_ideal(F):
    """Ann(F) for a form F: an artinian Gorenstein ideal with socle degree deg F."""
    from gorbetti.linalg import Echelon

    ring = F.ring
    s = F.degree
    gens = []
    for d in range(1, s + 2):
        if d > s:
            gens.extend(ring.monomial(e) for e in ring.monomials(d))
            break
        aug = Echelon(ring.field)
        for a, mon in enumerate(ring.monomials(d)):
            img = contract(ring, ring.monomial(mon), F)
            v = {(0, c): x for c, x in img.to_vector(s - d).items()} if img else {}
            v[(1, a)] = 1
            aug.add(v)
        for piv, row in aug.rows.items():
            if piv[0] == 1:
                gens.append(ring.from_vector(d, {c: x for (_, c), x in row.items()}))
    return Ideal(ring, gens)
