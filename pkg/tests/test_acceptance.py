"""One test per acceptance criterion; the terminal summary prints a
PASS/FAIL line for each (see conftest.py)."""

import time
from contextlib import contextmanager

from conftest import CRITERIA, ci_ideal, inverse_system_ideal
from gorbetti.binomial_core import binom, macaulay_bound
from gorbetti.cli import EXAMPLE1_DIAGRAM, example1_text
from gorbetti.hvector import (
    certificate,
    enumerate_symmetric_osequences,
    extremal_hvector,
    extremal_multiplicity,
    forbidden_nu,
    growth_monotonic_scan,
    nu0,
    pure_resolution_betti,
)
from gorbetti.pfaffian import codim3_experiment, generic_linear, maximal_pfaffians, random_alternating
from gorbetti.polyring import (
    Ideal,
    PrimeField,
    RationalField,
    Ring,
    colon_piece,
    hilbert_function,
    minimal_generators_by_degree,
    parse_ideal,
)
from gorbetti.resolution import hilbert_from_betti, koszul_betti, render_diagram, structural_checks


@contextmanager
def criterion(key, label):
    CRITERIA[key] = (False, label)
    yield
    CRITERIA[key] = (True, label)


def test_criterion_01_formula_table():
    with criterion(1, "nu0 and extremal multiplicity formula table"):
        start = time.perf_counter()
        assert [nu0(4, p) for p in range(2, 7)] == [(p + 1) ** 2 for p in range(2, 7)]
        assert [nu0(3, p) for p in range(2, 11)] == [2 * p + 1 for p in range(2, 11)]
        assert extremal_multiplicity(4, 2) == 6
        assert time.perf_counter() - start < 1


def example1_run(field):
    start = time.perf_counter()
    I = parse_ideal(example1_text(), field)
    h = hilbert_function(I, 9)
    mingens = minimal_generators_by_degree(I)
    table = koszul_betti(I)
    diagram = render_diagram(table)
    checks = structural_checks(table, expect_gorenstein=True)
    return time.perf_counter() - start, h, mingens, table, diagram, checks


def test_criterion_02_example1_end_to_end():
    with criterion(2, "four-variable example end to end over Q and F_32003"):
        results = {}
        for name, field, limit in (("Q", RationalField(), 60), ("F", PrimeField(32003), 5)):
            elapsed, h, mingens, table, diagram, checks = example1_run(field)
            assert elapsed < limit, (name, elapsed)
            assert h[:8] == [1, 4, 9, 13, 13, 9, 4, 1] and h[8:] == [0, 0]
            assert sum(h) == 54
            assert mingens == {2: 1, 3: 3, 4: 4, 5: 1, 6: 1}
            assert table.totals == (1, 10, 18, 10, 1)
            assert diagram == EXAMPLE1_DIAGRAM
            assert checks["failures"] == []
            results[name] = (h, mingens, table.entries)
        assert results["Q"] == results["F"]


def test_criterion_03_colon_identity():
    with criterion(3, "colon ideal equals the listed ideal in degrees <= 8"):
        for field in (RationalField(), PrimeField(32003)):
            I = parse_ideal(example1_text(), field)
            x1, x2, x3, x4 = I.ring.gens()
            J = Ideal(I.ring, [x1**2, x2**4, x3**3, x4**4])
            f = x1 * x2 - x3 * x4
            for d in range(9):
                assert colon_piece(J, f, d) == I.piece(d), d


def test_criterion_04_forbidden_range():
    with criterion(4, "forbidden nu values for g = p = 4"):
        start = time.perf_counter()
        forbidden, nonunimodal = forbidden_nu(4, 4)
        assert forbidden == {21, 22, 23, 24}
        assert set(range(16, 21)) <= nonunimodal
        assert macaulay_bound(15, 4) == 21
        assert 20 <= macaulay_bound(15, 4)  # 15 -> 20 is admissible growth
        assert time.perf_counter() - start < 1


def test_criterion_05_theorem_by_enumeration():
    with criterion(5, "exhaustive symmetric O-sequences obey nu_p <= nu0"):
        start = time.perf_counter()
        for g, p in ((3, 2), (3, 3), (4, 2), (4, 3)):
            ext = extremal_hvector(g, p)
            vectors = list(enumerate_symmetric_osequences(g, p, 8))
            assert vectors
            assert all(h.nu_p <= nu0(g, p) for h in vectors)
            assert [h for h in vectors if h.nu_p == nu0(g, p)] == [ext]
            assert min(h.multiplicity for h in vectors) == extremal_multiplicity(g, p)
        assert time.perf_counter() - start < 600


def test_criterion_06_certificate_soundness():
    with criterion(6, "certificate chain holds on the whole admissible box"):
        failures = []
        count = 0
        for g in range(3, 6):
            for p in range(2, 6):
                for j in range(p, 11):
                    for h in range(j + 1, binom(p + g - 3, g - 1) + 1):
                        count += 1
                        if not certificate(g, p, j, h).verdict:
                            failures.append((g, p, j, h))
        assert count > 0
        assert failures == []


def test_criterion_07_codim3_experiment():
    with criterion(7, "random codim-3 pfaffian ideals obey nu <= 2p+1"):
        start = time.perf_counter()
        out = codim3_experiment(120, seed=0)
        ok = [r for r in out["trials"] if r["status"] == "ok"]
        assert len(ok) >= 100
        assert out["summary"]["violations"] == 0
        for r in ok:
            p = r["p"]
            assert r["nu"] <= 2 * p + 1
            assert r["betti_totals"][2] <= 2 * p + 1
            assert r["betti_totals"][3] == 1
        M = generic_linear(5, seed=0)
        t = koszul_betti(Ideal(M.ring, maximal_pfaffians(M)))
        assert t.totals == (1, 5, 5, 1)
        assert time.perf_counter() - start < 300


def test_criterion_08_growth_monotonic():
    with criterion(8, "Macaulay bound non-increasing in j for h <= 500"):
        start = time.perf_counter()
        ok, witness = growth_monotonic_scan(500, 2, 51)
        assert ok, f"counterexample at (h, j) = {witness}"
        assert time.perf_counter() - start < 10


def oracle_ideals():
    fp = PrimeField(32003)
    out = [parse_ideal(example1_text(), RationalField()), parse_ideal(example1_text(), fp)]
    for n, e in ((2, (2, 2)), (3, (2, 3, 4)), (4, (2, 4, 3, 4))):
        out.append(ci_ideal(Ring(n, fp), e))
    ring = Ring(3, fp)
    x, y, z = ring.gens()
    out.append(Ideal(ring, [x**2, y**2 * z, x * y * z, z**3, y**4]))
    for seed in range(4):
        M = random_alternating(7, (1, 1, 1, 2, 2, 2, 2), (1, 1, 1, 0, 0, 0, 0), seed)
        out.append(Ideal(M.ring, maximal_pfaffians(M)))
    r4 = Ring(4, fp)
    x = r4.gens()
    out.append(inverse_system_ideal(x[0] ** 4 + x[1] * x[2] * x[3] ** 2 + x[0] * x[1] ** 3))
    out.append(inverse_system_ideal(x[0] * x[1] * x[2] * x[3]))
    return out


def test_criterion_09_hilbert_from_betti():
    with criterion(9, "Hilbert function from Betti table matches direct count"):
        for I in oracle_ideals():
            t = koszul_betti(I)
            d_max = t.sigma + I.ring.n + 3
            assert hilbert_from_betti(t, d_max) == hilbert_function(I, d_max)


def test_criterion_10_pure_betti():
    with criterion(10, "pure resolution of shifts 0,2,3,4,6"):
        assert pure_resolution_betti((0, 2, 3, 4, 6)) == (1, 9, 16, 9, 1)
