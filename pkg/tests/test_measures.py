import itertools
from fractions import Fraction

import pytest

from youngfock.fock import vacuum
from youngfock.measures import (
    MeasureSpec,
    MiwaParams,
    cauchy_normalizer,
    complete_homogeneous,
    correlation,
    m_virasoro_weight_table,
    schur_polynomial,
    schur_weight,
    schur_weight_by_operators,
    schur_weight_table,
    virasoro_weight_table,
    weight_table,
)
from youngfock.operators import KerovParams, VirasoroFamily, VirasoroParams, exp_raising
from youngfock.partitions import HalfInt, Partition, contains_particle, partitions_up_to
from youngfock.rings import Poly

from .conftest import rand_q


def P(*parts):
    return Partition(parts)


GRID = [Fraction(n) for n in (-2, -1, 0, 1, 2)]


def test_schur_polynomial_printed_values_on_grid():
    # identities of low degree, checked on a full product grid: exact
    # multivariate interpolation makes this a proof, not a sample
    for x1, x2 in itertools.product(GRID, GRID):
        x = {1: x1, 2: x2}
        assert schur_polynomial(P(1), x) == x1
        assert schur_polynomial(P(2), x) == x1 * x1 / 2 + x2
        assert schur_polynomial(P(1, 1), x) == x1 * x1 / 2 - x2
    assert schur_polynomial(P(), {1: Fraction(7)}) == 1


def test_complete_homogeneous_matches_row_schur():
    x = {1: Fraction(2, 3), 2: Fraction(-1, 2), 3: Fraction(1, 5)}
    h = complete_homogeneous(x, 6)
    for n in range(1, 7):
        assert schur_polynomial(P(n), x) == h[n]


def test_schur_weight_dual_route(rng):
    for _ in range(3):
        p = MiwaParams(
            x={k: rand_q(rng) for k in (1, 2, 3)},
            y={k: rand_q(rng) for k in (1, 2, 3)},
        )
        for lam in partitions_up_to(6):
            assert schur_weight(lam, p) == schur_weight_by_operators(lam, p), lam


def test_schur_weight_trivial():
    assert schur_weight(P(), MiwaParams()) == 1
    p = MiwaParams(x={1: Fraction(2)}, y={1: Fraction(3)})
    assert schur_weight(P(1), p) == 6


def test_schur_positivity_at_nonnegative_specializations(rng):
    # Miwa coordinates of a genuine nonnegative variable specialization:
    # x_k = (sum_i a_i^k) / k with a_i >= 0
    for _ in range(3):
        avars = [abs(rand_q(rng)) for _ in range(3)]
        bvars = [abs(rand_q(rng)) for _ in range(2)]
        p = MiwaParams(
            x={k: sum(a ** k for a in avars) / k for k in range(1, 7)},
            y={k: sum(b ** k for b in bvars) / k for k in range(1, 7)},
        )
        for lam in partitions_up_to(6):
            assert schur_weight(lam, p) >= 0


def test_cauchy_normalizer_examples(rng):
    assert cauchy_normalizer(MiwaParams(), 6) == 1
    # single mode: truncated exp(x1 y1)
    a, b = Fraction(1, 2), Fraction(1, 3)
    p = MiwaParams(x={1: a}, y={1: b})
    expected = sum((a * b) ** m / __import__("math").factorial(m) for m in range(7))
    assert cauchy_normalizer(p, 6) == expected
    # matches the exhaustive weight sum through degree 6
    for _ in range(3):
        p = MiwaParams(
            x={k: rand_q(rng) for k in (1, 2, 3)},
            y={k: rand_q(rng) for k in (1, 2, 3)},
        )
        table = schur_weight_table(MeasureSpec(kind="schur", params=p, truncation=6))
        assert cauchy_normalizer(p, 6) == table.z_trunc


def test_virasoro_table_empty_y_kills_everything():
    spec = MeasureSpec(kind="virasoro", params=MiwaParams(x={1: Fraction(1)}),
                       kerov=KerovParams(z=Fraction(1, 2), w=Fraction(1, 3)),
                       truncation=3)
    table = virasoro_weight_table(spec)
    assert table.weights[P()] == 1
    assert all(table.weights[lam] == 0 for lam in table.partitions() if lam.size > 0)
    assert table.z_trunc == 1


def test_virasoro_table_row_two_value():
    z, w = Fraction(2, 5), Fraction(1, 7)
    x1, x2, y1 = Fraction(1, 2), Fraction(3), Fraction(1)
    spec = MeasureSpec(kind="virasoro",
                       params=MiwaParams(x={1: x1, 2: x2}, y={1: y1}),
                       kerov=KerovParams(z=z, w=w), truncation=2)
    table = virasoro_weight_table(spec)
    ket = x2 * (z + Fraction(1, 2)) + x1 * x1 / 2 * z * (z + 1)
    bra = y1 * y1 / 2 * w * (w + 1)
    assert table.weights[P(2)] == ket * bra


def test_virasoro_table_polynomial_ring_degree_bound():
    t = Poly.gen()
    spec = MeasureSpec(kind="virasoro",
                       params=MiwaParams(x={1: Fraction(1), 2: Fraction(1, 2)},
                                         y={1: Fraction(1)}),
                       kerov=KerovParams(z=t, w=Fraction(1, 3)), truncation=4)
    table = virasoro_weight_table(spec)
    fam = VirasoroFamily(VirasoroParams(alpha=t, gamma=Fraction(0)))
    ket = exp_raising(spec.params.x, fam, vacuum(), 4)
    for lam in table.partitions():
        coeff = ket.coefficient_of_partition(lam)
        deg = coeff.degree if isinstance(coeff, Poly) else 0
        assert deg <= lam.size


def test_table_polynomial_specialization_commutes(rng):
    x = {1: Fraction(1), 2: Fraction(-2, 3)}
    y = {1: Fraction(1, 2), 2: Fraction(1, 5)}
    w = Fraction(1, 3)
    t = Poly.gen()
    poly_table = virasoro_weight_table(MeasureSpec(
        kind="virasoro", params=MiwaParams(x=x, y=y),
        kerov=KerovParams(z=t, w=w), truncation=4))
    for _ in range(3):
        q = rand_q(rng)
        num_table = virasoro_weight_table(MeasureSpec(
            kind="virasoro", params=MiwaParams(x=x, y=y),
            kerov=KerovParams(z=q, w=w), truncation=4))
        for lam in poly_table.partitions():
            coeff = poly_table.weights[lam]
            value = coeff(q) if isinstance(coeff, Poly) else coeff
            assert value == num_table.weights[lam], lam


def test_m_virasoro_table_order2_equals_virasoro():
    x = {1: Fraction(1), 2: Fraction(1, 2)}
    y = {1: Fraction(2, 3), 2: Fraction(-1, 4)}
    kp = KerovParams(z=Fraction(1, 2), w=Fraction(2, 7))
    base = MeasureSpec(kind="virasoro", params=MiwaParams(x=x, y=y), kerov=kp, truncation=5)
    two = MeasureSpec(kind="m-virasoro", params=MiwaParams(x=x, y=y), kerov=kp,
                      truncation=5, m_order=2)
    t_v = virasoro_weight_table(base)
    t_m = m_virasoro_weight_table(two)
    assert t_v.weights == t_m.weights


def test_m_virasoro_table_order1_is_rescaled_schur():
    g = Fraction(1, 4)
    x = {1: Fraction(1), 2: Fraction(1, 3)}
    y = {1: Fraction(1, 2), 2: Fraction(2)}
    spec = MeasureSpec(kind="m-virasoro", params=MiwaParams(x=x, y=y),
                       kerov=KerovParams(z=Fraction(9, 5), w=Fraction(-1, 2)),
                       truncation=4, m_order=1, gamma=g)
    got = m_virasoro_weight_table(spec)
    rescaled = MiwaParams(
        x={k: v * (1 - g * k) for k, v in x.items()},
        y={k: v * (1 + g * k) for k, v in y.items()},
    )
    want = schur_weight_table(MeasureSpec(kind="schur", params=rescaled, truncation=4))
    assert got.weights == want.weights


def test_m_virasoro_table_order3_runs_with_z_degree_bound():
    t = Poly.gen()
    spec = MeasureSpec(kind="m-virasoro",
                       params=MiwaParams(x={1: Fraction(1)}, y={1: Fraction(1)}),
                       kerov=KerovParams(z=t, w=Fraction(1, 2)),
                       truncation=4, m_order=3)
    table = m_virasoro_weight_table(spec)
    for lam in table.partitions():
        coeff = table.weights[lam]
        deg = coeff.degree if isinstance(coeff, Poly) else 0
        assert deg <= 2 * lam.size


def test_weight_table_dispatch_and_validation():
    with pytest.raises(ValueError):
        MeasureSpec(kind="bogus", params=MiwaParams())
    p = MiwaParams(x={1: Fraction(1)}, y={1: Fraction(1)})
    assert weight_table(MeasureSpec(kind="schur", params=p, truncation=2)).kind == "schur"


def test_correlation_examples():
    trivial = schur_weight_table(MeasureSpec(kind="schur", params=MiwaParams(), truncation=3))
    assert correlation([], trivial) == 1
    assert correlation([HalfInt(-1)], trivial) == 1
    assert correlation([HalfInt(1)], trivial) == 0


def test_correlation_against_independent_enumeration():
    a, b = Fraction(1, 2), Fraction(1, 3)
    p = MiwaParams(x={1: a}, y={1: b})
    table = schur_weight_table(MeasureSpec(kind="schur", params=p, truncation=4))
    # independent route: operator-route weights and conf-prefix membership
    total = Fraction(0)
    norm = Fraction(0)
    for lam in partitions_up_to(4):
        wgt = schur_weight_by_operators(lam, p)
        norm += wgt
        positions = {x.doubled for x in
                     __import__("youngfock.partitions", fromlist=["conf"]).conf(lam, len(lam) + 2)}
        if 1 in positions:
            total += wgt
    assert correlation([HalfInt(1)], table) == total / norm


def test_correlation_counts_expected_particles():
    p = MiwaParams(x={1: Fraction(1, 2)}, y={1: Fraction(1, 2)})
    table = schur_weight_table(MeasureSpec(kind="schur", params=p, truncation=4))
    window = [HalfInt(d) for d in range(-9, 10, 2)]
    by_points = sum((correlation([x], table) for x in window), Fraction(0))
    direct = Fraction(0)
    for lam in partitions_up_to(4):
        count = sum(1 for x in window if contains_particle(lam, x))
        direct += table.normalized(lam) * count
    assert by_points == direct


def test_weight_table_serialization():
    p = MiwaParams(x={1: Fraction(1)}, y={1: Fraction(1, 2)})
    table = schur_weight_table(MeasureSpec(kind="schur", params=p, truncation=2))
    data = table.to_json()
    assert data["kind"] == "schur" and data["degree"] == 2
    assert data["weights"][0]["partition"] == []
    rows = table.to_csv_rows()
    assert rows[0] == ["partition", "weight", "normalized"]
    assert len(rows) == 1 + len(partitions_up_to(2))


def test_miwa_validation():
    with pytest.raises(ValueError):
        MiwaParams(x={0: Fraction(1)})
    p = MiwaParams(x={1: Fraction(0), 2: Fraction(1)})
    assert 1 not in p.x and 2 in p.x
