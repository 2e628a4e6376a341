from fractions import Fraction

import pytest

from youngfock.fock import FockVector
from youngfock.operators import KerovParams, OperatorSpec, kerov_D, kerov_U
from youngfock.partitions import Partition, partitions_of
from youngfock.repstructure import (
    bareiss_rank,
    decomposition_report,
    highest_weight_check,
    kernel_basis,
    matrix_of,
    rank_of_D,
    rref_nullspace,
)
from youngfock.rings import Poly

from .conftest import rand_q
from .oracles import pentagonal_count


def P(*parts):
    return Partition(parts)


KP = KerovParams(z=Fraction(2, 3), w=Fraction(5, 7))


def test_matrix_of_examples():
    gm = matrix_of(OperatorSpec.kerov_d(KP), 2)
    assert gm.rows == (P(1),)
    assert gm.cols == (P(2), P(1, 1))
    assert gm.entries == ((KP.w + 1, KP.w - 1),)

    gm = matrix_of(OperatorSpec.kerov_u(KP), 0)
    assert gm.entries == ((KP.z,),)

    gm = matrix_of(OperatorSpec.kerov_l(KP), 3)
    diag = KP.z * KP.w + 6
    for i in range(3):
        for j in range(3):
            assert gm.entries[i][j] == (diag if i == j else 0)


def test_bareiss_rank_small_cases():
    assert bareiss_rank([]) == 0
    assert bareiss_rank([[Fraction(0), Fraction(0)]]) == 0
    assert bareiss_rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 1
    assert bareiss_rank([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == 2


def test_bareiss_rank_over_polynomials():
    t = Poly.gen()
    # generic rank over the polynomial ring in w
    m = [[t + 1, t - 1]]
    assert bareiss_rank(m) == 1
    m = [[t, t * t], [Poly((1,)), t]]
    assert bareiss_rank(m) == 1  # second row is the first divided by t


def test_rref_nullspace_example():
    basis = rref_nullspace([[Fraction(3), Fraction(5)]], 2)
    assert len(basis) == 1
    v = basis[0]
    assert 3 * v[0] + 5 * v[1] == 0 and v[1] == 1


def test_rank_of_D_examples(rng):
    for _ in range(3):
        assert rank_of_D(2, rand_q(rng)) == 1
    assert rank_of_D(5, Fraction(3)) == pentagonal_count(4)
    assert rank_of_D(1, Fraction(0)) == 0
    assert rank_of_D(0, Fraction(4)) == 0


def test_rank_of_D_full_sweep(rng):
    for n in range(1, 9):
        ws = [rand_q(rng) for _ in range(3)] + [Fraction(i) for i in range(-n - 1, n + 2)]
        for w in ws:
            expected = 0 if (n == 1 and w == 0) else pentagonal_count(n - 1)
            assert rank_of_D(n, w) == expected, (n, w)


def test_rank_of_D_generic_over_polynomial_w(rng):
    # generic rank over the ring of polynomials in w, with specialization
    # spot checks at sampled rational points
    t = Poly.gen()
    for n in (1, 2, 3, 4, 5):
        assert rank_of_D(n, t) == pentagonal_count(n - 1)
        for _ in range(3):
            q = rand_q(rng)
            expected = 0 if (n == 1 and q == 0) else pentagonal_count(n - 1)
            assert rank_of_D(n, q) == expected


def test_matrix_of_rejects_unknown_family():
    with pytest.raises(ValueError):
        matrix_of(OperatorSpec(family="mystery"), 2)


def test_kernel_basis_examples(rng):
    z = rand_q(rng, nonzero=True)
    w = rand_q(rng)
    p = KerovParams(z=z, w=w)
    assert kernel_basis(OperatorSpec.kerov_u(p), 3) == []
    kern = kernel_basis(OperatorSpec.kerov_d(p), 2)
    assert len(kern) == 1
    v = kern[0]
    # proportional to (w-1)|(2)> - (w+1)|(1,1)>
    c2 = v.coefficient_of_partition(P(2))
    c11 = v.coefficient_of_partition(P(1, 1))
    assert c2 * (-(w + 1)) == c11 * (w - 1)
    assert kerov_D(p, v).is_zero()
    # z = 0 kernel at degree 0 spans the vacuum
    kern0 = kernel_basis(OperatorSpec.kerov_u(KerovParams(z=Fraction(0), w=w)), 0)
    assert len(kern0) == 1
    assert kern0[0].coefficient_of_partition(P()) == 1


def test_kernel_of_U_trivial_sweep(rng):
    for z in [rand_q(rng, nonzero=True) for _ in range(3)] + [Fraction(k) for k in range(-3, 4)]:
        p = KerovParams(z=z, w=rand_q(rng))
        for n in range(1, 8):
            assert kernel_basis(OperatorSpec.kerov_u(p), n) == [], (z, n)


def test_rank_nullity_per_degree(rng):
    w = rand_q(rng)
    p = KerovParams(z=Fraction(1), w=w)
    for n in range(0, 9):
        rank = rank_of_D(n, w)
        kern = kernel_basis(OperatorSpec.kerov_d(p), n)
        assert rank + len(kern) == pentagonal_count(n)


def test_highest_weight_check(rng):
    z, w = rand_q(rng), rand_q(rng)
    vectors = highest_weight_check(2, z, w)
    assert len(vectors) == 1
    assert vectors[0][1] == z * w + 4
    assert highest_weight_check(0, z, w)[0][1] == z * w
    for n in range(0, 7):
        got = highest_weight_check(n, z, w)
        expected_count = pentagonal_count(n) - (pentagonal_count(n - 1) if n else 0)
        assert len(got) == expected_count


def test_u_maps_kernel_to_independent_vectors(rng):
    z, w = rand_q(rng, nonzero=True), rand_q(rng, nonzero=True)
    p = KerovParams(z=z, w=w)
    for n in range(2, 7):
        kern = kernel_basis(OperatorSpec.kerov_d(p), n)
        images = [kerov_U(p, v) for v in kern]
        basis = partitions_of(n + 1)
        index = {lam: i for i, lam in enumerate(basis)}
        rows = []
        for img in images:
            row = [Fraction(0)] * len(basis)
            for state, coeff in img.terms():
                row[index[state.to_partition()]] = coeff
            rows.append(row)
        assert bareiss_rank(rows) == len(kern)


def test_decomposition_report_cases(rng):
    z, w = rand_q(rng, nonzero=True), rand_q(rng, nonzero=True)
    rep = decomposition_report(z, w, 4)
    assert rep.case == "both-nonzero"
    assert all(r["holds"] for r in rep.relations)
    for row in rep.per_degree:
        assert row["rank_nullity_ok"] and row["hw_ok"]
        if row["degree"] >= 2:
            assert row["verma_multiplicity"] == (
                pentagonal_count(row["degree"]) - pentagonal_count(row["degree"] - 1))

    rep = decomposition_report(Fraction(0), Fraction(0), 3)
    assert rep.case == "both-zero"
    assert all(r["holds"] for r in rep.relations)

    rep = decomposition_report(Fraction(0), Fraction(5), 3)
    assert rep.case == "z-zero"
    assert all(r["holds"] for r in rep.relations)
    # the lowering of the one-box diagram really is w times the vacuum
    assert any("normalizes that scalar" in n for n in rep.notes)

    rep = decomposition_report(Fraction(7), Fraction(0), 3)
    assert rep.case == "w-zero"
    assert all(r["holds"] for r in rep.relations)
    payload = rep.to_json()
    assert payload["case"] == "w-zero"
    assert len(payload["per_degree"]) == 4
