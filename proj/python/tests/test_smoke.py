import pytest

import polyprime as pp


@pytest.fixture
def f2():
    return pp.Field.parse("2")


def test_field_parse(f2):
    assert f2.size == 2
    assert pp.Field.parse("2^2").size == 4
    with pytest.raises(Exception):
        pp.Field.parse("4")


def test_poly_ops(f2):
    z = pp.Poly(f2, [0, 1])
    one = pp.Poly(f2, [1])
    assert (z * z).degree == 2
    assert pp.poly_gcd(z * z, z) == z
    assert pp.is_irreducible(z + one)


def test_hermite_and_primeness(f2):
    m = pp.PolyMat(f2, [[[0, 1], [1]], [[0], [1]]])  # [[z,1],[0,1]]
    h = pp.hermite_form(m)
    assert h.det() == m.det()
    assert m.is_unimodular() is False
    wide = pp.PolyMat(f2, [[[0, 1], [1, 1]]])  # [z, z+1]
    assert pp.is_left_prime(wide)

    ident = pp.PolyMat(f2, [[[1], [0]], [[0], [1]]])
    assert pp.hermite_form(ident) == ident
    assert pp.kronecker_hermite_form(ident) == ident


def test_mutual_coprimeness_worked_example(f2):
    d1 = pp.PolyMat(f2, [[[1], [0]], [[1], [0, 1]]])
    d2 = pp.PolyMat(f2, [[[1], [0]], [[0], [0, 1]]])
    d3 = pp.PolyMat(f2, [[[0, 1], [0]], [[0], [1]]])
    assert pp.are_left_coprime([d1, d2])
    assert pp.are_left_coprime([d1, d3])
    assert pp.are_left_coprime([d2, d3])
    assert not pp.mutually_left_coprime([d1, d2, d3])


def test_systems_and_codes(f2):
    a = pp.Mat(f2, [[0]])
    b = pp.Mat(f2, [[1]])
    c = pp.Mat(f2, [[1]])
    d = pp.Mat(f2, [[0]])
    assert pp.is_reachable(a, b)
    sys = pp.StateSpace(a, b, c, d)
    assert pp.is_minimal(sys)
    p, q = pp.right_coprime_factorization(sys)
    assert q[0, 0] == pp.Poly(f2, [0, 1])
    gen = pp.code_from_system(sys)
    assert pp.is_noncatastrophic(gen)
    assert pp.code_order(gen) == 1

    bad = pp.PolyMat(f2, [[[0, 1]], [[0, 0, 1]]])  # [[z],[z^2]]
    assert not pp.is_noncatastrophic(bad)


def test_census_and_mc(f2):
    r = pp.exact_probability("scalar-coprime", f2, N=2, deg=[1, 1])
    assert (r["total"], r["hits"]) == (4, 2)
    assert r["numerator"] == 1 and r["denominator"] == 2

    e1 = pp.mc_estimate("scalar-coprime", f2, trials=5000, seed=42)
    e2 = pp.mc_estimate("scalar-coprime", f2, trials=5000, seed=42, workers=4)
    assert e1["hits"] == e2["hits"]
    assert e1["ci_low"] <= 0.5 <= e1["ci_high"]

    with pytest.raises(pp.BudgetExceeded):
        pp.exact_probability("reachable", f2, n=3, m=3, budget=10)
