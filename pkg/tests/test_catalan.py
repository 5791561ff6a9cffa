import pytest

from qtcatalan.catalan import (F_REGIONS, H_REGIONS, catalan_poly3,
                               catalan_poly_k4, catalan_poly_lambda3,
                               gf_series3, gf_series4, refined_poly3,
                               refined_poly4, region_of_path3)
from qtcatalan.dyck import KVec3, enumerate_paths3
from qtcatalan.polynomial import SparsePoly, VarTable

QT = VarTable(("q", "t"))

C111 = SparsePoly(QT, {(3, 0): 1, (2, 1): 1, (1, 2): 1, (1, 1): 1, (0, 3): 1})


def ones(p):
    return p.eval_ones(p.vars.names).constant_value()


def test_catalan_poly3_base_cases():
    assert catalan_poly3(KVec3(0, 0, 0)) == SparsePoly.one(QT)
    assert catalan_poly3(KVec3(1, 1, 1)) == C111
    assert ones(catalan_poly3(KVec3(1, 1, 1))) == 5


def test_catalan_poly3_counts():
    for k1 in range(5):
        for k2 in range(5):
            k = KVec3(k1, k2, 1)
            assert ones(catalan_poly3(k)) == len(enumerate_paths3(k))


def test_catalan_poly3_symmetry_instances():
    for k in [(3, 1, 2), (2, 2, 0), (0, 4, 1), (5, 3, 2)]:
        assert catalan_poly3(KVec3(*k)).is_symmetric("q", "t")


def test_catalan_poly3_degree_bound():
    for k1 in range(6):
        for k2 in range(6):
            p = catalan_poly3(KVec3(k1, k2, 3))
            bound = 2 * k1 + k2
            for (eq, et) in p.terms:
                assert eq <= bound and et <= bound


def test_catalan_poly_lambda3():
    assert catalan_poly_lambda3((1, 1, 1)) == catalan_poly3(KVec3(1, 1, 1))
    p = catalan_poly_lambda3((2, 1, 1))
    expected = (catalan_poly3(KVec3(2, 1, 1)) + catalan_poly3(KVec3(1, 2, 1))
                + catalan_poly3(KVec3(1, 1, 2)))
    assert p == expected
    assert p.is_symmetric("q", "t")
    assert catalan_poly_lambda3((3, 2, 1)).is_symmetric("q", "t")


def test_catalan_poly_lambda3_input_validation():
    with pytest.raises(ValueError):
        catalan_poly_lambda3((1, 2, 3))
    with pytest.raises(ValueError):
        catalan_poly_lambda3((2, 1))
    with pytest.raises(ValueError):
        catalan_poly_lambda3((2, 1, -1))


def test_catalan_poly_k4():
    assert catalan_poly_k4(0) == SparsePoly.one(QT)
    p = catalan_poly_k4(1)
    assert ones(p) == 14
    assert p.is_symmetric("q", "t")
    assert p.terms.get((6, 0)) == 1 and p.terms.get((0, 6)) == 1
    assert p.max_degree("q") == 6 and p.max_degree("t") == 6


def test_refined_poly3_collapses_to_plain():
    for k in [(0, 0, 0), (2, 1, 0), (1, 3, 2)]:
        k = KVec3(*k)
        assert refined_poly3(k).eval_ones(["y2", "y3"]) == catalan_poly3(k)
    assert refined_poly3(KVec3(0, 0, 0)) == SparsePoly.one(
        VarTable(("q", "t", "y2", "y3")))


def test_refined_poly3_region_filters_partition():
    for k1 in range(5):
        for k2 in range(5):
            k = KVec3(k1, k2, 1)
            total = SparsePoly.zero(VarTable(("q", "t", "y2", "y3")))
            for region in F_REGIONS:
                total = total + refined_poly3(k, region)
            assert total == refined_poly3(k)


def test_refined_poly4_collapses_and_partitions():
    for k in range(4):
        assert refined_poly4(k).eval_ones(["y2", "y3", "y4"]) == catalan_poly_k4(k)
        total = SparsePoly.zero(VarTable(("q", "t", "y2", "y3", "y4")))
        for region in H_REGIONS:
            total = total + refined_poly4(k, region)
        assert total == refined_poly4(k)


def test_unknown_region_rejected():
    with pytest.raises(ValueError, match="unknown region"):
        refined_poly3(KVec3(1, 1, 1), "P3C1")
    with pytest.raises(ValueError, match="unknown region"):
        refined_poly4(1, "P4C1")


def test_region_of_path3_matches_filters():
    k = KVec3(3, 2, 0)
    seen = {region: 0 for region in F_REGIONS}
    for p in enumerate_paths3(k):
        seen[region_of_path3(p)] += 1
    assert sum(seen.values()) == len(enumerate_paths3(k))


def test_gf_series3_structure():
    s = gf_series3(3)
    # vectors (0, 0, m) have a single path with both statistics zero
    for m in range(4):
        assert s.coeff({"q": 0, "t": 0, "x1": 0, "x2": 0, "x3": m}).constant_value() == 1
    c111 = s.coeff({"x1": 1, "x2": 1, "x3": 1})
    assert c111 == C111


def test_gf_series4_structure():
    s = gf_series4(2)
    assert s.coeff({"x": 0}).constant_value() == 1
    assert s.coeff({"x": 1}) == catalan_poly_k4(1)
    assert gf_series4(2, refined=True).eval_ones(["y2", "y3", "y4"]) == s
