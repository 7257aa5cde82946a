import pytest

from hilbcells.orders import OrderResult
from hilbcells.staircases import StandardSet
from hilbcells.triples import (
    Triple,
    UniversalCmp,
    basis,
    betti,
    enumerate_triples,
    triple_compare,
    triple_leq_universal,
)

from conftest import GENERIC_LAMBDAS, LAMBDA_SAMPLE_20, triple_count

L = OrderResult.LESS
G = OrderResult.GREATER
E = OrderResult.EQUAL
T = OrderResult.TIED
I = OrderResult.INCOMPARABLE


def tr(text):
    return Triple.parse(text)


def test_enumerate_counts():
    assert len(enumerate_triples(1)) == 3
    assert len(enumerate_triples(2)) == 9
    # oracle: sum of p(a) p(b) p(c) over compositions; 51 for n = 4
    assert triple_count(4) == 51
    assert len(enumerate_triples(4)) == 51
    assert len(enumerate_triples(5)) == triple_count(5) == 108
    for n in range(9):
        assert len(enumerate_triples(n)) == triple_count(n)


def test_enumerate_no_duplicates():
    for n in range(7):
        items = enumerate_triples(n)
        assert len({t.encode() for t in items}) == len(items)
        assert all(t.total == n for t in items)


def test_enumerate_bound():
    with pytest.raises(ValueError, match="bound"):
        enumerate_triples(13)


def test_iota_examples():
    assert tr("-|-|1").iota() == tr("1|-|-")
    assert tr("2|1|1").iota() == tr("1|1|1,1")


def test_iota_involution():
    for n in range(7):
        for t in enumerate_triples(n):
            assert t.iota().iota() == t


def test_iota_degree_flip():
    for n in range(9):
        for t in enumerate_triples(n):
            assert t.iota().degree == 2 * n - t.degree


def test_degree_examples():
    assert tr("3|-|1").degree == 4
    assert tr("-|1,1,1,1|-").degree == 4
    assert tr("-|-|1").degree == 0
    assert tr("-|1|-").degree == 1
    assert tr("1|-|-").degree == 2


def test_degree_range():
    for n in range(7):
        for t in enumerate_triples(n):
            assert 0 <= t.degree <= 2 * n


def test_basis_examples():
    assert len(basis(4, 4)) == 13
    assert [t.encode() for t in basis(1, 0)] == ["-|-|1"]
    assert len(basis(2, 0)) == 1
    with pytest.raises(ValueError, match="out of range"):
        basis(2, 5)
    with pytest.raises(ValueError, match="out of range"):
        basis(2, -1)


def test_basis_figure_contents():
    got = {t.encode() for t in basis(4, 4)}
    assert got == {
        "3|-|1", "2|1|1", "2|-|1,1", "1|1,1|1", "1|2|1", "1,1|-|2",
        "1|1|1,1", "1|-|1,1,1", "-|1,1,1,1|-", "-|2,1,1|-", "-|2,2|-",
        "-|3,1|-", "-|4|-",
    }


def test_betti_examples():
    assert betti(1) == (1, 1, 1)
    assert betti(2) == (1, 2, 3, 2, 1)
    assert betti(4)[4] == 13


def test_betti_palindromic_and_sums():
    for n in range(9):
        b = betti(n)
        assert b == tuple(reversed(b))
        assert sum(b) == triple_count(n)


def test_triple_encoding_roundtrip():
    for t in enumerate_triples(3):
        assert Triple.parse(t.encode()) == t
    assert tr("2,1|1|-").to_json() == '{"d2": [2, 1], "d1": [1], "d0": []}'
    with pytest.raises(ValueError, match="bad triple"):
        Triple.parse("2|1")


# --- the weight order on triples ---------------------------------------


def test_compare_size_bullet():
    lam = (-1, 2)
    assert triple_compare(lam, tr("3|-|1"), tr("2|1|1")) is L
    assert triple_compare(lam, tr("2|1|1"), tr("3|-|1")) is G
    # point class vs plane class in degree 0/2: sizes decide
    assert triple_compare(lam, tr("1|-|-"), tr("-|-|1")) is L


def test_compare_weight_bullet():
    for lam in GENERIC_LAMBDAS:
        assert triple_compare(lam, tr("-|1,1,1,1|-"), tr("-|2,1,1|-")) is L


def test_compare_equal_and_errors():
    t = tr("2|1|1")
    assert triple_compare((-1, 2), t, t) is E
    with pytest.raises(ValueError, match="total mismatch"):
        triple_compare((-1, 2), tr("1|-|-"), tr("1|1|-"))
    with pytest.raises(ValueError, match="l1 < 0 < l2"):
        triple_compare((1, 2), t, t)


def test_compare_tied_pair():
    # equal-moment staircases in the middle slot tie for every lambda
    a = Triple(StandardSet([]), StandardSet([4, 1, 1]), StandardSet([]))
    b = Triple(StandardSet([]), StandardSet([3, 3]), StandardSet([]))
    for lam in GENERIC_LAMBDAS:
        assert triple_compare(lam, a, b) is T
        assert triple_compare(lam, b, a) is T


def test_size_and_weight_bullets_are_exclusive():
    lam = GENERIC_LAMBDAS[0]
    for t in enumerate_triples(4):
        for u in enumerate_triples(4):
            same_sizes = t.sizes() == u.sizes()
            result = triple_compare(lam, t, u)
            if not same_sizes and result in (L, G):
                # the deciding data must be the outer sizes alone
                key_t = (t.d2.size, t.d0.size)
                key_u = (u.d2.size, u.d0.size)
                if result is L:
                    assert key_t[0] >= key_u[0] and key_t[1] <= key_u[1]
                else:
                    assert key_t[0] <= key_u[0] and key_t[1] >= key_u[1]


def test_compare_transitive_antisymmetric_n5():
    for lam in GENERIC_LAMBDAS:
        for n in (2, 3, 4, 5):
            items = enumerate_triples(n)
            rel = {}
            for t in items:
                for u in items:
                    rel[(t.encode(), u.encode())] = triple_compare(lam, t, u)
            for t in items:
                for u in items:
                    r = rel[(t.encode(), u.encode())]
                    assert rel[(u.encode(), t.encode())] is r.flip()
                    if r is L:
                        for v in items:
                            if rel[(u.encode(), v.encode())] is L:
                                assert rel[(t.encode(), v.encode())] is L


# --- universal quantification over lambda ------------------------------


def test_universal_equal_and_sizes():
    t = tr("-|1|-")
    assert triple_leq_universal(t, t) is UniversalCmp.EQUAL
    assert (
        triple_leq_universal(tr("-|-|1"), tr("1|-|-"))
        is UniversalCmp.NOT_LEQ_FOR_SOME_LAMBDA
    )
    with pytest.raises(ValueError, match="total mismatch"):
        triple_leq_universal(tr("1|-|-"), tr("1|1|-"))


def test_universal_matches_sampled_lambdas():
    for n in range(1, 6):
        items = enumerate_triples(n)
        for t in items:
            for u in items:
                if t == u:
                    continue
                sampled_less = all(
                    triple_compare(lam, t, u) is L for lam in LAMBDA_SAMPLE_20
                )
                closed_form = triple_leq_universal(t, u) is UniversalCmp.LESS
                assert closed_form == sampled_less, (t.encode(), u.encode())
