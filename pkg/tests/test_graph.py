"""Graphs, continued fractions, exact linear algebra, Seifert round trips."""

import json
import random
from fractions import Fraction

import pytest

from brieskorn import (InputError, QCycle, ResolutionGraph, SeifertInvariant,
                       canonical_cycle, dual_cycle, hj_evaluate, hj_expand,
                       is_numerically_gorenstein, negative_definite,
                       seifert_of_graph, solve_exact, star_graph)
from brieskorn.bci import bci_data, bci_graph

from conftest import SEED, all_small_multisets

# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------


def _det_fraction(m):
    """Determinant by exact Gaussian elimination."""
    n = len(m)
    m = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for cc in range(c, n):
                m[r][cc] -= f * m[c][cc]
    return det


def negdef_oracle(matrix):
    """Negative definite iff the k-th leading principal minor has sign (-1)^k."""
    for k in range(1, len(matrix) + 1):
        det = _det_fraction([row[:k] for row in matrix[:k]])
        if det == 0 or (det > 0) != (k % 2 == 0):
            return False
    return True


def _random_tree_matrix(rng, n):
    """Symmetric tree matrix with random diagonal in [-4, 0]."""
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = rng.randint(-4, 0)
    for v in range(1, n):
        u = rng.randrange(v)
        m[u][v] = m[v][u] = 1
    return m


# ---------------------------------------------------------------------------
# Hirzebruch-Jung continued fractions
# ---------------------------------------------------------------------------


def test_hj_expand_goldens():
    assert hj_expand(2, 1) == [2]
    assert hj_expand(3, 1) == [3]
    assert hj_expand(3, 2) == [2, 2]
    assert hj_expand(5, 4) == [2, 2, 2, 2]
    assert hj_expand(7, 3) == [3, 2, 2]
    assert hj_expand(11, 7) == [2, 3, 2, 2]


def test_hj_evaluate_goldens():
    assert hj_evaluate([2]) == (2, 1)
    assert hj_evaluate([2, 2, 2]) == (4, 3)
    assert hj_evaluate([3, 2, 2]) == (7, 3)


def test_hj_round_trip_exhaustive():
    from math import gcd
    for alpha in range(2, 201):
        for beta in range(1, alpha):
            if gcd(alpha, beta) != 1:
                continue
            chain = hj_expand(alpha, beta)
            assert all(c >= 2 for c in chain)
            assert hj_evaluate(chain) == (alpha, beta)


def test_hj_rejects_bad_input():
    with pytest.raises(InputError):
        hj_expand(1, 1)
    with pytest.raises(InputError):
        hj_expand(4, 2)  # not coprime
    with pytest.raises(InputError):
        hj_expand(3, 3)
    with pytest.raises(InputError):
        hj_evaluate([])
    with pytest.raises(InputError):
        hj_evaluate([2, 1, 2])


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


def test_negative_definite_matches_minor_oracle():
    rng = random.Random(SEED)
    seen_true = seen_false = 0
    for _ in range(300):
        n = rng.randint(1, 8)
        m = _random_tree_matrix(rng, n)
        expected = negdef_oracle(m)
        assert negative_definite(m) == expected
        seen_true += expected
        seen_false += not expected
    assert seen_true > 20 and seen_false > 20  # both branches exercised


def test_negative_definite_on_bci_matrices():
    for exps in all_small_multisets():
        m = bci_graph(bci_data(exps)).intersection_matrix()
        assert negative_definite(m)
        assert negdef_oracle(m)


def test_negative_definite_simple_cases():
    assert negative_definite([[-1]])
    assert not negative_definite([[0]])
    assert not negative_definite([[1]])
    assert negative_definite([[-2, 1], [1, -2]])
    assert not negative_definite([[-2, 1], [1, 0]])
    assert not negative_definite([[-1, 1], [1, -1]])  # singular


def test_solve_exact_random_systems():
    rng = random.Random(SEED + 1)
    for _ in range(100):
        n = rng.randint(1, 6)
        m = _random_tree_matrix(rng, n)
        for i in range(n):
            m[i][i] = rng.randint(-5, -2)
        if not negative_definite(m):
            continue
        rhs = [rng.randint(-9, 9) for _ in range(n)]
        x = solve_exact(m, rhs)
        for i in range(n):
            assert sum(Fraction(m[i][j]) * x[j] for j in range(n)) == rhs[i]


# ---------------------------------------------------------------------------
# rational cycles
# ---------------------------------------------------------------------------


def test_qcycle_normalization_and_ops():
    c = QCycle([Fraction(4, 2), Fraction(1, 3), 0])
    assert c.coeffs == (2, Fraction(1, 3), 0)
    assert isinstance(c.coeffs[0], int)
    assert not c.is_integral
    assert c.is_effective
    assert c.support == (0, 1)
    d = 3 * c
    assert d.coeffs == (6, 1, 0)
    assert d.is_integral and d.as_integers() == (6, 1, 0)
    assert (d - d).is_zero
    assert QCycle([1, 1, 0]) <= d
    assert not (d <= QCycle([1, 1, 0]))
    assert (-c).coeffs == (-2, Fraction(-1, 3), 0)
    assert c.coeff_map() == {"0": 2, "1": "1/3", "2": 0}


def test_qcycle_is_immutable():
    c = QCycle([1])
    with pytest.raises(AttributeError):
        c.coeffs = (2,)


def test_qcycle_as_integers_rejects_fractions():
    with pytest.raises(InputError):
        QCycle([Fraction(1, 2)]).as_integers()


def test_qcycle_size_mismatch():
    with pytest.raises(InputError):
        QCycle([1, 2]) + QCycle([1])


# ---------------------------------------------------------------------------
# resolution graph validation
# ---------------------------------------------------------------------------


def test_graph_rejects_malformed_input():
    with pytest.raises(InputError):
        ResolutionGraph([], [])
    with pytest.raises(InputError):
        ResolutionGraph([(-2, -1)], [])  # negative genus
    with pytest.raises(InputError):
        ResolutionGraph([(-2, 0), (-2, 0)], [(0, 0)])  # loop
    with pytest.raises(InputError):
        ResolutionGraph([(-2, 0), (-2, 0)], [(0, 2)])  # out of range
    with pytest.raises(InputError):
        ResolutionGraph([(-2, 0), (-2, 0)], [])  # not a tree
    with pytest.raises(InputError):
        ResolutionGraph([(-2, 0), (-2, 0), (-2, 0)], [(0, 1), (0, 1)])  # dup edge
    with pytest.raises(InputError):
        ResolutionGraph([(0, 0)], [])  # not negative definite
    with pytest.raises(InputError):
        ResolutionGraph([(-2, 0), (-2, 0), (-2, 0)],
                        [(0, 1), (1, 2)], central=5)


def test_star_validation_rejects_minus_one_chains():
    # a (-1) on an arm must be rejected, not contracted
    with pytest.raises(InputError, match="rejected, not contracted"):
        ResolutionGraph([(-3, 0), (-1, 0)], [(0, 1)], central=0)
    # same chain without a central designation is a legal lattice
    g = ResolutionGraph([(-3, 0), (-1, 0)], [(0, 1)])
    assert g.central is None


def test_star_validation_rejects_positive_genus_arms():
    with pytest.raises(InputError, match="genus"):
        ResolutionGraph([(-2, 0), (-2, 1)], [(0, 1)], central=0)


def test_arms_require_star_shape():
    # vertex 1 branches away from the center: not star-shaped
    g = ResolutionGraph([(-3, 0), (-2, 0), (-3, 0), (-3, 0)],
                        [(0, 1), (1, 2), (1, 3)])
    assert negative_definite(g.intersection_matrix())
    with pytest.raises(InputError, match="star"):
        ResolutionGraph([(-3, 0), (-2, 0), (-3, 0), (-3, 0)],
                        [(0, 1), (1, 2), (1, 3)], central=0)


def test_arms_listed_center_outward():
    g = ResolutionGraph([(-2, 0), (-2, 0), (-2, 0), (-2, 0), (-2, 0)],
                        [(0, 1), (0, 2), (2, 3), (3, 4)], central=0)
    assert g.arms() == ((1,), (2, 3, 4))
    assert g.degree(0) == 2 and g.neighbors(2) == (0, 3)


def test_pairing_and_products():
    g = ResolutionGraph([(-2, 0), (-3, 0)], [(0, 1)])
    assert g.pairing([1, 0], [0, 1]) == 1
    assert g.pairing([1, 1], [1, 1]) == -2 - 3 + 2
    assert g.product_with_vertex([1, 1], 0) == -1
    assert g.canonical_degree(1) == 1
    assert g.canonical_product([1, 1]) == 0 + 1


# ---------------------------------------------------------------------------
# Seifert invariants
# ---------------------------------------------------------------------------


def test_seifert_validation():
    with pytest.raises(InputError):
        SeifertInvariant(g=-1, c0=2, arms=())
    with pytest.raises(InputError):
        SeifertInvariant(g=0, c0=2, arms=((1, 1),))
    with pytest.raises(InputError):
        SeifertInvariant(g=0, c0=2, arms=((4, 2),))  # not reduced
    with pytest.raises(InputError):
        SeifertInvariant(g=0, c0=1, arms=((2, 1), (2, 1)))  # degree 0
    s = SeifertInvariant(g=0, c0=2, arms=((2, 1), (1, 0)))
    assert s.deg_divisor() == Fraction(3, 2)
    assert s.nontrivial_arms() == ((2, 1),)


def test_e8_graph_from_seifert():
    s = SeifertInvariant(g=0, c0=2, arms=((2, 1), (3, 2), (5, 4)))
    g = star_graph(s)
    assert g.num_vertices == 8
    assert all(b == -2 for b in g.selfint)
    assert tuple(len(a) for a in g.arms()) == (1, 2, 4)
    # the (2,3,5) Brieskorn sphere resolves to the same graph
    assert bci_graph(bci_data((2, 3, 5))) == g


def test_alpha_one_arms_emit_no_vertices():
    s = SeifertInvariant(g=1, c0=1, arms=((1, 0), (1, 0)))
    g = star_graph(s)
    assert g.num_vertices == 1
    assert seifert_of_graph(g).arms == ()


def test_seifert_round_trip_random():
    rng = random.Random(SEED + 2)
    from math import gcd
    built = 0
    while built < 120:
        arms = []
        for _ in range(rng.randint(0, 6)):
            a = rng.randint(1, 50)
            if a == 1:
                arms.append((1, 0))
            else:
                b = rng.choice([x for x in range(1, a) if gcd(a, x) == 1])
                arms.append((a, b))
        slack = rng.randint(1, 3)
        c0 = slack + int(sum(Fraction(b, a) for a, b in arms))
        s = SeifertInvariant(g=rng.randint(0, 3), c0=c0, arms=tuple(arms))
        g = star_graph(s)
        r = seifert_of_graph(g)
        assert r.g == s.g and r.c0 == s.c0
        assert sorted(r.arms) == sorted(s.nontrivial_arms())
        built += 1


# ---------------------------------------------------------------------------
# distinguished rational cycles
# ---------------------------------------------------------------------------


def test_dual_cycle_identity_small_graphs():
    for exps in ((2, 3, 5), (2, 3, 3, 4), (2, 2, 2), (3, 4, 5)):
        g = bci_graph(bci_data(exps))
        for j in range(g.num_vertices):
            w = dual_cycle(g, j)
            for i in range(g.num_vertices):
                assert g.product_with_vertex(w, i) == (-1 if i == j else 0)


def test_canonical_cycle_goldens():
    g = bci_graph(bci_data((2, 3, 3, 4)))
    zk = canonical_cycle(g)
    assert zk == QCycle([8, 4, 4, 4])
    assert is_numerically_gorenstein(g)
    # adjunction at every vertex: (K + Z_K) . E_i = 0
    for i in range(g.num_vertices):
        assert g.canonical_degree(i) == -g.product_with_vertex(zk, i)


def test_cyclic_quotient_not_numerically_gorenstein():
    g = ResolutionGraph([(-3, 0)], [])
    # Z_K . E = -K . E = E^2 + 2 = -1, so Z_K = (1/3) E: not integral
    zk = canonical_cycle(g)
    assert zk.coeffs == (Fraction(1, 3),)
    assert not is_numerically_gorenstein(g)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def test_json_round_trip():
    g = bci_graph(bci_data((2, 3, 3, 4)))
    assert ResolutionGraph.from_json(g.to_json()) == g
    blob = json.loads(g.to_json())
    assert blob["central"] == 0
    assert len(blob["vertices"]) == 4
    g2 = ResolutionGraph.from_json_dict(blob)
    assert g2 == g and hash(g2) == hash(g)


def test_json_rejects_malformed():
    with pytest.raises(InputError):
        ResolutionGraph.from_json("{not json")
    with pytest.raises(InputError):
        ResolutionGraph.from_json_dict({"vertices": [{"selfint": -2}]})


def test_dot_output():
    g = bci_graph(bci_data((2, 3, 3, 4)))
    dot = g.to_dot()
    assert dot.startswith("graph resolution {") and dot.endswith("}")
    assert dot.count("doublecircle") == 1
    assert "v0 -- v1;" in dot
    assert "g=2" in dot  # central genus label
