import cmath
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import sl2_fusion

from permgauge import Diag, Hat, LieSpec, Pair, fp_dims, fusion_graph, gauged_labels, kac_peterson, sqrt_twists
from permgauge.gauge import (
    Boxed,
    PermutationGauging,
    Twisted,
    extension_dims,
    gauged_dim,
    mult_case1,
    mult_case2,
    mult_case3,
    mult_case3_p,
    p_matrix,
    render,
)
from permgauge.modular import ModularData, dims, trivial
from permgauge.ringtools import relabel

SIGNS = (1, -1)
# Fibonacci ring from the truncated Clebsch-Gordan rule on even spins of level 3
FIB_N = sl2_fusion(3)[np.ix_([0, 2], [0, 2], [0, 2])]


@pytest.mark.parametrize("md,count", [(trivial(), 4), ("fib", 9), ("ising", 15), ("g2", 39)])
def test_label_counts(md, count, request):
    md = request.getfixturevalue(md) if isinstance(md, str) else md
    labels = gauged_labels(md)
    assert len(labels) == count == md.rank * (md.rank - 1) // 2 + 4 * md.rank
    assert len(set(labels)) == count


def test_label_order_and_names(fib):
    g = PermutationGauging(fib)
    assert g.labels == [Pair(0, 1), Diag(0, 1), Diag(0, -1), Diag(1, 1), Diag(1, -1), Hat(0, 1), Hat(0, -1), Hat(1, 1), Hat(1, -1)]
    assert g.names == ("[0;2L1]", "[0;0]+", "[0;0]-", "[2L1;2L1]+", "[2L1;2L1]-", "0^+", "0^-", "2L1^+", "2L1^-")
    assert render(Pair(0, 1), ("1", "t")) == "[1;t]"
    with pytest.raises(ValueError):
        Pair(1, 0)


def test_sqrt_twists():
    theta = np.exp(1j * np.array([0, np.pi, 4 * np.pi / 5, 2 * np.pi - 1e-12]))
    md = ModularData(("a", "b", "c", "d"), 0, np.eye(4), theta, (0, 1, 2, 3))
    root = sqrt_twists(md)
    np.testing.assert_allclose(root[:3], [1, 1j, cmath.exp(2j * cmath.pi / 5)], atol=1e-12)
    assert abs(root[3] - 1) < 1e-9


@pytest.mark.parametrize("name", ["fib", "ising", "adj5", "g2"])
def test_sqrt_twists_square_to_twists(name, request):
    md = request.getfixturevalue(name)
    root = sqrt_twists(md)
    np.testing.assert_allclose(root**2, md.theta, atol=1e-10)
    np.testing.assert_allclose(np.abs(root), 1, atol=1e-12)
    assert root[md.unit] == 1


def test_bad_sqrt_choice_is_rejected(fib):
    with pytest.raises(ValueError):
        PermutationGauging(fib, sqrt=[1, 1])
    with pytest.raises(ValueError):
        PermutationGauging(fib, sqrt=sqrt_twists(fib) * np.array([-1, 1]))


# -- extension D -------------------------------------------------------------


def test_extension_dims_examples(fib):
    one, tau = 0, 1
    for m in (one, tau):
        for k in (one, tau):
            assert extension_dims(fib, Boxed(one, one), Twisted(m), Twisted(k)) == int(m == k)
    # 1^ (x) 1^ = 1(x)1 + t(x)t
    assert {(z, w): extension_dims(fib, Twisted(one), Twisted(one), Boxed(z, w)) for z in (0, 1) for w in (0, 1)} == {
        (0, 0): 1, (0, 1): 0, (1, 0): 0, (1, 1): 1
    }
    assert extension_dims(fib, Twisted(tau), Twisted(tau), Boxed(tau, tau)) == 2
    # grading violations
    assert extension_dims(fib, Twisted(tau), Twisted(tau), Twisted(tau)) == 0
    assert extension_dims(fib, Boxed(tau, tau), Boxed(tau, one), Twisted(tau)) == 0


def test_extension_dims_against_brute_force(fib):
    r = range(2)
    for a, b, z, w in product(r, repeat=4):
        expected = sum(FIB_N[a, b, v] * FIB_N[z, w, v] for v in r)
        assert extension_dims(fib, Twisted(a), Twisted(b), Boxed(z, w)) == expected
    for x, y, m, k in product(r, repeat=4):
        expected = sum(FIB_N[x, m, v] * FIB_N[v, y, k] for v in r)
        assert extension_dims(fib, Boxed(x, y), Twisted(m), Twisted(k)) == expected
        assert extension_dims(fib, Twisted(m), Boxed(x, y), Twisted(k)) == expected


# -- the three formulas -----------------------------------------------------


def test_case1_examples(fib):
    unit = Diag(0, 1)
    assert mult_case1(fib, "0", "2L1", unit, Pair(0, 1)) == 1
    ising = kac_peterson(LieSpec("A", 1, 2))
    assert mult_case1(ising, "0", "L1", Diag(0, 1), Pair(0, 2)) == 0
    assert mult_case1(ising, "0", "L1", Diag(0, 1), Pair(0, 1)) == 1
    # Hom([1,t], 1^+ (x) t^+): the swap exchanges the two summands of [1,t],
    # so only one copy of Hom_D(1(x)t, 1^ (x) t^) = C(t, t) survives
    assert mult_case1(fib, "0", "2L1", Hat(0, 1), Hat(1, 1)) == 1
    with pytest.raises(ValueError):
        mult_case1(fib, "0", "0", unit, unit)


def test_case1_counted_by_dimension(fib):
    g = PermutationGauging(fib)
    ring = g.fusion()
    a, b = g.index(Hat(0, 1)), g.index(Hat(1, 1))
    d = np.array([gauged_dim(fib, lab) for lab in g.labels])
    assert ring.n[a, b, g.index(Pair(0, 1))] == 1
    assert np.isclose(ring.n[a, b] @ d, d[a] * d[b])


def test_case2_examples(adj5):
    assert mult_case2(adj5, "2L1", 1, "2L1", 1, "2L1", 1) == 1
    assert mult_case2(adj5, "2L1", 1, "2L1", -1, "2L1", 1) == 0
    # so5 at level 4 has a multiplicity-2 coefficient
    b2 = kac_peterson(LieSpec("B", 2, 4))
    g = PermutationGauging(b2)
    n = g.ring.n
    y, z, x = map(int, np.argwhere(n == 2)[0])
    assert g.case2(x, 1, y, 1, z, -1) == 1
    assert g.case2(x, 1, y, 1, z, 1) == 3


@given(st.data())
def test_case2_symmetry(data):
    md = kac_peterson(LieSpec("B", 2, 2))
    g = PermutationGauging(md)
    x, y, z = (data.draw(st.integers(0, md.rank - 1)) for _ in range(3))
    ex, ey, ez = (data.draw(st.sampled_from(SIGNS)) for _ in range(3))
    value = g.case2(x, ex, y, ey, z, ez)
    assert value >= 0
    assert value == g.case2(x, ex, z, ez, y, ey)
    d = md.dual
    assert value == g.case2(d[x], ex, d[y], ey, d[z], ez)


@pytest.mark.parametrize("name", ["fib", "ising", "adj5"])
def test_case3_with_unit(name, request):
    md = request.getfixturevalue(name)
    root = sqrt_twists(md)
    u = md.unit
    for x, z in product(range(md.rank), repeat=2):
        for ex, ez in product(SIGNS, repeat=2):
            assert mult_case3(md, root, x, ex, u, 1, z, ez) == int(x == z) * (ex * ez + 1) // 2
            assert mult_case3(md, root, x, ex, u, -1, z, ez) == int(x == z) * (1 - ex * ez) // 2


def test_case3_fibonacci_agrees_with_p_matrix(fib):
    root = sqrt_twists(fib)
    for x, y, z in product(range(2), repeat=3):
        for ex, ey, ez in product(SIGNS, repeat=3):
            a = mult_case3(fib, root, x, ex, y, ey, z, ez)
            assert a in (0, 1, 2)
            assert a == mult_case3_p(fib, x, ex, y, ey, z, ez)


@pytest.mark.parametrize("name", ["fib", "adj5", "g2"])
def test_p_matrix_first_summand(name, request):
    md = request.getfixturevalue(name)
    g = PermutationGauging(md)
    s, u = md.s, md.unit
    for x, y, z in product(range(md.rank), repeat=3):
        first = np.sum(s[y] ** 2 * s[z] * s[md.dual[x]] / s[u] ** 2)
        assert abs(first - g.triple[y, y, z, x]) < 1e-8


@pytest.mark.parametrize("name", ["fib", "ising", "adj5", "g2"])
def test_p_matrix_identity(name, request):
    md = request.getfixturevalue(name)
    g = PermutationGauging(md)
    half = g.t_hat_sqrt()
    t_hat = md.theta / g.zeta
    s = md.s
    lhs = p_matrix(md) @ np.diag(half)
    rhs = np.diag(1 / half) @ np.linalg.inv(s) @ np.diag(t_hat**-2) @ s
    assert np.max(np.abs(lhs - rhs)) < 1e-8
    np.testing.assert_allclose(half**2, t_hat, atol=1e-12)


@pytest.mark.parametrize("name", ["adj5", "g2"])
def test_principal_t_hat_root_needs_matching_theta_root(name, request):
    """Taking the principal root of each T^ entry silently changes the
    theta^(1/2) convention; the P-matrix ring then matches case 3 only for the
    corresponding theta^(1/2)."""
    md = request.getfixturevalue(name)
    g = PermutationGauging(md)
    principal = np.sqrt(md.theta / g.zeta)
    assert not np.allclose(principal, g.t_hat_sqrt())
    implied = principal * cmath.sqrt(g.zeta)
    implied = implied / implied[md.unit]
    assert PermutationGauging(md, sqrt=implied).fusion(validate=False) == PermutationGauging(
        md, sqrt=implied
    ).fusion(validate=False, p_matrix=True)


# -- the assembled ring -----------------------------------------------------


def test_unit_and_sign_objects(fib):
    g = PermutationGauging(fib)
    ring = g.fusion()
    m = ring.rank
    assert ring.labels[ring.unit] == "[0;0]+"
    assert np.array_equal(ring.n[ring.unit], np.eye(m, dtype=int))
    assert np.array_equal(ring.n[:, ring.unit], np.eye(m, dtype=int))
    minus = g.index(Diag(0, -1))
    assert ring.product(minus, minus) == {"[0;0]+": 1}
    for x, e in product(range(2), SIGNS):
        assert ring.product(minus, g.index(Hat(x, e))) == {g.names[g.index(Hat(x, -e))]: 1}


def test_fibonacci_gauging_dimensions(fib, gauged):
    g, ring = gauged["fib"]
    fp = fp_dims(ring)
    d = dims(fib)
    big_d = np.sum(d**2)
    assert np.isclose(np.sum(fp**2), 4 * big_d**2, rtol=1e-10)
    np.testing.assert_allclose(fp, [gauged_dim(fib, lab) for lab in g.labels], rtol=1e-10)


def test_gauged_duality(gauged):
    g, ring = gauged["g2"]
    for lab in g.labels:
        assert g.dual(g.dual(lab)) == lab
    sl3 = kac_peterson(LieSpec("A", 2, 1))
    h = PermutationGauging(sl3)
    assert h.dual(Pair(0, 1)) == Pair(0, 2)
    assert h.dual(Hat(1, -1)) == Hat(2, -1)
    assert h.fusion().rank == 15


def _hat_flip(g, x):
    perm = list(range(len(g.labels)))
    i, j = g.index(Hat(x, 1)), g.index(Hat(x, -1))
    perm[i], perm[j] = j, i
    return perm


@pytest.mark.parametrize("name", ["fib", "ising"])
def test_sqrt_choice_independence(name, request, gauged):
    md = request.getfixturevalue(name)
    g, ring = gauged[name]
    for x in range(md.rank):
        if x == md.unit:
            continue
        flipped = sqrt_twists(md).copy()
        flipped[x] *= -1
        other = PermutationGauging(md, sqrt=flipped).fusion()
        moved = relabel(ring, _hat_flip(g, x))
        assert np.array_equal(other.n, moved.n)
        assert other.unit == moved.unit and other.dual == moved.dual


def test_fusion_graphs(gauged):
    g, ring = gauged["fib"]
    unit_graph = fusion_graph(ring, ring.labels[ring.unit])
    assert all(src == dst and m == 1 for src, dst, m in unit_graph.edges)
    assert len(unit_graph.edges) == ring.rank
    hat = fusion_graph(ring, "0^+")
    assert len(hat.vertices) == 9
    assert hat.incident() == set(range(9))
    g2, ring2 = gauged["g2"]
    graph = fusion_graph(ring2, g2.names[g2.index(Hat(0, 1))])
    assert len(graph.vertices) == 39 and graph.is_connected()


def test_ising_hat_graph_splits_by_sigma_parity(gauged):
    """Ising has an invertible object, so the gauged ring is graded more finely
    than by the twisted sector and 1^+ does not connect everything."""
    g, ring = gauged["ising"]
    graph = fusion_graph(ring, "0^+")
    assert not graph.is_connected()
    def sigmas(lab):
        if isinstance(lab, Pair):
            return (lab.x == 1) + (lab.y == 1)
        return (2 if isinstance(lab, Diag) else 1) * (lab.x == 1)

    odd = {i for i, lab in enumerate(g.labels) if sigmas(lab) % 2}
    assert {g.names[i] for i in odd} == {"[0;L1]", "[L1;2L1]", "L1^+", "L1^-"}
    assert all((src in odd) == (dst in odd) for src, dst, _ in graph.edges)
