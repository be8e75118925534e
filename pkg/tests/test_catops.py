import cmath
from collections import Counter

import numpy as np
import pytest
from oracles import PHI, core_twists_from_sl2_8, sl2_core_dims

from permgauge import LieSpec, deligne_product, kac_peterson, reverse, tensor_subcategory, validate_modular, verlinde
from permgauge.catops import adjoint_subcategory, fusion_closure
from permgauge.errors import NotModular
from permgauge.modular import derived_scalars, dims, trivial


def _twist_key(values):
    return Counter(complex(round(v.real, 9) + 0.0, round(v.imag, 9) + 0.0) for v in values)


def test_trivial_is_a_unit_for_the_product(fib):
    prod = deligne_product(trivial(), fib)
    np.testing.assert_allclose(prod.s, fib.s)
    np.testing.assert_allclose(prod.theta, fib.theta)
    assert prod.labels == ("1,0", "1,2L1")


def test_product_of_fibonacci(fib):
    ff = deligne_product(fib, fib)
    assert validate_modular(ff).ok
    np.testing.assert_allclose(sorted(dims(ff)), [1, PHI, PHI, PHI**2])
    assert np.isclose(derived_scalars(ff).global_dim, derived_scalars(fib).global_dim ** 2)


def test_product_is_associative(fib, ising):
    semion = kac_peterson(LieSpec("A", 1, 1))
    left = deligne_product(deligne_product(fib, ising), semion)
    right = deligne_product(fib, deligne_product(ising, semion))
    assert left.labels == right.labels and left.dual == right.dual
    np.testing.assert_allclose(left.s, right.s, atol=1e-14)
    np.testing.assert_allclose(left.theta, right.theta, atol=1e-14)


def test_product_fusion_is_tensor_product(fib, ising):
    n = verlinde(deligne_product(fib, ising)).n
    expected = np.einsum("acx,bdy->abcdxy", verlinde(fib).n, verlinde(ising).n).reshape(6, 6, 6)
    assert np.array_equal(n, expected)


def test_reverse(fib):
    rev = reverse(fib)
    assert cmath.isclose(rev.theta[1], cmath.exp(6j * cmath.pi / 5))
    assert validate_modular(rev).ok
    assert verlinde(rev) == verlinde(fib)
    twice = reverse(rev)
    np.testing.assert_array_equal(twice.s, fib.s)
    np.testing.assert_array_equal(twice.theta, fib.theta)


def test_subcategory_ranks(fib, adj5):
    assert fib.labels == ("0", "2L1")
    assert adj5.labels == ("0", "2L1", "4L1")
    assert validate_modular(adj5).ok
    md = kac_peterson(LieSpec("A", 1, 3))
    assert tensor_subcategory(md, ["0"]).rank == 1


def test_subcategory_is_idempotent(fib):
    again = adjoint_subcategory(fib)
    assert again.labels == fib.labels
    np.testing.assert_allclose(again.s, fib.s)


def test_closure_is_closed():
    md = kac_peterson(LieSpec("A", 1, 6))
    assert fusion_closure(md, ["2L1"]) == [0, 2, 4, 6]
    assert fusion_closure(md, ["L1"]) == list(range(7))


def test_degenerate_subcategory_is_rejected(ising):
    # {1, psi} in Ising is braided but not modular
    with pytest.raises(NotModular):
        tensor_subcategory(ising, ["2L1"])


def test_adjoint_requires_a_generator():
    with pytest.raises(ValueError):
        adjoint_subcategory(trivial())
    with pytest.raises(ValueError):
        tensor_subcategory(trivial(), [])


def test_core_matches_local_modules_of_sl2_level_8(core):
    assert _twist_key(core.theta) == _twist_key(core_twists_from_sl2_8())
    np.testing.assert_allclose(sorted(dims(core)), sorted(sl2_core_dims()), atol=1e-12)
    assert validate_modular(core).ok
