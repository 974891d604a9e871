import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from modorder.algebra import ScalarRing, regular_representation, ring_zn, validate_module, zmodule
from modorder.catalog import builtin, catalog_names
from modorder.homs import (
    annihilators,
    dual_module,
    end_ring,
    enumerate_hom,
    generating_sequence,
    hom_oracle_bruteforce,
    invertibility,
    invertibility_masks,
    is_regular_element,
    is_regular_module,
    left_regular_isomorphism,
    morita_products,
    regular_witnesses,
)


def _sorted_maps(T):
    return sorted(map(tuple, np.asarray(T.maps).tolist()))


def test_end_of_z12_is_multiplication_by_k():
    S = end_ring(zmodule([12]))
    assert S.size == 12
    assert list(S.ring.elements) == [f"*{k}" for k in range(12)]
    for k in range(12):
        assert list(S.maps[k]) == [(k * x) % 12 for x in range(12)]


def test_end_of_z12_is_isomorphic_to_z12():
    S = end_ring(zmodule([12]))
    Z = ring_zn(12)
    assert np.array_equal(S.ring.add, Z.add)
    assert np.array_equal(S.ring.mul, Z.mul)


def test_end_of_m2z2_is_left_multiplication():
    R = builtin("m2z2").regular_ring
    S = end_ring(builtin("m2z2"))
    assert S.size == 16
    iso = left_regular_isomorphism(R, S)
    assert sorted(iso.tolist()) == list(range(16))


def test_end_of_zero_module_is_zero_ring():
    S = end_ring(zmodule([1]))
    assert S.size == 1 and S.ring.zero == S.ring.one


def _cyclic_over(a, N):
    """Z_a as a module over the integers mod N (a divides N)."""
    ar = np.arange(a)
    return validate_module(
        ScalarRing.integers(N),
        [str(i) for i in ar],
        (ar[:, None] + ar[None, :]) % a,
        (ar[:, None] * np.arange(N)[None, :]) % a,
    )


def test_hom_between_coprime_cyclics_is_zero():
    T = enumerate_hom(_cyclic_over(2, 6), _cyclic_over(3, 6))
    assert len(T) == 1 and not T.maps.any()


@pytest.mark.parametrize("orders,count", [([4], 4), ([2, 2], 16), ([1], 1)])
def test_oracle_counts(orders, count):
    M = zmodule(orders)
    assert len(hom_oracle_bruteforce(M, M)) == count
    assert _sorted_maps(enumerate_hom(M, M)) == _sorted_maps(hom_oracle_bruteforce(M, M))


def test_oracle_matches_enumeration_on_small_catalog():
    for name in catalog_names():
        M = builtin(name)
        if M.size <= 8:
            assert _sorted_maps(enumerate_hom(M, M)) == _sorted_maps(hom_oracle_bruteforce(M, M)), name


def test_generating_sequence_generates():
    M = zmodule([2, 4])
    gens = generating_sequence(M)
    from modorder.algebra import submodule_generated

    assert submodule_generated(M, gens).size == M.size


def test_dual_of_integer_module_is_zero():
    D = dual_module(zmodule([12]))
    assert len(D) == 1 and not D.maps.any()
    assert D.target is None


def test_dual_of_zero_module_is_zero():
    assert len(dual_module(zmodule([1]))) == 1


@pytest.mark.parametrize("name", ["z6", "m2z2", "ex3.7-z2"])
def test_dual_of_regular_representation_is_left_multiplication(name):
    M = builtin(name)
    R = M.regular_ring
    D = dual_module(M)
    assert len(D) == R.size
    assert _sorted_maps(D) == sorted(map(tuple, R.mul.tolist()))


def test_morita_products_on_z6():
    M = regular_representation(ring_zn(6))
    S, D = end_ring(M), dual_module(M)
    phi = D.index_of(ring_zn(6).mul[1])
    scalar, f = morita_products(M, S, D, 3, phi)
    assert scalar == 3
    assert list(S.maps[f]) == [(3 * x) % 6 for x in range(6)]


def test_morita_products_of_zero_map():
    M = builtin("m2z2")
    S, D = end_ring(M), dual_module(M)
    scalar, f = morita_products(M, S, D, 5, D.zero_index)
    assert scalar == M.scalars.ring.zero
    assert not S.maps[f].any() or (S.maps[f] == M.zero).all()


def test_zero_is_regular():
    M = builtin("zmod12")
    assert is_regular_element(M, dual_module(M), M.zero) == 0


def test_six_in_z12_is_not_regular():
    M = builtin("zmod12")
    assert is_regular_element(M, dual_module(M), M.index("6")) is None
    assert not is_regular_module(M, dual_module(M))


@pytest.mark.parametrize("name", ["m2z2", "z6"])
def test_regular_instances(name):
    M = builtin(name)
    assert is_regular_module(M, dual_module(M))


def test_regular_witnesses_satisfy_the_identity():
    M = builtin("ex3.7-z2")
    D = dual_module(M)
    w = regular_witnesses(M, D)
    for m in range(M.size):
        if w[m] >= 0:
            assert M.action[m, D.maps[w[m], m]] == m
        else:
            assert is_regular_element(M, D, m) is None


def test_invertibility_of_identity():
    M = builtin("m2z2")
    inv = invertibility(M, dual_module(M), M.scalars.ring.one)
    assert inv.left_invertible and inv.right_invertible


def test_invertibility_in_z12_is_always_false():
    M = builtin("zmod12")
    left, right = invertibility_masks(M, dual_module(M))
    assert not left.any() and not right[1:].any()


def test_two_in_z6_is_not_invertible():
    M = builtin("z6")
    inv = invertibility(M, dual_module(M), 2)
    assert not inv.left_invertible and not inv.right_invertible


def test_invertibility_masks_agree_with_pointwise():
    for name in ("z6", "m2z2", "ex3.7-z2", "zmod6"):
        M = builtin(name)
        D = dual_module(M)
        left, right = invertibility_masks(M, D)
        for m in range(M.size):
            inv = invertibility(M, D, m)
            assert (inv.left_invertible, inv.right_invertible) == (bool(left[m]), bool(right[m]))


def test_annihilators_of_six_in_z12():
    M = builtin("zmod12")
    S = end_ring(M)
    left, right = annihilators(M, S, M.index("6"))
    assert right == (0, 2, 4, 6, 8, 10)
    assert [S.ring.elements[i] for i in left] == [f"*{k}" for k in (0, 2, 4, 6, 8, 10)]


def test_annihilators_of_zero_and_one():
    M = builtin("m2z2")
    S = end_ring(M)
    left, right = annihilators(M, S, M.zero)
    assert len(left) == S.size and len(right) == M.scalars.size
    left, right = annihilators(M, S, M.scalars.ring.one)
    assert len(left) == 1 and len(right) == 1


@pytest.mark.parametrize("name", [n for n in catalog_names() if n not in ("zmod12", "zmod4", "zmod6", "zmod2x4", "zero")])
def test_end_ring_of_every_catalog_ring_is_the_ring(name):
    M = builtin(name)
    R = M.regular_ring
    left_regular_isomorphism(R, end_ring(M))


@given(st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=3).filter(lambda o: int(np.prod(o)) <= 8))
def test_enumeration_agrees_with_oracle(orders):
    M = zmodule(orders)
    assert _sorted_maps(enumerate_hom(M, M)) == _sorted_maps(hom_oracle_bruteforce(M, M))


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=12))
def test_hom_between_cyclic_groups_has_gcd_size(a, b):
    N = math.lcm(a, b)
    T = enumerate_hom(_cyclic_over(a, N), _cyclic_over(b, N))
    assert len(T) == math.gcd(a, b)
