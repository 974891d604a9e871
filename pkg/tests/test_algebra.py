import numpy as np
import pytest
from hypothesis import given, strategies as st

from modorder.algebra import (
    FiniteModule,
    MAX_ORDER,
    ScalarRing,
    complement_of,
    cyclic_submodule,
    direct_sum,
    is_fully_invariant,
    make_submodule,
    matrix_entries,
    pattern_matrix_ring,
    quotient_module,
    regular_representation,
    ring_subsets,
    ring_zn,
    submodule_generated,
    sum_of_submodules,
    validate_module,
    validate_ring,
    zmodule,
)
from modorder.catalog import builtin, catalog_names
from modorder.errors import (
    AxiomViolation,
    CapacityExceeded,
    IdentityNotInPattern,
    NotASubmodule,
    PatternNotClosed,
    ShapeError,
)


def _zn_subgroup(n, d):
    return sorted({(d * k) % n for k in range(n)})


# --- rings -----------------------------------------------------------------


def test_zero_ring_has_zero_equal_to_one():
    R = ring_zn(1)
    assert R.size == 1 and R.zero == R.one


def test_z6_arithmetic():
    R = ring_zn(6)
    assert R.mul[2, 3] == 0
    assert R.mul[3, 3] == 3
    assert list(R.elements) == [str(i) for i in range(6)]


def test_ring_zn_rejects_zero():
    with pytest.raises(ValueError):
        ring_zn(0)


def test_z12_idempotents_and_units():
    s = ring_subsets(ring_zn(12))
    assert s.idempotents == (0, 1, 4, 9)
    assert s.units == (1, 5, 7, 11)
    assert s.is_duo_left and s.is_duo_right


def test_m2z2_center_is_scalar_matrices():
    R = pattern_matrix_ring(ring_zn(2), 2, [[[0, 1]] * 2] * 2)
    s = ring_subsets(R)
    assert [R.elements[c] for c in s.center] == ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]
    assert not s.is_duo_right


@pytest.mark.parametrize(
    "base,entries,size",
    [
        (2, [["*", "0", "*"], ["0", "*", "*"], ["0", "0", "*"]], 32),
        (8, [["*", "2"], ["2", "*"]], 1024),
        (6, [["*", "*"], ["0", "*"]], 216),
    ],
)
def test_pattern_ring_sizes(base, entries, size):
    Z = ring_zn(base)
    sets = [[list(range(base)) if e == "*" else ([0] if e == "0" else _zn_subgroup(base, int(e))) for e in row] for row in entries]
    R = pattern_matrix_ring(Z, len(entries), sets)
    assert R.size == size


def test_pattern_not_closed_reports_entry():
    Z = ring_zn(2)
    full, zero = [0, 1], [0]
    # e12 * e23 = e13, which the pattern forbids
    sets = [[full, full, zero], [zero, full, full], [zero, zero, full]]
    with pytest.raises(PatternNotClosed) as info:
        pattern_matrix_ring(Z, 3, sets)
    assert (info.value.i, info.value.j) == (0, 2)


def test_pattern_without_identity_rejected():
    Z = ring_zn(2)
    sets = [[[0], [0, 1]], [[0], [0, 1]]]
    with pytest.raises(IdentityNotInPattern):
        pattern_matrix_ring(Z, 2, sets)


def test_matrix_entries_render():
    R = pattern_matrix_ring(ring_zn(3), 2, [[[0, 1, 2]] * 2] * 2)
    a = R.index("[[1,2],[0,1]]")
    assert matrix_entries(R, a) == [["1", "2"], ["0", "1"]]


def test_non_abelian_addition_is_rejected():
    add = [[0, 1, 2], [1, 2, 0], [2, 1, 0]]  # not commutative
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
    with pytest.raises(AxiomViolation):
        validate_ring(["0", "1", "2"], add, mul, 0, 1)


def test_broken_distributivity_names_a_triple():
    R = ring_zn(3)
    mul = R.mul.copy()
    mul[2, 2] = 2
    with pytest.raises(AxiomViolation) as info:
        validate_ring(R.elements, R.add, mul, 0, 1)
    assert len(info.value.elements) >= 2


def test_ragged_table_is_shape_error():
    with pytest.raises(ShapeError):
        validate_ring(["0", "1"], [[0, 1], [1]], [[0, 0], [0, 1]], 0, 1)


@pytest.mark.parametrize("name", ["zmod12", "ex3.7-z2", "m2z2", "z6", "u2z6"])
def test_single_cell_mutation_is_detected(name):
    M = builtin(name)
    if M.scalars.is_integers:
        R = ring_zn(M.scalars.exponent)
    else:
        R = M.scalars.ring
    rng = np.random.default_rng(7)
    for _ in range(5):
        which = rng.integers(2)
        i, j = rng.integers(R.size, size=2)
        add, mul = R.add.copy(), R.mul.copy()
        table = add if which == 0 else mul
        table[i, j] = (table[i, j] + 1 + rng.integers(R.size - 1)) % R.size if R.size > 1 else 0
        if R.size > 1:
            with pytest.raises(AxiomViolation):
                validate_ring(R.elements, add, mul, R.zero, R.one)


def test_capacity_cap_is_enforced():
    with pytest.raises(CapacityExceeded):
        zmodule([MAX_ORDER + 1])


# --- modules ----------------------------------------------------------------


def test_zmodule_z12():
    M = zmodule([12])
    assert M.size == 12 and M.scalars.is_integers and M.scalars.exponent == 12


def test_zmodule_product_exponent():
    M = zmodule([2, 4])
    assert M.size == 8 and M.scalars.exponent == 4


def test_zmodule_rejects_empty():
    with pytest.raises(ValueError):
        zmodule([])


def test_regular_representation_of_z6():
    M = regular_representation(ring_zn(6))
    assert M.size == 6
    assert np.array_equal(M.action, ring_zn(6).mul)


def test_regular_representation_of_catalog_rings_pass_module_laws():
    for name in catalog_names():
        M = builtin(name)
        if M.scalars.is_integers:
            continue
        validate_module(M.scalars, M.elements, M.add, M.action)


def test_bad_action_rejected():
    M = zmodule([4])
    action = M.action.copy()
    action[1, 2] = 3
    with pytest.raises(AxiomViolation):
        validate_module(M.scalars, M.elements, M.add, action)


def test_direct_sum_requires_common_scalars():
    with pytest.raises(ValueError):
        direct_sum(zmodule([2]), zmodule([3]))


# --- submodules --------------------------------------------------------------


def test_cyclic_submodule_of_six_in_z12():
    M = zmodule([12])
    assert cyclic_submodule(M, M.index("6")).names() == ["0", "6"]


def test_cyclic_submodule_of_zero():
    M = builtin("m2z2")
    assert cyclic_submodule(M, M.zero).members == (M.zero,)


def test_cyclic_submodule_matches_quoted_ideal_in_triangular_ring():
    M = builtin("ex3.7-z2")
    m1 = M.index("[[0,0,1],[0,0,1],[0,0,0]]")
    assert sorted(cyclic_submodule(M, m1).names()) == ["[[0,0,0],[0,0,0],[0,0,0]]", "[[0,0,1],[0,0,1],[0,0,0]]"]


@pytest.mark.parametrize("name", ["zmod12", "zmod2x4", "ex3.7-z2", "m2z2", "z6"])
def test_cyclic_is_smallest_submodule_containing_m(name):
    M = builtin(name)
    for m in range(M.size):
        assert cyclic_submodule(M, m) == submodule_generated(M, [m])
        assert np.array_equal(cyclic_submodule(M, m).mask, M.orbit_masks[m])


def test_make_submodule_rejects_non_subgroup():
    with pytest.raises(NotASubmodule):
        make_submodule(zmodule([4]), [0, 1])


def test_complement_in_product():
    M = zmodule([2, 4])
    N = make_submodule(M, [M.index("(0,0)"), M.index("(1,0)")])
    K = complement_of(M, N)
    assert K is not None and sorted(K.names()) == ["(0,0)", "(0,1)", "(0,2)", "(0,3)"]


def test_no_complement_in_z4():
    M = zmodule([4])
    assert complement_of(M, make_submodule(M, [0, 2])) is None


def test_quotient_of_z4_is_z2():
    M = zmodule([4])
    Q = quotient_module(M, make_submodule(M, [0, 2]))
    assert Q.size == 2
    one = [i for i, n in enumerate(Q.elements) if n.startswith("1")][0]
    assert Q.add[one, one] == Q.zero


def test_quotient_operations_are_well_defined():
    M = builtin("zmod12")
    N = cyclic_submodule(M, M.index("4"))
    Q = quotient_module(M, N)
    assert Q.size == 4


def test_sum_of_submodules():
    M = zmodule([12])
    A = cyclic_submodule(M, M.index("4"))
    B = cyclic_submodule(M, M.index("6"))
    assert sum_of_submodules(A, B).size == 6


def test_fully_invariant_needs_all_endomorphisms():
    from modorder.homs import end_ring

    M = zmodule([2, 4])
    S = end_ring(M)
    N = make_submodule(M, [M.index("(0,0)"), M.index("(1,0)")])
    assert not is_fully_invariant(N, S.maps)
    T = make_submodule(M, [M.index("(0,0)"), M.index("(0,2)"), M.index("(1,0)"), M.index("(1,2)")])
    assert is_fully_invariant(T, S.maps)


# --- properties ----------------------------------------------------------------

orders = st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=3).filter(
    lambda os: int(np.prod(os)) <= 64
)


@given(orders)
def test_zmodule_satisfies_module_laws(os):
    M = zmodule(os)
    assert M.size == int(np.prod(os))
    validate_module(M.scalars, M.elements, M.add, M.action, strategy="exhaustive")


@given(st.integers(min_value=1, max_value=30))
def test_ring_subsets_match_one_line_scans(n):
    R = ring_zn(n)
    s = ring_subsets(R)
    assert s.idempotents == tuple(e for e in range(n) if (e * e) % n == e)
    assert s.units == tuple(u for u in range(n) if any((u * v) % n == 1 % n for v in range(n)))
    assert s.center == tuple(range(n))


@given(st.integers(min_value=2, max_value=5), st.data())
def test_table_ring_roundtrip_through_validation(n, data):
    R = ring_zn(n)
    again = validate_ring(R.elements, R.add.tolist(), R.mul.tolist(), R.zero, R.one, strategy="exhaustive")
    assert again.same_tables(R)


@given(orders, st.data())
def test_cyclic_submodule_is_closed(os, data):
    M = zmodule(os)
    m = data.draw(st.integers(min_value=0, max_value=M.size - 1))
    N = cyclic_submodule(M, m)
    idx = list(N.members)
    assert N.mask[M.add[np.ix_(idx, idx)]].all()
    assert N.mask[M.action[idx]].all()
    assert m in N
