import numpy as np
import pytest
from hypothesis import given, strategies as st

from modorder import lab
from modorder.algebra import direct_sum, make_submodule, regular_representation, ring_zn, zmodule
from modorder.catalog import builtin
from modorder.errors import NotAPartialOrder, PreconditionUnmet
from modorder.orders import (
    RELATIONS,
    OrderCertificate,
    OrderContext,
    build_poset,
    check_axioms,
    decide,
    dsum_leq,
    jones_leq,
    lattice_report,
    maximality_predicates,
    maximality_table,
    minus_leq,
    mitsch_leq,
    order_transfer,
    parse_certificate,
    replay,
    space_escape,
    space_leq,
)

SMALL_MODULES = {
    "z2xz4": lambda: zmodule([2, 4]),
    "z12": lambda: zmodule([12]),
    "z6-ring": lambda: regular_representation(ring_zn(6)),
    "m2z2": lambda: builtin("m2z2"),
    "ex3.7": lambda: builtin("ex3.7-z2"),
}


@pytest.fixture(scope="module", params=sorted(SMALL_MODULES))
def small_ctx(request):
    return OrderContext(SMALL_MODULES[request.param]())


def _idx(ctx, *names):
    return [ctx.M.index(n) for n in names]


# --- deciders on quoted instances ------------------------------------------------


def test_six_mitsch_below_two_with_times_three(ctx12):
    six, two = _idx(ctx12, "6", "2")
    cert = mitsch_leq(ctx12, six, two)
    assert cert.render(ctx12) == {"relation": "mitsch", "m1": "6", "m2": "2", "f": "*3", "a": "3"}


def test_reflexive_certificate_is_identity_and_one(ctx12):
    one = ctx12.M.index("1")
    cert = mitsch_leq(ctx12, one, one)
    assert cert.render(ctx12)["f"] == "*1" and cert.render(ctx12)["a"] == "1"


def test_six_not_minus_below_two(ctx12):
    six, two = _idx(ctx12, "6", "2")
    assert minus_leq(ctx12, six, two) is None


def test_zero_is_minus_below_everything(ctx12):
    for m in range(12):
        assert minus_leq(ctx12, ctx12.M.zero, m) is not None


def test_six_not_jones_below_two_but_jones_reflexive(ctx12):
    six, two = _idx(ctx12, "6", "2")
    assert jones_leq(ctx12, six, two) is None
    assert jones_leq(ctx12, six, six) is not None
    assert minus_leq(ctx12, six, six) is None


def test_m2z5_quoted_pair_is_not_mitsch():
    ctx = lab.context("m2z5")
    m1, m2 = _idx(ctx, "[[3,0],[0,3]]", "[[4,2],[2,4]]")
    assert mitsch_leq(ctx, m1, m2) is None
    assert lab.raw_mitsch(ctx.M, ctx.E, m1, m2) is False


def test_triangular_pair_is_dsum_but_not_mitsch():
    ctx = lab.context("ex3.7-z2")
    m1, m2 = _idx(ctx, "[[0,0,1],[0,0,1],[0,0,0]]", "[[0,0,1],[0,1,1],[0,0,0]]")
    cert = dsum_leq(ctx, m1, m2)
    assert cert is not None and replay(ctx, cert)
    assert mitsch_leq(ctx, m1, m2) is None


def test_dsum_of_zero_below_m():
    ctx = lab.context("ex3.7-z2")
    for m in range(ctx.M.size):
        cert = dsum_leq(ctx, ctx.M.zero, m)
        assert cert.witness["m1R"] == (ctx.M.zero,)


def test_pattern_proxy_pair_is_space_but_not_mitsch():
    ctx = lab.context("ex3.9-z8")
    R = ctx.M.scalars.ring
    m1, m2 = _idx(ctx, "[[1,6],[6,3]]", "[[1,2],[2,1]]")
    a, f = R.index("[[1,0],[4,3]]"), R.index("[[1,4],[0,3]]")
    assert R.mul[m2, a] == m1 and R.mul[f, m2] == m1
    cert = space_leq(ctx, m1, m2)
    assert cert is not None and replay(ctx, cert)
    assert mitsch_leq(ctx, m1, m2) is None


def test_space_escape_names_an_element(ctx12):
    one, two = _idx(ctx12, "1", "2")
    x = space_escape(ctx12, one, two)
    assert x is not None
    assert space_leq(ctx12, one, two) is None


def test_witness_forms_agree_on_the_quoted_pair(ctx12):
    six, two = _idx(ctx12, "6", "2")
    for form in (1, 2, 3):
        assert mitsch_leq(ctx12, six, two, form=form) is not None


# --- matrices versus per-pair deciders ------------------------------------------------


@pytest.mark.parametrize("relation", RELATIONS)
def test_matrix_equals_per_pair_decider(small_ctx, relation):
    bits = small_ctx.matrix(relation)
    n = small_ctx.M.size
    got = np.array([[decide(small_ctx, relation, i, j) is not None for j in range(n)] for i in range(n)])
    assert np.array_equal(bits, got)


@pytest.mark.parametrize("relation", RELATIONS)
def test_every_certificate_replays(small_ctx, relation):
    for i, j in np.argwhere(small_ctx.matrix(relation)):
        cert = decide(small_ctx, relation, int(i), int(j))
        assert replay(small_ctx, cert)
        again = parse_certificate(small_ctx, cert.render(small_ctx))
        assert again == cert


def test_tampered_certificate_does_not_replay(ctx12):
    six, two = _idx(ctx12, "6", "2")
    cert = mitsch_leq(ctx12, six, two)
    bad = OrderCertificate("mitsch", six, two, {"f": cert.witness["f"], "a": 1})
    assert not replay(ctx12, bad)
    bad = OrderCertificate("jones", six, two, dict(cert.witness))
    assert not replay(ctx12, bad)


def test_matrices_are_read_only(ctx12):
    with pytest.raises(ValueError):
        ctx12.matrix("mitsch")[0, 1] = True


def test_three_forms_and_powers_agree(small_ctx):
    base = small_ctx.matrix("mitsch")
    for n in (1, 2, 3, 4):
        for form in small_ctx.mitsch_forms(n):
            assert np.array_equal(form, base)


def test_inclusion_chain(small_ctx):
    m = {r: small_ctx.matrix(r) for r in RELATIONS}
    for lo, hi in lab.ASSERTED:
        assert not (m[lo] & ~m[hi]).any()


# --- posets ----------------------------------------------------------------------


def test_z12_mitsch_is_partial_order_with_six_below_two(ctx12):
    P = ctx12.poset("mitsch")
    assert P.axioms.is_partial_order
    six, two = _idx(ctx12, "6", "2")
    assert (six, two) in P.hasse
    assert [ctx12.M.elements[i] for i in P.maximal] == ["1", "2", "5", "7", "10", "11"]
    assert P.minimal == (ctx12.M.zero,)


def test_zero_is_the_minimum(small_ctx):
    bits = small_ctx.matrix("mitsch")
    z = small_ctx.M.zero
    assert bits[z].all()
    others = np.arange(small_ctx.M.size) != z
    assert not bits[others, z].any()


def test_space_is_preorder_but_not_antisymmetric_on_z12(ctx12):
    P = ctx12.poset("space")
    assert P.axioms.is_preorder and not P.axioms.is_partial_order
    assert P.hasse is None and P.maximal is None
    i, j = P.axioms.antisymmetric
    assert P.bits[i, j] and P.bits[j, i] and i != j


def test_hasse_is_transitive_reduction(small_ctx):
    P = small_ctx.poset("mitsch")
    n = small_ctx.M.size
    strict = P.bits & ~np.eye(n, dtype=bool)
    cover = np.zeros((n, n), dtype=bool)
    for lo, hi in P.hasse:
        cover[lo, hi] = True
    for i, j in np.argwhere(strict):
        between = strict[i] & strict[:, j]
        assert cover[i, j] == (not between.any())


def test_axiom_report_first_counterexamples():
    bits = np.array([[1, 1, 0], [1, 1, 1], [0, 0, 0]], dtype=bool)
    ax = check_axioms(bits)
    assert ax.reflexive == 2
    assert ax.antisymmetric == (0, 1)
    assert ax.transitive == (0, 1, 2)
    assert "reflexivity" in ax.failure()


def test_chain_is_lattice():
    M = zmodule([2])
    P = build_poset(M, "mitsch", np.array([[1, 1], [0, 1]], dtype=bool))
    assert lattice_report(P).is_lattice


def test_two_maximal_over_zero_have_no_join():
    M = zmodule([3])
    bits = np.array([[1, 1, 1], [0, 1, 0], [0, 0, 1]], dtype=bool)
    rep = lattice_report(build_poset(M, "mitsch", bits))
    assert not rep.is_lattice and rep.no_join == (1, 2) and rep.join_candidates == ()
    assert rep.no_meet is None


def test_lattice_report_rejects_preorders(ctx12):
    with pytest.raises(NotAPartialOrder):
        lattice_report(ctx12.poset("space"))


def test_z12_mitsch_poset_is_not_a_lattice(ctx12):
    rep = lattice_report(ctx12.poset("mitsch"))
    assert not rep.is_lattice
    assert rep.no_join == tuple(_idx(ctx12, "1", "2"))


# --- maximality --------------------------------------------------------------------------


def test_identity_is_maximal_with_zero_annihilator():
    ctx = lab.context("m2z2")
    rep = maximality_predicates(ctx, ctx.M.scalars.ring.one)
    assert rep.maximal and rep.r_zero and rep.left_invertible


def test_six_in_z12_has_no_flags(ctx12):
    rep = maximality_predicates(ctx12, ctx12.M.index("6"))
    assert not any(rep.flags().values())
    assert not rep.maximal


def test_each_flag_implies_maximal(small_ctx):
    table = maximality_table(small_ctx)
    for flag, mask in table.items():
        assert not (mask & ~table["maximal"]).any(), flag


# --- transfer --------------------------------------------------------------------------


def test_summand_lifts_in_product():
    M = zmodule([2, 4])
    ctx = OrderContext(M)
    N = make_submodule(M, [M.index(f"(0,{k})") for k in range(4)])
    rep = order_transfer(ctx, N, "summand")
    assert rep.holds and rep.checked > 0


def test_restrict_and_quotient_on_z4():
    M = zmodule([4])
    ctx = OrderContext(M)
    N = make_submodule(M, [0, 2])
    assert order_transfer(ctx, N, "restrict").holds
    assert order_transfer(ctx, N, "quotient").holds


def test_non_summand_is_precondition_error():
    M = zmodule([4])
    with pytest.raises(PreconditionUnmet):
        order_transfer(OrderContext(M), make_submodule(M, [0, 2]), "summand")


def test_non_invariant_is_precondition_error():
    M = zmodule([2, 4])
    N = make_submodule(M, [M.index("(0,0)"), M.index("(1,0)")])
    with pytest.raises(PreconditionUnmet):
        order_transfer(OrderContext(M), N, "quotient")


# --- properties over random small modules ----------------------------------------------

orders = st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=2).filter(
    lambda os: int(np.prod(os)) <= 36
)


def _module(kind, os):
    if kind == "group":
        return zmodule(os)
    if kind == "ring":
        return regular_representation(ring_zn(int(np.prod(os))))
    return direct_sum(regular_representation(ring_zn(os[0])), regular_representation(ring_zn(os[0])))


modules = st.builds(_module, st.sampled_from(["group", "ring", "square"]), orders)


@given(modules)
def test_mitsch_is_partial_order_and_space_preorder(M):
    ctx = OrderContext(M)
    assert ctx.poset("mitsch").axioms.is_partial_order
    assert ctx.poset("space").axioms.is_preorder


@given(modules)
def test_witness_forms_agree(M):
    ctx = OrderContext(M)
    f1, f2, f3 = ctx.mitsch_forms()
    assert np.array_equal(f1, f2) and np.array_equal(f2, f3)


@given(modules)
def test_implications_hold(M):
    ctx = OrderContext(M)
    for lo, hi in lab.ASSERTED:
        assert not (ctx.matrix(lo) & ~ctx.matrix(hi)).any()


@given(modules)
def test_difference_below_larger_element(M):
    ctx = OrderContext(M)
    bits = ctx.matrix("mitsch")
    for m1, m2 in np.argwhere(bits):
        assert bits[M.add[m2, M.neg[m1]], m2]


@given(modules, st.data())
def test_random_certificate_replays(M, data):
    ctx = OrderContext(M)
    rel = data.draw(st.sampled_from(RELATIONS))
    m1 = data.draw(st.integers(0, M.size - 1))
    m2 = data.draw(st.integers(0, M.size - 1))
    cert = decide(ctx, rel, m1, m2)
    assert (cert is not None) == bool(ctx.matrix(rel)[m1, m2])
    if cert is not None:
        assert replay(ctx, cert)


@given(st.integers(min_value=1, max_value=20))
def test_regular_rings_have_equal_minus_mitsch_dsum(n):
    # Z_n is von Neumann regular exactly when n is squarefree
    ctx = OrderContext(regular_representation(ring_zn(n)))
    squarefree = all(n % (p * p) for p in range(2, n + 1))
    assert ctx.is_regular == squarefree
    if ctx.is_regular:
        assert np.array_equal(ctx.matrix("minus"), ctx.matrix("mitsch"))
        assert np.array_equal(ctx.matrix("mitsch"), ctx.matrix("dsum"))
