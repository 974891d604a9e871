"""The Mitsch order and its companion relations on a finite module.

Relations are stored as boolean matrices with ``bits[m1, m2]`` meaning
``m1 <= m2``.  Per-pair deciders return an :class:`OrderCertificate` whose
witness can be replayed against the raw definition without any search.

The matrix builders rely on two decouplings.  The Mitsch witnesses f and a
never interact: (1) asks for some f with f(m2) = m1 = f(m1) and some a with
m2·a = m1, so a pair is related iff both halves exist separately.  The
companions split the same way: Jones needs an idempotent f with f(m2) = m1
and an idempotent a with m2·a = m1; space needs m1 ∈ S·m2 and m1 ∈ m2R.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np

from .algebra import (
    MAX_ORDER,
    FiniteModule,
    RingSubsets,
    Submodule,
    as_module,
    complement_by_projection,
    coset_labels,
    is_fully_invariant,
    make_submodule,
    quotient_module,
    ring_subsets,
)
from .errors import CapacityExceeded, NotAPartialOrder, PreconditionUnmet
from .homs import (
    EndRing,
    HomTable,
    dual_module,
    end_ring,
    invertibility_masks,
    regular_witnesses,
)

RELATIONS = ("minus", "jones", "mitsch", "dsum", "space")


def _first_true(mask: np.ndarray) -> int | None:
    hit = np.flatnonzero(mask)
    return int(hit[0]) if len(hit) else None


def _first_index_of(values: np.ndarray, size: int) -> np.ndarray:
    """first[x] = smallest i with values[i] == x, or -1."""
    first = np.full(size, -1, dtype=np.int64)
    rev = np.arange(len(values))[::-1]
    first[values[::-1]] = rev
    return first


def is_module_map(src: FiniteModule, values: np.ndarray, tgt_add: np.ndarray, tgt_action: np.ndarray) -> bool:
    """Complete additivity and linearity test run on additive generators only."""
    values = np.asarray(values)
    for g in src.additive_generators:
        if not np.array_equal(values[src.add[:, g]], tgt_add[values, values[g]]):
            return False
        if not np.array_equal(values[src.action[g]], tgt_action[values[g], :]):
            return False
    return bool(values[src.zero] == _zero_of(tgt_add))


def _zero_of(add: np.ndarray) -> int:
    return int(np.flatnonzero((add == np.arange(add.shape[0])).all(axis=1))[0])


def _row_codes(rows: np.ndarray, radix: int) -> np.ndarray:
    """Integer labels equal exactly when rows are equal."""
    if float(radix) ** rows.shape[1] < 2**62:
        w = radix ** np.arange(rows.shape[1] - 1, -1, -1, dtype=np.int64)
        return rows @ w
    _, gid = np.unique(rows, axis=0, return_inverse=True)
    return gid.ravel()


class OrderContext:
    """Lazily computed data shared by every relation on one module."""

    def __init__(self, M: FiniteModule, S: EndRing | None = None, dual: HomTable | None = None):
        self.M = M
        if S is not None:
            self.__dict__["S"] = S
        if dual is not None:
            self.__dict__["dual"] = dual
        self._matrices: dict[str, np.ndarray] = {}
        self._posets: dict[str, PosetMatrix] = {}

    @cached_property
    def S(self) -> EndRing:
        return end_ring(self.M)

    @cached_property
    def dual(self) -> HomTable:
        return dual_module(self.M)

    @property
    def E(self) -> np.ndarray:
        return self.S.maps

    @property
    def A(self) -> np.ndarray:
        return self.M.action

    @property
    def is_integers(self) -> bool:
        return self.M.scalars.is_integers

    @cached_property
    def rsub(self) -> RingSubsets:
        return self.M.scalars.subsets

    @cached_property
    def ssub(self) -> RingSubsets:
        return ring_subsets(self.S.ring)

    @cached_property
    def regular_phi(self) -> np.ndarray:
        return regular_witnesses(self.M, self.dual)

    @cached_property
    def is_regular(self) -> bool:
        return bool((self.regular_phi >= 0).all())

    @cached_property
    def invertible(self) -> tuple[np.ndarray, np.ndarray]:
        return invertibility_masks(self.M, self.dual)

    @cached_property
    def sm_masks(self) -> np.ndarray:
        """Row m marks S·m."""
        n = self.M.size
        mask = np.zeros((n, n), dtype=bool)
        mask[np.broadcast_to(np.arange(n), self.E.shape), self.E] = True
        return mask

    # --- witness halves ----------------------------------------------------

    def _power_set(self, mul: np.ndarray, n: int) -> np.ndarray:
        base = np.arange(mul.shape[0])
        pw = base.copy()
        for _ in range(n - 1):
            pw = mul[pw, base]
        return np.unique(pw)

    def f_pair(self, power: int = 1) -> np.ndarray:
        """[m1, m2]: some f (an n-th power) has f(m2) = m1 = f(m1)."""
        fs = self._power_set(self.S.ring.mul, power) if power > 1 else slice(None)
        E = self.E[fs]
        n = self.M.size
        cols = np.broadcast_to(np.arange(n), E.shape)
        ok = np.take_along_axis(E, E, axis=1) == E
        out = np.zeros((n, n), dtype=bool)
        out[E[ok], cols[ok]] = True
        return out

    def f_any(self, power: int = 1) -> np.ndarray:
        """[m1, m2]: m1 = f(m2) for some f (an n-th power)."""
        if power == 1:
            return self.sm_masks.T.copy()
        fs = self._power_set(self.S.ring.mul, power)
        E = self.E[fs]
        n = self.M.size
        out = np.zeros((n, n), dtype=bool)
        out[E, np.broadcast_to(np.arange(n), E.shape)] = True
        return out

    def a_pair(self, power: int = 1) -> np.ndarray:
        """[m1, m2]: some a (an n-th power) has m2·a = m1 = m1·a."""
        R = self.M.scalars.ring
        ar = self._power_set(R.mul, power) if power > 1 else np.arange(R.size)
        V = self.A[:, ar]
        n = self.M.size
        rows = np.broadcast_to(np.arange(n)[:, None], V.shape)
        ok = self.A[V, np.broadcast_to(ar, V.shape)] == V
        out = np.zeros((n, n), dtype=bool)
        out[V[ok], rows[ok]] = True
        return out

    def a_any(self, power: int = 1) -> np.ndarray:
        """[m1, m2]: m1 = m2·a for some a (an n-th power)."""
        if power == 1:
            return self.M.orbit_masks.T.copy()
        R = self.M.scalars.ring
        V = self.A[:, self._power_set(R.mul, power)]
        n = self.M.size
        out = np.zeros((n, n), dtype=bool)
        out[V, np.broadcast_to(np.arange(n)[:, None], V.shape)] = True
        return out

    def mitsch_forms(self, power: int = 1) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """The three witness forms: (f fixes m1), (a fixes m1), (both fix m1)."""
        fp, fa = self.f_pair(power), self.f_any(power)
        ap, aa = self.a_pair(power), self.a_any(power)
        return fp & aa, fa & ap, fp & ap

    # --- relation matrices -------------------------------------------------

    def matrix(self, relation: str) -> np.ndarray:
        if relation not in RELATIONS:
            raise ValueError(f"unknown relation {relation!r}")
        if relation not in self._matrices:
            if self.M.size > MAX_ORDER:
                raise CapacityExceeded("module too large for a relation matrix")
            bits = getattr(self, f"_build_{relation}")()
            bits.setflags(write=False)
            self._matrices[relation] = bits
        return self._matrices[relation]

    def _build_mitsch(self) -> np.ndarray:
        return self.f_pair() & self.a_any()

    def _build_space(self) -> np.ndarray:
        return self.f_any() & self.a_any()

    def _build_jones(self) -> np.ndarray:
        n = self.M.size
        Ei = self.E[list(self.ssub.idempotents)]
        fj = np.zeros((n, n), dtype=bool)
        fj[Ei, np.broadcast_to(np.arange(n), Ei.shape)] = True
        V = self.A[:, list(self.rsub.idempotents)]
        aj = np.zeros((n, n), dtype=bool)
        aj[V, np.broadcast_to(np.arange(n)[:, None], V.shape)] = True
        return fj & aj

    def _build_dsum(self) -> np.ndarray:
        # m1R + (m2-m1)R always contains m2R; it equals m2R iff m1 ∈ m2R, and
        # the sum is direct iff the orders multiply.
        M = self.M
        n = M.size
        sizes = M.orbit_sizes.astype(np.int64)
        diff = M.add[np.arange(n)[None, :], M.neg[:, None]]  # diff[m1, m2] = m2 - m1
        ok = sizes[:, None] * sizes[diff] == sizes[None, :]
        return ok & M.orbit_masks.T

    def _build_minus(self) -> np.ndarray:
        M, D = self.M, self.dual.maps
        n = M.size
        out = np.zeros((n, n), dtype=bool)
        gens = list(self.dual.generators)
        ar = np.arange(n)
        for phi in D:
            regular = np.flatnonzero(M.action[ar, phi] == ar)
            if not len(regular):
                continue
            # m1φ = m2φ as maps iff they agree on module generators
            key = np.column_stack([phi] + [M.action[ar, phi[g]] for g in gens]).astype(np.int64)
            gid = _row_codes(key, max(n, M.scalars.size))
            order = np.argsort(gid, kind="stable")
            sorted_gid = gid[order]
            lo = np.searchsorted(sorted_gid, gid[regular], side="left")
            hi = np.searchsorted(sorted_gid, gid[regular], side="right")
            lengths = hi - lo
            rows = np.repeat(regular, lengths)
            starts = np.repeat(lo - np.cumsum(lengths) + lengths, lengths)
            cols = order[np.arange(lengths.sum()) + starts]
            out[rows, cols] = True
        return out

    def poset(self, relation: str) -> "PosetMatrix":
        if relation not in self._posets:
            self._posets[relation] = build_poset(self.M, relation, self.matrix(relation))
        return self._posets[relation]


# --- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class OrderCertificate:
    """Witness for ``m1 <= m2`` under ``relation``; fields hold indices."""

    relation: str
    m1: int
    m2: int
    witness: dict[str, Any] = field(default_factory=dict)

    def render(self, ctx: OrderContext) -> dict[str, Any]:
        """JSON-friendly form with element names."""
        M = ctx.M
        R = M.scalars.ring
        w = self.witness
        out: dict[str, Any] = {"relation": self.relation, "m1": M.elements[self.m1], "m2": M.elements[self.m2]}
        if self.relation in ("mitsch", "jones"):
            out["f"] = ctx.S.ring.elements[w["f"]]
            out["a"] = R.elements[w["a"]]
        elif self.relation == "minus":
            out["phi"] = render_dual(ctx, w["phi"])
        elif self.relation == "dsum":
            for k in ("m1R", "dR", "m2R"):
                out[k] = [M.elements[i] for i in w[k]]
        elif self.relation == "space":
            out["Sm1"] = [[M.elements[x], ctx.S.ring.elements[g]] for x, g in w["Sm1"]]
            out["m1R"] = [[M.elements[x], R.elements[s]] for x, s in w["m1R"]]
        return out


def render_dual(ctx: OrderContext, phi: int) -> str:
    M = ctx.M
    if ctx.is_integers:
        return "0"
    R = M.scalars.ring
    vals = ctx.dual.maps[phi]
    return "{" + ",".join(f"{M.elements[g]}->{R.elements[vals[g]]}" for g in ctx.dual.generators) + "}"


def mitsch_leq(ctx: OrderContext, m1: int, m2: int, form: int = 1) -> OrderCertificate | None:
    """First (f, a), row-major over S × R, for the chosen witness form."""
    E, A = ctx.E, ctx.A
    f_ok = E[:, m2] == m1
    a_ok = A[m2] == m1
    if form in (1, 3):
        f_ok = f_ok & (E[:, m1] == m1)
    if form in (2, 3):
        a_ok = a_ok & (A[m1] == m1)
    f, a = _first_true(f_ok), _first_true(a_ok)
    if f is None or a is None:
        return None
    return OrderCertificate("mitsch", m1, m2, {"f": f, "a": a})


def minus_leq(ctx: OrderContext, m1: int, m2: int) -> OrderCertificate | None:
    D, A = ctx.dual.maps, ctx.A
    ok = (A[m1, D[:, m1]] == m1) & (D[:, m1] == D[:, m2])
    ok &= (A[m1][D] == A[m2][D]).all(axis=1)
    phi = _first_true(ok)
    return None if phi is None else OrderCertificate("minus", m1, m2, {"phi": phi})


def jones_leq(ctx: OrderContext, m1: int, m2: int) -> OrderCertificate | None:
    fs = np.array(ctx.ssub.idempotents)
    as_ = np.array(ctx.rsub.idempotents)
    f = _first_true(ctx.E[fs, m2] == m1)
    a = _first_true(ctx.A[m2, as_] == m1)
    if f is None or a is None:
        return None
    return OrderCertificate("jones", m1, m2, {"f": int(fs[f]), "a": int(as_[a])})


def dsum_leq(ctx: OrderContext, m1: int, m2: int) -> OrderCertificate | None:
    M = ctx.M
    d = M.sub(m2, m1)
    A1, D1, C = (np.unique(M.action[x]) for x in (m1, d, m2))
    if not np.array_equal(np.intersect1d(A1, D1), [M.zero]):
        return None
    if not np.array_equal(np.unique(M.add[np.ix_(A1, D1)]), C):
        return None
    as_tuple = lambda v: tuple(int(i) for i in v)  # noqa: E731
    return OrderCertificate("dsum", m1, m2, {"m1R": as_tuple(A1), "dR": as_tuple(D1), "m2R": as_tuple(C)})


def space_escape(ctx: OrderContext, m1: int, m2: int) -> int | None:
    """First element of S·m1 (then m1R) with no counterpart from m2, or None."""
    sm1 = np.unique(ctx.E[:, m1])
    bad = sm1[~ctx.sm_masks[m2, sm1]]
    if len(bad):
        return int(bad[0])
    m1r = np.unique(ctx.A[m1])
    bad = m1r[~ctx.M.orbit_masks[m2, m1r]]
    return int(bad[0]) if len(bad) else None


def space_leq(ctx: OrderContext, m1: int, m2: int) -> OrderCertificate | None:
    if space_escape(ctx, m1, m2) is not None:
        return None
    n = ctx.M.size
    first_g = _first_index_of(ctx.E[:, m2], n)
    first_s = _first_index_of(ctx.A[m2], n)
    sm1 = np.unique(ctx.E[:, m1])
    m1r = np.unique(ctx.A[m1])
    return OrderCertificate(
        "space",
        m1,
        m2,
        {
            "Sm1": tuple((int(x), int(first_g[x])) for x in sm1),
            "m1R": tuple((int(x), int(first_s[x])) for x in m1r),
        },
    )


DECIDERS = {
    "mitsch": mitsch_leq,
    "minus": minus_leq,
    "jones": jones_leq,
    "dsum": dsum_leq,
    "space": space_leq,
}


def decide(ctx: OrderContext, relation: str, m1: int, m2: int) -> OrderCertificate | None:
    return DECIDERS[relation](ctx, m1, m2)


def parse_certificate(ctx: OrderContext, doc: dict[str, Any]) -> OrderCertificate:
    """Inverse of ``OrderCertificate.render``: names back to indices.

    Raises KeyError when a name does not resolve on this module.
    """
    M = ctx.M
    R = M.scalars.ring
    S = ctx.S.ring
    rel = doc["relation"]
    m1, m2 = M.index(doc["m1"]), M.index(doc["m2"])
    if rel in ("mitsch", "jones"):
        w: dict[str, Any] = {"f": S.index(doc["f"]), "a": R.index(doc["a"])}
    elif rel == "minus":
        names = ctx.__dict__.get("_dual_names")
        if names is None:
            names = {render_dual(ctx, k): k for k in reversed(range(len(ctx.dual)))}
            ctx.__dict__["_dual_names"] = names
        w = {"phi": names[doc["phi"]]}
    elif rel == "dsum":
        w = {k: tuple(M.index(x) for x in doc[k]) for k in ("m1R", "dR", "m2R")}
    elif rel == "space":
        w = {
            "Sm1": tuple((M.index(x), S.index(g)) for x, g in doc["Sm1"]),
            "m1R": tuple((M.index(x), R.index(s)) for x, s in doc["m1R"]),
        }
    else:
        raise KeyError(rel)
    return OrderCertificate(rel, m1, m2, w)


def _verified_endo(ctx: OrderContext, g: int) -> bool:
    # each endomorphism is re-checked once per context; replays share the result
    cache = ctx.__dict__.setdefault("_verified", {})
    if g not in cache:
        M = ctx.M
        cache[g] = is_module_map(M, ctx.S.maps[g], M.add, M.action)
    return cache[g]


def replay(ctx: OrderContext, cert: OrderCertificate) -> bool:
    """Re-prove a certificate from the definition; no witness search."""
    M = ctx.M
    R = M.scalars.ring
    A = M.action
    m1, m2, w = cert.m1, cert.m2, cert.witness
    if cert.relation in ("mitsch", "jones"):
        f = ctx.S.maps[w["f"]]
        a = w["a"]
        if not _verified_endo(ctx, w["f"]):
            return False
        ok = A[m2, a] == m1 and f[m2] == m1
        if cert.relation == "mitsch":
            return bool(ok and f[m1] == m1)
        a_idem = a in (0, 1 % R.size) if ctx.is_integers else R.mul[a, a] == a
        return bool(ok and np.array_equal(f[f], f) and a_idem)
    if cert.relation == "minus":
        phi = ctx.dual.maps[w["phi"]]
        if ctx.is_integers:
            if phi.any():
                return False
        elif not is_module_map(M, phi, R.add, R.mul):
            return False
        return bool(
            A[m1, phi[m1]] == m1
            and phi[m1] == phi[m2]
            and np.array_equal(A[m1, phi], A[m2, phi])
        )
    if cert.relation == "dsum":
        d = M.sub(m2, m1)
        A1, D1, C = (np.array(w[k]) for k in ("m1R", "dR", "m2R"))
        orbit = lambda x: set(int(v) for v in A[x])  # noqa: E731
        if set(A1.tolist()) != orbit(m1) or set(D1.tolist()) != orbit(d) or set(C.tolist()) != orbit(m2):
            return False
        return set(A1.tolist()) & set(D1.tolist()) == {M.zero} and set(
            int(v) for v in M.add[np.ix_(A1, D1)].ravel()
        ) == set(C.tolist())
    if cert.relation == "space":
        sm = dict(w["Sm1"])
        rm = dict(w["m1R"])
        if set(int(x) for x in ctx.S.maps[:, m1]) != set(sm):
            return False
        if set(int(x) for x in A[m1]) != set(rm):
            return False
        for x, g in sm.items():
            if not _verified_endo(ctx, g) or ctx.S.maps[g][m2] != x:
                return False
        return all(A[m2, s] == x for x, s in rm.items())
    raise ValueError(f"unknown relation {cert.relation!r}")


# --- posets ----------------------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    """First counterexample per axiom, or None when the axiom holds."""

    reflexive: int | None
    antisymmetric: tuple[int, int] | None
    transitive: tuple[int, int, int] | None

    @property
    def is_preorder(self) -> bool:
        return self.reflexive is None and self.transitive is None

    @property
    def is_partial_order(self) -> bool:
        return self.is_preorder and self.antisymmetric is None

    def failure(self) -> str | None:
        if self.reflexive is not None:
            return f"reflexivity fails at {self.reflexive}"
        if self.antisymmetric is not None:
            return f"antisymmetry fails at {self.antisymmetric}"
        if self.transitive is not None:
            return f"transitivity fails at {self.transitive}"
        return None


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float32 counts stay exact up to 2**24 > MAX_ORDER
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0.5


def check_axioms(bits: np.ndarray) -> AxiomReport:
    n = bits.shape[0]
    refl = _first_true(~np.diag(bits))
    sym = bits & bits.T & ~np.eye(n, dtype=bool)
    anti = None
    if sym.any():
        i, j = np.argwhere(sym)[0]
        anti = (int(i), int(j))
    trans = None
    missing = _bool_matmul(bits, bits) & ~bits
    if missing.any():
        i, k = np.argwhere(missing)[0]
        j = int(np.flatnonzero(bits[i] & bits[:, k])[0])
        trans = (int(i), j, int(k))
    return AxiomReport(refl, anti, trans)


@dataclass(frozen=True, eq=False)
class PosetMatrix:
    """Relation matrix with its analytics.

    ``hasse`` holds cover edges (lower, upper).  Hasse edges and extremal
    elements are None unless the relation is a partial order.
    """

    module: FiniteModule
    relation: str
    bits: np.ndarray
    axioms: AxiomReport
    hasse: tuple[tuple[int, int], ...] | None
    maximal: tuple[int, ...] | None
    minimal: tuple[int, ...] | None

    def pairs(self) -> np.ndarray:
        return np.argwhere(self.bits)


def build_poset(M: FiniteModule, relation: str, bits: np.ndarray) -> PosetMatrix:
    axioms = check_axioms(bits)
    if not axioms.is_partial_order:
        return PosetMatrix(M, relation, bits, axioms, None, None, None)
    strict = bits & ~np.eye(M.size, dtype=bool)
    cover = strict & ~_bool_matmul(strict, strict)
    hasse = tuple((int(i), int(j)) for i, j in np.argwhere(cover))
    maximal = tuple(int(i) for i in np.flatnonzero(~strict.any(axis=1)))
    minimal = tuple(int(i) for i in np.flatnonzero(~strict.any(axis=0)))
    return PosetMatrix(M, relation, bits, axioms, hasse, maximal, minimal)


def relation_matrix(ctx: OrderContext, relation: str) -> PosetMatrix:
    return ctx.poset(relation)


@dataclass(frozen=True)
class LatticeReport:
    is_lattice: bool
    no_join: tuple[int, int] | None
    no_meet: tuple[int, int] | None
    join_candidates: tuple[int, ...]
    meet_candidates: tuple[int, ...]


def _extremal_bounds(bits: np.ndarray, x: int, y: int, upper: bool) -> tuple[int, ...]:
    """Minimal upper bounds (or maximal lower bounds) of {x, y}."""
    B = bits if upper else bits.T
    U = np.flatnonzero(B[x] & B[y])
    sub = B[np.ix_(U, U)] & ~np.eye(len(U), dtype=bool)
    # z is minimal in U when no other w in U lies below it
    return tuple(int(U[k]) for k in range(len(U)) if not sub[:, k].any())


def _bound_exists(B: np.ndarray) -> np.ndarray:
    """[x, y]: the common upper bounds of x and y (rows of B) have a least one."""
    Bf = B.astype(np.float32)
    counts = np.rint(Bf @ Bf.T).astype(np.int64)
    up = B.sum(axis=1)
    found = np.zeros(counts.shape, dtype=bool)
    # z is the least bound iff z is a bound and |up(z)| equals the bound count
    for c in np.unique(up):
        cols = Bf[:, up == c]
        found |= ((cols @ cols.T) > 0.5) & (counts == c)
    return found


def lattice_report(P: PosetMatrix) -> LatticeReport:
    if not P.axioms.is_partial_order:
        raise NotAPartialOrder(P.axioms.failure() or "not a partial order")
    bits = P.bits
    n = bits.shape[0]
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    no_join = np.argwhere(~_bound_exists(bits) & upper)
    no_meet = np.argwhere(~_bound_exists(bits.T) & upper)
    j = tuple(int(v) for v in no_join[0]) if len(no_join) else None
    m = tuple(int(v) for v in no_meet[0]) if len(no_meet) else None
    return LatticeReport(
        is_lattice=j is None and m is None,
        no_join=j,
        no_meet=m,
        join_candidates=_extremal_bounds(bits, *j, upper=True) if j else (),
        meet_candidates=_extremal_bounds(bits, *m, upper=False) if m else (),
    )


# --- maximality ------------------------------------------------------------


@dataclass(frozen=True)
class MaximalityReport:
    left_invertible: bool
    right_invertible: bool
    r_plus_one_units: bool
    l_plus_one_units: bool
    r_zero: bool
    l_zero: bool
    maximal: bool

    FLAGS = (
        "left_invertible",
        "right_invertible",
        "r_plus_one_units",
        "l_plus_one_units",
        "r_zero",
        "l_zero",
    )

    def flags(self) -> dict[str, bool]:
        return {k: getattr(self, k) for k in self.FLAGS}


def maximality_table(ctx: OrderContext) -> dict[str, np.ndarray]:
    """All six sufficient conditions plus ground-truth maximality, per element."""
    M, S = ctx.M, ctx.S
    R = M.scalars.ring
    rmask = M.action == M.zero
    if ctx.is_integers:
        # b + 1 is ±1 in the integers only for b = 0 among representatives 0..N-1
        bad_b = np.arange(R.size) != 0
    else:
        units = np.zeros(R.size, dtype=bool)
        units[list(ctx.rsub.units)] = True
        bad_b = ~units[R.add[:, R.one]]
    lmask = (S.maps == M.zero).T
    s_units = S.unit_mask
    bad_g = ~s_units[S.ring.add[:, S.ring.one]]
    left, right = ctx.invertible
    P = ctx.poset("mitsch")
    maximal = np.zeros(M.size, dtype=bool)
    maximal[list(P.maximal)] = True
    return {
        "left_invertible": left,
        "right_invertible": right,
        "r_plus_one_units": ~(rmask & bad_b).any(axis=1),
        "l_plus_one_units": ~(lmask & bad_g).any(axis=1),
        "r_zero": rmask.sum(axis=1) == 1,
        "l_zero": lmask.sum(axis=1) == 1,
        "maximal": maximal,
    }


def maximality_predicates(ctx: OrderContext, m: int) -> MaximalityReport:
    table = maximality_table(ctx)
    return MaximalityReport(**{k: bool(v[m]) for k, v in table.items()})


# --- transfer to submodules and quotients -----------------------------------


@dataclass(frozen=True)
class TransferReport:
    kind: str
    checked: int
    violations: tuple[tuple[int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def order_transfer(ctx: OrderContext, N: Submodule, kind: str, relation: str = "mitsch") -> TransferReport:
    """Check that the relation lifts from a summand, restricts to a fully
    invariant submodule, or descends to the quotient by one.

    ``kind`` is "summand", "restrict" or "quotient".  Pairs are reported as
    parent-module indices (for "quotient", the offending pair in M).
    """
    M = ctx.M
    N = make_submodule(M, N.members)
    idx = np.array(N.members)
    bits = ctx.matrix(relation)
    if kind == "summand":
        if complement_by_projection(N, ctx.S.maps) is None:
            raise PreconditionUnmet("submodule is not a direct summand")
        sub = OrderContext(as_module(N)).matrix(relation)
        pairs = np.argwhere(sub)
        lifted = idx[pairs]
        bad = lifted[~bits[lifted[:, 0], lifted[:, 1]]]
        return TransferReport(kind, len(pairs), tuple((int(a), int(b)) for a, b in bad))
    if not is_fully_invariant(N, ctx.S.maps):
        raise PreconditionUnmet("submodule is not fully invariant")
    if kind == "restrict":
        sub = OrderContext(as_module(N)).matrix(relation)
        inner = bits[np.ix_(idx, idx)]
        pairs = np.argwhere(inner)
        bad = pairs[~sub[pairs[:, 0], pairs[:, 1]]]
        return TransferReport(kind, len(pairs), tuple((int(idx[a]), int(idx[b])) for a, b in bad))
    if kind == "quotient":
        label, _ = coset_labels(M, N)
        qbits = OrderContext(quotient_module(M, N)).matrix(relation)
        pairs = np.argwhere(bits)
        bad = pairs[~qbits[label[pairs[:, 0]], label[pairs[:, 1]]]]
        return TransferReport(kind, len(pairs), tuple((int(a), int(b)) for a, b in bad))
    raise ValueError(f"unknown transfer kind {kind!r}")
