"""Executable claim registry, implication reports and counterexample search.

Each claim is a function ``(ctx, descriptor) -> Outcome`` evaluated on one
catalog instance.  Outcomes say whether the claim held, was violated, or
never had its hypothesis fire.  Audit claims turn violations into
"audit-finding" rather than "fails".
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable

import numpy as np

from .algebra import (
    FiniteModule,
    Submodule,
    is_fully_invariant,
)
from .catalog import InstanceDescriptor, builtin, catalog_names, descriptor
from .errors import CapacityExceeded, ModOrderError, PreconditionUnmet, UnknownClaimId
from .homs import hom_oracle_bruteforce
from .orders import (
    RELATIONS,
    OrderContext,
    decide,
    dsum_leq,
    lattice_report,
    maximality_table,
    mitsch_leq,
    order_transfer,
    replay,
    space_leq,
)

STATUSES = ("holds", "fails", "vacuous", "audit-finding")
PAIR_CHUNK = 1 << 14


@lru_cache(maxsize=None)
def context(name: str) -> OrderContext:
    """Shared per-instance context for the built-in catalog."""
    return OrderContext(builtin(name))


# --- outcome plumbing -------------------------------------------------------


@dataclass(frozen=True)
class Outcome:
    verdict: str  # "holds" | "violated" | "vacuous"
    payload: dict[str, Any]


def _holds(**payload) -> Outcome:
    return Outcome("holds", payload)


def _violated(**payload) -> Outcome:
    return Outcome("violated", payload)


def _vacuous(**payload) -> Outcome:
    return Outcome("vacuous", payload)


@dataclass(frozen=True)
class ClaimCheck:
    claim: str
    instance: str
    status: str
    payload: dict[str, Any]
    runtime: float = 0.0

    def to_json(self) -> dict[str, Any]:
        # runtime is left out so repeated runs serialize identically
        return {"claim": self.claim, "instance": self.instance, "status": self.status, "payload": self.payload}


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    fn: Callable[[OrderContext, InstanceDescriptor], Outcome] | None
    only: tuple[str, ...] | None = None
    audit: bool = False
    out_of_scope: str | None = None


def _name(ctx: OrderContext, i: int) -> str:
    return ctx.M.elements[int(i)]


def _pair(ctx: OrderContext, m1: int, m2: int) -> list[str]:
    return [_name(ctx, m1), _name(ctx, m2)]


def _quoted(ctx: OrderContext, d: InstanceDescriptor, key: str) -> int:
    """Index of a quoted element; for R_R instances ring and module agree."""
    name = d.quoted[key]
    if key in ("a", "f", "g") and not ctx.is_integers:
        return ctx.M.scalars.ring.index(name)
    return ctx.M.index(name)


def _pairs(bits: np.ndarray) -> np.ndarray:
    return np.argwhere(bits)


def _first_bad_pair(ctx: OrderContext, P: np.ndarray, bad: np.ndarray) -> list[str] | None:
    hit = np.flatnonzero(bad)
    return _pair(ctx, *P[hit[0]]) if len(hit) else None


def _first_difference(a: np.ndarray, b: np.ndarray) -> tuple[int, int] | None:
    diff = np.argwhere(a != b)
    return (int(diff[0][0]), int(diff[0][1])) if len(diff) else None


def _inclusion(ctx: OrderContext, small: str, big: str) -> tuple[bool, list[str] | None]:
    extra = np.argwhere(ctx.matrix(small) & ~ctx.matrix(big))
    return (not len(extra), _pair(ctx, *extra[0]) if len(extra) else None)


def _rows_subset(mask: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """bad[k] = mask[a[k]] is not contained in mask[b[k]]."""
    out = np.zeros(len(a), dtype=bool)
    step = max(1, PAIR_CHUNK * 64 // max(mask.shape[1], 1))
    for lo in range(0, len(a), step):
        sl = slice(lo, lo + step)
        out[sl] = (mask[a[sl]] & ~mask[b[sl]]).any(axis=1)
    return out


def _l_mask(ctx: OrderContext) -> np.ndarray:
    """[m, f]: f(m) = 0."""
    return (ctx.E == ctx.M.zero).T


def _r_mask(ctx: OrderContext) -> np.ndarray:
    """[m, a]: m·a = 0 (residues for integer scalars)."""
    return ctx.A == ctx.M.zero


def raw_mitsch(M: FiniteModule, maps: np.ndarray, m1: int, m2: int) -> bool:
    """Definition (1) read literally: nested loops over every (f, a)."""
    for f in maps:
        if f[m2] != m1 or f[m1] != m1:
            continue
        for a in range(M.scalars.size):
            if M.action[m2, a] == m1:
                return True
    return False


def confirm_absent(ctx: OrderContext, m1: int, m2: int) -> dict[str, Any]:
    """Exhaustive confirmation that m1 is not Mitsch-below m2.

    Small modules are re-checked against an independently enumerated S.
    """
    maps = ctx.E
    source = "enumerated"
    if ctx.M.size <= 8:
        maps = hom_oracle_bruteforce(ctx.M, ctx.M).maps
        source = "brute-force"
    found = raw_mitsch(ctx.M, maps, m1, m2)
    return {"exhaustive": not found, "endomorphisms": source, "searched": int(len(maps)) * ctx.M.scalars.size}


# --- claims on relation matrices ---------------------------------------------


def c_three_forms(ctx, d):
    f1, f2, f3 = ctx.mitsch_forms()
    for other, label in ((f2, "form 2"), (f3, "form 3")):
        diff = _first_difference(f1, other)
        if diff:
            return _violated(differs=label, pair=_pair(ctx, *diff))
    return _holds(related_pairs=int(f1.sum()))


def c_partial_order(ctx, d):
    ax = ctx.poset("mitsch").axioms
    if not ax.is_partial_order:
        return _violated(axiom=ax.failure())
    sp = ctx.poset("space").axioms
    if not sp.is_preorder:
        return _violated(axiom="space " + (sp.failure() or ""))
    return _holds(pairs=int(ctx.matrix("mitsch").sum()), space_antisymmetric=sp.antisymmetric is None)


def c_power_forms(ctx, d):
    base = ctx.matrix("mitsch")
    for n in (1, 2, 3, 4):
        for k, form in enumerate(ctx.mitsch_forms(n), start=1):
            diff = _first_difference(base, form)
            if diff:
                return _violated(n=n, form=k, pair=_pair(ctx, *diff))
    return _holds(powers=[1, 2, 3, 4])


def c_ring_powers(ctx, d):
    R = ctx.M.regular_ring
    if R is None:
        return _vacuous(reason="not a ring over itself")
    mul = R.mul
    n = R.size
    base = ctx.matrix("mitsch")
    cols = np.broadcast_to(np.arange(n), (n, n))
    for p in (1, 2, 3, 4):
        pw = np.arange(n)
        for _ in range(p - 1):
            pw = mul[pw, np.arange(n)]
        P = np.unique(pw)
        # a = y^n b = y^n a and a = b x^n, using ring products only
        V = mul[P]  # V[y, b] = y b
        fixed = np.take_along_axis(V, V, axis=1) == V
        left = np.zeros((n, n), dtype=bool)
        left[V[fixed], np.broadcast_to(cols[0], V.shape)[fixed]] = True
        right = np.zeros((n, n), dtype=bool)
        W = mul[:, P]  # W[b, x] = b x
        right[W, np.broadcast_to(np.arange(n)[:, None], W.shape)] = True
        diff = _first_difference(base, left & right)
        if diff:
            return _violated(n=p, pair=_pair(ctx, *diff))
    return _holds(powers=[1, 2, 3, 4])


def c_mitschann(ctx, d):
    P = _pairs(ctx.matrix("mitsch"))
    a, b = P[:, 0], P[:, 1]
    checks = {
        "l_S(m2) in l_S(m1)": _rows_subset(_l_mask(ctx), b, a),
        "r_R(m2) in r_R(m1)": _rows_subset(_r_mask(ctx), b, a),
        "m1R in m2R": _rows_subset(ctx.M.orbit_masks, a, b),
        "Sm1 in Sm2": _rows_subset(ctx.sm_masks, a, b),
    }
    for label, bad in checks.items():
        w = _first_bad_pair(ctx, P, bad)
        if w:
            return _violated(inclusion=label, pair=w)
    return _holds(pairs=len(P))


def _four_inclusions(ctx, m1, m2) -> dict[str, bool]:
    l, r = _l_mask(ctx), _r_mask(ctx)
    return {
        "l_S(m2) in l_S(m1)": bool(not (l[m2] & ~l[m1]).any()),
        "r_R(m2) in r_R(m1)": bool(not (r[m2] & ~r[m1]).any()),
        "m1R in m2R": bool(not (ctx.M.orbit_masks[m1] & ~ctx.M.orbit_masks[m2]).any()),
        "Sm1 in Sm2": bool(not (ctx.sm_masks[m1] & ~ctx.sm_masks[m2]).any()),
    }


def c_inclusions_not_converse(ctx, d):
    R = ctx.M.scalars.ring
    m1, m2 = _quoted(ctx, d, "m1"), _quoted(ctx, d, "m2")
    a, f = _quoted(ctx, d, "a"), _quoted(ctx, d, "f")
    identities = bool(R.mul[m2, a] == m1 and R.mul[f, m2] == m1)
    inc = _four_inclusions(ctx, m1, m2)
    cert = mitsch_leq(ctx, m1, m2)
    absent = confirm_absent(ctx, m1, m2)
    payload = dict(pair=_pair(ctx, m1, m2), quoted_identities=identities, inclusions=inc, mitsch=cert is not None, **absent)
    if identities and all(inc.values()) and cert is None and absent["exhaustive"]:
        return _holds(**payload)
    return _violated(**payload)


# --- submodule transfer -------------------------------------------------------

TRANSFER_CANDIDATES = 8


def _candidate_submodules(ctx: OrderContext, summands: bool = False) -> list[Submodule]:
    """Distinct proper nonzero submodules, smallest first, capped.

    Cyclic submodules by default; for summands, the images of idempotent
    endomorphisms, which are exactly the direct summands.
    """
    M = ctx.M
    seen = {}
    if summands:
        for k in ctx.ssub.idempotents:
            members = tuple(int(i) for i in np.unique(ctx.E[k]))
            if 1 < len(members) < M.size:
                seen.setdefault(members, Submodule(M, members))
    else:
        rows = M.orbit_masks
        sizes = M.orbit_sizes
        _, first = np.unique(np.packbits(rows, axis=1), axis=0, return_index=True)
        for m in sorted(int(i) for i in first):
            if 1 < sizes[m] < M.size:
                members = tuple(int(i) for i in np.flatnonzero(rows[m]))
                seen.setdefault(members, Submodule(M, members))
    ordered = sorted(seen.values(), key=lambda N: (N.size, N.members))
    return ordered[:TRANSFER_CANDIDATES]


def _transfer_claim(kind: str, ideals_only: bool = False):
    def run(ctx, d):
        if ideals_only and ctx.M.regular_ring is None:
            return _vacuous(reason="not a ring over itself")
        checked, pairs = [], 0
        for N in _candidate_submodules(ctx, summands=kind == "summand"):
            if ideals_only and not is_fully_invariant(N, ctx.E):
                continue
            try:
                rep = order_transfer(ctx, N, kind)
            except PreconditionUnmet:
                continue
            except CapacityExceeded:
                continue
            checked.append([_name(ctx, x) for x in N.members[:4]] + (["..."] if N.size > 4 else []))
            pairs += rep.checked
            if not rep.holds:
                return _violated(submodule_size=N.size, pair=_pair(ctx, *rep.violations[0]))
        if not checked:
            return _vacuous(reason="no candidate submodule met the hypothesis")
        return _holds(submodules=len(checked), pairs=pairs)

    return run


# --- companion orders --------------------------------------------------------


def c_minus_in_mitsch(ctx, d):
    ok, w = _inclusion(ctx, "minus", "mitsch")
    if not ok:
        return _violated(pair=w)
    if ctx.is_regular:
        diff = _first_difference(ctx.matrix("minus"), ctx.matrix("mitsch"))
        if diff:
            return _violated(converse_pair=_pair(ctx, *diff))
        return _holds(regular=True, converse="checked")
    return _holds(regular=False)


def c_ex_zero_dual(ctx, d):
    m1, m2 = _quoted(ctx, d, "m1"), _quoted(ctx, d, "m2")
    cert = mitsch_leq(ctx, m1, m2)
    S = ctx.S.ring.elements
    R = ctx.M.scalars.ring.elements
    payload = {
        "pair": _pair(ctx, m1, m2),
        "dual_size": len(ctx.dual),
        "regular_module": ctx.is_regular,
        "mitsch": cert.render(ctx) if cert else None,
        "minus": decide(ctx, "minus", m1, m2) is not None,
        "jones": decide(ctx, "jones", m1, m2) is not None,
        "jones_reflexive": bool(ctx.matrix("jones").diagonal().all()),
    }
    good = (
        cert is not None
        and S[cert.witness["f"]] == d.quoted["f"]
        and R[cert.witness["a"]] == d.quoted["a"]
        and not payload["minus"]
        and not payload["jones"]
        and payload["jones_reflexive"]
        and len(ctx.dual) == 1
        and not ctx.is_regular
    )
    return _holds(**payload) if good else _violated(**payload)


def _inclusion_claim(small: str, big: str):
    def run(ctx, d):
        ok, w = _inclusion(ctx, small, big)
        return _holds(pairs=int(ctx.matrix(small).sum())) if ok else _violated(pair=w)

    return run


def c_mitsch_jones_faithful(ctx, d):
    if ctx.is_integers:
        # r_Z(m) always contains the exponent, so the hypothesis never holds
        return _vacuous(reason="integer annihilators are never zero")
    P = _pairs(ctx.matrix("mitsch"))
    r_zero = _r_mask(ctx).sum(axis=1) == 1
    l_zero = _l_mask(ctx).sum(axis=1) == 1
    hyp = r_zero[P[:, 1]] & l_zero[P[:, 1]]
    if not hyp.any():
        return _vacuous(reason="no related pair with faithful m2")
    Q = P[hyp]
    bad = ~ctx.matrix("jones")[Q[:, 0], Q[:, 1]]
    w = _first_bad_pair(ctx, Q, bad)
    return _violated(pair=w) if w else _holds(pairs=int(hyp.sum()))


def c_mitsch_jones_regular(ctx, d):
    P = _pairs(ctx.matrix("mitsch"))
    hyp = ctx.regular_phi[P[:, 0]] >= 0
    if not hyp.any():
        return _vacuous(reason="no related pair with regular m1")
    Q = P[hyp]
    bad = ~ctx.matrix("jones")[Q[:, 0], Q[:, 1]]
    w = _first_bad_pair(ctx, Q, bad)
    return _violated(pair=w) if w else _holds(pairs=int(hyp.sum()))


def c_mitsch_in_dsum(ctx, d):
    ok, w = _inclusion(ctx, "mitsch", "dsum")
    if not ok:
        return _violated(pair=w)
    if ctx.is_regular:
        diff = _first_difference(ctx.matrix("mitsch"), ctx.matrix("dsum"))
        if diff:
            return _violated(converse_pair=_pair(ctx, *diff))
        return _holds(regular=True, converse="checked")
    return _holds(regular=False)


def c_ex_dsum_not_mitsch(ctx, d):
    m1, m2 = _quoted(ctx, d, "m1"), _quoted(ctx, d, "m2")
    cert = dsum_leq(ctx, m1, m2)
    absent = confirm_absent(ctx, m1, m2)
    payload = {"pair": _pair(ctx, m1, m2), "dsum": cert.render(ctx) if cert else None, **absent}
    if cert is not None and replay(ctx, cert) and mitsch_leq(ctx, m1, m2) is None and absent["exhaustive"]:
        return _holds(**payload)
    return _violated(**payload)


def c_ex_space_not_mitsch(ctx, d):
    R = ctx.M.scalars.ring
    m1, m2 = _quoted(ctx, d, "m1"), _quoted(ctx, d, "m2")
    a, f = _quoted(ctx, d, "a"), _quoted(ctx, d, "f")
    identities = bool(R.mul[m2, a] == m1 and R.mul[f, m2] == m1)
    cert = space_leq(ctx, m1, m2)
    absent = confirm_absent(ctx, m1, m2)
    payload = {"pair": _pair(ctx, m1, m2), "quoted_identities": identities, "space": cert is not None, **absent}
    if identities and cert is not None and replay(ctx, cert) and mitsch_leq(ctx, m1, m2) is None and absent["exhaustive"]:
        return _holds(**payload)
    return _violated(**payload)


def c_zn_jones_not_minus(ctx, d):
    if not ctx.is_integers:
        return _vacuous(reason="scalars are not the integers")
    nonzero = [m for m in range(ctx.M.size) if m != ctx.M.zero]
    if not nonzero:
        return _vacuous(reason="no nonzero element")
    for m in nonzero:
        if decide(ctx, "minus", m, m) is not None or decide(ctx, "jones", m, m) is None:
            return _violated(element=_name(ctx, m))
    return _holds(elements=len(nonzero))


def c_morita_idempotents(ctx, d):
    M, D = ctx.M, ctx.dual.maps
    R = M.scalars.ring
    ar = np.arange(M.size)
    phis, ms = np.nonzero(M.action[ar[None, :], D] == ar[None, :])
    if not len(ms):
        return _vacuous(reason="no regular pair")
    v = D[phis, ms]  # φ(m)
    if ctx.is_integers:
        ring_ok = v == 0  # φ = 0 is the only dual element
    else:
        ring_ok = R.mul[v, v] == v
    gens = list(ctx.dual.generators)
    keys = np.empty((len(ms), len(gens)), dtype=np.int64)
    s_ok = np.ones(len(ms), dtype=bool)
    for k, g in enumerate(gens):
        y = M.action[ms, D[phis, g]]  # (mφ)(g)
        z = M.action[ms, D[phis, y]]  # (mφ)(mφ)(g)
        s_ok &= z == y
        keys[:, k] = y
    in_s = ctx.S.hom.index_by_keys(keys) >= 0 if gens else np.ones(len(ms), dtype=bool)
    bad = ~(ring_ok & s_ok & in_s)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        return _violated(element=_name(ctx, ms[i]), phi=int(phis[i]))
    return _holds(regular_pairs=len(ms))


# --- maximality ----------------------------------------------------------------


def c_maxicin(ctx, d):
    M = ctx.M
    P = _pairs(ctx.matrix("mitsch"))
    a, b = P[:, 0], P[:, 1]
    neq = a != b
    left, right = ctx.invertible
    diff = M.add[b, M.neg[a]]
    checks = {
        "(1) left invertible": left[a] & neq,
        "(2) right invertible": right[a] & neq,
        "(3) m2 in m1R": M.orbit_masks[a, b] & neq,
        "(4) m2 in Sm1": ctx.sm_masks[a, b] & neq,
        "(5) m1 in every submodule holding m2": ~M.orbit_masks[b, a],
        "(6) m2-m1 below m2": ~ctx.matrix("mitsch")[diff, b],
    }
    for label, bad in checks.items():
        w = _first_bad_pair(ctx, P, bad)
        if w:
            return _violated(part=label, pair=w)
    return _holds(pairs=len(P))


def c_maxelement(ctx, d):
    table = maximality_table(ctx)
    maximal = table["maximal"]
    counts = {}
    for flag, mask in table.items():
        if flag == "maximal":
            continue
        bad = np.flatnonzero(mask & ~maximal)
        if len(bad):
            return _violated(condition=flag, element=_name(ctx, bad[0]))
        counts[flag] = int(mask.sum())
    if not any(counts.values()):
        return _vacuous(conditions=counts)
    return _holds(conditions=counts)


def _upper_witness(ctx, m):
    strict = np.flatnonzero(ctx.matrix("mitsch")[m] & (np.arange(ctx.M.size) != m))
    n = int(strict[0])
    cert = mitsch_leq(ctx, m, n)
    return {"element": _name(ctx, m), "below": _name(ctx, n), "certificate": cert.render(ctx)}


def c_cor_faithful(ctx, d):
    r_faithful = (not ctx.is_integers) and bool((_r_mask(ctx).all(axis=0)).sum() == 1)
    s_faithful = bool((_l_mask(ctx).all(axis=0)).sum() == 1)
    if not (r_faithful or s_faithful):
        return _vacuous(reason="neither side faithful")
    maximal = maximality_table(ctx)["maximal"]
    nonzero = np.arange(ctx.M.size) != ctx.M.zero
    if not nonzero.any():
        return _vacuous(reason="no nonzero element")
    bad = np.flatnonzero(nonzero & ~maximal)
    hyp = {"M_R faithful": r_faithful, "SM faithful": s_faithful}
    if len(bad):
        return _violated(hypothesis=hyp, **_upper_witness(ctx, int(bad[0])))
    return _holds(hypothesis=hyp)


def c_cor_cyclic(ctx, d):
    maximal = maximality_table(ctx)["maximal"]
    gen_r = ctx.M.orbit_masks.all(axis=1)
    gen_s = ctx.sm_masks.all(axis=1)
    hyp = gen_r | gen_s
    if not hyp.any():
        return _vacuous(reason="not cyclic on either side")
    bad = np.flatnonzero(hyp & ~maximal)
    if len(bad):
        return _violated(**_upper_witness(ctx, int(bad[0])))
    return _holds(generators=int(hyp.sum()))


def c_cor_torsion_free(ctx, d):
    if ctx.is_integers:
        return _vacuous(reason="no element of a finite group is integer torsion-free")
    maximal = maximality_table(ctx)["maximal"]
    tf = _r_mask(ctx).sum(axis=1) == 1
    if not tf.any():
        return _vacuous(reason="no torsion-free element")
    bad = np.flatnonzero(tf & ~maximal)
    if len(bad):
        return _violated(**_upper_witness(ctx, int(bad[0])))
    return _holds(torsion_free=int(tf.sum()))


def c_not_lattice(ctx, d):
    rep = lattice_report(ctx.poset("mitsch"))
    if rep.is_lattice:
        return _vacuous(reason="the Mitsch poset is a lattice here")
    payload = {}
    if rep.no_join:
        payload["no_join"] = _pair(ctx, *rep.no_join)
        payload["minimal_upper_bounds"] = [_name(ctx, z) for z in rep.join_candidates]
    if rep.no_meet:
        payload["no_meet"] = _pair(ctx, *rep.no_meet)
    return _holds(**payload)


# --- compatibility ---------------------------------------------------------------


def _preserves(bits: np.ndarray, P: np.ndarray, images: np.ndarray) -> tuple[int, int] | None:
    """First (map, pair) with the pair related but its image not; images[k] maps M -> M."""
    for lo in range(0, len(images), 64):
        block = images[lo:lo + 64]
        ok = bits[block[:, P[:, 0]], block[:, P[:, 1]]]
        if not ok.all():
            k, p = np.argwhere(~ok)[0]
            return lo + int(k), int(p)
    return None


def compatibility_report(ctx: OrderContext) -> dict[str, Any]:
    """Parts (1)-(6) of the scalar/endomorphism compatibility statement plus
    the additive check (m1 <= m2 implies m1 <= m2 + m2?)."""
    M = ctx.M
    R = M.scalars.ring
    bits = ctx.matrix("mitsch")
    P = _pairs(bits)
    E = ctx.E
    A_cols = M.action.T  # row b: x -> x·b
    s_units = np.flatnonzero(ctx.S.unit_mask)
    parts: dict[str, dict[str, Any]] = {}

    def run(label, images, names, hypothesis=True):
        if not hypothesis or not len(images):
            parts[label] = {"status": "vacuous", "maps": 0}
            return
        found = _preserves(bits, P, images)
        if found is None:
            parts[label] = {"status": "holds", "maps": int(len(images)), "pairs": int(len(P))}
        else:
            k, p = found
            m1, m2 = P[p]
            parts[label] = {
                "status": "fails",
                "map": names[k],
                "pair": _pair(ctx, m1, m2),
                "image": _pair(ctx, images[k][m1], images[k][m2]),
            }

    s_names = ctx.S.ring.elements
    r_names = R.elements
    r_units = np.array(ctx.rsub.units, dtype=np.int64)
    r_center = np.array(ctx.rsub.center, dtype=np.int64)
    s_center = np.array(ctx.ssub.center, dtype=np.int64)
    run("(1) unit g", E[s_units], [s_names[i] for i in s_units])
    run("(2) unit b", A_cols[r_units], [r_names[i] for i in r_units])
    run("(3) central b", A_cols[r_center], [r_names[i] for i in r_center])
    run("(4) central g", E[s_center], [s_names[i] for i in s_center])
    run("(5) right duo R", A_cols, list(r_names), ctx.rsub.is_duo_right)
    run("(6) left duo S", E, list(s_names), ctx.ssub.is_duo_left)

    # (1) and (2) are equivalences; forward preservation by a finite group of
    # permutations already forces the image set to equal the pair set
    twice = M.add[P[:, 1], P[:, 1]]
    add_bad = ~bits[P[:, 0], twice]
    additive = {"violations": int(add_bad.sum())}
    if add_bad.any():
        k = int(np.flatnonzero(add_bad)[0])
        additive["first"] = _pair(ctx, P[k][0], P[k][1])
    return {"parts": parts, "additive": additive, "duo": [ctx.rsub.is_duo_right, ctx.ssub.is_duo_left]}


def _compat_claim(label: str):
    def run(ctx, d):
        part = _compat_cached(ctx)["parts"][label]
        if part["status"] == "vacuous":
            return _vacuous(reason="hypothesis does not fire")
        if part["status"] == "fails":
            return _violated(**{k: v for k, v in part.items() if k != "status"})
        return _holds(maps=part["maps"], pairs=part["pairs"])

    return run


def _compat_cached(ctx: OrderContext) -> dict[str, Any]:
    if "_compat" not in ctx.__dict__:
        ctx.__dict__["_compat"] = compatibility_report(ctx)
    return ctx.__dict__["_compat"]


def c_ex_left_mult(ctx, d):
    M = ctx.M
    R = M.scalars.ring
    m1, m2 = _quoted(ctx, d, "m1"), _quoted(ctx, d, "m2")
    a, f, g = (_quoted(ctx, d, k) for k in ("a", "f", "g"))
    quoted = bool(R.mul[m2, a] == m1 and R.mul[f, m2] == m1 and R.mul[f, m1] == m1)
    g_idx = ctx.S.index_of(R.mul[g])
    gm1, gm2 = int(ctx.E[g_idx, m1]), int(ctx.E[g_idx, m2])
    cert = mitsch_leq(ctx, m1, m2)
    absent = confirm_absent(ctx, gm1, gm2)
    # the obstruction 3x = 4 has no solution mod 6
    base = 6
    obstruction = not any((3 * x) % base == 4 for x in range(base))
    payload = {
        "pair": _pair(ctx, m1, m2),
        "quoted_identities": quoted,
        "mitsch": cert.render(ctx) if cert else None,
        "g": R.elements[g],
        "image": _pair(ctx, gm1, gm2),
        "image_related": bool(ctx.matrix("mitsch")[gm1, gm2]),
        "no_solution_3x_eq_4_mod_6": obstruction,
        **absent,
    }
    if quoted and cert and replay(ctx, cert) and not payload["image_related"] and absent["exhaustive"] and obstruction:
        return _holds(**payload)
    return _violated(**payload)


def c_ex_additive(ctx, d):
    M = ctx.M
    R = M.scalars.ring
    m1, m2 = _quoted(ctx, d, "m1"), _quoted(ctx, d, "m2")
    a, f = _quoted(ctx, d, "a"), _quoted(ctx, d, "f")
    quoted = bool(R.mul[m2, a] == m1 and R.mul[f, m2] == m1 and R.mul[f, m1] == m1)
    twice = int(M.add[m2, m2])
    cert = mitsch_leq(ctx, m1, m2)
    zero_below = mitsch_leq(ctx, M.zero, m2) is not None
    # no b with (m2 + m2) b = m1 b = m1
    no_b = not bool(((M.action[twice] == m1) & (M.action[m1] == m1)).any())
    absent = confirm_absent(ctx, m1, twice)
    payload = {
        "pair": _pair(ctx, m1, m2),
        "quoted_identities": quoted,
        "mitsch": cert.render(ctx) if cert else None,
        "zero_below_m2": zero_below,
        "sum": _name(ctx, twice),
        "no_scalar": no_b,
        **absent,
    }
    if quoted and cert and zero_below and no_b and absent["exhaustive"]:
        return _holds(**payload)
    return _violated(**payload)


# --- integer multiples and epi/duo ---------------------------------------------------


def c_int_multiples_12(ctx, d):
    """(1) => (2): m1 <= m2 implies n·m1 <= m2 for every n."""
    bits = ctx.matrix("mitsch")
    mult = ctx.M.multiples
    P = _pairs(bits)
    for m1, m2 in P:
        for n in range(mult.shape[0]):
            x = int(mult[n, m1])
            if not bits[x, m2]:
                cert = mitsch_leq(ctx, int(m1), int(m2))
                return _violated(
                    pair=_pair(ctx, m1, m2),
                    n=n,
                    multiple=_name(ctx, x),
                    premise=cert.render(ctx),
                    **confirm_absent(ctx, x, int(m2)),
                )
    return _holds(pairs=len(P), n_range=[0, int(mult.shape[0]) - 1])


def c_int_multiples_13(ctx, d):
    """(1) <=> (3): m1 <= m2 iff n·m1 <= n·m2 for every n."""
    bits = ctx.matrix("mitsch")
    mult = ctx.M.multiples
    every = np.ones_like(bits)
    for n in range(mult.shape[0]):
        every &= bits[np.ix_(mult[n], mult[n])]
    diff = _first_difference(bits, every)
    if diff:
        return _violated(pair=_pair(ctx, *diff), direction="(1)=>(3)" if bits[diff] else "(3)=>(1)")
    return _holds(n_range=[0, int(mult.shape[0]) - 1], pairs=int(bits.sum()))


def _fully_invariant_cyclic(ctx) -> np.ndarray:
    # mR is fully invariant iff f(m) ∈ mR for every f
    return ~(ctx.sm_masks & ~ctx.M.orbit_masks).any(axis=1)


def _epi_images(ctx) -> np.ndarray:
    """[m]: some endomorphism maps M onto mR."""
    n = ctx.M.size
    images = np.zeros((len(ctx.E), n), dtype=bool)
    images[np.arange(len(ctx.E))[:, None], ctx.E] = True
    codes = {row.tobytes() for row in np.packbits(images, axis=1)}
    orbit_codes = np.packbits(ctx.M.orbit_masks, axis=1)
    return np.array([row.tobytes() in codes for row in orbit_codes])


def _check_below(ctx, pairs: np.ndarray, label: str, extra: np.ndarray) -> Outcome:
    bits = ctx.matrix("mitsch")
    bad = ~bits[pairs[:, 0], pairs[:, 1]]
    if bad.any():
        k = int(np.flatnonzero(bad)[0])
        lo, m = pairs[k]
        return _violated(element=_name(ctx, m), **{label: extra[k]}, image=_name(ctx, lo), **confirm_absent(ctx, int(lo), int(m)))
    return _holds(checked=len(pairs))


def _idempotent_images(ctx, ms: np.ndarray, side: str):
    if side == "S":
        idem = np.array(ctx.ssub.idempotents)
        names = ctx.S.ring.elements
        lo = ctx.E[idem][:, ms]  # f(m)
    else:
        idem = np.array(ctx.rsub.idempotents)
        names = ctx.M.scalars.ring.elements
        lo = ctx.A[ms][:, idem].T  # m·e
    pairs = np.column_stack([lo.ravel(), np.tile(ms, len(idem))])
    labels = np.repeat(np.array([names[i] for i in idem], dtype=object), len(ms))
    return pairs, labels


def c_epi_duo_1(ctx, d):
    ms = np.flatnonzero(_fully_invariant_cyclic(ctx))
    pairs, labels = _idempotent_images(ctx, ms, "S")
    return _check_below(ctx, pairs, "f", labels)


def c_epi_duo_2(ctx, d):
    ms = np.flatnonzero(_epi_images(ctx))
    pairs, labels = _idempotent_images(ctx, ms, "R")
    return _check_below(ctx, pairs, "e", labels)


def c_cor_duo(ctx, d):
    fi = _fully_invariant_cyclic(ctx)
    if not fi.all():
        return _vacuous(reason="module is not duo", witness=_name(ctx, int(np.flatnonzero(~fi)[0])))
    pairs, labels = _idempotent_images(ctx, np.arange(ctx.M.size), "S")
    return _check_below(ctx, pairs, "f", labels)


def c_cor_epi(ctx, d):
    epi = _epi_images(ctx)
    if not epi.all():
        return _vacuous(reason="some mR is not an image of M", witness=_name(ctx, int(np.flatnonzero(~epi)[0])))
    pairs, labels = _idempotent_images(ctx, np.arange(ctx.M.size), "R")
    return _check_below(ctx, pairs, "e", labels)


# --- registry ---------------------------------------------------------------------

CLAIMS: tuple[Claim, ...] = (
    Claim("Prop-mitschdenklik", "the three witness forms give the same relation", c_three_forms),
    Claim("Thm-mitsch", "Mitsch is a partial order; space is a pre-order", c_partial_order),
    Claim("Thm-nlidenklikler", "power witness forms n=1..4 give the Mitsch relation", c_power_forms),
    Claim("Cor-ring-powers", "ring form of the power characterization", c_ring_powers),
    Claim("Prop-mitschann", "related pairs satisfy the four annihilator/ideal inclusions", c_mitschann),
    Claim("Ex-2.8", "the four inclusions hold but the pair is unrelated", c_inclusions_not_converse, ("m2z5",)),
    Claim("Prop-summand-lift", "order on a direct summand lifts to M", _transfer_claim("summand")),
    Claim("Prop-invariant-restrict", "order on M restricts to a fully invariant N", _transfer_claim("restrict")),
    Claim("Prop-quotient-descend", "order on M descends to M/N for fully invariant N", _transfer_claim("quotient")),
    Claim("Cor-ring-quotient", "order on R descends to R/I", _transfer_claim("quotient", ideals_only=True)),
    Claim("Prop-minussamitsch", "minus implies Mitsch; equal on regular modules", c_minus_in_mitsch),
    Claim("Ex-mitschminuscounterex", "6 <= 2 under Mitsch but not minus on Z_12", c_ex_zero_dual, ("zmod12",)),
    Claim("Prop-jonessamitsch", "Jones implies Mitsch", _inclusion_claim("jones", "mitsch")),
    Claim(
        "Ex-MitJon",
        "Mitsch without Jones over an idempotent-free semigroup ring",
        None,
        out_of_scope="infinite carrier; the search property mitsch-not-jones supplies a finite witness",
    ),
    Claim("Thm-mitschsejones-(1)", "Mitsch implies Jones when m2 has zero annihilators", c_mitsch_jones_faithful),
    Claim("Thm-mitschsejones-(2)", "Mitsch implies Jones when m1 is regular", c_mitsch_jones_regular),
    Claim("Prop-mitschseoplus", "Mitsch implies direct-sum; equal on regular modules", c_mitsch_in_dsum),
    Claim("Ex-3.7", "direct-sum pair that is not Mitsch", c_ex_dsum_not_mitsch, ("ex3.7-z2",)),
    Claim("Prop-mitschsespace", "Mitsch implies space", _inclusion_claim("mitsch", "space")),
    Claim("Ex-3.9", "space pair that is not Mitsch", c_ex_space_not_mitsch, ("ex3.9-z8",)),
    Claim("Prop-minussajones", "minus implies Jones", _inclusion_claim("minus", "jones")),
    Claim("Ex-Zn-jones-not-minus", "m <=_J m but not m <=^- m for m != 0 over the integers", c_zn_jones_not_minus),
    Claim("Rem-morita-idempotents", "m = m φ m makes φm and mφ idempotent", c_morita_idempotents),
    Claim("Thm-maxicin", "consequences (1)-(6) for every related pair", c_maxicin),
    Claim("Thm-maxelement", "each of the six conditions implies maximality", c_maxelement),
    Claim("Cor-maximal-(1)", "faithful modules have every nonzero element maximal", c_cor_faithful, audit=True),
    Claim("Cor-maximal-(2)", "a cyclic generator is maximal", c_cor_cyclic),
    Claim("Cor-maximal-(3)", "torsion-free elements are maximal", c_cor_torsion_free),
    Claim("Rem-not-lattice", "the Mitsch poset need not be a lattice", c_not_lattice),
    Claim("Ex-compatiblemultiplication", "left multiplication breaks the order", c_ex_left_mult, ("u2z6",)),
    Claim("Prop-mitschinvertible-(1)", "unit endomorphisms preserve the order", _compat_claim("(1) unit g")),
    Claim("Prop-mitschinvertible-(2)", "unit scalars preserve the order", _compat_claim("(2) unit b")),
    Claim("Prop-mitschinvertible-(3)", "central scalars preserve the order", _compat_claim("(3) central b")),
    Claim("Prop-mitschinvertible-(4)", "central endomorphisms preserve the order", _compat_claim("(4) central g")),
    Claim("Prop-mitschinvertible-(5)", "right duo R: all scalars preserve the order", _compat_claim("(5) right duo R")),
    Claim("Prop-mitschinvertible-(6)", "left duo S: all endomorphisms preserve it", _compat_claim("(6) left duo S")),
    Claim("Ex-additive-incompatibility", "m1 <= m2 but not m1 <= m2 + m2", c_ex_additive, ("m2z7",)),
    Claim("Prop-integer-multiples-(1)=>(2)", "m1 <= m2 implies n m1 <= m2", c_int_multiples_12, audit=True),
    Claim("Prop-integer-multiples-(1)<=>(3)", "m1 <= m2 iff n m1 <= n m2 for all n", c_int_multiples_13),
    Claim("Prop-epi-duo-(1)", "mR fully invariant gives f(m) <= m for idempotent f", c_epi_duo_1),
    Claim("Prop-epi-duo-(2)", "mR an image of M gives m e <= m for idempotent e", c_epi_duo_2, audit=True),
    Claim("Cor-epi-duo-(1)", "duo modules: f(m) <= m for idempotent f", c_cor_duo),
    Claim("Cor-epi-duo-(2)", "every mR an image of M: m e <= m for idempotent e", c_cor_epi, audit=True),
)


def claim_ids() -> list[str]:
    return [c.id for c in CLAIMS]


def get_claim(cid: str) -> Claim:
    for c in CLAIMS:
        if c.id == cid:
            return c
    raise UnknownClaimId(f"unknown claim id {cid!r}")


def _status(claim: Claim, out: Outcome) -> str:
    if out.verdict == "violated":
        return "audit-finding" if claim.audit else "fails"
    return out.verdict


def check_claim(claim: Claim, instance: str) -> ClaimCheck:
    start = time.perf_counter()
    try:
        ctx = context(instance)
        out = claim.fn(ctx, descriptor(instance))
    except CapacityExceeded as exc:
        out = _vacuous(skipped=str(exc))
    return ClaimCheck(claim.id, instance, _status(claim, out), out.payload, time.perf_counter() - start)


def run_suite(catalog: Iterable[str] | None = None, claims: Iterable[str] | None = None) -> list[ClaimCheck]:
    """Run claims over instances; order is registry order, then catalog order."""
    names = list(catalog) if catalog is not None else catalog_names()
    for n in names:
        descriptor(n)
    selected = [get_claim(c) for c in claims] if claims is not None else list(CLAIMS)
    out: list[ClaimCheck] = []
    for claim in selected:
        if claim.out_of_scope:
            out.append(ClaimCheck(claim.id, "-", "vacuous", {"out_of_scope": claim.out_of_scope}))
            continue
        for name in names:
            if claim.only is not None and name not in claim.only:
                continue
            out.append(check_claim(claim, name))
    return out


def summarize(checks: list[ClaimCheck]) -> dict[str, int]:
    counts = {s: 0 for s in STATUSES}
    for c in checks:
        counts[c.status] += 1
    return counts


def report_json(checks: list[ClaimCheck]) -> str:
    doc = {"format": 1, "summary": summarize(checks), "checks": [c.to_json() for c in checks]}
    return json.dumps(doc, indent=1, sort_keys=True, default=_json_default) + "\n"


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.bool_):
        return bool(o)
    raise TypeError(f"not serializable: {type(o).__name__}")


# --- implication diagram -------------------------------------------------------------

ASSERTED = (("minus", "jones"), ("jones", "mitsch"), ("minus", "mitsch"), ("mitsch", "dsum"), ("mitsch", "space"))


@dataclass(frozen=True)
class StrictWitness:
    edge: tuple[str, str]
    pair: tuple[int, int] | None
    names: tuple[str, str] | None
    certificate: dict[str, Any] | None


@dataclass(frozen=True)
class ImplicationReport:
    instance: str
    relations: tuple[str, ...]
    inclusion: np.ndarray
    asserted_hold: dict[tuple[str, str], bool]
    witnesses: tuple[StrictWitness, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "relations": list(self.relations),
            "inclusion": self.inclusion.astype(int).tolist(),
            "asserted": {f"{a}<={b}": ok for (a, b), ok in self.asserted_hold.items()},
            "strict": {
                f"{w.edge[0]}<{w.edge[1]}": list(w.names) if w.names else "not separated on this instance"
                for w in self.witnesses
            },
        }


def _quoted_pairs(ctx: OrderContext, d: InstanceDescriptor) -> list[tuple[int, int]]:
    return [(ctx.M.index(a), ctx.M.index(b)) for a, b in d.pairs]


def _first_in(ctx, d, mask: np.ndarray) -> tuple[int, int] | None:
    for p in _quoted_pairs(ctx, d):
        if mask[p]:
            return p
    hit = np.argwhere(mask)
    return (int(hit[0][0]), int(hit[0][1])) if len(hit) else None


def implication_report(instance: str) -> ImplicationReport:
    ctx, d = context(instance), descriptor(instance)
    mats = {r: ctx.matrix(r) for r in RELATIONS}
    inc = np.array([[not (mats[a] & ~mats[b]).any() for b in RELATIONS] for a in RELATIONS])
    asserted = {(a, b): bool(inc[RELATIONS.index(a), RELATIONS.index(b)]) for a, b in ASSERTED}
    witnesses = []
    for a, b in ASSERTED:
        p = _first_in(ctx, d, mats[b] & ~mats[a])
        if p is None:
            witnesses.append(StrictWitness((a, b), None, None, None))
            continue
        cert = decide(ctx, b, *p)
        witnesses.append(StrictWitness((a, b), p, tuple(_pair(ctx, *p)), cert.render(ctx)))
    return ImplicationReport(instance, RELATIONS, inc, asserted, tuple(witnesses))


def regularity_bridge_check(instance: str) -> dict[str, Any]:
    ctx = context(instance)
    out: dict[str, Any] = {"instance": instance, "regular": ctx.is_regular, "equalities": {}}
    for a, b in (("minus", "mitsch"), ("mitsch", "dsum")):
        diff = _first_in(ctx, descriptor(instance), ctx.matrix(a) != ctx.matrix(b))
        out["equalities"][f"{a}={b}"] = True if diff is None else _pair(ctx, *diff)
    out["holds"] = (not ctx.is_regular) or all(v is True for v in out["equalities"].values())
    return out


# --- counterexample search ------------------------------------------------------------

PROPERTIES = (
    "space-not-mitsch",
    "dsum-not-mitsch",
    "mitsch-not-jones",
    "jones-not-minus",
    "inclusions-hold-but-not-mitsch",
    "mitsch-not-addition-compatible",
    "mitsch-not-left-mult-compatible",
    "mitsch-poset-not-lattice",
)

# declared proxy instances, replayed before the exhaustive catalog scan
ANCHORS: dict[str, tuple[str, int]] = {
    "space-not-mitsch": ("ex3.9-z8", 0),
    "dsum-not-mitsch": ("ex3.7-z2", 0),
    "mitsch-not-jones": ("zmod12", 0),
    "jones-not-minus": ("zmod12", 1),
    "inclusions-hold-but-not-mitsch": ("m2z5", 0),
    "mitsch-not-addition-compatible": ("m2z7", 0),
    "mitsch-not-left-mult-compatible": ("u2z6", 0),
}

_DIFFERENCE = {
    "space-not-mitsch": ("space", "mitsch"),
    "dsum-not-mitsch": ("dsum", "mitsch"),
    "mitsch-not-jones": ("mitsch", "jones"),
    "jones-not-minus": ("jones", "minus"),
}


@dataclass(frozen=True)
class SearchResult:
    property: str
    found: bool
    instance: str | None = None
    pair: tuple[str, str] | None = None
    positive: dict[str, Any] | None = None
    negative: dict[str, Any] | None = None

    def to_json(self) -> dict[str, Any]:
        if not self.found:
            return {"property": self.property, "found": False, "result": "NotFound"}
        return {
            "property": self.property,
            "found": True,
            "instance": self.instance,
            "pair": list(self.pair),
            "positive": self.positive,
            "negative": self.negative,
        }


def _candidates(ctx, mask: np.ndarray, anchor: tuple[int, int] | None) -> tuple[int, int] | None:
    if anchor is not None and mask[anchor]:
        return anchor
    hit = np.argwhere(mask)
    return (int(hit[0][0]), int(hit[0][1])) if len(hit) else None


def _inclusions_mask(ctx) -> np.ndarray:
    l, r = _l_mask(ctx), _r_mask(ctx)
    M = ctx.M
    ok = ctx.matrix("space").copy()  # m1R in m2R and Sm1 in Sm2
    I, J = np.nonzero(ok)
    good = ~_rows_subset(l, J, I) & ~_rows_subset(r, J, I)
    out = np.zeros((M.size, M.size), dtype=bool)
    out[I[good], J[good]] = True
    return out


def _search_instance(prop: str, name: str, anchor_pair) -> SearchResult | None:
    ctx = context(name)
    M = ctx.M
    bits = ctx.matrix("mitsch")
    if prop in _DIFFERENCE:
        pos, neg = _DIFFERENCE[prop]
        p = _candidates(ctx, ctx.matrix(pos) & ~ctx.matrix(neg), anchor_pair)
        if p is None:
            return None
        cert = decide(ctx, pos, *p)
        negative = {"relation": neg, "absent": decide(ctx, neg, *p) is None}
        if neg == "mitsch":
            negative.update(confirm_absent(ctx, *p))
        return SearchResult(prop, True, name, tuple(_pair(ctx, *p)), cert.render(ctx), negative)
    if prop == "inclusions-hold-but-not-mitsch":
        p = _candidates(ctx, _inclusions_mask(ctx) & ~bits, anchor_pair)
        if p is None:
            return None
        neg = {"relation": "mitsch", **confirm_absent(ctx, *p)}
        return SearchResult(prop, True, name, tuple(_pair(ctx, *p)), {"inclusions": _four_inclusions(ctx, *p)}, neg)
    if prop == "mitsch-not-addition-compatible":
        twice = M.add[np.arange(M.size), np.arange(M.size)]
        mask = bits & ~bits[:, twice]
        p = _candidates(ctx, mask, anchor_pair)
        if p is None:
            return None
        t = int(twice[p[1]])
        neg = {"relation": "mitsch", "pair": _pair(ctx, p[0], t), **confirm_absent(ctx, p[0], t)}
        return SearchResult(prop, True, name, tuple(_pair(ctx, *p)), mitsch_leq(ctx, *p).render(ctx), neg)
    if prop == "mitsch-not-left-mult-compatible":
        return _search_left_mult(ctx, name, anchor_pair)
    if prop == "mitsch-poset-not-lattice":
        rep = lattice_report(ctx.poset("mitsch"))
        if rep.is_lattice:
            return None
        p = rep.no_join or rep.no_meet
        kind = "join" if rep.no_join else "meet"
        bounds = rep.join_candidates if rep.no_join else rep.meet_candidates
        return SearchResult(
            prop, True, name, tuple(_pair(ctx, *p)), {"missing": kind}, {"extremal_bounds": [_name(ctx, z) for z in bounds]}
        )
    raise UnknownClaimId(f"unknown search property {prop!r}")


def _search_left_mult(ctx, name, anchor) -> SearchResult | None:
    bits = ctx.matrix("mitsch")
    E = ctx.E
    g = None
    if anchor is not None:
        d = descriptor(name)
        R = ctx.M.scalars.ring
        gi = ctx.S.index_of(R.mul[R.index(d.quoted["g"])])
        m1, m2 = anchor
        if bits[anchor] and not bits[E[gi, m1], E[gi, m2]]:
            g, p = gi, anchor
    if g is None:
        P = _pairs(bits)
        best = None
        for lo in range(0, len(E), 64):
            block = E[lo:lo + 64]
            bad = ~bits[block[:, P[:, 0]], block[:, P[:, 1]]]
            if bad.any():
                k, q = np.argwhere(bad.T)[0]  # first pair, then first g
                cand = (int(k), lo + int(q))
                best = cand if best is None or cand < best else best
        if best is None:
            return None
        p, g = tuple(int(v) for v in P[best[0]]), best[1]
    gm1, gm2 = int(E[g, p[0]]), int(E[g, p[1]])
    neg = {"relation": "mitsch", "g": ctx.S.ring.elements[g], "pair": _pair(ctx, gm1, gm2), **confirm_absent(ctx, gm1, gm2)}
    return SearchResult("mitsch-not-left-mult-compatible", True, name, tuple(_pair(ctx, *p)), mitsch_leq(ctx, *p).render(ctx), neg)


def search_counterexample(catalog: Iterable[str] | None, prop: str) -> SearchResult:
    """First instance and pair exhibiting ``prop``: declared proxy first, then a
    row-major scan of every selected instance in catalog order."""
    if prop not in PROPERTIES:
        raise UnknownClaimId(f"unknown search property {prop!r}")
    names = list(catalog) if catalog is not None else catalog_names()
    anchor = ANCHORS.get(prop)
    if anchor and anchor[0] in names:
        name, k = anchor
        ctx = context(name)
        pair = _quoted_pairs(ctx, descriptor(name))[k]
        res = _search_instance(prop, name, pair)
        if res is not None and res.pair == tuple(_pair(ctx, *pair)):
            return res
    for name in names:
        res = _search_instance(prop, name, None)
        if res is not None:
            return res
    return SearchResult(prop, False)
