"""Module homomorphisms between finite modules.

Maps are stored as index vectors: row ``h`` of ``HomTable.maps`` sends source
element ``x`` to target element ``maps[h, x]``.  Endomorphisms compose as
``(f*g)(m) = f(g(m))`` so ring products read like operators written on the
left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .algebra import (
    IDX,
    MAX_ORDER,
    FiniteModule,
    FiniteRing,
    Submodule,
    regular_representation,
    validate_ring,
)
from .errors import CapacityExceeded, EndomorphismNotFound, ScalarMismatch

# exhaustive re-verification runs while maps * |M| * (|M| + |R|) stays below this
VERIFY_BUDGET = 2 * 10**8


def generating_sequence(M: FiniteModule) -> tuple[int, ...]:
    """Greedy module generators: largest cyclic submodule first, lowest index on ties."""
    span = np.zeros(M.size, dtype=bool)
    span[M.zero] = True
    sizes = M.orbit_sizes
    gens = []
    while not span.all():
        outside = np.flatnonzero(~span)
        g = int(outside[np.argmax(sizes[outside])])
        gens.append(g)
        sidx = np.flatnonzero(span)
        orbit = np.flatnonzero(M.orbit_masks[g])
        span[M.add[np.ix_(sidx, orbit)]] = True
    return tuple(gens)


@dataclass(frozen=True, eq=False)
class HomTable:
    """Enumerated module maps ``source -> target``.

    ``target`` is None for the dual of an integer-scalar module, whose only
    member is the zero map into the integers (stored as residue 0).
    """

    source: FiniteModule
    target: FiniteModule | None
    maps: np.ndarray
    generators: tuple[int, ...]

    def __len__(self) -> int:
        return self.maps.shape[0]

    @cached_property
    def keys(self) -> np.ndarray:
        return self.maps[:, list(self.generators)]

    @cached_property
    def _radix(self) -> int:
        return self.target.size if self.target is not None else 1

    def _encode(self, keys: np.ndarray):
        k = keys.shape[-1]
        if k == 0:
            return np.zeros(keys.shape[:-1], dtype=np.int64)
        if float(self._radix) ** k < 2**62:
            w = self._radix ** np.arange(k - 1, -1, -1, dtype=np.int64)
            return (keys.astype(np.int64) * w).sum(axis=-1)
        return None

    @cached_property
    def _lookup(self):
        codes = self._encode(self.keys)
        if codes is None:
            return {tuple(int(v) for v in row): i for i, row in enumerate(self.keys)}
        order = np.argsort(codes, kind="stable")
        return codes[order], order

    def index_by_keys(self, keys: np.ndarray) -> np.ndarray:
        """Indices of maps with the given generator images (-1 when absent)."""
        keys = np.asarray(keys)
        lk = self._lookup
        if isinstance(lk, dict):
            flat = keys.reshape(-1, keys.shape[-1])
            out = np.array([lk.get(tuple(int(v) for v in row), -1) for row in flat])
            return out.reshape(keys.shape[:-1])
        sorted_codes, order = lk
        codes = self._encode(keys)
        pos = np.searchsorted(sorted_codes, codes)
        pos = np.clip(pos, 0, len(sorted_codes) - 1)
        hit = sorted_codes[pos] == codes
        return np.where(hit, order[pos], -1)

    def index_of(self, vec) -> int | None:
        """Index of the map equal to ``vec`` on every source element, or None."""
        vec = np.asarray(vec)
        i = int(self.index_by_keys(vec[list(self.generators)]))
        if i < 0 or not np.array_equal(self.maps[i], vec):
            return None
        return i

    @cached_property
    def zero_index(self) -> int:
        tz = self.target.zero if self.target is not None else 0
        i = self.index_of(np.full(self.source.size, tz))
        assert i is not None
        return i


def _check_scalars(src: FiniteModule, tgt: FiniteModule) -> None:
    if not src.scalars.same_as(tgt.scalars):
        raise ScalarMismatch("source and target have different scalar rings")


def verify_maps(src: FiniteModule, tgt: FiniteModule, maps: np.ndarray) -> None:
    """Re-check additivity and linearity of every map; raise on failure.

    Within ``VERIFY_BUDGET`` every pair is checked.  Above it the check runs
    over additive generators, which is equivalent for maps between groups:
    h(x + g) = h(x) + h(g) for all x and generators g gives additivity, and
    linearity of an additive map needs only to hold on additive generators.
    """
    n_maps = maps.shape[0]
    if n_maps == 0:
        return
    cost = n_maps * src.size * (src.size + src.scalars.size)
    if cost <= VERIFY_BUDGET:
        for h in maps:
            if not np.array_equal(h[src.add], tgt.add[h[:, None], h[None, :]]):
                raise EndomorphismNotFound("enumerated map is not additive")
            if not np.array_equal(h[src.action], tgt.action[h, :]):
                raise EndomorphismNotFound("enumerated map is not linear")
        return
    gens = src.additive_generators
    for g in gens:
        lhs = maps[:, src.add[:, g]]
        rhs = tgt.add[maps, maps[:, g][:, None]]
        if not np.array_equal(lhs, rhs):
            raise EndomorphismNotFound("enumerated map is not additive")
    for g in gens:
        lhs = maps[:, src.action[g]]
        rhs = tgt.action[maps[:, g], :]
        if not np.array_equal(lhs, rhs):
            raise EndomorphismNotFound("enumerated map is not linear")


def enumerate_hom(src: FiniteModule, tgt: FiniteModule, limit: int = MAX_ORDER) -> HomTable:
    """All module maps src -> tgt, in lexicographic order of generator images.

    Depth-first over generators: a candidate image for the next generator is
    kept only if the map it induces on the enlarged span is well defined.
    """
    _check_scalars(src, tgt)
    gens = generating_sequence(src)
    n_src = src.size
    found: list[np.ndarray] = []
    prepared = []
    for g in gens:
        gr = src.action[g]
        ann = np.flatnonzero(gr == src.zero)
        ok = (tgt.action[:, ann] == tgt.zero).all(axis=1)
        prepared.append((gr, np.flatnonzero(ok)))

    def dfs(depth: int, se: np.ndarray, sv: np.ndarray) -> None:
        if depth == len(gens):
            img = np.empty(n_src, dtype=IDX)
            img[se] = sv
            found.append(img)
            if len(found) > limit:
                raise CapacityExceeded(f"more than {limit} homomorphisms")
            return
        gr, candidates = prepared[depth]
        new_e = src.add[se[:, None], gr[None, :]].ravel()
        for y in candidates:
            new_v = tgt.add[sv[:, None], tgt.action[y][None, :]].ravel()
            img = np.full(n_src, -1, dtype=np.int64)
            img[new_e] = new_v
            if not np.array_equal(img[new_e], new_v):
                continue
            ue = np.flatnonzero(img >= 0)
            dfs(depth + 1, ue, img[ue])

    dfs(0, np.array([src.zero]), np.array([tgt.zero]))
    maps = np.array(found, dtype=IDX).reshape(len(found), n_src)
    verify_maps(src, tgt, maps)
    maps.setflags(write=False)
    return HomTable(src, tgt, maps, gens)


def hom_oracle_bruteforce(src: FiniteModule, tgt: FiniteModule) -> HomTable:
    """Filter every set map src -> tgt by additivity and linearity.

    Candidates are grown one source position at a time and each law is
    applied as soon as all positions it mentions are assigned, which keeps
    memory small without skipping any set map.  Only for |src| <= 8.
    """
    if src.size > 8:
        raise CapacityExceeded("brute-force oracle is limited to 8 source elements")
    _check_scalars(src, tgt)
    n = src.size
    checks: list[list[tuple]] = [[] for _ in range(n)]
    for x in range(n):
        for y in range(n):
            z = int(src.add[x, y])
            checks[max(x, y, z)].append(("add", x, y, z))
        for r in range(src.scalars.size):
            z = int(src.action[x, r])
            checks[max(x, z)].append(("act", x, r, z))
    cand = np.zeros((1, 0), dtype=np.int64)
    for p in range(n):
        vals = np.arange(tgt.size)
        cand = np.hstack([np.repeat(cand, tgt.size, axis=0), np.tile(vals, len(cand))[:, None]])
        keep = np.ones(len(cand), dtype=bool)
        for kind, x, y, z in checks[p]:
            if kind == "add":
                keep &= cand[:, z] == tgt.add[cand[:, x], cand[:, y]]
            else:
                keep &= cand[:, z] == tgt.action[cand[:, x], y]
        cand = cand[keep]
    order = np.lexsort(cand.T[::-1]) if len(cand) else np.arange(0)
    maps = cand[order].astype(IDX)
    maps.setflags(write=False)
    return HomTable(src, tgt, maps, generating_sequence(src))


@dataclass(frozen=True, eq=False)
class EndRing:
    """End(M) as a finite ring: pointwise addition, composition as product."""

    hom: HomTable
    ring: FiniteRing

    @property
    def maps(self) -> np.ndarray:
        return self.hom.maps

    @property
    def size(self) -> int:
        return self.ring.size

    def index_of(self, vec) -> int | None:
        return self.hom.index_of(vec)

    @cached_property
    def idempotents(self) -> np.ndarray:
        ar = np.arange(self.size)
        return np.flatnonzero(self.ring.mul[ar, ar] == ar)

    @cached_property
    def unit_mask(self) -> np.ndarray:
        hits = self.ring.mul == self.ring.one
        return (hits & hits.T).any(axis=1)

    @cached_property
    def center(self) -> np.ndarray:
        mul = self.ring.mul
        return np.flatnonzero((mul == mul.T).all(axis=1))


def _map_names(M: FiniteModule, hom: HomTable) -> list[str]:
    scalar_key = {}
    for r in range(M.scalars.size):
        key = tuple(int(v) for v in M.action[list(hom.generators), r])
        scalar_key.setdefault(key, r)
    R = M.scalars.ring
    regular = M.regular_ring
    names = []
    for i, key in enumerate(hom.keys):
        k = tuple(int(v) for v in key)
        r = scalar_key.get(k)
        if r is not None and np.array_equal(hom.maps[i], M.action[:, r]):
            names.append("*" + R.elements[r])
        elif regular is not None:
            # on R_R every endomorphism is x -> a·x with a = f(1)
            names.append("L" + R.elements[int(hom.maps[i, regular.one])])
        else:
            names.append(
                "{" + ",".join(f"{M.elements[g]}->{M.elements[v]}" for g, v in zip(hom.generators, k)) + "}"
            )
    return names


def end_ring(M: FiniteModule, hom: HomTable | None = None) -> EndRing:
    hom = hom if hom is not None else enumerate_hom(M, M)
    E = hom.maps
    K = hom.keys
    n = len(hom)
    if len(hom.generators):
        add_keys = M.add[K[:, None, :], K[None, :, :]]
        mul_keys = E[:, K]
    else:
        add_keys = np.zeros((n, n, 0), dtype=IDX)
        mul_keys = np.zeros((n, n, 0), dtype=IDX)
    add = hom.index_by_keys(add_keys)
    mul = hom.index_by_keys(mul_keys)
    if (add < 0).any() or (mul < 0).any():
        raise EndomorphismNotFound("End(M) is not closed under + or composition")
    zero = hom.index_of(np.full(M.size, M.zero))
    one = hom.index_of(np.arange(M.size))
    if zero is None or one is None:
        raise EndomorphismNotFound("zero or identity map missing")
    ring = validate_ring(_map_names(M, hom), add, mul, zero, one)
    return EndRing(hom, ring)


def dual_module(M: FiniteModule) -> HomTable:
    """M* = Hom(M, R_R); for integer scalars this is {0} without enumeration."""
    gens = generating_sequence(M)
    if M.scalars.is_integers:
        maps = np.zeros((1, M.size), dtype=IDX)
        maps.setflags(write=False)
        return HomTable(M, None, maps, gens)
    return enumerate_hom(M, regular_representation(M.scalars.ring))


# --- Morita context and element predicates --------------------------------


def morita_products(M: FiniteModule, S: EndRing, dual: HomTable, m: int, phi: int) -> tuple[int, int]:
    """(φm as a scalar index, mφ as an index into S)."""
    vals = dual.maps[phi]
    m_phi = M.action[m, vals]
    f = S.index_of(m_phi)
    if f is None:
        raise EndomorphismNotFound(f"x -> m·φ(x) is not in End(M) for m={m}, φ={phi}")
    return int(vals[m]), f


def regular_witnesses(M: FiniteModule, dual: HomTable) -> np.ndarray:
    """First φ with m = m·φ(m) for each m, or -1."""
    ar = np.arange(M.size)
    ok = M.action[ar[None, :], dual.maps[:, ar]] == ar[None, :]
    first = np.argmax(ok, axis=0)
    return np.where(ok.any(axis=0), first, -1)


def is_regular_element(M: FiniteModule, dual: HomTable, m: int) -> int | None:
    vals = dual.maps[:, m]
    hit = np.flatnonzero(M.action[m, vals] == m)
    return int(hit[0]) if len(hit) else None


def is_regular_module(M: FiniteModule, dual: HomTable) -> bool:
    return bool((regular_witnesses(M, dual) >= 0).all())


@dataclass(frozen=True)
class Invertibility:
    left_invertible: bool
    right_invertible: bool


def invertibility_masks(M: FiniteModule, dual: HomTable) -> tuple[np.ndarray, np.ndarray]:
    """Per-element left/right invertibility in the standard Morita context."""
    if M.scalars.is_integers:
        left = np.zeros(M.size, dtype=bool)  # φ = 0 never reaches 1 in the integers
    else:
        left = (dual.maps == M.scalars.ring.one).any(axis=0)
    gens = list(dual.generators)
    if not gens:
        right = np.ones(M.size, dtype=bool)
    else:
        # mφ is a module map, so it is the identity iff it fixes every generator
        vals = dual.maps[:, gens]
        hits = M.action[np.arange(M.size)[:, None, None], vals[None, :, :]] == np.asarray(gens)
        right = hits.all(axis=2).any(axis=1)
    return left, right


def invertibility(M: FiniteModule, dual: HomTable, m: int) -> Invertibility:
    if M.scalars.is_integers:
        left = False
    else:
        left = bool((dual.maps[:, m] == M.scalars.ring.one).any())
    ident = np.arange(M.size)
    right = any(np.array_equal(M.action[m, vals], ident) for vals in dual.maps)
    return Invertibility(left, right)


def annihilators(M: FiniteModule, S: EndRing, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(l_S(m), r_R(m)) as index tuples; integer scalars use residues 0..N-1."""
    left = np.flatnonzero(S.maps[:, m] == M.zero)
    right = np.flatnonzero(M.action[m] == M.zero)
    return tuple(int(i) for i in left), tuple(int(i) for i in right)


def left_regular_isomorphism(R: FiniteRing, S: EndRing) -> np.ndarray:
    """iso[a] = index in S of x -> a·x; raises if this is not a ring isomorphism."""
    iso = np.array([S.index_of(R.mul[a]) if S.index_of(R.mul[a]) is not None else -1 for a in range(R.size)])
    if (iso < 0).any() or len(np.unique(iso)) != R.size or S.size != R.size:
        raise EndomorphismNotFound("left multiplications do not exhaust End(R_R)")
    if not np.array_equal(iso[R.add], S.ring.add[iso[:, None], iso[None, :]]):
        raise EndomorphismNotFound("left-regular map does not respect addition")
    if not np.array_equal(iso[R.mul], S.ring.mul[iso[:, None], iso[None, :]]):
        raise EndomorphismNotFound("left-regular map does not respect multiplication")
    return iso


def image_of(N: Submodule, maps: np.ndarray) -> np.ndarray:
    return np.unique(maps[:, list(N.members)])
