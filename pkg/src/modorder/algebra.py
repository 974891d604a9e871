"""Finite rings and finite right modules given by dense operation tables.

Elements are indices into an ordered carrier.  Names are for display only and
never take part in equality.  Every constructor runs the axiom scan, so any
``FiniteRing`` or ``FiniteModule`` handed out by this module is valid.

Axiom scans come in two flavours.  The exhaustive scan walks every pair or
triple.  The generator scan checks the same laws on a generating set of the
additive group and is a complete proof as well (Light's associativity test
plus multilinearity), which keeps rings with a few thousand elements cheap.
``strategy="auto"`` picks the exhaustive scan for small carriers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AxiomViolation,
    CapacityExceeded,
    IdentityNotInPattern,
    NotASubmodule,
    PatternNotClosed,
    ShapeError,
)

MAX_ORDER = 4096
EXHAUSTIVE_LIMIT = 128

IDX = np.int32


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=IDX)
    arr.setflags(write=False)
    return arr


def _table(raw, rows: int, cols: int, bound: int, what: str) -> np.ndarray:
    try:
        arr = np.asarray(raw, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ShapeError(f"{what} is not a rectangular integer table") from exc
    if arr.shape != (rows, cols):
        raise ShapeError(f"{what} has shape {arr.shape}, expected {(rows, cols)}")
    if rows and cols and (arr.min() < 0 or arr.max() >= bound):
        raise ShapeError(f"{what} holds an index outside 0..{bound - 1}")
    return _frozen(arr)


def _check_capacity(n: int, what: str) -> None:
    if n > MAX_ORDER:
        raise CapacityExceeded(f"{what} has {n} elements; the cap is {MAX_ORDER}")


def _first_false(mask: np.ndarray):
    bad = np.argwhere(~mask)
    return None if len(bad) == 0 else tuple(int(v) for v in bad[0])


def additive_generators(add: np.ndarray) -> list[int]:
    """Greedy generating set of the magma ``add`` (lowest index first).

    Each new generator lies outside the left-nested closure of the previous
    ones; for a finite group this is the subgroup they generate.
    """
    n = add.shape[0]
    gens: list[int] = []
    reached = np.zeros(n, dtype=bool)
    while not reached.all():
        g = int(np.flatnonzero(~reached)[0])
        gens.append(g)
        reached[g] = True
        g_arr = np.asarray(gens)
        while True:
            new = add[np.ix_(np.flatnonzero(reached), g_arr)].ravel()
            if reached[new].all():
                break
            reached[new] = True
    return gens


def _abelian_group_violation(add, zero, strategy):
    n = add.shape[0]
    exhaustive = strategy == "exhaustive" or (strategy == "auto" and n <= EXHAUSTIVE_LIMIT)
    if exhaustive:
        for a in range(n):
            lhs = add[add[a], :]
            rhs = add[a][add]
            w = _first_false(lhs == rhs)
            if w:
                return "additive associativity", (a, *w)
        w = _first_false(add == add.T)
        if w:
            return "additive commutativity", w
    else:
        gens = additive_generators(add)
        if len(gens) > 24:
            return _abelian_group_violation(add, zero, "exhaustive")
        for g in gens:
            # (x + g) + y == x + (g + y)
            lhs = add[add[:, g], :]
            rhs = add[:, add[g, :]]
            w = _first_false(lhs == rhs)
            if w:
                return "additive associativity", (w[0], g, w[1])
        for g in gens:
            w = _first_false(add[:, g] == add[g, :])
            if w:
                return "additive commutativity", (w[0], g)
    ar = np.arange(n)
    w = _first_false(add[zero, :] == ar)
    if w:
        return "additive identity", (zero, w[0])
    w = _first_false(add[:, zero] == ar)
    if w:
        return "additive identity", (w[0], zero)
    has_inv = (add == zero).any(axis=1)
    w = _first_false(has_inv)
    if w:
        return "additive inverse", w
    return None


def ring_violation(add, mul, zero, one, strategy="auto"):
    """First violated ring law as ``(law, elements)``, or None."""
    n = add.shape[0]
    found = _abelian_group_violation(add, zero, strategy)
    if found:
        return found
    exhaustive = strategy == "exhaustive" or (strategy == "auto" and n <= EXHAUSTIVE_LIMIT)
    if exhaustive:
        for a in range(n):
            w = _first_false(mul[mul[a], :] == mul[a][mul])
            if w:
                return "multiplicative associativity", (a, *w)
        for a in range(n):
            row = mul[a]
            # a(b + c) == ab + ac
            w = _first_false(row[add] == add[row[:, None], row[None, :]])
            if w:
                return "left distributivity", (a, *w)
            # (a + b)c == ac + bc
            w = _first_false(mul[add[a], :] == add[row[None, :], mul])
            if w:
                return "right distributivity", (a, *w)
    else:
        gens = additive_generators(add)
        for g in gens:
            w = _first_false(mul[:, add[:, g]] == add[mul, mul[:, g][:, None]])
            if w:
                return "left distributivity", (w[0], w[1], g)
            w = _first_false(mul[add[:, g], :] == add[mul, mul[g, :][None, :]])
            if w:
                return "right distributivity", (w[0], g, w[1])
        for a, b, c in itertools.product(gens, repeat=3):
            if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                return "multiplicative associativity", (a, b, c)
    ar = np.arange(n)
    w = _first_false(mul[one, :] == ar)
    if w:
        return "multiplicative identity", (one, w[0])
    w = _first_false(mul[:, one] == ar)
    if w:
        return "multiplicative identity", (w[0], one)
    return None


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A ring with identity on the carrier ``0..n-1``."""

    elements: tuple[str, ...]
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteRing(size={self.size})"

    @cached_property
    def neg(self) -> np.ndarray:
        rows, cols = np.nonzero(self.add == self.zero)
        out = np.empty(self.size, dtype=IDX)
        out[rows] = cols
        out.setflags(write=False)
        return out

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.elements)}

    def index(self, name: str) -> int:
        return self._index[name]

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    @cached_property
    def is_commutative(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def same_tables(self, other: "FiniteRing") -> bool:
        return (
            self is other
            or (
                self.size == other.size
                and self.zero == other.zero
                and self.one == other.one
                and np.array_equal(self.add, other.add)
                and np.array_equal(self.mul, other.mul)
            )
        )


def validate_ring(elements, add, mul, zero: int, one: int, strategy: str = "auto") -> FiniteRing:
    """Build a ring from raw tables, raising on the first broken axiom."""
    elements = tuple(str(e) for e in elements)
    n = len(elements)
    if n == 0:
        raise ShapeError("a ring needs at least one element")
    _check_capacity(n, "ring")
    if len(set(elements)) != n:
        raise ShapeError("element names are not unique")
    add_t = _table(add, n, n, n, "add")
    mul_t = _table(mul, n, n, n, "mul")
    if not (0 <= zero < n and 0 <= one < n):
        raise ShapeError("zero/one index out of range")
    found = ring_violation(add_t, mul_t, int(zero), int(one), strategy)
    if found:
        law, els = found
        raise AxiomViolation(law, els, tuple(elements[e] for e in els))
    return FiniteRing(elements, add_t, mul_t, int(zero), int(one))


def ring_zn(n: int) -> FiniteRing:
    if n < 1:
        raise ValueError("Z_n needs n >= 1")
    _check_capacity(n, "Z_n")
    ar = np.arange(n)
    return validate_ring(
        [str(i) for i in range(n)],
        (ar[:, None] + ar[None, :]) % n,
        (ar[:, None] * ar[None, :]) % n,
        0,
        1 % n,
    )


def _render_matrix(names: Sequence[str], k: int) -> str:
    rows = [",".join(names[i * k:(i + 1) * k]) for i in range(k)]
    return "[" + ",".join(f"[{r}]" for r in rows) + "]"


def _is_additive_subgroup(base: FiniteRing, subset: Sequence[int]) -> bool:
    s = np.zeros(base.size, dtype=bool)
    s[list(subset)] = True
    idx = np.flatnonzero(s)
    return bool(
        s[base.zero]
        and s[base.add[np.ix_(idx, idx)]].all()
        and s[base.neg[idx]].all()
    )


def pattern_matrix_ring(base: FiniteRing, k: int, entry_sets) -> FiniteRing:
    """k×k matrices over ``base`` whose (i, j) entry is drawn from ``entry_sets[i][j]``.

    Entry sets are sequences of base indices (or names).  Elements are listed
    in row-major lexicographic order of their entries.
    """
    sets = []
    for i in range(k):
        row = []
        for j in range(k):
            raw = entry_sets[i][j]
            members = sorted({base.index(x) if isinstance(x, str) else int(x) for x in raw})
            if not members or not _is_additive_subgroup(base, members):
                raise ValueError(f"entry set ({i},{j}) is not an additive subgroup")
            row.append(members)
        sets.append(row)
    flat = [sets[i][j] for i in range(k) for j in range(k)]
    n = math.prod(len(s) for s in flat)
    _check_capacity(n, "pattern matrix ring")

    # local position of each base element inside its entry set, -1 if absent
    local = np.full((k * k, base.size), -1, dtype=np.int64)
    for p, s in enumerate(flat):
        local[p, s] = np.arange(len(s))
    radix = [len(s) for s in flat]
    strides = np.array([math.prod(radix[p + 1:]) for p in range(k * k)], dtype=np.int64)
    entries = np.array(list(itertools.product(*flat)), dtype=np.int64).reshape(n, k * k)

    def encode(block: np.ndarray) -> np.ndarray:
        loc = local[np.arange(k * k)[None, :], block]
        return loc, (loc * strides).sum(axis=1)

    ident = [base.one if i == j else base.zero for i in range(k) for j in range(k)]
    loc, code = encode(np.array([ident]))
    if (loc < 0).any():
        raise IdentityNotInPattern("identity matrix is not in the pattern")
    one = int(code[0])
    zero_code = encode(np.array([[base.zero] * (k * k)]))[1]
    zero = int(zero_code[0])

    add = np.empty((n, n), dtype=IDX)
    mul = np.empty((n, n), dtype=IDX)
    badd, bmul = base.add, base.mul
    chunk = max(1, 2**20 // max(n, 1))
    for lo in range(0, n, chunk):
        A = entries[lo:lo + chunk]
        c = len(A)
        s = badd[A[:, None, :], entries[None, :, :]].reshape(c * n, k * k)
        _, codes = encode(s)
        add[lo:lo + c] = codes.reshape(c, n)
        prod = np.empty((c, n, k * k), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                acc = np.full((c, n), base.zero, dtype=np.int64)
                for l in range(k):
                    acc = badd[acc, bmul[A[:, i * k + l][:, None], entries[None, :, l * k + j]]]
                prod[:, :, i * k + j] = acc
        loc, codes = encode(prod.reshape(c * n, k * k))
        if (loc < 0).any():
            flat_bad, p = (int(v) for v in np.argwhere(loc < 0)[0])
            raise PatternNotClosed(p // k, p % k, (lo + flat_bad // n, flat_bad % n))
        mul[lo:lo + c] = codes.reshape(c, n)
    names = [_render_matrix([base.elements[e] for e in entries[a]], k) for a in range(n)]
    return validate_ring(names, add, mul, zero, one)


def matrix_entries(R: FiniteRing, a: int) -> list[list[str]]:
    """Parse a bracketed matrix name back into entry names."""
    body = R.elements[a].strip()[2:-2]
    return [row.split(",") for row in body.split("],[")]


# --- scalar rings ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ScalarRing:
    """Scalars acting on a module.

    ``kind == "table"`` wraps a FiniteRing.  ``kind == "integers"`` stands for
    the ring of integers acting through a finite exponent N: arithmetic uses
    the residues 0..N-1, while idempotents and units are those of the integers
    ({0, 1} and {1, -1}).
    """

    kind: str
    ring: FiniteRing
    exponent: int | None = None

    @classmethod
    def table(cls, ring: FiniteRing) -> "ScalarRing":
        return cls("table", ring)

    @classmethod
    def integers(cls, exponent: int) -> "ScalarRing":
        if exponent < 1:
            raise ValueError("exponent must be positive")
        return cls("integers", ring_zn(exponent), exponent)

    @property
    def size(self) -> int:
        return self.ring.size

    @property
    def is_integers(self) -> bool:
        return self.kind == "integers"

    def same_as(self, other: "ScalarRing") -> bool:
        if self is other:
            return True
        if self.kind != other.kind:
            return False
        if self.is_integers:
            return self.exponent == other.exponent
        return self.ring.same_tables(other.ring)

    @cached_property
    def subsets(self) -> "RingSubsets":
        return ring_subsets(self)


# --- modules ---------------------------------------------------------------


def module_violation(add, action, scalars: ScalarRing, strategy="auto"):
    n = add.shape[0]
    R = scalars.ring
    zero_candidates = np.flatnonzero((add == np.arange(n)[None, :]).all(axis=1))
    if len(zero_candidates) == 0:
        return "additive identity", (0,), None
    zero = int(zero_candidates[0])
    found = _abelian_group_violation(add, zero, strategy)
    if found:
        return found[0], found[1], zero
    ar = np.arange(n)
    w = _first_false(action[:, R.one] == ar)
    if w:
        return "unital action", (w[0], R.one), zero
    if scalars.is_integers:
        # action of k must be k-fold addition; N must annihilate
        acc = np.full(n, zero)
        for k in range(scalars.exponent):
            w = _first_false(action[:, k] == acc)
            if w:
                return "integer action", (w[0], k), zero
            acc = add[acc, ar]
        w = _first_false(acc == zero)
        if w:
            return "exponent annihilates", (w[0], scalars.exponent), zero
        return None
    exhaustive = strategy == "exhaustive" or (
        strategy == "auto" and n * n * R.size <= EXHAUSTIVE_LIMIT ** 3
    )
    if exhaustive:
        for m in range(n):
            # (m + x)r == mr + xr
            w = _first_false(action[add[m], :] == add[action[m][None, :], action])
            if w:
                return "action additive in module", (m, *w), zero
        for m in range(n):
            row = action[m]
            # m(r + s) == mr + ms
            w = _first_false(row[R.add] == add[row[:, None], row[None, :]])
            if w:
                return "action additive in scalars", (m, *w), zero
            # m(rs) == (mr)s
            w = _first_false(row[R.mul] == action[row, :])
            if w:
                return "action associativity", (m, *w), zero
    else:
        mg = additive_generators(add)
        rg = additive_generators(R.add)
        for g in mg:
            w = _first_false(action[add[:, g], :] == add[action, action[g][None, :]])
            if w:
                return "action additive in module", (w[0], g, w[1]), zero
        for s in rg:
            w = _first_false(action[:, R.add[:, s]] == add[action, action[:, s][:, None]])
            if w:
                return "action additive in scalars", (w[0], w[1], s), zero
        for m, r, s in itertools.product(mg, rg, rg):
            if action[m, R.mul[r, s]] != action[action[m, r], s]:
                return "action associativity", (m, r, s), zero
    return None


@dataclass(frozen=True, eq=False)
class FiniteModule:
    """A right module over ``scalars`` on the carrier ``0..n-1``."""

    scalars: ScalarRing
    elements: tuple[str, ...]
    add: np.ndarray
    action: np.ndarray
    zero: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteModule(size={self.size}, scalars={self.scalars.kind}:{self.scalars.size})"

    @cached_property
    def neg(self) -> np.ndarray:
        rows, cols = np.nonzero(self.add == self.zero)
        out = np.empty(self.size, dtype=IDX)
        out[rows] = cols
        out.setflags(write=False)
        return out

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.elements)}

    def index(self, name: str) -> int:
        return self._index[name]

    def name(self, i: int) -> str:
        return self.elements[i]

    @cached_property
    def orbit_masks(self) -> np.ndarray:
        """Row m marks the cyclic submodule mR."""
        mask = np.zeros((self.size, self.size), dtype=bool)
        mask[np.arange(self.size)[:, None], self.action] = True
        mask.setflags(write=False)
        return mask

    @cached_property
    def orbit_sizes(self) -> np.ndarray:
        return self.orbit_masks.sum(axis=1)

    @cached_property
    def additive_generators(self) -> list[int]:
        return additive_generators(self.add)

    @cached_property
    def exponent(self) -> int:
        """Least N > 0 with N·m = 0 for every m (additive exponent)."""
        orders = []
        for m in range(self.size):
            k, x = 1, m
            while x != self.zero:
                x = int(self.add[x, m])
                k += 1
            orders.append(k)
        return math.lcm(*orders) if orders else 1

    def multiple(self, k: int, m: int) -> int:
        """k-fold sum of m (k may be negative)."""
        x = self.zero
        step = m if k >= 0 else int(self.neg[m])
        for _ in range(abs(k)):
            x = int(self.add[x, step])
        return x

    @cached_property
    def multiples(self) -> np.ndarray:
        """Table [n, m] = n·m for n in 0..exponent-1."""
        e = self.exponent
        out = np.empty((e, self.size), dtype=IDX)
        acc = np.full(self.size, self.zero, dtype=IDX)
        for k in range(e):
            out[k] = acc
            acc = self.add[acc, np.arange(self.size)]
        out.setflags(write=False)
        return out

    @cached_property
    def regular_ring(self) -> FiniteRing | None:
        """The ring R when this module is R viewed over itself, else None."""
        R = self.scalars.ring
        if self.scalars.is_integers or R.size != self.size:
            return None
        if (
            R.elements == self.elements
            and np.array_equal(R.add, self.add)
            and np.array_equal(R.mul, self.action)
        ):
            return R
        return None


def validate_module(scalars: ScalarRing, elements, add, action, strategy="auto") -> FiniteModule:
    elements = tuple(str(e) for e in elements)
    n = len(elements)
    if n == 0:
        raise ShapeError("a module needs at least one element")
    _check_capacity(n, "module")
    if len(set(elements)) != n:
        raise ShapeError("element names are not unique")
    add_t = _table(add, n, n, n, "add")
    action_t = _table(action, n, scalars.size, n, "action")
    found = module_violation(add_t, action_t, scalars, strategy)
    if found:
        law, els, _ = found
        raise AxiomViolation(law, els)
    zero = int(np.flatnonzero((add_t == np.arange(n)[None, :]).all(axis=1))[0])
    return FiniteModule(scalars, elements, add_t, action_t, zero)


def regular_representation(R: FiniteRing) -> FiniteModule:
    return FiniteModule(ScalarRing.table(R), R.elements, R.add, R.mul, R.zero)


def zmodule(cyclic_orders: Sequence[int]) -> FiniteModule:
    """Product of cyclic groups as a module over the integers (exponent = lcm)."""
    orders = [int(o) for o in cyclic_orders]
    if not orders:
        raise ValueError("zmodule needs at least one cyclic factor")
    if any(o < 1 for o in orders):
        raise ValueError("cyclic orders must be positive")
    n = math.prod(orders)
    _check_capacity(n, "module")
    N = math.lcm(*orders)
    tuples = np.array(list(itertools.product(*[range(o) for o in orders])), dtype=np.int64)
    mods = np.array(orders, dtype=np.int64)
    strides = np.array([math.prod(orders[i + 1:]) for i in range(len(orders))], dtype=np.int64)

    def code(t: np.ndarray) -> np.ndarray:
        return ((t % mods) * strides).sum(axis=-1)

    add = code(tuples[:, None, :] + tuples[None, :, :])
    ks = np.arange(N)
    action = code(tuples[:, None, :] * ks[None, :, None])
    if len(orders) == 1:
        names = [str(t[0]) for t in tuples]
    else:
        names = ["(" + ",".join(str(v) for v in t) + ")" for t in tuples]
    return validate_module(ScalarRing.integers(N), names, add, action)


def direct_sum(A: FiniteModule, B: FiniteModule) -> FiniteModule:
    if not A.scalars.same_as(B.scalars):
        raise ValueError("direct sum needs a common scalar ring")
    na, nb = A.size, B.size
    ia, ib = np.divmod(np.arange(na * nb), nb)
    add = A.add[ia[:, None], ia[None, :]] * nb + B.add[ib[:, None], ib[None, :]]
    action = A.action[ia, :] * nb + B.action[ib, :]
    names = [f"({A.elements[a]},{B.elements[b]})" for a, b in zip(ia, ib)]
    return validate_module(A.scalars, names, add, action)


# --- ring subsets ----------------------------------------------------------


@dataclass(frozen=True)
class RingSubsets:
    idempotents: tuple[int, ...]
    units: tuple[int, ...]
    center: tuple[int, ...]
    is_duo_right: bool
    is_duo_left: bool


def ring_subsets(R: FiniteRing | ScalarRing) -> RingSubsets:
    if isinstance(R, ScalarRing):
        if R.is_integers:
            N = R.exponent
            return RingSubsets(
                idempotents=tuple(sorted({0, 1 % N})),
                units=tuple(sorted({1 % N, (N - 1) % N})),
                center=tuple(range(N)),
                is_duo_right=True,
                is_duo_left=True,
            )
        R = R.ring
    mul = R.mul
    n = R.size
    ar = np.arange(n)
    idem = np.flatnonzero(mul[ar, ar] == ar)
    hits = mul == R.one
    units = np.flatnonzero((hits & hits.T).any(axis=1))
    center = np.flatnonzero((mul == mul.T).all(axis=1))
    if R.is_commutative:
        duo_r = duo_l = True
    else:
        duo_r = all(np.isin(mul[:, a], mul[a, :]).all() for a in range(n))
        duo_l = all(np.isin(mul[a, :], mul[:, a]).all() for a in range(n))
    return RingSubsets(
        tuple(int(i) for i in idem),
        tuple(int(u) for u in units),
        tuple(int(c) for c in center),
        bool(duo_r),
        bool(duo_l),
    )


# --- submodules ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Submodule:
    parent: FiniteModule
    members: tuple[int, ...]

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.size, dtype=bool)
        m[list(self.members)] = True
        m.setflags(write=False)
        return m

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Submodule)
            and other.parent is self.parent
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def names(self) -> list[str]:
        return [self.parent.elements[i] for i in self.members]


def make_submodule(M: FiniteModule, subset: Iterable[int]) -> Submodule:
    """Wrap a subset, raising NotASubmodule unless it is closed."""
    idx = np.array(sorted({int(x) for x in subset}), dtype=np.int64)
    mask = np.zeros(M.size, dtype=bool)
    mask[idx] = True
    if not mask[M.zero]:
        raise NotASubmodule("subset misses zero")
    if not mask[M.add[np.ix_(idx, idx)]].all():
        raise NotASubmodule("subset is not closed under addition")
    if not mask[M.action[idx]].all():
        raise NotASubmodule("subset is not closed under the scalar action")
    return Submodule(M, tuple(int(i) for i in idx))


def cyclic_submodule(M: FiniteModule, m: int) -> Submodule:
    """mR, the orbit of m under the scalars, closed under addition."""
    members = np.unique(M.action[m])
    mask = np.zeros(M.size, dtype=bool)
    mask[members] = True
    while True:
        idx = np.flatnonzero(mask)
        sums = np.unique(M.add[np.ix_(idx, idx)])
        if mask[sums].all():
            break
        mask[sums] = True
    return Submodule(M, tuple(int(i) for i in np.flatnonzero(mask)))


def submodule_generated(M: FiniteModule, subset: Iterable[int]) -> Submodule:
    """Smallest submodule containing ``subset`` (naive fixpoint closure)."""
    mask = np.zeros(M.size, dtype=bool)
    mask[M.zero] = True
    for x in subset:
        mask[int(x)] = True
    while True:
        idx = np.flatnonzero(mask)
        new = np.concatenate([M.add[np.ix_(idx, idx)].ravel(), M.action[idx].ravel()])
        if mask[new].all():
            break
        mask[new] = True
    return Submodule(M, tuple(int(i) for i in np.flatnonzero(mask)))


def sum_of_submodules(A: Submodule, B: Submodule) -> Submodule:
    M = A.parent
    s = np.unique(M.add[np.ix_(list(A.members), list(B.members))])
    return Submodule(M, tuple(int(i) for i in s))


def coset_labels(M: FiniteModule, N: Submodule) -> tuple[np.ndarray, np.ndarray]:
    """(label per element, representative per label); labels follow representative order."""
    if N.parent is not M:
        N = make_submodule(M, N.members)
    cos = M.add[:, list(N.members)]
    reps_of = cos.min(axis=1)
    reps = np.unique(reps_of)
    label = np.searchsorted(reps, reps_of)
    return label.astype(IDX), reps.astype(IDX)


def quotient_module(M: FiniteModule, N: Submodule) -> FiniteModule:
    make_submodule(M, N.members)
    label, reps = coset_labels(M, N)
    q_add = label[M.add[np.ix_(reps, reps)]]
    q_act = label[M.action[reps]]
    # induced operations must not depend on the representative
    if not np.array_equal(label[M.add], q_add[label[:, None], label[None, :]]):
        raise NotASubmodule("coset addition is not well defined")
    if not np.array_equal(label[M.action], q_act[label]):
        raise NotASubmodule("coset action is not well defined")
    names = [f"{M.elements[r]}+N" for r in reps]
    return validate_module(M.scalars, names, q_add, q_act)


def as_module(N: Submodule) -> FiniteModule:
    M = N.parent
    idx = np.array(N.members, dtype=np.int64)
    pos = np.full(M.size, -1, dtype=np.int64)
    pos[idx] = np.arange(len(idx))
    add = pos[M.add[np.ix_(idx, idx)]]
    action = pos[M.action[idx]]
    if (add < 0).any() or (action < 0).any():
        raise NotASubmodule("subset is not closed")
    return validate_module(M.scalars, [M.elements[i] for i in idx], add, action)


def complement_of(M: FiniteModule, N: Submodule, budget: int = 20000) -> Submodule | None:
    """First K (depth-first, lowest indices first) with M = N ⊕ K, or None."""
    N = make_submodule(M, N.members)
    if M.size % N.size:
        return None
    target = M.size // N.size
    n_mask = N.mask
    seen: set[tuple[int, ...]] = set()
    nodes = 0

    def grow(K: np.ndarray) -> np.ndarray | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise CapacityExceeded("complement search exceeded its node budget")
        size = int(K.sum())
        if size == target:
            return K
        kidx = np.flatnonzero(K)
        covered = np.zeros(M.size, dtype=bool)
        covered[M.add[np.ix_(kidx, list(N.members))]] = True
        for x in np.flatnonzero(~covered):
            orbit = cyclic_submodule(M, int(x)).mask
            idx2 = np.flatnonzero(orbit)
            nxt = np.zeros(M.size, dtype=bool)
            nxt[M.add[np.ix_(kidx, idx2)]] = True
            if (nxt & n_mask).sum() != 1 or target % int(nxt.sum()):
                continue
            key = tuple(np.flatnonzero(nxt))
            if key in seen:
                continue
            seen.add(key)
            found = grow(nxt)
            if found is not None:
                return found
        return None

    start = np.zeros(M.size, dtype=bool)
    start[M.zero] = True
    K = grow(start)
    if K is None:
        return None
    return Submodule(M, tuple(int(i) for i in np.flatnonzero(K)))


def complement_by_projection(N: Submodule, endomorphisms: np.ndarray) -> Submodule | None:
    """Kernel of the first idempotent endomorphism with image N, or None.

    M = N ⊕ K exactly when such a projection exists, so with the full
    endomorphism table this decides the summand question outright.
    """
    M = N.parent
    maps = np.asarray(endomorphisms)
    idem = np.flatnonzero((np.take_along_axis(maps, maps, axis=1) == maps).all(axis=1))
    for k in idem:
        img = np.zeros(M.size, dtype=bool)
        img[maps[k]] = True
        if np.array_equal(img, N.mask):
            return Submodule(M, tuple(int(i) for i in np.flatnonzero(maps[k] == M.zero)))
    return None


def is_fully_invariant(N: Submodule, endomorphisms: np.ndarray) -> bool:
    """True when every map (rows of ``endomorphisms``) sends N into N."""
    return bool(N.mask[endomorphisms[:, list(N.members)]].all())
