"""Finite posets, interval-closed sets, and the brute-force enumeration oracle.

An interval-closed set (ICS) of a poset P is a subset I such that whenever
x, y are in I and x < z < y, then z is in I.  Equivalently, I contains the
whole order interval between any two of its comparable elements.  Order
ideals and order filters are special cases.

Poset families built here:

  ChainProduct(m, n)          [m] x [n]: pairs (a, b), componentwise order
  ChainProduct3(l, m, n)      [l] x [m] x [n]: triples, componentwise order
  TruncatedRectangle(m, n, r) [m] x [n] with the bottom r ranks removed
                              (rank of (a, b) is a + b - 2)
  TypeARoot(k)                positive-root triangle with k minimal elements;
                              built as TruncatedRectangle(k+1, k+1, k+1)
  TypeBMinuscule(n)           staircase half {(a, b): a <= b} of [n] x [n]
  TypeBRoot(n)                half of the 2n-1 root triangle under its mirror
  OrdinalSumAntichains(a)     antichains a_1, ..., a_k stacked in a chain

Conventions:
  Elements are indexed 0..N-1 in sorted label order (row-major by (a, b) for
  chain products); this indexing is a linear extension, which the enumerator
  relies on.  Subsets at this layer are frozensets of element indices; the
  bitmask encoding of a subset uses bit k for element k.  Enumeration emits
  subsets in ascending bitmask order, so the empty set always comes first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

ICS_ENUMERATION_BOUND = 30


class OracleScaleExceeded(RuntimeError):
    """Raised when a brute-force enumeration is asked to run above its bound."""


# ---------------------------------------------------------------------------
# Poset specifications


@dataclass(frozen=True)
class ChainProduct:
    m: int
    n: int


@dataclass(frozen=True)
class ChainProduct3:
    l: int
    m: int
    n: int


@dataclass(frozen=True)
class TruncatedRectangle:
    m: int
    n: int
    r: int


@dataclass(frozen=True)
class TypeARoot:
    k: int


@dataclass(frozen=True)
class TypeBMinuscule:
    n: int


@dataclass(frozen=True)
class TypeBRoot:
    n: int


@dataclass(frozen=True)
class OrdinalSumAntichains:
    sizes: tuple[int, ...]

    def __init__(self, sizes: Iterable[int]):
        object.__setattr__(self, "sizes", tuple(sizes))


PosetSpec = (
    ChainProduct
    | ChainProduct3
    | TruncatedRectangle
    | TypeARoot
    | TypeBMinuscule
    | TypeBRoot
    | OrdinalSumAntichains
)


def normalize_spec(spec: PosetSpec) -> PosetSpec:
    """Validate parameters and apply conventions (negative truncation -> 0)."""
    if isinstance(spec, ChainProduct):
        if spec.m < 0 or spec.n < 0:
            raise ValueError(f"chain product needs m, n >= 0, got {spec}")
        return spec
    if isinstance(spec, ChainProduct3):
        if min(spec.l, spec.m, spec.n) < 0:
            raise ValueError(f"chain product needs l, m, n >= 0, got {spec}")
        return spec
    if isinstance(spec, TruncatedRectangle):
        if spec.m < 0 or spec.n < 0:
            raise ValueError(f"truncated rectangle needs m, n >= 0, got {spec}")
        r = max(spec.r, 0)
        if r > min(spec.m, spec.n):
            raise ValueError(
                f"truncation depth r={spec.r} exceeds min(m, n)={min(spec.m, spec.n)}"
            )
        return TruncatedRectangle(spec.m, spec.n, r)
    if isinstance(spec, TypeARoot):
        if spec.k < 0:
            raise ValueError(f"root triangle needs k >= 0, got {spec}")
        return spec
    if isinstance(spec, (TypeBMinuscule, TypeBRoot)):
        if spec.n < 0:
            raise ValueError(f"{type(spec).__name__} needs n >= 0, got {spec}")
        return spec
    if isinstance(spec, OrdinalSumAntichains):
        if any(a <= 0 for a in spec.sizes):
            raise ValueError(f"antichain sizes must be positive, got {spec.sizes}")
        return spec
    raise TypeError(f"not a poset spec: {spec!r}")


# ---------------------------------------------------------------------------
# The poset itself


class FinitePoset:
    """A finite poset over indexed elements with precomputed order masks.

    labels[i] is the coordinate label of element i; covers is the transitive
    reduction as a frozenset of (lower, upper) index pairs.  up_mask(i) /
    down_mask(i) are reflexive principal filter/ideal bitmasks, and
    interval_mask(x, y) is the bitmask of {z : x <= z <= y}.
    """

    def __init__(self, labels: Iterable[tuple], leq_labels, spec: PosetSpec | None = None):
        labels = tuple(sorted(labels))
        n = len(labels)
        self.n = n
        self.labels = labels
        self.spec = spec
        self.index = {lab: i for i, lab in enumerate(labels)}
        up = [0] * n
        down = [0] * n
        for i, a in enumerate(labels):
            for j, b in enumerate(labels):
                if leq_labels(a, b):
                    up[i] |= 1 << j
                    down[j] |= 1 << i
        self._up = up
        self._down = down
        self._up_strict = [up[i] & ~(1 << i) for i in range(n)]
        self._down_strict = [down[i] & ~(1 << i) for i in range(n)]
        covers = []
        adj = [0] * n
        for i in range(n):
            rest = self._up_strict[i]
            while rest:
                jbit = rest & -rest
                rest ^= jbit
                j = jbit.bit_length() - 1
                if not (self._up_strict[i] & self._down_strict[j]):
                    covers.append((i, j))
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        self.covers = frozenset(covers)
        self._cover_adj = adj
        self.minimal_mask = sum(
            1 << i for i in range(n) if not self._down_strict[i]
        )

    def leq(self, i: int, j: int) -> bool:
        return bool(self._up[i] >> j & 1)

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def down_mask(self, i: int) -> int:
        return self._down[i]

    def interval_mask(self, x: int, y: int) -> int:
        """Bitmask of {z : x <= z <= y}; empty when x and y are incomparable."""
        if not self.leq(x, y):
            return 0
        return self._up[x] & self._down[y]

    def indices_of(self, labels: Iterable[tuple]) -> frozenset[int]:
        return frozenset(self.index[lab] for lab in labels)

    def labels_of(self, indices: Iterable[int]) -> frozenset[tuple]:
        return frozenset(self.labels[i] for i in indices)

    def mask_of(self, members: Iterable[int]) -> int:
        m = 0
        for i in members:
            m |= 1 << i
        return m

    def members_of(self, mask: int) -> frozenset[int]:
        return frozenset(_iter_bits(mask))

    def __repr__(self):
        return f"FinitePoset(n={self.n}, spec={self.spec!r})"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        bit = mask & -mask
        yield bit.bit_length() - 1
        mask ^= bit


def _componentwise_leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def _root_triangle_labels(side: int) -> list[tuple[int, int]]:
    # ambient coordinates of [side] x [side] with the bottom `side` ranks cut
    return [
        (a, b)
        for a in range(1, side + 1)
        for b in range(1, side + 1)
        if a + b - 2 >= side
    ]


@lru_cache(maxsize=128)
def build_poset(spec: PosetSpec) -> FinitePoset:
    """Build the poset described by spec; see the module docstring for families."""
    spec = normalize_spec(spec)
    if isinstance(spec, ChainProduct):
        labels = [(a, b) for a in range(1, spec.m + 1) for b in range(1, spec.n + 1)]
        return FinitePoset(labels, _componentwise_leq, spec)
    if isinstance(spec, ChainProduct3):
        labels = [
            (a, b, c)
            for a in range(1, spec.l + 1)
            for b in range(1, spec.m + 1)
            for c in range(1, spec.n + 1)
        ]
        return FinitePoset(labels, _componentwise_leq, spec)
    if isinstance(spec, TruncatedRectangle):
        labels = [
            (a, b)
            for a in range(1, spec.m + 1)
            for b in range(1, spec.n + 1)
            if a + b - 2 >= spec.r
        ]
        return FinitePoset(labels, _componentwise_leq, spec)
    if isinstance(spec, TypeARoot):
        return FinitePoset(_root_triangle_labels(spec.k + 1), _componentwise_leq, spec)
    if isinstance(spec, TypeBMinuscule):
        labels = [(a, b) for a in range(1, spec.n + 1) for b in range(a, spec.n + 1)]
        return FinitePoset(labels, _componentwise_leq, spec)
    if isinstance(spec, TypeBRoot):
        labels = [(a, b) for (a, b) in _root_triangle_labels(2 * spec.n) if a <= b]
        return FinitePoset(labels, _componentwise_leq, spec)
    if isinstance(spec, OrdinalSumAntichains):
        labels = [
            (blk, pos)
            for blk, size in enumerate(spec.sizes, start=1)
            for pos in range(1, size + 1)
        ]
        return FinitePoset(labels, lambda a, b: a[0] < b[0] or a == b, spec)
    raise TypeError(f"not a poset spec: {spec!r}")


# ---------------------------------------------------------------------------
# Interval-closure predicate and closures


def find_ics_violation(
    poset: FinitePoset, members: Iterable[int]
) -> tuple[int, int, int] | None:
    """Return indices (x, z, y) with x < z < y, x and y in the subset, z not;
    None when the subset is interval-closed."""
    mask = poset.mask_of(members)
    for x in _iter_bits(mask):
        above = mask & poset._up_strict[x]
        for y in _iter_bits(above):
            missing = poset._up_strict[x] & poset._down_strict[y] & ~mask
            if missing:
                return (x, (missing & -missing).bit_length() - 1, y)
    return None


def is_interval_closed(poset: FinitePoset, members: Iterable[int]) -> bool:
    return find_ics_violation(poset, members) is None


def ideal_closure(poset: FinitePoset, members: Iterable[int]) -> frozenset[int]:
    """Smallest order ideal containing the subset."""
    mask = 0
    for i in members:
        mask |= poset._down[i]
    return poset.members_of(mask)


def filter_closure(poset: FinitePoset, members: Iterable[int]) -> frozenset[int]:
    """Smallest order filter containing the subset."""
    mask = 0
    for i in members:
        mask |= poset._up[i]
    return poset.members_of(mask)


# ---------------------------------------------------------------------------
# Brute-force enumeration (the oracle)


def _interval_interiors(poset: FinitePoset) -> list[dict[int, int]]:
    # for each x: {bit(y): mask of z strictly between x and y} over comparable y > x
    out = []
    for x in range(poset.n):
        d = {}
        rest = poset._up_strict[x]
        while rest:
            ybit = rest & -rest
            rest ^= ybit
            y = ybit.bit_length() - 1
            d[ybit] = poset._up_strict[x] & poset._down_strict[y]
        out.append(d)
    return out


def _ics_mask_stream(poset: FinitePoset) -> Iterator[int]:
    """All ICS bitmasks in ascending numeric order.

    Depth-first search deciding element N-1 down to 0, exclude branch first.
    Indexing is a linear extension, so when element k is added every element
    between k and an already chosen y is already decided; the interval check
    against the chosen mask is therefore complete, and any surviving leaf is
    interval-closed.
    """
    n = poset.n
    if n == 0:
        yield 0
        return
    interiors = _interval_interiors(poset)
    up_strict = poset._up_strict
    stack = [(n - 1, 0)]
    while stack:
        k, mask = stack.pop()
        if k < 0:
            yield mask
            continue
        chosen_above = mask & up_strict[k]
        ok = True
        rest = chosen_above
        ints = interiors[k]
        while rest:
            ybit = rest & -rest
            rest ^= ybit
            if ints[ybit] & ~mask:
                ok = False
                break
        if ok:
            stack.append((k - 1, mask | (1 << k)))
        stack.append((k - 1, mask))


def enumerate_ics(
    poset: FinitePoset, limit: int | None = None
) -> Iterator[frozenset[int]]:
    """Yield every ICS exactly once, ascending by bitmask encoding."""
    if poset.n > ICS_ENUMERATION_BOUND:
        raise OracleScaleExceeded(
            f"oracle scale exceeded: {poset.n} elements > bound {ICS_ENUMERATION_BOUND}"
        )
    stream = _ics_mask_stream(poset)
    if limit is not None:
        stream = itertools.islice(stream, limit)
    for mask in stream:
        yield poset.members_of(mask)


def count_ics(poset: FinitePoset) -> int:
    if poset.n > ICS_ENUMERATION_BOUND:
        raise OracleScaleExceeded(
            f"oracle scale exceeded: {poset.n} elements > bound {ICS_ENUMERATION_BOUND}"
        )
    return sum(1 for _ in _ics_mask_stream(poset))


# ---------------------------------------------------------------------------
# Involutions and symmetric ICS


@dataclass(frozen=True)
class Involution:
    """A poset automorphism equal to its own inverse, as an index permutation."""

    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i]


def make_involution(poset: FinitePoset, label_map) -> Involution:
    """Wrap a label-level map as a validated Involution on poset indices."""
    perm = tuple(poset.index[label_map(lab)] for lab in poset.labels)
    inv = Involution(perm)
    _check_involution(poset, inv)
    return inv


def _check_involution(poset: FinitePoset, sigma: Involution) -> None:
    perm = sigma.mapping
    if sorted(perm) != list(range(poset.n)):
        raise ValueError("not a permutation of the element indices")
    for i in range(poset.n):
        if perm[perm[i]] != i:
            raise ValueError("map is not an involution")
    for i in range(poset.n):
        for j in range(poset.n):
            if poset.leq(i, j) != poset.leq(perm[i], perm[j]):
                raise ValueError("map is not an automorphism")


def vertical_involution(spec: PosetSpec) -> Involution:
    """Coordinate swap (a, b) -> (b, a) on a square chain product or root triangle."""
    spec = normalize_spec(spec)
    if isinstance(spec, ChainProduct) and spec.m == spec.n:
        pass
    elif isinstance(spec, TypeARoot):
        pass
    else:
        raise ValueError(f"vertical involution needs a square rectangle or root triangle, got {spec}")
    return make_involution(build_poset(spec), lambda lab: (lab[1], lab[0]))


def enumerate_symmetric_ics(poset: FinitePoset, sigma: Involution) -> int:
    """Count the ICS fixed setwise by the involution.

    Works orbit by orbit.  Deciding a whole orbit can reference interval
    elements whose own orbit is still undecided; those are recorded as forced
    and the branch dies if a forced element is later excluded, so every
    accepted leaf is a genuine symmetric ICS and none is missed.
    """
    _check_involution(poset, sigma)
    n = poset.n
    orbit_masks = []
    seen = 0
    for i in range(n):
        if seen >> i & 1:
            continue
        mask = 1 << i | 1 << sigma(i)
        seen |= mask
        orbit_masks.append(mask)
    if len(orbit_masks) > ICS_ENUMERATION_BOUND:
        raise OracleScaleExceeded(
            f"oracle scale exceeded: {len(orbit_masks)} orbits > bound {ICS_ENUMERATION_BOUND}"
        )
    up_strict = poset._up_strict
    down_strict = poset._down_strict
    up = poset._up

    def conflicts(chosen: int, excluded: int, orbit: int) -> tuple[bool, int]:
        # returns (dead, forced-by-including-orbit)
        forced = 0
        new_chosen = chosen | orbit
        for p in _iter_bits(orbit):
            for q in _iter_bits(new_chosen & ~(1 << p)):
                if up[p] >> q & 1:
                    lo, hi = p, q
                elif up[q] >> p & 1:
                    lo, hi = q, p
                else:
                    continue
                interior = up_strict[lo] & down_strict[hi]
                if interior & excluded:
                    return True, 0
                forced |= interior & ~new_chosen
        return False, forced

    total = 0
    stack = [(0, 0, 0, 0)]  # orbit cursor, chosen, excluded, forced
    while stack:
        pos, chosen, excluded, forced = stack.pop()
        if pos == len(orbit_masks):
            assert not forced  # every forced element was decided on the way down
            total += 1
            continue
        orbit = orbit_masks[pos]
        dead, newly_forced = conflicts(chosen, excluded, orbit)
        if not dead:
            stack.append(
                (pos + 1, chosen | orbit, excluded, (forced | newly_forced) & ~orbit)
            )
        if not (orbit & forced):
            stack.append((pos + 1, chosen, excluded | orbit, forced))
    return total


# ---------------------------------------------------------------------------
# Subset statistics


@dataclass(frozen=True)
class SubsetStats:
    cardinality: int
    component_count: int
    incomparable_count: int
    minimal_in_subset: int
    hits_all_files: bool | None


def subset_stats(poset: FinitePoset, members: Iterable[int]) -> SubsetStats:
    """Statistics of a subset: size, cover-graph components, elements of the
    poset comparable with no member, minimal elements contained, and (for
    chain products) whether every value of the first coordinate is hit."""
    mask = poset.mask_of(members)
    cardinality = bin(mask).count("1")

    components = 0
    todo = mask
    while todo:
        components += 1
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for i in _iter_bits(frontier):
                nxt |= poset._cover_adj[i] & mask & ~comp
            comp |= nxt
            frontier = nxt
        todo &= ~comp

    incomparable = 0
    for z in range(poset.n):
        if not ((poset._up[z] | poset._down[z]) & mask):
            incomparable += 1

    minimal = bin(mask & poset.minimal_mask).count("1")

    hits = None
    if isinstance(poset.spec, ChainProduct):
        files = {lab[0] for lab in poset.labels_of(_iter_bits(mask))}
        hits = all(a in files for a in range(1, poset.spec.m + 1))

    return SubsetStats(cardinality, components, incomparable, minimal, hits)
