"""Constructive maps between interval-closed sets and lattice paths.

Geometry.  Elements (a, b) of [m] x [n] are drawn in path coordinates at
(a - b + n, a + b - 1): column index ("file") i = a - b + n running from 1
to m + n - 1, height j = a + b - 1.  An order ideal corresponds to the
unique monotone path from (0, n) to (m + n, m) over steps U = (1, 1) and
D = (1, -1) that leaves exactly the ideal below it: element (a, b) lies in
the ideal iff the path height at its file is at least a + b.  Truncating
the bottom r ranks of the rectangle turns into a floor: boundary paths of
ideals of the truncated poset stay weakly above y = r.

An ICS I determines the nested pair (B, T): T bounds the smallest order
ideal containing I and B bounds the order ideal of elements strictly below
I.  B and T coincide exactly over the files where I is empty; rewriting
each maximal shared block to put U steps first gives the canonical
representative, and the canonical B is also the highest path lying weakly
below all of I.

Letterwise recodings of the canonical pair give the two path images:

  (b_i, t_i):  (D,U) (U,D) (U,U) (D,D)
  Motzkin        U     D     H1    H2     (rectangles, r = 0)
  walk           NW    SE    E     W      (truncated rectangles)

The Motzkin word's height after i steps is half the gap between T and B;
the walk's position is (B height - r, half gap).  A walk image runs from
(n - r, 0) to (m - r, 0) in m + n steps, so (m, n, r) can be recovered
from a walk's frame via m = (l + s - h)/2, n = (l - s + h)/2,
r = (l - s - h)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .paths import MotzkinWord, NestedPairBT, QuarterWalk, validate_nested_pair, validate_walk, validate_motzkin
from .posets import (
    ChainProduct,
    FinitePoset,
    PosetSpec,
    TruncatedRectangle,
    TypeARoot,
    build_poset,
    filter_closure,
    find_ics_violation,
    ideal_closure,
    normalize_spec,
)

Label = tuple[int, int]


class NotIntervalClosed(ValueError):
    """Input subset is not interval-closed; witness is a label triple (x, z, y)."""

    def __init__(self, witness: tuple[Label, Label, Label]):
        self.witness = witness
        x, z, y = witness
        super().__init__(f"not interval-closed: {x} < {z} < {y} but {z} is missing")


_PAIR_TO_MOTZKIN = {("D", "U"): "U", ("U", "D"): "D", ("U", "U"): "H1", ("D", "D"): "H2"}
_MOTZKIN_TO_PAIR = {v: k for k, v in _PAIR_TO_MOTZKIN.items()}
_PAIR_TO_WALK = {("D", "U"): "NW", ("U", "D"): "SE", ("U", "U"): "E", ("D", "D"): "W"}
_WALK_TO_PAIR = {v: k for k, v in _PAIR_TO_WALK.items()}


# ---------------------------------------------------------------------------
# Rectangle-frame helpers


def _frame(spec: PosetSpec) -> tuple[int, int, int]:
    """(m, n, r) of the ambient rectangle; TypeARoot(k) sits in [k+1] x [k+1]."""
    spec = normalize_spec(spec)
    if isinstance(spec, ChainProduct):
        return spec.m, spec.n, 0
    if isinstance(spec, TruncatedRectangle):
        return spec.m, spec.n, spec.r
    if isinstance(spec, TypeARoot):
        return spec.k + 1, spec.k + 1, spec.k + 1
    raise ValueError(f"no rectangle frame for {spec}")


def _frame_spec(m: int, n: int, r: int) -> PosetSpec:
    return ChainProduct(m, n) if r == 0 else TruncatedRectangle(m, n, r)


def _boundary_heights(m: int, n: int, r: int, ideal: Iterable[Label]) -> list[int]:
    """Heights of the boundary path of an order ideal of the truncated
    rectangle: the envelope of the floor and of the ideal's elements."""
    ell = m + n
    y = []
    for i in range(ell + 1):
        base = abs(i - n)
        if base < r:
            base = r if (r - n - i) % 2 == 0 else r + 1
        y.append(base)
    for a, b in ideal:
        i = a - b + n
        if a + b > y[i]:
            y[i] = a + b
    for i in range(ell):
        if abs(y[i + 1] - y[i]) != 1:  # pragma: no cover - guards non-ideal input
            raise AssertionError("boundary envelope is not a lattice path; input was not an ideal")
    return y


def _ideal_from_heights(m: int, n: int, r: int, heights: list[int]) -> set[Label]:
    return {
        (a, b)
        for a in range(1, m + 1)
        for b in range(1, n + 1)
        if a + b - 2 >= r and heights[a - b + n] >= a + b
    }


def _steps_from_heights(heights: list[int]) -> tuple[str, ...]:
    return tuple(
        "U" if heights[i + 1] > heights[i] else "D" for i in range(len(heights) - 1)
    )


def _canonicalize_shared_blocks(bh: list[int], th: list[int]) -> None:
    """Rewrite every maximal block where the two paths coincide so that its
    U steps come first; both height lists are edited in place."""
    ell = len(bh) - 1
    i = 0
    while i < ell:
        if bh[i] == th[i] and bh[i + 1] == th[i + 1]:
            j = i
            while j < ell and bh[j + 1] == th[j + 1]:
                j += 1
            ups = (j - i + th[j] - th[i]) // 2
            for k in range(i + 1, j):
                h = th[i] + (k - i) if k - i <= ups else th[i] + 2 * ups - (k - i)
                bh[k] = th[k] = h
            i = j
        else:
            i += 1


def _poset_for(spec: PosetSpec, poset: FinitePoset | None) -> FinitePoset:
    return poset if poset is not None else build_poset(spec)


def _require_ics(poset: FinitePoset, members: frozenset[int]) -> None:
    witness = find_ics_violation(poset, members)
    if witness is not None:
        raise NotIntervalClosed(tuple(poset.labels[i] for i in witness))


# ---------------------------------------------------------------------------
# ICS <-> canonical nested pair


def ics_to_nested_pair(
    spec: PosetSpec, ics: Iterable[Label], poset: FinitePoset | None = None
) -> NestedPairBT:
    """Canonical (B, T) pair of an ICS of a rectangle, truncated rectangle, or
    root triangle."""
    m, n, r = _frame(spec)
    poset = _poset_for(spec, poset)
    members = poset.indices_of(ics)
    _require_ics(poset, members)
    delta = ideal_closure(poset, members)
    below = delta - members
    th = _boundary_heights(m, n, r, poset.labels_of(delta))
    bh = _boundary_heights(m, n, r, poset.labels_of(below))
    _canonicalize_shared_blocks(bh, th)
    return NestedPairBT(m, n, r, _steps_from_heights(bh), _steps_from_heights(th))


def nested_pair_to_ics(pair: NestedPairBT) -> frozenset[Label]:
    """Elements lying above B and below T (the ICS the pair encodes)."""
    problem = validate_nested_pair(pair)
    if problem is not None:
        raise ValueError(f"invalid nested pair: {problem}")
    upper = _ideal_from_heights(pair.m, pair.n, pair.r, pair.top_heights())
    lower = _ideal_from_heights(pair.m, pair.n, pair.r, pair.bottom_heights())
    return frozenset(upper - lower)


# ---------------------------------------------------------------------------
# Nested pair <-> bicolored Motzkin word


def nested_pair_to_motzkin(pair: NestedPairBT) -> MotzkinWord:
    """Letterwise image of a canonical pair with no floor (r = 0)."""
    if pair.r != 0:
        raise ValueError(f"Motzkin image needs floor r = 0, got r = {pair.r}")
    problem = validate_nested_pair(pair)
    if problem is not None:
        raise ValueError(f"invalid nested pair: {problem}")
    return MotzkinWord(
        _PAIR_TO_MOTZKIN[bt] for bt in zip(pair.bottom, pair.top)
    )


def motzkin_to_nested_pair(word: MotzkinWord) -> NestedPairBT:
    verdict = validate_motzkin(word)
    if not verdict.valid:
        raise ValueError(f"invalid bicolored Motzkin word: {verdict.violation}")
    pairs = [_MOTZKIN_TO_PAIR[s] for s in word.steps]
    return NestedPairBT(
        verdict.m, verdict.n, 0, (b for b, _ in pairs), (t for _, t in pairs)
    )


# ---------------------------------------------------------------------------
# ICS <-> Motzkin word (rectangles)


def ics_to_motzkin(
    m: int, n: int, ics: Iterable[Label], poset: FinitePoset | None = None
) -> MotzkinWord:
    return nested_pair_to_motzkin(ics_to_nested_pair(ChainProduct(m, n), ics, poset))


def motzkin_to_ics(word: MotzkinWord) -> tuple[int, int, frozenset[Label]]:
    pair = motzkin_to_nested_pair(word)
    return pair.m, pair.n, nested_pair_to_ics(pair)


# ---------------------------------------------------------------------------
# ICS <-> quarter-plane walk (truncated rectangles and root triangles)


def ics_to_walk(
    spec: PosetSpec, ics: Iterable[Label], poset: FinitePoset | None = None
) -> QuarterWalk:
    pair = ics_to_nested_pair(spec, ics, poset)
    return QuarterWalk(
        pair.n - pair.r,
        (_PAIR_TO_WALK[bt] for bt in zip(pair.bottom, pair.top)),
    )


def walk_frame(walk: QuarterWalk) -> tuple[int, int, int]:
    """(m, n, r) recovered from a walk's start, end, and length.  r may be
    negative, meaning the walk never touches the y-axis and its ICS lives in
    the plain rectangle."""
    verdict = validate_walk(walk)
    if not verdict.valid:
        raise ValueError(f"invalid quarter-plane walk: {verdict.violation}")
    h, (s, _), ell = walk.start_x, verdict.endpoint, len(walk.steps)
    if verdict.endpoint[1] != 0:
        raise ValueError(f"walk must end on the x-axis, ends at {verdict.endpoint}")
    if (ell - s - h) % 2:
        raise ValueError(f"walk frame (h={h}, s={s}, l={ell}) has odd parity")
    return (ell + s - h) // 2, (ell - s + h) // 2, (ell - s - h) // 2


def walk_to_ics(walk: QuarterWalk) -> tuple[PosetSpec, frozenset[Label]]:
    """Invert the walk map.  Returns the poset spec (truncation normalized to
    r >= 0) together with the ICS."""
    m, n, r = walk_frame(walk)
    bh = [walk.start_x + r]
    y = [0]
    for s in walk.steps:
        b, t = _WALK_TO_PAIR[s]
        bh.append(bh[-1] + (1 if b == "U" else -1))
        y.append(y[-1] + (1 if s == "NW" else -1 if s == "SE" else 0))
    th = [b + 2 * g for b, g in zip(bh, y)]
    r_eff = max(r, 0)
    upper = _ideal_from_heights(m, n, r_eff, th)
    lower = _ideal_from_heights(m, n, r_eff, bh)
    return _frame_spec(m, n, r_eff), frozenset(upper - lower)


# ---------------------------------------------------------------------------
# Element classification (the four regions cut out by the L and U paths)


@dataclass(frozen=True)
class ElementClassification:
    in_ics: frozenset[Label]
    below_only: frozenset[Label]
    above_only: frozenset[Label]
    incomparable: frozenset[Label]


def classify_elements(
    spec: PosetSpec, ics: Iterable[Label], poset: FinitePoset | None = None
) -> ElementClassification:
    """Partition the poset into the ICS, the rest of its ideal closure, the
    rest of its filter closure, and the elements comparable with nothing in
    it."""
    _frame(spec)  # restrict to the rectangle-like families
    poset = _poset_for(spec, poset)
    members = poset.indices_of(ics)
    _require_ics(poset, members)
    delta = ideal_closure(poset, members)
    nabla = filter_closure(poset, members)
    everything = frozenset(range(poset.n))
    return ElementClassification(
        in_ics=poset.labels_of(members),
        below_only=poset.labels_of(delta - members),
        above_only=poset.labels_of(nabla - members),
        incomparable=poset.labels_of(everything - delta - nabla),
    )


# ---------------------------------------------------------------------------
# Full ICS and the shift map


def is_full_ics(
    m: int, n: int, ics: Iterable[Label], poset: FinitePoset | None = None
) -> bool:
    """Whether the bounding paths of the ICS meet only at their endpoints,
    i.e. the Motzkin image leaves the x-axis immediately and for good."""
    word = ics_to_motzkin(m, n, ics, poset)
    heights = word.heights()
    return all(h > 0 for h in heights[1:-1])


def _classify_heights(m: int, n: int, ics, poset) -> tuple[list[int], list[int]]:
    # upper path (ideal closure boundary) and lower path (below the filter closure)
    poset = _poset_for(ChainProduct(m, n), poset)
    members = poset.indices_of(ics)
    _require_ics(poset, members)
    delta = ideal_closure(poset, members)
    nabla = filter_closure(poset, members)
    complement = frozenset(range(poset.n)) - nabla
    upper = _boundary_heights(m, n, 0, poset.labels_of(delta))
    lower = _boundary_heights(m, n, 0, poset.labels_of(complement))
    return lower, upper


def shift_map(
    m: int, n: int, ics: Iterable[Label], poset: FinitePoset | None = None
) -> frozenset[Label]:
    """Send an ICS of [m] x [n] touching every file a in 1..m to a full ICS
    of [m+1] x [n]: prepend a U step to the upper path, append one to the
    lower path."""
    ics = frozenset(ics)
    files = {a for a, _ in ics}
    if files != set(range(1, m + 1)):
        raise ValueError(
            f"shift map needs an element in every file 1..{m}, missing {sorted(set(range(1, m + 1)) - files)}"
        )
    lower, upper = _classify_heights(m, n, ics, poset)
    new_upper = [n] + [h + 1 for h in upper]
    new_lower = lower + [lower[-1] + 1]
    return frozenset(
        (a, b)
        for a in range(1, m + 2)
        for b in range(1, n + 1)
        if new_lower[a - b + n] <= a + b - 2 and new_upper[a - b + n] >= a + b
    )


def shift_map_inverse(
    m: int, n: int, ics: Iterable[Label], poset: FinitePoset | None = None
) -> frozenset[Label]:
    """Inverse of the shift map: a full ICS of [m] x [n] (m >= 1) back to an
    ICS of [m-1] x [n] touching every file."""
    ics = frozenset(ics)
    if not is_full_ics(m, n, ics, poset):
        raise ValueError("shift map inverse is only defined on full ICS")
    pair = ics_to_nested_pair(ChainProduct(m, n), ics, poset)
    if pair.top[0] != "U" or pair.bottom[-1] != "U":
        raise ValueError("full ICS paths do not start/end with the shift step")
    upper = [h - 1 for h in pair.top_heights()[1:]]
    lower = pair.bottom_heights()[:-1]
    out = frozenset(
        (a, b)
        for a in range(1, m)
        for b in range(1, n + 1)
        if lower[a - b + n] <= a + b - 2 and upper[a - b + n] >= a + b
    )
    files = {a for a, _ in out}
    if files != set(range(1, m)):
        raise AssertionError("inverse shift lost a file")  # pragma: no cover
    return out
