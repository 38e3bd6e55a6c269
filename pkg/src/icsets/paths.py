"""Lattice-path value types: bicolored Motzkin words, quarter-plane walks,
nested path pairs, their validators, statistics, and brute-force enumerators.

Bicolored Motzkin words use letters U=(1,1), D=(1,-1) and two horizontal
colors H1, H2 (both (1,0)).  A word is valid when its height never drops
below zero, ends at zero, and no H2 lying on the x-axis is immediately
followed by an H1.  Its shape parameters are m = #U + #H1, n = #D + #H2.

Quarter-plane walks start at (start_x, 0) and use steps E=(1,0), W=(-1,0),
SE=(1,-1), NW=(-1,1).  A walk is valid when it stays in the quadrant
x >= 0, y >= 0 and no W step taken on the x-axis is immediately followed
by an E step.

Nested pairs (B, T) are two paths over {U, D} read in a common frame: both
run from (0, n) to (m+n, m), stay weakly above the line y = r, B stays
weakly below T, and wherever the two paths coincide each maximal shared
block has all U steps before all D steps (the canonical form).

Text encodings (exact contract for the CLI and golden files):
  Motzkin words   whitespace-separated tokens U D 1 2
  walks           whitespace-separated tokens e w se nw
  nested pairs    three lines: "m n r", then B, then T as unseparated U/D
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

MOTZKIN_ALPHABET = ("U", "D", "H1", "H2")
WALK_ALPHABET = ("E", "W", "SE", "NW")
WALK_MOVES = {"E": (1, 0), "W": (-1, 0), "SE": (1, -1), "NW": (-1, 1)}

ENUMERATION_LENGTH_BOUND = 14


class PathScaleExceeded(RuntimeError):
    """Raised when a path enumeration is asked to run above its length bound."""


# ---------------------------------------------------------------------------
# Value types


@dataclass(frozen=True)
class MotzkinWord:
    steps: tuple[str, ...]

    def __init__(self, steps: Iterable[str]):
        object.__setattr__(self, "steps", tuple(steps))

    @property
    def m(self) -> int:
        return sum(1 for s in self.steps if s in ("U", "H1"))

    @property
    def n(self) -> int:
        return sum(1 for s in self.steps if s in ("D", "H2"))

    def heights(self) -> list[int]:
        """Height after each step (length len(steps) + 1, starts at 0)."""
        h = [0]
        for s in self.steps:
            h.append(h[-1] + (1 if s == "U" else -1 if s == "D" else 0))
        return h


@dataclass(frozen=True)
class QuarterWalk:
    start_x: int
    steps: tuple[str, ...]

    def __init__(self, start_x: int, steps: Iterable[str]):
        object.__setattr__(self, "start_x", start_x)
        object.__setattr__(self, "steps", tuple(steps))

    def positions(self) -> list[tuple[int, int]]:
        """Visited points including the start (length len(steps) + 1)."""
        pos = [(self.start_x, 0)]
        for s in self.steps:
            dx, dy = WALK_MOVES[s]
            x, y = pos[-1]
            pos.append((x + dx, y + dy))
        return pos

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.positions()[-1]


@dataclass(frozen=True)
class NestedPairBT:
    m: int
    n: int
    r: int
    bottom: tuple[str, ...]
    top: tuple[str, ...]

    def __init__(self, m: int, n: int, r: int, bottom: Iterable[str], top: Iterable[str]):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "bottom", tuple(bottom))
        object.__setattr__(self, "top", tuple(top))

    def bottom_heights(self) -> list[int]:
        return _ud_heights(self.n, self.bottom)

    def top_heights(self) -> list[int]:
        return _ud_heights(self.n, self.top)


def _ud_heights(start: int, steps: Sequence[str]) -> list[int]:
    h = [start]
    for s in steps:
        h.append(h[-1] + (1 if s == "U" else -1))
    return h


@dataclass(frozen=True)
class MotzkinStats:
    area: int
    returns: int
    axis_run_product_sum: int


@dataclass(frozen=True)
class WalkStats:
    height_sum: int
    x_axis_returns: int
    y_axis_returns_excl_last: int


@dataclass(frozen=True)
class MotzkinVerdict:
    valid: bool
    m: int | None = None
    n: int | None = None
    violation: str | None = None


@dataclass(frozen=True)
class WalkVerdict:
    valid: bool
    endpoint: tuple[int, int] | None = None
    violation: str | None = None


# ---------------------------------------------------------------------------
# Validation


def validate_motzkin(word: MotzkinWord | Iterable[str]) -> MotzkinVerdict:
    """Structured validity verdict; reports (m, n) when the word is valid."""
    steps = tuple(word.steps if isinstance(word, MotzkinWord) else word)
    for s in steps:
        if s not in MOTZKIN_ALPHABET:
            return MotzkinVerdict(False, violation=f"unknown letter {s!r}")
    h = 0
    for i, s in enumerate(steps):
        if s == "H2" and h == 0 and i + 1 < len(steps) and steps[i + 1] == "H1":
            return MotzkinVerdict(
                False, violation=f"H2 on the x-axis followed by H1 at step {i + 1}"
            )
        h += 1 if s == "U" else -1 if s == "D" else 0
        if h < 0:
            return MotzkinVerdict(False, violation=f"height drops below 0 at step {i + 1}")
    if h != 0:
        return MotzkinVerdict(False, violation=f"final height {h} is not 0")
    word = MotzkinWord(steps)
    return MotzkinVerdict(True, m=word.m, n=word.n)


def validate_walk(walk: QuarterWalk) -> WalkVerdict:
    """Structured validity verdict; reports the endpoint when valid."""
    if walk.start_x < 0:
        return WalkVerdict(False, violation=f"start x {walk.start_x} is negative")
    x, y = walk.start_x, 0
    prev_w_on_axis = False
    for i, s in enumerate(walk.steps):
        if s not in WALK_ALPHABET:
            return WalkVerdict(False, violation=f"unknown letter {s!r}")
        if s == "E" and prev_w_on_axis:
            return WalkVerdict(
                False, violation=f"W on the x-axis followed by E at step {i + 1}"
            )
        dx, dy = WALK_MOVES[s]
        x, y = x + dx, y + dy
        if x < 0 or y < 0:
            return WalkVerdict(
                False, violation=f"leaves the quadrant at step {i + 1} ({x}, {y})"
            )
        prev_w_on_axis = s == "W" and y == 0
    return WalkVerdict(True, endpoint=(x, y))


def validate_nested_pair(pair: NestedPairBT) -> str | None:
    """None when the pair is a canonical nested pair, else a description."""
    ell = pair.m + pair.n
    for name, steps in (("B", pair.bottom), ("T", pair.top)):
        if len(steps) != ell:
            return f"{name} has {len(steps)} steps, expected {ell}"
        if any(s not in ("U", "D") for s in steps):
            return f"{name} has letters outside U/D"
        if sum(1 for s in steps if s == "U") != pair.m:
            return f"{name} does not have exactly {pair.m} U steps"
    bh = pair.bottom_heights()
    th = pair.top_heights()
    if min(bh) < pair.r:
        return f"B drops below the floor y = {pair.r}"
    if any(b > t for b, t in zip(bh, th)):
        return "B rises above T"
    i = 0
    while i < ell:
        if bh[i] == th[i] and bh[i + 1] == th[i + 1]:
            j = i
            while j < ell and bh[j + 1] == th[j + 1]:
                j += 1
            block = pair.bottom[i:j]
            if "D" in block and "U" in block[block.index("D"):]:
                return f"shared block at steps {i + 1}..{j} is not U-steps-first"
            i = j
        else:
            i += 1
    return None


# ---------------------------------------------------------------------------
# Statistics


def motzkin_stats(word: MotzkinWord | Iterable[str]) -> MotzkinStats:
    """Area below the word, D-step returns to the axis, and the sum of
    (#H1 * #H2) over maximal horizontal runs on the axis."""
    verdict = validate_motzkin(word)
    if not verdict.valid:
        raise ValueError(f"invalid bicolored Motzkin word: {verdict.violation}")
    steps = tuple(word.steps if isinstance(word, MotzkinWord) else word)
    area = 0
    returns = 0
    run_product_sum = 0
    h = 0
    run_h1 = run_h2 = 0
    in_run = False
    for s in steps:
        if h == 0 and s in ("H1", "H2"):
            in_run = True
            if s == "H1":
                run_h1 += 1
            else:
                run_h2 += 1
        else:
            if in_run:
                run_product_sum += run_h1 * run_h2
                run_h1 = run_h2 = 0
                in_run = False
            h += 1 if s == "U" else -1 if s == "D" else 0
            if s == "D" and h == 0:
                returns += 1
        area += h
    if in_run:
        run_product_sum += run_h1 * run_h2
    return MotzkinStats(area, returns, run_product_sum)


def motzkin_area_by_trapezoids(word: MotzkinWord) -> Fraction:
    """Independent area computation: sum of per-step trapezoids (full squares
    plus half triangles).  Agrees with MotzkinStats.area for these step sets."""
    h = word.heights()
    return sum((Fraction(h[i] + h[i + 1], 2) for i in range(len(word.steps))), Fraction(0))


def walk_stats(walk: QuarterWalk) -> WalkStats:
    """Sum of heights after each step, SE returns to the x-axis, and W/NW
    returns to the y-axis not counting the final step."""
    verdict = validate_walk(walk)
    if not verdict.valid:
        raise ValueError(f"invalid quarter-plane walk: {verdict.violation}")
    pos = walk.positions()
    height_sum = sum(y for _, y in pos[1:])
    x_returns = sum(
        1 for i, s in enumerate(walk.steps) if s == "SE" and pos[i + 1][1] == 0
    )
    y_returns = sum(
        1
        for i, s in enumerate(walk.steps)
        if s in ("W", "NW") and pos[i + 1][0] == 0 and i != len(walk.steps) - 1
    )
    return WalkStats(height_sum, x_returns, y_returns)


# ---------------------------------------------------------------------------
# Brute-force enumeration


def enumerate_motzkin(m: int, n: int) -> list[MotzkinWord]:
    """All valid words with parameters (m, n) in lexicographic order under
    U < D < H1 < H2."""
    if m < 0 or n < 0:
        raise ValueError("parameters must be non-negative")
    if m + n > ENUMERATION_LENGTH_BOUND:
        raise PathScaleExceeded(
            f"enumeration bound exceeded: length {m + n} > {ENUMERATION_LENGTH_BOUND}"
        )
    out: list[MotzkinWord] = []
    steps: list[str] = []

    def rec(left_m: int, left_n: int, h: int, prev_h2_on_axis: bool) -> None:
        if left_m == 0 and left_n == 0:
            if h == 0:
                out.append(MotzkinWord(steps))
            return
        if h > left_n:  # not enough D budget left to come back down
            return
        for s in MOTZKIN_ALPHABET:
            if s in ("U", "H1"):
                if left_m == 0:
                    continue
            else:
                if left_n == 0:
                    continue
            if s == "D" and h == 0:
                continue
            if s == "H1" and prev_h2_on_axis:
                continue
            steps.append(s)
            rec(
                left_m - (s in ("U", "H1")),
                left_n - (s in ("D", "H2")),
                h + (1 if s == "U" else -1 if s == "D" else 0),
                s == "H2" and h == 0,
            )
            steps.pop()

    rec(m, n, 0, False)
    return out


def enumerate_walks(h: int, s: int, length: int) -> list[QuarterWalk]:
    """All valid walks of the given length from (h, 0) to (s, 0), in
    lexicographic order under E < W < SE < NW."""
    if h < 0 or s < 0 or length < 0:
        raise ValueError("parameters must be non-negative")
    if length > ENUMERATION_LENGTH_BOUND:
        raise PathScaleExceeded(
            f"enumeration bound exceeded: length {length} > {ENUMERATION_LENGTH_BOUND}"
        )
    out: list[QuarterWalk] = []
    steps: list[str] = []

    def rec(x: int, y: int, left: int, prev_w_on_axis: bool) -> None:
        # every step moves x by 1, so left and s - x must agree in parity;
        # reaching (s, 0) needs y net SE steps plus |s - x - y| free moves
        if y + abs(s - x - y) > left or (left - (s - x)) % 2:
            return
        if left == 0:
            out.append(QuarterWalk(h, steps))
            return
        for step in WALK_ALPHABET:
            if step == "E" and prev_w_on_axis:
                continue
            dx, dy = WALK_MOVES[step]
            nx, ny = x + dx, y + dy
            if nx < 0 or ny < 0:
                continue
            steps.append(step)
            rec(nx, ny, left - 1, step == "W" and ny == 0)
            steps.pop()

    rec(h, 0, length, False)
    return out


# ---------------------------------------------------------------------------
# Text encodings

_MOTZKIN_TO_TOKEN = {"U": "U", "D": "D", "H1": "1", "H2": "2"}
_TOKEN_TO_MOTZKIN = {v: k for k, v in _MOTZKIN_TO_TOKEN.items()}


def motzkin_to_text(word: MotzkinWord) -> str:
    return " ".join(_MOTZKIN_TO_TOKEN[s] for s in word.steps)


def motzkin_from_text(text: str) -> MotzkinWord:
    tokens = text.split()
    try:
        return MotzkinWord(_TOKEN_TO_MOTZKIN[t] for t in tokens)
    except KeyError as e:
        raise ValueError(f"unknown Motzkin token {e.args[0]!r}") from None


def walk_to_text(walk: QuarterWalk) -> str:
    return " ".join(s.lower() for s in walk.steps)


def walk_from_text(start_x: int, text: str) -> QuarterWalk:
    tokens = text.split()
    upper = [t.upper() for t in tokens]
    for t in upper:
        if t not in WALK_ALPHABET:
            raise ValueError(f"unknown walk token {t.lower()!r}")
    return QuarterWalk(start_x, upper)


def nested_pair_to_text(pair: NestedPairBT) -> str:
    return "\n".join(
        (f"{pair.m} {pair.n} {pair.r}", "".join(pair.bottom), "".join(pair.top))
    )


def nested_pair_from_text(text: str) -> NestedPairBT:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if len(lines) != 3:
        raise ValueError("expected three lines: 'm n r', B word, T word")
    try:
        m, n, r = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise ValueError(f"bad header line {lines[0]!r}") from None
    for ln in lines[1:]:
        if any(c not in "UD" for c in ln):
            raise ValueError(f"path line has letters outside U/D: {ln!r}")
    return NestedPairBT(m, n, r, tuple(lines[1]), tuple(lines[2]))
