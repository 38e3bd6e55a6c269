"""Exact generating-function engines for interval-closed set counting.

Three independent routes to the same numbers live here:

  * closed forms evaluated in exact rational arithmetic -- the rectangle
    series A(x, y) = 2/(1 - x - y + 2xy + sqrt((1-x-y)^2 - 4xy)), the
    bicolored Motzkin series C with C = 1 + (x+y)C + xyC^2, Narayana
    numbers, the staircase-minuscule series, and per-family polynomial
    formulas;

  * per-z coefficient recurrences for the walk generating functions
    F(x, y, z) (walks from the origin) and G(t, x, y, z) (walks from
    (h, 0), h tracked by t), driven by the functional equation

      F = [init] + z(x + 1/x + x/y + y/x) F
          - z(1/x + y/x) F(0,y) - z(x/y) F(x,0) - z^2 (F(x,0) - F(0,0))

    with [init] = 1 for F and 1/(1-tx) for G.  Multiplication by 1/x and
    x/y is carried out on an extended exponent range; every negative
    exponent must cancel exactly, and failure to cancel is a hard error,
    never a silent truncation;

  * a boundary-flagged dynamic program over walk states (x, y, flag) that
    knows nothing about the functional equation and serves as the
    cross-check engine.

All arithmetic is over exact rationals (fractions.Fraction) or Python
integers; integrality is asserted wherever a count is read off.  Series
values are immutable in spirit: callers must not mutate returned
coefficient mappings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

ORDER_BUDGET = 40


class SeriesBudgetExceeded(RuntimeError):
    """Requested truncation order above the configured budget."""


class NegativeExponentError(ArithmeticError):
    """A recurrence step left an uncancelled negative exponent (a sign or
    boundary bug, not a user error)."""


def _check_budget(*orders: int) -> None:
    for o in orders:
        if o < 0:
            raise ValueError("orders must be non-negative")
        if o > ORDER_BUDGET:
            raise SeriesBudgetExceeded(f"order {o} exceeds budget {ORDER_BUDGET}")


# ---------------------------------------------------------------------------
# Truncated multivariate power series over exact rationals


class TruncatedSeries:
    """Power series in named variables, truncated per variable.

    Coefficients are Fractions keyed by exponent tuples; absent keys are
    zero, and no stored exponent exceeds its variable's truncation order.
    """

    __slots__ = ("variables", "trunc", "coeffs")

    def __init__(
        self,
        variables: Sequence[str],
        trunc: Sequence[int],
        coeffs: Mapping[tuple[int, ...], Fraction | int] | None = None,
    ):
        self.variables = tuple(variables)
        self.trunc = tuple(trunc)
        if len(self.variables) != len(self.trunc):
            raise ValueError("one truncation order per variable")
        table: dict[tuple[int, ...], Fraction] = {}
        for exp, c in (coeffs or {}).items():
            if len(exp) != len(self.variables):
                raise ValueError(f"exponent {exp} has wrong arity")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            if any(e > t for e, t in zip(exp, self.trunc)):
                continue
            c = Fraction(c)
            if c:
                table[exp] = c
        self.coeffs = table

    @classmethod
    def constant(cls, variables, trunc, value=1) -> "TruncatedSeries":
        return cls(variables, trunc, {(0,) * len(tuple(variables)): Fraction(value)})

    @classmethod
    def variable(cls, variables, trunc, name) -> "TruncatedSeries":
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, trunc, {exp: Fraction(1)})

    def __getitem__(self, exp: tuple[int, ...]) -> Fraction:
        return self.coeffs.get(tuple(exp), Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.variables == other.variables
            and self.trunc == other.trunc
            and self.coeffs == other.coeffs
        )

    def _like(self, coeffs) -> "TruncatedSeries":
        return TruncatedSeries(self.variables, self.trunc, coeffs)

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.variables != other.variables or self.trunc != other.trunc:
            raise ValueError("series frames differ")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.variables, self.trunc, other)
        self._check_compatible(other)
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.variables, self.trunc, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return self._like({e: v * c for e, v in self.coeffs.items()})
        self._check_compatible(other)
        trunc = self.trunc
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                if any(e > t for e, t in zip(exp, trunc)):
                    continue
                out[exp] = out.get(exp, Fraction(0)) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse by Newton iteration X <- X(2 - SX)."""
        c0 = self[(0,) * len(self.variables)]
        if c0 == 0:
            raise ZeroDivisionError("series has no invertible constant term")
        x = TruncatedSeries.constant(self.variables, self.trunc, Fraction(1, 1) / c0)
        while True:
            nxt = x * (2 - self * x)
            if nxt == x:
                return x
            x = nxt

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return self._like({e: v / c for e, v in self.coeffs.items()})
        return self * other.inverse()

    def sqrt(self) -> "TruncatedSeries":
        """Square root by Newton iteration S <- (S + A/S)/2; needs constant
        term 1, iterated to the truncation-order fixpoint."""
        if self[(0,) * len(self.variables)] != 1:
            raise ValueError("series square root needs constant term 1")
        s = TruncatedSeries.constant(self.variables, self.trunc, 1)
        while True:
            nxt = (s + self * s.inverse()) * Fraction(1, 2)
            if nxt == s:
                return s
            s = nxt

    def shift_down(self, **monomial: int) -> "TruncatedSeries":
        """Exact division by a monomial, e.g. shift_down(x=1, y=1) divides
        by xy; raises when the series is not divisible."""
        delta = tuple(monomial.get(v, 0) for v in self.variables)
        out = {}
        for exp, c in self.coeffs.items():
            shifted = tuple(e - d for e, d in zip(exp, delta))
            if any(e < 0 for e in shifted):
                raise ValueError(f"series is not divisible: stray term {exp}")
            out[shifted] = c
        return self._like(out)

    def substitute_zero(self, name: str) -> "TruncatedSeries":
        """Set one variable to zero (keep only its exponent-0 slice)."""
        k = self.variables.index(name)
        return self._like({e: c for e, c in self.coeffs.items() if e[k] == 0})

    def to_json_dict(self) -> dict:
        terms = [
            {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
            for exp, c in sorted(self.coeffs.items())
        ]
        return {"vars": list(self.variables), "terms": terms}

    def integer_coefficient(self, exp: tuple[int, ...]) -> int:
        c = self[exp]
        if c.denominator != 1:
            raise ArithmeticError(f"coefficient at {exp} is not an integer: {c}")
        return c.numerator

    def __repr__(self):
        head = ", ".join(
            f"{exp}: {c}" for exp, c in sorted(self.coeffs.items())[:6]
        )
        return f"TruncatedSeries({self.variables}, trunc={self.trunc}, {{{head}, ...}})"


def series_from_json(data: dict, trunc: Sequence[int]) -> TruncatedSeries:
    coeffs = {
        tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]
    }
    return TruncatedSeries(data["vars"], trunc, coeffs)


# ---------------------------------------------------------------------------
# Closed forms: rectangles, bicolored Motzkin paths, Narayana numbers


@lru_cache(maxsize=32)
def rectangle_series(mmax: int, nmax: int) -> TruncatedSeries:
    """Series whose (m, n) coefficient counts the ICS of [m] x [n]."""
    _check_budget(mmax, nmax)
    one = TruncatedSeries.constant(("x", "y"), (mmax, nmax))
    x = TruncatedSeries.variable(("x", "y"), (mmax, nmax), "x")
    y = TruncatedSeries.variable(("x", "y"), (mmax, nmax), "y")
    root = ((1 - x - y) * (1 - x - y) - 4 * x * y).sqrt()
    return (2 * one) / (1 - x - y + 2 * x * y + root)

def rectangle_counts(mmax: int, nmax: int) -> dict[tuple[int, int], int]:
    series = rectangle_series(mmax, nmax)
    return {
        (m, n): series.integer_coefficient((m, n))
        for m in range(mmax + 1)
        for n in range(nmax + 1)
    }


@lru_cache(maxsize=32)
def bicolored_series(mmax: int, nmax: int) -> TruncatedSeries:
    """Bicolored Motzkin path series C(x, y) with C = 1 + (x+y)C + xyC^2,
    x marking up/first-color steps and y down/second-color steps."""
    _check_budget(mmax + 1, nmax + 1)
    frame = (("x", "y"), (mmax + 1, nmax + 1))
    x = TruncatedSeries.variable(*frame, "x")
    y = TruncatedSeries.variable(*frame, "y")
    root = ((1 - x - y) * (1 - x - y) - 4 * x * y).sqrt()
    numer = 1 - x - y - root
    c = numer.shift_down(x=1, y=1) / 2
    return TruncatedSeries(("x", "y"), (mmax, nmax), c.coeffs)


def bicolored_counts(mmax: int, nmax: int) -> dict[tuple[int, int], int]:
    series = bicolored_series(mmax, nmax)
    return {
        (m, n): series.integer_coefficient((m, n))
        for m in range(mmax + 1)
        for n in range(nmax + 1)
    }


def narayana(a: int, b: int) -> int:
    """N(a, b) = C(a, b) * C(a, b - 1) / a."""
    if a <= 0:
        raise ValueError("Narayana numbers need a >= 1")
    num = comb(a, b) * comb(a, b - 1)
    if num % a:
        raise ArithmeticError(f"Narayana division failed for ({a}, {b})")
    return num // a


def full_count(m: int, n: int) -> int:
    """Number of ICS of [m] x [n] whose bounding paths meet only at their
    endpoints; read off the bicolored path series, equals N(m+n-1, n)."""
    if m < 1 or n < 1:
        raise ValueError("full ICS counting needs m, n >= 1")
    return bicolored_series(m, n).integer_coefficient((m - 1, n - 1))


def closed_form_count(family: str, params) -> int:
    """Per-family closed formulas: 'chain' n, 'ordinal_sum' sizes,
    'two_by_n' n, 'three_by_n' n."""
    if family == "chain":
        n = int(params)
        if n < 0:
            raise ValueError("chain length must be >= 0")
        return n * (n + 1) // 2 + 1
    if family == "ordinal_sum":
        sizes = list(params)
        if any(a <= 0 for a in sizes):
            raise ValueError("antichain sizes must be positive")
        singles = [2**a - 1 for a in sizes]
        return (
            1
            + sum(singles)
            + sum(
                singles[i] * singles[j]
                for i in range(len(singles))
                for j in range(i + 1, len(singles))
            )
        )
    if family == "two_by_n":
        n = int(params)
        num = n**4 + 4 * n**3 + 17 * n**2 + 14 * n + 12
        if num % 12:
            raise ArithmeticError(f"two_by_n numerator {num} not divisible by 12")
        return num // 12
    if family == "three_by_n":
        n = int(params)
        num = n**6 + 9 * n**5 + 61 * n**4 + 159 * n**3 + 370 * n**2 + 264 * n + 144
        if num % 144:
            raise ArithmeticError(f"three_by_n numerator {num} not divisible by 144")
        return num // 144
    raise ValueError(f"unknown closed-form family {family!r}")


# ---------------------------------------------------------------------------
# Staircase (type B minuscule) counts


@lru_cache(maxsize=32)
def b_minuscule_series(nmax: int) -> TruncatedSeries:
    """Series counting ICS of the staircase half of [n] x [n], equivalently
    mirror-symmetric ICS of the square."""
    _check_budget(nmax)
    frame = (("x",), (nmax,))
    x = TruncatedSeries.variable(*frame, "x")
    root = (1 - 4 * x).sqrt()
    numer = 4 - 10 * x + 8 * x * x
    denom = 2 - 11 * x + 14 * x * x - 8 * x * x * x + (2 - 3 * x) * root
    return numer / denom


def b_minuscule_counts(nmax: int) -> list[int]:
    series = b_minuscule_series(nmax)
    return [series.integer_coefficient((n,)) for n in range(nmax + 1)]


# ---------------------------------------------------------------------------
# Functional-equation coefficient recurrences


@dataclass(frozen=True)
class CoeffPolynomial:
    """A per-z-order coefficient: an integer polynomial keyed by exponent
    tuples over the named variables (walk endpoint counts, so all values
    are non-negative in a correct run)."""

    variables: tuple[str, ...]
    coeffs: Mapping[tuple[int, ...], int]

    def __getitem__(self, exp: tuple[int, ...]) -> int:
        return self.coeffs.get(tuple(exp), 0)

    def to_series(self) -> TruncatedSeries:
        trunc = tuple(
            max((e[k] for e in self.coeffs), default=0)
            for k in range(len(self.variables))
        )
        return TruncatedSeries(self.variables, trunc, self.coeffs)


def _advance(
    prev: dict[tuple[int, ...], int], prev2: dict[tuple[int, ...], int]
) -> dict[tuple[int, ...], int]:
    """One z-order of the walk functional equation.  Keys end in the (x, y)
    exponent pair; leading components (the t exponent, if any) ride along."""
    out: dict[tuple[int, ...], int] = {}

    def add(key, c):
        out[key] = out.get(key, 0) + c

    for key, c in prev.items():
        *p, i, j = key
        add((*p, i + 1, j), c)  # times x
        add((*p, i - 1, j), c)  # times 1/x, possibly negative for now
        add((*p, i + 1, j - 1), c)  # times x/y
        add((*p, i - 1, j + 1), c)  # times y/x
    for key, c in prev.items():
        *p, i, j = key
        if i == 0:  # minus (1/x + y/x) times the x = 0 slice
            add((*p, -1, j), -c)
            add((*p, -1, j + 1), -c)
        if j == 0:  # minus (x/y) times the y = 0 slice
            add((*p, i + 1, -1), -c)
    for key, c in prev2.items():
        *p, i, j = key
        if j == 0 and i > 0:  # minus (f(x,0) - f(0,0)) one z-order back
            add(key, -c)

    cleaned: dict[tuple[int, ...], int] = {}
    for key, c in out.items():
        if c == 0:
            continue
        *_, i, j = key
        if i < 0 or j < 0:
            raise NegativeExponentError(
                f"uncancelled exponent at {key} (coefficient {c})"
            )
        if c < 0:
            raise NegativeExponentError(
                f"negative walk count {c} at {key}; boundary terms are wrong"
            )
        cleaned[key] = c
    return cleaned


_F_CACHE: list[dict[tuple[int, int], int]] = [{(0, 0): 1}]


def _f_upto(order: int) -> list[dict[tuple[int, int], int]]:
    _check_budget(order)
    while len(_F_CACHE) <= order:
        ell = len(_F_CACHE)
        prev = _F_CACHE[ell - 1]
        prev2 = _F_CACHE[ell - 2] if ell >= 2 else {}
        _F_CACHE.append(_advance(prev, prev2))
    return _F_CACHE[: order + 1]


def typeA_F_coeffs(order: int) -> list[CoeffPolynomial]:
    """Coefficients f_0..f_order of the origin-walk series F(x, y, z)."""
    return [CoeffPolynomial(("x", "y"), dict(f)) for f in _f_upto(order)]


def typeA_counts(n: int) -> int:
    """Number of ICS of the root triangle with n - 1 minimal elements: the
    constant term at z-order 2n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _f_upto(2 * n)[2 * n].get((0, 0), 0)


def symmetric_typeA_counts(order: int) -> list[int]:
    """Per length l, walks from the origin not ending with W on the x-axis:
    mirror-symmetric ICS of the root triangle with l - 1 minimal elements."""
    fs = _f_upto(order)
    out = [1]
    for ell in range(1, order + 1):
        total = sum(fs[ell].values())
        end_w_on_axis = sum(
            c for (i, j), c in fs[ell - 1].items() if j == 0 and i > 0
        )
        out.append(total - end_w_on_axis)
    return out


def b_root_counts(n: int) -> int:
    """Number of ICS of the type B root poset of rank n: symmetric count at
    even length 2n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return symmetric_typeA_counts(2 * n)[2 * n]


_G_CACHE: dict[int, list[dict[tuple[int, int, int], int]]] = {}


def _g_upto(order: int, tmax: int) -> list[dict[tuple[int, int, int], int]]:
    _check_budget(order, tmax)
    cache = _G_CACHE.setdefault(tmax, [{(h, h, 0): 1 for h in range(tmax + 1)}])
    while len(cache) <= order:
        ell = len(cache)
        prev2 = cache[ell - 2] if ell >= 2 else {}
        cache.append(_advance(cache[ell - 1], prev2))
    return cache[: order + 1]


def truncated_coeffs(order: int, tmax: int) -> list[CoeffPolynomial]:
    """Coefficients g_0..g_order of G(t, x, y, z): walks started at (h, 0)
    carry t^h, truncated at t-degree tmax."""
    return [CoeffPolynomial(("t", "x", "y"), dict(g)) for g in _g_upto(order, tmax)]


def truncated_counts(
    mmax: int, nmax: int, rmax: int | None = None
) -> dict[tuple[int, int, int], int]:
    """Table of ICS counts of [m] x [n] minus its bottom r ranks, for all
    m <= mmax, n <= nmax, r <= min(m, n, rmax), via the G recurrence: the
    count sits at t^(n-r) x^(m-r) z^(m+n)."""
    gs = _g_upto(mmax + nmax, nmax)
    out = {}
    for m in range(mmax + 1):
        for n in range(nmax + 1):
            rtop = min(m, n) if rmax is None else min(m, n, rmax)
            for r in range(rtop + 1):
                out[(m, n, r)] = gs[m + n].get((n - r, m - r, 0), 0)
    return out


def truncated_series_head(order: int, tmax: int) -> list[dict[tuple[int, int], int]]:
    """Per z-order coefficients of (1 - tx) G(t, x, 0, z): the series head
    with the start-shift factor divided out."""
    gs = _g_upto(order, tmax)
    out = []
    for g in gs:
        slice_ = {(h, i): c for (h, i, j), c in g.items() if j == 0}
        head = dict(slice_)
        for (h, i), c in slice_.items():
            head[(h + 1, i + 1)] = head.get((h + 1, i + 1), 0) - c
        out.append({k: c for k, c in head.items() if c and k[0] <= tmax})
    return out


# ---------------------------------------------------------------------------
# Independent engine: boundary-flagged walk dynamic program


def walk_dp_coeffs(order: int, start_x: int = 0) -> list[dict[tuple[int, int], int]]:
    """Endpoint count tables per length for restricted quarter-plane walks
    from (start_x, 0), via a DP over (x, y, just-stepped-W-on-axis) states.
    Knows nothing about the functional equation."""
    if order < 0 or start_x < 0:
        raise ValueError("order and start must be non-negative")
    state: dict[tuple[int, int, bool], int] = {(start_x, 0, False): 1}
    out = [{(start_x, 0): 1}]
    for _ in range(order):
        nxt: dict[tuple[int, int, bool], int] = {}

        def bump(x, y, flag, c):
            key = (x, y, flag)
            nxt[key] = nxt.get(key, 0) + c

        for (x, y, flag), c in state.items():
            if not flag:
                bump(x + 1, y, False, c)  # E
            if x > 0:
                bump(x - 1, y, y == 0, c)  # W
                bump(x - 1, y + 1, False, c)  # NW
            if y > 0:
                bump(x + 1, y - 1, False, c)  # SE
        state = nxt
        table: dict[tuple[int, int], int] = {}
        for (x, y, _), c in state.items():
            table[(x, y)] = table.get((x, y), 0) + c
        out.append(table)
    return out


def walk_dp_counts(
    hmax: int, smax: int, lmax: int
) -> dict[tuple[int, int, int], int]:
    """Counts of restricted walks from (h, 0) to (s, 0) of each length."""
    out = {}
    for h in range(hmax + 1):
        tables = walk_dp_coeffs(lmax, h)
        for ell, table in enumerate(tables):
            for s in range(smax + 1):
                out[(h, s, ell)] = table.get((s, 0), 0)
    return out
