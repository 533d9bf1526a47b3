"""Threshold solving: the problem size where quantum beats classical.

Solves f(n*) = C * g(n*) in log10 space. The reported threshold is the
ceiling of the largest root, i.e. the size beyond which the classical
cost stays at or above C times the quantum cost.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar

from .exprs import (
    Const,
    DomainError,
    Expr,
    Mul,
    Ordering,
    Pow,
    Var,
    asymptotic_compare,
    eval_log10_gap,
    parse,
)
from .magnitude import EXACT_INT_LIMIT, LogMagnitude, snap_int

DOMAIN_FLOOR = math.log10(2.0)

# Root search gives up past x = 10^9 (n = 10^(10^9)); nothing the grammar
# can express crosses later than that without having crossed before.
SEARCH_CAP = 1e9

_BISECT_REL_TOL = 1e-13

# Integer refinement treats |h| below this many decades as equality, so
# exact-integer roots survive evaluation noise (~1e-15) while genuinely
# fractional roots as close as a few parts in 10^12 still resolve.
_EQUALITY_TOL = 1e-12

# The refinement scan starts this many decades below the bisected root,
# comfortably past the bisection error, and walks the integers upward.
_SCAN_BACKOFF = 1e-11
_SCAN_LIMIT = 30_000


class InvalidConstantError(ValueError):
    """The overhead constant C must represent a value >= 1."""


class RootSearchError(RuntimeError):
    """The bracket search exhausted its range; indicates a solver defect."""


@dataclass(frozen=True)
class ProblemSize:
    """A problem size, exact while it fits below 10^15, log10-only beyond."""

    log10: float
    exact: int | None = None

    @classmethod
    def from_int(cls, n: int) -> "ProblemSize":
        if n < 2:
            raise ValueError(f"problem sizes start at 2, got {n}")
        return cls(math.log10(n), n)

    @classmethod
    def from_log10(cls, x: float) -> "ProblemSize":
        """Ceiling of 10^x as a ProblemSize (exact when small enough)."""
        if x < EXACT_INT_LIMIT:
            return cls.from_int(max(2, snap_int(10.0 ** x)))
        return cls(x, None)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def display(self) -> str:
        """Paper-style formatting: exact below 10^4, otherwise 10^k."""
        if self.exact is not None and self.exact < 10_000:
            return str(self.exact)
        return f"10^{round(self.log10)}"


@dataclass(frozen=True)
class Threshold:
    """Finite threshold (with the continuous root) or no advantage at all."""

    size: ProblemSize | None
    log10_root: float | None = None

    NO_ADVANTAGE: ClassVar["Threshold"]

    @classmethod
    def finite(cls, size: ProblemSize, log10_root: float) -> "Threshold":
        return cls(size, log10_root)

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def display(self) -> str:
        return self.size.display() if self.size is not None else "no-advantage"


Threshold.NO_ADVANTAGE = Threshold(None, None)


class CellClass(enum.Enum):
    """Traffic-light relevance buckets for grid cells."""

    GREEN = "green"    # finite n* <= 10^5
    YELLOW = "yellow"  # finite n* > 10^5
    RED = "red"        # no asymptotic advantage


def classify(threshold: Threshold) -> CellClass:
    if not threshold.is_finite:
        return CellClass.RED
    size = threshold.size
    if size.exact is not None:
        return CellClass.GREEN if size.exact <= 100_000 else CellClass.YELLOW
    return CellClass.GREEN if size.log10 <= 5.0 else CellClass.YELLOW


def _power_form(expr: Expr) -> tuple[float, Fraction] | None:
    """Decompose a pure power law into (log10 coefficient, degree)."""
    if isinstance(expr, Var):
        return 0.0, Fraction(1)
    if isinstance(expr, Const):
        return math.log10(expr.value), Fraction(0)
    if isinstance(expr, Pow):
        inner = _power_form(expr.base)
        if inner is None:
            return None
        coeff, degree = inner
        return float(expr.exponent) * coeff, expr.exponent * degree
    if isinstance(expr, Mul):
        coeff, degree = 0.0, Fraction(0)
        for child in expr.children:
            inner = _power_form(child)
            if inner is None:
                return None
            coeff += inner[0]
            degree += inner[1]
        return coeff, degree
    return None


def solve_threshold(classical: Expr, quantum: Expr, c: LogMagnitude) -> Threshold:
    """Threshold size n* with f(n) >= C * g(n) for all n >= n*.

    Returns NO_ADVANTAGE when the classical runtime does not grow strictly
    faster than the quantum one. When the inequality already holds across
    the whole n >= 2 domain the threshold is 2.
    """
    if c.log10 < 0:
        raise InvalidConstantError(f"C must be at least 1, got 10^{c.log10:g}")
    if asymptotic_compare(classical, quantum) is not Ordering.GREATER:
        return Threshold.NO_ADVANTAGE

    analytic = _solve_power_law(classical, quantum, c)
    if analytic is not None:
        return analytic

    def h(x: float) -> float | None:
        try:
            value = eval_log10_gap(classical, quantum, x) - c.log10
        except DomainError:
            return None
        return None if math.isnan(value) else value

    bracket = _last_crossing(h)
    if bracket is None:
        # h > 0 wherever defined: advantage from the smallest size on.
        return Threshold.finite(ProblemSize.from_int(2), DOMAIN_FLOOR)
    root = _bisect(h, *bracket)
    if root >= EXACT_INT_LIMIT:
        return Threshold.finite(ProblemSize(root, None), root)
    return Threshold.finite(_refine_to_integer(h, root), root)


def _solve_power_law(
    classical: Expr, quantum: Expr, c: LogMagnitude
) -> Threshold | None:
    """Closed-form path for pure power laws: n* = ceil(C^(1/(a-b)))."""
    f = _power_form(classical)
    g = _power_form(quantum)
    if f is None or g is None:
        return None
    gap = f[1] - g[1]
    if gap <= 0:
        return None  # compare() already ruled these out, but stay safe
    root = (c.log10 + g[0] - f[0]) / float(gap)
    if root <= DOMAIN_FLOOR:
        return Threshold.finite(ProblemSize.from_int(2), DOMAIN_FLOOR)
    if root < EXACT_INT_LIMIT:
        if f[0] == 0.0 and g[0] == 0.0 and c.log10 <= EXACT_INT_LIMIT:
            exact = _exact_power_threshold(gap, c.log10)
            if exact is not None:
                return Threshold.finite(ProblemSize.from_int(exact), root)
            value = (10.0 ** c.log10) ** (1.0 / float(gap))
        else:
            value = 10.0 ** root
        return Threshold.finite(
            ProblemSize.from_int(max(2, snap_int(value))), root
        )
    return Threshold.finite(ProblemSize.from_log10(root), root)


def _exact_power_threshold(gap: Fraction, c_log10: float) -> int | None:
    """Smallest integer n with n^gap >= 10^c_log10, by integer arithmetic.

    Float pow() is only good to a few ulps, so near 10^12 the ceil can
    land one integer off. When C is an exact power of 10 scaled by the
    gap's denominator, n^gap >= 10^c_log10 becomes an all-integer
    comparison and the boundary is decided without rounding at all.
    """
    scaled = c_log10 * gap.denominator
    if not scaled.is_integer() or not 0 <= scaled <= 20_000:
        return None
    rhs = 10 ** int(scaled)
    p = gap.numerator
    n = max(2, snap_int(10.0 ** (c_log10 / float(gap))))
    while n > 2 and (n - 1) ** p >= rhs:
        n -= 1
    while n ** p < rhs:
        n += 1
    return n


def _last_crossing(h) -> tuple[float, float] | None:
    """Bracket the last sign change of h before it stays positive.

    Doubles x until h has been positive persistently, then walks the
    covered range with a fine geometric step so a crossing inside a
    coarse gap cannot be missed. Returns None when h never goes
    nonpositive at any sampled point.
    """
    x = DOMAIN_FLOOR
    positives = 0
    reach = None
    while x <= SEARCH_CAP:
        value = h(x)
        if value is not None and value > 0:
            positives += 1
            if positives >= 3:
                reach = x
                break
        else:
            positives = 0
        x *= 2.0
    if reach is None:
        raise RootSearchError("h(x) never turned positive below the search cap")

    step = 2.0 ** 0.125
    samples: list[tuple[float, float]] = []
    bracket = None
    x = DOMAIN_FLOOR
    while x <= reach * 2.0:
        value = h(x)
        if value is not None:
            if samples and samples[-1][1] <= 0.0 < value:
                bracket = (samples[-1][0], x)
            samples.append((x, value))
        x *= step
    return bracket


def _bisect(h, lo: float, hi: float) -> float:
    """Root of h in [lo, hi] with h(lo) <= 0 < h(hi)."""
    while hi - lo > _BISECT_REL_TOL * max(1.0, abs(hi)):
        mid = (lo + hi) / 2.0
        value = h(mid)
        if value is None or value <= 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def _refine_to_integer(h, root: float) -> ProblemSize:
    """Smallest integer n near the root with h(log10 n) >= -_EQUALITY_TOL."""
    k = max(2, math.floor(10.0 ** (root - _SCAN_BACKOFF)))
    for _ in range(_SCAN_LIMIT):
        value = h(math.log10(k))
        if value is not None and value >= -_EQUALITY_TOL:
            return ProblemSize.from_int(k)
        k += 1
    # This near the exact-representation limit the crossing integer is
    # numerically ambiguous; keep the magnitude alone.
    return ProblemSize(root, None)


def speedup_at(
    classical: Expr, quantum: Expr, c: LogMagnitude, n: ProblemSize
) -> float:
    """Signed decades of speedup at size n: log10(f(n) / (C g(n)))."""
    return eval_log10_gap(classical, quantum, n.log10) - c.log10


# The six runtime shapes of the published grids, fastest-growing first.
CANONICAL_RUNTIMES: tuple[tuple[str, Expr], ...] = tuple(
    (text, parse(text))
    for text in ("exp(n)", "n^3", "n^2", "n log(n)", "n", "log(n)")
)


@dataclass(frozen=True)
class GridCell:
    threshold: Threshold
    cell_class: CellClass


def threshold_grid(
    classical_list: list[Expr], quantum_list: list[Expr], c: LogMagnitude
) -> list[list[GridCell]]:
    """Matrix of thresholds: rows are classical runtimes, columns quantum."""
    grid = []
    for classical in classical_list:
        row = []
        for quantum in quantum_list:
            threshold = solve_threshold(classical, quantum, c)
            row.append(GridCell(threshold, classify(threshold)))
        grid.append(row)
    return grid


def canonical_grid(c: LogMagnitude) -> list[list[GridCell]]:
    exprs = [expr for _, expr in CANONICAL_RUNTIMES]
    return threshold_grid(exprs, exprs, c)
