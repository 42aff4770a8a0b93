"""Closed-form arithmetic for r-equitable chromatic thresholds.

Two graph families are handled, both built from complete graphs on m and n
vertices with 2 <= m (and m <= n where noted):

* the Kronecker product K_m x K_n: vertices are the cells (i, j) of an
  m-by-n grid, and two cells are adjacent exactly when they differ in both
  coordinates.  Independent sets are precisely the subsets of a single row
  or a single column.
* the complete multipartite graph K_{m(n)}: m parts of n vertices each,
  with every cross-part pair adjacent.  Independent sets are the subsets
  of a single part.  K_m x K_n is a spanning subgraph of K_{m(n)} (identify
  row i with part i), so any class structure legal in K_{m(n)} is legal in
  the product as well.

A coloring is r-equitable when the color classes are independent and any
two class sizes differ by at most r.  Classes are allowed to be empty (an
empty class has size 0), which is what makes k larger than the vertex
count workable.  The r-equitable chromatic threshold of G is the least k
such that G is r-equitably k'-colorable for every k' >= k; colorability is
not monotone in k below that point, which is why the threshold is a
genuine object and not just "least colorable k".

All quantities here are exact integers; every floor and ceiling is integer
division.  The derived quantities:

* ``gamma(m, n, r)`` = min(n - r*(n // (m+r)), m * ceil(n / (m+r))).
  Every k >= gamma is achievable for the product graph, so the product
  threshold never exceeds gamma.  Which of the two expressions wins is
  decided entirely by the residue t = n mod (m+r): the first is strictly
  smaller iff 1 <= t <= m-1, they are equal iff t is 0 or m, and the
  second is strictly smaller iff m+1 <= t <= m+r-1.
* ``theta_balanced(n, r)`` = least theta >= 1 with
  n // (theta+1) < ceil(n / (theta+r)).  The multipartite threshold is
  m * ceil(n / (theta_balanced + r)): below it some class count splits a
  part too unevenly, at or above it every count works.
* ``theta_min(m, n, r)`` adds the cap m * ceil(n / (theta+r)) <= gamma to
  the same scan; it feeds the product threshold's generic branch.

The product threshold itself has two branches.  When the residue t lies in
[2, m-1] and the two-sided rounding gap ceil(n / s) - n // (s+1) exceeds r
(where s = n // (m+r)), the threshold is n - r*s; otherwise it is
m * ceil(n / (theta_min + r)).  Membership for a single k (rather than the
threshold) is decided by ``kronecker_colorable``: k is good iff k is at
least the chromatic number m and either k >= gamma or the multipartite
size condition ceil(n / (k // m)) - n // ceil(k / m) <= r holds.

Everything in this module is cross-checked elsewhere against brute-force
oracles that know nothing about these formulas (see equicolor.oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InternalCheckError, ParameterDomainError

# ============================================================
# Reason tags for single-k decisions (shared with the CLI)
# ============================================================

REASON_BELOW_CHROMATIC = "below-chromatic"
REASON_AT_OR_ABOVE_GAMMA = "at-or-above-gamma"
REASON_MULTIPARTITE_CONDITION = "multipartite-condition"
REASON_MULTIPARTITE_FAILED = "multipartite-condition-failed"


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a / b for b >= 1, in exact integer arithmetic."""
    return -(-a // b)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterDomainError(message)


def _require_int(name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParameterDomainError(f"{name} must be an int, got {value!r}")
    if value < minimum:
        raise ParameterDomainError(f"{name} must be >= {minimum}, got {value}")


# ============================================================
# Parameters
# ============================================================


@dataclass(frozen=True)
class Params:
    """Instance parameters: factor sizes m, n and allowed size gap r >= 1.

    For the Kronecker product the two factors commute, so product-side
    functions require the canonical orientation m <= n (use
    :meth:`canonical`).  K_{m(n)} is *not* symmetric in m and n, so
    multipartite-side functions accept any orientation and callers must
    not canonicalize for them.
    """

    m: int
    n: int
    r: int

    def __post_init__(self) -> None:
        _require_int("m", self.m, 1)
        _require_int("n", self.n, 1)
        _require_int("r", self.r, 1)

    def canonical(self) -> "Params":
        """The orientation with m <= n, swapping the factors if needed."""
        if self.m > self.n:
            return Params(self.n, self.m, self.r)
        return self


# ============================================================
# gamma and its trichotomy
# ============================================================


class Trichotomy(Enum):
    """Which side of gamma's min wins, decided by t = n mod (m+r)."""

    LESS = "less"  # n - r*s strictly smaller; t in [1, m-1]
    EQUAL = "equal"  # both sides agree; t in {0, m}
    GREATER = "greater"  # m*ceil(n/(m+r)) strictly smaller; t in [m+1, m+r-1]


@dataclass(frozen=True)
class GammaResult:
    value: int
    trichotomy: Trichotomy
    residue: int  # t = n mod (m+r), determines the trichotomy


def gamma(p: Params) -> GammaResult:
    """min(n - r*(n // (m+r)), m*ceil(n / (m+r))), with the winning side.

    Requires m >= 2.  gamma is the point from which every larger class
    count is achievable for K_m x K_n; it always satisfies m <= gamma and,
    when m <= n, gamma <= n.
    """
    _require(p.m >= 2, f"gamma requires m >= 2, got m={p.m}")
    s = p.n // (p.m + p.r)
    first = p.n - p.r * s
    second = p.m * ceil_div(p.n, p.m + p.r)
    if first < second:
        tri = Trichotomy.LESS
    elif first == second:
        tri = Trichotomy.EQUAL
    else:
        tri = Trichotomy.GREATER
    return GammaResult(min(first, second), tri, p.n % (p.m + p.r))


# ============================================================
# theta scans
# ============================================================


def theta_balanced(n: int, r: int) -> int:
    """Least theta >= 1 with n // (theta+1) < ceil(n / (theta+r)).

    The condition says: splitting n items into theta+1 near-equal pieces
    already makes some piece smaller than every piece of a split into
    theta+r pieces can be, i.e. piece counts between theta+1 and theta+r
    cannot coexist within gap r.  The scan terminates: theta = n always
    satisfies the condition (n // (n+1) = 0 < 1).
    """
    _require_int("n", n, 1)
    _require_int("r", r, 1)
    theta = 1
    while not (n // (theta + 1) < ceil_div(n, theta + r)):
        theta += 1
    return theta


def theta_min(p: Params) -> int:
    """Least theta >= 1 passing the theta_balanced test and the gamma cap.

    The extra requirement is m * ceil(n / (theta+r)) <= gamma(p): the class
    count the scan would propose must not overshoot the always-achievable
    bound.  Requires 2 <= m <= n.  Terminates for the same reason as
    theta_balanced does, because m * ceil(n / (n+r)) = m <= gamma.
    """
    _require(p.m >= 2, f"theta_min requires m >= 2, got m={p.m}")
    _require(p.m <= p.n, f"theta_min requires m <= n, got m={p.m} n={p.n}")
    cap = gamma(p).value
    theta = 1
    while True:
        balanced = p.n // (theta + 1) < ceil_div(p.n, theta + p.r)
        if balanced and p.m * ceil_div(p.n, theta + p.r) <= cap:
            return theta
        theta += 1
        if theta > p.n + p.r:  # unreachable; documented terminator
            raise InternalCheckError(f"theta_min scan ran away for {p}")


# ============================================================
# Thresholds
# ============================================================


class ThresholdCase(Enum):
    """Which branch produced a Kronecker threshold value."""

    RESIDUE_SMALL_GAP = "residue-small-gap"
    OTHERWISE = "otherwise"


@dataclass(frozen=True)
class ThresholdResult:
    value: int
    case: ThresholdCase
    theta: int | None  # theta_min when the OTHERWISE branch fired, else None
    gamma: GammaResult


def threshold_multipartite(p: Params) -> int:
    """r-equitable chromatic threshold of K_{m(n)}: m*ceil(n/(theta+r)).

    theta is theta_balanced(n, r).  Requires m >= 2 (m = 1 would be an
    edgeless graph, which the CLI handles by convention instead).  Note
    the asymmetry: K_{m(n)} has m parts of size n, so do not swap m and n.
    """
    _require(p.m >= 2, f"threshold_multipartite requires m >= 2, got m={p.m}")
    theta = theta_balanced(p.n, p.r)
    return p.m * ceil_div(p.n, theta + p.r)


def threshold_kronecker(p: Params) -> ThresholdResult:
    """r-equitable chromatic threshold of K_m x K_n, with branch detail.

    Requires 2 <= m <= n.  Let s = n // (m+r) and t = n mod (m+r).  The
    residue branch fires when 2 <= t <= m-1 and
    ceil(n / s) - n // (s+1) > r, and then the threshold is n - r*s.
    (t >= 2 forces s >= 1 there: t <= m - 1 <= n - 1 means n > t, so
    n >= m + r.)  Otherwise the threshold is m * ceil(n / (theta_min + r)).
    """
    _require(p.m >= 2, f"threshold_kronecker requires m >= 2, got m={p.m}")
    _require(
        p.m <= p.n,
        f"threshold_kronecker requires the canonical orientation m <= n, "
        f"got m={p.m} n={p.n}",
    )
    g = gamma(p)
    s = p.n // (p.m + p.r)
    t = g.residue
    if 2 <= t <= p.m - 1:
        if s < 1:
            raise InternalCheckError(f"residue branch with s=0 for {p}")
        if ceil_div(p.n, s) - p.n // (s + 1) > p.r:
            return ThresholdResult(p.n - p.r * s, ThresholdCase.RESIDUE_SMALL_GAP, None, g)
    theta = theta_min(p)
    value = p.m * ceil_div(p.n, theta + p.r)
    return ThresholdResult(value, ThresholdCase.OTHERWISE, theta, g)


# ============================================================
# Single-k membership
# ============================================================


def multipartite_colorable(p: Params, k: int) -> bool:
    """Is K_{m(n)} r-equitably k-colorable?

    True iff k >= m and ceil(n / (k // m)) - n // ceil(k / m) <= r: the
    smallest class forced by giving some part only k // m colors must stay
    within r of the largest class allowed when a part has ceil(k / m)
    colors.  Requires m >= 2, k >= 1.
    """
    _require(p.m >= 2, f"multipartite_colorable requires m >= 2, got m={p.m}")
    _require_int("k", k, 1)
    if k < p.m:
        return False
    return ceil_div(p.n, k // p.m) - p.n // ceil_div(k, p.m) <= p.r


def kronecker_verdict(p: Params, k: int) -> tuple[bool, str]:
    """Decide r-equitable k-colorability of K_m x K_n, with a reason tag.

    Requires 2 <= m <= n, k >= 1.  The decision rule: colorable iff
    k >= m (chromatic number) and either k >= gamma or the multipartite
    size condition holds, since K_m x K_n inherits every K_{m(n)} coloring
    and below gamma no other shape is available.  Tags:

    * ``below-chromatic``: k < m, not colorable.
    * ``at-or-above-gamma``: k >= gamma, colorable.
    * ``multipartite-condition``: m <= k < gamma, colorable via K_{m(n)}.
    * ``multipartite-condition-failed``: m <= k < gamma, not colorable.
    """
    _require(p.m >= 2, f"kronecker_verdict requires m >= 2, got m={p.m}")
    _require(
        p.m <= p.n,
        f"kronecker_verdict requires the canonical orientation m <= n, "
        f"got m={p.m} n={p.n}",
    )
    _require_int("k", k, 1)
    if k < p.m:
        return False, REASON_BELOW_CHROMATIC
    if k >= gamma(p).value:
        return True, REASON_AT_OR_ABOVE_GAMMA
    if multipartite_colorable(p, k):
        return True, REASON_MULTIPARTITE_CONDITION
    return False, REASON_MULTIPARTITE_FAILED


def kronecker_colorable(p: Params, k: int) -> bool:
    """Is K_m x K_n r-equitably k-colorable?  Requires 2 <= m <= n."""
    return kronecker_verdict(p, k)[0]


# ============================================================
# When do the two families' thresholds agree?
# ============================================================


def equ_bound(m: int, r: int) -> int:
    """ceil((m+r)*(m+2r-1) / (r-1)): for n at least this, thresholds match.

    For every n >= equ_bound(m, r) the Kronecker and multipartite
    thresholds coincide.  Requires m >= 2 and r >= 2 (the bound diverges
    as r -> 1, and indeed for r = 1 the thresholds differ for every n).
    """
    _require_int("m", m, 2)
    _require_int("r", r, 2)
    return ceil_div((m + r) * (m + 2 * r - 1), r - 1)
