"""Explicit r-equitable colorings for K_{m(n)} and K_m x K_n.

Every function either returns a coloring that passes
:func:`equicolor.grid.verify` or raises :class:`NotColorableError`; there
is no third outcome.  Constructions are deterministic: ties are broken
lowest-index-first, so identical inputs always produce byte-identical
colorings after serialization.

The product-graph constructor picks one of four shapes depending on where
k falls relative to gamma = gamma(m, n, r), n and m*n:

* m <= k < gamma: reuse the multipartite coloring (classes inside rows);
  the decision rule guarantees the multipartite size condition holds here.
* gamma <= k <= n: c = k - m*s' full columns plus, in every row, a
  near-even split of the remaining n - c cells into s' classes of sizes
  in [m, m+r], where s = n // (m+r) and s' is s, or s+1 when the residue
  n mod (m+r) exceeds m.  This is the construction that witnesses gamma.
* n < k <= m*n: single rows are too short to split on their own, so the
  rows hand some cells over to column classes.  A deterministic scan
  picks a base size b (largest first) and a columnar cell total C
  (smallest first): every row donates floor(C/m) or ceil(C/m) cells, G
  column classes with balanced per-column class counts absorb them, and
  each row splits its kept cells near-evenly.  Every class size lies in
  [b, b+r].  Classes need not be contiguous - a class is any subset of
  one row or one column - and that freedom is essential: some instances
  (for example m=6, n=10, r=1, k=15) admit no coloring made of
  contiguous runs.  C = 0 degenerates to the pure row-split layout,
  which is therefore used whenever it can realize exactly k classes.
* k > m*n: every cell becomes a singleton and the remaining k - m*n
  classes stay empty; the size gap is 1 <= r.

Coordinates follow equicolor.grid: rows 1..m, columns 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import (
    Params,
    ceil_div,
    gamma,
    kronecker_verdict,
    multipartite_colorable,
)
from .errors import (
    InfeasibleWindowError,
    InternalCheckError,
    NotColorableError,
    ParameterDomainError,
)
from .grid import Coloring, Vertex

# ============================================================
# Size-window splitting
# ============================================================


def split_sizes(total: int, count: int, lo: int, r: int) -> list[int]:
    """Split ``total`` items into ``count`` sizes within [lo, lo+r].

    The split is near-even and non-increasing: divmod(total, count) gives
    the base size, and the remainder goes to the lowest-indexed entries.
    A near-even split automatically lands inside the window whenever any
    split does, so feasibility is exactly the two-sided bound below.

    Args:
        total: number of items, >= 0.
        count: number of sizes to emit, >= 1.
        lo: smallest allowed size, >= 0.
        r: window width, >= 0 (r = 0 forces an exact split).

    Returns:
        A non-increasing list of ``count`` sizes summing to ``total``.

    Raises:
        InfeasibleWindowError: iff not lo*count <= total <= (lo+r)*count.
    """
    if total < 0 or count < 1 or lo < 0 or r < 0:
        raise ParameterDomainError(
            f"split_sizes domain: total>=0, count>=1, lo>=0, r>=0; "
            f"got total={total} count={count} lo={lo} r={r}"
        )
    if not (lo * count <= total <= (lo + r) * count):
        raise InfeasibleWindowError(
            f"cannot split {total} into {count} sizes within "
            f"[{lo}, {lo + r}]: need {lo * count} <= {total} <= "
            f"{(lo + r) * count}"
        )
    base, extra = divmod(total, count)
    return [base + 1] * extra + [base] * (count - extra)


@dataclass(frozen=True)
class SizeWindowPlan:
    """A feasible split of ``total`` into ``count`` sizes within [lo, lo+r]."""

    total: int
    count: int
    lo: int
    r: int
    sizes: tuple[int, ...]

    @staticmethod
    def make(total: int, count: int, lo: int, r: int) -> "SizeWindowPlan":
        return SizeWindowPlan(
            total, count, lo, r, tuple(split_sizes(total, count, lo, r))
        )


# ============================================================
# Complete multipartite graphs
# ============================================================


def color_multipartite(p: Params, k: int) -> Coloring:
    """An r-equitable k-coloring of K_{m(n)}, part i living on grid row i.

    Colors are shared out near-evenly over the parts (lowest-indexed
    parts get the spare ones) and each part is split near-evenly among
    its colors.  The extreme class sizes this produces are exactly the
    two quantities compared by the colorability condition, so the result
    is r-equitable precisely when that condition passes.  For k > m*n
    some classes come out empty, which is allowed.

    Raises:
        NotColorableError: when ``multipartite_colorable(p, k)`` is false.
    """
    if not multipartite_colorable(p, k):
        reason = "below-chromatic" if k < p.m else "multipartite-condition-failed"
        raise NotColorableError(
            f"K_{{{p.m}({p.n})}} has no {p.r}-equitable {k}-coloring "
            f"({reason})",
            reason,
        )
    base, extra = divmod(k, p.m)
    classes: list[tuple[Vertex, ...]] = []
    for i in range(1, p.m + 1):
        colors_here = base + 1 if i <= extra else base
        col = 1
        for size in split_sizes(p.n, colors_here, p.n // colors_here, 1):
            classes.append(tuple(Vertex(i, j) for j in range(col, col + size)))
            col += size
    return Coloring(p.m, p.n, tuple(classes))


# ============================================================
# Kronecker products
# ============================================================


def color_kronecker(p: Params, k: int) -> Coloring:
    """An r-equitable k-coloring of K_m x K_n (canonical 2 <= m <= n).

    Dispatches on k as described in the module docstring.  The returned
    coloring always has exactly k classes, every class inside one row or
    one column, and size gap at most r.

    Raises:
        NotColorableError: when ``kronecker_colorable(p, k)`` is false;
            the exception's ``reason`` names the failed condition.
    """
    ok, reason = kronecker_verdict(p, k)
    if not ok:
        raise NotColorableError(
            f"K_{p.m} x K_{p.n} has no {p.r}-equitable {k}-coloring "
            f"({reason})",
            reason,
        )
    g = gamma(p).value
    if g > p.n:
        raise InternalCheckError(f"gamma {g} exceeds n for {p}")
    if k < g:
        return color_multipartite(p, k)
    if k <= p.n:
        return _columns_plus_row_splits(p, k)
    if k <= p.m * p.n:
        return _scatter_layout(p, k)
    return _singletons(p, k)


def _columns_plus_row_splits(p: Params, k: int) -> Coloring:
    """The gamma <= k <= n shape: full columns plus equal row splits."""
    m, n, r = p.m, p.n, p.r
    s = n // (m + r)
    s_eff = s + 1 if n % (m + r) > m else s
    c = k - m * s_eff
    if not 0 <= c <= n:
        raise InternalCheckError(f"column count {c} out of range for {p}, k={k}")
    classes: list[tuple[Vertex, ...]] = [
        tuple(Vertex(i, j) for i in range(1, m + 1)) for j in range(1, c + 1)
    ]
    if s_eff > 0:
        # Same split works in every row: sizes in [m, m+r] by construction.
        plan = SizeWindowPlan.make(n - c, s_eff, m, r)
        for i in range(1, m + 1):
            col = c + 1
            for size in plan.sizes:
                classes.append(
                    tuple(Vertex(i, j) for j in range(col, col + size))
                )
                col += size
    elif c != n:
        raise InternalCheckError(f"no row budget but {n - c} columns left for {p}")
    return Coloring(m, n, tuple(classes))


def _scatter_layout(p: Params, k: int) -> Coloring:
    """The n < k <= m*n shape: column classes fed near-evenly by the rows.

    For a base size b (scanned from m*n // k, the largest min size any
    k-class partition allows, down to 1) and a columnar cell total C
    (scanned from 0 up), the plan is:

    * every row donates floor(C/m) or ceil(C/m) of its cells to columns,
      the larger donations coming from the highest row indexes;
    * G column classes live on t = min(n, G) columns with balanced
      per-column class counts, column j holding z_j cells with
      g_j*b <= z_j <= min(g_j*(b+r), m);
    * each row splits its kept cells into classes of sizes in [b, b+r].

    Because the donations are near-even, any per-column load vector with
    entries at most m can be realized by giving each column the rows
    with the largest remaining donation budget, so feasibility reduces
    to arithmetic on class-count intervals: the scan accepts the first
    (b, C) for which some G fits both the column side and k - G fits the
    row side.
    """
    m, n, r = p.m, p.n, p.r
    total = m * n
    for b in range(total // k, 0, -1):
        w = b + r
        gcap = m // b  # most classes one column can host
        col_budget = n * gcap

        def zmax(g: int) -> int:
            return min(g * w, m)

        def load_cap(count: int) -> int:
            # Largest columnar cell total reachable with this many column
            # classes, spread as evenly as possible over min(n, .) columns.
            if count == 0:
                return 0
            t = min(n, count)
            base, extra = divmod(count, t)
            return extra * zmax(base + 1) + (t - extra) * zmax(base)

        def least_column_classes(cells: int) -> int | None:
            if cells == 0:
                return 0
            lo, hi = 1, col_budget
            if load_cap(hi) < cells:
                return None
            while lo < hi:
                mid = (lo + hi) // 2
                if load_cap(mid) >= cells:
                    hi = mid
                else:
                    lo = mid + 1
            return lo

        def row_count_range(kept: int) -> tuple[int, int] | None:
            if kept == 0:
                return (0, 0)
            lo, hi = ceil_div(kept, w), kept // b
            return (lo, hi) if lo <= hi else None

        for cells in range(0, total + 1):
            donate, d_extra = divmod(cells, m)
            big = row_count_range(n - donate)  # m - d_extra such rows
            if big is None:
                continue
            if d_extra:
                small = row_count_range(n - donate - 1)
                if small is None:
                    continue
                p_lo = (m - d_extra) * big[0] + d_extra * small[0]
                p_hi = (m - d_extra) * big[1] + d_extra * small[1]
            else:
                p_lo, p_hi = m * big[0], m * big[1]
            g_floor = least_column_classes(cells)
            if g_floor is None:
                continue
            g_ceil = min(cells // b, col_budget) if cells else 0
            col_cls = max(g_floor, k - p_hi)
            if col_cls <= g_ceil and p_lo <= k - col_cls:
                return _build_scatter(p, k, b, cells, col_cls)
    raise InternalCheckError(
        f"no scatter layout found for {p}, k={k}; "
        f"the decision rule said this instance is colorable"
    )


def _build_scatter(p: Params, k: int, b: int, cells: int, col_cls: int) -> Coloring:
    """Realize a scatter layout chosen by :func:`_scatter_layout`."""
    m, n, r = p.m, p.n, p.r
    w = b + r

    # Column side: balanced class counts, loads filled left to right.
    loads: list[int] = []
    counts: list[int] = []
    if col_cls:
        t = min(n, col_cls)
        base, extra = divmod(col_cls, t)
        counts = [base + 1] * extra + [base] * (t - extra)
        loads = [g * b for g in counts]
        spare = cells - col_cls * b
        for j in range(t):
            take = min(min(counts[j] * w, m) - loads[j], spare)
            loads[j] += take
            spare -= take
        if spare:
            raise InternalCheckError(
                f"column loads cannot absorb {spare} cells for {p}, k={k}"
            )

    # Row donations: near-even, the spares from the highest row indexes.
    donate, d_extra = divmod(cells, m)
    budget = [donate] * (m - d_extra) + [donate + 1] * d_extra
    kept = [n - y for y in budget]
    drawn: list[set[int]] = [set() for _ in range(m)]
    classes: list[tuple[Vertex, ...]] = []
    for j, (load, g) in enumerate(zip(loads, counts), start=1):
        # Loads are non-increasing, so taking the rows with the largest
        # remaining budget each time always succeeds (bipartite greedy).
        order = sorted(range(m), key=lambda i: (-budget[i], i))
        chosen = sorted(order[:load])
        for i in chosen:
            if budget[i] <= 0:
                raise InternalCheckError(
                    f"row donation budget exhausted at column {j} for {p}, k={k}"
                )
            budget[i] -= 1
            drawn[i].add(j)
        at = 0
        for size in split_sizes(load, g, b, r):
            classes.append(
                tuple(Vertex(i + 1, j) for i in chosen[at : at + size])
            )
            at += size
    if any(budget):
        raise InternalCheckError(f"unplaced donations {budget} for {p}, k={k}")

    # Row side: distribute the remaining k - col_cls classes over rows,
    # lowest row index first, within each row's feasible count range.
    lo_cnt = [ceil_div(x, w) if x else 0 for x in kept]
    hi_cnt = [x // b if x else 0 for x in kept]
    row_cls = lo_cnt[:]
    need = (k - col_cls) - sum(row_cls)
    if need < 0:
        raise InternalCheckError(f"too few row classes needed for {p}, k={k}")
    while need:
        before = need
        for i in range(m):
            if need and row_cls[i] < hi_cnt[i]:
                row_cls[i] += 1
                need -= 1
        if need == before:
            raise InternalCheckError(f"row class counts stuck for {p}, k={k}")
    for i in range(1, m + 1):
        own = [j for j in range(1, n + 1) if j not in drawn[i - 1]]
        if len(own) != kept[i - 1]:
            raise InternalCheckError(f"kept-cell mismatch in row {i} for {p}")
        at = 0
        if row_cls[i - 1]:
            for size in split_sizes(kept[i - 1], row_cls[i - 1], b, r):
                classes.append(
                    tuple(Vertex(i, j) for j in own[at : at + size])
                )
                at += size
    return Coloring(m, n, tuple(classes))


def _singletons(p: Params, k: int) -> Coloring:
    """The k > m*n shape: one cell per class, rest empty; gap is 1 <= r."""
    classes: list[tuple[Vertex, ...]] = [
        (Vertex(i, j),)
        for i in range(1, p.m + 1)
        for j in range(1, p.n + 1)
    ]
    classes.extend(() for _ in range(k - p.m * p.n))
    return Coloring(p.m, p.n, tuple(classes))
