"""Exact matrix rank over the rationals and over prime fields.

Matrices arrive as sparse rows (dict column -> nonzero int).  Over GF(p)
the rank comes from sparse modular elimination.  Over the rationals the
elimination is fraction-free: it pivots on +-1 entries only (no division)
and hands any leftover core without unit entries to a dense Bareiss
elimination.  No floating point is used anywhere.
"""
from __future__ import annotations

import heapq


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on integer entries."""
    m = [row[:] for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def _dense_rank_modp(m: list[list[int]], p: int) -> int:
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        row_r = m[r]
        for i in range(r + 1, nrows):
            f = m[i][c] * inv % p
            if f:
                row_i = m[i]
                for j in range(c, ncols):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def _dense_rank_rationals(m: list[list[int]]) -> int:
    """Integer elimination pivoting on +-1 entries column by column; columns
    without a unit pivot are deferred to a Bareiss core."""
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    r = 0
    stuck: list[int] = []
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] in (1, -1)), None)
        if piv is None:
            if any(m[i][c] for i in range(r, nrows)):
                stuck.append(c)
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        row_r = m[r]
        start = stuck[0] if stuck else c  # deferred columns must stay current
        for i in range(r + 1, nrows):
            f = m[i][c] * pv
            if f:
                row_i = m[i]
                for j in range(start, ncols):
                    row_i[j] -= f * row_r[j]
        rank += 1
        r += 1
        if r == nrows:
            break
    if r < nrows and stuck:
        core = [[m[i][c] for c in stuck] for i in range(r, nrows)]
        if any(any(row) for row in core):
            rank += bareiss_rank(core)
    return rank


_DENSE_CELL_LIMIT = 1024


def sparse_rank(rows: list[dict[int, int]], p: int | None = None) -> int:
    """Rank of a sparse integer matrix over GF(p), or over Q when p is None.

    Pivots are chosen by a lazy min-degree queue over the columns (fewest
    nonzeros first, shortest row within the column).  The input rows are
    consumed.
    """
    rationals = p is None
    if rationals:
        rows = [{c: v for c, v in row.items() if v} for row in rows]
    else:
        rows = [{c: v % p for c, v in row.items() if v % p} for row in rows]

    live_rows = [row for row in rows if row]
    all_cols = sorted({c for row in live_rows for c in row})
    if len(live_rows) * len(all_cols) <= _DENSE_CELL_LIMIT:
        if not live_rows:
            return 0
        cindex = {c: j for j, c in enumerate(all_cols)}
        dense = [[0] * len(all_cols) for _ in live_rows]
        for i, row in enumerate(live_rows):
            for c, v in row.items():
                dense[i][cindex[c]] = v
        return _dense_rank_modp(dense, p) if p is not None else _dense_rank_rationals(dense)

    col_rows: dict[int, set[int]] = {}
    for i, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(i)

    buckets: dict[int, list[int]] = {}
    for c, rset in col_rows.items():
        buckets.setdefault(len(rset), []).append(c)
    heap = sorted(buckets)
    heapq.heapify(heap)
    queued = set(heap)

    def requeue(c: int) -> None:
        deg = len(col_rows[c])
        if deg:
            buckets.setdefault(deg, []).append(c)
            if deg not in queued:
                queued.add(deg)
                heapq.heappush(heap, deg)

    deferred: list[int] = []  # Q-mode columns currently without a unit entry
    progressed = True
    rank = 0
    while True:
        pivot = None
        while heap:
            deg = heap[0]
            bucket = buckets.get(deg)
            if not bucket:
                heapq.heappop(heap)
                queued.discard(deg)
                continue
            c = bucket.pop()
            rset = col_rows.get(c)
            if not rset:
                continue
            if len(rset) != deg:
                requeue(c)
                continue
            best_row = None
            best_len = None
            for i in rset:
                if rationals and rows[i][c] not in (1, -1):
                    continue
                ln = len(rows[i])
                if best_len is None or ln < best_len:
                    best_row, best_len = i, ln
            if best_row is None:
                deferred.append(c)
                continue
            pivot = (best_row, c)
            break
        if pivot is None:
            if rationals and deferred and progressed:
                progressed = False
                retry, deferred = deferred, []
                for c in retry:
                    if col_rows.get(c):
                        requeue(c)
                continue
            break

        progressed = True
        r, c = pivot
        rank += 1
        pv = rows[r][c]
        inv = pv if rationals else pow(pv, -1, p)  # pv is +-1 over Q
        pivot_row = rows[r]
        touched: set[int] = set()
        for i in list(col_rows[c]):
            if i == r:
                continue
            factor = rows[i][c] * inv
            if not rationals:
                factor %= p
            target = rows[i]
            for cc, v in pivot_row.items():
                cur = target.get(cc, 0)
                nv = cur - factor * v
                if not rationals:
                    nv %= p
                if nv:
                    if cur == 0:
                        col_rows.setdefault(cc, set()).add(i)
                        touched.add(cc)
                    target[cc] = nv
                elif cur != 0:
                    del target[cc]
                    col_rows[cc].discard(i)
                    touched.add(cc)
        for cc in pivot_row:
            rset = col_rows.get(cc)
            if rset is not None:
                rset.discard(r)
                touched.add(cc)
        rows[r] = {}
        touched.discard(c)
        col_rows.pop(c, None)
        for cc in touched:
            rset = col_rows.get(cc)
            if rset:
                requeue(cc)
            else:
                col_rows.pop(cc, None)

    if rationals:
        leftovers = [row for row in rows if row]
        if leftovers:
            cols = sorted({c for row in leftovers for c in row})
            cindex = {c: j for j, c in enumerate(cols)}
            dense = [[0] * len(cols) for _ in leftovers]
            for i, row in enumerate(leftovers):
                for c, v in row.items():
                    dense[i][cindex[c]] = v
            rank += bareiss_rank(dense)
    return rank
