"""Exact integer elimination kernels (pure Python reference core).

Sparse routines work on lists of ``{column: value}`` dicts with Python
ints throughout, so coefficient growth is handled by arbitrary
precision rather than ever overflowing.  They consume their input rows.

``tatekit._elim_cy`` is a compiled twin of this module.  The two must
stay behaviourally identical, including pivot choices, so that results
do not depend on which core was importable (tests/test_backends.py
compares them entry for entry).
"""

from collections import deque


def _negate_row(row):
    for k in row:
        row[k] = -row[k]


def hermite(rows, ncols):
    """Row-reduce ``rows`` to echelon form over the first ``ncols`` columns.

    Columns ``>= ncols`` are carried along unreduced, which lets callers
    augment with an identity block to read off kernel coordinates.

    Returns ``(pivots, free_rows)`` where ``pivots`` is a list of
    ``(col, row_dict)`` with strictly increasing pivot columns, positive
    pivot entries and no support before the pivot column, and
    ``free_rows`` lists the surviving rows with no support below
    ``ncols``.  Input dicts are mutated and absorbed into the result.
    """
    col_rows = {}
    for i, row in enumerate(rows):
        for c in row:
            if c < ncols:
                col_rows.setdefault(c, set()).add(i)

    active = set(range(len(rows)))
    pivots = []
    for c in sorted(col_rows):
        live = col_rows[c]
        while len(live) > 1:
            r0 = min(live, key=lambda r: (abs(rows[r][c]), r))
            if rows[r0][c] < 0:
                _negate_row(rows[r0])
            v0 = rows[r0][c]
            for r in sorted(live - {r0}):
                q = rows[r][c] // v0
                if q:
                    _axpy(rows, col_rows, r, r0, -q, ncols)
        if not live:
            continue
        (r0,) = live
        if rows[r0][c] < 0:
            _negate_row(rows[r0])
        for k in rows[r0]:
            if k < ncols:
                col_rows[k].discard(r0)
        active.discard(r0)
        pivots.append((c, rows[r0]))

    free_rows = [rows[i] for i in sorted(active)]
    return pivots, free_rows


def _axpy(rows, col_rows, r, src, coef, ncols):
    """rows[r] += coef * rows[src], maintaining the column index."""
    target = rows[r]
    for k, v in rows[src].items():
        new = target.get(k, 0) + coef * v
        if new:
            if k not in target and k < ncols:
                col_rows.setdefault(k, set()).add(r)
            target[k] = new
        elif k in target:
            del target[k]
            if k < ncols:
                col_rows[k].discard(r)


def smith_diagonal(rows, ncols):
    """Elementary divisors of a sparse integer matrix.

    Returns the full positive diagonal of the Smith normal form without
    computing transforms: ones first, then the nontrivial divisors, each
    dividing the next.  The length of the result is the rank.  Input
    rows are consumed.
    """
    nrows = len(rows)
    col_rows = {}
    for i, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(i)

    row_alive = [True] * nrows
    retired_cols = set()
    units = deque()
    for i in range(nrows):
        for c, v in rows[i].items():
            if v == 1 or v == -1:
                units.append((i, c))

    def axpy(r, src, coef):
        target = rows[r]
        for k, v in rows[src].items():
            new = target.get(k, 0) + coef * v
            if new:
                if k not in target:
                    col_rows.setdefault(k, set()).add(r)
                target[k] = new
                if new == 1 or new == -1:
                    units.append((r, k))
            elif k in target:
                del target[k]
                col_rows[k].discard(r)

    def retire(i, c):
        for k in rows[i]:
            col_rows[k].discard(i)
        row_alive[i] = False
        retired_cols.add(c)

    ones = 0
    tail = []
    while True:
        # Fast path: pivot on +-1 entries, which clear without fill in
        # their own row.
        while units:
            i, c = units.popleft()
            if not row_alive[i] or c in retired_cols:
                continue
            v = rows[i].get(c, 0)
            if v != 1 and v != -1:
                continue
            for r in sorted(col_rows[c] - {i}):
                axpy(r, i, -rows[r][c] * v)
            retire(i, c)
            ones += 1

        # General phase: smallest remaining entry becomes the pivot.
        best = None
        for i in range(nrows):
            if not row_alive[i]:
                continue
            for c, v in rows[i].items():
                key = (abs(v), i, c)
                if best is None or key < best:
                    best = key
        if best is None:
            break
        _, i, c = best

        while True:
            live = col_rows[c]
            while len(live) > 1:
                r0 = min(live, key=lambda r: (abs(rows[r][c]), r))
                if rows[r0][c] < 0:
                    _negate_row(rows[r0])
                v0 = rows[r0][c]
                for r in sorted(live - {r0}):
                    q = rows[r][c] // v0
                    if q:
                        axpy(r, r0, -q)
            (i,) = live
            if rows[i][c] < 0:
                _negate_row(rows[i])
            v = rows[i][c]

            # The pivot column is clean, so clearing the pivot row by
            # column operations touches no other row.
            remainder_cols = []
            for k in list(rows[i]):
                if k == c:
                    continue
                w = rows[i][k] % v
                if w:
                    rows[i][k] = w
                    remainder_cols.append(k)
                else:
                    del rows[i][k]
                    col_rows[k].discard(i)
            if remainder_cols:
                c = min(remainder_cols, key=lambda k: (rows[i][k], k))
                continue

            # Pivot isolated; make it divide everything that remains.
            violator = None
            for r in range(nrows):
                if r == i or not row_alive[r]:
                    continue
                for w in rows[r].values():
                    if w % v:
                        violator = r
                        break
                if violator is not None:
                    break
            if violator is None:
                tail.append(v)
                retire(i, c)
                break
            axpy(i, violator, 1)

    return [1] * ones + tail


def smith_transform(mat, nrows, ncols):
    """Dense Smith normal form with transforms.

    Returns ``(S, U, V)`` as lists of row lists with ``U * mat * V == S``,
    ``U`` and ``V`` unimodular, and the diagonal of ``S`` nonnegative
    with each entry dividing the next.
    """
    A = [list(row) for row in mat]
    U = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    V = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def row_op(dst, src, coef):
        a_dst, a_src = A[dst], A[src]
        for j in range(ncols):
            a_dst[j] += coef * a_src[j]
        u_dst, u_src = U[dst], U[src]
        for j in range(nrows):
            u_dst[j] += coef * u_src[j]

    def col_op(dst, src, coef):
        for i in range(nrows):
            A[i][dst] += coef * A[i][src]
        for i in range(ncols):
            V[i][dst] += coef * V[i][src]

    def row_swap(a, b):
        A[a], A[b] = A[b], A[a]
        U[a], U[b] = U[b], U[a]

    def col_swap(a, b):
        for i in range(nrows):
            A[i][a], A[i][b] = A[i][b], A[i][a]
        for i in range(ncols):
            V[i][a], V[i][b] = V[i][b], V[i][a]

    t = 0
    while True:
        best = None
        for i in range(t, nrows):
            row = A[i]
            for j in range(t, ncols):
                v = row[j]
                if v:
                    key = (abs(v), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)

        while True:
            # Clear the pivot column by row operations; a nonzero
            # remainder is a smaller pivot, so swap it up and restart.
            dirty = False
            i = t + 1
            while i < nrows:
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        row_op(i, t, -q)
                    if A[i][t]:
                        row_swap(t, i)
                        dirty = True
                        continue
                i += 1
            if dirty:
                continue
            j = t + 1
            while j < ncols:
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    if q:
                        col_op(j, t, -q)
                    if A[t][j]:
                        col_swap(t, j)
                        dirty = True
                        continue
                j += 1
            if dirty:
                continue

            violator = None
            piv = A[t][t]
            for i in range(t + 1, nrows):
                row = A[i]
                for j in range(t + 1, ncols):
                    if row[j] % piv:
                        violator = i
                        break
                if violator is not None:
                    break
            if violator is None:
                break
            row_op(t, violator, 1)

        if A[t][t] < 0:
            for j in range(ncols):
                A[t][j] = -A[t][j]
            for j in range(nrows):
                U[t][j] = -U[t][j]
        t += 1

    return A, U, V
