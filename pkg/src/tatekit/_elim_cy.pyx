# cython: language_level=3, boundscheck=False, wraparound=False
"""Exact integer elimination kernels (compiled core).

Line-for-line twin of ``tatekit._elim_py`` with typed counters.  Matrix
entries stay Python ints so coefficient growth can never overflow; the
speedup comes from compiled loop and dict machinery.  Pivot choices are
identical to the pure core by construction — tests/test_backends.py
compares the two entry for entry.
"""

from collections import deque

cimport cython


cdef void _negate_row(dict row):
    cdef object k
    for k in row:
        row[k] = -row[k]


def hermite(list rows, Py_ssize_t ncols):
    """Row-reduce ``rows`` to echelon form over the first ``ncols`` columns.

    Columns ``>= ncols`` are carried along unreduced, which lets callers
    augment with an identity block to read off kernel coordinates.

    Returns ``(pivots, free_rows)`` where ``pivots`` is a list of
    ``(col, row_dict)`` with strictly increasing pivot columns, positive
    pivot entries and no support before the pivot column, and
    ``free_rows`` lists the surviving rows with no support below
    ``ncols``.  Input dicts are mutated and absorbed into the result.
    """
    cdef Py_ssize_t i
    cdef dict col_rows = {}
    cdef dict row
    for i in range(len(rows)):
        row = rows[i]
        for c in row:
            if c < ncols:
                col_rows.setdefault(c, set()).add(i)

    active = set(range(len(rows)))
    cdef list pivots = []
    cdef set live
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


cdef void _axpy(list rows, dict col_rows, object r, object src, object coef,
                Py_ssize_t ncols):
    """rows[r] += coef * rows[src], maintaining the column index."""
    cdef dict target = rows[r]
    cdef dict source = rows[src]
    for k, v in source.items():
        new = target.get(k, 0) + coef * v
        if new:
            if k not in target and k < ncols:
                col_rows.setdefault(k, set()).add(r)
            target[k] = new
        elif k in target:
            del target[k]
            if k < ncols:
                col_rows[k].discard(r)


def smith_diagonal(list rows, Py_ssize_t ncols):
    """Elementary divisors of a sparse integer matrix.

    Returns the full positive diagonal of the Smith normal form without
    computing transforms: ones first, then the nontrivial divisors, each
    dividing the next.  The length of the result is the rank.  Input
    rows are consumed.
    """
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i_
    cdef dict col_rows = {}
    cdef dict rowd
    for i_ in range(nrows):
        rowd = rows[i_]
        for c in rowd:
            col_rows.setdefault(c, set()).add(i_)

    cdef list row_alive = [True] * nrows
    cdef set retired_cols = set()
    units = deque()
    for i_ in range(nrows):
        rowd = rows[i_]
        for c, v in rowd.items():
            if v == 1 or v == -1:
                units.append((i_, c))

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

    cdef Py_ssize_t ones = 0
    cdef list tail = []
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
        for i_ in range(nrows):
            if not row_alive[i_]:
                continue
            rowd = rows[i_]
            for c, v in rowd.items():
                key = (abs(v), i_, c)
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
            for r_ in range(nrows):
                if r_ == i or not row_alive[r_]:
                    continue
                for w in rows[r_].values():
                    if w % v:
                        violator = r_
                        break
                if violator is not None:
                    break
            if violator is None:
                tail.append(v)
                retire(i, c)
                break
            axpy(i, violator, 1)

    return [1] * ones + tail


@cython.wraparound(False)
def smith_transform(mat, Py_ssize_t nrows, Py_ssize_t ncols):
    """Dense Smith normal form with transforms.

    Returns ``(S, U, V)`` as lists of row lists with ``U * mat * V == S``,
    ``U`` and ``V`` unimodular, and the diagonal of ``S`` nonnegative
    with each entry dividing the next.
    """
    cdef list A = [list(row) for row in mat]
    cdef list U = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    cdef list V = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    cdef Py_ssize_t i, j, t, bi, bj
    cdef bint dirty

    def row_op(Py_ssize_t dst, Py_ssize_t src, coef):
        cdef list a_dst = A[dst]
        cdef list a_src = A[src]
        cdef Py_ssize_t jj
        for jj in range(ncols):
            a_dst[jj] = a_dst[jj] + coef * a_src[jj]
        cdef list u_dst = U[dst]
        cdef list u_src = U[src]
        for jj in range(nrows):
            u_dst[jj] = u_dst[jj] + coef * u_src[jj]

    def col_op(Py_ssize_t dst, Py_ssize_t src, coef):
        cdef Py_ssize_t ii
        cdef list rowi
        for ii in range(nrows):
            rowi = A[ii]
            rowi[dst] = rowi[dst] + coef * rowi[src]
        for ii in range(ncols):
            rowi = V[ii]
            rowi[dst] = rowi[dst] + coef * rowi[src]

    def row_swap(Py_ssize_t a, Py_ssize_t b):
        A[a], A[b] = A[b], A[a]
        U[a], U[b] = U[b], U[a]

    def col_swap(Py_ssize_t a, Py_ssize_t b):
        cdef Py_ssize_t ii
        cdef list rowi
        for ii in range(nrows):
            rowi = A[ii]
            rowi[a], rowi[b] = rowi[b], rowi[a]
        for ii in range(ncols):
            rowi = V[ii]
            rowi[a], rowi[b] = rowi[b], rowi[a]

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
            row = A[t]
            for j in range(ncols):
                row[j] = -row[j]
            row = U[t]
            for j in range(nrows):
                row[j] = -row[j]
        t += 1

    return A, U, V
