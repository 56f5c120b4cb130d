"""Exact linear algebra over the integers.

Everything here works with Python ints, so results are exact at any
size.  Matrices are small dense objects; the heavy reductions go
through the sparse elimination core selected in :mod:`tatekit._backend`.
"""

import math

from . import _backend
from .errors import NoSolution, SublatticeViolation

INFINITE = math.inf


class IntMatrix:
    """A dense integer matrix with just enough algebra for the package.

    >>> a = IntMatrix([[1, 2], [3, 4]])
    >>> a.mul(IntMatrix.identity(2)) == a
    True
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows=None, cols=None):
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        self.rows = rows
        self.cols = cols
        self.data = [list(r) for r in data]
        for r in self.data:
            if len(r) != cols:
                raise ValueError("ragged matrix data")

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def from_columns(cls, columns, rows):
        m = cls.zeros(rows, len(columns))
        for j, col in enumerate(columns):
            for i, v in enumerate(col):
                m.data[i][j] = v
        return m

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        out = IntMatrix.zeros(self.cols, self.rows)
        for i in range(self.rows):
            row = self.data[i]
            for j in range(self.cols):
                out.data[j][i] = row[j]
        return out

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = IntMatrix.zeros(self.rows, other.cols)
        for i in range(self.rows):
            arow = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                a = arow[k]
                if a:
                    brow = other.data[k]
                    for j in range(other.cols):
                        b = brow[j]
                        if b:
                            orow[j] += a * b
        return out

    def mul_vector(self, vec):
        return [
            sum(self.data[i][k] * vec[k] for k in range(self.cols))
            for i in range(self.rows)
        ]

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return IntMatrix(
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def sub(self, other):
        return self.add(other.scale(-1))

    def scale(self, c):
        return IntMatrix([[c * v for v in row] for row in self.data], self.rows, self.cols)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return IntMatrix(
            [self.data[i] + other.data[i] for i in range(self.rows)],
            self.rows,
            self.cols + other.cols,
        )

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return IntMatrix(self.data + other.data, self.rows + other.rows, self.cols)

    def submatrix(self, row_range, col_range):
        return IntMatrix(
            [[self.data[i][j] for j in col_range] for i in row_range],
            len(row_range),
            len(col_range),
        )

    def is_zero(self):
        return all(v == 0 for row in self.data for v in row)

    def sparse_rows(self):
        """Fresh {col: value} dicts, safe to hand to the mutating core."""
        return [
            {j: v for j, v in enumerate(row) if v}
            for row in self.data
        ]

    def sparse_columns(self):
        cols = [{} for _ in range(self.cols)]
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = v
        return cols

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(tuple, self.data))))

    def __repr__(self):
        return f"IntMatrix({self.data!r})"


class AbelianInvariants:
    """Invariant factors of a finitely generated abelian group.

    ``torsion`` is the chain of moduli >= 2, each dividing the next;
    ``free_rank`` counts the infinite cyclic summands.
    """

    __slots__ = ("torsion", "free_rank")

    def __init__(self, torsion=(), free_rank=0):
        torsion = tuple(int(t) for t in torsion)
        for t in torsion:
            if t < 2:
                raise ValueError("torsion moduli must be >= 2")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError("torsion moduli must form a divisibility chain")
        if free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        self.torsion = torsion
        self.free_rank = free_rank

    @classmethod
    def from_diagonal(cls, diagonal, free_rank=0):
        """Build from a Smith diagonal, discarding unit entries."""
        return cls([d for d in diagonal if abs(d) > 1], free_rank)

    def is_trivial(self):
        return not self.torsion and self.free_rank == 0

    def is_finite(self):
        return self.free_rank == 0

    def order(self):
        if self.free_rank:
            return INFINITE
        return math.prod(self.torsion) if self.torsion else 1

    def exponent(self):
        if self.free_rank:
            return INFINITE
        return self.torsion[-1] if self.torsion else 1

    def __eq__(self, other):
        return (
            isinstance(other, AbelianInvariants)
            and self.torsion == other.torsion
            and self.free_rank == other.free_rank
        )

    def __hash__(self):
        return hash((self.torsion, self.free_rank))

    def __str__(self):
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AbelianInvariants(torsion={self.torsion!r}, free_rank={self.free_rank})"


def exponent(invariants):
    """Exponent of the group described by ``invariants`` (INFINITE if free)."""
    return invariants.exponent()


def smith_normal_form(a):
    """Smith normal form with transforms.

    Returns ``(u, s, v)`` with ``u * a * v == s``, both transforms
    unimodular, and the diagonal of ``s`` a nonnegative divisibility
    chain.
    """
    s, u, v = _backend.smith_transform(a.data, a.rows, a.cols)
    return (
        IntMatrix(u, a.rows, a.rows),
        IntMatrix(s, a.rows, a.cols),
        IntMatrix(v, a.cols, a.cols),
    )


def smith_diagonal(a):
    """Positive diagonal of the Smith form (ones included; length = rank)."""
    return _backend.smith_diagonal(a.sparse_rows(), a.cols)


def rank(a):
    pivots, _ = _backend.hermite(a.transpose().sparse_rows(), a.rows)
    return len(pivots)


def solve_preimage(a, b):
    """Some integer solution ``x`` of ``a * x == b``, or NoSolution.

    ``b`` may have several columns; they are solved together.  When the
    system is underdetermined any valid solution may be returned.
    """
    if a.rows != b.rows:
        raise ValueError("shape mismatch between matrix and right-hand side")
    s, u, v = _backend.smith_transform(a.data, a.rows, a.cols)
    t = min(a.rows, a.cols)
    diag = [s[i][i] for i in range(t)]
    x = IntMatrix.zeros(a.cols, b.cols)
    for j in range(b.cols):
        col = b.column(j)
        c = [sum(u[i][k] * col[k] for k in range(a.rows)) for i in range(a.rows)]
        y = [0] * a.cols
        for i in range(a.rows):
            if i < t and diag[i]:
                if c[i] % diag[i]:
                    raise NoSolution(
                        f"column {j}: {c[i]} not divisible by invariant {diag[i]}",
                        column=j,
                    )
                y[i] = c[i] // diag[i]
            elif c[i]:
                raise NoSolution(
                    f"column {j}: inconsistent equation with residue {c[i]}",
                    column=j,
                )
        for i in range(a.cols):
            x.data[i][j] = sum(v[i][k] * y[k] for k in range(a.cols) if y[k])
    return x


def kernel_basis(a):
    """Basis of the integer kernel lattice of ``a``, as matrix columns."""
    rows = []
    for i in range(a.cols):
        row = {}
        for j in range(a.rows):
            v = a.data[j][i]
            if v:
                row[j] = v
        row[a.rows + i] = 1
        rows.append(row)
    _, free = _backend.hermite(rows, a.rows)
    columns = []
    for row in free:
        columns.append([row.get(a.rows + i, 0) for i in range(a.cols)])
    return IntMatrix.from_columns(columns, a.cols)


def lattice_basis(a):
    """Echelon basis of the lattice spanned by the columns of ``a``.

    Column ``j`` of the result has its first nonzero entry positive and
    strictly below the first nonzero entry of column ``j - 1``, which is
    what :func:`solve_in_lattice` relies on.
    """
    pivots, _ = _backend.hermite(a.transpose().sparse_rows(), a.rows)
    columns = []
    for _, row in pivots:
        columns.append([row.get(i, 0) for i in range(a.rows)])
    return IntMatrix.from_columns(columns, a.rows)


def solve_in_lattice(basis, targets):
    """Coordinates of ``targets`` columns in an echelon ``basis``.

    Raises NoSolution naming the first failing column.  ``basis`` must
    come from :func:`lattice_basis` (leading entries strictly
    descending by column).
    """
    supports = []
    leads = []
    for j in range(basis.cols):
        sup = [(i, basis.data[i][j]) for i in range(basis.rows) if basis.data[i][j]]
        supports.append(sup)
        leads.append(sup[0][0])
    out = IntMatrix.zeros(basis.cols, targets.cols)
    for j in range(targets.cols):
        residual = targets.column(j)
        for k in range(basis.cols):
            lead = leads[k]
            piv = supports[k][0][1]
            w = residual[lead]
            if w % piv:
                raise NoSolution(
                    f"column {j}: residue {w} at row {lead} not divisible by {piv}",
                    column=j,
                )
            q = w // piv
            if q:
                out.data[k][j] = q
                for i, v in supports[k]:
                    residual[i] -= q * v
        if any(residual):
            raise NoSolution(
                f"column {j}: lies outside the lattice",
                column=j,
            )
    return out


def quotient_invariants(k, l):
    """Invariants of span(k) / span(l) for integer column spans.

    The columns of ``l`` must lie in the lattice spanned by the columns
    of ``k``; otherwise SublatticeViolation names the first offender.
    Both arguments may be spanning sets rather than bases.
    """
    if k.rows != l.rows:
        raise ValueError("ambient rank mismatch between the two spans")
    basis = lattice_basis(k)
    if l.cols == 0 or basis.cols == 0:
        if l.cols and not l.is_zero():
            raise SublatticeViolation("denominator span not inside numerator", column=0)
        return AbelianInvariants((), basis.cols)
    try:
        coords = solve_in_lattice(basis, l)
    except NoSolution as exc:
        raise SublatticeViolation(str(exc), column=exc.column) from exc
    diag = _backend.smith_diagonal(coords.sparse_rows(), coords.cols)
    return AbelianInvariants.from_diagonal(diag, basis.cols - len(diag))


def cokernel_invariants(a):
    """Invariants of Z^rows / column-span(a)."""
    diag = _backend.smith_diagonal(a.sparse_rows(), a.cols)
    return AbelianInvariants.from_diagonal(diag, a.rows - len(diag))
