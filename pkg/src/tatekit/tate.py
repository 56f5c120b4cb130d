"""Tate cohomology and hypercohomology for elementary abelian p-groups.

Cochain groups are built from a finite window of the complete
resolution: Hom_G(ZG^k, M) is identified with M^k by evaluation at the
standard basis, so a codifferential is the block matrix whose (c, b)
block is the coefficient module acting by the (b, c) entry of the next
resolution differential.  Hypercohomology totalizes Hom_G(F_p, C_j)
over the finitely many degrees C supports, with the sign rule
delta^n = delta_0 - (-1)^n delta_1.
"""

from . import exactlin
from ._backend import smith_diagonal as _sparse_smith
from .errors import InfiniteLength, NotConcentrated
from .exactlin import AbelianInvariants, IntMatrix
from .modpres import (
    PresentedCochainComplex,
    homology,
    homology_module,
    require_valid,
)
from .resolve import complete_resolution


class CohomologyTable:
    """Per-degree abelian invariants and exponents over a degree window."""

    __slots__ = ("lo", "hi", "invariants")

    def __init__(self, lo, hi, invariants):
        invariants = list(invariants)
        if len(invariants) != hi - lo + 1:
            raise ValueError("need exactly one entry per degree")
        self.lo = lo
        self.hi = hi
        self.invariants = invariants

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def invariant(self, i):
        if not self.lo <= i <= self.hi:
            raise KeyError(f"degree {i} outside table range [{self.lo},{self.hi}]")
        return self.invariants[i - self.lo]

    def exponent(self, i):
        return exactlin.exponent(self.invariant(i))

    def exponents(self):
        return [exactlin.exponent(v) for v in self.invariants]

    def rows(self):
        return [(i, self.invariant(i), self.exponent(i)) for i in self.degrees()]

    def __eq__(self, other):
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        return (self.lo, self.hi, self.invariants) == (
            other.lo,
            other.hi,
            other.invariants,
        )

    def __repr__(self):
        body = ", ".join(f"{i}: {v}" for i, v in zip(self.degrees(), self.invariants))
        return f"CohomologyTable({body})"


def _trivial_table(lo, hi):
    return CohomologyTable(lo, hi, [AbelianInvariants() for _ in range(hi - lo + 1)])


def _codifferential(window, module, j):
    """Integer matrix of Hom(F_j, M) -> Hom(F_{j+1}, M)."""
    d = window.differential(j + 1)
    g = module.gens
    kj = window.rank(j)
    kn = window.rank(j + 1)
    out = IntMatrix.zeros(kn * g, kj * g)
    if d is None:
        return out
    for c in range(kn):
        for b in range(kj):
            elem = d.entries[b][c]
            if elem.is_zero():
                continue
            blk = module.act_ring(elem)
            for i in range(g):
                row = out.data[c * g + i]
                src = blk.data[i]
                for l in range(g):
                    if src[l]:
                        row[b * g + l] = src[l]
    return out


def tate_cohomology_range(group, module, lo, hi):
    """Table of Tate cohomology of ``group`` with coefficients in ``module``."""
    if module.group != group:
        raise ValueError("module is presented over a different group")
    if lo > hi:
        raise ValueError("empty degree range")
    require_valid(module)
    if module.gens == 0:
        return _trivial_table(lo, hi)
    window = complete_resolution(group, lo - 1, hi + 1)
    deltas = {
        j: _codifferential(window, module, j) for j in range(lo - 1, hi + 1)
    }
    g = module.gens
    if module.relations.cols == 0:
        # Free coefficients: every cochain group is free, so invariants
        # come straight from Smith diagonals and rank bookkeeping.
        diag = {j: exactlin.smith_diagonal(m) for j, m in deltas.items()}
        invs = []
        for i in range(lo, hi + 1):
            dim = window.rank(i) * g
            into = diag[i - 1]
            outof = diag[i]
            torsion = tuple(x for x in into if x > 1)
            invs.append(AbelianInvariants(torsion, dim - len(into) - len(outof)))
        return CohomologyTable(lo, hi, invs)
    rel = module.relations
    groups = {}
    for j in range(lo - 1, hi + 2):
        k = window.rank(j)
        block = IntMatrix.zeros(k * g, k * rel.cols)
        for copy in range(k):
            for a in range(g):
                src = rel.data[a]
                row = block.data[copy * g + a]
                for b in range(rel.cols):
                    if src[b]:
                        row[copy * rel.cols + b] = src[b]
        groups[j] = (k * g, block)
    cochain = PresentedCochainComplex(groups, deltas)
    invs = [cochain.cohomology(i) for i in range(lo, hi + 1)]
    return CohomologyTable(lo, hi, invs)


def tate_cohomology(group, module, i):
    return tate_cohomology_range(group, module, i, i).invariant(i)


def _total_layout(window, complex_, degs, n):
    """Offsets of the Hom(F_{n+j}, C_j) summands inside Tot^n."""
    g = complex_.group.order
    out = {}
    off = 0
    for j in degs:
        kf = window.rank(n + j)
        kc = complex_.rank(j)
        out[j] = (off, kf, kc)
        off += kf * kc * g
    return out, off


def _total_codifferential(window, complex_, degs, expanded, n):
    """Sparse rows of delta^n : Tot^n -> Tot^{n+1}."""
    group = complex_.group
    g = group.order
    src, dim_n = _total_layout(window, complex_, degs, n)
    dst, dim_next = _total_layout(window, complex_, degs, n + 1)
    rows = [{} for _ in range(dim_next)]
    sign = -1 if n % 2 == 0 else 1
    for j in degs:
        off_s, kf, kc = src[j]
        block = kc * g
        # delta_0: post-compose with the complex differential, one copy
        # per generator of F_{n+j}; lands in the summand at j-1.
        if j - 1 in dst:
            off_t, _, kc_t = dst[j - 1]
            tblock = kc_t * g
            for rho, erow in enumerate(expanded[j]):
                if not erow:
                    continue
                for f in range(kf):
                    row = rows[off_t + f * tblock + rho]
                    base = off_s + f * block
                    for sigma, v in erow.items():
                        row[base + sigma] = row.get(base + sigma, 0) + v
        # delta_1: pre-compose with the resolution differential into
        # degree n+j+1; lands in the summand at j with sign -(-1)^n.
        d = window.differential(n + j + 1)
        if d is None:
            continue
        off_t, kf_t, _ = dst[j]
        for f2 in range(kf_t):
            tbase = off_t + f2 * block
            for b in range(kf):
                elem = d.entries[b][f2]
                if elem.is_zero():
                    continue
                sbase = off_s + b * block
                for hr, hc, v in group.regular_triples(elem.coeffs):
                    w = sign * v
                    for c in range(kc):
                        row = rows[tbase + c * g + hr]
                        col = sbase + c * g + hc
                        row[col] = row.get(col, 0) + w
    for row in rows:
        for col in [c for c, v in row.items() if v == 0]:
            del row[col]
    return rows, dim_n


def tate_hypercohomology_range(group, complex_, lo, hi):
    """Table of Tate hypercohomology of a finite free complex."""
    if complex_.group != group:
        raise ValueError("complex is over a different group")
    if lo > hi:
        raise ValueError("empty degree range")
    if complex_.valid_range is not None:
        raise InfiniteLength(
            "hypercohomology needs a complex with finite support, "
            "not a window of an unbounded one"
        )
    if complex_.is_empty():
        return _trivial_table(lo, hi)
    degs = [
        j for j in range(complex_.lo, complex_.hi + 1) if complex_.rank(j)
    ]
    window = complete_resolution(
        group, lo - 1 + complex_.lo, hi + 1 + complex_.hi
    )
    expanded = {j: complex_.expanded(j).sparse_rows() for j in degs}
    diag = {}
    dims = {}
    for n in range(lo - 1, hi + 1):
        rows, dim_n = _total_codifferential(window, complex_, degs, expanded, n)
        dims[n] = dim_n
        diag[n] = _sparse_smith(rows, dim_n)
    invs = []
    for i in range(lo, hi + 1):
        into = diag[i - 1]
        outof = diag[i]
        torsion = tuple(x for x in into if x > 1)
        invs.append(
            AbelianInvariants(torsion, dims[i] - len(into) - len(outof))
        )
    return CohomologyTable(lo, hi, invs)


def tate_hypercohomology(group, complex_, i):
    return tate_hypercohomology_range(group, complex_, i, i).invariant(i)


def suspension(complex_):
    """Shift a complex up one degree, differentials unchanged."""
    return complex_.shifted(1)


def exponent_profile(group, module, a, b):
    """Exponents of ordinary cohomology H^i for i in [a, b] (a >= 1)."""
    if a < 1:
        raise ValueError("profile range must start at degree 1 or higher")
    return tate_cohomology_range(group, module, a, b)


class ConcentrationComparison:
    """Per-degree comparison of a concentrated complex with its module."""

    __slots__ = ("degree", "window", "rows", "ok")

    def __init__(self, degree, window, rows):
        self.degree = degree
        self.window = window
        self.rows = rows
        self.ok = all(match for _, _, _, match in rows)

    def __repr__(self):
        state = "ok" if self.ok else "MISMATCH"
        return (
            f"ConcentrationComparison(degree={self.degree}, "
            f"window={self.window}, {state})"
        )


def concentrated_check(group, complex_, n, lo=-2, hi=2):
    """Compare hypercohomology of a concentrated complex with the shift
    of the cohomology of its single homology module.

    For a complex whose homology is supported only at degree ``n``,
    checks H^i(G, C) = H^{i+n}(G, H_n(C)) for i in [lo, hi] and returns
    the per-degree comparison.
    """
    if complex_.group != group:
        raise ValueError("complex is over a different group")
    support = [
        j
        for j in range(complex_.lo, complex_.hi + 1)
        if complex_.rank(j) and not homology(complex_, j).is_trivial()
    ]
    if complex_.is_empty() or support != [n]:
        raise NotConcentrated(
            f"homology is supported at degrees {support}, expected [{n}]"
        )
    module = homology_module(complex_, n)
    left = tate_hypercohomology_range(group, complex_, lo, hi)
    right = tate_cohomology_range(group, module, lo + n, hi + n)
    rows = []
    for i in range(lo, hi + 1):
        a = left.invariant(i)
        b = right.invariant(i + n)
        rows.append((i, a, b, a == b))
    return ConcentrationComparison(n, (lo, hi), rows)
