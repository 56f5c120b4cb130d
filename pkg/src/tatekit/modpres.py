"""Finitely generated ZG-modules and free chain complexes over ZG.

A module is presented by integers: ``gens`` generators, a relation
matrix whose columns span the relation lattice, and one action matrix
per group generator.  Chain complexes are kept free over the group
ring; homology modules are the only presented-module outputs, which is
all the constructions here ever need.
"""

from . import exactlin
from .errors import InvalidPresentation, NoSolution, WindowViolation
from .exactlin import AbelianInvariants, IntMatrix
from .groupring import GroupRingElement, GroupRingMatrix


class ModulePresentation:
    """A ZG-module given by generators, relations, and G-action."""

    def __init__(self, group, gens, relations=None, actions=None):
        self.group = group
        self.gens = gens
        if relations is None:
            relations = IntMatrix.zeros(gens, 0)
        self.relations = relations
        if actions is None:
            actions = [IntMatrix.identity(gens) for _ in range(group.r)]
        self.actions = list(actions)
        self._relation_basis = None
        self._elt_actions = {}
        self._ring_actions = {}

    def invariants(self):
        """Invariant factors of the underlying abelian group."""
        return exactlin.cokernel_invariants(self.relations)

    def relation_basis(self):
        if self._relation_basis is None:
            self._relation_basis = exactlin.lattice_basis(self.relations)
        return self._relation_basis

    def in_relation_span(self, cols):
        """Whether every column of ``cols`` lies in the relation lattice.

        Returns the index of the first offending column, or None.
        """
        basis = self.relation_basis()
        if basis.cols == 0:
            for j in range(cols.cols):
                if any(cols.data[i][j] for i in range(cols.rows)):
                    return j
            return None
        try:
            exactlin.solve_in_lattice(basis, cols)
        except NoSolution as exc:
            return exc.column
        return None

    def act_element(self, index):
        """Action matrix of the group element at ``index``."""
        cached = self._elt_actions.get(index)
        if cached is None:
            exps = self.group.exponents(index)
            cached = IntMatrix.identity(self.gens)
            for a, e in zip(self.actions, exps):
                for _ in range(e):
                    cached = a.mul(cached)
            self._elt_actions[index] = cached
        return cached

    def act_ring(self, element):
        """Integer matrix of a group-ring element acting on the module."""
        cached = self._ring_actions.get(element.coeffs)
        if cached is None:
            cached = IntMatrix.zeros(self.gens, self.gens)
            for idx, a in enumerate(element.coeffs):
                if a:
                    m = self.act_element(idx)
                    for i in range(self.gens):
                        row, mrow = cached.data[i], m.data[i]
                        for j in range(self.gens):
                            if mrow[j]:
                                row[j] += a * mrow[j]
            self._ring_actions[element.coeffs] = cached
        return cached

    def has_trivial_action(self):
        """True when every generator acts as the identity mod relations."""
        ident = IntMatrix.identity(self.gens)
        for a in self.actions:
            if self.in_relation_span(a.sub(ident)) is not None:
                return False
        return True

    def __repr__(self):
        return (
            f"ModulePresentation({self.group!r}, gens={self.gens}, "
            f"relations={self.relations.cols} cols)"
        )


def trivial_module(group):
    """Z with every generator acting as the identity."""
    return ModulePresentation(group, 1)


def zero_module(group):
    return ModulePresentation(group, 0)


def free_module_presentation(group, k):
    """ZG^k as a presented module: regular permutation actions, no relations."""
    if k < 0:
        raise ValueError("rank must be nonnegative")
    gens = k * group.order
    actions = []
    for i in range(1, group.r + 1):
        mat = GroupRingMatrix.scalar(group, k, group.generator(i)).expand()
        actions.append(mat)
    if k == 0:
        actions = [IntMatrix.zeros(0, 0) for _ in range(group.r)]
    return ModulePresentation(group, gens, IntMatrix.zeros(gens, 0), actions)


def validate(module):
    """Check the presentation invariants; return a list of problems.

    An empty list means the presentation is valid.  Reported strings
    name the first counterexample column of each failed check.
    """
    problems = []
    m = module
    g = m.gens
    if m.relations.rows != g:
        problems.append(
            f"relation matrix has {m.relations.rows} rows, expected {g}"
        )
        return problems
    if len(m.actions) != m.group.r:
        problems.append(
            f"got {len(m.actions)} action matrices, expected {m.group.r}"
        )
        return problems
    for i, a in enumerate(m.actions):
        if (a.rows, a.cols) != (g, g):
            problems.append(f"action {i + 1} is {a.rows}x{a.cols}, expected {g}x{g}")
            return problems

    for i, a in enumerate(m.actions):
        col = m.in_relation_span(a.mul(m.relations))
        if col is not None:
            problems.append(
                f"action {i + 1} does not preserve relations (column {col})"
            )
    for i in range(len(m.actions)):
        for j in range(i + 1, len(m.actions)):
            comm = m.actions[i].mul(m.actions[j]).sub(m.actions[j].mul(m.actions[i]))
            col = m.in_relation_span(comm)
            if col is not None:
                problems.append(
                    f"actions {i + 1} and {j + 1} do not commute (column {col})"
                )
    ident = IntMatrix.identity(g)
    for i, a in enumerate(m.actions):
        power = ident
        for _ in range(m.group.p):
            power = a.mul(power)
        col = m.in_relation_span(power.sub(ident))
        if col is not None:
            problems.append(
                f"action {i + 1} does not have order dividing p (column {col})"
            )
    return problems


def require_valid(module):
    problems = validate(module)
    if problems:
        raise InvalidPresentation(problems)


class FreeChainComplex:
    """A finite complex of free ZG-modules.

    ``ranks`` maps degree to a positive rank; ``diffs`` maps degree i to
    the GroupRingMatrix of d_i : degree i -> degree i-1.  ``d o d = 0``
    is checked in the group ring on construction.  A complex carved out
    of an infinite resolution carries ``valid_range`` and only answers
    homology questions strictly inside it.
    """

    def __init__(self, group, ranks, diffs, valid_range=None, check=True):
        self.group = group
        self.ranks = {i: k for i, k in ranks.items() if k}
        self.diffs = {}
        self.valid_range = valid_range
        self._diag_cache = {}
        for i, d in diffs.items():
            if d is None or d.is_zero():
                continue
            ka, kb = self.ranks.get(i - 1, 0), self.ranks.get(i, 0)
            if (d.rows, d.cols) != (ka, kb):
                raise ValueError(
                    f"differential at degree {i} is {d.rows}x{d.cols}, "
                    f"expected {ka}x{kb}"
                )
            if d.group != group:
                raise ValueError("differential over the wrong group")
            self.diffs[i] = d
        if check:
            for i, d in self.diffs.items():
                up = self.diffs.get(i + 1)
                if up is not None and not d.mul(up).is_zero():
                    raise ValueError(f"d_{i} o d_{i + 1} != 0 in the group ring")

    def degrees(self):
        return sorted(self.ranks)

    def rank(self, i):
        return self.ranks.get(i, 0)

    @property
    def lo(self):
        return min(self.ranks) if self.ranks else 0

    @property
    def hi(self):
        return max(self.ranks) if self.ranks else 0

    def is_empty(self):
        return not self.ranks

    def differential(self, i):
        return self.diffs.get(i)

    def expanded(self, i):
        """Integer matrix of d_i, materializing zeros when absent."""
        d = self.diffs.get(i)
        if d is not None:
            return d.expand()
        n = self.group.order
        return IntMatrix.zeros(self.rank(i - 1) * n, self.rank(i) * n)

    def shifted(self, s):
        vr = self.valid_range
        return FreeChainComplex(
            self.group,
            {i + s: k for i, k in self.ranks.items()},
            {i + s: d for i, d in self.diffs.items()},
            valid_range=(vr[0] + s, vr[1] + s) if vr else None,
            check=False,
        )

    def _check_window(self, n):
        if self.valid_range is not None:
            lo, hi = self.valid_range
            if not lo < n < hi:
                raise WindowViolation(
                    f"degree {n} outside the validated interior of [{lo},{hi}]"
                )

    def _diag(self, i):
        """Smith diagonal of expand(d_i), cached per degree."""
        got = self._diag_cache.get(i)
        if got is None:
            got = exactlin.smith_diagonal(self.expanded(i))
            self._diag_cache[i] = got
        return got

    def __repr__(self):
        span = f"[{self.lo},{self.hi}]" if self.ranks else "empty"
        return f"FreeChainComplex({self.group!r}, degrees {span})"


def homology(complex_, n):
    """Homology at degree ``n`` as abelian invariants.

    Uses that the ambient module is free: the torsion of the quotient
    is read off the Smith diagonal of the incoming differential, and
    the free rank from the two ranks.
    """
    complex_._check_window(n)
    k = complex_.rank(n)
    if k == 0:
        return AbelianInvariants()
    ambient = k * complex_.group.order
    diag_in = complex_._diag(n + 1)
    diag_out = complex_._diag(n)
    free = ambient - len(diag_in) - len(diag_out)
    return AbelianInvariants.from_diagonal(diag_in, free)


def homology_range(complex_, lo, hi):
    return {n: homology(complex_, n) for n in range(lo, hi + 1)}


def _homology_data(complex_, n):
    """Cycle basis at degree ``n`` together with the homology module."""
    complex_._check_window(n)
    k = complex_.rank(n)
    group = complex_.group
    if k == 0:
        return IntMatrix.zeros(0, 0), zero_module(group)
    cycles = exactlin.kernel_basis(complex_.expanded(n))
    boundaries = complex_.expanded(n + 1)
    solve = exactlin.solve_preimage
    relations = exactlin.lattice_basis(solve(cycles, boundaries))
    actions = []
    for i in range(1, group.r + 1):
        perm = GroupRingMatrix.scalar(group, k, group.generator(i)).expand()
        actions.append(solve(cycles, perm.mul(cycles)))
    module = ModulePresentation(group, cycles.cols, relations, actions)
    return cycles, module


def homology_module(complex_, n):
    """Homology at degree ``n`` as a presented ZG-module."""
    return _homology_data(complex_, n)[1]


def dual_complex(complex_):
    """Z-linear dual: degree i becomes -i, maps become antipode-transposes."""
    ranks = {-i: k for i, k in complex_.ranks.items()}
    diffs = {}
    for i in complex_.diffs:
        # d_i : C_i -> C_{i-1} dualizes to (dual C)_{1-i} -> (dual C)_{-i}.
        diffs[1 - i] = complex_.diffs[i].antipode_transpose()
    return FreeChainComplex(complex_.group, ranks, diffs)


def _tensor_elements(a, b, group):
    """a (x) b inside the group ring of the product group."""
    o2 = len(b.coeffs)
    coeffs = [0] * (len(a.coeffs) * o2)
    for i, x in enumerate(a.coeffs):
        if x:
            base = i * o2
            for j, y in enumerate(b.coeffs):
                if y:
                    coeffs[base + j] = x * y
    return GroupRingElement(group, coeffs)


def tensor_complex(c, d):
    """Tensor product over Z of two free complexes.

    The factors live over (Z/p)^r1 and (Z/p)^r2; the result lives over
    (Z/p)^(r1+r2), with the left factor's generators first.  The
    differential carries the sign (-1)^deg on the left factor.
    """
    from .groupring import ElementaryAbelianGroup

    if c.group.p != d.group.p:
        raise ValueError("tensor factors must share the prime")
    group = ElementaryAbelianGroup(c.group.p, c.group.r + d.group.r)
    ident_c = c.group.identity()
    ident_d = d.group.identity()

    layouts = {}

    def layout(n):
        got = layouts.get(n)
        if got is None:
            got = []
            offset = 0
            for i in sorted(c.ranks):
                j = n - i
                kd = d.rank(j)
                if kd:
                    got.append((i, j, offset))
                    offset += c.rank(i) * kd
            layouts[n] = got
        return got

    ranks = {}
    for n in range(c.lo + d.lo, c.hi + d.hi + 1):
        total = sum(c.rank(i) * d.rank(j) for i, j, _ in layout(n))
        if total:
            ranks[n] = total

    diffs = {}
    for n in sorted(ranks):
        if (n - 1) not in ranks:
            continue
        src, dst = layout(n), layout(n - 1)
        dst_off = {(i, j): off for i, j, off in dst}
        entries = [
            [group.zero() for _ in range(ranks[n])] for _ in range(ranks[n - 1])
        ]
        for i, j, off in src:
            kc, kd = c.rank(i), d.rank(j)
            dc = c.differential(i)
            if dc is not None and (i - 1, j) in dst_off:
                base = dst_off[(i - 1, j)]
                for u2 in range(dc.rows):
                    for u in range(kc):
                        e = dc.entries[u2][u]
                        if not e.is_zero():
                            te = _tensor_elements(e, ident_d, group)
                            for v in range(kd):
                                entries[base + u2 * kd + v][off + u * kd + v] = te
            dd = d.differential(j)
            if dd is not None and (i, j - 1) in dst_off:
                base = dst_off[(i, j - 1)]
                sign = -1 if i % 2 else 1
                kd2 = dd.rows
                for v2 in range(kd2):
                    for v in range(kd):
                        e = dd.entries[v2][v]
                        if not e.is_zero():
                            te = _tensor_elements(ident_c, e, group)
                            if sign < 0:
                                te = -te
                            for u in range(kc):
                                entries[base + u * kd2 + v2][off + u * kd + v] = te
        diffs[n] = GroupRingMatrix(group, entries, ranks[n - 1], ranks[n])

    return FreeChainComplex(group, ranks, diffs)


class PresentedCochainComplex:
    """A cochain complex of presented abelian groups.

    ``groups`` maps degree to (ambient rank, relation matrix); ``maps``
    maps degree j to the integer codifferential into degree j+1.
    Cohomology at a degree is the quotient of the preimage of the next
    relation span by coboundaries and relations.
    """

    def __init__(self, groups, maps):
        self.groups = groups
        self.maps = maps

    def ambient(self, j):
        got = self.groups.get(j)
        return got[0] if got else 0

    def relations(self, j):
        got = self.groups.get(j)
        if got is None:
            return IntMatrix.zeros(0, 0)
        return got[1]

    def map_at(self, j):
        m = self.maps.get(j)
        if m is None:
            return IntMatrix.zeros(self.ambient(j + 1), self.ambient(j))
        return m

    def composite_ok(self, j):
        """Whether the composite j -> j+2 vanishes modulo relations."""
        comp = self.map_at(j + 1).mul(self.map_at(j))
        rel = self.relations(j + 2)
        if rel.cols == 0:
            return comp.is_zero()
        basis = exactlin.lattice_basis(rel)
        try:
            exactlin.solve_in_lattice(basis, comp)
        except NoSolution:
            return False
        return True

    def cohomology(self, i):
        amb = self.ambient(i)
        if amb == 0:
            return AbelianInvariants()
        delta = self.map_at(i)
        rel_next = self.relations(i + 1)
        if rel_next.cols == 0:
            kernel = exactlin.kernel_basis(delta)
        else:
            stacked = delta.hstack(rel_next)
            full = exactlin.kernel_basis(stacked)
            kernel = full.submatrix(range(amb), range(full.cols))
        numerator = kernel.hstack(self.relations(i))
        denominator = self.map_at(i - 1).hstack(self.relations(i))
        return exactlin.quotient_invariants(numerator, denominator)
