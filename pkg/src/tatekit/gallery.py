"""Generators for the free complexes everything else is tested on.

Lens complexes are the standard rank-one free Z/p complexes on
odd-dimensional spheres, products are their tensor products, and
random_free_complex draws seeded complexes whose differentials are
repaired to d o d = 0 by sampling columns from the kernel lattice of
the previous differential.
"""

import random

from .exactlin import IntMatrix, kernel_basis
from .groupring import (
    ElementaryAbelianGroup,
    GroupRingMatrix,
    decode_columns,
    norm_element,
)
from .modpres import FreeChainComplex, tensor_complex


def lens_complex(p, k):
    """Free Z/p complex on the sphere S^(2k-1): rank 1 in degrees
    0..2k-1, alternating g-1 and norm differentials."""
    if k < 1:
        raise ValueError("need k >= 1")
    group = ElementaryAbelianGroup(p, 1)
    g = group.generator(1)
    minus = g - group.identity()
    norm = norm_element(group, 1)
    top = 2 * k - 1
    ranks = {i: 1 for i in range(top + 1)}
    diffs = {
        i: GroupRingMatrix(group, [[minus if i % 2 else norm]])
        for i in range(1, top + 1)
    }
    return FreeChainComplex(group, ranks, diffs)


def product_complex(p, k_list):
    """Tensor product of lens complexes: a free (Z/p)^r complex on a
    product of odd spheres S^(2k_1-1) x ... x S^(2k_r-1)."""
    if not k_list:
        raise ValueError("need at least one factor")
    out = lens_complex(p, k_list[0])
    for k in k_list[1:]:
        out = tensor_complex(out, lens_complex(p, k))
    return out


def random_free_complex(group, ranks, seed):
    """Deterministic random free complex with the given ranks in
    degrees 0, 1, 2, ....

    Each differential's columns are small random integer combinations
    of the kernel lattice of the previous one, so d o d = 0 holds by
    construction; the zero differential is always an admissible draw.
    """
    ranks = list(ranks)
    if any(k < 0 for k in ranks):
        raise ValueError("ranks must be nonnegative")
    rng = random.Random(f"{group.p}.{group.r}|{ranks}|{seed}")
    n = group.order
    rank_map = {i: k for i, k in enumerate(ranks)}
    diffs = {}
    prev = IntMatrix.zeros(0, rank_map.get(0, 0) * n)
    for i in range(1, len(ranks)):
        ka = rank_map.get(i - 1, 0)
        kb = rank_map.get(i, 0)
        if ka == 0 or kb == 0:
            prev = IntMatrix.zeros(ka * n, kb * n)
            continue
        lattice = kernel_basis(prev)
        coefs = IntMatrix.zeros(lattice.cols, kb)
        for a in range(lattice.cols):
            row = coefs.data[a]
            for b in range(kb):
                row[b] = rng.choice((-1, 0, 0, 1))
        cols = lattice.mul(coefs)
        d = decode_columns(group, cols, ka)
        diffs[i] = d
        prev = d.expand()
    return FreeChainComplex(group, rank_map, diffs)
