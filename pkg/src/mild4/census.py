"""Exhaustive orbit census of lines and planes in F_p^6.

Every subspace of the requested dimension is listed in RREF and keyed by its
base-p digits.  Each generator M_ij^a, T_ij, S_i^a (all a in F_p^x) induces
a map on keys; the orbits are the connected components of the union of
these maps, computed one generator at a time on the current quotient.
"""

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import field
from .errors import TooLarge, ValidationError
from .exterior import AddCol, ScaleCol, SwapCol, token_gl6
from .field import Subspace
from .reduction import reduce_line, reduce_plane

MAX_SUBSPACES = 10 ** 7


@dataclass(frozen=True)
class OrbitInfo:
    label: object
    size: int
    canonical: Subspace


@dataclass(frozen=True)
class OrbitCensus:
    p: int
    dim: int
    total: int
    orbits: tuple

    @property
    def count(self):
        return len(self.orbits)


def all_subspaces(p, d, n=6):
    """All d-dimensional subspaces of F_p^n as an (N, d, n) RREF stack."""
    blocks = []
    for piv in combinations(range(n), d):
        free = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, n) if c not in piv]
        k = len(free)
        digits = np.arange(p ** k, dtype=np.int64)
        block = np.zeros((p ** k, d, n), dtype=np.int64)
        for r, pc in enumerate(piv):
            block[:, r, pc] = 1
        for (r, c) in free:
            block[:, r, c] = digits % p
            digits //= p
        blocks.append(block)
    return np.concatenate(blocks)


def _keys(stack, p):
    flat = stack.reshape(len(stack), -1)
    w = p ** np.arange(flat.shape[1], dtype=np.int64)
    return flat @ w


def generators(p):
    gens = []
    for i, j in permutations(range(1, 5), 2):
        gens += [AddCol(i, j, a) for a in range(1, p)]
    gens += [SwapCol(i, j) for i, j in combinations(range(1, 5), 2)]
    gens += [ScaleCol(i, a) for i in range(1, 5) for a in range(2, p)]
    return gens


def orbit_partition(p, d):
    """(subspaces, component label per subspace)."""
    if d not in (1, 2):
        raise ValidationError("census supports lines and planes only")
    field.FieldCtx(p)
    total = field.gaussian_binomial(6, d, p)
    if total > MAX_SUBSPACES:
        raise TooLarge(f"{total} subspaces exceed the limit {MAX_SUBSPACES}")
    subs = all_subspaces(p, d)
    keys = _keys(subs, p)
    order = np.argsort(keys)
    subs, keys = subs[order], keys[order]
    labels = np.arange(len(subs))
    for g in generators(p):
        img = field.batch_rref(subs @ token_gl6(g, p) % p, p)
        idx = np.searchsorted(keys, _keys(img, p))
        a, b = labels, labels[idx]
        n = labels.max() + 1
        graph = coo_matrix((np.ones(len(a), dtype=np.int8), (a, b)), shape=(n, n))
        _, comp = connected_components(graph, directed=False)
        labels = comp[labels]
    return subs, labels


def enumerate_orbits(p, dim):
    subs, labels = orbit_partition(p, dim)
    orbits = []
    for lab in np.unique(labels):
        members = np.flatnonzero(labels == lab)
        rep = subs[members[0]]
        if dim == 1:
            res = reduce_line(rep[0], p)
        else:
            res = reduce_plane(Subspace.span(rep, p))
        orbits.append(OrbitInfo(res.label, len(members), res.canonical))
    orbits.sort(key=lambda o: str(o.label.value))
    return OrbitCensus(p, dim, len(subs), tuple(orbits))
