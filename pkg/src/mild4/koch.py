"""Koch linking numbers for four tamely ramified primes.

For primes q_1..q_4 congruent to 1 mod p, the linking number l_ij is the
residue mod p of any r with q_i = g_j^(-r) mod q_j, g_j a primitive root
mod q_j.  Row i of the relator matrix is sum_{j != i} l_ij [x_i, x_j].
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from . import field
from .errors import (DuplicatePrime, NotAUnit, NotCongruentOneModP, NotPrime, PEven,
                     ValidationError)
from .exterior import PAIR_INDEX
from .lie import QuadraticPresentation

INPUT_BOUND = 1 << 31


@dataclass(frozen=True)
class PrimeSet:
    p: int
    q: tuple


@dataclass(frozen=True)
class LinkingData:
    """Linking matrix ``l`` (zero diagonal) with its provenance.

    ``dlogs[i][j]`` is log_{g_j}(q_i) mod q_j - 1 (None on the diagonal);
    ``diagonal[i]`` is (q_i - 1)/p mod p, reported but unused mod pi.
    """

    p: int
    primes: tuple
    l: tuple
    roots: tuple
    dlogs: tuple
    diagonal: tuple

    def as_dict(self):
        return {
            "l": [list(r) for r in self.l],
            "roots": list(self.roots),
            "dlogs": [list(r) for r in self.dlogs],
            "diagonal": list(self.diagonal),
        }


def validate(p, qs):
    if isinstance(p, bool) or not isinstance(p, int):
        raise ValidationError(f"p must be an integer, got {p!r}")
    if p % 2 == 0:
        raise PEven(f"p must be an odd prime, got {p}")
    if not (2 < p < INPUT_BOUND) or not field.is_prime(p):
        raise NotPrime(None, p)
    qs = tuple(int(q) for q in qs)
    if len(qs) != 4:
        raise ValidationError(f"expected 4 primes, got {len(qs)}")
    for i, q in enumerate(qs, start=1):
        if not (1 < q < INPUT_BOUND) or not field.is_prime(q):
            raise NotPrime(i, q)
        if q % p != 1:
            raise NotCongruentOneModP(i, q, p)
    if len(set(qs)) != 4:
        raise DuplicatePrime(f"primes must be distinct: {list(qs)}")
    return PrimeSet(p, qs)


def primitive_root(q):
    """Smallest primitive root mod the prime q."""
    return next(field.primitive_roots(q))


def discrete_log(a, g, q):
    """r in [0, q-1) with g^r = a mod q, by baby-step giant-step."""
    a %= q
    if a == 0:
        raise NotAUnit(f"0 is not a unit mod {q}")
    n = q - 1
    m = isqrt(n) + 1
    table = {}
    x = 1
    for j in range(m):
        table.setdefault(x, j)
        x = x * g % q
    step = pow(g, -m, q)
    y = a
    for i in range(m + 1):
        if y in table:
            return (i * m + table[y]) % n
        y = y * step % q
    raise ValidationError(f"{a} is not a power of {g} mod {q}")


def linking_matrix(s, roots=None):
    """Linking data of a prime set; ``roots`` overrides the primitive roots."""
    p, qs = s.p, s.q
    if roots is None:
        roots = tuple(primitive_root(q) for q in qs)
    roots = tuple(int(g) for g in roots)
    for g, q in zip(roots, qs):
        if not field.is_primitive_root(g, q):
            raise ValidationError(f"{g} is not a primitive root mod {q}")
    l = [[0] * 4 for _ in range(4)]
    dlogs = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            r = discrete_log(qs[i], roots[j], qs[j])
            dlogs[i][j] = r
            l[i][j] = -r % p
    diagonal = tuple((q - 1) // p % p for q in qs)
    return LinkingData(p, qs, tuple(map(tuple, l)), roots, tuple(map(tuple, dlogs)), diagonal)


def presentation_from_linking(d, p=None):
    """Relator i = sum_j l_ij [x_i, x_j], with [x_i, x_j] = -x_ji for i > j."""
    p = d.p if p is None else p
    rel = np.zeros((4, 6), dtype=np.int64)
    for i in range(4):
        for j in range(4):
            if i == j or d.l[i][j] == 0:
                continue
            if i < j:
                rel[i, PAIR_INDEX[(i + 1, j + 1)]] += d.l[i][j]
            else:
                rel[i, PAIR_INDEX[(j + 1, i + 1)]] -= d.l[i][j]
    return QuadraticPresentation.from_rows(rel, p)


def primes_one_mod(p, bound):
    """Primes below ``bound`` that are 1 mod p, ascending."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for k in range(2, isqrt(bound - 1) + 1):
        if sieve[k]:
            sieve[k * k::k] = bytearray(len(range(k * k, bound, k)))
    return [n for n in range(p + 1, bound, p) if sieve[n]]
