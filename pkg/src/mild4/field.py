"""Prime-field arithmetic and dense linear algebra over F_p.

Matrices are numpy ``int64`` arrays with entries reduced to ``[0, p)``.
Since ``p < 2**15`` every product of two residues fits comfortably in a
machine word, so no big-integer support is needed.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import isqrt

import numpy as np

from .errors import NotPrime, PEven, SingularMatrix, ValidationError

P_MAX = 1 << 15


def is_prime(n):
    """Deterministic trial division; fine for the small inputs used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldCtx:
    """The prime field F_p, p odd."""

    p: int

    def __post_init__(self):
        p = self.p
        if not isinstance(p, (int, np.integer)) or p < 2:
            raise NotPrime(None, p)
        if p % 2 == 0:
            raise PEven(f"p must be odd, got {p}")
        if p >= P_MAX:
            raise ValidationError(f"p must be below {P_MAX}, got {p}")
        if not is_prime(p):
            raise NotPrime(None, p)

    def reduce(self, a):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(int(a), -1, self.p)


def as_matrix(m, p):
    return np.asarray(m, dtype=np.int64) % p


def rref(m, p):
    """Reduced row echelon form of ``m`` over F_p.

    Returns ``(R, rank)`` where ``R`` has the shape of ``m`` with the zero
    rows at the bottom.
    """
    a = np.array(m, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        r += 1
    return a, r


def rank(m, p):
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return rref(m, p)[1]


def pivot_columns(r):
    cols = []
    for row in r:
        nz = np.flatnonzero(row)
        if nz.size == 0:
            break
        cols.append(int(nz[0]))
    return cols


def nullspace(m, p):
    """Basis (as rows) of {x : m @ x = 0}."""
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[1]
    r, rk = rref(m, p)
    piv = pivot_columns(r[:rk])
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = -r[i, f] % p
    return basis


def det(m, p):
    a = np.array(m, dtype=np.int64) % p
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("det needs a square matrix")
    d = 1
    for c in range(n):
        nz = np.flatnonzero(a[c:, c])
        if nz.size == 0:
            return 0
        k = c + nz[0]
        if k != c:
            a[[c, k]] = a[[k, c]]
            d = -d
        piv = int(a[c, c])
        d = d * piv % p
        inv = pow(piv, -1, p)
        below = a[c + 1:, c] * inv % p
        a[c + 1:] = (a[c + 1:] - np.outer(below, a[c])) % p
    return d % p


def inverse(m, p):
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[0]
    aug = np.hstack([m % p, np.eye(n, dtype=np.int64)])
    r, _ = rref(aug, p)
    if not np.array_equal(r[:, :n], np.eye(n, dtype=np.int64)):
        raise SingularMatrix("matrix is not invertible mod %d" % p)
    return r[:, n:]


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^n stored by its RREF basis.

    Equality and hashing are entry-wise on the canonical basis, so two
    instances compare equal exactly when they span the same space.
    """

    p: int
    basis: tuple
    ambient_dim: int = 6

    @classmethod
    def span(cls, rows, p, ambient_dim=None):
        m = np.asarray(rows, dtype=np.int64)
        if m.ndim == 1:
            m = m.reshape(1, -1)
        if ambient_dim is None:
            ambient_dim = m.shape[1]
        if m.size == 0:
            return cls(p, (), ambient_dim)
        r, rk = rref(m, p)
        return cls(p, tuple(tuple(int(x) for x in row) for row in r[:rk]), ambient_dim)

    @property
    def dim(self):
        return len(self.basis)

    def matrix(self):
        if not self.basis:
            return np.zeros((0, self.ambient_dim), dtype=np.int64)
        return np.array(self.basis, dtype=np.int64)

    def contains(self, v):
        v = np.asarray(v, dtype=np.int64).reshape(1, -1)
        return rank(np.vstack([self.matrix(), v]), self.p) == self.dim

    def __str__(self):
        return "[" + "; ".join(" ".join(map(str, row)) for row in self.basis) + "]"


def orthogonal_complement(u):
    """Vectors with zero standard dot product against every row of ``u``."""
    if u.dim == 0:
        return Subspace.span(np.eye(u.ambient_dim, dtype=np.int64), u.p)
    return Subspace.span(nullspace(u.matrix(), u.p), u.p, u.ambient_dim)


class SquareClass(Enum):
    ZERO = "zero"
    SQUARE = "square"
    NONSQUARE = "nonsquare"


def square_class(a, p):
    a %= p
    if a == 0:
        return SquareClass.ZERO
    return SquareClass.SQUARE if pow(int(a), (p - 1) // 2, p) == 1 else SquareClass.NONSQUARE


def sqrt_mod(a, p):
    """A square root of ``a`` mod an odd prime ``p`` (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if square_class(a, p) is not SquareClass.SQUARE:
        raise ValueError(f"{a} is not a square mod {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while square_class(z, p) is not SquareClass.NONSQUARE:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def is_primitive_root(g, q, factors=None):
    if g % q == 0:
        return False
    if factors is None:
        factors = prime_factors(q - 1)
    return all(pow(g, (q - 1) // ell, q) != 1 for ell in factors)


def primitive_roots(q):
    """All primitive roots mod the prime ``q``, ascending."""
    if q == 2:
        yield 1
        return
    factors = prime_factors(q - 1)
    for g in range(2, q):
        if is_primitive_root(g, q, factors):
            yield g


@lru_cache(maxsize=None)
def smallest_generator(p):
    """Smallest g in [2, p) generating the multiplicative group of F_p."""
    return next(primitive_roots(p))


def gaussian_binomial(n, k, p):
    """Number of k-dimensional subspaces of F_p^n."""
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


@lru_cache(maxsize=None)
def inverse_table(p):
    t = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        t[a] = pow(a, -1, p)
    return t


def batch_rref(a, p):
    """Row-reduce a stack of full-row-rank matrices of shape (N, d, n)."""
    a = np.array(a, dtype=np.int64) % p
    n_mat, d, n = a.shape
    inv = inverse_table(p)
    piv_row = np.zeros(n_mat, dtype=np.int64)
    idx = np.arange(n_mat)
    rows = np.arange(d)
    for c in range(n):
        cand = (a[:, :, c] != 0) & (rows[None, :] >= piv_row[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        sel = idx[has]
        src = cand[has].argmax(axis=1)
        dst = piv_row[has]
        tmp = a[sel, src].copy()
        a[sel, src] = a[sel, dst]
        a[sel, dst] = tmp
        lead = a[sel, dst, c]
        a[sel, dst] = a[sel, dst] * inv[lead][:, None] % p
        prow = a[sel, dst]
        for i in range(d):
            f = a[sel, i, c].copy()
            f[dst == i] = 0
            a[sel, i] = (a[sel, i] - f[:, None] * prow) % p
        piv_row[has] += 1
        if (piv_row == d).all():
            break
    return a
