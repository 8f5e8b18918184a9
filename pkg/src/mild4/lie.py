"""Graded dimensions of quadratic Lie algebras L/r on four generators.

The free Lie algebra is computed inside the tensor algebra: a homogeneous
element of degree n is a vector indexed by words of length n over
{1, 2, 3, 4} (word ``w1...wn`` sits at base-4 index ``(w1-1)...(wn-1)``),
and ``[a, b] = ab - ba``.

The ideal r generated by degree-2 relators satisfies r_{n+1} = [r_n, L_1]:
any [r, y] with y a bracket of generators expands by Jacobi into brackets
[[r, x], ...] with x in L_1, so by induction on the degree of y nothing
beyond the generators is needed.
"""

from dataclasses import dataclass
from itertools import product
from math import comb

import numpy as np

from . import field
from .errors import DegreeTooLarge, InsufficientDegree, RankDeficient, ValidationError
from .exterior import PAIRS

NGEN = 4
DEFAULT_CAP = 6


@dataclass(frozen=True)
class QuadraticPresentation:
    """Four relators in L_2, one per row, columns x12 x13 x14 x23 x24 x34."""

    p: int
    rel: tuple

    def __post_init__(self):
        field.FieldCtx(self.p)
        if len(self.rel) != 4 or any(len(r) != 6 for r in self.rel):
            raise ValidationError("a presentation needs a 4x6 relator matrix")

    @classmethod
    def from_rows(cls, rows, p):
        m = np.asarray(rows, dtype=np.int64) % p
        return cls(p, tuple(tuple(int(x) for x in r) for r in m))

    def matrix(self):
        return np.array(self.rel, dtype=np.int64)

    @property
    def rank(self):
        return field.rank(self.matrix(), self.p)

    def require_full_rank(self):
        rk = self.rank
        if rk != 4:
            raise RankDeficient(rk)

    def row_space(self):
        return field.Subspace.span(self.matrix(), self.p)

    def complement(self):
        self.require_full_rank()
        return field.orthogonal_complement(self.row_space())


@dataclass(frozen=True)
class GradedDims:
    a: tuple

    @property
    def c(self):
        return len(self.a)

    def __getitem__(self, n):
        """1-based: dims[n] = a_n."""
        if n < 1:
            raise IndexError(n)
        return self.a[n - 1]


def mobius(n):
    res = 1
    for ell in field.prime_factors(n):
        if (n // ell) % ell == 0:
            return 0
        res = -res
    return res


def witt_dim(m, n):
    """Dimension of the degree-n part of the free Lie algebra on m letters."""
    total = sum(mobius(d) * m ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def bracket_generator(elems, n, m=NGEN):
    """Rows [u, x_k] for every row u (degree n) and generator k; shape (m*r, m**(n+1))."""
    elems = np.asarray(elems, dtype=np.int64)
    r = elems.shape[0]
    out = np.zeros((r, m, m ** n, m), dtype=np.int64)
    for k in range(m):
        out[:, k, :, k] += elems
    out = out.reshape(r, m, m ** (n + 1))
    left = np.zeros((r, m, m, m ** n), dtype=np.int64)
    for k in range(m):
        left[:, k, k, :] = elems
    out -= left.reshape(r, m, m ** (n + 1))
    return out.reshape(r * m, m ** (n + 1))


def pair_tensors(rel, m=NGEN):
    """Embed degree-2 Lie coordinates as tensors: x_ij -> ij - ji."""
    rel = np.asarray(rel, dtype=np.int64)
    out = np.zeros((rel.shape[0], m * m), dtype=np.int64)
    for col, (i, j) in enumerate(PAIRS):
        out[:, (i - 1) * m + (j - 1)] += rel[:, col]
        out[:, (j - 1) * m + (i - 1)] -= rel[:, col]
    return out


def ideal_dims(rel, p, c):
    """dim r_n for n = 1..c."""
    dims = [0]
    if c < 2:
        return dims[:c]
    basis, rk = field.rref(pair_tensors(rel), p)
    basis = basis[:rk]
    dims.append(rk)
    for n in range(2, c):
        if rk == 0:
            dims.append(0)
            continue
        gens = bracket_generator(basis, n) % p
        basis, rk = field.rref(gens, p)
        basis = basis[:rk]
        dims.append(rk)
    return dims


def quotient_dims(q, c, cap=DEFAULT_CAP):
    if c < 1:
        raise ValidationError("max degree must be at least 1")
    if c > cap:
        raise DegreeTooLarge(f"degree {c} exceeds cap {cap}")
    q.require_full_rank()
    r = ideal_dims(q.matrix(), q.p, c)
    return GradedDims(tuple(witt_dim(NGEN, n) - r[n - 1] for n in range(1, c + 1)))


def is_mild(dims):
    if dims.c < 4:
        raise InsufficientDegree("mildness needs a_3 and a_4")
    return dims[3] == 4 and dims[4] == 6


def target_series(m, c):
    """Coefficients of 1/(1 - m t + m t^2) through t^c."""
    out = [1, m]
    while len(out) <= c:
        out.append(m * out[-1] - m * out[-2])
    return out[:c + 1]


def _series_product(a, c, sign):
    """prod_n (1 - t^n)^(sign * a_n) through t^c."""
    coeffs = [1] + [0] * c
    for n, an in enumerate(a, start=1):
        if n > c:
            break
        factor = [0] * (c + 1)
        for k in range(c // n + 1):
            if sign < 0:
                factor[n * k] = comb(an + k - 1, k)
            else:
                factor[n * k] = (-1) ** k * comb(an, k)
        coeffs = [sum(coeffs[i] * factor[d - i] for i in range(d + 1)) for d in range(c + 1)]
    return coeffs


def enveloping_series(dims, c=None):
    c = dims.c if c is None else c
    return _series_product(dims.a, c, -1)


def series_check(dims, m=NGEN):
    """True iff the enveloping-algebra series matches 1/(1 - m t + m t^2) through t^c."""
    return enveloping_series(dims) == target_series(m, dims.c)


def question_d_residual(dims, m=NGEN):
    """prod (1 - t^n)^(a_n) - (1 - m t + m t^2), truncated at t^c."""
    c = dims.c
    res = _series_product(dims.a, c, +1)
    target = [1, -m, m] + [0] * c
    return [res[i] - target[i] for i in range(c + 1)]


def question_d_probe(q, c, cap=DEFAULT_CAP):
    return question_d_residual(quotient_dims(q, c, cap))


def has_five_dim_centralizer(q):
    """Does L/(r + L_3) have an element whose centralizer is 5-dimensional?

    Only the degree-1 part a of an element matters; its centralizer has
    dimension 2 + (4 - rank of w -> [a, w] mod r_2), so we look for a
    projective point a of F_p^4 where that 2x4 map has rank exactly 1.
    """
    p = q.p
    comp = q.complement().matrix()  # 2x6; r_2 is its orthogonal complement
    pts = np.array(_projective_points(p), dtype=np.int64)  # (P, 4)
    # ad[pt, r, k] = component r of [a, x_k] projected onto L_2 / r_2
    ad = np.zeros((len(pts), 2, 4), dtype=np.int64)
    for col, (i, j) in enumerate(PAIRS):
        # [a, x_j] gets a_i x_ij, [a, x_i] gets -a_j x_ij
        for r in range(2):
            ad[:, r, j - 1] += pts[:, i - 1] * comp[r, col]
            ad[:, r, i - 1] -= pts[:, j - 1] * comp[r, col]
    ad %= p
    minors = np.zeros(len(pts), dtype=bool)
    for k in range(4):
        for l in range(k + 1, 4):
            minors |= (ad[:, 0, k] * ad[:, 1, l] - ad[:, 0, l] * ad[:, 1, k]) % p != 0
    nonzero = ad.reshape(len(pts), -1).any(axis=1)
    return bool((nonzero & ~minors).any())


def _projective_points(p, n=4):
    pts = []
    for lead in range(n):
        for tail in product(range(p), repeat=n - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    return pts
