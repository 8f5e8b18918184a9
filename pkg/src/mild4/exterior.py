"""The exterior-square action of GL_4(F_p) on degree-2 brackets.

Coordinates on L_2 follow the bracket order x12 < x13 < x14 < x23 < x24 < x34.
``psi(A)`` has as column ``ij`` the image of ``x_ij`` under the automorphism
``x_i -> sum_j A[j, i] x_j``; subspaces are rows multiplied on the right.

Group words are sequences of elementary tokens applied left to right, so the
word ``t1 t2 ... tk`` acts on a row vector ``v`` as ``v psi(t1) ... psi(tk)``.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import field
from .errors import SingularMatrix, ValidationError
from .field import Subspace

PAIRS = tuple(combinations(range(1, 5), 2))
PAIR_INDEX = {pair: k for k, pair in enumerate(PAIRS)}
X12, X13, X14, X23, X24, X34 = range(6)

_R = np.array([r - 1 for r, _ in PAIRS])
_S = np.array([s - 1 for _, s in PAIRS])


def _check_index(*idx):
    for i in idx:
        if i not in (1, 2, 3, 4):
            raise ValidationError(f"generator index {i} not in 1..4")


@dataclass(frozen=True)
class AddCol:
    """Column operation c_j -> c_j + a c_i (so x_j -> x_j + a x_i)."""

    i: int
    j: int
    a: int

    def __post_init__(self):
        _check_index(self.i, self.j)
        if self.i == self.j:
            raise ValidationError("AddCol needs i != j")

    def __str__(self):
        return f"A({self.i},{self.j};{self.a})"

    def inverse(self, p):
        return AddCol(self.i, self.j, -self.a % p)


@dataclass(frozen=True)
class SwapCol:
    i: int
    j: int

    def __post_init__(self):
        _check_index(self.i, self.j)
        if self.i == self.j:
            raise ValidationError("SwapCol needs i != j")

    def __str__(self):
        return f"S({self.i},{self.j})"

    def inverse(self, p):
        return self


@dataclass(frozen=True)
class ScaleCol:
    i: int
    a: int

    def __post_init__(self):
        _check_index(self.i)
        if self.a == 0:
            raise ValidationError("ScaleCol needs a nonzero scalar")

    def __str__(self):
        return f"C({self.i};{self.a})"

    def inverse(self, p):
        return ScaleCol(self.i, pow(self.a, -1, p))


_TOKEN_RE = re.compile(r"([ASC])\(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?(?:;\s*(-?\d+)\s*)?\)")


@dataclass(frozen=True)
class GroupWord:
    tokens: tuple = ()

    def __str__(self):
        return " ".join(str(t) for t in self.tokens)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __add__(self, other):
        return GroupWord(self.tokens + tuple(other))

    def inverse(self, p):
        return GroupWord(tuple(t.inverse(p) for t in reversed(self.tokens)))

    @classmethod
    def parse(cls, text):
        tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                raise ValidationError(f"bad token at {text[pos:pos + 12]!r}")
            kind, x, y, a = m.groups()
            if kind == "A" and y is not None and a is not None:
                tokens.append(AddCol(int(x), int(y), int(a)))
            elif kind == "S" and y is not None and a is None:
                tokens.append(SwapCol(int(x), int(y)))
            elif kind == "C" and y is None and a is not None:
                tokens.append(ScaleCol(int(x), int(a)))
            else:
                raise ValidationError(f"malformed token {m.group(0)!r}")
            pos = m.end()
        return cls(tuple(tokens))


def token_gl4(t, p):
    m = np.eye(4, dtype=np.int64)
    if isinstance(t, AddCol):
        m[t.i - 1, t.j - 1] = t.a % p
    elif isinstance(t, SwapCol):
        m[[t.i - 1, t.j - 1]] = m[[t.j - 1, t.i - 1]]
    elif isinstance(t, ScaleCol):
        if t.a % p == 0:
            raise ValidationError("ScaleCol scalar vanishes mod p")
        m[t.i - 1, t.i - 1] = t.a % p
    else:
        raise TypeError(f"not a generator token: {t!r}")
    return m


def psi(a, p):
    """Exterior square: entry (rs, ij) is a_ri a_sj - a_si a_rj."""
    a = field.as_matrix(a, p)
    if a.shape != (4, 4):
        raise ValueError("psi expects a 4x4 matrix")
    if field.det(a, p) == 0:
        raise SingularMatrix("psi is only defined on GL_4")
    return _psi(a, p)


def _psi(a, p):
    # rows index (r, s), columns index (i, j)
    return (a[_R][:, _R] * a[_S][:, _S] - a[_S][:, _R] * a[_R][:, _S]) % p


@lru_cache(maxsize=4096)
def _token_gl6_cached(t, p):
    m = _psi(token_gl4(t, p), p)
    m.setflags(write=False)
    return m


def token_gl6(t, p):
    return _token_gl6_cached(t, p)


def word_gl4(w, p):
    m = np.eye(4, dtype=np.int64)
    for t in w:
        m = m @ token_gl4(t, p) % p
    return m


def word_gl6(w, p):
    m = np.eye(6, dtype=np.int64)
    for t in w:
        m = m @ token_gl6(t, p) % p
    return m


def act(u, w):
    """Right action of a word on a subspace of F_p^6."""
    return Subspace.span(u.matrix() @ word_gl6(w, u.p) % u.p, u.p, u.ambient_dim)


def dual_act(u_perp, w):
    """Induced action on complements: U^perp . M = U^perp (M^-1)^T."""
    p = u_perp.p
    m = field.inverse(word_gl6(w, p), p).T
    return Subspace.span(u_perp.matrix() @ m % p, p, u_perp.ambient_dim)


def pluecker_form(v, p):
    """Q(v) = v12 v34 - v13 v24 + v14 v23; vanishes exactly on decomposables."""
    v = [int(x) for x in v]
    return (v[0] * v[5] - v[1] * v[4] + v[2] * v[3]) % p


def pluecker_polar(u, v, p):
    """Symmetric bilinear form with B(v, v) = 2 Q(v)."""
    u = [int(x) for x in u]
    v = [int(x) for x in v]
    return (u[0] * v[5] + u[5] * v[0] - u[1] * v[4] - u[4] * v[1] + u[2] * v[3] + u[3] * v[2]) % p


def stabilizer_word(i, j, b, p):
    """M_ji^{1/b} M_ij^{-b} T_ij S_i^{-1/b} S_j^b, b nonzero.

    For (i, j) in {(2,3), (2,4), (1,3), (1,4)} these fix the line through
    x34 and move a single middle coordinate of (1, a2, ..., a6).
    """
    b %= p
    binv = pow(b, -1, p)
    return GroupWord((
        AddCol(j, i, binv),
        AddCol(i, j, -b % p),
        SwapCol(i, j),
        ScaleCol(i, -binv % p),
        ScaleCol(j, b),
    ))
