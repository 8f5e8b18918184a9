"""Constructive normal forms for lines and planes in F_p^6.

Both reducers walk the case analysis of the four-orbit classification and
record every generator they apply, so the result carries a word that can be
replayed to check it.  Row operations inside the subspace (rescaling,
adding multiples of one basis vector to another, reordering) are free and
are not recorded.

The plane reducer is a small state machine with two states, ``CASE1``
(a decomposable vector of the plane is known) and ``CASE2`` (the first
tracked vector is not decomposable).  Case 2 jumps back to Case 1 whenever
a decomposable vector turns up.  A step cap turns any loop into an
:class:`InternalInvariantViolation`.
"""

from dataclasses import dataclass
from enum import Enum, IntEnum

import numpy as np

from .errors import BadDimension, InternalInvariantViolation, ZeroVector
from .exterior import (X12, X13, X14, X23, X24, X34, AddCol, GroupWord, ScaleCol,
                       SwapCol, act, pluecker_form, stabilizer_word, token_gl6)
from .field import Subspace, SquareClass, smallest_generator, sqrt_mod, square_class

MAX_STEPS = 64


class LineLabel(Enum):
    DECOMPOSABLE = "L_DECOMPOSABLE"
    GENERIC = "L_GENERIC"


class OrbitLabel(IntEnum):
    O1 = 1
    O2 = 2
    O3 = 3
    O4 = 4

    @property
    def mild(self):
        return self in (OrbitLabel.O1, OrbitLabel.O4)


E6 = np.array([0, 0, 0, 0, 0, 1], dtype=np.int64)
GENERIC_LINE = np.array([0, 0, 1, 1, 0, 0], dtype=np.int64)


def canonical_line(label, p):
    v = E6 if label is LineLabel.DECOMPOSABLE else GENERIC_LINE
    return Subspace.span(v, p)


def canonical_plane(label, p):
    label = OrbitLabel(label)
    rows = {
        OrbitLabel.O1: [[0, 0, 0, 0, 0, 1], [1, 0, 0, 0, 0, 0]],
        OrbitLabel.O2: [[0, 0, 0, 0, 0, 1], [0, 0, 1, 0, 0, 0]],
        OrbitLabel.O3: [[0, 0, 0, 0, 0, 1], [0, 0, 1, 1, 0, 0]],
        OrbitLabel.O4: [[0, 0, 1, 1, 0, 0], [0, 1, 0, 0, smallest_generator(p), 0]],
    }[label]
    return Subspace.span(rows, p)


@dataclass(frozen=True)
class ReductionResult:
    label: object
    witness: GroupWord
    canonical: Subspace


def verify_witness(u, r):
    return act(u, r.witness) == r.canonical


class _Walker:
    """Tracked basis vectors plus the word applied to them so far."""

    def __init__(self, p, rows):
        self.p = p
        self.rows = [np.array(r, dtype=np.int64) % p for r in rows]
        self.tokens = []

    def apply(self, *tokens):
        for t in tokens:
            if isinstance(t, GroupWord):
                self.apply(*t.tokens)
                continue
            m = token_gl6(t, self.p)
            self.rows = [r @ m % self.p for r in self.rows]
            self.tokens.append(t)

    def scale(self, k, coord, target=1):
        """Free row op: rescale row k so that coordinate ``coord`` equals target."""
        r = self.rows[k]
        self.rows[k] = r * (target * pow(int(r[coord]), -1, self.p)) % self.p

    def clear(self, i, j, coord, k=0):
        """Apply M_ij^a with a solving  v_coord + a * d_coord = 0.

        ``d`` is the change of row k under M_ij^1; every elementary transvection
        acts affinely in its parameter, so one evaluation pins the slope.
        """
        v = self.rows[k]
        if v[coord] == 0:
            return
        d = (v @ token_gl6(AddCol(i, j, 1), self.p) - v) % self.p
        if d[coord] == 0:
            raise InternalInvariantViolation(f"M_{i}{j} cannot clear coordinate {coord}")
        a = -int(v[coord]) * pow(int(d[coord]), -1, self.p) % self.p
        self.apply(AddCol(i, j, a))

    def q(self, k):
        return pluecker_form(self.rows[k], self.p)


def _reduce_tracked_line(w, k=0):
    """Move row k of the walker onto a canonical line and normalize it."""
    p = w.p
    v = w.rows[k]
    if not v.any():
        raise ZeroVector("cannot reduce the zero vector")
    head = [X12, X13, X14]
    zeros = [c for c in head if v[c] == 0]
    if len(zeros) >= 2:
        # T23 and T34 permute x12, x13, x14; park the survivor on x14
        if v[X12]:
            w.apply(SwapCol(2, 3), SwapCol(3, 4))
        elif v[X13]:
            w.apply(SwapCol(3, 4))
    elif len(zeros) == 1:
        if zeros == [X13]:
            w.apply(SwapCol(2, 3))
        elif zeros == [X14]:
            w.apply(SwapCol(3, 4), SwapCol(2, 3))
        w.clear(4, 3, X13, k)
    else:
        w.clear(3, 2, X12, k)
        w.clear(4, 3, X13, k)
    v = w.rows[k]
    assert v[X12] == 0 and v[X13] == 0

    if v[X14] == 0 or v[X23] == 0:
        if v[X14] == 0:
            # (x23, x24, x34) under GL on x2, x3, x4
            if v[X24] == 0:
                w.apply(AddCol(3, 4, 1) if w.rows[k][X23] else AddCol(3, 2, 1))
            w.clear(4, 3, X23, k)
        else:
            # (x14, x24, x34) under GL on x1, x2, x3
            if v[X24] == 0:
                w.apply(AddCol(1, 2, 1))
            w.clear(2, 1, X14, k)
        w.clear(2, 3, X34, k)
        # single survivor on x24: x34 += x24, then x24 -= x34
        w.apply(AddCol(2, 3, 1))
        w.clear(3, 2, X24, k)
        w.scale(k, X34)
        return LineLabel.DECOMPOSABLE

    w.scale(k, X14)
    if w.rows[k][X34]:
        if w.rows[k][X24] == 0:
            w.apply(AddCol(1, 2, 1))
        w.clear(2, 3, X34, k)
    w.clear(1, 2, X24, k)
    y = int(w.rows[k][X23])
    if y != 1:
        # inverse of M_12^y S_1^-y M_21 T_34 M_12^-1, which sends (0,0,1,1,0,0) to (0,0,1,y,0,0)
        chain = GroupWord((AddCol(1, 2, y), ScaleCol(1, -y % p), AddCol(2, 1, 1),
                           SwapCol(3, 4), AddCol(1, 2, p - 1)))
        w.apply(chain.inverse(p))
    w.scale(k, X14)
    return LineLabel.GENERIC


def reduce_line(v, p):
    v = np.asarray(v, dtype=np.int64) % p
    if v.shape != (6,):
        raise BadDimension("expected a vector of length 6")
    if not v.any():
        raise ZeroVector("cannot reduce the zero vector")
    line = Subspace.span(v, p)
    for label in LineLabel:
        if line == canonical_line(label, p):
            return ReductionResult(label, GroupWord(), line)
    w = _Walker(p, [v])
    label = _reduce_tracked_line(w)
    res = ReductionResult(label, GroupWord(tuple(w.tokens)), canonical_line(label, p))
    if not verify_witness(Subspace.span(v, p), res):
        raise InternalInvariantViolation(f"line witness failed for {v.tolist()}")
    return res


def _isotropic(rows, p):
    """First decomposable vector among the p+1 lines spanned by two rows."""
    a, b = rows
    if pluecker_form(a, p) == 0:
        return a
    for lam in range(p):
        v = (b + lam * a) % p
        if pluecker_form(v, p) == 0:
            return v
    return None


def _other(rows, v, p):
    """A row independent of v."""
    for r in rows:
        if Subspace.span(np.vstack([v, r]), p).dim == 2:
            return r
    raise InternalInvariantViolation("tracked rows collapsed")


def _case1(w):
    """rows[0] is decomposable."""
    p = w.p
    if _reduce_tracked_line(w, 0) is not LineLabel.DECOMPOSABLE:
        raise InternalInvariantViolation("case 1 entered with a generic vector")

    def renorm():
        if w.rows[0][:5].any():
            raise InternalInvariantViolation("x34 line not stabilized")
        w.rows[0] = E6.copy()
        w.rows[1] = (w.rows[1] - w.rows[1][X34] * E6) % p

    renorm()
    if w.rows[1][X12]:
        w.scale(1, X12)
        # (i)-(iv) stabilizers move one middle coordinate each:
        # a2 -> a2 + b, a3 -> a3 + b, a4 -> a4 - b, a5 -> a5 - b
        for (i, j), coord, sign in (((2, 3), X13, -1), ((2, 4), X14, -1),
                                    ((1, 3), X23, 1), ((1, 4), X24, 1)):
            c = int(w.rows[1][coord])
            if c:
                w.apply(stabilizer_word(i, j, sign * c % p, p))
                renorm()
                w.scale(1, X12)
        return OrbitLabel.O1

    s = w.rows[1]
    if not s[X14]:
        # T12 sends (b1,b2,b3,b4) -> (b3,b4,b1,b2), T34 -> (b2,b1,b4,b3)
        if s[X13]:
            w.apply(SwapCol(3, 4))
        elif s[X23]:
            w.apply(SwapCol(1, 2), SwapCol(3, 4))
        else:
            w.apply(SwapCol(1, 2))
        renorm()
    w.scale(1, X14)
    w.clear(4, 3, X13, 1)
    w.clear(1, 2, X24, 1)
    renorm()
    y = int(w.rows[1][X23])
    if y == 0:
        return OrbitLabel.O2
    w.apply(ScaleCol(2, pow(y, -1, p)))
    return OrbitLabel.O3


def _case2(w):
    """rows[0] is not decomposable.  Returns a label or the string 'CASE1'."""
    p = w.p
    if _reduce_tracked_line(w, 0) is not LineLabel.GENERIC:
        raise InternalInvariantViolation("case 2 entered with a decomposable vector")

    def renorm():
        u = w.rows[0]
        if u[X14] == 0 or ((u - u[X14] * GENERIC_LINE) % p).any():
            raise InternalInvariantViolation("first line not stabilized")
        w.rows[0] = GENERIC_LINE.copy()

    def to_case1(v):
        w.rows = [v % p, _other(w.rows, v, p)]
        return "CASE1"

    s = w.rows[1]
    if s[X12] == 0 and s[X13] == 0:
        return to_case1((s - s[X14] * GENERIC_LINE) % p)
    if s[X13] == 0:
        # swaps x12 and x13 while fixing (0,0,1,1,0,0)
        w.apply(SwapCol(2, 3), ScaleCol(2, p - 1))
        renorm()
    w.scale(1, X13)
    w.clear(3, 2, X12, 1)
    w.clear(1, 4, X34, 1)
    w.rows[1] = (w.rows[1] - w.rows[1][X14] * GENERIC_LINE) % p
    s = w.rows[1]
    if s[X23] == 0 and s[X24] == 0:
        return to_case1(s)

    if s[X23]:
        alpha = pow(int(s[X23]), -1, p)
        w.apply(ScaleCol(2, alpha), ScaleCol(4, alpha))
        renorm()
        x = int(w.rows[1][X24])
        if x == 0:
            return to_case1(w.rows[1])
        t = (4 * x + 1) % p
        half = (t - 1) * pow(2, -1, p) % p
        # sends span{(0,0,1,1,0,0), (0,1,0,0,t,0)} to span{(0,0,1,1,0,0), (0,1,0,1,x,0)}
        chain = GroupWord((AddCol(4, 3, p - 1), AddCol(3, 4, 1), AddCol(1, 2, p - 1),
                           ScaleCol(1, (1 - t) % p), ScaleCol(2, half), ScaleCol(4, half)))
        w.apply(chain.inverse(p))
        plane = Subspace.span(np.vstack(w.rows), p)
        if not plane.contains(GENERIC_LINE):
            raise InternalInvariantViolation("critical chain left the generic line")
        rest = _other([np.array(r) for r in plane.basis], GENERIC_LINE, p)
        w.rows = [GENERIC_LINE.copy(), rest]
        return "CASE2"

    z = int(s[X24])
    g = smallest_generator(p)
    if square_class(z, p) is SquareClass.NONSQUARE:
        alpha = sqrt_mod(g * pow(z, -1, p), p)
        w.apply(ScaleCol(2, alpha), ScaleCol(4, alpha))
        return OrbitLabel.O4
    alpha = sqrt_mod(pow(z, -1, p), p)
    w.apply(ScaleCol(2, alpha), ScaleCol(4, alpha))
    # square case: (0,0,1,1,0,0), (0,1,0,0,1,0) -> (1,0,3,0,0,-1), (1,0,0,0,0,1)
    w.apply(AddCol(4, 2, 1), AddCol(2, 1, p - 1), AddCol(1, 3, 1), SwapCol(1, 2),
            AddCol(2, 4, -2 % p), AddCol(4, 2, 1), AddCol(2, 1, 1), AddCol(3, 2, 1))
    v = _isotropic(w.rows, p)
    if v is None:
        raise InternalInvariantViolation("square case produced no decomposable vector")
    return to_case1(v)


def reduce_plane(u):
    if u.ambient_dim != 6 or u.dim != 2:
        raise BadDimension(f"expected a plane in F_p^6, got dim {u.dim}")
    p = u.p
    for label in OrbitLabel:
        if u == canonical_plane(label, p):
            return ReductionResult(label, GroupWord(), u)
    w = _Walker(p, [np.array(r) for r in u.basis])
    if w.q(0) == 0:
        state = "CASE1"
    elif w.q(1) == 0:
        w.rows.reverse()
        state = "CASE1"
    else:
        state = "CASE2"
    for _ in range(MAX_STEPS):
        state = _case1(w) if state == "CASE1" else _case2(w)
        if isinstance(state, OrbitLabel):
            break
    else:
        raise InternalInvariantViolation(f"plane reducer did not terminate on {u}")
    res = ReductionResult(state, GroupWord(tuple(w.tokens)), canonical_plane(state, p))
    if not verify_witness(u, res):
        raise InternalInvariantViolation(f"plane witness failed for {u}")
    return res
