"""Orbit classification of quadratic presentations by three independent routes.

* reduction: normal form of the complement plane with a checked witness word;
* invariants: graded dimensions a_3, a_4 plus the 5-dimensional centralizer test;
* quadric: the Pluecker form restricted to the complement plane.

The routes must agree; a disagreement is a bug and raises
:class:`InternalInvariantViolation`.
"""

from dataclasses import dataclass, field as dc_field
from itertools import combinations

import numpy as np

from . import field, koch, lie
from .errors import InternalInvariantViolation, RankDeficient
from .exterior import GroupWord, pluecker_form, pluecker_polar
from .reduction import OrbitLabel, reduce_plane, verify_witness


@dataclass
class ClassificationReport:
    input: dict
    p: int
    orbit: object = None
    mild: bool = False
    dims: object = None
    witness: object = None
    complement: object = None
    linking: object = None
    methods: dict = dc_field(default_factory=dict)
    notes: list = dc_field(default_factory=list)

    def as_dict(self):
        return {
            "input": self.input,
            "p": self.p,
            "orbit": None if self.orbit is None else int(self.orbit),
            "mild": bool(self.mild),
            "dims": [] if self.dims is None else list(self.dims.a),
            "witness": "" if self.witness is None else str(self.witness),
            "complement": None if self.complement is None else [list(r) for r in self.complement.basis],
            "linking": None if self.linking is None else self.linking.as_dict(),
            "methods": self.methods,
            "notes": list(self.notes),
        }


def classify_by_reduction(q):
    comp = q.complement()
    res = reduce_plane(comp)
    if not verify_witness(comp, res):
        raise InternalInvariantViolation("reduction witness does not verify")
    return res.label, res.witness, comp


def label_from_dims(dims, centralizer):
    """Map (a_3, a_4, centralizer test) to an orbit label."""
    a3, a4 = dims[3], dims[4]
    if a3 == 5:
        return OrbitLabel.O2
    if a3 == 4 and a4 == 7:
        return OrbitLabel.O3
    if a3 == 4 and a4 == 6:
        return OrbitLabel.O1 if centralizer() else OrbitLabel.O4
    raise InternalInvariantViolation(f"dims {dims.a} fit none of the four orbits")


def classify_by_invariants(q, dims=None):
    if dims is None:
        dims = lie.quotient_dims(q, 4)
    return label_from_dims(dims, lambda: lie.has_five_dim_centralizer(q))


def quadric_gram(plane):
    """Gram matrix of the polarized Pluecker form on the plane's basis."""
    p = plane.p
    u, v = plane.matrix()
    half = pow(2, -1, p)
    return np.array([[pluecker_form(u, p), pluecker_polar(u, v, p) * half % p],
                     [pluecker_polar(u, v, p) * half % p, pluecker_form(v, p)]], dtype=np.int64)


def label_from_gram(b, p):
    rk = field.rank(b, p)
    if rk == 0:
        return OrbitLabel.O2
    if rk == 1:
        return OrbitLabel.O3
    d = -field.det(b, p) % p
    return OrbitLabel.O1 if field.square_class(d, p) is field.SquareClass.SQUARE else OrbitLabel.O4


def classify_by_quadric(q):
    return label_from_gram(quadric_gram(q.complement()), q.p)


def classify(q, verify=True, input_echo=None):
    """Classify a presentation; ``verify`` runs all three routes."""
    if input_echo is None:
        input_echo = {"matrix": [list(r) for r in q.rel]}
    report = ClassificationReport(input=input_echo, p=q.p)
    rk = q.rank
    if rk != 4:
        report.notes.append(f"CupProductNotSurjective: relator rank {rk} < 4")
        report.methods = {"agree": True}
        return report
    comp = q.complement()
    report.complement = comp
    quadric = classify_by_quadric(q)
    methods = {"quadric": int(quadric)}
    orbit = quadric
    if verify:
        red, witness, _ = classify_by_reduction(q)
        dims = lie.quotient_dims(q, 4)
        inv = classify_by_invariants(q, dims)
        methods.update(reduction=int(red), invariants=int(inv))
        report.witness = witness
        report.dims = dims
        series_ok = lie.series_check(dims)
        if len({red, inv, quadric}) != 1:
            raise InternalInvariantViolation(
                f"routes disagree: reduction={int(red)} invariants={int(inv)} quadric={int(quadric)}")
        if not (quadric.mild == lie.is_mild(dims) == series_ok):
            raise InternalInvariantViolation("mildness tests disagree")
    methods["agree"] = True
    report.methods = methods
    report.orbit = orbit
    report.mild = orbit.mild
    return report


def classify_prime_set(p, qs, verify=True, roots=None):
    s = koch.validate(p, qs)
    data = koch.linking_matrix(s, roots)
    q = koch.presentation_from_linking(data)
    report = classify(q, verify=verify, input_echo={"primes": list(s.q)})
    report.linking = data
    return report


def search_prime_sets(p, bound, target=None, verify=False):
    """Yield (PrimeSet, label or None) over 4-subsets of primes = 1 mod p below bound.

    Subsets come in lexicographic order; ``None`` marks a rank-deficient set.
    """
    if bound > 10 ** 5:
        raise koch.ValidationError("prime bound must be at most 10^5")
    field.FieldCtx(p)
    target = None if target is None else OrbitLabel(target)
    primes = koch.primes_one_mod(p, bound)
    roots = {q: koch.primitive_root(q) for q in primes}
    for qs in combinations(primes, 4):
        s = koch.PrimeSet(p, qs)
        data = koch.linking_matrix(s, tuple(roots[q] for q in qs))
        pres = koch.presentation_from_linking(data)
        try:
            label = classify(pres, verify=verify).orbit
        except RankDeficient:
            label = None
        if target is None or label == target:
            yield s, label
