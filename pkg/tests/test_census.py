import numpy as np
import pytest

from mild4 import census, field
from mild4.errors import TooLarge, ValidationError
from mild4.reduction import LineLabel, OrbitLabel


def test_all_subspaces_counts():
    for p, d in ((3, 1), (3, 2), (5, 1)):
        subs = census.all_subspaces(p, d)
        assert len(subs) == field.gaussian_binomial(6, d, p)
        keys = census._keys(subs, p)
        assert len(np.unique(keys)) == len(keys)
    for m in census.all_subspaces(3, 2)[::997]:
        assert np.array_equal(field.rref(m, 3)[0], m)


def test_generator_count():
    p = 5
    assert len(census.generators(p)) == 12 * (p - 1) + 6 + 4 * (p - 2)


def test_lines_p3():
    c = census.enumerate_orbits(3, 1)
    assert c.count == 2 and c.total == 364
    sizes = {o.label: o.size for o in c.orbits}
    # decomposable lines: points of the Klein quadric
    assert sizes[LineLabel.DECOMPOSABLE] == 130 and sum(sizes.values()) == 364


def test_lines_p5():
    c = census.enumerate_orbits(5, 1)
    assert c.count == 2 and c.total == 3906


def test_planes_p3():
    c = census.enumerate_orbits(3, 2)
    assert c.count == 4 and c.total == 11011
    assert [o.label for o in c.orbits] == list(OrbitLabel)
    assert sum(o.size for o in c.orbits) == field.gaussian_binomial(6, 2, 3)


@pytest.mark.slow
def test_planes_p5():
    c = census.enumerate_orbits(5, 2)
    assert c.count == 4 and c.total == field.gaussian_binomial(6, 2, 5)


def test_guards(monkeypatch):
    with pytest.raises(ValidationError):
        census.enumerate_orbits(3, 3)
    monkeypatch.setattr(census, "MAX_SUBSPACES", 1000)
    with pytest.raises(TooLarge):
        census.enumerate_orbits(3, 2)
