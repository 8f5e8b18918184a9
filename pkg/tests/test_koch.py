import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mild4 import field, koch
from mild4.errors import DuplicatePrime, NotAUnit, NotCongruentOneModP, NotPrime, PEven, ValidationError
from mild4.koch import LinkingData, PrimeSet

KNOWN_SETS = [(31, 37, 43, 67), (67, 79, 97, 127), (61, 73, 79, 97), (31, 37, 61, 67)]
SMALL_PRIMES = [q for q in range(3, 10 ** 4) if field.is_prime(q)]


def brute_dlog(a, g, q):
    x = 1
    for r in range(q - 1):
        if x == a % q:
            return r
        x = x * g % q
    raise AssertionError("not found")


def test_validate_examples():
    assert koch.validate(3, [31, 37, 43, 67]) == PrimeSet(3, (31, 37, 43, 67))
    with pytest.raises(DuplicatePrime):
        koch.validate(3, [31, 31, 43, 67])
    with pytest.raises(NotCongruentOneModP) as exc:
        koch.validate(3, [31, 37, 41, 67])
    assert exc.value.index == 3
    with pytest.raises(NotPrime) as exc:
        koch.validate(3, [31, 37, 49, 67])
    assert exc.value.index == 3
    with pytest.raises(PEven):
        koch.validate(4, [31, 37, 43, 67])
    with pytest.raises(NotPrime):
        koch.validate(9, [31, 37, 43, 67])
    with pytest.raises(ValidationError):
        koch.validate(3, [31, 37, 43])


@pytest.mark.parametrize("q,g", [(7, 3), (31, 3), (5, 2)])
def test_primitive_root_examples(q, g):
    assert koch.primitive_root(q) == g


def test_primitive_root_is_smallest_by_order():
    for q in SMALL_PRIMES[:200]:
        g = koch.primitive_root(q)
        orders = []
        for h in range(2, g + 1):
            x, k = h, 1
            while x != 1:
                x = x * h % q
                k += 1
            orders.append(k)
        assert orders[-1] == q - 1 and all(o < q - 1 for o in orders[:-1])


def test_discrete_log_examples():
    assert koch.discrete_log(1, 3, 7) == 0
    assert koch.discrete_log(2, 3, 7) == 2
    assert koch.discrete_log(5, 5, 23) == 1
    with pytest.raises(NotAUnit):
        koch.discrete_log(14, 3, 7)


@given(st.sampled_from(SMALL_PRIMES), st.integers(1, 10 ** 6))
@settings(max_examples=200, deadline=None)
def test_discrete_log_against_brute_force(q, a):
    a = a % q or 1
    g = koch.primitive_root(q)
    r = koch.discrete_log(a, g, q)
    assert 0 <= r < q - 1
    assert pow(g, r, q) == a
    if q < 2000:
        assert r == brute_dlog(a, g, q)


def test_linking_hand_fixture():
    # q_i = 2 against q_j = 7 with g = 3: 3^2 = 2, so l = -2 = 1 mod 3
    assert -koch.discrete_log(2, 3, 7) % 3 == 1


def test_linking_matrix_definition():
    for qs in KNOWN_SETS:
        d = koch.linking_matrix(koch.validate(3, qs))
        for i in range(4):
            assert d.l[i][i] == 0 and d.dlogs[i][i] is None
            assert d.diagonal[i] == (qs[i] - 1) // 3 % 3
            for j in range(4):
                if i != j:
                    r = d.dlogs[i][j]
                    assert pow(d.roots[j], r, qs[j]) == qs[i] % qs[j]
                    assert d.l[i][j] == -r % 3


def test_presentation_from_linking_signs():
    zero = ((0,) * 4,) * 4
    l = [[0] * 4 for _ in range(4)]
    l[0][1] = 1
    d = LinkingData(3, (7, 13, 19, 31), tuple(map(tuple, l)), (3, 2, 2, 3), zero, (0,) * 4)
    q = koch.presentation_from_linking(d)
    assert q.rel == ((1, 0, 0, 0, 0, 0), (0,) * 6, (0,) * 6, (0,) * 6)
    assert q.rank == 1
    l = [[0] * 4 for _ in range(4)]
    l[1][0] = 1
    d = LinkingData(3, (7, 13, 19, 31), tuple(map(tuple, l)), (3, 2, 2, 3), zero, (0,) * 4)
    assert koch.presentation_from_linking(d).rel[1] == (2, 0, 0, 0, 0, 0)


def test_known_sets_have_full_rank():
    for qs in KNOWN_SETS:
        q = koch.presentation_from_linking(koch.linking_matrix(koch.validate(3, qs)))
        assert q.rank == 4


def test_other_primitive_roots_scale_columns():
    s = koch.validate(3, (31, 37, 43, 67))
    base = koch.linking_matrix(s)
    roots = tuple(list(field.primitive_roots(q))[1] for q in s.q)
    alt = koch.linking_matrix(s, roots)
    for j in range(4):
        units = {alt.l[i][j] * pow(base.l[i][j], -1, 3) % 3 for i in range(4) if i != j and base.l[i][j]}
        assert len(units) <= 1
        assert all((alt.l[i][j] == 0) == (base.l[i][j] == 0) for i in range(4))
    with pytest.raises(ValidationError):
        koch.linking_matrix(s, (2, 2, 2, 2))


def test_primes_one_mod():
    assert koch.primes_one_mod(3, 35) == [7, 13, 19, 31]
    assert koch.primes_one_mod(5, 2) == []
    assert koch.primes_one_mod(5, 100) == [q for q in range(2, 100) if field.is_prime(q) and q % 5 == 1]
