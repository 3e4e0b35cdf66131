"""Exact linear combinations: arithmetic, extension helpers, rank."""

import random
from fractions import Fraction

import pytest

from shufflealg.algebra import PermAlgebra
from shufflealg.lincomb import (
    DomainError,
    Lin,
    TensorElem,
    bilinear_extend,
    echelon_basis,
    graded_component,
    lin_combine,
    linear_extend,
    multilinear_extend,
    parse_rational,
    rank,
    tensor,
)
from shufflealg.products import bullet0


def test_cancellation_drops_the_key():
    u = Lin({(1,): 1})
    assert lin_combine(1, u, -1, u) == Lin()
    assert len(lin_combine(1, u, -1, u)) == 0


def test_disjoint_supports_union():
    u, v = Lin({(1,): 1}), Lin({(2, 1): 3})
    w = u + v
    assert w.support() == [(1,), (2, 1)]
    assert w.coeff((2, 1)) == 3


def test_scaling_is_exact():
    u = Lin({(1,): Fraction(1, 2)})
    assert 2 * u == Lin({(1,): 1})
    assert u.scale(0) == Lin()


def test_zero_comparison():
    assert Lin() == 0
    assert Lin({(1,): 1}) != 0


def test_bullet0_on_a_difference():
    mr = PermAlgebra()
    u = Lin({(2, 1): 1, (1, 2): -1})
    assert bullet0(mr, u, Lin({(1,): 1})) == Lin({(2, 1, 3): 1, (1, 2, 3): -1})


def test_graded_component():
    u = Lin({(1,): 2, (2, 1): 1, (1, 2): -1, (1, 2, 3): 5})
    assert graded_component(u, 2) == Lin({(2, 1): 1, (1, 2): -1})
    assert graded_component(u, 4) == Lin()


def test_text_form_is_sorted():
    u = Lin({(2, 1): 1, (1, 2): -1, (1,): Fraction(3, 2)})
    assert u.to_text(lambda k: ",".join(map(str, k))) == "3/2*1 - 1,2 + 2,1"
    assert Lin().to_text() == "0"


def test_json_form():
    u = Lin({(2, 1): -2, (1, 2): Fraction(1, 3)})
    assert u.to_json(list) == {
        "terms": [{"coeff": "1/3", "word": [1, 2]}, {"coeff": "-2", "word": [2, 1]}]
    }


def test_tensor_and_json():
    t = tensor(Lin({(1,): 1}), Lin({(2, 1): 1, (1, 2): -1}))
    assert isinstance(t, TensorElem)
    assert t.arity() == 2
    assert t == Lin({((1,), (2, 1)): 1, ((1,), (1, 2)): -1})
    assert t.to_json(list)["terms"][0] == {"coeff": "-1", "factors": [[1], [1, 2]]}
    assert t.to_text(lambda k: ",".join(map(str, k))) == "-1 ⊗ 1,2 + 1 ⊗ 2,1"


def test_extension_helpers():
    u = Lin({(1,): 2, (2, 1): -1})
    assert linear_extend(lambda k: {k + (len(k) + 1,): 1}, u) == Lin({(1, 2): 2, (2, 1, 3): -1})

    def cat(a, b):
        return {a + tuple(x + len(a) for x in b): 1}

    assert bilinear_extend(cat, u, Lin({(1,): 3})) == Lin({(1, 2): 6, (2, 1, 3): -3})
    assert multilinear_extend(lambda a, b, c: {(len(a), len(b), len(c)): 1}, u, u, u).coeff((1, 1, 1)) == 8


def test_bilinear_extend_reports_the_pair():
    def bad(a, b):
        raise DomainError("nope")

    with pytest.raises(DomainError, match="on pair"):
        bilinear_extend(bad, Lin({(1,): 1}), Lin({(1,): 1}))


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" -2 ") == -2
    with pytest.raises(DomainError):
        parse_rational("0.5.1")
    with pytest.raises(DomainError):
        parse_rational("1/0")


def test_rank_exact():
    a = Lin({"a": 1, "b": 1})
    b = Lin({"b": 1, "c": 1})
    c = Lin({"a": 1, "c": -1})
    assert rank([a, b, c]) == 2
    assert echelon_basis([a, b, c]) == [0, 1]
    # a determinant that vanishes only in exact arithmetic
    third = Fraction(1, 3)
    rows = [Lin({"x": third, "y": 1}), Lin({"x": 1, "y": 3})]
    assert rank(rows) == 1
    assert rank([]) == 0


def test_rank_of_identity_block():
    vecs = [Lin({i: 1, i + 1: -1}) for i in range(10)]
    assert rank(vecs) == 10
    assert rank(vecs + [sum(vecs, Lin())]) == 10


def _random_lin(rng, keys):
    return Lin({k: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for k in rng.sample(keys, 3)})


def test_distributivity_random():
    rng = random.Random(7)
    mr = PermAlgebra()
    keys = [(1, 2), (2, 1), (1,), (1, 3, 2), (3, 1, 2)]
    for _ in range(50):
        x, y, z = (_random_lin(rng, keys) for _ in range(3))
        a = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        assert bullet0(mr, x + y, z) == bullet0(mr, x, z) + bullet0(mr, y, z)
        assert bullet0(mr, x, a * y + z) == a * bullet0(mr, x, y) + bullet0(mr, x, z)
        assert (x + y) + z == x + (y + z)
        assert x - x == Lin()
