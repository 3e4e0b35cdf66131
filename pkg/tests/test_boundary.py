"""The Θ-twisted boundary: values, ∂∘∂ = 0, face counts, Euler characteristic."""

import random
from math import factorial

import pytest

from shufflealg.boundary import (
    boundary,
    boundary_alt,
    boundary_basis,
    complex_report,
    d_squared_check,
    sign,
    weight_basis,
)
from shufflealg.lincomb import DomainError, Lin
from shufflealg.words import ColoredWord, ThetaTable, default_theta, format_colored_word

THETA = default_theta()


def W(word, colors):
    return ColoredWord(tuple(word), tuple(colors))


def xi(n):
    return W((1,) * n, (f"xi{n}",))


def stirling2(n, k):
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def test_generator_values():
    assert boundary(THETA, Lin({xi(1): 1})) == Lin()
    assert boundary(THETA, Lin({xi(2): 1})) == Lin({W((2, 1), ("xi1", "xi1")): 1, W((1, 2), ("xi1", "xi1")): -1})
    d3 = boundary(THETA, Lin({xi(3): 1}))
    assert len(d3) == 6
    assert {k.colors for k in d3} == {("xi1", "xi2"), ("xi2", "xi1")}
    assert boundary(THETA, d3) == Lin()


def test_sign():
    assert sign((1, 2, 3)) == 1
    assert sign((2, 1, 3)) == -1
    assert sign((2, 3, 1)) == 1


def test_square_zero_default_theta():
    for n in range(1, 6):
        assert d_squared_check(THETA, n) == (True, None)


def test_square_zero_other_tables():
    single = ThetaTable.single("x")
    for n in range(1, 5):
        assert d_squared_check(single, n)[0]
        for w in weight_basis(single, n, n):
            assert boundary(single, Lin({w: 1})) == Lin()
    ab = ThetaTable.set_colors(["a", "b"])
    assert all(d_squared_check(ab, n)[0] for n in range(1, 5))


def test_weight_rule_fails_from_degree_four():
    for n in range(1, 4):
        assert d_squared_check(THETA, n, rule="weight")[0]
    ok, witness = d_squared_check(THETA, 4, rule="weight")
    assert not ok
    assert witness["word"] == xi(4)
    d2 = witness["d2"]
    assert len(d2) == 12
    assert d2.coeff(W((1, 1, 2, 3), ("xi2", "xi1", "xi1"))) == -2
    assert d2.coeff(W((3, 2, 1, 1), ("xi2", "xi1", "xi1"))) == 2


def test_corrupted_sign_is_caught():
    ok, witness = d_squared_check(THETA, 3, rule="corrupt")
    assert not ok and witness["d2"] != Lin()


def test_unknown_rule():
    with pytest.raises(DomainError):
        boundary_basis(THETA, W((1, 2), ("xi1", "xi1")), rule="nope")


def test_factorisation_independence():
    rng = random.Random(5)
    for n in range(1, 5):
        words = [w for r in range(1, n + 1) for w in weight_basis(THETA, n, r)]
        for w in rng.sample(words, min(len(words), 30)):
            assert boundary_basis(THETA, w) == boundary_alt(THETA, w)


def test_weight_goes_up_by_one():
    for n in range(1, 5):
        for r in range(1, n + 1):
            for w in weight_basis(THETA, n, r):
                for k in boundary_basis(THETA, w):
                    assert len(k.colors) == r + 1


def test_face_counts():
    for n in range(1, 6):
        rep = complex_report(THETA, n)
        # r!·S(n,r) faces with r blocks: the ordered set partitions
        assert rep.dims == [factorial(r) * stirling2(n, r) for r in range(1, n + 1)]
        assert rep.euler == 1
        assert rep.square_zero


def test_hexagon_report():
    rep = complex_report(THETA, 3)
    assert rep.dims == [1, 6, 6]
    assert rep.ranks == [1, 5]
    assert rep.betti == [0, 0, 1]
    j = rep.to_json()
    assert j["euler"] == "1" and j["square_zero"]
    assert "weight 2: dim 6, rank of boundary 5, homology 0" in rep.to_text()


def test_degree_one_and_errors():
    rep = complex_report(THETA, 1)
    assert rep.dims == [1] and rep.betti == [1]
    with pytest.raises(DomainError):
        complex_report(THETA, 0)
    with pytest.raises(DomainError):
        complex_report(THETA, 9)
    with pytest.raises(DomainError):
        boundary(THETA, Lin({(1, 2): 1}))


def test_text_of_degree_two():
    d = boundary(THETA, Lin({xi(2): 1}))
    assert d.to_text(lambda k: format_colored_word(k, with_colors=False)) == "-1,2 + 2,1"
