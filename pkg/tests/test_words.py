"""Function words, surjections, K-words, parking functions and Θ tables."""

import json
from fractions import Fraction
from itertools import product

import pytest

from shufflealg.lincomb import DomainError
from shufflealg.perms import enum_perms, enum_shuffles, act_right, concat
from shufflealg.words import (
    ColoredWord,
    ThetaTable,
    breakpoints,
    classify,
    color_word,
    default_theta,
    enum_family,
    enum_kwords,
    enum_parking,
    enum_surjections,
    fibers,
    format_colored_word,
    is_kword,
    is_parking,
    is_prime_parking,
    monotone_decompose,
    pack,
    park,
    parse_colored_word,
    prime_factorize,
    surjection_from_coset,
    theta_check,
)


def test_classify_examples():
    flags = classify((2, 1, 1, 2, 3, 2))
    assert flags["surjective"] and flags["function"]
    assert flags["parking"] and flags["prime"]
    f121 = classify((1, 2, 1))
    assert f121["surjective"] and not f121["kword"]
    assert classify((1, 1, 3, 3))["parking"]
    assert not classify((1, 1, 3, 3))["surjective"]


def test_monotone_decompose():
    assert monotone_decompose((2, 1, 1, 2, 3, 2)) == ((1, 1, 2, 2, 2, 3), (3, 1, 2, 4, 6, 5))
    assert monotone_decompose((1, 1, 2, 4)) == ((1, 1, 2, 4), (1, 2, 3, 4))
    assert monotone_decompose((2, 1)) == ((1, 2), (2, 1))


def test_monotone_decompose_reassembles():
    for f in enum_family("functions", 4):
        up, s = monotone_decompose(f)
        assert act_right(up, s) == f


def test_surjection_from_coset():
    assert surjection_from_coset((2, 3, 1), (3, 1, 2, 4, 6, 5)) == (2, 1, 1, 2, 3, 2)
    assert surjection_from_coset((4,), (1, 2, 3, 4)) == (1, 1, 1, 1)
    assert surjection_from_coset((1, 1), (2, 1)) == (2, 1)


def test_surjections_are_cosets():
    # each surjection with fiber sizes c comes from exactly one shuffle of type c
    for n in range(1, 5):
        seen = set()
        for f in enum_surjections(n):
            c = tuple(fibers(f))
            hits = [d for d in enum_shuffles(c) if surjection_from_coset(c, d) == f]
            assert len(hits) == 1
            seen.add(f)
        assert len(seen) == len(enum_surjections(n))


def test_park_examples():
    assert park((1, 1, 3, 5)) == (1, 1, 3, 4)
    assert park((2, 2)) == (1, 1)
    for f in enum_parking(4):
        assert park(f) == f


def test_park_value_order_and_action():
    for f in enum_family("functions", 4):
        p = park(f)
        assert is_parking(p)
        for i in range(len(f)):
            for j in range(len(f)):
                if f[i] <= f[j]:
                    assert p[i] <= p[j]
    for f in enum_parking(3):
        for s in enum_perms(3):
            assert park(act_right(f, s)) == act_right(park(f), s)


def test_park_respects_parking_concatenation():
    for f, g in product(enum_parking(2), enum_parking(2)):
        assert park(concat(f, g, len(f))) == concat(park(f), park(g), len(f))


def test_breakpoints_and_primes():
    assert breakpoints((1, 1)) == [0, 2]
    assert is_prime_parking((1, 1))
    assert breakpoints((1, 2)) == [0, 1, 2]
    assert not is_prime_parking((1, 2))
    assert prime_factorize((1, 2)) == ([(1,), (1,)], (1, 2))
    for f in enum_parking(4):
        bps = breakpoints(f)
        assert bps[0] == 0 and bps[-1] == len(f)


def test_prime_factorization_reassembles():
    for n in range(1, 5):
        for f in enum_parking(n):
            parts, s = prime_factorize(f)
            assert all(is_prime_parking(p) for p in parts)
            big = ()
            for p in parts:
                big = concat(big, p, len(big))
            assert act_right(big, s) == f


def test_breakpoints_reject_non_parking():
    with pytest.raises(DomainError):
        breakpoints((2, 2))


def test_family_counts():
    assert len(enum_surjections(3)) == 13
    assert len(enum_parking(3)) == 16
    assert len(enum_kwords(3)) == 12
    assert set(enum_surjections(3)) - set(enum_kwords(3)) == {(1, 2, 1)}
    for n in range(1, 5):
        assert len(enum_parking(n)) == (n + 1) ** (n - 1)
    assert [len(enum_surjections(n)) for n in range(1, 6)] == [1, 3, 13, 75, 541]
    # prime parking functions are counted by (n-1)^(n-1)
    assert [len(enum_family("prime-parking", n)) for n in range(2, 6)] == [1, 4, 27, 256]
    assert enum_family("permutations", 3) == enum_perms(3)


def test_family_cap_and_unknown():
    with pytest.raises(DomainError):
        enum_family("surjections", 50)
    with pytest.raises(DomainError):
        enum_family("nonsense", 2)


def test_kword_examples():
    assert is_kword((1, 2, 2, 1)) is False
    assert is_kword((2, 1, 2)) is True
    assert is_kword((1, 1, 2))
    assert pack((3, 3, 5, 1)) == (2, 2, 3, 1)


def test_theta_check():
    assert theta_check(default_theta())[0]
    assert theta_check(ThetaTable.single("x"))[0]
    bad = ThetaTable.from_json(
        {
            "colors": [{"name": "a", "degree": 1}, {"name": "b", "degree": 2}, {"name": "c", "degree": 3}],
            "theta": [
                {"on": "b", "terms": [{"l": "a", "r": "a", "c": "1"}]},
                {"on": "c", "terms": [{"l": "a", "r": "b", "c": "1"}]},
            ],
        }
    )
    ok, witness = theta_check(bad)
    assert not ok and witness is not None


def test_theta_json_round_trip(tmp_path):
    data = {
        "colors": [{"name": "xi2", "degree": 2}, {"name": "u", "degree": 1}],
        "theta": [{"on": "xi2", "terms": [{"l": "u", "r": "u", "c": "1/2"}]}],
    }
    path = tmp_path / "theta.json"
    path.write_text(json.dumps(data))
    t = ThetaTable.load(str(path))
    assert t.degree("xi2") == 2
    assert t.reduced("xi2") == (("u", "u", Fraction(1, 2)),)
    assert t.colors_of_degree(1) == ["u"]


def test_theta_json_errors(tmp_path):
    with pytest.raises(DomainError):
        ThetaTable.from_json({"colors": [{"name": "z", "degree": 0}], "theta": []})
    with pytest.raises(DomainError):
        ThetaTable.from_json(
            {"colors": [{"name": "a", "degree": 1}], "theta": [{"on": "q", "terms": []}]}
        )
    with pytest.raises(DomainError):
        ThetaTable.load(str(tmp_path / "missing.json"))


def test_colored_word_text_form():
    t = default_theta()
    w = parse_colored_word("f=2,1,1,2,3,2; colors=xi2,xi3,xi1", t)
    assert w == ColoredWord((2, 1, 1, 2, 3, 2), ("xi2", "xi3", "xi1"))
    assert format_colored_word(w) == "f=2,1,1,2,3,2; colors=xi2,xi3,xi1"
    assert format_colored_word(w, with_colors=False) == "2,1,1,2,3,2"
    assert parse_colored_word("2,1,1", t) == color_word((2, 1, 1), t)
    with pytest.raises(DomainError):
        parse_colored_word("f=1,1; colors=xi1", t)
    with pytest.raises(DomainError):
        color_word((1, 3), t)
