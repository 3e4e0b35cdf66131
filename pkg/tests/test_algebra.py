"""Algebra contexts: construction, bases, parsing and text forms."""

from fractions import Fraction
from math import factorial

import pytest

from shufflealg.algebra import TAGS, make_algebra, parse_lin
from shufflealg.lincomb import DomainError, Lin
from shufflealg.perms import parse_perm


def test_every_tag_builds():
    for tag in TAGS:
        ctx = make_algebra(tag)
        assert ctx.tag == tag
        assert ctx.degree(ctx.unit) == 0
    with pytest.raises(DomainError):
        make_algebra("nope")


def test_basis_sizes():
    assert [len(make_algebra("mr").basis(n)) for n in range(1, 6)] == [factorial(n) for n in range(1, 6)]
    assert [len(make_algebra("psh").basis(n)) for n in range(1, 5)] == [1, 3, 13, 75]
    assert [len(make_algebra("kw").basis(n)) for n in range(1, 5)] == [1, 3, 12, 60]
    assert [len(make_algebra("pqsym").basis(n)) for n in range(1, 5)] == [1, 3, 16, 125]
    assert [len(make_algebra("ybin").basis(n)) for n in range(1, 5)] == [1, 2, 5, 14]
    assert [len(make_algebra("trees").basis(n)) for n in range(1, 5)] == [1, 3, 11, 45]


def test_parse_lin():
    u = parse_lin("2*3,1,2 - 1/2*1,2 + 2,1", parse_perm)
    assert u == Lin({(3, 1, 2): 2, (1, 2): Fraction(-1, 2), (2, 1): 1})
    assert parse_lin("-1,2", parse_perm) == Lin({(1, 2): -1})
    assert parse_lin("0", parse_perm) == Lin()
    with pytest.raises(DomainError):
        parse_lin("", parse_perm)


def test_lin_text_round_trip():
    for tag, text in [
        ("mr", "-1,2 + 2,1"),
        ("psh", "1,1 - 1,2"),
        ("ybin", "-x[x[|,|],|] + x[|,x[|,|]]"),
        ("pqsym", "1,1 + 3*1,2"),
    ]:
        ctx = make_algebra(tag)
        u = ctx.lin(text)
        assert ctx.fmt_lin(u) == text or ctx.lin(ctx.fmt_lin(u)) == u


def test_colored_words_need_valid_colors():
    psh = make_algebra("psh")
    with pytest.raises(DomainError):
        psh.lin("f=1,1; colors=xi1")
