"""Planar trees: grafting, vee, enumeration counts, parsing."""

import pytest

from shufflealg.lincomb import DomainError
from shufflealg.trees import (
    LEAF,
    TensorWord,
    canonical_decompose,
    catalan,
    corolla,
    enum_binary,
    enum_ltrees,
    enum_tensor_words,
    enum_trees,
    graft,
    lleaf,
    lnode,
    multi_graft,
    parse_ltree,
    parse_tensor_word,
    parse_tree,
    super_catalan,
    tree_from_json,
    vee,
)

X = corolla("x", 2)
Y = corolla("y", 2)


def T(text):
    return parse_tree(text)


def test_graft_examples():
    assert graft(X, 2, T("y[|,z[|,|]]")) == T("y[|,z[|,x[|,|]]]")
    assert graft(T("x[|,y[|,|]]"), 0, LEAF) == T("x[|,y[|,|]]")
    assert graft(X, 0, Y) == T("y[x[|,|],|]")


def test_graft_index_range():
    with pytest.raises(DomainError):
        graft(X, 3, Y)


def test_vee_and_multi_graft():
    assert vee("x", [LEAF, LEAF]) == X
    assert vee("x", [Y, LEAF]) == T("x[y[|,|],|]")
    w = T("y[|,z[|,|]]")
    assert multi_graft([LEAF] * 3, w) == w
    assert multi_graft([X, LEAF, Y], w) == T("y[x[|,|],z[|,y[|,|]]]")
    with pytest.raises(DomainError):
        vee("x", [LEAF])
    with pytest.raises(DomainError):
        multi_graft([LEAF], w)


def test_canonical_decompose():
    assert canonical_decompose(X) == ("x", (LEAF, LEAF))
    t = T("y[|,z[|,x[|,|]]]")
    assert canonical_decompose(t) == ("y", (LEAF, T("z[|,x[|,|]]")))
    with pytest.raises(DomainError):
        canonical_decompose(LEAF)


def test_counts():
    assert len(enum_binary(3)) == 5 == catalan(3)
    assert [len(enum_binary(m)) for m in range(1, 7)] == [catalan(m) for m in range(1, 7)]
    assert [len(enum_trees("all", m)) for m in range(1, 5)] == [1, 3, 11, 45]
    assert [super_catalan(m) for m in range(1, 6)] == [1, 3, 11, 45, 197]
    assert len(enum_binary(2, ("a", "b"))) == 2 * 4


def test_enum_errors():
    with pytest.raises(DomainError):
        enum_trees("ternary", 2)
    with pytest.raises(DomainError):
        enum_trees("all", 40)


def _trees_upto(d):
    return {m: enum_trees("all", m) for m in range(d + 1)}


def test_grafting_axioms_exhaustive():
    by = _trees_upto(5)
    for a in range(5):
        for b in range(5 - a):
            for c in range(1, 6 - a - b):
                for x in by[a]:
                    for y in by[b]:
                        for z in by[c]:
                            for j in range(c + 1):
                                yz = graft(y, j, z)
                                for i in range(b + 1):
                                    assert graft(graft(x, i, y), j, z) == graft(x, i + j, yz)
                                for i in range(j):
                                    lhs = graft(x, i, yz)
                                    rhs = graft(y, j + a, graft(x, i, z))
                                    assert lhs == rhs


def test_leaf_count_additive():
    by = _trees_upto(3)
    for a in range(4):
        for b in range(4):
            for t in by[a]:
                for w in by[b]:
                    for i in range(b + 1):
                        assert graft(t, i, w).nleaves == t.nleaves + w.nleaves - 1


def test_parse_and_json_round_trip():
    for m in range(4):
        for t in enum_trees("all", m):
            assert parse_tree(str(t)) == t
            assert tree_from_json(t.to_json()) == t
    assert LEAF.to_json() == {"leaf": True}
    assert X.to_json() == {"color": "x", "children": [{"leaf": True}, {"leaf": True}]}
    for bad in ["x[|", "x[]", "|,|", "x[|,|]]"]:
        with pytest.raises(DomainError):
            parse_tree(bad)


def test_leaf_colored_trees():
    assert [len(enum_ltrees(n)) for n in range(1, 6)] == [1, 1, 3, 11, 45]
    assert len(enum_ltrees(2, ("a", "b"))) == 4
    t = lnode([lleaf("a"), lnode([lleaf("b"), lleaf("a")])])
    assert parse_ltree(str(t)) == t
    w = parse_tensor_word(str(TensorWord([t, lleaf("b")])))
    assert isinstance(w, TensorWord) and w.degree == 4
    # tensor words of degree n over one color: compositions of n into super-Catalan trees
    assert [len(enum_tensor_words(n)) for n in range(1, 5)] == [1, 2, 6, 22]
