"""Euler idempotent, primitive bases and the primitive operations."""

import random
from math import factorial

import pytest

from shufflealg.algebra import make_algebra
from shufflealg.coproducts import delta
from shufflealg.lincomb import DomainError, Lin, rank
from shufflealg.perms import enum_irr, enum_perms, irr_count
from shufflealg.primitives import (
    E_sigma,
    E_theta,
    PrimTerm,
    alpha_inverse,
    beta_inverse,
    beta_term,
    brace_B,
    euler_e,
    evaluate,
    irreducible_words,
    multiply_back,
    normal_form_alpha,
    op_L,
    op_mu,
    parse_term,
    prim_basis,
    reconstruct,
)
from shufflealg.products import brace, bullet0, circ, dot, shuffle_mul
from shufflealg.trees import TensorWord, catalan, lleaf, lnode, super_catalan
from shufflealg.words import format_colored_word

MR = make_algebra("mr")


def P(*w):
    return Lin({tuple(w): 1})


def perms_text(u):
    return u.to_text(lambda k: ",".join(map(str, k)))


def words_text(u):
    return u.to_text(lambda k: format_colored_word(k, with_colors=False))


# -- the idempotent -----------------------------------------------------------

def test_euler_small_values():
    assert euler_e(MR, P(1)) == P(1)
    assert euler_e(MR, P(1, 2)) == Lin()
    assert euler_e(MR, P(2, 1)) == P(2, 1) - P(1, 2)


def test_euler_kills_products_and_is_idempotent():
    basis = [p for n in range(1, 5) for p in enum_perms(n)]
    for x in basis:
        for y in basis:
            if len(x) + len(y) <= 5:
                assert euler_e(MR, bullet0(MR, P(*x), P(*y))) == Lin()
    for n in range(1, 6):
        for s in enum_perms(n):
            e = euler_e(MR, P(*s))
            assert euler_e(MR, e) == e
            assert delta(MR, e) == Lin()


def test_euler_rejects_degree_zero():
    with pytest.raises(DomainError):
        euler_e(MR, Lin({(): 1}))


# -- dimensions ---------------------------------------------------------------

def test_prim_dims():
    assert [len(prim_basis(MR, n)) for n in range(1, 6)] == [1, 1, 3, 13, 71]
    ybin = make_algebra("ybin")
    assert [len(prim_basis(ybin, n)) for n in range(1, 6)] == [catalan(n - 1) for n in range(1, 6)]
    dup2 = make_algebra("dup", colors=("a", "b"))
    assert [len(prim_basis(dup2, n)) for n in range(1, 5)] == [catalan(n - 1) * 2**n for n in range(1, 5)]
    tw = make_algebra("twoass")
    assert [len(prim_basis(tw, n)) for n in range(1, 5)] == [1, 1, 3, 11]
    tw2 = make_algebra("twoass", colors=("e", "f"))
    assert [len(prim_basis(tw2, n)) for n in range(1, 4)] == [2, 4, 24]
    assert [1] + [super_catalan(n - 1) for n in range(2, 5)] == [1, 1, 3, 11]


def test_cofree_dimension_identity():
    def comps(n):
        if n == 0:
            yield ()
            return
        for k in range(1, n + 1):
            for rest in comps(n - k):
                yield (k,) + rest

    for n in range(1, 7):
        total = 0
        for c in comps(n):
            prod = 1
            for p in c:
                prod *= irr_count(p)
            total += prod
        assert total == factorial(n)


# -- E goldens ----------------------------------------------------------------

def test_E_sigma_goldens():
    assert E_sigma((2, 1)) == P(2, 1) - P(1, 2)
    assert E_sigma((3, 1, 2)) == P(3, 1, 2) - P(2, 1, 3)
    expected = (
        P(3, 4, 2, 5, 7, 1, 6) - P(2, 3, 1, 5, 7, 4, 6) - P(3, 4, 2, 5, 6, 1, 7) + P(2, 3, 1, 5, 6, 4, 7)
        - P(2, 4, 3, 5, 7, 1, 6) + P(1, 3, 2, 5, 7, 4, 6) + P(2, 4, 3, 5, 6, 1, 7) - P(1, 3, 2, 5, 6, 4, 7)
    )
    assert E_sigma((3, 4, 2, 5, 7, 1, 6)) == expected
    with pytest.raises(DomainError):
        E_sigma((1, 2))


def test_E_sigma_basis_degree_3():
    pb = prim_basis(MR, 3, basis="E")
    lines = [f"E[{','.join(map(str, s))}] = {perms_text(u)}" for s, u in zip(pb.labels, pb.elements)]
    assert lines == [
        "E[2,3,1] = -1,3,2 + 2,3,1",
        "E[3,1,2] = -2,1,3 + 3,1,2",
        "E[3,2,1] = 1,2,3 - 2,1,3 - 2,3,1 + 3,2,1",
    ]


def test_E_sigma_is_a_basis_of_primitives():
    for n in range(1, 6):
        elems = [E_sigma(s) for s in enum_irr(n)]
        assert all(delta(MR, u) == Lin() for u in elems)
        assert rank(elems) == irr_count(n)


def test_E_theta_goldens():
    assert words_text(E_theta((1, 1))) == "1,1 - 1,2"
    assert words_text(E_theta((2, 1))) == "-1,2 + 2,1"
    assert words_text(E_theta((2, 1, 1))) == "-1,2,2 + 1,2,3 + 2,1,1 - 3,1,2"
    assert words_text(E_theta((1, 3, 1, 2, 2))) == (
        "-1,2,1,3,3 + 1,2,1,3,4 + 1,3,1,2,2 + 1,3,2,4,4 - 1,3,2,4,5 - 1,4,1,2,3 - 1,4,2,3,3 + 1,5,2,3,4"
    )


def test_E_theta_basis_is_primitive():
    psh = make_algebra("psh")
    for n in range(1, 5):
        pb = prim_basis(psh, n, basis="E")
        assert all(delta(psh, u) == Lin() for u in pb.elements)
        assert rank(pb.elements) == len(pb) == len(prim_basis(psh, n))


# -- operations ---------------------------------------------------------------

def test_brace_B_examples():
    x, y = E_sigma((2, 1)), P(1)
    assert brace_B(MR, (1, 3, 2), x, [y]) == P(2, 3, 1) - P(1, 3, 2)
    assert delta(MR, brace_B(MR, (1, 3, 2), x, [y])) == Lin()
    # B_1^γ(x; y) is just x∙_γ y
    assert brace_B(MR, (1, 3, 2), x, [y]) == shuffle_mul(MR, x, (1, 3, 2), y)
    # with the arguments swapped, (1,3,2) is not a (1,2)-shuffle
    with pytest.raises(DomainError):
        brace_B(MR, (1, 3, 2), y, [x])
    # the identity and ε violate the side conditions
    with pytest.raises(DomainError, match="side conditions"):
        brace_B(MR, (1, 2, 3), x, [y])
    with pytest.raises(DomainError, match="side conditions"):
        brace_B(MR, (3, 1, 2), x, [y])


def test_L_examples():
    one = P(1)
    assert op_L(MR, 1, 1, [one], one, one) == P(2, 3, 1) - P(1, 3, 2)
    y, z = E_sigma((2, 1)), E_sigma((3, 1, 2))
    assert op_L(MR, 0, 2, [], y, z) == brace(MR, y, z)
    assert delta(MR, op_L(MR, 1, 1, [one], one, one)) == Lin()
    with pytest.raises(DomainError):
        op_L(MR, 0, 3, [], y, z)


def test_L_vanishes_on_grafting_algebras():
    yb = make_algebra("ybin")
    rng = random.Random(3)
    prims = {n: prim_basis(yb, n).elements for n in range(1, 4)}
    for _ in range(40):
        a, b, c = (rng.randint(1, 2) for _ in range(3))
        x, y, z = (rng.choice(prims[d]) for d in (a, b, c))
        p = rng.randint(1, b)
        assert op_L(yb, 1, p, [x], y, z) == Lin()


def test_mu():
    e, f = Lin({TensorWord([lleaf("e")]): 1}), Lin({TensorWord([lleaf("f")]): 1})
    tw = make_algebra("twoass", colors=("e", "f"))
    m2 = op_mu(tw, [e, f])
    assert m2 == Lin({TensorWord([lnode([lleaf("e"), lleaf("f")])]): 1, TensorWord([lleaf("e"), lleaf("f")]): -1})
    assert m2 + circ(e, f) == dot(e, f)
    assert delta(tw, op_mu(tw, [e, f, e])) == Lin()
    with pytest.raises(DomainError):
        op_mu(MR, [P(1), P(1)])


# -- reconstruction -----------------------------------------------------------

def test_reconstruction():
    parts = reconstruct(MR, P(1, 2))
    assert multiply_back(MR, parts) == P(1, 2)
    assert parts[0] == Lin()
    for n in range(1, 6):
        for s in enum_perms(n):
            assert multiply_back(MR, reconstruct(MR, P(*s))) == P(*s)


# -- terms and normal forms ---------------------------------------------------

def test_term_parsing_round_trip():
    t = parse_term("L[1,1](gen(xi1); gen(xi1); gen(xi1))")
    assert str(t) == "L[1,1](gen(xi1); gen(xi1); gen(xi1))"
    assert parse_term(str(PrimTerm.brace(PrimTerm.gen("a"), PrimTerm.gen("b")))) == PrimTerm.brace(
        PrimTerm.gen("a"), PrimTerm.gen("b")
    )
    with pytest.raises(DomainError):
        parse_term("L[1](gen(x)")


def test_alpha_round_trip_on_kwords():
    kw = make_algebra("kw")
    for n in range(1, 5):
        words = irreducible_words(kw, n)
        assert len(words) == len(prim_basis(kw, n))
        for f in words:
            assert normal_form_alpha(alpha_inverse(f), kw) == f
        elems = [evaluate(alpha_inverse(f), kw) for f in words]
        assert all(delta(kw, u) == Lin() for u in elems)


def test_beta_round_trip_on_surjections():
    psh = make_algebra("psh")
    for n in range(1, 5):
        for f in irreducible_words(psh, n):
            assert beta_inverse(beta_term(f), psh) == f


def test_tree_primitive_basis():
    trees = make_algebra("trees")
    for n in range(1, 5):
        pb = prim_basis(trees, n, basis="E")
        assert rank(pb.elements) == len(pb) == len(prim_basis(trees, n))
        assert all(t.children[0].is_leaf for t in pb.labels)
        assert len(set(pb.labels)) == len(pb)


def test_prim_basis_errors():
    with pytest.raises(DomainError):
        prim_basis(MR, 0)
    with pytest.raises(DomainError):
        prim_basis(MR, 2, basis="x")
    with pytest.raises(DomainError):
        prim_basis(make_algebra("pqsym"), 2, basis="E")
