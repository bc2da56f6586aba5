import random

import pytest

from coverends import (
    ChainError,
    DirectProduct,
    FreeAbelian,
    FreeGroup,
    Index,
    UnsupportedSubgroupError,
    free_reduce,
    is_member,
    normal_form,
    relative_index,
    subgroup_index,
    validate_chain,
)

from oracles import brute_abelian_subgroup, brute_subgroup, reduce_pairs


def _random_word(model, rng, max_len=8):
    letters = []
    for _ in range(rng.randrange(max_len + 1)):
        g = rng.randrange(model.rank)
        letters.append(model.names[g] if rng.random() < 0.5 else model.names[g].upper())
    return model.word(" ".join(letters))


# -- normal forms ------------------------------------------------------------


def test_normal_form_free():
    f = FreeGroup(2)
    assert f.format(normal_form(f, "b a A")) == "b"


def test_normal_form_abelian_commutes():
    m = FreeAbelian(2)
    assert m.format(normal_form(m, "y x Y")) == "x"
    assert m.format(normal_form(m, "x y x")) == "x x y"


def test_normal_form_idempotent_and_multiplicative():
    rng = random.Random(3)
    for model in (FreeGroup(2), FreeAbelian(3),
                  DirectProduct([FreeGroup(2), FreeAbelian(2)])):
        for _ in range(150):
            u = _random_word(model, rng)
            v = _random_word(model, rng)
            nu, nv = model.normal_form(u), model.normal_form(v)
            assert model.normal_form(nu) == nu
            assert model.normal_form(u * v) == model.normal_form(nu * nv)


def test_product_normal_form_sorts_factors():
    p = DirectProduct([FreeGroup(2), FreeAbelian(1)])
    assert p.names == ("a", "b", "x")
    # cross-factor letters commute; within the free factor they do not
    assert p.format(p.normal_form(p.word("a x A"))) == "x"
    assert p.format(p.normal_form(p.word("x a b"))) == "a b x"
    assert p.normal_form(p.word("a b")) != p.normal_form(p.word("b a"))


def test_product_name_collision_resolution():
    p = DirectProduct([FreeGroup(2), FreeGroup(2)])
    assert p.names == ("a", "b", "c", "d")


# -- membership --------------------------------------------------------------


def test_member_generator_itself():
    f = FreeGroup(2)
    h = f.subgroup(["a a", "b"])
    assert is_member(h, "a a")


def test_member_brute_force_free():
    # oracle: enumerate all products of <= 6 generators and inverses
    f = FreeGroup(2)
    h = f.subgroup(["a a", "b"])
    elements = brute_subgroup([((0, 1), (0, 1)), ((1, 1),)], 6)
    assert ((0, 1),) not in elements  # "a" is not reachable
    assert not is_member(h, "a")
    # spot-check agreement on every brute-force element of length <= 4
    for el in elements:
        if len(el) <= 4:
            word = " ".join(f.names[g] if s == 1 else f.names[g].upper()
                            for g, s in el)
            assert is_member(h, word)


def test_member_abelian_no_integer_solution():
    # 2a = 1, 3b = 1 has no integer solution
    m = FreeAbelian(2)
    h = m.subgroup(["x x", "y y y"])
    assert not is_member(h, "x y")
    assert (1, 1) not in brute_abelian_subgroup([(2, 0), (0, 3)], 6)


def test_member_abelian_brute_force_agreement():
    m = FreeAbelian(2)
    h = m.subgroup(["x x y", "y y"])
    lattice = brute_abelian_subgroup([(2, 1), (0, 2)], 5)
    for vx in range(-4, 5):
        for vy in range(-4, 5):
            word_letters = []
            word_letters += ["x"] * vx if vx > 0 else ["X"] * (-vx)
            word_letters += ["y"] * vy if vy > 0 else ["Y"] * (-vy)
            expected = (vx, vy) in lattice
            assert is_member(h, " ".join(word_letters)) == expected


def test_member_closure_properties():
    rng = random.Random(17)
    f = FreeGroup(2)
    h = f.subgroup(["a b", "b a a"])
    members = [f.word("a b"), f.word("b a a")]
    for _ in range(100):
        u, v = rng.choice(members), rng.choice(members)
        w = u * v if rng.random() < 0.5 else u * v.inverse()
        assert is_member(h, w)
        members.append(w)


def test_member_nested_subgroups():
    rng = random.Random(23)
    m = FreeAbelian(2)
    h = m.subgroup(["x", "y y"])
    k = m.subgroup(["x x", "y y"])
    validate_chain(h, k)
    gens = [m.word("x x"), m.word("y y")]
    for _ in range(100):
        w = gens[0] * gens[0]
        for _ in range(rng.randrange(4)):
            w = w * rng.choice(gens)
        if is_member(k, w):
            assert is_member(h, w)


def test_non_product_form_rejected():
    p = DirectProduct([FreeGroup(1), FreeAbelian(1)])
    with pytest.raises(UnsupportedSubgroupError):
        p.subgroup(["a x"])


def test_product_membership_componentwise():
    p = DirectProduct([FreeGroup(2), FreeAbelian(1)])
    h = p.subgroup(["a a", "x"])
    assert is_member(h, "a a x")
    assert is_member(h, "x a a X")
    assert not is_member(h, "a x")


# -- index -------------------------------------------------------------------


def test_index_abelian_finite():
    m = FreeAbelian(1)
    assert subgroup_index(m.subgroup(["x x"])) == Index.finite(2)


def test_index_free_infinite():
    f = FreeGroup(2)
    assert not subgroup_index(f.subgroup(["a"])).is_finite


def test_index_abelian_rank_deficient():
    m = FreeAbelian(2)
    assert not subgroup_index(m.subgroup(["x"])).is_finite


def test_index_abelian_determinant():
    m = FreeAbelian(2)
    # lattice spanned by (2,1), (0,3): index |det| = 6
    assert subgroup_index(m.subgroup(["x x y", "y y y"])) == Index.finite(6)
    # redundant generators do not change the index
    assert subgroup_index(m.subgroup(["x x y", "y y y", "x x y y y y"])) \
        == Index.finite(6)


def test_index_free_parity_kernel():
    # kernel of total-exponent parity: index 2 in F2
    f = FreeGroup(2)
    h = f.subgroup(["a a", "b b", "a b"])
    assert subgroup_index(h) == Index.finite(2)
    rng = random.Random(5)
    for _ in range(100):
        w = _random_word(f, rng, max_len=9)
        parity = len(f.normal_form(w)) % 2
        assert is_member(h, w) == (parity == 0)


def test_index_product():
    p = DirectProduct([FreeAbelian(1), FreeAbelian(1)])
    assert subgroup_index(p.subgroup(["x x", "y y y"])) == Index.finite(6)
    assert not subgroup_index(p.subgroup([[], ["y"]])).is_finite


def test_trivial_subgroup_membership():
    f = FreeGroup(2)
    t = f.trivial_subgroup()
    assert is_member(t, "")
    assert not is_member(t, "a")
    assert not subgroup_index(t).is_finite


# -- relative index ----------------------------------------------------------


def test_relative_index_abelian():
    m2 = FreeAbelian(2)
    assert relative_index(m2.subgroup(["x"]), m2.subgroup(["x x"])) \
        == Index.finite(2)
    m3 = FreeAbelian(3)
    assert not relative_index(m3.subgroup(["x", "y"]),
                              m3.subgroup(["x"])).is_finite


def test_relative_index_free():
    f = FreeGroup(2)
    h = f.subgroup(["a", "b b"])
    # [<a,b^2> : <a^2,b^2>] is infinite (a has infinite order mod nothing)
    assert not relative_index(h, f.subgroup(["a a", "b b"])).is_finite
    # [<a,b^2> : <a^3,b^2>] likewise
    assert not relative_index(h, f.subgroup(["a a a", "b b"])).is_finite
    # equal subgroups have index 1
    assert relative_index(h, f.subgroup(["b b", "a"])) == Index.finite(1)


def test_relative_index_trivial_bottom():
    m = FreeAbelian(1)
    h = m.subgroup(["x x"])
    assert not relative_index(h, m.trivial_subgroup()).is_finite


def test_relative_index_chain_violation():
    m = FreeAbelian(2)
    with pytest.raises(ChainError):
        relative_index(m.subgroup(["x x"]), m.subgroup(["x"]))


def test_relative_index_product():
    p = DirectProduct([FreeAbelian(1), FreeAbelian(1)])
    h = p.subgroup(["x", "y"])
    k = p.subgroup(["x x", "y y y"])
    assert relative_index(h, k) == Index.finite(6)


def test_free_reduce_endpoint():
    f = FreeGroup(2)
    assert f.format(free_reduce(f, "a b B A b")) == "b"
