"""Tests for presentations, free products, and manifold recipes."""

import random

import pytest

from simpleloop.realize import (
    ManifoldRecipe,
    Presentation,
    free_product,
    parse_presentation,
    realize,
    recipe_for_G,
)


def test_presentation_reduces_relators():
    p = Presentation(generators=("a", "b"), relators=((1, -1, 2, 2),))
    assert p.relators == ((2, 2),)


def test_presentation_validates_names_and_letters():
    with pytest.raises(ValueError):
        Presentation(generators=("a", "a"), relators=())
    with pytest.raises(ValueError):
        Presentation(generators=("A",), relators=())
    with pytest.raises(ValueError):
        Presentation(generators=("a",), relators=((2,),))
    with pytest.raises(ValueError):
        Presentation(generators=("a",), relators=((0,),))


def test_word_round_trip():
    p = Presentation(generators=("a", "b", "c"), relators=())
    w = (1, -2, 3, 3, -1)
    assert p.parse_word(p.word_str(w)) == w


def test_parse_presentation_file():
    text = """
    # generators then relators
    a b
    a a
    a b A B
    """
    p = parse_presentation(text)
    assert p.generators == ("a", "b")
    assert p.relators == ((1, 1), (1, 2, -1, -2))
    with pytest.raises(ValueError):
        parse_presentation("")
    with pytest.raises(ValueError):
        parse_presentation("a\nz")


def test_free_product_basic():
    za = Presentation(generators=("a",), relators=())
    zb = Presentation(generators=("b",), relators=())
    assert free_product(za, zb) == Presentation(generators=("a", "b"), relators=())


def test_free_product_identity():
    trivial = Presentation(generators=(), relators=())
    p = Presentation(generators=("a", "b"), relators=((1, 1),))
    assert free_product(trivial, p) == p
    assert free_product(p, trivial) == p


def test_free_product_renames_collisions():
    za = Presentation(generators=("a",), relators=((1, 1),))
    zb = Presentation(generators=("a",), relators=((1, 1, 1),))
    prod = free_product(za, zb)
    assert prod.generators == ("a", "a2")
    assert prod.relators == ((1, 1), (2, 2, 2))


def test_free_product_associative_for_disjoint_names():
    p1 = Presentation(generators=("a",), relators=((1, 1),))
    p2 = Presentation(generators=("b",), relators=())
    p3 = Presentation(generators=("c",), relators=((1, 1, 1),))
    assert free_product(free_product(p1, p2), p3) == free_product(
        p1, free_product(p2, p3)
    )


def test_k_fold_free_product_of_z():
    parts = [Presentation(generators=("g%d" % i,), relators=()) for i in range(1, 6)]
    total = parts[0]
    for part in parts[1:]:
        total = free_product(total, part)
    assert total.generators == ("g1", "g2", "g3", "g4", "g5")
    assert total.relators == ()


def test_realize_smallest_example():
    p = Presentation(generators=("a",), relators=((1, 1),))
    recipe = realize(p, 4)
    assert isinstance(recipe, ManifoldRecipe)
    assert recipe.dimension == 4
    assert recipe.base["summands"] == ["S^4", "S^3 x S^1"]
    assert len(recipe.steps) == 1
    assert recipe.steps[0]["relator"] == "a a"
    assert recipe.steps[0]["remove"] == "S^1 x D^3"
    assert recipe.steps[0]["glue"] == "S^2 x D^2"
    assert recipe.resulting_group == p


def test_realize_free_group_has_no_steps():
    p = Presentation(generators=("a", "b", "c"), relators=())
    recipe = realize(p, 5)
    assert recipe.steps == ()
    assert recipe.base["summands"].count("S^4 x S^1") == 3


def test_realize_rejects_low_dimension():
    p = Presentation(generators=("a",), relators=())
    with pytest.raises(ValueError):
        realize(p, 3)


def test_realize_round_trip_random_presentations():
    rng = random.Random(0)
    names = ("a", "b", "c", "d", "e")
    for _ in range(50):
        k = rng.randrange(1, 6)
        gens = names[:k]
        relators = []
        for _ in range(rng.randrange(0, 6)):
            length = rng.randrange(1, 8)
            word = []
            for _ in range(length):
                x = rng.randrange(1, k + 1) * rng.choice((1, -1))
                if word and word[-1] == -x:
                    continue
                word.append(x)
            relators.append(tuple(word))
        p = Presentation(generators=gens, relators=tuple(relators))
        recipe = realize(p, 4)
        assert recipe.resulting_group == p
        assert len(recipe.steps) == len(p.relators)


def test_recipe_for_quotient_group():
    rec = recipe_for_G(2, 4)
    assert rec["group_order_log2"] == 38
    assert rec["cover_genus"] == 17
    assert rec["dimension"] == 4
    rec5 = recipe_for_G(2, 5)
    assert rec5["group_order_log2"] == 38
    assert rec5["dimension"] == 5
    assert recipe_for_G(3, 4)["group_order_log2"] == 264
    with pytest.raises(ValueError):
        recipe_for_G(2, 3)
    with pytest.raises(ValueError):
        recipe_for_G(1, 4)
    with pytest.raises(ValueError):
        recipe_for_G(5, 4)
