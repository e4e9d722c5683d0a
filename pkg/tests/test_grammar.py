import random
from fractions import Fraction

import pytest

from helpers import rand_hvec
from treetrace.exact import FreeVec
from treetrace.grammar import (
    ParseError,
    format_hvec,
    format_s2h,
    format_s2l2,
    format_tensor,
    format_tree,
    parse_hvec,
    parse_tensor,
    parse_tree,
    parse_twist,
)
from treetrace.symplectic import a, b
from treetrace.trees import tree, tree_expand


def test_parse_simple_sum():
    assert parse_hvec("a1 + b1") == FreeVec({a(1): 1, b(1): 1})


def test_parse_with_signs():
    assert parse_hvec("a2 - b1 + b2") == FreeVec({a(2): 1, b(1): -1, b(2): 1})
    assert parse_hvec("-a1") == FreeVec({a(1): -1})


def test_parse_with_coefficients():
    assert parse_hvec("2*a1 - 3*b2") == FreeVec({a(1): 2, b(2): -3})
    assert parse_hvec("1/2*a1") == FreeVec({a(1): Fraction(1, 2)})


def test_parse_unknown_symbol_reports_offset():
    with pytest.raises(ParseError) as err:
        parse_hvec("2*q7")
    assert err.value.offset == 2


def test_parse_trailing_garbage_reports_offset():
    with pytest.raises(ParseError) as err:
        parse_hvec("a1 $ b1")
    assert err.value.offset == 3


def test_parse_tree_and_twist():
    t = parse_tree("T(a1 + b1, a2; b1, b2)")
    assert t.x1 == FreeVec({a(1): 1, b(1): 1})
    assert t.x2 == FreeVec({a(2): 1})
    assert t.x3 == FreeVec({b(1): 1})
    assert t.x4 == FreeVec({b(2): 1})
    x, y = parse_twist("twist(a1 + b1; a2 - b1 + b2)")
    assert x == FreeVec({a(1): 1, b(1): 1})
    assert y == FreeVec({a(2): 1, b(1): -1, b(2): 1})


def test_parse_tensor_expressions():
    assert parse_tensor("a1*b1*a2*b2") \
        == FreeVec.single((a(1), b(1), a(2), b(2)))
    assert parse_tensor("2*a1*a1*b1*b1 - a1*b1*a1*b1") == FreeVec({
        (a(1), a(1), b(1), b(1)): 2,
        (a(1), b(1), a(1), b(1)): -1,
    })


def test_parse_tensor_requires_labels():
    with pytest.raises(ParseError):
        parse_tensor("3*4")


def test_format_hvec_canonical_forms():
    assert format_hvec(FreeVec()) == "0"
    assert format_hvec(FreeVec({a(1): 1, b(1): 1})) == "a1 + b1"
    # Global key order puts b1 before a2.
    assert format_hvec(FreeVec({a(2): 1, b(1): -1, b(2): 1})) \
        == "-b1 + a2 + b2"
    assert format_hvec(FreeVec({b(2): Fraction(-3, 2)})) == "-3/2*b2"


def test_parse_print_round_trip_randomized():
    rng = random.Random(6001)
    for _ in range(150):
        vec = rand_hvec(rng, 5, max_terms=4)
        assert parse_hvec(format_hvec(vec)) == vec
        text = format_hvec(vec)
        assert format_hvec(parse_hvec(text)) == text


def test_format_tree_round_trip():
    t = tree(FreeVec({a(1): 1, b(1): 1}), FreeVec({a(2): 1}),
             FreeVec({b(1): 1}), FreeVec({b(2): 1}))
    assert parse_tree(format_tree(t)) == t


def test_format_s2h_and_s2l2():
    assert format_s2h(FreeVec({(b(1), b(2)): 4, (b(2), b(2)): -4})) \
        == "4*b1*b2 - 4*b2*b2"
    v = 2 * tree_expand(tree(b(1), b(2), b(1), b(2)))
    assert format_s2l2(v) == "2*(b1^b2)(b1^b2)"
    assert format_s2l2(FreeVec()) == "0"


def test_format_tensor():
    v = FreeVec({(a(1), b(1)): 1, (a(2), b(2)): -2})
    assert format_tensor(v) == "a1*b1 - 2*a2*b2"
