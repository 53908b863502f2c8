import itertools

import pytest
from hypothesis import given, strategies as st

from primeindex.perm import Permutation, PermutationSyntaxError, parse_permutation


def perms(max_degree=7):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.permutations(list(range(n))).map(lambda p: Permutation(tuple(p))))


def same_degree_pairs(k=2, max_degree=7):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.tuples(*[st.permutations(list(range(n))).map(lambda p: Permutation(tuple(p)))] * k))


def brute_order(p):
    x, k = p, 1
    while not x.is_identity():
        x, k = x * p, k + 1
    return k


def test_product_applies_left_factor_first():
    a = parse_permutation("(1 2)", 3)
    b = parse_permutation("(2 3)", 3)
    # 1 -> 2 under a, then 2 -> 3 under b
    assert (a * b)(0) == 2
    assert str(a * b) == "(1 3 2)"
    assert str(b * a) == "(1 2 3)"


@pytest.mark.parametrize("text,degree,order", [
    ("()", 4, 1),
    ("(1 2)", 2, 2),
    ("(1 2 3)(4 5)", 5, 6),
    ("(1 2 3 4)(5 6)", 6, 4),
    ("(1 2 3 4 5)(6 7 8)", 8, 15),
])
def test_order_matches_repeated_multiplication(text, degree, order):
    p = parse_permutation(text, degree)
    assert p.order() == order == brute_order(p)


def test_parse_and_print():
    assert str(parse_permutation("( 3 1 )(2 4 5)", 5)) == "(1 3)(2 4 5)"
    assert parse_permutation("(1)(2)", 3).is_identity()
    assert str(parse_permutation("  ", 3)) == "()"


@pytest.mark.parametrize("text,column,fragment", [
    ("(1 (2))", 4, "nested"),
    ("(1 2))", 6, "unmatched"),
    ("1 2", 1, "outside parentheses"),
    ("(1 9)", 4, "outside 1..5"),
    ("(1 0)", 4, "outside 1..5"),
    ("(1 2)(2 3)", 7, "repeated"),
    ("(1 2 1)", 6, "repeated"),
    ("(1 2", 5, "unclosed"),
    ("(1 x)", 4, "unexpected"),
])
def test_syntax_errors_report_column(text, column, fragment):
    with pytest.raises(PermutationSyntaxError) as info:
        parse_permutation(text, 5)
    assert info.value.column == column
    assert fragment in str(info.value)


def test_from_cycles_rejects_bad_input():
    with pytest.raises(ValueError):
        Permutation.from_cycles([[0, 1], [1, 2]], 3)
    with pytest.raises(ValueError):
        Permutation.from_cycles([[0, 3]], 3)


def test_extend_shifts_points():
    p = parse_permutation("(1 2)", 2).extend(5, offset=3)
    assert str(p) == "(4 5)"
    assert p.degree == 5


@given(perms())
def test_string_round_trip(p):
    assert parse_permutation(str(p), p.degree) == p


@given(perms())
def test_inverse(p):
    e = Permutation.identity(p.degree)
    assert p * p.inverse() == e == p.inverse() * p


@given(same_degree_pairs(3))
def test_associative(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)


@given(perms())
def test_cycles_partition_moved_points(p):
    moved = [x for c in p.cycles() for x in c]
    assert sorted(moved) == [x for x in range(p.degree) if p(x) != x]
    assert p.order() == brute_order(p)


def test_all_of_s4_round_trip():
    for images in itertools.permutations(range(4)):
        p = Permutation(images)
        assert parse_permutation(str(p), 4) == p
