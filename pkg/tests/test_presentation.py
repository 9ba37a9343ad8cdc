"""Presentation layer: parsing, opposite, triangular detection, tables."""

import pytest

from helpers import W, naive_complete, naive_table

from revord.reversing import Terminated, right_reverse
from revord.presentation import (
    NonDeterministicTable,
    NotTriangularError,
    ParseError,
    Presentation,
    complete,
    detect_left_triangular,
    detect_right_triangular,
    format_presentation,
    opposite,
    parse_presentation,
    table_from_presentation,
)

KLEIN_TEXT = """\
# one-relation example
gens: a b
rel: a = b a b
"""


def pres(names, *rels):
    return Presentation(tuple(names), tuple((W(l), W(r)) for l, r in rels))


def test_parse_presentation_basic():
    p = parse_presentation(KLEIN_TEXT)
    assert p.names == ("a", "b")
    assert p.relations == (((0,), (1, 0, 1)),)


def test_parse_presentation_powers_and_multiple_relations():
    text = "gens: a b c\nrel: a = b a^2 b\nrel: b = c b a^3 c\n"
    p = parse_presentation(text)
    assert p.relations == (
        ((0,), W("baab")),
        ((1,), W("cbaaac")),
    )


def test_parse_presentation_errors():
    for text in (
        "rel: a = b\n",                       # relations before gens
        "gens: a b\nrel: a = c\n",            # unknown letter
        "gens: a a\nrel: a = a a\n",          # duplicate generator
        "gens: a b\nrel: a b a\n",            # missing =
        "gens: a b\nrel: a = b^0\n",          # zero power
        "gens: a b\nrel: a = b^-1 a\n",       # negative letter in relation
        "gens: a b\nnonsense: x\n",           # unknown directive
        "gens: a b\n",                        # no relations is fine? -> allowed
    )[:-1]:
        with pytest.raises(ParseError):
            parse_presentation(text)
    empty_ok = parse_presentation("gens: a b\n")
    assert empty_ok.relations == ()


def test_parse_error_carries_line_number():
    try:
        parse_presentation("gens: a b\nrel: a = q\n")
    except ParseError as e:
        assert e.line == 2
    else:
        raise AssertionError("expected ParseError")


def test_format_roundtrip():
    p = parse_presentation("gens: a b\nrel: a = b a^2 b^4 a^2 b\n")
    text = format_presentation(p)
    assert parse_presentation(text) == p
    assert "a = b a^2 b^4 a^2 b" in text


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation(("a",), (((0,), (1, 0)),))     # letter out of range
    with pytest.raises(ValueError):
        Presentation(("a", "b"), (((0,), (~1, 0)),))  # negative letter
    with pytest.raises(ValueError):
        Presentation(("a", "b"), (((), ()),))       # both sides empty


def test_opposite_mirrors_relation_sides():
    p = pres("ab", ("a", "babb"))
    q = opposite(p)
    assert q.relations == ((W("a"), W("bbab")),)
    assert opposite(q) == p


def test_detect_right_triangular_single_chain():
    p = pres("ab", ("a", "bab"))
    s = detect_right_triangular(p)
    assert s is not None
    assert s.nxt == {1: 0}
    assert s.comp == {1: W("ab")}
    assert s.chains == ((1, 0),)
    assert s.cycles == ()
    assert s.is_single_chain
    assert s.top == 0


def test_detect_right_triangular_three_letter_chain():
    p = pres("abc", ("b", "ccc"), ("a", "bab"))
    s = detect_right_triangular(p)
    assert s.nxt == {2: 1, 1: 0}
    assert s.chains == ((2, 1, 0),)
    assert s.is_single_chain and s.top == 0


def test_detect_right_triangular_multi_chain_and_isolated():
    p = Presentation(("a", "b", "c", "d"), ((W("a"), W("bb")), (W("c"), W("dd"))))
    s = detect_right_triangular(p)
    assert s.chains == ((1, 0), (3, 2))
    assert not s.is_single_chain
    five = Presentation(("a", "b", "c"), ((W("a"), W("bb")),))
    s5 = detect_right_triangular(five)
    assert s5.chains == ((1, 0), (2,))
    assert not s5.is_single_chain


def test_detect_right_triangular_cycle():
    p = pres("ab", ("a", "ba"), ("b", "ab"))
    s = detect_right_triangular(p)
    assert s is not None
    assert s.cycles == ((0, 1),)
    assert not s.is_single_chain


def test_detect_letter_identification():
    # a relation equating two letters is triangular with an empty complement
    s = detect_right_triangular(pres("ab", ("a", "b")))
    assert s is not None
    assert s.nxt == {1: 0}
    assert s.comp == {1: ()}
    assert s.chains == ((1, 0),)
    assert s.is_single_chain and s.top == 0


def test_complete_letter_identification():
    table = complete(pres("ab", ("a", "b")))
    assert dict(table.entries) == {(1, 0): ((), ()), (0, 1): ((), ())}
    assert table.completed_relations == ((0, W("b"), (1, 1)),)
    assert table.replacement(1, 0) == ()
    out, _ = right_reverse(W("A") + W("b"), table)
    assert isinstance(out, Terminated)
    assert out.left_denominator == () and out.right_numerator == ()


def test_detect_right_triangular_rejections():
    assert detect_right_triangular(pres("ab", ("a", "a"))) is None
    assert detect_right_triangular(pres("ab", ("ab", "ba"))) is None
    assert detect_right_triangular(pres("ab", ("a", "ab"))) is None
    assert detect_right_triangular(
        pres("abc", ("a", "cb"), ("a", "bc"))) is None   # next not functional
    assert detect_right_triangular(
        pres("abc", ("a", "bc"), ("c", "ba"))) is None   # shared base letter
    assert detect_right_triangular(
        pres("abc", ("c", "ab"), ("c", "ba"))) is None   # duplicate image


def test_detect_left_triangular_uses_opposite():
    p = pres("ab", ("a", "bbab"))
    assert detect_right_triangular(p) is not None
    assert detect_left_triangular(p) is not None
    q = pres("ab", ("a", "abb"))
    assert detect_right_triangular(q) is None
    assert detect_left_triangular(q) is not None


def test_complete_matches_reference_completion():
    cases = [
        [("a", "bab")],
        [("b", "ccc"), ("a", "bab")],
        [("a", "baabbbaab")],
        [("b", "caac"), ("a", "babb")],
        [("c", "dabd"), ("b", "cc"), ("a", "bba")],
    ]
    for rels in cases:
        names = "abcd"[: 1 + max(max(ord(ch) - ord("a") for ch in l + r)
                                 for l, r in rels)]
        p = pres(names, *rels)
        table = complete(p)
        ref = naive_complete(p.relations)
        assert dict(table.entries) == ref


def test_complete_relation_list_and_provenance():
    p = pres("abc", ("b", "ccc"), ("a", "bab"))
    table = complete(p)
    rels = table.completed_relations
    assert ((0, W("bab"), (1, 1)) in rels)
    assert ((1, W("ccc"), (2, 1)) in rels)
    assert ((0, W("cccab"), (2, 2)) in rels)
    assert len(rels) == 3


def test_complete_per_component_on_acyclic_multi_chain():
    p = Presentation(("a", "b", "c", "d"), ((W("a"), W("bb")), (W("c"), W("dd"))))
    table = complete(p)
    assert set(table.entries) == {(1, 0), (0, 1), (3, 2), (2, 3)}


def test_complete_rejects_cycles_and_non_triangular():
    with pytest.raises(NotTriangularError):
        complete(pres("ab", ("a", "ba"), ("b", "ab")))
    with pytest.raises(NotTriangularError):
        complete(pres("ab", ("ab", "ba")))


def test_generic_table_matches_reference():
    p = pres("abc", ("a", "bab"), ("b", "cbc"), ("a", "cbcab"))
    table = table_from_presentation(p)
    assert dict(table.entries) == naive_table(p.relations)


def test_generic_table_skips_same_head_relations():
    p = pres("ab", ("ab", "aba"))
    table = table_from_presentation(p)
    assert dict(table.entries) == {}


def test_generic_table_duplicate_pair_rejected():
    p = pres("ab", ("a", "bab"), ("a", "ba"))
    with pytest.raises(NonDeterministicTable):
        table_from_presentation(p)


def test_table_replacement_words():
    p = pres("ab", ("a", "bab"))
    table = complete(p)
    assert table.replacement(1, 0) == W("ab")
    assert table.replacement(0, 1) == W("BA")
    assert table.replacement(0, 0) is None
    assert table.lookup(1, 0) == (W("ab"), ())
