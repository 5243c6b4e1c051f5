import pytest
from hypothesis import given, strategies as st

from stvb.words import (
    Alphabet,
    Kind,
    Letter,
    Word,
    WordError,
    concat,
    expand_subgenerator,
    expand_word,
    formal_inverse,
    inverse_letter,
    parse_word,
    word,
)

B = Alphabet.BRAID


def test_parse_and_format_roundtrip():
    w = parse_word("s1 S2 r1 t2 g3", B, 3)
    assert [a.kind for a in w] == [Kind.SIGMA, Kind.SIGMA_INV, Kind.RHO, Kind.TAU, Kind.GAMMA]
    assert str(w) == "s1 S2 r1 t2 g3"
    assert parse_word("", B, 3).is_identity


def test_two_index_tokens():
    w = parse_word("l1,3 L3,1 y2,1 g2", Alphabet.SUB_P, 3)
    assert w[0] == Letter(Kind.LAM, 1, 3)
    assert str(w) == "l1,3 L3,1 y2,1 g2"


@pytest.mark.parametrize("text,tag,n", [
    ("s3", B, 3),          # crossing index beyond n - 1
    ("g4", B, 3),          # gamma index beyond n
    ("T1", B, 3),          # tau bar outside the group alphabet
    ("l1,1", Alphabet.SUB_P, 3),
    ("x1,2", Alphabet.SUB_P, 3),  # wrong submonoid
    ("q1", B, 3),
    ("s1,2", B, 3),
    ("l1", Alphabet.SUB_P, 3),
])
def test_malformed_words_rejected(text, tag, n):
    with pytest.raises(WordError):
        parse_word(text, tag, n)


def test_words_never_simplify():
    assert len(parse_word("r1 r1", B, 2)) == 2


def test_concat_requires_same_alphabet():
    with pytest.raises(WordError):
        concat(word("s1", 3), word("s1", 4))


def test_formal_inverse():
    w = parse_word("s1 r2 g1", B, 3)
    assert str(formal_inverse(w)) == "g1 r2 S1"
    with pytest.raises(WordError):
        inverse_letter(Letter(Kind.TAU, 1), B)
    g = parse_word("t1 s2", Alphabet.BRAID_GROUP, 3)
    assert str(formal_inverse(g)) == "S2 T1"


# expansion oracles written out by hand from the generator definitions
@pytest.mark.parametrize("token,tag,expected", [
    ("l1,2", Alphabet.SUB_P, "r1 S1"),
    ("l2,1", Alphabet.SUB_P, "r1 r1 S1 r1"),
    ("L1,2", Alphabet.SUB_P, "s1 r1"),
    ("y1,2", Alphabet.SUB_P, "t1 r1"),
    ("y2,1", Alphabet.SUB_P, "r1 t1 r1 r1"),
    ("x1,2", Alphabet.SUB_H, "s1"),
    ("X1,2", Alphabet.SUB_H, "S1"),
    ("z2,1", Alphabet.SUB_H, "r1 t1 r1"),
    ("z1,3", Alphabet.SUB_M, "r2 t1 r2"),
    ("l1,4", Alphabet.SUB_P, "r3 r2 r1 S1 r2 r3"),
    ("l4,1", Alphabet.SUB_P, "r3 r2 r1 r1 S1 r1 r2 r3"),
    ("Y1,2", Alphabet.SUB_PG, "r1 T1"),
    ("g3", Alphabet.SUB_P, "g3"),
])
def test_expand_subgenerator(token, tag, expected):
    n = 4
    g = parse_word(token, tag, n)[0]
    e = expand_subgenerator(g, n, tag)
    assert str(e) == expected
    assert e.tag is (Alphabet.BRAID_GROUP if tag is Alphabet.SUB_PG else B)


def test_expand_rejects_foreign_generator():
    with pytest.raises(WordError):
        expand_subgenerator(Letter(Kind.X, 1, 2), 3, Alphabet.SUB_P)
    with pytest.raises(WordError):
        expand_subgenerator(Letter(Kind.LAM, 1, 5), 3, Alphabet.SUB_P)


def test_expand_word_concatenates():
    w = parse_word("l1,2 g3 y1,2", Alphabet.SUB_P, 3)
    assert str(expand_word(w)) == "r1 S1 g3 t1 r1"
    braid = parse_word("s1", B, 3)
    assert expand_word(braid) is braid


letters3 = st.sampled_from(
    [f"s{i}" for i in (1, 2)] + [f"S{i}" for i in (1, 2)] + [f"r{i}" for i in (1, 2)]
    + [f"g{i}" for i in (1, 2, 3)]
)


@given(st.lists(letters3, max_size=12))
def test_double_inverse_is_identity(tokens):
    w = parse_word(" ".join(tokens), B, 3)
    assert formal_inverse(formal_inverse(w)) == w
    assert parse_word(str(w), B, 3) == w


def test_word_rejects_small_n():
    with pytest.raises(WordError):
        Word(B, 1, ())
