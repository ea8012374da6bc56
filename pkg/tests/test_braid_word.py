import pytest

from braid.braid_word import BraidWord, BraidWordBuilder
from util.errors import BraidWordError


def test_parse_word_keeps_letter_order():
    w = BraidWordBuilder.parse_word("1 2 3 4 -5", 6)
    assert w.n == 6
    assert w.letters == (1, 2, 3, 4, -5)
    assert str(w) == "1 2 3 4 -5"
    assert len(w) == 5


def test_parse_word_tolerates_extra_whitespace():
    assert BraidWordBuilder.parse_word("  1   -2 ", 3).letters == (1, -2)


@pytest.mark.parametrize(
    "text, n",
    [
        ("", 3),
        ("   ", 3),
        ("1 0", 3),
        ("1 3", 3),
        ("-3", 3),
        ("1 x", 3),
        ("1", 2),
    ],
)
def test_parse_word_rejects_bad_input(text, n):
    with pytest.raises(BraidWordError):
        BraidWordBuilder.parse_word(text, n)


def test_free_reduction_cancels_inverse_pairs():
    w = BraidWordBuilder.parse_word("1 2 -2 -1 3", 5, reduce=True)
    assert w.letters == (3,)


def test_reduction_to_identity_is_an_error():
    with pytest.raises(BraidWordError):
        BraidWordBuilder.parse_word("1 2 -2 -1", 4, reduce=True)


def test_bad_letter_is_reported_even_when_it_would_cancel():
    with pytest.raises(BraidWordError):
        BraidWordBuilder.parse_word("5 -5 1", 4, reduce=True)


def test_inverse_word_reverses_and_negates():
    w = BraidWordBuilder.parse_word("1 2 -3", 4)
    assert BraidWordBuilder.inverse_word(w).letters == (3, -2, -1)


def test_power_concatenates_copies():
    w = BraidWord(3, (1, -2))
    assert BraidWordBuilder.power(w, 3).letters == (1, -2, 1, -2, 1, -2)
    with pytest.raises(BraidWordError):
        BraidWordBuilder.power(w, 0)


def test_from_json_accepts_array_and_object():
    assert BraidWordBuilder.from_json([1, -2], n=3) == BraidWord(3, (1, -2))
    assert BraidWordBuilder.from_json({"n": 4, "letters": [2, 3]}) == BraidWord(4, (2, 3))


def test_from_json_rejects_non_integers():
    with pytest.raises(BraidWordError):
        BraidWordBuilder.from_json([1, "2"], n=3)
    with pytest.raises(BraidWordError):
        BraidWordBuilder.from_json([1, True], n=3)
    with pytest.raises(BraidWordError):
        BraidWordBuilder.from_json([1, 2])


def test_to_json_round_trips():
    w = BraidWord(6, (1, 2, 3, 4, -5))
    assert BraidWordBuilder.from_json(w.to_json()) == w


@pytest.mark.parametrize("text, n", [("1", 3), ("1 2 -3", 4), ("2 -1 3 -2 -4 1", 5), ("1 1 -2 3 4", 6)])
def test_inverse_word_is_an_involution(text, n):
    w = BraidWordBuilder.parse_word(text, n)
    assert BraidWordBuilder.inverse_word(BraidWordBuilder.inverse_word(w)) == w
