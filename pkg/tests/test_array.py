import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from gekr.exceptions import ArrayFormatError, DomainError
from gekr.models import GEKR, ArrayMatrix, PatternSet, parse_array, render_array
from gekr.models.array import pack_bits, unpack_words, word_count


def test_parse_mixed_weights():
    array = parse_array(b"111\n110\n")
    assert array.shape == (2, 3)
    assert list(array.weights()) == [3, 2]
    assert array.declared_weight is None


def test_parse_sets_common_weight():
    array = parse_array("1100\n1010\n0110\n")
    assert array.shape == (3, 4)
    assert array.declared_weight == 2


def test_parse_comments_crlf_and_missing_newline():
    array = parse_array("# three rows\r\n1100\r\n\r\n1010\r\n0110")
    assert array.shape == (3, 4)


@pytest.mark.parametrize("text", ["110\n1100\n", "1a0\n", "", "# only a comment\n", b"\xff\xfe"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ArrayFormatError):
        parse_array(text)


def test_declared_weight_is_enforced():
    bits = np.array([[1, 1, 0], [1, 0, 0]], dtype=np.uint8)
    with pytest.raises(DomainError):
        ArrayMatrix.from_bits(bits, 3, declared_weight=2)
    with pytest.raises(DomainError):
        ArrayMatrix.from_bits(bits, 3, declared_weight=4)


def test_bits_beyond_n_rejected():
    with pytest.raises(DomainError):
        ArrayMatrix(n=3, words=np.array([[0b1000]], dtype=np.uint64))


def test_padding_across_word_boundary():
    n = 70
    bits = np.zeros((2, n), dtype=np.uint8)
    bits[0, [0, 63, 64, 69]] = 1
    bits[1] = 1
    words = pack_bits(bits, n)
    assert words.shape == (2, word_count(n)) == (2, 2)
    assert np.array_equal(unpack_words(words, n), bits)
    array = ArrayMatrix(n=n, words=words)
    assert list(array.weights()) == [4, 70]
    # дополнение не выходит за n
    assert int(np.bitwise_count(array.complement[1]).sum()) == 0


def test_array_is_read_only():
    array = parse_array("10\n01\n")
    with pytest.raises(ValueError):
        array.words[0, 0] = 3


@hypothesis_settings(max_examples=60)
@given(st.integers(min_value=1, max_value=80), st.integers(min_value=0, max_value=6), st.integers(0, 2 ** 32))
def test_text_round_trip(n, m, seed):
    bits = np.random.default_rng(seed).integers(0, 2, size=(m, n), dtype=np.uint8)
    array = ArrayMatrix.from_bits(bits, n)
    assert parse_array(render_array(array)) == array


def test_pattern_set_parsing():
    assert PatternSet.parse("gekr") == GEKR
    assert PatternSet.parse("111, 110;101,011") == GEKR
    assert len(PatternSet.parse("all")) == 8
    assert str(GEKR) and (1, 1, 1) in GEKR
    with pytest.raises(DomainError):
        PatternSet.parse("12")
    with pytest.raises(DomainError):
        PatternSet.parse("")


def test_permute_columns_keeps_weights():
    array = parse_array("1100\n1010\n0110\n")
    permuted = array.permute_columns([3, 2, 1, 0])
    assert permuted.to_text() == "0011\n0101\n0110\n"
    assert permuted.declared_weight == 2


def test_empty_array_keeps_column_count():
    empty = ArrayMatrix.from_bits(np.zeros((0, 70), dtype=np.uint8), 70)
    text = render_array(empty)
    assert text == "# empty 0x70\n"
    parsed = parse_array(text)
    assert parsed.shape == (0, 70)
    assert parsed == empty
