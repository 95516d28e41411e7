from __future__ import annotations

import pytest

from tqmzv.algebra.words import (
    SUBSPACES,
    Index,
    index_from_word,
    parse_word,
    render_word,
    require,
    split_first,
    z,
)
from tqmzv.exceptions import DomainError, InvalidIndexError, NotInSubspaceError
from tqmzv.utils.enumerate import compositions, enumerate_indices, enumerate_words


class TestLetters:
    @pytest.mark.parametrize("k,word", [(1, "y"), (2, "xy"), (4, "xxxy")])
    def test_z(self, k, word):
        assert z(k) == word

    def test_z_needs_positive_k(self):
        with pytest.raises(InvalidIndexError):
            z(0)

    @pytest.mark.parametrize(
        "text,word",
        [("xyy", "xyy"), ("XY", "xy"), ("1", ""), ("", ""), ("z[2,1]", "xyy"), ("z[1, 3]", "yxxy")],
    )
    def test_parse_word(self, text, word):
        assert parse_word(text) == word

    def test_parse_word_rejects_other_letters(self):
        with pytest.raises(DomainError):
            parse_word("xz")

    def test_split_first(self):
        assert split_first("xxyxy") == (3, "xy")

    @pytest.mark.parametrize(
        "word,letters,text",
        [("", False, "1"), ("xyy", False, "z[2,1]"), ("xyy", True, "xyy"), ("yx", False, "yx")],
    )
    def test_render_word(self, word, letters, text):
        assert render_word(word, letters) == text


class TestSubspaces:
    @pytest.mark.parametrize(
        "subspace,inside,outside",
        [
            ("H1", ["", "y", "xy"], ["x", "yx"]),
            ("H0", ["", "xy", "xyy"], ["y", "yxy", "x"]),
            ("Hy", ["y", "xy"], ["", "x"]),
            ("H1check", ["xy", "yxy"], ["", "y", "yyy", "yx"]),
            ("z", ["y", "xxy"], ["", "yy", "xyy"]),
        ],
    )
    def test_membership(self, subspace, inside, outside):
        check = SUBSPACES[subspace]
        assert all(check(word) for word in inside)
        assert not any(check(word) for word in outside)

    def test_require_reports_the_subspace(self):
        with pytest.raises(NotInSubspaceError) as error:
            require("yy", "H0")
        assert error.value.subspace == "H0"
        assert error.value.value == "yy"


class TestIndex:
    def test_parse(self):
        index = Index.parse("(2, 1)")
        assert index.parts == (2, 1)
        assert index.weight == 3
        assert index.depth == 2
        assert str(index) == "2,1"
        assert index.word() == "xyy"

    @pytest.mark.parametrize("text", ["", "2,a", "2,,1"])
    def test_malformed_text(self, text):
        with pytest.raises(InvalidIndexError):
            Index.parse(text)

    @pytest.mark.parametrize("parts", [(), (2, 0), (-1,)])
    def test_parts_must_be_positive(self, parts):
        with pytest.raises(InvalidIndexError):
            Index(parts)

    def test_admissibility(self):
        assert Index.of(2, 1).is_admissible()
        assert not Index.of(1, 2).is_admissible()
        with pytest.raises(InvalidIndexError):
            Index.of(1, 2).require_admissible()

    def test_all_ones(self):
        assert Index.of(1, 1, 1).is_all_ones()
        assert not Index.of(1, 2).is_all_ones()

    def test_rotations_keep_duplicates(self):
        assert Index.of(2, 1, 1).rotations() == [(2, 1, 1), (1, 1, 2), (1, 2, 1)]
        assert Index.of(2, 2).rotations() == [(2, 2), (2, 2)]

    def test_word_and_index_are_inverse(self):
        assert index_from_word("yxxyxy") == Index.of(1, 3, 2)
        assert index_from_word(Index.of(3, 1, 2).word()) == Index.of(3, 1, 2)

    def test_index_from_word_domain(self):
        with pytest.raises(InvalidIndexError):
            index_from_word("")
        with pytest.raises(NotInSubspaceError):
            index_from_word("yx")


class TestEnumeration:
    def test_words_are_length_lex(self):
        assert list(enumerate_words(2)) == ["", "x", "y", "xx", "xy", "yx", "yy"]

    def test_words_in_subspace(self):
        assert list(enumerate_words(3, "H0", min_weight=1)) == ["xy", "xxy", "xyy"]

    def test_compositions(self):
        assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]

    def test_admissible_indices(self):
        assert list(enumerate_indices(3)) == [Index.of(2), Index.of(3), Index.of(2, 1)]

    def test_cyclic_sum_grid(self):
        indices = enumerate_indices(3, admissible=False, exclude_all_ones=True)
        assert [index.parts for index in indices] == [(2,), (3,), (1, 2), (2, 1)]

    def test_depth_limit(self):
        assert all(index.depth <= 2 for index in enumerate_indices(6, max_depth=2))
