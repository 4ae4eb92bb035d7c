import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frake.fpgrowth import frequent_itemsets
from frake.fusion import (
    PhraseCandidate,
    ScoredWord,
    _is_subspan,
    fuse,
    mine_phrases,
    rank,
)

import oracles


def sw(word, final, position=0):
    return ScoredWord(
        word=word,
        graph_score=1.0,
        textural_score=final,
        final_score=final,
        first_position=position,
    )


class TestFuse:
    def test_worked_example_uniform(self):
        out = fuse({"uniform": 1.77}, {"uniform": 3.92})
        assert out["uniform"].final_score == pytest.approx(6.94, abs=0.02)

    def test_worked_example_fuzzy(self):
        out = fuse({"fuzzy": 1.11}, {"fuzzy": 4.94})
        assert out["fuzzy"].final_score == pytest.approx(5.48, abs=0.01)

    def test_zero_texture_absorbs(self):
        assert fuse({"w": 1.9}, {"w": 0.0})["w"].final_score == 0.0

    def test_key_mismatch_lists_symmetric_difference(self):
        with pytest.raises(ValueError, match=r"\['b', 'c'\]"):
            fuse({"a": 1.0, "b": 1.0}, {"a": 2.0, "c": 2.0})

    def test_product_identity(self):
        out = fuse({"w": 1.5}, {"w": 2.5}, {"w": 7})
        assert out["w"].final_score == pytest.approx(1.5 * 2.5, abs=1e-12)
        assert out["w"].first_position == 7


class TestFrequentItemsets:
    def brute_force(self, transactions, min_support, max_len):
        items = sorted({i for t in transactions for i in t})
        out = {}
        for size in range(1, max_len + 1):
            for combo in itertools.combinations(items, size):
                support = sum(1 for t in transactions if set(combo) <= set(t))
                if support >= min_support:
                    out[frozenset(combo)] = support
        return out

    def test_known_example(self):
        transactions = [["a", "b"], ["b", "c"], ["a", "b", "c"], ["b"]]
        result = frequent_itemsets(transactions, min_support=2, max_len=3)
        assert result[frozenset({"b"})] == 4
        assert result[frozenset({"a", "b"})] == 2
        assert result[frozenset({"b", "c"})] == 2
        assert frozenset({"a", "c"}) not in result

    def test_duplicates_within_transaction_count_once(self):
        result = frequent_itemsets([["a", "a"], ["a"]], min_support=2, max_len=2)
        assert result[frozenset({"a"})] == 2

    def test_min_support_validation(self):
        with pytest.raises(ValueError):
            frequent_itemsets([["a"]], min_support=0)

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.lists(st.sampled_from("abcdef"), min_size=0, max_size=6),
            min_size=0,
            max_size=8,
        ),
        st.integers(1, 3),
        st.integers(1, 4),
    )
    def test_equals_subset_enumeration(self, transactions, min_support, max_len):
        result = frequent_itemsets(transactions, min_support, max_len=max_len)
        assert result == self.brute_force(transactions, min_support, max_len)


class TestMinePhrases:
    def test_repeated_bigram(self):
        scored = {"a": sw("a", 2.0), "b": sw("b", 3.0), "c": sw("c", 1.0)}
        phrases = mine_phrases([["a", "b"], ["a", "b"], ["c"]], scored, min_support=2)
        assert len(phrases) == 1
        assert phrases[0].words == ("a", "b")
        assert phrases[0].support == 2
        assert phrases[0].score == pytest.approx(5.0)

    def test_no_repeats_no_phrases(self):
        scored = {w: sw(w, 1.0) for w in "abcd"}
        assert mine_phrases([["a", "b"], ["c", "d"]], scored, min_support=2) == []

    def test_order_matters_for_contiguity(self):
        scored = {w: sw(w, 1.0) for w in "ab"}
        # words co-occur in both sentences but never in one fixed contiguous order
        phrases = mine_phrases([["a", "x", "b"], ["b", "y", "a"]], scored | {"x": sw("x", 1.0), "y": sw("y", 1.0)}, min_support=2)
        assert phrases == []

    def test_six_sentence_corpus_matches_enumeration_oracle(self):
        sentences = [
            ["graph", "model", "node"],
            ["graph", "model", "edge"],
            ["node", "edge", "graph", "model"],
            ["edge", "node"],
            ["graph", "model"],
            ["model", "graph"],
        ]
        scored = {w: sw(w, 1.0) for w in ("graph", "model", "node", "edge")}
        for min_support, max_len in [(2, 2), (2, 3), (3, 4)]:
            mined = {
                (p.words, p.support)
                for p in mine_phrases(sentences, scored, min_support, max_len)
            }
            expected = set(
                oracles.oracle_ngram_phrases(sentences, min_support, max_len).items()
            )
            assert mined == expected

    def test_missing_scored_word_raises(self):
        with pytest.raises(ValueError, match="missing"):
            mine_phrases([["a", "b"], ["a", "b"]], {"a": sw("a", 1.0)}, min_support=2)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            mine_phrases([], {}, min_support=0)
        with pytest.raises(ValueError):
            mine_phrases([], {}, min_support=1, max_phrase_len=1)

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.lists(st.sampled_from("abcde"), min_size=0, max_size=7),
            min_size=0,
            max_size=8,
        ),
        st.integers(1, 3),
        st.integers(2, 4),
    )
    def test_equals_ngram_oracle(self, sentences, min_support, max_len):
        scored = {w: sw(w, 1.0) for w in "abcde"}
        mined = {
            (p.words, p.support)
            for p in mine_phrases(sentences, scored, min_support, max_len)
        }
        expected = set(oracles.oracle_ngram_phrases(sentences, min_support, max_len).items())
        assert mined == expected

    def test_phrase_score_is_member_sum_with_repeats(self):
        scored = {"a": sw("a", 2.0), "b": sw("b", 0.5)}
        phrases = mine_phrases([["a", "b", "a"], ["a", "b", "a"]], scored, min_support=2, max_phrase_len=3)
        by_words = {p.words: p for p in phrases}
        assert by_words[("a", "b", "a")].score == pytest.approx(4.5)


class TestRank:
    def test_phrase_suppresses_member_words(self):
        scored = {
            "fuzzy": sw("fuzzy", 5.0, 0),
            "systems": sw("systems", 4.0, 1),
            "other": sw("other", 1.0, 2),
        }
        phrases = [PhraseCandidate(("fuzzy", "systems"), 2, 9.0, 0)]
        result = rank(scored, phrases, k=10)
        texts = [e.text for e in result.ranked]
        assert texts[0] == "fuzzy systems"
        assert "fuzzy" not in texts
        assert "systems" not in texts
        assert "other" in texts

    def test_k_larger_than_pool(self):
        scored = {"a": sw("a", 2.0), "b": sw("b", 1.0)}
        result = rank(scored, [], k=50)
        assert [e.text for e in result.ranked] == ["a", "b"]

    def test_ties_break_by_first_occurrence(self):
        scored = {
            "late": sw("late", 3.0, position=9),
            "early": sw("early", 3.0, position=1),
        }
        result = rank(scored, [], k=2)
        assert [e.text for e in result.ranked] == ["early", "late"]

    def test_equal_score_and_position_break_lexicographically(self):
        scored = {"b": sw("b", 1.0, 0), "a": sw("a", 1.0, 0)}
        assert [e.text for e in rank(scored, [], k=2).ranked] == ["a", "b"]

    def test_truncates_after_suppression(self):
        scored = {
            "a": sw("a", 5.0, 0),
            "b": sw("b", 4.0, 1),
            "c": sw("c", 1.0, 2),
            "d": sw("d", 0.5, 3),
        }
        phrases = [PhraseCandidate(("a", "b"), 2, 9.0, 0)]
        result = rank(scored, phrases, k=2)
        # a and b are swallowed by the phrase and do not consume slots
        assert [e.text for e in result.ranked] == ["a b", "c"]

    def test_scores_non_increasing_and_capped(self):
        scored = {w: sw(w, s, i) for i, (w, s) in enumerate([("x", 3.0), ("y", 5.0), ("z", 4.0)])}
        result = rank(scored, [], k=2)
        assert len(result.ranked) == 2
        scores = [e.score for e in result.ranked]
        assert scores == sorted(scores, reverse=True)

    def test_k_validation(self):
        with pytest.raises(ValueError):
            rank({}, [], k=0)

    @settings(max_examples=50, deadline=None)
    @given(
        st.dictionaries(
            st.sampled_from("abcdef"),
            st.floats(0, 10, allow_nan=False),
            min_size=1,
            max_size=6,
        ),
        st.floats(0.01, 100.0),
        st.integers(1, 8),
    )
    def test_common_positive_scale_never_reorders(self, finals, scale, k):
        scored = {w: sw(w, v, i) for i, (w, v) in enumerate(finals.items())}
        scaled = {
            w: sw(w, v.final_score * scale, v.first_position) for w, v in scored.items()
        }
        first = [e.text for e in rank(scored, [], k).ranked]
        second = [e.text for e in rank(scaled, [], k).ranked]
        assert first == second

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.sampled_from("abcd"), min_size=1, max_size=12),
        st.integers(1, 6),
    )
    def test_no_two_entries_subsume_each_other(self, stream, k):
        words = list(dict.fromkeys(stream))
        scored = {w: sw(w, float(len(w)), stream.index(w)) for w in words}
        sentences = [stream]
        phrases = mine_phrases([stream, stream], scored, min_support=2, max_phrase_len=3)
        result = rank(scored, phrases, k)
        entries = [e.words for e in result.ranked]
        for x, y in itertools.permutations(entries, 2):
            assert not _is_subspan(x, y)


def test_is_subspan():
    assert _is_subspan(("a",), ("a", "b"))
    assert _is_subspan(("a", "b"), ("c", "a", "b"))
    assert not _is_subspan(("a", "b"), ("b", "a"))
    assert not _is_subspan(("a", "c"), ("a", "b", "c"))
    assert not _is_subspan(("a", "b", "c"), ("a", "b"))
