import pytest

# "coverage" the function shadows the submodule on the package, so import
# straight from the module
from flatsem.coverage import (
    coverage,
    coverage_curve,
    max_expansion_coverage,
    shuffle_experiment,
)

from corpora import CLOSING_2, HANDPICKED_19, HANDPICKED_MISSING_4, NONSENSE_21


def test_universe_is_every_expansion():
    universe = max_expansion_coverage()
    assert len(universe) == 52


def test_nonsense_corpus_fraction(lexicon):
    result = coverage(NONSENSE_21, lexicon)
    assert len(result.covered) == 37
    assert result.fraction == 0.7115384615384616


def test_handpicked_corpus_fraction_and_gap(lexicon):
    result = coverage(HANDPICKED_19, lexicon)
    assert len(result.covered) == 48
    assert result.fraction == 0.9230769230769231
    assert result.missing == HANDPICKED_MISSING_4


def test_two_more_sentences_close_the_gap(lexicon):
    result = coverage(HANDPICKED_19 + CLOSING_2, lexicon)
    assert result.fraction == 1.0
    assert result.missing == set()


def test_unparseable_sentences_cover_nothing(lexicon):
    result = coverage(["shark .", "the was by ."], lexicon)
    assert result.covered == set()
    assert result.fraction == 0.0


def test_coverage_curve_counts_and_first_full(lexicon):
    curve = coverage_curve(HANDPICKED_19 + CLOSING_2, lexicon)
    assert len(curve.sizes) == 21
    assert curve.sizes == sorted(curve.sizes)  # monotone
    assert curve.final == 52
    assert curve.first_full == 21  # the last closing sentence is needed
    partial = coverage_curve(NONSENSE_21, lexicon)
    assert partial.first_full is None
    assert partial.final == 37


def test_curve_positions_count_unparseable_rows(lexicon):
    curve = coverage_curve(["shark ."] + HANDPICKED_19 + CLOSING_2, lexicon)
    assert curve.sizes[0] == 0
    assert curve.first_full == 22


def test_shuffle_experiment_deterministic(lexicon):
    corpus = HANDPICKED_19 + CLOSING_2
    a = shuffle_experiment(corpus, lexicon, n_shuffles=50, seed=4)
    b = shuffle_experiment(corpus, lexicon, n_shuffles=50, seed=4)
    assert a.first_full == b.first_full
    assert len(a.first_full) == 50
    assert a.lo <= a.median <= a.hi
    # both closing sentences are essential, so no shuffle finishes before
    # the later of the two appears
    assert min(a.first_full) >= 2
    assert max(a.first_full) <= 21


def test_shuffle_experiment_needs_full_corpus(lexicon):
    with pytest.raises(ValueError):
        shuffle_experiment(NONSENSE_21, lexicon, n_shuffles=2)
