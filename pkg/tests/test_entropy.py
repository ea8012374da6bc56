import math

import pytest

from analysis.entropy import EntropyEstimator
from braid.braid_word import BraidWordBuilder
from coords.coordinates import DynnikovCoords
from util.errors import CoordinateError

EXAMPLE_ENTROPY = math.log((3 + math.sqrt(5)) / 2)


def test_example_word_entropy():
    w = BraidWordBuilder.parse_word("1 -2", 3)
    estimate = EntropyEstimator.entropy_estimate(w, DynnikovCoords(3, (1,), (1,)), 200)
    assert len(estimate.samples) == 200
    assert estimate.final == pytest.approx(EXAMPLE_ENTROPY, abs=1e-3)
    assert abs(estimate.final_sample - EXAMPLE_ENTROPY) < 2e-2
    # c_m creeps up on log(lambda) from the start's transient
    assert abs(estimate.samples[-1] - EXAMPLE_ENTROPY) < abs(estimate.samples[9] - EXAMPLE_ENTROPY)


def test_six_braid_entropy():
    estimate = EntropyEstimator.entropy_estimate(BraidWordBuilder.parse_word("1 2 3 4 -5", 6), iters=200)
    assert estimate.final == pytest.approx(math.log(2.081), abs=1e-2)


def test_single_generator_has_no_growth():
    estimate = EntropyEstimator.entropy_estimate(BraidWordBuilder.parse_word("1", 3), DynnikovCoords(3, (1,), (1,)), 200)
    assert estimate.final_sample < 0.1
    assert estimate.final < 0.01


def test_rows_and_json():
    estimate = EntropyEstimator.entropy_estimate(BraidWordBuilder.parse_word("1 -2", 3), iters=3)
    rows = estimate.rows()
    assert [r[0] for r in rows] == [1, 2, 3]
    j = estimate.to_json()
    assert j["iters"] == 3
    assert j["word"] == {"n": 3, "letters": [1, -2]}
    assert j["final"] == estimate.rates[-1]


def test_entropy_needs_integer_start():
    with pytest.raises(CoordinateError):
        EntropyEstimator.entropy_estimate(BraidWordBuilder.parse_word("1 -2", 3), DynnikovCoords(3, (1.0,), (1.0,)))


def test_entropy_needs_iterations():
    with pytest.raises(CoordinateError):
        EntropyEstimator.entropy_estimate(BraidWordBuilder.parse_word("1 -2", 3), iters=0)
