#!/usr/bin/python
import logging
import math
from abc import ABC
from dataclasses import dataclass
from typing import Optional

from action.coordinate_action import CoordinateAction
from braid.braid_word import BraidWord
from coords.coordinates import DynnikovCoords
from util.errors import CoordinateError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EntropyEstimate:
    """Growth of the L1 norm S_m of the coordinates under w^m.

    samples[m-1] is c_m = log(S_m)/m. rates[m-1] is log S_m - log S_{m-1},
    which settles on log(dilatation) much faster than c_m does; final is the
    last rate.
    """

    word: BraidWord
    samples: tuple[float, ...]
    rates: tuple[float, ...]

    @property
    def final(self) -> float:
        return self.rates[-1]

    @property
    def final_sample(self) -> float:
        return self.samples[-1]

    def rows(self) -> list[tuple[int, float, float]]:
        return [(m + 1, c, r) for m, (c, r) in enumerate(zip(self.samples, self.rates))]

    def to_json(self) -> dict:
        return {
            "word": self.word.to_json(),
            "iters": len(self.samples),
            "final": self.final,
            "final_sample": self.final_sample,
            "samples": list(self.samples),
            "rates": list(self.rates),
        }


class EntropyEstimator(ABC):
    @staticmethod
    def default_start(n: int) -> DynnikovCoords:
        return DynnikovCoords(n, (1,) * (n - 2), (1,) * (n - 2))

    @staticmethod
    def entropy_estimate(
        w: BraidWord, start: Optional[DynnikovCoords] = None, iters: int = 200
    ) -> EntropyEstimate:
        if iters < 1:
            raise CoordinateError("Entropy estimation needs iters >= 1, got " + str(iters))
        x = EntropyEstimator.default_start(w.n) if start is None else start
        if not x.exact:
            raise CoordinateError("Entropy estimation iterates exact integer coordinates")

        # math.log accepts arbitrarily large ints
        previous = math.log(x.l1_norm())
        samples = []
        rates = []
        for m in range(1, iters + 1):
            x = CoordinateAction.apply_word(x, w)
            current = math.log(x.l1_norm())
            samples.append(current / m)
            rates.append(current - previous)
            previous = current

        logger.debug(
            "entropy of %s after %d iterations: c_m=%.9f rate=%.9f", w, iters, samples[-1], rates[-1]
        )
        return EntropyEstimate(w, tuple(samples), tuple(rates))
