#!/usr/bin/python
from abc import ABC
from dataclasses import dataclass

import numpy as np

from action.evaluators import ExactEvaluator, MaxEvaluator, SymbolicEvaluator, TracingEvaluator
from action.signature import BranchSignature, LinearizedAction, NodeId
from action.update_rules import UpdateRules
from braid.braid_word import BraidWord
from coords.coordinates import DynnikovCoords
from util.errors import CoordinateError

DEFAULT_TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class WordTrace:
    output: DynnikovCoords
    signature: BranchSignature
    ties: frozenset[NodeId]


@dataclass(frozen=True)
class ProjectiveTrajectory:
    points: tuple[DynnikovCoords, ...]
    signature: BranchSignature
    ties: frozenset[NodeId]

    @property
    def final(self) -> DynnikovCoords:
        return self.points[-1]


class CoordinateAction(ABC):
    @staticmethod
    def apply_generator(dc: DynnikovCoords, letter: int) -> DynnikovCoords:
        return CoordinateAction.apply_word(dc, BraidWord(dc.n, (letter,)))

    @staticmethod
    def apply_word(dc: DynnikovCoords, w: BraidWord) -> DynnikovCoords:
        CoordinateAction._check_dimension(dc, w)
        (a, b) = CoordinateAction._run(ExactEvaluator(), dc.a, dc.b, w)
        return DynnikovCoords(dc.n, tuple(a), tuple(b))

    @staticmethod
    def trace_word(
        dc: DynnikovCoords, w: BraidWord, tie_tolerance: float = DEFAULT_TIE_TOLERANCE
    ) -> WordTrace:
        CoordinateAction._check_dimension(dc, w)
        ev = TracingEvaluator(tie_tolerance)
        (a, b) = CoordinateAction._run(ev, dc.a, dc.b, w)
        if all(v == 0 for v in a + b):
            raise CoordinateError("Coordinates collapsed to zero under " + str(w))
        return WordTrace(DynnikovCoords(dc.n, tuple(a), tuple(b)), ev.signature(), frozenset(ev.ties))

    @staticmethod
    def apply_word_projective(
        dc: DynnikovCoords,
        w: BraidWord,
        steps: int,
        tie_tolerance: float = DEFAULT_TIE_TOLERANCE,
    ) -> ProjectiveTrajectory:
        if steps < 1:
            raise CoordinateError("Projective iteration needs at least one step")
        current = dc.as_real().normalized()
        points = []
        trace = None
        for _ in range(steps):
            trace = CoordinateAction.trace_word(current, w, tie_tolerance)
            current = trace.output.normalized()
            points.append(current)
        return ProjectiveTrajectory(tuple(points), trace.signature, trace.ties)

    @staticmethod
    def signature_at(
        dc: DynnikovCoords, w: BraidWord, tie_tolerance: float = DEFAULT_TIE_TOLERANCE
    ) -> tuple[BranchSignature, frozenset[NodeId]]:
        trace = CoordinateAction.trace_word(dc.as_real(), w, tie_tolerance)
        return (trace.signature, trace.ties)

    @staticmethod
    def linearize(w: BraidWord, sig: BranchSignature) -> LinearizedAction:
        k = w.n - 2
        dim = 2 * k
        basis = []
        for i in range(dim):
            e = np.zeros(dim, dtype=object)
            e[i] = 1
            basis.append(e)

        ev = SymbolicEvaluator(sig, dim)
        (a, b) = CoordinateAction._run(ev, basis[:k], basis[k:], w)
        ev.finish()

        matrix = tuple(tuple(int(c) for c in form) for form in a + b)
        return LinearizedAction(w.n, matrix, tuple(ev.halfspaces), sig)

    @staticmethod
    def _run(ev: MaxEvaluator, a, b, w: BraidWord) -> tuple[list, list]:
        a = list(a)
        b = list(b)
        for position, letter in enumerate(w.letters):
            ev.begin_letter(position, UpdateRules.case_of(letter, w.n), a + b)
            UpdateRules.apply(ev, a, b, letter, w.n)
        return (a, b)

    @staticmethod
    def _check_dimension(dc: DynnikovCoords, w: BraidWord) -> None:
        if dc.n != w.n:
            raise CoordinateError(
                "Coordinates are for n=" + str(dc.n) + " but the word is in B_" + str(w.n)
            )
