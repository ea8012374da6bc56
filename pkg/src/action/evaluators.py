#!/usr/bin/python
from abc import ABC, abstractmethod
from typing import Sequence

import numpy as np

from action.signature import BranchChoice, BranchSignature, NodeId
from util.errors import SignatureError


class MaxEvaluator(ABC):
    """Arithmetic context the update rules run in.

    The rules only ever call max(x, y) and the native + and -, so the same
    formulas evaluate integers, floats with branch tracking, or linear forms
    in the initial coordinates depending on the evaluator.
    """

    def __init__(self):
        self._letter = -1
        self._case = ""
        self._node = 0

    @property
    def zero(self):
        return 0

    def begin_letter(self, position: int, case: str, values: Sequence) -> None:
        self._letter = position
        self._case = case
        self._node = 0

    def max(self, x, y):
        node = self._node
        self._node += 1
        return self._resolve(node, x, y)

    @abstractmethod
    def _resolve(self, node: int, x, y):
        pass


class ExactEvaluator(MaxEvaluator):
    def _resolve(self, node: int, x, y):
        return x if x >= y else y


class TracingEvaluator(MaxEvaluator):
    def __init__(self, tie_tolerance: float):
        super().__init__()
        self.tie_tolerance = tie_tolerance
        self.choices: list[BranchChoice] = []
        self.ties: set[NodeId] = set()
        self._scale = 0.0

    def begin_letter(self, position: int, case: str, values: Sequence) -> None:
        super().begin_letter(position, case, values)
        # ties are judged against the size of the vector entering this letter
        self._scale = max(abs(v) for v in values)

    def _resolve(self, node: int, x, y):
        choice = 0 if x >= y else 1
        self.choices.append(BranchChoice(self._letter, self._case, node, choice))
        if abs(x - y) <= self.tie_tolerance * self._scale:
            self.ties.add((self._letter, self._case, node))
        return x if choice == 0 else y

    def signature(self) -> BranchSignature:
        return BranchSignature(tuple(self.choices))


class SymbolicEvaluator(MaxEvaluator):
    """Replays a signature on linear forms (numpy object arrays of ints)."""

    def __init__(self, signature: BranchSignature, dim: int):
        super().__init__()
        self.dim = dim
        self.halfspaces: list[tuple[int, ...]] = []
        self._expected = signature.choices
        self._cursor = 0

    @property
    def zero(self):
        return np.zeros(self.dim, dtype=object)

    def _resolve(self, node: int, x, y):
        if self._cursor >= len(self._expected):
            raise SignatureError("Signature is shorter than the word's max nodes")
        expected = self._expected[self._cursor]
        self._cursor += 1
        if expected.node_id != (self._letter, self._case, node):
            raise SignatureError(
                "Signature node "
                + str(expected.node_id)
                + " does not match "
                + str((self._letter, self._case, node))
            )
        if expected.choice not in (0, 1):
            raise SignatureError("Unresolved choice at node " + str(expected.node_id))
        (chosen, other) = (x, y) if expected.choice == 0 else (y, x)
        self.halfspaces.append(tuple(int(c) for c in chosen - other))
        return chosen

    def finish(self) -> None:
        if self._cursor != len(self._expected):
            raise SignatureError(
                "Signature has "
                + str(len(self._expected))
                + " choices but the word evaluates "
                + str(self._cursor)
                + " max nodes"
            )
