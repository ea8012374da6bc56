#!/usr/bin/python
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from spectral.linear_algebra import LinearAlgebra

# (letter position, generator case, node index within the letter)
NodeId = tuple[int, str, int]


class BranchChoice(NamedTuple):
    letter: int
    case: str
    node: int
    choice: Optional[int]

    @property
    def node_id(self) -> NodeId:
        return (self.letter, self.case, self.node)


@dataclass(frozen=True)
class BranchSignature:
    choices: tuple[BranchChoice, ...]

    def __len__(self) -> int:
        return len(self.choices)

    def positions_of(self, nodes: Iterable[NodeId]) -> list[int]:
        wanted = set(nodes)
        return [i for i, c in enumerate(self.choices) if c.node_id in wanted]

    def masked(self, ties: Iterable[NodeId]) -> "BranchSignature":
        # tie-flagged choices become wildcards so boundary points compare equal
        ties = set(ties)
        return BranchSignature(
            tuple(c._replace(choice=None) if c.node_id in ties else c for c in self.choices)
        )

    def with_choices(self, updates: dict[int, int]) -> "BranchSignature":
        choices = list(self.choices)
        for position, choice in updates.items():
            choices[position] = choices[position]._replace(choice=choice)
        return BranchSignature(tuple(choices))

    def to_json(self) -> list:
        return [list(c) for c in self.choices]


@dataclass(frozen=True)
class LinearizedAction:
    n: int
    matrix: tuple[tuple[int, ...], ...]
    halfspaces: tuple[tuple[int, ...], ...]
    signature: BranchSignature

    @cached_property
    def det(self) -> int:
        return LinearAlgebra.determinant(self.matrix)

    def reduced(self) -> "LinearizedAction":
        seen = set()
        unique = []
        for h in self.halfspaces:
            if h not in seen:
                seen.add(h)
                unique.append(h)
        return LinearizedAction(self.n, self.matrix, tuple(unique), self.signature)

    def slacks(self, x: Sequence[float]) -> list[float]:
        return [float(sum(c * v for c, v in zip(h, x))) for h in self.halfspaces]

    def contains(self, x: Sequence[float], tolerance: float = 0.0) -> bool:
        # closure membership, slack measured relative to |h|_1 |x|_inf
        scale = max(abs(float(v)) for v in x)
        for h, s in zip(self.halfspaces, self.slacks(x)):
            if s < -tolerance * scale * sum(abs(c) for c in h):
                return False
        return True

    def apply(self, x: Sequence) -> tuple:
        return tuple(sum(c * v for c, v in zip(row, x)) for row in self.matrix)

    def to_json(self) -> dict:
        return {
            "matrix": [list(row) for row in self.matrix],
            "halfspaces": [list(h) for h in self.halfspaces],
            "det": self.det,
        }
