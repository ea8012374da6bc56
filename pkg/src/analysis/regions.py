#!/usr/bin/python
import itertools
from abc import ABC
from typing import Iterator, Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from action.signature import BranchSignature, LinearizedAction, NodeId


class RegionGeometry(ABC):
    # a cone counts as solid when a unit box direction clears every tight facet by this much
    INTERIOR_MARGIN = 1e-9

    @staticmethod
    def tight_halfspaces(action: LinearizedAction, x: Sequence[float], tolerance: float) -> list:
        scale = float(np.max(np.abs(x)))
        tight = []
        for h, s in zip(action.halfspaces, action.slacks(x)):
            norm = sum(abs(c) for c in h)
            if norm == 0:
                continue
            if abs(s) <= tolerance * scale * norm:
                tight.append(h)
        return tight

    @staticmethod
    def has_interior(action: LinearizedAction, x: Sequence[float], tolerance: float) -> bool:
        """True when the region is full-dimensional near x.

        Only the facets tight at x matter there, so the question is whether
        the cone {d : h.d >= 0 for tight h} is solid. Solved as
        max t s.t. h.d >= t, |d_i| <= 1.
        """
        tight = RegionGeometry.tight_halfspaces(action, x, tolerance)
        if not tight:
            return True
        dim = len(x)
        h = np.asarray(tight, dtype=float)
        a_ub = np.hstack([-h, np.ones((len(tight), 1))])
        b_ub = np.zeros(len(tight))
        c = np.zeros(dim + 1)
        c[-1] = -1.0
        bounds = [(-1.0, 1.0)] * dim + [(None, 1.0)]
        result = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
        return bool(result.status == 0 and -result.fun > RegionGeometry.INTERIOR_MARGIN)

    @staticmethod
    def orient(action: LinearizedAction, v: np.ndarray, tolerance: float) -> Optional[np.ndarray]:
        if action.contains(v, tolerance):
            return v
        if action.contains(-v, tolerance):
            return -v
        return None

    @staticmethod
    def variant_count(signature: BranchSignature, ties: frozenset[NodeId]) -> int:
        return 2 ** len(signature.positions_of(ties))

    @staticmethod
    def tie_variants(
        signature: BranchSignature, ties: frozenset[NodeId], cap: int
    ) -> Iterator[BranchSignature]:
        """Signatures differing from `signature` only at tie nodes, base first."""
        positions = signature.positions_of(ties)
        yield signature
        produced = 1
        base = tuple(signature.choices[p].choice for p in positions)
        for combo in itertools.product((0, 1), repeat=len(positions)):
            if produced >= cap:
                return
            if combo == base:
                continue
            produced += 1
            yield signature.with_choices(dict(zip(positions, combo)))
