#!/usr/bin/python
import logging
from abc import ABC
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import sympy

from util.errors import SpectralError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralResult:
    lam: float
    vector: np.ndarray
    residual: float
    iterations: int

    # a linear piece with lambda this close to 1 does not count as stretching
    EXPANSION_MARGIN = 1e-8

    @property
    def expanding(self) -> bool:
        return self.lam > 1.0 + SpectralResult.EXPANSION_MARGIN


class LinearAlgebra(ABC):
    DEFAULT_TOLERANCE = 1e-11
    DEFAULT_MAX_ITER = 100000
    NO_EXPANSION_RADIUS = 1.0 + 1e-6

    @staticmethod
    def default_start(dim: int) -> np.ndarray:
        # generic, positive, and deterministic
        return np.linspace(1.0, 2.0, dim) if dim > 1 else np.ones(1)

    @staticmethod
    def dominant_eigenpair(
        matrix,
        tol: float = DEFAULT_TOLERANCE,
        max_iter: int = DEFAULT_MAX_ITER,
        start: Optional[Sequence[float]] = None,
    ) -> SpectralResult:
        m = np.asarray(matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise SpectralError("Expected a non-empty square matrix, got shape " + str(m.shape))

        x = LinearAlgebra.default_start(m.shape[0]) if start is None else np.asarray(start, dtype=float)
        x = x / np.max(np.abs(x))

        lam = 0.0
        residual = np.inf
        for iteration in range(1, max_iter + 1):
            y = m @ x
            norm = np.max(np.abs(y))
            if norm == 0.0:
                raise SpectralError("Power iteration hit the kernel of the matrix", estimate=0.0)
            lam = float(x @ y) / float(x @ x)
            x = y / norm
            residual = float(np.max(np.abs(m @ x - lam * x)))
            if residual <= tol * max(1.0, abs(lam)):
                return SpectralResult(lam, x, residual, iteration)

        logger.warning(
            "power iteration did not converge: lambda ~ %.12g, residual %.3g after %d steps",
            lam,
            residual,
            max_iter,
        )
        raise SpectralError(
            "Power iteration did not converge within "
            + str(max_iter)
            + " steps (residual "
            + format(residual, ".3g")
            + ")",
            estimate=lam,
        )

    @staticmethod
    def spectral_radius(matrix) -> float:
        return float(np.max(np.abs(np.linalg.eigvals(np.asarray(matrix, dtype=float)))))

    @staticmethod
    def determinant(matrix: Sequence[Sequence[int]]) -> int:
        return int(sympy.Matrix([list(row) for row in matrix]).det(method="bareiss"))
