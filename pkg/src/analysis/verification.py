#!/usr/bin/python
import logging
import math
from abc import ABC
from dataclasses import dataclass
from typing import Optional

import numpy as np

from analysis.families import BraidFamilies
from analysis.pa_analyzer import PAAnalyzer, PAReport
from braid.braid_word import BraidWord
from param.analysis_parameters import AnalysisParameters
from param.config_enums import FamilyKind, PAStatus
from spectral.polynomial import Polynomials
from util.errors import DynnikovError

logger = logging.getLogger(__name__)

LAMBDA_TOLERANCE = 1e-9
MATRIX_TOLERANCE = 1e-8


@dataclass(frozen=True)
class FamilyVerification:
    kind: FamilyKind
    m: Optional[int]
    n: int
    word: BraidWord
    report: PAReport
    closed_form_available: bool
    polynomial: Optional[tuple[int, ...]] = None
    lam_root: Optional[float] = None
    lambda_error: Optional[float] = None
    eigenvector_angle: Optional[float] = None
    matrix_residuals: tuple[float, ...] = ()

    @property
    def consistent(self) -> bool:
        if self.report.status != PAStatus.PSEUDO_ANOSOV:
            return False
        if not self.closed_form_available:
            return True
        return (
            self.lambda_error is not None
            and self.lambda_error <= LAMBDA_TOLERANCE
            and all(r <= MATRIX_TOLERANCE for r in self.matrix_residuals)
        )

    def to_json(self) -> dict:
        return {
            "kind": str(self.kind),
            "m": self.m,
            "n": self.n,
            "word": self.word.to_json(),
            "closed_form_available": self.closed_form_available,
            "consistent": self.consistent,
            "polynomial": None if self.polynomial is None else list(self.polynomial),
            "lambda_root": self.lam_root,
            "lambda_pipeline": self.report.lam,
            "lambda_error": self.lambda_error,
            "eigenvector_angle": self.eigenvector_angle,
            "matrix_residuals": list(self.matrix_residuals),
            "report": self.report.to_json(),
        }


def vector_angle(u: np.ndarray, w: np.ndarray) -> float:
    # chord form stays accurate for nearly parallel vectors
    u = u / np.linalg.norm(u)
    w = w / np.linalg.norm(w)
    return 2.0 * math.asin(min(1.0, float(np.linalg.norm(u - w)) / 2.0))


class FamilyVerifier(ABC):
    @staticmethod
    def verify_family(
        kind: FamilyKind, m: Optional[int], n: int, params: Optional[AnalysisParameters] = None
    ) -> FamilyVerification:
        word = BraidFamilies.family_word(kind, m, n)
        label = str(kind) + "(" + ("" if m is None or kind == FamilyKind.TAU else str(m) + ",") + str(n) + ")"
        try:
            report = PAAnalyzer.analyze_pa(word, params)
        except DynnikovError as e:
            raise DynnikovError("verify " + label + ": analysis failed: " + str(e)) from e

        available = BraidFamilies.closed_form_available(kind, m, n)
        if not available:
            logger.info("%s: closed form not available, pipeline result only", label)
            return FamilyVerification(kind, m, n, word, report, False)

        try:
            coeffs = BraidFamilies.family_polynomial(kind, m, n)
            lam_root = Polynomials.largest_root(coeffs, 1.0)
            closed = BraidFamilies.family_eigenvector(kind, m, n, lam_root)
        except DynnikovError as e:
            raise DynnikovError("verify " + label + ": closed form failed: " + str(e)) from e

        if report.status != PAStatus.PSEUDO_ANOSOV:
            logger.warning("%s: pipeline reported %s", label, report.status)
            return FamilyVerification(kind, m, n, word, report, True, tuple(coeffs), lam_root)

        c = np.asarray(closed.as_vector(), dtype=float)
        v = np.asarray(report.eigenvector.as_vector(), dtype=float)
        residuals = tuple(
            float(
                np.max(np.abs(np.asarray(d.matrix, dtype=float) @ c - lam_root * c))
                / (lam_root * np.max(np.abs(c)))
            )
            for d in report.matrices
        )
        return FamilyVerification(
            kind,
            m,
            n,
            word,
            report,
            True,
            tuple(coeffs),
            lam_root,
            abs(report.lam - lam_root),
            vector_angle(v, c),
            residuals,
        )
