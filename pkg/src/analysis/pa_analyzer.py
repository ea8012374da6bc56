#!/usr/bin/python
import logging
import math
from abc import ABC
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from action.coordinate_action import CoordinateAction
from action.signature import LinearizedAction
from analysis.regions import RegionGeometry
from braid.braid_word import BraidWord
from coords.coordinates import DynnikovCoords, TriangleCoords
from coords.inversion import CoordinateConverter
from param.analysis_parameters import AnalysisParameters
from param.config_enums import PAStatus
from spectral.linear_algebra import LinearAlgebra
from util.errors import SpectralError

logger = logging.getLogger(__name__)

START_RANGE = 100
# closure and tightness are judged with slack relative to |h|_1 |x|_inf
CLOSURE_TOLERANCE = 1e-7
FIXED_POINT_TOLERANCE = 1e-8

EXPANDING = "expanding"
NON_EXPANDING = "non-expanding"
UNRESOLVED = "unresolved"
NOT_STABILIZED = "not-stabilized"


@dataclass(frozen=True)
class RestartOutcome:
    index: int
    iterations: int
    stabilized: bool
    outcome: str
    tie_nodes: int = 0
    lam: Optional[float] = None
    action: Optional[LinearizedAction] = None

    def to_json(self) -> dict:
        return {
            "restart": self.index,
            "iterations": self.iterations,
            "stabilized": self.stabilized,
            "outcome": self.outcome,
            "tie_nodes": self.tie_nodes,
            "lambda": self.lam,
        }


@dataclass(frozen=True)
class PAReport:
    word: BraidWord
    status: PAStatus
    lam: Optional[float] = None
    eigenvector: Optional[DynnikovCoords] = None
    matrices: tuple[LinearizedAction, ...] = ()
    diagnostics: dict = field(default_factory=dict)

    @property
    def entropy(self) -> Optional[float]:
        return None if self.lam is None else math.log(self.lam)

    @property
    def arc_measures(self) -> Optional[TriangleCoords]:
        if self.eigenvector is None:
            return None
        return CoordinateConverter.triangle_from_dynnikov(self.eigenvector)

    def to_json(self) -> dict:
        arcs = self.arc_measures
        return {
            "word": self.word.to_json(),
            "status": str(self.status),
            "lambda": self.lam,
            "entropy": self.entropy,
            "eigenvector": None if self.eigenvector is None else self.eigenvector.to_json(),
            "arc_measures": None if arcs is None else arcs.to_json(),
            "matrices": [m.to_json() for m in self.matrices],
            "diagnostics": self.diagnostics,
        }


class PAAnalyzer(ABC):
    @staticmethod
    def analyze_pa(w: BraidWord, params: Optional[AnalysisParameters] = None) -> PAReport:
        params = params or AnalysisParameters()
        rng = np.random.default_rng(params.seed)
        outcomes = []
        for k in range(params.restarts):
            outcome = PAAnalyzer._restart(w, params, PAAnalyzer._random_start(w.n, rng), k)
            logger.debug(
                "restart %d: %s after %d iterations (lambda=%s)",
                k,
                outcome.outcome,
                outcome.iterations,
                outcome.lam,
            )
            outcomes.append(outcome)

        diagnostics = {"restarts": [o.to_json() for o in outcomes]}
        successes = [o for o in outcomes if o.outcome == EXPANDING]
        if not successes:
            if outcomes and all(o.outcome == NON_EXPANDING for o in outcomes):
                status = PAStatus.NO_EXPANSION
            else:
                status = PAStatus.INCONCLUSIVE
            logger.info("%s: %s", w, status)
            return PAReport(w, status, diagnostics=diagnostics)

        lams = [o.lam for o in successes]
        if max(lams) - min(lams) > 1e-6 * max(lams):
            logger.warning("restarts disagree on lambda for %s: %s", w, lams)

        # smallest matrix over all restarts, so the result does not depend on which restarts succeeded
        base = min((o.action for o in successes), key=lambda a: a.matrix)
        return PAAnalyzer._collect(w, params, base, diagnostics)

    @staticmethod
    def _random_start(n: int, rng: np.random.Generator) -> DynnikovCoords:
        while True:
            v = rng.integers(-START_RANGE, START_RANGE + 1, size=2 * n - 4)
            if np.any(v != 0):
                return DynnikovCoords.from_vector(n, (int(c) for c in v)).normalized()

    @staticmethod
    def _restart(w: BraidWord, params: AnalysisParameters, x: DynnikovCoords, index: int) -> RestartOutcome:
        previous = None
        run = 0
        probe = x
        trace = None
        iterations = 0
        while run < params.stable_window:
            if iterations >= params.max_iter:
                return RestartOutcome(index, iterations, False, NOT_STABILIZED)
            trace = CoordinateAction.trace_word(x, w, params.tie_tolerance)
            iterations += 1
            # tie nodes are wildcards, iterates sitting on a region wall still settle
            key = trace.signature.masked(trace.ties)
            run = run + 1 if key == previous else 1
            previous = key
            probe = x
            x = trace.output.normalized()

        v_probe = np.asarray(probe.as_vector(), dtype=float)
        saw_expanding = False
        saw_flat = False
        for variant in RegionGeometry.tie_variants(trace.signature, trace.ties, params.tie_cap):
            action = CoordinateAction.linearize(w, variant)
            if not action.contains(v_probe, CLOSURE_TOLERANCE):
                continue
            if not RegionGeometry.has_interior(action, v_probe, CLOSURE_TOLERANCE):
                continue
            if LinearAlgebra.spectral_radius(action.matrix) <= LinearAlgebra.NO_EXPANSION_RADIUS:
                saw_flat = True
                continue
            saw_expanding = True
            try:
                result = LinearAlgebra.dominant_eigenpair(
                    action.matrix, tol=params.eigen_tolerance, start=v_probe
                )
            except SpectralError as e:
                logger.debug("restart %d: variant skipped, %s", index, e)
                continue
            if not result.expanding:
                continue
            if RegionGeometry.orient(action, result.vector, CLOSURE_TOLERANCE) is None:
                continue
            return RestartOutcome(
                index, iterations, True, EXPANDING, len(trace.ties), result.lam, action
            )

        outcome = NON_EXPANDING if saw_flat and not saw_expanding else UNRESOLVED
        return RestartOutcome(index, iterations, True, outcome, len(trace.ties))

    @staticmethod
    def _collect(
        w: BraidWord, params: AnalysisParameters, base: LinearizedAction, diagnostics: dict
    ) -> PAReport:
        first = LinearAlgebra.dominant_eigenpair(base.matrix, tol=params.eigen_tolerance)
        v0 = RegionGeometry.orient(base, first.vector, CLOSURE_TOLERANCE)
        if v0 is None:
            logger.warning("eigenvector of %s left its own region", w)
            return PAReport(w, PAStatus.INCONCLUSIVE, diagnostics=diagnostics)

        dc0 = DynnikovCoords.from_vector(w.n, (float(c) for c in v0))
        (sig0, ties0) = CoordinateAction.signature_at(dc0, w, params.tie_tolerance)
        total = RegionGeometry.variant_count(sig0, ties0)
        capped = total > params.tie_cap
        if capped:
            logger.warning(
                "%s: %d tie variants at the eigenvector, only %d examined", w, total, params.tie_cap
            )

        kept: dict[tuple, LinearizedAction] = {}
        examined = 0
        for variant in RegionGeometry.tie_variants(sig0, ties0, params.tie_cap):
            examined += 1
            action = CoordinateAction.linearize(w, variant)
            if action.matrix in kept:
                continue
            if not action.contains(v0, CLOSURE_TOLERANCE):
                continue
            if not RegionGeometry.has_interior(action, v0, CLOSURE_TOLERANCE):
                continue
            if PAAnalyzer._fixed_point_residual(action, first.lam, v0) > FIXED_POINT_TOLERANCE:
                continue
            kept[action.matrix] = action.reduced()
        if base.matrix not in kept:
            kept[base.matrix] = base.reduced()
        matrices = tuple(sorted(kept.values(), key=lambda a: a.matrix))

        final = LinearAlgebra.dominant_eigenpair(matrices[0].matrix, tol=params.eigen_tolerance)
        v = RegionGeometry.orient(matrices[0], final.vector, CLOSURE_TOLERANCE)
        if v is None:
            v = v0
        residuals = [PAAnalyzer._fixed_point_residual(m, final.lam, v) for m in matrices]
        logger.debug("%s: lambda=%.12f, %d matrices from %d tie nodes", w, final.lam, len(matrices), len(ties0))

        diagnostics = dict(diagnostics)
        diagnostics.update(
            {
                "tie_nodes": len(ties0),
                "variants_examined": examined,
                "tie_cap": params.tie_cap,
                "tie_cap_exceeded": capped,
                "eigen_residual": final.residual,
                "eigen_iterations": final.iterations,
                "max_matrix_residual": max(residuals),
            }
        )
        return PAReport(
            w,
            PAStatus.PSEUDO_ANOSOV,
            final.lam,
            DynnikovCoords.from_vector(w.n, (float(c) for c in v)),
            matrices,
            diagnostics,
        )

    @staticmethod
    def _fixed_point_residual(action: LinearizedAction, lam: float, v: np.ndarray) -> float:
        m = np.asarray(action.matrix, dtype=float)
        return float(np.max(np.abs(m @ v - lam * v)) / (lam * np.max(np.abs(v))))
