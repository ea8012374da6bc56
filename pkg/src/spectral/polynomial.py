#!/usr/bin/python
from abc import ABC
from typing import Sequence

import numpy as np
from scipy.optimize import bisect

from util.errors import RootIsolationError

# coefficients are listed highest degree first, as numpy.polyval expects


class Polynomials(ABC):
    ROOT_XTOL = 1e-12

    @staticmethod
    def evaluate_polynomial(coeffs: Sequence[int], x: float) -> float:
        return float(np.polyval(np.asarray(coeffs, dtype=float), x))

    @staticmethod
    def polynomial_scale(coeffs: Sequence[int], x: float) -> float:
        # size of the terms being cancelled at x
        degree = len(coeffs) - 1
        return float(sum(abs(c) * abs(x) ** (degree - i) for i, c in enumerate(coeffs)))

    @staticmethod
    def cauchy_bound(coeffs: Sequence[int]) -> float:
        lead = abs(coeffs[0])
        return 1.0 + max(abs(c) for c in coeffs[1:]) / lead

    @staticmethod
    def largest_root(coeffs: Sequence[int], low: float = 1.0) -> float:
        coeffs = Polynomials._strip(coeffs)
        if len(coeffs) < 2:
            raise RootIsolationError("Constant polynomial has no roots")

        lo = low + 1e-9 * max(1.0, abs(low))
        hi = max(Polynomials.cauchy_bound(coeffs), lo + 1.0)

        f_lo = Polynomials.evaluate_polynomial(coeffs, lo)
        f_hi = Polynomials.evaluate_polynomial(coeffs, hi)
        if f_lo == 0.0:
            return lo
        if f_lo * f_hi > 0:
            raise RootIsolationError(
                "No sign change of "
                + Polynomials.describe(coeffs)
                + " on ["
                + format(lo, ".12g")
                + ", "
                + format(hi, ".12g")
                + "]"
            )
        return float(
            bisect(
                lambda x: Polynomials.evaluate_polynomial(coeffs, x),
                lo,
                hi,
                xtol=Polynomials.ROOT_XTOL,
                rtol=4 * np.finfo(float).eps,
                maxiter=500,
            )
        )

    @staticmethod
    def describe(coeffs: Sequence[int]) -> str:
        degree = len(coeffs) - 1
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            power = degree - i
            terms.append(str(c) + ("x^" + str(power) if power > 1 else "x" if power == 1 else ""))
        return " + ".join(terms) if terms else "0"

    @staticmethod
    def _strip(coeffs: Sequence[int]) -> list:
        coeffs = list(coeffs)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        return coeffs
