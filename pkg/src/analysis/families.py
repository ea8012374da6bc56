#!/usr/bin/python
from abc import ABC
from typing import Optional

import sympy

from braid.braid_word import BraidWord
from coords.coordinates import DynnikovCoords
from param.config_enums import FamilyKind
from util.errors import FamilyParameterError

_x = sympy.Symbol("x")


class BraidFamilies(ABC):
    """The braid families beta_{m,n}, sigma_{m,n} and tau_n.

    beta_{m,n} and sigma_{m,n} live in B_{m+n+1}; tau_n = beta_{n-2,1}
    lives in B_n and is indexed by n alone.
    """

    @staticmethod
    def strands(kind: FamilyKind, m: Optional[int], n: int) -> int:
        if kind == FamilyKind.TAU:
            return n
        return m + n + 1

    @staticmethod
    def check_parameters(kind: FamilyKind, m: Optional[int], n: int) -> None:
        if kind == FamilyKind.TAU:
            if n is None or n < 3:
                raise FamilyParameterError("tau_n needs n >= 3, got " + str(n))
            return
        if m is None or n is None or m < 1 or n < 1:
            raise FamilyParameterError(
                str(kind) + "_{m,n} needs m, n >= 1, got m=" + str(m) + ", n=" + str(n)
            )

    @staticmethod
    def closed_form_available(kind: FamilyKind, m: Optional[int], n: int) -> bool:
        if kind == FamilyKind.SIGMA:
            return 1 <= m <= n - 2
        return True

    @staticmethod
    def family_word(kind: FamilyKind, m: Optional[int], n: int) -> BraidWord:
        BraidFamilies.check_parameters(kind, m, n)
        if kind == FamilyKind.BETA:
            letters = list(range(1, m + 1)) + [-k for k in range(m + 1, m + n + 1)]
        elif kind == FamilyKind.SIGMA:
            letters = list(range(1, m + 1)) + list(range(m, 0, -1)) + list(range(1, m + n + 1))
        else:
            letters = list(range(1, n - 1)) + [-(n - 1)]
        return BraidWord(BraidFamilies.strands(kind, m, n), tuple(letters))

    @staticmethod
    def tau_polynomial(n: int) -> list[int]:
        if n < 3:
            raise FamilyParameterError("tau_n needs n >= 3, got " + str(n))
        # for n = 3 the (x+1) factor cancels out of the second bracket
        expr = sympy.cancel((_x + 1) ** (n - 4) * (_x**n - 2 * _x ** (n - 1) - 2 * _x + 1))
        return [int(c) for c in sympy.Poly(expr, _x).all_coeffs()]

    @staticmethod
    def family_polynomial(kind: FamilyKind, m: Optional[int], n: int) -> list[int]:
        """Integer coefficients, highest degree first."""
        BraidFamilies.check_parameters(kind, m, n)
        if kind == FamilyKind.TAU:
            return BraidFamilies.tau_polynomial(n)
        if kind == FamilyKind.BETA:
            expr = (_x - 1) * (_x ** (m + n + 1) - 1) - 2 * _x * (_x**m + _x**n)
        else:
            if not BraidFamilies.closed_form_available(kind, m, n):
                raise FamilyParameterError(
                    "sigma_{m,n} polynomial needs 1 <= m <= n-2, got m=" + str(m) + ", n=" + str(n)
                )
            expr = (_x - 1) * (_x ** (m + n + 1) + 1) + 2 * _x * (_x**m - _x**n)
        return [int(c) for c in sympy.Poly(sympy.expand(expr), _x).all_coeffs()]

    @staticmethod
    def family_eigenvector(kind: FamilyKind, m: Optional[int], n: int, r: float) -> DynnikovCoords:
        BraidFamilies.check_parameters(kind, m, n)
        if r <= 1.0:
            raise FamilyParameterError("Dilatation must exceed 1, got " + str(r))
        if kind == FamilyKind.BETA:
            (a, b) = BraidFamilies._beta_vector(m, n, r)
        elif kind == FamilyKind.SIGMA:
            if not BraidFamilies.closed_form_available(kind, m, n):
                raise FamilyParameterError(
                    "sigma_{m,n} closed form needs 1 <= m <= n-2, got m=" + str(m) + ", n=" + str(n)
                )
            (a, b) = BraidFamilies._sigma_vector(m, n, r)
        else:
            (a, b) = BraidFamilies._tau_vector(n, r)
        return DynnikovCoords(BraidFamilies.strands(kind, m, n), tuple(a), tuple(b))

    @staticmethod
    def _beta_vector(m: int, n: int, r: float) -> tuple[list, list]:
        a = []
        b = []
        for i in range(1, m + n):
            if i < m:
                a.append(-r * (r**n + 1) * (r**i - 1))
                b.append(-(r - 1) * (r**n + 1) * r ** (i + 1))
            elif i == m:
                a.append(-(r ** (m + 1) - 1) * (r ** (n + 1) - 1))
                b.append(-(r + 1) * (r ** (m + 1) - 1))
            else:
                a.append(-(r ** (m + 1) - 1) * (r ** (m + n + 1 - i) - 1) * r ** (i - m))
                b.append(-(r - 1) * (r ** (m + 1) - 1) * r ** (i - m))
        return (a, b)

    @staticmethod
    def _sigma_vector(m: int, n: int, r: float) -> tuple[list, list]:
        a = []
        b = []
        for i in range(1, m + n):
            if i < m:
                a.append((r**n - 1) * (r ** (i + 1) - 1) * r)
                b.append((r - 1) * (r**n - 1) * r ** (i + 1))
            else:
                a.append((r ** (m + 1) - 1) * (r ** (m + n - i) - 1) * r ** (i + 1 - m))
                b.append((r - 1) * (r ** (m + 1) - 1) * r ** (i - m))
        return (a, b)

    @staticmethod
    def _tau_vector(n: int, r: float) -> tuple[list, list]:
        a = [-r * (r**j - 1) for j in range(1, n - 2)] + [-(r ** (n - 1) - 1) * (r - 1)]
        b = [-(r ** (j + 1)) * (r - 1) for j in range(1, n - 2)] + [-(r ** (n - 1) - 1)]
        return (a, b)
