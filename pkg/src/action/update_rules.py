#!/usr/bin/python
from abc import ABC

from action.evaluators import MaxEvaluator
from param.config_enums import GeneratorCase


class UpdateRules(ABC):
    """Action of one Artin generator on Dynnikov coordinates.

    Max-plus brackets are written out as max and +, with pos(x) = max(0, x).
    Three-way maxima are two binary nodes associated left to right. Every
    case evaluates a fixed number of nodes, in a fixed order, whatever the
    branches taken.
    """

    @staticmethod
    def case_of(letter: int, n: int) -> GeneratorCase:
        i = abs(letter)
        if i == 1:
            return GeneratorCase.FIRST if letter > 0 else GeneratorCase.FIRST_INVERSE
        if i == n - 1:
            return GeneratorCase.LAST if letter > 0 else GeneratorCase.LAST_INVERSE
        return GeneratorCase.MIDDLE if letter > 0 else GeneratorCase.MIDDLE_INVERSE

    @staticmethod
    def apply(ev: MaxEvaluator, a: list, b: list, letter: int, n: int) -> None:
        # a and b are updated in place; a[k] holds a_{k+1}
        case = UpdateRules.case_of(letter, n)
        i = abs(letter)
        if case == GeneratorCase.FIRST:
            (a[0], b[0]) = UpdateRules._first(ev, a[0], b[0])
        elif case == GeneratorCase.FIRST_INVERSE:
            (a[0], b[0]) = UpdateRules._first_inverse(ev, a[0], b[0])
        elif case == GeneratorCase.LAST:
            (a[n - 3], b[n - 3]) = UpdateRules._last(ev, a[n - 3], b[n - 3])
        elif case == GeneratorCase.LAST_INVERSE:
            (a[n - 3], b[n - 3]) = UpdateRules._last_inverse(ev, a[n - 3], b[n - 3])
        elif case == GeneratorCase.MIDDLE:
            (a[i - 2], b[i - 2], a[i - 1], b[i - 1]) = UpdateRules._middle(
                ev, a[i - 2], b[i - 2], a[i - 1], b[i - 1]
            )
        else:
            (a[i - 2], b[i - 2], a[i - 1], b[i - 1]) = UpdateRules._middle_inverse(
                ev, a[i - 2], b[i - 2], a[i - 1], b[i - 1]
            )

    @staticmethod
    def _first(ev, a1, b1):
        top = ev.max(ev.max(a1, ev.zero), b1)
        pb = ev.max(ev.zero, b1)
        return (a1 + b1 - top, pb - a1)

    @staticmethod
    def _first_inverse(ev, a1, b1):
        pb = ev.max(ev.zero, b1)
        s = a1 + pb
        return (ev.max(ev.zero, s) - b1, s)

    @staticmethod
    def _middle(ev, a1, b1, a2, b2):
        # a1, b1 = a_{i-1}, b_{i-1} and a2, b2 = a_i, b_i
        pb1 = ev.max(ev.zero, b1)
        pb2 = ev.max(ev.zero, b2)
        new_a1 = ev.max(a1 + pb1, a2 + b1)
        m = ev.max(a1 + pb1 + pb2, a2 + b1)
        w = ev.max(a1 + pb2, a2)
        return (new_a1, a2 + b1 + b2 - m, a1 + a2 + b2 - w, m - a2)

    @staticmethod
    def _middle_inverse(ev, a1, b1, a2, b2):
        pb1 = ev.max(ev.zero, b1)
        pb2 = ev.max(ev.zero, b2)
        u = ev.max(a1 + b1, a2 + pb1)
        m = ev.max(a1 + b1, a2 + pb1 + pb2)
        w = ev.max(a1, a2 + pb2)
        return (a1 + a2 - u, a1 + b1 + b2 - m, w - b2, m - a1)

    @staticmethod
    def _last(ev, a, b):
        pb = ev.max(ev.zero, b)
        return (ev.max(a + pb, b), b - a - pb)

    @staticmethod
    def _last_inverse(ev, a, b):
        top = ev.max(ev.max(a + b, ev.zero), b)
        pb = ev.max(ev.zero, b)
        return (a - top, a + b - pb)
