#!/usr/bin/python
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class FamilyKind(StrEnum):
    BETA = "beta"
    SIGMA = "sigma"
    TAU = "tau"


class PAStatus(StrEnum):
    PSEUDO_ANOSOV = "pseudo-anosov-detected"
    NO_EXPANSION = "no-expansion-detected"
    INCONCLUSIVE = "inconclusive"


class CoordsCommand(StrEnum):
    INVERT = "invert"
    FORWARD = "forward"
    COUNTS = "counts"
    VALIDATE = "validate"


class OutputProviderType(StrEnum):
    STDOUT = "stdout"
    LOCAL = "local"


class GeneratorCase(StrEnum):
    FIRST = "first"
    FIRST_INVERSE = "first_inv"
    MIDDLE = "mid"
    MIDDLE_INVERSE = "mid_inv"
    LAST = "last"
    LAST_INVERSE = "last_inv"
