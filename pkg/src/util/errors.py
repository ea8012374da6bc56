#!/usr/bin/python


class DynnikovError(Exception):
    pass


class BraidWordError(DynnikovError):
    pass


class CoordinateError(DynnikovError):
    pass


class SignatureError(DynnikovError):
    pass


class SpectralError(DynnikovError):
    def __init__(self, message: str, estimate: float | None = None):
        super().__init__(message)
        self.estimate = estimate


class RootIsolationError(DynnikovError):
    pass


class FamilyParameterError(DynnikovError):
    pass


class ConfigError(DynnikovError):
    pass
