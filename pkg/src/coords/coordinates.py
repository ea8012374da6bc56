#!/usr/bin/python
import math
from dataclasses import dataclass
from numbers import Integral, Real
from typing import Iterable, Union

from util.errors import CoordinateError

Scalar = Union[int, float]


def _normalize_scalars(values: Iterable, what: str) -> tuple[tuple[Scalar, ...], bool]:
    # exact = arbitrary precision ints, otherwise floats; never mixed
    out = []
    kinds = set()
    for v in values:
        if isinstance(v, bool):
            raise CoordinateError(what + " entries must be numbers, got a bool")
        if isinstance(v, Integral):
            out.append(int(v))
            kinds.add("int")
        elif isinstance(v, Real):
            f = float(v)
            if not math.isfinite(f):
                raise CoordinateError(what + " entries must be finite, got " + str(v))
            out.append(f)
            kinds.add("float")
        else:
            raise CoordinateError(what + " entries must be numbers, got " + repr(v))
    if len(kinds) > 1:
        raise CoordinateError(
            what + " mixes exact integers and reals; convert explicitly with as_real()"
        )
    return (tuple(out), kinds != {"float"})


@dataclass(frozen=True)
class DynnikovCoords:
    n: int
    a: tuple[Scalar, ...]
    b: tuple[Scalar, ...]

    def __post_init__(self):
        if self.n < 3:
            raise CoordinateError("Dynnikov coordinates need n >= 3, got " + str(self.n))
        (values, exact) = _normalize_scalars(tuple(self.a) + tuple(self.b), "Dynnikov")
        if len(self.a) != self.n - 2 or len(self.b) != self.n - 2:
            raise CoordinateError(
                "Expected "
                + str(self.n - 2)
                + " a and b entries for n="
                + str(self.n)
                + ", got "
                + str(len(self.a))
                + " and "
                + str(len(self.b))
            )
        if all(v == 0 for v in values):
            raise CoordinateError("Dynnikov coordinates must not all be zero")
        object.__setattr__(self, "a", values[: self.n - 2])
        object.__setattr__(self, "b", values[self.n - 2 :])
        object.__setattr__(self, "_exact", exact)

    @property
    def exact(self) -> bool:
        return self._exact

    @property
    def dimension(self) -> int:
        return 2 * self.n - 4

    def as_vector(self) -> tuple[Scalar, ...]:
        return self.a + self.b

    @staticmethod
    def from_vector(n: int, v: Iterable[Scalar]) -> "DynnikovCoords":
        v = tuple(v)
        if len(v) != 2 * n - 4:
            raise CoordinateError(
                "Expected " + str(2 * n - 4) + " coordinates for n=" + str(n) + ", got " + str(len(v))
            )
        return DynnikovCoords(n, v[: n - 2], v[n - 2 :])

    def as_real(self) -> "DynnikovCoords":
        return DynnikovCoords.from_vector(self.n, (float(x) for x in self.as_vector()))

    def sup_norm(self) -> Scalar:
        return max(abs(x) for x in self.as_vector())

    def l1_norm(self) -> Scalar:
        return sum(abs(x) for x in self.as_vector())

    def scaled(self, k: Scalar) -> "DynnikovCoords":
        if self.exact and isinstance(k, Integral):
            return DynnikovCoords.from_vector(self.n, (int(k) * x for x in self.as_vector()))
        return DynnikovCoords.from_vector(self.n, (float(k) * x for x in self.as_vector()))

    def normalized(self) -> "DynnikovCoords":
        s = float(self.sup_norm())
        return DynnikovCoords.from_vector(self.n, (float(x) / s for x in self.as_vector()))

    def to_json(self) -> dict:
        return {"n": self.n, "a": list(self.a), "b": list(self.b)}

    @staticmethod
    def from_json(raw: dict) -> "DynnikovCoords":
        try:
            return DynnikovCoords(int(raw["n"]), tuple(raw["a"]), tuple(raw["b"]))
        except KeyError as e:
            raise CoordinateError("Dynnikov JSON is missing " + str(e))


@dataclass(frozen=True)
class TriangleCoords:
    n: int
    alpha: tuple[Scalar, ...]
    beta: tuple[Scalar, ...]

    def __post_init__(self):
        if self.n < 3:
            raise CoordinateError("Triangle coordinates need n >= 3, got " + str(self.n))
        if len(self.alpha) != 2 * self.n - 4 or len(self.beta) != self.n - 1:
            raise CoordinateError(
                "Expected "
                + str(2 * self.n - 4)
                + " alpha and "
                + str(self.n - 1)
                + " beta entries for n="
                + str(self.n)
                + ", got "
                + str(len(self.alpha))
                + " and "
                + str(len(self.beta))
            )
        (values, exact) = _normalize_scalars(tuple(self.alpha) + tuple(self.beta), "Triangle")
        object.__setattr__(self, "alpha", values[: 2 * self.n - 4])
        object.__setattr__(self, "beta", values[2 * self.n - 4 :])
        object.__setattr__(self, "_exact", exact)

    @property
    def exact(self) -> bool:
        return self._exact

    # 1-based accessors matching the arc labels
    def alpha_at(self, i: int) -> Scalar:
        return self.alpha[i - 1]

    def beta_at(self, i: int) -> Scalar:
        return self.beta[i - 1]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.alpha + self.beta)

    def to_json(self) -> dict:
        return {"n": self.n, "alpha": list(self.alpha), "beta": list(self.beta)}

    @staticmethod
    def from_json(raw: dict) -> "TriangleCoords":
        try:
            return TriangleCoords(int(raw["n"]), tuple(raw["alpha"]), tuple(raw["beta"]))
        except KeyError as e:
            raise CoordinateError("Triangle JSON is missing " + str(e))


@dataclass(frozen=True)
class RegionCount:
    region: int
    loops: int
    above: int
    below: int

    @property
    def loop_side(self) -> str:
        if self.loops > 0:
            return "right"
        if self.loops < 0:
            return "left"
        return "none"

    def to_json(self) -> dict:
        return {
            "region": self.region,
            "loops": abs(self.loops),
            "loop_side": self.loop_side,
            "above": self.above,
            "below": self.below,
        }


@dataclass(frozen=True)
class RegionComponentCounts:
    n: int
    left_end_loops: int
    right_end_loops: int
    regions: tuple[RegionCount, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "left_end_loops": self.left_end_loops,
            "right_end_loops": self.right_end_loops,
            "regions": [r.to_json() for r in self.regions],
        }
