#!/usr/bin/python
from abc import ABC
from dataclasses import dataclass, field

from coords.coordinates import TriangleCoords


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    region: int | None = None
    arcs: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "detail": self.detail,
            "region": self.region,
            "arcs": list(self.arcs),
        }


@dataclass(frozen=True)
class ValidityReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return len(self.violations) == 0

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(v.detail for v in self.violations)

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


def _alpha(i: int) -> str:
    return "α" + str(i)


def _beta(i: int) -> str:
    return "β" + str(i)


class TriangleValidator(ABC):
    DEFAULT_TOLERANCE = 1e-9

    @staticmethod
    def validate_triangle(tc: TriangleCoords, tolerance: float = DEFAULT_TOLERANCE) -> ValidityReport:
        if tc.is_zero():
            return ValidityReport(
                (Violation("empty", "empty lamination: all intersection numbers are zero"),)
            )

        # exact inputs are compared exactly, reals with slack relative to the largest arc
        slack = 0 if tc.exact else tolerance * max(abs(v) for v in tc.alpha + tc.beta)
        violations: list[Violation] = []
        violations.extend(TriangleValidator._check_nonnegative(tc, slack))
        if tc.exact:
            violations.extend(TriangleValidator._check_parity(tc))
        violations.extend(TriangleValidator._check_triangles(tc, slack))
        if not violations:
            violations.extend(TriangleValidator._check_regions(tc, slack))
        return ValidityReport(tuple(violations))

    @staticmethod
    def _check_nonnegative(tc: TriangleCoords, slack) -> list[Violation]:
        found = []
        for i in range(1, 2 * tc.n - 3):
            if tc.alpha_at(i) < -slack:
                found.append(
                    Violation("negative", _alpha(i) + " < 0", arcs=("alpha" + str(i),))
                )
        for i in range(1, tc.n):
            if tc.beta_at(i) < -slack:
                found.append(Violation("negative", _beta(i) + " < 0", arcs=("beta" + str(i),)))
        return found

    @staticmethod
    def _check_parity(tc: TriangleCoords) -> list[Violation]:
        found = []
        for i in (1, tc.n - 1):
            if tc.beta_at(i) % 2 != 0:
                found.append(
                    Violation(
                        "parity",
                        _beta(i) + " is odd, end region loop count " + _beta(i) + "/2 is not whole",
                        arcs=("beta" + str(i),),
                    )
                )
        for i in range(1, tc.n - 1):
            if (tc.beta_at(i) - tc.beta_at(i + 1)) % 2 != 0:
                found.append(
                    Violation(
                        "parity",
                        _beta(i) + "−" + _beta(i + 1) + " is odd",
                        region=i,
                        arcs=("beta" + str(i), "beta" + str(i + 1)),
                    )
                )
            # a closed curve system crosses the boundary of each triangle an even number of times
            for j in (i, i + 1):
                total = tc.alpha_at(2 * i - 1) + tc.alpha_at(2 * i) + tc.beta_at(j)
                if total % 2 != 0:
                    found.append(
                        Violation(
                            "parity",
                            _alpha(2 * i - 1) + "+" + _alpha(2 * i) + "+" + _beta(j) + " is odd",
                            region=i,
                            arcs=("alpha" + str(2 * i - 1), "alpha" + str(2 * i), "beta" + str(j)),
                        )
                    )
        return found

    @staticmethod
    def _check_triangles(tc: TriangleCoords, slack) -> list[Violation]:
        # S_i is cut by alpha_{2i-1} (above puncture i+1) and alpha_{2i} (below it)
        # into two triangles, closed off by beta_i on the left and beta_{i+1} on the right
        found = []
        for i in range(1, tc.n - 1):
            for j in (i, i + 1):
                sides = [
                    ("alpha" + str(2 * i - 1), _alpha(2 * i - 1), tc.alpha_at(2 * i - 1)),
                    ("alpha" + str(2 * i), _alpha(2 * i), tc.alpha_at(2 * i)),
                    ("beta" + str(j), _beta(j), tc.beta_at(j)),
                ]
                for k in range(3):
                    others = [sides[m] for m in range(3) if m != k]
                    if sides[k][2] > others[0][2] + others[1][2] + slack:
                        found.append(
                            Violation(
                                "triangle",
                                sides[k][1] + " > " + others[0][1] + "+" + others[1][1],
                                region=i,
                                arcs=(sides[k][0], others[0][0], others[1][0]),
                            )
                        )
        return found

    @staticmethod
    def _check_regions(tc: TriangleCoords, slack) -> list[Violation]:
        # doubled counts keep the integer case exact
        found = []
        smallest = None
        for i in range(1, tc.n - 1):
            loops2 = abs(tc.beta_at(i) - tc.beta_at(i + 1))
            above2 = 2 * tc.alpha_at(2 * i - 1) - loops2
            below2 = 2 * tc.alpha_at(2 * i) - loops2
            for name, count in (("above", above2), ("below", below2)):
                if count < -2 * slack:
                    found.append(
                        Violation(
                            "region",
                            "negative " + name + " component count in S" + str(i),
                            region=i,
                        )
                    )
            m = min(above2, below2)
            smallest = m if smallest is None else min(smallest, m)
        if not found and smallest > 2 * slack:
            found.append(
                Violation(
                    "boundary-parallel",
                    "every region has above and below components, so a component is boundary parallel",
                )
            )
        return found
