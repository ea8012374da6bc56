#!/usr/bin/python
from abc import ABC

from coords.coordinates import (
    DynnikovCoords,
    RegionComponentCounts,
    RegionCount,
    TriangleCoords,
)
from coords.validation import TriangleValidator
from util.errors import CoordinateError


class CoordinateConverter(ABC):
    @staticmethod
    def dynnikov_from_triangle(tc: TriangleCoords) -> DynnikovCoords:
        report = TriangleValidator.validate_triangle(tc)
        if not report.ok:
            raise CoordinateError("Invalid triangle coordinates: " + report.describe())

        n = tc.n
        if tc.exact:
            # parity was checked by the validator, halving is exact
            a = [(tc.alpha_at(2 * i) - tc.alpha_at(2 * i - 1)) // 2 for i in range(1, n - 1)]
            b = [(tc.beta_at(i) - tc.beta_at(i + 1)) // 2 for i in range(1, n - 1)]
        else:
            a = [(tc.alpha_at(2 * i) - tc.alpha_at(2 * i - 1)) / 2 for i in range(1, n - 1)]
            b = [(tc.beta_at(i) - tc.beta_at(i + 1)) / 2 for i in range(1, n - 1)]

        if all(v == 0 for v in a + b):
            raise CoordinateError("Triangle coordinates describe the empty lamination")
        return DynnikovCoords(n, tuple(a), tuple(b))

    @staticmethod
    def triangle_from_dynnikov(dc: DynnikovCoords) -> TriangleCoords:
        n = dc.n
        a = dc.a
        b = dc.b

        # prefix[i - 1] = b_1 + ... + b_{i-1}, for i = 1..n-1
        zero = 0 if dc.exact else 0.0
        prefix = [zero]
        for j in range(n - 2):
            prefix.append(prefix[-1] + b[j])

        # half of beta_1 is attained at a region with no boundary parallel strands
        half_beta_1 = max(abs(a[k]) + max(b[k], zero) + prefix[k] for k in range(n - 2))
        half_beta = [half_beta_1 - prefix[i] for i in range(n - 1)]

        alpha = []
        for i in range(1, 2 * n - 3):
            c = (i + 1) // 2
            sign = -1 if i % 2 == 1 else 1
            # sign of b_c picks the beta arc; both branches agree when b_c = 0
            hb = half_beta[c - 1] if b[c - 1] >= 0 else half_beta[c]
            alpha.append(sign * a[c - 1] + hb)

        return TriangleCoords(n, tuple(alpha), tuple(2 * hb for hb in half_beta))

    @staticmethod
    def component_counts(dc: DynnikovCoords) -> RegionComponentCounts:
        if not dc.exact:
            raise CoordinateError("Component counts need integer Dynnikov coordinates")
        tc = CoordinateConverter.triangle_from_dynnikov(dc)
        regions = []
        for i in range(1, dc.n - 1):
            loops = dc.b[i - 1]
            regions.append(
                RegionCount(
                    region=i,
                    loops=loops,
                    above=tc.alpha_at(2 * i - 1) - abs(loops),
                    below=tc.alpha_at(2 * i) - abs(loops),
                )
            )
        return RegionComponentCounts(
            n=dc.n,
            left_end_loops=tc.beta_at(1) // 2,
            right_end_loops=tc.beta_at(dc.n - 1) // 2,
            regions=tuple(regions),
        )
