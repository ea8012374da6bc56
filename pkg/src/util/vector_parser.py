#!/usr/bin/python
from abc import ABC

from coords.coordinates import DynnikovCoords, Scalar, TriangleCoords


class VectorParser(ABC):
    """Shell syntax for coordinate pairs: "x1,x2,...;y1,y2,..." or one flat list."""

    @staticmethod
    def parse_pair(text: str, sizes: tuple[int, int] | None = None) -> tuple[list[Scalar], list[Scalar]]:
        parts = text.split(";")
        if len(parts) == 1 and sizes is not None:
            # flat form "x1,...,xk,y1,...,ym" with (k, m) = sizes
            flat = VectorParser._parse_block(parts[0])
            if len(flat) != sum(sizes):
                raise ValueError(
                    "expected " + str(sum(sizes)) + " entries or two blocks separated by ';', got '" + text + "'"
                )
            blocks = [flat[: sizes[0]], flat[sizes[0] :]]
        elif len(parts) == 2:
            blocks = [VectorParser._parse_block(p) for p in parts]
        else:
            raise ValueError("expected two blocks separated by ';', got '" + text + "'")
        values = blocks[0] + blocks[1]
        # one real entry makes the whole vector real
        if any(isinstance(v, float) for v in values):
            blocks = [[float(v) for v in block] for block in blocks]
        return (blocks[0], blocks[1])

    @staticmethod
    def parse_dynnikov(text: str, n: int) -> DynnikovCoords:
        (a, b) = VectorParser.parse_pair(text, (n - 2, n - 2))
        return DynnikovCoords(n, tuple(a), tuple(b))

    @staticmethod
    def parse_triangle(text: str, n: int) -> TriangleCoords:
        (alpha, beta) = VectorParser.parse_pair(text, (2 * n - 4, n - 1))
        return TriangleCoords(n, tuple(alpha), tuple(beta))

    @staticmethod
    def format_block(values) -> str:
        return ",".join(VectorParser.format_scalar(v) for v in values)

    @staticmethod
    def format_scalar(v: Scalar) -> str:
        return str(v) if isinstance(v, int) else format(v, ".10g")

    @staticmethod
    def _parse_block(block: str) -> list[Scalar]:
        tokens = [t.strip() for t in block.split(",")]
        if any(t == "" for t in tokens):
            raise ValueError("empty entry in '" + block + "'")
        return [VectorParser._parse_scalar(t) for t in tokens]

    @staticmethod
    def _parse_scalar(token: str) -> Scalar:
        try:
            if any(c in token for c in ".eE"):
                return float(token)
            return int(token)
        except ValueError:
            raise ValueError("not a number: '" + token + "'")
