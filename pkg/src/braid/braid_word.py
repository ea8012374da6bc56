#!/usr/bin/python
from abc import ABC
from dataclasses import dataclass

from util.errors import BraidWordError


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_n.

    Letters are applied left to right: the leftmost letter acts first on
    coordinates. k > 0 is sigma_k, k < 0 is sigma_|k|^-1.
    """

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.n < 3:
            raise BraidWordError("Braid words need n >= 3, got " + str(self.n))
        if len(self.letters) == 0:
            raise BraidWordError("Braid word must contain at least one letter")
        for letter in self.letters:
            if letter == 0:
                raise BraidWordError("0 is not a generator index")
            if abs(letter) > self.n - 1:
                raise BraidWordError(
                    "Generator "
                    + str(letter)
                    + " out of range for n="
                    + str(self.n)
                    + " (|k| must be <= "
                    + str(self.n - 1)
                    + ")"
                )

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def to_json(self) -> dict:
        return {"n": self.n, "letters": list(self.letters)}


class BraidWordBuilder(ABC):
    @staticmethod
    def parse_word(text: str, n: int, reduce: bool = False) -> BraidWord:
        if text is None or not text.strip():
            raise BraidWordError("Empty braid word")
        letters = []
        for token in text.split():
            try:
                letters.append(int(token))
            except ValueError:
                raise BraidWordError("Invalid generator '" + token + "'")
        return BraidWordBuilder._build(n, letters, reduce)

    @staticmethod
    def from_json(raw: dict | list, n: int | None = None, reduce: bool = False) -> BraidWord:
        if isinstance(raw, dict):
            n = raw.get("n", n)
            raw = raw.get("letters")
        if n is None:
            raise BraidWordError("Braid word JSON needs n")
        if not isinstance(raw, list) or not all(
            isinstance(k, int) and not isinstance(k, bool) for k in raw
        ):
            raise BraidWordError("Braid word JSON must be an array of signed integers")
        return BraidWordBuilder._build(int(n), raw, reduce)

    @staticmethod
    def inverse_word(w: BraidWord) -> BraidWord:
        return BraidWord(w.n, tuple(-k for k in reversed(w.letters)))

    @staticmethod
    def power(w: BraidWord, k: int) -> BraidWord:
        if k < 1:
            raise BraidWordError("Word power must be >= 1, got " + str(k))
        return BraidWord(w.n, w.letters * k)

    @staticmethod
    def free_reduce(letters: list[int]) -> list[int]:
        stack: list[int] = []
        for k in letters:
            if stack and stack[-1] == -k:
                stack.pop()
            else:
                stack.append(k)
        return stack

    @staticmethod
    def _build(n: int, letters: list[int], reduce: bool) -> BraidWord:
        if n < 3:
            raise BraidWordError("Braid words need n >= 3, got " + str(n))
        if reduce:
            # validate before cancelling so bad letters are never hidden
            BraidWord(n, tuple(letters))
            letters = BraidWordBuilder.free_reduce(letters)
            if not letters:
                raise BraidWordError("Word reduces to the identity")
        return BraidWord(n, tuple(letters))
