import re
from dataclasses import dataclass
from typing import Iterator, Tuple

from ...errors import MalformedInputError


FLIP = "e"


@dataclass(frozen=True)
class BraidWord:
    """
    Word in the standard generators; letters are (i, sign) with i 1-based.
    Rendered as "s1 S2 s3" (lowercase positive, uppercase inverse). Sign 0 is
    the sign move on basis vector i, rendered "e3".
    """
    letters: Tuple[Tuple[int, int], ...] = ()
    pos: str = "s"
    neg: str = "S"

    @classmethod
    def parse(cls, text: str, pos: str = "s", neg: str = "S") -> "BraidWord":
        text = text or ""
        token = rf"([{re.escape(pos)}{re.escape(neg)}{FLIP}])(\d+)"
        if not re.fullmatch(rf"\s*(?:{token}\s*)*", text):
            raise MalformedInputError(f"bad braid word {text!r}")
        letters = []
        for m in re.finditer(token, text):
            i = int(m.group(2))
            if i < 1:
                raise MalformedInputError(f"generator index must be >= 1 in {text!r}")
            letters.append((i, {pos: 1, neg: -1, FLIP: 0}[m.group(1)]))
        return cls(tuple(letters), pos, neg)

    def _letter(self, i: int, s: int) -> str:
        if s == 0:
            return f"{FLIP}{i}"
        return f"{self.pos if s > 0 else self.neg}{i}"

    def __str__(self):
        return " ".join(self._letter(i, s) for i, s in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters, self.pos, self.neg)

    def append(self, i: int, sign: int) -> "BraidWord":
        return BraidWord(self.letters + ((i, sign),), self.pos, self.neg)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((i, -s) for i, s in reversed(self.letters)), self.pos, self.neg)

    def has_flips(self) -> bool:
        return any(s == 0 for _, s in self.letters)

    def check(self, r: int):
        for i, s in self.letters:
            top = r if s == 0 else r - 1
            if not 1 <= i <= top:
                raise IndexError(f"generator index {i} out of range for r={r}")

    def to_json(self):
        return str(self)


def random_word(rng, r: int, length: int, pos: str = "s", neg: str = "S") -> BraidWord:
    letters = tuple((int(rng.integers(1, r)), 1 if rng.integers(0, 2) else -1) for _ in range(length))
    return BraidWord(letters, pos, neg)
