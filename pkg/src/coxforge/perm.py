"""Permutations of {1, 2, 3} in cycle notation ("id", "(12)", "(123)", ...)."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Perm3:
    images: tuple[int, int, int]  # images of 1, 2, 3

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm3") -> "Perm3":
        """Composition self after other."""
        return Perm3(tuple(self(other(i)) for i in (1, 2, 3)))

    def inverse(self) -> "Perm3":
        inv = [0, 0, 0]
        for i in (1, 2, 3):
            inv[self(i) - 1] = i
        return Perm3(tuple(inv))

    def __pow__(self, k: int) -> "Perm3":
        if k < 0:
            return self.inverse() ** (-k)
        out = IDENTITY
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return self.images == (1, 2, 3)

    def is_transposition(self) -> bool:
        return sum(1 for i in (1, 2, 3) if self(i) != i) == 2

    def is_three_cycle(self) -> bool:
        return all(self(i) != i for i in (1, 2, 3))

    def cycle_notation(self) -> str:
        if self.is_identity():
            return "id"
        seen = set()
        cycles = []
        for start in (1, 2, 3):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            cycles.append("(" + "".join(str(c) for c in cyc) + ")")
        return "".join(cycles)

    def __str__(self):
        return self.cycle_notation()


IDENTITY = Perm3((1, 2, 3))

_BY_NAME = {
    "id": IDENTITY,
    "(12)": Perm3((2, 1, 3)),
    "(13)": Perm3((3, 2, 1)),
    "(23)": Perm3((1, 3, 2)),
    "(123)": Perm3((2, 3, 1)),
    "(132)": Perm3((3, 1, 2)),
}

ALL_PERMS = tuple(_BY_NAME.values())
PERM_NAMES = tuple(_BY_NAME.keys())


def parse_perm(text: str) -> Perm3:
    key = text.strip().replace(" ", "")
    if key in ("", "e", "()", "id", "Id", "ID"):
        return IDENTITY
    canon = {"(12)": "(12)", "(21)": "(12)", "(13)": "(13)", "(31)": "(13)",
             "(23)": "(23)", "(32)": "(23)", "(123)": "(123)", "(231)": "(123)",
             "(312)": "(123)", "(132)": "(132)", "(213)": "(132)", "(321)": "(132)"}
    if key in canon:
        return _BY_NAME[canon[key]]
    raise ValueError(f"cannot parse permutation {text!r}")
