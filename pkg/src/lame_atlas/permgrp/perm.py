"""Permutations of {0..n-1} with 1-based disjoint-cycle notation for I/O."""

from __future__ import annotations

import re
from math import lcm

MAX_DEGREE = 64

_CYCLE = re.compile(r"\(([^()]*)\)")


class Perm:
    """A bijection of {0..n-1}; ``p * q`` applies q first, then p."""

    __slots__ = ("img", "_hash")

    def __init__(self, img):
        self.img = tuple(img)
        self._hash = hash(self.img)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Perm":
        """Build from a list of 0-based cycles."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 0 <= pt < n:
                    raise ValueError(f"point {pt + 1} beyond degree {n}")
                if pt in seen:
                    raise ValueError(f"point {pt + 1} appears in two cycles")
                seen.add(pt)
            for i, pt in enumerate(cyc):
                img[pt] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int) -> "Perm":
        """Parse '(1,2,3)(4,5)' (1-based points); '()' is the identity."""
        s = text.replace(" ", "")
        if not s or s == "()":
            return cls.identity(n)
        cycles = []
        pos = 0
        for m in _CYCLE.finditer(s):
            if m.start() != pos:
                raise ValueError(f"malformed cycle string {text!r}")
            pos = m.end()
            body = m.group(1)
            if not body:
                continue
            try:
                pts = [int(t) - 1 for t in body.split(",")]
            except ValueError:
                raise ValueError(f"malformed cycle {m.group(0)!r}") from None
            if any(p < 0 for p in pts):
                raise ValueError(f"points are 1-based: {m.group(0)!r}")
            cycles.append(pts)
        if pos != len(s):
            raise ValueError(f"malformed cycle string {text!r}")
        return cls.from_cycles(cycles, n)

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, i: int) -> int:
        return self.img[i]

    def __mul__(self, other: "Perm") -> "Perm":
        a = self.img
        return Perm([a[j] for j in other.img])

    def inverse(self) -> "Perm":
        inv = [0] * len(self.img)
        for i, j in enumerate(self.img):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(len(self.img))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.img))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(len(self.img)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.img[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.img[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def extend(self, n: int, offset: int = 0) -> "Perm":
        """Embed into degree n acting on points offset..offset+deg-1."""
        img = list(range(n))
        for i, j in enumerate(self.img):
            img[offset + i] = offset + j
        return Perm(img)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Perm"):
        return self.img < other.img

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm{self}"


def format_gens(gens) -> str:
    return ";".join(str(g) for g in gens)


def parse_gens(text: str, n: int) -> list[Perm]:
    return [Perm.parse(part, n) for part in text.split(";") if part.strip()]
