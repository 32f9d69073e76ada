"""
Symmetric-group arithmetic and the two quotient maps onto S_n.

Permutations compose right factor first, and a word maps to the product
of its letters' images read left to right, so the leftmost letter is the
outermost map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import permutations

from . import constants as cs
from . import validators as vd
from . import words as wd


@dataclass(frozen=True, order=True)
class Permutation:
    """
    A permutation of {1, ..., n} in one-line notation: position ``p``
    (1-based) holds the image of ``p``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise vd.DomainError(f"{self.images} is not a permutation")

    @staticmethod
    def identity(n: int) -> Permutation:
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return Permutation(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def inverse(self) -> Permutation:
        images = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            images[y - 1] = x
        return Permutation(tuple(images))

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """
        Return the nontrivial cycles, each starting at its smallest element.
        """
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "e"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    Return the permutation ``x -> p(q(x))``.
    """
    if p.n != q.n:
        raise vd.DimensionError(f"Cannot compose permutations of sizes {p.n} and {q.n}")
    return Permutation(tuple(p(q(x)) for x in range(1, p.n + 1)))


def letter_image(sym: wd.GenSym, n: int, map: str = "phi") -> Permutation:
    if not sym.is_ambient:
        raise vd.AlphabetError(f"Quotient maps take ambient letters only; got {sym}")
    if sym.kind == "s" and map == "psi":
        return Permutation.identity(n)
    return Permutation.transposition(n, sym.i, sym.i + 1)


def image(w: wd.Word, map: str = "phi") -> Permutation:
    """
    Return the image of the given ambient word under the quotient map
    ``"phi"`` (every generator to its adjacent transposition) or ``"psi"``
    (s_i to the identity, rho_i^a to its adjacent transposition).
    Every letter is an involution in S_n, so exponents do not matter.
    """
    if map not in cs.MAPS:
        raise vd.DomainError(f"Map must be one of {cs.MAPS}; got {map!r}")

    n = w.ctx.n
    return reduce(
        compose,
        (letter_image(sym, n, map) for sym, __ in w.letters),
        Permutation.identity(n),
    )


def phi(w: wd.Word) -> Permutation:
    return image(w, "phi")


def psi(w: wd.Word) -> Permutation:
    return image(w, "psi")


def in_kernel(w: wd.Word, map: str = "phi") -> bool:
    """
    True if the given ambient word maps to the identity permutation.
    """
    return image(w, map).is_identity


def section(p: Permutation, k: int = 1) -> wd.Word:
    """
    Return a word in the layer-0 virtual generators whose phi-image is the
    given permutation, by insertion-sorting its one-line notation.
    """
    images = list(p.images)
    swaps = []
    for start in range(1, len(images)):
        pos = start
        while pos > 0 and images[pos - 1] > images[pos]:
            images[pos - 1], images[pos] = images[pos], images[pos - 1]
            swaps.append(pos)
            pos -= 1

    ctx = wd.GroupCtx(max(p.n, 2), k)
    return wd.Word(tuple((wd.GenSym.rho(i), 1) for i in reversed(swaps)), ctx)


def all_permutations(n: int) -> list[Permutation]:
    """
    Return the permutations of {1, ..., n} in lexicographic order.
    """
    return [Permutation(images) for images in permutations(range(1, n + 1))]
