"""
Generator alphabets, words, free reduction, and the textual word format.

Tokens are whitespace-separated: ``s<i>`` for s_i, ``p<i>.<a>`` for the
virtual generator rho_i^a, ``L<i>.<j>.<b>`` for the pure generator
lambda_{i,j}^b, ``K<i>.<j>.<b>`` for the semi-pure generator kappa_{i,j}^b,
each with an optional trailing ``!`` for exponent -1.
Strand indices are 1-based and layer indices 0-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from . import validators as vd


TOKEN_PATTERN = re.compile(
    r"(?P<kind>s|p|L|K)(?P<i>\d+)(?:\.(?P<x>\d+))?(?:\.(?P<y>\d+))?(?P<bang>!?)"
)

#: Alphabet kind of each group
KIND_BY_GROUP = {"mvt": "sp", "mvpt": "L", "mvht": "K"}


@dataclass(frozen=True, order=True)
class GenSym:
    """
    A generator symbol.
    Kind ``"s"`` is the twin generator s_i, ``"p"`` is rho_i^layer,
    ``"L"`` is lambda_{i,j}^layer, ``"K"`` is kappa_{i,j}^layer.
    Field ``j`` is 0 for the ambient kinds.
    """

    kind: str
    i: int
    j: int = 0
    layer: int = 0

    @staticmethod
    def s(i: int) -> GenSym:
        return GenSym("s", i)

    @staticmethod
    def rho(i: int, layer: int = 0) -> GenSym:
        return GenSym("p", i, 0, layer)

    @staticmethod
    def lam(i: int, j: int, layer: int = 0) -> GenSym:
        return GenSym("L", i, j, layer)

    @staticmethod
    def kappa(i: int, j: int, layer: int = 0) -> GenSym:
        return GenSym("K", i, j, layer)

    @property
    def is_ambient(self) -> bool:
        return self.kind in "sp"

    @property
    def involutive(self) -> bool:
        """
        True for s_i, rho_i^a and kappa_{i,j}^0, each of which squares
        to the identity.
        """
        return self.kind in "sp" or (self.kind == "K" and self.layer == 0)

    @property
    def group(self) -> str:
        """
        Name of the group whose alphabet contains this symbol.
        """
        return {"s": "mvt", "p": "mvt", "L": "mvpt", "K": "mvht"}[self.kind]

    def __str__(self) -> str:
        if self.kind == "s":
            return f"s{self.i}"
        elif self.kind == "p":
            return f"p{self.i}.{self.layer}"
        else:
            return f"{self.kind}{self.i}.{self.j}.{self.layer}"


#: A letter is a symbol with an exponent of +1 or -1
Letter = tuple[GenSym, int]


@dataclass(frozen=True)
class GroupCtx:
    """
    The ambient parameters ``n`` (strands) and ``k`` (virtual layers)
    together with the group a word lives in.
    """

    n: int
    k: int
    group: str = "mvt"

    def __post_init__(self):
        vd.check_ctx(self.n, self.k, self.group)

    def ambient(self) -> GroupCtx:
        return GroupCtx(self.n, self.k, "mvt")

    def with_group(self, group: str) -> GroupCtx:
        return GroupCtx(self.n, self.k, group)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "group": self.group}


def check_symbol(sym: GenSym, ctx: GroupCtx) -> None:
    """
    Raise an IndexRangeError if the indices of the given symbol are out of range
    for the context, or an AlphabetError if the symbol is not in the context's
    alphabet.
    """
    if sym.kind not in KIND_BY_GROUP[ctx.group]:
        raise vd.AlphabetError(f"Letter {sym} is not in the {ctx.group} alphabet")

    n, k = ctx.n, ctx.k
    if not 0 <= sym.layer <= k - 1:
        raise vd.IndexRangeError(f"Layer of {sym} must lie in [0, {k - 1}]")

    if sym.is_ambient:
        if not 1 <= sym.i <= n - 1:
            raise vd.IndexRangeError(f"Index of {sym} must lie in [1, {n - 1}]")
    else:
        if not (1 <= sym.i <= n and 1 <= sym.j <= n) or sym.i == sym.j:
            raise vd.IndexRangeError(
                f"Indices of {sym} must be distinct and lie in [1, {n}]"
            )
        if sym.layer >= 1 and sym.i > sym.j:
            raise vd.IndexRangeError(f"Symbol {sym} is not in canonical form")


def canonical_letter(sym: GenSym, exp: int = 1) -> Letter:
    """
    Rewrite a reversed-index symbol of layer at least 1, such as
    lambda_{3,2}^1, as the inverse of its canonical symbol lambda_{2,3}^1.
    Layer-0 symbols of either orientation are generators and are kept.
    """
    if sym.kind in "LK" and sym.layer >= 1 and sym.i > sym.j:
        sym, exp = GenSym(sym.kind, sym.j, sym.i, sym.layer), -exp
    return sym, exp


@dataclass(frozen=True)
class Word:
    """
    A finite word of letters over the alphabet of its context.
    """

    letters: tuple[Letter, ...]
    ctx: GroupCtx

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for sym, exp in self.letters:
            if exp not in (1, -1):
                raise vd.MvtwinError(f"Exponent of {sym} must be +1 or -1")
            check_symbol(sym, self.ctx)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.ctx)
        return self.letters[index]

    def __str__(self) -> str:
        return render_word(self)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def symbols(self) -> list[GenSym]:
        return [sym for sym, __ in self.letters]


def empty_word(ctx: GroupCtx) -> Word:
    return Word((), ctx)


def make_word(ctx: GroupCtx, *letters: GenSym | Letter) -> Word:
    """
    Build a word from symbols (exponent +1) or (symbol, exponent) pairs,
    canonicalizing reversed-index symbols.
    """
    result = []
    for x in letters:
        sym, exp = x if isinstance(x, tuple) else (x, 1)
        result.append(canonical_letter(sym, exp) if sym.kind in "LK" else (sym, exp))
    return Word(tuple(result), ctx)


def parse_token(token: str, position: int = 0) -> Letter:
    """
    Parse a single token into a letter.
    Reversed-index symbols of layer at least 1 are canonicalized.
    """
    m = TOKEN_PATTERN.fullmatch(token)
    if m is None:
        raise vd.ParseError("Malformed token", position, token)

    kind, bang = m["kind"], m["bang"]
    fields = [m["i"], m["x"], m["y"]]
    arity = {"s": 1, "p": 2, "L": 3, "K": 3}[kind]
    if sum(f is not None for f in fields) != arity:
        raise vd.ParseError(f"Token of kind {kind!r} needs {arity} indices", position, token)

    values = [int(f) for f in fields if f is not None]
    if values[0] < 1 or (kind in "LK" and values[1] < 1):
        raise vd.ParseError("Strand indices start at 1", position, token)

    if kind == "s":
        sym = GenSym.s(values[0])
    elif kind == "p":
        sym = GenSym.rho(values[0], values[1])
    else:
        if values[0] == values[1]:
            raise vd.ParseError("Strand indices must be distinct", position, token)
        sym = GenSym(kind, values[0], values[1], values[2])

    exp = -1 if bang else 1
    if kind in "LK":
        return canonical_letter(sym, exp)
    return sym, exp


def parse_word(text: str, ctx: GroupCtx) -> Word:
    """
    Parse the given text into a word in the given context.
    Parsing does not reduce.
    Raise a ParseError on a malformed token, an IndexRangeError on an index
    out of range, and an AlphabetError on a letter outside the context's alphabet.
    """
    letters = [parse_token(token, p) for p, token in enumerate(text.split())]
    return Word(tuple(letters), ctx)


def render_letter(letter: Letter) -> str:
    sym, exp = letter
    return f"{sym}!" if exp == -1 else str(sym)


def render_word(w: Word) -> str:
    return " ".join(render_letter(x) for x in w.letters)


def check_same_ctx(*words: Word) -> GroupCtx:
    ctxs = {w.ctx for w in words}
    if len(ctxs) > 1:
        raise vd.ContextError(f"Words live in different contexts {sorted(map(str, ctxs))}")
    return words[0].ctx


def concat(*words: Word) -> Word:
    """
    Concatenate the given words, which must share a context.
    """
    ctx = check_same_ctx(*words)
    return Word(tuple(x for w in words for x in w.letters), ctx)


def invert(w: Word) -> Word:
    """
    Return the letterwise inverse of the given word, without normalizing
    exponents.
    """
    return Word(tuple((sym, -exp) for sym, exp in reversed(w.letters)), w.ctx)


def cancels(x: Letter, y: Letter) -> bool:
    """
    True if the adjacent letters ``x y`` multiply to the identity by
    involutivity, free cancellation, or because lambda_{j,i}^0 is the
    inverse of lambda_{i,j}^0.
    """
    (a, e), (b, f) = x, y
    if a == b:
        return a.involutive or e == -f
    return (
        a.kind == b.kind == "L"
        and a.layer == b.layer == 0
        and (a.i, a.j) == (b.j, b.i)
        and e == f
    )


def free_reduce(w: Word) -> Word:
    """
    Normalize exponents of involutive letters to +1 and cancel adjacent
    letters that multiply to the identity, to a fixed point.
    Never applies braid or commutation relations.
    """
    stack: list[Letter] = []
    for sym, exp in w.letters:
        letter = (sym, 1 if sym.involutive else exp)
        if stack and cancels(stack[-1], letter):
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack), w.ctx)


def normalize_exponents(w: Word) -> Word:
    """
    Set exponents of involutive letters to +1 without cancelling anything.
    """
    return Word(
        tuple((sym, 1 if sym.involutive else exp) for sym, exp in w.letters), w.ctx
    )


def ambient_generators(n: int, k: int) -> list[GenSym]:
    """
    Return the generators s_i and rho_i^a of the ambient group, twin
    generators first.
    """
    return [GenSym.s(i) for i in range(1, n)] + [
        GenSym.rho(i, a) for a in range(k) for i in range(1, n)
    ]


def subgroup_generators(n: int, k: int, group: str) -> list[GenSym]:
    """
    Return the generators of the pure (``"mvpt"``) or semi-pure (``"mvht"``)
    subgroup: layer-0 symbols for all ordered pairs of distinct strands, then
    canonical symbols with i < j for each layer at least 1.
    """
    kind = KIND_BY_GROUP[group]
    if kind not in "LK":
        raise vd.AlphabetError(f"Group {group!r} is not a subgroup")

    strands = range(1, n + 1)
    result = [GenSym(kind, i, j, 0) for i in strands for j in strands if i != j]
    result += [
        GenSym(kind, i, j, b)
        for b in range(1, k)
        for i in strands
        for j in strands
        if i < j
    ]
    return result


def group_generators(ctx: GroupCtx) -> list[GenSym]:
    if ctx.group == "mvt":
        return ambient_generators(ctx.n, ctx.k)
    return subgroup_generators(ctx.n, ctx.k, ctx.group)
