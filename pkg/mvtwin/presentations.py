"""
Defining relators of the multi-virtual twin group and of its pure and
semi-pure subgroups.

Every relation ``left = right`` is stored as the relator word
``left right^{-1}``.
Commutator-shaped families emit each unordered pair of factors once;
every other family runs over all ordered tuples of distinct indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product

import pandas as pd

from . import validators as vd
from . import words as wd


@dataclass(frozen=True)
class Presentation:
    """
    A finite presentation: generators, relator words, and for each relator
    the name of the relation family it instantiates.
    """

    ctx: wd.GroupCtx
    generators: tuple[wd.GenSym, ...]
    relators: tuple[wd.Word, ...] = ()
    families: tuple[str, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.relators)

    def relators_of(self, family: str) -> list[wd.Word]:
        return [r for r, f in zip(self.relators, self.families) if f == family]


class RelatorBuilder:
    """
    Collect relators in order, dropping letterwise duplicates.
    """

    def __init__(self, ctx: wd.GroupCtx):
        self.ctx = ctx
        self.relators = []
        self.families = []
        self.seen = set()

    def relation(self, family: str, left: list, right: list) -> None:
        lhs = wd.make_word(self.ctx, *left)
        rhs = wd.make_word(self.ctx, *right)
        relator = wd.normalize_exponents(wd.concat(lhs, wd.invert(rhs)))
        if relator.letters not in self.seen:
            self.seen.add(relator.letters)
            self.relators.append(relator)
            self.families.append(family)

    def commutator(self, family: str, x, y) -> None:
        self.relation(family, [x, y], [y, x])

    def build(self, generators: list[wd.GenSym]) -> Presentation:
        return Presentation(
            self.ctx, tuple(generators), tuple(self.relators), tuple(self.families)
        )


def relators_mvt(n: int, k: int) -> Presentation:
    """
    Return the presentation of the multi-virtual twin group on ``n`` strands
    with ``k`` virtual layers.
    """
    ctx = wd.GroupCtx(n, k)
    s, p = wd.GenSym.s, wd.GenSym.rho
    idx = range(1, n)
    layers = range(k)
    b = RelatorBuilder(ctx)

    for i in idx:
        b.relation("twin_square", [s(i), s(i)], [])
    for i, j in product(idx, idx):
        if j - i >= 2:
            b.commutator("twin_commute", s(i), s(j))
    for i, a in product(idx, layers):
        b.relation("virtual_square", [p(i, a), p(i, a)], [])
    for i, j in product(idx, idx):
        if j - i >= 2:
            for a, c in product(layers, layers):
                b.commutator("virtual_commute", p(i, a), p(j, c))
    for i, j in product(idx, idx):
        if abs(i - j) >= 2:
            for a in layers:
                b.commutator("mixed_commute", p(i, a), s(j))
    for i, a in product(idx[:-1], layers):
        b.relation(
            "virtual_braid",
            [p(i, a), p(i + 1, a), p(i, a)],
            [p(i + 1, a), p(i, a), p(i + 1, a)],
        )
    for i in idx[:-1]:
        for a, c in product(layers, layers):
            if a < c:
                b.relation(
                    "layer_braid_a",
                    [p(i, a), p(i + 1, c), p(i, c)],
                    [p(i + 1, c), p(i, c), p(i + 1, a)],
                )
    for i in idx[:-1]:
        for a, c in product(layers, layers):
            if a < c:
                b.relation(
                    "layer_braid_b",
                    [p(i, a), p(i + 1, a), p(i, c)],
                    [p(i + 1, c), p(i, a), p(i + 1, a)],
                )
    for i, a in product(idx[:-1], layers):
        b.relation(
            "mixed_braid",
            [p(i, a), p(i + 1, a), s(i)],
            [s(i + 1), p(i, a), p(i + 1, a)],
        )

    return b.build(wd.ambient_generators(n, k))


def relators_vt(n: int) -> Presentation:
    """
    Return the presentation of the virtual twin group on ``n`` strands, the
    single-layer case of :func:`relators_mvt`.
    """
    return relators_mvt(n, 1)


def relators_twin(n: int) -> Presentation:
    """
    Return the presentation of the twin group on ``n`` strands: involutive
    generators s_i with far commutation.
    """
    full = relators_mvt(n, 1)
    keep = [
        (r, f)
        for r, f in zip(full.relators, full.families)
        if f in ("twin_square", "twin_commute")
    ]
    return Presentation(
        full.ctx,
        tuple(wd.GenSym.s(i) for i in range(1, n)),
        tuple(r for r, __ in keep),
        tuple(f for __, f in keep),
    )


def _triangle_families(b: RelatorBuilder, kind: str, n: int, k: int, prefix: str):
    """
    Add the three-index families shared by the pure and semi-pure subgroups,
    whose symbols all have layer at least 1.
    """
    g = lambda i, j, a: wd.GenSym(kind, i, j, a)
    strands = range(1, n + 1)
    upper = range(1, k)

    for i, j, l in permutations(strands, 3):
        for a in upper:
            b.relation(
                f"{prefix}_triangle",
                [g(i, j, a), g(i, l, a), g(j, l, a)],
                [g(j, l, a), g(i, l, a), g(i, j, a)],
            )
    for i, j, l in permutations(strands, 3):
        for a, c in product(upper, upper):
            if a < c:
                b.relation(
                    f"{prefix}_triangle_abb",
                    [g(i, j, a), g(i, l, c), g(j, l, c)],
                    [g(j, l, c), g(i, l, c), g(i, j, a)],
                )
    for i, j, l in permutations(strands, 3):
        for a, c in product(upper, upper):
            if a < c:
                b.relation(
                    f"{prefix}_triangle_aab",
                    [g(i, j, a), g(i, l, a), g(j, l, c)],
                    [g(j, l, c), g(i, l, a), g(i, j, a)],
                )


def _commute_families(b: RelatorBuilder, kind: str, n: int, k: int, prefix: str):
    """
    Add commutation of layer-(>= 1) symbols on four distinct strands.
    """
    g = lambda i, j, a: wd.GenSym(kind, i, j, a)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    upper = range(1, k)

    for (i, j), (l, m) in product(pairs, pairs):
        if len({i, j, l, m}) < 4:
            continue
        for a, c in product(upper, upper):
            if a < c or (a == c and (i, j) < (l, m)):
                b.commutator(f"{prefix}_commute", g(i, j, a), g(l, m, c))


def _shared_commute_family(b: RelatorBuilder, kind: str, n: int, k: int, prefix: str):
    g = lambda i, j, a: wd.GenSym(kind, i, j, a)
    for l in range(1, n + 1):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if l in (i, j):
                    continue
                for c in range(1, k):
                    b.commutator(f"{prefix}_shared_commute", g(i, l, c), g(j, l, c))


def relators_mvpt(n: int, k: int) -> Presentation:
    """
    Return the presentation of the pure subgroup, the kernel of phi, on the
    generators lambda_{i,j}^0 (i != j) and lambda_{i,j}^b (i < j, b >= 1).
    Reversed-index symbols of layer at least 1 occurring in a relation are
    rewritten as inverses of canonical symbols.
    """
    ctx = wd.GroupCtx(n, k, "mvpt")
    lam = wd.GenSym.lam
    strands = range(1, n + 1)
    b = RelatorBuilder(ctx)

    ordered = [(i, j) for i in strands for j in strands if i != j]
    for (i, j), (l, m) in product(ordered, ordered):
        if len({i, j, l, m}) == 4 and (i, j) < (l, m):
            b.commutator("pure_commute_0", lam(i, j), lam(l, m))
    _commute_families(b, "L", n, k, "pure")
    _triangle_families(b, "L", n, k, "pure")
    for i, j, l in permutations(strands, 3):
        for a in range(1, k):
            b.relation(
                "pure_triangle_0",
                [lam(i, j, a), lam(i, l, a), lam(j, l)],
                [lam(j, l), lam(i, l, a), lam(i, j, a)],
            )
    _shared_commute_family(b, "L", n, k, "pure")

    return b.build(wd.subgroup_generators(n, k, "mvpt"))


def relators_pvt(n: int) -> Presentation:
    """
    Return the presentation of the pure virtual twin group on ``n`` strands:
    generators lambda_{i,j} for i != j and far commutation only.
    """
    return relators_mvpt(n, 1)


def relators_mvht(n: int, k: int) -> Presentation:
    """
    Return the presentation of the semi-pure subgroup, the kernel of psi, on
    the generators kappa_{i,j}^0 (i != j) and kappa_{i,j}^b (i < j, b >= 1).
    The layer-0 triangle family keeps its index pattern
    kappa_{i,k}^a kappa_{i,j}^a kappa_{j,k}^0 = kappa_{j,k}^0 kappa_{i,k}^a kappa_{i,j}^a.
    """
    ctx = wd.GroupCtx(n, k, "mvht")
    kap = wd.GenSym.kappa
    b = RelatorBuilder(ctx)

    _commute_families(b, "K", n, k, "semi")
    _triangle_families(b, "K", n, k, "semi")
    for i, j, l in permutations(range(1, n + 1), 3):
        for a in range(1, k):
            b.relation(
                "semi_triangle_0",
                [kap(i, l, a), kap(i, j, a), kap(j, l)],
                [kap(j, l), kap(i, l, a), kap(i, j, a)],
            )
    _shared_commute_family(b, "K", n, k, "semi")

    return b.build(wd.subgroup_generators(n, k, "mvht"))


def relators(group: str, n: int, k: int) -> Presentation:
    """
    Return the presentation of the named group.
    """
    vd.check_ctx(n, k, group)
    return {"mvt": relators_mvt, "mvpt": relators_mvpt, "mvht": relators_mvht}[group](n, k)


#: Relations of the pure subgroup for three strands and two layers, as
#: displayed in the literature, with reversed-index symbols
PRINTED_PURE_RELATIONS_3_2 = [
    ("L1.2.1 L3.2.1", "L3.2.1 L1.2.1"),
    ("L1.3.1 L2.3.1", "L2.3.1 L1.3.1"),
    ("L1.2.1 L1.3.1", "L1.3.1 L1.2.1"),
    ("L1.2.1 L1.3.1 L2.3.1", "L2.3.1 L1.3.1 L1.2.1"),
    ("L1.2.1 L1.3.1 L2.3.0", "L2.3.0 L1.3.1 L1.2.1"),
    ("L2.1.1 L2.3.1 L1.3.0", "L1.3.0 L2.3.1 L2.1.1"),
    ("L1.3.1 L1.2.1 L3.2.0", "L3.2.0 L1.2.1 L1.3.1"),
    ("L2.3.1 L2.1.1 L3.1.0", "L3.1.0 L2.1.1 L2.3.1"),
    ("L3.1.1 L3.2.1 L1.2.0", "L1.2.0 L3.2.1 L3.1.1"),
    ("L3.2.1 L3.1.1 L2.1.0", "L2.1.0 L3.1.1 L3.2.1"),
]


def printed_pure_relators_3_2() -> list[wd.Word]:
    """
    Return the ten displayed relations of the pure subgroup for
    ``(n, k) = (3, 2)`` as relator words, reversed-index symbols canonicalized.
    """
    ctx = wd.GroupCtx(3, 2, "mvpt")
    return [
        wd.concat(wd.parse_word(left, ctx), wd.invert(wd.parse_word(right, ctx)))
        for left, right in PRINTED_PURE_RELATIONS_3_2
    ]


def relator_table(pres: Presentation) -> pd.DataFrame:
    """
    Return a DataFrame with the columns

    - ``"family"``: name of the relation family
    - ``"relator"``: the relator rendered in the word format
    - ``"length"``: number of letters
    """
    return vd.check_relators(
        pd.DataFrame(
            {
                "family": list(pres.families),
                "relator": [str(r) for r in pres.relators],
                "length": [len(r) for r in pres.relators],
            },
            columns=["family", "relator", "length"],
        )
    )
