"""
Reidemeister-Schreier machinery for the pure subgroup (kernel of phi) and the
semi-pure subgroup (kernel of psi): the Schreier transversal, Schreier
generators and their labels, the rewriting process, expansion of subgroup
symbols into ambient words, and the conjugation action of layer-0 virtual
words on subgroup symbols.

Group elements are compared operationally by their quotient images and their
images under a panel of representation instances, any object with an
``evaluate(word)`` method returning an exact matrix.
A disagreement disproves equality; agreement is evidence only.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

import pandas as pd

from . import constants as cs
from . import exact as ex
from . import perm as pm
from . import presentations as pr
from . import validators as vd
from . import words as wd


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchreierContext:
    """
    A subgroup context (group ``"mvpt"`` or ``"mvht"``) together with its
    Schreier transversal, a dictionary mapping every permutation of S_n to
    its representative word in the layer-0 virtual generators.
    """

    ctx: wd.GroupCtx
    transversal: dict[pm.Permutation, wd.Word] = field(repr=False)

    @property
    def map(self) -> str:
        """
        Name of the quotient map whose kernel is the subgroup.
        """
        return cs.MAP_BY_GROUP[self.ctx.group]

    @property
    def ambient(self) -> wd.GroupCtx:
        return self.ctx.ambient()

    def __len__(self) -> int:
        return len(self.transversal)


def descending_run(ctx: wd.GroupCtx, k: int, l: int) -> wd.Word:
    """
    Return the word rho_{k-1} rho_{k-2} ... rho_l in layer-0 virtual
    generators, empty when ``l = k``.
    """
    return wd.make_word(ctx, *(wd.GenSym.rho(i) for i in range(k - 1, l - 1, -1)))


def build_transversal(n: int, k: int = 1, group: str = "mvpt") -> SchreierContext:
    """
    Build the Schreier transversal of the given subgroup of the
    multi-virtual twin group on ``n`` strands with ``k`` layers.
    Its words are the products m_{2,j_2} m_{3,j_3} ... m_{n,j_n}
    for 1 <= j_m <= m, where m_{m,l} = rho_{m-1} ... rho_l, keyed by their
    permutation.

    Raise a ScaleError if ``n`` exceeds
    :const:`mvtwin.constants.MAX_TRANSVERSAL_DEGREE`.
    """
    vd.check_ctx(n, k, group)
    if group not in cs.MAP_BY_GROUP:
        raise vd.DomainError(f"Group must be one of {list(cs.MAP_BY_GROUP)}; got {group!r}")
    vd.check_scale(n, cs.MAX_TRANSVERSAL_DEGREE, "Schreier transversal")

    ambient = wd.GroupCtx(n, k)
    transversal = {}
    choices = [range(1, m + 1) for m in range(2, n + 1)]
    for js in product(*choices):
        w = wd.concat(
            wd.empty_word(ambient),
            *(descending_run(ambient, m, j) for m, j in zip(range(2, n + 1), js)),
        )
        p = pm.phi(w)
        if p in transversal:
            raise vd.MvtwinError(f"Transversal words {transversal[p]} and {w} share {p}")
        transversal[p] = w

    logger.debug("Built Schreier transversal of %s entries for n=%s", len(transversal), n)
    return SchreierContext(wd.GroupCtx(n, k, group), transversal)


def check_ambient(sc: SchreierContext, w: wd.Word) -> None:
    if w.ctx != sc.ambient:
        raise vd.ContextError(f"Word lives in {w.ctx}; expected {sc.ambient}")


def coset_rep(sc: SchreierContext, w: wd.Word) -> wd.Word:
    """
    Return the transversal word of the coset of the given ambient word.
    """
    check_ambient(sc, w)
    return sc.transversal[pm.image(w, sc.map)]


def is_trivial(w: wd.Word) -> bool:
    """
    True if the reduced form of the given kernel word uses layer-0 virtual
    letters only, which generate a copy of S_n and so multiply to the
    identity whenever their permutation is trivial.
    """
    return all(
        sym.kind == "p" and sym.layer == 0 for sym, __ in wd.free_reduce(w).letters
    )


def _label(sc: SchreierContext, sigma: pm.Permutation, a: wd.GenSym) -> wd.Letter | None:
    kind = wd.KIND_BY_GROUP[sc.ctx.group]
    i = a.i
    if a.kind == "s":
        if kind == "L":
            return wd.GenSym.lam(sigma(i + 1), sigma(i)), 1
        return wd.GenSym.kappa(sigma(i), sigma(i + 1)), 1
    if a.layer == 0:
        return None
    return wd.canonical_letter(wd.GenSym(kind, sigma(i), sigma(i + 1), a.layer), -1)


def schreier_label(sc: SchreierContext, rep: wd.Word, a: wd.GenSym) -> wd.Letter:
    """
    Return the subgroup letter equal to the Schreier generator
    ``rep a (coset_rep(rep a))^{-1}``, computed from the indices of ``a``
    transported by the permutation of ``rep``.

    Raise a DomainError if the Schreier generator is trivial, that is,
    if ``a`` is a layer-0 virtual generator.
    """
    check_ambient(sc, rep)
    wd.check_symbol(a, sc.ambient)
    label = _label(sc, pm.phi(rep), a)
    if label is None:
        raise vd.DomainError(f"Schreier generator of {rep} and {a} is trivial")
    return label


@dataclass(frozen=True)
class SchreierGenerator:
    rep: wd.Word
    letter: wd.GenSym
    word: wd.Word
    label: wd.Letter


def schreier_generators(sc: SchreierContext) -> list[SchreierGenerator]:
    """
    Return the nontrivial Schreier generators
    ``rep a (coset_rep(rep a))^{-1}``, freely reduced, for every transversal
    word ``rep`` and every ambient generator ``a``, each with its subgroup label.
    """
    ambient = sc.ambient
    result = []
    for rep in sc.transversal.values():
        for a in wd.ambient_generators(ambient.n, ambient.k):
            x = wd.make_word(ambient, a)
            w = wd.free_reduce(
                wd.concat(rep, x, wd.invert(coset_rep(sc, wd.concat(rep, x))))
            )
            if is_trivial(w):
                continue
            result.append(SchreierGenerator(rep, a, w, schreier_label(sc, rep, a)))
    return result


def _base(sym: wd.GenSym, m: int, ctx: wd.GroupCtx) -> wd.Word:
    s, p = wd.GenSym.s(m), wd.GenSym.rho(m)
    if sym.i < sym.j:
        if sym.layer >= 1:
            letters = [p, wd.GenSym.rho(m, sym.layer)]
        elif sym.kind == "L":
            letters = [p, s]
        else:
            letters = [s]
    elif sym.kind == "L":
        letters = [s, p]
    else:
        letters = [p, s, p]
    return wd.make_word(ctx, *letters)


def expand(sym: wd.GenSym, ctx: wd.GroupCtx) -> wd.Word:
    """
    Return the ambient word of the given subgroup symbol in the context's
    ambient group.
    Adjacent symbols are

    - lambda_{i,i+1}^0 = rho_i s_i, lambda_{i+1,i}^0 = s_i rho_i
    - kappa_{i,i+1}^0 = s_i, kappa_{i+1,i}^0 = rho_i s_i rho_i
    - lambda_{i,i+1}^b = kappa_{i,i+1}^b = rho_i rho_i^b for b >= 1

    and a symbol on strands at distance more than 1 is the adjacent one
    conjugated by rho_{j-1} ... rho_{i+1}, with rho meaning layer 0.
    """
    if sym.is_ambient:
        raise vd.AlphabetError(f"Only subgroup symbols expand; got {sym}")
    wd.check_symbol(sym, ctx.with_group(sym.group))

    ambient = ctx.ambient()
    lo, hi = min(sym.i, sym.j), max(sym.i, sym.j)
    run = descending_run(ambient, hi, lo + 1)
    w = wd.concat(run, _base(sym, lo, ambient), wd.invert(run))
    w = wd.normalize_exponents(w)

    if not pm.in_kernel(w, cs.MAP_BY_GROUP[sym.group]):
        raise vd.KernelError(f"Expansion {w} of {sym} is not in the kernel")
    return w


def expand_word(w: wd.Word) -> wd.Word:
    """
    Return the ambient word obtained by substituting the expansion of every
    letter of the given subgroup word.
    """
    ambient = w.ctx.ambient()
    parts = [wd.empty_word(ambient)]
    for sym, exp in w.letters:
        x = expand(sym, w.ctx)
        parts.append(x if exp == 1 else wd.invert(x))
    return wd.concat(*parts)


def rewrite(sc: SchreierContext, w: wd.Word) -> wd.Word:
    """
    Rewrite the given ambient kernel word as a word in the subgroup
    generators.
    The j-th letter x^e contributes the label of the Schreier generator at
    the coset representative of the first ``j - 1`` letters when e = +1,
    or the inverse label at the representative of the first ``j`` letters
    when e = -1; trivial Schreier generators contribute nothing.
    The result is freely reduced.

    Raise a KernelError if the word is not in the kernel of the subgroup's map.
    """
    check_ambient(sc, w)
    if not pm.in_kernel(w, sc.map):
        raise vd.KernelError(f"Word {w} is not in the kernel of {sc.map}")

    n = sc.ctx.n
    prefix = pm.Permutation.identity(n)
    letters = []
    for sym, exp in w.letters:
        after = pm.compose(prefix, pm.letter_image(sym, n, sc.map))
        # The representative is a layer-0 word, so its phi and psi images agree
        sigma = prefix if exp == 1 else after
        label = _label(sc, sigma, sym)
        if label is not None:
            letters.append((label[0], label[1] * exp))
        prefix = after

    return wd.free_reduce(wd.Word(tuple(letters), sc.ctx))


def transport(a: wd.Word, sym: wd.GenSym) -> wd.Letter:
    """
    Return the subgroup letter equal to ``a^{-1} sym a`` for a word ``a`` in
    layer-0 virtual generators: the symbol with its strand indices moved by
    the right action ``(l)a = phi(a)^{-1}(l)``.
    Reversed-index symbols of layer at least 1 come back as inverses of
    canonical symbols.

    Raise an AlphabetError if ``a`` has a letter other than a layer-0
    virtual generator.
    """
    for x, __ in a.letters:
        if not (x.kind == "p" and x.layer == 0):
            raise vd.AlphabetError(f"Transporting word must use layer-0 virtual letters; got {x}")
    if sym.is_ambient:
        raise vd.AlphabetError(f"Only subgroup symbols are transported; got {sym}")
    wd.check_symbol(sym, a.ctx.with_group(sym.group))

    inv = pm.phi(a).inverse()
    return wd.canonical_letter(wd.GenSym(sym.kind, inv(sym.i), inv(sym.j), sym.layer))


def battery_equal(u: wd.Word, v: wd.Word, panel: Iterable = ()) -> bool:
    """
    True if the given ambient words have the same phi and psi images and
    evaluate to the same matrix under every instance of the panel.
    """
    wd.check_same_ctx(u, v)
    if pm.phi(u) != pm.phi(v) or pm.psi(u) != pm.psi(v):
        return False
    for rep in panel:
        if not ex.mat_eq(rep.evaluate(u), rep.evaluate(v)):
            logger.debug("Panel instance %s separates %s and %s", rep, u, v)
            return False
    return True


@dataclass(frozen=True, eq=False)
class SubgroupPresentation:
    """
    Generators of a subgroup with their ambient expansions, its stated
    relators, and the relators obtained by rewriting conjugated ambient
    relators, together with a table checking both against a panel.
    """

    ctx: wd.GroupCtx
    generators: tuple[wd.GenSym, ...]
    expansions: dict[wd.GenSym, wd.Word] = field(repr=False)
    relators: tuple[wd.Word, ...] = ()
    rewritten: tuple[wd.Word, ...] = ()
    checks: pd.DataFrame = field(default=None, repr=False)


def rewritten_relators(sc: SchreierContext) -> list[wd.Word]:
    """
    Return the distinct nonempty rewrites ``rewrite(sc, rep r rep^{-1})``
    over transversal words ``rep`` and relators ``r`` of the ambient group.
    """
    ambient = sc.ambient
    relators = pr.relators_mvt(ambient.n, ambient.k).relators
    seen = set()
    result = []
    for rep in sc.transversal.values():
        for r in relators:
            t = rewrite(sc, wd.concat(rep, r, wd.invert(rep)))
            if t.letters and t.letters not in seen:
                seen.add(t.letters)
                result.append(t)
    return result


def relator_checks(labelled: Sequence[tuple[str, wd.Word]], panel: Sequence = ()) -> pd.DataFrame:
    """
    Given pairs (label, subgroup word), return a result table with one row
    per word, item ``<label>:<word>``, passing when the expanded word has
    trivial quotient images and identity matrix under each panel instance.
    """
    rows = []
    for label, r in labelled:
        x = expand_word(r)
        rows.append(
            {
                "item": f"{label}:{r}",
                "pass": battery_equal(x, wd.empty_word(x.ctx), panel),
                "detail": f"{len(r)} letters",
            }
        )
    f = pd.DataFrame(rows, columns=["item", "pass", "detail"])
    return vd.check_results(f.sort_values("item", ignore_index=True))


def subgroup_presentation(sc: SchreierContext, panel: Sequence = ()) -> SubgroupPresentation:
    """
    Return the presentation of the subgroup of the given context.
    Generators are the distinct Schreier generator labels in the standard
    generator order, relators are those of
    :func:`mvtwin.presentations.relators_mvpt` or
    :func:`mvtwin.presentations.relators_mvht`, and every stated relator
    and every rewritten conjugated ambient relator is checked to have trivial quotient images and
    identity matrix under each panel instance.

    Raise a ScaleError if ``n`` exceeds
    :const:`mvtwin.constants.MAX_PRESENTATION_DEGREE`.
    """
    n, k, group = sc.ctx.n, sc.ctx.k, sc.ctx.group
    vd.check_scale(n, cs.MAX_PRESENTATION_DEGREE, "Subgroup presentation")

    labels = {g.label[0] for g in schreier_generators(sc)}
    generators = tuple(g for g in wd.subgroup_generators(n, k, group) if g in labels)
    expansions = {g: expand(g, sc.ctx) for g in generators}
    stated = pr.relators(group, n, k).relators
    rewritten = rewritten_relators(sc)

    checks = relator_checks(
        [("stated", r) for r in stated] + [("rewritten", t) for t in rewritten], panel
    )
    logger.debug(
        "Subgroup %s at n=%s, k=%s: %s generators, %s rewritten relators",
        group,
        n,
        k,
        len(generators),
        len(rewritten),
    )
    return SubgroupPresentation(
        sc.ctx, generators, expansions, tuple(stated), tuple(rewritten), checks
    )
