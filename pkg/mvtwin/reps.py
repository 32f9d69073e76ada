"""
The eight homogeneous 2-local representation families ``z1`` to ``z8`` of
the multi-virtual twin group, word evaluation, relation and system checks,
faithfulness witnesses, reducibility predicates, the images of the pure
subgroup on three strands with two layers, and a bounded kernel search.

Every family sends s_i to a fixed 2 x 2 block and rho_i^a to a fixed block
per layer ``a``, placed at rows and columns ``i, i + 1`` of the identity.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import pandas as pd

from . import constants as cs
from . import exact as ex
from . import perm as pm
from . import presentations as pr
from . import schreier as sc
from . import validators as vd
from . import words as wd


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RepParams:
    """
    Parameters of a representation family: one nonzero ``y`` per layer,
    a nonzero ``z`` for ``z6`` and ``z7``, and ``a`` with nonzero ``b`` for
    ``z8``.
    Entries may be given as integers, Fractions or rational literals.
    """

    y: tuple[Fraction, ...] = ()
    z: Fraction | None = None
    a: Fraction | None = None
    b: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "y", tuple(ex.to_fraction(v) for v in self.y))
        for name in ["z", "a", "b"]:
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, ex.to_fraction(value))

        if any(v == 0 for v in self.y):
            raise vd.ParameterError("Every y must be nonzero")
        if self.z == 0:
            raise vd.ParameterError("Parameter z must be nonzero")
        if self.b == 0:
            raise vd.ParameterError("Parameter b must be nonzero")

    @property
    def y_equal(self) -> bool:
        return len(set(self.y)) <= 1

    def to_dict(self) -> dict:
        """
        Return the parameters as rational strings, omitting absent ones.
        """
        d = {"y": [ex.format_rational(v) for v in self.y]}
        for name in ["z", "a", "b"]:
            value = getattr(self, name)
            if value is not None:
                d[name] = ex.format_rational(value)
        return d


def make_params(y: Sequence = (), z=None, a=None, b=None) -> RepParams:
    return RepParams(tuple(y), z, a, b)


def check_params(family: str, params: RepParams, k: int | None = None) -> None:
    """
    Raise a ParameterError if the given parameters do not suit the family,
    or, when ``k`` is given, do not carry one ``y`` per layer.
    """
    vd.check_family(family)
    if family == "z1":
        return
    if not params.y:
        raise vd.ParameterError(f"Family {family} needs y values")
    if k is not None and len(params.y) != k:
        raise vd.ParameterError(f"Family {family} needs {k} y values; got {len(params.y)}")
    for name in cs.PARAMS_BY_FAMILY[family]:
        if name != "y" and getattr(params, name) is None:
            raise vd.ParameterError(f"Family {family} needs parameter {name}")


def s_block(family: str, params: RepParams) -> ex.Matrix:
    """
    Return the 2 x 2 block of the image of s_i.
    """
    check_params(family, params)
    if family in ["z1", "z2"]:
        return ex.identity(2)
    elif family == "z3":
        return ex.diag([1, -1])
    elif family == "z4":
        return ex.diag([-1, 1])
    elif family == "z5":
        return ex.diag([-1, -1])
    elif family == "z6":
        return ex.matrix([[1, params.z], [0, -1]])
    elif family == "z7":
        return ex.matrix([[-1, params.z], [0, 1]])
    else:
        a, b = params.a, params.b
        return ex.matrix([[-a, -(a * a - 1) / b], [b, a]])


def rho_block(family: str, params: RepParams, layer: int) -> ex.Matrix:
    """
    Return the 2 x 2 block of the image of rho_i^layer: the identity for
    ``z1``, otherwise [[0, 1/y], [y, 0]] with y the layer's parameter.
    """
    check_params(family, params)
    if family == "z1":
        return ex.identity(2)
    y = params.y[layer]
    return ex.matrix([[0, 1 / y], [y, 0]])


@dataclass(frozen=True, eq=False)
class RepInstance:
    """
    A representation of the ambient group given by the images of its
    generators.
    Every image must be invertible.
    """

    family: str
    ctx: wd.GroupCtx
    params: RepParams
    table: dict[wd.GenSym, ex.Matrix] = field(repr=False)
    inverses: dict[wd.GenSym, ex.Matrix] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "inverses", {g: ex.inverse(M) for g, M in self.table.items()}
        )

    def __str__(self) -> str:
        return f"{self.family}(n={self.ctx.n}, k={self.ctx.k})"

    def evaluate(self, w: wd.Word) -> ex.Matrix:
        return evaluate(self, w)

    def images(self) -> list[ex.Matrix]:
        """
        Return the generator images in the standard generator order.
        """
        return [self.table[g] for g in wd.ambient_generators(self.ctx.n, self.ctx.k)]


def build_rep_from_blocks(
    n: int,
    k: int,
    s_blk: ex.Matrix,
    rho_blks: Sequence[ex.Matrix],
    family: str = "custom",
    params: RepParams | None = None,
) -> RepInstance:
    """
    Build a homogeneous 2-local assignment from an s-block and one
    rho-block per layer.
    The result need not respect the group relations.
    """
    ctx = wd.GroupCtx(n, k)
    if len(rho_blks) != k:
        raise vd.ParameterError(f"Need {k} rho blocks; got {len(rho_blks)}")

    table = {}
    for i in range(1, n):
        table[wd.GenSym.s(i)] = ex.embed_block(n, i, s_blk)
    for a in range(k):
        for i in range(1, n):
            table[wd.GenSym.rho(i, a)] = ex.embed_block(n, i, rho_blks[a])
    return RepInstance(family, ctx, params or RepParams(), table)


def build_rep(family: str, params: RepParams, n: int, k: int) -> RepInstance:
    """
    Build the representation of the given family on ``n >= 3`` strands with
    ``k`` layers.
    Raise a ParameterError if the parameters are incomplete or zero where
    they must not be.
    """
    vd.check_family(family)
    vd.check_ctx(n, k)
    if n < cs.MIN_REP_DEGREE:
        raise vd.DomainError(f"Representations are classified for n >= {cs.MIN_REP_DEGREE}; got n={n}")
    check_params(family, params, None if family == "z1" else k)

    return build_rep_from_blocks(
        n,
        k,
        s_block(family, params),
        [rho_block(family, params, a) for a in range(k)],
        family,
        params,
    )


def evaluate(rep: RepInstance, w: wd.Word) -> ex.Matrix:
    """
    Return the product of the images of the letters of the given ambient
    word, left to right; inverse letters use the exact inverse image.
    """
    if w.ctx.group != "mvt":
        raise vd.AlphabetError(f"Only ambient words evaluate; got a {w.ctx.group} word")
    if w.ctx != rep.ctx:
        raise vd.ContextError(f"Word lives in {w.ctx}; representation in {rep.ctx}")

    M = ex.identity(rep.ctx.n)
    for sym, exp in w.letters:
        M = ex.mat_mul(M, rep.table[sym] if exp == 1 else rep.inverses[sym])
    return M


def evaluate_images(images: dict, w: wd.Word, n: int) -> ex.Matrix:
    """
    Return the product of the given images of the letters of the word
    ``w``, which may be a subgroup word.
    """
    M = ex.identity(n)
    for sym, exp in w.letters:
        X = images[sym]
        M = ex.mat_mul(M, X if exp == 1 else ex.inverse(X))
    return M


def results_frame(rows: list[dict]) -> pd.DataFrame:
    """
    Return a result table with columns ``item``, ``pass``, ``detail``,
    sorted by item.
    """
    f = pd.DataFrame(rows, columns=["item", "pass", "detail"])
    return vd.check_results(f.sort_values("item", ignore_index=True))


def verify_relations(rep: RepInstance) -> pd.DataFrame:
    """
    Evaluate every relator of the ambient presentation under the given
    representation.
    Return a result table with one row per relator, passing when the image
    is exactly the identity, and the relation family as detail.
    """
    pres = pr.relators_mvt(rep.ctx.n, rep.ctx.k)
    rows = [
        {"item": str(r), "pass": ex.is_identity(evaluate(rep, r)), "detail": f}
        for r, f in zip(pres.relators, pres.families)
    ]
    return results_frame(rows)


def _entries(block: ex.Matrix) -> tuple:
    return block[0, 0], block[0, 1], block[1, 0], block[1, 1]


def system_equations(s_blk: ex.Matrix, rho_blks: Sequence[ex.Matrix]) -> pd.DataFrame:
    """
    Substitute the given s-block [[a, b], [c, d]] and rho-blocks
    [[w, x], [y, z]], one per layer, into the polynomial system whose
    solutions are the homogeneous 2-local representations.
    Return a DataFrame with the columns

    - ``"equation"``: name of the equation, with its layers
    - ``"lhs"``, ``"rhs"``: both sides as rational strings
    - ``"holds"``: True if both sides agree
    """
    a, b, c, d = _entries(s_blk)
    rows = []

    def add(name, lhs, rhs):
        rows.append((name, lhs, rhs))

    add("s_square[1]", a * a + b * c, 1)
    add("s_square[2]", a * b + b * d, 0)
    add("s_square[3]", a * c + c * d, 0)
    add("s_square[4]", d * d + b * c, 1)

    for be, blk in enumerate(rho_blks):
        w, x, y, z = _entries(blk)
        t = f"[{be}]"
        add(f"rho_square{t}[1]", w * w + x * y, 1)
        add(f"rho_square{t}[2]", w * x + x * z, 0)
        add(f"rho_square{t}[3]", w * y + y * z, 0)
        add(f"rho_square{t}[4]", z * z + x * y, 1)

        add(f"braid{t}[1]", w * w + x * y * w, w)
        add(f"braid{t}[2]", w * x + w * x * z, w * x)
        add(f"braid{t}[3]", w * y + w * y * z, w * y)
        add(f"braid{t}[4]", w * z * z + x * y, z * w * w + x * y)
        add(f"braid{t}[5]", x * z + w * x * z, x * z)
        add(f"braid{t}[6]", y * z + w * y * z, y * z)
        add(f"braid{t}[7]", z * z + x * y * z, z)

        add(f"mixed_braid{t}[1]", a * w + c * w * x, w)
        add(f"mixed_braid{t}[2]", b * w + d * w * x, w * x)
        add(f"mixed_braid{t}[3]", a * y + c * w * z, a * y)
        add(f"mixed_braid{t}[4]", b * y + d * w * z, b * y + a * w * z)
        add(f"mixed_braid{t}[5]", b * z + a * x * z, x * z)
        add(f"mixed_braid{t}[6]", d * y + c * w * z, d * y)
        add(f"mixed_braid{t}[7]", d * z + c * x * z, z)

    for al, lo in enumerate(rho_blks):
        for be, hi in enumerate(rho_blks):
            if al >= be:
                continue
            wa, xa, ya, za = _entries(lo)
            wb, xb, yb, zb = _entries(hi)
            t = f"[{al},{be}]"
            add(f"layer_braid_a{t}[1]", wb * wa + wb * yb * xa, wb)
            add(f"layer_braid_a{t}[2]", xb * wa + wb * yb * xa, xb * wa)
            add(f"layer_braid_a{t}[3]", wb * ya + wb * yb * za, wb * ya)
            add(f"layer_braid_a{t}[4]", xb * ya + wb * zb * za, xb * ya + wb * zb * wa)
            add(f"layer_braid_a{t}[5]", xb * za + wb * zb * xa, xb * za)
            add(f"layer_braid_a{t}[6]", zb * ya + yb * zb * xa, yb * zb)
            add(f"layer_braid_a{t}[7]", zb * za + yb * zb * xa, zb)

            add(f"layer_braid_b{t}[1]", wb * wa + yb * wa * xa, wa)
            add(f"layer_braid_b{t}[2]", xb * wa + zb * wa * xa, wa * xa)
            add(f"layer_braid_b{t}[3]", wb * ya + yb * wa * za, wb * ya)
            add(f"layer_braid_b{t}[4]", xb * ya + zb * wa * za, xb * ya + wb * wa * za)
            add(f"layer_braid_b{t}[5]", xb * za + wb * xa * za, zb * ya)
            add(f"layer_braid_b{t}[6]", zb * za + yb * xa * za, za)

    return pd.DataFrame(
        [
            {
                "equation": name,
                "lhs": ex.format_rational(ex.to_fraction(lhs)),
                "rhs": ex.format_rational(ex.to_fraction(rhs)),
                "holds": lhs == rhs,
            }
            for name, lhs, rhs in rows
        ],
        columns=["equation", "lhs", "rhs", "holds"],
    )


def check_system(s_blk: ex.Matrix, rho_blks: Sequence[ex.Matrix]) -> bool:
    return bool(system_equations(s_blk, rho_blks)["holds"].all())


def family_blocks(family: str, params: RepParams) -> tuple[ex.Matrix, list[ex.Matrix]]:
    """
    Return the s-block and the rho-blocks of the given family, one per
    ``y`` value (a single identity block for ``z1`` without ``y`` values).
    """
    check_params(family, params)
    layers = max(len(params.y), 1)
    return s_block(family, params), [rho_block(family, params, a) for a in range(layers)]


def verify_system(family: str, params: RepParams) -> bool:
    """
    True if the blocks of the given family satisfy every equation of the
    system of :func:`system_equations`.
    """
    return check_system(*family_blocks(family, params))


def certificate(w: wd.Word) -> str | None:
    """
    Return ``"phi"`` if the given word has a nontrivial phi-image, else
    ``"psi"`` if it has a nontrivial psi-image, else None.
    """
    if not pm.phi(w).is_identity:
        return "phi"
    if not pm.psi(w).is_identity:
        return "psi"
    return None


def kernel_words_frame(rep: RepInstance, found: Sequence[wd.Word]) -> pd.DataFrame:
    """
    Return a table describing the given words: rendered word, length,
    whether its image is the identity, its quotient images, and status
    ``"certified"`` when a quotient image is nontrivial.
    """
    rows = [
        {
            "word": str(w),
            "length": len(w),
            "eval_identity": ex.is_identity(evaluate(rep, w)),
            "phi_image": str(pm.phi(w)),
            "psi_image": str(pm.psi(w)),
            "status": "certified" if certificate(w) else "unresolved",
        }
        for w in found
    ]
    return vd.check_kernel_words(
        pd.DataFrame(
            rows,
            columns=["word", "length", "eval_identity", "phi_image", "psi_image", "status"],
        )
    )


def witness_words(family: str, params: RepParams, n: int, k: int) -> list[wd.Word]:
    """
    Return the words known to lie in the kernel of the given family, over
    all admissible positions ``i`` and layers.
    Raise a NotApplicableError for ``z8`` unless ``a`` is -1, 0 or 1.
    """
    check_params(family, params)
    ctx = wd.GroupCtx(n, k)
    s, p = wd.GenSym.s, wd.GenSym.rho

    def power(letters, m):
        return wd.make_word(ctx, *(letters * m))

    if family == "z8":
        if params.a not in (-1, 0, 1):
            raise vd.NotApplicableError(
                f"No kernel witnesses are known for z8 with a={params.a}"
            )
        shape = {-1: ("left", 4), 0: ("left", 3), 1: ("right", 4)}[int(params.a)]
    elif family == "z6":
        shape = ("left", 4)
    elif family == "z7":
        shape = ("right", 4)
    else:
        shape = None

    if family in ["z1", "z2"]:
        return [wd.make_word(ctx, s(i)) for i in range(1, n)]
    if family in cs.SIGN_FAMILIES:
        return [power([s(i), s(i + 1)], 2) for i in range(1, n - 1)]

    side, m = shape
    result = []
    for i in range(1, n - 1):
        for a in range(k):
            if side == "left":
                result.append(power([s(i), p(i + 1, a)], m))
            else:
                result.append(power([s(i + 1), p(i, a)], m))
    return result


def faithfulness_witnesses(family: str, params: RepParams, n: int, k: int) -> pd.DataFrame:
    """
    Return a table of kernel words of the given family with their
    certificates; see :func:`kernel_words_frame`.
    A row is a proof of unfaithfulness when its image is the identity and
    its status is ``"certified"``.
    """
    rep = build_rep(family, params, n, k)
    return kernel_words_frame(rep, witness_words(family, params, n, k))


def reducible_by_classification(family: str, params: RepParams) -> bool:
    """
    Return the reducibility verdict of the published classification:
    ``z1`` reducible; ``z2`` to ``z5`` reducible exactly when all ``y``
    agree; ``z6`` and ``z7`` irreducible; ``z8`` reducible exactly when all
    ``y`` agree, say to ``y``, and b/y is 1 + a or 1 - a.
    """
    check_params(family, params)
    if family == "z1":
        return True
    if family in ["z6", "z7"]:
        return False
    if family == "z8":
        if not params.y_equal:
            return False
        r = params.b / params.y[0]
        return r in (1 + params.a, 1 - params.a)
    return params.y_equal


def reducible_refined(family: str, params: RepParams) -> bool:
    """
    Return the reducibility verdict that agrees with the algebra-span
    decision for every ``n >= 3``.
    With all ``y`` equal, conjugation by :func:`equivalence_diagonal` turns
    every rho-image into a permutation matrix, so the only candidate
    invariant subspaces are the all-ones line and the sum-zero hyperplane.
    This makes ``z3`` to ``z5`` irreducible, and ``z6`` and ``z7`` reducible
    exactly when y z = 2.
    """
    check_params(family, params)
    if family == "z1":
        return True
    if not params.y_equal:
        return False

    y = params.y[0]
    if family == "z2":
        return True
    if family in cs.SIGN_FAMILIES:
        return False
    if family in ["z6", "z7"]:
        return y * params.z == 2
    return params.b / y in (1 + params.a, 1 - params.a)


def invariant_witness(family: str, params: RepParams, n: int) -> tuple[str, ex.Matrix] | None:
    """
    Return ``("line", v)`` with an invariant vector ``v``, or
    ``("hyperplane", w)`` with a row vector ``w`` whose kernel is invariant,
    when the refined verdict is reducible; otherwise None.
    """
    if not reducible_refined(family, params):
        return None
    if family == "z1":
        return "line", ex.vector([1] + [0] * (n - 1))

    y = params.y[0]
    line = ex.vector([y**m for m in range(n)])
    hyperplane = ex.vector([y ** (n - 1 - m) for m in range(n)])
    if family == "z6":
        return "hyperplane", hyperplane
    if family == "z8" and params.b / y != 1 - params.a:
        return "hyperplane", hyperplane
    return "line", line


def verify_invariant_witness(rep: RepInstance) -> bool | None:
    """
    Check the invariant witness of the given instance against its images.
    Return None if there is no witness.
    """
    witness = invariant_witness(rep.family, rep.params, rep.ctx.n)
    if witness is None:
        return None
    kind, v = witness
    if kind == "line":
        return ex.verify_invariant_line(v, rep.images())
    return ex.verify_invariant_hyperplane(v, rep.images())


def equivalence_diagonal(n: int, y) -> ex.Matrix:
    """
    Return diag(y^{1-n}, ..., y^{-1}, 1).
    """
    y = ex.to_fraction(y)
    return ex.diag([y ** (m + 1 - n) for m in range(n)])


def conjugate_table(table: dict, P: ex.Matrix) -> dict:
    """
    Return the images ``P^{-1} M P`` of the given image table.
    """
    Q = ex.inverse(P)
    return {g: ex.mat_mul(ex.mat_mul(Q, M), P) for g, M in table.items()}


def is_2local(rep: RepInstance) -> bool:
    """
    True if every image differs from the identity only in its block at rows
    and columns ``i, i + 1`` and the blocks agree across positions, for
    the s-images and for the rho-images of each layer.
    """
    n = rep.ctx.n
    I = ex.identity(n)
    blocks = {}
    for g, M in rep.table.items():
        lo, hi = g.i - 1, g.i + 1
        outside = [
            (r, c) for r in range(n) for c in range(n) if not (lo <= r < hi and lo <= c < hi)
        ]
        if any(M[r, c] != I[r, c] for r, c in outside):
            return False
        key = (g.kind, g.layer)
        block = ex.matrix(M[lo:hi, lo:hi])
        if key in blocks and not ex.mat_eq(blocks[key], block):
            return False
        blocks.setdefault(key, block)
    return True


def restrict_rep(rep: RepInstance, group: str) -> dict[wd.GenSym, ex.Matrix]:
    """
    Return the images of the generators of the pure (``"mvpt"``) or
    semi-pure (``"mvht"``) subgroup: each generator maps to the image of its
    ambient expansion.
    """
    ctx = rep.ctx.with_group(group)
    if group not in cs.MAP_BY_GROUP:
        raise vd.DomainError(f"Group must be one of {list(cs.MAP_BY_GROUP)}; got {group!r}")
    return {
        g: evaluate(rep, sc.expand(g, ctx))
        for g in wd.subgroup_generators(ctx.n, ctx.k, group)
    }


def verify_subgroup_relations(rep: RepInstance, group: str) -> pd.DataFrame:
    """
    Evaluate every stated relator of the given subgroup under the
    restriction of the representation.
    Return a result table with one row per relator.
    """
    images = restrict_rep(rep, group)
    pres = pr.relators(group, rep.ctx.n, rep.ctx.k)
    rows = [
        {
            "item": str(r),
            "pass": ex.is_identity(evaluate_images(images, r, rep.ctx.n)),
            "detail": f,
        }
        for r, f in zip(pres.relators, pres.families)
    ]
    return results_frame(rows)


#: Family realizing each case and sign choice of the pure subgroup images
PURE_CASE_FAMILIES = {
    (1, (1, 1)): "z2",
    (1, (1, -1)): "z3",
    (1, (-1, 1)): "z4",
    (1, (-1, -1)): "z5",
    (2, (1, 1)): "z6",
    (2, (-1, 1)): "z7",
    (3, (1, 1)): "z8",
}


def pure_case_family(case: int, signs: tuple[int, int] = (1, 1)) -> str:
    """
    Return the family whose restriction gives the pure subgroup images of
    the given case.
    Case 1 takes signs ``(delta, epsilon)``, the diagonal of the s-block;
    case 2 takes ``(t, 1)`` with s-block [[t, z], [0, -t]]; case 3 ignores
    the signs.
    """
    if case == 3:
        signs = (1, 1)
    elif case == 2:
        signs = (signs[0], 1)
    if (case, tuple(signs)) not in PURE_CASE_FAMILIES:
        raise vd.DomainError(f"No pure subgroup images for case {case} with signs {signs}")
    return PURE_CASE_FAMILIES[(case, tuple(signs))]


def pure_rep_3_2(
    case: int, params: RepParams, signs: tuple[int, int] = (1, 1)
) -> dict[wd.GenSym, ex.Matrix]:
    """
    Return the images of lambda_{1,2}^0, lambda_{2,3}^0, lambda_{1,3}^0,
    lambda_{1,2}^1, lambda_{2,3}^1, lambda_{1,3}^1 in the pure subgroup on
    three strands with two layers, for

    1. s-block diag(delta, epsilon), with ``signs = (delta, epsilon)``;
    2. s-block [[t, z], [0, -t]], with ``signs = (t, 1)``;
    3. s-block [[-a, -(a^2 - 1)/b], [b, a]].

    Raise a ParameterError unless there are two ``y`` values and the case's
    parameters are present.
    """
    family = pure_case_family(case, signs)
    check_params(family, params, 2)
    y0, y1 = params.y

    # lambda_{i,i+1}^0 has block [[p, q], [r, u]]
    if case == 1:
        delta, eps = signs
        p, q, r, u = 0, eps / y0, delta * y0, 0
    elif case == 2:
        t, z = signs[0], params.z
        p, q, r, u = 0, -t / y0, t * y0, y0 * z
    else:
        a, b = params.a, params.b
        p, q, r, u = b / y0, a / y0, -a * y0, (1 - a * a) * y0 / b

    lam = wd.GenSym.lam
    block = ex.matrix([[p, q], [r, u]])
    return {
        lam(1, 2): ex.embed_block(3, 1, block),
        lam(2, 3): ex.embed_block(3, 2, block),
        lam(1, 3): ex.matrix([[p, 0, q / y0], [0, 1, 0], [r * y0, 0, u]]),
        lam(1, 2, 1): ex.diag([y1 / y0, y0 / y1, 1]),
        lam(2, 3, 1): ex.diag([1, y1 / y0, y0 / y1]),
        lam(1, 3, 1): ex.diag([y1 / y0, 1, y0 / y1]),
    }


def kernel_search(
    rep: RepInstance,
    max_len: int = cs.KERNEL_SEARCH_MAX_LEN,
    beam: int = cs.KERNEL_SEARCH_BEAM,
) -> pd.DataFrame:
    """
    Search breadth first, over ambient words without a repeated adjacent
    letter, for words in the kernel of the given representation.
    A word whose image is the identity is a hit, as is ``u w^{-1}`` for a
    word ``w`` whose image equals that of an earlier word ``u``; hits are
    freely reduced and deduplicated, and neither kind is extended.
    At most ``beam`` words are kept per length.

    Return a table as in :func:`kernel_words_frame`; a hit with trivial
    quotient images is ``"unresolved"``.
    No completeness is claimed.
    """
    ctx = rep.ctx
    gens = wd.ambient_generators(ctx.n, ctx.k)
    empty = wd.empty_word(ctx)
    start = ex.identity(ctx.n)
    seen = {ex.matrix_key(start): empty}
    level = [(empty, start)]
    hits = []
    hit_keys = set()

    def record(w):
        w = wd.free_reduce(w)
        if w.letters and w.letters not in hit_keys:
            hit_keys.add(w.letters)
            hits.append(w)

    for length in range(1, max_len + 1):
        next_level = []
        for w, M in level:
            last = w.letters[-1][0] if w.letters else None
            for g in gens:
                if g == last:
                    continue
                v = wd.Word(w.letters + ((g, 1),), ctx)
                N = ex.mat_mul(M, rep.table[g])
                key = ex.matrix_key(N)
                if key in seen:
                    record(wd.concat(seen[key], wd.invert(v)))
                    continue
                seen[key] = v
                next_level.append((v, N))
        level = next_level[:beam]
        logger.debug(
            "Kernel search of %s at length %s: %s words, %s hits", rep, length, len(level), len(hits)
        )
        if not level:
            break

    return kernel_words_frame(rep, hits)


def sample_rational(rng: random.Random) -> Fraction:
    """
    Return a nonzero rational with numerator and denominator uniform in
    :const:`mvtwin.constants.SAMPLE_RANGE` and a random sign.
    """
    lo, hi = cs.SAMPLE_RANGE
    return Fraction(rng.randint(lo, hi), rng.randint(lo, hi)) * rng.choice([1, -1])


def sample_params(
    family: str, k: int, constraint: str = "none", seed: int = cs.SEED
) -> RepParams:
    """
    Return reproducible random parameters of the given family with ``k``
    layers satisfying the given constraint, one of
    :const:`mvtwin.constants.CONSTRAINTS`.
    Raise a ParameterError if the constraint cannot be met.
    """
    vd.check_family(family)
    if constraint not in cs.CONSTRAINTS:
        raise vd.DomainError(f"Constraint must be one of {cs.CONSTRAINTS}; got {constraint!r}")
    if constraint.startswith("zeta8") and family != "z8":
        raise vd.ParameterError(f"Constraint {constraint} applies to z8 only")
    if constraint == "z-boundary" and family not in ["z6", "z7"]:
        raise vd.ParameterError("Constraint z-boundary applies to z6 and z7 only")
    if constraint == "y-distinct" and k < 2:
        raise vd.ParameterError("Constraint y-distinct needs k >= 2")

    rng = random.Random(seed)
    equal = constraint in ["all-y-equal", "z-boundary"] or constraint.startswith("zeta8")
    if equal:
        y = [sample_rational(rng)] * k
    else:
        y = [sample_rational(rng) for __ in range(k)]
        while constraint == "y-distinct" and len(set(y)) < k:
            y = [sample_rational(rng) for __ in range(k)]

    z = a = b = None
    if family in ["z6", "z7"]:
        if constraint == "z-boundary":
            z = 2 / y[0]
        else:
            z = sample_rational(rng)
            while constraint == "all-y-equal" and y[0] * z == 2:
                z = sample_rational(rng)
    elif family == "z8":
        a = sample_rational(rng)
        if constraint == "zeta8-boundary(+)":
            while a == -1:
                a = sample_rational(rng)
            b = (1 + a) * y[0]
        elif constraint == "zeta8-boundary(-)":
            while a == 1:
                a = sample_rational(rng)
            b = (1 - a) * y[0]
        else:
            b = sample_rational(rng)
            while constraint == "zeta8-generic" and b / y[0] in (1 + a, 1 - a):
                b = sample_rational(rng)

    return RepParams(tuple(y), z, a, b)


def sample_panel(n: int, k: int, seed: int = cs.SEED) -> list[RepInstance]:
    """
    Return representation instances of the families
    :const:`mvtwin.constants.PANEL_FAMILIES` with reproducible random
    parameters, used to compare group elements.
    Return an empty list for ``n < 3``, where no family is defined.
    """
    if n < cs.MIN_REP_DEGREE:
        return []
    rng = random.Random(seed)
    return [
        build_rep(
            family,
            sample_params(family, k, cs.PANEL_CONSTRAINTS.get(family, "none"), rng.randrange(2**31)),
            n,
            k,
        )
        for family in cs.PANEL_FAMILIES
    ]
