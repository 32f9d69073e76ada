"""
The command-line-interface module.

Every command prints a report, as JSON with ``--json`` and as a text table
otherwise, and exits with 0 when every item passes, 1 when some item fails,
2 on a usage error, and 3 when the request is outside the package's domain.
"""

from __future__ import annotations

import functools
import logging
import sys

import click
import pandas as pd

from . import constants as cs
from . import exact as ex
from . import perm as pm
from . import presentations as pr
from . import reports as rp
from . import reps as rs
from . import schreier as sc
from . import validators as vd
from . import words as wd


#: Exit code for requests outside the domain
DOMAIN_EXIT_CODE = 3


def emits_report(f):
    """
    Decorate a command function returning a Report: print the report and
    exit with its code, or print the error and exit with
    :const:`DOMAIN_EXIT_CODE` on a package error.
    """

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        as_json = kwargs.pop("as_json")
        try:
            report = f(*args, **kwargs)
        except vd.MvtwinError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(DOMAIN_EXIT_CODE)
        click.echo(report.to_json() if as_json else report.to_text())
        sys.exit(report.exit_code)

    return wrapper


def json_option(f):
    return click.option(
        "--json", "as_json", is_flag=True, default=False, help="Print the report as JSON"
    )(f)


def ctx_options(n_default: int = 3, k_default: int = 1):
    def decorate(f):
        f = click.option(
            "--k",
            "k",
            default=k_default,
            type=int,
            show_default=True,
            help="Number of virtual layers",
        )(f)
        f = click.option(
            "--n",
            "n",
            default=n_default,
            type=int,
            show_default=True,
            help="Number of strands",
        )(f)
        return f

    return decorate


def seed_option(f):
    return click.option(
        "--seed",
        default=cs.SEED,
        type=int,
        show_default=True,
        help="Random seed for sampled parameters and panels",
    )(f)


def map_option(f):
    return click.option(
        "--map",
        "map_",
        default="phi",
        type=click.Choice(cs.MAPS),
        show_default=True,
        help="Quotient map whose kernel is the subgroup",
    )(f)


def param_options(f):
    for name, text in reversed(
        [
            ("--y", "Comma-separated rationals, one per layer"),
            ("--z", "Rational parameter of z6 and z7"),
            ("--a", "Rational parameter a of z8"),
            ("--b", "Rational parameter b of z8"),
        ]
    ):
        f = click.option(name, default=None, type=str, help=text)(f)
    f = click.option(
        "--constraint",
        default="none",
        type=click.Choice(cs.CONSTRAINTS),
        show_default=True,
        help="Constraint on sampled parameters, used when --y is absent",
    )(f)
    return f


def family_option(f):
    return click.option(
        "--family",
        required=True,
        type=click.Choice(cs.FAMILIES),
        help="Representation family",
    )(f)


def grid_option(f):
    return click.option(
        "--grid",
        default=None,
        type=str,
        help="Batch over comma-separated n:k pairs, overriding --n and --k",
    )(f)


def parse_grid(grid: str | None, n: int, k: int) -> list[tuple[int, int]]:
    """
    Parse ``"3:1,4:2"`` into grid points; return ``[(n, k)]`` when no grid
    is given.
    """
    if not grid:
        return [(n, k)]
    points = []
    for part in grid.split(","):
        try:
            a, b = part.split(":")
            points.append((int(a), int(b)))
        except ValueError:
            raise click.BadParameter(f"Grid point {part!r} is not of the form n:k")
    return points


def resolve_params(
    family: str, k: int, y, z, a, b, constraint: str, seed: int
) -> rs.RepParams:
    """
    Return the parameters given on the command line, or sampled ones when
    no ``y`` values are given.
    """
    if y is None and not (family == "z1" and constraint == "none"):
        return rs.sample_params(family, k, constraint, seed)
    ys = [] if y is None else [v for v in y.split(",") if v.strip()]
    return rs.make_params(ys, z, a, b)


def ctx_dict(n: int, k: int, group: str = "mvt") -> dict:
    return {"n": n, "k": k, "group": group}


def frame(rows: list[dict]) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=["item", "pass", "detail"])


@click.group()
@click.version_option(cs.VERSION)
@click.option("--verbose", is_flag=True, default=False, help="Log debug messages")
def mvtwin(verbose):
    """
    Exact computations in the multi-virtual twin group: presentations,
    quotient maps, Schreier rewriting, and 2-local representations.
    """
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)


@mvtwin.command(short_help="List the defining relators of a group")
@click.option(
    "--group",
    default="mvt",
    type=click.Choice(cs.GROUPS),
    show_default=True,
    help="Ambient group or one of its subgroups",
)
@ctx_options()
@json_option
@emits_report
def relators(group, n, k):
    """
    List the generators and defining relators of the multi-virtual twin
    group (mvt), its pure subgroup (mvpt) or its semi-pure subgroup (mvht).
    Each relator is an item whose detail gives its family and word.
    """
    pres = pr.relators(group, n, k)
    rows = [
        {"item": f"{m:04d}", "pass": True, "detail": f"{f}: {r}"}
        for m, (r, f) in enumerate(zip(pres.relators, pres.families))
    ]
    return rp.build_report(
        "relators",
        ctx_dict(n, k, group),
        frame(rows),
        extra={"generators": [str(g) for g in pres.generators]},
    )


@mvtwin.command(short_help="Compute the image of a word in S_n")
@click.option("--word", "text", required=True, help="Ambient word")
@map_option
@click.option(
    "--expect-kernel",
    is_flag=True,
    default=False,
    help="Fail unless the word lies in the kernel",
)
@ctx_options()
@json_option
@emits_report
def quotient(text, map_, expect_kernel, n, k):
    """
    Print the permutation of the given ambient word under phi or psi.
    """
    w = wd.parse_word(text, wd.GroupCtx(n, k))
    p = pm.image(w, map_)
    rows = [
        {"item": "image", "pass": True, "detail": str(p)},
        {
            "item": "kernel",
            "pass": p.is_identity or not expect_kernel,
            "detail": str(p.is_identity),
        },
    ]
    return rp.build_report("quotient", ctx_dict(n, k), frame(rows), extra={"word": str(w)})


@mvtwin.command(short_help="Print the Schreier transversal")
@map_option
@ctx_options()
@json_option
@emits_report
def transversal(map_, n, k):
    """
    Print the Schreier transversal word of every permutation of S_n and
    check it, together with the layer-0 section of the permutation, against
    phi.
    """
    sch = sc.build_transversal(n, k, cs.GROUP_BY_MAP[map_])
    rows = []
    for p, w in sch.transversal.items():
        rows.append({"item": f"rep:{p.images}", "pass": pm.phi(w) == p, "detail": f"{p} -> {w}"})
        s = pm.section(p, k)
        rows.append(
            {"item": f"section:{p.images}", "pass": pm.phi(s) == p, "detail": f"{p} -> {s}"}
        )
    return rp.build_report("transversal", ctx_dict(n, k, sch.ctx.group), frame(rows))


@mvtwin.group(short_help="Work with 2-local representations")
def rep():
    """
    Build and check the homogeneous 2-local representation families.
    Without --y, parameters are sampled from --seed and --constraint.
    """


def rep_command(name: str, short_help: str, grid: bool = False):
    """
    Decorate a function ``f(family, params, n, k, **options)`` returning a
    result table into a ``rep`` subcommand taking the family, its parameters,
    the context, and optionally a grid of contexts.
    """

    def decorate(f):
        @functools.wraps(f)
        def command(family, y, z, a, b, constraint, seed, n, k, grid=None, **options):
            reports = []
            for n_, k_ in parse_grid(grid, n, k):
                params = resolve_params(family, k_, y, z, a, b, constraint, seed)
                reports.append(
                    rp.build_report(
                        f"rep {name}",
                        ctx_dict(n_, k_),
                        f(family, params, n_, k_, **options),
                        family=family,
                        params=params.to_dict(),
                        seed=seed,
                    )
                )
            if len(reports) == 1:
                return reports[0]
            return rp.combine_reports(f"rep {name}", reports)

        command = emits_report(command)
        command = json_option(command)
        if grid:
            command = grid_option(command)
        command = ctx_options()(command)
        command = seed_option(command)
        command = param_options(command)
        command = family_option(command)
        return rep.command(name, short_help=short_help)(command)

    return decorate


@rep_command("verify", "Check every ambient relator", grid=True)
def rep_verify(family, params, n, k):
    """
    Evaluate every defining relator of the ambient group under the
    representation and check the 2-local shape of its images.
    """
    r = rs.build_rep(family, params, n, k)
    f = rs.verify_relations(r)
    shape = frame([{"item": "2-local", "pass": rs.is_2local(r), "detail": "homogeneous blocks"}])
    return pd.concat([f, shape], ignore_index=True)


@rep_command("irreducible", "Decide irreducibility", grid=True)
def rep_irreducible(family, params, n, k):
    """
    Decide irreducibility from the dimension of the generated algebra, and
    compare the published and the refined reducibility verdicts, and any
    invariant subspace witness, with that decision.
    """
    r = rs.build_rep(family, params, n, k)
    dim = ex.algebra_span_dimension(r.images())
    irreducible = dim == n * n
    verdict = lambda reducible: "reducible" if reducible else "irreducible"
    classified = rs.reducible_by_classification(family, params)
    refined = rs.reducible_refined(family, params)
    witnessed = rs.verify_invariant_witness(r)
    rows = [
        {
            "item": "burnside",
            "pass": True,
            "detail": f"{verdict(not irreducible)}: span dimension {dim} of {n * n}",
        },
        {"item": "classification", "pass": classified != irreducible, "detail": verdict(classified)},
        {"item": "refined", "pass": refined != irreducible, "detail": verdict(refined)},
        {
            "item": "invariant-witness",
            "pass": witnessed is None or (witnessed and not irreducible),
            "detail": "none" if witnessed is None else f"verified={witnessed}",
        },
    ]
    return frame(rows)


def kernel_rows(table: pd.DataFrame, certified_only: bool) -> pd.DataFrame:
    rows = [
        {
            "item": r["word"],
            "pass": bool(r["eval_identity"])
            and (r["status"] == "certified" or not certified_only),
            "detail": f"{r['status']}; phi {r['phi_image']}; psi {r['psi_image']}",
        }
        for r in table.to_dict("records")
    ]
    return frame(rows)


@rep_command("witness", "Check kernel witnesses")
def rep_witness(family, params, n, k):
    """
    Evaluate the known kernel words of the family; each must map to the
    identity and have a nontrivial quotient image.
    """
    return kernel_rows(rs.faithfulness_witnesses(family, params, n, k), True)


@rep_command("system", "Check the polynomial system")
def rep_system(family, params, n, k):
    """
    Substitute the family's blocks into the polynomial system of the
    2-local representations.
    """
    table = rs.system_equations(*rs.family_blocks(family, params))
    rows = [
        {"item": r["equation"], "pass": bool(r["holds"]), "detail": f"{r['lhs']} = {r['rhs']}"}
        for r in table.to_dict("records")
    ]
    return frame(rows)


@rep_command("kernel-search", "Search for short kernel words")
@click.option(
    "--max-len",
    default=cs.KERNEL_SEARCH_MAX_LEN,
    type=int,
    show_default=True,
    help="Longest word searched",
)
@click.option(
    "--beam",
    default=cs.KERNEL_SEARCH_BEAM,
    type=int,
    show_default=True,
    help="Words kept per length",
)
def rep_kernel_search(family, params, n, k, max_len, beam):
    """
    Search breadth first for words mapping to the identity.
    Every hit is an item; unresolved hits have trivial quotient images.
    """
    r = rs.build_rep(family, params, n, k)
    return kernel_rows(rs.kernel_search(r, max_len, beam), False)


@rep.command("pure-images", short_help="Check the pure subgroup images on three strands")
@click.option(
    "--case",
    "case",
    default=1,
    type=click.IntRange(1, 3),
    show_default=True,
    help="Shape of the s-block",
)
@click.option(
    "--signs",
    default="1,1",
    show_default=True,
    help="delta,epsilon for case 1; t for case 2",
)
@param_options
@seed_option
@json_option
@emits_report
def rep_pure_images(case, signs, y, z, a, b, constraint, seed):
    """
    Compare the closed-form images of the six pure subgroup generators on
    three strands with two layers against the images of their expansions.
    """
    try:
        sign_pair = tuple(int(v) for v in signs.split(","))
    except ValueError:
        raise click.BadParameter(f"Signs {signs!r} are not integers")
    sign_pair = (sign_pair + (1,))[:2]
    family = rs.pure_case_family(case, sign_pair)
    params = resolve_params(family, 2, y, z, a, b, constraint, seed)

    closed = rs.pure_rep_3_2(case, params, sign_pair)
    restricted = rs.restrict_rep(rs.build_rep(family, params, 3, 2), "mvpt")
    rows = [
        {
            "item": str(g),
            "pass": ex.mat_eq(M, restricted[g]),
            "detail": str(ex.format_matrix(M)),
        }
        for g, M in closed.items()
    ]
    return rp.build_report(
        "rep pure-images",
        ctx_dict(3, 2, "mvpt"),
        frame(rows),
        family=family,
        params=params.to_dict(),
        seed=seed,
        extra={"case": case},
    )


@mvtwin.group(short_help="Work with the pure and semi-pure subgroups")
def subgroup():
    """
    Schreier generators, presentations and rewriting for the kernels of
    phi and psi.
    """


@subgroup.command("gens", short_help="List the subgroup generators")
@map_option
@ctx_options(3, 2)
@json_option
@emits_report
def subgroup_gens(map_, n, k):
    """
    List the distinct Schreier generator labels with their ambient
    expansions; each must lie in the kernel and rewrite back to itself.
    """
    sch = sc.build_transversal(n, k, cs.GROUP_BY_MAP[map_])
    labels = []
    for g in sc.schreier_generators(sch):
        if g.label[0] not in labels:
            labels.append(g.label[0])

    rows = []
    for g in labels:
        x = sc.expand(g, sch.ctx)
        back = sc.rewrite(sch, x)
        rows.append(
            {
                "item": str(g),
                "pass": pm.in_kernel(x, map_) and back.letters == ((g, 1),),
                "detail": str(x),
            }
        )
    return rp.build_report("subgroup gens", ctx_dict(n, k, sch.ctx.group), frame(rows))


@subgroup.command("relators", short_help="Check the subgroup relators")
@map_option
@ctx_options(3, 2)
@seed_option
@json_option
@emits_report
def subgroup_relators(map_, n, k, seed):
    """
    Check every stated relator of the subgroup, and every rewritten
    conjugate of an ambient relator, against a panel of sampled
    representations.
    """
    sch = sc.build_transversal(n, k, cs.GROUP_BY_MAP[map_])
    panel = rs.sample_panel(n, k, seed)
    pres = sc.subgroup_presentation(sch, panel)
    checks = pres.checks
    if (sch.ctx.group, n, k) == ("mvpt", 3, 2):
        printed = [("printed", r) for r in pr.printed_pure_relators_3_2()]
        checks = pd.concat([checks, sc.relator_checks(printed, panel)], ignore_index=True)
    return rp.build_report(
        "subgroup relators",
        ctx_dict(n, k, sch.ctx.group),
        checks,
        seed=seed,
        extra={"generators": [str(g) for g in pres.generators]},
    )


@subgroup.command("rewrite", short_help="Rewrite a kernel word")
@click.option("--word", "text", required=True, help="Ambient kernel word")
@map_option
@ctx_options(3, 2)
@seed_option
@json_option
@emits_report
def subgroup_rewrite(text, map_, n, k, seed):
    """
    Rewrite the given ambient kernel word in the subgroup generators and
    check the result against a panel of sampled representations.
    """
    sch = sc.build_transversal(n, k, cs.GROUP_BY_MAP[map_])
    w = wd.parse_word(text, sch.ambient)
    t = sc.rewrite(sch, w)
    ok = sc.battery_equal(w, sc.expand_word(t), rs.sample_panel(n, k, seed))
    rows = [{"item": "rewrite", "pass": ok, "detail": str(t) or "(empty)"}]
    return rp.build_report("subgroup rewrite", ctx_dict(n, k, sch.ctx.group), frame(rows), seed=seed)


@mvtwin.command(short_help="Conjugate a subgroup symbol by a layer-0 word")
@click.option("--a", "text", required=True, help="Word in layer-0 virtual letters")
@click.option("--sym", "token", required=True, help="Subgroup symbol, e.g. L1.2.0")
@ctx_options(3, 2)
@seed_option
@json_option
@emits_report
def transport(text, token, n, k, seed):
    """
    Print the subgroup letter equal to a^-1 sym a, and check it against the
    conjugated expansion under a panel of sampled representations.
    """
    ambient = wd.GroupCtx(n, k)
    a = wd.parse_word(text, ambient)
    sym, exp = wd.parse_token(token)
    res, res_exp = sc.transport(a, sym)
    res_exp *= exp

    group = sym.group
    sub = ambient.with_group(group)
    result = wd.Word(((res, res_exp),), sub)
    conjugated = wd.concat(
        wd.invert(a), sc.expand_word(wd.Word(((sym, exp),), sub)), a
    )
    ok = sc.battery_equal(sc.expand_word(result), conjugated, rs.sample_panel(n, k, seed))
    rows = [{"item": "transport", "pass": ok, "detail": str(result)}]
    return rp.build_report("transport", ctx_dict(n, k, group), frame(rows), seed=seed)


def main(argv: list[str] | None = None) -> int:
    """
    Run the command line on the given arguments and return the exit code.
    """
    try:
        code = mvtwin.main(args=argv, prog_name="mvtwin", standalone_mode=False)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0
    except click.ClickException as e:
        e.show()
        return e.exit_code
    return code if isinstance(code, int) else 0
