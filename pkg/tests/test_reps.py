from fractions import Fraction

from hypothesis import given, settings

from .context import mvtwin, pytest
from .strategies import words
import mvtwin as mv


def make_rep(family, n=3, k=1, constraint="none", seed=0):
    params = mv.sample_params(family, k, constraint, seed)
    return mv.build_rep(family, params, n, k)


# Family, constraint and number of layers of every sampled branch
BRANCHES = (
    [("z1", "none", 1), ("z1", "none", 2)]
    + [(f, c, 2) for f in ["z2", "z3", "z4", "z5"] for c in ["all-y-equal", "y-distinct"]]
    + [(f, c, 2) for f in ["z6", "z7"] for c in ["all-y-equal", "y-distinct", "z-boundary"]]
    + [
        ("z8", c, 2)
        for c in ["zeta8-boundary(+)", "zeta8-boundary(-)", "zeta8-generic", "y-distinct"]
    ]
)


def test_rep_params():
    params = mv.make_params(y=["1/2", 3], z="-4")
    assert params.y == (Fraction(1, 2), Fraction(3))
    assert params.z == -4
    assert params.to_dict() == {"y": ["1/2", "3/1"], "z": "-4/1"}
    assert not params.y_equal
    assert mv.make_params(y=[2, 2]).y_equal

    with pytest.raises(mv.ParameterError):
        mv.make_params(y=[0])
    with pytest.raises(mv.ParameterError):
        mv.make_params(y=[1], a=1, b=0)
    with pytest.raises(mv.ParameterError):
        mv.check_params("z6", mv.make_params(y=[1]))
    with pytest.raises(mv.ParameterError):
        mv.check_params("z2", mv.make_params(y=[1]), k=2)
    with pytest.raises(mv.DomainError):
        mv.check_params("z9", mv.make_params(y=[1]))
    mv.check_params("z1", mv.RepParams())


def test_blocks():
    params = mv.make_params(y=[2], z=3, a=0, b=1)
    assert mv.mat_eq(mv.s_block("z3", params), mv.diag([1, -1]))
    assert mv.mat_eq(mv.s_block("z6", params), mv.matrix([[1, 3], [0, -1]]))
    assert mv.mat_eq(mv.s_block("z8", params), mv.matrix([[0, 1], [1, 0]]))
    assert mv.mat_eq(mv.rho_block("z2", params, 0), mv.matrix([[0, "1/2"], [2, 0]]))
    assert mv.is_identity(mv.rho_block("z1", params, 0))


def test_build_rep():
    rep = mv.build_rep("z3", mv.make_params(y=[2]), 3, 1)
    assert mv.mat_eq(rep.table[mv.GenSym.s(1)], mv.diag([1, -1, 1]))
    assert mv.mat_eq(
        rep.table[mv.GenSym.rho(2)], mv.matrix([[1, 0, 0], [0, 0, "1/2"], [0, 2, 0]])
    )
    assert len(rep.images()) == 4
    assert str(rep) == "z3(n=3, k=1)"

    with pytest.raises(mv.DomainError):
        mv.build_rep("z3", mv.make_params(y=[2]), 2, 1)
    with pytest.raises(mv.ParameterError):
        mv.build_rep("z3", mv.make_params(y=[2]), 3, 2)
    with pytest.raises(mv.ParameterError):
        mv.build_rep("z8", mv.make_params(y=[2], a=1), 3, 1)


def test_evaluate():
    ctx = mv.GroupCtx(3, 1)
    rep = mv.build_rep("z3", mv.make_params(y=[2]), 3, 1)
    assert mv.is_identity(mv.evaluate(rep, mv.empty_word(ctx)))
    assert mv.is_identity(rep.evaluate(mv.parse_word("s1 s2 s1 s2", ctx)))
    assert mv.is_identity(rep.evaluate(mv.parse_word("p1.0 p1.0!", ctx)))
    assert not mv.is_identity(rep.evaluate(mv.parse_word("p1.0 s1", ctx)))

    with pytest.raises(mv.ContextError):
        rep.evaluate(mv.parse_word("s1", mv.GroupCtx(4, 1)))
    with pytest.raises(mv.AlphabetError):
        rep.evaluate(mv.parse_word("L1.2.0", ctx.with_group("mvpt")))


@settings(deadline=None)
@given(words(mv.GroupCtx(4, 2), max_size=10))
def test_evaluate_respects_free_reduction(w):
    rep = make_rep("z8", 4, 2)
    assert mv.mat_eq(rep.evaluate(w), rep.evaluate(mv.free_reduce(w)))


def test_verify_relations():
    for family in mv.FAMILIES:
        for k in [1, 2]:
            f = mv.verify_relations(make_rep(family, 3, k))
            assert f["pass"].all()
            assert f.shape[0] == len(mv.relators_mvt(3, k))

    rep = mv.build_rep("z8", mv.make_params(y=[1], a=2, b=3), 3, 1)
    assert mv.verify_relations(rep)["pass"].all()


@pytest.mark.slow
def test_verify_relations_grid():
    for family in mv.FAMILIES:
        for n in [3, 4, 5]:
            for k in [1, 2, 3]:
                for seed in range(3):
                    assert mv.verify_relations(make_rep(family, n, k, seed=seed))["pass"].all()


def test_non_representation_detected():
    params = mv.make_params(y=[1])
    s_blk = mv.matrix([[1, 1], [0, 1]])
    rep = mv.build_rep_from_blocks(3, 1, s_blk, [mv.rho_block("z2", params, 0)])
    f = mv.verify_relations(rep)
    assert not f["pass"].all()
    assert not f.loc[f["item"] == "s1 s1", "pass"].iat[0]

    e = mv.system_equations(s_blk, [mv.rho_block("z2", params, 0)])
    assert not e.loc[e["equation"] == "s_square[2]", "holds"].iat[0]
    assert not mv.check_system(s_blk, [mv.rho_block("z2", params, 0)])


def test_system_equations():
    params = mv.make_params(y=[1, 1], a=2, b=3)
    s_blk, rho_blks = mv.family_blocks("z8", params)
    e = mv.system_equations(s_blk, rho_blks)
    assert list(e.columns) == ["equation", "lhs", "rhs", "holds"]
    assert e.shape[0] == 4 + 2 * 18 + 13
    assert e["holds"].all()

    for family in mv.FAMILIES:
        for seed in range(3):
            assert mv.verify_system(family, mv.sample_params(family, 2, seed=seed))
    assert mv.verify_system("z2", mv.make_params(y=[1, 2]))


def test_witness_words():
    params = mv.make_params(y=[2])
    words = mv.witness_words("z3", params, 3, 1)
    assert [str(w) for w in words] == ["s1 s2 s1 s2"]

    words = mv.witness_words("z2", params, 4, 1)
    assert [str(w) for w in words] == ["s1", "s2", "s3"]

    params = mv.make_params(y=[1], a=0, b=1)
    f = mv.faithfulness_witnesses("z8", params, 3, 1)
    assert f["word"].tolist() == ["s1 p2.0 s1 p2.0 s1 p2.0"]
    assert f["phi_image"].iat[0] == "e"
    assert f["psi_image"].iat[0] == "(2 3)"
    assert f["status"].iat[0] == "certified"

    with pytest.raises(mv.NotApplicableError):
        mv.witness_words("z8", mv.make_params(y=[1], a=2, b=1), 3, 1)


def test_faithfulness_witnesses():
    cases = [(f, "none", None) for f in ["z1", "z2", "z3", "z4", "z5", "z6", "z7"]]
    cases += [("z8", "none", a) for a in [-1, 0, 1]]
    for n in [3, 4]:
        for k in [1, 2]:
            for family, constraint, a in cases:
                params = mv.sample_params(family, k, constraint, seed=n + k)
                if a is not None:
                    params = mv.make_params(y=params.y, a=a, b=params.b)
                f = mv.faithfulness_witnesses(family, params, n, k)
                assert not f.empty
                assert f["eval_identity"].all()
                assert (f["status"] == "certified").all()

    f = mv.faithfulness_witnesses("z6", mv.make_params(y=[2, 3], z=5), 3, 2)
    assert f.shape[0] == 2
    assert f["phi_image"].tolist() == ["(1 2 3)", "(1 2 3)"]


def test_reducibility_predicates():
    params = mv.make_params(y=[2, 2])
    assert mv.reducible_by_classification("z2", params)
    assert mv.reducible_refined("z2", params)
    assert mv.reducible_by_classification("z3", params)
    assert not mv.reducible_refined("z3", params)

    params = mv.make_params(y=[1], z=2)
    assert not mv.reducible_by_classification("z6", params)
    assert mv.reducible_refined("z6", params)

    params = mv.make_params(y=[1, 1], a=3, b=4)
    assert mv.reducible_by_classification("z8", params)
    assert mv.reducible_refined("z8", params)
    assert mv.reducible_refined("z1", mv.RepParams())


def test_refined_matches_algebra_span():
    for n in [3, 4]:
        for family, constraint, k in BRANCHES:
            for seed in range(2):
                params = mv.sample_params(family, k, constraint, seed)
                rep = mv.build_rep(family, params, n, k)
                irreducible = mv.is_irreducible(rep.images())
                assert irreducible == (not mv.reducible_refined(family, params))

                witness = mv.verify_invariant_witness(rep)
                if irreducible:
                    assert witness is None
                else:
                    assert witness

                if family in ["z1", "z2", "z8"] or constraint == "y-distinct":
                    assert mv.reducible_by_classification(family, params) == (not irreducible)


def test_classification_discrepancies():
    # Sign families with equal y are irreducible
    for family in mv.SIGN_FAMILIES:
        rep = make_rep(family, 3, 2, "all-y-equal")
        assert mv.reducible_by_classification(family, rep.params)
        assert mv.is_irreducible(rep.images())

    # Triangular families on the boundary y z = 2 are reducible
    for family in ["z6", "z7"]:
        rep = make_rep(family, 4, 1, "z-boundary")
        assert not mv.reducible_by_classification(family, rep.params)
        assert not mv.is_irreducible(rep.images())
        assert mv.verify_invariant_witness(rep)


def test_invariant_witness():
    kind, v = mv.invariant_witness("z6", mv.make_params(y=[2], z=1), 3)
    assert kind == "hyperplane"
    assert list(v) == [4, 2, 1]

    kind, v = mv.invariant_witness("z2", mv.make_params(y=[2]), 3)
    assert kind == "line"
    assert list(v) == [1, 2, 4]

    assert mv.invariant_witness("z3", mv.make_params(y=[2]), 3) is None


def test_equivalence_diagonal():
    y = Fraction(3)
    rep = mv.build_rep("z6", mv.make_params(y=[y, y], z=5), 4, 2)
    P = mv.equivalence_diagonal(4, y)
    assert list(P.diagonal()) == [Fraction(1, 27), Fraction(1, 9), Fraction(1, 3), 1]

    table = mv.conjugate_table(rep.table, P)
    for g, M in table.items():
        if g.kind == "p":
            assert set(M.flat) <= {0, 1}
    assert mv.algebra_span_dimension(list(table.values())) == mv.algebra_span_dimension(
        rep.images()
    )


def test_is_2local():
    for family in mv.FAMILIES:
        assert mv.is_2local(make_rep(family, 4, 2))

    rep = mv.build_rep("z2", mv.make_params(y=[1]), 3, 1)
    table = dict(rep.table)
    table[mv.GenSym.rho(2)] = mv.embed_block(3, 2, mv.matrix([[0, "1/2"], [2, 0]]))
    assert not mv.is_2local(mv.RepInstance("custom", rep.ctx, rep.params, table))

    table = dict(rep.table)
    table[mv.GenSym.s(1)] = mv.matrix([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
    assert not mv.is_2local(mv.RepInstance("custom", rep.ctx, rep.params, table))


def test_restrict_rep():
    images = mv.restrict_rep(make_rep("z1", 3, 2), "mvpt")
    assert len(images) == 9
    assert all(mv.is_identity(M) for M in images.values())

    images = mv.restrict_rep(mv.build_rep("z3", mv.make_params(y=[2, 3]), 3, 2), "mvht")
    assert mv.mat_eq(images[mv.GenSym.kappa(1, 2)], mv.diag([1, -1, 1]))

    with pytest.raises(mv.DomainError):
        mv.restrict_rep(make_rep("z1"), "mvt")


def test_verify_subgroup_relations():
    for rep in mv.sample_panel(3, 2):
        for group in ["mvpt", "mvht"]:
            f = mv.verify_subgroup_relations(rep, group)
            assert f.shape[0] == 15
            assert f["pass"].all()


@pytest.mark.slow
def test_verify_subgroup_relations_grid():
    for n, k in [(4, 2), (4, 3)]:
        for family in mv.FAMILIES:
            rep = make_rep(family, n, k)
            for group in ["mvpt", "mvht"]:
                assert mv.verify_subgroup_relations(rep, group)["pass"].all()


def test_pure_rep_3_2():
    cases = [
        (1, (1, 1), mv.make_params(y=[2, 3])),
        (1, (1, -1), mv.make_params(y=[2, 3])),
        (1, (-1, 1), mv.make_params(y=["1/2", 5])),
        (1, (-1, -1), mv.make_params(y=[-2, 3])),
        (2, (1, 1), mv.make_params(y=[2, 3], z=7)),
        (2, (-1, 1), mv.make_params(y=[2, "1/3"], z=-1)),
        (3, (1, 1), mv.make_params(y=[2, 3], a=1, b=1)),
        (3, (1, 1), mv.make_params(y=[5, 3], a="2/3", b=-4)),
    ]
    for case, signs, params in cases:
        images = mv.pure_rep_3_2(case, params, signs)
        family = mv.pure_case_family(case, signs)
        restricted = mv.restrict_rep(mv.build_rep(family, params, 3, 2), "mvpt")
        for g, M in images.items():
            assert mv.mat_eq(M, restricted[g])

    images = mv.pure_rep_3_2(1, mv.make_params(y=[2, 3]))
    assert mv.mat_eq(images[mv.GenSym.lam(1, 2, 1)], mv.diag(["3/2", "2/3", 1]))

    with pytest.raises(mv.ParameterError):
        mv.pure_rep_3_2(1, mv.make_params(y=[2]))
    with pytest.raises(mv.DomainError):
        mv.pure_case_family(4)


def test_pure_rep_3_2_irreducibility():
    for case, params in [
        (1, mv.make_params(y=[2, 3])),
        (2, mv.make_params(y=[2, 3], z=1)),
        (3, mv.make_params(y=[2, 3], a=1, b=1)),
    ]:
        images = list(mv.pure_rep_3_2(case, params).values())
        assert mv.algebra_span_dimension(images) == 9

    images = list(mv.pure_rep_3_2(1, mv.make_params(y=[2, 2])).values())
    assert mv.verify_invariant_line([1, 2, 4], images)
    assert mv.algebra_span_dimension(images) < 9

    images = list(mv.pure_rep_3_2(3, mv.make_params(y=[2, 3], a=0, b=1)).values())
    assert mv.verify_invariant_line([1, 0, 0], images)


def test_kernel_search():
    rep = mv.build_rep("z3", mv.make_params(y=[2]), 3, 1)
    f = mv.kernel_search(rep, max_len=4)
    row = f.loc[f["word"] == "s1 s2 s1 s2"]
    assert row.shape[0] == 1
    assert row["status"].iat[0] == "certified"
    assert row["phi_image"].iat[0] == "(1 3 2)"

    f = mv.kernel_search(make_rep("z1"), max_len=2)
    assert f["word"].iat[0] == "s1"
    assert f["length"].iat[0] == 1

    rep = mv.build_rep("z8", mv.make_params(y=[1], a=2, b=1), 3, 1)
    f = mv.kernel_search(rep, max_len=5, beam=200)
    assert f["eval_identity"].all()
    assert f["word"].is_unique
    assert set(f["status"]) <= {"certified", "unresolved"}


@pytest.mark.slow
def test_kernel_search_zeta8_bounded():
    rep = mv.build_rep("z8", mv.make_params(y=[1], a=2, b=1), 3, 1)
    f = mv.kernel_search(rep, max_len=8)
    assert not (f["status"] == "certified").any()


def test_sample_params():
    params = mv.sample_params("z2", 2, "y-distinct", seed=7)
    assert len(set(params.y)) == 2
    assert params == mv.sample_params("z2", 2, "y-distinct", seed=7)

    params = mv.sample_params("z8", 1, "zeta8-boundary(+)")
    assert params.b == (1 + params.a) * params.y[0]
    params = mv.sample_params("z8", 3, "zeta8-boundary(-)", seed=4)
    assert params.y_equal
    assert params.b == (1 - params.a) * params.y[0]

    params = mv.sample_params("z6", 3)
    assert len(params.y) == 3
    assert params.z != 0
    params = mv.sample_params("z7", 1, "z-boundary")
    assert params.y[0] * params.z == 2

    with pytest.raises(mv.ParameterError):
        mv.sample_params("z2", 1, "y-distinct")
    with pytest.raises(mv.ParameterError):
        mv.sample_params("z2", 1, "zeta8-generic")
    with pytest.raises(mv.DomainError):
        mv.sample_params("z2", 1, "sideways")


def test_sample_panel():
    assert mv.sample_panel(2, 1) == []
    panel = mv.sample_panel(3, 2)
    assert [rep.family for rep in panel] == mv.PANEL_FAMILIES
    assert all(rep.ctx == mv.GroupCtx(3, 2) for rep in panel)

    for k in [1, 2, 3]:
        for seed in range(5):
            (rep,) = [r for r in mv.sample_panel(3, k, seed) if r.family == "z8"]
            p = rep.params
            assert p.y_equal
            assert p.b / p.y[0] not in (1 + p.a, 1 - p.a)
            assert not mv.reducible_refined("z8", p)
