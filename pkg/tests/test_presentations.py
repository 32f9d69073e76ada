from collections import Counter

from .context import mvtwin, pytest
import mvtwin as mv


def test_relators_mvt():
    pres = mv.relators_mvt(3, 1)
    assert len(pres) == 6
    assert list(pres.families) == [
        "twin_square",
        "twin_square",
        "virtual_square",
        "virtual_square",
        "virtual_braid",
        "mixed_braid",
    ]
    assert str(pres.relators[0]) == "s1 s1"
    assert str(pres.relators_of("virtual_braid")[0]) == "p1.0 p2.0 p1.0 p2.0 p1.0 p2.0"
    assert str(pres.relators_of("mixed_braid")[0]) == "p1.0 p2.0 s1 p2.0 p1.0 s2"

    assert len(mv.relators_mvt(3, 2)) == 12
    for k in range(1, 4):
        assert len(mv.relators_mvt(2, k)) == 1 + k

    counts = Counter(mv.relators_mvt(4, 1).families)
    assert counts["twin_commute"] == 1
    assert counts["virtual_commute"] == 1
    assert counts["mixed_commute"] == 2
    assert counts["mixed_braid"] == 2

    counts = Counter(mv.relators_mvt(3, 3).families)
    assert counts["layer_braid_a"] == 3
    assert counts["layer_braid_b"] == 3


def test_relators_in_kernels():
    for n in range(2, 6):
        for k in range(1, 4):
            for r in mv.relators_mvt(n, k).relators:
                assert mv.in_kernel(r, "phi")
                assert mv.in_kernel(r, "psi")


def test_specializations():
    assert mv.relators_vt(4).relators == mv.relators_mvt(4, 1).relators

    twin = mv.relators_twin(4)
    assert len(twin) == 4
    assert set(twin.families) == {"twin_square", "twin_commute"}
    assert all(sym.kind == "s" for sym in twin.generators)

    assert len(mv.relators_pvt(3)) == 0
    assert len(mv.relators_pvt(4)) == 12
    assert set(mv.relators_pvt(4).families) == {"pure_commute_0"}


def test_relators_mvpt():
    pres = mv.relators_mvpt(3, 2)
    assert len(pres) == 15
    assert Counter(pres.families) == {
        "pure_triangle": 6,
        "pure_triangle_0": 6,
        "pure_shared_commute": 3,
    }
    assert len(pres.generators) == 9
    assert len(mv.relators_mvpt(3, 1)) == 0

    counts = Counter(mv.relators_mvpt(4, 3).families)
    assert counts["pure_triangle_abb"] == 24
    assert counts["pure_triangle_aab"] == 24


def test_relators_mvht():
    assert len(mv.relators_mvht(3, 1)) == 0
    assert len(mv.relators_mvht(2, 2)) == 0

    pres = mv.relators_mvht(3, 2)
    assert len(pres) == 15
    r = pres.relators_of("semi_triangle_0")[0]
    assert str(r) == "K1.3.1 K1.2.1 K2.3.0 K1.2.1! K1.3.1! K2.3.0"


def test_printed_pure_relators_3_2():
    printed = mv.printed_pure_relators_3_2()
    assert len(printed) == 10

    stated = {r.letters for r in mv.relators_mvpt(3, 2).relators}
    found = [r.letters in stated for r in printed]
    # Only the commutation of lambda_{1,2}^1 with lambda_{1,3}^1 is not
    # among the systematic families
    assert found == [True, True, False] + [True] * 7


def test_relators():
    assert mv.relators("mvht", 3, 2).ctx == mv.GroupCtx(3, 2, "mvht")
    with pytest.raises(mv.DomainError):
        mv.relators("foo", 3, 1)
    with pytest.raises(mv.DomainError):
        mv.relators_mvt(1, 1)


def test_relator_table():
    f = mv.relator_table(mv.relators_mvt(3, 2))
    assert list(f.columns) == ["family", "relator", "length"]
    assert f.shape[0] == 12
    assert f["relator"].is_unique
    assert f["length"].tolist()[:2] == [2, 2]

    f = mv.relator_table(mv.relators_mvpt(3, 1))
    assert f.empty
