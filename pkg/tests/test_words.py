from hypothesis import given

from .context import mvtwin, pytest
from .strategies import words, words_in_some_context
import mvtwin as mv


CTX = mv.GroupCtx(3, 2)
PURE = mv.GroupCtx(3, 2, "mvpt")
SEMI = mv.GroupCtx(3, 2, "mvht")


def test_group_ctx():
    ctx = mv.GroupCtx(4, 2, "mvpt")
    assert ctx.ambient() == mv.GroupCtx(4, 2)
    assert ctx.to_dict() == {"n": 4, "k": 2, "group": "mvpt"}

    for n, k, group in [(1, 1, "mvt"), (3, 0, "mvt"), (3, 1, "bingo")]:
        with pytest.raises(mv.DomainError):
            mv.GroupCtx(n, k, group)


def test_parse_word():
    w = mv.parse_word("s1 p2.1 s2!", CTX)
    assert w.letters == (
        (mv.GenSym.s(1), 1),
        (mv.GenSym.rho(2, 1), 1),
        (mv.GenSym.s(2), -1),
    )
    assert str(w) == "s1 p2.1 s2!"
    assert mv.parse_word("  ", CTX).is_empty

    # Reversed symbols of positive layer become inverses
    w = mv.parse_word("L3.2.1 L3.2.1!", PURE)
    assert w.letters == ((mv.GenSym.lam(2, 3, 1), -1), (mv.GenSym.lam(2, 3, 1), 1))

    # Reversed layer-0 symbols are generators in their own right
    w = mv.parse_word("L2.1.0 L3.1.0!", PURE)
    assert w.letters == ((mv.GenSym.lam(2, 1), 1), (mv.GenSym.lam(3, 1), -1))


def test_parse_word_errors():
    with pytest.raises(mv.ParseError) as e:
        mv.parse_word("s1 q2", CTX)
    assert e.value.position == 1
    assert e.value.token == "q2"

    for text in ["p1", "s1.2", "s0", "L1.1.0", "L1.2", "s1!!"]:
        with pytest.raises(mv.ParseError):
            mv.parse_word(text, CTX)

    with pytest.raises(mv.IndexRangeError):
        mv.parse_word("s3", CTX)
    with pytest.raises(mv.IndexRangeError):
        mv.parse_word("p1.2", CTX)
    with pytest.raises(mv.IndexRangeError):
        mv.parse_word("L1.4.0", PURE)
    with pytest.raises(mv.AlphabetError):
        mv.parse_word("L1.2.0", CTX)
    with pytest.raises(mv.AlphabetError):
        mv.parse_word("s1", SEMI)


def test_check_symbol():
    mv.check_symbol(mv.GenSym.lam(2, 1, 0), PURE)
    with pytest.raises(mv.IndexRangeError):
        mv.check_symbol(mv.GenSym.lam(2, 1, 1), PURE)


def test_free_reduce():
    cases = [
        (CTX, "s1 s1", ""),
        (CTX, "s1 s1!", ""),
        (CTX, "s1! s2", "s1 s2"),
        (CTX, "p1.0 p1.0", ""),
        (CTX, "s1 s2 s2 s1", ""),
        (CTX, "s1 p1.0 s1", "s1 p1.0 s1"),
        (CTX, "p1.0 p1.1 p1.0", "p1.0 p1.1 p1.0"),
        (PURE, "L1.2.1 L1.2.1!", ""),
        (PURE, "L1.2.1 L1.2.1", "L1.2.1 L1.2.1"),
        (PURE, "L1.2.0 L2.1.0", ""),
        (PURE, "L1.2.0! L2.1.0!", ""),
        (PURE, "L1.2.0 L1.2.0", "L1.2.0 L1.2.0"),
        (PURE, "L1.3.0 L1.2.0 L2.1.0 L3.1.0", ""),
        (SEMI, "K1.2.0 K1.2.0!", ""),
        (SEMI, "K2.1.0 K2.1.0", ""),
        (SEMI, "K1.2.1 K1.2.1", "K1.2.1 K1.2.1"),
    ]
    for ctx, text, expect in cases:
        get = str(mv.free_reduce(mv.parse_word(text, ctx)))
        assert get == expect


@given(words_in_some_context())
def test_free_reduce_properties(w):
    r = mv.free_reduce(w)
    assert mv.free_reduce(r) == r
    assert len(r) <= len(w)
    assert mv.free_reduce(mv.concat(w, mv.invert(w))).is_empty
    assert mv.free_reduce(mv.concat(r, mv.invert(w))).is_empty


@given(words_in_some_context())
def test_render_parse(w):
    assert mv.parse_word(str(w), w.ctx) == w


@given(words(CTX), words(CTX))
def test_invert_concat(u, v):
    assert mv.invert(mv.concat(u, v)) == mv.concat(mv.invert(v), mv.invert(u))
    assert mv.invert(mv.invert(u)) == u


def test_concat_invert():
    u = mv.parse_word("s1 p2.1!", CTX)
    v = mv.parse_word("p1.0", CTX)
    assert str(mv.concat(u, v)) == "s1 p2.1! p1.0"
    assert str(mv.invert(u)) == "p2.1 s1!"
    assert mv.invert(mv.invert(u)) == u

    with pytest.raises(mv.ContextError):
        mv.concat(u, mv.parse_word("s1", mv.GroupCtx(4, 2)))


def test_slicing():
    w = mv.parse_word("s1 s2 p1.0", CTX)
    assert len(w) == 3
    assert str(w[:2]) == "s1 s2"
    assert w[2] == (mv.GenSym.rho(1), 1)
    assert w.symbols() == [mv.GenSym.s(1), mv.GenSym.s(2), mv.GenSym.rho(1)]


def test_generators():
    assert [str(g) for g in mv.ambient_generators(3, 2)] == [
        "s1",
        "s2",
        "p1.0",
        "p2.0",
        "p1.1",
        "p2.1",
    ]
    gens = mv.subgroup_generators(3, 2, "mvpt")
    assert len(gens) == 9
    assert mv.GenSym.lam(3, 1) in gens
    assert mv.GenSym.lam(3, 1, 1) not in gens
    assert len(mv.subgroup_generators(4, 3, "mvht")) == 12 + 2 * 6

    with pytest.raises(mv.AlphabetError):
        mv.subgroup_generators(3, 2, "mvt")


def test_gensym():
    assert mv.GenSym.s(1).involutive
    assert mv.GenSym.kappa(1, 2).involutive
    assert not mv.GenSym.kappa(1, 2, 1).involutive
    assert not mv.GenSym.lam(1, 2).involutive
    assert mv.GenSym.lam(1, 2, 1).group == "mvpt"
    assert str(mv.GenSym.kappa(3, 1)) == "K3.1.0"
