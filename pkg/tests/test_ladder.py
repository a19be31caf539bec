import pytest

from kernel.builtin import get_builtin
from kernel.errors import LadderError
from kernel.extended import Special
from ladder.ladder import (
    Ladder,
    LambdaLadder,
    eta,
    eta_inv,
    join,
    join_all,
    ladder_leq,
    meet,
)
from theta.index import LambdaIndex
from theta.words import EMPTY, TL, TR, Letter, Word, enumerate_words

T_STAR, L_STAR, R_STAR = Special.T, Special.L, Special.R


def w(text):
    return Word.parse(text)


def test_evaluate(lro_g):
    assert lro_g.evaluate(EMPTY) == "G"
    assert lro_g(TR) == "G"
    assert lro_g(TL) is T_STAR
    assert lro_g(w("lr")) is T_STAR
    assert lro_g(w("rlrlrl")) is T_STAR
    assert lro_g.depth == 2


def test_normalization_drops_repeated_levels(chain3):
    l = Ladder(chain3, "G", ("A", "T", "T", "T"), ("G", "A", "A", "A"))
    assert l.depth == 2
    assert l.chain_l == ("A", "T") and l.chain_r == ("G", "A")
    assert l.tail_l == "T" and l.tail_r == "A"
    assert l == Ladder(chain3, "G", ("A", "T"), ("G", "A"))


def test_depth_one_collapses_to_tails(chain3):
    l = Ladder(chain3, "G", ("A", "A"), ("T", "T"))
    assert l.depth == 0
    assert l == Ladder(chain3, "G", tail_l="A", tail_r="T")
    assert l.at(5, Letter.L) == "A" and l.at(5, Letter.R) == "T"


def test_constant(chain3):
    l = Ladder.constant(chain3, "G", "A")
    assert l.depth == 0
    assert all(l(x) == "A" for x in enumerate_words(4)[1:])
    assert l.render() == "G ...A/A"


def test_render(lro_g):
    assert lro_g.render() == "G T*/G T*/T* ...T*/T*"


def test_invalid_values(cs, chain3):
    with pytest.raises(LadderError, match="not an element of K"):
        Ladder.constant(cs, "CS", "RB")
    with pytest.raises(LadderError, match="not an element of K"):
        Ladder.constant(chain3, "Q", "T")
    with pytest.raises(LadderError, match="equal length"):
        Ladder(chain3, "G", ("A",), ())
    with pytest.raises(LadderError, match="tail values"):
        Ladder(chain3, "G", tail_l="A")
    with pytest.raises(LadderError, match="differs from the last level"):
        Ladder(chain3, "G", ("A", "T"), ("A", "T"), tail_l="A")


def test_from_mapping(chain3, lro_g):
    values = {EMPTY: "G", TL: T_STAR, TR: "G", w("rl"): T_STAR, w("lr"): T_STAR}
    assert Ladder.from_mapping(chain3, values, 2) == lro_g
    assert Ladder.from_mapping(chain3, {EMPTY: "A"}, 0) == Ladder.constant(chain3, "A", "A")
    with pytest.raises(LadderError, match="Missing value"):
        Ladder.from_mapping(chain3, {EMPTY: "G", TL: "A"}, 1)


def test_values_and_specials(lro_g):
    specials = lro_g.specials()
    assert TR not in specials
    assert specials[TL] is T_STAR
    assert lro_g.has_special()
    assert lro_g.level(1) == (T_STAR, "G")
    assert lro_g.level(0) == ("G",)
    assert set(lro_g.values(3)) == set(enumerate_words(3))


def test_pointwise_join_and_meet(div12):
    pk4 = Ladder.constant(div12, "12", "4")
    pk6 = Ladder.constant(div12, "12", "6")
    assert join(pk4, pk6) == Ladder.constant(div12, "12", "12")
    assert meet(pk4, pk6) == Ladder.constant(div12, "12", "2")
    assert join_all([pk4, pk6, Ladder.constant(div12, "12", "3")]).tail_l == "12"
    with pytest.raises(LadderError):
        join_all([])


def test_join_mixes_depths(chain3, lro_g):
    flat = Ladder.constant(chain3, "A", "A")
    j = join(flat, lro_g)
    assert j == Ladder(chain3, "G", ("A", "A"), ("G", "A"))
    m = meet(flat, lro_g)
    assert m == Ladder(chain3, "A", (T_STAR, T_STAR), ("A", T_STAR))


def test_specials_meet_and_join(band):
    a = Ladder(band, "T", (T_STAR, T_STAR), (L_STAR, T_STAR))
    b = Ladder(band, "T", (R_STAR, T_STAR), (T_STAR, T_STAR))
    assert join(a, b) == Ladder(band, "T", (R_STAR, T_STAR), (L_STAR, T_STAR))
    c = Ladder(band, "T", tail_l=L_STAR, tail_r=L_STAR)
    d = Ladder(band, "T", tail_l=R_STAR, tail_r=R_STAR)
    assert join(c, d) == Ladder.constant(band, "T", "T")
    assert meet(c, d) == Ladder.constant(band, "T", T_STAR)


def test_ladder_order(div12):
    pk4 = Ladder.constant(div12, "12", "4")
    pk6 = Ladder.constant(div12, "12", "6")
    assert ladder_leq(meet(pk4, pk6), pk4)
    assert ladder_leq(pk4, join(pk4, pk6))
    assert not ladder_leq(pk4, pk6)
    assert ladder_leq(pk4, pk4)


def test_models_must_agree(chain3, chain2):
    with pytest.raises(LadderError, match="different models"):
        join(Ladder.constant(chain3, "A", "A"), Ladder.constant(chain2, "A", "A"))


def test_eta(lro_g):
    q = eta(lro_g)
    assert q.value(LambdaIndex(0, 1)) == "G"
    assert q.value(LambdaIndex(1, 3)) == lro_g(w("lrl"))
    assert q.value(LambdaIndex(1, 0)) == "G"
    assert eta_inv(q) == lro_g
    assert [x.render() for x, _ in q.items(1)] == ["(0,0)", "(1,1)", "(0,1)"]


def test_lambda_from_mapping(chain3, lro_g):
    values = {
        LambdaIndex(0, 0): "G",
        LambdaIndex(1, 1): T_STAR,
        LambdaIndex(0, 1): "G",
        LambdaIndex(1, 2): T_STAR,
        LambdaIndex(0, 2): T_STAR,
    }
    q = LambdaLadder.from_mapping(chain3, values, 2)
    assert eta_inv(q) == lro_g
    assert q.depth == lro_g.depth


def test_ladders_are_hashable():
    chain3 = get_builtin("orthodox-chain3")
    a = Ladder.constant(chain3, "G", "A")
    b = Ladder(chain3, "G", ("A", "A"), ("A", "A"))
    assert len({a, b}) == 1
