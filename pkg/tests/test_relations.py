import itertools

import pytest

from correspondence.relations import (
    RelationTag,
    b_classes,
    b_signature,
    chain,
    classes,
    contains_bands,
    is_order_convex,
    is_sublattice,
    relate_all,
    related,
)
from kernel.builtin import get_builtin
from kernel.errors import LadderError
from kernel.extended import Special
from ladder.enumerate import enumerate_phi
from ladder.ladder import Ladder
from theta.words import Letter

T_STAR, L_STAR, R_STAR = Special.T, Special.L, Special.R


@pytest.fixture(scope="module")
def chain3_ladders():
    return enumerate_phi(get_builtin("orthodox-chain3"), 2)


@pytest.fixture(scope="module")
def cs_ladders():
    return enumerate_phi(get_builtin("cs-demo"), 2)


@pytest.fixture(scope="module")
def band_ladders():
    return enumerate_phi(get_builtin("demo-band"), 2)


def test_parse():
    assert RelationTag.parse("Kl") is RelationTag.Kl
    with pytest.raises(ValueError, match="Choose from"):
        RelationTag.parse("H")


def test_chain(lro_g):
    assert chain(lro_g, Letter.L, 3) == (T_STAR, T_STAR, T_STAR)
    assert chain(lro_g, Letter.R, 3) == ("G", T_STAR, T_STAR)


def test_constant_ladders_share_the_root_class(div12):
    a = Ladder.constant(div12, "12", "4")
    b = Ladder.constant(div12, "12", "6")
    assert related(RelationTag.K, a, b)
    assert not related(RelationTag.Tl, a, b)
    assert not related(RelationTag.Tr, a, b)
    assert not related(RelationTag.Kl, a, b)
    assert related(RelationTag.B, a, b)


def test_lro_pair(chain3, lro_g):
    lro_a = Ladder(chain3, "G", (T_STAR, T_STAR), ("A", T_STAR))
    result = relate_all(lro_g, lro_a)
    assert result[RelationTag.K]
    assert result[RelationTag.Tl]
    assert result[RelationTag.Kl]
    assert not result[RelationTag.Tr]
    assert not result[RelationTag.Kr]
    assert result[RelationTag.B]


def test_relations_need_one_model(chain2, chain3):
    with pytest.raises(LadderError):
        related(RelationTag.K, Ladder.constant(chain2, "A", "A"), Ladder.constant(chain3, "A", "A"))


def _assert_equivalence(tag, ladders, sample=None):
    for l in ladders:
        assert related(tag, l, l)
    parts = classes(tag, ladders)
    label = {l: i for i, cls in enumerate(parts) for l in cls}
    picked = ladders if sample is None else ladders[:: max(1, len(ladders) // sample)]
    for a, b in itertools.combinations(picked, 2):
        assert related(tag, a, b) == related(tag, b, a)
        assert related(tag, a, b) == (label[a] == label[b])


def _assert_b_classes(ladders):
    groups = b_classes(ladders)
    assert sum(len(g) for g in groups) == len(ladders)
    for group in groups:
        assert is_sublattice(group)
        assert is_order_convex(group, ladders)
    assert sorted(map(len, groups)) == sorted(map(len, classes(RelationTag.B, ladders)))


@pytest.mark.parametrize("tag", list(RelationTag))
@pytest.mark.parametrize("fixture_name", ["chain3_ladders", "band_ladders"])
def test_relations_are_equivalences(tag, fixture_name, request):
    _assert_equivalence(tag, request.getfixturevalue(fixture_name))


@pytest.mark.parametrize(
    "side, trace", [(RelationTag.Kl, RelationTag.Tl), (RelationTag.Kr, RelationTag.Tr)]
)
def test_one_sided_kernel_is_kernel_and_trace(side, trace, cs_ladders):
    for a, b in itertools.combinations(cs_ladders, 2):
        both = related(RelationTag.K, a, b) and related(trace, a, b)
        assert related(side, a, b) == both


@pytest.mark.parametrize("fixture_name", ["chain3_ladders", "cs_ladders", "band_ladders"])
def test_b_classes_are_convex_sublattices(fixture_name, request):
    _assert_b_classes(request.getfixturevalue(fixture_name))


@pytest.mark.slow
@pytest.mark.parametrize("model_name", ["orthodox-chain3", "demo-band", "cs-demo"])
def test_relations_at_depth_three(model_name):
    ladders = enumerate_phi(get_builtin(model_name), 3)
    for tag in RelationTag:
        _assert_equivalence(tag, ladders, sample=300)
    for a, b in itertools.combinations(ladders[:: max(1, len(ladders) // 300)], 2):
        assert related(RelationTag.Kl, a, b) == (
            related(RelationTag.K, a, b) and related(RelationTag.Tl, a, b)
        )
        assert related(RelationTag.Kr, a, b) == (
            related(RelationTag.K, a, b) and related(RelationTag.Tr, a, b)
        )
    _assert_b_classes(ladders)


def test_band_containing_ladders_share_a_b_class(chain3):
    a = Ladder.constant(chain3, "G", "A")
    b = Ladder(chain3, "A", ("A", "T"), ("T", "T"))
    assert contains_bands(a) and contains_bands(b)
    assert related(RelationTag.B, a, b)
    assert b_signature(a, 3) == ()


def test_contains_bands(chain3, lro_g):
    assert not contains_bands(lro_g)
    one_band = Ladder(chain3, "G", ("A", T_STAR), (L_STAR, T_STAR))
    assert not contains_bands(one_band)
    assert b_signature(one_band, 2) == (("r", "L*"), ("rl", "T*"), ("lr", "T*"))
    inconsistent = Ladder(chain3, "G", ("A", "A"), (L_STAR, "A"))
    with pytest.raises(LadderError, match="never reaches T"):
        contains_bands(inconsistent)


def test_order_convexity_detects_gaps(div12):
    low = Ladder.constant(div12, "12", "1")
    mid = Ladder.constant(div12, "12", "2")
    high = Ladder.constant(div12, "12", "4")
    assert is_order_convex([low, mid, high], [low, mid, high])
    assert not is_order_convex([low, high], [low, mid, high])
    assert not is_sublattice([Ladder.constant(div12, "12", "4"), Ladder.constant(div12, "12", "6")])
