import itertools

import numpy as np
import pytest

from kernel.builtin import builtin_names, chain_model, divisor_model, get_builtin, orthodox_model
from kernel.errors import ModelError
from kernel.extended import SPECIALS, Special, parse_element, render_element, upper_star
from kernel.model import KernelModel, is_valid, validate_model
from theta.index import gamma
from theta.words import TL, TR, Word, enumerate_words

T_STAR, L_STAR, R_STAR = Special.T, Special.L, Special.R


def cs_fields():
    m = get_builtin("cs-demo")
    return dict(
        name="cs-mutant",
        elements=list(m.elements),
        covers=list(m.covers),
        k0=set(m.k0),
        designated=dict(m.designated),
        low_l=dict(m.low_l),
        low_r=dict(m.low_r),
        kmap=dict(m.kmap),
        parts=dict(m.parts),
    )


def axioms(model):
    return {v.axiom for v in validate_model(model)}


@pytest.mark.parametrize("name", builtin_names())
def test_builtins_are_valid(name):
    assert validate_model(get_builtin(name)) == []
    assert is_valid(get_builtin(name))


def test_builtins_are_cached():
    assert get_builtin("cs-demo") is get_builtin("cs-demo")
    with pytest.raises(ModelError, match="Choose from"):
        get_builtin("nope")


def test_chain_shape(chain3):
    assert chain3.elements == ("T", "A", "G")
    assert chain3.bottom == "T" and chain3.top == "G"
    assert chain3.height == 2
    assert chain3.lower_star("A", TR) is T_STAR
    assert chain3.lower_star("G", Word.parse("lrl")) is T_STAR
    assert chain3.kstar("G") == "G"


def test_divisor_lattice(div12):
    assert set(div12.elements) == {"1", "2", "3", "4", "6", "12"}
    assert div12.bottom == "1" and div12.top == "12"
    assert div12.height == 3
    assert div12.join("4", "6") == "12"
    assert div12.meet("4", "6") == "2"
    assert div12.meet("4", "3") == "1"
    assert ("2", "4") in div12.hasse_edges()
    assert ("1", "4") not in div12.hasse_edges()


def test_leq_matrix_is_a_partial_order(div12):
    leq = div12.leq_matrix
    assert leq.diagonal().all()
    assert not (leq & leq.T & ~np.eye(len(leq), dtype=bool)).any()
    assert ((leq.astype(int) @ leq.astype(int) > 0) <= leq).all()


def test_band_operators(band):
    assert band.low_r["LNB"] == "LNB"
    assert band.low_l["LZ"] == "T"
    assert band.low_r["LZ"] == "LZ"
    assert band.kstar("S") is T_STAR
    assert band.kstar("RNB") is R_STAR
    assert band.lower_star("LNB", TR) is L_STAR
    assert band.lower_star("LZ", TL) is T_STAR
    assert band.lower_star("NB", TL) is R_STAR
    assert band.k0 == frozenset({"T"})


def test_cs_operators(cs):
    assert cs.lower_star("CS", TL) is R_STAR
    assert cs.lower_star("CS", TR) is L_STAR
    assert cs.lower_star("CS", Word.parse("lr")) is T_STAR
    assert cs.lower_star("G", TL) is T_STAR
    assert cs.kstar("ReA") == "A"
    assert cs.lattice.meet("CSA", "CSE") == "A"
    assert cs.lattice.join("CSA", "CSE") == "CS"
    assert cs.elements_of_part("cs") == ["CSA", "CSE", "CS"]
    assert cs.admissible == frozenset(cs.parts)


def test_lower_follows_the_word_left_to_right(cs):
    # lowL then lowR
    assert cs.lower("ReG", Word.parse("lr")) == "T"
    assert cs.lower("ReG", TL) == "RZ"
    assert cs.lower("CS", Word.parse("e")) == "CS"


@pytest.mark.parametrize("name", builtin_names())
def test_lower_lambda_matches_words(name):
    m = get_builtin(name)
    for v in m.elements:
        for w in enumerate_words(6):
            assert m.lower_lambda(v, gamma(w)) == m.lower(v, w)


@pytest.mark.parametrize("name", builtin_names())
def test_lower_star_stabilizes_past_the_height(name):
    m = get_builtin(name)
    for v in m.elements:
        for w in enumerate_words(m.height + 4)[2 * (m.height + 1) + 1 :]:
            longer = Word.ending_in(w.tail.other, len(w) + 1)
            assert w * Word((w.tail.other,)) == longer
            assert m.lower_star(v, longer) == m.lower_star(v, w)


@pytest.mark.parametrize("name", ["orthodox-chain3", "orthodox-div12"])
def test_orthodox_kstar_avoids_band_specials(name):
    m = get_builtin(name)
    for v in m.elements:
        for w in enumerate_words(4):
            assert m.lower_star(v, w) not in (L_STAR, R_STAR)


@pytest.mark.parametrize("name", builtin_names())
def test_extended_lattice_laws(name):
    lat = get_builtin(name).lattice
    elements = lat.elements
    for a, b in itertools.product(elements, repeat=2):
        j, m = lat.join(a, b), lat.meet(a, b)
        assert j == lat.join(b, a) and m == lat.meet(b, a)
        assert lat.join(a, lat.meet(a, b)) == a
        assert lat.meet(a, lat.join(a, b)) == a
        # least upper bound and greatest lower bound within K
        assert lat.leq(a, j) and lat.leq(b, j)
        assert lat.leq(m, a) and lat.leq(m, b)
        for c in elements:
            if lat.leq(a, c) and lat.leq(b, c):
                assert lat.leq(j, c)
            if lat.leq(c, a) and lat.leq(c, b):
                assert lat.leq(c, m)
    for a, b, c in itertools.product(elements, repeat=3):
        assert lat.join(lat.join(a, b), c) == lat.join(a, lat.join(b, c))
        assert lat.meet(lat.meet(a, b), c) == lat.meet(a, lat.meet(b, c))


def test_extended_specials(cs):
    lat = cs.lattice
    assert lat.meet(L_STAR, R_STAR) is T_STAR
    assert lat.join(L_STAR, R_STAR) == "T"
    assert lat.join(T_STAR, "A") == "A"
    assert lat.leq(R_STAR, "T")
    assert not lat.leq(L_STAR, R_STAR)
    assert lat.lt(T_STAR, L_STAR)
    assert "RB" not in lat
    assert L_STAR in lat
    assert lat.elements[-3:] == list(SPECIALS)


def test_element_text():
    assert parse_element(" L* ") is L_STAR
    assert parse_element("CSA") == "CSA"
    assert render_element(R_STAR) == "R*"
    assert upper_star(T_STAR) == "S"
    assert upper_star(L_STAR) == "LNB"
    with pytest.raises(ValueError):
        parse_element("Q*")


def test_orthodox_model_needs_a_bottom():
    with pytest.raises(ModelError):
        orthodox_model("empty", [], [])
    with pytest.raises(ModelError):
        orthodox_model("two-minimal", ["A", "B"], [])
    with pytest.raises(ModelError):
        chain_model(0)
    with pytest.raises(ModelError):
        divisor_model(0)


def test_constructor_rejects_unknown_names():
    fields = cs_fields()
    fields["covers"] = fields["covers"] + [("T", "Q")]
    with pytest.raises(ModelError, match="unknown element"):
        KernelModel(**fields)

    fields = cs_fields()
    fields["designated"]["Z"] = "A"
    with pytest.raises(ModelError, match="Unknown role"):
        KernelModel(**fields)

    fields = cs_fields()
    fields["parts"]["A"] = "ring"
    with pytest.raises(ModelError, match="Unknown part"):
        KernelModel(**fields)


def test_meet_undefined_raises():
    fields = cs_fields()
    fields["elements"].append("X")
    fields["covers"] += [("T", "X"), ("X", "CSA"), ("X", "CSE")]
    for table in ("low_l", "low_r", "kmap"):
        fields[table]["X"] = "T"
    m = KernelModel(**fields)
    with pytest.raises(ModelError, match="undefined"):
        m.meet("CSA", "CSE")


def test_equality_and_hash():
    a, b = divisor_model(12), divisor_model(12)
    assert a == b and hash(a) == hash(b)
    assert a != divisor_model(18)


def _mutate_low_l_monotone(f):
    f["low_l"]["CS"] = "T"


def _mutate_low_r_idempotent(f):
    f["low_r"]["ReA"] = "RB"


def _mutate_low_l_decreasing(f):
    f["low_l"]["A"] = "RZ"


def _mutate_bottom(f):
    f["covers"] = [(a, b) for a, b in f["covers"] if a != "T"]


def _mutate_kmap_range(f):
    f["kmap"]["RB"] = "RB"


def _mutate_kmap_identity(f):
    f["kmap"]["A"] = "T"


def _mutate_t_bottom(f):
    f["designated"]["T"] = "A"


def _mutate_distinct(f):
    f["designated"]["RZ"] = "LZ"


def _mutate_designated_k0(f):
    f["designated"]["S"] = "A"


def _mutate_join_closed(f):
    f["k0"].discard("CS")


def _mutate_lattice(f):
    f["elements"].append("X")
    f["covers"] += [("T", "X"), ("X", "CSA"), ("X", "CSE")]
    for table in ("low_l", "low_r", "kmap"):
        f[table]["X"] = "T"


def _mutate_total(f):
    del f["kmap"]["G"]


def _mutate_cycle(f):
    f["covers"].append(("CS", "T"))


def _mutate_parts(f):
    f["parts"]["RB"] = "cs"


def _mutate_admissible(f):
    f["admissible"] = ["T", "RB"]


@pytest.mark.parametrize(
    "mutate, axiom",
    [
        (_mutate_low_l_monotone, "lowL.monotone"),
        (_mutate_low_r_idempotent, "lowR.idempotent"),
        (_mutate_low_l_decreasing, "lowL.decreasing"),
        (_mutate_bottom, "bottom"),
        (_mutate_kmap_range, "kmap.range"),
        (_mutate_kmap_identity, "kmap.k0-identity"),
        (_mutate_t_bottom, "T.bottom"),
        (_mutate_t_bottom, "T.fixed"),
        (_mutate_distinct, "designated.distinct"),
        (_mutate_designated_k0, "designated.k0"),
        (_mutate_join_closed, "k0.join-closed"),
        (_mutate_lattice, "lattice"),
        (_mutate_total, "tables.total"),
        (_mutate_cycle, "order"),
        (_mutate_parts, "parts"),
        (_mutate_admissible, "admissible"),
    ],
)
def test_validator_reports_single_defects(mutate, axiom):
    fields = cs_fields()
    mutate(fields)
    model = KernelModel(**fields)
    assert axiom in axioms(model)
    assert not is_valid(model)


def test_roles_may_be_absent():
    fields = cs_fields()
    del fields["designated"]["T"]
    assert validate_model(KernelModel(**fields)) == []

    identity = {"T": "T", "A": "A"}
    bare = KernelModel(
        "no-roles",
        ["T", "A"],
        [("T", "A")],
        k0=["T", "A"],
        designated={},
        low_l={"T": "T", "A": "T"},
        low_r={"T": "T", "A": "T"},
        kmap=identity,
    )
    assert validate_model(bare) == []
    assert bare.kstar("T") == "T"


def test_validator_reports_reserved_names():
    m = orthodox_model("starred", ["T", "A*"], [("T", "A*")])
    assert axioms(m) == {"names"}


def test_violation_text():
    fields = cs_fields()
    _mutate_kmap_range(fields)
    rendered = [str(v) for v in validate_model(KernelModel(**fields))]
    assert "kmap.range: kmap(RB) = RB is not in k0" in rendered
