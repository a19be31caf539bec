import pytest

from correspondence.component_form import (
    CR,
    ComponentForm,
    ComponentTerm,
    b_upper_form,
    component_form,
    split_form,
)
from kernel.errors import LadderError
from kernel.extended import Special
from ladder.enumerate import enumerate_phi
from ladder.ladder import Ladder
from ladder.ladder_file import emit_ladder, parse_ladder
from theta.words import Word

T_STAR, L_STAR, R_STAR = Special.T, Special.L, Special.R

LRO_S_TERMS = "S^{l} & S^{lr} & S^{rl} & S^{lrl} & S^{rlr}"


def test_constant_ladder_form(chain3):
    form = component_form(Ladder.constant(chain3, "A", "T"))
    assert form.render() == "A^K & T^{K l} & T^{K r}"
    assert form.tail_from == 2
    assert form.records() == (
        "main\tA\tK\t-\t-\n"
        "main\tT\tK\tl\t(1,1)\n"
        "main\tT\tK\tr\t(0,1)\n"
        "tail\t2\n"
    )


def test_lro_form_uses_s_terms(lro_g):
    form = component_form(lro_g)
    assert form.render() == "G^K & G^{K r} & " + LRO_S_TERMS
    assert form.tail_from == 4
    bases = form.bases()
    assert "LNB" not in bases and "RNB" not in bases
    s_words = {t.word.render() for t in form.terms if t.base == "S"}
    assert s_words == {"l", "lr", "rl", "lrl", "rlr"}


def test_exponents_are_mirrored(chain3):
    l = Ladder(chain3, "G", ("G", "A", "T"), ("A", "T", "T"))
    form = component_form(l)
    # the value at rl is A, written with the exponent lr
    assert ComponentTerm("A", kernel=True, word=Word.parse("lr")) in form.terms
    assert ComponentTerm("T", kernel=True, word=Word.parse("rl")) in form.terms


def test_band_specials_give_band_terms(band):
    l = Ladder(band, "T", (T_STAR, T_STAR), (L_STAR, T_STAR))
    assert component_form(l).render() == "T^K & LNB^{r} & " + LRO_S_TERMS
    r = Ladder(band, "T", (R_STAR, T_STAR), (T_STAR, T_STAR))
    assert "RNB^{l}" in component_form(r).render()


def test_b_upper_form(lro_g, chain3):
    assert b_upper_form(lro_g).render() == "CR & " + LRO_S_TERMS
    with_bands = b_upper_form(Ladder.constant(chain3, "G", "A"))
    assert with_bands.render() == CR
    assert len(with_bands) == 1
    assert with_bands.tail_from is None


def test_split_form(lro_g, chain3):
    form = split_form(lro_g)
    assert form.render() == "G^K & G^{K r} & V^B(CR & " + LRO_S_TERMS + ")"
    assert form.nested.render() == b_upper_form(lro_g).render()
    records = form.records().splitlines()
    assert records[0] == "main\tG\tK\t-\t-"
    assert "V^B\tCR\t-\t-\t-" in records
    assert records[-1] == "tail\t4"

    flat = Ladder.constant(chain3, "G", "A")
    assert split_form(flat).nested is None
    assert split_form(flat).render() == component_form(flat).render()


def test_split_form_has_only_kernel_terms_outside_the_block(cs):
    for l in enumerate_phi(cs, 2):
        form = split_form(l)
        assert all(t.kernel for t in form.terms)
        assert set(form.bases()) <= set(cs.k0)


def test_dirty_ladders_have_no_form(chain3):
    dirty = Ladder.constant(chain3, T_STAR, T_STAR)
    for emit in (component_form, b_upper_form, split_form):
        with pytest.raises(LadderError, match="not in Φ"):
            emit(dirty)


def test_forms_are_stable_through_files(cs):
    for l in enumerate_phi(cs, 2):
        again = parse_ladder(emit_ladder(l), model=cs)
        assert component_form(again).render() == component_form(l).render()
        assert split_form(again).records() == split_form(l).records()


def test_terms_are_deduplicated():
    form = ComponentForm()
    form.add(ComponentTerm("S", word=Word.parse("l")))
    form.add(ComponentTerm("S", word=Word.parse("l")))
    form.add(ComponentTerm(CR))
    assert form.sorted().render() == "CR & S^{l}"
    assert str(ComponentTerm("U", kernel=True, word=Word.parse("rl"))) == "U^{K rl}"
