import pytest

from flatsem import grammar as gr
from flatsem import oracle as orc

from corpora import (
    ATTRACTION_CASES,
    AUGMENT_AFTER,
    AUGMENT_BEFORE,
    GOLDEN,
)


@pytest.mark.parametrize("sentence,expected", sorted(GOLDEN.items()))
def test_golden_logical_forms(sentence, expected):
    assert orc.lf_oracle(sentence) == expected


def test_unparseable_gives_none():
    assert orc.lf_oracle("shark .") is None
    assert orc.lf_oracle("the was by .") is None


def test_accepts_tokens_or_tree(lexicon):
    sentence = "a boy painted the girl"
    tree = gr.parse_sentence(sentence, lexicon)
    assert orc.lf_oracle(sentence.split()) == GOLDEN[sentence]
    assert orc.lf_oracle(tree) == GOLDEN[sentence]


def test_sentence_facts_shapes(lexicon):
    tree = gr.parse_sentence("a boy beside the tree painted the cake", lexicon)
    facts = orc.sentence_facts(tree, lexicon)
    assert [(i.label, i.pos, i.star) for i in facts.intros] == [
        ("boy", 1, False), ("tree", 4, True), ("cake", 7, True),
    ]
    assert [(m.prep, m.head_pos, m.obj_pos) for m in facts.nmods] == [("beside", 1, 4)]
    (group,) = facts.groups
    assert group.stem == "paint"
    assert group.pos == 5
    assert group.relations == [("agent", 5, 1), ("theme", 5, 7)]


def test_body_sorted_by_head_position(lexicon):
    # nmod of the theme (head 4) sorts after the verb group (head 2)
    tree = gr.parse_sentence("a horse gave the cake beside a table to the mouse", lexicon)
    lf = orc.serialize_facts(orc.sentence_facts(tree, lexicon))
    body = lf.split(" ; ")[-1]
    assert body.index("give ( 2 )") < body.index("nmod . beside ( 4 , 7 )")


def test_no_trailing_separator_when_body_empty():
    # a bare unergative still has a verb group; only broken inputs could have
    # an empty body, so check the serialized form never ends with a separator
    for sentence in GOLDEN:
        lf = orc.lf_oracle(sentence)
        assert not lf.endswith(";") and not lf.endswith("AND")


def test_agent_side_classification():
    assert orc.get_agent_side("v_trans_omissible_p2") == "left"
    assert orc.get_agent_side("v_unerg") == "left"
    assert orc.get_agent_side("v_inf_taking") == "left"
    assert orc.get_agent_side("v_trans_omissible_pp_p2") == "right"
    assert orc.get_agent_side("v_dat_pp_p4") == "right"
    assert orc.get_agent_side("v_trans_omissible_pp_p1") is None  # no agent at all
    assert orc.get_agent_side("v_unacc_p2") is None


def test_matrix_template_and_subject_modification(lexicon):
    tree = gr.parse_sentence("the baby beside the valve smiled .", lexicon)
    assert orc.matrix_template(tree) == "v_unerg"
    assert orc.subject_is_pp_modified(tree)
    plain = gr.parse_sentence("the baby smiled .", lexicon)
    assert not orc.subject_is_pp_modified(plain)


def test_predict_attraction_error():
    assert orc.predict_attraction_error("the baby beside the valve smiled .") == 4
    assert (
        orc.predict_attraction_error(
            "the girl beside the stool beside the table smiled ."
        )
        == 7
    )
    # without pp modification the prediction is just the subject head
    assert orc.predict_attraction_error("the baby smiled .") == 1
    assert orc.predict_attraction_error("shark .") is None


@pytest.mark.parametrize("sentence,clean,ablated,wrong_idx", ATTRACTION_CASES)
def test_classify_attraction(sentence, clean, ablated, wrong_idx):
    report = orc.classify_error(clean, ablated)
    assert report.kind == "attraction"
    assert len(report.differing) == 1
    gold_atom, bad_atom = report.differing[0]
    assert gold_atom.startswith("agent")
    assert bad_atom.endswith(f", {wrong_idx} )")


def test_classify_exact_and_equivalent():
    lf = GOLDEN["a boy painted the girl"]
    assert orc.classify_error(lf, lf).kind == "exact"
    renamed = lf.replace("( 1 )", "( 9 )").replace(", 1 )", ", 9 )")
    assert orc.classify_error(lf, renamed).kind == "equivalent"


def test_classify_other():
    lf = GOLDEN["a boy painted the girl"]
    dropped = lf.replace(" AND theme ( 2 , 4 )", "")
    assert orc.classify_error(lf, dropped).kind == "other"
    assert orc.classify_error(lf, "gibberish ( (").kind == "other"
    # two substitutions are not a single attraction
    two = lf.replace("agent ( 2 , 1 )", "agent ( 2 , 4 )").replace(
        "theme ( 2 , 4 )", "theme ( 2 , 1 )"
    )
    assert orc.classify_error(lf, two).kind == "other"


def test_augment_moves_pp_to_recipient():
    rows = [(AUGMENT_BEFORE[0], AUGMENT_BEFORE[1], "in_distribution")]
    out = orc.augment_v_dat_p2(rows)
    assert out == [(AUGMENT_AFTER[0], AUGMENT_AFTER[1], orc.AUGMENTED_CATEGORY)]


def test_augment_skips_ineligible_rows():
    ineligible = [
        # pp already on the recipient
        ("liam gave the monkey in the container a chalk .", "", "x"),
        # prepositional dative, not double-object
        ("liam gave a chalk in the container to the monkey .", "", "x"),
        # no pp at all
        ("liam gave the monkey a chalk .", "", "x"),
        # two pps: one on each object
        ("liam gave the monkey on the bed a chalk in the container .", "", "x"),
        # out of grammar entirely
        ("shark .", "", "x"),
    ]
    assert orc.augment_v_dat_p2(ineligible) == []


def test_augment_output_reparses_to_own_lf():
    rows = [(AUGMENT_BEFORE[0], AUGMENT_BEFORE[1], "in_distribution")]
    ((sentence, lf, _category),) = orc.augment_v_dat_p2(rows)
    assert orc.lf_oracle(sentence) == lf
