from flatsem import grammar as gr


def test_expansion_universe_size():
    keys = gr.all_expansion_keys()
    assert len(keys) == 52
    assert "<start> -> <s1>" in keys
    assert "<np_pp> -> <np_det> <pp> <np>" in keys
    assert "<vp_passive8> -> <v_dat_pp_p2> <pp_iobj> <by> <np>" in keys
    # leaf categories have no expansions of their own
    assert not any(k.startswith("<det>") for k in keys)
    assert not any(k.startswith("<common_noun>") for k in keys)


def test_simple_transitive_structure():
    tree = gr.parse_sentence("a boy painted the girl")
    assert tree is not None
    assert gr.tree_expansions(tree) == {
        "<start> -> <s1>",
        "<s1> -> <np> <vp_external>",
        "<np> -> <np_det>",
        "<np_det> -> <det> <common_noun>",
        "<vp_external> -> <vp_external2>",
        "<vp_external2> -> <v_trans_omissible_p2> <np>",
    }
    leaves = list(tree.leaves())
    assert [l.word for l in leaves] == ["a", "boy", "painted", "the", "girl"]
    assert [l.pos for l in leaves] == [0, 1, 2, 3, 4]


def test_trailing_period_skipped_positions_kept():
    tree = gr.parse_sentence("a cake rolled .")
    assert tree is not None
    leaves = list(tree.leaves())
    assert [l.word for l in leaves] == ["a", "cake", "rolled"]
    assert [l.pos for l in leaves] == [0, 1, 2]
    assert gr.parse_sentence("a cake rolled") is not None


def test_out_of_grammar_is_none():
    assert gr.parse_sentence("shark .") is None
    assert gr.parse_sentence("the was by") is None
    assert gr.parse_sentence("painted the girl .") is None
    assert gr.parse_sentence(".") is None


def test_pp_allowed_in_every_np_position():
    # pp-modified passive subject: never seen in training, always grammatical
    assert gr.parse_sentence("the cake on the plate was eaten .") is not None
    # pp-modified indirect object inside a to-phrase
    assert gr.parse_sentence("emma gave the cake to a mouse on the table .") is not None
    # pp chains right-branch
    tree = gr.parse_sentence("the cake on the table beside the bed burned .")
    assert tree is not None
    pps = list(tree.find_all("<np_pp>"))
    assert len(pps) == 2
    assert pps[1] in pps[0].children[2].find_all("<np_pp>")


def test_clause_embedding_recurses():
    tree = gr.parse_sentence("emma noticed that emma noticed that a cake rolled .")
    assert tree is not None
    exp = gr.tree_expansions(tree)
    assert "<vp_external5> -> <v_cp_taking> <that> <start>" in exp
    assert len(list(tree.find_all("<vp_external5>"))) == 2
    assert len(list(tree.find_all("<start>"))) == 3


def test_dative_variants_pick_distinct_leaves():
    def leaf_symbols(sentence):
        return {l.symbol for l in gr.parse_sentence(sentence).leaves()}

    assert "<v_dat_p1>" in leaf_symbols("a horse gave the cake to the mouse .")
    assert "<v_dat_p2>" in leaf_symbols("eleanor sold evelyn the cake .")
    assert "<v_dat_pp_p1>" in leaf_symbols("the cookie was passed to emma .")
    assert "<v_dat_pp_p2>" in leaf_symbols("a cake was forwarded to levi by charlotte .")
    assert "<v_dat_pp_p3>" in leaf_symbols("emma was given a strawberry .")
    assert "<v_dat_pp_p4>" in leaf_symbols("the customer was sold a car by ella .")


def test_ambiguous_verb_form_settles_by_context():
    # "ate" is omissible: with an object it is p2, without one p1
    with_obj = gr.parse_sentence("the captain ate the cake .")
    without = gr.parse_sentence("the captain ate .")
    assert "<v_trans_omissible_p2>" in {l.symbol for l in with_obj.leaves()}
    assert "<v_trans_omissible_p1>" in {l.symbol for l in without.leaves()}


def test_unaccusative_subject_position():
    # v_unacc surfaces verb-finally (<vp_internal>) or transitively (<s1>)
    froze = gr.parse_sentence("the cake froze .")
    grew = gr.parse_sentence("the boy grew the flower .")
    assert "<vp_internal> -> <np> <v_unacc_p2>" in gr.tree_expansions(froze)
    assert "<vp_external1> -> <v_unacc_p1> <np>" in gr.tree_expansions(grew)


def test_infinitive_frame():
    tree = gr.parse_sentence("the scientist wanted to read .")
    exp = gr.tree_expansions(tree)
    assert "<s4> -> <np> <vp_external4>" in exp
    assert "<vp_external4> -> <v_inf_taking> <to> <v_inf>" in exp
