"""Tree-based reference translator and error/augmentation analyses.

``lf_oracle`` derives the logical form from a parse tree by ordinary
compositional walking -- no sequence tricks -- and is the ground truth the
flat decoder is measured against.  The same tree view powers the
attraction-error predictor and the dative-argument-order augmentation.

Logical-form layout (shared with the decoder):

* every noun is introduced in sentence order, ``[*] label ( idx ) ;`` with a
  star when its determiner is "the";
* body conjuncts follow, joined by AND, ordered by the sentence position of
  the conjunct's head word: an ``nmod . prep`` conjunct sits at its modified
  noun, a verb's introduction and role conjuncts sit at the verb.

Indices are 0-based token positions in the input sentence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import lexicon as lx
from .grammar import Tree, parse_sentence
from .logical_form import parse_lf, semantic_exact_match


@dataclass(frozen=True)
class NounIntro:
    label: str
    pos: int
    star: bool


@dataclass(frozen=True)
class Nmod:
    prep: str
    head_pos: int
    obj_pos: int


@dataclass
class VerbGroup:
    stem: str
    pos: int
    relations: list[tuple[str, int, int]] = field(default_factory=list)


@dataclass
class SentenceFacts:
    intros: list[NounIntro] = field(default_factory=list)
    nmods: list[Nmod] = field(default_factory=list)
    groups: list[VerbGroup] = field(default_factory=list)


# Templates whose agent (when present) binds the subject, i.e. sits left of
# the verb; passives with a by-phrase carry their agent on the right.
AGENT_LEFT_TEMPLATES = frozenset({
    "v_trans_omissible_p1", "v_trans_omissible_p2", "v_trans_not_omissible",
    "v_cp_taking", "v_inf_taking", "v_unacc_p1", "v_unerg", "v_inf",
    "v_dat_p1", "v_dat_p2",
})
AGENT_RIGHT_TEMPLATES = frozenset({
    "v_trans_omissible_pp_p2", "v_trans_not_omissible_pp_p2",
    "v_unacc_pp_p2", "v_dat_pp_p2", "v_dat_pp_p4",
})


def get_agent_side(template: str) -> Optional[str]:
    """'left' / 'right' for where the template's agent argument sits; None
    when the frame has no agent at all."""
    if template in AGENT_LEFT_TEMPLATES:
        return "left"
    if template in AGENT_RIGHT_TEMPLATES:
        return "right"
    return None


def _np_part(node: Tree) -> tuple[int, list[NounIntro], list[Nmod]]:
    """Head position, noun introductions and nmod links of an np subtree."""
    if node.symbol == "<np>":
        return _np_part(node.children[0])
    if node.symbol == "<np_prop>":
        leaf = node.children[0]
        return leaf.pos, [NounIntro(leaf.word, leaf.pos, False)], []
    if node.symbol == "<np_det>":
        det, noun = node.children
        return noun.pos, [NounIntro(noun.word, noun.pos, det.word == "the")], []
    if node.symbol == "<np_pp>":
        head_det, prep, inner = node.children
        head_pos, intros, nmods = _np_part(head_det)
        inner_head, inner_intros, inner_nmods = _np_part(inner)
        intros = intros + inner_intros
        nmods = nmods + [Nmod(prep.word, head_pos, inner_head)] + inner_nmods
        return head_pos, intros, nmods
    raise ValueError(f"not an np node: {node.symbol}")


def _stem(leaf: Tree, lexicon: lx.Lexicon) -> str:
    return lexicon.stem(leaf.word)


def _walk_start(node: Tree, lexicon: lx.Lexicon, facts: SentenceFacts) -> int:
    """Populate facts for one clause (and its embeddings); returns the
    position of the clause's main verb."""
    clause = node.children[0]  # <s1>..<s4> or <vp_internal>
    kind = clause.symbol

    if kind == "<vp_internal>":
        np, verb = clause.children
        subj, intros, nmods = _np_part(np)
        facts.intros += intros
        facts.nmods += nmods
        facts.groups.append(VerbGroup(_stem(verb, lexicon), verb.pos, [("theme", verb.pos, subj)]))
        return verb.pos

    np = clause.children[0]
    subj, intros, nmods = _np_part(np)
    facts.intros += intros
    facts.nmods += nmods

    if kind == "<s4>":
        vp = clause.children[1]
        v_main, _to, v_inf = vp.children
        facts.groups.append(VerbGroup(_stem(v_main, lexicon), v_main.pos, [
            ("agent", v_main.pos, subj), ("xcomp", v_main.pos, v_inf.pos)]))
        facts.groups.append(VerbGroup(_stem(v_inf, lexicon), v_inf.pos, [
            ("agent", v_inf.pos, subj)]))
        return v_main.pos

    if kind == "<s1>":
        vp = clause.children[1]
        if vp.children[0].is_leaf and len(vp.children) == 1:
            verb = vp.children[0]  # <v_unerg> or <v_trans_omissible_p1>
            facts.groups.append(VerbGroup(_stem(verb, lexicon), verb.pos, [("agent", verb.pos, subj)]))
            return verb.pos
        inner = vp.children[0]
        verb = inner.children[0]
        V = verb.pos
        group = VerbGroup(_stem(verb, lexicon), V)
        if inner.symbol in ("<vp_external1>", "<vp_external2>", "<vp_external3>"):
            obj, obj_intros, obj_nmods = _np_part(inner.children[1])
            facts.intros += obj_intros
            facts.nmods += obj_nmods
            group.relations = [("agent", V, subj), ("theme", V, obj)]
        elif inner.symbol == "<vp_external5>":
            group.relations = [("agent", V, subj)]
            facts.groups.append(group)
            embedded_verb = _walk_start(inner.children[2], lexicon, facts)
            group.relations.append(("ccomp", V, embedded_verb))
            return V
        elif inner.symbol == "<vp_external6>":
            obj, obj_intros, obj_nmods = _np_part(inner.children[1])
            facts.intros += obj_intros
            facts.nmods += obj_nmods
            iobj, i_intros, i_nmods = _np_part(inner.children[2].children[1])
            facts.intros += i_intros
            facts.nmods += i_nmods
            group.relations = [("agent", V, subj), ("theme", V, obj), ("recipient", V, iobj)]
        elif inner.symbol == "<vp_external7>":
            rec, r_intros, r_nmods = _np_part(inner.children[1])
            facts.intros += r_intros
            facts.nmods += r_nmods
            theme, t_intros, t_nmods = _np_part(inner.children[2])
            facts.intros += t_intros
            facts.nmods += t_nmods
            group.relations = [("agent", V, subj), ("recipient", V, rec), ("theme", V, theme)]
        else:
            raise ValueError(f"unexpected vp_external child {inner.symbol}")
        facts.groups.append(group)
        return V

    if kind == "<s2>":
        vp = clause.children[2].children[0]  # <vp_passiveN>
        verb = vp.children[0]
        V = verb.pos
        group = VerbGroup(_stem(verb, lexicon), V, [("theme", V, subj)])
        rest = vp.children[1:]
        if vp.symbol in ("<vp_passive7>", "<vp_passive8>"):
            iobj, i_intros, i_nmods = _np_part(rest[0].children[1])
            facts.intros += i_intros
            facts.nmods += i_nmods
            group.relations.append(("recipient", V, iobj))
            rest = rest[1:]
        if rest:  # remaining shape is <by> <np>
            agent, a_intros, a_nmods = _np_part(rest[1])
            facts.intros += a_intros
            facts.nmods += a_nmods
            group.relations.append(("agent", V, agent))
        facts.groups.append(group)
        return V

    if kind == "<s3>":
        vp = clause.children[2].children[0]  # <vp_passive_dat1|2>
        verb = vp.children[0]
        V = verb.pos
        group = VerbGroup(_stem(verb, lexicon), V, [("recipient", V, subj)])
        theme, t_intros, t_nmods = _np_part(vp.children[1])
        facts.intros += t_intros
        facts.nmods += t_nmods
        group.relations.append(("theme", V, theme))
        if vp.symbol == "<vp_passive_dat2>":
            agent, a_intros, a_nmods = _np_part(vp.children[3])
            facts.intros += a_intros
            facts.nmods += a_nmods
            group.relations.append(("agent", V, agent))
        facts.groups.append(group)
        return V

    raise ValueError(f"unexpected clause {kind}")


def rel_tokens(name: str, left: int, right: int) -> list[str]:
    return name.split() + ["(", str(left), ",", str(right), ")"]


def intro_tokens(label: str, pos: int, star: bool = False) -> list[str]:
    toks = ["*"] if star else []
    return toks + [label, "(", str(pos), ")"]


def serialize_facts(facts: SentenceFacts) -> str:
    intros = sorted(facts.intros, key=lambda i: i.pos)
    body: list[tuple[int, list[str]]] = []
    for m in facts.nmods:
        body.append((m.head_pos, rel_tokens(f"nmod . {m.prep}", m.head_pos, m.obj_pos)))
    for g in facts.groups:
        body.append((g.pos, intro_tokens(g.stem, g.pos)))
        for name, left, right in g.relations:
            body.append((g.pos, rel_tokens(name, left, right)))
    body.sort(key=lambda item: item[0])

    out: list[str] = []
    for k, intro in enumerate(intros):
        out += intro_tokens(intro.label, intro.pos, intro.star)
        if k < len(intros) - 1 or body:
            out.append(";")
    for k, (_, toks) in enumerate(body):
        if k:
            out.append("AND")
        out += toks
    return " ".join(out)


def sentence_facts(tree: Tree, lexicon: lx.Lexicon) -> SentenceFacts:
    facts = SentenceFacts()
    _walk_start(tree, lexicon, facts)
    return facts


def lf_oracle(sentence: str | list[str] | Tree, lexicon: lx.Lexicon | None = None) -> Optional[str]:
    """Logical form via tree walking; None when the sentence has no parse."""
    if lexicon is None:
        lexicon = lx.default_lexicon()
    tree = sentence if isinstance(sentence, Tree) else parse_sentence(sentence, lexicon)
    if tree is None:
        return None
    return serialize_facts(sentence_facts(tree, lexicon))


def _matrix_clause(tree: Tree) -> tuple[str, Tree, Optional[Tree]]:
    """(template, verb leaf, subject np) of the outermost clause."""
    clause = tree.children[0]
    kind = clause.symbol
    if kind == "<vp_internal>":
        np, verb = clause.children
        return verb.symbol.strip("<>"), verb, np
    np = clause.children[0]
    if kind == "<s4>":
        verb = clause.children[1].children[0]
        return verb.symbol.strip("<>"), verb, np
    if kind == "<s1>":
        vp = clause.children[1]
        if len(vp.children) == 1 and vp.children[0].is_leaf:
            verb = vp.children[0]
        else:
            verb = vp.children[0].children[0]
        return verb.symbol.strip("<>"), verb, np
    # s2 / s3: participle follows "was"
    vp = clause.children[2].children[0]
    verb = vp.children[0]
    return verb.symbol.strip("<>"), verb, np


def matrix_template(tree: Tree) -> str:
    return _matrix_clause(tree)[0]


def subject_is_pp_modified(tree: Tree) -> bool:
    _, _, np = _matrix_clause(tree)
    inner = np.children[0] if np.symbol == "<np>" else np
    return inner.symbol == "<np_pp>"


def predict_attraction_error(tree: Tree | str, lexicon: lx.Lexicon | None = None) -> Optional[int]:
    """Index the subject slot resolves to when pp-prefix filtering is off.

    That is the position of the *last* noun inside the subject np -- the
    linearly nearest noun left of the verb.  Equals the true subject head when
    the subject has no pp chain; None when the sentence has no parse.
    """
    if not isinstance(tree, Tree):
        tree = parse_sentence(tree, lexicon or lx.default_lexicon())
        if tree is None:
            return None
    _, _, np = _matrix_clause(tree)
    noun_positions = [leaf.pos for leaf in np.leaves()
                      if leaf.symbol in ("<common_noun>", "<proper_noun>")]
    return max(noun_positions)


@dataclass
class ErrorReport:
    kind: str  # exact | equivalent | attraction | other
    detail: str = ""
    differing: list[tuple[str, str]] = field(default_factory=list)


def classify_error(expected: str, actual: str) -> ErrorReport:
    """Compare gold and predicted logical forms.

    "attraction" is the signature mistake of dropping the pp filter: atom
    sets identical except one role conjunct whose right argument moved.
    """
    if expected.split() == actual.split():
        return ErrorReport("exact")
    try:
        exp, act = parse_lf(expected), parse_lf(actual)
    except ValueError as e:
        return ErrorReport("other", detail=f"unparseable: {e}")
    if semantic_exact_match(expected, actual):
        return ErrorReport("equivalent")
    exp_un = sorted((i.label, i.idx, i.star) for i in exp.unary)
    act_un = sorted((i.label, i.idx, i.star) for i in act.unary)
    exp_bin = {(r.name, r.left, r.right) for r in exp.binary}
    act_bin = {(r.name, r.left, r.right) for r in act.binary}
    if exp_un == act_un and len(exp.binary) == len(act.binary):
        missing = sorted(exp_bin - act_bin)
        extra = sorted(act_bin - exp_bin)
        if len(missing) == 1 and len(extra) == 1:
            (en, el, er), (an, al, ar) = missing[0], extra[0]
            if en == an and el == al and er != ar:
                return ErrorReport(
                    "attraction",
                    detail=f"{en} ( {el} , {er} ) became {an} ( {al} , {ar} )",
                    differing=[(f"{en} ( {el} , {er} )", f"{an} ( {al} , {ar} )")],
                )
        return ErrorReport("other", detail=f"role conjuncts differ: -{missing} +{extra}",
                           differing=[(str(missing), str(extra))])
    return ErrorReport("other", detail="introduced instances differ")


AUGMENTED_CATEGORY = "v_dat_p2_pp_moved_to_recipient"


def augment_v_dat_p2(rows: Sequence[tuple[str, str, str]],
                     lexicon: lx.Lexicon | None = None) -> list[tuple[str, str, str]]:
    """Move the pp of double-object datives from the theme to the recipient.

    Eligible rows look like "liam gave the monkey a chalk in the container ."
    -- a double-object dative whose only pp modifies the second object -- and
    come back as "liam gave the monkey in the container a chalk ." with the
    logical form rebuilt for the new positions.  Other rows contribute
    nothing.
    """
    if lexicon is None:
        lexicon = lx.default_lexicon()
    out = []
    for sentence, _lf, _category in rows:
        tokens = [t.lower() for t in sentence.split()]
        tree = parse_sentence(tokens, lexicon)
        if tree is None:
            continue
        clause = tree.children[0]
        if clause.symbol != "<s1>":
            continue
        vp = clause.children[1]
        if len(vp.children) != 1 or vp.children[0].symbol != "<vp_external7>":
            continue
        dat = vp.children[0]
        theme = dat.children[2].children[0]
        if theme.symbol != "<np_pp>":
            continue
        if len(list(tree.find_all("<np_pp>"))) != 1:
            continue  # exactly one pp in the sentence, and it is on the theme
        pp_start = theme.children[1].pos
        theme_start = min(leaf.pos for leaf in theme.leaves())
        theme_end = max(leaf.pos for leaf in theme.leaves())
        new_tokens = (tokens[:theme_start] + tokens[pp_start:theme_end + 1]
                      + tokens[theme_start:pp_start] + tokens[theme_end + 1:])
        new_lf = lf_oracle(new_tokens, lexicon)
        assert new_lf is not None, f"augmented sentence failed to reparse: {new_tokens}"
        out.append((" ".join(new_tokens), new_lf, AUGMENTED_CATEGORY))
    return out
