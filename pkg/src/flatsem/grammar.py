"""Input grammar (category-level, no terminals) and a chart parser over it.

The grammar generates every sentence shape of the task's English fragment at
the category level; words are supplied by the lexicon.  Unlike the training
distribution, ``<np>`` is uniform everywhere -- prepositional-phrase
modification is licensed in every noun-phrase position, including passive
subjects, which is exactly what the structural-generalization splits exploit.

Nonterminals wear angle brackets.  Leaf categories (empty right-hand sides)
are matched against words through their lexicon codes; an ambiguous verb form
offers every positional variant its codes allow and the parser settles the
rest.  Parses are deterministic: ambiguity resolves to the first listed
expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import lexicon as lx

COGS_INPUT_GRAMMAR_NO_TERMINALS: dict[str, list[list[str]]] = {
    "<start>": [["<s1>"], ["<s2>"], ["<s3>"], ["<s4>"], ["<vp_internal>"]],
    "<s1>": [["<np>", "<vp_external>"]],
    "<s2>": [["<np>", "<was>", "<vp_passive>"]],
    "<s3>": [["<np>", "<was>", "<vp_passive_dat>"]],
    "<s4>": [["<np>", "<vp_external4>"]],
    "<vp_internal>": [["<np>", "<v_unacc_p2>"]],
    "<vp_external>": [
        ["<v_unerg>"],
        ["<v_trans_omissible_p1>"],
        ["<vp_external1>"],
        ["<vp_external2>"],
        ["<vp_external3>"],
        ["<vp_external5>"],
        ["<vp_external6>"],
        ["<vp_external7>"],
    ],
    "<vp_external1>": [["<v_unacc_p1>", "<np>"]],
    "<vp_external2>": [["<v_trans_omissible_p2>", "<np>"]],
    "<vp_external3>": [["<v_trans_not_omissible>", "<np>"]],
    "<vp_external4>": [["<v_inf_taking>", "<to>", "<v_inf>"]],
    "<vp_external5>": [["<v_cp_taking>", "<that>", "<start>"]],
    "<vp_external6>": [["<v_dat_p1>", "<np>", "<pp_iobj>"]],
    "<vp_external7>": [["<v_dat_p2>", "<np>", "<np>"]],
    "<vp_passive>": [
        ["<vp_passive1>"],
        ["<vp_passive2>"],
        ["<vp_passive3>"],
        ["<vp_passive4>"],
        ["<vp_passive5>"],
        ["<vp_passive6>"],
        ["<vp_passive7>"],
        ["<vp_passive8>"],
    ],
    "<vp_passive1>": [["<v_trans_not_omissible_pp_p1>"]],
    "<vp_passive2>": [["<v_trans_not_omissible_pp_p2>", "<by>", "<np>"]],
    "<vp_passive3>": [["<v_trans_omissible_pp_p1>"]],
    "<vp_passive4>": [["<v_trans_omissible_pp_p2>", "<by>", "<np>"]],
    "<vp_passive5>": [["<v_unacc_pp_p1>"]],
    "<vp_passive6>": [["<v_unacc_pp_p2>", "<by>", "<np>"]],
    "<vp_passive7>": [["<v_dat_pp_p1>", "<pp_iobj>"]],
    "<vp_passive8>": [["<v_dat_pp_p2>", "<pp_iobj>", "<by>", "<np>"]],
    "<vp_passive_dat>": [["<vp_passive_dat1>"], ["<vp_passive_dat2>"]],
    "<vp_passive_dat1>": [["<v_dat_pp_p3>", "<np>"]],
    "<vp_passive_dat2>": [["<v_dat_pp_p4>", "<np>", "<by>", "<np>"]],
    "<np>": [["<np_det>"], ["<np_prop>"], ["<np_pp>"]],
    "<np_det>": [["<det>", "<common_noun>"]],
    "<np_prop>": [["<proper_noun>"]],
    "<np_pp>": [["<np_det>", "<pp>", "<np>"]],
    "<pp_iobj>": [["<to>", "<np>"]],
    # leaves: matched against lexicon codes
    "<det>": [],
    "<pp>": [],
    "<was>": [],
    "<by>": [],
    "<to>": [],
    "<that>": [],
    "<common_noun>": [],
    "<proper_noun>": [],
    "<v_trans_omissible_p1>": [],
    "<v_trans_omissible_p2>": [],
    "<v_trans_omissible_pp_p1>": [],
    "<v_trans_omissible_pp_p2>": [],
    "<v_trans_not_omissible>": [],
    "<v_trans_not_omissible_pp_p1>": [],
    "<v_trans_not_omissible_pp_p2>": [],
    "<v_cp_taking>": [],
    "<v_inf_taking>": [],
    "<v_unacc_p1>": [],
    "<v_unacc_p2>": [],
    "<v_unacc_pp_p1>": [],
    "<v_unacc_pp_p2>": [],
    "<v_unerg>": [],
    "<v_inf>": [],
    "<v_dat_p1>": [],
    "<v_dat_p2>": [],
    "<v_dat_pp_p1>": [],
    "<v_dat_pp_p2>": [],
    "<v_dat_pp_p3>": [],
    "<v_dat_pp_p4>": [],
}

START = "<start>"

# Lexicon code -> leaf categories a word with that code can fill.
CODE_LEAVES: dict[int, tuple[str, ...]] = {
    lx.DET: ("<det>",),
    lx.PP: ("<pp>",),
    lx.WAS: ("<was>",),
    lx.BY: ("<by>",),
    lx.TO: ("<to>",),
    lx.THAT: ("<that>",),
    lx.COMMON_NOUN: ("<common_noun>",),
    lx.PROPER_NOUN: ("<proper_noun>",),
    lx.V_TRANS_OMISSIBLE: ("<v_trans_omissible_p1>", "<v_trans_omissible_p2>"),
    lx.V_TRANS_OMISSIBLE_PP: ("<v_trans_omissible_pp_p1>", "<v_trans_omissible_pp_p2>"),
    lx.V_TRANS_NOT_OMISSIBLE: ("<v_trans_not_omissible>",),
    lx.V_TRANS_NOT_OMISSIBLE_PP: ("<v_trans_not_omissible_pp_p1>", "<v_trans_not_omissible_pp_p2>"),
    lx.V_CP_TAKING: ("<v_cp_taking>",),
    lx.V_INF_TAKING: ("<v_inf_taking>",),
    lx.V_UNACC: ("<v_unacc_p1>", "<v_unacc_p2>"),
    lx.V_UNERG: ("<v_unerg>",),
    lx.V_INF: ("<v_inf>",),
    lx.V_DAT: ("<v_dat_p1>", "<v_dat_p2>"),
    lx.V_DAT_PP: ("<v_dat_pp_p1>", "<v_dat_pp_p2>", "<v_dat_pp_p3>", "<v_dat_pp_p4>"),
    lx.V_UNACC_PP: ("<v_unacc_pp_p1>", "<v_unacc_pp_p2>"),
    lx.V_NORMALIZED_IN_OUTPUT: (),
}


@dataclass(frozen=True)
class Tree:
    """Parse node.  Leaves carry the word and its 0-based sentence position."""

    symbol: str
    children: tuple["Tree", ...] = ()
    word: Optional[str] = None
    pos: Optional[int] = None

    @property
    def is_leaf(self) -> bool:
        return self.word is not None

    def leaves(self) -> Iterable["Tree"]:
        if self.is_leaf:
            yield self
        else:
            for c in self.children:
                yield from c.leaves()

    def find_all(self, symbol: str) -> Iterable["Tree"]:
        if self.symbol == symbol:
            yield self
        for c in self.children:
            yield from c.find_all(symbol)


def expansion_key(lhs: str, rhs: list[str] | tuple[str, ...]) -> str:
    return f"{lhs} -> {' '.join(rhs)}"


def all_expansion_keys(grammar: dict[str, list[list[str]]] | None = None) -> frozenset[str]:
    g = grammar if grammar is not None else COGS_INPUT_GRAMMAR_NO_TERMINALS
    return frozenset(
        expansion_key(lhs, rhs) for lhs, alts in g.items() for rhs in alts
    )


def tree_expansions(tree: Tree) -> set[str]:
    """Expansion keys used by a parse tree (leaves contribute none)."""
    out: set[str] = set()
    stack = [tree]
    while stack:
        node = stack.pop()
        if node.is_leaf:
            continue
        out.add(expansion_key(node.symbol, tuple(c.symbol for c in node.children)))
        stack.extend(node.children)
    return out


def leaf_classes(word: str, lexicon: lx.Lexicon) -> frozenset[str]:
    """Leaf categories this word may fill, via its lexicon codes."""
    classes: set[str] = set()
    for code in lexicon.codes(word):
        classes.update(CODE_LEAVES[code])
    return frozenset(classes)


@dataclass(frozen=True)
class _State:
    lhs: str
    rhs: tuple[str, ...]
    dot: int
    origin: int


def _earley_chart(token_classes: list[frozenset[str]], grammar) -> dict[tuple[str, int], set[int]]:
    """Earley recognition; returns completed spans (symbol, start) -> {ends}.

    Leaves complete by scanning; nonterminals by the usual completer.  The
    grammar has no epsilon rules, which keeps the loop simple.
    """
    n = len(token_classes)
    chart: list[set[_State]] = [set() for _ in range(n + 1)]
    completed: dict[tuple[str, int], set[int]] = {}

    def add(i: int, st: _State, agenda: list[_State]) -> None:
        if st not in chart[i]:
            chart[i].add(st)
            agenda.append(st)

    for rhs in grammar[START]:
        chart[0].add(_State(START, tuple(rhs), 0, 0))
    for i in range(n + 1):
        agenda = list(chart[i])
        while agenda:
            st = agenda.pop()
            if st.dot == len(st.rhs):
                completed.setdefault((st.lhs, st.origin), set()).add(i)
                # completer: advance everything waiting on st.lhs at st.origin
                for waiting in list(chart[st.origin]):
                    if waiting.dot < len(waiting.rhs) and waiting.rhs[waiting.dot] == st.lhs:
                        add(i, _State(waiting.lhs, waiting.rhs, waiting.dot + 1, waiting.origin), agenda)
                continue
            nxt = st.rhs[st.dot]
            if grammar[nxt]:
                # predictor; no epsilon rules, so nothing completes over an
                # empty span and the completer never has to look backwards
                for rhs in grammar[nxt]:
                    add(i, _State(nxt, tuple(rhs), 0, i), agenda)
            elif i < n and nxt in token_classes[i]:
                # scanner (leaf category)
                completed.setdefault((nxt, i), set()).add(i + 1)
                nxt_state = _State(st.lhs, st.rhs, st.dot + 1, st.origin)
                if nxt_state not in chart[i + 1]:
                    chart[i + 1].add(nxt_state)
    return completed


def _extract(symbol: str, i: int, j: int, token_classes, tokens, positions,
             completed, grammar) -> Optional[Tree]:
    """First parse of symbol over [i, j), trying expansions in listed order."""
    if not grammar[symbol]:
        if j == i + 1 and symbol in token_classes[i]:
            return Tree(symbol, word=tokens[i], pos=positions[i])
        return None
    for rhs in grammar[symbol]:
        children = _match_rhs(tuple(rhs), 0, i, j, token_classes, tokens, positions, completed, grammar)
        if children is not None:
            return Tree(symbol, children=tuple(children))
    return None


def _match_rhs(rhs, k, i, j, token_classes, tokens, positions, completed, grammar):
    if k == len(rhs):
        return [] if i == j else None
    sym = rhs[k]
    if not grammar[sym]:
        ends = [i + 1] if i < j and sym in token_classes[i] else []
    else:
        ends = sorted(e for e in completed.get((sym, i), ()) if e <= j)
    last = k == len(rhs) - 1
    for end in ends:
        if last and end != j:
            continue
        rest = _match_rhs(rhs, k + 1, end, j, token_classes, tokens, positions, completed, grammar)
        if rest is not None:
            child = _extract(sym, i, end, token_classes, tokens, positions, completed, grammar)
            if child is not None:
                return [child] + rest
    return None


def parse_sentence(tokens: list[str], lexicon: lx.Lexicon | None = None) -> Optional[Tree]:
    """Parse a token list (or space-joined string); None when out of grammar.

    A trailing "." is not part of the grammar and is skipped, but positions of
    the remaining tokens are untouched, so leaf positions always equal the
    0-based index in the original sentence.
    """
    if isinstance(tokens, str):
        tokens = tokens.split()
    if lexicon is None:
        lexicon = lx.default_lexicon()
    tokens = [t.lower() for t in tokens]
    positions = list(range(len(tokens)))
    if tokens and tokens[-1] == ".":
        tokens, positions = tokens[:-1], positions[:-1]
    if not tokens:
        return None
    grammar = COGS_INPUT_GRAMMAR_NO_TERMINALS
    token_classes = [leaf_classes(t, lexicon) for t in tokens]
    completed = _earley_chart(token_classes, grammar)
    n = len(tokens)
    if n not in completed.get((START, 0), ()):
        return None
    return _extract(START, 0, n, token_classes, tokens, positions, completed, grammar)
