"""Grammar-expansion coverage of sentence collections.

An "expansion" is one grammar production, keyed "<lhs> -> <rhs...>"; leaf
categories expand to nothing and are not counted.  Coverage of a corpus is
the fraction of all such keys exercised by the corpus's parse trees.  The
curve/shuffle machinery asks how quickly a row stream covers everything --
each consumed row advances the example counter whether or not it parses, so
"full coverage at example k" has one fixed meaning.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from statistics import median
from typing import Iterable, Optional, Sequence

from . import lexicon as lx
from .grammar import all_expansion_keys, parse_sentence, tree_expansions


def max_expansion_coverage(grammar: dict | None = None) -> frozenset[str]:
    """Every coverable expansion key of the grammar."""
    return all_expansion_keys(grammar)


@dataclass
class CoverageResult:
    covered: set[str]
    universe: frozenset[str]

    @property
    def fraction(self) -> float:
        return len(self.covered) / len(self.universe)

    @property
    def missing(self) -> set[str]:
        return set(self.universe) - self.covered


def coverage(sentences: Iterable[str | list[str]],
             lexicon: lx.Lexicon | None = None) -> CoverageResult:
    if lexicon is None:
        lexicon = lx.default_lexicon()
    covered: set[str] = set()
    for s in sentences:
        tree = parse_sentence(s, lexicon)
        if tree is not None:
            covered |= tree_expansions(tree)
    return CoverageResult(covered, max_expansion_coverage())


@dataclass
class CurveResult:
    sizes: list[int]  # covered-key count after each example
    first_full: Optional[int]  # 1-based example index reaching full coverage

    @property
    def final(self) -> int:
        return self.sizes[-1] if self.sizes else 0


def coverage_curve(sentences: Iterable[str | list[str]],
                   lexicon: lx.Lexicon | None = None) -> CurveResult:
    if lexicon is None:
        lexicon = lx.default_lexicon()
    universe = max_expansion_coverage()
    covered: set[str] = set()
    sizes: list[int] = []
    first_full = None
    for k, s in enumerate(sentences, start=1):
        tree = parse_sentence(s, lexicon)
        if tree is not None:
            covered |= tree_expansions(tree)
        sizes.append(len(covered))
        if first_full is None and len(covered) == len(universe):
            first_full = k
    return CurveResult(sizes, first_full)


@dataclass
class ShuffleResult:
    first_full: list[int]  # full-coverage index, one entry per shuffle
    median: float
    lo: float  # 2.5th percentile
    hi: float  # 97.5th percentile


def _percentile(sorted_vals: Sequence[float], q: float) -> float:
    # nearest-rank
    k = max(1, math.ceil(q * len(sorted_vals)))
    return sorted_vals[k - 1]


def shuffle_experiment(sentences: Sequence[str],
                       lexicon: lx.Lexicon | None = None,
                       n_shuffles: int = 1000,
                       seed: int = 0) -> ShuffleResult:
    """Distribution of the full-coverage index over row-order shuffles.

    Parses each distinct sentence once up front; a thousand shuffles of a
    training-sized corpus then costs set-unions only.
    """
    if lexicon is None:
        lexicon = lx.default_lexicon()
    universe = max_expansion_coverage()
    expansions: dict[str, frozenset[str]] = {}
    per_row = []
    for s in sentences:
        key = s if isinstance(s, str) else " ".join(s)
        if key not in expansions:
            tree = parse_sentence(s, lexicon)
            expansions[key] = frozenset(tree_expansions(tree)) if tree else frozenset()
        per_row.append(expansions[key])

    rng = random.Random(seed)
    order = list(range(len(per_row)))
    firsts: list[int] = []
    for _ in range(n_shuffles):
        rng.shuffle(order)
        covered: set[str] = set()
        for k, idx in enumerate(order, start=1):
            covered |= per_row[idx]
            if len(covered) == len(universe):
                firsts.append(k)
                break
        else:
            raise ValueError("corpus does not reach full coverage")
    s = sorted(firsts)
    return ShuffleResult(firsts, float(median(s)), float(_percentile(s, 0.025)),
                         float(_percentile(s, 0.975)))
