"""Logical-form parsing, equality notions, and split scoring.

Two ways to compare a prediction with gold:

* string exact match -- whitespace-tokenized equality;
* semantic exact match -- equality up to a bijective renaming of the
  instance indices.  Conjunct order never matters, star flags and labels do,
  and every relation must map consistently under one global bijection.

Scoring a split reports both, with an exact (Clopper-Pearson) 95% interval
on the semantic accuracy.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from scipy.special import betainc


class LfParseError(ValueError):
    pass


@dataclass(frozen=True)
class Intro:
    label: str
    idx: int
    star: bool = False


@dataclass(frozen=True)
class Rel:
    name: str  # "agent", "ccomp", ..., or "nmod . in"
    left: int
    right: int


@dataclass
class Lf:
    unary: list[Intro] = field(default_factory=list)
    binary: list[Rel] = field(default_factory=list)


def parse_lf(text: str) -> Lf:
    """Parse "x ( 1 ) ; * y ( 4 ) ; v ( 2 ) AND agent ( 2 , 1 ) AND ..." """
    lf = Lf()
    conjuncts: list[list[str]] = [[]]
    for tok in text.split():
        if tok in (";", "AND"):
            conjuncts.append([])
        else:
            conjuncts[-1].append(tok)
    for toks in conjuncts:
        if not toks:
            raise LfParseError(f"empty conjunct in: {text!r}")
        star = toks[0] == "*"
        if star:
            toks = toks[1:]
        try:
            op = toks.index("(")
        except ValueError:
            raise LfParseError(f"missing '(' in conjunct {' '.join(toks)!r}") from None
        name = " ".join(toks[:op])
        args = toks[op + 1:-1]
        if not name or toks[-1] != ")":
            raise LfParseError(f"malformed conjunct {' '.join(toks)!r}")
        if len(args) == 1:
            lf.unary.append(Intro(name, _int(args[0], text), star))
        elif len(args) == 3 and args[1] == ",":
            if star:
                raise LfParseError(f"star on relation conjunct in: {text!r}")
            lf.binary.append(Rel(name, _int(args[0], text), _int(args[2], text)))
        else:
            raise LfParseError(f"bad argument list {' '.join(args)!r}")
    return lf


def _int(tok: str, ctx: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise LfParseError(f"non-numeric index {tok!r} in: {ctx!r}") from None


def string_exact_match(a: str, b: str) -> bool:
    return a.split() == b.split()


def _signature(lf: Lf, idx: int) -> tuple:
    """Degree fingerprint of an index: preserved by any valid bijection."""
    sig = [(r.name, "L") for r in lf.binary if r.left == idx]
    sig += [(r.name, "R") for r in lf.binary if r.right == idx]
    return tuple(sorted(sig))


def semantic_exact_match(a: str | Lf, b: str | Lf) -> bool:
    """Equality up to bijective renaming of instance indices."""
    try:
        lfa = parse_lf(a) if isinstance(a, str) else a
        lfb = parse_lf(b) if isinstance(b, str) else b
    except LfParseError:
        return False
    if len(lfa.unary) != len(lfb.unary) or len(lfa.binary) != len(lfb.binary):
        return False

    # Bucket indices by everything a bijection must preserve; a mismatch in
    # bucket shapes settles it without any search.
    def buckets(lf: Lf):
        out: dict[tuple, list[int]] = {}
        for i in lf.unary:
            key = (i.label, i.star, _signature(lf, i.idx))
            out.setdefault(key, []).append(i.idx)
        return out

    if any(len(set(i.idx for i in lf.unary)) != len(lf.unary) for lf in (lfa, lfb)):
        # duplicate introductions of one index: fall back to literal equality
        ua = sorted((i.label, i.idx, i.star) for i in lfa.unary)
        ub = sorted((i.label, i.idx, i.star) for i in lfb.unary)
        ba = sorted((r.name, r.left, r.right) for r in lfa.binary)
        bb = sorted((r.name, r.left, r.right) for r in lfb.binary)
        return ua == ub and ba == bb

    ba, bb = buckets(lfa), buckets(lfb)
    if set(ba) != set(bb) or any(len(ba[k]) != len(bb[k]) for k in ba):
        return False

    candidates: dict[int, list[int]] = {}
    for key, idxs in ba.items():
        for i in idxs:
            candidates[i] = bb[key]

    brels = Counter((r.name, r.left, r.right) for r in lfb.binary)
    arels = [(r.name, r.left, r.right) for r in lfa.binary]

    # Backtracking assignment, most-constrained index first; each mapped
    # index immediately accounts for every relation it completes, so wrong
    # branches die at the first inconsistent edge.
    order = sorted(candidates, key=lambda i: len(candidates[i]))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        i = order[k]
        for j in candidates[i]:
            if j in used:
                continue
            mapping[i] = j
            used.add(j)
            completed = [(n, mapping[l], mapping[r]) for n, l, r in arels
                         if (l == i or r == i) and l in mapping and r in mapping]
            counts = Counter(completed)
            if all(counts[key1] <= brels[key1] for key1 in counts):
                for key1, c in counts.items():
                    brels[key1] -= c
                if extend(k + 1):
                    return True
                for key1, c in counts.items():
                    brels[key1] += c
            used.discard(j)
            del mapping[i]
        return False

    return extend(0)


def to_graph(lf: str | Lf) -> dict[int, list[tuple[str, int]]]:
    """Adjacency view with agent edges flipped so arrows follow "who acts on
    whom": agent(v, n) becomes n -> v, everything else keeps left -> right."""
    if isinstance(lf, str):
        lf = parse_lf(lf)
    adj: dict[int, list[tuple[str, int]]] = {i.idx: [] for i in lf.unary}
    for r in lf.binary:
        if r.name == "agent":
            adj.setdefault(r.right, []).append((r.name, r.left))
        else:
            adj.setdefault(r.left, []).append((r.name, r.right))
    return adj


def _invert_betainc(a: float, b: float, target: float, tol: float = 1e-10) -> float:
    """Solve betainc(a, b, p) = target for p by bisection on [0, 1]."""
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if betainc(a, b, mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def clopper_pearson(k: int, n: int, alpha: float = 0.05) -> tuple[float, float]:
    """Exact binomial confidence interval for k successes out of n."""
    if not 0 <= k <= n or n <= 0:
        raise ValueError(f"need 0 <= k <= n, n > 0; got k={k} n={n}")
    lower = 0.0 if k == 0 else _invert_betainc(k, n - k + 1, alpha / 2)
    upper = 1.0 if k == n else _invert_betainc(k + 1, n - k, 1 - alpha / 2)
    return lower, upper


@dataclass
class SplitReport:
    name: str
    n: int
    sem_hits: int
    em_hits: int
    failures: list[tuple[str, str, str]] = field(default_factory=list)  # (sentence, gold, pred)

    @property
    def sem(self) -> float:
        return self.sem_hits / self.n if self.n else 0.0

    @property
    def em(self) -> float:
        return self.em_hits / self.n if self.n else 0.0

    @property
    def ci(self) -> tuple[float, float]:
        if not self.n:
            return 0.0, 1.0
        return clopper_pearson(self.sem_hits, self.n)

    def format(self) -> str:
        lo, hi = self.ci
        return (f"split={self.name} n={self.n} sem={self.sem:.4f} em={self.em:.4f} "
                f"ci_low={lo:.4f} ci_high={hi:.4f}")


def score_split(rows: Iterable[tuple[str, str, str]],
                predict: Callable[[str], str],
                name: str = "split",
                keep_failures: int = 20) -> SplitReport:
    """Run ``predict`` over (sentence, gold_lf, category) rows and tally
    semantic / string exact match."""
    n = sem = em = 0
    failures: list[tuple[str, str, str]] = []
    for sentence, gold, _category in rows:
        n += 1
        pred = predict(sentence)
        if string_exact_match(gold, pred):
            em += 1
            sem += 1
        elif semantic_exact_match(gold, pred):
            sem += 1
        elif len(failures) < keep_failures:
            failures.append((sentence, gold, pred))
    return SplitReport(name, n, sem, em, failures)
