"""Sequence-to-sequence primitives the flat parser is written in.

Everything downstream (masks, running counts, template matching) is phrased in
terms of a handful of operations over aligned sequences:

* ``select``        builds an attention-style boolean selector matrix
* ``aggregate``     pools values through a selector (mean pooling)
* ``selector_width``counts selected positions per row
* ``elementwise``   position-wise map over aligned sequences
* ``combine``       position-wise map over selectors

Sequences are plain Python lists; a selector is a list of boolean rows,
``sel[q][k]`` meaning query position ``q`` attends to key position ``k``.
Scalars broadcast to full sequences wherever a sequence is expected.
"""

from __future__ import annotations

from typing import Any, Callable, Sequence

MAX_SEQ_LEN = 512

Selector = list[list[bool]]


class SequenceTooLongError(ValueError):
    """Raised when an input exceeds MAX_SEQ_LEN positions."""


def check_length(n: int) -> None:
    if n > MAX_SEQ_LEN:
        raise SequenceTooLongError(f"sequence length {n} exceeds maximum {MAX_SEQ_LEN}")


def indices(n: int) -> list[int]:
    """The positional sequence [0, 1, ..., n-1]."""
    check_length(n)
    return list(range(n))


def _broadcast(x: Any, n: int) -> Sequence:
    if isinstance(x, (list, tuple)):
        if len(x) != n:
            raise ValueError(f"length mismatch: {len(x)} vs {n}")
        return x
    return [x] * n


def _common_length(*xs: Any) -> int:
    for x in xs:
        if isinstance(x, (list, tuple)):
            return len(x)
    raise ValueError("at least one argument must be a sequence")


def select(keys: Any, queries: Any, predicate: Callable[[Any, Any], bool]) -> Selector:
    """Boolean selector with ``sel[q][k] = predicate(keys[k], queries[q])``.

    The first argument supplies the key (column) values, the second the query
    (row) values; either may be a scalar, which broadcasts.  For example
    ``select(indices(n), indices(n), le)`` selects, at each position, every
    position at or before it -- the building block of running counts.
    """
    n = _common_length(keys, queries)
    check_length(n)
    ks = _broadcast(keys, n)
    qs = _broadcast(queries, n)
    return [[bool(predicate(ks[k], qs[q])) for k in range(n)] for q in range(n)]


def combine(op: Callable[..., bool], *selectors: Selector) -> Selector:
    """Position-wise combination of selectors, e.g. ``combine(and_, a, b)``."""
    if not selectors:
        raise ValueError("combine needs at least one selector")
    n = len(selectors[0])
    for s in selectors:
        if len(s) != n:
            raise ValueError("selector size mismatch")
    return [
        [bool(op(*(s[q][k] for s in selectors))) for k in range(n)]
        for q in range(n)
    ]


def selector_width(selector: Selector) -> list[int]:
    """Number of selected key positions for each query position."""
    return [sum(row) for row in selector]


def aggregate(selector: Selector, values: Any, default: Any = None) -> list:
    """Mean-pool ``values`` through ``selector``.

    Numeric values average; a query row that selects nothing yields 0 (or
    ``default`` when given).  Non-numeric values only support the
    unique-selection pattern: every selected value must be identical, and an
    empty row yields "" (or ``default``).  Averages that come out whole are
    returned as ints so masks stay integer-typed.
    """
    n = len(selector)
    vals = _broadcast(values, n)
    numeric = all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in vals)
    if default is None:
        default = 0 if numeric else ""
    out = []
    for q in range(n):
        picked = [vals[k] for k in range(n) if selector[q][k]]
        if not picked:
            out.append(default)
        elif all(v == picked[0] for v in picked):
            out.append(picked[0])
        elif numeric:
            mean = sum(picked) / len(picked)
            out.append(int(mean) if isinstance(mean, float) and mean.is_integer() else mean)
        else:
            raise ValueError("aggregate over distinct symbolic values is undefined")
    return out


def elementwise(fn: Callable[..., Any], *seqs: Any) -> list:
    """Apply ``fn`` position-wise across aligned sequences (scalars broadcast)."""
    n = _common_length(*seqs)
    check_length(n)
    cols = [_broadcast(s, n) for s in seqs]
    return [fn(*(c[i] for c in cols)) for i in range(n)]


def shift_right(values: list, default: Any = 0) -> list:
    """values[i-1] at each position, via a relative-offset selector."""
    idx = indices(len(values))
    sel = select(idx, idx, lambda k, q: k == q - 1)
    return aggregate(sel, values, default=default)


def shift_left(values: list, default: Any = 0) -> list:
    """values[i+1] at each position."""
    idx = indices(len(values))
    sel = select(idx, idx, lambda k, q: k == q + 1)
    return aggregate(sel, values, default=default)


def running_count(mask: list[int]) -> list[int]:
    """1-based count of mask hits up to and including each position."""
    idx = indices(len(mask))
    hits = select(mask, 1, lambda k, q: k == q)
    upto = select(idx, idx, lambda k, q: k <= q)
    return selector_width(combine(lambda a, b: a and b, hits, upto))
