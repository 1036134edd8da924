"""Command-line front end.

Subcommands:

* ``run``             decode a TSV split and score it (semantic + string EM)
* ``coverage``        grammar-expansion coverage of a split or sentence file
* ``fuzz``            generate random in-grammar sentences (+ oracle forms)
* ``augment``         emit pp-moved double-object dative rows
* ``analyze-errors``  classify decode mistakes, e.g. under the pp ablation

Common flags may also come from the environment: RR_DATA, RR_LEXICON,
RR_SEED, RR_MAX_LEN, RR_PP_DEPTH, RR_CP_DEPTH, RR_OUT.  Explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from collections import Counter
from pathlib import Path
from typing import Optional

from . import decoder, fuzz, oracle
# the coverage() function shadows its submodule on the package, so pull the
# names straight from the module
from .coverage import coverage, coverage_curve, shuffle_experiment
from .lexicon import Lexicon, default_lexicon, load_lexicon
from .logical_form import SplitReport, score_split

Row = tuple[str, str, str]  # sentence, logical form, category


def load_tsv(path: str | Path, drop_augmented: bool = False) -> list[Row]:
    """Read (sentence, lf, category) rows; optionally hide augmented ones."""
    rows: list[Row] = []
    with open(path, newline="") as fh:
        for parts in csv.reader(fh, delimiter="\t"):
            if not parts or not parts[0].strip():
                continue
            sentence = parts[0]
            lf = parts[1] if len(parts) > 1 else ""
            category = parts[2] if len(parts) > 2 else ""
            if drop_augmented and category == oracle.AUGMENTED_CATEGORY:
                continue
            rows.append((sentence, lf, category))
    return rows


def write_tsv(path: str | Path, rows: list[Row]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t")
        for row in rows:
            w.writerow(row)


def _env(name: str, default=None, cast=str):
    raw = os.environ.get(name)
    return cast(raw) if raw is not None else default


def _get_lexicon(args) -> Lexicon:
    if args.lexicon:
        return load_lexicon(args.lexicon)
    return default_lexicon()


def _split_paths(args) -> list[tuple[str, Path]]:
    data = args.data
    if data is None:
        sys.exit("no data directory: pass --data or set RR_DATA")
    data = Path(data)
    names: list[str] = list(args.split or [])
    if getattr(args, "use_dev_split", False):
        names.append("dev")
    if getattr(args, "use_test_split", False):
        names.append("test")
    if getattr(args, "use_gen_split", False):
        names.append("gen")
    if not names:
        names = ["test"]
    out = []
    for name in names:
        p = data / f"{name}.tsv"
        if not p.exists():
            sys.exit(f"split file not found: {p}")
        out.append((name, p))
    return out


def _limit_rows(rows: list[Row], max_len: Optional[int]) -> list[Row]:
    if max_len is None:
        return rows
    kept = [r for r in rows if len(r[0].split()) <= max_len]
    dropped = len(rows) - len(kept)
    if dropped:
        print(f"# skipped {dropped} rows longer than {max_len} tokens", file=sys.stderr)
    return kept


def _report_lines(report: SplitReport) -> list[str]:
    return [report.format()]


def cmd_run(args) -> int:
    lexicon = _get_lexicon(args)
    lines: list[str] = []
    for name, path in _split_paths(args):
        rows = _limit_rows(load_tsv(path, drop_augmented=args.drop_augmented), args.max_len)
        predict = (lambda s: decoder.decode(s, lexicon, ablate=args.ablate_no_pp_rule))
        report = score_split(rows, predict, name=name)
        lines += _report_lines(report)
        if name == "gen":
            by_cat: dict[str, list[Row]] = {}
            for row in rows:
                by_cat.setdefault(row[2] or "uncategorized", []).append(row)
            for cat in sorted(by_cat):
                sub = score_split(by_cat[cat], predict, name=f"gen/{cat}")
                lines += _report_lines(sub)
    print("\n".join(lines))
    if args.out:
        Path(args.out).write_text("\n".join(lines) + "\n")
    return 0


def cmd_coverage(args) -> int:
    lexicon = _get_lexicon(args)
    if args.sentences:
        sentences = [ln for ln in Path(args.sentences).read_text().splitlines() if ln.strip()]
        label = args.sentences
    else:
        (name, path), = _split_paths(args)
        sentences = [r[0] for r in load_tsv(path)]
        label = name
    result = coverage(sentences, lexicon)
    print(f"coverage source={label} n={len(sentences)} covered={len(result.covered)} "
          f"universe={len(result.universe)} fraction={result.fraction}")
    for key in sorted(result.missing):
        print(f"missing {key}")
    if args.curve:
        curve = coverage_curve(sentences, lexicon)
        print(f"curve first_full={curve.first_full} final={curve.final}")
    if args.shuffles:
        res = shuffle_experiment(sentences, lexicon, n_shuffles=args.shuffles,
                                 seed=args.seed)
        print(f"shuffles n={args.shuffles} median={res.median} "
              f"p2.5={res.lo} p97.5={res.hi}")
    return 0


def cmd_fuzz(args) -> int:
    lexicon = _get_lexicon(args)
    examples = fuzz.fuzz_generate(args.n, lexicon, seed=args.seed,
                                  pp_depth=args.pp_depth, cp_depth=args.cp_depth,
                                  mode=args.mode)
    rows: list[Row] = []
    mismatches = 0
    for tokens, tree in examples:
        gold = oracle.lf_oracle(tree, lexicon)
        if args.check:
            pred = decoder.decode(tokens, lexicon)
            if pred != gold:
                mismatches += 1
                print(f"MISMATCH {' '.join(tokens)}\n  oracle: {gold}\n  decode: {pred}")
        rows.append((" ".join(tokens), gold, "fuzz"))
    if args.out:
        write_tsv(args.out, rows)
    else:
        for row in rows:
            print("\t".join(row))
    if args.check:
        print(f"# checked {len(rows)} sentences, {mismatches} mismatches")
        return 1 if mismatches else 0
    return 0


def cmd_augment(args) -> int:
    lexicon = _get_lexicon(args)
    if args.infile:
        rows = load_tsv(args.infile)
    else:
        (name, path), = _split_paths(args)
        rows = load_tsv(path)
    augmented = oracle.augment_v_dat_p2(rows, lexicon)
    if args.out:
        write_tsv(args.out, augmented)
    else:
        for row in augmented:
            print("\t".join(row))
    print(f"# augmented {len(augmented)} of {len(rows)} rows", file=sys.stderr)
    return 0


def cmd_analyze_errors(args) -> int:
    lexicon = _get_lexicon(args)
    kinds: Counter = Counter()
    shown = 0
    for name, path in _split_paths(args):
        rows = _limit_rows(load_tsv(path, drop_augmented=args.drop_augmented), args.max_len)
        for sentence, gold, _cat in rows:
            pred = decoder.decode(sentence, lexicon, ablate=args.ablate_no_pp_rule)
            report = oracle.classify_error(gold, pred)
            kinds[report.kind] += 1
            if report.kind not in ("exact", "equivalent") and shown < args.show:
                shown += 1
                print(f"[{report.kind}] {sentence}\n  gold: {gold}\n  pred: {pred}"
                      + (f"\n  {report.detail}" if report.detail else ""))
        total = sum(kinds.values())
        for kind in sorted(kinds):
            print(f"split={name} kind={kind} count={kinds[kind]} frac={kinds[kind] / total:.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="flatsem", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--lexicon", default=_env("RR_LEXICON"),
                    help="alternative lexicon TSV (default: bundled)")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_data_args(p, multi_split=True):
        p.add_argument("--data", default=_env("RR_DATA"), help="directory with <split>.tsv files")
        p.add_argument("--split", action="append", help="split name (repeatable)")
        if multi_split:
            p.add_argument("--use_dev_split", action="store_true")
            p.add_argument("--use_test_split", action="store_true")
            p.add_argument("--use_gen_split", action="store_true")
        p.add_argument("--max-len", type=int, default=_env("RR_MAX_LEN", cast=int),
                       help="skip sentences longer than this many tokens")

    p = sub.add_parser("run", help="decode a split and score it")
    add_data_args(p)
    p.add_argument("--ablate-no-pp-rule", action="store_true",
                   help="bind roles without filtering pp-prefixed nouns")
    p.add_argument("--drop-augmented", action="store_true")
    p.add_argument("--out", default=_env("RR_OUT"), help="also write the report here")
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("coverage", help="expansion coverage of sentences")
    add_data_args(p, multi_split=False)
    p.add_argument("--sentences", help="plain text file, one sentence per line")
    p.add_argument("--curve", action="store_true", help="cumulative coverage curve")
    p.add_argument("--shuffles", type=int, default=0, help="row-order shuffle experiment")
    p.add_argument("--seed", type=int, default=_env("RR_SEED", 0, int))
    p.set_defaults(fn=cmd_coverage)

    p = sub.add_parser("fuzz", help="random in-grammar sentences")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--seed", type=int, default=_env("RR_SEED", 0, int))
    p.add_argument("--pp-depth", type=int, default=_env("RR_PP_DEPTH", 2, int))
    p.add_argument("--cp-depth", type=int, default=_env("RR_CP_DEPTH", 2, int))
    p.add_argument("--mode", choices=["uniform", "coverage"], default="uniform")
    p.add_argument("--check", action="store_true",
                   help="verify decode() against the oracle on each sentence")
    p.add_argument("--out", default=_env("RR_OUT"), help="write sentence\\tlf\\tfuzz rows")
    p.set_defaults(fn=cmd_fuzz)

    p = sub.add_parser("augment", help="move datives' theme pp to the recipient")
    add_data_args(p, multi_split=False)
    p.add_argument("--in", dest="infile", help="explicit input TSV (instead of --data/--split)")
    p.add_argument("--out", default=_env("RR_OUT"))
    p.set_defaults(fn=cmd_augment)

    p = sub.add_parser("analyze-errors", help="classify decode mistakes on a split")
    add_data_args(p)
    p.add_argument("--ablate-no-pp-rule", action="store_true")
    p.add_argument("--drop-augmented", action="store_true")
    p.add_argument("--show", type=int, default=5, help="print this many mistakes in full")
    p.set_defaults(fn=cmd_analyze_errors)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
