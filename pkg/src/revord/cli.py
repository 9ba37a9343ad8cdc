"""Command-line frontend for parsing, analysis, reversing traces, decision
procedures, the family catalog, and the census.

Exit codes: 0 for decided outcomes, 1 for undecided or budget-limited ones,
2 for usage and parse errors.  Budgets come from flags, else from REVORD_*
environment variables, else from the library defaults.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path
from typing import Optional

from .analysis import (
    DEFAULT_BUDGETS,
    RIGHT_O_TYPE,
    UNKNOWN,
    AnalysisBudgets,
    AnalysisError,
    CeilingPrefix,
    CeilingRefuted,
    CeilingUnknown,
    analyze,
    ceiling_prefix,
)
from .census import CENSUS_BUDGETS, run_census
from .decision import (
    DecisionUndecided,
    fraction_normal_form,
    order_sign,
    word_problem,
)
from .families import catalog_index, export_catalog, fixture_catalog
from .presentation import (
    ParseError,
    Presentation,
    complete,
    detect_right_triangular,
    format_presentation,
    opposite,
    parse_presentation,
)
from .reversing import (
    BudgetExceeded,
    Cycle,
    ReversingError,
    ReversingTrace,
    Stuck,
    Terminated,
    left_reverse,
    right_reverse,
)
from .words import WordSyntaxError, Word, format_word, invert, parse_word

_ENV_PREFIX = "REVORD_"
_BUDGET_FLAGS = (
    ("max_steps", "--max-steps", "reversing step limit"),
    ("max_length", "--max-length", "reversing word length limit"),
    ("ceiling_len", "--ceiling-len", "ceiling prefix target length"),
    ("qc_max_power", "--qc-max-power", "largest top-letter power tried"),
    ("qc_max_len", "--qc-max-len", "longest fallback candidate word"),
    ("history_window", "--history-window", "cycle detection window"),
)


# ------------------------------------------------------------- configuration


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    for attr, flag, help_text in _BUDGET_FLAGS:
        parser.add_argument(flag, dest=attr, type=int, default=None,
                            help=help_text)


def _setting(args: argparse.Namespace, attr: str) -> Optional[int]:
    value = getattr(args, attr, None)
    if value is not None:
        return value
    raw = os.environ.get(_ENV_PREFIX + attr.upper())
    return int(raw) if raw else None


def _analysis_budgets(
    args: argparse.Namespace, base: AnalysisBudgets = DEFAULT_BUDGETS
) -> AnalysisBudgets:
    updates = {}
    for attr in ("max_steps", "max_length", "qc_max_power"):
        value = _setting(args, attr)
        if value is not None:
            updates[attr] = value
    ceiling = _setting(args, "ceiling_len")
    if ceiling is not None:
        updates["ceiling_target"] = ceiling
    fallback = _setting(args, "qc_max_len")
    if fallback is not None:
        updates["fallback_length_two_letters"] = fallback
        updates["fallback_length_multi"] = fallback
    return dataclasses.replace(base, **updates) if updates else base


def _reversing_kwargs(args: argparse.Namespace) -> dict:
    kwargs = {}
    for attr in ("max_steps", "max_length", "history_window"):
        value = _setting(args, attr)
        if value is not None:
            kwargs[attr] = value
    return kwargs


def _load_presentation(path: str) -> Presentation:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_presentation(text)


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


# ------------------------------------------------------------ trace rendering


def _letter_token(letter: int, names: tuple[str, ...]) -> str:
    return names[letter] if letter >= 0 else names[~letter] + "^-1"


def _spell_plain(word: Word, names: tuple[str, ...]) -> str:
    if not word:
        return "eps"
    return " ".join(_letter_token(letter, names) for letter in word)


def render_trace(trace: ReversingTrace, names: tuple[str, ...]) -> str:
    """Step-per-line listing of a reversing run; the two-letter junction
    rewritten by the next step is bracketed in each intermediate word."""
    count = len(trace)
    header = f"{trace.orientation} reversing: {count} step" + (
        "" if count == 1 else "s"
    )
    if count == 0:
        return header
    lines = [header]
    for i, word in enumerate(trace.words()):
        if i < count:
            position = trace.records[i][0]
            tokens = [_letter_token(letter, names) for letter in word]
            tokens[position] = "[" + tokens[position]
            tokens[position + 1] = tokens[position + 1] + "]"
            spelled = " ".join(tokens)
        else:
            spelled = _spell_plain(word, names)
        lines.append(f"  {i}  {spelled}")
    return "\n".join(lines)


# ----------------------------------------------------------------- subcommands


def _cmd_parse(args: argparse.Namespace) -> int:
    p = _load_presentation(args.file)
    if args.json:
        _emit_json(
            {
                "names": list(p.names),
                "relations": [
                    [format_word(lhs, p.names), format_word(rhs, p.names)]
                    for lhs, rhs in p.relations
                ],
                "right_triangular": detect_right_triangular(p) is not None,
                "left_triangular": (
                    detect_right_triangular(opposite(p)) is not None
                ),
            }
        )
    else:
        print(format_presentation(p), end="")
    return 0


def _verdict_line(side: str, verdict) -> str:
    cert = verdict.certificate
    if cert is not None:
        detail = cert.kind
        word = getattr(cert, "word", None)
        if word is None:
            word = getattr(cert, "delta", None)
        if word is not None:
            detail += f" delta={format_word(word, verdict.names)}"
    else:
        detail = verdict.reason or ""
    suffix = f" ({detail})" if detail else ""
    return f"{side}: {verdict.status}{suffix}"


def _cmd_analyze(args: argparse.Namespace) -> int:
    p = _load_presentation(args.file)
    budgets = _analysis_budgets(args)
    right = analyze(p, budgets=budgets)
    left = analyze(opposite(p), budgets=budgets)
    if args.json:
        _emit_json({"right": right.to_dict(), "left": left.to_dict()})
    else:
        print(_verdict_line("right", right))
        print(_verdict_line("left", left))
    return 1 if UNKNOWN in (right.status, left.status) else 0


def _cmd_reverse(args: argparse.Namespace) -> int:
    p = _load_presentation(args.file)
    word = parse_word(args.word, p.names)
    if args.left:
        table = complete(opposite(p))
        outcome, trace = left_reverse(word, table, **_reversing_kwargs(args))
    else:
        table = complete(p)
        outcome, trace = right_reverse(word, table, **_reversing_kwargs(args))
    names = p.names
    if args.trace and not args.json:
        print(render_trace(trace, names))
    if isinstance(outcome, Terminated):
        if args.left:
            final = invert(outcome.left_denominator) + outcome.right_numerator
        else:
            final = outcome.right_numerator + invert(outcome.left_denominator)
        if args.json:
            _emit_json(
                {
                    "outcome": "terminated",
                    "steps": outcome.steps,
                    "final": format_word(final, names),
                    "denominator": format_word(
                        outcome.left_denominator, names
                    ),
                    "numerator": format_word(outcome.right_numerator, names),
                }
            )
        else:
            plural = "" if outcome.steps == 1 else "s"
            print(f"terminated in {outcome.steps} step{plural}")
            print(f"final: {format_word(final, names)}")
        return 0
    if isinstance(outcome, Cycle):
        if args.json:
            _emit_json(
                {
                    "outcome": "cycle",
                    "steps": outcome.steps,
                    "earlier_step": outcome.earlier_step,
                    "period_steps": outcome.period_steps,
                    "flank_left": format_word(outcome.flank_left, names),
                    "flank_right": format_word(outcome.flank_right, names),
                }
            )
        else:
            print(
                f"cycle after {outcome.steps} steps: period "
                f"{outcome.period_steps} steps from step "
                f"{outcome.earlier_step}"
            )
            print(
                f"flanks: {format_word(outcome.flank_left, names)} | "
                f"{format_word(outcome.flank_right, names)}"
            )
        return 0
    if isinstance(outcome, Stuck):
        s, t = outcome.pair
        if args.json:
            _emit_json(
                {
                    "outcome": "stuck",
                    "steps": outcome.steps,
                    "position": outcome.position,
                    "pair": [names[s], names[t]],
                }
            )
        else:
            print(
                f"stuck after {outcome.steps} steps at position "
                f"{outcome.position} on ({names[s]}, {names[t]})"
            )
        return 0
    assert isinstance(outcome, BudgetExceeded)
    if args.json:
        _emit_json(
            {
                "outcome": "budget",
                "steps": outcome.steps,
                "max_word_length_seen": outcome.max_word_length_seen,
            }
        )
    else:
        print(
            f"budget exceeded after {outcome.steps} steps "
            f"(longest word {outcome.max_word_length_seen})"
        )
    return 1


def _certification_error(
    p: Presentation, budgets: AnalysisBudgets, force: bool
) -> Optional[str]:
    """The decision procedures are total only over O-type monoids, so both
    sides are analyzed first unless --force skips the check."""
    if force:
        return None
    right = analyze(p, budgets=budgets)
    left = analyze(opposite(p), budgets=budgets)
    if right.status == RIGHT_O_TYPE and left.status == RIGHT_O_TYPE:
        return None
    return (
        "presentation is not certified O-type on both sides "
        f"(right: {right.status}, left: {left.status}); "
        "pass --force to run anyway"
    )


def _cmd_sign(args: argparse.Namespace) -> int:
    p = _load_presentation(args.file)
    budgets = _analysis_budgets(args)
    error = _certification_error(p, budgets, args.force)
    if error:
        print(error, file=sys.stderr)
        return 1
    word = parse_word(args.word, p.names)
    result = order_sign(
        word, complete(p), complete(opposite(p)), **_reversing_kwargs(args)
    )
    if args.json:
        _emit_json(
            {"sign": result.sign, "word": format_word(result.word, p.names)}
        )
    else:
        print({1: "> 1", 0: "= 1", -1: "< 1"}[result.sign])
    return 0


def _cmd_wp(args: argparse.Namespace) -> int:
    if len(args.word) != 2:
        print("wp needs exactly two -w words", file=sys.stderr)
        return 2
    p = _load_presentation(args.file)
    u, v = (parse_word(text, p.names) for text in args.word)
    if any(letter < 0 for letter in u + v):
        print("wp compares positive words only", file=sys.stderr)
        return 2
    budgets = _analysis_budgets(args)
    error = _certification_error(p, budgets, args.force)
    if error:
        print(error, file=sys.stderr)
        return 1
    equal = word_problem(
        u, v, complete(p), complete(opposite(p)), **_reversing_kwargs(args)
    )
    if args.json:
        _emit_json({"equal": equal})
    else:
        print("equal" if equal else "not equal")
    return 0


def _cmd_fraction(args: argparse.Namespace) -> int:
    p = _load_presentation(args.file)
    budgets = _analysis_budgets(args)
    error = _certification_error(p, budgets, args.force)
    if error:
        print(error, file=sys.stderr)
        return 1
    word = parse_word(args.word, p.names)
    fraction = fraction_normal_form(
        word, complete(p), complete(opposite(p)), **_reversing_kwargs(args)
    )
    if args.json:
        _emit_json(
            {
                "denominator": format_word(fraction.denominator, p.names),
                "numerator": format_word(fraction.numerator, p.names),
                "steps": list(fraction.steps),
            }
        )
    else:
        signed = invert(fraction.denominator) + fraction.numerator
        print(format_word(signed, p.names))
    return 0


def _cmd_ceiling(args: argparse.Namespace) -> int:
    p = _load_presentation(args.file)
    budgets = _analysis_budgets(args)
    table = complete(p)
    out = ceiling_prefix(table, budgets=budgets)
    if isinstance(out, CeilingPrefix):
        if args.json:
            _emit_json(
                {
                    "status": "prefix",
                    "letters": format_word(out.letters, p.names),
                    "period": (
                        None
                        if out.period is None
                        else format_word(out.period, p.names)
                    ),
                }
            )
        else:
            print(f"prefix: {format_word(out.letters, p.names)}")
            if out.period is not None:
                print(f"period: {format_word(out.period, p.names)}")
        return 0
    if isinstance(out, CeilingRefuted):
        if args.json:
            _emit_json({"status": "refuted", "step": out.step})
        else:
            print(f"refuted at step {out.step}: reversing cycle")
        return 0
    assert isinstance(out, CeilingUnknown)
    if args.json:
        _emit_json(
            {
                "status": "unknown",
                "partial": format_word(out.partial, p.names),
                "step": out.step,
                "reason": out.reason,
            }
        )
    else:
        print(f"unknown at step {out.step}: {out.reason}")
        print(f"partial: {format_word(out.partial, p.names)}")
    return 1


def _cmd_family(args: argparse.Namespace) -> int:
    if args.export:
        paths = export_catalog(args.export)
        print(f"wrote {len(paths)} files to {args.export}")
        return 0
    if args.list:
        for inst in fixture_catalog():
            print(inst.instance_id)
        return 0
    if not args.id:
        print("family needs an instance id, --list, or --export",
              file=sys.stderr)
        return 2
    inst = catalog_index().get(args.id)
    if inst is None:
        print(f"unknown family instance id: {args.id}", file=sys.stderr)
        return 2
    if args.json:
        _emit_json(inst.to_dict())
    else:
        print(format_presentation(inst.presentation), end="")
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    budgets = _analysis_budgets(args, base=CENSUS_BUDGETS)
    summary = run_census(
        args.max_len,
        args.out,
        workers=args.workers,
        budgets=budgets,
        summary_path=args.summary,
        csv_path=args.csv,
    )
    counts = summary["counts"]
    if args.json:
        _emit_json(summary)
    else:
        line = (
            f"{counts['Lemma72Discard']} / {counts['CyclicReversing']} / "
            f"{counts['QuasiCentralFound']} "
            f"(O-type: {summary['otype_count']})"
        )
        if counts["Unknown"]:
            line += f", unknown: {counts['Unknown']}"
        print(line)
    return 1 if counts["Unknown"] else 0


# ----------------------------------------------------------------- dispatcher


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revord",
        description=(
            "Subword reversing over triangular presentations: analysis, "
            "decision procedures, families, and the census."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text, *, file=True, word=None):
        cmd = sub.add_parser(name, help=help_text)
        cmd.set_defaults(handler=handler)
        if file:
            cmd.add_argument("-f", "--file", required=True,
                             help="presentation file ('-' for stdin)")
        if word == "one":
            cmd.add_argument("-w", "--word", required=True,
                             help="signed word, e.g. 'a^-1 b^2'")
        elif word == "two":
            cmd.add_argument("-w", "--word", action="append", required=True,
                             help="positive word (give -w twice)")
        cmd.add_argument("--json", action="store_true",
                         help="machine-readable output")
        return cmd

    command("parse", _cmd_parse, "validate and canonicalize a presentation")

    cmd = command("analyze", _cmd_analyze, "classify both sides")
    _add_budget_flags(cmd)

    cmd = command("reverse", _cmd_reverse, "reverse a signed word",
                  word="one")
    cmd.add_argument("--left", action="store_true",
                     help="left reversing instead of right")
    cmd.add_argument("--trace", action="store_true",
                     help="print the step-per-line trace")
    _add_budget_flags(cmd)

    for name, handler, help_text in (
        ("sign", _cmd_sign, "order sign of a signed word"),
        ("fraction", _cmd_fraction, "left-fraction normal form"),
    ):
        cmd = command(name, handler, help_text, word="one")
        cmd.add_argument("--force", action="store_true",
                         help="skip the O-type certification check")
        _add_budget_flags(cmd)

    cmd = command("wp", _cmd_wp, "decide equality of two positive words",
                  word="two")
    cmd.add_argument("--force", action="store_true",
                     help="skip the O-type certification check")
    _add_budget_flags(cmd)

    cmd = command("ceiling", _cmd_ceiling, "greedy right-ceiling prefix")
    _add_budget_flags(cmd)

    cmd = command("family", _cmd_family, "catalog of family instances",
                  file=False)
    cmd.add_argument("id", nargs="?", help="instance id, e.g. two_gen_bab")
    cmd.add_argument("--list", action="store_true", help="list instance ids")
    cmd.add_argument("--export", metavar="DIR",
                     help="write every instance to DIR")

    cmd = command("census", _cmd_census,
                  "classify all presentations a = b w", file=False)
    cmd.add_argument("--max-len", type=int, default=9,
                     help="longest w enumerated")
    cmd.add_argument("--out", default="census.jsonl",
                     help="JSON-lines output (resumable)")
    cmd.add_argument("--workers", type=int, default=8,
                     help="worker processes")
    cmd.add_argument("--summary", help="also write the summary JSON here")
    cmd.add_argument("--csv", help="also write all rows as CSV here")
    _add_budget_flags(cmd)

    return parser


def run_command(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (ParseError, WordSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DecisionUndecided as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return 1
    except (AnalysisError, ReversingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
