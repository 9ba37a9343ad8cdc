"""Exhaustive classification of the presentations a = b w over two letters.

Words w are enumerated in shortlex order up to a length bound; each row is
classified on both sides and written as one JSON line, so an interrupted run
resumes by skipping words already present in the output file.  Classes use
the contracted schema tokens: syntactic discards, reversing cycles, certified
quasi-central elements, and everything the search could not settle.
"""

from __future__ import annotations

import csv
import dataclasses
import json
import time
from itertools import product
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Iterator, Optional

from .analysis import (
    DEFAULT_BUDGETS,
    NOT_RIGHT_O_TYPE,
    RIGHT_O_TYPE,
    AnalysisBudgets,
    CycleWitness,
    QuasiCentral,
    Verdict,
    analyze,
)
from .presentation import Presentation, complete, opposite
from .reversing import right_reverse
from .words import Word, format_word, invert

CENSUS_CLASSES = (
    "Lemma72Discard",
    "CyclicReversing",
    "QuasiCentralFound",
    "Unknown",
)

CENSUS_BUDGETS = dataclasses.replace(
    DEFAULT_BUDGETS,
    max_steps=50000,
    max_length=50000,
    ceiling_target=24,
)


def enumerate_words(max_length: int) -> Iterator[Word]:
    """All words over two letters in shortlex order, lengths 0..max_length."""
    for length in range(max_length + 1):
        yield from product((0, 1), repeat=length)


def presentation_for(w: Word) -> Presentation:
    """The one-relation presentation a = b w on letters a, b."""
    return Presentation(("a", "b"), (((0,), (1,) + tuple(w)),))


def _spell(w: Word) -> str:
    return "".join("ab"[letter] for letter in w)


def _class_of(verdict: Verdict) -> str:
    if verdict.status == RIGHT_O_TYPE:
        return "QuasiCentralFound"
    if verdict.status == NOT_RIGHT_O_TYPE:
        cert = verdict.certificate
        if cert is not None and cert.kind == "cycle_witness":
            return "CyclicReversing"
        return "Lemma72Discard"
    return "Unknown"


def _evidence_steps(
    p: Presentation, verdict: Verdict, budgets: AnalysisBudgets
) -> int:
    """Reversing steps behind the decisive evidence: the full cycle length
    for a cycle witness, the verification reversings for a quasi-central
    element, zero for syntactic discards and undecided rows."""
    cert = verdict.certificate
    if isinstance(cert, CycleWitness):
        return cert.earlier_step + cert.period_steps
    if isinstance(cert, QuasiCentral):
        table = complete(p)
        total = 0
        for letter, image in enumerate(cert.quotients):
            start = invert((letter,) + cert.word) + cert.word + image
            outcome, _ = right_reverse(
                start,
                table,
                max_steps=budgets.max_steps,
                max_length=budgets.max_length,
            )
            total += outcome.steps
        return total
    return 0


def classify_word(
    w: Word, budgets: AnalysisBudgets = CENSUS_BUDGETS
) -> dict:
    """One census row: both verdicts, the certified element, and the step
    count behind the right-side evidence."""
    w = tuple(w)
    p = presentation_for(w)
    right = analyze(p, budgets=budgets)
    left = analyze(opposite(p), budgets=budgets)
    delta = None
    cert = right.certificate
    if right.status == RIGHT_O_TYPE and cert is not None:
        word = getattr(cert, "word", None)
        if word is None:
            word = getattr(cert, "delta", None)
        if word is not None:
            delta = format_word(word, p.names)
    return {
        "w": _spell(w),
        "class": _class_of(right),
        "left_class": _class_of(left),
        "delta": delta,
        "steps": _evidence_steps(p, right, budgets),
    }


def _classify_packed(args: tuple[Word, AnalysisBudgets]) -> dict:
    return classify_word(*args)


def run_census(
    max_length: int,
    jsonl_path,
    *,
    workers: int = 1,
    budgets: AnalysisBudgets = CENSUS_BUDGETS,
    summary_path=None,
    csv_path=None,
    progress: Optional[Callable[[dict], None]] = None,
) -> dict:
    """Classify every word up to max_length, appending missing rows to the
    JSON-lines file, and return the summary (optionally also written as JSON
    alongside a CSV of all rows)."""
    jsonl_path = Path(jsonl_path)
    merged: dict[str, dict] = {}
    if jsonl_path.exists():
        for line in jsonl_path.read_text().splitlines():
            if line.strip():
                row = json.loads(line)
                merged[row["w"]] = row
    todo = [w for w in enumerate_words(max_length) if _spell(w) not in merged]
    started = time.time()
    if todo:
        with jsonl_path.open("a") as handle:

            def record(row: dict) -> None:
                handle.write(json.dumps(row) + "\n")
                handle.flush()
                merged[row["w"]] = row
                if progress is not None:
                    progress(row)

            if workers > 1:
                with Pool(workers) as pool:
                    jobs = ((w, budgets) for w in todo)
                    for row in pool.imap(_classify_packed, jobs, chunksize=16):
                        record(row)
            else:
                for w in todo:
                    record(classify_word(w, budgets))
    rows = [
        merged[_spell(w)]
        for w in enumerate_words(max_length)
        if _spell(w) in merged
    ]
    counts = {token: 0 for token in CENSUS_CLASSES}
    otype = 0
    for row in rows:
        counts[row["class"]] += 1
        if row["class"] == row["left_class"] == "QuasiCentralFound":
            otype += 1
    summary = {
        "max_length": max_length,
        "counts": counts,
        "otype_count": otype,
        "rows": len(rows),
        "workers": workers,
        "elapsed_seconds": round(time.time() - started, 3),
        "budgets": budgets.as_dict(),
    }
    if summary_path is not None:
        Path(summary_path).write_text(json.dumps(summary, indent=2) + "\n")
    if csv_path is not None:
        with Path(csv_path).open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["w", "class", "left_class", "delta", "steps"])
            for row in rows:
                writer.writerow(
                    [
                        row["w"],
                        row["class"],
                        row["left_class"],
                        "" if row["delta"] is None else row["delta"],
                        row["steps"],
                    ]
                )
    return summary
