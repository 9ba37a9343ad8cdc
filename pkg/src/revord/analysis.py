"""Order-type classification of triangular presentations.

The analyzer decides, where possible, whether the presented monoid is
right-O-type: left-cancellative, with no non-trivial invertible elements,
and such that any two elements admit a common right multiple.  Every verdict
carries a replayable certificate:

* negative certificates: a relation family member whose shape forbids common
  multiples (tail or pattern discard), a relation proving a letter equal to a
  proper multiple of itself (head discard), two chain tops with no common
  multiple (multi chain), or a reversing cycle (cycle witness);
* positive certificates: a quasi-central element, an element w that the top
  letter divides and with w g' = g w solvable for every generator g;
* partial evidence: bounded or certified domination of a candidate element.

The search is budgeted; exhausting a budget yields an Unknown verdict, never
a wrong one.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .presentation import (
    NotTriangularError,
    Presentation,
    RelationTable,
    TriangularStructure,
    complete,
    detect_right_triangular,
    opposite,
)
from .reversing import (
    Comparison,
    ComparisonKind,
    Cycle,
    Outcome,
    Stuck,
    Terminated,
    compare_divisibility,
    right_reverse,
)
from .words import Word, format_word, invert, positive_words_shortlex

RIGHT_O_TYPE = "RightOType"
NOT_RIGHT_O_TYPE = "NotRightOType"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class AnalysisBudgets:
    """Resource limits for the classification search.

    The reversing limits stay moderate because a single divergent reversing
    costs time proportional to the budget; verdicts never depend on budget
    exhaustion, only Unknown does.
    """

    max_steps: int = 4_000
    max_length: int = 4_000
    ceiling_target: int = 24
    ceiling_steps: int = 600
    qc_max_power: int = 12
    period_max_length: int = 8
    period_power_max: int = 4
    period_min_repeats: int = 3
    fallback_length_two_letters: int = 8
    fallback_length_multi: int = 6
    pattern_check_steps: int = 2_000
    domination_checks: int = 6
    refutation_max_u: int = 3
    refutation_max_v: int = 5
    refutation_steps: int = 600

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


DEFAULT_BUDGETS = AnalysisBudgets()


class AnalysisError(Exception):
    """Base class for analysis-level errors."""


class AmbiguousCandidate(AnalysisError):
    """Two letters both pass a ceiling step, so no greedy prefix exists."""

    def __init__(self, step: int, candidates: tuple[int, ...]):
        super().__init__(
            f"step {step}: letters {candidates} all pass the divisibility test"
        )
        self.step = step
        self.candidates = candidates


class QuasiCentralMissing(AnalysisError):
    """The certified domination check requires a quasi-central power."""


# --------------------------------------------------------------- certificates


@dataclass(frozen=True)
class TailDiscard:
    """Oriented relation t = w with w ending in t: the letters t and w[0]
    admit no common right multiple."""

    relation_index: int
    letter: int
    word: Word

    kind = "tail_discard"


@dataclass(frozen=True)
class PatternDiscard:
    """Oriented relation t = w with w beginning (u v)^repeats u t, where u is
    non-empty and v (when non-empty) never reverses against t through a word
    headed by t: then t and u t admit no common right multiple."""

    relation_index: int
    letter: int
    word: Word
    u: Word
    v: Word
    repeats: int
    pair: tuple[Word, Word]

    kind = "pattern_discard"


@dataclass(frozen=True)
class HeadDiscard:
    """A letter equal to a proper right multiple of itself, read off one
    relation directly or composed around a successor cycle: the monoid is not
    left-cancellative."""

    letter: int
    word: Word
    relation_indices: tuple[int, ...]

    kind = "head_discard"


@dataclass(frozen=True)
class MultiChain:
    """Two distinct chain tops: no relation ever connects them, so they have
    no common right multiple."""

    pair: tuple[int, int]

    kind = "multi_chain"


@dataclass(frozen=True)
class CycleWitness:
    """A reversing run that revisits a word: the two positive words in pair
    admit no common right multiple."""

    pair: tuple[Word, Word]
    start_word: Word
    earlier_step: int
    period_steps: int
    flank_left: Word
    flank_right: Word

    kind = "cycle_witness"


@dataclass(frozen=True)
class QuasiCentral:
    """An element w divisible by the top letter and with g w = w q_g for
    every generator g, certifying the right-O-type property."""

    word: Word
    quotients: tuple[Word, ...]
    top_quotient: Word

    kind = "quasi_central"


@dataclass(frozen=True)
class DominationBounded:
    """Evidence only: g delta^n divides delta^(n+1) for every generator g and
    every checked exponent n in the arithmetic progression."""

    delta: Word
    checked_up_to: int
    progression: int = 1

    kind = "domination_bounded"


@dataclass(frozen=True)
class DominationCertified:
    """delta^power is quasi-central and g delta^(power-1) divides delta, which
    propagates to g delta^n dividing delta^(n+1) for all large n."""

    delta: Word
    power: int
    g: Word
    quotient: Word

    kind = "domination_certified"


Certificate = Union[
    TailDiscard,
    PatternDiscard,
    HeadDiscard,
    MultiChain,
    CycleWitness,
    QuasiCentral,
    DominationBounded,
    DominationCertified,
]


# ------------------------------------------------------------ ceiling results


@dataclass(frozen=True)
class CeilingPrefix:
    """The greedy prefix of the right ceiling: letters[0] is the first
    factor, so the prefix as an element reads reversed(letters)."""

    letters: Word
    period: Optional[Word] = None


@dataclass(frozen=True)
class CeilingRefuted:
    """A ceiling step where every candidate fails and one failure is a
    reversing cycle, refuting common multiples outright."""

    certificate: CycleWitness
    step: int
    candidate: int
    other: int
    partial: Word


@dataclass(frozen=True)
class CeilingUnknown:
    """A ceiling step that could not be settled within budget."""

    partial: Word
    step: int
    reason: str


@dataclass(frozen=True)
class DominationAllHold:
    checked_up_to: int


@dataclass(frozen=True)
class DominationFails:
    n: int
    comparison: Comparison


@dataclass(frozen=True)
class DominationUnknown:
    n: int


# ------------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class Verdict:
    """Classification outcome with its certificate and search context."""

    status: str
    certificate: Optional[Certificate]
    ceiling_prefix: Optional[Word]
    reason: Optional[str]
    names: tuple[str, ...]
    budgets: AnalysisBudgets

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "certificate": _certificate_to_dict(self.certificate, self.names),
            "ceiling_prefix": (
                None
                if self.ceiling_prefix is None
                else format_word(self.ceiling_prefix, self.names)
            ),
            "reason": self.reason,
            "budgets_used": self.budgets.as_dict(),
        }


def _fmt(word: Word, names: tuple[str, ...]) -> str:
    return format_word(word, names)


def _certificate_to_dict(
    cert: Optional[Certificate], names: tuple[str, ...]
) -> Optional[dict]:
    if cert is None:
        return None
    if isinstance(cert, TailDiscard):
        return {
            "kind": cert.kind,
            "relation_index": cert.relation_index,
            "letter": names[cert.letter],
            "word": _fmt(cert.word, names),
        }
    if isinstance(cert, PatternDiscard):
        return {
            "kind": cert.kind,
            "relation_index": cert.relation_index,
            "letter": names[cert.letter],
            "word": _fmt(cert.word, names),
            "u": _fmt(cert.u, names),
            "v": _fmt(cert.v, names),
            "repeats": cert.repeats,
            "pair": [_fmt(w, names) for w in cert.pair],
        }
    if isinstance(cert, HeadDiscard):
        return {
            "kind": cert.kind,
            "letter": names[cert.letter],
            "word": _fmt(cert.word, names),
            "relation_indices": list(cert.relation_indices),
        }
    if isinstance(cert, MultiChain):
        return {
            "kind": cert.kind,
            "pair": [names[x] for x in cert.pair],
        }
    if isinstance(cert, CycleWitness):
        return {
            "kind": cert.kind,
            "pair": [_fmt(w, names) for w in cert.pair],
            "start_word": _fmt(cert.start_word, names),
            "earlier_step": cert.earlier_step,
            "period_steps": cert.period_steps,
            "flank_left": _fmt(cert.flank_left, names),
            "flank_right": _fmt(cert.flank_right, names),
        }
    if isinstance(cert, QuasiCentral):
        return {
            "kind": cert.kind,
            "word": _fmt(cert.word, names),
            "quotients": {
                names[g]: _fmt(q, names) for g, q in enumerate(cert.quotients)
            },
            "top_quotient": _fmt(cert.top_quotient, names),
        }
    if isinstance(cert, DominationBounded):
        return {
            "kind": cert.kind,
            "delta": _fmt(cert.delta, names),
            "checked_up_to": cert.checked_up_to,
            "progression": cert.progression,
        }
    if isinstance(cert, DominationCertified):
        return {
            "kind": cert.kind,
            "delta": _fmt(cert.delta, names),
            "power": cert.power,
            "g": _fmt(cert.g, names),
            "quotient": _fmt(cert.quotient, names),
        }
    raise TypeError(f"unknown certificate type: {type(cert)!r}")


# ----------------------------------------------------------------- utilities


def _reversing_budgets(budgets: AnalysisBudgets) -> dict:
    return {"max_steps": budgets.max_steps, "max_length": budgets.max_length}


def _chain_letters(table: RelationTable) -> tuple[int, ...]:
    structure = table.structure
    if structure is None or not structure.is_single_chain:
        raise AnalysisError("table is not a completed single-chain table")
    return tuple(sorted(structure.chains[0]))


def detect_period(letters: Word, budgets: AnalysisBudgets = DEFAULT_BUDGETS
                  ) -> Optional[Word]:
    """Shortest period of the letter sequence, as the element word read from
    the repeating block; None when no short period repeats often enough."""
    for p in range(1, budgets.period_max_length + 1):
        if len(letters) < p * budgets.period_min_repeats:
            return None
        if all(letters[i] == letters[i - p] for i in range(p, len(letters))):
            return tuple(reversed(letters[:p]))
    return None


# ------------------------------------------------------------------ discards


def _tail_condition(
    v: Word, t: int, table: RelationTable, budgets: AnalysisBudgets
) -> bool:
    """True when v is empty or the reversing of v^-1 t passes through a word
    headed by the positive letter t, within the first pattern_check_steps
    rewriting steps.  Only the step budget may cut the scan, so the length
    limit is set beyond anything the budgeted rewrite can produce and cycle
    detection is disabled."""
    if not v:
        return True
    start = invert(v) + (t,)
    steps = budgets.pattern_check_steps
    widest = max((len(r) for r in table.replacements.values()), default=1)
    _, trace = right_reverse(
        start,
        table,
        max_steps=steps,
        max_length=len(start) + steps * max(widest, 1),
        history_window=0,
    )
    for w in trace.words():
        if w and w[0] == t:
            return True
    return False


def _pattern_search(
    t: int, w: Word, table: RelationTable, budgets: AnalysisBudgets
) -> Optional[tuple[Word, Word, int]]:
    length = len(w)
    for k in range(1, (length - 1) // 2 + 1):
        u = w[:k]
        for vlen in range(0, length):
            v = w[k:k + vlen]
            if len(v) < vlen:
                break
            r = 1
            while True:
                plen = (k + vlen) * r + k + 1
                if plen > length:
                    break
                if w[:plen] == (u + v) * r + u + (t,):
                    if _tail_condition(v, t, table, budgets):
                        return u, v, r
                r += 1
    return None


def discard_syntactic(
    table: RelationTable, *, budgets: AnalysisBudgets = DEFAULT_BUDGETS
) -> Optional[Union[TailDiscard, PatternDiscard]]:
    """Scan the completed relation family for a shape that forbids common
    right multiples: a relation t = w with w ending in t, or one whose right
    side begins (u v)^r u t with the tail condition on v."""
    for index, (t, w, _) in enumerate(table.completed_relations):
        if len(w) > 1 and w[-1] == t:
            return TailDiscard(index, t, w)
    for index, (t, w, _) in enumerate(table.completed_relations):
        hit = _pattern_search(t, w, table, budgets)
        if hit is not None:
            u, v, r = hit
            return PatternDiscard(
                index, t, w, u, v, r, pair=((t,), u + (t,))
            )
    return None


# ------------------------------------------------------------------- ceiling


def ceiling_prefix(
    table: RelationTable,
    target: Optional[int] = None,
    *,
    budgets: AnalysisBudgets = DEFAULT_BUDGETS,
) -> Union[CeilingPrefix, CeilingRefuted, CeilingUnknown]:
    """Greedy prefix of the right ceiling of the presented monoid.

    At each step exactly one letter s may satisfy: for every other letter x,
    (x p)^-1 (s p) reverses to a positive word, p being the prefix found so
    far.  A unique passer extends the prefix; two passers raise
    AmbiguousCandidate; no passer with a reversing cycle refutes the
    existence of common multiples; budget exhaustion yields CeilingUnknown.
    """
    if target is None:
        target = budgets.ceiling_target
    letters = _chain_letters(table)
    # the prefix search is exploratory: a tight per-reversing budget keeps
    # divergent comparisons cheap, and an early Unknown stop stays sound
    rev = {
        "max_steps": budgets.ceiling_steps,
        "max_length": budgets.ceiling_steps,
    }
    prefix: Word = ()
    for step in range(1, target + 1):
        passers = []
        cycle_hits = []
        blocked = False
        for cand in letters:
            ok = True
            for x in letters:
                if x == cand:
                    continue
                word = invert((x,) + prefix) + (cand,) + prefix
                out, _ = right_reverse(word, table, **rev)
                if isinstance(out, Terminated) and not out.left_denominator:
                    continue
                ok = False
                if isinstance(out, Cycle):
                    cycle_hits.append((cand, x, word, out))
                elif out.kind == "budget":
                    blocked = True
                break
            if ok:
                passers.append(cand)
        partial = tuple(reversed(prefix))
        if len(passers) > 1:
            raise AmbiguousCandidate(step, tuple(passers))
        if not passers:
            if cycle_hits:
                cand, x, word, out = cycle_hits[0]
                witness = CycleWitness(
                    pair=((x,) + prefix, (cand,) + prefix),
                    start_word=word,
                    earlier_step=out.earlier_step,
                    period_steps=out.period_steps,
                    flank_left=out.flank_left,
                    flank_right=out.flank_right,
                )
                return CeilingRefuted(witness, step, cand, x, partial)
            reason = "budget" if blocked else "no-candidate"
            return CeilingUnknown(partial, step, reason)
        if blocked:
            # the blocked candidate might also have passed, which would make
            # the step ambiguous; the sole passer cannot be trusted
            return CeilingUnknown(partial, step, "budget")
        prefix = (passers[0],) + prefix
    found = tuple(reversed(prefix))
    return CeilingPrefix(found, detect_period(found, budgets))


# ------------------------------------------------------------- quasi-central


def verify_quasi_central(
    table: RelationTable,
    word: Word,
    *,
    budgets: AnalysisBudgets = DEFAULT_BUDGETS,
) -> Optional[QuasiCentral]:
    """Certify word as quasi-central: the top letter divides it and w^-1 g w
    reverses to a positive word for every generator g."""
    word = tuple(word)
    letters = _chain_letters(table)
    top = table.structure.top
    rev = _reversing_budgets(budgets)
    cmp = compare_divisibility((top,), word, table, **rev)
    if cmp.kind is ComparisonKind.EQUAL:
        top_quotient: Word = ()
    elif cmp.kind is ComparisonKind.U_DIVIDES_V:
        top_quotient = cmp.quotient
    else:
        return None
    quotients = []
    for g in letters:
        out, _ = right_reverse(invert(word) + (g,) + word, table, **rev)
        if not (isinstance(out, Terminated) and not out.left_denominator):
            return None
        quotients.append(out.right_numerator)
    return QuasiCentral(word, tuple(quotients), top_quotient)


# ---------------------------------------------------------------- domination


def check_domination_bounded(
    table: RelationTable,
    delta: Word,
    g: Word,
    n_max: Optional[int] = None,
    *,
    budgets: AnalysisBudgets = DEFAULT_BUDGETS,
    progression: int = 1,
) -> Union[DominationAllHold, DominationFails, DominationUnknown]:
    """Check g delta^n <= delta^(n+1) for the exponents n = (k+1) p - 1,
    k = 0..n_max, p the progression stride (stride 1 checks n = 0..n_max).

    A strict reverse divisibility or an absent common multiple settles the
    failure; an exhausted budget stops the scan without a conclusion.
    """
    if n_max is None:
        n_max = budgets.domination_checks
    delta = tuple(delta)
    g = tuple(g)
    rev = _reversing_budgets(budgets)
    for k in range(n_max + 1):
        n = (k + 1) * progression - 1
        cmp = compare_divisibility(g + delta * n, delta * (n + 1), table, **rev)
        if cmp.kind in (ComparisonKind.EQUAL, ComparisonKind.U_DIVIDES_V):
            continue
        if cmp.kind is ComparisonKind.UNKNOWN:
            return DominationUnknown(n)
        return DominationFails(n, cmp)
    return DominationAllHold(n_max)


def verify_domination_certified(
    table: RelationTable,
    delta: Word,
    power: int,
    g: Word,
    *,
    budgets: AnalysisBudgets = DEFAULT_BUDGETS,
) -> Optional[DominationCertified]:
    """Certify domination of g by delta from two finite checks: delta^power
    quasi-central, and g delta^(power-1) dividing delta."""
    delta = tuple(delta)
    g = tuple(g)
    if verify_quasi_central(table, delta * power, budgets=budgets) is None:
        raise QuasiCentralMissing(
            f"delta^{power} is not certified quasi-central"
        )
    rev = _reversing_budgets(budgets)
    cmp = compare_divisibility(g + delta * (power - 1), delta, table, **rev)
    if cmp.kind is ComparisonKind.EQUAL:
        quotient: Word = ()
    elif cmp.kind is ComparisonKind.U_DIVIDES_V:
        quotient = cmp.quotient
    else:
        return None
    return DominationCertified(delta, power, g, quotient)


# ------------------------------------------------------------ witness search


def refutation_search(
    table: RelationTable, *, budgets: AnalysisBudgets = DEFAULT_BUDGETS
) -> Optional[CycleWitness]:
    """Scan short positive pairs (u, v) for a reversing cycle in u^-1 v,
    which certifies that u and v admit no common right multiple.

    Pairs are enumerated in shortlex order; pairs whose words share their
    head letter are skipped, since cancelling the head reduces them to a
    shorter pair scanned earlier."""
    n = table.n_letters
    rev = {
        "max_steps": budgets.refutation_steps,
        "max_length": budgets.refutation_steps,
    }
    for u in positive_words_shortlex(n, budgets.refutation_max_u, min_len=1):
        for v in positive_words_shortlex(
            n, budgets.refutation_max_v, min_len=1
        ):
            if u[0] == v[0]:
                continue
            start = invert(u) + v
            out, _ = right_reverse(start, table, **rev)
            if isinstance(out, Cycle):
                return CycleWitness(
                    pair=(u, v),
                    start_word=start,
                    earlier_step=out.earlier_step,
                    period_steps=out.period_steps,
                    flank_left=out.flank_left,
                    flank_right=out.flank_right,
                )
    return None


# ------------------------------------------------------------------- analyze


def _head_scan(p: Presentation) -> Optional[HeadDiscard]:
    for index, (lhs, rhs) in enumerate(p.relations):
        if len(lhs) == 1 and len(rhs) >= 2 and rhs[0] == lhs[0]:
            return HeadDiscard(lhs[0], rhs, (index,))
        if len(rhs) == 1 and len(lhs) >= 2 and lhs[0] == rhs[0]:
            return HeadDiscard(rhs[0], lhs, (index,))
    return None


def _relation_bases(p: Presentation) -> dict[int, int]:
    bases: dict[int, int] = {}
    for index, (lhs, rhs) in enumerate(p.relations):
        if len(lhs) == 1 and len(rhs) >= 1:
            w = rhs
        elif len(rhs) == 1 and len(lhs) >= 2:
            w = lhs
        else:
            continue
        bases.setdefault(w[0], index)
    return bases


def _cycle_head_discard(
    p: Presentation, structure: TriangularStructure
) -> Optional[HeadDiscard]:
    """Compose the relations around a successor cycle; a non-empty composed
    complement proves a letter equal to a proper multiple of itself."""
    bases = _relation_bases(p)
    for orbit in structure.cycles:
        composed: Word = ()
        for s in orbit:
            composed = composed + tuple(structure.comp[s])
        if composed:
            letter = orbit[0]
            indices = tuple(bases[s] for s in orbit)
            return HeadDiscard(letter, (letter,) + composed, indices)
    return None


def _qc_primary_candidates(
    table: RelationTable, period: Optional[Word], budgets: AnalysisBudgets
) -> Iterator[Word]:
    """Powers of the chain top, then powers of the ceiling period."""
    top = table.structure.top
    seen = set()
    for k in range(1, budgets.qc_max_power + 1):
        w = (top,) * k
        seen.add(w)
        yield w
    if period:
        for j in range(1, budgets.period_power_max + 1):
            w = tuple(period) * j
            if w not in seen:
                seen.add(w)
                yield w


def _qc_fallback_candidates(
    table: RelationTable, period: Optional[Word], budgets: AnalysisBudgets
) -> Iterator[Word]:
    """All short positive words, minus the primary candidates."""
    top = table.structure.top
    seen = {(top,) * k for k in range(1, budgets.qc_max_power + 1)}
    if period:
        seen.update(
            tuple(period) * j
            for j in range(1, budgets.period_power_max + 1)
        )
    n = table.n_letters
    max_len = (
        budgets.fallback_length_two_letters
        if n <= 2
        else budgets.fallback_length_multi
    )
    for w in positive_words_shortlex(n, max_len, min_len=2):
        if w not in seen:
            yield w


def _verdict(
    p: Presentation,
    budgets: AnalysisBudgets,
    status: str,
    certificate: Optional[Certificate] = None,
    ceiling: Optional[Word] = None,
    reason: Optional[str] = None,
) -> Verdict:
    return Verdict(status, certificate, ceiling, reason, p.names, budgets)


def analyze(
    p: Presentation, budgets: AnalysisBudgets = DEFAULT_BUDGETS
) -> Verdict:
    """Classify the monoid presented by p for the right-O-type property."""
    for lhs, rhs in p.relations:
        if not lhs or not rhs:
            return _verdict(p, budgets, UNKNOWN, reason="empty-relation-side")
    head = _head_scan(p)
    if head is not None:
        return _verdict(p, budgets, NOT_RIGHT_O_TYPE, head)
    structure = detect_right_triangular(p)
    if structure is None:
        return _verdict(p, budgets, UNKNOWN, reason="not-right-triangular")
    if structure.cycles:
        cert = _cycle_head_discard(p, structure)
        if cert is not None:
            return _verdict(p, budgets, NOT_RIGHT_O_TYPE, cert)
        return _verdict(p, budgets, UNKNOWN, reason="cyclic-successor-graph")
    if len(structure.chains) > 1:
        pair = (structure.chains[0][-1], structure.chains[1][-1])
        return _verdict(p, budgets, NOT_RIGHT_O_TYPE, MultiChain(pair))
    table = complete(p)
    discard = discard_syntactic(table, budgets=budgets)
    if discard is not None:
        return _verdict(p, budgets, NOT_RIGHT_O_TYPE, discard)
    period: Optional[Word] = None
    prefix: Optional[Word] = None
    try:
        ceiling = ceiling_prefix(table, budgets.ceiling_target, budgets=budgets)
    except AmbiguousCandidate:
        ceiling = None
    if isinstance(ceiling, CeilingRefuted):
        return _verdict(
            p, budgets, NOT_RIGHT_O_TYPE, ceiling.certificate, ceiling.partial
        )
    if isinstance(ceiling, CeilingPrefix):
        prefix, period = ceiling.letters, ceiling.period
    elif isinstance(ceiling, CeilingUnknown):
        prefix = ceiling.partial
        period = detect_period(prefix, budgets)
    for candidate in _qc_primary_candidates(table, period, budgets):
        cert = verify_quasi_central(table, candidate, budgets=budgets)
        if cert is not None:
            return _verdict(p, budgets, RIGHT_O_TYPE, cert, prefix)
    witness = refutation_search(table, budgets=budgets)
    if witness is not None:
        return _verdict(p, budgets, NOT_RIGHT_O_TYPE, witness, prefix)
    for candidate in _qc_fallback_candidates(table, period, budgets):
        cert = verify_quasi_central(table, candidate, budgets=budgets)
        if cert is not None:
            return _verdict(p, budgets, RIGHT_O_TYPE, cert, prefix)
    evidence: Optional[DominationBounded] = None
    for delta in filter(None, (period, (table.structure.top,))):
        results = [
            check_domination_bounded(table, delta, (g,), budgets=budgets)
            for g in _chain_letters(table)
        ]
        if all(isinstance(r, DominationAllHold) for r in results):
            evidence = DominationBounded(
                tuple(delta), budgets.domination_checks
            )
            break
    return _verdict(
        p, budgets, UNKNOWN, evidence, prefix, "no-quasi-central-found"
    )


def analyze_otype(
    p: Presentation, budgets: AnalysisBudgets = DEFAULT_BUDGETS
) -> tuple[Verdict, Verdict]:
    """Classify both sides: the right verdict for p and the right verdict of
    the opposite presentation, which is the left verdict for p."""
    return analyze(p, budgets), analyze(opposite(p), budgets)


# -------------------------------------------------------------------- replay


def _replay_tail(p: Presentation, cert: TailDiscard) -> bool:
    table = complete(p)
    if not 0 <= cert.relation_index < len(table.completed_relations):
        return False
    t, w, _ = table.completed_relations[cert.relation_index]
    return (
        t == cert.letter
        and w == cert.word
        and len(w) > 1
        and w[-1] == t
    )


def _replay_pattern(
    p: Presentation, cert: PatternDiscard, budgets: AnalysisBudgets
) -> bool:
    table = complete(p)
    if not 0 <= cert.relation_index < len(table.completed_relations):
        return False
    t, w, _ = table.completed_relations[cert.relation_index]
    if t != cert.letter or w != cert.word:
        return False
    u, v, r = cert.u, cert.v, cert.repeats
    if not u or r < 1:
        return False
    plen = (len(u) + len(v)) * r + len(u) + 1
    if plen > len(w) or w[:plen] != (u + v) * r + u + (t,):
        return False
    if not _tail_condition(v, t, table, budgets):
        return False
    if cert.pair != ((t,), u + (t,)):
        return False
    cmp = compare_divisibility(
        cert.pair[0], cert.pair[1], table, **_reversing_budgets(budgets)
    )
    return cmp.kind is ComparisonKind.NO_COMMON_MULTIPLE


def _replay_head(p: Presentation, cert: HeadDiscard) -> bool:
    if len(cert.relation_indices) == 1:
        index = cert.relation_indices[0]
        if not 0 <= index < len(p.relations):
            return False
        lhs, rhs = p.relations[index]
        for one, other in ((lhs, rhs), (rhs, lhs)):
            if (
                len(one) == 1
                and len(other) >= 2
                and other[0] == one[0]
                and one[0] == cert.letter
                and other == cert.word
            ):
                return True
        return False
    composed: Word = ()
    cur = cert.letter
    for index in cert.relation_indices:
        if not 0 <= index < len(p.relations):
            return False
        lhs, rhs = p.relations[index]
        if len(lhs) == 1 and len(rhs) >= 1:
            t, w = lhs[0], rhs
        elif len(rhs) == 1 and len(lhs) >= 2:
            t, w = rhs[0], lhs
        else:
            return False
        # walking the cycle upward: the relation at this position must
        # present the current letter as base . complement
        if w[0] != cur:
            return False
        composed = composed + w[1:]
        cur = t
    return cur == cert.letter and bool(composed) and \
        cert.word == (cert.letter,) + composed


def _replay_multi_chain(
    p: Presentation, cert: MultiChain, budgets: AnalysisBudgets
) -> bool:
    structure = detect_right_triangular(p)
    if structure is None or structure.cycles or len(structure.chains) < 2:
        return False
    tops = {chain[-1] for chain in structure.chains}
    x, y = cert.pair
    if x == y or x not in tops or y not in tops:
        return False
    cmp = compare_divisibility(
        (x,), (y,), complete(p), **_reversing_budgets(budgets)
    )
    return cmp.kind is ComparisonKind.NO_COMMON_MULTIPLE


def _replay_cycle(
    p: Presentation, cert: CycleWitness, budgets: AnalysisBudgets
) -> bool:
    u, v = cert.pair
    if cert.start_word != invert(u) + tuple(v):
        return False
    table = complete(p)
    out, _ = right_reverse(
        cert.start_word, table, **_reversing_budgets(budgets)
    )
    return (
        isinstance(out, Cycle)
        and out.earlier_step == cert.earlier_step
        and out.period_steps == cert.period_steps
        and out.flank_left == cert.flank_left
        and out.flank_right == cert.flank_right
    )


def replay_certificate(
    p: Presentation,
    verdict: Union[Verdict, Certificate],
    *,
    budgets: AnalysisBudgets = DEFAULT_BUDGETS,
) -> bool:
    """Re-derive a certificate from the presentation alone; True only when
    every claim in it checks out."""
    cert = verdict.certificate if isinstance(verdict, Verdict) else verdict
    if cert is None:
        return False
    try:
        if isinstance(cert, TailDiscard):
            return _replay_tail(p, cert)
        if isinstance(cert, PatternDiscard):
            return _replay_pattern(p, cert, budgets)
        if isinstance(cert, HeadDiscard):
            return _replay_head(p, cert)
        if isinstance(cert, MultiChain):
            return _replay_multi_chain(p, cert, budgets)
        if isinstance(cert, CycleWitness):
            return _replay_cycle(p, cert, budgets)
        if isinstance(cert, QuasiCentral):
            fresh = verify_quasi_central(
                complete(p), cert.word, budgets=budgets
            )
            return fresh == cert
        if isinstance(cert, DominationBounded):
            table = complete(p)
            return all(
                isinstance(
                    check_domination_bounded(
                        table,
                        cert.delta,
                        (g,),
                        cert.checked_up_to,
                        budgets=budgets,
                        progression=cert.progression,
                    ),
                    DominationAllHold,
                )
                for g in _chain_letters(table)
            )
        if isinstance(cert, DominationCertified):
            try:
                fresh = verify_domination_certified(
                    complete(p),
                    cert.delta,
                    cert.power,
                    cert.g,
                    budgets=budgets,
                )
            except QuasiCentralMissing:
                return False
            return fresh == cert
    except (NotTriangularError, AnalysisError):
        return False
    return False
