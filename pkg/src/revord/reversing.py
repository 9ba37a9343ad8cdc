"""Subword reversing engine.

Right reversing rewrites the leftmost factor s^-1 t of a signed word: a free
deletion when s == t, otherwise the replacement vs . invert(vt) given by the
table entry s.vs = t.vt.  A word with no such factor has the shape
(positive).(negative)^-1 and the run terminates.  Left reversing is the mirror
procedure, rewriting the rightmost factor s t^-1 into u^-1 v with u.s = v.t.

Four outcomes:
  * Terminated: the junction-free final word, split into numerator and
    denominator, plus the step count (free deletions count too).
  * Stuck: a junction whose letter pair has no table entry.
  * Cycle: the current word equals flank_left^-1 . w_m . flank_right for the
    trace word w_m of an earlier step (left reversing: flank_left . w_m .
    flank_right^-1), with both flanks positive and not both empty; such a run
    never terminates.
  * BudgetExceeded: step or word-length budget hit first.

Cycle detection compares the current word against stored snapshots of earlier
trace words, every step while words stay short (dense_check_length) and the
snapshot budgets last, every sparse_check_stride-th step beyond that.  Missing
a window can only turn a Cycle into BudgetExceeded, never corrupt an answer,
and can only delay (never change) a detection that still happens.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import islice
from typing import Iterator, Sequence

from .presentation import RelationTable
from .words import Word, invert, mirror

DEFAULT_MAX_STEPS = 100_000
DEFAULT_MAX_LENGTH = 100_000
DEFAULT_HISTORY_WINDOW = 4096
DEFAULT_DENSE_CHECK_LENGTH = 512
DEFAULT_SPARSE_CHECK_STRIDE = 16
DEFAULT_SNAPSHOT_LETTER_BUDGET = 1_048_576


class ReversingError(Exception):
    """Base class for reversing-step errors."""


class NoJunctionError(ReversingError):
    """reverse_step was pointed at a position that is not a junction."""


class NoRelationError(ReversingError):
    """The junction's letter pair has no table entry."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"no table entry for letter pair {pair}")
        self.pair = pair


class TableNotTriangular(ReversingError):
    """A reversing result contradicts the triangular-table guarantee that at
    least one side of a terminated comparison is empty."""


@dataclass(frozen=True)
class Terminated:
    """Final word right_numerator . invert(left_denominator) for right
    reversing, invert(left_denominator) . right_numerator for left."""

    left_denominator: Word
    right_numerator: Word
    steps: int

    kind = "terminated"


@dataclass(frozen=True)
class Stuck:
    """position indexes the letter opening the junction (the negative letter
    for right reversing, the positive one for left)."""

    position: int
    pair: tuple[int, int]
    steps: int

    kind = "stuck"


@dataclass(frozen=True)
class Cycle:
    earlier_step: int
    flank_left: Word
    flank_right: Word
    period_steps: int
    steps: int

    kind = "cycle"


@dataclass(frozen=True)
class BudgetExceeded:
    last_word: Word
    steps: int
    max_word_length_seen: int

    kind = "budget"


Outcome = Terminated | Stuck | Cycle | BudgetExceeded


class ReversingTrace:
    """Replayable run record: the initial word plus one (position, s, t)
    record per step.  Consecutive replayed words differ by exactly the
    recorded step; words are reconstructed lazily."""

    def __init__(
        self,
        initial: Word,
        records: tuple[tuple[int, int, int], ...],
        table: RelationTable,
        orientation: str = "right",
    ):
        self.initial = initial
        self.records = records
        self.table = table
        self.orientation = orientation

    def __len__(self) -> int:
        return len(self.records)

    def words(self) -> Iterator[Word]:
        step = reverse_step if self.orientation == "right" else left_reverse_step
        w = self.initial
        yield w
        for position, _s, _t in self.records:
            w = step(w, self.table, position)
            yield w

    def word_at(self, n: int) -> Word:
        if not 0 <= n <= len(self.records):
            raise IndexError(f"step {n} outside 0..{len(self.records)}")
        return next(islice(self.words(), n, None))

    def final_word(self) -> Word:
        return self.word_at(len(self.records))


def reverse_step(word: Sequence[int], table: RelationTable, position: int) -> Word:
    """Apply one right-reversing step at the junction starting at position."""
    word = tuple(word)
    if not (0 <= position < len(word) - 1) or not (
        word[position] < 0 <= word[position + 1]
    ):
        raise NoJunctionError(f"no junction at position {position}")
    s, t = ~word[position], word[position + 1]
    if s == t:
        return word[:position] + word[position + 2:]
    entry = table.lookup(s, t)
    if entry is None:
        raise NoRelationError((s, t))
    vs, vt = entry
    return word[:position] + vs + invert(vt) + word[position + 2:]


def left_reverse_step(word: Sequence[int], table_op: RelationTable, position: int) -> Word:
    """Apply one left-reversing step at the junction s t^-1 at position.

    table_op is the right-reversing table of the opposite presentation: its
    entry (s, t) -> (x, y) means mirror(x).s = mirror(y).t holds here, so the
    factor s t^-1 rewrites to invert(mirror(x)) . mirror(y).
    """
    word = tuple(word)
    if not (0 <= position < len(word) - 1) or not (
        word[position] >= 0 > word[position + 1]
    ):
        raise NoJunctionError(f"no junction at position {position}")
    s, t = word[position], ~word[position + 1]
    if s == t:
        return word[:position] + word[position + 2:]
    entry = table_op.lookup(s, t)
    if entry is None:
        raise NoRelationError((s, t))
    x, y = entry
    return word[:position] + invert(mirror(x)) + mirror(y) + word[position + 2:]


def right_reverse(
    word: Sequence[int],
    table: RelationTable,
    *,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_length: int = DEFAULT_MAX_LENGTH,
    history_window: int = DEFAULT_HISTORY_WINDOW,
    dense_check_length: int = DEFAULT_DENSE_CHECK_LENGTH,
    sparse_check_stride: int = DEFAULT_SPARSE_CHECK_STRIDE,
    snapshot_letter_budget: int = DEFAULT_SNAPSHOT_LETTER_BUDGET,
) -> tuple[Outcome, ReversingTrace]:
    """Right-reverse the word to completion, leftmost junction first.

    Returns (outcome, trace).  The leftmost junction of the whole word is
    always the one rewritten, so the trace is the canonical one.
    """
    initial = tuple(word)
    done: list[int] = []
    todo = deque(initial)
    records: list[tuple[int, int, int]] = []
    steps = 0
    max_len_seen = len(initial)
    n = table.n_letters
    repl_rev: list[tuple | None] = [None] * (n * n)
    for (s, t), repl in table.replacements.items():
        repl_rev[s * n + t] = tuple(reversed(repl))
    # snapshots of earlier trace words keyed by their core (the word minus
    # its maximal negative prefix and maximal positive suffix); each record
    # is (step, prefix_len, suffix_len, prefix, suffix)
    snapshots: dict[Word, list[tuple[int, int, int, Word, Word]]] = {}
    snap_count = 0
    snap_letters = 0

    def make_trace() -> ReversingTrace:
        return ReversingTrace(initial, tuple(records), table, "right")

    popleft = todo.popleft
    push = done.append
    pop = done.pop

    while True:
        while todo:
            x = todo[0]
            if x >= 0 and done and done[-1] < 0:
                break
            push(x)
            popleft()
        else:
            split = len(done)
            for i, y in enumerate(done):
                if y < 0:
                    split = i
                    break
            return (
                Terminated(invert(done[split:]), tuple(done[:split]), steps),
                make_trace(),
            )
        cur_len = len(done) + len(todo)
        if steps == 0 or cur_len <= dense_check_length or (
            sparse_check_stride > 0 and steps % sparse_check_stride == 0
        ):
            cur = tuple(done) + tuple(todo)
            p = 0
            while p < cur_len and cur[p] < 0:
                p += 1
            q = 0
            while q < cur_len - p and cur[cur_len - 1 - q] >= 0:
                q += 1
            core = cur[p:cur_len - q]
            if steps:
                bucket = snapshots.get(core)
                if bucket is not None:
                    for m, pm, qm, prefix_m, suffix_m in bucket:
                        if (
                            p >= pm
                            and q >= qm
                            and (p != pm or q != qm)
                            and cur[p - pm:p] == prefix_m
                            and (qm == 0
                                 or cur[cur_len - q:cur_len - q + qm] == suffix_m)
                        ):
                            return (
                                Cycle(
                                    earlier_step=m,
                                    flank_left=invert(cur[:p - pm]),
                                    flank_right=cur[cur_len - (q - qm):],
                                    period_steps=steps - m,
                                    steps=steps,
                                ),
                                make_trace(),
                            )
            if snap_count < history_window and (
                snap_letters + cur_len <= snapshot_letter_budget
            ):
                snapshots.setdefault(core, []).append(
                    (steps, p, q, cur[:p], cur[cur_len - q:])
                )
                snap_count += 1
                snap_letters += cur_len
        if steps and (steps >= max_steps or cur_len > max_length):
            return (
                BudgetExceeded(tuple(done) + tuple(todo), steps, max_len_seen),
                make_trace(),
            )
        s = ~done[-1]
        t = todo[0]
        position = len(done) - 1
        if s == t:
            popleft()
            pop()
        else:
            repl = repl_rev[s * n + t] if s < n and t < n else None
            if repl is None:
                return Stuck(position, (s, t), steps), make_trace()
            popleft()
            pop()
            if repl:
                todo.extendleft(repl)
        steps += 1
        records.append((position, s, t))
        new_len = len(done) + len(todo)
        if new_len > max_len_seen:
            max_len_seen = new_len


def left_reverse(
    word: Sequence[int],
    table_op: RelationTable,
    **budgets,
) -> tuple[Outcome, ReversingTrace]:
    """Left-reverse the word (rightmost junction first) over the opposite
    presentation's right-reversing table.

    Implemented as the mirror of a right reversing: w rewrites to w' here
    exactly when mirror(w) rewrites to mirror(w') there, and the rightmost
    junction maps to the leftmost one.  Outcome fields are re-mirrored into
    this word's coordinates: Terminated means final word
    invert(left_denominator) . right_numerator; a Cycle means the current
    word is flank_left . w_m . invert(flank_right).
    """
    initial = tuple(word)
    m_out, m_trace = right_reverse(mirror(initial), table_op, **budgets)
    repl_len = {
        pair: len(repl) for pair, repl in table_op.replacements.items()
    }
    length = len(initial)
    records = []
    for position, s, t in m_trace.records:
        records.append((length - 2 - position, t, s))
        length = length - 2 + (0 if s == t else repl_len[(s, t)])
    trace = ReversingTrace(initial, tuple(records), table_op, "left")
    out: Outcome
    if isinstance(m_out, Terminated):
        out = Terminated(
            mirror(m_out.left_denominator),
            mirror(m_out.right_numerator),
            m_out.steps,
        )
    elif isinstance(m_out, Stuck):
        out = Stuck(
            position=length - 2 - m_out.position,
            pair=(m_out.pair[1], m_out.pair[0]),
            steps=m_out.steps,
        )
    elif isinstance(m_out, Cycle):
        out = Cycle(
            earlier_step=m_out.earlier_step,
            flank_left=mirror(m_out.flank_right),
            flank_right=mirror(m_out.flank_left),
            period_steps=m_out.period_steps,
            steps=m_out.steps,
        )
    else:
        out = BudgetExceeded(
            mirror(m_out.last_word), m_out.steps, m_out.max_word_length_seen
        )
    return out, trace


class ComparisonKind(Enum):
    EQUAL = "equal"
    U_DIVIDES_V = "u_divides_v"
    V_DIVIDES_U = "v_divides_u"
    NO_COMMON_MULTIPLE = "no_common_multiple"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Comparison:
    """Left-divisibility comparison of two positive words.

    quotient: for U_DIVIDES_V the positive word q with u q = v (in the
    monoid); for V_DIVIDES_U the q with v q = u.  evidence carries the
    reversing outcome behind NO_COMMON_MULTIPLE and UNKNOWN.
    """

    kind: ComparisonKind
    quotient: Word | None = None
    evidence: Outcome | None = None


def compare_divisibility(
    u: Sequence[int], v: Sequence[int], table: RelationTable, **budgets
) -> Comparison:
    """Compare u and v by reversing u^-1 v.

    Over a completed table of a triangular presentation, a terminated
    reversing leaves at most one non-empty side (otherwise the table is not
    triangular and TableNotTriangular is raised); Stuck and Cycle certify the
    absence of a common right multiple; budget exhaustion is Unknown.
    """
    out, _ = right_reverse(invert(u) + tuple(v), table, **budgets)
    if isinstance(out, Terminated):
        u_prime, v_prime = out.left_denominator, out.right_numerator
        if not u_prime and not v_prime:
            return Comparison(ComparisonKind.EQUAL)
        if not u_prime:
            return Comparison(ComparisonKind.U_DIVIDES_V, quotient=v_prime)
        if not v_prime:
            return Comparison(ComparisonKind.V_DIVIDES_U, quotient=u_prime)
        raise TableNotTriangular(
            "comparison terminated with two non-empty sides"
        )
    if isinstance(out, (Stuck, Cycle)):
        return Comparison(ComparisonKind.NO_COMMON_MULTIPLE, evidence=out)
    return Comparison(ComparisonKind.UNKNOWN, evidence=out)


@dataclass(frozen=True)
class CommonMultiple:
    """Result of a common-right-multiple search: status is found, absent, or
    unknown; multiple holds the two spellings (u.v', v.u') of the common
    multiple when found."""

    status: str
    multiple: tuple[Word, Word] | None = None
    evidence: Outcome | None = None


def common_right_multiple(
    u: Sequence[int], v: Sequence[int], table: RelationTable, **budgets
) -> CommonMultiple:
    """Search a common right multiple of u and v by reversing u^-1 v: a
    terminated run yields u.v' = v.u'."""
    u, v = tuple(u), tuple(v)
    out, _ = right_reverse(invert(u) + v, table, **budgets)
    if isinstance(out, Terminated):
        return CommonMultiple(
            "found", (u + out.right_numerator, v + out.left_denominator)
        )
    if isinstance(out, (Stuck, Cycle)):
        return CommonMultiple("absent", evidence=out)
    return CommonMultiple("unknown", evidence=out)
