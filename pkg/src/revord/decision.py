"""Decision procedures built on double reversing.

A right reversing of the input word produces a junction-free word
numerator . invert(denominator); when it terminates, a left reversing of
that word over the table of the opposite presentation produces
invert(denominator) . numerator.  Over completed triangular tables at least
one side of each terminated result is empty, so the final fraction reads off
the sign of the element and settles equality of positive words.  A phase
that does not terminate raises DecisionUndecided rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import RelationTable
from .reversing import (
    BudgetExceeded,
    TableNotTriangular,
    Terminated,
    left_reverse,
    right_reverse,
)
from .words import Word, invert


class DecisionUndecided(Exception):
    """A reversing phase ended without terminating, leaving the question
    open.  phase names the phase ("right" or "left"), outcome carries the
    engine outcome that stopped it."""

    def __init__(self, phase: str, outcome: object) -> None:
        super().__init__(f"{phase} reversing ended with {outcome.kind}")
        self.phase = phase
        self.outcome = outcome


@dataclass(frozen=True)
class Fraction:
    """Left-fraction normal form: the input word equals
    invert(denominator) . numerator, with the step counts of the right and
    left reversing phases."""

    denominator: Word
    numerator: Word
    steps: tuple[int, int]


@dataclass(frozen=True)
class OrderSign:
    """Sign of a signed word in the divisibility order: sign +1 and the
    positive word the input equals, sign -1 and the positive word whose
    inverse it equals, or sign 0 and the empty word."""

    sign: int
    word: Word


def fraction_normal_form(
    word: Word,
    table: RelationTable,
    table_op: RelationTable,
    **budgets: int,
) -> Fraction:
    """Reduce word to a left fraction by a right reversing over table
    followed by a left reversing over table_op.  Raises DecisionUndecided
    when either phase fails to terminate.  The result may have both parts
    nonempty over a table without the one-side-empty guarantee."""
    first, _ = right_reverse(word, table, **budgets)
    if not isinstance(first, Terminated):
        raise DecisionUndecided("right", first)
    pivot = first.right_numerator + invert(first.left_denominator)
    second, _ = left_reverse(pivot, table_op, **budgets)
    if not isinstance(second, Terminated):
        raise DecisionUndecided("left", second)
    return Fraction(
        second.left_denominator,
        second.right_numerator,
        (first.steps, second.steps),
    )


def order_sign(
    word: Word,
    table: RelationTable,
    table_op: RelationTable,
    **budgets: int,
) -> OrderSign:
    """Sign of word under the left-divisibility order of the presented
    group: the sign of the unique positive word (or inverse of one) that
    word reduces to.  Raises DecisionUndecided when a reversing phase fails
    to terminate and TableNotTriangular when the reduced fraction keeps both
    parts nonempty, which no triangular table allows."""
    fraction = fraction_normal_form(word, table, table_op, **budgets)
    if fraction.denominator and fraction.numerator:
        raise TableNotTriangular(
            "double reversing left the two-sided fraction "
            f"{fraction.denominator!r} \\ {fraction.numerator!r}"
        )
    if fraction.numerator:
        return OrderSign(1, fraction.numerator)
    if fraction.denominator:
        return OrderSign(-1, fraction.denominator)
    return OrderSign(0, ())


def word_problem(
    u: Word,
    v: Word,
    table: RelationTable,
    table_op: RelationTable,
    **budgets: int,
) -> bool:
    """Decide whether the positive words u and v present the same element.

    Right reversing of invert(u) . v that empties both sides settles
    equality at once; otherwise the left reversing phase runs and equality
    holds exactly when both fraction parts come out empty.  A phase stopped
    by its budget raises DecisionUndecided, as does a right phase that gets
    stuck or cycles.  A left phase that gets stuck or cycles cannot restore
    equality, so it answers False.
    """
    first, _ = right_reverse(invert(u) + tuple(v), table, **budgets)
    if not isinstance(first, Terminated):
        raise DecisionUndecided("right", first)
    if not first.left_denominator and not first.right_numerator:
        return True
    pivot = first.right_numerator + invert(first.left_denominator)
    second, _ = left_reverse(pivot, table_op, **budgets)
    if isinstance(second, BudgetExceeded):
        raise DecisionUndecided("left", second)
    if not isinstance(second, Terminated):
        return False
    return not second.left_denominator and not second.right_numerator
