"""Parameterized triangular presentations and a catalog of fixture instances.

Each constructor builds a presentation together with its published
expectations: the verdict on each side, a distinguished quasi-central or
central element when one is known in closed form, quotient images, refutation
witnesses, and ceiling periods.  The catalog collects the published summary
rows, worked examples, and parameter grids under stable identifiers so that
tests and the command line can replay them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from pathlib import Path
from typing import Optional

from .analysis import NOT_RIGHT_O_TYPE, RIGHT_O_TYPE, UNKNOWN
from .presentation import Presentation, format_presentation
from .words import Word, format_word, invert

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"
_A: Word = (0,)
_B: Word = (1,)
_C: Word = (2,)


@dataclass(frozen=True)
class PublishedWitness:
    """A published reversing computation that refutes one side.

    The start word reverses into a cycle conjugated by the flank: after
    ``period`` steps the start word reappears between the flank's inverse and
    the flank.  ``of_opposite`` marks witnesses stated over the opposite
    presentation.
    """

    reversing: str
    of_opposite: bool
    start: Word
    flank: Word
    period: int


@dataclass(frozen=True)
class Expected:
    """Published expectations for one presentation.

    ``delta`` is the distinguished element stated for the right side, a word
    over the presentation's letters; ``delta_left`` the one stated for the
    left side, if any.  ``delta_alternative`` records a second published
    expression for a distinguished element.  ``phi_images`` holds the right
    quotient image of each generator (None where never stated), defined by
    letter . delta = delta . image; ``phi_left_images`` the left analogue,
    defined by delta_left . letter = image . delta_left.  ``certified`` is
    False when the published argument is non-constructive (domination), so
    an automated search is not expected to produce a certificate.
    """

    verdict_right: str
    verdict_left: str
    delta: Optional[Word] = None
    delta_is_central: bool = False
    delta_alternative: Optional[Word] = None
    delta_left: Optional[Word] = None
    phi_images: Optional[tuple[Optional[Word], ...]] = None
    phi_left_images: Optional[tuple[Optional[Word], ...]] = None
    right_certificate: Optional[str] = None
    left_certificate: Optional[str] = None
    certified: bool = True
    witness: Optional[PublishedWitness] = None
    ceiling_period: Optional[Word] = None
    notes: str = ""


@dataclass(frozen=True)
class FamilyInstance:
    """A presentation with stable identifier and published expectations."""

    instance_id: str
    family: str
    parameters: tuple[tuple[str, int], ...]
    presentation: Presentation
    expected: Expected

    def to_dict(self) -> dict:
        names = self.presentation.names

        def fmt(word: Optional[Word]) -> Optional[str]:
            return None if word is None else format_word(word, names)

        def fmt_many(words) -> Optional[list]:
            return None if words is None else [fmt(w) for w in words]

        exp = self.expected
        witness = None
        if exp.witness is not None:
            witness = {
                "reversing": exp.witness.reversing,
                "of_opposite": exp.witness.of_opposite,
                "start": fmt(exp.witness.start),
                "flank": fmt(exp.witness.flank),
                "period": exp.witness.period,
            }
        return {
            "id": self.instance_id,
            "family": self.family,
            "parameters": dict(self.parameters),
            "presentation": format_presentation(self.presentation),
            "expected": {
                "verdict_right": exp.verdict_right,
                "verdict_left": exp.verdict_left,
                "delta": fmt(exp.delta),
                "delta_is_central": exp.delta_is_central,
                "delta_alternative": fmt(exp.delta_alternative),
                "delta_left": fmt(exp.delta_left),
                "phi_images": fmt_many(exp.phi_images),
                "phi_left_images": fmt_many(exp.phi_left_images),
                "right_certificate": exp.right_certificate,
                "left_certificate": exp.left_certificate,
                "certified": exp.certified,
                "witness": witness,
                "ceiling_period": fmt(exp.ceiling_period),
                "notes": exp.notes,
            },
        }


def _central(
    delta: Word,
    alternative: Optional[Word] = None,
    ceiling_period: Optional[Word] = None,
    notes: str = "",
) -> Expected:
    """Expectations for a presentation with a published central element."""
    return Expected(
        RIGHT_O_TYPE,
        RIGHT_O_TYPE,
        delta=delta,
        delta_is_central=True,
        delta_alternative=alternative,
        right_certificate="quasi_central",
        left_certificate="quasi_central",
        ceiling_period=ceiling_period,
        notes=notes,
    )


# ----------------------------------------------------------------- torus knot


def torus_knot(p: int, q: int, r: int) -> FamilyInstance:
    """The one-relation family a = b (a^p b^r)^q for p, q, r at least 1.

    The power a^(p+1) is right-quasi-central; it is central exactly when
    r = 1, in which case both sides are of O-type.  For r at least 2 the
    left side fails: the opposite relation starts with a repeated block.
    """
    if min(p, q, r) < 1:
        raise ValueError("torus knot parameters must be at least 1")
    rhs = _B + (_A * p + _B * r) * q
    presentation = Presentation(("a", "b"), ((_A, rhs),))
    delta = _A * (p + 1)
    if r == 1:
        expected = _central(delta)
    else:
        inner = _A * (p - 1) + _B * r + (_A * p + _B * r) * (q - 1)
        expected = Expected(
            RIGHT_O_TYPE,
            NOT_RIGHT_O_TYPE,
            delta=delta,
            phi_images=(_A, _B * r + inner * (r - 1)),
            right_certificate="quasi_central",
            left_certificate="pattern_discard",
            notes=(
                "the opposite relation starts with a repeated two-letter "
                "block, so the left side is discarded syntactically"
            ),
        )
    return FamilyInstance(
        f"torus_{p}_{q}_{r}",
        "torus_knot",
        (("p", p), ("q", q), ("r", r)),
        presentation,
        expected,
    )


# --------------------------------------------------------------- chain family


def chain_words(ms: tuple[int, ...]) -> tuple[Word, ...]:
    """The nested block words of the chain family.

    The first word is the top letter alone; each later word concatenates the
    earlier words in descending order, raised to the family exponents, and
    appends the next letter.
    """
    words: list[Word] = [_A]
    for i, _ in enumerate(ms, start=1):
        piece: Word = ()
        for j in range(i - 1, -1, -1):
            piece += words[j] * ms[j]
        words.append(piece + (i,))
    return tuple(words)


def _chain_delta_exponent(ms: tuple[int, ...], ns: tuple[int, ...]) -> int:
    """Least top-letter exponent accepted by the stagewise divisibility scan.

    Stage i requires ms[i] + 1 to divide the running exponent, which is then
    rescaled by (ns[i] + 1) / (ms[i] + 1) before the next stage.
    """
    m = 1
    while True:
        e = m
        for mi, ni in zip(ms, ns):
            if e % (mi + 1):
                break
            e = e * (ni + 1) // (mi + 1)
        else:
            return m
        m += 1


def chain_family(ms, ns) -> FamilyInstance:
    """Chains of relations letter(i) = letter(i+1) . block(i+1)^n.

    ``ms`` and ``ns`` list the block and repetition exponents for letters
    two onward; depth two specializes to the torus knot family with r = 1.
    The presented monoid has a central power of the top letter.
    """
    ms, ns = tuple(ms), tuple(ns)
    if not ms or len(ms) != len(ns):
        raise ValueError("chain exponent lists must be nonempty and paired")
    if min(ms) < 1 or min(ns) < 1:
        raise ValueError("chain exponents must be at least 1")
    depth = len(ms) + 1
    if depth > len(_ALPHABET):
        raise ValueError("chain depth exceeds the letter alphabet")
    names = tuple(_ALPHABET[:depth])
    words = chain_words(ms)
    relations = tuple(
        ((i,), (i + 1,) + words[i + 1] * ns[i]) for i in range(depth - 1)
    )
    exponent = _chain_delta_exponent(ms, ns)
    flat = prod(m + 1 for m in ms)
    expected = _central(
        _A * exponent,
        alternative=None if flat == exponent else _A * flat,
    )
    parameters = (
        (("l", depth),)
        + tuple((f"m{i + 2}", m) for i, m in enumerate(ms))
        + tuple((f"n{i + 2}", n) for i, n in enumerate(ns))
    )
    suffix = "_".join(str(v) for v in (depth, *ms, *ns))
    return FamilyInstance(
        f"chain_{suffix}",
        "chain",
        parameters,
        Presentation(names, relations),
        expected,
    )


# ------------------------------------------------------------ three generators


def three_gen(p: int, q: int, r: int, s: int) -> FamilyInstance:
    """The family a = b (a^p b)^q, b = c (a^r c)^s for parameters at least 0.

    Both sides share one verdict because both relation sides are palindromic.
    For r below p with q at least 1 the completed relation starts with a
    repeated block and the monoid is not of O-type.  Otherwise it is of
    O-type; a closed-form central power of the top letter exists when either
    exponent vanishes or p + 1 divides r + 1, while in the remaining case
    the published argument is a non-constructive domination bound and no
    power of the top letter is quasi-central.
    """
    if min(p, q, r, s) < 0:
        raise ValueError("parameters must be at least 0")
    rhs1 = _B + (_A * p + _B) * q
    rhs2 = _C + (_A * r + _C) * s
    presentation = Presentation(("a", "b", "c"), ((_A, rhs1), (_B, rhs2)))
    if q == 0:
        expected = _central(
            _A * (r + 1) if s >= 1 else _A,
            notes="the first relation collapses to an identification",
        )
    elif s == 0:
        expected = _central(
            _A * (p + 1),
            notes="the second relation collapses to an identification",
        )
    elif r < p:
        expected = Expected(
            NOT_RIGHT_O_TYPE,
            NOT_RIGHT_O_TYPE,
            right_certificate="pattern_discard",
            left_certificate="pattern_discard",
            notes=(
                "the completed relation for the top letter starts with a "
                "repeated block followed by the top letter"
            ),
        )
    elif (r + 1) % (p + 1) == 0:
        expected = _central(_A * (q * (r - p) + r + 1))
    else:
        expected = Expected(
            RIGHT_O_TYPE,
            RIGHT_O_TYPE,
            certified=False,
            notes=(
                "published as O-type through a domination bound; no power "
                "of the top letter is quasi-central, so the automated "
                "search is expected to stop at bounded domination evidence"
            ),
        )
    return FamilyInstance(
        f"three_gen_{p}_{q}_{r}_{s}",
        "three_gen",
        (("p", p), ("q", q), ("r", r), ("s", s)),
        presentation,
        expected,
    )


# ----------------------------------------------------------------- split family


def split_family(p: int, q: int, r: int) -> FamilyInstance:
    """The family a = b a^(p+2) (b a^p b a^(p+2))^q c, b = c (b a^(p+2))^r b a.

    For r equal to 0 or 1 the element (a^(p+2) b)^(2q+r+3) is central and
    the monoid is of O-type on both sides.  For larger r the question is
    open: experiments point at a periodic ceiling without any quasi-central
    element.
    """
    if min(p, q, r) < 0:
        raise ValueError("parameters must be at least 0")
    head = _B + _A * (p + 2)
    rhs1 = head + (_B + _A * p + head) * q + _C
    rhs2 = _C + head * r + _B + _A
    presentation = Presentation(("a", "b", "c"), ((_A, rhs1), (_B, rhs2)))
    if r <= 1:
        expected = _central((_A * (p + 2) + _B) * (2 * q + r + 3))
    else:
        expected = Expected(
            UNKNOWN,
            UNKNOWN,
            ceiling_period=_B * 2 + _A * 3 if p == 0 and r == 2 else None,
            notes=(
                "open case: the ceiling appears periodic but no central or "
                "quasi-central element is known, so O-type status is only "
                "conjectured"
            ),
        )
    return FamilyInstance(
        f"split_{p}_{q}_{r}",
        "split",
        (("p", p), ("q", q), ("r", r)),
        presentation,
        expected,
    )


# --------------------------------------------------------------------- cycling


def cycling(n: int) -> FamilyInstance:
    """The cycling presentation on n letters, for n at least 3.

    Letter i equals the product of the other letters read cyclically from
    its successor.  The square of the top letter is central and the ceiling
    is periodic with period n - 1, the longest period known to be realized
    on n letters.
    """
    if not 3 <= n <= len(_ALPHABET):
        raise ValueError("cycling needs between 3 and 26 letters")
    names = tuple(_ALPHABET[:n])
    relations = tuple(
        ((i,), tuple((i + 1 + k) % n for k in range(n - 1)))
        for i in range(n - 1)
    )
    expected = _central(
        _A * 2,
        ceiling_period=tuple(reversed(range(n - 1))),
    )
    return FamilyInstance(
        f"cycling_{n}",
        "cycling",
        (("n", n),),
        Presentation(names, relations),
        expected,
    )


# ----------------------------------------------------------- catalog contents


def _two_gen(rhs: Word, expected: Expected) -> FamilyInstance:
    presentation = Presentation(("a", "b"), ((_A, rhs),))
    name = "two_gen_" + "".join("ab"[letter] for letter in rhs)
    return FamilyInstance(name, "published_row", (), presentation, expected)


def _published_rows() -> tuple[FamilyInstance, ...]:
    ab = _A + _B
    rows = [
        _two_gen(
            (_B + _A) * 3 + _B,
            _central(_A * 2, ceiling_period=_A),
        ),
        _two_gen(
            _B + _A * 2 + (_B + _A) * 2 + _B,
            Expected(
                RIGHT_O_TYPE,
                NOT_RIGHT_O_TYPE,
                delta=_A * 3,
                phi_images=(_A, (_B + _A + _B + _A + _B) * 3),
                right_certificate="quasi_central",
                left_certificate="pattern_discard",
                ceiling_period=_A,
                notes=(
                    "the published left refutation marks a repeated block "
                    "at the tail of the relation; the analyzer reports the "
                    "mirrored block at the head of the opposite relation"
                ),
            ),
        ),
        _two_gen(
            _B + _A + _B + _A * 2 + _B + _A + _B,
            Expected(
                NOT_RIGHT_O_TYPE,
                NOT_RIGHT_O_TYPE,
                right_certificate="pattern_discard",
                left_certificate="pattern_discard",
                notes="palindromic relation, both sides fail the same way",
            ),
        ),
        _two_gen(
            _B + _A * 3 + (_B + _A) * 2 + _B,
            Expected(
                RIGHT_O_TYPE,
                NOT_RIGHT_O_TYPE,
                delta=_A * 4,
                phi_images=(_A, _B + (_A + _B) * 8),
                right_certificate="quasi_central",
                left_certificate="pattern_discard",
                ceiling_period=_A,
                notes=(
                    "the published left refutation marks a repeated block "
                    "at the tail of the relation; the analyzer reports the "
                    "mirrored block at the head of the opposite relation"
                ),
            ),
        ),
        _two_gen(
            _B + _A + _B * 3 + _A + _B,
            _central(
                ab * 3,
                alternative=ab + _B + ab + _B,
                ceiling_period=_A,
                notes=(
                    "the central element is not a power of the top letter; "
                    "the greedy ceiling prefix stays on the top letter"
                ),
            ),
        ),
        _two_gen(
            _B + _A * 2 + _B + _A + _B + _A * 2 + _B,
            Expected(
                RIGHT_O_TYPE,
                RIGHT_O_TYPE,
                delta=(_A * 2 + _B) * 2,
                delta_left=(_B + _A * 2) * 2,
                phi_images=(_A + (_B + _A * 2 + _B) * 2, _B),
                phi_left_images=((_B + _A * 2 + _B) * 2 + _A, _B),
                right_certificate="quasi_central",
                left_certificate="quasi_central",
                notes=(
                    "quasi-central on both sides but not central; the left "
                    "and right quotient endomorphisms differ"
                ),
            ),
        ),
        _two_gen(
            _B + _A * 2 + _B * 3 + _A * 2 + _B,
            Expected(
                NOT_RIGHT_O_TYPE,
                NOT_RIGHT_O_TYPE,
                right_certificate="cycle_witness",
                left_certificate="cycle_witness",
                witness=PublishedWitness(
                    reversing="right",
                    of_opposite=False,
                    start=invert(_A * 2) + _B + _A * 2 + _B + _A,
                    flank=_B + _A * 2 + _B * 3,
                    period=10,
                ),
                notes="palindromic relation, both sides fail the same way",
            ),
        ),
        _two_gen(
            _B + _A * 2 + _B + _A + _B * 2 + _A * 2 + _B,
            Expected(
                RIGHT_O_TYPE,
                NOT_RIGHT_O_TYPE,
                delta=(_A * 2 + _B) * 2,
                phi_images=(
                    (_A + _B * 2 + _A) * 2 + _A + _B,
                    (_B + _A * 2 + _B * 2) * 2,
                ),
                right_certificate="quasi_central",
                left_certificate="cycle_witness",
                witness=PublishedWitness(
                    reversing="left",
                    of_opposite=False,
                    start=_A * 2
                    + _B * 2
                    + _A * 2
                    + _B
                    + _A
                    + _B * 3
                    + _A * 2
                    + _B
                    + invert(_A),
                    flank=_B,
                    period=26,
                ),
            ),
        ),
        _two_gen(
            _B + _A * 2 + _B * 4 + _A * 2 + _B,
            Expected(
                NOT_RIGHT_O_TYPE,
                NOT_RIGHT_O_TYPE,
                right_certificate="cycle_witness",
                left_certificate="cycle_witness",
                witness=PublishedWitness(
                    reversing="right",
                    of_opposite=False,
                    start=invert(_A * 2 + _B) + _B + _A * 2 + _B + _A,
                    flank=_B * 4 + _A * 2 + _B + _A + _B * 4 + _A * 2 + _B,
                    period=12,
                ),
                notes="palindromic relation, both sides fail the same way",
            ),
        ),
        _two_gen(
            _B + _A + _B * 2 + _A + _B,
            _central(
                (_A + _B) * 2,
                notes="parameters p = 2, q = 1 of a = b (a b^p)^q a b",
            ),
        ),
        _two_gen(
            _B + _A * 3 + _B + _A * 2 + _B + _A * 3 + _B,
            Expected(
                RIGHT_O_TYPE,
                RIGHT_O_TYPE,
                delta=(_A * 3 + _B) * 2,
                phi_images=(_A * 2 + (_B + _A * 3 + _B) * 2, _B),
                right_certificate="quasi_central",
                left_certificate="quasi_central",
                notes=(
                    "parameters p = 2, r = 3 of a = b a^r b a^p b a^r b; "
                    "quasi-central but not central, palindromic relation"
                ),
            ),
        ),
    ]
    rows.append(
        FamilyInstance(
            "abc_bab_cbaaac",
            "published_row",
            (),
            Presentation(
                ("a", "b", "c"),
                ((_A, _B + _A + _B), (_B, _C + _B + _A * 3 + _C)),
            ),
            _central(
                _A * 6,
                notes=(
                    "parameters p = 1, r = 3 of a = b a^p b, b = c b a^r c; "
                    "the minimal central power of the top letter has "
                    "exponent (p+1)(r-p+1), verified by the commuting check"
                ),
            ),
        )
    )
    rows.append(
        FamilyInstance(
            "abc_bab_cbaac",
            "published_row",
            (),
            Presentation(
                ("a", "b", "c"),
                ((_A, _B + _A + _B), (_B, _C + _B + _A * 2 + _C)),
            ),
            Expected(
                RIGHT_O_TYPE,
                RIGHT_O_TYPE,
                delta=_A * 2 + _B * 2,
                delta_left=_A * 2 + _B * 2,
                phi_images=(_A + _B * 4, _B, _C),
                right_certificate="quasi_central",
                left_certificate="quasi_central",
                notes=(
                    "parameters p = 1, r = 2 of a = b a^p b, b = c b a^r c; "
                    "the element is quasi-central on both sides"
                ),
            ),
        )
    )
    rows.append(
        FamilyInstance(
            "abc_bab_cbabc",
            "published_row",
            (),
            Presentation(
                ("a", "b", "c"),
                ((_A, _B + _A + _B), (_B, _C + _B + _A + _B + _C)),
            ),
            _central(
                _A * 2,
                notes=(
                    "parameters p = 1, r = 1 of a = b (a b)^p, "
                    "b = c b (a^r b)^p c"
                ),
            ),
        )
    )
    return tuple(rows)


def _worked_examples() -> tuple[FamilyInstance, ...]:
    examples = []
    examples.append(
        FamilyInstance(
            "two_gen_bab",
            "worked_example",
            (),
            Presentation(("a", "b"), ((_A, _B + _A + _B),)),
            _central(
                _A * 2,
                notes="the group defined by this presentation is the Klein "
                "bottle group",
            ),
        )
    )
    examples.append(
        FamilyInstance(
            "two_gen_bbabb",
            "worked_example",
            (),
            Presentation(("a", "b"), ((_A, _B * 2 + _A + _B * 2),)),
            Expected(
                NOT_RIGHT_O_TYPE,
                NOT_RIGHT_O_TYPE,
                right_certificate="pattern_discard",
                left_certificate="pattern_discard",
                notes="palindromic relation, both sides fail the same way",
            ),
        )
    )
    examples.append(
        FamilyInstance(
            "two_gen_bababbabbabab",
            "worked_example",
            (),
            Presentation(
                ("a", "b"),
                (
                    (
                        _A,
                        (_B + _A) * 2
                        + _B * 2
                        + _A
                        + _B * 2
                        + (_A + _B) * 2,
                    ),
                ),
            ),
            Expected(
                RIGHT_O_TYPE,
                RIGHT_O_TYPE,
                certified=False,
                notes=(
                    "published as O-type through a domination bound for the "
                    "square of the second letter, established on an "
                    "equivalent three-generator presentation; no "
                    "quasi-central element is stated for this two-letter "
                    "form"
                ),
            ),
        )
    )
    examples.append(
        FamilyInstance(
            "abc_bcacb_cacac",
            "worked_example",
            (),
            Presentation(
                ("a", "b", "c"),
                (
                    (_A, _B + _C + _A + _C + _B),
                    (_B, _C + _A + _C + _A + _C),
                ),
            ),
            Expected(
                RIGHT_O_TYPE,
                RIGHT_O_TYPE,
                delta=_B * 2,
                delta_left=_B * 2,
                right_certificate="quasi_central",
                left_certificate="quasi_central",
                notes=(
                    "published as O-type through a domination bound for the "
                    "square of the second letter; that same element turns "
                    "out to be quasi-central, so certification succeeds"
                ),
            ),
        )
    )
    examples.append(
        FamilyInstance(
            "abc_bac_cba",
            "worked_example",
            (),
            Presentation(
                ("a", "b", "c"),
                ((_A, _B + _A + _C), (_B, _C + _B + _A)),
            ),
            Expected(
                RIGHT_O_TYPE,
                RIGHT_O_TYPE,
                delta=_B * 2 + _A * 2,
                delta_alternative=(_A + _B) * 3,
                phi_images=(
                    _A + _B + _A * 2 + _C + _A + _C * 3,
                    _B + _A * 2 + _C * 2,
                    _C,
                ),
                right_certificate="quasi_central",
                ceiling_period=_B * 2 + _A * 2,
                notes=(
                    "the stated element is right-quasi-central and gives a "
                    "periodic ceiling; no power of the top letter dominates "
                    "the other letters; the alternative expression is the "
                    "central element stated for the surrounding family"
                ),
            ),
        )
    )
    examples.append(
        FamilyInstance(
            "abc_bcb_cbabc",
            "worked_example",
            (),
            Presentation(
                ("a", "b", "c"),
                (
                    (_A, _B + _C + _B),
                    (_B, _C + _B + _A + _B + _C),
                ),
            ),
            _central(
                _A * 3,
                alternative=_B * 3,
                notes=(
                    "the cube of the top letter equals the cube of the "
                    "second letter and is central, although the top letter "
                    "alone dominates nothing"
                ),
            ),
        )
    )
    examples.append(
        FamilyInstance(
            "two_gen_babb",
            "worked_example",
            (),
            Presentation(("a", "b"), ((_A, _B + _A + _B * 2),)),
            Expected(
                RIGHT_O_TYPE,
                NOT_RIGHT_O_TYPE,
                delta=_A * 2,
                phi_images=(_A, _B * 4),
                right_certificate="quasi_central",
                left_certificate="pattern_discard",
                notes=(
                    "the quotient endomorphism duplicates the second "
                    "letter, which forces reversing runs of exponential "
                    "length"
                ),
            ),
        )
    )
    examples.append(
        FamilyInstance(
            "abc_bacb_cac",
            "worked_example",
            (),
            Presentation(
                ("a", "b", "c"),
                ((_A, _B + _A + _C + _B), (_B, _C + _A + _C)),
            ),
            Expected(
                RIGHT_O_TYPE,
                NOT_RIGHT_O_TYPE,
                delta=_A * 2,
                phi_images=(None, None, (_C + _B) * 2),
                right_certificate="quasi_central",
                left_certificate="cycle_witness",
                witness=PublishedWitness(
                    reversing="right",
                    of_opposite=True,
                    start=invert(_B) + _C * 2 + _A + _B,
                    flank=_C * 2,
                    period=12,
                ),
            ),
        )
    )
    examples.append(
        FamilyInstance(
            "abc_nontriangular_bbaababbbb",
            "worked_example",
            (),
            Presentation(
                ("a", "b", "c"),
                (
                    (_A, _B * 2 + _A * 2 + _B + _A + _B * 4),
                    (_B, _C + _B * 2 + _C),
                    (_A + _B + _C, _C + _A + _B),
                ),
            ),
            Expected(
                UNKNOWN,
                UNKNOWN,
                notes=(
                    "the third relation has a composite left side, so the "
                    "presentation is not right-triangular on either side "
                    "and the analyzer reports that structural obstruction"
                ),
            ),
        )
    )
    return tuple(examples)


@lru_cache(maxsize=1)
def fixture_catalog() -> tuple[FamilyInstance, ...]:
    """All catalog instances: published rows, worked examples, and grids."""
    grids: list[FamilyInstance] = []
    for p in (1, 2, 3):
        for q in (1, 2, 3):
            for r in (1, 2, 3):
                grids.append(torus_knot(p, q, r))
    for m2 in (1, 2):
        for n2 in (1, 2):
            grids.append(chain_family((m2,), (n2,)))
    for m2 in (1, 2):
        for m3 in (1, 2):
            for n2 in (1, 2):
                for n3 in (1, 2):
                    grids.append(chain_family((m2, m3), (n2, n3)))
    for p in (0, 1, 2):
        for q in (0, 1, 2):
            for r in (0, 1, 2):
                for s in (0, 1, 2):
                    grids.append(three_gen(p, q, r, s))
    for p in (0, 1):
        for q in (0, 1):
            for r in (0, 1):
                grids.append(split_family(p, q, r))
    return (
        _published_rows()
        + _worked_examples()
        + (cycling(3), cycling(4), cycling(5))
        + tuple(grids)
    )


def catalog_index() -> dict[str, FamilyInstance]:
    """The catalog keyed by instance identifier."""
    return {inst.instance_id: inst for inst in fixture_catalog()}


def export_catalog(directory) -> tuple[Path, ...]:
    """Write each instance as presentation text plus a JSON expectations
    sidecar; returns the written paths."""
    base = Path(directory)
    base.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    for inst in fixture_catalog():
        text_path = base / f"{inst.instance_id}.txt"
        text_path.write_text(format_presentation(inst.presentation))
        json_path = base / f"{inst.instance_id}.json"
        json_path.write_text(json.dumps(inst.to_dict(), indent=2) + "\n")
        written.append(text_path)
        written.append(json_path)
    return tuple(written)
