"""Positive monoid presentations and reversing tables.

A presentation is an alphabet plus positive-word relations.  The key special
shape is the right-triangular one: every relation pairs a single letter t with
a longer word s.c, defining a partial successor map next(s) = t with
complement(s) = c.  When next is functional, injective, and fixpoint-free its
graph splits into disjoint chains and cycles; acyclic structures admit a
completion whose relation table has exactly one entry for every ordered pair
of distinct letters within a chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .words import Word, WordSyntaxError, format_word, invert, is_positive, mirror, parse_word


class PresentationError(ValueError):
    """Base class for presentation-level errors."""


class ParseError(PresentationError):
    """Presentation text could not be parsed; carries the 1-based line."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class NotTriangularError(PresentationError):
    """The presentation does not admit the requested triangular completion."""


class NonDeterministicTable(PresentationError):
    """Two relations would install conflicting entries for one letter pair."""


@dataclass(frozen=True)
class Presentation:
    """An alphabet (letter names) and a tuple of positive relations."""

    names: tuple[str, ...]
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise ValueError("alphabet must not be empty")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        for name in self.names:
            if not name or name == "eps" or "^" in name or name.split() != [name]:
                raise ValueError(f"invalid generator name {name!r}")
        n = len(self.names)
        for lhs, rhs in self.relations:
            if not lhs and not rhs:
                raise ValueError("relation with two empty sides")
            for side in (lhs, rhs):
                for x in side:
                    if not (0 <= x < n):
                        raise ValueError(
                            f"relation letter {x} outside the alphabet"
                        )

    @property
    def n_letters(self) -> int:
        return len(self.names)


def parse_presentation(text: str) -> Presentation:
    """Parse presentation text.

    Grammar: ``#`` starts a comment; blank lines are ignored; one
    ``gens: a b ...`` line comes first, then any number of
    ``rel: word = word`` lines using the word syntax (powers allowed,
    positive letters only).
    """
    names: tuple[str, ...] | None = None
    relations: list[tuple[Word, Word]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        directive, sep, rest = line.partition(":")
        directive = directive.strip()
        if not sep:
            raise ParseError("expected 'gens:' or 'rel:' directive", lineno)
        if directive == "gens":
            if names is not None:
                raise ParseError("duplicate gens line", lineno)
            gens = tuple(rest.split())
            if not gens:
                raise ParseError("empty generator list", lineno)
            if len(set(gens)) != len(gens):
                raise ParseError("duplicate generator names", lineno)
            names = gens
        elif directive == "rel":
            if names is None:
                raise ParseError("gens line must come before relations", lineno)
            lhs_text, eq, rhs_text = rest.partition("=")
            if not eq:
                raise ParseError("relation must contain '='", lineno)
            try:
                lhs = parse_word(lhs_text, names)
                rhs = parse_word(rhs_text, names)
            except WordSyntaxError as exc:
                raise ParseError(str(exc), lineno) from None
            if not (is_positive(lhs) and is_positive(rhs)):
                raise ParseError("relation sides must be positive words", lineno)
            if not lhs and not rhs:
                raise ParseError("relation with two empty sides", lineno)
            relations.append((lhs, rhs))
        else:
            raise ParseError(f"unknown directive {directive!r}", lineno)
    if names is None:
        raise ParseError("missing gens line")
    try:
        return Presentation(names, tuple(relations))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_presentation(p: Presentation) -> str:
    """Canonical text form, re-parsable by parse_presentation."""
    lines = ["gens: " + " ".join(p.names)]
    for lhs, rhs in p.relations:
        lines.append(
            f"rel: {format_word(lhs, p.names)} = {format_word(rhs, p.names)}"
        )
    return "\n".join(lines) + "\n"


def opposite(p: Presentation) -> Presentation:
    """The opposite presentation: every relation side read backwards."""
    return Presentation(
        p.names, tuple((mirror(l), mirror(r)) for l, r in p.relations)
    )


@dataclass(frozen=True)
class TriangularStructure:
    """Successor map of a right-triangular presentation plus its graph shape.

    nxt maps each base letter s to the letter t of its relation t = s.comp(s);
    chains and cycles partition the alphabet (isolated letters are length-1
    chains).  Chains are listed in ascending order of their starting letter,
    each chain running along nxt; cycles are rotated to start at their
    smallest letter.
    """

    nxt: Mapping[int, int]
    comp: Mapping[int, Word]
    chains: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def is_single_chain(self) -> bool:
        return not self.cycles and len(self.chains) == 1

    @property
    def top(self) -> int:
        """Final letter of the single chain (divisible by every letter)."""
        if not self.is_single_chain:
            raise NotTriangularError("structure is not a single chain")
        return self.chains[0][-1]


def detect_right_triangular(p: Presentation) -> Optional[TriangularStructure]:
    """Return the triangular structure of p, or None if p is not
    right-triangular (some relation not of shape t = s.c, possibly with c
    empty, or the successor map fails to be functional, injective,
    fixpoint-free).  When both sides are single letters the left side is
    taken as the target t."""
    nxt: dict[int, int] = {}
    comp: dict[int, Word] = {}
    for lhs, rhs in p.relations:
        if len(lhs) == 1 and len(rhs) >= 1:
            t, w = lhs[0], rhs
        elif len(rhs) == 1 and len(lhs) >= 2:
            t, w = rhs[0], lhs
        else:
            return None
        s = w[0]
        if s == t or s in nxt:
            return None
        nxt[s] = t
        comp[s] = w[1:]
    if len(set(nxt.values())) != len(nxt):
        return None
    images = set(nxt.values())
    visited: set[int] = set()
    chains: list[tuple[int, ...]] = []
    for s in range(p.n_letters):
        if s in images or s in visited:
            continue
        chain = [s]
        visited.add(s)
        cur = s
        while cur in nxt:
            cur = nxt[cur]
            chain.append(cur)
            visited.add(cur)
        chains.append(tuple(chain))
    cycles: list[tuple[int, ...]] = []
    for s in range(p.n_letters):
        if s in visited:
            continue
        orbit = [s]
        visited.add(s)
        cur = nxt[s]
        while cur != s:
            orbit.append(cur)
            visited.add(cur)
            cur = nxt[cur]
        k = orbit.index(min(orbit))
        cycles.append(tuple(orbit[k:] + orbit[:k]))
    return TriangularStructure(
        nxt, comp, tuple(chains), tuple(sorted(cycles))
    )


def detect_left_triangular(p: Presentation) -> Optional[TriangularStructure]:
    """Triangular structure of the opposite presentation, if any."""
    return detect_right_triangular(opposite(p))


class RelationTable:
    """Reversing table: ordered pairs of distinct letters mapped to the pair
    of positive words (vs, vt) with s.vs = t.vt a relation.

    replacement(s, t) caches vs . invert(vt), the signed word that rewrites
    the factor s^-1 t.  completed_relations (for completed tables) lists the
    oriented relation family as (letter, word, (base, exponent)) triples with
    word = base_letter . accumulated complement.
    """

    def __init__(
        self,
        n_letters: int,
        names: tuple[str, ...],
        entries: dict[tuple[int, int], tuple[Word, Word]],
        kind: str,
        completed_relations: tuple[tuple[int, Word, tuple[int, int]], ...] = (),
        structure: TriangularStructure | None = None,
    ):
        self.n_letters = n_letters
        self.names = names
        self.entries = entries
        self.kind = kind
        self.completed_relations = completed_relations
        self.structure = structure
        self.replacements = {
            pair: vs + invert(vt) for pair, (vs, vt) in entries.items()
        }

    def lookup(self, s: int, t: int) -> tuple[Word, Word] | None:
        return self.entries.get((s, t))

    def replacement(self, s: int, t: int) -> Word | None:
        return self.replacements.get((s, t))

    def __repr__(self) -> str:
        return (
            f"RelationTable({self.kind}, {len(self.names)} letters, "
            f"{len(self.entries)} entries)"
        )


def complete(p: Presentation) -> RelationTable:
    """Completed table of a right-triangular presentation with acyclic chain
    structure: for every base s and every iterate t = next^i(s) the entries
    (s, t) -> (comp(s)...comp(next^{i-1}(s)), eps) and the swapped pair.
    Within each chain, every ordered pair of distinct letters gets exactly one
    entry; pairs across chains stay absent."""
    structure = detect_right_triangular(p)
    if structure is None:
        raise NotTriangularError("presentation is not right-triangular")
    if structure.cycles:
        raise NotTriangularError(
            f"successor graph has a cycle: {structure.cycles[0]}"
        )
    entries: dict[tuple[int, int], tuple[Word, Word]] = {}
    completed: list[tuple[int, Word, tuple[int, int]]] = []
    for s in sorted(structure.nxt):
        acc: Word = ()
        cur = s
        exponent = 0
        while cur in structure.nxt:
            acc = acc + structure.comp[cur]
            cur = structure.nxt[cur]
            exponent += 1
            entries[(s, cur)] = (acc, ())
            entries[(cur, s)] = ((), acc)
            completed.append((cur, (s,) + acc, (s, exponent)))
    return RelationTable(
        p.n_letters, p.names, entries, "completed", tuple(completed), structure
    )


def table_from_presentation(p: Presentation) -> RelationTable:
    """Generic table keyed by the first letters of the two relation sides.

    Relations with an empty side or with both sides starting on the same
    letter admit no deterministic table entry and are skipped (reversing can
    never apply them); conflicting entries for one pair raise
    NonDeterministicTable.
    """
    entries: dict[tuple[int, int], tuple[Word, Word]] = {}
    for lhs, rhs in p.relations:
        if not lhs or not rhs or lhs[0] == rhs[0]:
            continue
        for left, right in ((lhs, rhs), (rhs, lhs)):
            key = (left[0], right[0])
            if key in entries and entries[key] != (left[1:], right[1:]):
                raise NonDeterministicTable(
                    f"conflicting entries for letter pair "
                    f"({p.names[key[0]]}, {p.names[key[1]]})"
                )
            entries[key] = (left[1:], right[1:])
    return RelationTable(p.n_letters, p.names, entries, "generic")
