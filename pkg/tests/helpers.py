"""Independent reference implementations used to cross-check the package.

Everything here is deliberately naive and self-contained: these functions are
written directly from the definitions (rescan the whole word each step, compare
against every previous word, breadth-first congruence closure) and must not
import anything from the package under test.  They were validated against
hand-worked traces (see tests/test_helpers.py) and are frozen: fix a bug here
only if a helper test proves the oracle itself wrong.

Conventions (shared with the package, re-stated independently):
  * a letter is an int index >= 0; its formal inverse is the bitwise
    complement ~letter (< 0)
  * a word is a tuple of signed letters; () is the empty word
  * a relation table maps an ordered pair (s, t) of distinct letters to a pair
    of positive words (vs, vt) such that s.vs = t.vt holds in the monoid
"""

from __future__ import annotations

import itertools


def oinv(word):
    """Formal inverse: reverse the word and flip every letter's sign."""
    return tuple(~x for x in reversed(word))


def omirror(word):
    """Reversed word, signs kept."""
    return tuple(reversed(word))


def W(text):
    """Compact test notation: lowercase = positive letter (a=0, b=1, ...),
    uppercase = inverted letter.  W("ACa") == (~0, ~2, 0)."""
    out = []
    for ch in text:
        if ch.isspace():
            continue
        if ch.islower():
            out.append(ord(ch) - ord("a"))
        else:
            out.append(~(ord(ch) - ord("A")))
    return tuple(out)


def naive_table(relations):
    """Relation table keyed by the first letters of the two sides of each
    relation.  Relations whose sides start with the same letter are rejected,
    as are colliding entries."""
    table = {}
    for lhs, rhs in relations:
        if not lhs or not rhs:
            raise ValueError("empty relation side")
        if lhs[0] == rhs[0]:
            raise ValueError("relation sides start with the same letter")
        for (l, r) in ((lhs, rhs), (rhs, lhs)):
            key = (l[0], r[0])
            if key in table:
                raise ValueError(f"duplicate table entry for pair {key}")
            table[key] = (tuple(l[1:]), tuple(r[1:]))
    return table


def naive_complete(relations):
    """Completion of a triangular relation family.

    Each relation must pair a single letter t with a longer word s.c where c
    is non-empty; t = next(s).  The completed table holds, for every letter s
    and every iterate t = next^i(s), the entries
        (s, t) -> (c(s)...c(next^{i-1}(s)), ())
        (t, s) -> ((), same word)
    Raises on non-functional next, fixpoints, duplicates, or cycles.
    """
    nxt = {}
    comp = {}
    for lhs, rhs in relations:
        if len(lhs) == 1 and len(rhs) >= 2:
            t, w = lhs[0], rhs
        elif len(rhs) == 1 and len(lhs) >= 2:
            t, w = rhs[0], lhs
        else:
            raise ValueError("relation is not triangular")
        s = w[0]
        if s == t:
            raise ValueError("next would have a fixpoint")
        if s in nxt:
            raise ValueError("two relations share a base letter")
        nxt[s] = t
        comp[s] = tuple(w[1:])
    if len(set(nxt.values())) != len(nxt):
        raise ValueError("next is not injective")
    table = {}
    for s in nxt:
        acc = ()
        cur = s
        while cur in nxt:
            acc = acc + comp[cur]
            cur = nxt[cur]
            if cur == s:
                raise ValueError("cyclic chain structure")
            table[(s, cur)] = (acc, ())
            table[(cur, s)] = ((), acc)
    return table


def _find_left_junction(word):
    for i in range(len(word) - 1):
        if word[i] < 0 <= word[i + 1]:
            return i
    return None


def _cycle_scan(current, previous_words):
    """Definition-based cycle test: does current equal x^-1 . w_m . y for an
    earlier trace word w_m, with x^-1 purely negative, y purely positive, and
    (x, y) not both empty?  Scans earlier steps in order, then positions."""
    n = len(current)
    for m, earlier in enumerate(previous_words):
        k = len(earlier)
        if k == 0 or k > n:
            continue
        for p in range(n - k + 1):
            if current[p:p + k] != earlier:
                continue
            if p == 0 and p + k == n:
                continue
            if all(x < 0 for x in current[:p]) and all(
                x >= 0 for x in current[p + k:]
            ):
                flank_left = oinv(current[:p])
                flank_right = current[p + k:]
                return m, flank_left, flank_right
    return None


def naive_right_reverse(word, table, max_steps=100000, max_length=100000):
    """Reference right-reversing engine, leftmost strategy.

    Returns one of:
        ("terminated", u_prime, v_prime, steps)    final word = v'.u'^-1
        ("stuck", position, (s, t), steps)
        ("cycle", earlier_step, flank_left, flank_right, period, steps)
        ("budget", last_word, steps, max_len_seen)
    The trace of (position, s, t) records is returned as a second value.
    """
    w = tuple(word)
    seen = [w]
    trace = []
    steps = 0
    max_len_seen = len(w)
    while True:
        i = _find_left_junction(w)
        if i is None:
            split = next((k for k, x in enumerate(w) if x < 0), len(w))
            v_prime = w[:split]
            u_prime = oinv(w[split:])
            return ("terminated", u_prime, v_prime, steps), trace
        s, t = ~w[i], w[i + 1]
        if s == t:
            w = w[:i] + w[i + 2:]
        else:
            entry = table.get((s, t))
            if entry is None:
                return ("stuck", i, (s, t), steps), trace
            vs, vt = entry
            w = w[:i] + vs + oinv(vt) + w[i + 2:]
        steps += 1
        trace.append((i, s, t))
        max_len_seen = max(max_len_seen, len(w))
        if _find_left_junction(w) is not None:
            hit = _cycle_scan(w, seen)
            if hit is not None:
                m, fl, fr = hit
                return ("cycle", m, fl, fr, steps - m, steps), trace
        if len(w) > max_length or steps >= max_steps:
            if _find_left_junction(w) is not None:
                return ("budget", w, steps, max_len_seen), trace
        seen.append(w)


def naive_left_reverse(word, table_op, max_steps=100000, max_length=100000):
    """Reference left-reversing engine, rightmost strategy, written directly
    (no mirroring trick).  table_op is the right-reversing table of the
    opposite presentation: an entry (s, t) -> (x, y) there means the original
    monoid satisfies mirror(x).s = mirror(y).t.

    Rewrites the rightmost factor s.t^-1 into u^-1.v where u.s = v.t.
    Returns the same shapes as naive_right_reverse; for "terminated" the final
    word is u'^-1.v'.
    """
    w = tuple(word)
    seen = [w]
    trace = []
    steps = 0
    max_len_seen = len(w)

    def rightmost(word_):
        for i in range(len(word_) - 2, -1, -1):
            if word_[i] >= 0 > word_[i + 1]:
                return i
        return None

    while True:
        i = rightmost(w)
        if i is None:
            split = next((k for k, x in enumerate(w) if x >= 0), len(w))
            u_prime = oinv(w[:split])
            v_prime = w[split:]
            return ("terminated", u_prime, v_prime, steps), trace
        s, t = w[i], ~w[i + 1]
        if s == t:
            w = w[:i] + w[i + 2:]
        else:
            entry = table_op.get((s, t))
            if entry is None:
                return ("stuck", i, (s, t), steps), trace
            x, y = entry
            u = omirror(x)
            v = omirror(y)
            w = w[:i] + oinv(u) + v + w[i + 2:]
        steps += 1
        trace.append((i, s, t))
        max_len_seen = max(max_len_seen, len(w))
        if rightmost(w) is not None:
            hit = _left_cycle_scan(w, seen)
            if hit is not None:
                m, fl, fr = hit
                return ("cycle", m, fl, fr, steps - m, steps), trace
        if len(w) > max_length or steps >= max_steps:
            if rightmost(w) is not None:
                return ("budget", w, steps, max_len_seen), trace
        seen.append(w)


def _left_cycle_scan(current, previous_words):
    """Left-reversing cycle test: current = x . w_m . y^-1 with x purely
    positive and y^-1 purely negative, not both empty."""
    n = len(current)
    for m, earlier in enumerate(previous_words):
        k = len(earlier)
        if k == 0 or k > n:
            continue
        for p in range(n - k + 1):
            if current[p:p + k] != earlier:
                continue
            if p == 0 and p + k == n:
                continue
            if all(x >= 0 for x in current[:p]) and all(
                x < 0 for x in current[p + k:]
            ):
                return m, current[:p], oinv(current[p + k:])
    return None


def positive_words(n_letters, max_len, min_len=0):
    """All positive words over n_letters of length min_len..max_len, shortlex."""
    for length in range(min_len, max_len + 1):
        for tup in itertools.product(range(n_letters), repeat=length):
            yield tup


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _closure_partition(relations, n_letters, cap, target_len):
    uf = _UnionFind()
    rules = []
    for lhs, rhs in relations:
        rules.append((tuple(lhs), tuple(rhs)))
        rules.append((tuple(rhs), tuple(lhs)))
    for w in positive_words(n_letters, cap):
        uf.find(w)
        for pat, rep in rules:
            lp = len(pat)
            for i in range(len(w) - lp + 1):
                if w[i:i + lp] == pat:
                    w2 = w[:i] + rep + w[i + lp:]
                    if len(w2) <= cap:
                        uf.union(w, w2)
    classes = {}
    for w in positive_words(n_letters, target_len):
        classes.setdefault(uf.find(w), set()).add(w)
    return frozenset(frozenset(c) for c in classes.values())


def closure_equal(relations, n_letters, target_len, start_slack=None,
                  max_cap=None):
    """Equality-of-positive-words oracle via breadth-first congruence closure.

    Builds the congruence generated by the relations on all positive words up
    to a cap, then restricts to words of length <= target_len.  The cap starts
    at target_len + slack and is raised until the restricted partition is
    identical for two consecutive caps (derivations may need to pass through
    words longer than either endpoint).  Returns a function equal(u, v) plus
    the stabilized partition.
    """
    if start_slack is None:
        start_slack = max(max(len(l), len(r)) for l, r in relations)
    if max_cap is None:
        max_cap = target_len + start_slack + 8
    cap = target_len + start_slack
    prev = _closure_partition(relations, n_letters, cap, target_len)
    while True:
        cap += 1
        if cap > max_cap:
            raise RuntimeError("congruence closure did not stabilize")
        cur = _closure_partition(relations, n_letters, cap, target_len)
        if cur == prev:
            break
        prev = cur
    rep = {}
    for cls in cur:
        r = min(cls, key=lambda w: (len(w), w))
        for w in cls:
            rep[w] = r

    def equal(u, v):
        return rep[tuple(u)] == rep[tuple(v)]

    return equal, cur
