"""k-point crossover recombination sets and their closure geometry.

``recombine`` applies one explicit cut set to two parent words.  ``rset``
collects every offspring reachable with at most k cut points; its fast path
enumerates parent-switch patterns between consecutive differing positions,
which ``rset_by_cut_enumeration`` (the literal all-cut-subsets definition)
must reproduce exactly -- the test suite checks the two routes against each
other before anything else relies on the fast path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .graphs import SimpleGraph, word_graph
from .words import (
    AlphabetSpec,
    BudgetExceededError,
    DEFAULT_BUDGET,
    SMALL_SPACE_BUDGET,
    Word,
    WordSet,
    interval,
    phi,
    require_same_spec,
)


@dataclass(frozen=True)
class CutSet:
    """Strictly increasing cut positions plus which parent leads.

    A cut at position p separates letter p from letter p + 1 (1-based), so
    valid positions lie in [1, n - 1].  ``order`` is "first" when the first
    parent supplies the leading segment and "second" otherwise.
    """

    positions: tuple[int, ...]
    order: str = "first"

    def __post_init__(self) -> None:
        positions = tuple(int(p) for p in self.positions)
        if any(p < 1 for p in positions):
            raise ValueError("cut positions start at 1")
        if any(b <= a for a, b in zip(positions, positions[1:])):
            raise ValueError("cut positions must be strictly increasing")
        if self.order not in ("first", "second"):
            raise ValueError("order must be 'first' or 'second'")
        object.__setattr__(self, "positions", positions)


@dataclass(frozen=True)
class RSetResult:
    """A recombination set together with the generating parents and k."""

    members: WordSet
    parents: tuple[Word, Word]
    k: int


def recombine(x: Word, y: Word, cuts: CutSet) -> Word:
    """Copy alternating segments from the two parents at the given cuts."""
    spec = require_same_spec(x, y)
    n = spec.n
    if any(p > n - 1 for p in cuts.positions):
        raise ValueError(f"cut positions must lie in [1, {n - 1}]")
    parents = (x, y) if cuts.order == "first" else (y, x)
    bounds = (0,) + cuts.positions + (n,)
    letters: list[int] = []
    for seg in range(len(bounds) - 1):
        letters.extend(parents[seg % 2].letters[bounds[seg]:bounds[seg + 1]])
    return Word(tuple(letters), spec)


def _validate_k(k: int) -> int:
    k = int(k)
    if k < 1:
        raise ValueError("k must be at least 1")
    return k


def rset_by_cut_enumeration(k: int, x: Word, y: Word) -> WordSet:
    """Literal definition: every offspring of every cut set with <= k cuts."""
    k = _validate_k(k)
    spec = require_same_spec(x, y)
    gaps = range(1, spec.n)
    members: set[Word] = set()
    for count in range(0, min(k, spec.n - 1) + 1):
        for positions in combinations(gaps, count):
            for order in ("first", "second"):
                members.add(recombine(x, y, CutSet(positions, order)))
    return WordSet(members, spec)


@lru_cache(maxsize=65536)
def _ymask_patterns(k: int, diff: int, n: int) -> tuple[int, ...]:
    """Masks m (subsets of diff) with offspring x ^ m reachable by <= k cuts.

    Only parent switches between consecutive differing positions matter: a
    cut in a gap where the parents agree either side is a no-op, and any one
    gap of a class of equivalent gaps represents them all.
    """
    if diff == 0:
        return (0,)
    bits = [1 << b for b in range(n - 1, -1, -1) if diff >> b & 1]
    t = len(bits)
    suffix = [0] * t
    acc = 0
    for j in range(t - 1, -1, -1):
        acc |= bits[j]
        suffix[j] = acc
    out: set[int] = set()
    for count in range(0, min(k, t - 1) + 1):
        for switches in combinations(range(1, t), count):
            m = 0
            for s in switches:
                m ^= suffix[s]
            out.add(m)
            out.add(diff ^ m)
    return tuple(sorted(out))


def _rset_indices(k: int, xi: int, yi: int, n: int) -> list[int]:
    """Recombination set of two binary words given as packed indices."""
    diff = xi ^ yi
    return [xi ^ m for m in _ymask_patterns(k, diff, n)]


def _rset_letters(k: int, x: tuple[int, ...], y: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Recombination set over arbitrary alphabets, on raw letter tuples."""
    dpos = [i for i, (a, b) in enumerate(zip(x, y)) if a != b]
    t = len(dpos)
    if t == 0:
        return {x}
    out: set[tuple[int, ...]] = set()
    for count in range(0, min(k, t - 1) + 1):
        for switches in combinations(range(1, t), count):
            take_y = [False] * t
            side = False
            si = 0
            for j in range(t):
                if si < len(switches) and switches[si] == j:
                    side = not side
                    si += 1
                take_y[j] = side
            child = list(x)
            other = list(x)
            for j, p in enumerate(dpos):
                if take_y[j]:
                    child[p] = y[p]
                else:
                    other[p] = y[p]
            out.add(tuple(child))
            out.add(tuple(other))
    return out


def rset(k: int, x: Word, y: Word) -> RSetResult:
    """All offspring of x and y reachable with at most k cut points."""
    k = _validate_k(k)
    spec = require_same_spec(x, y)
    if spec.is_binary:
        idxs = _rset_indices(k, x.index, y.index, spec.n)
        members = WordSet((Word.from_index(i, spec) for i in idxs), spec)
    else:
        tuples = _rset_letters(k, x.letters, y.letters)
        members = WordSet((Word(t, spec) for t in tuples), spec)
    return RSetResult(members, (x, y), k)


def rset_recursive(k: int, x: Word, y: Word) -> RSetResult:
    """R_k built from R_{k-1} by one-point recombination through each member."""
    k = _validate_k(k)
    if k < 2:
        raise ValueError("the recursion needs k >= 2")
    spec = require_same_spec(x, y)
    if spec.is_binary:
        n = spec.n
        xi, yi = x.index, y.index
        acc: set[int] = set()
        for zi in _rset_indices(k - 1, xi, yi, n):
            acc.update(_rset_indices(1, xi, zi, n))
            acc.update(_rset_indices(1, zi, yi, n))
        members = WordSet((Word.from_index(i, spec) for i in acc), spec)
    else:
        prev = rset(k - 1, x, y).members
        acc_t: set[tuple[int, ...]] = set()
        for z in prev:
            acc_t.update(_rset_letters(1, x.letters, z.letters))
            acc_t.update(_rset_letters(1, z.letters, y.letters))
        members = WordSet((Word(t, spec) for t in acc_t), spec)
    return RSetResult(members, (x, y), k)


def rset_size_formula(k: int, t: int) -> int:
    """Closed-form size of a recombination set for parents at distance t."""
    k = _validate_k(k)
    if t < 0:
        raise ValueError("distance must be non-negative")
    if t <= k:
        return 2 ** t
    return 2 * phi(k, t - 1)


def _closure_indices(k: int, xi: int, yi: int, n: int, budget: int) -> set[int]:
    members = {xi, yi}
    queue: deque[tuple[int, int]] = deque([(xi, yi)] if xi != yi else [])
    while queue:
        u, v = queue.popleft()
        for w in _rset_indices(k, u, v, n):
            if w not in members:
                for s in members:
                    queue.append((w, s))
                members.add(w)
                if len(members) > budget:
                    raise BudgetExceededError(
                        f"space too large: closure exceeded budget {budget}"
                    )
    return members


def _closure_letters(
    k: int, x: tuple[int, ...], y: tuple[int, ...], budget: int
) -> set[tuple[int, ...]]:
    members = {x, y}
    queue: deque[tuple[tuple[int, ...], tuple[int, ...]]] = deque(
        [(x, y)] if x != y else []
    )
    while queue:
        u, v = queue.popleft()
        for w in _rset_letters(k, u, v):
            if w not in members:
                for s in members:
                    queue.append((w, s))
                members.add(w)
                if len(members) > budget:
                    raise BudgetExceededError(
                        f"space too large: closure exceeded budget {budget}"
                    )
    return members


def closure(k: int, x: Word, y: Word, budget: int = DEFAULT_BUDGET) -> WordSet:
    """Least set containing x, y and closed under k-point recombination."""
    k = _validate_k(k)
    spec = require_same_spec(x, y)
    if spec.is_binary:
        idxs = _closure_indices(k, x.index, y.index, spec.n, budget)
        return WordSet((Word.from_index(i, spec) for i in idxs), spec)
    tuples = _closure_letters(k, x.letters, y.letters, budget)
    return WordSet((Word(t, spec) for t in tuples), spec)


def is_closed(k: int, x: Word, y: Word) -> bool:
    """Whether the recombination set of x and y is recombination-closed."""
    k = _validate_k(k)
    spec = require_same_spec(x, y)
    if spec.is_binary:
        idxs = _rset_indices(k, x.index, y.index, spec.n)
        mset = set(idxs)
        for u, v in combinations(idxs, 2):
            if any(w not in mset for w in _rset_indices(k, u, v, spec.n)):
                return False
        return True
    members = [w.letters for w in rset(k, x, y).members]
    mset = set(members)
    for u, v in combinations(members, 2):
        if any(w not in mset for w in _rset_letters(k, u, v)):
            return False
    return True


def generate_convexity(
    k: int, spec: AlphabetSpec, budget: int = SMALL_SPACE_BUDGET
) -> tuple[WordSet, ...]:
    """All intersections of recombination closures over a small space."""
    k = _validate_k(k)
    spec.check_budget(budget)
    words = list(spec.iter_words())
    family: set[frozenset[int]] = set()
    for i, x in enumerate(words):
        for y in words[i:]:
            family.add(frozenset(closure(k, x, y, budget=spec.size).indices))
    worklist = list(family)
    while worklist:
        nxt: list[frozenset[int]] = []
        for a in worklist:
            for b in family:
                c = a & b
                if c not in family and c not in nxt:
                    nxt.append(c)
        for c in nxt:
            family.add(c)
        worklist = nxt
    sets = [
        WordSet((Word.from_index(i, spec) for i in idxs), spec) for idxs in family
    ]
    return tuple(sorted(sets, key=lambda s: (len(s), tuple(w.letters for w in s))))


def find_parents(k: int, s: WordSet | Iterable[Word]) -> list[tuple[Word, Word]]:
    """All unordered pairs inside s whose recombination set is exactly s."""
    k = _validate_k(k)
    members = s.members if isinstance(s, WordSet) else tuple(sorted(s))
    target = WordSet(members)
    out: list[tuple[Word, Word]] = []
    for i, u in enumerate(members):
        for v in members[i:]:
            if rset(k, u, v).members == target:
                out.append((u, v))
    return out


def median(x: Word, y: Word, z: Word) -> Word:
    """Coordinatewise majority of three binary words."""
    spec = require_same_spec(x, y)
    require_same_spec(x, z)
    if not spec.is_binary:
        raise ValueError("median is defined for binary words only")
    letters = tuple(
        1 if a + b + c >= 2 else 0 for a, b, c in zip(x.letters, y.letters, z.letters)
    )
    return Word(letters, spec)


def _greedy_lex_path(start: Word, goal: Word, pick_max: bool) -> list[Word]:
    """Shortest start-goal path, greedily extreme in the start-based labels.

    Vertices are compared after XOR-relabeling by the start word, so the walk
    begins at the all-zero label and every step sets one more bit.
    """
    spec = start.spec
    base = start.index
    path = [start]
    current = start
    while current != goal:
        best: Word | None = None
        best_key = -1
        for pos, (a, b) in enumerate(zip(current.letters, goal.letters)):
            if a != b:
                letters = list(current.letters)
                letters[pos] = b
                cand = Word(tuple(letters), spec)
                key = cand.index ^ base
                if best is None or (key > best_key if pick_max else key < best_key):
                    best, best_key = cand, key
        assert best is not None
        path.append(best)
        current = best
    return path


def lex_extreme_path_vertices(x: Word, y: Word) -> WordSet:
    """Vertices of the lexicographically least and greatest shortest paths.

    Path labels are normalized so the smaller endpoint reads as the all-zero
    word; sequences are then compared positionwise, coordinate 1 most
    significant.  Comparing raw labels instead would let a path dip through
    words outside the one-point recombination set whenever the smaller
    endpoint has a 1 in a differing position.
    """
    spec = require_same_spec(x, y)
    if not spec.is_binary:
        raise ValueError("lexicographic extreme paths are defined for binary words")
    if x == y:
        return WordSet([x], spec)
    start, goal = (x, y) if x < y else (y, x)
    lo = _greedy_lex_path(start, goal, pick_max=False)
    hi = _greedy_lex_path(start, goal, pick_max=True)
    return WordSet(lo + hi, spec)


def block_count(w: Word, reference: Word) -> int:
    """Number of maximal constant runs of w after relabeling by a parent.

    The relabeling sends the reference word to the all-zero word; for binary
    words this is positionwise XOR.
    """
    spec = require_same_spec(w, reference)
    if not spec.is_binary:
        raise ValueError("block counting is defined for binary words")
    bits = [a ^ b for a, b in zip(w.letters, reference.letters)]
    runs = 1
    for prev, cur in zip(bits, bits[1:]):
        if cur != prev:
            runs += 1
    return runs


def transit_graph(k: int, x: Word, y: Word) -> SimpleGraph:
    """Graph induced by the Hamming graph on the recombination set of x, y."""
    return word_graph(rset(k, x, y).members)
