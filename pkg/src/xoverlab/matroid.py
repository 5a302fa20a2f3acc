"""Sign vectors, tope-driven covector reconstruction, and face lattices.

Covectors are rebuilt from topes by the elementary criterion: X is a
covector exactly when its composition with every tope is again a tope.  The
scan over all 3^|E| sign vectors is vectorized but otherwise literal, so a
budget caps the ground size.  Cocircuits, rank, uniformity, and the big face
lattice are all derived from the resulting covector set by enumeration;
no closed-form counting formula is ever trusted for these.

Sign vectors are stored as a pair of bitmasks (positive and negative
positions) with coordinate 1 in the most significant bit, mirroring the
binary word encoding.  The order on sign vectors is the face order: X <= Y
when X agrees with Y on the support of X.  Canonical sorting is
lexicographic per coordinate with - < 0 < +, so every serialization is
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .partialcube import vc_dimension
from .words import AlphabetSpec, BudgetExceededError, Word, phi

DEFAULT_GROUND_BUDGET = 10

_CHARS = {1: "+", 0: "0", -1: "-"}
_VALUES = {"+": 1, "0": 0, "-": -1}


@dataclass(frozen=True)
class SignVector:
    """Vector over {+, 0, -}; pos and neg are disjoint position bitmasks."""

    n: int
    pos: int
    neg: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.pos & self.neg:
            raise ValueError("positive and negative positions overlap")
        if self.pos & ~full or self.neg & ~full:
            raise ValueError("position mask outside ground set")

    @classmethod
    def zero(cls, n: int) -> "SignVector":
        return cls(n, 0, 0)

    @classmethod
    def from_string(cls, text: str) -> "SignVector":
        n = len(text)
        pos = neg = 0
        for i, ch in enumerate(text):
            if ch not in _VALUES:
                raise ValueError(f"bad sign character {ch!r} at position {i + 1}")
            bit = 1 << (n - 1 - i)
            if ch == "+":
                pos |= bit
            elif ch == "-":
                neg |= bit
        return cls(n, pos, neg)

    def entry(self, e: int) -> int:
        """Sign at 1-based position e as an integer in {-1, 0, 1}."""
        if not 1 <= e <= self.n:
            raise ValueError(f"position {e} outside 1..{self.n}")
        bit = 1 << (self.n - e)
        return 1 if self.pos & bit else -1 if self.neg & bit else 0

    @property
    def support(self) -> int:
        return self.pos | self.neg

    @property
    def support_size(self) -> int:
        return (self.pos | self.neg).bit_count()

    @property
    def is_zero(self) -> bool:
        return not (self.pos | self.neg)

    @property
    def key(self) -> int:
        """Canonical sort key: base-3 code with - < 0 < +, coordinate 1
        most significant."""
        code = 0
        for b in range(self.n - 1, -1, -1):
            digit = 2 if self.pos >> b & 1 else 0 if self.neg >> b & 1 else 1
            code = code * 3 + digit
        return code

    def negate(self) -> "SignVector":
        return SignVector(self.n, self.neg, self.pos)

    __neg__ = negate

    def _check(self, other: "SignVector") -> None:
        if self.n != other.n:
            raise ValueError("length mismatch")

    def compose(self, other: "SignVector") -> "SignVector":
        self._check(other)
        free = ~self.support
        return SignVector(
            self.n, self.pos | (other.pos & free), self.neg | (other.neg & free)
        )

    def separation(self, other: "SignVector") -> frozenset[int]:
        """1-based positions where the two vectors carry opposite signs."""
        self._check(other)
        d = (self.pos & other.neg) | (self.neg & other.pos)
        return frozenset(self.n - b for b in range(self.n) if d >> b & 1)

    def conforms(self, other: "SignVector") -> bool:
        """Face order: every nonzero entry of self agrees with other."""
        self._check(other)
        return self.pos & ~other.pos == 0 and self.neg & ~other.neg == 0

    def entries(self) -> tuple[int, ...]:
        return tuple(
            1 if self.pos >> b & 1 else -1 if self.neg >> b & 1 else 0
            for b in range(self.n - 1, -1, -1)
        )

    def __str__(self) -> str:
        return "".join(_CHARS[v] for v in self.entries())

    def __repr__(self) -> str:
        return f"SignVector({str(self)!r})"


def compose(x: SignVector, y: SignVector) -> SignVector:
    return x.compose(y)


def negate(x: SignVector) -> SignVector:
    return x.negate()


def separation(x: SignVector, y: SignVector) -> frozenset[int]:
    return x.separation(y)


def conforms(x: SignVector, y: SignVector) -> bool:
    return x.conforms(y)


def word_to_sign(w: Word) -> SignVector:
    """Binary word to full-support sign vector, 1 as + and 0 as -."""
    for size in w.spec.sizes:
        if size != 2:
            raise ValueError("sign vectors encode binary words only")
    n = w.spec.n
    full = (1 << n) - 1
    return SignVector(n, w.index, full & ~w.index)


def sign_to_word(x: SignVector, spec: AlphabetSpec | None = None) -> Word:
    if x.support_size != x.n:
        raise ValueError("only full-support sign vectors encode words")
    if spec is None:
        spec = AlphabetSpec((2,) * x.n)
    return Word.from_index(x.pos, spec)


@dataclass(frozen=True)
class OrientedMatroidData:
    """Covector set with its derived topes, cocircuits, and rank."""

    ground_size: int
    covectors: tuple[SignVector, ...]
    topes: tuple[SignVector, ...]
    cocircuits: tuple[SignVector, ...]
    rank: int


def _canonical(vectors: Iterable[SignVector]) -> list[SignVector]:
    return sorted(vectors, key=lambda x: x.key)


def _strictly_below(cov_index: dict[tuple[int, int], int], x: SignVector) -> list[int]:
    """Indices of covectors strictly below x in the face order.

    Candidates are exactly the restrictions of x to proper subsets of its
    support, so submask enumeration is complete.
    """
    sup = x.support
    if sup == 0:
        return []
    out = []
    sub = (sup - 1) & sup
    while True:
        idx = cov_index.get((x.pos & sub, x.neg & sub))
        if idx is not None:
            out.append(idx)
        if sub == 0:
            break
        sub = (sub - 1) & sup
    return out


def _heights(covectors: Sequence[SignVector]) -> list[int]:
    """Longest-chain height of each covector above the zero vector."""
    cov_index = {(x.pos, x.neg): i for i, x in enumerate(covectors)}
    order = sorted(range(len(covectors)), key=lambda i: covectors[i].support_size)
    h = [0] * len(covectors)
    for i in order:
        below = _strictly_below(cov_index, covectors[i])
        h[i] = 1 + max((h[j] for j in below), default=-1)
    return h


def _matrix(vectors: Sequence[SignVector]) -> np.ndarray:
    return np.array([v.entries() for v in vectors], dtype=np.int8)


def _codes(rows: np.ndarray) -> np.ndarray:
    n = rows.shape[1]
    weights = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (rows.astype(np.int64) + 1) @ weights


def covectors_from_topes(
    topes: Iterable[SignVector], budget: int = DEFAULT_GROUND_BUDGET
) -> OrientedMatroidData:
    """All sign vectors whose composition with every tope is a tope.

    Input topes must have full support and be closed under negation; the
    derived maximal covectors are checked to reproduce the input exactly.
    """
    tope_list = _canonical(set(topes))
    if not tope_list:
        raise ValueError("empty tope set")
    n = tope_list[0].n
    for t in tope_list:
        if t.n != n:
            raise ValueError("length mismatch")
        if t.support_size != n:
            raise ValueError("topes must have full support")
    tope_keys = {(t.pos, t.neg) for t in tope_list}
    for t in tope_list:
        if (t.neg, t.pos) not in tope_keys:
            raise ValueError("tope set not centrally symmetric")
    if n > budget:
        raise BudgetExceededError(
            f"space too large: ground set {n} exceeds budget {budget}"
        )

    grid = np.indices((3,) * n).reshape(n, -1).T.astype(np.int8) - 1
    tope_rows = _matrix(tope_list)
    tope_codes = np.sort(_codes(tope_rows))
    keep = np.ones(len(grid), dtype=bool)
    for t in range(len(tope_list)):
        composed = np.where(grid != 0, grid, tope_rows[t])
        keep &= np.isin(_codes(composed), tope_codes, assume_unique=False)
    rows = grid[keep]

    covectors = []
    for row in rows:
        pos = neg = 0
        for i, v in enumerate(row):
            bit = 1 << (n - 1 - i)
            if v > 0:
                pos |= bit
            elif v < 0:
                neg |= bit
        covectors.append(SignVector(n, pos, neg))
    covectors = _canonical(covectors)

    maximal = [x for x in covectors if x.support_size == n]
    assert set(maximal) == set(tope_list), "derived topes differ from input"

    heights = _heights(covectors)
    rank = max(heights)
    cocircuits = _minimal_nonzero(covectors)
    return OrientedMatroidData(
        ground_size=n,
        covectors=tuple(covectors),
        topes=tuple(tope_list),
        cocircuits=tuple(cocircuits),
        rank=rank,
    )


def _minimal_nonzero(covectors: Sequence[SignVector]) -> list[SignVector]:
    nonzero = sorted(
        (x for x in covectors if not x.is_zero),
        key=lambda x: (x.support_size, x.key),
    )
    mins: list[SignVector] = []
    for x in nonzero:
        if not any(c.conforms(x) for c in mins):
            mins.append(x)
    return _canonical(mins)


def cocircuits_of(om: OrientedMatroidData) -> tuple[SignVector, ...]:
    return om.cocircuits


@dataclass(frozen=True)
class FaceAxiomReport:
    """First violation of the covector axioms, if any.

    axiom is one of F0..F3 when holds is false.  The F2 witness is the
    offending ordered pair; the F3 witness carries the pair plus the
    1-based separating position with no eliminator.
    """

    holds: bool
    axiom: str | None
    witness: tuple | None


def check_face_axioms(vectors: Iterable[SignVector]) -> FaceAxiomReport:
    """Exhaustive F0/F1/F2 check and pairwise F3 elimination check."""
    family = _canonical(set(vectors))
    if not family:
        return FaceAxiomReport(False, "F0", ())
    n = family[0].n
    for x in family:
        if x.n != n:
            raise ValueError("length mismatch")
    keys = {(x.pos, x.neg) for x in family}
    if (0, 0) not in keys:
        return FaceAxiomReport(False, "F0", ())
    for x in family:
        if (x.neg, x.pos) not in keys:
            return FaceAxiomReport(False, "F1", (x,))

    rows = _matrix(family)
    codes = _codes(rows)
    code_set = np.sort(codes)
    index_of = {int(c): i for i, c in enumerate(codes)}

    # F2: compose each X with every Y at once
    for i, x in enumerate(family):
        composed = np.where(rows[i] != 0, rows[i], rows)
        ok = np.isin(_codes(composed), code_set)
        if not ok.all():
            j = int(np.argmin(ok))
            return FaceAxiomReport(False, "F2", (x, family[j]))

    # F3: for e separating X and Y, an eliminator Z has Z_e = 0 and agrees
    # with X o Y away from the separator set D.  Most pairs are settled by
    # the candidate that zeroes all of D; the rest depend only on
    # (e, D, X o Y outside D), so they are batched, grouped by D, and
    # answered against the projection of the zero-at-e vectors onto the
    # complement of D, cached per (e, D).
    zero_rows = [rows[np.flatnonzero(rows[:, e] == 0)] for e in range(n)]
    bit_weights = 1 << np.arange(n)
    restr_cache: dict[tuple[int, int], np.ndarray] = {}

    def projection_codes(e: int, dm: int) -> tuple[np.ndarray, np.ndarray]:
        cached = restr_cache.get((e, dm))
        if cached is None:
            keep = np.flatnonzero(~((dm >> np.arange(n)) & 1).astype(bool))
            cached = (np.sort(_codes(zero_rows[e][:, keep])), keep)
            restr_cache[(e, dm)] = cached
        return cached

    full_dm = (1 << n) - 1
    pending_dm: list[np.ndarray] = []
    pending_comp: list[np.ndarray] = []
    pending = 0

    def resolve_pending() -> bool:
        """True when every pending query has an eliminator."""
        nonlocal pending
        if not pending:
            return True
        dm_all = np.concatenate(pending_dm)
        comp_all = np.vstack(pending_comp)
        pending_dm.clear()
        pending_comp.clear()
        pending = 0
        order = np.argsort(dm_all, kind="stable")
        dm_sorted = dm_all[order]
        bounds = np.searchsorted(dm_sorted, np.unique(dm_sorted), side="left")
        bounds = list(bounds) + [len(dm_sorted)]
        for lo, hi in zip(bounds, bounds[1:]):
            dm = int(dm_sorted[lo])
            if dm == full_dm:
                continue  # fully separated: the zero vector eliminates
            group = comp_all[order[lo:hi]]
            for e in range(n):
                if not dm >> e & 1:
                    continue
                arr, keep = projection_codes(e, dm)
                if not np.isin(_codes(group[:, keep]), arr).all():
                    return False
        return True

    violated = False
    for i in range(len(family)):
        if not (rows[i] != 0).any():
            continue
        sep = (rows[i] != 0) & (rows == -rows[i])
        active = sep.any(axis=1)
        if not active.any():
            continue
        composed = np.where(rows[i] != 0, rows[i], rows)
        easy = np.where(sep, 0, composed)
        easy_ok = np.isin(_codes(easy), code_set)
        miss = np.flatnonzero(active & ~easy_ok)
        if not len(miss):
            continue
        pending_dm.append(sep[miss] @ bit_weights)
        pending_comp.append(composed[miss])
        pending += len(miss)
        if pending >= 1 << 22 and not resolve_pending():
            violated = True
            break
    if not violated and not resolve_pending():
        violated = True
    if not violated:
        return FaceAxiomReport(True, None, None)

    # a violation exists; rescan true pairs in canonical order so the
    # reported witness does not depend on the deduplication above
    for i, x in enumerate(family):
        for j, y in enumerate(family):
            dmask = (rows[i] != 0) & (rows[j] == -rows[i])
            if not dmask.any():
                continue
            target = np.where(rows[i] != 0, rows[i], rows[j])
            dm = int(dmask @ bit_weights)
            for e in np.flatnonzero(dmask):
                if dm == (1 << n) - 1:
                    break
                arr, keep = projection_codes(int(e), dm)
                if not np.isin(_codes(target[None, keep]), arr).item():
                    return FaceAxiomReport(False, "F3", (x, y, int(e) + 1))
    raise AssertionError("violation vanished on rescan")


@dataclass(frozen=True)
class FaceLattice:
    """Covectors plus a synthetic maximum, graded by chain height.

    heights[i] is the height of covectors[i]; the synthetic top has height
    rank + 1.  covers lists Hasse pairs (lower, upper) as indices into
    covectors, with len(covectors) standing for the top.
    """

    covectors: tuple[SignVector, ...]
    heights: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]
    rank: int

    @property
    def top_index(self) -> int:
        return len(self.covectors)

    def level_sizes(self) -> tuple[int, ...]:
        counts = [0] * (self.rank + 2)
        for h in self.heights:
            counts[h] += 1
        counts[self.rank + 1] = 1
        return tuple(counts)

    def atoms(self) -> tuple[SignVector, ...]:
        return tuple(
            self.covectors[i] for i, h in enumerate(self.heights) if h == 1
        )

    def to_dot(self) -> str:
        lines = ["digraph face_lattice {", "  rankdir=BT;"]
        for i, x in enumerate(self.covectors):
            lines.append(f'  n{i} [label="{x}"];')
        lines.append(f'  n{self.top_index} [label="1^"];')
        for lo, hi in self.covers:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines)


def face_lattice(om: OrientedMatroidData) -> FaceLattice:
    """Hasse diagram of the face order with an adjoined maximum.

    Raises when the order is not graded; heights are recomputed here rather
    than trusted from the construction.
    """
    covectors = list(om.covectors)
    if not any(x.is_zero for x in covectors):
        raise ValueError("not a valid OM lattice")
    cov_index = {(x.pos, x.neg): i for i, x in enumerate(covectors)}
    below = [_strictly_below(cov_index, x) for x in covectors]
    heights = _heights(covectors)
    rank = max(heights)

    covers: list[tuple[int, int]] = []
    for i, bel in enumerate(below):
        for j in bel:
            # j is covered by i when nothing in the open interval remains
            if not any(
                z != j and covectors[j].conforms(covectors[z]) for z in bel
            ):
                covers.append((j, i))
    top = len(covectors)
    for i, h in enumerate(heights):
        if covectors[i].support_size == om.ground_size:
            covers.append((i, top))

    jump = {(lo, hi): (rank + 1 if hi == top else heights[hi]) - heights[lo]
            for lo, hi in covers}
    if any(v != 1 for v in jump.values()):
        raise ValueError("not a valid OM lattice")
    full_heights = heights + [rank + 1]
    depth = [0] * (top + 1)
    ups: list[list[int]] = [[] for _ in range(top + 1)]
    for lo, hi in covers:
        ups[lo].append(hi)
    for i in sorted(range(top + 1), key=lambda i: -full_heights[i]):
        depth[i] = 1 + max((depth[j] for j in ups[i]), default=-1)
    for i in range(top + 1):
        if full_heights[i] + depth[i] != rank + 1:
            raise ValueError("not a valid OM lattice")

    return FaceLattice(
        covectors=tuple(covectors),
        heights=tuple(heights),
        covers=tuple(sorted(covers)),
        rank=rank,
    )


def om_rank(om: OrientedMatroidData) -> int:
    """Height of the topes in the face order."""
    return max(_heights(om.covectors))


def is_uniform(om: OrientedMatroidData) -> tuple[bool, int | None]:
    """Whether all cocircuit supports share one size covering all subsets.

    Decided purely by enumeration of the cocircuits.
    """
    sizes = {c.support_size for c in om.cocircuits}
    if len(sizes) != 1:
        return False, None
    s = sizes.pop()
    supports = {c.support for c in om.cocircuits}
    want = len(list(combinations(range(om.ground_size), s)))
    if len(supports) != want:
        return False, None
    return True, s


def uniform_tope_check(topes: Iterable[SignVector]) -> bool:
    """Tope count and symmetry test: T = -T and |T| = 2 phi_{d-1}(|E|-1),
    with d the VC dimension of the topes read as binary words."""
    tope_list = list(set(topes))
    if not tope_list:
        return False
    n = tope_list[0].n
    for t in tope_list:
        if t.n != n or t.support_size != n:
            raise ValueError("topes must have full support")
    keys = {(t.pos, t.neg) for t in tope_list}
    if any((t.neg, t.pos) not in keys for t in tope_list):
        return False
    d = vc_dimension([sign_to_word(t) for t in tope_list])
    if d < 1:
        return False
    return len(tope_list) == 2 * phi(d - 1, n - 1)


def om_from_rset(k: int, n: int, budget: int = DEFAULT_GROUND_BUDGET) -> OrientedMatroidData:
    """Oriented matroid of the k-point crossover set on an antipodal pair."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    if n > budget:
        raise BudgetExceededError(
            f"space too large: ground set {n} exceeds budget {budget}"
        )
    from .crossover import rset

    spec = AlphabetSpec((2,) * n)
    pair = rset(k, Word.from_index(0, spec), Word.from_index((1 << n) - 1, spec))
    topes = [word_to_sign(w) for w in pair.members]
    assert uniform_tope_check(topes), "crossover topes failed the tope count test"
    return covectors_from_topes(topes, budget=budget)


def tope_graph(om: OrientedMatroidData):
    """Graph on topes with edges at separation exactly one."""
    from .graphs import SimpleGraph

    topes = om.topes
    edges = [
        (i, j)
        for i in range(len(topes))
        for j in range(i + 1, len(topes))
        if len(topes[i].separation(topes[j])) == 1
    ]
    return SimpleGraph(topes, edges)
