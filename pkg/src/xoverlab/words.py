"""Words over fixed per-position alphabets and their Hamming geometry.

A word is a fixed-length tuple of letters; the letter at position i is drawn
from {0, ..., a_i - 1} with a_i >= 2.  Words are ordered lexicographically
with position 1 most significant, and every word set produced by this package
is kept in that order so identical inputs give byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb, prod
from typing import Iterable, Iterator

DEFAULT_BUDGET = 2 ** 20
SMALL_SPACE_BUDGET = 2 ** 8


class IncompatibleWordsError(ValueError):
    """Two words do not live over the same alphabet."""


class BudgetExceededError(ValueError):
    """A whole-space construction would exceed the configured budget."""


@dataclass(frozen=True)
class AlphabetSpec:
    """Alphabet sizes per position, e.g. (2, 2, 2) for binary words of length 3."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(a) for a in self.sizes)
        if not sizes:
            raise ValueError("alphabet spec needs at least one position")
        if any(a < 2 for a in sizes):
            raise ValueError("every alphabet size must be at least 2")
        object.__setattr__(self, "sizes", sizes)
        # Mixed-radix place values; position 1 is most significant, so the
        # packed index of a word is monotone in its lexicographic order.
        strides = [1] * len(sizes)
        for i in range(len(sizes) - 2, -1, -1):
            strides[i] = strides[i + 1] * sizes[i + 1]
        object.__setattr__(self, "_strides", tuple(strides))

    @property
    def n(self) -> int:
        return len(self.sizes)

    @property
    def size(self) -> int:
        return prod(self.sizes)

    @property
    def is_binary(self) -> bool:
        return all(a == 2 for a in self.sizes)

    @property
    def compact_text(self) -> bool:
        """Whether words over this alphabet render as plain digit strings."""
        return all(a <= 10 for a in self.sizes)

    def check_budget(self, budget: int = DEFAULT_BUDGET) -> None:
        if self.size > budget:
            raise BudgetExceededError(
                f"space too large: {self.size} words over {self} exceeds budget {budget}"
            )

    def index_of(self, letters: tuple[int, ...]) -> int:
        return sum(l * s for l, s in zip(letters, self._strides))

    def letters_of(self, index: int) -> tuple[int, ...]:
        out = []
        for a, s in zip(self.sizes, self._strides):
            q, index = divmod(index, s)
            out.append(q)
        return tuple(out)

    def iter_words(self) -> Iterator["Word"]:
        """All words in canonical (lexicographic) order."""
        for letters in product(*(range(a) for a in self.sizes)):
            yield Word(letters, self)

    @classmethod
    def parse(cls, text: str) -> "AlphabetSpec":
        """Parse '2^4', '3,3', '2,3' or mixtures such as '2^3,3'."""
        sizes: list[int] = []
        for token in text.strip().split(","):
            token = token.strip()
            if not token:
                raise ValueError(f"empty token in alphabet spec {text!r}")
            if "^" in token:
                base, _, count = token.partition("^")
                sizes.extend([int(base)] * int(count))
            else:
                sizes.append(int(token))
        return cls(tuple(sizes))

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.sizes)


@dataclass(frozen=True)
class Word:
    """A fixed-length word over an :class:`AlphabetSpec`."""

    letters: tuple[int, ...]
    spec: AlphabetSpec

    def __post_init__(self) -> None:
        letters = tuple(int(l) for l in self.letters)
        if len(letters) != self.spec.n:
            raise ValueError(
                f"word has {len(letters)} letters, alphabet has {self.spec.n} positions"
            )
        for pos, (l, a) in enumerate(zip(letters, self.spec.sizes), start=1):
            if not 0 <= l < a:
                raise ValueError(
                    f"invalid letter {l} at position {pos}: alphabet size {a}"
                )
        object.__setattr__(self, "letters", letters)

    @property
    def index(self) -> int:
        """Packed mixed-radix index; equals the bit packing for binary words."""
        return self.spec.index_of(self.letters)

    @classmethod
    def from_index(cls, index: int, spec: AlphabetSpec) -> "Word":
        return cls(spec.letters_of(index), spec)

    @classmethod
    def parse(cls, text: str, spec: AlphabetSpec) -> "Word":
        if "," in text:
            letters = tuple(int(tok) for tok in text.split(","))
        else:
            if not spec.compact_text:
                raise ValueError(
                    f"alphabet {spec} needs comma-separated words, got {text!r}"
                )
            letters = tuple(int(ch) for ch in text)
        return cls(letters, spec)

    def __str__(self) -> str:
        if self.spec.compact_text:
            return "".join(str(l) for l in self.letters)
        return ",".join(str(l) for l in self.letters)

    def _cmp_key(self, other: "Word") -> tuple[tuple[int, ...], tuple[int, ...]]:
        if self.spec != other.spec:
            raise IncompatibleWordsError(
                f"incompatible words: alphabets {self.spec} and {other.spec} differ"
            )
        return self.letters, other.letters

    def __lt__(self, other: "Word") -> bool:
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other: "Word") -> bool:
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other: "Word") -> bool:
        a, b = self._cmp_key(other)
        return a > b

    def __ge__(self, other: "Word") -> bool:
        a, b = self._cmp_key(other)
        return a >= b


def require_same_spec(x: Word, y: Word) -> AlphabetSpec:
    if x.spec != y.spec:
        raise IncompatibleWordsError(
            f"incompatible words: alphabets {x.spec} and {y.spec} differ"
        )
    return x.spec


class WordSet:
    """A set of words over one alphabet, iterated in canonical order."""

    __slots__ = ("_members", "_index_set", "_spec")

    def __init__(self, members: Iterable[Word], spec: AlphabetSpec | None = None):
        seen: dict[tuple[int, ...], Word] = {}
        for w in members:
            if spec is None:
                spec = w.spec
            elif w.spec != spec:
                raise IncompatibleWordsError(
                    f"incompatible words: alphabets {spec} and {w.spec} differ"
                )
            seen[w.letters] = w
        if spec is None:
            raise ValueError("empty WordSet needs an explicit alphabet")
        self._spec = spec
        self._members = tuple(seen[k] for k in sorted(seen))
        self._index_set = frozenset(w.index for w in self._members)

    @property
    def spec(self) -> AlphabetSpec:
        return self._spec

    @property
    def members(self) -> tuple[Word, ...]:
        return self._members

    @property
    def indices(self) -> frozenset[int]:
        return self._index_set

    def to_text(self) -> list[str]:
        return [str(w) for w in self._members]

    def __iter__(self) -> Iterator[Word]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, w: object) -> bool:
        return isinstance(w, Word) and w.spec == self._spec and w.index in self._index_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordSet):
            return NotImplemented
        return self._members == other._members

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return f"WordSet({{{', '.join(self.to_text())}}})"


def hamming_distance(x: Word, y: Word) -> int:
    """Number of positions where two words differ."""
    require_same_spec(x, y)
    return sum(a != b for a, b in zip(x.letters, y.letters))


def interval(x: Word, y: Word) -> WordSet:
    """All words agreeing with x or y at every position; size 2**d(x, y)."""
    spec = require_same_spec(x, y)
    choices = [sorted({a, b}) for a, b in zip(x.letters, y.letters)]
    return WordSet((Word(ls, spec) for ls in product(*choices)), spec)


def phi(h: int, n: int) -> int:
    """Partial binomial sum: number of subsets of an n-set with at most h elements."""
    if h < 0 or n < 0:
        raise ValueError("phi requires h >= 0 and n >= 0")
    return sum(comb(n, i) for i in range(h + 1))
