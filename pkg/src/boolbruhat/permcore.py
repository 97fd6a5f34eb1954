"""Permutations of S_n in one-line notation, reduced words, support, booleanness.

One-line notation is the canonical representation throughout; reduced words
are derived views.  Words evaluate right-to-left: the word (i1, ..., il)
denotes the composite map sigma_{i1} o ... o sigma_{il}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Literal

DEFAULT_WORD_LENGTH_GUARD = 16
DEFAULT_WORD_COUNT_CAP = 10**6


class DegreeMismatchError(ValueError):
    """Operands live in symmetric groups of different degrees."""


class WordCapExceededError(RuntimeError):
    """Reduced-word enumeration exceeded the configured guard or cap."""


class NotReducedError(ValueError):
    """A word failed the reducedness invariant."""


class Permutation:
    """An element of S_n, stored as the tuple (w(1), ..., w(n))."""

    __slots__ = ("images", "length", "_hash")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if n < 1 or sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [1,{n}]: {images!r}")
        object.__setattr__(self, "images", images)
        inv = 0
        for i in range(n):
            for j in range(i + 1, n):
                if images[i] > images[j]:
                    inv += 1
        object.__setattr__(self, "length", inv)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The adjacent transposition sigma_i = (i, i+1) in S_n."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @classmethod
    def from_word(cls, letters, n: int) -> "Permutation":
        """Evaluate a word of generator indices (not necessarily reduced)."""
        images = list(range(1, n + 1))
        # right-to-left: apply sigma_{letters[-1]} first, i.e. build by
        # successive right multiplications of the prefix.
        for i in letters:
            if not 1 <= i <= n - 1:
                raise ValueError(f"generator index {i} out of range for S_{n}")
            images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise DegreeMismatchError(f"degrees {self.n} and {other.n} differ")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            images[v - 1] = i
        return Permutation(images)

    def right_simple(self, i: int) -> "Permutation":
        """Fast w * sigma_i (swap positions i, i+1)."""
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(images)

    def left_simple(self, i: int) -> "Permutation":
        """Fast sigma_i * w (swap values i, i+1)."""
        images = list(self.images)
        a, b = images.index(i), images.index(i + 1)
        images[a], images[b] = images[b], images[a]
        return Permutation(images)

    def is_identity(self) -> bool:
        return self.length == 0

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({format_permutation(self)!r})"


@dataclass(frozen=True)
class ReducedWord:
    """A reduced word: generator indices whose evaluation has matching length."""

    letters: tuple[int, ...]
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        w = Permutation.from_word(self.letters, self.degree)
        if w.length != len(self.letters):
            raise NotReducedError(f"word {self.letters} is not reduced in S_{self.degree}")

    def permutation(self) -> Permutation:
        return Permutation.from_word(self.letters, self.degree)

    def __len__(self):
        return len(self.letters)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a o b)(i) = a(b(i))."""
    return a * b


def length(w: Permutation) -> int:
    """Number of inversions; equals the letter count of any reduced word."""
    return w.length


def support(w: Permutation) -> frozenset[int]:
    """Generator indices appearing in reduced words of w.

    Computed from one-line notation: k is in the support iff the prefix
    {w(1), ..., w(k)} differs from {1, ..., k}.
    """
    members = set()
    seen_max = 0
    for k in range(1, w.n):
        seen_max = max(seen_max, w.images[k - 1])
        if seen_max != k:
            members.add(k)
    return frozenset(members)


def descents(w: Permutation, side: Literal["left", "right"] = "right") -> frozenset[int]:
    """Right descents {i : w(i) > w(i+1)}; left descents are those of w^-1."""
    if side == "left":
        w = w.inverse()
    elif side != "right":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return frozenset(i for i in range(1, w.n) if w.images[i - 1] > w.images[i])


def _word_iter(w: Permutation) -> Iterator[tuple[int, ...]]:
    if w.is_identity():
        yield ()
        return
    for i in sorted(descents(w, "left")):
        for rest in _word_iter(w.left_simple(i)):
            yield (i,) + rest


def enumerate_reduced_words(
    w: Permutation,
    cap: int = DEFAULT_WORD_COUNT_CAP,
    length_guard: int = DEFAULT_WORD_LENGTH_GUARD,
) -> frozenset[ReducedWord]:
    """All reduced words of w, via descent recursion.

    Raises WordCapExceededError if the length guard or count cap is hit;
    never truncates silently.
    """
    if w.length > length_guard:
        raise WordCapExceededError(
            f"length {w.length} exceeds enumeration guard {length_guard}"
        )
    words = []
    for letters in _word_iter(w):
        words.append(letters)
        if len(words) > cap:
            raise WordCapExceededError(f"more than {cap} reduced words")
    return frozenset(ReducedWord(letters, w.n) for letters in words)


def canonical_reduced_word(w: Permutation) -> ReducedWord:
    """The lexicographically smallest reduced word of w.

    Greedily strips the smallest left descent; the first letters of reduced
    words are exactly the left descents, so the greedy choice is lex-minimal.
    """
    letters = []
    u = w
    while not u.is_identity():
        i = min(descents(u, "left"))
        letters.append(i)
        u = u.left_simple(i)
    return ReducedWord(tuple(letters), w.n)


def pattern_contains(w: Permutation, p: Permutation) -> bool:
    """True iff some subsequence of w is order-isomorphic to p."""
    if p.n > w.n:
        return False
    pat = p.images
    rel = [(i, j) for i, j in combinations(range(p.n), 2)]
    for positions in combinations(range(w.n), p.n):
        vals = [w.images[q] for q in positions]
        if all((vals[i] < vals[j]) == (pat[i] < pat[j]) for i, j in rel):
            return True
    return False


def is_boolean(w: Permutation) -> bool:
    """True iff the principal Bruhat ideal of w is a boolean lattice.

    Primary check: length equals support size.
    """
    return w.length == len(support(w))


def is_boolean_by_patterns(w: Permutation) -> bool:
    """Oracle: booleanness as avoidance of the patterns 321 and 3412."""
    return not pattern_contains(w, Permutation((3, 2, 1))) and not pattern_contains(
        w, Permutation((3, 4, 1, 2))
    )


def is_boolean_by_words(w: Permutation, cap: int = DEFAULT_WORD_COUNT_CAP) -> bool:
    """Oracle: booleanness as absence of repeated letters in reduced words."""
    return all(
        len(set(rw.letters)) == len(rw.letters) for rw in enumerate_reduced_words(w, cap)
    )


def parse_permutation(text: str) -> Permutation:
    """Parse comma-separated one-line notation; entries may be parenthesized."""
    entries = []
    for chunk in text.split(","):
        chunk = chunk.strip().strip("()")
        if not chunk:
            raise ValueError(f"empty entry in permutation text {text!r}")
        entries.append(int(chunk))
    return Permutation(entries)


def format_permutation(w: Permutation) -> str:
    return ",".join(str(v) for v in w.images)


def parse_reduced_word(text: str, n: int) -> ReducedWord:
    """Parse a space-separated reduced word; validates reducedness."""
    letters = tuple(int(tok) for tok in text.split())
    return ReducedWord(letters, n)


def format_reduced_word(s: ReducedWord) -> str:
    return " ".join(str(i) for i in s.letters)


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n, sorted by (length, one-line notation)."""
    from itertools import permutations as _perms

    out = [Permutation(p) for p in _perms(range(1, n + 1))]
    out.sort(key=lambda w: (w.length, w.images))
    return out


def boolean_permutations(n: int) -> list[Permutation]:
    """All boolean elements of S_n, sorted by (length, one-line notation)."""
    return [w for w in all_permutations(n) if is_boolean(w)]
