"""Intersections B(v) /\\ B(w) for boolean v, without enumerating either ideal.

Orientation of consecutive generators is read off one-line notation; the
obstruction runs and maximal selfish subsets then give the maximal elements
of the intersection in closed form.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .bruhat import RunWord, run_word_leq
from .permcore import (
    Permutation,
    canonical_reduced_word,
    is_boolean,
    support,
)


class Orientation(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    INTERLACED = "interlaced"


@dataclass(frozen=True)
class SelfishFamily:
    """All inclusion-maximal selfish subsets of a finite universe."""

    universe: tuple[int, ...]
    members: frozenset[frozenset[int]]


@dataclass(frozen=True)
class ObstructionSet:
    """Minimal run subwords of v's word not below w, plus mismatched letters."""

    minimal_runs: frozenset[RunWord]
    mismatched_letters: frozenset[int]
    all_j_equal_1: bool


def orientation(w: Permutation, k: int) -> Orientation:
    """Relative order of the letters k, k+1 across reduced words of w,
    decided from one-line notation alone."""
    supp = support(w)
    if k not in supp or k + 1 not in supp:
        raise ValueError(f"{{{k},{k + 1}}} not contained in the support of w")
    n = w.n
    img = w.images
    inv = w.inverse().images

    prefix = set(img[:k])
    increasing = False
    if prefix < set(range(1, k + 2)):
        (x,) = set(range(1, k + 2)) - prefix
        increasing = x < k + 1 and inv[x - 1] > k + 1

    suffix = set(img[k + 1 :])
    decreasing = False
    if suffix < set(range(k + 1, n + 1)):
        (y,) = set(range(k + 1, n + 1)) - suffix
        decreasing = y > k + 1 and inv[y - 1] < k + 1

    interlaced = any(img[i] > k + 1 for i in range(k)) and any(
        img[j] < k + 1 for j in range(k + 1, n)
    )

    hits = [
        o
        for o, hit in [
            (Orientation.INCREASING, increasing),
            (Orientation.DECREASING, decreasing),
            (Orientation.INTERLACED, interlaced),
        ]
        if hit
    ]
    if len(hits) != 1:
        raise AssertionError(f"orientation trichotomy violated for w={w}, k={k}: {hits}")
    return hits[0]


def orientations_match(v: Permutation, w: Permutation, k: int) -> bool:
    """Orientations match unless one is increasing and the other decreasing."""
    ov, ow = orientation(v, k), orientation(w, k)
    return {ov, ow} != {Orientation.INCREASING, Orientation.DECREASING}


def _maximal_selfish_interval(size: int) -> list[frozenset[int]]:
    """Maximal selfish subsets of [1, size], by the two-step recursion."""
    if size == 0:
        return [frozenset()]
    table: list[list[frozenset[int]]] = [
        [],
        [frozenset({1})],
        [frozenset({1}), frozenset({2})],
        [frozenset({1, 3}), frozenset({2})],
    ]
    for k in range(4, size + 1):
        with_k = [x | {k} for x in table[k - 2]]
        with_k_minus_1 = [x | {k - 1} for x in table[k - 3]]
        table.append(with_k + with_k_minus_1)
    return table[size]


def selfish_count(k: int) -> int:
    """|Q_k| via the Padovan-type recursion with seeds 1, 2, 2."""
    if k < 1:
        raise ValueError("k must be positive")
    counts = [1, 2, 2]
    while len(counts) < k:
        counts.append(counts[-2] + counts[-3])
    return counts[k - 1]


def interval_components(universe) -> list[tuple[int, ...]]:
    """Decompose a set of integers into maximal intervals of consecutive values."""
    values = sorted(universe)
    comps: list[tuple[int, ...]] = []
    cur: list[int] = []
    for x in values:
        if cur and x != cur[-1] + 1:
            comps.append(tuple(cur))
            cur = []
        cur.append(x)
    if cur:
        comps.append(tuple(cur))
    return comps


def maximal_selfish(universe) -> SelfishFamily:
    """All maximal selfish subsets: products over interval components."""
    universe = tuple(sorted(universe))
    comps = interval_components(universe)
    per_comp = []
    for comp in comps:
        lo = comp[0]
        per_comp.append(
            [frozenset(lo - 1 + i for i in x) for x in _maximal_selfish_interval(len(comp))]
        )
    members = [
        frozenset().union(*choice) if choice else frozenset()
        for choice in product(*per_comp)
    ]
    return SelfishFamily(universe, frozenset(members))


def support_components(v: Permutation) -> list[frozenset[int]]:
    """Maximal interval components of supp(v); the ideal B(v) factors over them."""
    if not is_boolean(v):
        raise ValueError("support_components requires a boolean permutation")
    return [frozenset(c) for c in interval_components(support(v))]


def _run_candidates(v: Permutation) -> list[RunWord]:
    """Directed run subwords of the canonical reduced word of v.

    v is boolean, so each letter occurs once and a run [i..i+j] is a subword
    exactly when its letters appear monotonically positioned.
    """
    s = canonical_reduced_word(v).letters
    pos = {letter: idx for idx, letter in enumerate(s)}
    out = []
    for i in pos:
        out.append(RunWord(i, 0, "increasing"))
        for direction in ("increasing", "decreasing"):
            j = 1
            while i + j in pos:
                seq = [pos[i + t] for t in range(j + 1)]
                if direction == "decreasing":
                    seq.reverse()
                if all(a < b for a, b in zip(seq, seq[1:])):
                    out.append(RunWord(i, j, direction))
                    j += 1
                else:
                    break
    return out


def _sub_runs(r: RunWord) -> tuple[RunWord, RunWord]:
    """The two one-step-shorter runs of r (drop last letter, drop first)."""
    if r.direction == "increasing":
        return RunWord(r.start, r.span - 1, "increasing"), RunWord(
            r.start + 1, r.span - 1, "increasing"
        )
    return RunWord(r.start, r.span - 1, "decreasing"), RunWord(
        r.start + 1, r.span - 1, "decreasing"
    )


def obstructions(v: Permutation, w: Permutation) -> ObstructionSet:
    """Minimal run subwords of v's word that fail to lie below w."""
    if not is_boolean(v):
        raise ValueError("obstructions requires boolean v")
    minimal = []
    for r in _run_candidates(v):
        if run_word_leq(r, w):
            continue
        if r.span == 0:
            minimal.append(r)
            continue
        lo, hi = _sub_runs(r)
        if run_word_leq(lo, w) and run_word_leq(hi, w):
            minimal.append(r)

    common = support(v) & support(w)
    mismatched = set()
    for k in sorted(common):
        if k + 1 in common and not orientations_match(v, w, k):
            mismatched.update((k, k + 1))

    return ObstructionSet(
        minimal_runs=frozenset(minimal),
        mismatched_letters=frozenset(mismatched),
        all_j_equal_1=all(r.span <= 1 for r in minimal),
    )


def subword_element(v: Permutation, letters) -> Permutation:
    """The element of B(v) supported on the given letters (v boolean)."""
    s = canonical_reduced_word(v).letters
    keep = frozenset(letters)
    return Permutation.from_word([i for i in s if i in keep], v.n)


def _pair_chains(pairs) -> list[tuple[int, ...]]:
    """Group conflicting pairs {k, k+1} into maximal chains of consecutive
    pairs; each chain covers an integer interval."""
    starts = sorted(min(p) for p in pairs)
    chains: list[list[int]] = []
    for a in starts:
        if chains and a <= chains[-1][-1]:
            chains[-1].append(a + 1)
        else:
            chains.append([a, a + 1])
    return [tuple(c) for c in chains]


def intersection_maximal_closed_form(
    v: Permutation, w: Permutation
) -> list[Permutation]:
    """Maximal elements of B(v) /\\ B(w), built without ideal enumeration.

    When every obstruction run has at most two letters, the answer is a
    fixed base of unobstructed letters together with one maximal selfish
    choice per chain of conflicting pairs.  Conflicting pairs need not tile
    one interval, so each chain gets its own selfish family.
    """
    if not is_boolean(v):
        raise ValueError("closed form requires boolean v")
    obs = obstructions(v, w)
    supports: set[frozenset[int]]
    if obs.all_j_equal_1:
        pairs = [r.letter_set for r in obs.minimal_runs if r.span == 1]
        conflicted = frozenset().union(*pairs) if pairs else frozenset()
        base = (support(v) & support(w)) - conflicted
        per_chain = []
        for chain in _pair_chains(pairs):
            lo = chain[0]
            per_chain.append(
                [
                    frozenset(lo - 1 + i for i in x)
                    for x in _maximal_selfish_interval(len(chain))
                ]
            )
        supports = {
            base | frozenset().union(*choice) if choice else base
            for choice in product(*per_chain)
        }
    else:
        forbidden = [r.letter_set for r in obs.minimal_runs]
        admissible = [
            subset
            for subset in _all_subsets(support(v))
            if not any(f <= subset for f in forbidden)
        ]
        supports = {
            t for t in admissible if not any(t < other for other in admissible)
        }
    out = [subword_element(v, t) for t in supports]
    out.sort(key=lambda x: x.images)
    return out


def _all_subsets(universe) -> list[frozenset[int]]:
    values = sorted(universe)
    out = []
    for mask in range(1 << len(values)):
        out.append(frozenset(v for i, v in enumerate(values) if mask >> i & 1))
    return out
