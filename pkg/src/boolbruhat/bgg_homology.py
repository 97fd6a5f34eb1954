"""Signed cover complexes on the Bruhat order and grades of simple modules.

The differential raises length by one along cover relations with coefficients
+-1 chosen so that every length-2 interval (a diamond, with exactly two middle
elements) has edge-sign product -1; that condition is exactly d o d = 0.
Restricting to B(w) /\\ B(u) and minimizing the first nonzero homology
position over u yields the grade of the simple module attached to w.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache

from .bruhat import bruhat_leq, down_covers, intersect_ideals
from .permcore import (
    Permutation,
    all_permutations,
    descents,
    format_permutation,
    support,
)
from .boolean_intersect import interval_components
from .rs_afunction import a_function

DEFAULT_DEGREE_CAP = 7


class DegreeCapExceededError(RuntimeError):
    """Requested degree is above the configured cap."""


@dataclass(frozen=True, eq=False)
class SignAssignment:
    """A map from cover pairs (x, y), y covering x, to {+1, -1} satisfying
    the diamond condition on every length-2 interval of S_n."""

    degree: int
    sign: dict[tuple[Permutation, Permutation], int]

    def sign_of(self, x: Permutation, y: Permutation) -> int:
        return self.sign[(x, y)]


@dataclass(frozen=True, eq=False)
class RestrictedComplex:
    """Integer chain complex on a convex subset of the Bruhat order.

    Position -i holds the elements x with top_length - l(x) = i; the matrix
    at index i sends position -i to -i+1 (rows indexed by the higher rank).
    """

    degree: int
    top_length: int
    dims: tuple[int, ...]
    matrices: tuple[tuple[tuple[int, ...], ...], ...]

    def positions(self) -> range:
        return range(self.top_length + 1)


@dataclass(frozen=True)
class GradeReport:
    w: Permutation
    grade: int
    witness_u: Permutation


def _sorted_perms(perms) -> list[Permutation]:
    return sorted(perms, key=lambda x: (x.length, x.images))


@lru_cache(maxsize=8)
def build_sign_assignment(
    n: int, cap: int = DEFAULT_DEGREE_CAP, flip_roots: bool = False
) -> SignAssignment:
    """Assign +-1 to every cover of S_n, rank by rank.

    Within a rank, the diamond conditions couple the down-edges of each top
    element z through already-fixed lower edges; each coupling component is
    solved by breadth-first parity propagation from its smallest member.
    flip_roots starts every component at -1 instead, producing a second
    valid assignment for invariance tests.
    """
    if n > cap:
        raise DegreeCapExceededError(f"degree {n} exceeds cap {cap}")
    root = -1 if flip_roots else 1
    sign: dict[tuple[Permutation, Permutation], int] = {}
    by_length: dict[int, list[Permutation]] = {}
    for x in all_permutations(n):
        by_length.setdefault(x.length, []).append(x)

    for l in range(1, max(by_length) + 1):
        for z in by_length[l]:
            down = _sorted_perms(down_covers(z))
            if l == 1:
                sign[(down[0], z)] = root
                continue
            lower = {y: _sorted_perms(down_covers(y)) for y in down}
            constraints: dict[Permutation, list[tuple[Permutation, int]]] = {
                y: [] for y in down
            }
            for a in range(len(down)):
                for b in range(a + 1, len(down)):
                    y1, y2 = down[a], down[b]
                    for x in lower[y1]:
                        if x in lower[y2]:
                            parity = -sign[(x, y1)] * sign[(x, y2)]
                            constraints[y1].append((y2, parity))
                            constraints[y2].append((y1, parity))
            value: dict[Permutation, int] = {}
            for y in down:
                if y in value:
                    continue
                value[y] = root
                queue = [y]
                while queue:
                    cur = queue.pop()
                    for other, parity in constraints[cur]:
                        want = value[cur] * parity
                        if other not in value:
                            value[other] = want
                            queue.append(other)
                        elif value[other] != want:
                            raise AssertionError(
                                f"inconsistent diamond system below {z!r}"
                            )
            for y in down:
                sign[(y, z)] = value[y]
    return SignAssignment(n, sign)


def diamond_violations(signs: SignAssignment) -> list[tuple[Permutation, Permutation]]:
    """Length-2 intervals [x, z] whose four edge signs do not multiply to -1."""
    bad = []
    for z in all_permutations(signs.degree):
        if z.length < 2:
            continue
        down = _sorted_perms(down_covers(z))
        for a in range(len(down)):
            for b in range(a + 1, len(down)):
                y1, y2 = down[a], down[b]
                for x in down_covers(y1):
                    if x in down_covers(y2):
                        p = (
                            signs.sign[(x, y1)]
                            * signs.sign[(y1, z)]
                            * signs.sign[(x, y2)]
                            * signs.sign[(y2, z)]
                        )
                        if p != -1:
                            bad.append((x, z))
    return bad


def build_complex(
    elements, top_length: int, signs: SignAssignment
) -> RestrictedComplex:
    """Chain complex on any convex element set, graded by top_length - l(x)."""
    elements = set(elements)
    degree = next(iter(elements)).n
    basis: list[list[Permutation]] = [[] for _ in range(top_length + 1)]
    for x in elements:
        basis[top_length - x.length].append(x)
    for row in basis:
        row.sort(key=lambda x: x.images)
    matrices = []
    for i in range(top_length + 1):
        sources = basis[i]
        targets = basis[i - 1] if i >= 1 else []
        index = {y: r for r, y in enumerate(targets)}
        rows = [[0] * len(sources) for _ in targets]
        if i >= 1:
            for c, x in enumerate(sources):
                for y in _up_in(x, elements):
                    rows[index[y]][c] = signs.sign[(x, y)]
        matrices.append(tuple(tuple(r) for r in rows))
    return RestrictedComplex(
        degree,
        top_length,
        tuple(len(b) for b in basis),
        tuple(matrices),
    )


def _up_in(x: Permutation, elements: set[Permutation]) -> list[Permutation]:
    n = x.n
    img = x.images
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if img[i] < img[j] and not any(
                img[i] < img[k] < img[j] for k in range(i + 1, j)
            ):
                images = list(img)
                images[i], images[j] = images[j], images[i]
                y = Permutation(images)
                if y in elements:
                    out.append(y)
    return out


def restricted_complex(
    w: Permutation, u: Permutation, signs: SignAssignment
) -> RestrictedComplex:
    """The signed cover complex on B(w) /\\ B(u), with w at position 0."""
    ideal = intersect_ideals(w, u)
    return build_complex(ideal.elements, w.length, signs)


def integer_rank(rows) -> int:
    """Exact rank over the rationals by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) // prev
            m[i][c] = 0
        prev = m[rank][c]
        rank += 1
        if rank == nr:
            break
    return rank


def homology_ranks(c: RestrictedComplex) -> dict[int, int]:
    """Map position -i to the dimension of homology there."""
    ranks = [integer_rank(m) for m in c.matrices] + [0]
    out = {}
    for i in range(c.top_length + 1):
        out[-i] = c.dims[i] - ranks[i] - ranks[i + 1]
    return out


def is_exact(c: RestrictedComplex) -> bool:
    return all(h == 0 for h in homology_ranks(c).values())


def differential_squares_to_zero(c: RestrictedComplex) -> bool:
    for i in range(1, c.top_length):
        lo, hi = c.matrices[i + 1], c.matrices[i]
        if not lo or not hi:
            continue
        for r in range(len(hi)):
            for col in range(len(lo[0]) if lo else 0):
                if sum(hi[r][k] * lo[k][col] for k in range(len(lo))):
                    return False
    return True


def _first_nonzero_position(
    w: Permutation, u: Permutation, signs: SignAssignment, stop_at: int
) -> int | None:
    """Smallest i < stop_at with nonzero homology at -i of the restricted
    complex, scanning from position 0 and computing ranks lazily."""
    c = restricted_complex(w, u, signs)
    prev_rank = 0
    for i in range(min(stop_at, c.top_length + 1)):
        nxt_rank = integer_rank(c.matrices[i + 1]) if i + 1 <= c.top_length else 0
        if c.dims[i] - prev_rank - nxt_rank > 0:
            return i
        prev_rank = nxt_rank
    return None


def grade(
    w: Permutation, signs: SignAssignment, record: dict | None = None
) -> GradeReport:
    """Minimum over u of the first nonzero homology position of the complex
    on B(w) /\\ B(u).

    u comparable with w is skipped (exact complex) except the identity, which
    supplies the l(w) baseline; u sharing a left or right descent with w is
    skipped for the same reason.
    """
    n = w.n
    e = Permutation.identity(n)
    if w == e:
        return GradeReport(w, 0, e)
    best = w.length
    witness = e
    wl, wr = descents(w, "left"), descents(w, "right")
    for u in all_permutations(n):
        if best == 1:
            break
        if u == e or bruhat_leq(u, w) or bruhat_leq(w, u):
            continue
        if wl & descents(u, "left") or wr & descents(u, "right"):
            continue
        i = _first_nonzero_position(w, u, signs, best)
        if i is not None and i < best:
            best, witness = i, u
        if record is not None and i is not None:
            record[u] = i
    return GradeReport(w, best, witness)


def grade_of_parabolic_longest(mu, n: int, signs: SignAssignment) -> GradeReport:
    from .rs_afunction import longest_parabolic_element

    w = longest_parabolic_element(mu, n)
    report = grade(w, signs)
    assert report.grade == w.length
    return report


def is_longest_parabolic_element(w: Permutation) -> bool:
    """Whether w is the longest element of the standard parabolic subgroup
    generated by its own support: blockwise order reversal on the interval
    components of supp(w)."""
    images = list(range(1, w.n + 1))
    for comp in interval_components(support(w)):
        lo, hi = comp[0], comp[-1] + 1
        images[lo - 1 : hi] = range(hi, lo - 1, -1)
    return w.images == tuple(images)


def is_perfect(w: Permutation, signs: SignAssignment) -> bool:
    """Grade equals projective dimension, which is l(w)."""
    return grade(w, signs).grade == w.length


def grade_table(n: int, signs: SignAssignment) -> list[dict]:
    rows = []
    for w in all_permutations(n):
        report = grade(w, signs)
        rows.append(
            {
                "w": format_permutation(w),
                "length": w.length,
                "a": a_function(w),
                "grade": report.grade,
                "perfect": report.grade == w.length,
                "witness_u": format_permutation(report.witness_u),
            }
        )
    return rows


def grade_table_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=["w", "length", "a", "grade", "perfect", "witness_u"]
    )
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def grade_report_json(report: GradeReport) -> str:
    return json.dumps(
        {
            "w": format_permutation(report.w),
            "grade": report.grade,
            "witness_u": format_permutation(report.witness_u),
            "a_value": a_function(report.w),
            "perfect": report.grade == report.w.length,
        },
        indent=2,
    )
