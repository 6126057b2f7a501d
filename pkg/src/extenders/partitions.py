"""Boolean-interval partitionings: verification, statistics, and search.

A partitioning claims that a face family is a disjoint union of Boolean
intervals whose tops are maximal members.  Verification checks the claim
set by set; nothing is assumed about the family being closed under
subsets.  The searches are exhaustive backtracking with fully
lexicographic tie-breaking, so both witnesses and failure verdicts are
reproducible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .complexes import (
    ComplexOrFamily,
    Face,
    FaceFamily,
    SimplicialComplex,
    as_family,
    between,
    face_key,
    format_face,
    h_triangle,
    lex_key,
    maximal_faces,
    subsets_of,
)
from .errors import (
    InvalidParameters,
    InvalidPartitioning,
    NotAPermutation,
    NotASubcomplex,
    SizeLimitExceeded,
)

DEFAULT_MAX_MEMBERS = 40
DEFAULT_MAX_FACETS = 12


def _interval_label(bottom: Face, top: Face) -> str:
    return f"[{format_face(bottom)}, {format_face(top)}]"


@dataclass(frozen=True)
class IntervalPartition:
    """A sequence of (bottom, top) face pairs in canonical order."""

    intervals: tuple

    @classmethod
    def of(cls, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> "IntervalPartition":
        normalized = []
        for bottom, top in pairs:
            b, t = frozenset(bottom), frozenset(top)
            if not b <= t:
                raise InvalidParameters(
                    f"interval bottom {format_face(b)} is not contained in "
                    f"top {format_face(t)}")
            normalized.append((b, t))
        normalized.sort(key=lambda bt: (lex_key(bt[1]), lex_key(bt[0])))
        return cls(tuple(normalized))

    def __iter__(self) -> Iterator[tuple[Face, Face]]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def to_records(self) -> list[dict]:
        return [{"bottom": sorted(b), "top": sorted(t)} for b, t in self.intervals]

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> "IntervalPartition":
        return cls.of((rec["bottom"], rec["top"]) for rec in records)


@dataclass(frozen=True)
class PartitionReport:
    """Outcome of verifying a partitioning against a family."""

    valid: bool
    violation: Optional[str]
    interval_stats: tuple  # sorted ((top size, bottom size), count) pairs

    def stats(self) -> dict[tuple[int, int], int]:
        return dict(self.interval_stats)


def verify_partitioning(fam: ComplexOrFamily, p: IntervalPartition) -> PartitionReport:
    """Check that ``p`` partitions ``fam`` into Boolean intervals.

    Valid means: every set between each bottom and top is a member, the
    intervals are pairwise disjoint, their union is exactly the family,
    and every top is a maximal member.  Failures are reported, not raised.
    """
    fam = as_family(fam)
    members = fam.members
    stats = Counter((len(t), len(b)) for b, t in p)
    stats_out = tuple(sorted(stats.items()))

    def report(violation):
        return PartitionReport(False, violation, stats_out)

    by_size: dict[int, list[Face]] = {}
    for m in members:
        by_size.setdefault(len(m), []).append(m)
    bigger_sizes = sorted(by_size)

    covered = set()
    for b, t in p:
        if t not in members:
            return report(f"top of {_interval_label(b, t)} is not a member")
        for size in bigger_sizes:
            if size <= len(t):
                continue
            for m in by_size[size]:
                if t < m:
                    return report(
                        f"top of {_interval_label(b, t)} is not maximal: it is "
                        f"contained in {format_face(m)}")
        for s in between(b, t):
            if s not in members:
                return report(
                    f"interval {_interval_label(b, t)} requires "
                    f"{format_face(s)}, which is not a member")
            if s in covered:
                return report(f"face {format_face(s)} is covered twice")
            covered.add(s)
    if covered != members:
        missing = min(members - covered, key=face_key)
        return report(f"face {format_face(missing)} is not covered")
    return PartitionReport(True, None, stats_out)


def _require_valid(fam: FaceFamily, p: IntervalPartition) -> PartitionReport:
    report = verify_partitioning(fam, p)
    if not report.valid:
        raise InvalidPartitioning(report.violation)
    return report


def h_from_partitioning(fam: ComplexOrFamily, p: IntervalPartition) -> tuple[int, ...]:
    """Interval counts by bottom size; equals the h-vector for pure families."""
    fam = as_family(fam)
    _require_valid(fam, p)
    counts = [0] * (fam.ambient_dim + 2)
    for b, _ in p:
        counts[len(b)] += 1
    return tuple(counts)


def is_layer_compatible(fam: ComplexOrFamily, p: IntervalPartition) -> bool:
    """Whether every top-dimension layer of ``p`` partitions its own layer.

    For each r, the intervals whose tops have dimension at least r must be
    a valid partitioning of the members lying under a maximal member of
    dimension at least r.
    """
    fam = as_family(fam)
    _require_valid(fam, p)
    maximal = fam.maximal_members()
    for r in range(fam.ambient_dim + 1):
        big_tops = [m for m in maximal if len(m) - 1 >= r]
        layer = frozenset(
            s for s in fam.members if any(s <= t for t in big_tops))
        restriction = IntervalPartition.of(
            (b, t) for b, t in p if len(t) - 1 >= r)
        layer_fam = FaceFamily(layer, fam.ambient_dim)
        if not verify_partitioning(layer_fam, restriction).valid:
            return False
    return True


def is_h_compatible(fam: ComplexOrFamily, p: IntervalPartition) -> bool:
    """Whether interval counts by (top size, bottom size) match the h-triangle."""
    fam = as_family(fam)
    report = _require_valid(fam, p)
    counts = report.stats()
    triangle = h_triangle(fam)
    for i, row in enumerate(triangle):
        for j, expected in enumerate(row):
            if counts.get((i, j), 0) != expected:
                return False
    return True


def find_partitioning(
    fam: ComplexOrFamily,
    max_members: int = DEFAULT_MAX_MEMBERS,
) -> Optional[IntervalPartition]:
    """Exhaustive search for a partitioning; ``None`` proves none exists.

    One interval per maximal member, processed by decreasing dimension and
    then lexicographically; candidate bottoms are tried in lexicographic
    order, so the returned witness is deterministic.
    """
    fam = as_family(fam)
    members = fam.members
    if len(members) > max_members:
        raise SizeLimitExceeded(
            f"family has {len(members)} members, above the search bound of "
            f"{max_members}",
            limit=max_members, parameter="max_members")
    if not members:
        return IntervalPartition.of([])
    tops = sorted(fam.maximal_members(), key=lambda f: (-len(f), lex_key(f)))
    options = []
    for top in tops:
        choices = []
        for bottom in sorted(subsets_of(top), key=lex_key):
            cube = frozenset(between(bottom, top))
            if cube <= members:
                choices.append((bottom, cube))
        options.append(choices)
    # A member's deadline is the last top that can still cover it; once that
    # top is assigned, the member must already be covered.
    deadlines: dict[int, list[Face]] = {}
    for m in members:
        last = max(i for i, top in enumerate(tops) if m <= top)
        deadlines.setdefault(last, []).append(m)

    def walk(idx: int, covered: frozenset) -> Optional[list]:
        if idx == len(tops):
            return [] if covered == members else None
        for bottom, cube in options[idx]:
            if cube & covered:
                continue
            grown = covered | cube
            if all(m in grown for m in deadlines.get(idx, ())):
                rest = walk(idx + 1, grown)
                if rest is not None:
                    return [(bottom, tops[idx])] + rest
        return None

    solution = walk(0, frozenset())
    if solution is None:
        return None
    return IntervalPartition.of(solution)


def _relative_members(
    big: SimplicialComplex, small: Optional[SimplicialComplex]
) -> tuple[frozenset, frozenset]:
    small_faces = small.faces if small is not None else frozenset()
    if not small_faces <= big.faces:
        raise NotASubcomplex("the second complex is not a subcomplex of the first")
    return big.faces - small_faces, small_faces


def check_shelling_order(
    big: SimplicialComplex,
    order: Sequence[Iterable[int]],
    small: Optional[SimplicialComplex] = None,
) -> bool:
    """Whether ``order`` is a shelling of ``big`` relative to ``small``.

    Each step's new faces (the subsets of the next facet not generated by
    the earlier facets together with ``small``) must have a unique minimal
    element.  The first step is checked against ``small`` alone.
    """
    members, small_faces = _relative_members(big, small)
    expected = maximal_faces(members)
    ordered = [frozenset(f) for f in order]
    if len(ordered) != len(expected) or set(ordered) != expected:
        raise NotAPermutation(
            "order is not a permutation of the maximal members of the pair")
    closed = set(small_faces)
    for facet in ordered:
        step = {s for s in subsets_of(facet) if s not in closed}
        minimal = [s for s in step if not any(t < s for t in step)]
        if len(minimal) != 1:
            return False
        closed.update(subsets_of(facet))
    return True


def find_shelling(
    big: SimplicialComplex,
    small: Optional[SimplicialComplex] = None,
    max_facets: int = DEFAULT_MAX_FACETS,
) -> Optional[tuple[Face, ...]]:
    """Backtracking search for a shelling order; ``None`` proves none exists."""
    members, small_faces = _relative_members(big, small)
    facets = sorted(maximal_faces(members), key=lambda f: (-len(f), lex_key(f)))
    if len(facets) > max_facets:
        raise SizeLimitExceeded(
            f"pair has {len(facets)} facets, above the search bound of "
            f"{max_facets}",
            limit=max_facets, parameter="max_facets")

    def extend(prefix: list[Face], closed: frozenset) -> Optional[list[Face]]:
        if len(prefix) == len(facets):
            return prefix
        for facet in facets:
            if facet in prefix:
                continue
            step = {s for s in subsets_of(facet) if s not in closed}
            minimal = [s for s in step if not any(t < s for t in step)]
            if len(minimal) != 1:
                continue
            result = extend(prefix + [facet], closed | frozenset(subsets_of(facet)))
            if result is not None:
                return result
        return None

    found = extend([], frozenset(small_faces))
    return tuple(found) if found is not None else None
