"""Partition extenders and their interval certificates.

The seed construction joins two d-simplices along a shared k-face and
bridges them with facets that slide a window of consecutive labels across
the non-shared vertices; the off-facet part of that complex, with the
shared face adjoined, carries an explicit interval partitioning.  The
recursive construction repairs the missing partitioning of the off-facet
part by gluing smaller extenders onto every face strictly between the
shared face and its interval top, swapping certificate pieces as it goes.

Whole-complex extenders attach one such gadget per face of the base
complex, yielding a same-dimension supercomplex together with interval
partitionings of both the supercomplex and the relative family, verified
before anything is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional

from .complexes import (
    Face,
    FaceFamily,
    SimplicialComplex,
    adjoin_face,
    build_complex,
    f_vector,
    face_key,
    facet_depth,
    format_face,
    h_triangle,
    h_vector,
    lex_key,
    maximal_faces,
    relative_family,
    subsets_of,
)
from .errors import (
    InternalCheckError,
    InvalidParameters,
    InvalidResult,
    NotPure,
    VoidComplex,
)
from .partitions import (
    IntervalPartition,
    is_h_compatible,
    is_layer_compatible,
    verify_partitioning,
)


@dataclass(frozen=True)
class PieceAttachment:
    """One glued gadget: where it went and what it contributed."""

    face: Face
    attachment_facet: Face
    fresh_vertices: tuple
    with_face_intervals: IntervalPartition
    without_face_intervals: IntervalPartition


@dataclass(frozen=True)
class MarkedComplex:
    """A pure complex with a specified facet, a specified face inside it,
    and interval certificates for the off-facet family with and (when
    available) without the specified face adjoined."""

    complex: SimplicialComplex
    specified_facet: Face
    specified_face: Face
    with_face_partition: IntervalPartition
    without_face_partition: Optional[IntervalPartition]
    attachments: tuple = ()

    def family_without_face(self) -> FaceFamily:
        return relative_family(self.complex, build_complex([self.specified_facet]))

    def family_with_face(self) -> FaceFamily:
        return adjoin_face(self.family_without_face(), self.specified_face)


@dataclass(frozen=True)
class ExtenderResult:
    """A verified partition extender for a whole complex."""

    extender: SimplicialComplex
    base: SimplicialComplex
    extender_partition: IntervalPartition
    relative_partition: IntervalPartition
    attachment_log: tuple


def _ensure_valid(fam: FaceFamily, partition: IntervalPartition, what: str) -> None:
    report = verify_partitioning(fam, partition)
    if not report.valid:
        raise InternalCheckError(f"{what}: {report.violation}")


def _check_range(d: int, k: int) -> None:
    if not -1 <= k <= d:
        raise InvalidParameters(
            f"need -1 <= k <= d, got k={k}, d={d}")


@lru_cache(maxsize=None)
def _prepartition(d: int, k: int) -> MarkedComplex:
    # Vertex blocks: 1..d-k private to the first cell, d-k+1..2d-2k private
    # to the second, 2d-2k+1..2d-k+1 shared.
    private = d - k
    core = frozenset(range(2 * private + 1, 2 * private + k + 2))
    first_cell = frozenset(range(1, private + 1)) | core
    second_cell = frozenset(range(private + 1, 2 * private + 1)) | core

    def window(j):
        return frozenset(range(j + 1, j + private + 2))

    facets = {first_cell, second_cell}
    for j in range(private):
        for i in core:
            facets.add(window(j) | (core - {i}))
    complex_ = build_complex(facets)

    intervals = [(core, first_cell)]
    for i in sorted(core):
        below = frozenset(v for v in core if v < i)
        for j in range(private):
            intervals.append((frozenset([j + 1]) | below, window(j) | (core - {i})))
    with_part = IntervalPartition.of(intervals)
    marked = MarkedComplex(complex_, second_cell, core, with_part, None)
    _ensure_valid(marked.family_with_face(), with_part,
                  f"seed certificate for (d={d}, k={k})")
    return marked


def prepartition_extender(d: int, k: int) -> MarkedComplex:
    """The canonical seed complex whose off-facet family, with the shared
    face adjoined, carries an explicit interval partitioning.

    ``k == d`` degenerates to a single d-simplex and ``k == -1`` to two
    disjoint d-simplices.
    """
    _check_range(d, k)
    return _prepartition(d, k)


def prepartition_h_profile(d: int, k: int) -> tuple[int, ...]:
    """Interval counts of the seed certificate, by bottom size."""
    if not 0 <= k <= d:
        raise InvalidParameters(f"need 0 <= k <= d, got k={k}, d={d}")
    marked = _prepartition(d, k)
    counts = [0] * (d + 2)
    for bottom, _ in marked.with_face_partition:
        counts[len(bottom)] += 1
    return tuple(counts)


def _map_face(face: Face, mapping: dict[int, int]) -> Face:
    return frozenset(mapping[v] for v in face)


def _map_partition(p: IntervalPartition, mapping: dict[int, int]) -> IntervalPartition:
    return IntervalPartition.of(
        (_map_face(b, mapping), _map_face(t, mapping)) for b, t in p)


def _attach(
    host: SimplicialComplex,
    guest: SimplicialComplex,
    guest_facet: Face,
    guest_face: Face,
    host_facet: Face,
    host_face: Face,
) -> tuple[dict[int, int], tuple, SimplicialComplex]:
    """Glue ``guest`` onto ``host``, sending guest_facet onto host_facet so
    that guest_face lands on host_face; both identifications are
    order-preserving on sorted labels and all other guest vertices get
    fresh labels in increasing guest order."""
    mapping = dict(zip(sorted(guest_face), sorted(host_face)))
    mapping.update(zip(sorted(guest_facet - guest_face),
                       sorted(host_facet - host_face)))
    next_label = max(host.vertices, default=-1) + 1
    fresh = []
    for gv in sorted(guest.vertices - set(mapping)):
        mapping[gv] = next_label
        fresh.append(next_label)
        next_label += 1
    faces = host.faces | {_map_face(f, mapping) for f in guest.faces}
    facets = maximal_faces(
        host.facets | {_map_face(f, mapping) for f in guest.facets})
    combined = SimplicialComplex(frozenset(facets), frozenset(faces))
    return mapping, tuple(fresh), combined


@lru_cache(maxsize=None)
def _partition_extender(d: int, k: int) -> MarkedComplex:
    if k == d:
        whole = frozenset(range(1, d + 2))
        marked = MarkedComplex(
            build_complex([whole]), whole, whole,
            IntervalPartition.of([(whole, whole)]),
            IntervalPartition.of([]))
        _ensure_valid(marked.family_with_face(), marked.with_face_partition,
                      f"base certificate for (d={d}, k={k})")
        return marked

    seed = _prepartition(d, k)
    sigma = seed.specified_face
    anchor = next(t for b, t in seed.with_face_partition if b <= sigma <= t)
    complex_ = seed.complex
    with_parts = list(seed.with_face_partition)
    without_parts = [iv for iv in seed.with_face_partition
                     if iv != (sigma, anchor)]
    attachments = []
    for tau in sorted((t for t in subsets_of(anchor) if sigma < t), key=face_key):
        piece = _partition_extender(d, len(tau) - 1)
        mapping, fresh, complex_ = _attach(
            complex_, piece.complex,
            piece.specified_facet, piece.specified_face, anchor, tau)
        mapped_with = _map_partition(piece.with_face_partition, mapping)
        mapped_without = _map_partition(piece.without_face_partition, mapping)
        with_parts.extend(mapped_without)
        without_parts.extend(mapped_with)
        attachments.append(
            PieceAttachment(tau, anchor, fresh, mapped_with, mapped_without))
    marked = MarkedComplex(
        complex_, seed.specified_facet, sigma,
        IntervalPartition.of(with_parts),
        IntervalPartition.of(without_parts),
        tuple(attachments))
    _ensure_valid(marked.family_with_face(), marked.with_face_partition,
                  f"adjoined certificate for (d={d}, k={k})")
    _ensure_valid(marked.family_without_face(), marked.without_face_partition,
                  f"off-facet certificate for (d={d}, k={k})")
    return marked


def partition_extender(d: int, k: int) -> MarkedComplex:
    """A marked complex whose off-facet family is partitionable both with
    and without the specified face, built recursively from the seed."""
    _check_range(d, k)
    return _partition_extender(d, k)


def _attachment_dim(base: SimplicialComplex, sigma: Face, pure: bool) -> int:
    return base.dim if pure else facet_depth(base, sigma)


def _assemble(base: SimplicialComplex, pure: bool) -> ExtenderResult:
    current = base
    gamma_parts: list = []
    relative_parts: list = []
    log = []
    for sigma in base.sorted_faces():
        k = len(sigma) - 1
        piece_dim = _attachment_dim(base, sigma, pure)
        piece = _partition_extender(piece_dim, k)
        targets = [f for f in base.facets
                   if sigma <= f and len(f) == piece_dim + 1]
        target = min(targets, key=lex_key)
        mapping, fresh, current = _attach(
            current, piece.complex,
            piece.specified_facet, piece.specified_face, target, sigma)
        mapped_with = _map_partition(piece.with_face_partition, mapping)
        mapped_without = _map_partition(piece.without_face_partition, mapping)
        gamma_parts.extend(mapped_with)
        relative_parts.extend(mapped_without)
        log.append(PieceAttachment(sigma, target, fresh, mapped_with, mapped_without))
    result = ExtenderResult(
        current, base,
        IntervalPartition.of(gamma_parts),
        IntervalPartition.of(relative_parts),
        tuple(log))
    _check_result(result, pure)
    return result


def _check_result(result: ExtenderResult, pure: bool) -> None:
    extender, base = result.extender, result.base
    if extender.dim != base.dim:
        raise InternalCheckError("extender changed the dimension")
    relative = relative_family(extender, base)
    _ensure_valid(extender.as_family(), result.extender_partition,
                  "extender certificate")
    _ensure_valid(relative, result.relative_partition, "relative certificate")
    if pure:
        h_base = h_vector(base)
        h_diff = tuple(a - b for a, b in
                       zip(h_vector(extender), h_vector(relative)))
        if h_diff != h_base:
            raise InternalCheckError(
                f"h-vector identity failed: {h_diff} != {h_base}")
        return
    for sigma in base.faces:
        if facet_depth(base, sigma) != facet_depth(extender, sigma):
            raise InternalCheckError(
                f"facet depth of {format_face(sigma)} changed")
    for fam, part, what in (
        (extender.as_family(), result.extender_partition, "extender"),
        (relative, result.relative_partition, "relative"),
    ):
        if not is_layer_compatible(fam, part):
            raise InternalCheckError(f"{what} certificate is not layer-compatible")
        if not is_h_compatible(fam, part):
            raise InternalCheckError(f"{what} certificate is not h-compatible")
    tri_base = h_triangle(base)
    tri_diff = tuple(
        tuple(a - b for a, b in zip(row_big, row_rel))
        for row_big, row_rel in zip(h_triangle(extender), h_triangle(relative)))
    if tri_diff != tri_base:
        raise InternalCheckError("h-triangle identity failed")


def extender_for_complex(base: SimplicialComplex) -> ExtenderResult:
    """A partition extender for a pure complex: one gadget per face, glued
    to the lexicographically smallest facet containing it."""
    if base.is_void:
        raise VoidComplex("the void complex has no extender")
    if not base.is_pure:
        raise NotPure("base must be pure; use nonpure_extender_for_complex")
    return _assemble(base, pure=True)


def nonpure_extender_for_complex(base: SimplicialComplex) -> ExtenderResult:
    """A depth-preserving extender for an arbitrary complex, with
    layer-compatible and h-compatible certificates."""
    if base.is_void:
        raise VoidComplex("the void complex has no extender")
    return _assemble(base, pure=False)


def h_decomposition(result: ExtenderResult) -> tuple[tuple, tuple, tuple]:
    """Re-verify a result and return (h(extender), h(relative), difference).

    The difference must reproduce the h-vector of the base complex.
    """
    relative = relative_family(result.extender, result.base)
    if not verify_partitioning(result.extender.as_family(),
                               result.extender_partition).valid:
        raise InvalidResult("extender certificate does not verify")
    if not verify_partitioning(relative, result.relative_partition).valid:
        raise InvalidResult("relative certificate does not verify")
    h_big = h_vector(result.extender)
    h_rel = h_vector(relative)
    difference = tuple(a - b for a, b in zip(h_big, h_rel))
    expected = tuple(
        sum((-1) ** (i - j) * comb(result.base.dim + 1 - j, i - j) * f_j
            for j, f_j in enumerate(f_vector(result.base)[:i + 1]))
        for i in range(result.base.dim + 2))
    if difference != expected:
        raise InvalidResult(
            f"difference {difference} does not reproduce the base h-vector "
            f"{expected}")
    return h_big, h_rel, difference


def _growth_sequence(d: int, upto: int) -> list[int]:
    g = [0]
    for k in range(1, upto + 1):
        g.append(k * (2 ** (d + 1) - 2 ** k)
                 + sum(comb(k, j) * g[j] for j in range(k)))
    return g


def size_estimate(d: int, k: int) -> tuple[int, int]:
    """Face-count recurrence and crude bound for a (d, d-k) extender.

    ``k`` is the co-dimension of the attached face.  Returns the exact
    recurrence value and the closed-form upper bound ``2**(2**k - 1 + d)``.
    """
    if not 0 <= k <= d:
        raise InvalidParameters(f"need 0 <= k <= d, got k={k}, d={d}")
    return _growth_sequence(d, k)[k], 2 ** (2 ** k - 1 + d)


def total_size_estimate(c: SimplicialComplex) -> int:
    """Recurrence-based estimate of the faces added by
    :func:`extender_for_complex`, summed over the base's faces."""
    d = c.dim
    if c.is_void:
        return 0
    g = _growth_sequence(d, d + 1)
    f = f_vector(c)
    return sum(f[k + 1] * g[d - k] for k in range(-1, d + 1))
