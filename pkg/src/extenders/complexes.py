"""Simplicial complexes, face families, and their counting statistics.

A face is a frozenset of nonnegative integer vertex labels; the empty
frozenset is the empty face, of dimension -1.  A complex stores its facets
together with the full downward closure.  A face family is an arbitrary
finite set of faces with an explicit ambient dimension; it is used for
relative complexes and for families that are not closed under subsets.

Every value here is immutable and every operation is a pure function, so
results can be shared freely between concurrent tasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Mapping, Union

from .errors import (
    AlreadyPresent,
    FaceNotPresent,
    InconsistentIdentification,
    InvalidParameters,
    NotASubcomplex,
)

Face = frozenset


def face_of(labels: Iterable[int]) -> Face:
    """Normalize an iterable of vertex labels into a face."""
    f = frozenset(labels)
    for v in f:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InvalidParameters(
                f"vertex labels must be nonnegative integers, got {v!r}")
    return f


def face_key(face: Face) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: by cardinality, then lexicographically."""
    return (len(face), tuple(sorted(face)))


def lex_key(face: Face) -> tuple[int, ...]:
    return tuple(sorted(face))


def format_face(face: Face) -> str:
    return "{" + ",".join(map(str, sorted(face))) + "}"


def subsets_of(face: Face) -> Iterator[Face]:
    """All subsets of a face, the empty face included."""
    verts = sorted(face)
    for r in range(len(verts) + 1):
        for combo in itertools.combinations(verts, r):
            yield frozenset(combo)


def between(bottom: Face, top: Face) -> Iterator[Face]:
    """All sets in the Boolean interval [bottom, top]."""
    gap = sorted(top - bottom)
    for r in range(len(gap) + 1):
        for combo in itertools.combinations(gap, r):
            yield bottom | frozenset(combo)


def maximal_faces(faces: Iterable[Face]) -> set[Face]:
    """Inclusion-maximal elements of a finite set of faces."""
    by_size: dict[int, list[Face]] = {}
    for f in faces:
        by_size.setdefault(len(f), []).append(f)
    sizes = sorted(by_size, reverse=True)
    kept: set[Face] = set()
    for size in sizes:
        for f in by_size[size]:
            if not any(f < g for big in sizes if big > size for g in by_size[big]):
                kept.add(f)
    return kept


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex: facets plus their downward closure.

    The void complex has ``facets == faces == frozenset()``; the complex
    whose only face is the empty face has ``facets == {frozenset()}``.
    Both report dimension -1.
    """

    facets: frozenset
    faces: frozenset

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for f in self.facets for v in f)

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.faces

    def sorted_faces(self) -> list[Face]:
        return sorted(self.faces, key=face_key)

    def sorted_facets(self) -> list[Face]:
        return sorted(self.facets, key=face_key)

    def as_family(self) -> "FaceFamily":
        return FaceFamily(self.faces, self.dim)


@dataclass(frozen=True)
class FaceFamily:
    """A finite set of faces ordered by inclusion.

    Unlike a complex, a family need not be closed under subsets, so
    statistics that depend on the ambient dimension cannot be derived
    from the members alone; ``ambient_dim`` supplies it.
    """

    members: frozenset
    ambient_dim: int

    def __post_init__(self):
        top = max((len(f) for f in self.members), default=0) - 1
        if self.ambient_dim < top:
            raise InvalidParameters(
                f"ambient dimension {self.ambient_dim} is below a member of "
                f"dimension {top}")

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def maximal_members(self) -> set[Face]:
        return maximal_faces(self.members)

    def sorted_members(self) -> list[Face]:
        return sorted(self.members, key=face_key)


ComplexOrFamily = Union[SimplicialComplex, FaceFamily]


def as_family(x: ComplexOrFamily) -> FaceFamily:
    return x.as_family() if isinstance(x, SimplicialComplex) else x


def _members_and_dim(x: ComplexOrFamily) -> tuple[frozenset, int]:
    if isinstance(x, SimplicialComplex):
        return x.faces, x.dim
    return x.members, x.ambient_dim


def build_complex(facet_list: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from candidate facets, discarding non-maximal ones."""
    candidates = {face_of(f) for f in facet_list}
    facets = maximal_faces(candidates)
    faces: set[Face] = set()
    for f in facets:
        faces.update(subsets_of(f))
    return SimplicialComplex(frozenset(facets), frozenset(faces))


def _from_closed_faces(faces: Iterable[Face]) -> SimplicialComplex:
    """Wrap an already downward-closed face set without re-closing it."""
    faces = frozenset(faces)
    return SimplicialComplex(frozenset(maximal_faces(faces)), faces)


def simplex_complex(vertices: Iterable[int]) -> SimplicialComplex:
    """The full simplex on a vertex set (the complex {vertices} generates)."""
    return build_complex([vertices])


def f_vector(x: ComplexOrFamily) -> tuple[int, ...]:
    """Face counts by cardinality; entry i counts faces of i vertices."""
    members, d = _members_and_dim(x)
    counts = [0] * (d + 2)
    for f in members:
        counts[len(f)] += 1
    return tuple(counts)


def h_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    """Binomial transform sending a face-count vector to an h-vector."""
    d = len(f) - 2
    return tuple(
        sum((-1) ** (i - j) * comb(d + 1 - j, i - j) * f[j] for j in range(i + 1))
        for i in range(d + 2))


def f_from_h(h: tuple[int, ...]) -> tuple[int, ...]:
    """Inverse of :func:`h_from_f`; the round trip is exact."""
    d = len(h) - 2
    return tuple(
        sum(comb(d + 1 - j, i - j) * h[j] for j in range(i + 1))
        for i in range(d + 2))


def h_vector(x: ComplexOrFamily) -> tuple[int, ...]:
    return h_from_f(f_vector(x))


def link(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Faces disjoint from ``s`` whose union with ``s`` is a face of ``c``."""
    s = frozenset(s)
    if s not in c.faces:
        raise FaceNotPresent(f"face {format_face(s)} is not in the complex")
    return _from_closed_faces(t - s for t in c.faces if s <= t)


def skeleton(c: SimplicialComplex, r: int) -> SimplicialComplex:
    """The subcomplex of all faces of dimension at most ``r``."""
    if r < -1:
        raise InvalidParameters(f"skeleton dimension must be >= -1, got {r}")
    if r >= c.dim:
        return c
    return _from_closed_faces(f for f in c.faces if len(f) <= r + 1)


def facet_depth(x: ComplexOrFamily, s: Iterable[int]) -> int:
    """Largest dimension of a face of ``x`` containing ``s``."""
    members, _ = _members_and_dim(x)
    s = frozenset(s)
    if s not in members:
        raise FaceNotPresent(f"face {format_face(s)} is not in the complex")
    return max(len(t) for t in members if s <= t) - 1


def f_triangle(x: ComplexOrFamily) -> tuple[tuple[int, ...], ...]:
    """Face counts refined by (largest containing face size, own size).

    Row i lists, by cardinality j, the faces whose largest containing
    member has i vertices.  Column sums reproduce the f-vector.
    """
    members, d = _members_and_dim(x)
    rows = [[0] * (i + 1) for i in range(d + 2)]
    for s in members:
        depth_size = max(len(t) for t in members if s <= t)
        rows[depth_size][len(s)] += 1
    return tuple(tuple(row) for row in rows)


def h_triangle(x: ComplexOrFamily) -> tuple[tuple[int, ...], ...]:
    """Row-wise binomial transform of the f-triangle."""
    f_tri = f_triangle(x)
    return tuple(
        tuple(
            sum((-1) ** (j - k) * comb(i - k, j - k) * row[k] for k in range(j + 1))
            for j in range(i + 1))
        for i, row in enumerate(f_tri))


def relative_family(big: SimplicialComplex, small: SimplicialComplex) -> FaceFamily:
    """Faces of ``big`` not in ``small``, with ``big``'s ambient dimension."""
    if not small.faces <= big.faces:
        extra = min(small.faces - big.faces, key=face_key)
        raise NotASubcomplex(
            f"face {format_face(extra)} of the subcomplex is missing from the "
            f"ambient complex")
    return FaceFamily(big.faces - small.faces, big.dim)


def adjoin_face(fam: FaceFamily, s: Iterable[int]) -> FaceFamily:
    """Add one face to a family."""
    s = frozenset(s)
    if s in fam.members:
        raise AlreadyPresent(f"face {format_face(s)} is already a member")
    return FaceFamily(fam.members | {s}, fam.ambient_dim)


def glue_with_map(
    host: SimplicialComplex,
    guest: SimplicialComplex,
    identification: Mapping[int, int],
) -> tuple[SimplicialComplex, dict[int, int]]:
    """Glue ``guest`` onto ``host`` and return the full vertex relabeling.

    Identified guest vertices map per ``identification``; the remaining
    guest vertices receive fresh labels, consecutive integers above the
    current maximum, assigned in increasing guest-label order.
    """
    ident = dict(identification)
    if len(set(ident.values())) != len(ident):
        raise InconsistentIdentification("identification is not injective")
    guest_vertices = guest.vertices
    for gv, hv in ident.items():
        if gv not in guest_vertices:
            raise InconsistentIdentification(
                f"identified vertex {gv} is not a guest vertex")
        if frozenset([hv]) not in host.faces:
            raise InconsistentIdentification(
                f"target vertex {hv} is not a host vertex")
    domain = set(ident)
    for f in guest.faces:
        if f <= domain:
            image = frozenset(ident[v] for v in f)
            if image not in host.faces:
                raise InconsistentIdentification(
                    f"guest face {format_face(f)} maps to {format_face(image)}, "
                    f"which is not a face of the host")
    mapping = dict(ident)
    next_label = max(host.vertices, default=-1) + 1
    for gv in sorted(guest_vertices - domain):
        mapping[gv] = next_label
        next_label += 1
    new_faces = {frozenset(mapping[v] for v in f) for f in guest.faces}
    faces = host.faces | new_faces
    new_facets = {frozenset(mapping[v] for v in f) for f in guest.facets}
    facets = maximal_faces(host.facets | new_facets)
    return SimplicialComplex(frozenset(facets), frozenset(faces)), mapping


def glue(
    host: SimplicialComplex,
    guest: SimplicialComplex,
    identification: Mapping[int, int],
) -> SimplicialComplex:
    """Glue ``guest`` onto ``host`` along an injective vertex identification."""
    combined, _ = glue_with_map(host, guest, identification)
    return combined
