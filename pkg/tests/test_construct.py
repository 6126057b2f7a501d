import random

import pytest
from hypothesis import given, settings

from extenders import (
    ExtenderResult,
    IntervalPartition,
    InvalidParameters,
    InvalidResult,
    NotPure,
    VoidComplex,
    build_complex,
    extender_for_complex,
    f_triangle,
    f_vector,
    find_partitioning,
    h_decomposition,
    h_triangle,
    h_vector,
    is_h_compatible,
    is_layer_compatible,
    nonpure_extender_for_complex,
    partition_extender,
    prepartition_extender,
    prepartition_h_profile,
    relative_family,
    size_estimate,
    total_size_estimate,
    verify_partitioning,
)
from _oracles import poly_h, pure_complexes, random_nonpure_complex

fs = frozenset


def F(digits):
    return fs(int(ch) for ch in digits)


def test_seed_31_matches_golden_labels():
    marked = prepartition_extender(3, 1)
    assert marked.complex.facets == {
        F("1256"), F("3456"), F("1236"), F("1235"), F("2346"), F("2345")}
    assert marked.specified_facet == F("3456")
    assert marked.specified_face == F("56")
    assert marked.with_face_partition == IntervalPartition.of([
        (F("56"), F("1256")), (F("1"), F("1236")), (F("2"), F("2346")),
        (F("15"), F("1235")), (F("25"), F("2345"))])
    assert marked.without_face_partition is None


def test_seed_degenerate_cases():
    top = prepartition_extender(2, 2)
    assert top.complex == build_complex([[1, 2, 3]])
    assert top.specified_face == top.specified_facet == F("123")
    assert list(top.with_face_partition) == [(F("123"), F("123"))]

    tri = prepartition_extender(1, 0)
    assert tri.complex == build_complex([[1, 3], [2, 3], [1, 2]])
    assert tri.specified_facet == F("23") and tri.specified_face == F("3")

    two = prepartition_extender(2, -1)
    assert two.complex == build_complex([[1, 2, 3], [4, 5, 6]])
    assert list(two.with_face_partition) == [(fs(), F("123"))]


def test_seed_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        prepartition_extender(2, 3)
    with pytest.raises(InvalidParameters):
        prepartition_extender(2, -2)


def test_seed_cover_property():
    # Together with the spare interval [empty, specified facet], the seed
    # intervals hit every face exactly once, except the specified face,
    # which lies in exactly two intervals.
    for d in range(0, 6):
        for k in range(0, d + 1):
            marked = prepartition_extender(d, k)
            spare = (fs(), marked.specified_facet)
            intervals = list(marked.with_face_partition) + [spare]
            for face in marked.complex.faces:
                hits = sum(1 for b, t in intervals if b <= face <= t)
                assert hits == (2 if face == marked.specified_face else 1), \
                    (d, k, sorted(face))


def test_seed_profile_golden():
    assert prepartition_h_profile(3, 1) == (0, 2, 3, 0, 0)
    assert prepartition_h_profile(3, 2) == (0, 1, 1, 2, 0)
    for d in range(0, 5):
        profile = prepartition_h_profile(d, d)
        assert profile[d + 1] == 1 and sum(profile) == 1


def test_seed_profile_closed_form():
    # d-k intervals at every bottom size 1..k, d-k+1 at size k+1, and the
    # measured count at size 0 is 0 (not d-k).
    for d in range(0, 6):
        for k in range(0, d + 1):
            profile = prepartition_h_profile(d, k)
            for size in range(1, k + 1):
                assert profile[size] == d - k
            assert profile[k + 1] == d - k + 1
            assert profile[0] == 0
            assert all(v == 0 for v in profile[k + 2:])


def test_partition_extender_31_matches_golden_table():
    marked = partition_extender(3, 1)
    assert len(marked.complex.facets) == 14
    assert marked.complex.facets == {
        F("1256"), F("3456"), F("1236"), F("1235"), F("2346"), F("2345"),
        F("1567"), F("2567"), F("1267"), F("1257"),
        F("2568"), F("1568"), F("1268"), F("1258")}
    assert marked.without_face_partition == IntervalPartition.of([
        (F("1256"), F("1256")), (F("1"), F("1236")), (F("2"), F("2346")),
        (F("15"), F("1235")), (F("25"), F("2345")),
        (F("156"), F("1567")), (F("7"), F("2567")), (F("17"), F("1267")),
        (F("157"), F("1257")),
        (F("256"), F("2568")), (F("8"), F("1568")), (F("28"), F("1268")),
        (F("258"), F("1258"))])
    assert verify_partitioning(
        marked.family_with_face(), marked.with_face_partition).valid
    assert verify_partitioning(
        marked.family_without_face(), marked.without_face_partition).valid


def test_partition_extender_base_case():
    for d in range(0, 4):
        marked = partition_extender(d, d)
        assert marked.complex == build_complex([range(1, d + 2)])
        assert list(marked.with_face_partition) == [
            (marked.specified_face, marked.specified_face)]
        assert len(marked.without_face_partition) == 0


def test_partition_extender_codim_one_swaps_one_interval():
    for d in range(1, 5):
        marked = partition_extender(d, d - 1)
        seed = prepartition_extender(d, d - 1)
        assert marked.complex == seed.complex
        sigma = marked.specified_face
        anchor = next(t for b, t in seed.with_face_partition if b <= sigma <= t)
        assert set(marked.with_face_partition) == set(seed.with_face_partition)
        expected = (set(seed.with_face_partition) - {(sigma, anchor)}) \
            | {(anchor, anchor)}
        assert set(marked.without_face_partition) == expected


def test_recursive_assembly_certificates_and_swap():
    for d in range(0, 5):
        for k in range(-1, d + 1):
            marked = partition_extender(d, k)
            assert verify_partitioning(
                marked.family_with_face(), marked.with_face_partition).valid
            assert verify_partitioning(
                marked.family_without_face(),
                marked.without_face_partition).valid
            if k == d:
                continue
            seed = prepartition_extender(d, k)
            sigma = marked.specified_face
            anchor = next(t for b, t in seed.with_face_partition
                          if b <= sigma <= t)
            seed_set = set(seed.with_face_partition)
            from_pieces_without = {
                iv for piece in marked.attachments
                for iv in piece.without_face_intervals}
            from_pieces_with = {
                iv for piece in marked.attachments
                for iv in piece.with_face_intervals}
            assert set(marked.with_face_partition) == \
                seed_set | from_pieces_without
            assert set(marked.without_face_partition) == \
                (seed_set - {(sigma, anchor)}) | from_pieces_with


def test_extender_two_disjoint_edges_size():
    base = build_complex([[1, 2], [3, 4]])
    res = extender_for_complex(base)
    assert len(res.extender.vertices) - len(base.vertices) == 8
    assert f_vector(res.extender)[2] - f_vector(base)[2] == 13


def test_extender_bowtie_identity():
    base = build_complex([[1, 2, 3], [3, 4, 5]])
    res = extender_for_complex(base)
    h_big, h_rel, diff = h_decomposition(res)
    assert diff == (1, 2, -1, 0) == h_vector(base)
    assert tuple(a - b for a, b in zip(h_big, h_rel)) == diff


def test_extender_single_edge():
    res = extender_for_complex(build_complex([[1, 2]]))
    assert h_decomposition(res)[2] == (1, 0, 0)


def test_extender_rejects_void_and_nonpure():
    with pytest.raises(VoidComplex):
        extender_for_complex(build_complex([]))
    with pytest.raises(NotPure):
        extender_for_complex(build_complex([[1, 2], [3]]))
    with pytest.raises(VoidComplex):
        nonpure_extender_for_complex(build_complex([]))


def test_extender_irrelevant_complex():
    res = extender_for_complex(build_complex([[]]))
    assert res.extender == res.base
    assert h_decomposition(res) == ((1,), (0,), (1,))


@settings(max_examples=40, deadline=None)
@given(pure_complexes())
def test_extender_property_pure(base):
    res = extender_for_complex(base)
    assert verify_partitioning(
        res.extender.as_family(), res.extender_partition).valid
    relative = relative_family(res.extender, res.base)
    assert verify_partitioning(relative, res.relative_partition).valid
    diff = tuple(a - b for a, b in
                 zip(h_vector(res.extender), h_vector(relative)))
    assert diff == poly_h(f_vector(base))


def test_nonpure_edge_plus_vertex():
    base = build_complex([[1, 2], [3]])
    res = nonpure_extender_for_complex(base)
    relative = relative_family(res.extender, res.base)
    assert is_layer_compatible(res.extender.as_family(), res.extender_partition)
    assert is_h_compatible(res.extender.as_family(), res.extender_partition)
    assert is_layer_compatible(relative, res.relative_partition)
    assert is_h_compatible(relative, res.relative_partition)
    tri = h_triangle(base)
    assert tri[1][1] == 1 and tri[2][0] == 1
    diff = tuple(
        tuple(a - b for a, b in zip(row_big, row_rel))
        for row_big, row_rel in zip(h_triangle(res.extender),
                                    h_triangle(relative)))
    assert diff == tri


def test_nonpure_agrees_with_pure_on_pure_input():
    base = build_complex([[1, 2, 3]])
    assert nonpure_extender_for_complex(base) == extender_for_complex(base)


def test_nonpure_triangle_plus_vertex():
    base = build_complex([[1, 2], [1, 3], [2, 3], [4]])
    res = nonpure_extender_for_complex(base)
    relative = relative_family(res.extender, res.base)
    diff = tuple(
        tuple(a - b for a, b in zip(row_big, row_rel))
        for row_big, row_rel in zip(h_triangle(res.extender),
                                    h_triangle(relative)))
    assert diff == h_triangle(base)


def test_nonpure_preserves_facet_depth():
    from extenders import facet_depth
    rng = random.Random(4127)
    for _ in range(10):
        base = random_nonpure_complex(rng)
        res = nonpure_extender_for_complex(base)
        for face in base.faces:
            assert facet_depth(base, face) == facet_depth(res.extender, face)


def test_nonpure_triangle_additivity():
    # The f-triangle of the relative family is the row-wise difference of
    # the extender's and the base's, because facet depths are preserved.
    rng = random.Random(90125)
    for _ in range(10):
        base = random_nonpure_complex(rng)
        res = nonpure_extender_for_complex(base)
        relative = relative_family(res.extender, res.base)
        expected = tuple(
            tuple(a - b for a, b in zip(row_big, row_base))
            for row_big, row_base in zip(f_triangle(res.extender),
                                         f_triangle(base)))
        assert f_triangle(relative) == expected


def test_h_decomposition_handmade_result():
    bowtie = build_complex([[1, 2, 3], [3, 4, 5]])
    lid = build_complex([[1, 2, 3], [3, 4, 5], [2, 3, 4]])
    gamma_partition = find_partitioning(lid)
    assert gamma_partition is not None
    handmade = ExtenderResult(
        extender=lid, base=bowtie,
        extender_partition=gamma_partition,
        relative_partition=IntervalPartition.of([([2, 4], [2, 3, 4])]),
        attachment_log=())
    assert h_decomposition(handmade) == ((1, 2, 0, 0), (0, 0, 1, 0), (1, 2, -1, 0))


def test_h_decomposition_identity_base():
    tri = build_complex([[1, 2], [1, 3], [2, 3]])
    res = ExtenderResult(tri, tri, find_partitioning(tri),
                         IntervalPartition.of([]), ())
    h = h_vector(tri)
    assert h_decomposition(res) == (h, (0, 0, 0), h)


def test_h_decomposition_rejects_bad_certificates():
    tri = build_complex([[1, 2], [1, 3], [2, 3]])
    broken = ExtenderResult(tri, tri, IntervalPartition.of([([], [1, 2])]),
                            IntervalPartition.of([]), ())
    with pytest.raises(InvalidResult):
        h_decomposition(broken)


def test_size_estimate_base_values():
    for d in range(0, 11):
        assert size_estimate(d, 0) == (0, 2 ** d)
        exact, bound = size_estimate(d, 1) if d >= 1 else (0, 0)
        if d >= 1:
            assert exact == 2 ** (d + 1) - 2
            assert exact <= 2 ** (d + 1)


def test_size_estimate_bound_holds():
    for d in range(0, 7):
        for k in range(0, d + 1):
            exact, bound = size_estimate(d, k)
            assert 0 <= exact <= bound


def test_size_estimate_rejects_bad_parameters():
    with pytest.raises(InvalidParameters):
        size_estimate(2, 3)
    with pytest.raises(InvalidParameters):
        size_estimate(2, -1)


def test_size_recurrence_codim_zero_adds_nothing():
    for d in range(0, 5):
        marked = partition_extender(d, d)
        assert len(marked.complex.faces) - 2 ** (d + 1) == 0
        assert size_estimate(d, 0)[0] == 0


def test_size_recurrence_order_of_magnitude():
    # The recurrence is an estimate of the faces a gadget adds beyond the
    # shared facet; it is not exact, but stays within a small factor.
    for d, k in [(1, 0), (2, 1), (2, 0), (3, 2), (3, 1), (3, 0)]:
        marked = partition_extender(d, k)
        added = len(marked.complex.faces) - 2 ** (d + 1)
        estimate = size_estimate(d, d - k)[0]
        assert estimate / 4 <= added <= estimate * 4


def test_total_size_estimate_order_of_magnitude():
    for facets in ([[1, 2], [3, 4]], [[1, 2, 3], [3, 4, 5]], [[1, 2], [2, 3]]):
        base = build_complex(facets)
        res = extender_for_complex(base)
        added = len(res.extender.faces) - len(base.faces)
        estimate = total_size_estimate(base)
        assert estimate / 4 <= added <= estimate * 4
    assert total_size_estimate(build_complex([])) == 0
