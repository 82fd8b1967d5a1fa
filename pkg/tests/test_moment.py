import random

from mirabolic import (
    COMPLEX,
    REAL,
    ExactMatrix,
    IndexSelection,
    MirabolicOrbitDatum,
    OrbitDatum,
    Scalar,
    check_geometry,
    dense_selection,
    enumerate_selections,
    oracle_image,
    point_stabilizer_dim,
    realize_normal_form,
    symbolic_image,
)
from mirabolic.corpus import compositions
from mirabolic.partitions import partitions_of_weight

from conftest import orbit


class TestDenseSelection:
    def test_regular_semisimple(self):
        o = orbit(COMPLEX, (2, [2]), (1, [3]))
        dense = dense_selection(o)
        assert dense == IndexSelection({0: {0: 2}, 1: {0: 3}})

    def test_single_block(self):
        o = orbit(COMPLEX, (5, [3]))
        assert dense_selection(o) == IndexSelection({0: {0: 3}})

    def test_mixed_partitions(self):
        o = orbit(COMPLEX, (1, [2, 1]), (0, [3]))
        dense = dense_selection(o)
        # largest block of [2,1] is ascending index 1 with size 2
        assert dense == IndexSelection({0: {1: 2}, 1: {0: 3}})

    def test_dense_is_enumerated_once(self, complex_corpus_4, real_corpus_4):
        for o in complex_corpus_4 + real_corpus_4:
            sels = enumerate_selections(o)
            assert sels.count(dense_selection(o)) == 1


class TestSymbolicImage:
    def test_single_block_top_coordinate(self):
        o = orbit(COMPLEX, (1, [2]))
        img = symbolic_image(o, IndexSelection({0: {0: 2}}))
        assert img == MirabolicOrbitDatum(2, OrbitDatum(COMPLEX))

    def test_single_block_low_coordinate(self):
        o = orbit(COMPLEX, (1, [2]))
        img = symbolic_image(o, IndexSelection({0: {0: 1}}))
        assert img == MirabolicOrbitDatum(1, orbit(COMPLEX, (1, [1])))

    def test_unipotent_dense_removes_largest_part(self):
        for weight in range(1, 7):
            for p in partitions_of_weight(weight):
                o = orbit(COMPLEX, (0, list(p)))
                img = symbolic_image(o, dense_selection(o))
                assert img.depth == p.largest()
                removed = p.remove_largest_part()
                if removed:
                    assert img.a_part == orbit(COMPLEX, (0, list(removed)))
                else:
                    assert img.a_part == OrbitDatum(COMPLEX)

    def test_depth_formula_at_dense(self, complex_corpus_4, real_corpus_4):
        for o in complex_corpus_4 + real_corpus_4:
            img = symbolic_image(o, dense_selection(o))
            expected = sum(
                (2 if c.is_pair else 1) * c.partition.largest() for c in o.classes
            )
            assert img.depth == expected

    def test_weight_conservation(self, complex_corpus_4, real_corpus_4):
        for o in complex_corpus_4 + real_corpus_4:
            for sel in enumerate_selections(o):
                img = symbolic_image(o, sel)
                assert img.depth + img.a_part.size == o.size


class TestOracleImage:
    def test_identity_sanity(self):
        o = orbit(COMPLEX, (3, [1]))
        (sel,) = enumerate_selections(o)
        assert oracle_image(o, sel) == MirabolicOrbitDatum(1, OrbitDatum(COMPLEX))

    def test_regular_dense_is_strongly_regular(self):
        for n in range(1, 5):
            for k in range(1, n + 1):
                for sizes in compositions(n, k):
                    o = orbit(COMPLEX, *((k - i, [s]) for i, s in enumerate(sizes)))
                    img = oracle_image(o, dense_selection(o))
                    assert img == MirabolicOrbitDatum(n, OrbitDatum(COMPLEX))

    def test_regular_depths_match_coordinate_sums(self):
        # two single-block classes of sizes 2 and 1: image depth is the sum
        # of chosen coordinates over the selected classes
        o = orbit(COMPLEX, (1, [2]), (0, [1]))
        for sel in enumerate_selections(o):
            total = sum(x for _, pairs in sel.choices for _, x in pairs)
            assert oracle_image(o, sel).depth == total

    def test_regular_specialization_formula(self):
        # for single-block classes the general surgery collapses to: chosen
        # classes lose their chosen coordinate (block size s -> s - x) and
        # the depth is the coordinate sum; check this simpler closed form
        # against both computation paths
        for n in range(2, 6):
            for k in range(1, min(n, 3) + 1):
                for sizes in compositions(n, k):
                    o = orbit(COMPLEX, *((k - i, [s]) for i, s in enumerate(sizes)))
                    for sel in enumerate_selections(o):
                        chosen = {idx: pairs[0][1] for idx, pairs in sel.choices}
                        depth = sum(chosen.values())
                        classes = []
                        for idx, cls in enumerate(o.classes):
                            left = cls.partition.largest() - chosen.get(idx, 0)
                            if left:
                                classes.append((cls.re, [left]))
                        expected = MirabolicOrbitDatum(
                            depth, orbit(COMPLEX, *classes) if classes else OrbitDatum(COMPLEX)
                        )
                        assert symbolic_image(o, sel) == expected
                        assert oracle_image(o, sel) == expected

    def test_agreement_on_corpus(self, complex_corpus_4, real_corpus_4):
        for o in complex_corpus_4 + real_corpus_4:
            for sel in enumerate_selections(o):
                assert symbolic_image(o, sel) == oracle_image(o, sel)

    def test_images_distinct_within_orbit(self, complex_corpus_4, real_corpus_4):
        for o in complex_corpus_4 + real_corpus_4:
            images = [symbolic_image(o, sel) for sel in enumerate_selections(o)]
            assert len(set(images)) == len(images)


class TestLargerShapes:
    """Shapes outside the bounded corpora: multi-block selections inside one
    class, big pair partitions, mixed real data."""

    def test_complex_single_class_weight_six(self):
        for p in partitions_of_weight(6):
            o = orbit(COMPLEX, (1, list(p)))
            for sel in enumerate_selections(o):
                assert symbolic_image(o, sel) == oracle_image(o, sel)

    def test_complex_two_classes_size_nine(self):
        o = orbit(COMPLEX, (1, [3, 3, 1]), (0, [2]))
        sels = enumerate_selections(o)
        assert len(sels) == 17
        for sel in sels:
            assert symbolic_image(o, sel) == oracle_image(o, sel)

    def test_real_pair_partition_size_ten(self):
        o = orbit(REAL, (0, 1, [2, 2, 1]))
        sels = enumerate_selections(o)
        # ascending runs (1,1),(2,2): both-block choices violate the gap
        # condition, so only three selections survive
        assert len(sels) == 3
        for sel in sels:
            assert symbolic_image(o, sel) == oracle_image(o, sel)

    def test_real_mixed_size_eight(self):
        o = orbit(REAL, (0, 1, [1]), (0, "1/2", [1, 1]), (1, [2]))
        for sel in enumerate_selections(o):
            assert symbolic_image(o, sel) == oracle_image(o, sel)


class TestGeometry:
    def test_unipotent_report_passes(self):
        report = check_geometry(orbit(COMPLEX, (0, [2, 1])))
        assert report.ok, report.failures

    def test_regular_semisimple_depths(self):
        o = orbit(COMPLEX, (1, [1]), (0, [1]))
        report = check_geometry(o)
        depths = sorted(r["symbolic"]["depth"] for r in report.records)
        assert depths == [1, 1, 2]
        assert report.ok

    def test_real_pair_dense_depth(self):
        o = orbit(REAL, (0, 1, [1]))
        report = check_geometry(o)
        assert report.ok
        assert report.records[0]["symbolic"]["depth"] == 2

    def test_report_json_shape(self):
        payload = check_geometry(orbit(COMPLEX, (0, [2]))).to_json()
        assert set(payload) >= {"orbit", "records", "injective", "ok"}
        record = payload["records"][0]
        assert set(record) >= {"selection", "symbolic", "oracle", "agree", "stab_dims"}

    def test_geometry_on_sample(self, complex_corpus_4, real_corpus_4):
        for o in complex_corpus_4[::13] + real_corpus_4[::13]:
            report = check_geometry(o)
            assert report.ok, (o, report.failures)


class TestFiberStabilizers:
    def test_non_regular_fibers_have_positive_stabilizer(self):
        # over a normal form of depth j < n, every preimage point of the
        # projection keeps at least a one-dimensional stabilizer
        rng = random.Random(41)
        heads = [orbit(COMPLEX, (0, [1, 1])), orbit(COMPLEX, (1, [1]), (0, [1])),
                 orbit(COMPLEX, (0, [2]))]
        for head in heads:
            for depth in (1, 2):
                datum = MirabolicOrbitDatum(depth, head)
                n = datum.size
                if depth == n:
                    continue
                x = realize_normal_form(datum)
                for _ in range(10):
                    lift = [list(row) for row in x.data]
                    for i in range(n):
                        lift[i][n - 1] = Scalar(rng.randint(-3, 3))
                    assert point_stabilizer_dim(ExactMatrix(lift)) >= 1
