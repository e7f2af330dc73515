import pytest

from harrisgraphs import (
    CensusCheckpoint,
    CheckpointError,
    EnumerationError,
    census_degree_histogram,
    enumerate_even_connected,
    enumerate_harris,
    is_harris,
    parse_graph6,
    resume,
)
from harrisgraphs.enumeration import _PARTITION_BITS


class TestEvenConnected:
    # classes of connected graphs with all degrees even and >= 2
    @pytest.mark.parametrize("n,count", [(3, 1), (4, 1), (5, 4), (6, 8), (7, 37)])
    def test_class_counts(self, n, count):
        graphs = enumerate_even_connected(n)
        assert len(graphs) == count
        for g in graphs:
            assert all(d % 2 == 0 and d >= 2 for d in g.degrees())

    def test_order_bounds_enforced(self):
        with pytest.raises(EnumerationError):
            enumerate_even_connected(2)
        with pytest.raises(EnumerationError):
            enumerate_even_connected(11)


class TestHarrisCensus:
    def test_counts(self, census7, census8, census9):
        assert census7.harris_count == 1
        assert census8.harris_count == 3
        assert census9.harris_count == 26

    def test_catalog_members_verify(self, census8):
        for line in census8.catalog:
            assert is_harris(parse_graph6(line)).is_harris

    def test_catalog_is_sorted_and_duplicate_free(self, census9):
        assert census9.catalog == sorted(set(census9.catalog))

    def test_stage_stats_are_consistent(self, census9):
        stats = census9.stats
        assert (
            stats["heuristic_hamiltonian"]
            + stats["exact_hamiltonian"]
            + stats["not_tough"]
            + stats["harris"]
            == stats["two_connected"]
        )
        assert stats["harris"] == census9.harris_count

    def test_degree_histogram(self, census7):
        (seq,) = census_degree_histogram(census7)
        assert str(seq) == "6-4-4-4-2-2-2"

    def test_order_bounds_enforced(self):
        with pytest.raises(EnumerationError):
            enumerate_harris(6)
        with pytest.raises(EnumerationError):
            enumerate_harris(11)


class TestDeterminism:
    def test_thread_count_does_not_change_output(self, census8):
        again = enumerate_harris(8, threads=3)
        assert again.catalog == census8.catalog
        assert again.stats == census8.stats


class TestCheckpoints:
    def test_resume_from_partial_checkpoint(self, tmp_path, census8):
        path = tmp_path / "cp.json"
        # run once to produce a full checkpoint, then truncate it
        enumerate_harris(8, checkpoint_path=str(path))
        cp = CensusCheckpoint.load(str(path))
        assert len(cp.completed) == 1 << _PARTITION_BITS[8]
        partial = CensusCheckpoint(
            cp.order,
            cp.partition_bits,
            {u: masks for u, masks in list(cp.completed.items())[:5]},
        )
        partial.dump(str(path))
        result = resume(str(path), threads=2)
        assert result.catalog == census8.catalog

    def test_checkpoint_roundtrip(self, tmp_path):
        cp = CensusCheckpoint(8, 5, {0: [3, 9], 7: []})
        path = tmp_path / "cp.json"
        cp.dump(str(path))
        loaded = CensusCheckpoint.load(str(path))
        assert (loaded.order, loaded.partition_bits) == (8, 5)
        assert loaded.completed == {0: [3, 9], 7: []}

    def test_mismatched_checkpoint_rejected(self, tmp_path):
        cp = CensusCheckpoint(9, _PARTITION_BITS[9], {})
        path = tmp_path / "cp.json"
        cp.dump(str(path))
        with pytest.raises(CheckpointError, match="order"):
            enumerate_harris(8, checkpoint=CensusCheckpoint.load(str(path)))

    def test_corrupt_checkpoint_rejected(self, tmp_path):
        path = tmp_path / "cp.json"
        path.write_text('{"version": 999}')
        with pytest.raises(CheckpointError, match="version"):
            CensusCheckpoint.load(str(path))
