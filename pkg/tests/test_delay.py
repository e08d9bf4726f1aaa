"""Delay profiling: gap accounting and summary statistics."""

import pytest

from chordal_mds import DelayProfile, profile_delays

from conftest import corona_graph, e1_graph


class TestDelayProfile:
    def test_gap_count_contract(self):
        with pytest.raises(ValueError):
            DelayProfile(outputs=2, gaps=(1, 2))

    def test_partition_of_gaps(self):
        p = DelayProfile(outputs=3, gaps=(10, 2, 4, 6))
        assert p.pre_gap_ns == 10
        assert p.post_gap_ns == 6
        assert p.inter_gaps == (2, 4)
        assert p.max_gap_ns == 4
        assert p.median_gap_ns == 3

    def test_p95_interpolates(self):
        gaps = (0,) + tuple(range(1, 101)) + (0,)
        p = DelayProfile(outputs=101, gaps=gaps)
        assert 94 <= p.p95_gap_ns <= 96

    def test_summary_fields(self):
        p = DelayProfile(outputs=1, gaps=(5, 7))
        s = p.summary()
        assert set(s) == {
            "outputs",
            "max_gap_ns",
            "median_gap_ns",
            "p95_gap_ns",
            "pre_gap_ns",
            "post_gap_ns",
        }
        assert s["outputs"] == 1


class TestProfileDelays:
    def test_e1_counts(self):
        p = profile_delays(e1_graph())
        assert p.outputs == 4
        assert len(p.gaps) == 5
        assert all(g >= 0 for g in p.gaps)

    def test_limit(self):
        p = profile_delays(corona_graph(10), limit=16)
        assert p.outputs == 16

    def test_gc_restored(self):
        import gc

        was = gc.isenabled()
        profile_delays(e1_graph())
        assert gc.isenabled() == was
