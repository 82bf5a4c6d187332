from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

import rafpref as rp
from rafpref import (
    AlternativeSet,
    Raf,
    bottom,
    make_raf,
    pointwise_dominates,
    scale_top,
    strictly_dominates,
    sup_distance,
    top,
)

UNIT = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestAlternativeSet:
    def test_needs_at_least_two(self):
        with pytest.raises(rp.ValidationError, match="at least 2"):
            AlternativeSet(("solo",))

    def test_rejects_duplicates(self):
        with pytest.raises(rp.ValidationError, match="duplicate"):
            AlternativeSet(("a", "b", "a"))

    def test_rejects_empty_label(self):
        with pytest.raises(rp.ValidationError):
            AlternativeSet(("a", ""))

    def test_index_and_container_protocol(self, alts3):
        assert alts3.index("b") == 1
        assert len(alts3) == 3
        assert "c" in alts3
        assert "z" not in alts3
        assert list(alts3) == ["a", "b", "c"]

    def test_index_unknown_label(self, alts3):
        with pytest.raises(rp.ValidationError, match="unknown alternative"):
            alts3.index("z")


class TestRafConstruction:
    def test_boundary_values_allowed(self, alts3):
        raf = make_raf(alts3, (0.0, 1.0, 0.5))
        assert raf.values == (0.0, 1.0, 0.5)
        assert raf.value("b") == 1.0

    def test_out_of_range_names_the_alternative(self, alts3):
        with pytest.raises(rp.ValidationError, match="'b'"):
            make_raf(alts3, (0.5, 1.2, 0.5))
        with pytest.raises(rp.ValidationError, match="'a'"):
            make_raf(alts3, (-0.1, 0.2, 0.5))

    def test_nan_rejected(self, alts3):
        with pytest.raises(rp.ValidationError):
            make_raf(alts3, (0.5, float("nan"), 0.5))

    def test_length_mismatch(self, alts3):
        with pytest.raises(rp.ValidationError, match="expected 3 values"):
            make_raf(alts3, (0.5, 0.5))

    def test_non_numeric_rejected(self, alts3):
        with pytest.raises(rp.ValidationError):
            make_raf(alts3, (0.5, "0.5", 0.5))

    def test_integer_values_coerced(self, alts3):
        raf = make_raf(alts3, (0, 1, 1))
        assert raf.values == (0.0, 1.0, 1.0)
        assert all(isinstance(v, float) for v in raf.values)


class TestCorners:
    def test_top_and_bottom(self, alts3):
        assert top(alts3).values == (1.0, 1.0, 1.0)
        assert bottom(alts3).values == (0.0, 0.0, 0.0)

    def test_scale_top_interpolates(self, alts3):
        assert scale_top(0.0, alts3) == bottom(alts3)
        assert scale_top(1.0, alts3) == top(alts3)
        assert scale_top(0.3, alts3).values == (0.3, 0.3, 0.3)

    def test_scale_top_rejects_bad_parameter(self, alts3):
        with pytest.raises(rp.ValidationError):
            scale_top(1.5, alts3)
        with pytest.raises(rp.ValidationError):
            scale_top(-0.2, alts3)


class TestDominance:
    def test_strict_requires_every_coordinate(self, alts2):
        assert strictly_dominates(make_raf(alts2, (0.9, 0.5)), make_raf(alts2, (0.5, 0.1)))
        assert not strictly_dominates(make_raf(alts2, (0.9, 0.5)), make_raf(alts2, (0.5, 0.5)))
        assert not strictly_dominates(make_raf(alts2, (0.9, 0.1)), make_raf(alts2, (0.5, 0.5)))

    def test_pointwise_allows_ties(self, alts2):
        assert pointwise_dominates(make_raf(alts2, (0.9, 0.5)), make_raf(alts2, (0.5, 0.5)))
        assert pointwise_dominates(make_raf(alts2, (0.5, 0.5)), make_raf(alts2, (0.5, 0.5)))
        assert not pointwise_dominates(make_raf(alts2, (0.9, 0.4)), make_raf(alts2, (0.5, 0.5)))

    def test_top_strictly_dominates_bottom(self, alts5):
        assert strictly_dominates(top(alts5), bottom(alts5))

    def test_mismatched_alternative_sets(self, alts2, alts3):
        with pytest.raises(rp.AlternativeSetMismatchError):
            strictly_dominates(top(alts2), top(alts3))
        with pytest.raises(rp.AlternativeSetMismatchError):
            sup_distance(bottom(alts2), bottom(alts3))

    def test_strict_dominance_on_a_coarse_lattice(self, alts3):
        # Exhaustive over the 27-point lattice: irreflexive, transitive, and
        # strict implies pointwise but never the reverse direction.
        grid = [make_raf(alts3, v) for v in itertools.product((0.0, 0.5, 1.0), repeat=3)]
        for a in grid:
            assert not strictly_dominates(a, a)
            for b in grid:
                if strictly_dominates(a, b):
                    assert pointwise_dominates(a, b)
                    assert not pointwise_dominates(b, a)
                for c in grid:
                    if strictly_dominates(a, b) and strictly_dominates(b, c):
                        assert strictly_dominates(a, c)


class TestSupDistance:
    def test_zero_on_equal(self, alts3):
        raf = make_raf(alts3, (0.2, 0.4, 0.6))
        assert sup_distance(raf, raf) == 0.0

    def test_corners_are_one_apart(self, alts3):
        assert sup_distance(top(alts3), bottom(alts3)) == 1.0

    def test_picks_the_largest_gap(self, alts2):
        a = make_raf(alts2, (0.9, 0.5))
        b = make_raf(alts2, (0.5, 0.6))
        assert sup_distance(a, b) == pytest.approx(0.4)

    def test_symmetry(self, alts3):
        a = make_raf(alts3, (0.1, 0.7, 0.3))
        b = make_raf(alts3, (0.6, 0.2, 0.3))
        assert sup_distance(a, b) == sup_distance(b, a)

    @given(st.lists(UNIT, min_size=3, max_size=3), st.lists(UNIT, min_size=3, max_size=3), st.lists(UNIT, min_size=3, max_size=3))
    def test_triangle_inequality(self, xs, ys, zs):
        alts = AlternativeSet(("a", "b", "c"))
        a, b, c = make_raf(alts, xs), make_raf(alts, ys), make_raf(alts, zs)
        assert sup_distance(a, c) <= sup_distance(a, b) + sup_distance(b, c) + 1e-15


class TestSerialization:
    def test_dict_shape(self, alts2):
        raf = make_raf(alts2, (0.25, 0.75))
        assert raf.to_dict() == {"alts": ["a", "b"], "values": [0.25, 0.75]}

    def test_round_trip_is_exact(self, alts3):
        raf = make_raf(alts3, (0.1, 0.9999999999999999, 1.0))
        again = Raf.from_dict(json.loads(json.dumps(raf.to_dict())))
        assert again == raf

    def test_from_dict_validates(self):
        with pytest.raises(rp.ValidationError):
            Raf.from_dict({"alts": ["a", "b"]})
        with pytest.raises(rp.ValidationError):
            Raf.from_dict({"alts": ["a", "b"], "values": [0.5, 1.5]})

    @given(st.lists(UNIT, min_size=2, max_size=6))
    def test_round_trip_arbitrary_values(self, values):
        alts = AlternativeSet(tuple(f"x{i}" for i in range(len(values))))
        raf = make_raf(alts, values)
        again = Raf.from_dict(json.loads(json.dumps(raf.to_dict())))
        assert again == raf
        assert again.values == raf.values
