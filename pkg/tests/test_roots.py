"""Root system realizations against frozen reference data."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from antipodal_atlas import linalg, roots

# Highest-root coefficients in the standard simple-root numbering.
FROZEN_D = {
    ("a", 4): (1, 1, 1, 1),
    ("b", 4): (1, 2, 2, 2),
    ("c", 4): (2, 2, 2, 1),
    ("d", 5): (1, 2, 2, 1, 1),
    ("bc", 3): (2, 2, 2),
    ("e6", 6): (1, 2, 2, 3, 2, 1),
    ("e7", 7): (2, 2, 3, 4, 3, 2, 1),
    ("e8", 8): (2, 3, 4, 6, 5, 4, 3, 2),
    ("f4", 4): (2, 3, 4, 2),
    ("g2", 2): (3, 2),
}

COXETER_NUMBER = {"a": lambda r: r + 1, "b": lambda r: 2 * r,
                  "c": lambda r: 2 * r, "d": lambda r: 2 * r - 2,
                  "e6": lambda r: 12, "e7": lambda r: 18, "e8": lambda r: 30,
                  "f4": lambda r: 12, "g2": lambda r: 6}


def sample_systems():
    ranks = {"a": range(1, 9), "b": range(2, 9), "c": range(2, 9),
             "d": range(4, 9), "bc": range(1, 9)}
    for family, rng in ranks.items():
        for r in rng:
            yield family, r
    for family, r in roots.EXCEPTIONAL_RANK.items():
        yield family, r


class TestCounts:
    @pytest.mark.parametrize("family,rank", list(sample_systems()))
    def test_positive_count_matches_closed_form(self, family, rank):
        rs = roots.build(family, rank)
        assert len(rs.positive_roots) == roots.POSITIVE_COUNTS[family](rank)

    def test_roots_are_distinct(self):
        for family, rank in sample_systems():
            rs = roots.build(family, rank)
            assert len({r.vector for r in rs.positive_roots}) == len(rs.positive_roots)


class TestHighestRoot:
    @pytest.mark.parametrize("family,rank", sorted(FROZEN_D))
    def test_d_vector_matches_reference(self, family, rank):
        assert roots.build(family, rank).d == FROZEN_D[(family, rank)]

    @pytest.mark.parametrize("family,rank", list(sample_systems()))
    def test_height_is_coxeter_number_minus_one(self, family, rank):
        rs = roots.build(family, rank)
        if family == "bc":
            assert sum(rs.d) == 2 * rank  # psi = 2(x_1), twice every simple root
        else:
            assert sum(rs.d) + 1 == COXETER_NUMBER[family](rank)

    @pytest.mark.parametrize("family,rank", list(sample_systems()))
    def test_highest_root_dominates(self, family, rank):
        rs = roots.build(family, rank)
        top = rs.highest_root.coefficients
        assert rs.d == top
        for root in rs.positive_roots:
            assert all(c <= t for c, t in zip(root.coefficients, top))

    def test_c3_highest_root_is_double_first_coordinate(self):
        rs = roots.build("c", 3)
        assert rs.highest_root.vector == linalg.vec(2, 0, 0)
        assert rs.highest_root.coefficients == (2, 2, 1)


class TestLengths:
    def test_bc2_has_three_length_classes(self):
        rs = roots.build("bc", 2)
        norms = sorted({linalg.dot(r.vector, r.vector) for r in rs.positive_roots})
        assert norms == [1, 2, 4]
        classes = roots.length_classes(rs)
        assert set(classes) == {"short", "medium", "long"}
        assert len(classes["short"]) == 2  # x_1, x_2
        assert len(classes["long"]) == 2  # 2x_1, 2x_2

    def test_simply_laced_families_have_one_class(self):
        for family, rank in (("a", 5), ("d", 6), ("e6", 6), ("e7", 7), ("e8", 8)):
            assert set(roots.length_classes(roots.build(family, rank))) == {"long"}


class TestLookups:
    def test_c1_normalizes_to_a1(self):
        rs = roots.build("c", 1)
        assert rs.family == "a"
        assert rs.rank == 1

    def test_family_aliases(self):
        assert roots.normalize_family("A") == "a"
        assert roots.normalize_family("BC") == "bc"

    def test_root_with_vector_round_trip(self):
        rs = roots.build("f4", 4)
        for root in rs.positive_roots:
            assert roots.root_with_vector(rs, root.vector) is root
        assert roots.root_with_vector(rs, linalg.vec(9, 9, 9, 9)) is None

    def test_is_root_vector_sees_negatives(self):
        rs = roots.build("g2", 2)
        v = rs.positive_roots[0].vector
        assert roots.is_root_vector(rs, linalg.scale(-1, v))

    def test_coefficients_inverts_expansion(self):
        rs = roots.build("d", 5)
        for root in rs.positive_roots:
            assert roots.coefficients(rs, root.vector) == root.coefficients


class TestSubsystems:
    def test_long_roots_of_b3_form_a_subsystem(self):
        rs = roots.build("b", 3)
        longs = roots.length_classes(rs)["long"]
        assert len(longs) == 6
        assert roots.is_subsystem(rs, longs)

    def test_open_set_is_not_a_subsystem(self):
        rs = roots.build("a", 2)
        alpha, beta = rs.simple_roots
        members = [r for r in rs.positive_roots if r.vector in (alpha, beta)]
        assert not roots.is_subsystem(rs, members)


class TestScale:
    @given(st.sampled_from([(f, r) for f, r in sample_systems()][::3]),
           st.sampled_from([Q(2), Q(1, 3), Q(7, 5)]))
    def test_combinatorics_ignore_scale(self, system, scale):
        family, rank = system
        plain = roots.build(family, rank)
        scaled = roots.build(family, rank, scale=scale)
        assert scaled.scale == scale
        assert [r.vector for r in scaled.positive_roots] == [
            r.vector for r in plain.positive_roots]
        assert scaled.d == plain.d

    def test_inner_product_scales_linearly(self):
        plain = roots.build("b", 3)
        doubled = roots.build("b", 3, scale=Q(2))
        v = plain.highest_root.vector
        assert doubled.inner(v, v) == 2 * plain.inner(v, v)

    def test_build_is_cached(self):
        assert roots.build("e6", 6) is roots.build("e6", 6)
        assert roots.build("e6") == roots.build("e6", 6)
