"""Tests for the brute-force cross-check layer."""

import dataclasses

import pytest

from antipodal_atlas import centers, oracle, polytopes, roots


SAMPLE_SYSTEMS = [
    ("a", 1), ("a", 4), ("a", 7),
    ("b", 2), ("b", 5),
    ("c", 3), ("c", 6),
    ("d", 4), ("d", 7),
    ("bc", 1), ("bc", 3), ("bc", 5),
    ("e6", 6), ("e7", 7), ("f4", 4), ("g2", 2),
]


class TestClosedFormCounts:
    def test_small_values(self):
        assert oracle.POSITIVE_COUNTS["g2"](2) == 6
        assert oracle.POSITIVE_COUNTS["bc"](3) == 12
        assert oracle.POSITIVE_COUNTS["a"](1) == 1
        assert oracle.POSITIVE_COUNTS["e8"](8) == 120

    @pytest.mark.parametrize("family,rank", SAMPLE_SYSTEMS)
    def test_counts_match_the_engine(self, family, rank):
        rs = roots.build(family, rank)
        assert len(rs.positive_roots) == oracle.POSITIVE_COUNTS[rs.family](rank)


class TestRootEnumeration:
    @pytest.mark.parametrize("family,rank", SAMPLE_SYSTEMS)
    def test_closure_recovers_the_positive_vectors(self, family, rank):
        rs = roots.build(family, rank)
        assert oracle.enumerate_roots_oracle(family, rank) == {
            root.vector for root in rs.positive_roots
        }

    @pytest.mark.parametrize("family,rank", SAMPLE_SYSTEMS)
    def test_check_roots_agrees(self, family, rank):
        report = oracle.check_roots(family, rank)
        assert report.agreed
        assert report.mismatches == ()

    def test_a_dropped_root_is_flagged(self, monkeypatch):
        true_build = roots.build

        def corrupted(family, rank=None):
            rs = true_build(family, rank)
            if rs.family == "c" and rs.rank == 3:
                return dataclasses.replace(rs, positive_roots=rs.positive_roots[:-1])
            return rs

        monkeypatch.setattr(roots, "build", corrupted)
        report = oracle.check_roots("c", 3)
        assert not report.agreed
        assert any(claim == "missing" for _, claim, _ in report.mismatches)

    def test_a_wrong_coefficient_bound_is_caught(self, monkeypatch):
        true_build = roots.build

        def corrupted(family, rank=None):
            rs = true_build(family, rank)
            if rs.family == "g2":
                return dataclasses.replace(rs, d=(3, 1))
            return rs

        monkeypatch.setattr(roots, "build", corrupted)
        with pytest.raises(AssertionError, match="bound"):
            oracle.enumerate_roots_oracle("g2", 2)


class TestVertexChecks:
    def test_simplices_pass(self):
        for family, rank in (("a", 2), ("g2", 2), ("f4", 4)):
            poly = polytopes.simplex_polytope(roots.build(family, rank))
            report = oracle.vertex_check_oracle(poly)
            assert report.agreed, report.mismatches

    @pytest.mark.parametrize("family,rank,label", [
        ("a", 3, "Z_4"),
        ("a", 7, "Z_2"),
        ("b", 4, "Z_2"),
        ("c", 5, "Z_2"),
        ("d", 6, "Z_2+Z_2"),
        ("d", 8, "{e,p_7}"),
        ("e7", 7, "Z_2"),
    ])
    def test_quotient_polytopes_pass(self, family, rank, label):
        rs = roots.build(family, rank)
        gamma = centers.resolve_subgroup(rs, label)
        report = oracle.vertex_check_oracle(polytopes.p_gamma(rs, gamma))
        assert report.agreed, report.mismatches

    def test_an_infeasible_vertex_is_flagged(self):
        rs = roots.build("b", 3)
        gamma = centers.resolve_subgroup(rs, "Z_2")
        poly = polytopes.p_gamma(rs, gamma)
        first = poly.vertices[0]
        pushed = dataclasses.replace(
            first, weights=tuple(w + 2 for w in first.weights))
        broken = dataclasses.replace(
            poly, vertices=(pushed,) + poly.vertices[1:])
        report = oracle.vertex_check_oracle(broken)
        assert not report.agreed
        assert any("feasible" in claim for _, claim, _ in report.mismatches)

    def test_report_subject_names_the_cuts(self):
        rs = roots.build("c", 4)
        gamma = centers.resolve_subgroup(rs, "Z_2")
        report = oracle.vertex_check_oracle(polytopes.p_gamma(rs, gamma))
        assert report.subject == "polytope c4 cuts (4,)"
