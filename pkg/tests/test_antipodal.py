"""Tangent root sets, orbit dimensions, and full antipodal reports."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from antipodal_atlas import antipodal, catalog, centers, polytopes, roots


def corner_base(rs, j):
    return polytopes.base_point(rs, tuple(Q(int(k == j - 1)) for k in range(rs.rank)))


def half_sum_base(rs, j):
    return polytopes.base_point(rs, tuple(
        Q(1, 2) if k in (j - 1, j) else Q(0) for k in range(rs.rank)))


def full_sum_base(rs):
    return polytopes.base_point(rs, (Q(1, rs.rank + 1),) * rs.rank)


def row(name, table=None, condition=None):
    hits = [r for r in catalog.find_spaces(name)
            if (table is None or r.table == table)
            and (condition is None or r.condition == condition)]
    assert hits, (name, table, condition)
    return hits[0]


class TestTangentRoots:
    def test_g2_first_corner_by_hand(self):
        # d_1 = 3, so J is the set of positive roots with c_1 not divisible
        # by 3: (1,0), (1,1), (2,1) out of the six.
        rs = roots.build("g2", 2)
        j = antipodal.tangent_roots(rs, corner_base(rs, 1))
        assert sorted(a.coefficients for a in j) == [(1, 0), (1, 1), (2, 1)]

    def test_b4_corners_by_hand(self):
        rs = roots.build("b", 4)
        assert antipodal.tangent_roots(rs, corner_base(rs, 1)) == []
        j4 = antipodal.tangent_roots(rs, corner_base(rs, 4))
        assert len(j4) == 4
        assert all(a.coefficients[3] == 1 for a in j4)

    def test_e8_corner_count(self):
        rs = roots.build("e8", 8)
        assert len(antipodal.tangent_roots(rs, corner_base(rs, 1))) == 64

    @pytest.mark.parametrize("family,rank", [
        ("a", 5), ("a", 8), ("b", 6), ("c", 7), ("d", 6), ("d", 9),
        ("bc", 5), ("e6", 6), ("e7", 7), ("e8", 8), ("f4", 4), ("g2", 2),
    ])
    def test_unified_formula_matches_single_corner_sets(self, family, rank):
        rs = roots.build(family, rank)
        for j in range(1, rank + 1):
            via_point = {a.vector for a in antipodal.tangent_roots(rs, corner_base(rs, j))}
            via_index = {a.vector for a in antipodal.j_single(rs, j)}
            assert via_point == via_index

    @pytest.mark.parametrize("family,rank", [
        ("a", 5), ("b", 6), ("c", 7), ("d", 9), ("bc", 4), ("f4", 4),
    ])
    def test_unified_formula_matches_pair_sets(self, family, rank):
        rs = roots.build(family, rank)
        for j in range(1, rank):
            via_point = {a.vector
                         for a in antipodal.tangent_roots(rs, half_sum_base(rs, j))}
            via_index = {a.vector for a in antipodal.j_pair(rs, j)}
            assert via_point == via_index

    def test_full_sum_base_meets_every_positive_root(self):
        for rank in (2, 3, 5, 8):
            rs = roots.build("a", rank)
            j = antipodal.tangent_roots(rs, full_sum_base(rs))
            assert len(j) == len(rs.positive_roots)


class TestIsotropy:
    @pytest.mark.parametrize("family,rank,j", [
        ("a", 6, 3), ("b", 5, 2), ("c", 6, 6), ("d", 7, 1), ("e7", 7, 7),
    ])
    def test_sigma_x_is_a_subsystem_disjoint_from_j(self, family, rank, j):
        rs = roots.build(family, rank)
        base = corner_base(rs, j)
        iso = antipodal.sigma_x(rs, base)
        assert roots.is_subsystem(rs, iso)
        tangent = {a.vector for a in antipodal.tangent_roots(rs, base)}
        assert tangent.isdisjoint({a.vector for a in iso})

    def test_corner_isotropy_drops_exactly_the_supported_roots(self):
        rs = roots.build("d", 6)
        iso = antipodal.sigma_x(rs, corner_base(rs, 3))
        assert all(a.coefficients[2] == 0 for a in iso)
        assert len(iso) == len([a for a in rs.positive_roots
                                if a.coefficients[2] == 0])


class TestDengLiu:
    def test_unit_coefficient_corners_give_zero_dimension(self):
        # d_j = 1 forces an empty J-set, hence a zero-dimensional orbit,
        # for every space over the same root system.
        for family, rank in (("a", 7), ("b", 5), ("c", 6), ("d", 8),
                             ("e6", 6), ("e7", 7)):
            rs = roots.build(family, rank)
            for j in range(1, rank + 1):
                if rs.d[j - 1] == 1:
                    assert antipodal.tangent_roots(rs, corner_base(rs, j)) == []

    def test_positive_dimension_needs_a_gate(self):
        # Conversely a corner orbit with positive dimension always sits at
        # a corner with d_j >= 2.
        for family, rank in (("b", 6), ("bc", 4), ("e8", 8), ("f4", 4),
                             ("g2", 2)):
            rs = roots.build(family, rank)
            for j in range(1, rank + 1):
                if antipodal.tangent_roots(rs, corner_base(rs, j)):
                    assert rs.d[j - 1] >= 2


class TestReports:
    def test_simply_connected_fixed_rows(self):
        cases = {("E VIII", 3): (64,), ("E8", 5): (128,), ("G2", 5): (6,),
                 ("Spin(9)", 5): (0, 8), ("E I", 3): (0, 0)}
        for (name, table), dims in cases.items():
            space = row(name, table)
            report = antipodal.antipodal_report(space, space.r_min)
            assert report.status == antipodal.PAPER_VALIDATED
            assert report.dimensions == dims
            assert report.gamma is None

    def test_quotient_fixed_rows(self):
        cases = {("E I", 4): (27,), ("E IV", 4): (24,), ("E VII", 4): (49,),
                 ("E6", 6): (54,), ("E7", 6): (70,)}
        for (name, table), dims in cases.items():
            space = row(name, table)
            report = antipodal.antipodal_report(space, space.r_min)
            assert report.status == antipodal.PAPER_VALIDATED
            assert report.dimensions == dims

    def test_parity_split_dimensions(self):
        odd = row("Sp(r)/U(r)", 4, "r odd")
        assert antipodal.antipodal_report(odd, 5).dimensions == (17,)
        even = row("Sp(r)/U(r)", 4, "r even")
        assert antipodal.antipodal_report(even, 4).dimensions == (8,)

    def test_q_dependent_dimensions(self):
        space = row("Gr_{r,r+q}(C)")
        assert antipodal.antipodal_report(space, 4, 3).dimensions == (24,)

    def test_mirror_maxima_are_deck_equivalent(self):
        space = row("SU(2r+2)/SO(2r+2)", 4, "(r+1)/2 even")
        report = antipodal.antipodal_report(space, 3)
        assert len(report.orbits) == 1
        assert report.orbits[0].base.corner_indices == (2,)
        assert len(report.equivalent_maxima) == 1
        assert report.equivalent_maxima[0].base.corner_indices == (6,)
        assert report.equivalent_maxima[0].orbit_index == 0
        assert not report.unlisted_ties

    def test_d8_ties_are_reported_not_hidden(self):
        spin16 = row("Spin(16)", 6)
        report = antipodal.antipodal_report(spin16, 8, gamma_label="{e,p_7}")
        assert report.dimensions == (0, 64)
        assert len(report.unlisted_ties) == 1
        tie = report.unlisted_ties[0]
        assert tie.dimension == 56
        assert tie.base.weights[0] == tie.base.weights[7] == Q(1, 2)
        gr88 = row("Gr_{8,8}", 4)
        report = antipodal.antipodal_report(gr88, 8, gamma_label="{e,p_8}")
        assert report.dimensions == (0, 32)
        assert report.unlisted_ties[0].dimension == 28

    def test_orbit_counts_add_up_to_the_literal_argmax(self):
        cases = [("SU(2r+2)/SO(2r+2)", 4, "(r+1)/2 even", 3, None),
                 ("Spin(16)", 6, None, 8, "{e,p_7}"),
                 ("Gr_{r,r}", 4, "r even", 6, "Z_2+Z_2")]
        for name, table, condition, r, gamma in cases:
            space = row(name, table, condition)
            report = antipodal.antipodal_report(space, r, gamma_label=gamma)
            rs = roots.build(space.family, space.rank(r))
            poly = polytopes.p_gamma(rs, report.gamma)
            found = polytopes.max_prime(poly)
            assert (len(report.orbits) + len(report.equivalent_maxima)
                    + len(report.unlisted_ties)) == len(found)

    def test_unpinned_discrepancy_fails_loudly(self, monkeypatch):
        monkeypatch.setattr(centers, "KNOWN_EXTRA_MAXIMA", {})
        space = row("Spin(16)", 6)
        with pytest.raises(polytopes.UnexpectedVertexError):
            antipodal.antipodal_report(space, 8, gamma_label="{e,p_7}")

    def test_excluded_quotient_reports_without_forcing(self):
        space = row("SU(r+1)/SO(r+1)", 4, "otherwise")
        report = antipodal.antipodal_report(space, 7, gamma_label="Z_4")
        assert report.status == antipodal.EXCLUDED_UNKNOWN
        assert report.orbits == ()

    def test_forcing_computes_the_excluded_case(self):
        space = row("SU(r+1)/SO(r+1)", 4, "otherwise")
        report = antipodal.antipodal_report(space, 7, gamma_label="Z_4", force=True)
        assert report.status == antipodal.COMPUTED_NOT_VALIDATED
        assert report.orbits
        assert all(orbit.dimension >= 0 for orbit in report.orbits)

    def test_forcing_the_bare_marker_is_rejected(self):
        space = row("SU(r+1)/SO(r+1)", 4, "otherwise")
        with pytest.raises(ValueError, match="concrete"):
            antipodal.antipodal_report(space, 7, force=True)

    def test_gamma_on_simply_connected_row_rejected(self):
        space = row("E VIII", 3)
        with pytest.raises(ValueError, match="without quotients"):
            antipodal.antipodal_report(space, space.r_min, gamma_label="Z_2")

    def test_out_of_range_parameters_rejected(self):
        space = row("Sp(r)/U(r)", 4, "r even")
        with pytest.raises(ValueError):
            antipodal.antipodal_report(space, 5)


class TestResolveSpace:
    def test_fixed_rows_bind_r_automatically(self):
        space, bound = antipodal.resolve_space("E VIII")
        assert space.table == 3
        assert bound == space.r_min

    def test_simply_connected_preferred_without_gamma(self):
        space, bound = antipodal.resolve_space("Spin(2r+1)", 5)
        assert space.table == 5
        assert bound == 5

    def test_gamma_label_picks_the_quotient_row(self):
        space, bound = antipodal.resolve_space("Spin(2r+1)", 5, gamma_label="Z_2")
        assert space.table == 6
        report = antipodal.antipodal_report(space, bound, gamma_label="Z_2")
        assert report.dimensions == (10,)

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="no catalogued space"):
            antipodal.resolve_space("SU(5)/Sp(2)")

    def test_missing_r(self):
        with pytest.raises(ValueError, match="explicit r"):
            antipodal.resolve_space("Sp(r)/U(r)")

    def test_fixed_rows_ignore_a_stray_r(self):
        space, bound = antipodal.resolve_space("Spin(9)", 3)
        assert bound == space.r_min == 4

    def test_unmatched_parameters(self):
        with pytest.raises(ValueError, match="admits"):
            antipodal.resolve_space("Sp(r)/U(r)", 1)

    def test_ambiguous_gamma_error_propagates(self):
        with pytest.raises(ValueError, match="ambiguous"):
            antipodal.resolve_space("Spin(2r)", 6, gamma_label="Z_2")


class TestScaleInvariance:
    @given(st.sampled_from([("b", 5, 5), ("c", 6, 3), ("bc", 4, 4),
                            ("e8", 8, 1), ("g2", 2, 1)]),
           st.sampled_from([Q(2), Q(1, 3)]))
    @settings(max_examples=20, deadline=None)
    def test_tangent_sets_ignore_scale(self, case, scale):
        family, rank, j = case
        plain = roots.build(family, rank)
        scaled = roots.build(family, rank, scale=scale)
        plain_j = {a.coefficients
                   for a in antipodal.tangent_roots(plain, corner_base(plain, j))}
        scaled_j = {a.coefficients
                    for a in antipodal.tangent_roots(scaled, corner_base(scaled, j))}
        assert plain_j == scaled_j
