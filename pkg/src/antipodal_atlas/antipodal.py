"""Antipodal-set reports: base points, tangent-root sets, orbit dimensions.

The orbit through the image of a boundary base point x has tangent space
spanned by the root spaces of the positive roots whose pairing with x is
not an integer; the orbit dimension is the sum of their multiplicities.
A report bundles one orbit per published base point, classifies any other
tied maxima by deck equivalence, and carries a status flag for quotients
without a validated boundary description.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from . import catalog, centers, polytopes, roots
from .catalog import SpaceDescriptor
from .centers import GammaSubgroup
from .polytopes import BasePoint, UnexpectedVertexError
from .roots import Root, RootSystem

PAPER_VALIDATED = "paper-validated"
EXCLUDED_UNKNOWN = "excluded-unknown"
COMPUTED_NOT_VALIDATED = "computed-not-validated"


@dataclass(frozen=True)
class AntipodalOrbit:
    """One orbit: base point, contributing roots, dimension, isotropy roots."""

    base: BasePoint
    tangent_roots: tuple[Root, ...]
    dimension: int
    sigma_x: tuple[Root, ...]


@dataclass(frozen=True)
class EquivalentMaximum:
    """A tied maximum that is a deck image of the indexed orbit's base."""

    base: BasePoint
    orbit_index: int


@dataclass(frozen=True)
class UnlistedTie:
    """A tied maximum that is not deck-equivalent to any published base."""

    base: BasePoint
    tangent_roots: tuple[Root, ...]
    dimension: int


@dataclass(frozen=True)
class AntipodalReport:
    """Full antipodal description of one catalogued space at fixed parameters."""

    space: SpaceDescriptor
    r: int
    q: int | None
    gamma: GammaSubgroup | None
    status: str
    orbits: tuple[AntipodalOrbit, ...]
    equivalent_maxima: tuple[EquivalentMaximum, ...] = ()
    unlisted_ties: tuple[UnlistedTie, ...] = ()

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(orbit.dimension for orbit in self.orbits)


def sigma_x(rs: RootSystem, base: BasePoint) -> tuple[Root, ...]:
    """Isotropy subsystem: the positive roots vanishing on the base point."""
    return tuple(a for a in rs.positive_roots if rs.inner(a.vector, base.point) == 0)


def j_single(rs: RootSystem, j: int) -> list[Root]:
    """Positive roots whose j-th coefficient is not a natural multiple of d_j."""
    if not 1 <= j <= rs.rank:
        raise IndexError(f"corner index {j} out of range for {rs.name}")
    dj = rs.d[j - 1]
    return [a for a in rs.positive_roots if a.coefficients[j - 1] % dj != 0]


def j_pair(rs: RootSystem, j: int) -> list[Root]:
    """Positive roots where c_j/d_j + c_{j+1}/d_{j+1} is not an even natural."""
    if not 1 <= j < rs.rank:
        raise IndexError(f"adjacent pair ({j}, {j + 1}) out of range for {rs.name}")
    dj, dk = rs.d[j - 1], rs.d[j]
    out = []
    for a in rs.positive_roots:
        value = Q(a.coefficients[j - 1], dj) + Q(a.coefficients[j], dk)
        if value.denominator != 1 or int(value) % 2 != 0:
            out.append(a)
    return out


def tangent_roots(rs: RootSystem, base: BasePoint) -> list[Root]:
    """Positive roots whose pairing with the base point is not an integer."""
    return [a for a in rs.positive_roots
            if rs.inner(a.vector, base.point).denominator != 1]


def orbit_dimension(space: SpaceDescriptor, r: int, base: BasePoint,
                    q: int | None = None) -> int:
    """Dimension of the antipodal orbit through one base point."""
    rs = roots.build(space.family, space.rank(r))
    return sum(catalog.multiplicity(space, a, r=r, q=q)
               for a in tangent_roots(rs, base))


def _make_orbit(space: SpaceDescriptor, rs: RootSystem, r: int, q: int | None,
                base: BasePoint) -> AntipodalOrbit:
    tangent = tuple(tangent_roots(rs, base))
    dim = sum(catalog.multiplicity(space, a, r=r, q=q) for a in tangent)
    return AntipodalOrbit(base, tangent, dim, sigma_x(rs, base))


def _deck_match(rs: RootSystem, gamma: GammaSubgroup, base: BasePoint,
                orbit_bases: list[BasePoint]) -> int | None:
    """Index of the orbit base some deck translate of base lands on, if any."""
    for i in sorted(gamma.corner_indices):
        image = polytopes.deck_image(rs, i, base.point)
        for k, published in enumerate(orbit_bases):
            if image == published.point:
                return k
    return None


def _resolve_gamma(rs: RootSystem, space: SpaceDescriptor,
                   gamma_label: str | None) -> GammaSubgroup:
    """Match a label against the row's subgroup options."""
    row_keys = {centers._canonical(lab, rs.rank) for lab in space.gamma_labels
                if lab != "otherwise"}
    if gamma_label is None:
        label = space.gamma_labels[0]
        if label == "otherwise":
            return GammaSubgroup("otherwise", None, supported=False)
        return centers.resolve_subgroup(rs, label)
    gamma = centers.resolve_subgroup(rs, gamma_label)
    if centers._canonical(gamma.label, rs.rank) in row_keys:
        return gamma
    if "otherwise" in space.gamma_labels and not gamma.supported:
        return gamma
    options = ", ".join(space.gamma_labels)
    raise ValueError(
        f"subgroup {gamma_label!r} does not belong to this row of "
        f"{space.name} (options: {options})")


def _simply_connected_report(space: SpaceDescriptor, rs: RootSystem,
                             r: int, q: int | None) -> AntipodalReport:
    bases = polytopes.maximal_corners(rs)
    expected = polytopes.expected_maximal_corners(rs.family, rs.rank)
    found = [b.corner_indices[0] for b in bases]
    if found != expected:
        raise UnexpectedVertexError(
            f"maximal corners of {rs.name} came out as {found}, "
            f"declared {expected}")
    orbits = tuple(_make_orbit(space, rs, r, q, b) for b in bases)
    return AntipodalReport(space, r, q, None, PAPER_VALIDATED, orbits)


def _forced_report(space: SpaceDescriptor, rs: RootSystem, r: int, q: int | None,
                   gamma: GammaSubgroup) -> AntipodalReport:
    if gamma.corner_indices is None:
        raise ValueError(
            "forcing a computation needs a concrete subgroup (for example "
            "Z_4), not the catch-all marker")
    poly = polytopes.p_gamma(rs, gamma)
    found = polytopes.max_prime(poly)
    orbits = tuple(_make_orbit(space, rs, r, q, b) for b in found)
    return AntipodalReport(space, r, q, gamma, COMPUTED_NOT_VALIDATED, orbits)


def _quotient_report(space: SpaceDescriptor, rs: RootSystem, r: int, q: int | None,
                     gamma: GammaSubgroup) -> AntipodalReport:
    poly = polytopes.p_gamma(rs, gamma)
    found = polytopes.max_prime(poly)
    declared = centers.expected_base_points(rs, gamma)
    extras = centers.known_extra_maxima(rs, gamma)
    allowed = {b.weights for b in declared} | set(extras)
    found_weights = {b.weights for b in found}
    if found_weights != allowed:
        raise UnexpectedVertexError(
            f"boundary maxima of {rs.name} mod {gamma.label} came out as "
            f"{sorted(found_weights)}, declared {sorted(allowed)}")
    orbit_bases = centers.orbit_base_points(rs, gamma)
    orbit_weights = {b.weights for b in orbit_bases}
    orbits = tuple(_make_orbit(space, rs, r, q, b) for b in orbit_bases)
    equivalent, ties = [], []
    for base in found:
        if base.weights in orbit_weights:
            continue
        index = _deck_match(rs, gamma, base, orbit_bases)
        if index is None:
            tangent = tuple(tangent_roots(rs, base))
            dim = sum(catalog.multiplicity(space, a, r=r, q=q) for a in tangent)
            ties.append(UnlistedTie(base, tangent, dim))
        else:
            equivalent.append(EquivalentMaximum(base, index))
    return AntipodalReport(space, r, q, gamma, PAPER_VALIDATED, orbits,
                           tuple(equivalent), tuple(ties))


def antipodal_report(space: SpaceDescriptor, r: int, q: int | None = None,
                     gamma_label: str | None = None,
                     force: bool = False) -> AntipodalReport:
    """Antipodal description of one catalogued space at fixed parameters."""
    if not space.admits(r, q):
        raise ValueError(
            f"parameters r={r}, q={q} out of range for {space.name}"
            + (f" ({space.condition})" if space.condition else ""))
    rs = roots.build(space.family, space.rank(r))
    if space.simply_connected:
        if gamma_label is not None:
            raise ValueError(
                f"{space.name} is catalogued without quotients; "
                "pick the matching quotient row instead")
        return _simply_connected_report(space, rs, r, q)
    gamma = _resolve_gamma(rs, space, gamma_label)
    if not gamma.supported:
        if force:
            return _forced_report(space, rs, r, q, gamma)
        return AntipodalReport(space, r, q, gamma, EXCLUDED_UNKNOWN, ())
    return _quotient_report(space, rs, r, q, gamma)


def resolve_space(name: str, r: int | None = None, q: int | None = None,
                  gamma_label: str | None = None) -> tuple[SpaceDescriptor, int]:
    """Pick the catalog row matching a name, parameters, and subgroup label.

    Returns the row together with the bound value of r (rows with a fixed
    parameter bind it automatically). The r value is the row's own formula
    parameter, the one its dimension and rank expressions are written in.
    """
    hits = catalog.find_spaces(name)
    if not hits:
        raise ValueError(f"no catalogued space named {name!r}")
    candidates: list[tuple[SpaceDescriptor, int]] = []
    needs_r = False
    for row in hits:
        if r is None and row.has_free_r:
            needs_r = True
            continue
        bound = r if row.has_free_r else row.r_min
        if not row.admits(bound, q):
            continue
        if gamma_label is None:
            candidates.append((row, bound))
            continue
        if row.simply_connected:
            continue
        rs = roots.build(row.family, row.rank(bound))
        try:
            gamma = centers.resolve_subgroup(rs, gamma_label)
        except ValueError as exc:
            if "ambiguous" in str(exc):
                raise
            continue
        key = centers._canonical(gamma.label, rs.rank)
        row_keys = {centers._canonical(lab, rs.rank) for lab in row.gamma_labels
                    if lab != "otherwise"}
        if key in row_keys or ("otherwise" in row.gamma_labels and not gamma.supported):
            candidates.append((row, bound))
    if gamma_label is None and len(candidates) > 1:
        plain = [c for c in candidates if c[0].simply_connected]
        if len(plain) == 1:
            candidates = plain
    if not candidates:
        if needs_r:
            raise ValueError(f"{name!r} needs an explicit r value")
        raise ValueError(
            f"no row of {name!r} admits r={r}, q={q}"
            + (f", gamma={gamma_label}" if gamma_label else ""))
    if len(candidates) > 1:
        details = "; ".join(
            f"table {row.table}" + (f" ({row.condition})" if row.condition else "")
            for row, _ in candidates)
        raise ValueError(f"{name!r} is ambiguous here, matching rows: {details}")
    return candidates[0]
