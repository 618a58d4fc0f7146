"""Deck-transformation subgroups encoded as corner-index sets.

A compact quotient of a simply connected space is cut out by a subgroup of
the finite abelian group generated by the special points p_i = exp(pi e_i)
at corners with highest-root coefficient 1. Only the corner membership of
the subgroup matters downstream (each member contributes one halfspace),
so a subgroup is stored as its set of corner indices plus a display label.
The group law itself is never needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from . import polytopes, roots
from .roots import RootSystem


@dataclass(frozen=True)
class GammaSubgroup:
    """One subgroup option: label, corner indices of its nontrivial elements.

    corner_indices is None for the catch-all marker covering the a-family
    subgroups without a validated boundary maximum; those can only be
    computed through an explicitly constructed subgroup (cyclic_subgroup).
    """

    label: str
    corner_indices: frozenset[int] | None
    supported: bool = True


@dataclass(frozen=True)
class CenterDescription:
    group_label: str
    order: int
    order_one_corners: tuple[int, ...]


def center(rs: RootSystem) -> CenterDescription:
    """Structure of the corner center, computed from the d-vector."""
    ones = tuple(j + 1 for j, dj in enumerate(rs.d) if dj == 1)
    family, r = rs.family, rs.rank
    if family == "a":
        label, order = f"Z_{r + 1}", r + 1
    elif family in ("b", "c"):
        label, order = "Z_2", 2
    elif family == "d":
        label, order = ("Z_2+Z_2", 4) if r % 2 == 0 else ("Z_4", 4)
    elif family == "e6":
        label, order = "Z_3", 3
    elif family == "e7":
        label, order = "Z_2", 2
    else:
        label, order = "trivial", 1
    assert len(ones) == order - 1, (family, r, ones)
    return CenterDescription(label, order, ones)


def subgroups(rs: RootSystem) -> tuple[GammaSubgroup, ...]:
    """Nontrivial subgroup options for this system, unsupported marker last."""
    family, r = rs.family, rs.rank
    if family == "a":
        out = []
        if r % 2 == 1 and r > 1:
            out.append(GammaSubgroup("Z_2", frozenset({(r + 1) // 2})))
        out.append(GammaSubgroup(f"Z_{r + 1}", frozenset(range(1, r + 1))))
        leftovers = [m for m in range(2, r + 1) if (r + 1) % m == 0
                     and not (m == 2 and r % 2 == 1)]
        if leftovers:
            out.append(GammaSubgroup("otherwise", None, supported=False))
        return tuple(out)
    if family == "b":
        return (GammaSubgroup("Z_2", frozenset({1})),)
    if family == "c":
        return (GammaSubgroup("Z_2", frozenset({r})),)
    if family == "d":
        if r % 2 == 0:
            return (
                GammaSubgroup("Z_2+Z_2", frozenset({1, r - 1, r})),
                GammaSubgroup("{e,p_1}", frozenset({1})),
                GammaSubgroup(f"{{e,p_{r - 1}}}", frozenset({r - 1})),
                GammaSubgroup(f"{{e,p_{r}}}", frozenset({r})),
            )
        return (
            GammaSubgroup("Z_4", frozenset({1, r - 1, r})),
            GammaSubgroup("{e,p_1}", frozenset({1})),
        )
    if family == "e6":
        return (GammaSubgroup("Z_3", frozenset({1, 6})),)
    if family == "e7":
        return (GammaSubgroup("Z_2", frozenset({7})),)
    return ()


def cyclic_subgroup(rs: RootSystem, order: int) -> GammaSubgroup:
    """Order-m subgroup of the cyclic a-family center, with concrete indices.

    Supported only when it coincides with a catalogued option (the order-2
    subgroup at odd rank, or the full center); anything else is returned
    with supported=False so reports mark it as unvalidated.
    """
    if rs.family != "a":
        raise ValueError("cyclic subgroup construction applies to the a family only")
    n = rs.rank + 1
    if not 2 <= order <= n or n % order != 0:
        raise ValueError(f"the center of {rs.name} has no subgroup of order {order}")
    step = n // order
    indices = frozenset(k * step for k in range(1, order))
    supported = order == n or (order == 2 and rs.rank % 2 == 1)
    return GammaSubgroup(f"Z_{order}", indices, supported)


def _canonical(label: str, rank: int) -> str:
    s = label.strip().lower()
    for a, b in (("⊕", "+"), ("×", "x"), ("ℤ", "z")):
        s = s.replace(a, b)
    for ch in " _{}()":
        s = s.replace(ch, "")
    s = s.replace("xz", "+z")
    s = s.replace("r+1", str(rank + 1)).replace("r-1", str(rank - 1))
    # A lone r only ever appears as a rank placeholder in subgroup labels.
    s = "".join(str(rank) if c == "r" else c for c in s)
    s = s.replace("e,p", "ep").replace(",", "")
    return s


def resolve_subgroup(rs: RootSystem, label: str) -> GammaSubgroup:
    """Find the subgroup option matching a user-supplied label.

    Accepts spelling variants (Z2, Z_2, Z_{r+1}, {e,p_1}, Z_2+Z_2 and so
    on). For the a family any cyclic order dividing the center order is
    resolvable; non-catalogued ones come back with supported=False.
    """
    key = _canonical(label, rs.rank)
    options = subgroups(rs)
    if rs.family == "d" and rs.rank % 2 == 1 and key == "z2":
        key = "ep1"  # the unique order-2 subgroup at odd rank
    if rs.family == "d" and rs.rank % 2 == 0 and key == "z2":
        names = ", ".join(g.label for g in options[1:])
        raise ValueError(f"Z_2 is ambiguous for {rs.name}; pick one of {names}")
    matches = [g for g in options if _canonical(g.label, rs.rank) == key]
    if matches:
        return matches[0]
    if rs.family == "a" and key.startswith("z") and key[1:].isdigit():
        return cyclic_subgroup(rs, int(key[1:]))
    names = ", ".join(g.label for g in options) or "none"
    raise ValueError(f"{rs.name} has no subgroup {label!r} (options: {names})")


TABLE2_CAPTION = "maximal outer-boundary points of the cut polytope, per quotient"


def expected_max_prime(family: str, rank: int, label: str) -> list[tuple[str, tuple[int, ...]]]:
    """Declared (form, corner indices) list for a validated quotient row.

    This is the reference the verify sweep compares max_prime against. For
    the odd-rank a-family order-2 quotient the declared set is the full
    mirror pair {j, r+1-j}: the diagram flip fixes the single cut, so both
    images attain the maximum (the printed tables keep one representative).
    """
    family = roots.normalize_family(family)
    r = rank
    key = _canonical(label, r)
    if family == "a":
        if key == "z2" and r % 2 == 1 and r >= 3:
            half = (r + 1) // 2
            if half % 2 == 0:
                j = (r + 1) // 4
                return _dedup([("corner", (j,)), ("corner", (r + 1 - j,))])
            k = (r - 1) // 4
            return _dedup([("half_sum", (k, k + 1)), ("half_sum", (r - k, r + 1 - k))])
        if key == f"z{r + 1}":
            return [("full_sum", tuple(range(1, r + 1)))]
        raise ValueError(f"no declared row for a{r} with {label!r}")
    if family == "b" and key == "z2":
        return [("corner", (r,))]
    if family == "c" and key == "z2":
        if r % 2 == 0:
            return [("corner", (r // 2,))]
        return [("half_sum", ((r - 1) // 2, (r + 1) // 2))]
    if family == "d":
        if key in ("z2+z2", "z4"):
            if r % 2 == 0:
                return [("corner", (r // 2,))]
            return [("half_sum", ((r - 1) // 2, (r + 1) // 2))]
        if key == "ep1":
            return [("corner", (r - 1,)), ("corner", (r,))]
        if key in (f"ep{r - 1}", f"ep{r}") and r % 2 == 0:
            if r <= 6:
                return [("corner", (1,))]
            if r == 8:
                return [("corner", (1,)), ("corner", (4,))]
            return [("corner", (r // 2,))]
        raise ValueError(f"no declared row for d{r} with {label!r}")
    if family == "e6" and key == "z3":
        return [("corner", (4,))]
    if family == "e7" and key == "z2":
        return [("corner", (2,))]
    raise ValueError(f"no declared row for {family}{r} with {label!r}")


def expected_orbit_bases(family: str, rank: int, label: str) -> list[tuple[str, tuple[int, ...]]]:
    """Published orbit representatives for a validated quotient row.

    Same as expected_max_prime except for the odd-rank a-family order-2
    quotient: there the two mirror maxima are deck translates of each other,
    so the published list keeps only the lower-index representative.
    """
    declared = expected_max_prime(family, rank, label)
    fam = roots.normalize_family(family)
    if fam == "a" and rank % 2 == 1 and rank >= 3 and _canonical(label, rank) == "z2":
        return declared[:1]
    return declared


def _dedup(items: list[tuple[str, tuple[int, ...]]]) -> list[tuple[str, tuple[int, ...]]]:
    seen: list[tuple[str, tuple[int, ...]]] = []
    for item in sorted(items, key=lambda fi: fi[1]):
        if item not in seen:
            seen.append(item)
    return seen


def _w(*parts: str) -> tuple[Q, ...]:
    return tuple(Q(p) for p in parts)


KNOWN_EXTRA_MAXIMA: dict[tuple[str, int, frozenset[int]], tuple[tuple[Q, ...], ...]] = {
    ("d", 4, frozenset({3})): (_w("0", "0", "0", "1"),),
    ("d", 4, frozenset({4})): (_w("0", "0", "1", "0"),),
    ("d", 8, frozenset({7})): (_w("1/2", "0", "0", "0", "0", "0", "0", "1/2"),),
    ("d", 8, frozenset({8})): (_w("1/2", "0", "0", "0", "0", "0", "1/2", "0"),),
}
"""Literal tied maxima the validated descriptions leave out.

In exactly these four quotients the exact argmax of the norm over the
outer boundary contains one more point than the validated description:
at rank 4 the spinor cut keeps a second norm-1 corner, and at rank 8 the
cut crosses the edge from e_1 to the far spinor corner exactly at the
shared maximum (the rank at which the single-corner regimes switch over).
Weights are in corner coordinates. Reports keep the validated orbit list
and surface these separately; anything not pinned here fails loudly.
"""


def known_extra_maxima(rs: RootSystem, gamma: GammaSubgroup) -> tuple[tuple[Q, ...], ...]:
    """Pinned unlisted tied maxima for this quotient (usually empty)."""
    if gamma.corner_indices is None:
        return ()
    return KNOWN_EXTRA_MAXIMA.get((rs.family, rs.rank, gamma.corner_indices), ())


def _materialize(rs: RootSystem, declared: list[tuple[str, tuple[int, ...]]]) -> list[polytopes.BasePoint]:
    out = []
    for form, idx in declared:
        r = rs.rank
        if form == "corner":
            weights = tuple(Q(k == idx[0] - 1) for k in range(r))
        elif form == "half_sum":
            weights = tuple(Q(1, 2) if k + 1 in idx else Q(0) for k in range(r))
        else:
            weights = (Q(1, r + 1),) * r
        out.append(polytopes.base_point(rs, weights))
    return out


def expected_base_points(rs: RootSystem, gamma: GammaSubgroup) -> list[polytopes.BasePoint]:
    """Declared max_prime rows materialized as base points (for checks)."""
    return _materialize(rs, expected_max_prime(rs.family, rs.rank, gamma.label))


def orbit_base_points(rs: RootSystem, gamma: GammaSubgroup) -> list[polytopes.BasePoint]:
    """Published orbit representatives materialized as base points."""
    return _materialize(rs, expected_orbit_bases(rs.family, rs.rank, gamma.label))
