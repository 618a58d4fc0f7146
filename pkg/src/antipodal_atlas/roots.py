"""Irreducible restricted root systems in exact rational coordinates.

Ten families are supported: a, b, c, d, bc (classical, parameterized by
rank) and e6, e7, e8, f4, g2 (fixed rank). Each system is realized with
explicit coordinate vectors, carries the expansion of every positive root
over the simple roots, and knows the highest-root coefficient vector d.
The bc family is the one non-reduced case (x_i and 2x_i both occur).

The inner product is `scale` times the standard dot product; `scale` is a
free positive rational. Coefficient vectors, length-class partitions and
everything built from them do not depend on it.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction as Q
from itertools import product
from typing import Iterable

from . import linalg
from .linalg import Vec

FAMILIES = ("a", "b", "c", "d", "bc", "e6", "e7", "e8", "f4", "g2")
EXCEPTIONAL_RANK = {"e6": 6, "e7": 7, "e8": 8, "f4": 4, "g2": 2}

POSITIVE_COUNTS = {
    "a": lambda r: r * (r + 1) // 2,
    "b": lambda r: r * r,
    "c": lambda r: r * r,
    "d": lambda r: r * (r - 1),
    "bc": lambda r: r * (r + 1),
    "e6": lambda r: 36,
    "e7": lambda r: 63,
    "e8": lambda r: 120,
    "f4": lambda r: 24,
    "g2": lambda r: 6,
}


@dataclass(frozen=True)
class Root:
    """One positive root: ambient vector, simple-root coefficients, length class."""

    vector: Vec
    coefficients: tuple[int, ...]
    length: str

    @property
    def height(self) -> int:
        return sum(self.coefficients)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Vec, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    d: tuple[int, ...]
    scale: Q

    def inner(self, u: Vec, v: Vec) -> Q:
        """Inner product of ambient vectors (scale times standard dot)."""
        return self.scale * linalg.dot(u, v)

    @property
    def name(self) -> str:
        if self.family in EXCEPTIONAL_RANK:
            return self.family
        return f"{self.family}{self.rank}"


def normalize_family(family: str) -> str:
    key = family.strip().lower()
    if key not in FAMILIES:
        raise ValueError(f"unknown root system family {family!r}")
    return key


def _basis(dim: int, i: int) -> Vec:
    """Standard basis vector x_i (1-based)."""
    return tuple(Q(1) if k == i - 1 else Q(0) for k in range(dim))


def _classical(family: str, r: int) -> tuple[int, list[Vec], list[Vec]]:
    if family == "a":
        dim = r + 1
        x = lambda i: _basis(dim, i)
        simples = [linalg.sub(x(i), x(i + 1)) for i in range(1, r + 1)]
        positives = [linalg.sub(x(i), x(j)) for i in range(1, r + 2) for j in range(i + 1, r + 2)]
        return dim, simples, positives
    dim = r
    x = lambda i: _basis(dim, i)
    chain = [linalg.sub(x(i), x(i + 1)) for i in range(1, r)]
    pairs = [f(x(i), x(j)) for i in range(1, r + 1) for j in range(i + 1, r + 1)
             for f in (linalg.sub, linalg.add)]
    shorts = [x(i) for i in range(1, r + 1)]
    doubles = [linalg.scale(2, x(i)) for i in range(1, r + 1)]
    if family == "b":
        return dim, chain + [x(r)], pairs + shorts
    if family == "c":
        return dim, chain + [doubles[r - 1]], pairs + doubles
    if family == "d":
        return dim, chain + [linalg.add(x(r - 1), x(r))], pairs
    if family == "bc":
        return dim, chain + [x(r)], pairs + shorts + doubles
    raise AssertionError(family)


def _spinor(dim: int, fixed: dict[int, Q], signed: list[int], parity: int) -> list[Vec]:
    """Half-sum vectors with prescribed fixed entries and sign-parity constraint."""
    out = []
    for signs in product((0, 1), repeat=len(signed)):
        if sum(signs) % 2 != parity:
            continue
        coords = [Q(0)] * dim
        for idx, value in fixed.items():
            coords[idx - 1] = value
        for idx, s in zip(signed, signs):
            coords[idx - 1] = Q(-1, 2) if s else Q(1, 2)
        out.append(tuple(coords))
    return out


def _exceptional(family: str) -> tuple[int, list[Vec], list[Vec]]:
    if family == "g2":
        dim = 3
        a1 = vecq(1, -1, 0)
        a2 = vecq(-2, 1, 1)
        positives = [a1, a2, vecq(-1, 0, 1), vecq(0, -1, 1), vecq(1, -2, 1), vecq(-1, -1, 2)]
        return dim, [a1, a2], positives
    if family == "f4":
        dim = 4
        x = lambda i: _basis(dim, i)
        simples = [linalg.sub(x(2), x(3)), linalg.sub(x(3), x(4)), x(4),
                   vecq("1/2", "-1/2", "-1/2", "-1/2")]
        positives = [x(i) for i in range(1, 5)]
        positives += [f(x(i), x(j)) for i in range(1, 5) for j in range(i + 1, 5)
                      for f in (linalg.sub, linalg.add)]
        positives += [tuple(Q(s, 2) for s in (1, s2, s3, s4))
                      for s2 in (1, -1) for s3 in (1, -1) for s4 in (1, -1)]
        return dim, simples, positives
    # The three e-families share one 8-coordinate layout.
    dim = 8
    x = lambda i: _basis(dim, i)
    alpha1 = tuple(Q(s, 2) for s in (1, -1, -1, -1, -1, -1, -1, 1))
    alpha2 = linalg.add(x(1), x(2))
    chain = [linalg.sub(x(i - 1), x(i - 2)) for i in range(3, 9)]  # alpha_3 .. alpha_8
    if family == "e6":
        simples = [alpha1, alpha2] + chain[:4]
        positives = [f(x(j), x(i)) for i in range(1, 6) for j in range(i + 1, 6)
                     for f in (linalg.sub, linalg.add)]
        positives += _spinor(dim, {8: Q(1, 2), 7: Q(-1, 2), 6: Q(-1, 2)}, [1, 2, 3, 4, 5], 0)
        return dim, simples, positives
    if family == "e7":
        simples = [alpha1, alpha2] + chain[:5]
        positives = [f(x(j), x(i)) for i in range(1, 7) for j in range(i + 1, 7)
                     for f in (linalg.sub, linalg.add)]
        positives += [linalg.sub(x(8), x(7))]
        positives += _spinor(dim, {8: Q(1, 2), 7: Q(-1, 2)}, [1, 2, 3, 4, 5, 6], 1)
        return dim, simples, positives
    if family == "e8":
        simples = [alpha1, alpha2] + chain
        positives = [f(x(j), x(i)) for i in range(1, 9) for j in range(i + 1, 9)
                     for f in (linalg.sub, linalg.add)]
        positives += _spinor(dim, {8: Q(1, 2)}, [1, 2, 3, 4, 5, 6, 7], 0)
        return dim, simples, positives
    raise AssertionError(family)


def vecq(*parts) -> Vec:
    return linalg.vec(*parts)


def _validate_rank(family: str, rank: int | None) -> int:
    if family in EXCEPTIONAL_RANK:
        expected = EXCEPTIONAL_RANK[family]
        if rank not in (None, expected):
            raise ValueError(f"{family} has rank {expected}, got {rank}")
        return expected
    if rank is None:
        raise ValueError(f"family {family!r} needs an explicit rank")
    minimum = {"a": 1, "b": 2, "c": 1, "d": 3, "bc": 1}[family]
    if rank < minimum:
        raise ValueError(f"{family} requires rank >= {minimum}, got {rank}")
    return rank


def _length_label_map(norms: list[Q]) -> dict[Q, str]:
    distinct = sorted(set(norms))
    if len(distinct) == 1:
        return {distinct[0]: "long"}
    if len(distinct) == 2:
        return {distinct[0]: "short", distinct[1]: "long"}
    if len(distinct) == 3:
        return {distinct[0]: "short", distinct[1]: "medium", distinct[2]: "long"}
    raise AssertionError(f"more than three root lengths: {distinct}")


@functools.cache
def build(family: str, rank: int | None = None, scale: Q = Q(1)) -> RootSystem:
    """Construct a root system; results are cached per (family, rank, scale)."""
    family = normalize_family(family)
    scale = Q(scale)
    if scale <= 0:
        raise ValueError("scale must be a positive rational")
    rank = _validate_rank(family, rank)
    if family == "c" and rank == 1:
        # Rank-1 c degenerates to a single root pair; realize it as a1.
        family, rank = "a", 1

    if family in EXCEPTIONAL_RANK:
        ambient, simple_vectors, positive_vectors = _exceptional(family)
    else:
        ambient, simple_vectors, positive_vectors = _classical(family, rank)

    coeff_rows = [tuple(alpha[i] for alpha in simple_vectors) for i in range(ambient)]
    norm_map = _length_label_map([scale * linalg.dot(v, v) for v in positive_vectors])

    roots = []
    solved = linalg.solve_many(coeff_rows, positive_vectors)
    for v, coeffs in zip(positive_vectors, solved):
        assert all(c.denominator == 1 and c >= 0 for c in coeffs), (family, rank, v)
        roots.append(Root(v, tuple(int(c) for c in coeffs), norm_map[scale * linalg.dot(v, v)]))
    roots.sort(key=lambda rt: (rt.height, rt.coefficients))

    count = POSITIVE_COUNTS[family](rank)
    assert len(roots) == count, (family, rank, len(roots), count)
    assert len(set(rt.vector for rt in roots)) == count

    highest = roots[-1]
    assert all(rt.height < highest.height for rt in roots[:-1]), "highest root must be unique"
    d = highest.coefficients
    assert all(c <= dk for rt in roots for c, dk in zip(rt.coefficients, d)), \
        "highest root must dominate componentwise"

    return RootSystem(
        family=family,
        rank=rank,
        ambient_dim=ambient,
        simple_roots=tuple(simple_vectors),
        positive_roots=tuple(roots),
        highest_root=highest,
        d=tuple(int(c) for c in d),
        scale=scale,
    )


def coefficients(rs: RootSystem, v: Vec) -> tuple[Q, ...]:
    """Expansion of an ambient vector over the simple roots (exact)."""
    rows = [tuple(alpha[i] for alpha in rs.simple_roots) for i in range(rs.ambient_dim)]
    return linalg.solve_linear(rows, list(v))


def length_classes(rs: RootSystem) -> dict[str, tuple[Root, ...]]:
    """Positive roots grouped by length class, keyed short/medium/long."""
    out: dict[str, list[Root]] = {}
    for root in rs.positive_roots:
        out.setdefault(root.length, []).append(root)
    return {label: tuple(roots) for label, roots in out.items()}


@functools.cache
def _vector_index(rs: RootSystem) -> dict[Vec, Root]:
    return {root.vector: root for root in rs.positive_roots}


def root_with_vector(rs: RootSystem, v: Vec) -> Root | None:
    """The positive root with this ambient vector, if any."""
    return _vector_index(rs).get(v)


def is_root_vector(rs: RootSystem, v: Vec) -> bool:
    """True when v or -v is a root of the system."""
    index = _vector_index(rs)
    return v in index or linalg.scale(-1, v) in index


def is_subsystem(rs: RootSystem, members: Iterable[Root]) -> bool:
    """Check the subsystem axioms for a set of positive roots.

    The candidate set is closed under negation by construction (negatives
    are implied); the remaining axiom is that any sum of two members that
    is a root of the parent already belongs to the set.
    """
    parent = set()
    for root in rs.positive_roots:
        parent.add(root.vector)
        parent.add(linalg.scale(-1, root.vector))
    vectors = set()
    for root in members:
        vectors.add(root.vector)
        vectors.add(linalg.scale(-1, root.vector))
    for u in vectors:
        for w in vectors:
            s = linalg.add(u, w)
            if linalg.is_zero(s):
                continue
            if s in parent and s not in vectors:
                return False
    return True
