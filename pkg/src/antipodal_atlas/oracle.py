"""Brute-force cross-checks for root enumeration and polytope claims.

Everything here recomputes a result along a deliberately different path:
positive roots by reflection closure from the simple roots instead of
coordinate lists, polytope claims by direct inequality evaluation and
seeded rational sampling instead of vertex enumeration. The vector helpers
are local on purpose, so a bug in the main linear algebra cannot hide a
matching bug in its own check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction as Q

from . import polytopes, roots
from .polytopes import PGammaPolytope

Vec = tuple[Q, ...]


@dataclass(frozen=True)
class OracleReport:
    subject: str
    agreed: bool
    mismatches: tuple[tuple[str, str, str], ...]


def _report(subject: str, mismatches: list[tuple[str, str, str]]) -> OracleReport:
    return OracleReport(subject, not mismatches, tuple(mismatches))


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


def _neg(v: Vec) -> Vec:
    return tuple(-x for x in v)


def _reflect(beta: Vec, alpha: Vec) -> Vec:
    scale = 2 * sum(a * b for a, b in zip(alpha, beta)) / sum(a * a for a in alpha)
    return tuple(b - scale * a for b, a in zip(beta, alpha))


def _reflection_closure(simple: tuple[Vec, ...]) -> set[Vec]:
    closed: set[Vec] = set()
    frontier = {v for alpha in simple for v in (alpha, _neg(alpha))}
    while frontier:
        closed |= frontier
        frontier = {_reflect(beta, alpha) for beta in frontier for alpha in simple}
        frontier -= closed
    return closed


def _extraction_rows(simple: tuple[Vec, ...]) -> list[Vec]:
    """Rows of a matrix sending any vector in the root span to its coefficients.

    Built once per system by inverting the Gram matrix of the simple roots
    with a local Gauss-Jordan pass; callers reverify each extraction by
    reconstructing the vector, so exactness does not rest on this routine.
    """
    n = len(simple)
    gram = [[sum(a * b for a, b in zip(u, w)) for w in simple] for u in simple]
    aug = [row + [Q(int(i == j)) for j in range(n)] for i, row in enumerate(gram)]
    for col in range(n):
        pivot = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        head = aug[col][col]
        aug[col] = [x / head for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
    inverse = [row[n:] for row in aug]
    return [
        tuple(sum(inverse[k][i] * simple[i][j] for i in range(n)) for j in range(len(simple[0])))
        for k in range(n)
    ]


def enumerate_roots_oracle(family: str, rank: int) -> set[Vec]:
    """Positive-root vectors recomputed by reflection closure.

    The main build contributes only the simple roots as the seed and the
    highest-root coefficients as a claimed coefficient bound; membership
    and positivity are decided here. Every accepted vector is reconstructed
    from its extracted coefficients, and the componentwise coefficient
    maxima over the positives must equal the claimed bound exactly, which
    also rules out roots escaping the claimed box.
    """
    rs = roots.build(family, rank)
    closure = _reflection_closure(rs.simple_roots)
    if rs.family == "bc":
        shortest = min(sum(x * x for x in v) for v in closure)
        closure |= {tuple(2 * x for x in v) for v in closure
                    if sum(x * x for x in v) == shortest}
    extraction = _extraction_rows(rs.simple_roots)
    positives = set()
    top = [0] * rs.rank
    dim = len(rs.simple_roots[0])
    for v in closure:
        coeffs = [sum(r * x for r, x in zip(row, v)) for row in extraction]
        if any(c < 0 for c in coeffs):
            continue
        assert all(c.denominator == 1 for c in coeffs), "non-integral coefficients"
        rebuilt = tuple(
            sum(c * alpha[j] for c, alpha in zip(coeffs, rs.simple_roots))
            for j in range(dim))
        assert rebuilt == v, "vector outside the simple-root span"
        positives.add(v)
        top = [max(t, int(c)) for t, c in zip(top, coeffs)]
    assert tuple(top) == rs.d, f"coefficient maxima {top} differ from the bound {rs.d}"
    return positives


def check_roots(family: str, rank: int) -> OracleReport:
    """Main positive-root list against the reflection-closure recount."""
    rs = roots.build(family, rank)
    primary = {root.vector for root in rs.positive_roots}
    second = enumerate_roots_oracle(family, rank)
    mismatches = []
    for v in sorted(second - primary):
        mismatches.append((str(v), "missing", "present"))
    for v in sorted(primary - second):
        mismatches.append((str(v), "present", "missing"))
    expected = POSITIVE_COUNTS[rs.family](rs.rank)
    if len(second) != expected:
        mismatches.append(("count", str(len(second)), str(expected)))
    return _report(f"roots {rs.name}", mismatches)


def _point(poly: PGammaPolytope, weights: Vec) -> Vec:
    es = polytopes.corners(poly.rs)
    dim = len(es[0])
    out = [Q(0)] * dim
    for t, e in zip(weights, es):
        if t:
            for i in range(dim):
                out[i] += t * e[i]
    return tuple(out)


def _feasibility_gaps(poly: PGammaPolytope, weights: Vec, label: str,
                      mismatches: list[tuple[str, str, str]]) -> None:
    rs = poly.rs
    point = _point(poly, weights)
    for alpha in rs.simple_roots:
        if rs.inner(alpha, point) < 0:
            mismatches.append((label, "feasible", f"negative on wall {alpha}"))
    if rs.inner(rs.highest_root.vector, point) > 1:
        mismatches.append((label, "feasible", "beyond the outer face"))
    es = polytopes.corners(rs)
    for i in poly.cut_indices:
        if rs.inner(es[i - 1], point) > rs.inner(es[i - 1], es[i - 1]) / 2:
            mismatches.append((label, "feasible", f"beyond the cut at corner {i}"))


def vertex_check_oracle(poly: PGammaPolytope, grid_density: int = 4,
                        seed: int = 0, samples: int = 20) -> OracleReport:
    """Feasibility and maximality spot-checks by direct evaluation.

    Every enumerated vertex is tested against the defining inequalities;
    midpoints of all vertex pairs and seeded rational convex combinations
    must stay feasible; combinations drawn inside each outer facet must
    never beat the squared norm the vertex list reports as maximal.
    """
    rs = poly.rs
    mismatches: list[tuple[str, str, str]] = []
    rng = random.Random(seed)
    for v in poly.vertices:
        _feasibility_gaps(poly, v.weights, f"vertex {v.weights}", mismatches)
    pairs = [(u, w) for i, u in enumerate(poly.vertices)
             for w in poly.vertices[i + 1:]]
    if len(pairs) > 600:
        pairs = rng.sample(pairs, 600)
    for u, w in pairs:
        mid = tuple((a + b) / 2 for a, b in zip(u.weights, w.weights))
        _feasibility_gaps(poly, mid, f"midpoint {mid}", mismatches)
    for weights in _mixtures(poly.vertices, rng, grid_density, samples):
        _feasibility_gaps(poly, weights, f"mixture {weights}", mismatches)
    outer = [v for v in poly.vertices if v.on_prime]
    if outer:
        best = max(rs.inner(p, p) for p in (_point(poly, v.weights) for v in outer))
        facet_ids = {rs.rank} | set(range(rs.rank + 1, rs.rank + 1 + len(poly.cut_indices)))
        for fid in sorted(facet_ids):
            members = [v for v in poly.vertices if fid in v.active]
            if not members:
                continue
            for weights in _mixtures(members, rng, grid_density, samples):
                point = _point(poly, weights)
                norm = rs.inner(point, point)
                if norm > best:
                    mismatches.append(
                        (f"facet {fid} point {weights}", f"norm {norm}", f"max {best}"))
    return _report(f"polytope {rs.name} cuts {poly.cut_indices}", mismatches)


def _mixtures(vertices, rng: random.Random, grid_density: int, count: int):
    """Seeded rational convex combinations of the given vertex weights."""
    r = len(vertices[0].weights)
    for _ in range(count):
        numerators = [rng.randint(0, grid_density) for _ in vertices]
        total = sum(numerators)
        if total == 0:
            continue
        yield tuple(
            sum((Q(n, total) * v.weights[j] for n, v in zip(numerators, vertices)),
                start=Q(0))
            for j in range(r)
        )
