"""Exact rational vectors and linear solving.

Everything downstream (root realizations, polytope vertices, norm
comparisons) rides on tuples of Fraction. No floats anywhere: corner
selection and vertex feasibility are equality tests on rationals, and a
single rounded tie would silently change which orbits get reported.
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Sequence

Vec = tuple[Q, ...]


class SingularSystemError(ValueError):
    """Raised when a linear system has no unique solution."""


def vec(*parts: int | str | Q) -> Vec:
    """Build a vector of Fractions from ints, strings or Fractions."""
    return tuple(Q(p) for p in parts)


def zero(dim: int) -> Vec:
    return (Q(0),) * dim


def _check_dims(u: Vec, v: Vec) -> None:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")


def add(u: Vec, v: Vec) -> Vec:
    _check_dims(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    _check_dims(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Q | int, v: Vec) -> Vec:
    return tuple(Q(c) * a for a in v)


def dot(u: Vec, v: Vec) -> Q:
    """Standard inner product, exact."""
    _check_dims(u, v)
    return sum((a * b for a, b in zip(u, v)), Q(0))


def is_zero(v: Vec) -> bool:
    return all(a == 0 for a in v)


def _echelon(rows: Sequence[Vec], pivot_limit: int | None = None) -> tuple[list[list[Q]], list[int]]:
    """Row-reduce a copy of `rows`; return the matrix and pivot columns.

    With pivot_limit, pivots are only chosen among the first that many
    columns (used for solving against several right-hand sides at once).
    """
    mat = [list(row) for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0]) if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    head = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(head, len(mat)) if mat[i][col] != 0), None)
        if pivot_row is None:
            continue
        mat[head], mat[pivot_row] = mat[pivot_row], mat[head]
        inv = 1 / mat[head][col]
        mat[head] = [a * inv for a in mat[head]]
        for i in range(len(mat)):
            if i != head and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[head])]
        pivots.append(col)
        head += 1
        if head == len(mat):
            break
    return mat, pivots


def rank(rows: Sequence[Vec]) -> int:
    """Rank of the row set, exact."""
    return len(_echelon(rows)[1])


def solve_linear(rows: Sequence[Vec], rhs: Sequence[Q | int]) -> Vec:
    """Solve rows[i] . x = rhs[i] for the unique exact solution.

    The system may be overdetermined as long as it is consistent; an
    inconsistent or underdetermined system raises SingularSystemError
    (callers treat that as "no such vertex").
    """
    if len(rows) != len(rhs):
        raise ValueError(f"{len(rows)} rows but {len(rhs)} right-hand sides")
    if not rows:
        raise SingularSystemError("empty system")
    ncols = len(rows[0])
    augmented = [tuple(row) + (Q(value),) for row, value in zip(rows, rhs)]
    mat, pivots = _echelon(augmented)
    if ncols in pivots:
        raise SingularSystemError("inconsistent system")
    if len(pivots) < ncols:
        raise SingularSystemError("underdetermined system")
    solution = [Q(0)] * ncols
    for i, col in enumerate(pivots):
        solution[col] = mat[i][ncols]
    return tuple(solution)


def solve_many(rows: Sequence[Vec], rhs_list: Sequence[Sequence[Q | int]]) -> list[Vec]:
    """Solve rows . x = rhs for each right-hand side, with one elimination.

    The coefficient rows must determine a unique solution (full column
    rank); any inconsistent right-hand side raises SingularSystemError.
    """
    if not rows:
        raise SingularSystemError("empty system")
    ncols = len(rows[0])
    for rhs in rhs_list:
        if len(rhs) != len(rows):
            raise ValueError(f"{len(rows)} rows but {len(rhs)} right-hand sides")
    augmented = [tuple(row) + tuple(Q(rhs[i]) for rhs in rhs_list)
                 for i, row in enumerate(rows)]
    mat, pivots = _echelon(augmented, pivot_limit=ncols)
    if len(pivots) < ncols:
        raise SingularSystemError("underdetermined system")
    solutions = []
    for j in range(len(rhs_list)):
        col = ncols + j
        if any(mat[i][col] != 0 for i in range(len(pivots), len(mat))):
            raise SingularSystemError("inconsistent system")
        solution = [Q(0)] * ncols
        for i, pivot_col in enumerate(pivots):
            solution[pivot_col] = mat[i][col]
        solutions.append(tuple(solution))
    return solutions


def nullspace(rows: Sequence[Vec]) -> list[Vec]:
    """Basis of all x with rows[i] . x = 0, exact."""
    if not rows:
        raise ValueError("nullspace of an empty row set is ambient, pass rows")
    ncols = len(rows[0])
    mat, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vec] = []
    for f in free:
        v = [Q(0)] * ncols
        v[f] = Q(1)
        for i, col in enumerate(pivots):
            v[col] = -mat[i][f]
        basis.append(tuple(v))
    return basis


def gram(vectors: Sequence[Vec], pairing=dot) -> list[list[Q]]:
    """Gram matrix of the vectors under the given pairing."""
    return [[pairing(u, v) for v in vectors] for u in vectors]


def linear_combination(coeffs: Iterable[Q | int], vectors: Sequence[Vec]) -> Vec:
    out = zero(len(vectors[0]))
    for c, v in zip(coeffs, vectors):
        out = add(out, scale(Q(c), v))
    return out
