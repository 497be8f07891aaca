"""Exact solver for inhomogeneous linear systems on matrix entries.

A system is a list of ``(coeffs, rhs)`` pairs.  In the plain case
``coeffs`` maps entry positions ``(i, j)`` to field scalars.  In the
realified case (needed for conjugate-linear conditions such as
anti-hermitianity) the unknowns are the rational real/imaginary parts of
each entry and ``coeffs`` maps ``(i, j, part)`` with part 0 = re,
part 1 = im; the carrier field must then be the Gaussian rationals.

The result is an affine parameterisation: one particular solution plus
an independent spanning set of the homogeneous solution space.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, Infeasible
from .matrix import Matrix
from .scalars import Field, GaussianRational, QI, QQ


@dataclass(frozen=True)
class AffineSubspace:
    particular: Matrix
    directions: tuple[Matrix, ...]
    realified: bool

    @property
    def dimension(self) -> int:
        return len(self.directions)


def solve_affine_system(constraints, size: int, field: Field, realify: bool = False) -> AffineSubspace:
    if realify and field is not QI:
        raise FieldMismatch("realified systems are solved over the Gaussian rationals")
    solve_field = QQ if realify else field
    ncols = 2 * size * size if realify else size * size

    rows = []
    for coeffs, rhs in constraints:
        row = [solve_field.zero()] * ncols + [solve_field.coerce(rhs)]
        for pos, c in coeffs.items():
            row[_flat_index(pos, size, realify)] = solve_field.coerce(c)
        rows.append(row)

    pivots = _rref(rows, ncols, solve_field)
    rank = len(pivots)
    for row in rows[rank:]:
        if row[-1]:
            raise Infeasible("inconsistent constraint system")

    zero = solve_field.zero()
    particular = [zero] * ncols
    for r, c in enumerate(pivots):
        particular[c] = rows[r][-1]

    pivot_set = set(pivots)
    directions = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = solve_field.one()
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][free]
        directions.append(vec)

    build = _vector_to_matrix_realified if realify else _vector_to_matrix
    return AffineSubspace(
        particular=build(particular, size, field),
        directions=tuple(build(v, size, field) for v in directions),
        realified=realify,
    )


def _flat_index(pos, size: int, realify: bool) -> int:
    if realify:
        i, j, part = pos
        return (i * size + j) * 2 + part
    i, j = pos
    return i * size + j


def _rref(rows, ncols: int, field: Field) -> list[int]:
    """In-place reduced row echelon form; returns pivot column indices."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one() / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _vector_to_matrix(vec, size: int, field: Field) -> Matrix:
    return Matrix(field, [vec[i * size : (i + 1) * size] for i in range(size)])


def _vector_to_matrix_realified(vec, size: int, field: Field) -> Matrix:
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            k = (i * size + j) * 2
            row.append(GaussianRational(vec[k], vec[k + 1]))
        rows.append(row)
    return Matrix(field, rows)
