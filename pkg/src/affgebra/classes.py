"""The normalised affine matrix classes.

Six families of square matrices of size n+1, each an affine subspace of
the full matrix space, closed under the heap, the scalar action and the
commutator-style bracket:

* ``gna``  -- every row and column sums to 1,
* ``sna``  -- gna plus zero trace,
* ``ona``  -- gna plus unit diagonal and antisymmetric off-diagonal,
* ``una``  -- anti-hermitian with all row/column sums equal to i,
* ``suna`` -- una plus zero trace,
* ``ga_c`` -- row/column sums equal to an arbitrary fixed scalar c.

Membership is tested entrywise; sampling parameterises a class through
the exact linear solver and draws small rational coefficients.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import lcm

from .errors import FieldMismatch, SizeMismatch
from .matrix import Matrix
from .scalars import (
    RAT,
    Field,
    GaussianRational,
    PrimeFieldElement,
    QI,
    QQ,
    SURD,
    SURD_C,
    can_widen,
    field_by_tag,
    widen_scalar,
)
from .solve import AffineSubspace, solve_affine_system


class ClassKind(str, Enum):
    GNA = "gna"
    SNA = "sna"
    ONA = "ona"
    UNA = "una"
    SUNA = "suna"
    GA_C = "ga_c"


_REAL_ONLY = (ClassKind.ONA,)
_COMPLEX_ONLY = (ClassKind.UNA, ClassKind.SUNA)
_TRACELESS = (ClassKind.SNA, ClassKind.SUNA)


@dataclass(frozen=True)
class MatrixClassSpec:
    kind: ClassKind
    n: int
    field: Field
    c: object = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("block size n must be at least 1")
        if self.kind in _REAL_ONLY:
            if self.field not in (QQ, SURD):
                raise FieldMismatch(f"{self.kind.value} needs a real field")
        elif self.kind in _COMPLEX_ONLY:
            if self.field not in (QI, SURD_C):
                raise FieldMismatch(f"{self.kind.value} needs a complex field")
        elif self.field in (SURD, SURD_C):
            raise FieldMismatch(f"{self.kind.value} is not defined over surd fields here")
        if self.kind is ClassKind.GA_C:
            if self.c is None:
                raise ValueError("ga_c needs the normalisation scalar c")
            object.__setattr__(self, "c", self.field.coerce(self.c))
        elif self.c is not None:
            raise ValueError(f"{self.kind.value} does not take a scalar c")

    @property
    def ambient(self) -> int:
        return self.n + 1

    @property
    def scalar_field(self) -> Field:
        """Field of the affine action.  The antisymmetry / anti-hermitian
        conditions are only real-linear, so those classes are affine
        spaces over the rationals even though entries may be complex."""
        if self.kind in (ClassKind.ONA, ClassKind.UNA, ClassKind.SUNA):
            return QQ
        return self.field

    def normalisation(self, field: Field | None = None):
        """The common value of all row and column sums, in ``field``."""
        field = field or self.field
        if self.kind is ClassKind.GA_C:
            return widen_scalar(self.c, self.field, field)
        if self.kind in _COMPLEX_ONLY:
            return field.imaginary_unit()
        return field.one()

    def describe(self) -> str:
        inner = f"{self.n}, {self.field.describe()}"
        if self.kind is ClassKind.GA_C:
            inner += f", c={self.field.format(self.c)}"
        return f"{self.kind.value}({inner})"


def contains(spec: MatrixClassSpec, m: Matrix) -> bool:
    """Exact membership test.  Accepts matrices over any field the spec
    field widens into, so conjugated images can be tested too."""
    if m.size != spec.ambient:
        raise SizeMismatch(f"expected size {spec.ambient}, got {m.size}")
    if m.field is not spec.field and not can_widen(spec.field, m.field):
        raise FieldMismatch(
            f"{spec.describe()} cannot contain a matrix over {m.field.describe()}"
        )
    target = spec.normalisation(m.field)
    rows = m.rows
    zero = m.field.zero()
    col_sums = [zero] * m.size
    for row in rows:
        acc = zero
        for j, x in enumerate(row):
            acc = acc + x
            col_sums[j] = col_sums[j] + x
        if acc != target:
            return False
    if any(s != target for s in col_sums):
        return False
    if spec.kind in _TRACELESS and m.trace() != zero:
        return False
    if spec.kind is ClassKind.ONA:
        one = m.field.one()
        for k, row in enumerate(rows):
            if row[k] != one:
                return False
            for l in range(k + 1, m.size):
                if row[l] != -rows[l][k]:
                    return False
    if spec.kind in _COMPLEX_ONLY:
        conj = m.field.conjugate
        for k, row in enumerate(rows):
            for l in range(k, m.size):
                if rows[l][k] != -conj(row[l]):
                    return False
    return True


def base_point(spec: MatrixClassSpec) -> Matrix:
    """A distinguished member of the class (NonInvertibleScalar when the
    required 1/n or 1/(n+1) does not exist in the field)."""
    field = spec.field
    m = spec.ambient
    J = Matrix.ones(field, m)
    if spec.kind is ClassKind.GNA:
        return J.scale(field.inv_int(m))
    if spec.kind is ClassKind.GA_C:
        return J.scale(spec.c * field.inv_int(m))
    if spec.kind is ClassKind.SNA:
        return (J - Matrix.identity(field, m)).scale(field.inv_int(spec.n))
    if spec.kind is ClassKind.ONA:
        return Matrix.identity(field, m)
    if spec.kind is ClassKind.UNA:
        return J.scale(field.imaginary_unit() * field.inv_int(m))
    if spec.kind is ClassKind.SUNA:
        return (J - Matrix.identity(field, m)).scale(
            field.imaginary_unit() * field.inv_int(spec.n)
        )
    raise ValueError(f"unhandled kind {spec.kind}")


def constraint_system(spec: MatrixClassSpec):
    """The defining equations as (constraints, realify) ready for
    ``solve_affine_system``."""
    _check_solvable(spec)
    m = spec.ambient
    if spec.kind in _COMPLEX_ONLY:
        return _hermitian_constraints(spec, m), True
    c = spec.normalisation()
    constraints = []
    for l in range(m):
        constraints.append(({(l, k): 1 for k in range(m)}, c))
        constraints.append(({(k, l): 1 for k in range(m)}, c))
    if spec.kind is ClassKind.SNA:
        constraints.append(({(k, k): 1 for k in range(m)}, 0))
    if spec.kind is ClassKind.ONA:
        for k in range(m):
            constraints.append(({(k, k): 1}, 1))
            for l in range(k + 1, m):
                constraints.append(({(k, l): 1, (l, k): 1}, 0))
    return constraints, False


def _hermitian_constraints(spec: MatrixClassSpec, m: int):
    # unknowns are rational re/im parts; row/col sums equal i
    constraints = []
    for l in range(m):
        constraints.append(({(l, k, 0): 1 for k in range(m)}, 0))
        constraints.append(({(l, k, 1): 1 for k in range(m)}, 1))
        constraints.append(({(k, l, 0): 1 for k in range(m)}, 0))
        constraints.append(({(k, l, 1): 1 for k in range(m)}, 1))
    for k in range(m):
        constraints.append(({(k, k, 0): 1}, 0))
        for l in range(k + 1, m):
            constraints.append(({(k, l, 0): 1, (l, k, 0): 1}, 0))
            constraints.append(({(k, l, 1): 1, (l, k, 1): -1}, 0))
    if spec.kind is ClassKind.SUNA:
        constraints.append(({(k, k, 1): 1 for k in range(m)}, 0))
    return constraints


def _check_solvable(spec: MatrixClassSpec) -> None:
    if spec.field in (SURD, SURD_C):
        raise FieldMismatch(
            f"{spec.describe()} is parameterised over Q / Qi only; "
            "surd fields are conjugation targets"
        )


@lru_cache(maxsize=None)
def subspace(spec: MatrixClassSpec) -> AffineSubspace:
    # surface the characteristic obstruction before solving: sampling and
    # dimensions are only offered where the base point exists
    base_point(spec)
    constraints, realify = constraint_system(spec)
    return solve_affine_system(constraints, spec.ambient, spec.field, realify=realify)


def dimension(spec: MatrixClassSpec) -> int:
    """Dimension of the direction space (real dimension for the
    realified hermitian-type classes)."""
    return subspace(spec).dimension


def derive_rng(*parts) -> random.Random:
    """Deterministic RNG from any mix of ints/strings (stable across
    runs and platforms; string seeding hashes bytes, not PYTHONHASHSEED)."""
    return random.Random("\x1f".join(str(p) for p in parts))


@lru_cache(maxsize=None)
def _sampling_data(spec: MatrixClassSpec):
    """Particular solution and directions rescaled to integers over one
    common denominator, so each sample is a single integer accumulation
    pass with one exact normalisation per entry at the end."""
    space = subspace(spec)
    field = spec.field
    m = spec.ambient
    mats = (space.particular, *space.directions)

    if field.tag == "GF":
        part = tuple(tuple(x.residue for x in row) for row in space.particular.rows)
        dirs = tuple(
            tuple(
                (i, j, d.rows[i][j].residue)
                for i in range(m)
                for j in range(m)
                if d.rows[i][j].residue
            )
            for d in space.directions
        )
        return space, ("gf", 1, part, dirs, field.p)

    if field is QI:
        den = 1
        for mat in mats:
            for row in mat.rows:
                for x in row:
                    den = lcm(den, int(x.re.denominator), int(x.im.denominator))

        def pair(x):
            return (
                int(x.re.numerator) * (den // int(x.re.denominator)),
                int(x.im.numerator) * (den // int(x.im.denominator)),
            )

        part = tuple(tuple(pair(x) for x in row) for row in space.particular.rows)
        dirs = tuple(
            tuple(
                (i, j, *pair(d.rows[i][j]))
                for i in range(m)
                for j in range(m)
                if d.rows[i][j]
            )
            for d in space.directions
        )
        return space, ("qi", den, part, dirs, None)

    den = 1
    for mat in mats:
        for row in mat.rows:
            for x in row:
                den = lcm(den, int(x.denominator))
    part = tuple(
        tuple(int(x.numerator) * (den // int(x.denominator)) for x in row)
        for row in space.particular.rows
    )
    dirs = tuple(
        tuple(
            (i, j, int(d.rows[i][j].numerator) * (den // int(d.rows[i][j].denominator)))
            for i in range(m)
            for j in range(m)
            if d.rows[i][j]
        )
        for d in space.directions
    )
    return space, ("q", den, part, dirs, None)


def draw_element(spec: MatrixClassSpec, rng: random.Random) -> Matrix:
    """Particular solution plus a random small-rational combination of
    the direction space."""
    space, (mode, base_den, part, dirs, p) = _sampling_data(spec)
    coeff_field = QQ if space.realified else spec.field

    if mode == "gf":
        coeffs = [coeff_field.sample(rng).residue for _ in dirs]
        acc = [list(row) for row in part]
        for c, triples in zip(coeffs, dirs):
            if c:
                for i, j, v in triples:
                    acc[i][j] += c * v
        return Matrix._wrap(
            spec.field,
            tuple(tuple(PrimeFieldElement(x, p) for x in row) for row in acc),
        )

    coeffs = [coeff_field.sample(rng) for _ in dirs]

    if mode == "qi":
        plain = space.realified  # rational coefficients on complex directions
        seen = 1
        for c in coeffs:
            seen = lcm(seen, int(c.denominator)) if plain else lcm(seen, int(c.re.denominator), int(c.im.denominator))
        den = base_den * seen
        acc = [[(re * seen, im * seen) for re, im in row] for row in part]
        for c, triples in zip(coeffs, dirs):
            if plain:
                fre, fim = int(c.numerator) * (seen // int(c.denominator)), 0
            else:
                fre = int(c.re.numerator) * (seen // int(c.re.denominator))
                fim = int(c.im.numerator) * (seen // int(c.im.denominator))
            if fre or fim:
                for i, j, vre, vim in triples:
                    are, aim = acc[i][j]
                    acc[i][j] = (
                        are + fre * vre - fim * vim,
                        aim + fre * vim + fim * vre,
                    )
        return Matrix._wrap(
            spec.field,
            tuple(
                tuple(GaussianRational(RAT(re, den), RAT(im, den)) for re, im in row)
                for row in acc
            ),
        )

    seen = 1
    for c in coeffs:
        seen = lcm(seen, int(c.denominator))
    den = base_den * seen
    acc = [[x * seen for x in row] for row in part]
    for c, triples in zip(coeffs, dirs):
        if c:
            f = int(c.numerator) * (seen // int(c.denominator))
            for i, j, v in triples:
                acc[i][j] += f * v
    return Matrix._wrap(
        spec.field, tuple(tuple(RAT(x, den) for x in row) for row in acc)
    )


def sample(spec: MatrixClassSpec, seed: int, index: int) -> Matrix:
    """Deterministic class member number ``index`` of stream ``seed``."""
    return draw_element(spec, derive_rng("sample", spec.describe(), seed, index))


# -- class spec wire form ----------------------------------------------


def spec_to_wire(spec: MatrixClassSpec) -> dict:
    doc: dict = {"kind": spec.kind.value, "n": spec.n, "field": spec.field.tag}
    if spec.field.tag == "GF":
        doc["p"] = spec.field.p
    if spec.kind is ClassKind.GA_C:
        doc["c"] = spec.field.format(spec.c)
    return doc


def spec_from_wire(doc: dict) -> MatrixClassSpec:
    field = field_by_tag(doc["field"], doc.get("p"))
    return MatrixClassSpec(
        kind=ClassKind(doc["kind"]),
        n=doc["n"],
        field=field,
        c=field.parse(doc["c"]) if "c" in doc else None,
    )
