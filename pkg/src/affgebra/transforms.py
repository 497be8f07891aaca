"""Closed-form change-of-basis matrices and the block-space isomorphisms.

The two basis matrices (wire names ``P`` and ``U``) share the same
shape: the last column is constant and the first n columns have zero
column sum, which is exactly what conjugation needs to trade "all row
and column sums equal c" against "everything outside the top-left n x n
block vanishes except the corner".  ``P`` is integral and works over any
field where n+1 is invertible; ``U`` is its orthonormal counterpart with
quadratic-surd entries and is the only route that preserves antisymmetry
and anti-hermitianity.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from functools import lru_cache

from .affine import COMMUTATOR, action, bracket, heap
from .classes import (
    ClassKind,
    MatrixClassSpec,
    base_point,
    contains,
    derive_rng,
    draw_element,
    spec_to_wire,
)
from .errors import ClassViolation, FieldMismatch
from .matrix import Matrix, matrix_to_wire
from .report import CheckReport
from .scalars import (
    RAT,
    Field,
    QQ,
    SURD,
    SURD_C,
    SurdReal,
    squarefree_split,
    widen_scalar,
)

VIA_P = "P"
VIA_U = "U"


@lru_cache(maxsize=None)
def change_of_basis(n: int, field: Field) -> Matrix:
    """Size n+1: first row all ones; row r = 2..n+1 has -1 in column
    n+2-r and +1 in the last column."""
    m = n + 1
    zero, one = field.zero(), field.one()
    rows = [[one] * m]
    for i in range(1, m):
        row = [zero] * m
        row[n - i] = -one
        row[n] = one
        rows.append(row)
    return Matrix(field, rows)


@lru_cache(maxsize=None)
def change_of_basis_inverse(n: int, field: Field) -> Matrix:
    """1/(n+1) times: row r = 1..n has -n in column n+2-r and ones
    elsewhere; last row all ones.  NonInvertibleScalar when the
    characteristic divides n+1."""
    m = n + 1
    scale = field.inv_int(m)
    one = field.one()
    minus_n = field.from_int(-n)
    rows = []
    for i in range(n):
        row = [one] * m
        row[n - i] = minus_n
        rows.append(row)
    rows.append([one] * m)
    return Matrix(field, rows).scale(scale)


def _inv_sqrt(k: int) -> SurdReal:
    # 1/sqrt(k) = sqrt(f)/(s*f) for k = s^2 * f
    s, f = squarefree_split(k)
    return SurdReal({f: RAT(1, s * f)})


def _neg_sqrt_ratio(p: int, q: int) -> SurdReal:
    # -sqrt(p/q) = -sqrt(p*q)/q
    s, f = squarefree_split(p * q)
    return SurdReal({f: RAT(-s, q)})


@lru_cache(maxsize=None)
def orthonormal_change_of_basis(n: int) -> Matrix:
    """The orthonormal counterpart of ``change_of_basis`` over the real
    surd field; its transpose is its exact inverse."""
    m = n + 1
    zero = SURD.zero()
    cols = []
    for j in range(1, n + 1):
        top, drop = n + 2 - j, n + 1 - j
        col = [_inv_sqrt(top * drop)] * drop
        col.append(_neg_sqrt_ratio(drop, top))
        col.extend([zero] * (m - drop - 1))
        cols.append(col)
    cols.append([_inv_sqrt(m)] * m)
    return Matrix(SURD, list(zip(*cols)))


def float_gram_schmidt(n: int) -> list[list[float]]:
    """Floating-point Gram-Schmidt of the integral basis columns,
    processed and placed last column first; cross-checks the closed
    form of ``orthonormal_change_of_basis``."""
    m = n + 1
    p = change_of_basis(n, QQ)
    cols = [[float(p.entry(i, j)) for i in range(m)] for j in range(m)]
    out: list[list[float] | None] = [None] * m
    accepted: list[list[float]] = []
    for j in reversed(range(m)):
        v = cols[j][:]
        for u in accepted:
            proj = sum(x * y for x, y in zip(v, u))
            v = [x - proj * y for x, y in zip(v, u)]
        norm = math.sqrt(sum(x * x for x in v))
        v = [x / norm for x in v]
        accepted.append(v)
        out[j] = v
    return [[out[j][i] for j in range(m)] for i in range(m)]


# -- block targets ------------------------------------------------------

_BLOCK_KINDS = {
    ClassKind.GNA: "gl",
    ClassKind.GA_C: "gl",
    ClassKind.SNA: "sl",
    ClassKind.ONA: "o",
    ClassKind.UNA: "u",
    ClassKind.SUNA: "su",
}


@dataclass(frozen=True)
class BlockTarget:
    """Image space of a class under conjugation: a fixed block-diagonal
    base point plus a classical matrix algebra in the top-left n x n
    block."""

    block_kind: str
    base_block: Matrix
    n: int

    @property
    def field(self) -> Field:
        return self.base_block.field

    def contains(self, m: Matrix) -> bool:
        base = self.base_block.widen(m.field) if m.field is not self.field else self.base_block
        d = m - base
        size = m.size
        zero = m.field.zero()
        for k in range(size):
            if d.entry(self.n, k) != zero or d.entry(k, self.n) != zero:
                return False
        return _block_member(self.block_kind, d, self.n, m.field)

    def sample(self, rng: random.Random) -> Matrix:
        """base plus a random element of the block algebra, embedded."""
        block = _sample_block(self.block_kind, self.n, self.field, rng)
        rows = [list(row) for row in self.base_block.rows]
        for i in range(self.n):
            for j in range(self.n):
                rows[i][j] = rows[i][j] + block[i][j]
        return Matrix(self.field, rows)


def _block_member(kind: str, d: Matrix, n: int, field: Field) -> bool:
    zero = field.zero()
    if kind in ("sl", "su"):
        tr = zero
        for k in range(n):
            tr = tr + d.entry(k, k)
        if tr != zero:
            return False
    if kind == "o":
        for k in range(n):
            for l in range(k, n):
                if d.entry(l, k) != -d.entry(k, l):
                    return False
    if kind in ("u", "su"):
        conj = field.conjugate
        for k in range(n):
            for l in range(k, n):
                if d.entry(l, k) != -conj(d.entry(k, l)):
                    return False
    return True


def _sample_block(kind: str, n: int, field: Field, rng: random.Random):
    zero = field.zero()
    block = [[zero] * n for _ in range(n)]
    if kind in ("gl", "sl"):
        for i in range(n):
            for j in range(n):
                block[i][j] = field.sample(rng)
        if kind == "sl":
            tr = zero
            for k in range(n - 1):
                tr = tr + block[k][k]
            block[n - 1][n - 1] = -tr
        return block
    if kind == "o":
        for i in range(n):
            for j in range(i + 1, n):
                x = field.sample(rng)
                block[i][j] = x
                block[j][i] = -x
        return block
    # u / su: anti-hermitian over the Gaussian rationals
    i_unit = field.imaginary_unit()
    for k in range(n):
        block[k][k] = i_unit * QQ.sample(rng)
    for k in range(n):
        for l in range(k + 1, n):
            x = field.sample(rng)
            block[k][l] = x
            block[l][k] = -field.conjugate(x)
    if kind == "su":
        tr = zero
        for k in range(n - 1):
            tr = tr + block[k][k]
        block[n - 1][n - 1] = -tr
    return block


def block_target(spec: MatrixClassSpec) -> BlockTarget:
    field = spec.field
    m = spec.ambient
    zero = field.zero()
    if spec.kind in (ClassKind.GNA, ClassKind.GA_C):
        corner = field.one() if spec.kind is ClassKind.GNA else spec.c
        base = Matrix.diagonal(field, [zero] * spec.n + [corner])
    elif spec.kind is ClassKind.SNA:
        head = -field.inv_int(spec.n)
        base = Matrix.diagonal(field, [head] * spec.n + [field.one()])
    elif spec.kind is ClassKind.ONA:
        base = Matrix.identity(field, m)
    elif spec.kind is ClassKind.UNA:
        base = Matrix.diagonal(field, [zero] * spec.n + [field.imaginary_unit()])
    else:  # SUNA
        head = -(field.imaginary_unit() * field.inv_int(spec.n))
        base = Matrix.diagonal(field, [head] * spec.n + [field.imaginary_unit()])
    return BlockTarget(block_kind=_BLOCK_KINDS[spec.kind], base_block=base, n=spec.n)


# -- the three isomorphism mechanisms -----------------------------------


def shift_map(c, c_prime, m: Matrix) -> Matrix:
    """Renormalisation between sum-c and sum-c' classes:
    m + (c' - c) * identity."""
    field = m.field
    spec = MatrixClassSpec(ClassKind.GA_C, m.size - 1, field, c=field.coerce(c))
    if not contains(spec, m):
        raise ClassViolation(f"input is not in {spec.describe()}")
    delta = field.coerce(c_prime) - field.coerce(c)
    return m + Matrix.identity(field, m.size).scale(delta)


def required_via(spec: MatrixClassSpec) -> str:
    """The mandatory conjugation route: only the orthonormal basis
    preserves antisymmetry / anti-hermitianity."""
    if spec.kind in (ClassKind.ONA, ClassKind.UNA, ClassKind.SUNA):
        return VIA_U
    return VIA_P


def _validate_via(spec: MatrixClassSpec, via: str) -> None:
    if via not in (VIA_P, VIA_U):
        raise ValueError(f"unknown via {via!r}")
    if via == VIA_P and required_via(spec) == VIA_U:
        raise ClassViolation(
            f"{spec.describe()} must be conjugated via U; "
            "P does not preserve its symmetry conditions"
        )
    if via == VIA_U and spec.field.characteristic:
        raise FieldMismatch("the orthonormal route needs characteristic zero")


def conjugation_field(spec: MatrixClassSpec, via: str) -> Field:
    if via == VIA_P:
        return spec.field
    return SURD_C if spec.field.is_complex else SURD


@lru_cache(maxsize=None)
def _conjugators(spec: MatrixClassSpec, via: str) -> tuple[Matrix, Matrix]:
    """(left, right) such that class -> block is left @ m @ right."""
    if via == VIA_P:
        p = change_of_basis(spec.n, spec.field)
        return change_of_basis_inverse(spec.n, spec.field), p
    u = orthonormal_change_of_basis(spec.n)
    target = conjugation_field(spec, via)
    u = u.widen(target)
    return u.transpose(), u


def to_block(spec: MatrixClassSpec, m: Matrix, via: str | None = None) -> Matrix:
    """Conjugate a class member into its block target (ClassViolation if
    the input fails membership)."""
    via = via or required_via(spec)
    _validate_via(spec, via)
    if not contains(spec, m):
        raise ClassViolation(f"input is not in {spec.describe()}")
    left, right = _conjugators(spec, via)
    return left @ m.widen(left.field) @ right


def from_block(spec: MatrixClassSpec, m: Matrix, via: str | None = None) -> Matrix:
    """Inverse conjugation, block target back into the class."""
    via = via or required_via(spec)
    _validate_via(spec, via)
    left, right = _conjugators(spec, via)
    return right @ m.widen(right.field) @ left


def base_point_image(spec: MatrixClassSpec, via: str | None = None) -> Matrix:
    """Where the class base point lands in the block target."""
    return to_block(spec, base_point(spec), via)


# -- computational verification of the isomorphism ----------------------


def evaluate_theorem_case(spec: MatrixClassSpec, via: str, inputs: dict) -> tuple[bool, dict]:
    """Check one sampled tuple against every isomorphism property.

    inputs: points a, b, c over the class field, scalar alpha, and a
    block-target element z for the surjectivity direction.  Returns
    (passed, detail) where detail names the first failed property and
    carries expected/actual wire forms.
    """
    a, b, c = inputs["a"], inputs["b"], inputs["c"]
    alpha, z = inputs["alpha"], inputs["z"]
    target = block_target(spec)
    wide = conjugation_field(spec, via)

    fa = to_block(spec, a, via)
    fb = to_block(spec, b, via)
    fc = to_block(spec, c, via)
    for name, img in (("a", fa), ("b", fb), ("c", fc)):
        if not target.contains(img):
            return False, _detail(f"image of {name} not in block target", True, False)

    lhs = to_block(spec, bracket(COMMUTATOR, a, b), via)
    rhs = bracket(COMMUTATOR, fa, fb)
    if lhs != rhs:
        return False, _detail("bracket preservation", lhs, rhs)

    lhs = to_block(spec, heap(a, b, c), via)
    rhs = heap(fa, fb, fc)
    if lhs != rhs:
        return False, _detail("heap preservation", lhs, rhs)

    alpha_w = widen_scalar(alpha, spec.scalar_field, wide)
    lhs = to_block(spec, action(alpha, a, b), via)
    rhs = action(alpha_w, fa, fb)
    if lhs != rhs:
        return False, _detail("action preservation", lhs, rhs)

    back = from_block(spec, fa, via)
    orig = a.widen(wide)
    if back != orig:
        return False, _detail("inverse conjugation roundtrip", orig, back)

    pulled = from_block(spec, z.widen(wide), via)
    if not contains(spec, pulled):
        return False, _detail("surjectivity pullback membership", True, False)
    return True, {}


def _detail(label: str, expected, actual) -> dict:
    def render(v):
        return matrix_to_wire(v) if isinstance(v, Matrix) else v

    return {"property": label, "expected": render(expected), "actual": render(actual)}


def theorem_inputs(spec: MatrixClassSpec, rng: random.Random) -> dict:
    target = block_target(spec)
    return {
        "a": draw_element(spec, rng),
        "b": draw_element(spec, rng),
        "c": draw_element(spec, rng),
        "alpha": spec.scalar_field.sample(rng),
        "z": target.sample(rng),
    }


def verify_theorem(spec: MatrixClassSpec, seed: int, samples: int, via: str | None = None) -> CheckReport:
    """Sampled verification that conjugation is an isomorphism onto the
    block target; stops at the first counterexample."""
    via = via or required_via(spec)
    _validate_via(spec, via)
    start = time.perf_counter()
    for i in range(samples):
        rng = derive_rng("theorem", spec.describe(), via, seed, i)
        inputs = theorem_inputs(spec, rng)
        passed, detail = evaluate_theorem_case(spec, via, inputs)
        if not passed:
            counterexample = {
                "class": spec_to_wire(spec),
                "via": via,
                "inputs": {
                    "a": matrix_to_wire(inputs["a"]),
                    "b": matrix_to_wire(inputs["b"]),
                    "c": matrix_to_wire(inputs["c"]),
                    "alpha": spec.scalar_field.format(inputs["alpha"]),
                    "z": matrix_to_wire(inputs["z"]),
                },
                **detail,
            }
            elapsed = (time.perf_counter() - start) * 1000
            return CheckReport("theorem-iso", False, i + 1, counterexample, elapsed)
    elapsed = (time.perf_counter() - start) * 1000
    return CheckReport("theorem-iso", True, samples, None, elapsed)
