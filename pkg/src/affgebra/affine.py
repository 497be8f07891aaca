"""Vector-free affine-space operations on matrix carriers.

Everything here treats a square matrix as a point of an affine space and
never picks an origin: the primitive operations are the ternary heap
``<a,b,c> = a - b + c`` and the base-pointed scalar action
``alpha |>_a b = alpha*b - alpha*a + a``.  Brackets, retracts and the
associated products are combinations of those two.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotIdempotent
from .matrix import Matrix, commutator_shift
from .scalars import Field, GaussianRational, QI


def heap(a: Matrix, b: Matrix, c: Matrix) -> Matrix:
    """<a, b, c> = a - b + c."""
    a._guard(b)
    a._guard(c)
    if a.field is QI:
        rows = tuple(
            tuple(
                GaussianRational(x.re - y.re + z.re, x.im - y.im + z.im)
                for x, y, z in zip(ra, rb, rc)
            )
            for ra, rb, rc in zip(a.rows, b.rows, c.rows)
        )
    else:
        rows = tuple(
            tuple(x - y + z for x, y, z in zip(ra, rb, rc))
            for ra, rb, rc in zip(a.rows, b.rows, c.rows)
        )
    return Matrix._wrap(a.field, rows)


def heap5(a: Matrix, b: Matrix, c: Matrix, d: Matrix, e: Matrix) -> Matrix:
    """<a, b, c, d, e> = a - b + c - d + e (heap associativity makes
    bracketing irrelevant)."""
    a._guard(b)
    a._guard(c)
    a._guard(d)
    a._guard(e)
    if a.field is QI:
        rows = tuple(
            tuple(
                GaussianRational(
                    v.re - w.re + x.re - y.re + z.re,
                    v.im - w.im + x.im - y.im + z.im,
                )
                for v, w, x, y, z in zip(ra, rb, rc, rd, re)
            )
            for ra, rb, rc, rd, re in zip(a.rows, b.rows, c.rows, d.rows, e.rows)
        )
    else:
        rows = tuple(
            tuple(v - w + x - y + z for v, w, x, y, z in zip(ra, rb, rc, rd, re))
            for ra, rb, rc, rd, re in zip(a.rows, b.rows, c.rows, d.rows, e.rows)
        )
    return Matrix._wrap(a.field, rows)


def action(alpha, base: Matrix, b: Matrix) -> Matrix:
    """alpha |>_base b = alpha*b - alpha*base + base."""
    base._guard(b)
    alpha = base.field.coerce(alpha)
    if base.field is QI and not alpha.im:
        r = alpha.re
        rows = tuple(
            tuple(
                GaussianRational((y.re - x.re) * r + x.re, (y.im - x.im) * r + x.im)
                for x, y in zip(rx, ry)
            )
            for rx, ry in zip(base.rows, b.rows)
        )
    else:
        rows = tuple(
            tuple((y - x) * alpha + x for x, y in zip(rx, ry))
            for rx, ry in zip(base.rows, b.rows)
        )
    return Matrix._wrap(base.field, rows)


@dataclass(frozen=True)
class Zeta:
    """Bracket [a, b] = zeta |>_a b for a fixed scalar zeta."""

    zeta: object

    def label(self) -> str:
        return f"zeta({self.zeta})"


@dataclass(frozen=True)
class AffineCommutator:
    """Bracket [a, b] = ab - ba + b."""

    def label(self) -> str:
        return "commutator"


BracketKind = Zeta | AffineCommutator
COMMUTATOR = AffineCommutator()


def bracket(kind, a: Matrix, b: Matrix) -> Matrix:
    """Evaluate a bracket.  ``kind`` is Zeta, AffineCommutator, or any
    callable (a, b) -> point for experimenting with custom brackets."""
    if isinstance(kind, Zeta):
        return action(kind.zeta, a, b)
    if isinstance(kind, AffineCommutator):
        return commutator_shift(a, b)
    if callable(kind):
        return kind(a, b)
    raise TypeError(f"not a bracket kind: {kind!r}")


def retract_add(o: Matrix, a: Matrix, b: Matrix) -> Matrix:
    """Group addition of the retract at o: a + b = <a, o, b>."""
    return heap(a, o, b)


def retract_neg(o: Matrix, a: Matrix) -> Matrix:
    """Group inverse of the retract at o: -a = <o, a, o>."""
    return heap(o, a, o)


def retract_sub(o: Matrix, a: Matrix, b: Matrix) -> Matrix:
    """a - b in the retract at o, i.e. <a, b, o>."""
    return heap(a, b, o)


def retract_scale(o: Matrix, alpha, a: Matrix) -> Matrix:
    """Scalar multiple in the vector space at o: alpha . a = alpha |>_o a."""
    return action(alpha, o, a)


def translate(o: Matrix, obar: Matrix, a: Matrix) -> Matrix:
    """The translation a -> <a, o, obar>, an isomorphism between the
    retracts at o and at obar."""
    return heap(a, o, obar)


def lie_retract_bracket(kind: BracketKind, o: Matrix, a: Matrix, b: Matrix) -> Matrix:
    """[a, b]_o = <[a,b], [a,o], [o,o], [o,b], o>.

    This is the bilinear Lie bracket of the retract at o written with
    ambient matrix operations (the final o is the retract's zero).
    """
    return heap5(
        bracket(kind, a, b),
        bracket(kind, a, o),
        bracket(kind, o, o),
        bracket(kind, o, b),
        o,
    )


def assoc_retract_product(o: Matrix, a: Matrix, b: Matrix) -> Matrix:
    """The associative product on the retract at o induced by the matrix
    product: a . b = ab - ao + oo - ob computed in the retract group,
    i.e. ab - ao + o^2 - ob + o in ambient arithmetic.

    Equivalently o + (a - o)(b - o); o is its absorbing zero.
    """
    return a @ b - a @ o + o @ o - o @ b + o


def vector_bracket(kind: BracketKind, a: Matrix, b: Matrix) -> Matrix:
    """[a, b]_v = [a, b] - b, a vector-valued bracket.

    Only well defined when the bracket is idempotent; the inputs serve
    as witnesses and NotIdempotent is raised if either fails [x, x] = x.
    """
    for witness in (a, b):
        if bracket(kind, witness, witness) != witness:
            label = kind.label() if hasattr(kind, "label") else repr(kind)
            raise NotIdempotent(f"bracket {label} is not idempotent on a witness")
    return bracket(kind, a, b) - b


# -- bracket kind wire form --------------------------------------------


def kind_to_wire(kind: BracketKind, field: Field) -> dict:
    if isinstance(kind, Zeta):
        return {"kind": "zeta", "zeta": field.format(field.coerce(kind.zeta))}
    return {"kind": "commutator"}


def kind_from_wire(doc: dict, field: Field) -> BracketKind:
    if doc["kind"] == "commutator":
        return COMMUTATOR
    if doc["kind"] == "zeta":
        return Zeta(field.parse(doc["zeta"]))
    raise ValueError(f"unknown bracket kind {doc['kind']!r}")
