"""Tensor square and cube of the algebra under the diagonal adjoint action.

Tensors are kept in fully expanded canonical coordinates: finitely
supported maps from ordered index pairs (or triples) to exact rationals.
The classical Yang-Baxter operator, the coboundary map and the related
identity checks all live here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Optional

from .algebra import (
    AlgebraParams,
    BasisIndex,
    Element,
    Window,
    bracket_basis,
    format_terms,
    rat,
)

__all__ = [
    "Tensor2",
    "Tensor3",
    "check_compatibility",
    "check_cojacobi_identity",
    "check_cybe",
    "check_mybe",
    "coboundary",
    "cyclic",
    "diag_action",
    "diag_action3",
    "skew_part_membership",
    "twist",
    "ybe_c",
]

Pair = tuple[BasisIndex, BasisIndex]
Triple = tuple[BasisIndex, BasisIndex, BasisIndex]


class _SparseTensor:
    """Shared canonical-form container for tensor coordinates."""

    __slots__ = ("terms",)
    _arity = 0

    def __init__(self, terms: Optional[dict] = None) -> None:
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if coeff:
                    clean[key] = coeff
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, *indices: BasisIndex):
        if len(indices) != cls._arity:
            raise ValueError(f"expected {cls._arity} indices")
        return cls({tuple(indices): Fraction(1)})

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def items(self) -> Iterator:
        return iter(self.terms.items())

    def support(self) -> list:
        return sorted(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return type(other) is type(self) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return type(self)(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def scaled(self, factor):
        factor = rat(factor)
        if not factor:
            return type(self)()
        return type(self)({k: c * factor for k, c in self.terms.items()})

    __mul__ = scaled
    __rmul__ = scaled

    def __str__(self) -> str:
        return format_terms(sorted(self.terms.items()), tensor=True)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"{type(self).__name__}({self})"


class Tensor2(_SparseTensor):
    """Element of the tensor square, r = sum a_i (x) b_i."""

    _arity = 2

    def file_lines(self) -> list[str]:
        """One signed term per line, the r-matrix file format."""
        lines = []
        for (i, j), coeff in sorted(self.terms.items()):
            lines.append(f"{coeff} * {i.label()} (x) {j.label()}")
        return lines


class Tensor3(_SparseTensor):
    """Element of the triple tensor product."""

    _arity = 3


def tensor_of(x: Element, y: Element) -> Tensor2:
    out = {}
    for i, ci in x.terms.items():
        for j, cj in y.terms.items():
            out[(i, j)] = ci * cj
    return Tensor2(out)


def twist(t: Tensor2) -> Tensor2:
    """Swap the two slots termwise."""
    return Tensor2({(j, i): c for (i, j), c in t.terms.items()})


def cyclic(t: Tensor3) -> Tensor3:
    """Rotate slots: a (x) b (x) c -> b (x) c (x) a."""
    return Tensor3({(j, k, i): c for (i, j, k), c in t.terms.items()})


def skew_part_membership(t: Tensor2) -> bool:
    """True iff t lies in the image of (1 - twist), i.e. twist(t) == -t."""
    return twist(t) == -t


def diag_action(x: Element, t: Tensor2, p: AlgebraParams) -> Tensor2:
    """Leibniz action on both slots: x . (a (x) b) = [x,a] (x) b + a (x) [x,b]."""
    out: dict[Pair, Fraction] = {}
    for g, cg in x.terms.items():
        for (i, j), ct in t.terms.items():
            scale = cg * ct
            for e, coeff in bracket_basis(g, i, p):
                key = (e, j)
                new = out.get(key, 0) + scale * coeff
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
            for e, coeff in bracket_basis(g, j, p):
                key = (i, e)
                new = out.get(key, 0) + scale * coeff
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
    return Tensor2(out)


def diag_action3(x: Element, t: Tensor3, p: AlgebraParams) -> Tensor3:
    """Leibniz action with three summands."""
    out: dict[Triple, Fraction] = {}
    for g, cg in x.terms.items():
        for (i, j, k), ct in t.terms.items():
            scale = cg * ct
            for slot, idx in enumerate((i, j, k)):
                for e, coeff in bracket_basis(g, idx, p):
                    key = [i, j, k]
                    key[slot] = e
                    key = tuple(key)
                    new = out.get(key, 0) + scale * coeff
                    if new:
                        out[key] = new
                    else:
                        out.pop(key, None)
    return Tensor3(out)


def coboundary(r: Tensor2, x: Element, p: AlgebraParams) -> Tensor2:
    """The candidate cobracket at x: the diagonal action of x on r.

    Skewness of r is not enforced here; callers that need the bialgebra
    conclusion check it separately.
    """
    return diag_action(x, r, p)


def ybe_c(r: Tensor2, p: AlgebraParams) -> Tensor3:
    """Yang-Baxter obstruction of r.

    Expanded termwise over pairs of terms of r; each summand carries one
    bracket and two pass-through slots, so the result lives in the triple
    tensor product of the algebra itself.
    """
    out: dict[Triple, Fraction] = {}

    def add(key: Triple, val: Fraction) -> None:
        new = out.get(key, 0) + val
        if new:
            out[key] = new
        else:
            out.pop(key, None)

    terms = list(r.terms.items())
    for (a1, b1), c1 in terms:
        for (a2, b2), c2 in terms:
            scale = c1 * c2
            for e, coeff in bracket_basis(a1, a2, p):
                add((e, b1, b2), scale * coeff)
            for e, coeff in bracket_basis(b1, a2, p):
                add((a1, e, b2), scale * coeff)
            for e, coeff in bracket_basis(b1, b2, p):
                add((a1, a2, e), scale * coeff)
    return Tensor3(out)


def check_cybe(r: Tensor2, p: AlgebraParams) -> bool:
    """Classical Yang-Baxter equation: the obstruction vanishes."""
    return not ybe_c(r, p)


def check_mybe(r: Tensor2, p: AlgebraParams, w: Window) -> bool:
    """Modified Yang-Baxter equation on a window: every in-window
    generator acts trivially on the obstruction."""
    obstruction = ybe_c(r, p)
    if not obstruction:
        return True
    for g in w.basis_indices(p):
        if diag_action3(Element.basis(g), obstruction, p):
            return False
    return True


def _one_otimes_cobracket(t: Tensor2, r: Tensor2, p: AlgebraParams) -> Tensor3:
    """Apply the cobracket to the second slot of a two-tensor."""
    out: dict[Triple, Fraction] = {}
    for (i, j), c in t.terms.items():
        inner = coboundary(r, Element.basis(j), p)
        for (u, v), cu in inner.terms.items():
            key = (i, u, v)
            new = out.get(key, 0) + c * cu
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return Tensor3(out)


def check_cojacobi_identity(r: Tensor2, x: Element, p: AlgebraParams) -> bool:
    """Exact two-sided evaluation of the co-Jacobi balance for r at x.

    The cyclic symmetrization of (1 (x) cobracket) applied to the
    cobracket of x must equal the action of x on the Yang-Baxter
    obstruction.  This holds identically; a False return indicates an
    implementation bug rather than a property of r.
    """
    first = coboundary(r, x, p)
    nested = _one_otimes_cobracket(first, r, p)
    lhs = nested + cyclic(nested) + cyclic(cyclic(nested))
    rhs = diag_action3(x, ybe_c(r, p), p)
    return lhs == rhs


def check_compatibility(r: Tensor2, x: Element, y: Element, p: AlgebraParams) -> bool:
    """Cocycle identity for the coboundary: it must hold for any r."""
    from .algebra import bracket

    lhs = coboundary(r, bracket(x, y, p), p)
    rhs = diag_action(x, coboundary(r, y, p), p) - diag_action(
        y, coboundary(r, x, p), p
    )
    return lhs == rhs
